//! Sparse Laurent polynomials in up to three variables and the
//! constant-term evaluations built on them: characters, trinomial and
//! Riordan numbers, and both sides of the single-part-size identities
//! `A_c(d)` and `B_c(d)`.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::character::{self, checked_sum};
use crate::error::{Error, Result};
use crate::ev::{ev, r_even_rows};
use crate::partition::Partition;

pub const MAX_ARITY: usize = 3;

/// Exponent vector; entries past the arity are always zero.
pub type Exponents = [i64; MAX_ARITY];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    arity: usize,
    terms: BTreeMap<Exponents, BigInt>,
}

impl LaurentPoly {
    pub fn zero(arity: usize) -> Result<Self> {
        if !(1..=MAX_ARITY).contains(&arity) {
            return Err(Error::InvalidArgument(format!(
                "arity must be between 1 and {MAX_ARITY}, got {arity}"
            )));
        }
        Ok(LaurentPoly {
            arity,
            terms: BTreeMap::new(),
        })
    }

    pub fn one(arity: usize) -> Result<Self> {
        Self::monomial(arity, &[], 1)
    }

    /// `coeff · x^exps`; missing trailing exponents are zero.
    pub fn monomial(arity: usize, exps: &[i64], coeff: impl Into<BigInt>) -> Result<Self> {
        let mut p = Self::zero(arity)?;
        let e = p.exponents(exps)?;
        p.add_term(e, coeff.into());
        Ok(p)
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs.
    pub fn from_terms<C: Into<BigInt>>(
        arity: usize,
        terms: impl IntoIterator<Item = (Vec<i64>, C)>,
    ) -> Result<Self> {
        let mut p = Self::zero(arity)?;
        for (e, c) in terms {
            let e = p.exponents(&e)?;
            p.add_term(e, c.into());
        }
        Ok(p)
    }

    fn exponents(&self, exps: &[i64]) -> Result<Exponents> {
        if exps.len() > self.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: exps.len(),
            });
        }
        let mut e = [0i64; MAX_ARITY];
        e[..exps.len()].copy_from_slice(exps);
        Ok(e)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i64]) -> BigInt {
        match self.exponents(exps) {
            Ok(e) => self.terms.get(&e).cloned().unwrap_or_default(),
            Err(_) => BigInt::zero(),
        }
    }

    /// Coefficient of the all-zero exponent vector.
    pub fn ct(&self) -> BigInt {
        self.terms.get(&[0; MAX_ARITY]).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_arity(&self, other: &LaurentPoly) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                left: self.arity,
                right: other.arity,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_arity(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(*e, c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &LaurentPoly) -> Result<LaurentPoly> {
        self.check_arity(other)?;
        let mut out = LaurentPoly {
            arity: self.arity,
            terms: BTreeMap::new(),
        };
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut result = LaurentPoly {
            arity: self.arity,
            terms: BTreeMap::from([([0; MAX_ARITY], BigInt::one())]),
        };
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Substitutes `x_i -> x_i^factor` in every variable.
    pub fn dilate(&self, factor: i64) -> LaurentPoly {
        let mut out = LaurentPoly {
            arity: self.arity,
            terms: BTreeMap::new(),
        };
        for (e, c) in &self.terms {
            out.add_term([e[0] * factor, e[1] * factor, e[2] * factor], c.clone());
        }
        out
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    /// Panics on arity mismatch; use [`LaurentPoly::try_add`] to handle it.
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("arity mismatch")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(&-rhs).expect("arity mismatch")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            arity: self.arity,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("arity mismatch")
    }
}

pub fn lp_mul(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly> {
    a.try_mul(b)
}

pub fn lp_pow(a: &LaurentPoly, k: u32) -> LaurentPoly {
    a.pow(k)
}

pub fn lp_ct(a: &LaurentPoly) -> BigInt {
    a.ct()
}

/// `(μ₁, μ₂, μ₃)` with `μ₁ ≥ μ₂ ≥ μ₃ ≥ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeakComposition3 {
    parts: [u32; 3],
}

impl WeakComposition3 {
    pub fn new(mu1: u32, mu2: u32, mu3: u32) -> Result<Self> {
        if mu1 < mu2 || mu2 < mu3 {
            return Err(Error::InvalidArgument(format!(
                "({mu1},{mu2},{mu3}) is not weakly decreasing"
            )));
        }
        Ok(WeakComposition3 {
            parts: [mu1, mu2, mu3],
        })
    }

    pub fn parts(&self) -> [u32; 3] {
        self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }
}

/// All weakly decreasing triples summing to `n`.
pub fn weak_partitions_3(n: u32) -> Vec<WeakComposition3> {
    let mut out = Vec::new();
    for mu1 in (0..=n).rev() {
        for mu2 in (0..=mu1.min(n - mu1)).rev() {
            let mu3 = n - mu1 - mu2;
            if mu3 <= mu2 {
                out.push(WeakComposition3 {
                    parts: [mu1, mu2, mu3],
                });
            }
        }
    }
    out
}

/// `Π_{i<j} (1 - x_j / x_i)` in `vars` variables.
fn vandermonde_ratio(vars: usize) -> Result<LaurentPoly> {
    let mut v = LaurentPoly::one(vars)?;
    for i in 0..vars {
        for j in i + 1..vars {
            let mut e = vec![0i64; vars];
            e[i] = -1;
            e[j] = 1;
            let factor = LaurentPoly::from_terms(vars, [(vec![0; vars], 1), (e, -1)])?;
            v = &v * &factor;
        }
    }
    Ok(v)
}

/// Power sum `p_r(x_1..x_vars)`.
fn power_sum(vars: usize, r: u32) -> Result<LaurentPoly> {
    LaurentPoly::from_terms(
        vars,
        (0..vars).map(|i| {
            let mut e = vec![0i64; vars];
            e[i] = r as i64;
            (e, 1)
        }),
    )
}

/// `χ^μ_λ` as the constant term of
/// `Π_{i<j}(1 - x_j/x_i) · Π_j p_{λ_j}(x) / x^μ`, which is the coefficient
/// of `x^μ` in the numerator.
pub fn chi_via_ct(mu: &Partition, lambda: &Partition) -> Result<BigInt> {
    chi_via_ct_in(mu, lambda, mu.len().max(1))
}

/// [`chi_via_ct`] with `μ` padded by zeros to `vars` variables.
pub fn chi_via_ct_in(mu: &Partition, lambda: &Partition, vars: usize) -> Result<BigInt> {
    if mu.size() != lambda.size() {
        return Err(Error::SizeMismatch {
            mu: mu.size(),
            lambda: lambda.size(),
        });
    }
    if mu.len() > MAX_ARITY {
        return Err(Error::InvalidArgument(format!(
            "constant-term characters need at most {MAX_ARITY} rows, got {}",
            mu.len()
        )));
    }
    if vars < mu.len() || vars > MAX_ARITY {
        return Err(Error::InvalidArgument(format!(
            "cannot evaluate a {}-row shape in {vars} variables",
            mu.len()
        )));
    }
    if mu.is_empty() {
        return Ok(BigInt::one());
    }
    let target: Vec<i64> = (0..vars).map(|i| mu.part(i) as i64).collect();
    let mut product = vandermonde_ratio(vars)?;
    for &r in lambda.parts() {
        product = &product * &power_sum(vars, r)?;
        // terms with any exponent above the target can never come back down
        product
            .terms
            .retain(|e, _| e.iter().zip(&target).all(|(x, t)| *x <= *t + vars as i64));
    }
    Ok(product.coeff(&target))
}

/// `1/x + 1 + x`, dilated to `x^{-c} + 1 + x^c`.
fn trinomial_kernel(c: i64) -> LaurentPoly {
    LaurentPoly::from_terms(1, [(vec![-c], 1), (vec![0], 1), (vec![c], 1)]).expect("arity 1")
}

/// Coefficient of `x^k` in `(1 + x + x²)^n`; zero outside `0..=2n`.
pub fn trinomial(n: u32, k: i64) -> BigInt {
    if k < 0 || k > 2 * n as i64 {
        return BigInt::zero();
    }
    let base =
        LaurentPoly::from_terms(1, [(vec![0], 1), (vec![1], 1), (vec![2], 1)]).expect("arity 1");
    base.pow(n).coeff(&[k])
}

/// `T(d) = T(d, d)`.
pub fn central_trinomial(d: u32) -> BigInt {
    trinomial(d, d as i64)
}

/// `R(d) = ct[(1 - x)(1/x + 1 + x)^d]`.
pub fn riordan_via_ct(d: u32) -> BigInt {
    let one_minus_x = LaurentPoly::from_terms(1, [(vec![0], 1), (vec![1], -1)]).expect("arity 1");
    (&one_minus_x * &trinomial_kernel(1).pow(d)).ct()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AMode {
    /// Character sum over `Ev((c^d))` in the row `(cd, cd)`.
    Chars,
    /// `2^d · ct[(1 - x)(x^{-c} + 1 + x^c)^d]`.
    Closed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BMode {
    /// Signed character sum over `Ev((c^d))` and the rows `R_3(2cd)`.
    Chars,
    /// `2^d · T(d)`, valid for `c > 1`.
    Closed,
    /// Three-variable constant term summed over weak three-part partitions.
    CtIntermediate,
}

fn check_cd(c: u32, d: u32) -> Result<()> {
    if c == 0 || d == 0 {
        return Err(Error::InvalidArgument(format!(
            "c and d must be positive, got c={c}, d={d}"
        )));
    }
    Ok(())
}

fn pow2(d: u32) -> BigInt {
    BigInt::one() << d
}

/// `A_c(d) = Σ_{λ̃ ∈ Ev((c^d))} χ^{(cd,cd)}_{λ̃}`.
pub fn a_c(c: u32, d: u32, mode: AMode) -> Result<BigInt> {
    check_cd(c, d)?;
    match mode {
        AMode::Chars => {
            let lambda = Partition::rectangle(c, d as usize);
            let row = Partition::rectangle(c * d, 2);
            let ev = ev(&lambda)?;
            let terms = ev
                .iter()
                .map(|(tilde, mult)| Ok(character::chi(&row, tilde)?.get() * mult as i128))
                .collect::<Result<Vec<_>>>()?;
            Ok(BigInt::from(checked_sum(terms.into_iter())?))
        }
        AMode::Closed => {
            let one_minus_x = LaurentPoly::from_terms(1, [(vec![0], 1), (vec![1], -1)])?;
            let ct = (&one_minus_x * &trinomial_kernel(c as i64).pow(d)).ct();
            Ok(pow2(d) * ct)
        }
    }
}

/// `B_c(d) = Σ_{λ̃ ∈ Ev((c^d))} Σ_{μ ∈ R_3(2cd)} (-1)^{ℓ(λ̃)} χ^μ_{λ̃}`.
pub fn b_c(c: u32, d: u32, mode: BMode) -> Result<BigInt> {
    check_cd(c, d)?;
    let n = c * d;
    match mode {
        BMode::Chars => {
            let lambda = Partition::rectangle(c, d as usize);
            let rows = r_even_rows(3, 2 * n as usize)?;
            let mut terms = Vec::new();
            for (tilde, mult) in ev(&lambda)?.iter() {
                let column = character::chi_column_sum(&rows, tilde)?.get();
                terms.push(tilde.length_sign() as i128 * mult as i128 * column);
            }
            Ok(BigInt::from(checked_sum(terms.into_iter())?))
        }
        BMode::Closed => {
            if c == 1 {
                return Err(Error::InvalidArgument(
                    "B_1(d) has no trinomial closed form; it equals 2^d R(d), see riordan_via_ct"
                        .into(),
                ));
            }
            Ok(pow2(d) * central_trinomial(d))
        }
        BMode::CtIntermediate => {
            let c = c as i64;
            // (x1^c x2^c + x2^c x3^c + x3^c x1^c)^d
            let e2 = LaurentPoly::from_terms(
                3,
                [(vec![c, c, 0], 1), (vec![0, c, c], 1), (vec![c, 0, c], 1)],
            )?;
            let kernel = vandermonde_ratio(3)?;
            let mut sum = LaurentPoly::zero(3)?;
            for w in weak_partitions_3(n) {
                let [m1, m2, m3] = w.parts();
                let shift =
                    LaurentPoly::monomial(3, &[-2 * m1 as i64, -2 * m2 as i64, -2 * m3 as i64], 1)?;
                sum = &sum + &(&kernel * &shift);
            }
            let ct = (&e2.pow(d) * &sum).ct();
            Ok(pow2(d) * ct)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn laurent_basics() {
        let x = LaurentPoly::monomial(1, &[1], 1).unwrap();
        assert_eq!(lp_ct(&x), big(0));
        let kernel = trinomial_kernel(1);
        // (1/x + 1 + x)^2 = x^-2 + 2x^-1 + 3 + 2x + x^2
        let sq = lp_pow(&kernel, 2);
        assert_eq!(lp_ct(&sq), big(3));
        assert_eq!(sq.num_terms(), 5);
        assert_eq!(sq.coeff(&[-1]), big(2));
        assert_eq!(lp_pow(&kernel, 0), LaurentPoly::one(1).unwrap());
        let y = LaurentPoly::monomial(2, &[0, 1], 1).unwrap();
        assert!(matches!(
            lp_mul(&x, &y),
            Err(Error::ArityMismatch { left: 1, right: 2 })
        ));
        assert!(LaurentPoly::zero(4).is_err());
        assert!((&x - &x).is_zero());
        assert_eq!(kernel.dilate(3).coeff(&[-3]), big(1));
    }

    #[test]
    fn pow_matches_repeated_multiplication() {
        let a = LaurentPoly::from_terms(2, [(vec![1, -1], 2), (vec![0, 2], -1), (vec![-1, 0], 3)])
            .unwrap();
        let mut naive = LaurentPoly::one(2).unwrap();
        for k in 0..7u32 {
            assert_eq!(a.pow(k), naive);
            naive = &naive * &a;
        }
    }

    #[test]
    fn characters_by_constant_term() {
        assert_eq!(chi_via_ct(&p("4,4"), &p("2,2,2,2")).unwrap(), big(6));
        assert_eq!(chi_via_ct(&p("8"), &p("8")).unwrap(), big(1));
        assert_eq!(
            chi_via_ct(&p("4,2,2"), &p("1,1,1,1,1,1,1,1")).unwrap(),
            big(56)
        );
        assert!(chi_via_ct(&p("1,1,1,1"), &p("4")).is_err());
        assert!(chi_via_ct(&p("2"), &p("1")).is_err());
        for n in 0..=6 {
            for mu in partitions_of(n).into_iter().filter(|m| m.len() <= 3) {
                for lambda in partitions_of(n) {
                    let want = BigInt::from(character::chi(&mu, &lambda).unwrap().get());
                    assert_eq!(chi_via_ct(&mu, &lambda).unwrap(), want, "{mu} {lambda}");
                    assert_eq!(
                        chi_via_ct_in(&mu, &lambda, 3).unwrap(),
                        want,
                        "{mu} {lambda} padded"
                    );
                }
            }
        }
    }

    #[test]
    fn trinomials() {
        assert_eq!(central_trinomial(0), big(1));
        assert_eq!(central_trinomial(2), big(3));
        assert_eq!(central_trinomial(3), big(7));
        assert_eq!(trinomial(2, 5), big(0));
        assert_eq!(trinomial(2, -1), big(0));
        // row sums are 3^n
        for n in 0..=10u32 {
            let total: BigInt = (0..=2 * n as i64).map(|k| trinomial(n, k)).sum();
            assert_eq!(total, BigInt::from(3).pow(n));
        }
    }

    #[test]
    fn riordan_numbers() {
        assert_eq!(riordan_via_ct(4), big(3));
        assert_eq!(riordan_via_ct(1), big(0));
        assert_eq!(riordan_via_ct(5), big(6));
        for n in 1..=15u32 {
            assert_eq!(
                riordan_via_ct(n),
                trinomial(n, n as i64) - trinomial(n, n as i64 - 1)
            );
        }
    }

    #[test]
    fn weak_triples() {
        let got: Vec<[u32; 3]> = weak_partitions_3(4).iter().map(|w| w.parts()).collect();
        assert_eq!(got, [[4, 0, 0], [3, 1, 0], [2, 2, 0], [2, 1, 1]]);
        assert_eq!(weak_partitions_3(0).len(), 1);
        assert!(WeakComposition3::new(1, 2, 0).is_err());
    }

    #[test]
    fn a_and_b_examples() {
        assert_eq!(a_c(1, 4, AMode::Chars).unwrap(), big(48));
        assert_eq!(a_c(1, 4, AMode::Closed).unwrap(), big(48));
        assert_eq!(a_c(2, 2, AMode::Chars).unwrap(), big(12));
        assert_eq!(a_c(3, 2, AMode::Chars).unwrap(), big(12));
        assert_eq!(b_c(1, 4, BMode::Chars).unwrap(), big(48));
        assert_eq!(b_c(2, 2, BMode::Chars).unwrap(), big(12));
        assert_eq!(b_c(2, 3, BMode::Chars).unwrap(), big(56));
        assert_eq!(b_c(2, 3, BMode::Closed).unwrap(), big(56));
        assert_eq!(b_c(2, 2, BMode::CtIntermediate).unwrap(), big(12));
        assert!(b_c(1, 3, BMode::Closed).is_err());
        assert!(a_c(0, 3, AMode::Chars).is_err());
    }

    #[test]
    fn intermediate_form_also_holds_for_single_boxes() {
        for d in 1..=5 {
            assert_eq!(
                b_c(1, d, BMode::CtIntermediate).unwrap(),
                b_c(1, d, BMode::Chars).unwrap()
            );
        }
    }
}
