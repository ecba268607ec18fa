//! Symmetric functions in the monomial basis, Jacobi–Trudi expansions of
//! Schur functions, and Hall inner products `⟨f, s_μ⟩`.
//!
//! Everything is indexed by partitions; no explicit variables are used.
//! Products `m_a · m_b` are computed by placing the parts of `b` on top of
//! the parts of `a` in `ℓ(a) + ℓ(b)` slots and correcting for orbit sizes.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ev::ev;
use crate::partition::{factorial, Partition};

/// A homogeneous symmetric function `Σ c_λ m_λ`. Zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymFuncM {
    degree: usize,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl SymFuncM {
    pub fn zero(degree: usize) -> Self {
        SymFuncM {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant `1 = m_∅`.
    pub fn one() -> Self {
        Self::monomial(Partition::empty())
    }

    pub fn monomial(lambda: Partition) -> Self {
        let degree = lambda.size();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(lambda, BigInt::one());
        SymFuncM { degree, coeffs }
    }

    pub fn from_coeffs(
        degree: usize,
        coeffs: impl IntoIterator<Item = (Partition, BigInt)>,
    ) -> Result<Self> {
        let mut f = Self::zero(degree);
        for (p, c) in coeffs {
            if p.size() != degree {
                return Err(Error::SizeMismatch {
                    mu: p.size(),
                    lambda: degree,
                });
            }
            f.add_term(p, c);
        }
        Ok(f)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &BTreeMap<Partition, BigInt> {
        &self.coeffs
    }

    pub fn coeff(&self, p: &Partition) -> BigInt {
        self.coeffs.get(p).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn add_term(&mut self, p: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(p) {
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

    /// `self += scale · other`; degrees must agree.
    pub fn add_scaled(&mut self, other: &SymFuncM, scale: &BigInt) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::SizeMismatch {
                mu: self.degree,
                lambda: other.degree,
            });
        }
        for (p, c) in &other.coeffs {
            self.add_term(p.clone(), c * scale);
        }
        Ok(())
    }

    pub fn scaled(&self, scale: &BigInt) -> SymFuncM {
        let mut out = SymFuncM::zero(self.degree);
        for (p, c) in &self.coeffs {
            out.add_term(p.clone(), c * scale);
        }
        out
    }

    pub fn pow(&self, k: usize) -> SymFuncM {
        (0..k).fold(SymFuncM::one(), |acc, _| m_product(&acc, self))
    }
}

/// Number of distinct rearrangements of a multiset, `len! / Π mult!`.
fn orbit_size(sorted_desc: &[u32]) -> BigUint {
    let mut denom = BigUint::one();
    let mut run = 0usize;
    for i in 0..sorted_desc.len() {
        if i > 0 && sorted_desc[i] == sorted_desc[i - 1] {
            run += 1;
        } else {
            run = 1;
        }
        denom *= BigUint::from(run);
    }
    factorial(sorted_desc.len()) / denom
}

/// Steps `v` to its next lexicographic permutation; false after the last.
fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Structure constants of `m_a · m_b` as `ν -> c^ν`.
fn monomial_product(a: &Partition, b: &Partition) -> BTreeMap<Partition, BigUint> {
    let (a, b) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let slots = a.len() + b.len();
    let mut base: Vec<u32> = a.parts().to_vec();
    base.resize(slots, 0);
    let mut placed: Vec<u32> = b.parts().to_vec();
    placed.resize(slots, 0);
    placed.sort_unstable();

    let mut hits: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
    loop {
        let mut sum: Vec<u32> = base.iter().zip(&placed).map(|(x, y)| x + y).collect();
        sum.sort_unstable_by(|x, y| y.cmp(x));
        *hits.entry(sum).or_insert(0) += 1;
        if !next_permutation(&mut placed) {
            break;
        }
    }

    let base_orbit = orbit_size(&base);
    hits.into_iter()
        .map(|(padded, k)| {
            let c = &base_orbit * BigUint::from(k) / orbit_size(&padded);
            (Partition::from_multiset(padded), c)
        })
        .collect()
}

/// Exact product in the monomial basis.
pub fn m_product(a: &SymFuncM, b: &SymFuncM) -> SymFuncM {
    let mut out = SymFuncM::zero(a.degree + b.degree);
    for (pa, ca) in &a.coeffs {
        for (pb, cb) in &b.coeffs {
            let scale = ca * cb;
            for (nu, c) in monomial_product(pa, pb) {
                out.add_term(nu, &scale * BigInt::from(c));
            }
        }
    }
    out
}

/// `p_λ` expanded in the monomial basis.
pub fn power_to_m(lambda: &Partition) -> SymFuncM {
    lambda.parts().iter().fold(SymFuncM::one(), |acc, &r| {
        m_product(&acc, &SymFuncM::monomial(Partition::row(r)))
    })
}

/// `Σ_{λ̃ ∈ Ev(λ)} (-1)^{ℓ(λ̃)} p_{λ̃}` with multiplicities.
pub fn ev_signed_power_sum(lambda: &Partition) -> Result<SymFuncM> {
    let mut out = SymFuncM::zero(2 * lambda.size());
    for (tilde, mult) in ev(lambda)?.iter() {
        let scale = BigInt::from(tilde.length_sign()) * BigInt::from(mult);
        out.add_scaled(&power_to_m(tilde), &scale)?;
    }
    Ok(out)
}

/// `Π_i m_{(λ_i, λ_i)}`.
pub fn doubled_monomial_product(lambda: &Partition) -> SymFuncM {
    lambda.parts().iter().fold(SymFuncM::one(), |acc, &c| {
        m_product(&acc, &SymFuncM::monomial(Partition::rectangle(c, 2)))
    })
}

/// Checks `Σ_{Ev(λ)} (-1)^ℓ p = 2^{ℓ(λ)} Π m_{(λ_i,λ_i)}` coefficientwise.
pub fn check_thm32(lambda: &Partition) -> Result<bool> {
    let lhs = ev_signed_power_sum(lambda)?;
    let rhs = doubled_monomial_product(lambda).scaled(&(BigInt::one() << lambda.len()));
    Ok(lhs == rhs)
}

/// Jacobi–Trudi: `s_μ = det(h_{μ_i - i + j})` as `ν -> coefficient of h_ν`.
pub fn jacobi_trudi_h(mu: &Partition) -> BTreeMap<Partition, BigInt> {
    let n = mu.len();
    let mut out: BTreeMap<Partition, BigInt> = BTreeMap::new();
    let mut used = vec![false; n];
    let mut subscripts = Vec::with_capacity(n);
    expand_det(mu, 0, &mut used, &mut subscripts, 1, &mut out);
    out.retain(|_, c| !c.is_zero());
    out
}

fn expand_det(
    mu: &Partition,
    row: usize,
    used: &mut [bool],
    subscripts: &mut Vec<u32>,
    sign: i32,
    out: &mut BTreeMap<Partition, BigInt>,
) {
    let n = used.len();
    if row == n {
        let nu = Partition::from_multiset(subscripts.clone());
        *out.entry(nu).or_default() += sign;
        return;
    }
    for col in 0..n {
        if used[col] {
            continue;
        }
        let index = mu.part(row) as i64 - row as i64 + col as i64;
        if index < 0 {
            continue;
        }
        // sign of the permutation: count earlier rows mapped to later columns
        let inversions = used[col + 1..].iter().filter(|&&u| u).count();
        let next_sign = if inversions % 2 == 0 { sign } else { -sign };
        used[col] = true;
        subscripts.push(index as u32);
        expand_det(mu, row + 1, used, subscripts, next_sign, out);
        subscripts.pop();
        used[col] = false;
    }
}

/// `⟨f, s_μ⟩`, using `⟨m_λ, h_ν⟩ = δ_{λν}`.
pub fn inner_m_schur(f: &SymFuncM, mu: &Partition) -> Result<BigInt> {
    if f.degree != mu.size() {
        return Err(Error::SizeMismatch {
            mu: mu.size(),
            lambda: f.degree,
        });
    }
    Ok(jacobi_trudi_h(mu)
        .iter()
        .map(|(nu, c)| c * f.coeff(nu))
        .sum())
}

/// `⟨f, Σ_μ s_μ⟩`.
pub fn inner_m_schur_sum(f: &SymFuncM, mus: &[Partition]) -> Result<BigInt> {
    mus.iter().map(|mu| inner_m_schur(f, mu)).sum()
}

/// Counts chains `∅ = ν⁰ ⊂ ν¹ ⊂ … ⊂ νⁿ` where each step adds two boxes in
/// different rows and `νⁿ` satisfies `final_filter`.
pub fn count_vertical_strip_chains(n: usize, final_filter: impl Fn(&Partition) -> bool) -> BigUint {
    let mut layer: BTreeMap<Vec<u32>, BigUint> = BTreeMap::new();
    layer.insert(Vec::new(), BigUint::one());
    for _ in 0..n {
        let mut next: BTreeMap<Vec<u32>, BigUint> = BTreeMap::new();
        for (shape, count) in &layer {
            let rows = shape.len() + 2;
            for i in 0..rows {
                for j in i + 1..rows {
                    let mut grown = shape.clone();
                    grown.resize(rows, 0);
                    grown[i] += 1;
                    grown[j] += 1;
                    if grown.windows(2).all(|w| w[0] >= w[1]) {
                        grown.retain(|&x| x > 0);
                        *next.entry(grown).or_default() += count;
                    }
                }
            }
        }
        layer = next;
    }
    layer
        .into_iter()
        .filter(|(shape, _)| final_filter(&Partition::from_multiset(shape.clone())))
        .map(|(_, c)| c)
        .sum()
}

/// `|x|` of a signed result that is known to be a count.
pub fn as_count(x: &BigInt) -> Option<BigUint> {
    (!x.is_negative()).then(|| x.magnitude().clone())
}
