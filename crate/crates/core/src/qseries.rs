//! Truncated power series in `q` with exact rational coefficients, and the
//! `g_λ(q)`-weighted form of the aggregated identity.

use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::identity::{Exact, SizeProfile};
use crate::partition::Partition;

/// `c_0 + c_1 q + … + c_order q^order`, everything above `order` dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedRationalSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedRationalSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedRationalSeries {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(order, 0, BigRational::one())
    }

    /// `c q^k`, or zero when `k > order`.
    pub fn monomial(order: usize, k: usize, c: BigRational) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Integer coefficients, padded with zeros or truncated to `order`.
    pub fn from_integers(order: usize, values: &[i64]) -> Self {
        let mut s = Self::zero(order);
        for (c, v) in s.coeffs.iter_mut().zip(values) {
            *c = BigRational::from_integer(BigInt::from(*v));
        }
        s
    }

    /// Coefficients `c_0..c_order`; an empty vector gives the zero series of order 0.
    pub fn from_rationals(mut coeffs: Vec<BigRational>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(BigRational::zero());
        }
        TruncatedRationalSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    pub fn scaled(&self, c: &BigRational) -> Self {
        TruncatedRationalSeries {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Result order is the smaller of the two.
    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> Self {
        let order = self.order().min(other.order());
        TruncatedRationalSeries {
            coeffs: (0..=order)
                .map(|k| f(&self.coeffs[k], &other.coeffs[k]))
                .collect(),
        }
    }
}

impl Add for &TruncatedRationalSeries {
    type Output = TruncatedRationalSeries;

    fn add(self, rhs: &TruncatedRationalSeries) -> TruncatedRationalSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &TruncatedRationalSeries {
    type Output = TruncatedRationalSeries;

    fn sub(self, rhs: &TruncatedRationalSeries) -> TruncatedRationalSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &TruncatedRationalSeries {
    type Output = TruncatedRationalSeries;

    fn mul(self, rhs: &TruncatedRationalSeries) -> TruncatedRationalSeries {
        let order = self.order().min(rhs.order());
        let mut out = TruncatedRationalSeries::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        out
    }
}

impl std::fmt::Display for TruncatedRationalSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &BigRational::zero();
            let abs = if neg { -c } else { c.clone() };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
                (true, false) => {}
            }
            first = false;
            let show_coeff = k == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("q")?,
                _ => write!(f, "q^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

/// `g_λ(q) = Π_j q^{λ_j} / (1 + q^{λ_j})`.
pub fn g_series(lambda: &Partition, order: usize) -> TruncatedRationalSeries {
    let mut out = TruncatedRationalSeries::one(order);
    for &part in lambda.parts() {
        let part = part as usize;
        let mut factor = TruncatedRationalSeries::zero(order);
        let mut sign = BigRational::one();
        let mut k = part;
        while k <= order {
            factor.coeffs[k] = sign.clone();
            sign = -sign;
            k += part;
        }
        out = &out * &factor;
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QSeriesReport {
    #[serde(rename = "N")]
    pub big_n: usize,
    pub order: usize,
    pub lhs_coeffs: Vec<Exact>,
    pub rhs_coeffs: Vec<Exact>,
    pub equal: bool,
}

/// Both sides of the `g_λ`-weighted identity at level `N`, with the outer
/// sum over `n` truncated at `order`. The `n = 0` term is taken as `1` on
/// each side.
pub fn conj_q_sides(
    big_n: usize,
    order: usize,
) -> Result<(TruncatedRationalSeries, TruncatedRationalSeries)> {
    if big_n == 0 || order == 0 {
        return Err(Error::InvalidArgument(
            "N and order must be positive".into(),
        ));
    }
    let mut lhs = TruncatedRationalSeries::one(order);
    let mut rhs = TruncatedRationalSeries::one(order);
    for n in 1..=order {
        let profile = SizeProfile::compute(n)?;
        for lp in profile.lambdas() {
            let lambda = lp.lambda();
            let g = g_series(lambda, order);
            let z = BigInt::from(lambda.centralizer_size());
            let l = BigRational::new(BigInt::from(lp.lhs(big_n)?), z.clone());
            let r = BigRational::new(BigInt::from(lp.rhs(big_n)?), z);
            lhs = &lhs + &g.scaled(&l);
            rhs = &rhs + &g.scaled(&r);
        }
    }
    Ok((lhs, rhs))
}

pub fn q_report(big_n: usize, order: usize) -> Result<QSeriesReport> {
    let (lhs, rhs) = conj_q_sides(big_n, order)?;
    let exact = |s: &TruncatedRationalSeries| s.coeffs().iter().cloned().map(Exact).collect();
    Ok(QSeriesReport {
        big_n,
        order,
        lhs_coeffs: exact(&lhs),
        rhs_coeffs: exact(&rhs),
        equal: lhs == rhs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn g_examples() {
        assert_eq!(
            g_series(&Partition::empty(), 5),
            TruncatedRationalSeries::one(5)
        );
        assert_eq!(
            g_series(&p("1"), 4),
            TruncatedRationalSeries::from_integers(4, &[0, 1, -1, 1, -1])
        );
        assert_eq!(
            g_series(&p("2"), 6),
            TruncatedRationalSeries::from_integers(6, &[0, 0, 1, 0, -1, 0, 1])
        );
        // leading term q^{|λ|}
        let g = g_series(&p("3,2,2"), 10);
        assert!((0..7).all(|k| g.coeff(k).is_zero()));
        assert!(g.coeff(7).is_one());
    }

    #[test]
    fn g_times_denominator_is_numerator() {
        // (1 + q^2)(1 + q) g_{(2,1)} = q^3
        let order = 12;
        let g = g_series(&p("2,1"), order);
        let d = &TruncatedRationalSeries::from_integers(order, &[1, 0, 1])
            * &TruncatedRationalSeries::from_integers(order, &[1, 1]);
        assert_eq!(
            &g * &d,
            TruncatedRationalSeries::monomial(order, 3, BigRational::one())
        );
    }

    #[test]
    fn series_arithmetic() {
        let a = TruncatedRationalSeries::from_integers(3, &[1, 2, 3, 4]);
        let b = TruncatedRationalSeries::from_integers(2, &[0, 1]);
        let prod = &a * &b;
        assert_eq!(prod.order(), 2);
        assert_eq!(prod, TruncatedRationalSeries::from_integers(2, &[0, 1, 2]));
        assert!((&a - &a).is_zero());
        assert_eq!(a.to_string(), "1 + 2q + 3q^2 + 4q^3 + O(q^4)");
        assert_eq!(g_series(&p("1"), 3).to_string(), "q - q^2 + q^3 + O(q^4)");
    }

    #[test]
    fn order_one_is_trivial() {
        for big_n in 1..=3 {
            let (l, r) = conj_q_sides(big_n, 1).unwrap();
            assert_eq!(l, TruncatedRationalSeries::one(1));
            assert_eq!(r, TruncatedRationalSeries::one(1));
        }
        assert!(conj_q_sides(0, 3).is_err());
    }

    #[test]
    fn printed_expansion_to_order_six() {
        let want = TruncatedRationalSeries::from_integers(6, &[1, 0, 3, -4, 9, -12, 22]);
        let (l, r) = conj_q_sides(1, 6).unwrap();
        assert_eq!(l, want);
        assert_eq!(r, want);
        let json = serde_json::to_value(q_report(1, 4).unwrap()).unwrap();
        assert_eq!(json["lhs_coeffs"], serde_json::json!([1, 0, 3, -4, 9]));
        assert_eq!(json["equal"], true);
        assert_eq!(json["N"], 1);
    }
}
