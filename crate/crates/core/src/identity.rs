//! Both sides of the Ev-weighted character identities, evaluated exactly.
//!
//! For `λ ⊢ n` and `N ≥ 1` the two sides are
//!
//! ```text
//! lhs = Σ_{λ̃ ∈ Ev(λ)} Σ_{μ ∈ R_{2N+1}(2n)} (-1)^{ℓ(λ̃)} χ^μ_{λ̃}
//! rhs = Σ_{λ̃ ∈ Ev(λ)} Σ_{μ ∈ R^c_{2N}(2n)}             χ^μ_{λ̃}
//! ```
//!
//! and `difference = lhs - rhs`. The aggregated form weights each `λ` by
//! `1/z_λ`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::character::{self, checked_sum};
use crate::error::{Error, Result};
use crate::ev::{ev, r_even_cols, r_even_rows, WeightedPartitions};
use crate::partition::{partitions_of, Partition};

/// An exact rational, serialized as a JSON integer when it is one and fits
/// in `i64`, otherwise as a string `"p"` or `"p/q"`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Exact(pub BigRational);

impl Exact {
    pub fn integer(v: impl Into<BigInt>) -> Self {
        Exact(BigRational::from_integer(v.into()))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.0.is_integer().then(|| self.0.to_integer())
    }
}

impl std::fmt::Display for Exact {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

impl Serialize for Exact {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        if let Some(i) = self.to_integer().and_then(|i| i64::try_from(i).ok()) {
            serializer.serialize_i64(i)
        } else {
            serializer.serialize_str(&self.0.to_string())
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Parameters {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Partition>,
    #[serde(rename = "N", skip_serializing_if = "Option::is_none")]
    pub big_n: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Lhs,
    Rhs,
}

/// Contribution of one row `μ` to one side, summed over `Ev(λ)` with
/// multiplicities (and signs on the left).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColumnContribution {
    pub side: Side,
    pub mu: Partition,
    pub value: i128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub parameters: Parameters,
    pub lhs: Exact,
    pub rhs: Exact,
    pub difference: Exact,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub per_column_breakdown: Option<Vec<ColumnContribution>>,
}

impl IdentityReport {
    pub fn new(parameters: Parameters, lhs: Exact, rhs: Exact) -> Self {
        let difference = Exact(&lhs.0 - &rhs.0);
        IdentityReport {
            parameters,
            holds: difference.is_zero(),
            lhs,
            rhs,
            difference,
            per_column_breakdown: None,
        }
    }
}

fn check_big_n(big_n: usize) -> Result<()> {
    if big_n == 0 {
        return Err(Error::InvalidArgument("N must be positive".into()));
    }
    Ok(())
}

fn add(a: i128, b: i128) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow("identity sum"))
}

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow("identity sum"))
}

/// Per-row sums for one `λ`, over every even-row and every even-column
/// partition of `2n`. Both sides for any `N` are prefix sums by length.
#[derive(Clone, Debug)]
pub struct LambdaProfile {
    lambda: Partition,
    lhs_rows: Vec<(Partition, i128)>,
    rhs_rows: Vec<(Partition, i128)>,
}

impl LambdaProfile {
    pub fn compute(lambda: &Partition) -> Result<Self> {
        let weighted = ev(lambda)?;
        let two_n = 2 * lambda.size();
        let rows = r_even_rows(two_n.max(1), two_n)?;
        let cols = r_even_cols(two_n.max(1), two_n)?;
        Ok(LambdaProfile {
            lambda: lambda.clone(),
            lhs_rows: side_rows(&rows, &weighted, true)?,
            rhs_rows: side_rows(&cols, &weighted, false)?,
        })
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    fn sum(rows: &[(Partition, i128)], max_len: usize) -> Result<i128> {
        checked_sum(
            rows.iter()
                .filter(|(mu, _)| mu.len() <= max_len)
                .map(|(_, v)| *v),
        )
    }

    pub fn lhs(&self, big_n: usize) -> Result<i128> {
        Self::sum(&self.lhs_rows, 2 * big_n + 1)
    }

    pub fn rhs(&self, big_n: usize) -> Result<i128> {
        Self::sum(&self.rhs_rows, 2 * big_n)
    }

    pub fn report(&self, big_n: usize) -> Result<IdentityReport> {
        check_big_n(big_n)?;
        Ok(IdentityReport::new(
            Parameters {
                lambda: Some(self.lambda.clone()),
                big_n: Some(big_n),
                ..Parameters::default()
            },
            Exact::integer(self.lhs(big_n)?),
            Exact::integer(self.rhs(big_n)?),
        ))
    }

    /// Row contributions to each side at level `N`.
    pub fn breakdown(&self, big_n: usize) -> Vec<ColumnContribution> {
        fn pick(
            side: Side,
            rows: &[(Partition, i128)],
            max_len: usize,
        ) -> impl Iterator<Item = ColumnContribution> + '_ {
            rows.iter()
                .filter(move |(mu, _)| mu.len() <= max_len)
                .map(move |(mu, v)| ColumnContribution {
                    side,
                    mu: mu.clone(),
                    value: *v,
                })
        }
        pick(Side::Lhs, &self.lhs_rows, 2 * big_n + 1)
            .chain(pick(Side::Rhs, &self.rhs_rows, 2 * big_n))
            .collect()
    }
}

fn side_rows(
    mus: &[Partition],
    weighted: &WeightedPartitions,
    signed: bool,
) -> Result<Vec<(Partition, i128)>> {
    mus.par_iter()
        .map(|mu| {
            let mut total = 0i128;
            for (tilde, mult) in weighted.iter() {
                let sign = if signed {
                    tilde.length_sign() as i128
                } else {
                    1
                };
                let chi = character::chi(mu, tilde)?.get();
                total = add(total, mul(sign * mult as i128, chi)?)?;
            }
            Ok((mu.clone(), total))
        })
        .collect()
}

/// Profiles for every `λ ⊢ n`, in reverse-lex order.
#[derive(Clone, Debug)]
pub struct SizeProfile {
    n: usize,
    lambdas: Vec<LambdaProfile>,
}

impl SizeProfile {
    pub fn compute(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("n must be positive".into()));
        }
        let lambdas = partitions_of(n)
            .par_iter()
            .map(LambdaProfile::compute)
            .collect::<Result<Vec<_>>>()?;
        Ok(SizeProfile { n, lambdas })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lambdas(&self) -> &[LambdaProfile] {
        &self.lambdas
    }

    /// The `1/z_λ`-weighted sums over all `λ ⊢ n`.
    pub fn q1_report(&self, big_n: usize) -> Result<IdentityReport> {
        check_big_n(big_n)?;
        let mut lhs = BigRational::zero();
        let mut rhs = BigRational::zero();
        for p in &self.lambdas {
            let z = BigInt::from(p.lambda.centralizer_size());
            lhs += BigRational::new(BigInt::from(p.lhs(big_n)?), z.clone());
            rhs += BigRational::new(BigInt::from(p.rhs(big_n)?), z);
        }
        Ok(IdentityReport::new(
            Parameters {
                n: Some(self.n),
                big_n: Some(big_n),
                ..Parameters::default()
            },
            Exact(lhs),
            Exact(rhs),
        ))
    }

    /// Every `λ ⊢ n` for which the per-partition identity holds at `N`.
    pub fn holding(&self, big_n: usize) -> Result<Vec<Partition>> {
        let mut out = Vec::new();
        for p in &self.lambdas {
            if p.lhs(big_n)? == p.rhs(big_n)? {
                out.push(p.lambda.clone());
            }
        }
        Ok(out)
    }
}

/// Both sides of the per-partition identity at level `N`.
pub fn strong_sides(lambda: &Partition, big_n: usize) -> Result<IdentityReport> {
    check_big_n(big_n)?;
    LambdaProfile::compute(lambda)?.report(big_n)
}

/// Same as [`strong_sides`] with the per-row breakdown attached.
pub fn strong_sides_detailed(lambda: &Partition, big_n: usize) -> Result<IdentityReport> {
    check_big_n(big_n)?;
    let profile = LambdaProfile::compute(lambda)?;
    let mut report = profile.report(big_n)?;
    report.per_column_breakdown = Some(profile.breakdown(big_n));
    Ok(report)
}

/// Both sides of the aggregated identity, weighted by `1/z_λ`.
pub fn q1_sides(n: usize, big_n: usize) -> Result<IdentityReport> {
    check_big_n(big_n)?;
    SizeProfile::compute(n)?.q1_report(big_n)
}

/// Partitions of `n` for which the per-partition identity holds at `N`.
pub fn holding_partitions(n: usize, big_n: usize) -> Result<Vec<Partition>> {
    check_big_n(big_n)?;
    SizeProfile::compute(n)?.holding(big_n)
}

/// The `N = 1` identity, with the right side evaluated on the single row
/// `(n, n)` directly.
pub fn conj_n1_check(lambda: &Partition) -> Result<IdentityReport> {
    let weighted = ev(lambda)?;
    let n = lambda.size();
    let rows = r_even_rows(3, 2 * n)?;
    let row = Partition::rectangle(n as u32, 2);
    let mut lhs = 0i128;
    let mut rhs = 0i128;
    for (tilde, mult) in weighted.iter() {
        let column = character::chi_column_sum(&rows, tilde)?.get();
        lhs = add(
            lhs,
            mul(tilde.length_sign() as i128 * mult as i128, column)?,
        )?;
        rhs = add(rhs, mul(mult as i128, character::chi(&row, tilde)?.get())?)?;
    }
    Ok(IdentityReport::new(
        Parameters {
            lambda: Some(lambda.clone()),
            big_n: Some(1),
            ..Parameters::default()
        },
        Exact::integer(lhs),
        Exact::integer(rhs),
    ))
}

/// `binom(n/2 + 2, 2)` for even `n`, else 0.
pub fn conjectured_closed_form(n: usize) -> BigInt {
    if n % 2 == 1 {
        return BigInt::zero();
    }
    let h = BigInt::from(n / 2 + 2);
    &h * (&h - 1) / 2
}

/// `Σ_{λ ⊢ n} (1/z_λ) Σ_{λ̃ ∈ Ev(λ)} χ^{(n,n)}_{λ̃}` against the conjectured
/// closed form.
pub fn closed_form_sum(n: usize) -> Result<IdentityReport> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let row = Partition::rectangle(n as u32, 2);
    let terms = partitions_of(n)
        .par_iter()
        .map(|lambda| {
            let mut s = 0i128;
            for (tilde, mult) in ev(lambda)?.iter() {
                s = add(s, mul(mult as i128, character::chi(&row, tilde)?.get())?)?;
            }
            Ok(BigRational::new(
                BigInt::from(s),
                BigInt::from(lambda.centralizer_size()),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let lhs = terms.into_iter().fold(BigRational::zero(), |a, b| a + b);
    Ok(IdentityReport::new(
        Parameters {
            n: Some(n),
            ..Parameters::default()
        },
        Exact(lhs),
        Exact::integer(conjectured_closed_form(n)),
    ))
}

/// A partial character table: rows `R_3(8)`, columns `Ev(λ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharTable {
    pub lambda: Partition,
    pub rows: Vec<Partition>,
    pub columns: Vec<Partition>,
    pub cells: Vec<Vec<i128>>,
    pub column_sums: Vec<i128>,
    pub multiplicities: Vec<u64>,
    /// `(-1)^{ℓ(λ̃)}` times multiplicity.
    pub weights: Vec<i128>,
    /// Weight times column sum.
    pub totals: Vec<i128>,
    pub grand_total: i128,
}

/// The table for `λ = (1^4)` (`which = 1`) or `λ = (2,2)` (`which = 2`).
/// Columns are in increasing lexicographic order.
pub fn reproduce_table(which: u8) -> Result<CharTable> {
    let lambda = match which {
        1 => Partition::rectangle(1, 4),
        2 => Partition::rectangle(2, 2),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "table must be 1 or 2, got {which}"
            )))
        }
    };
    char_table(&lambda, 3)
}

/// Partial table for any `λ`, with rows `R_N(2n)`.
pub fn char_table(lambda: &Partition, big_n: usize) -> Result<CharTable> {
    let weighted = ev(lambda)?;
    let rows = r_even_rows(big_n, 2 * lambda.size())?;
    let mut columns = Vec::new();
    let mut multiplicities = Vec::new();
    for (tilde, mult) in weighted.iter().collect::<Vec<_>>().into_iter().rev() {
        columns.push(tilde.clone());
        multiplicities.push(mult);
    }
    let cells = rows
        .iter()
        .map(|mu| {
            columns
                .iter()
                .map(|tilde| character::chi(mu, tilde).map(|v| v.get()))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let column_sums = (0..columns.len())
        .map(|j| checked_sum(cells.iter().map(|row| row[j])))
        .collect::<Result<Vec<_>>>()?;
    let weights: Vec<i128> = columns
        .iter()
        .zip(&multiplicities)
        .map(|(c, m)| c.length_sign() as i128 * *m as i128)
        .collect();
    let totals = weights
        .iter()
        .zip(&column_sums)
        .map(|(w, s)| mul(*w, *s))
        .collect::<Result<Vec<_>>>()?;
    let grand_total = checked_sum(totals.iter().copied())?;
    Ok(CharTable {
        lambda: lambda.clone(),
        rows,
        columns,
        cells,
        column_sums,
        multiplicities,
        weights,
        totals,
        grand_total,
    })
}

impl CharTable {
    /// CSV with a header row of columns and trailing summary rows.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::WriterBuilder::new()
            .flexible(true)
            .from_writer(Vec::new());
        let csv_err = |e: csv::Error| Error::Io(e.to_string());
        let mut header = vec!["mu".to_string()];
        header.extend(self.columns.iter().map(|c| c.to_exponent_string()));
        w.write_record(&header).map_err(csv_err)?;
        let mut line = |label: String, values: &[i128]| {
            let mut rec = vec![label];
            rec.extend(values.iter().map(|v| v.to_string()));
            w.write_record(&rec)
        };
        for (mu, row) in self.rows.iter().zip(&self.cells) {
            line(mu.to_exponent_string(), row).map_err(csv_err)?;
        }
        line("column_sum".into(), &self.column_sums).map_err(csv_err)?;
        line("weight".into(), &self.weights).map_err(csv_err)?;
        line("total".into(), &self.totals).map_err(csv_err)?;
        line("grand_total".into(), &[self.grand_total]).map_err(csv_err)?;
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
    }

    /// Fixed-width text rendering.
    pub fn to_text(&self) -> String {
        let mut labels: Vec<String> = vec!["mu \\ ev".into()];
        labels.extend(self.rows.iter().map(|r| r.to_exponent_string()));
        labels.extend(["column sum", "weight", "total"].map(String::from));
        let first = labels.iter().map(|l| l.chars().count()).max().unwrap_or(0);
        let heads: Vec<String> = self
            .columns
            .iter()
            .map(|c| c.to_exponent_string())
            .collect();
        let width = heads
            .iter()
            .map(|h| h.chars().count())
            .max()
            .unwrap_or(0)
            .max(6);
        let mut out = String::new();
        let mut push = |label: &str, cells: Vec<String>| {
            out.push_str(&format!("{label:<first$}"));
            for c in cells {
                out.push_str(&format!("  {c:>width$}"));
            }
            out.push('\n');
        };
        let fmt = |v: &[i128]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>();
        push(&labels[0], heads.clone());
        for (mu, row) in self.rows.iter().zip(&self.cells) {
            push(&mu.to_exponent_string(), fmt(row));
        }
        push("column sum", fmt(&self.column_sums));
        push("weight", fmt(&self.weights));
        push("total", fmt(&self.totals));
        out.push_str(&format!("grand total: {}\n", self.grand_total));
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub lambda: Partition,
    #[serde(rename = "N")]
    pub big_n: usize,
    /// `difference` is always `lhs - rhs` with the alternating even-row side
    /// on the left.
    pub orientation: &'static str,
    pub previous: IdentityReport,
    pub current: IdentityReport,
    /// Rows of `R_{2N+1}(2n)` not in `R_{2N-1}(2n)`.
    pub new_lhs_columns: Vec<ColumnContribution>,
    /// Rows of `R^c_{2N}(2n)` not in `R^c_{2N-2}(2n)`.
    pub new_rhs_columns: Vec<ColumnContribution>,
    pub lhs_delta: i128,
    pub rhs_delta: i128,
}

pub const ORIENTATION: &str = "difference = lhs - rhs, lhs is the alternating even-row side";

/// What changes between levels `N - 1` and `N`.
pub fn counterexample_report(lambda: &Partition, big_n: usize) -> Result<CounterexampleReport> {
    if big_n < 2 {
        return Err(Error::InvalidArgument(
            "counterexample reports need N >= 2".into(),
        ));
    }
    let profile = LambdaProfile::compute(lambda)?;
    let new_cols = |side, rows: &[(Partition, i128)], lo: usize, hi: usize| {
        rows.iter()
            .filter(|(mu, _)| mu.len() > lo && mu.len() <= hi)
            .map(|(mu, v)| ColumnContribution {
                side,
                mu: mu.clone(),
                value: *v,
            })
            .collect::<Vec<_>>()
    };
    let new_lhs_columns = new_cols(Side::Lhs, &profile.lhs_rows, 2 * big_n - 1, 2 * big_n + 1);
    let new_rhs_columns = new_cols(Side::Rhs, &profile.rhs_rows, 2 * big_n - 2, 2 * big_n);
    let lhs_delta = checked_sum(new_lhs_columns.iter().map(|c| c.value))?;
    let rhs_delta = checked_sum(new_rhs_columns.iter().map(|c| c.value))?;
    Ok(CounterexampleReport {
        lambda: lambda.clone(),
        big_n,
        orientation: ORIENTATION,
        previous: profile.report(big_n - 1)?,
        current: profile.report(big_n)?,
        new_lhs_columns,
        new_rhs_columns,
        lhs_delta,
        rhs_delta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn int(x: i64) -> Exact {
        Exact::integer(x)
    }

    #[test]
    fn strong_examples() {
        let r = strong_sides(&p("1,1,1,1"), 1).unwrap();
        assert_eq!(
            (r.lhs.clone(), r.rhs.clone(), r.holds),
            (int(48), int(48), true)
        );
        let r = strong_sides(&p("5,2,1"), 3).unwrap();
        assert_eq!(r.difference, int(8));
        for n in [1, 2, 4, 5, 6, 7, 8] {
            assert!(strong_sides(&p("5,2,1"), n).unwrap().holds, "N={n}");
        }
        assert!(strong_sides(&p("2,2"), 0).is_err());
    }

    #[test]
    fn n1_examples() {
        let r = conj_n1_check(&p("2,2")).unwrap();
        assert_eq!((r.lhs, r.rhs), (int(12), int(12)));
        for n in 1..=7 {
            for lambda in partitions_of(n) {
                let direct = conj_n1_check(&lambda).unwrap();
                assert!(direct.holds, "{lambda}");
                assert_eq!(direct, strong_sides(&lambda, 1).unwrap());
            }
        }
    }

    #[test]
    fn stable_levels_hold() {
        for n in 1..=8 {
            let profile = SizeProfile::compute(n).unwrap();
            for lp in profile.lambdas() {
                for big in n..=n + 1 {
                    assert!(lp.report(big).unwrap().holds, "{} N={big}", lp.lambda());
                }
            }
        }
    }

    #[test]
    fn aggregation_is_consistent() {
        for n in 1..=7 {
            let profile = SizeProfile::compute(n).unwrap();
            for big in 1..=n {
                let agg = profile.q1_report(big).unwrap();
                let mut lhs = BigRational::zero();
                for lambda in partitions_of(n) {
                    let r = strong_sides(&lambda, big).unwrap();
                    lhs += r.lhs.0 / BigRational::from_integer(lambda.centralizer_size().into());
                }
                assert_eq!(agg.lhs.0, lhs);
                assert!(agg.holds);
            }
        }
    }

    #[test]
    fn tables() {
        let t = reproduce_table(1).unwrap();
        assert_eq!(t.column_sums, [91, 19, 7, 7, 19]);
        assert_eq!(t.weights, [1, -4, 6, -4, 1]);
        assert_eq!(t.totals, [91, -76, 42, -28, 19]);
        assert_eq!(t.grand_total, 48);
        assert_eq!(t.cells[3][1], 4);
        let t = reproduce_table(2).unwrap();
        assert_eq!(t.column_sums, [19, 5, 3]);
        assert_eq!(t.grand_total, 12);
        assert!(reproduce_table(3).is_err());
        let csv = t.to_csv().unwrap();
        assert!(csv.starts_with("mu,2^4,\"4,2^2\",4^2\n"), "{csv}");
        assert!(csv.contains("grand_total,12"));
        assert!(t.to_text().contains("grand total: 12"));
    }

    #[test]
    fn counterexample_narrative() {
        let r = counterexample_report(&p("5,2,1"), 3).unwrap();
        let names = |cols: &[ColumnContribution]| {
            let mut v: Vec<String> = cols.iter().map(|c| c.mu.to_string()).collect();
            v.sort();
            v
        };
        let mut want_l = vec!["6,2,2,2,2,2", "4,4,2,2,2,2", "4,2,2,2,2,2,2"];
        want_l.sort();
        assert_eq!(names(&r.new_lhs_columns), want_l);
        let mut want_r = vec![
            "3,3,3,3,2,2",
            "4,4,2,2,2,2",
            "4,4,3,3,1,1",
            "5,5,2,2,1,1",
            "6,6,1,1,1,1",
        ];
        want_r.sort();
        assert_eq!(names(&r.new_rhs_columns), want_r);
        assert_eq!((r.lhs_delta, r.rhs_delta), (0, -8));
        assert!(r.previous.holds);
        assert_eq!(r.current.difference, int(8));
        let r4 = counterexample_report(&p("5,2,1"), 4).unwrap();
        assert_eq!((r4.lhs_delta, r4.rhs_delta), (-8, 0));
        assert!(r4.current.holds);
        assert!(counterexample_report(&p("5,2,1"), 1).is_err());
    }

    #[test]
    fn closed_form_small() {
        assert_eq!(conjectured_closed_form(2), BigInt::from(3));
        assert_eq!(conjectured_closed_form(4), BigInt::from(6));
        assert_eq!(conjectured_closed_form(3), BigInt::zero());
        for n in 1..=6 {
            assert!(closed_form_sum(n).unwrap().holds, "n={n}");
        }
    }

    #[test]
    fn json_schema() {
        let r = strong_sides_detailed(&p("2,2"), 1).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["parameters"]["lambda"], "2,2");
        assert_eq!(v["parameters"]["N"], 1);
        assert_eq!(v["lhs"], 12);
        assert_eq!(v["difference"], 0);
        assert_eq!(v["holds"], true);
        assert!(v["per_column_breakdown"].is_array());
        let frac = Exact(BigRational::new(1.into(), 3.into()));
        assert_eq!(serde_json::to_string(&frac).unwrap(), "\"1/3\"");
    }
}
