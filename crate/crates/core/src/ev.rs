//! The doubled-part multiset `Ev(λ)` and the even-row / even-column sets
//! `R_N(2n)` and `R^c_N(2n)`.

use std::collections::BTreeMap;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{partitions_bounded, Partition};

/// A multiset of partitions stored as `partition -> multiplicity`, listed in
/// reverse-lexicographic order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightedPartitions {
    entries: Vec<(Partition, u64)>,
}

impl WeightedPartitions {
    pub fn from_map(map: BTreeMap<Partition, u64>) -> Self {
        let entries = map.into_iter().rev().filter(|(_, m)| *m > 0).collect();
        WeightedPartitions { entries }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.entries.iter().map(|(p, m)| (p, *m))
    }

    pub fn entries(&self) -> &[(Partition, u64)] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn multiplicity(&self, p: &Partition) -> u64 {
        self.entries
            .iter()
            .find(|(q, _)| q == p)
            .map_or(0, |(_, m)| *m)
    }

    pub fn total_weight(&self) -> u64 {
        self.entries.iter().map(|(_, m)| m).sum()
    }
}

#[derive(Serialize)]
struct Entry<'a> {
    partition: &'a Partition,
    multiplicity: u64,
}

impl Serialize for WeightedPartitions {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.entries.len()))?;
        for (partition, multiplicity) in &self.entries {
            seq.serialize_element(&Entry {
                partition,
                multiplicity: *multiplicity,
            })?;
        }
        seq.end()
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// `Ev(λ)`: every way of replacing each part `c` by `2c` or by `c, c`.
///
/// Choices are grouped per distinct part size: doubling `k` of the `d`
/// copies of `c` yields the same partition in `binom(d, k)` ways, so the
/// result has at most `Π (d_c + 1)` entries rather than `2^{ℓ(λ)}`.
pub fn ev(lambda: &Partition) -> Result<WeightedPartitions> {
    if lambda.is_empty() {
        return Err(Error::InvalidArgument(
            "Ev is defined for nonempty partitions".into(),
        ));
    }
    if lambda.len() > 63 {
        return Err(Error::Overflow("Ev multiplicity"));
    }
    Ok(ev_unchecked(lambda))
}

/// Same as [`ev`] but maps the empty partition to `{∅: 1}`.
pub(crate) fn ev_unchecked(lambda: &Partition) -> WeightedPartitions {
    let mut partial: Vec<(Vec<u32>, u64)> = vec![(Vec::new(), 1)];
    for (c, d) in lambda.multiplicities() {
        let mut next = Vec::with_capacity(partial.len() * (d + 1));
        for (parts, mult) in &partial {
            for k in 0..=d {
                let mut extended = parts.clone();
                extended.extend(std::iter::repeat_n(2 * c, k));
                extended.extend(std::iter::repeat_n(c, 2 * (d - k)));
                next.push((extended, mult * binomial(d, k)));
            }
        }
        partial = next;
    }
    let mut map = BTreeMap::new();
    for (parts, mult) in partial {
        *map.entry(Partition::from_multiset(parts)).or_insert(0) += mult;
    }
    WeightedPartitions::from_map(map)
}

fn check_even(two_n: usize) -> Result<usize> {
    if !two_n.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "expected an even size, got {two_n}"
        )));
    }
    Ok(two_n / 2)
}

fn check_n(n_rows: usize) -> Result<()> {
    if n_rows == 0 {
        return Err(Error::InvalidArgument("N must be positive".into()));
    }
    Ok(())
}

/// `R_N(2n)`: partitions of `two_n` with at most `n_rows` parts, all even.
pub fn r_even_rows(n_rows: usize, two_n: usize) -> Result<Vec<Partition>> {
    check_n(n_rows)?;
    let n = check_even(two_n)?;
    Ok(partitions_bounded(n, n, n_rows)
        .into_iter()
        .map(|p| Partition::from_multiset(p.parts().iter().map(|x| 2 * x).collect()))
        .collect())
}

/// `R^c_N(2n)`: partitions of `two_n` with at most `n_rows` parts whose
/// columns all have even length.
pub fn r_even_cols(n_rows: usize, two_n: usize) -> Result<Vec<Partition>> {
    check_n(n_rows)?;
    let n = check_even(two_n)?;
    Ok(partitions_bounded(n, n, n_rows / 2)
        .into_iter()
        .map(|p| Partition::from_multiset(p.parts().iter().flat_map(|&x| [x, x]).collect()))
        .collect())
}
