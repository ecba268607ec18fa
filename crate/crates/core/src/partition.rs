//! Integer partitions in canonical form (weakly decreasing, no zero parts).
//!
//! `Partition` is the index type for irreducible characters, conjugacy
//! classes and symmetric-function bases everywhere in this crate. The derived
//! ordering is lexicographic on the part sequence, so sorting a list in
//! descending order yields reverse-lexicographic order: `(4) > (3,1) > (2,2)`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from parts that are already weakly decreasing and
    /// positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition {
                input: format_parts(&parts),
                reason: "parts must be positive".into(),
            });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                input: format_parts(&parts),
                reason: "parts must be weakly decreasing".into(),
            });
        }
        Ok(Partition { parts })
    }

    /// Sorts the given multiset of parts and drops zeros.
    pub fn from_multiset(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The single-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// The partition `(part^count)`.
    pub fn rectangle(part: u32, count: usize) -> Self {
        if part == 0 {
            Self::empty()
        } else {
            Partition {
                parts: vec![part; count],
            }
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// `(part, multiplicity)` pairs, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.largest() as usize;
        let parts = (1..=width as u32)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count() as u32)
            .collect();
        Partition { parts }
    }

    /// `z_λ = Π_j j^{m_j} m_j!`, the order of the centralizer of a
    /// permutation with this cycle type.
    pub fn centralizer_size(&self) -> BigUint {
        let mut z = BigUint::one();
        for (part, mult) in self.multiplicities() {
            for k in 1..=mult {
                z *= BigUint::from(part) * BigUint::from(k);
            }
        }
        z
    }

    /// Hook length of the cell in row `i`, column `j` (both 0-based).
    pub fn hook_length(&self, i: usize, j: usize) -> u32 {
        let arm = self.parts[i] as usize - j - 1;
        let leg = self.parts[i + 1..]
            .iter()
            .take_while(|&&p| p as usize > j)
            .count();
        (arm + leg + 1) as u32
    }

    /// Number of standard Young tableaux of this shape, via the hook-length
    /// formula.
    pub fn hook_degree(&self) -> BigUint {
        let mut num = factorial(self.size());
        let mut den = BigUint::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                den *= BigUint::from(self.hook_length(i, j));
            }
        }
        num /= den;
        num
    }

    /// True when every part is even.
    pub fn all_parts_even(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 0)
    }

    /// True when every column has even length, i.e. every part occurs an
    /// even number of times.
    pub fn all_columns_even(&self) -> bool {
        self.multiplicities().iter().all(|(_, m)| m % 2 == 0)
    }

    /// `(-1)^{ℓ(λ)}` as `±1`.
    pub fn length_sign(&self) -> i64 {
        if self.len().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Compact exponent notation, e.g. `3^2,2^3,1`.
    pub fn to_exponent_string(&self) -> String {
        self.multiplicities()
            .iter()
            .map(|&(p, m)| {
                if m == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{m}")
                }
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

fn format_parts(parts: &[u32]) -> String {
    parts
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_parts(&self.parts))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the comma format `5,2,1`; the empty string is the empty
    /// partition.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition {
                        input: s.to_string(),
                        reason: format!("{:?} is not a nonnegative integer", tok.trim()),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts).map_err(|e| match e {
            Error::InvalidPartition { reason, .. } => Error::InvalidPartition {
                input: s.to_string(),
                reason,
            },
            other => other,
        })
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    partitions_bounded(n, n, n)
}

/// Partitions of `n` with every part at most `max_part` and at most
/// `max_len` parts, in reverse-lexicographic order.
pub fn partitions_bounded(n: usize, max_part: usize, max_len: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, max_part.min(n), max_len, &mut current, &mut out);
    out
}

fn fill(
    remaining: usize,
    max_part: usize,
    max_len: usize,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition {
            parts: current.clone(),
        });
        return;
    }
    if max_len == 0 {
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        // remaining boxes must fit into max_len rows of width p
        if p * max_len < remaining {
            break;
        }
        current.push(p as u32);
        fill(remaining - p, p, max_len - 1, current, out);
        current.pop();
    }
}
