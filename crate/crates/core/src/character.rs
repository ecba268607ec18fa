//! Irreducible characters of symmetric groups via the Murnaghan–Nakayama
//! rule.
//!
//! Shapes are held internally as bead sets (beta-numbers) packed into a
//! `u64`: a partition `μ` with `k` parts sets bit `μ_i + k - i` for each
//! `i`. Removing a border strip of length `r` moves one bead from position
//! `b` to the empty position `b - r`, and the strip height is the number of
//! beads strictly between. Trailing set bits are zero parts and are shifted
//! away, so each partition has exactly one code. This limits shapes to
//! `μ_1 + ℓ(μ) ≤ 64`, which covers every partition of `n ≤ 63`.
//!
//! Values are memoized on `(shape, remaining cycle type)`, where the cycle
//! type is consumed largest part first. Everything is exact; arithmetic is
//! `i128` with checked overflow.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;
use std::sync::OnceLock;

use dashmap::DashMap;
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Header line of the persisted character cache.
pub const CACHE_HEADER: &str = "# charsum chi-cache v1";

/// A character value `χ^μ_λ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct CharValue(pub i128);

impl CharValue {
    pub fn get(self) -> i128 {
        self.0
    }
}

impl std::fmt::Display for CharValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// A validated pair `(μ, λ)` with `|μ| = |λ|`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharQuery {
    pub mu: Partition,
    pub lambda: Partition,
}

impl CharQuery {
    pub fn new(mu: Partition, lambda: Partition) -> Result<Self> {
        if mu.size() != lambda.size() {
            return Err(Error::SizeMismatch {
                mu: mu.size(),
                lambda: lambda.size(),
            });
        }
        Ok(CharQuery { mu, lambda })
    }
}

/// Outcome of [`CharacterEngine::load_cache`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CacheLoad {
    Missing,
    VersionMismatch(String),
    Loaded(usize),
}

pub(crate) fn encode(parts: &[u32]) -> Result<u64> {
    let k = parts.len();
    let top = parts.first().map_or(0, |&p| p as usize + k);
    if top > 64 {
        return Err(Error::InvalidArgument(format!(
            "partition with largest part {} and {} parts exceeds the character engine range",
            parts[0], k
        )));
    }
    let mut code = 0u64;
    for (i, &p) in parts.iter().enumerate() {
        code |= 1u64 << (p as usize + k - 1 - i);
    }
    Ok(normalize(code))
}

#[inline]
fn normalize(code: u64) -> u64 {
    let t = code.trailing_ones();
    if t >= 64 {
        0
    } else {
        code >> t
    }
}

pub(crate) fn decode(code: u64) -> Partition {
    let mut parts = Vec::new();
    let mut bits = code;
    while bits != 0 {
        let b = 63 - bits.leading_zeros();
        let below = (code & ((1u64 << b) - 1)).count_ones();
        let part = b - below;
        if part > 0 {
            parts.push(part);
        }
        bits &= !(1u64 << b);
    }
    Partition::from_multiset(parts)
}

/// Memoized Murnaghan–Nakayama evaluator. Safe to share across threads;
/// concurrent inserts of the same key always carry the same value.
#[derive(Default)]
pub struct CharacterEngine {
    memo: DashMap<(u64, u64), i128>,
    queries: DashMap<(u64, u64), i128>,
}

impl CharacterEngine {
    pub fn new() -> Self {
        Self::default()
    }

    /// The process-wide engine.
    pub fn global() -> &'static CharacterEngine {
        static ENGINE: OnceLock<CharacterEngine> = OnceLock::new();
        ENGINE.get_or_init(CharacterEngine::new)
    }

    /// `χ^μ_λ`.
    pub fn chi(&self, mu: &Partition, lambda: &Partition) -> Result<CharValue> {
        if mu.size() != lambda.size() {
            return Err(Error::SizeMismatch {
                mu: mu.size(),
                lambda: lambda.size(),
            });
        }
        let shape = encode(mu.parts())?;
        let cycles = encode(lambda.parts())?;
        if let Some(v) = self.queries.get(&(shape, cycles)) {
            return Ok(CharValue(*v));
        }
        let v = self.eval(shape, lambda.parts())?;
        self.queries.insert((shape, cycles), v);
        Ok(CharValue(v))
    }

    pub fn chi_query(&self, q: &CharQuery) -> Result<CharValue> {
        self.chi(&q.mu, &q.lambda)
    }

    /// `Σ_μ χ^μ_λ` over the given rows.
    pub fn chi_column_sum(&self, mus: &[Partition], lambda: &Partition) -> Result<CharValue> {
        let values = mus
            .par_iter()
            .map(|mu| self.chi(mu, lambda).map(CharValue::get))
            .collect::<Result<Vec<_>>>()?;
        checked_sum(values.into_iter()).map(CharValue)
    }

    fn eval(&self, shape: u64, cycles: &[u32]) -> Result<i128> {
        let Some((&r, rest)) = cycles.split_first() else {
            return Ok(if shape == 0 { 1 } else { 0 });
        };
        if r == 1 {
            return degree_of_code(shape);
        }
        let key = (shape, encode(cycles)?);
        if let Some(v) = self.memo.get(&key) {
            return Ok(*v);
        }
        let mut total: i128 = 0;
        let mut bits = shape;
        while bits != 0 {
            let b = bits.trailing_zeros();
            bits &= bits - 1;
            if b < r || shape & (1u64 << (b - r)) != 0 {
                continue;
            }
            let between = shape & ((1u64 << b) - 1) & !((1u64 << (b - r + 1)) - 1);
            let next = normalize((shape & !(1u64 << b)) | (1u64 << (b - r)));
            let sub = self.eval(next, rest)?;
            let term = if between.count_ones().is_multiple_of(2) {
                sub
            } else {
                -sub
            };
            total = total
                .checked_add(term)
                .ok_or(Error::Overflow("character recursion"))?;
        }
        self.memo.insert(key, total);
        Ok(total)
    }

    /// Number of memoized internal states.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Loads `mu;lambda;value` records. A missing file is a cold start and a
    /// header from another format version is ignored; any malformed record
    /// is an error carrying its line number.
    pub fn load_cache(&self, path: &Path) -> Result<CacheLoad> {
        let file = match File::open(path) {
            Ok(f) => f,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(CacheLoad::Missing),
            Err(e) => return Err(e.into()),
        };
        let mut lines = BufReader::new(file).lines();
        let header = match lines.next() {
            None => return Ok(CacheLoad::Loaded(0)),
            Some(h) => h?,
        };
        if header.trim_end() != CACHE_HEADER {
            return Ok(CacheLoad::VersionMismatch(header));
        }
        let corrupt = |line: usize, reason: String| Error::CacheCorrupt {
            path: path.display().to_string(),
            line,
            reason,
        };
        let mut records = Vec::new();
        for (idx, line) in lines.enumerate() {
            let line_no = idx + 2;
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(';').collect();
            if fields.len() != 3 {
                return Err(corrupt(
                    line_no,
                    format!("expected 3 fields, found {}", fields.len()),
                ));
            }
            let mu: Partition = fields[0]
                .parse()
                .map_err(|e: Error| corrupt(line_no, e.to_string()))?;
            let lambda: Partition = fields[1]
                .parse()
                .map_err(|e: Error| corrupt(line_no, e.to_string()))?;
            let value: i128 = fields[2]
                .trim()
                .parse()
                .map_err(|_| corrupt(line_no, format!("bad value {:?}", fields[2])))?;
            if mu.size() != lambda.size() {
                return Err(corrupt(line_no, "size mismatch".into()));
            }
            let key = (
                encode(mu.parts()).map_err(|e| corrupt(line_no, e.to_string()))?,
                encode(lambda.parts()).map_err(|e| corrupt(line_no, e.to_string()))?,
            );
            records.push((key, value));
        }
        let n = records.len();
        for (key, value) in records {
            self.queries.insert(key, value);
            self.memo.insert(key, value);
        }
        Ok(CacheLoad::Loaded(n))
    }

    /// Writes every top-level query answered so far, sorted, so the file is
    /// reproducible.
    pub fn save_cache(&self, path: &Path) -> Result<usize> {
        let sorted: BTreeMap<(Partition, Partition), i128> = self
            .queries
            .iter()
            .map(|e| ((decode(e.key().0), decode(e.key().1)), *e.value()))
            .collect();
        let mut out = BufWriter::new(File::create(path)?);
        writeln!(out, "{CACHE_HEADER}")?;
        for ((mu, lambda), v) in sorted.iter().rev() {
            writeln!(out, "{mu};{lambda};{v}")?;
        }
        out.flush()?;
        Ok(sorted.len())
    }
}

fn degree_of_code(shape: u64) -> Result<i128> {
    let f: BigUint = decode(shape).hook_degree();
    f.to_i128().ok_or(Error::Overflow("hook degree"))
}

pub(crate) fn checked_sum(mut values: impl Iterator<Item = i128>) -> Result<i128> {
    values.try_fold(0i128, |acc, v| {
        acc.checked_add(v).ok_or(Error::Overflow("character sum"))
    })
}

/// `χ^μ_λ` from the process-wide engine.
pub fn chi(mu: &Partition, lambda: &Partition) -> Result<CharValue> {
    CharacterEngine::global().chi(mu, lambda)
}

/// `Σ_μ χ^μ_λ` from the process-wide engine.
pub fn chi_column_sum(mus: &[Partition], lambda: &Partition) -> Result<CharValue> {
    CharacterEngine::global().chi_column_sum(mus, lambda)
}
