//! Motzkin and Riordan paths, three-candidate ballot sequences and standard
//! Young tableaux, with the explicit correspondences between them.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions_bounded, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    U,
    F,
    D,
}

impl Step {
    fn letter(self) -> char {
        match self {
            Step::U => 'U',
            Step::F => 'F',
            Step::D => 'D',
        }
    }
}

/// A path over `{U, F, D}`. Construction only checks the alphabet; use
/// [`LatticePath::is_motzkin`] and [`LatticePath::is_riordan`] for the
/// height conditions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath {
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(steps: Vec<Step>) -> Self {
        LatticePath { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn count(&self, step: Step) -> usize {
        self.steps.iter().filter(|&&s| s == step).count()
    }

    /// Never below the axis and ends on it.
    pub fn is_motzkin(&self) -> bool {
        let mut h: i64 = 0;
        for s in &self.steps {
            h += match s {
                Step::U => 1,
                Step::F => 0,
                Step::D => -1,
            };
            if h < 0 {
                return false;
            }
        }
        h == 0
    }

    /// Motzkin with no flat step at height zero.
    pub fn is_riordan(&self) -> bool {
        let mut h: i64 = 0;
        for s in &self.steps {
            match s {
                Step::U => h += 1,
                Step::D => h -= 1,
                Step::F if h == 0 => return false,
                Step::F => {}
            }
            if h < 0 {
                return false;
            }
        }
        h == 0
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps
            .iter()
            .try_for_each(|s| write!(f, "{}", s.letter()))
    }
}

impl FromStr for LatticePath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .filter(|c| !matches!(c, ',' | ' ' | '(' | ')'))
            .map(|c| match c.to_ascii_uppercase() {
                'U' => Ok(Step::U),
                'F' => Ok(Step::F),
                'D' => Ok(Step::D),
                other => Err(Error::InvalidArgument(format!(
                    "unexpected path step {other:?} in {s:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LatticePath { steps })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Vote {
    A,
    B,
    C,
}

impl Vote {
    fn index(self) -> usize {
        match self {
            Vote::A => 0,
            Vote::B => 1,
            Vote::C => 2,
        }
    }

    fn from_index(i: usize) -> Vote {
        [Vote::A, Vote::B, Vote::C][i]
    }
}

/// A word over `{A, B, C}` whose every prefix has `#A ≥ #B ≥ #C`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BallotSequence {
    votes: Vec<Vote>,
}

impl BallotSequence {
    pub fn new(votes: Vec<Vote>) -> Result<Self> {
        let mut counts = [0usize; 3];
        for (i, v) in votes.iter().enumerate() {
            counts[v.index()] += 1;
            if counts[0] < counts[1] || counts[1] < counts[2] {
                return Err(Error::InvalidArgument(format!(
                    "prefix of length {} violates the ballot condition",
                    i + 1
                )));
            }
        }
        Ok(BallotSequence { votes })
    }

    pub fn votes(&self) -> &[Vote] {
        &self.votes
    }

    pub fn len(&self) -> usize {
        self.votes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.votes.is_empty()
    }

    /// Vote counts `(#A, #B, #C)`.
    pub fn counts(&self) -> [usize; 3] {
        let mut counts = [0usize; 3];
        for v in &self.votes {
            counts[v.index()] += 1;
        }
        counts
    }

    pub fn has_matching_parity(&self) -> bool {
        let [a, b, c] = self.counts();
        a % 2 == b % 2 && b % 2 == c % 2
    }
}

impl fmt::Display for BallotSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.votes {
            write!(f, "{v:?}")?;
        }
        Ok(())
    }
}

impl FromStr for BallotSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let votes = s
            .trim()
            .chars()
            .filter(|c| !matches!(c, ',' | ' ' | '(' | ')'))
            .map(|c| match c.to_ascii_uppercase() {
                'A' => Ok(Vote::A),
                'B' => Ok(Vote::B),
                'C' => Ok(Vote::C),
                other => Err(Error::InvalidArgument(format!(
                    "unexpected vote {other:?} in {s:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        BallotSequence::new(votes)
    }
}

/// A standard Young tableau, serialized as a JSON array of rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u32>>", into = "Vec<Vec<u32>>")]
pub struct StandardTableau {
    rows: Vec<Vec<u32>>,
}

impl StandardTableau {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let bad = |why: &str| Error::InvalidArgument(format!("not a standard tableau: {why}"));
        if rows.iter().any(Vec::is_empty) {
            return Err(bad("empty row"));
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(bad("row lengths must weakly decrease"));
        }
        if rows.iter().any(|r| r.windows(2).any(|w| w[0] >= w[1])) {
            return Err(bad("rows must increase"));
        }
        for w in rows.windows(2) {
            if w[1].iter().zip(&w[0]).any(|(below, above)| below <= above) {
                return Err(bad("columns must increase"));
            }
        }
        let n = rows.iter().map(Vec::len).sum::<usize>();
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x as usize > n || seen[x as usize] {
                return Err(bad("entries must be exactly 1..n"));
            }
            seen[x as usize] = true;
        }
        Ok(StandardTableau { rows })
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::from_multiset(self.rows.iter().map(|r| r.len() as u32).collect())
    }
}

impl TryFrom<Vec<Vec<u32>>> for StandardTableau {
    type Error = Error;

    fn try_from(rows: Vec<Vec<u32>>) -> Result<Self> {
        StandardTableau::new(rows)
    }
}

impl From<StandardTableau> for Vec<Vec<u32>> {
    fn from(t: StandardTableau) -> Self {
        t.rows
    }
}

fn enumerate_paths(n: usize, riordan: bool) -> Vec<LatticePath> {
    fn go(n: usize, h: usize, riordan: bool, cur: &mut Vec<Step>, out: &mut Vec<LatticePath>) {
        let left = n - cur.len();
        if left == 0 {
            if h == 0 {
                out.push(LatticePath::new(cur.clone()));
            }
            return;
        }
        if h < left - 1 {
            cur.push(Step::U);
            go(n, h + 1, riordan, cur, out);
            cur.pop();
        }
        if h < left && !(riordan && h == 0) {
            cur.push(Step::F);
            go(n, h, riordan, cur, out);
            cur.pop();
        }
        if h > 0 {
            cur.push(Step::D);
            go(n, h - 1, riordan, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, riordan, &mut Vec::with_capacity(n), &mut out);
    out
}

fn count_paths(n: usize, riordan: bool) -> BigUint {
    // ways[h] = number of valid prefixes ending at height h
    let mut ways = vec![BigUint::default(); n + 2];
    ways[0] = BigUint::from(1u32);
    for _ in 0..n {
        let mut next = vec![BigUint::default(); n + 2];
        for h in 0..=n {
            if ways[h] == BigUint::default() {
                continue;
            }
            next[h + 1] += &ways[h];
            if !(riordan && h == 0) {
                next[h] += &ways[h];
            }
            if h > 0 {
                next[h - 1] += &ways[h];
            }
        }
        ways = next;
    }
    ways.swap_remove(0)
}

/// All Motzkin paths of length `n`, in `U < F < D` lexicographic order.
pub fn motzkin_enumerate(n: usize) -> Vec<LatticePath> {
    enumerate_paths(n, false)
}

/// `M(n)`.
pub fn motzkin_count(n: usize) -> BigUint {
    count_paths(n, false)
}

/// All Riordan paths of length `n`.
pub fn riordan_enumerate(n: usize) -> Vec<LatticePath> {
    enumerate_paths(n, true)
}

/// `R(n)`.
pub fn riordan_count(n: usize) -> BigUint {
    count_paths(n, true)
}

/// Sends a Riordan path with `k` up steps and `m` flat steps to a standard
/// tableau of shape `(k, k, 1^m)`.
///
/// Row one holds the positions of the up steps. The smallest remaining
/// entry goes to the start of row two and stands for the final down step.
/// The other entries, in increasing order, are matched with the remaining
/// steps in path order: a flat step sends its entry down the first column,
/// a down step appends it to row two.
pub fn riordan_to_tableau(path: &LatticePath) -> Result<StandardTableau> {
    if !path.is_riordan() {
        return Err(Error::InvalidArgument(format!(
            "{path} is not a Riordan path"
        )));
    }
    let n = path.len();
    if n == 0 {
        return StandardTableau::new(Vec::new());
    }
    let steps = path.steps();
    let first: Vec<u32> = (1..=n as u32)
        .filter(|&i| steps[i as usize - 1] == Step::U)
        .collect();
    let mut rest = (1..=n as u32).filter(|i| !first.contains(i));
    let corner = rest.next().expect("a Riordan path has a down step");
    let mut second = vec![corner];
    let mut column = Vec::new();
    let labels = (1..n)
        .filter(|&pos| steps[pos - 1] != Step::U)
        .map(|pos| steps[pos - 1]);
    for (entry, label) in rest.zip(labels) {
        match label {
            Step::F => column.push(vec![entry]),
            _ => second.push(entry),
        }
    }
    let mut rows = vec![first, second];
    rows.extend(column);
    StandardTableau::new(rows)
}

/// Inverse of [`riordan_to_tableau`]; the shape must be `(k, k, 1^m)`.
pub fn tableau_to_riordan(t: &StandardTableau) -> Result<LatticePath> {
    let rows = t.rows();
    let n = t.size();
    if n == 0 {
        return Ok(LatticePath::new(Vec::new()));
    }
    let wrong_shape =
        || Error::InvalidArgument(format!("shape {} is not of the form (k,k,1^m)", t.shape()));
    if rows.len() < 2 || rows[0].len() != rows[1].len() || rows[2..].iter().any(|r| r.len() != 1) {
        return Err(wrong_shape());
    }
    let mut steps = vec![None; n];
    for &u in &rows[0] {
        steps[u as usize - 1] = Some(Step::U);
    }
    steps[n - 1] = Some(Step::D);
    let mut tagged: Vec<(u32, Step)> = rows[1][1..].iter().map(|&e| (e, Step::D)).collect();
    tagged.extend(rows[2..].iter().map(|r| (r[0], Step::F)));
    tagged.sort_unstable();
    let mut labels = tagged.into_iter().map(|(_, s)| s);
    for slot in steps.iter_mut().filter(|s| s.is_none()) {
        *slot = labels.next();
    }
    let path = LatticePath::new(
        steps
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(wrong_shape)?,
    );
    if !path.is_riordan() {
        return Err(Error::InvalidArgument(format!(
            "tableau maps to {path}, which is not a Riordan path"
        )));
    }
    Ok(path)
}

/// All ballot sequences of length `n`, in `A < B < C` lexicographic order.
pub fn ballot_enumerate(n: usize) -> Vec<BallotSequence> {
    fn go(n: usize, counts: &mut [usize; 3], cur: &mut Vec<Vote>, out: &mut Vec<BallotSequence>) {
        if cur.len() == n {
            out.push(BallotSequence { votes: cur.clone() });
            return;
        }
        for i in 0..3 {
            if i > 0 && counts[i] + 1 > counts[i - 1] {
                continue;
            }
            counts[i] += 1;
            cur.push(Vote::from_index(i));
            go(n, counts, cur, out);
            cur.pop();
            counts[i] -= 1;
        }
    }
    let mut out = Vec::new();
    go(n, &mut [0; 3], &mut Vec::with_capacity(n), &mut out);
    out
}

/// `r(n)`: ballot sequences of length `n` whose three vote counts share a
/// parity. Counted by dynamic programming over vote counts.
pub fn matching_parity_count(n: usize) -> BigUint {
    let mut layer: BTreeMap<[usize; 3], BigUint> = BTreeMap::new();
    layer.insert([0; 3], BigUint::from(1u32));
    for _ in 0..n {
        let mut next: BTreeMap<[usize; 3], BigUint> = BTreeMap::new();
        for (counts, ways) in &layer {
            for i in 0..3 {
                let mut c = *counts;
                c[i] += 1;
                if c[0] >= c[1] && c[1] >= c[2] {
                    *next.entry(c).or_default() += ways;
                }
            }
        }
        layer = next;
    }
    layer
        .into_iter()
        .filter(|([a, b, c], _)| a % 2 == b % 2 && b % 2 == c % 2)
        .map(|(_, w)| w)
        .sum()
}

/// Appends a vote for the one candidate whose count has the odd parity out,
/// giving a matching-parity sequence one longer.
pub fn ballot_parity_completion(b: &BallotSequence) -> Result<BallotSequence> {
    let counts = b.counts();
    let odd_one = (0..3).find(|&i| {
        let others: Vec<usize> = (0..3).filter(|&j| j != i).map(|j| counts[j] % 2).collect();
        others[0] == others[1] && counts[i] % 2 != others[0]
    });
    let Some(i) = odd_one else {
        return Err(Error::InvalidArgument(format!(
            "{b} already has matching parity"
        )));
    };
    let mut votes = b.votes.clone();
    votes.push(Vote::from_index(i));
    BallotSequence::new(votes)
}

/// Places entry `i` in row `j` when vote `i` goes to candidate `j`.
pub fn ballot_to_tableau(b: &BallotSequence) -> StandardTableau {
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); 3];
    for (i, v) in b.votes.iter().enumerate() {
        rows[v.index()].push(i as u32 + 1);
    }
    rows.retain(|r| !r.is_empty());
    StandardTableau::new(rows).expect("ballot sequences give standard tableaux")
}

/// `Σ f^λ` over `λ = (λ₁, λ₂, λ₃) ⊢ n` with all three entries (zeros
/// included) of one parity.
pub fn sum_f_x(n: usize) -> BigUint {
    partitions_bounded(n, n, 3)
        .iter()
        .filter(|l| {
            let parity = l.part(0) % 2;
            (0..3).all(|i| l.part(i) % 2 == parity)
        })
        .map(Partition::hook_degree)
        .sum()
}

/// `Σ_{k=1}^{⌊n/2⌋} f^{(k,k,1^{n-2k})}`.
pub fn sum_f_y(n: usize) -> BigUint {
    (1..=n / 2)
        .map(|k| hook_shape(k, n - 2 * k).hook_degree())
        .sum()
}

/// The shape `(k, k, 1^m)`.
pub fn hook_shape(k: usize, m: usize) -> Partition {
    let mut parts = vec![k as u32; 2];
    parts.extend(std::iter::repeat_n(1, m));
    Partition::from_multiset(parts)
}
