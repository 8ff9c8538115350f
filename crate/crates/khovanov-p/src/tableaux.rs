//! Partitions, up-down tableaux and their residue sequences, the staircase
//! criteria, reduction of residue sequences, hom-space counts of the
//! diagrammatic category, and grading functions.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates weak decrease and positivity.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!("not a partition: {parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The staircase `δ_k = (k, k-1, …, 1)`.
    pub fn staircase(k: usize) -> Self {
        Partition((1..=k).rev().collect())
    }

    /// Parts, largest first.
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of row `r` (1-indexed), zero beyond the last row.
    pub fn row_len(&self, r: usize) -> usize {
        self.0.get(r - 1).copied().unwrap_or(0)
    }

    /// True if every box of `self` is a box of `other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| other.row_len(i + 1) >= p)
    }

    /// Boxes `(r, c)` that can be added.
    pub fn addable(&self) -> Vec<(usize, usize)> {
        (1..=self.0.len() + 1)
            .filter(|&r| r == 1 || self.row_len(r - 1) > self.row_len(r))
            .map(|r| (r, self.row_len(r) + 1))
            .collect()
    }

    /// Boxes `(r, c)` that can be removed.
    pub fn removable(&self) -> Vec<(usize, usize)> {
        (1..=self.0.len()).filter(|&r| self.row_len(r) > self.row_len(r + 1)).map(|r| (r, self.row_len(r))).collect()
    }

    fn with_box(&self, r: usize, add: bool) -> Partition {
        let mut p = self.0.clone();
        if add {
            if r > p.len() {
                p.push(1);
            } else {
                p[r - 1] += 1;
            }
        } else {
            p[r - 1] -= 1;
            if p[r - 1] == 0 {
                p.pop();
            }
        }
        Partition(p)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Adding (`+`) or removing (`-`) the box in row `row`, column `col`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SignedBox {
    /// True for an addition.
    pub add: bool,
    /// Row, starting at 1.
    pub row: usize,
    /// Column, starting at 1.
    pub col: usize,
}

impl SignedBox {
    fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// Which residue convention to use for removed boxes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ResidueFlavor {
    /// A removed box `(r, c)` has residue `c - r + 1`.
    Source,
    /// A removed box `(r, c)` has residue `c - r - 1`.
    Target,
}

/// Residue of a single move.
pub fn residue(b: SignedBox, flavor: ResidueFlavor) -> i64 {
    match (b.add, flavor) {
        (true, _) => b.content(),
        (false, ResidueFlavor::Source) => b.content() + 1,
        (false, ResidueFlavor::Target) => b.content() - 1,
    }
}

/// A walk from the empty partition adding or removing one box per step.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct UpDownTableau {
    moves: Vec<SignedBox>,
}

impl UpDownTableau {
    /// Validates that every prefix is a partition.
    pub fn new(moves: Vec<SignedBox>) -> Result<Self> {
        let mut p = Partition::empty();
        for m in &moves {
            let ok = if m.add { p.addable() } else { p.removable() }.contains(&(m.row, m.col));
            if !ok {
                return Err(Error::Precondition(format!("move {m:?} invalid at shape {p}")));
            }
            p = p.with_box(m.row, m.add);
        }
        Ok(UpDownTableau { moves })
    }

    /// Builds the tableau passing through the listed partitions, starting at ∅.
    pub fn from_shapes(shapes: &[Partition]) -> Result<Self> {
        let mut moves = Vec::new();
        let mut prev = Partition::empty();
        for s in shapes {
            let m =
                if s.size() == prev.size() + 1 {
                    prev.addable()
                        .into_iter()
                        .find(|&(r, _)| prev.with_box(r, true) == *s)
                        .map(|(row, col)| SignedBox { add: true, row, col })
                } else if s.size() + 1 == prev.size() {
                    prev.removable()
                        .into_iter()
                        .find(|&(r, _)| prev.with_box(r, false) == *s)
                        .map(|(row, col)| SignedBox { add: false, row, col })
                } else {
                    None
                };
            let m = m.ok_or_else(|| Error::Precondition(format!("{prev} to {s} is not one box")))?;
            moves.push(m);
            prev = s.clone();
        }
        Ok(UpDownTableau { moves })
    }

    /// The moves.
    pub fn moves(&self) -> &[SignedBox] {
        &self.moves
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.moves.len()
    }

    /// True for the tableau with no steps.
    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }

    /// The partitions after each step.
    pub fn shapes(&self) -> Vec<Partition> {
        let mut p = Partition::empty();
        self.moves
            .iter()
            .map(|m| {
                p = p.with_box(m.row, m.add);
                p.clone()
            })
            .collect()
    }

    /// Final partition.
    pub fn shape(&self) -> Partition {
        self.shapes().pop().unwrap_or_default()
    }
}

/// Residue sequence of `t` in the given flavor.
pub fn residue_seq(t: &UpDownTableau, flavor: ResidueFlavor) -> Vec<i64> {
    t.moves.iter().map(|&m| residue(m, flavor)).collect()
}

fn walk(p: &Partition, remaining: usize, moves: &mut Vec<SignedBox>, visit: &mut dyn FnMut(&Partition, &[SignedBox])) {
    if remaining == 0 {
        visit(p, moves);
        return;
    }
    for (row, col) in p.addable() {
        moves.push(SignedBox { add: true, row, col });
        walk(&p.with_box(row, true), remaining - 1, moves, visit);
        moves.pop();
    }
    for (row, col) in p.removable() {
        moves.push(SignedBox { add: false, row, col });
        walk(&p.with_box(row, false), remaining - 1, moves, visit);
        moves.pop();
    }
}

/// All up-down tableaux of the given length ending at `shape`.
pub fn enumerate_udt(length: usize, shape: &Partition) -> Vec<UpDownTableau> {
    let mut out = Vec::new();
    if shape.size() > length || (length - shape.size()) % 2 != 0 {
        return out;
    }
    walk(&Partition::empty(), length, &mut Vec::new(), &mut |p, m| {
        if p == shape {
            out.push(UpDownTableau { moves: m.to_vec() });
        }
    });
    out
}

/// Number of up-down tableaux of the given length, per final shape.
pub fn count_udt_by_shape(length: usize) -> BTreeMap<Partition, usize> {
    let mut out = BTreeMap::new();
    walk(&Partition::empty(), length, &mut Vec::new(), &mut |p, _| {
        *out.entry(p.clone()).or_insert(0) += 1;
    });
    out
}

/// True if the staircase `δ_k` fits inside `lambda`.
pub fn contains_delta(lambda: &Partition, k: usize) -> bool {
    Partition::staircase(k).is_contained_in(lambda)
}

/// Vanishing criterion for rank `n`: `δ_{n+1} ⊆ λ`.
pub fn is_zero_for(lambda: &Partition, n: usize) -> bool {
    contains_delta(lambda, n + 1)
}

/// Projectivity criterion for rank `n`: `δ_n ⊆ λ`.
pub fn is_projective_for(lambda: &Partition, n: usize) -> bool {
    contains_delta(lambda, n)
}

/// Shapes reachable by tableaux whose residues in `flavor` are `seq`,
/// each with the number of such tableaux.
pub fn tableaux_with_residues(seq: &[i64], flavor: ResidueFlavor) -> BTreeMap<Partition, usize> {
    let mut cur: BTreeMap<Partition, usize> = BTreeMap::new();
    cur.insert(Partition::empty(), 1);
    for &v in seq {
        let mut next = BTreeMap::new();
        for (p, c) in cur {
            for (row, col) in p.addable() {
                if residue(SignedBox { add: true, row, col }, flavor) == v {
                    *next.entry(p.with_box(row, true)).or_insert(0) += c;
                }
            }
            for (row, col) in p.removable() {
                if residue(SignedBox { add: false, row, col }, flavor) == v {
                    *next.entry(p.with_box(row, false)).or_insert(0) += c;
                }
            }
        }
        cur = next;
    }
    cur
}

/// True if `seq` is the target residue sequence of an up-down tableau of
/// shape ∅.
pub fn seq_realizable_empty_shape(seq: &[i64]) -> bool {
    tableaux_with_residues(seq, ResidueFlavor::Target).contains_key(&Partition::empty())
}

/// True if `seq` is the target residue sequence of some up-down tableau.
pub fn seq_realizable(seq: &[i64]) -> bool {
    !tableaux_with_residues(seq, ResidueFlavor::Target).is_empty()
}

/// True if `seq` is the target residue sequence of an up-tableau.
pub fn is_up_tableau_residue_seq(seq: &[i64]) -> bool {
    let mut p = Partition::empty();
    for &v in seq {
        let Some((row, _)) = p.addable().into_iter().find(|&(r, c)| c as i64 - r as i64 == v) else {
            return false;
        };
        p = p.with_box(row, true);
    }
    true
}

fn distant(x: i64, y: i64) -> bool {
    (x - y).abs() > 1
}

/// Finds positions `p < q < r` with `s_p = s_r = i`, `s_q = i ± 1` and every
/// entry strictly between them distant from both `i` and `s_q`.
pub fn find_reducible_pattern(s: &[i64]) -> Option<(usize, usize, usize)> {
    let n = s.len();
    for p in 0..n {
        for q in p + 1..n {
            if (s[q] - s[p]).abs() != 1 {
                continue;
            }
            for r in q + 1..n {
                if s[r] != s[p] {
                    continue;
                }
                let clear = (p + 1..r).filter(|&k| k != q).all(|k| distant(s[k], s[p]) && distant(s[k], s[q]));
                if clear {
                    return Some((p, q, r));
                }
            }
        }
    }
    None
}

/// Repeatedly replaces a pattern `(i, i ± 1, i)` (up to commuting distant
/// entries) by `(i)`, deleting the middle and last entries.
pub fn reduce_residue_seq(s: &[i64]) -> Result<Vec<i64>> {
    if !seq_realizable(s) {
        return Err(Error::NotRealizable(s.to_vec()));
    }
    let mut cur = s.to_vec();
    while let Some((_, q, r)) = find_reducible_pattern(&cur) {
        cur.remove(r);
        cur.remove(q);
    }
    Ok(cur)
}

/// Dimension of the hom space between the sequences `i` and `j`: the number
/// of pairs of tableaux of a common shape, the first with source residues `i`,
/// the second with target residues `j`.
pub fn sg_hom_dim(i: &[i64], j: &[i64]) -> usize {
    let a = tableaux_with_residues(i, ResidueFlavor::Source);
    let b = tableaux_with_residues(j, ResidueFlavor::Target);
    a.iter().map(|(p, x)| x * b.get(p).copied().unwrap_or(0)).sum()
}

/// Values `f(a, b)` for `a, b` in a window, excluding `b ∈ {a, a + 1}`.
pub type GradingTable = BTreeMap<(i64, i64), i64>;

/// Tabulates `f(a, b) = sgn(b - a) (-1)^{a+b} k` on `lo..=hi`.
pub fn grading_function(k: i64, lo: i64, hi: i64) -> GradingTable {
    let mut t = GradingTable::new();
    for a in lo..=hi {
        for b in lo..=hi {
            if b != a && b != a + 1 {
                let sign = if (a + b).rem_euclid(2) == 0 { 1 } else { -1 };
                t.insert((a, b), (b - a).signum() * sign * k);
            }
        }
    }
    t
}

/// Checks `f(a, b) = -f(b, a)` for `|a - b| > 1` and `f(a, b) = f(b, a + 1)`
/// wherever both sides are tabulated.
pub fn is_grading_function(f: &GradingTable) -> bool {
    f.iter().all(|(&(a, b), &v)| {
        let anti = (a - b).abs() <= 1 || f.get(&(b, a)).map_or(true, |&w| w == -v);
        let shift = f.get(&(b, a + 1)).map_or(true, |&w| w == v);
        anti && shift
    })
}

/// The constant `k` if `f` is the closed form for some `k`.
pub fn grading_constant(f: &GradingTable) -> Option<i64> {
    let (&(a, b), &v) = f.iter().next()?;
    let sign = (b - a).signum() * if (a + b).rem_euclid(2) == 0 { 1 } else { -1 };
    let k = v * sign;
    f.iter()
        .all(|(&(a, b), &v)| v == (b - a).signum() * if (a + b).rem_euclid(2) == 0 { 1 } else { -1 } * k)
        .then_some(k)
}
