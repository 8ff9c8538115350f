//! Crossingless matchings between two boundary lines, their reductions
//! against cup and cap diagrams, stacked diagrams, and the rewrites
//! `η_i`, `ε_i`, `ψ_{i,j}` acting on layer sequences.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::diagrams::{Arcs, CapDiagram, CupDiagram, Weight};
use crate::error::{Error, Result};
use crate::trace::trace_stack;

/// A planar matching between a lower and an upper copy of `Z + 1/2`.
///
/// Arcs with both ends on one boundary are stored explicitly; the remaining
/// positions are joined by the order-preserving bijection, which is the
/// identity far from the arcs because both boundaries carry the same number of
/// arcs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CrossinglessMatching {
    bottom: Arcs,
    top: Arcs,
}

/// JSON form of a matching.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingJson {
    /// Arcs on the lower boundary.
    pub bottom_arcs: Vec<(i64, i64)>,
    /// Arcs on the upper boundary.
    pub top_arcs: Vec<(i64, i64)>,
}

impl CrossinglessMatching {
    /// Validates both arc systems and requires equally many arcs on each side.
    pub fn new(bottom_arcs: Vec<(i64, i64)>, top_arcs: Vec<(i64, i64)>) -> Result<Self> {
        let bottom = Arcs::new(bottom_arcs)?;
        let top = Arcs::new(top_arcs)?;
        if bottom.len() != top.len() {
            return Err(Error::InvalidArcs(format!(
                "matching has {} lower and {} upper arcs",
                bottom.len(),
                top.len()
            )));
        }
        Ok(CrossinglessMatching { bottom, top })
    }

    /// The identity matching.
    pub fn identity() -> Self {
        CrossinglessMatching { bottom: Arcs::default(), top: Arcs::default() }
    }

    /// Arcs on the lower boundary.
    pub fn bottom_arcs(&self) -> &[(i64, i64)] {
        self.bottom.list()
    }

    /// Arcs on the upper boundary.
    pub fn top_arcs(&self) -> &[(i64, i64)] {
        self.top.list()
    }

    /// True for the identity matching.
    pub fn is_identity(&self) -> bool {
        self.bottom.len() == 0
    }

    /// Smallest and largest arc endpoint on either boundary.
    pub fn bounds(&self) -> Option<(i64, i64)> {
        match (self.bottom.bounds(), self.top.bounds()) {
            (Some((a, b)), Some((c, d))) => Some((a.min(c), b.max(d))),
            (x, None) => x,
            (None, y) => y,
        }
    }

    /// Through strands `(lower, upper)` with both ends in `lo..=hi`, assuming
    /// the window contains every arc.
    pub(crate) fn throughs_in(&self, lo: i64, hi: i64) -> Vec<(i64, i64)> {
        let lower = (lo..=hi).filter(|&p| self.bottom.partner(p).is_none());
        let upper = (lo..=hi).filter(|&p| self.top.partner(p).is_none());
        lower.zip(upper).collect()
    }

    /// Through strands meeting the arc window, as `(lower, upper)` pairs.
    pub fn throughs(&self) -> Vec<(i64, i64)> {
        match self.bounds() {
            Some((lo, hi)) => self.throughs_in(lo, hi),
            None => Vec::new(),
        }
    }

    /// Upper end of the strand starting at lower position `p`, if it is a
    /// through strand.
    pub fn through_from_bottom(&self, p: i64) -> Option<i64> {
        if self.bottom.partner(p).is_some() {
            return None;
        }
        match self.bounds() {
            Some((lo, hi)) if p >= lo && p <= hi => {
                self.throughs_in(lo, hi).into_iter().find(|&(a, _)| a == p).map(|(_, b)| b)
            }
            _ => Some(p),
        }
    }

    /// Mirror in the horizontal axis followed by a shift one to the right;
    /// sends `t^i` to `t^{i+1}`.
    pub fn ddagger(&self) -> Self {
        CrossinglessMatching { bottom: self.top.shifted(1), top: self.bottom.shifted(1) }
    }

    /// Mirror in the vertical axis through `0`; sends `t^i` to `t^{-i}`.
    pub fn dagger(&self) -> Self {
        CrossinglessMatching { bottom: self.bottom.reflected(-1), top: self.top.reflected(-1) }
    }

    /// Rotation by 180 degrees about `1/2`.
    pub fn star(&self) -> Self {
        CrossinglessMatching { bottom: self.top.reflected(0), top: self.bottom.reflected(0) }
    }

    /// JSON form.
    pub fn to_json(&self) -> MatchingJson {
        MatchingJson { bottom_arcs: self.bottom_arcs().to_vec(), top_arcs: self.top_arcs().to_vec() }
    }

    /// Builds from the JSON form.
    pub fn from_json(j: &MatchingJson) -> Result<Self> {
        CrossinglessMatching::new(j.bottom_arcs.clone(), j.top_arcs.clone())
    }
}

/// The matching `t^i`: one arc at real positions `(i - 1/2, i + 1/2)` on each
/// boundary, identity elsewhere.
pub fn special_matching(i: i64) -> CrossinglessMatching {
    CrossinglessMatching::new(vec![(i - 1, i)], vec![(i - 1, i)]).expect("t^i is valid")
}

/// Layers `t^{s_1}, t^{s_2}, …` listed bottom to top.
pub fn special_layers(seq: &[i64]) -> Vec<CrossinglessMatching> {
    seq.iter().map(|&i| special_matching(i)).collect()
}

/// Reduces a stack of matchings (listed bottom to top) to one matching and
/// counts the closed loops that disappear.
pub fn reduce(layers: &[CrossinglessMatching]) -> (CrossinglessMatching, usize) {
    let t = trace_stack(&CupDiagram::empty(), layers, &CapDiagram::empty());
    let mut bottom = Vec::new();
    let mut top = Vec::new();
    for line in &t.report.lines {
        let (a, b) = line.ends;
        let (x, y) = (a.raw().min(b.raw()), a.raw().max(b.raw()));
        match (a.is_top(), b.is_top()) {
            (false, false) => bottom.push((x, y)),
            (true, true) => top.push((x, y)),
            _ => {}
        }
    }
    let m = CrossinglessMatching::new(bottom, top).expect("traced stack is a matching");
    (m, t.report.circles)
}

/// Upper reduction of `t` stacked under the cap diagram `b`: the cap diagram
/// seen from the lower boundary of `t`. Returns `None` if a circle forms.
/// The flag reports whether an arc of `t` closed up with two rays of `b`.
pub fn ured_full(t: &CrossinglessMatching, b: &CapDiagram) -> Option<(CapDiagram, bool)> {
    let tr = trace_stack(&CupDiagram::empty(), std::slice::from_ref(t), b);
    if tr.report.circles > 0 {
        return None;
    }
    let mut caps = Vec::new();
    let mut lost = false;
    for line in &tr.report.lines {
        let (a, c) = line.ends;
        match (a.is_top(), c.is_top()) {
            (false, false) => caps.push((a.raw().min(c.raw()), a.raw().max(c.raw()))),
            (true, true) => lost = true,
            _ => {}
        }
    }
    Some((CapDiagram::new(caps).expect("traced caps are crossingless"), lost))
}

/// Upper reduction `ured(t b)`; `None` if a circle forms.
pub fn ured(t: &CrossinglessMatching, b: &CapDiagram) -> Option<CapDiagram> {
    ured_full(t, b).map(|(c, _)| c)
}

/// Lower reduction of the cup diagram `a` stacked under `t`, seen from the
/// upper boundary of `t`. Returns `None` if a circle forms; the flag reports
/// whether an arc of `t` closed up with two rays of `a`.
pub fn lred_full(a: &CupDiagram, t: &CrossinglessMatching) -> Option<(CupDiagram, bool)> {
    let tr = trace_stack(a, std::slice::from_ref(t), &CapDiagram::empty());
    if tr.report.circles > 0 {
        return None;
    }
    let mut cups = Vec::new();
    let mut lost = false;
    for line in &tr.report.lines {
        let (x, y) = line.ends;
        match (x.is_top(), y.is_top()) {
            (true, true) => cups.push((x.raw().min(y.raw()), x.raw().max(y.raw()))),
            (false, false) => lost = true,
            _ => {}
        }
    }
    Some((CupDiagram::new(cups).expect("traced cups are crossingless"), lost))
}

/// Lower reduction `lred(a t)`; `None` if a circle forms.
pub fn lred(a: &CupDiagram, t: &CrossinglessMatching) -> Option<CupDiagram> {
    lred_full(a, t).map(|(c, _)| c)
}

/// Upper reduction that also rejects lost arcs: the value of `θ_t` on the
/// projective indexed by `b`, or `None` for zero.
pub fn ured_clean(t: &CrossinglessMatching, b: &CapDiagram) -> Option<CapDiagram> {
    match ured_full(t, b) {
        Some((c, false)) => Some(c),
        _ => None,
    }
}

/// Lower reduction that also rejects lost arcs.
pub fn lred_clean(a: &CupDiagram, t: &CrossinglessMatching) -> Option<CupDiagram> {
    match lred_full(a, t) {
        Some((c, false)) => Some(c),
        _ => None,
    }
}

/// A cup diagram, matching layers listed bottom to top, and a cap diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StackedDiagram {
    /// Lowest piece.
    pub bottom: CupDiagram,
    /// Matchings from bottom to top.
    pub layers: Vec<CrossinglessMatching>,
    /// Highest piece.
    pub top: CapDiagram,
}

impl StackedDiagram {
    /// Assembles a stack.
    pub fn new(bottom: CupDiagram, layers: Vec<CrossinglessMatching>, top: CapDiagram) -> Self {
        StackedDiagram { bottom, layers, top }
    }

    /// The stack `ῑ t^{s_k} ⋯ t^{s_1} ῑ`: `t^{s_1}` is the top layer.
    pub fn from_residues(seq: &[i64]) -> Self {
        let layers = seq.iter().rev().map(|&i| special_matching(i)).collect();
        StackedDiagram::new(CupDiagram::empty(), layers, CapDiagram::empty())
    }

    /// Components of the stack.
    pub fn components(&self) -> crate::diagrams::ComponentReport {
        trace_stack(&self.bottom, &self.layers, &self.top).report
    }

    /// The stack with its layers replaced by their reduction.
    pub fn reduced(&self) -> (StackedDiagram, usize) {
        let (m, c) = reduce(&self.layers);
        let layers = if m.is_identity() { Vec::new() } else { vec![m] };
        (StackedDiagram::new(self.bottom.clone(), layers, self.top.clone()), c)
    }
}

/// Orientability of a stacked diagram: no circles, and every line with both
/// ends on one boundary has its redrawn ends on both sides of the reference
/// point of that boundary.
pub fn stacked_orientable(s: &StackedDiagram) -> bool {
    s.components().orientable_k()
}

/// Orientability without any non-propagating line.
pub fn stacked_orientable_kn(s: &StackedDiagram) -> bool {
    s.components().orientable_kn()
}

/// Dot weights on the levels of an oriented stack, listed from the lowest
/// level to the highest.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LayerOrientation {
    /// One weight per level.
    pub weights: Vec<Weight>,
}

/// True if the lower dots `lower` and the upper dots `upper` orient the single
/// layer `t`: each lower arc holds exactly one lower dot in its own region,
/// each upper arc has a distinct adjacent upper dot, the remaining upper dots
/// avoid upper arcs, and the remaining dots balance between consecutive
/// through strands.
pub fn layer_oriented(t: &CrossinglessMatching, lower: &Weight, upper: &Weight) -> bool {
    let low: BTreeSet<i64> = lower.dots().into_iter().collect();
    let up: BTreeSet<i64> = upper.dots().into_iter().collect();
    let mut low_used = BTreeSet::new();
    for &(a, b) in t.bottom_arcs() {
        let own: Vec<i64> = t.bottom.own_region(a, b).into_iter().filter(|m| low.contains(m)).collect();
        if own.len() != 1 {
            return false;
        }
        low_used.insert(own[0]);
    }
    // Every dot strictly inside a lower arc must be the one of its own region.
    for &m in &low {
        if !low_used.contains(&m) && t.bottom_arcs().iter().any(|&(a, b)| a < m && m <= b) {
            return false;
        }
    }
    let top = t.top_arcs();
    let mut lo = low.iter().chain(&up).copied().min().unwrap_or(0) - 1;
    let mut hi = low.iter().chain(&up).copied().max().unwrap_or(0) + 1;
    if let Some((a, b)) = t.bounds() {
        lo = lo.min(a);
        hi = hi.max(b);
    }
    let throughs = t.throughs_in(lo, hi);
    let region =
        |m: i64, lower_side: bool| throughs.iter().filter(|&&(p, q)| if lower_side { p < m } else { q < m }).count();
    let mut base = std::collections::BTreeMap::<usize, i64>::new();
    for &m in low.difference(&low_used) {
        *base.entry(region(m, true)).or_default() += 1;
    }
    adjacent_assignments(top, &up).into_iter().any(|up_used| {
        let inside = up.iter().any(|&m| !up_used.contains(&m) && top.iter().any(|&(a, b)| a < m && m <= b));
        if inside {
            return false;
        }
        let mut balance = base.clone();
        for &m in up.difference(&up_used) {
            *balance.entry(region(m, false)).or_default() -= 1;
        }
        balance.values().all(|&v| v == 0)
    })
}

/// Every way of giving each arc `(a, b)` its own dot at `a` or `b + 1`,
/// reported as the set of dots used.
pub(crate) fn adjacent_assignments(arcs: &[(i64, i64)], dots: &BTreeSet<i64>) -> Vec<BTreeSet<i64>> {
    fn rec(
        i: usize,
        arcs: &[(i64, i64)],
        dots: &BTreeSet<i64>,
        used: &mut BTreeSet<i64>,
        out: &mut BTreeSet<BTreeSet<i64>>,
    ) {
        if i == arcs.len() {
            out.insert(used.clone());
            return;
        }
        let (a, b) = arcs[i];
        for d in [a, b + 1] {
            if dots.contains(&d) && used.insert(d) {
                rec(i + 1, arcs, dots, used, out);
                used.remove(&d);
            }
        }
    }
    let mut out = BTreeSet::new();
    rec(0, arcs, dots, &mut BTreeSet::new(), &mut out);
    out.into_iter().collect()
}

/// All weights `μ` (lower level) such that `μ t γ` is oriented, sorted from
/// largest to smallest in the weight order.
pub fn oriented_middle_weights(t: &CrossinglessMatching, gamma: &Weight) -> Vec<Weight> {
    let n = gamma.len();
    let (lo, hi) = candidate_window(t, gamma);
    let mut out: Vec<Weight> =
        crate::diagrams::weights_in_window(n, lo, hi).into_iter().filter(|mu| layer_oriented(t, mu, gamma)).collect();
    out.sort_by_key(|w| w.order_key());
    out
}

/// All weights `μ` (upper level) such that `γ t^‡ μ` is oriented, sorted from
/// smallest to largest.
pub fn costandard_middle_weights(t: &CrossinglessMatching, gamma: &Weight) -> Vec<Weight> {
    let td = t.ddagger();
    let n = gamma.len();
    let (lo, hi) = candidate_window(&td, gamma);
    let mut out: Vec<Weight> =
        crate::diagrams::weights_in_window(n, lo, hi).into_iter().filter(|mu| layer_oriented(&td, gamma, mu)).collect();
    out.sort_by_key(|w| std::cmp::Reverse(w.order_key()));
    out
}

fn candidate_window(t: &CrossinglessMatching, gamma: &Weight) -> (i64, i64) {
    let n = gamma.len() as i64;
    let mut lo = gamma.entries().last().copied().unwrap_or(0);
    let mut hi = gamma.entries().first().copied().unwrap_or(0);
    if let Some((a, b)) = t.bounds() {
        lo = lo.min(a);
        hi = hi.max(b);
    }
    let pad = 2 * n + 2 * t.bottom_arcs().len() as i64 + 2;
    (lo - pad, hi + pad)
}

/// The unique orientation of a stacked diagram with bottom cup diagram `a`,
/// found level by level; `None` if there is none.
pub fn stacked_orientation(s: &StackedDiagram) -> Option<LayerOrientation> {
    let n = s.bottom.len();
    if s.top.len() != n {
        return None;
    }
    let mut lo = -(n as i64) - 2;
    let mut hi = n as i64 + 2;
    for (x, y) in [s.bottom.bounds(), s.top.bounds()].into_iter().chain(s.layers.iter().map(|m| m.bounds())).flatten() {
        lo = lo.min(x);
        hi = hi.max(y);
    }
    let pad = 2 * n as i64 + 2;
    let cands = crate::diagrams::weights_in_window(n, lo - pad, hi + pad);
    let nabla_ok = |w: &Weight| crate::orientation::is_nabla_orientation(&s.bottom, w);
    let delta_ok = |w: &Weight| crate::orientation::is_delta_orientation(&s.top, w);
    // Depth-first search over the levels from the bottom.
    fn search(
        s: &StackedDiagram,
        level: usize,
        path: &mut Vec<Weight>,
        cands: &[Weight],
        delta_ok: &dyn Fn(&Weight) -> bool,
        found: &mut Vec<Vec<Weight>>,
    ) {
        if found.len() > 1 {
            return;
        }
        if level == s.layers.len() {
            if delta_ok(path.last().expect("nonempty path")) {
                found.push(path.clone());
            }
            return;
        }
        let t = &s.layers[level];
        for w in cands {
            if layer_oriented(t, path.last().expect("nonempty path"), w) {
                path.push(w.clone());
                search(s, level + 1, path, cands, delta_ok, found);
                path.pop();
            }
        }
    }
    let mut found = Vec::new();
    for w in cands.iter().filter(|w| nabla_ok(w)) {
        let mut path = vec![w.clone()];
        search(s, 0, &mut path, &cands, &delta_ok, &mut found);
    }
    if found.len() == 1 {
        Some(LayerOrientation { weights: found.pop().expect("one orientation") })
    } else {
        None
    }
}

/// Layer sequences (bottom to top) acted on by the bimodule maps.
pub type LayerWord = Vec<i64>;

/// The map `η_i`: removes the adjacent pair `t^{i+1}` (lower) and `t^i`
/// (upper) starting at `index`. Returns the shortened word if the resulting
/// diagram `a word b` is still orientable, `None` for zero.
pub fn eta(i: i64, index: usize, bottom: &CupDiagram, word: &[i64], top: &CapDiagram) -> Result<Option<LayerWord>> {
    if word.get(index) != Some(&(i + 1)) || word.get(index + 1) != Some(&i) {
        return Err(Error::BoundaryMismatch(format!("eta_{i} needs layers t^{} t^{i} at index {index}", i + 1)));
    }
    let mut w = word.to_vec();
    w.drain(index..index + 2);
    Ok(orientable_word(bottom, &w, top).then_some(w))
}

/// The map `ε_i`: inserts `t^{i-1}` (lower) and `t^i` (upper) at `index`.
/// Returns the lengthened word if orientable, `None` for zero.
pub fn eps(i: i64, index: usize, bottom: &CupDiagram, word: &[i64], top: &CapDiagram) -> Result<Option<LayerWord>> {
    if index > word.len() {
        return Err(Error::BoundaryMismatch(format!("index {index} beyond {} layers", word.len())));
    }
    let mut w = word.to_vec();
    w.splice(index..index, [i - 1, i]);
    Ok(orientable_word(bottom, &w, top).then_some(w))
}

/// The map `ψ_{i,j}` on the adjacent layers `t^i` (lower) and `t^j` (upper)
/// at `index`: for distant labels it swaps them, for `j = i + 1` it swaps them
/// if the source diagram is orientable, and it is zero for `j ∈ {i, i - 1}`.
pub fn psi(
    i: i64,
    j: i64,
    index: usize,
    bottom: &CupDiagram,
    word: &[i64],
    top: &CapDiagram,
) -> Result<Option<LayerWord>> {
    if word.get(index) != Some(&i) || word.get(index + 1) != Some(&j) {
        return Err(Error::BoundaryMismatch(format!("psi_{{{i},{j}}} needs layers t^{i} t^{j} at index {index}")));
    }
    let mut w = word.to_vec();
    w.swap(index, index + 1);
    if (i - j).abs() > 1 {
        return Ok(Some(w));
    }
    if j == i + 1 {
        return Ok(orientable_word(bottom, word, top).then_some(w));
    }
    Ok(None)
}

fn orientable_word(bottom: &CupDiagram, word: &[i64], top: &CapDiagram) -> bool {
    stacked_orientable(&StackedDiagram::new(bottom.clone(), special_layers(word), top.clone()))
}
