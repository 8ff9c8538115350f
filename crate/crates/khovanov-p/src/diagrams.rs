//! Cup, cap and circle diagrams on the half-integer line.
//!
//! Positions on the line `Z + 1/2` are stored as integer codes: the code `k`
//! stands for the real position `k + 1/2`. With this encoding the entries of a
//! weight are exactly the codes of the right endpoints of its cups, and a cap
//! diagram is its cup diagram shifted one code to the right.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::trace;

/// A point of `Z + 1/2`, stored by its code `k` (real position `k + 1/2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HalfPos {
    /// Integer code of the position.
    pub code: i64,
}

impl HalfPos {
    /// Position with the given code.
    pub const fn new(code: i64) -> Self {
        HalfPos { code }
    }

    /// Twice the real position, an odd integer.
    pub const fn twice_real(self) -> i64 {
        2 * self.code + 1
    }
}

impl fmt::Display for HalfPos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/2", self.twice_real())
    }
}

/// A strictly decreasing integer sequence `λ_1 > … > λ_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct Weight(Vec<i64>);

impl Weight {
    /// Validates strict decrease.
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NotStrictlyDecreasing(entries));
        }
        Ok(Weight(entries))
    }

    /// Weight from arbitrary distinct entries, sorted into decreasing order.
    pub fn from_unsorted(mut entries: Vec<i64>) -> Result<Self> {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        Weight::new(entries)
    }

    /// The weight with no entries.
    pub fn empty() -> Self {
        Weight(Vec::new())
    }

    /// Entries in decreasing order.
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Number of entries.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the empty weight.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dot positions (integers) encoding this weight as an orientation.
    pub fn dots(&self) -> Vec<i64> {
        self.0.iter().map(|&x| x + 1).collect()
    }

    /// Weight whose orientation dots are the given integers.
    pub fn from_dots(dots: impl IntoIterator<Item = i64>) -> Result<Self> {
        Weight::from_unsorted(dots.into_iter().map(|d| d - 1).collect())
    }

    /// Sum of the entries.
    pub fn entry_sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Sort key refining the partial order: larger weights sort first.
    pub fn order_key(&self) -> (usize, i64, Vec<i64>) {
        (self.len(), self.entry_sum(), self.0.clone())
    }
}

impl TryFrom<Vec<i64>> for Weight {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Weight::new(v)
    }
}

impl From<Weight> for Vec<i64> {
    fn from(w: Weight) -> Self {
        w.0
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Validated set of pairwise disjoint arcs in which every position strictly
/// inside an arc is an endpoint of an arc nested inside it.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<(i64, i64)>", into = "Vec<(i64, i64)>")]
pub(crate) struct Arcs {
    arcs: Vec<(i64, i64)>,
    partner: BTreeMap<i64, i64>,
}

impl TryFrom<Vec<(i64, i64)>> for Arcs {
    type Error = Error;

    fn try_from(arcs: Vec<(i64, i64)>) -> Result<Self> {
        Arcs::new(arcs)
    }
}

impl From<Arcs> for Vec<(i64, i64)> {
    fn from(a: Arcs) -> Self {
        a.arcs
    }
}

impl Arcs {
    pub(crate) fn new(mut arcs: Vec<(i64, i64)>) -> Result<Self> {
        let mut partner = BTreeMap::new();
        for &(l, r) in &arcs {
            if l >= r {
                return Err(Error::InvalidArcs(format!("arc ({l},{r}) has left >= right")));
            }
            for (p, q) in [(l, r), (r, l)] {
                if partner.insert(p, q).is_some() {
                    return Err(Error::InvalidArcs(format!("position {p} used twice")));
                }
            }
        }
        for &(l, r) in &arcs {
            for p in l + 1..r {
                match partner.get(&p) {
                    Some(&q) if q > l && q < r => {}
                    Some(_) => return Err(Error::InvalidArcs(format!("arcs cross at ({l},{r}) and {p}"))),
                    None => return Err(Error::InvalidArcs(format!("unmatched position {p} inside arc ({l},{r})"))),
                }
            }
        }
        arcs.sort_unstable();
        Ok(Arcs { arcs, partner })
    }

    pub(crate) fn list(&self) -> &[(i64, i64)] {
        &self.arcs
    }

    pub(crate) fn len(&self) -> usize {
        self.arcs.len()
    }

    pub(crate) fn partner(&self, p: i64) -> Option<i64> {
        self.partner.get(&p).copied()
    }

    /// Number of arc endpoints strictly left of `p`.
    pub(crate) fn endpoints_below(&self, p: i64) -> i64 {
        self.partner.range(..p).count() as i64
    }

    pub(crate) fn bounds(&self) -> Option<(i64, i64)> {
        let lo = *self.partner.keys().next()?;
        let hi = *self.partner.keys().next_back()?;
        Some((lo, hi))
    }

    pub(crate) fn shifted(&self, by: i64) -> Arcs {
        let arcs = self.arcs.iter().map(|&(l, r)| (l + by, r + by)).collect();
        Arcs::new(arcs).expect("shift preserves validity")
    }

    /// Image under the reflection `code ↦ c - code`.
    pub(crate) fn reflected(&self, c: i64) -> Arcs {
        let arcs = self.arcs.iter().map(|&(l, r)| (c - r, c - l)).collect();
        Arcs::new(arcs).expect("reflection preserves validity")
    }

    /// Integers strictly inside arc `(l, r)` but inside no arc nested in it.
    pub(crate) fn own_region(&self, l: i64, r: i64) -> Vec<i64> {
        // Integer m sits between codes m-1 and m.
        let mut out = Vec::new();
        let mut p = l + 1;
        while p <= r {
            out.push(p);
            if p == r {
                break;
            }
            // p is the left endpoint of a child arc; skip over it.
            let q = self.partner(p).expect("positions inside an arc are endpoints");
            p = q + 1;
        }
        out
    }

    /// The smallest arc strictly containing `(l, r)`, if any.
    pub(crate) fn parent(&self, l: i64, r: i64) -> Option<(i64, i64)> {
        self.arcs.iter().filter(|&&(a, b)| a < l && r < b).min_by_key(|&&(a, b)| b - a).copied()
    }

    /// Arcs directly nested inside `(l, r)`, left to right.
    pub(crate) fn children(&self, l: i64, r: i64) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        let mut p = l + 1;
        while p < r {
            let q = self.partner(p).expect("positions inside an arc are endpoints");
            out.push((p, q));
            p = q + 1;
        }
        out
    }
}

/// Crossingless cup diagram drawn below the number line; unlisted positions
/// carry rays going down.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CupDiagram {
    pub(crate) arcs: Arcs,
}

/// Crossingless cap diagram drawn above the number line; unlisted positions
/// carry rays going up.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CapDiagram {
    pub(crate) arcs: Arcs,
}

macro_rules! arc_diagram_common {
    ($ty:ident, $what:literal, $slot_lo:expr) => {
        impl $ty {
            /// Validates the arc list.
            pub fn new(arcs: Vec<(i64, i64)>) -> Result<Self> {
                Ok($ty { arcs: Arcs::new(arcs)? })
            }

            /// The diagram without arcs.
            pub fn empty() -> Self {
                $ty { arcs: Arcs::default() }
            }

            #[doc = concat!("The ", $what, "s as `(left, right)` codes, sorted by left endpoint.")]
            pub fn arcs(&self) -> &[(i64, i64)] {
                self.arcs.list()
            }

            #[doc = concat!("Number of ", $what, "s.")]
            pub fn len(&self) -> usize {
                self.arcs.len()
            }

            #[doc = concat!("True if there is no ", $what, ".")]
            pub fn is_empty(&self) -> bool {
                self.arcs.len() == 0
            }

            #[doc = concat!("The other endpoint of the ", $what, " at `p`, or `None` for a ray.")]
            pub fn partner(&self, p: i64) -> Option<i64> {
                self.arcs.partner(p)
            }

            /// True if `p` carries a ray.
            pub fn is_ray(&self, p: i64) -> bool {
                self.arcs.partner(p).is_none()
            }

            /// Smallest and largest arc endpoint.
            pub fn bounds(&self) -> Option<(i64, i64)> {
                self.arcs.bounds()
            }

            /// Position a ray at `p` is redrawn to: the unique order-preserving
            /// bijection from rays onto the slots outside the reserved central
            /// block that is the identity far to the left.
            pub fn redraw_ray(&self, p: i64) -> i64 {
                let k = self.len() as i64;
                let idx = p - self.arcs.endpoints_below(p);
                let first_reserved: i64 = $slot_lo(k);
                if idx < first_reserved {
                    idx
                } else {
                    idx + 2 * k
                }
            }
        }
    };
}

arc_diagram_common!(CupDiagram, "cup", |k: i64| -k - 1);
arc_diagram_common!(CapDiagram, "cap", |k: i64| -k);

impl CupDiagram {
    /// Cup diagram whose cup right endpoints are the entries of `w`.
    pub fn from_weight(w: &Weight) -> Self {
        cup_from_weight(w)
    }

    /// Weight read off the right endpoints of the cups.
    pub fn weight(&self) -> Weight {
        weight_from_cup(self)
    }
}

impl CapDiagram {
    /// Cap diagram of `w`: the cup diagram of `w` shifted one to the right.
    pub fn from_weight(w: &Weight) -> Self {
        cap_from_weight(w)
    }

    /// Weight of the cap diagram.
    pub fn weight(&self) -> Weight {
        weight_from_cap(self)
    }
}

/// Builds the unique crossingless cup diagram whose cup right endpoints are
/// the entries of `w`: right endpoints are processed in increasing order and
/// each is matched with the largest unused position to its left.
pub fn cup_from_weight(w: &Weight) -> CupDiagram {
    let mut used: std::collections::BTreeSet<i64> = w.entries().iter().copied().collect();
    let mut cups = Vec::with_capacity(w.len());
    for &r in w.entries().iter().rev() {
        let mut l = r - 1;
        while used.contains(&l) {
            l -= 1;
        }
        used.insert(l);
        cups.push((l, r));
    }
    CupDiagram::new(cups).expect("greedy matching yields a valid cup diagram")
}

/// Cap diagram of `w`: every cup of [`cup_from_weight`] shifted one code right.
pub fn cap_from_weight(w: &Weight) -> CapDiagram {
    CapDiagram { arcs: cup_from_weight(w).arcs.shifted(1) }
}

/// Inverse of [`cup_from_weight`].
pub fn weight_from_cup(c: &CupDiagram) -> Weight {
    Weight::from_unsorted(c.arcs().iter().map(|&(_, r)| r).collect()).expect("right endpoints are distinct")
}

/// Inverse of [`cap_from_weight`].
pub fn weight_from_cap(c: &CapDiagram) -> Weight {
    Weight::from_unsorted(c.arcs().iter().map(|&(_, r)| r - 1).collect()).expect("right endpoints are distinct")
}

/// Outcome of comparing two weights in the partial order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum WeightOrder {
    /// Strictly smaller.
    Less,
    /// Identical.
    Equal,
    /// Strictly larger.
    Greater,
    /// Neither is below the other.
    Incomparable,
}

fn weight_leq(a: &Weight, b: &Weight) -> bool {
    match a.len().cmp(&b.len()) {
        Ordering::Greater => true,
        Ordering::Less => false,
        Ordering::Equal => a.entries().iter().zip(b.entries()).all(|(x, y)| x >= y),
    }
}

/// Partial order on weights: `a ≤ b` if `a` has more entries than `b`, or the
/// same number and `a_i ≥ b_i` for every `i`.
pub fn compare_weights(a: &Weight, b: &Weight) -> WeightOrder {
    match (weight_leq(a, b), weight_leq(b, a)) {
        (true, true) => WeightOrder::Equal,
        (true, false) => WeightOrder::Less,
        (false, true) => WeightOrder::Greater,
        (false, false) => WeightOrder::Incomparable,
    }
}

/// A cup diagram drawn under a cap diagram.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CircleDiagram {
    /// Lower half.
    pub bottom: CupDiagram,
    /// Upper half.
    pub top: CapDiagram,
}

impl CircleDiagram {
    /// Glues `bottom` under `top`.
    pub fn new(bottom: CupDiagram, top: CapDiagram) -> Self {
        CircleDiagram { bottom, top }
    }

    /// The diagram `λ̲μ̄`.
    pub fn from_weights(lambda: &Weight, mu: &Weight) -> Self {
        CircleDiagram::new(cup_from_weight(lambda), cap_from_weight(mu))
    }

    /// The idempotent `e_λ = λ̲λ̄`.
    pub fn idempotent(lambda: &Weight) -> Self {
        CircleDiagram::from_weights(lambda, lambda)
    }

    /// Weight of the cup diagram.
    pub fn cup_weight(&self) -> Weight {
        self.bottom.weight()
    }

    /// Weight of the cap diagram.
    pub fn cap_weight(&self) -> Weight {
        self.top.weight()
    }

    /// True if cup and cap weights agree.
    pub fn is_idempotent(&self) -> bool {
        self.cup_weight() == self.cap_weight()
    }
}

impl fmt::Display for CircleDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}^", self.cup_weight(), self.cap_weight())
    }
}

/// Where a line component ends.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Endpoint {
    /// Upward ray at `raw`, redrawn to `redrawn`.
    Top {
        /// Position code of the ray.
        raw: i64,
        /// Position code after redrawing.
        redrawn: i64,
    },
    /// Downward ray at `raw`, redrawn to `redrawn`.
    Bottom {
        /// Position code of the ray.
        raw: i64,
        /// Position code after redrawing.
        redrawn: i64,
    },
}

impl Endpoint {
    /// True for a top endpoint.
    pub fn is_top(&self) -> bool {
        matches!(self, Endpoint::Top { .. })
    }

    /// Redrawn position code.
    pub fn redrawn(&self) -> i64 {
        match *self {
            Endpoint::Top { redrawn, .. } | Endpoint::Bottom { redrawn, .. } => redrawn,
        }
    }

    /// Position code before redrawing.
    pub fn raw(&self) -> i64 {
        match *self {
            Endpoint::Top { raw, .. } | Endpoint::Bottom { raw, .. } => raw,
        }
    }
}

/// A non-closed component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Line {
    /// The two ends, in the order they were reached.
    pub ends: (Endpoint, Endpoint),
}

impl Line {
    /// A line is propagating if one end is at the top and one at the bottom.
    pub fn is_propagating(&self) -> bool {
        self.ends.0.is_top() != self.ends.1.is_top()
    }

    /// For a non-propagating line, whether it straddles the reference point:
    /// `0` for lines ending at the top, `-1` for lines ending at the bottom.
    pub fn straddles_reference(&self) -> bool {
        let (x, y) = {
            let (a, b) = (self.ends.0.redrawn(), self.ends.1.redrawn());
            (a.min(b), a.max(b))
        };
        if self.ends.0.is_top() {
            x <= -1 && y >= 0
        } else {
            x <= -2 && y >= -1
        }
    }
}

/// Components of a (possibly stacked) circle diagram.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ComponentReport {
    /// Number of closed components.
    pub circles: usize,
    /// Line components meeting the finite active window, in the order they
    /// were found scanning positions left to right.
    pub lines: Vec<Line>,
}

impl ComponentReport {
    /// Lines with both ends on the same side.
    pub fn non_propagating(&self) -> impl Iterator<Item = &Line> {
        self.lines.iter().filter(|l| !l.is_propagating())
    }

    /// Orientability in the algebra `K`: no circles and every
    /// non-propagating line straddles its reference point.
    pub fn orientable_k(&self) -> bool {
        self.circles == 0 && self.non_propagating().all(Line::straddles_reference)
    }

    /// Orientability in `K_n`: no circles and no non-propagating lines.
    pub fn orientable_kn(&self) -> bool {
        self.circles == 0 && self.non_propagating().next().is_none()
    }
}

/// Traces all components of `d`.
pub fn trace_components(d: &CircleDiagram) -> ComponentReport {
    trace::trace_stack(&d.bottom, &[], &d.top).report
}

/// Orientability in `K`, using the redrawn ray positions.
pub fn is_orientable_k(d: &CircleDiagram) -> bool {
    trace_components(d).orientable_k()
}

/// Orientability in `K_n`: no circles and no non-propagating lines.
pub fn is_orientable_kn(d: &CircleDiagram) -> bool {
    trace_components(d).orientable_kn()
}

/// Number of odd entries; weights in one block share this value.
pub fn block_signature(w: &Weight) -> usize {
    w.entries().iter().filter(|x| x.rem_euclid(2) == 1).count()
}

/// All weights with `n` entries taken from `lo..=hi`.
pub fn weights_in_window(n: usize, lo: i64, hi: i64) -> Vec<Weight> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn rec(n: usize, top: i64, lo: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if cur.len() == n {
            out.push(Weight(cur.clone()));
            return;
        }
        let need = (n - cur.len()) as i64;
        let mut x = top;
        while x - (need - 1) >= lo {
            cur.push(x);
            rec(n, x - 1, lo, cur, out);
            cur.pop();
            x -= 1;
        }
    }
    rec(n, hi, lo, &mut cur, &mut out);
    out
}
