//! The algebras `K` and `K_n`: multiplication of basis diagrams by surgery,
//! the anti-involution `*`, hom-space dimensions and linear combinations.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::diagrams::{cap_from_weight, CapDiagram, CircleDiagram, CupDiagram, Weight};
use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::matchings::{CrossinglessMatching, StackedDiagram};
use crate::orientation::{delta_orientations, sort_weights, y_weights};
use crate::trace::trace_stack;

/// Which algebra a computation takes place in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    /// The algebra `K` of all orientable circle diagrams.
    FullK,
    /// The algebra `K_n`: diagrams with `n` cups and caps and no
    /// non-propagating lines.
    Kn(usize),
}

impl Mode {
    /// Orientability of a diagram in this mode, including the cup count.
    pub fn admits(&self, d: &CircleDiagram) -> bool {
        match *self {
            Mode::FullK => crate::diagrams::is_orientable_k(d),
            Mode::Kn(n) => d.bottom.len() == n && d.top.len() == n && crate::diagrams::is_orientable_kn(d),
        }
    }

    fn admits_stack(&self, s: &StackedDiagram) -> bool {
        let r = s.components();
        match self {
            Mode::FullK => r.orientable_k(),
            Mode::Kn(_) => r.orientable_kn(),
        }
    }
}

/// A pending surgery: the cup `(a, b)` of the upper diagram, the cap
/// `(a + 1, b + 1)` of the lower diagram, and the strand from `a'` to `c`
/// joining them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurgerySite {
    /// Cup of the middle section, on its upper boundary.
    pub cup: (i64, i64),
    /// Cap of the middle section, on its lower boundary.
    pub cap: (i64, i64),
    /// Connecting strand `(lower end, upper end)`.
    pub connector: (i64, i64),
}

/// Local effect of a surgery on the components.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SurgeryKind {
    /// One component is straightened.
    Straighten,
    /// A circle splits off.
    Split,
    /// Three distinct components are reconnected.
    Reconnect,
}

/// One step of a multiplication.
#[derive(Debug, Clone)]
pub struct SurgeryStep {
    /// Where the surgery happened.
    pub site: SurgerySite,
    /// Its classification.
    pub kind: SurgeryKind,
    /// The stacked diagram after the surgery.
    pub state: StackedDiagram,
    /// Whether that state is orientable in the active mode.
    pub orientable: bool,
}

/// Pending surgery sites of a middle section: the outermost cups.
pub fn surgery_sites(m: &CrossinglessMatching) -> Vec<SurgerySite> {
    let Some((_, hi)) = m.bounds() else {
        return Vec::new();
    };
    let throughs = m.throughs_in(m.bounds().expect("nonempty").0, hi + 1);
    let mut out = Vec::new();
    let mut reach = i64::MIN;
    for &(a, b) in m.top_arcs() {
        if a <= reach {
            continue;
        }
        reach = b;
        let Some(&(ap, c)) = throughs.iter().find(|&&(_, q)| q > b) else {
            continue;
        };
        if ap <= a && m.bottom_arcs().contains(&(a + 1, b + 1)) {
            out.push(SurgerySite { cup: (a, b), cap: (a + 1, b + 1), connector: (ap, c) });
        }
    }
    out
}

fn perform(m: &CrossinglessMatching, site: &SurgerySite) -> CrossinglessMatching {
    let bottom = m.bottom_arcs().iter().copied().filter(|&x| x != site.cap).collect();
    let top = m.top_arcs().iter().copied().filter(|&x| x != site.cup).collect();
    CrossinglessMatching::new(bottom, top).expect("surgery keeps the matching planar")
}

/// Classifies the surgery at `site` on the stack `bottom | m | top`.
pub fn classify_surgery(
    site: &SurgerySite,
    bottom: &CupDiagram,
    m: &CrossinglessMatching,
    top: &CapDiagram,
) -> SurgeryKind {
    let before = trace_stack(bottom, std::slice::from_ref(m), top);
    let after_m = perform(m, site);
    let after = trace_stack(bottom, std::slice::from_ref(&after_m), top);
    if after.report.circles > before.report.circles {
        return SurgeryKind::Split;
    }
    let cup = before.component_at(1, site.cup.0);
    let cap = before.component_at(0, site.cap.0);
    let line = before.component_at(0, site.connector.0);
    if cup != cap && cap != line && cup != line {
        SurgeryKind::Reconnect
    } else {
        SurgeryKind::Straighten
    }
}

/// Full record of a multiplication.
#[derive(Debug, Clone)]
pub struct Product {
    /// The product, or `None` for zero.
    pub result: Option<CircleDiagram>,
    /// Surgeries performed, in order, up to the first non-orientable state.
    pub steps: Vec<SurgeryStep>,
}

fn check_operand(d: &CircleDiagram, mode: Mode) -> Result<()> {
    if let Mode::Kn(n) = mode {
        if d.bottom.len() != n || d.top.len() != n {
            return Err(Error::ModeMismatch(format!("{d} is not a diagram of K_{n}")));
        }
    }
    if !mode.admits(d) {
        return Err(Error::NotOrientable(d.to_string()));
    }
    Ok(())
}

/// Multiplies `a = λ̲μ̄` (below) with `b = μ̲ν̄` (above), choosing each surgery
/// among the pending sites with `choose`, which receives the site list and
/// returns an index into it.
pub fn multiply_traced(
    a: &CircleDiagram,
    b: &CircleDiagram,
    mode: Mode,
    choose: &mut dyn FnMut(&[SurgerySite]) -> usize,
) -> Result<Product> {
    check_operand(a, mode)?;
    check_operand(b, mode)?;
    if a.top.arcs.shifted(-1) != b.bottom.arcs {
        return Ok(Product { result: None, steps: Vec::new() });
    }
    let mut m = CrossinglessMatching::new(a.top.arcs().to_vec(), b.bottom.arcs().to_vec())?;
    let mut steps = Vec::new();
    while !m.is_identity() {
        let sites = surgery_sites(&m);
        if sites.is_empty() {
            return Err(Error::Invariant(format!("no surgery site in middle section {m:?}")));
        }
        let site = sites[choose(&sites).min(sites.len() - 1)];
        let kind = classify_surgery(&site, &a.bottom, &m, &b.top);
        m = perform(&m, &site);
        let layers = if m.is_identity() { Vec::new() } else { vec![m.clone()] };
        let state = StackedDiagram::new(a.bottom.clone(), layers, b.top.clone());
        let orientable = mode.admits_stack(&state);
        steps.push(SurgeryStep { site, kind, state, orientable });
        if !orientable {
            return Ok(Product { result: None, steps });
        }
    }
    let result = CircleDiagram::new(a.bottom.clone(), b.top.clone());
    Ok(Product { result: mode.admits(&result).then_some(result), steps })
}

/// Product of two basis diagrams with surgeries taken leftmost first;
/// `None` stands for zero.
pub fn multiply(a: &CircleDiagram, b: &CircleDiagram, mode: Mode) -> Result<Option<CircleDiagram>> {
    Ok(multiply_traced(a, b, mode, &mut |_| 0)?.result)
}

/// Rotation by 180 degrees about `1/2`: cups become caps and vice versa.
pub fn involution_star(d: &CircleDiagram) -> CircleDiagram {
    CircleDiagram::new(CupDiagram { arcs: d.top.arcs.reflected(0) }, CapDiagram { arcs: d.bottom.arcs.reflected(0) })
}

/// The weight `λ*` with `(e_λ)* = e_{λ*}`.
pub fn star_weight(lambda: &Weight) -> Weight {
    involution_star(&CircleDiagram::idempotent(lambda)).cup_weight()
}

/// Dimension of `e_λ K e_μ`: 1 if `λ̲μ̄` is orientable in `mode`, else 0.
pub fn hom_dim(lambda: &Weight, mu: &Weight, mode: Mode) -> usize {
    mode.admits(&CircleDiagram::from_weights(lambda, mu)) as usize
}

/// All `μ` such that `μ̲λ̄` is orientable in `mode`, largest first.
pub fn compatible_weights(lambda: &Weight, mode: Mode) -> Vec<Weight> {
    let cap = cap_from_weight(lambda);
    let mut out: Vec<Weight> = delta_orientations(&cap)
        .iter()
        .flat_map(y_weights)
        .filter(|mu| mode.admits(&CircleDiagram::from_weights(mu, lambda)))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    sort_weights(&mut out);
    out
}

/// A finite rational linear combination of basis diagrams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    terms: BTreeMap<CircleDiagram, Q>,
    mode: Mode,
}

impl AlgebraElement {
    /// The zero element.
    pub fn zero(mode: Mode) -> Self {
        AlgebraElement { terms: BTreeMap::new(), mode }
    }

    /// A basis diagram with coefficient one.
    pub fn basis(d: CircleDiagram, mode: Mode) -> Result<Self> {
        check_operand(&d, mode)?;
        let mut terms = BTreeMap::new();
        terms.insert(d, Q::one());
        Ok(AlgebraElement { terms, mode })
    }

    /// The algebra this element lives in.
    pub fn mode(&self) -> Mode {
        self.mode
    }

    /// Nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (&CircleDiagram, &Q)> {
        self.terms.iter()
    }

    /// True for the zero element.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, d: CircleDiagram, c: Q) {
        let e = self.terms.entry(d).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    /// Sum of two elements.
    pub fn add(&self, other: &AlgebraElement) -> Result<Self> {
        if self.mode != other.mode {
            return Err(Error::ModeMismatch(format!("{:?} vs {:?}", self.mode, other.mode)));
        }
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    /// Scalar multiple.
    pub fn scale(&self, s: &Q) -> Self {
        let mut out = AlgebraElement::zero(self.mode);
        for (d, c) in &self.terms {
            out.add_term(d.clone(), c * s);
        }
        out
    }

    /// Product `self · other`.
    pub fn mul(&self, other: &AlgebraElement) -> Result<Self> {
        if self.mode != other.mode {
            return Err(Error::ModeMismatch(format!("{:?} vs {:?}", self.mode, other.mode)));
        }
        let mut out = AlgebraElement::zero(self.mode);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                if let Some(d) = multiply(a, b, self.mode)? {
                    out.add_term(d, x * y);
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(d, c)| format!("{c}*{d}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}
