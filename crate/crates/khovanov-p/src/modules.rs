//! Finite-dimensional `K_n`-modules as explicit matrices over the rationals:
//! indecomposable projectives `P(λ)`, standard modules `Δ(λ)`, costandard
//! modules `∇(λ)` and simple modules `L(λ)`, their radical and socle
//! filtrations, and the action of `θ_t` on each class.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::algebra::{compatible_weights, multiply, Mode};
use crate::diagrams::{cap_from_weight, cup_from_weight, weights_in_window, CircleDiagram, Weight};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Q};
use crate::matchings::{
    costandard_middle_weights, lred, oriented_middle_weights, ured, ured_clean, CrossinglessMatching,
};
use crate::orientation::{orientation_of, x_weights, y_weights};

/// A class in the Grothendieck group: multiplicities of simple modules.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GrothendieckClass(BTreeMap<Weight, usize>);

impl GrothendieckClass {
    /// The zero class.
    pub fn new() -> Self {
        GrothendieckClass(BTreeMap::new())
    }

    /// Adds `m` copies of `[L(λ)]`.
    pub fn add_simple(&mut self, lambda: Weight, m: usize) {
        if m > 0 {
            *self.0.entry(lambda).or_default() += m;
        }
    }

    /// Sum of two classes.
    pub fn add(&self, other: &GrothendieckClass) -> Self {
        let mut out = self.clone();
        for (w, &m) in &other.0 {
            out.add_simple(w.clone(), m);
        }
        out
    }

    /// Multiplicity of `[L(λ)]`.
    pub fn multiplicity(&self, lambda: &Weight) -> usize {
        self.0.get(lambda).copied().unwrap_or(0)
    }

    /// Total length.
    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    /// True for the zero class.
    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Simples with their multiplicities, largest weight first.
    pub fn entries(&self) -> Vec<(Weight, usize)> {
        let mut v: Vec<(Weight, usize)> = self.0.iter().map(|(w, &m)| (w.clone(), m)).collect();
        v.sort_by_key(|(w, _)| w.order_key());
        v
    }

    /// Simples repeated by multiplicity, largest weight first.
    pub fn weights(&self) -> Vec<Weight> {
        self.entries().into_iter().flat_map(|(w, m)| std::iter::repeat(w).take(m)).collect()
    }
}

impl FromIterator<Weight> for GrothendieckClass {
    fn from_iter<I: IntoIterator<Item = Weight>>(iter: I) -> Self {
        let mut c = GrothendieckClass::new();
        for w in iter {
            c.add_simple(w, 1);
        }
        c
    }
}

impl fmt::Display for GrothendieckClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .entries()
            .into_iter()
            .map(|(w, m)| if m == 1 { format!("L{w}") } else { format!("{m}L{w}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Which family a realized module belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModuleKind {
    /// Indecomposable projective `P(λ) = K_n e_λ`.
    Projective,
    /// Standard module `Δ(λ)`.
    Standard,
    /// Costandard module `∇(λ)`.
    Costandard,
    /// Simple module `L(λ)`.
    Simple,
}

/// One basis vector of a realized module.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisVector {
    /// The weight `μ` with `e_μ v = v`.
    pub tag: Weight,
    /// The circle diagram the vector comes from. For costandard modules this
    /// is the diagram `λ̲μ̄` whose dual the vector is.
    pub diagram: CircleDiagram,
}

/// A finite-dimensional `K_n`-module with explicit action matrices.
///
/// Matrices act on column vectors in the coordinates of `basis`. The action
/// is recorded for every basis diagram `α̲β̄` of `K_n` with `α, β` in the
/// window; all other basis diagrams act by zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleRealization {
    /// Family of the module.
    pub kind: ModuleKind,
    /// Defining weight.
    pub lambda: Weight,
    /// Rank `n` of the algebra `K_n`.
    pub n: usize,
    /// Basis, largest tag first.
    pub basis: Vec<BasisVector>,
    /// Distinct tags of the basis, largest first.
    pub window: Vec<Weight>,
    action: BTreeMap<CircleDiagram, Matrix>,
}

impl ModuleRealization {
    /// Dimension.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Matrix of a basis diagram, or the zero matrix for diagrams outside the
    /// window.
    pub fn action(&self, d: &CircleDiagram) -> Matrix {
        self.action.get(d).cloned().unwrap_or_else(|| Matrix::zeros(self.dim(), self.dim()))
    }

    /// Basis diagrams with recorded action.
    pub fn acting_diagrams(&self) -> impl Iterator<Item = &CircleDiagram> {
        self.action.keys()
    }

    /// Composition factors: the multiplicity of `L(μ)` is `dim e_μ M`.
    pub fn composition_factors(&self) -> GrothendieckClass {
        self.basis.iter().map(|b| b.tag.clone()).collect()
    }

    /// Checks `action(a·b) = action(a)∘action(b)` for all window diagrams and
    /// that idempotents act as coordinate projections.
    pub fn verify_action(&self) -> Result<()> {
        let mode = Mode::Kn(self.n);
        for (a, ma) in &self.action {
            if a.is_idempotent() {
                let expect = self.projection(&a.cup_weight());
                if ma != &expect {
                    return Err(Error::Invariant(format!("{a} does not act as a projection")));
                }
            }
            for (b, mb) in &self.action {
                let lhs = match multiply(a, b, mode)? {
                    Some(ab) => self.action(&ab),
                    None => Matrix::zeros(self.dim(), self.dim()),
                };
                if lhs != ma.mul(mb) {
                    return Err(Error::Invariant(format!("action of {a} · {b} is not a composite")));
                }
            }
        }
        Ok(())
    }

    fn projection(&self, mu: &Weight) -> Matrix {
        let mut m = Matrix::zeros(self.dim(), self.dim());
        for (i, b) in self.basis.iter().enumerate() {
            if &b.tag == mu {
                m.set(i, i, Q::one());
            }
        }
        m
    }

    fn radical_operators(&self) -> Vec<&Matrix> {
        self.action.iter().filter(|(d, _)| !d.is_idempotent()).map(|(_, m)| m).collect()
    }

    /// Class of a submodule given by a row basis.
    fn class_of(&self, sub: &Matrix) -> GrothendieckClass {
        let mut c = GrothendieckClass::new();
        for mu in &self.window {
            let cols: Vec<usize> = (0..self.dim()).filter(|&i| &self.basis[i].tag == mu).collect();
            c.add_simple(mu.clone(), sub.select_cols(&cols).rank());
        }
        c
    }

    fn class_difference(&self, big: &Matrix, small: &Matrix) -> GrothendieckClass {
        let (b, s) = (self.class_of(big), self.class_of(small));
        let mut out = GrothendieckClass::new();
        for (w, m) in b.entries() {
            out.add_simple(w.clone(), m - s.multiplicity(&w));
        }
        out
    }
}

fn weight_index(basis: &[BasisVector]) -> BTreeMap<Weight, usize> {
    basis.iter().enumerate().map(|(i, b)| (b.tag.clone(), i)).collect()
}

fn window_diagrams(window: &[Weight], n: usize) -> Vec<CircleDiagram> {
    let mode = Mode::Kn(n);
    let mut out = Vec::new();
    for a in window {
        for b in window {
            let d = CircleDiagram::from_weights(a, b);
            if mode.admits(&d) {
                out.push(d);
            }
        }
    }
    out
}

/// Builds a module whose basis vectors are tagged by `tags` and on which the
/// basis diagram `α̲β̄` sends the vector tagged `β` to the vector tagged by
/// the returned weight, if any.
fn realize(
    kind: ModuleKind,
    lambda: &Weight,
    tags: Vec<Weight>,
    diagram: impl Fn(&Weight) -> CircleDiagram,
    mut image: impl FnMut(&CircleDiagram, &Weight) -> Result<Option<Weight>>,
) -> Result<ModuleRealization> {
    let n = lambda.len();
    let basis: Vec<BasisVector> = tags.iter().map(|mu| BasisVector { tag: mu.clone(), diagram: diagram(mu) }).collect();
    let index = weight_index(&basis);
    let mut action = BTreeMap::new();
    for d in window_diagrams(&tags, n) {
        let mut m = Matrix::zeros(basis.len(), basis.len());
        let beta = d.cap_weight();
        if let Some(alpha) = image(&d, &beta)? {
            let i = *index.get(&alpha).ok_or_else(|| Error::Invariant(format!("{d} leaves the window of {lambda}")))?;
            m.set(i, index[&beta], Q::one());
        }
        action.insert(d, m);
    }
    Ok(ModuleRealization { kind, lambda: lambda.clone(), n, basis, window: tags, action })
}

/// `P(λ) = K_n e_λ` with basis the orientable diagrams `μ̲λ̄`.
pub fn build_projective(lambda: &Weight) -> Result<ModuleRealization> {
    let mode = Mode::Kn(lambda.len());
    let tags = compatible_weights(lambda, mode);
    realize(
        ModuleKind::Projective,
        lambda,
        tags,
        |mu| CircleDiagram::from_weights(mu, lambda),
        |a, beta| Ok(multiply(a, &CircleDiagram::from_weights(beta, lambda), mode)?.map(|d| d.cup_weight())),
    )
}

/// `Δ(λ)` with basis `Y(λ)`; products oriented by anything other than `λ`
/// vanish.
pub fn build_standard(lambda: &Weight) -> Result<ModuleRealization> {
    let mode = Mode::Kn(lambda.len());
    let tags = y_weights(lambda);
    realize(
        ModuleKind::Standard,
        lambda,
        tags,
        |mu| CircleDiagram::from_weights(mu, lambda),
        |a, beta| {
            let prod = multiply(a, &CircleDiagram::from_weights(beta, lambda), mode)?;
            Ok(prod.filter(|d| orientation_of(d).as_ref() == Some(lambda)).map(|d| d.cup_weight()))
        },
    )
}

/// `∇(λ)`: the dual of the right module `ē_λ K_n^{≤λ}` with basis `X(λ)`.
/// The diagram `α̲β̄` sends the dual of `λ̲β̄` to the dual of `λ̲ᾱ` when
/// `λ̲ᾱ · α̲β̄ = λ̲β̄` with orientation `λ`.
pub fn build_costandard(lambda: &Weight) -> Result<ModuleRealization> {
    let mode = Mode::Kn(lambda.len());
    let tags = x_weights(lambda);
    realize(
        ModuleKind::Costandard,
        lambda,
        tags.clone(),
        |mu| CircleDiagram::from_weights(lambda, mu),
        |a, beta| {
            let alpha = a.cup_weight();
            if !tags.contains(&alpha) {
                return Ok(None);
            }
            let prod = multiply(&CircleDiagram::from_weights(lambda, &alpha), a, mode)?;
            let hit = prod.is_some_and(|d| d.cap_weight() == *beta && orientation_of(&d).as_ref() == Some(lambda));
            Ok(hit.then_some(alpha))
        },
    )
}

/// The one-dimensional simple module `L(λ)`.
pub fn build_simple(lambda: &Weight) -> Result<ModuleRealization> {
    realize(ModuleKind::Simple, lambda, vec![lambda.clone()], CircleDiagram::idempotent, |a, beta| {
        Ok(a.is_idempotent().then(|| beta.clone()))
    })
}

/// Builds the module of the given family.
pub fn build(kind: ModuleKind, lambda: &Weight) -> Result<ModuleRealization> {
    match kind {
        ModuleKind::Projective => build_projective(lambda),
        ModuleKind::Standard => build_standard(lambda),
        ModuleKind::Costandard => build_costandard(lambda),
        ModuleKind::Simple => build_simple(lambda),
    }
}

fn images(ops: &[&Matrix], sub: &Matrix) -> Matrix {
    let cols = sub.cols();
    let mut rows = Vec::new();
    for op in ops {
        for i in 0..sub.rows() {
            let v = op.apply(sub.row(i));
            if v.iter().any(|x| !num_traits::Zero::is_zero(x)) {
                rows.push(v);
            }
        }
    }
    Matrix::from_rows(rows, cols).row_space()
}

/// Radical layers `rad^k M / rad^{k+1} M`, head first.
///
/// The radical is generated by the non-idempotent basis diagrams of the
/// window; an error is returned if their action is not nilpotent.
pub fn radical_filtration(m: &ModuleRealization) -> Result<Vec<GrothendieckClass>> {
    let ops = m.radical_operators();
    let mut cur = Matrix::identity(m.dim());
    let mut layers = Vec::new();
    while cur.rows() > 0 {
        let next = images(&ops, &cur);
        if next.rows() == cur.rows() {
            return Err(Error::Invariant(format!("radical of {:?}({}) is not nilpotent", m.kind, m.lambda)));
        }
        layers.push(m.class_difference(&cur, &next));
        cur = next;
    }
    Ok(layers)
}

/// Socle layers `soc^{k+1} M / soc^k M`, listed top first so that the last
/// layer is the socle.
pub fn socle_filtration(m: &ModuleRealization) -> Result<Vec<GrothendieckClass>> {
    let ops = m.radical_operators();
    let d = m.dim();
    let mut cur = Matrix::zeros(0, d);
    let mut layers = Vec::new();
    while cur.rows() < d {
        // Vectors sent into `cur` by every operator.
        let perp = cur.kernel();
        let mut cond = Matrix::zeros(0, d);
        for op in &ops {
            cond = cond.vstack(&perp.mul(op));
        }
        let next = cond.kernel();
        if next.rows() == cur.rows() {
            return Err(Error::Invariant(format!("socle series of {:?}({}) stalls", m.kind, m.lambda)));
        }
        layers.push(m.class_difference(&next, &cur));
        cur = next;
    }
    layers.reverse();
    Ok(layers)
}

/// `θ_t P(γ)`: `None` for zero, otherwise the weight `ν` with
/// `θ_t P(γ) = P(ν)`, where `ν̄` is the upper reduction of `tγ̄`.
pub fn theta_on_projective(t: &CrossinglessMatching, gamma: &Weight) -> Option<Weight> {
    ured_clean(t, &cap_from_weight(gamma)).map(|c| c.weight())
}

/// Result of `θ_t` on a standard or costandard module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaFlag {
    /// Weights of the standard (or costandard) subquotients, bottom first.
    pub flag: Vec<Weight>,
    /// Head (standard case) or socle (costandard case) when nonzero.
    pub end: Option<Weight>,
}

/// `θ_t Δ(γ)`: the weights `μ` with `μ t γ` oriented, ordered so that larger
/// weights come first, and the head `ured(tγ̄)` when the module is nonzero.
pub fn theta_on_standard(t: &CrossinglessMatching, gamma: &Weight) -> ThetaFlag {
    let flag = oriented_middle_weights(t, gamma);
    let end = if flag.is_empty() { None } else { ured(t, &cap_from_weight(gamma)).map(|c| c.weight()) };
    ThetaFlag { flag, end }
}

/// `θ_t ∇(γ)`: the weights `μ` with `γ t^‡ μ` oriented, smaller weights
/// first, and the socle `lred(γ̲ t^‡)` when the module is nonzero.
pub fn theta_on_costandard(t: &CrossinglessMatching, gamma: &Weight) -> ThetaFlag {
    let flag = costandard_middle_weights(t, gamma);
    let end = if flag.is_empty() { None } else { lred(&cup_from_weight(gamma), &t.ddagger()).map(|c| c.weight()) };
    ThetaFlag { flag, end }
}

/// Result of `θ_t` on a simple module.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaSimple {
    /// Composition factors.
    pub class: GrothendieckClass,
    /// Whether the module is nonzero.
    pub nonzero: bool,
    /// Head when nonzero.
    pub head: Option<Weight>,
    /// Socle when nonzero.
    pub socle: Option<Weight>,
}

/// `θ_t L(λ)`: the class is the sum of `[L(μ)]` over all `μ` such that
/// `t^‡μ̄` has no circle and no line ending twice at the top, and reduces to
/// `λ̄`.
pub fn theta_on_simple(t: &CrossinglessMatching, lambda: &Weight) -> ThetaSimple {
    let td = t.ddagger();
    let target = cap_from_weight(lambda);
    let n = lambda.len();
    // Every cap end of a contributing μ̄ lies under an arc of t^‡ or is
    // carried by a through strand to a cap end of λ̄.
    let (mut lo, mut hi) = target.bounds().unwrap_or((0, 0));
    if let Some((a, b)) = td.bounds() {
        lo = lo.min(a);
        hi = hi.max(b);
    }
    let pad = 2;
    let class: GrothendieckClass = weights_in_window(n, lo - pad, hi + pad)
        .into_iter()
        .filter(|mu| ured_clean(&td, &cap_from_weight(mu)).as_ref() == Some(&target))
        .collect();
    let head = ured_clean(t, &target).filter(|c| ured_clean(&td, c).as_ref() == Some(&target)).map(|c| c.weight());
    let nonzero = head.is_some();
    let socle = if nonzero { lred(&cup_from_weight(lambda), &td).map(|c| c.weight()) } else { None };
    ThetaSimple { class, nonzero, head, socle }
}

/// Sum of the classes `[Δ(μ)]` (or `[∇(μ)]`) over a flag.
pub fn flag_class(kind: ModuleKind, flag: &[Weight]) -> Result<GrothendieckClass> {
    let mut c = GrothendieckClass::new();
    for mu in flag {
        c = c.add(&build(kind, mu)?.composition_factors());
    }
    Ok(c)
}
