//! Consequences of the module structure: primitivity of circle diagrams and
//! `Ext¹` between simples, duals of simples, the irreducible summands of
//! tensor powers, Ext-quivers and the comparison of radical and socle
//! filtrations.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::algebra::{compatible_weights, multiply, star_weight, Mode};
use crate::diagrams::{block_signature, weights_in_window, Arcs, CapDiagram, CircleDiagram, Weight};
use crate::error::{Error, Result};
use crate::matchings::CrossinglessMatching;
use crate::modules::{build_projective, radical_filtration, socle_filtration, theta_on_simple, GrothendieckClass};
use crate::orientation::{is_delta_orientation, is_nabla_orientation};

/// Which primitivity conditions a circle diagram `μ̲λ̄` with `μ ≠ λ` meets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Primitivity {
    /// Only the Δ-conditions hold.
    DeltaPrimitive,
    /// Only the ∇-conditions hold.
    NablaPrimitive,
    /// Both hold.
    Both,
    /// Neither holds.
    No,
}

impl Primitivity {
    /// True unless the diagram is not primitive.
    pub fn is_primitive(self) -> bool {
        self != Primitivity::No
    }
}

fn check_ext_operand(d: &CircleDiagram) -> Result<usize> {
    let n = d.bottom.len();
    if !Mode::Kn(n).admits(d) {
        return Err(Error::NotOrientable(d.to_string()));
    }
    if d.is_idempotent() {
        return Err(Error::Precondition(format!("{d} is an idempotent")));
    }
    Ok(n)
}

/// Δ-primitivity of `μ̲λ̄`: `μ` is a Δ-orientation of `λ̄` moving exactly one
/// cap's dot away from its rightmost slot, and that dot is neither left of
/// two nested caps nor left of a nested cap while another cap sits directly
/// to the left of the moved one.
fn delta_primitive(mu: &Weight, top: &CapDiagram) -> bool {
    if !is_delta_orientation(top, mu) {
        return false;
    }
    let caps: &Arcs = &top.arcs;
    let dots: BTreeSet<i64> = mu.dots().into_iter().collect();
    let mut moved = Vec::new();
    for &(a, b) in caps.list() {
        let own = caps.own_region(a, b);
        let dot = *own.iter().find(|m| dots.contains(m)).expect("Δ-orientation has a dot per cap");
        if dot != b {
            moved.push((a, b, dot));
        }
    }
    let [(a, b, dot)] = moved[..] else {
        return false;
    };
    let right_children = caps.children(a, b).iter().filter(|&&(l, _)| l >= dot).count();
    if right_children >= 2 {
        return false;
    }
    let left_neighbour = caps.partner(a - 1).is_some_and(|l| l < a - 1);
    !(right_children >= 1 && left_neighbour)
}

/// ∇-primitivity of `μ̲λ̄`: `λ` is a ∇-orientation of `μ̲` in which at most
/// one cup takes its left dot, and that cup does not sit directly inside an
/// outermost cup.
fn nabla_primitive(lambda: &Weight, d: &CircleDiagram) -> bool {
    if !is_nabla_orientation(&d.bottom, lambda) {
        return false;
    }
    let cups: &Arcs = &d.bottom.arcs;
    let dots: BTreeSet<i64> = lambda.dots().into_iter().collect();
    // Every assignment of distinct adjacent dots to the cups.
    let mut ok = false;
    let list = cups.list();
    let mut chosen: Vec<bool> = Vec::with_capacity(list.len());
    fn rec(
        i: usize,
        list: &[(i64, i64)],
        dots: &BTreeSet<i64>,
        used: &mut BTreeSet<i64>,
        chosen: &mut Vec<bool>,
        f: &mut dyn FnMut(&[bool]),
    ) {
        if i == list.len() {
            f(chosen);
            return;
        }
        let (a, b) = list[i];
        for (left, m) in [(true, a), (false, b + 1)] {
            if dots.contains(&m) && used.insert(m) {
                chosen.push(left);
                rec(i + 1, list, dots, used, chosen, f);
                chosen.pop();
                used.remove(&m);
            }
        }
    }
    rec(0, list, &dots, &mut BTreeSet::new(), &mut chosen, &mut |lefts| {
        let moved: Vec<(i64, i64)> = list.iter().zip(lefts).filter(|(_, &l)| l).map(|(&c, _)| c).collect();
        let good = match moved[..] {
            [] => true,
            [(a, b)] => !cups.parent(a, b).is_some_and(|(pa, pb)| cups.parent(pa, pb).is_none()),
            _ => false,
        };
        ok |= good;
    });
    ok
}

/// Classifies an orientable `K_n` diagram `μ̲λ̄` with `μ ≠ λ`.
pub fn is_primitive(d: &CircleDiagram) -> Result<Primitivity> {
    check_ext_operand(d)?;
    let (mu, lambda) = (d.cup_weight(), d.cap_weight());
    let delta = delta_primitive(&mu, &d.top);
    let nabla = nabla_primitive(&lambda, d);
    Ok(match (delta, nabla) {
        (true, true) => Primitivity::Both,
        (true, false) => Primitivity::DeltaPrimitive,
        (false, true) => Primitivity::NablaPrimitive,
        (false, false) => Primitivity::No,
    })
}

/// True if `d = μ̲λ̄` admits no factorization `μ̲κ̄ · κ̲λ̄` through a weight
/// `κ ∉ {μ, λ}`.
pub fn nonsplittable_oracle(d: &CircleDiagram) -> Result<bool> {
    let n = check_ext_operand(d)?;
    let mode = Mode::Kn(n);
    let (mu, lambda) = (d.cup_weight(), d.cap_weight());
    for kappa in compatible_weights(&lambda, mode) {
        if kappa == mu || kappa == lambda {
            continue;
        }
        let left = CircleDiagram::from_weights(&mu, &kappa);
        if !mode.admits(&left) {
            continue;
        }
        let right = CircleDiagram::from_weights(&kappa, &lambda);
        if multiply(&left, &right, mode)?.as_ref() == Some(d) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `dim Ext¹(L(λ), L(μ))`: 1 if `μ̲λ̄` is an orientable primitive diagram
/// with `μ ≠ λ`, else 0.
pub fn ext1_dim(lambda: &Weight, mu: &Weight) -> Result<usize> {
    if lambda.len() != mu.len() {
        return Err(Error::Precondition(format!("{lambda} and {mu} have different lengths")));
    }
    let d = CircleDiagram::from_weights(mu, lambda);
    if lambda == mu || !Mode::Kn(lambda.len()).admits(&d) {
        return Ok(0);
    }
    Ok(is_primitive(&d)?.is_primitive() as usize)
}

/// The class of `rad P(λ) / rad² P(λ)`.
pub fn radical_head(lambda: &Weight) -> Result<GrothendieckClass> {
    let layers = radical_filtration(&build_projective(lambda)?)?;
    Ok(layers.get(1).cloned().unwrap_or_default())
}

/// Multiplicity of `L(μ)` in `rad P(λ) / rad² P(λ)`.
pub fn radical_head_multiplicity(lambda: &Weight, mu: &Weight) -> Result<usize> {
    Ok(radical_head(lambda)?.multiplicity(mu))
}

/// Highest weight of `L(λ)^*` by rotating `λ̄` about `1/2`.
pub fn simple_dual_rotation(lambda: &Weight) -> Weight {
    star_weight(lambda)
}

/// Highest weight of `L(λ)^*` by the iterative pair procedure: for the pairs
/// `(i, j)`, `i < j`, in lexicographic order, raise `λ_i` and `λ_j` by one
/// when both can be raised without meeting their left neighbour, then
/// reflect every entry at `(n - 1)/2`.
pub fn simple_dual_iterative(lambda: &Weight) -> Weight {
    let mut v = lambda.entries().to_vec();
    let n = v.len();
    let free = |v: &[i64], k: usize| k == 0 || v[k - 1] - v[k] > 1;
    for i in 0..n {
        for j in i + 1..n {
            if free(&v, i) && free(&v, j) {
                v[i] += 1;
                v[j] += 1;
            }
        }
    }
    let reflected = v.iter().map(|&x| n as i64 - 1 - x).collect();
    Weight::from_unsorted(reflected).expect("reflection keeps entries distinct")
}

/// Highest weight of `L(λ)^*`; checks that both procedures agree.
pub fn simple_dual(lambda: &Weight) -> Result<Weight> {
    let a = simple_dual_rotation(lambda);
    let b = simple_dual_iterative(lambda);
    if a != b {
        return Err(Error::Invariant(format!("dual of {lambda}: rotation {a}, iteration {b}")));
    }
    Ok(a)
}

/// The weights `(n-1, n-2, …, k, k-2, …, -k)` for `k = 0, …, n-1`.
pub fn irreducible_summand_weights(n: usize) -> Vec<Weight> {
    (0..n as i64)
        .map(|k| {
            let n = n as i64;
            let high = (k..n).rev();
            let low = (1..=k).map(|j| k - 2 * j);
            Weight::new(high.chain(low).collect()).expect("entries decrease")
        })
        .collect()
}

/// The matching whose `‡` has `k` side-by-side arcs on its upper boundary and
/// `k` nested arcs on its lower boundary, the innermost ending at `3/2`.
pub fn summand_matching(k: usize) -> CrossinglessMatching {
    let k = k as i64;
    let nested: Vec<(i64, i64)> = (1..=k).map(|j| (1 - j, j)).collect();
    let side: Vec<(i64, i64)> = (0..k).map(|i| (1 - k + 2 * i, 2 - k + 2 * i)).collect();
    // t^‡ = (nested, side) with ‡ swapping the boundaries and shifting by one.
    let shift = |v: &[(i64, i64)]| v.iter().map(|&(a, b)| (a - 1, b - 1)).collect::<Vec<_>>();
    CrossinglessMatching::new(shift(&side), shift(&nested)).expect("arcs are planar")
}

/// The irreducible summands found by applying `θ_t` for the matchings of
/// [`summand_matching`] to the trivial module `L(n-1, …, 0)` and keeping the
/// nonzero results with a single composition factor.
pub fn irreducible_summands_by_matchings(n: usize) -> Vec<Weight> {
    let trivial = Weight::new((0..n as i64).rev().collect()).expect("entries decrease");
    let mut out = Vec::new();
    for k in 0..=n + 1 {
        let r = theta_on_simple(&summand_matching(k), &trivial);
        if r.nonzero && r.class.total() == 1 {
            out.extend(r.class.weights());
        }
    }
    out.sort_by_key(|w| std::cmp::Reverse(w.order_key()));
    out
}

/// An arrow `λ → μ` of the Ext-quiver, given by the diagram `μ̲λ̄`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    /// Source.
    pub from: Weight,
    /// Target.
    pub to: Weight,
}

/// What the composite along a path is in the algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum PathRelation {
    /// The product vanishes.
    Zero,
    /// The product equals the products along these other paths with the
    /// same ends, of length two or three.
    Equals(Vec<Vec<Weight>>),
    /// The product is nonzero and no other path gives it.
    Free,
}

/// Composite along a path of two or three arrows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathReport {
    /// Vertices of the path, in order.
    pub path: Vec<Weight>,
    /// The relation the composite satisfies.
    pub relation: PathRelation,
}

/// The Ext-quiver of a window of a block.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quiver {
    /// Vertices, largest first.
    pub nodes: Vec<Weight>,
    /// Arrows with one-dimensional `Ext¹`.
    pub arrows: Vec<Arrow>,
    /// Composites of all paths of length two and three.
    pub relations: Vec<PathReport>,
}

/// Product of the arrow diagrams along `path`; the arrow `λ → μ` is `μ̲λ̄`.
fn path_product(path: &[Weight], mode: Mode) -> Result<Option<CircleDiagram>> {
    let mut acc = CircleDiagram::from_weights(&path[1], &path[0]);
    for w in path.windows(2).skip(1) {
        match multiply(&CircleDiagram::from_weights(&w[1], &w[0]), &acc, mode)? {
            Some(d) => acc = d,
            None => return Ok(None),
        }
    }
    Ok(Some(acc))
}

/// The Ext-quiver on the weights of `K_n` with entries in `[lo, hi]` and, if
/// given, `block` odd entries.
pub fn build_quiver(n: usize, block: Option<usize>, lo: i64, hi: i64) -> Result<Quiver> {
    let mode = Mode::Kn(n);
    let mut nodes: Vec<Weight> =
        weights_in_window(n, lo, hi).into_iter().filter(|w| block.map_or(true, |b| block_signature(w) == b)).collect();
    nodes.sort_by_key(|w| w.order_key());
    let mut arrows = Vec::new();
    for from in &nodes {
        for to in &nodes {
            if ext1_dim(from, to)? == 1 {
                arrows.push(Arrow { from: from.clone(), to: to.clone() });
            }
        }
    }
    let mut paths: Vec<Vec<Weight>> = arrows.iter().map(|a| vec![a.from.clone(), a.to.clone()]).collect();
    let mut products = Vec::new();
    for _ in 0..2 {
        paths = paths
            .iter()
            .flat_map(|p| {
                let last = p.last().expect("paths are nonempty").clone();
                arrows.iter().filter(move |a| a.from == last).map(move |a| {
                    let mut q = p.clone();
                    q.push(a.to.clone());
                    q
                })
            })
            .collect();
        for p in &paths {
            products.push((p.clone(), path_product(p, mode)?));
        }
    }
    let relations = products
        .iter()
        .map(|(path, prod)| {
            let relation = match prod {
                None => PathRelation::Zero,
                Some(d) => {
                    let others: Vec<Vec<Weight>> = products
                        .iter()
                        .filter(|(q, r)| q != path && r.as_ref() == Some(d))
                        .map(|(q, _)| q.clone())
                        .collect();
                    if others.is_empty() {
                        PathRelation::Free
                    } else {
                        PathRelation::Equals(others)
                    }
                }
            };
            PathReport { path: path.clone(), relation }
        })
        .collect();
    Ok(Quiver { nodes, arrows, relations })
}

/// Radical and socle layers of `P(λ)` and whether they agree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulityReport {
    /// Radical layers, head first.
    pub radical_layers: Vec<GrothendieckClass>,
    /// Socle layers, top first.
    pub socle_layers: Vec<GrothendieckClass>,
    /// Whether the two filtrations have the same layers.
    pub agree: bool,
}

/// Compares the radical and socle filtrations of `P(λ)`.
pub fn koszulity_report(lambda: &Weight) -> Result<KoszulityReport> {
    let p = build_projective(lambda)?;
    let radical_layers = radical_filtration(&p)?;
    let socle_layers = socle_filtration(&p)?;
    let agree = radical_layers == socle_layers;
    Ok(KoszulityReport { radical_layers, socle_layers, agree })
}
