//! Dot orientations: Δ-orientations of cap diagrams, ∇-orientations of cup
//! diagrams, the unique orientation of an orientable circle diagram, and the
//! sets `X(λ)`, `Y(λ)` of the triangular basis.
//!
//! A dot at the integer `m` sits at real position `m`, between the codes
//! `m - 1` and `m`; the weight of a dot set has entries `m - 1`.

use std::collections::BTreeSet;

use crate::diagrams::{
    cap_from_weight, cup_from_weight, weights_in_window, Arcs, CapDiagram, CircleDiagram, CupDiagram, Weight,
};
use crate::error::{Error, Result};

/// A weight together with the circle diagram it orients.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrientedCircleDiagram {
    /// The underlying diagram.
    pub diagram: CircleDiagram,
    /// The orientation.
    pub orientation: Weight,
}

fn delta_valid(caps: &Arcs, dots: &BTreeSet<i64>) -> bool {
    dots.len() == caps.len()
        && caps.list().iter().all(|&(a, b)| caps.own_region(a, b).iter().filter(|m| dots.contains(m)).count() == 1)
}

fn nabla_valid(cups: &Arcs, dots: &BTreeSet<i64>) -> bool {
    dots.len() == cups.len() && !crate::matchings::adjacent_assignments(cups.list(), dots).is_empty()
}

/// True if `w` is a Δ-orientation of `c`: one dot per cap, lying inside that
/// cap and inside none of the caps nested in it.
pub fn is_delta_orientation(c: &CapDiagram, w: &Weight) -> bool {
    delta_valid(&c.arcs, &w.dots().into_iter().collect())
}

/// True if `w` is a ∇-orientation of `c`: distinct dots, one per cup `(a, b)`,
/// each at `a` or `b + 1`.
pub fn is_nabla_orientation(c: &CupDiagram, w: &Weight) -> bool {
    nabla_valid(&c.arcs, &w.dots().into_iter().collect())
}

/// All Δ-orientations of `c`, sorted from largest to smallest weight.
pub fn delta_orientations(c: &CapDiagram) -> Vec<Weight> {
    let regions: Vec<Vec<i64>> = c.arcs().iter().map(|&(a, b)| c.arcs.own_region(a, b)).collect();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(regions.len());
    fn rec(regions: &[Vec<i64>], cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if cur.len() == regions.len() {
            out.push(Weight::from_dots(cur.iter().copied()).expect("own regions are disjoint"));
            return;
        }
        for &m in &regions[cur.len()] {
            cur.push(m);
            rec(regions, cur, out);
            cur.pop();
        }
    }
    rec(&regions, &mut cur, &mut out);
    sort_weights(&mut out);
    out
}

/// All ∇-orientations of `c`, sorted from largest to smallest weight.
pub fn nabla_orientations(c: &CupDiagram) -> Vec<Weight> {
    let arcs = c.arcs();
    let mut out = BTreeSet::new();
    let mut used = BTreeSet::new();
    fn rec(i: usize, arcs: &[(i64, i64)], used: &mut BTreeSet<i64>, out: &mut BTreeSet<Weight>) {
        if i == arcs.len() {
            out.insert(Weight::from_dots(used.iter().copied()).expect("dots are distinct"));
            return;
        }
        let (a, b) = arcs[i];
        for d in [a, b + 1] {
            if used.insert(d) {
                rec(i + 1, arcs, used, out);
                used.remove(&d);
            }
        }
    }
    rec(0, arcs, &mut used, &mut out);
    let mut v: Vec<Weight> = out.into_iter().collect();
    sort_weights(&mut v);
    v
}

/// Sorts weights so that larger weights come first; ties are broken
/// lexicographically so the order is total and deterministic.
pub fn sort_weights(v: &mut [Weight]) {
    v.sort_by_key(|w| w.order_key());
}

/// Orientation by brute force: the intersection of the Δ-orientations of the
/// top and the ∇-orientations of the bottom.
pub fn orientations_brute(d: &CircleDiagram) -> Vec<Weight> {
    if d.bottom.len() != d.top.len() {
        return Vec::new();
    }
    delta_orientations(&d.top).into_iter().filter(|w| is_nabla_orientation(&d.bottom, w)).collect()
}

/// The unique orientation of `d`, or `None` if `d` admits none.
///
/// Works by repeatedly removing the leftmost cap without nested caps: its dot
/// is forced, and the cups meeting its ends are rejoined to give a smaller
/// diagram.
pub fn orientation_of(d: &CircleDiagram) -> Option<Weight> {
    let dots = orient_rec(d.bottom.arcs().to_vec(), d.top.arcs().to_vec())?;
    Weight::from_dots(dots).ok()
}

fn valid_pair(cups: &[(i64, i64)], caps: &[(i64, i64)], dots: &[i64]) -> bool {
    let (Ok(cu), Ok(ca)) = (Arcs::new(cups.to_vec()), Arcs::new(caps.to_vec())) else {
        return false;
    };
    let set: BTreeSet<i64> = dots.iter().copied().collect();
    set.len() == dots.len() && delta_valid(&ca, &set) && nabla_valid(&cu, &set)
}

fn orient_rec(cups: Vec<(i64, i64)>, caps: Vec<(i64, i64)>) -> Option<Vec<i64>> {
    if cups.len() != caps.len() {
        return None;
    }
    if caps.is_empty() {
        return Some(Vec::new());
    }
    let a = caps.iter().filter(|&&(l, r)| r == l + 1).map(|&(l, _)| l).min()?;
    let cup_at = |p: i64| cups.iter().copied().find(|&(l, r)| l == p || r == p);
    let left = cup_at(a);
    let right = cup_at(a + 1);
    let mut rest: Vec<(i64, i64)> = cups.iter().copied().filter(|&c| Some(c) != left && Some(c) != right).collect();
    match (left, right) {
        (Some((x, ra)), Some((la1, y))) if ra == a && la1 == a + 1 => rest.push((x, y)),
        (Some((x, ra)), other) if ra == a => {
            // The strand entering at a + 1 from below now ends at x.
            match other {
                Some((z, r)) if r == a + 1 => rest.push((z.min(x), z.max(x))),
                None => {}
                Some(_) => return None,
            }
        }
        (other, Some((la1, y))) if la1 == a + 1 => match other {
            Some((l, w)) if l == a => rest.push((y.min(w), y.max(w))),
            None => {}
            Some(_) => return None,
        },
        _ => return None,
    }
    let shift = |p: i64| if p >= a + 2 { p - 2 } else { p };
    let cups2: Vec<(i64, i64)> = rest.iter().map(|&(l, r)| (shift(l), shift(r))).collect();
    let caps2: Vec<(i64, i64)> =
        caps.iter().copied().filter(|&(l, _)| l != a).map(|(l, r)| (shift(l), shift(r))).collect();
    let sub = orient_rec(cups2, caps2)?;
    // Lift the dots back; a dot at a may come from a or from a + 2.
    let mut choices: Vec<Vec<i64>> = vec![Vec::new()];
    for &m in &sub {
        let lifts: Vec<i64> = if m < a {
            vec![m]
        } else if m > a {
            vec![m + 2]
        } else {
            vec![a, a + 2]
        };
        choices = choices
            .into_iter()
            .flat_map(|c| {
                lifts.iter().map(move |&l| {
                    let mut c2 = c.clone();
                    c2.push(l);
                    c2
                })
            })
            .collect();
    }
    choices
        .into_iter()
        .map(|mut c| {
            c.push(a + 1);
            c
        })
        .find(|c| valid_pair(&cups, &caps, c))
}

/// `Y(λ)`: the diagrams `μ̲λλ̄` such that `λ` is a ∇-orientation of `μ̲`.
pub fn y_set(lambda: &Weight) -> Vec<OrientedCircleDiagram> {
    y_weights(lambda)
        .into_iter()
        .map(|mu| OrientedCircleDiagram {
            diagram: CircleDiagram::from_weights(&mu, lambda),
            orientation: lambda.clone(),
        })
        .collect()
}

/// `X(λ)`: the diagrams `λ̲λμ̄` such that `λ` is a Δ-orientation of `μ̄`.
pub fn x_set(lambda: &Weight) -> Vec<OrientedCircleDiagram> {
    x_weights(lambda)
        .into_iter()
        .map(|mu| OrientedCircleDiagram {
            diagram: CircleDiagram::from_weights(lambda, &mu),
            orientation: lambda.clone(),
        })
        .collect()
}

fn dot_span(nu: &Weight) -> (i64, i64) {
    let d = nu.dots();
    (d.last().copied().unwrap_or(0), d.first().copied().unwrap_or(0))
}

/// Weights `μ` such that `ν` is a ∇-orientation of `μ̲`, largest first.
pub fn y_weights(nu: &Weight) -> Vec<Weight> {
    let n = nu.len();
    let (lo, hi) = dot_span(nu);
    let mut v: Vec<Weight> = weights_in_window(n, lo - 1, hi + 2 * n as i64 - 1)
        .into_iter()
        .filter(|mu| is_nabla_orientation(&cup_from_weight(mu), nu))
        .collect();
    sort_weights(&mut v);
    v
}

/// Weights `μ` such that `ν` is a Δ-orientation of `μ̄`, largest first.
pub fn x_weights(nu: &Weight) -> Vec<Weight> {
    let n = nu.len();
    let (lo, hi) = dot_span(nu);
    let mut v: Vec<Weight> = weights_in_window(n, lo - 2 * n as i64 - 1, hi + 2 * n as i64)
        .into_iter()
        .filter(|mu| is_delta_orientation(&cap_from_weight(mu), nu))
        .collect();
    sort_weights(&mut v);
    v
}

/// Splits an orientable `λ̲μ̄` with orientation `ν` as `(λ̲ν̄, ν̲μ̄)`.
pub fn triangular_factor(d: &CircleDiagram) -> Result<(CircleDiagram, CircleDiagram)> {
    let nu = orientation_of(d).ok_or_else(|| Error::NotOrientable(d.to_string()))?;
    Ok((
        CircleDiagram::new(d.bottom.clone(), cap_from_weight(&nu)),
        CircleDiagram::new(cup_from_weight(&nu), d.top.clone()),
    ))
}

/// The Δ-flag of `P(λ)`: each weight `ν` that is a Δ-orientation of `λ̄`,
/// largest first.
pub fn delta_flag(lambda: &Weight) -> Vec<Weight> {
    delta_orientations(&cap_from_weight(lambda))
}
