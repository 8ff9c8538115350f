//! Component tracing through a stack `cup diagram | matchings | cap diagram`.
//!
//! Levels `0..=L` are the boundary lines of a stack with `L` matching layers;
//! level 0 carries the cups and level `L` the caps. Each node has a down slot
//! and an up slot, and every strand of the picture links two slots.

use crate::diagrams::{CapDiagram, ComponentReport, CupDiagram, Endpoint, Line};
use crate::matchings::CrossinglessMatching;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Link {
    Node { node: usize, up: bool },
    Bottom(i64),
    Top(i64),
}

/// Result of tracing a stack.
#[derive(Debug, Clone)]
pub(crate) struct Traced {
    pub(crate) report: ComponentReport,
    lo: i64,
    width: usize,
    levels: usize,
    /// Component index of every node; lines come first in `report.lines`
    /// order, then circles.
    comp: Vec<usize>,
}

impl Traced {
    /// Component containing position `pos` on level `level`, or `None` if the
    /// position lies outside the traced window (a straight vertical line).
    pub(crate) fn component_at(&self, level: usize, pos: i64) -> Option<usize> {
        if level >= self.levels || pos < self.lo || pos >= self.lo + self.width as i64 {
            return None;
        }
        Some(self.comp[level * self.width + (pos - self.lo) as usize])
    }
}

/// Traces `bottom`, then `layers` from bottom to top, then `top`.
pub(crate) fn trace_stack(bottom: &CupDiagram, layers: &[CrossinglessMatching], top: &CapDiagram) -> Traced {
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    let mut widen = |b: Option<(i64, i64)>| {
        if let Some((l, h)) = b {
            lo = lo.min(l);
            hi = hi.max(h);
        }
    };
    widen(bottom.bounds());
    widen(top.bounds());
    for m in layers {
        widen(m.bounds());
    }
    let levels = layers.len() + 1;
    if lo > hi {
        return Traced { report: ComponentReport::default(), lo: 0, width: 0, levels, comp: Vec::new() };
    }
    let width = (hi - lo + 1) as usize;
    let id = |level: usize, pos: i64| level * width + (pos - lo) as usize;
    let n = levels * width;
    // links[2*node + slot], slot 0 = down, slot 1 = up
    let mut links = vec![Link::Bottom(0); 2 * n];
    let set = |links: &mut Vec<Link>, a: usize, a_up: bool, b: usize, b_up: bool| {
        links[2 * a + a_up as usize] = Link::Node { node: b, up: b_up };
        links[2 * b + b_up as usize] = Link::Node { node: a, up: a_up };
    };
    for p in lo..=hi {
        let v = id(0, p);
        links[2 * v] = Link::Bottom(p);
        let w = id(levels - 1, p);
        links[2 * w + 1] = Link::Top(p);
    }
    for &(a, b) in bottom.arcs() {
        set(&mut links, id(0, a), false, id(0, b), false);
    }
    for &(a, b) in top.arcs() {
        set(&mut links, id(levels - 1, a), true, id(levels - 1, b), true);
    }
    for (j, m) in layers.iter().enumerate() {
        for &(a, b) in m.bottom_arcs() {
            set(&mut links, id(j, a), true, id(j, b), true);
        }
        for &(a, b) in m.top_arcs() {
            set(&mut links, id(j + 1, a), false, id(j + 1, b), false);
        }
        for (p, q) in m.throughs_in(lo, hi) {
            set(&mut links, id(j, p), true, id(j + 1, q), false);
        }
    }

    let unset = usize::MAX;
    let mut comp = vec![unset; n];
    let mut lines = Vec::new();
    let endpoint = |l: Link| match l {
        Link::Bottom(p) => Endpoint::Bottom { raw: p, redrawn: bottom.redraw_ray(p) },
        Link::Top(p) => Endpoint::Top { raw: p, redrawn: top.redraw_ray(p) },
        Link::Node { .. } => unreachable!("terminal expected"),
    };
    // Walk from every terminal.
    let mut starts = Vec::new();
    for p in lo..=hi {
        if links[2 * id(0, p)] == Link::Bottom(p) {
            starts.push((id(0, p), false, Link::Bottom(p)));
        }
        if links[2 * id(levels - 1, p) + 1] == Link::Top(p) {
            starts.push((id(levels - 1, p), true, Link::Top(p)));
        }
    }
    for (start, entered_up, term) in starts {
        if comp[start] != unset {
            continue;
        }
        let c = lines.len();
        let (mut node, mut up) = (start, entered_up);
        let end = loop {
            comp[node] = c;
            match links[2 * node + (!up) as usize] {
                Link::Node { node: nx, up: slot } => {
                    node = nx;
                    up = slot;
                }
                t => break t,
            }
        };
        lines.push(Line { ends: (endpoint(term), endpoint(end)) });
    }
    let mut next = lines.len();
    let mut circles = 0;
    for s in 0..n {
        if comp[s] != unset {
            continue;
        }
        circles += 1;
        let (mut node, mut up) = (s, false);
        while comp[node] == unset {
            comp[node] = next;
            match links[2 * node + (!up) as usize] {
                Link::Node { node: nx, up: slot } => {
                    node = nx;
                    up = slot;
                }
                _ => unreachable!("terminals are consumed by line walks"),
            }
        }
        next += 1;
    }
    Traced { report: ComponentReport { circles, lines }, lo, width, levels, comp }
}
