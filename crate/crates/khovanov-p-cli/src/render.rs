//! ASCII, TikZ and Graphviz renderings.
//!
//! An ASCII diagram has a label row with the half-integer positions, cap rows
//! above a baseline of `=` and cup rows below it. A cap is drawn `/---\` on
//! the row of its nesting level, a cup `\___/`, rays as `|`, and the dots of
//! an orientation as `*` on the baseline between two positions.
//! [`parse_ascii`] reads this format back.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use khovanov_p::applications::{PathRelation, Quiver};
use khovanov_p::modules::GrothendieckClass;
use khovanov_p::{HalfPos, StackedDiagram};

use crate::error::{CliError, CliResult};
use crate::json::DiagramJson;

/// Nesting level of each arc: 1 for an arc with nothing inside.
fn levels(arcs: &[(i64, i64)]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..arcs.len()).collect();
    order.sort_by_key(|&i| arcs[i].1 - arcs[i].0);
    let mut lv = vec![0; arcs.len()];
    for &i in &order {
        let (a, b) = arcs[i];
        let inner = arcs.iter().zip(&lv).filter(|((c, d), _)| a < *c && *d < b).map(|(_, l)| *l).max();
        lv[i] = inner.unwrap_or(0) + 1;
    }
    lv
}

/// Smallest window of codes showing every arc end, every dot and position 0.
pub fn window_for(d: &DiagramJson, dots: &[i64]) -> (i64, i64) {
    let ends = d.cups.iter().chain(&d.caps).flatten().flat_map(|&(a, b)| [a, b]);
    let dot_ends = dots.iter().flat_map(|&m| [m - 1, m]);
    let all: Vec<i64> = ends.chain(dot_ends).chain([0]).collect();
    (all.iter().min().copied().unwrap_or(0) - 1, all.iter().max().copied().unwrap_or(0) + 1)
}

struct Grid {
    lo: i64,
    hi: i64,
    cell: usize,
}

impl Grid {
    fn new(lo: i64, hi: i64) -> Self {
        let widest = (lo..=hi).map(|k| HalfPos::new(k).to_string().len()).max().unwrap_or(3);
        Grid { lo, hi, cell: (widest + 2).max(5) | 1 }
    }

    fn width(&self) -> usize {
        self.cell * (self.hi - self.lo + 1) as usize
    }

    fn x(&self, k: i64) -> usize {
        self.cell * (k - self.lo) as usize + self.cell / 2
    }

    fn labels(&self) -> String {
        (self.lo..=self.hi).map(|k| format!("{:^w$}", HalfPos::new(k).to_string(), w = self.cell)).collect()
    }

    fn arc_rows(&self, arcs: &[(i64, i64)], ends: (char, char, char)) -> Vec<String> {
        let lv = levels(arcs);
        let top = lv.iter().copied().max().unwrap_or(0).max(1);
        let is_end = |k: i64| arcs.iter().any(|&(a, b)| a == k || b == k);
        (1..=top)
            .map(|r| {
                let mut row = vec![' '; self.width()];
                for k in self.lo..=self.hi {
                    if !is_end(k) {
                        row[self.x(k)] = '|';
                    }
                }
                for (&(a, b), &l) in arcs.iter().zip(&lv) {
                    if l > r {
                        row[self.x(a)] = '|';
                        row[self.x(b)] = '|';
                    } else if l == r {
                        for c in &mut row[self.x(a)..=self.x(b)] {
                            *c = ends.1;
                        }
                        row[self.x(a)] = ends.0;
                        row[self.x(b)] = ends.2;
                    }
                }
                row.into_iter().collect::<String>().trim_end().to_string()
            })
            .collect()
    }

    fn baseline(&self, dots: &[i64]) -> String {
        let mut row = vec!['='; self.width()];
        for &m in dots {
            if m > self.lo && m <= self.hi {
                row[self.x(m) - self.cell / 2] = '*';
            }
        }
        row.into_iter().collect()
    }
}

/// ASCII drawing of `d` with the orientation dots `dots` on the window
/// `lo..=hi` of codes (or the smallest window showing everything).
pub fn ascii_diagram(d: &DiagramJson, dots: &[i64], window: Option<(i64, i64)>) -> String {
    let (lo, hi) = window.unwrap_or_else(|| window_for(d, dots));
    let g = Grid::new(lo, hi);
    let mut lines = vec![g.labels().trim_end().to_string()];
    if let Some(caps) = &d.caps {
        let mut rows = g.arc_rows(caps, ('/', '-', '\\'));
        rows.reverse();
        lines.extend(rows);
    }
    lines.push(g.baseline(dots));
    if let Some(cups) = &d.cups {
        lines.extend(g.arc_rows(cups, ('\\', '_', '/')));
    }
    lines.join("\n") + "\n"
}

fn parse_halfpos(s: &str) -> Option<i64> {
    let p: i64 = s.strip_suffix("/2")?.parse().ok()?;
    (p.rem_euclid(2) == 1).then_some((p - 1) / 2)
}

/// Reads a drawing produced by [`ascii_diagram`] back into the diagram and
/// its dots, listed from right to left as in [`khovanov_p::Weight::dots`].
pub fn parse_ascii(text: &str) -> CliResult<(DiagramJson, Vec<i64>)> {
    let bad = |m: String| CliError::Usage(format!("ASCII diagram: {m}"));
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    let header = lines.first().ok_or_else(|| bad("empty input".into()))?;
    let mut centers: Vec<(usize, i64)> = Vec::new();
    let chars: Vec<char> = header.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        if chars[i] == ' ' {
            i += 1;
            continue;
        }
        let start = i;
        while i < chars.len() && chars[i] != ' ' {
            i += 1;
        }
        let tok: String = chars[start..i].iter().collect();
        let code = parse_halfpos(&tok).ok_or_else(|| bad(format!("bad position label `{tok}`")))?;
        centers.push(((start + i - 1) / 2, code));
    }
    let code_at = |col: usize| -> i64 {
        centers.iter().min_by_key(|(c, _)| c.abs_diff(col)).map(|&(_, k)| k).expect("labels are nonempty")
    };
    let base = lines.iter().position(|l| l.starts_with('=')).ok_or_else(|| bad("no baseline".into()))?;
    let scan = |rows: &[&str], open: char, fill: char, close: char| -> CliResult<Vec<(i64, i64)>> {
        let mut arcs = Vec::new();
        for row in rows {
            let cs: Vec<char> = row.chars().collect();
            let mut j = 0;
            while j < cs.len() {
                if cs[j] == open {
                    let end = (j + 1..cs.len()).find(|&t| cs[t] != fill).filter(|&t| cs[t] == close);
                    let end = end.ok_or_else(|| bad(format!("unterminated arc in `{row}`")))?;
                    arcs.push((code_at(j), code_at(end)));
                    j = end;
                }
                j += 1;
            }
        }
        arcs.sort();
        Ok(arcs)
    };
    let cap_rows = &lines[1..base];
    let cup_rows = &lines[base + 1..];
    let caps = if cap_rows.is_empty() { None } else { Some(scan(cap_rows, '/', '-', '\\')?) };
    let cups = if cup_rows.is_empty() { None } else { Some(scan(cup_rows, '\\', '_', '/')?) };
    let mut dots = lines[base]
        .char_indices()
        .filter(|&(_, c)| c == '*')
        .map(|(col, _)| {
            centers.iter().find(|(c, _)| *c > col).map(|&(_, k)| k).ok_or_else(|| bad("dot past the last label".into()))
        })
        .collect::<CliResult<Vec<i64>>>()?;
    dots.reverse();
    Ok((DiagramJson { cups, caps }, dots))
}

/// TikZ picture of `d`: cups below the line, caps above, dots as bullets.
pub fn tikz_diagram(d: &DiagramJson, dots: &[i64]) -> String {
    let (lo, hi) = window_for(d, dots);
    let x = |k: i64| k as f64 + 0.5;
    let step = 0.7;
    let mut s = String::from("\\begin{tikzpicture}[scale=0.6]\n");
    let _ = writeln!(s, "  \\draw[gray] ({}, 0) -- ({}, 0);", x(lo) - 0.5, x(hi) + 0.5);
    let mut part = |arcs: &[(i64, i64)], sign: f64| {
        let lv = levels(arcs);
        let ray = step * (lv.iter().copied().max().unwrap_or(0) + 1) as f64 * sign;
        for k in lo..=hi {
            if !arcs.iter().any(|&(a, b)| a == k || b == k) {
                let _ = writeln!(s, "  \\draw ({}, 0) -- ({}, {ray});", x(k), x(k));
            }
        }
        for (&(a, b), &l) in arcs.iter().zip(&lv) {
            let h = step * l as f64 * sign;
            let _ = writeln!(
                s,
                "  \\draw ({xa}, 0) .. controls ({xa}, {h}) and ({xb}, {h}) .. ({xb}, 0);",
                xa = x(a),
                xb = x(b)
            );
        }
    };
    if let Some(cups) = &d.cups {
        part(cups, -1.0);
    }
    if let Some(caps) = &d.caps {
        part(caps, 1.0);
    }
    for &m in dots {
        let _ = writeln!(s, "  \\fill ({m}, 0) circle (3pt);");
    }
    for k in lo..=hi {
        let _ = writeln!(
            s,
            "  \\node[font=\\tiny, anchor=north west] at ({}, 0) {{$\\frac{{{}}}{{2}}$}};",
            x(k),
            2 * k + 1
        );
    }
    s.push_str("\\end{tikzpicture}\n");
    s
}

/// ASCII drawing of a stacked diagram: the cap diagram, the middle layers
/// from top to bottom, then the cup diagram, on a common window.
pub fn ascii_stack(st: &StackedDiagram) -> String {
    let all = DiagramJson { cups: Some(st.bottom.arcs().to_vec()), caps: Some(st.top.arcs().to_vec()) };
    let (mut lo, mut hi) = window_for(&all, &[]);
    for m in &st.layers {
        if let Some((a, b)) = m.bounds() {
            lo = lo.min(a - 1);
            hi = hi.max(b + 1);
        }
    }
    let mut out = ascii_diagram(&DiagramJson { cups: None, caps: all.caps }, &[], Some((lo, hi)));
    for m in st.layers.iter().rev() {
        let _ = writeln!(out, "  [layer: upper arcs {:?}, lower arcs {:?}]", m.top_arcs(), m.bottom_arcs());
    }
    let cups = ascii_diagram(&DiagramJson { cups: all.cups, caps: None }, &[], Some((lo, hi)));
    out.push_str(cups.split_once('\n').map_or("", |(_, rest)| rest));
    out
}

/// One line per layer, top first.
pub fn ascii_layers(title: &str, layers: &[GrothendieckClass]) -> String {
    let mut s = format!("{title}:\n");
    for (i, l) in layers.iter().enumerate() {
        let _ = writeln!(s, "  {i}: {l}");
    }
    s
}

/// TikZ picture of a filtration: one row of simple modules per layer.
pub fn tikz_layers(layers: &[GrothendieckClass]) -> String {
    let mut s = String::from("\\begin{tikzpicture}[yscale=-1]\n");
    for (i, l) in layers.iter().enumerate() {
        for (j, (w, m)) in l.entries().iter().enumerate() {
            let mult = if *m > 1 { format!("{m}") } else { String::new() };
            let _ = writeln!(s, "  \\node at ({}, {i}) {{${mult}L{w}$}};", 2.5 * j as f64);
        }
    }
    s.push_str("\\end{tikzpicture}\n");
    s
}

fn path_str(p: &[khovanov_p::Weight]) -> String {
    p.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" -> ")
}

fn relation_str(r: &PathRelation) -> String {
    match r {
        PathRelation::Zero => "0".to_string(),
        PathRelation::Free => "free".to_string(),
        PathRelation::Equals(others) => {
            others.iter().map(|p| format!("[{}]", path_str(p))).collect::<Vec<_>>().join(" = ")
        }
    }
}

/// Plain-text listing of a quiver and its path relations.
pub fn ascii_quiver(q: &Quiver) -> String {
    let mut s = format!("vertices ({}):\n", q.nodes.len());
    for v in &q.nodes {
        let _ = writeln!(s, "  {v}");
    }
    let _ = writeln!(s, "arrows ({}):", q.arrows.len());
    for a in &q.arrows {
        let _ = writeln!(s, "  {} -> {}", a.from, a.to);
    }
    let _ = writeln!(s, "relations ({}):", q.relations.len());
    for r in &q.relations {
        let _ = writeln!(s, "  [{}] = {}", path_str(&r.path), relation_str(&r.relation));
    }
    s
}

/// Graphviz form of a quiver; relations are listed as comments.
pub fn dot_quiver(q: &Quiver) -> String {
    let mut s = String::from("digraph quiver {\n");
    for v in &q.nodes {
        let _ = writeln!(s, "  \"{v}\";");
    }
    for a in &q.arrows {
        let _ = writeln!(s, "  \"{}\" -> \"{}\";", a.from, a.to);
    }
    for r in &q.relations {
        let _ = writeln!(s, "  // [{}] = {}", path_str(&r.path), relation_str(&r.relation));
    }
    s.push_str("}\n");
    s
}

/// TikZ picture of a quiver: vertices in columns by entry sum.
pub fn tikz_quiver(q: &Quiver) -> String {
    let mut column: BTreeMap<i64, usize> = BTreeMap::new();
    let mut s = String::from("\\begin{tikzpicture}[scale=1.4, >=stealth]\n");
    let mut names = BTreeMap::new();
    for (i, v) in q.nodes.iter().enumerate() {
        let c = v.entry_sum();
        let row = column.entry(c).or_default();
        let _ = writeln!(s, "  \\node (v{i}) at ({c}, {}) {{${v}$}};", -(*row as i64));
        *row += 1;
        names.insert(v.clone(), i);
    }
    for a in &q.arrows {
        let _ = writeln!(s, "  \\draw[->] (v{}) -- (v{});", names[&a.from], names[&a.to]);
    }
    s.push_str("\\end{tikzpicture}\n");
    s
}
