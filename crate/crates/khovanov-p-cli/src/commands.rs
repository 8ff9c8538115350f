//! Argument definitions and the implementation of every command.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use khovanov_p::acceptance::{run_all, run_criterion, DEFAULT_SEED};
use khovanov_p::algebra::{compatible_weights, hom_dim, multiply_traced};
use khovanov_p::applications::{build_quiver, ext1_dim, is_primitive, koszulity_report, simple_dual};
use khovanov_p::diagrams::{cap_from_weight, cup_from_weight, is_orientable_k, is_orientable_kn, weights_in_window};
use khovanov_p::matchings::{special_matching, stacked_orientable, stacked_orientation, MatchingJson};
use khovanov_p::modules::{
    build, radical_filtration, socle_filtration, theta_on_costandard, theta_on_projective, theta_on_simple,
    theta_on_standard, GrothendieckClass, ModuleKind,
};
use khovanov_p::orientation::{delta_flag, orientation_of, orientations_brute};
use khovanov_p::tableaux::{
    count_udt_by_shape, enumerate_udt, is_up_tableau_residue_seq, reduce_residue_seq, residue_seq,
    seq_realizable_empty_shape, tableaux_with_residues, Partition, ResidueFlavor,
};
use khovanov_p::{CircleDiagram, CrossinglessMatching, Mode, StackedDiagram, Weight};
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::{parse_ints, parse_parts, parse_weight, Format, ModeArg, RunConfig, Window};
use crate::error::{CliError, CliResult};
use crate::json::{read_diagram, DiagramJson};
use crate::render;

/// Command-line interface of `khp`.
#[derive(Debug, Parser)]
#[command(name = "khp", version, about = "Computations in the Khovanov algebra of type P")]
pub struct Cli {
    /// Settings shared by all commands.
    #[command(flatten)]
    pub global: GlobalArgs,
    /// What to compute.
    #[command(subcommand)]
    pub command: Command,
}

/// Flags accepted by every command.
#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Rank n (number of cups).
    #[arg(short = 'n', long = "rank", global = true)]
    pub n: Option<usize>,
    /// Algebra to compute in.
    #[arg(long, value_enum, default_value_t = ModeArg::Kn, global = true)]
    pub mode: ModeArg,
    /// Range of weight entries, `lo..hi`.
    #[arg(long, env = "KHP_WINDOW", default_value = "-4..5", allow_hyphen_values = true, global = true)]
    pub window: Window,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Ascii, global = true)]
    pub format: Format,
    /// Seed of randomized checks.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    pub seed: u64,
}

impl GlobalArgs {
    /// The run configuration.
    pub fn config(&self) -> RunConfig {
        RunConfig { n: self.n, mode: self.mode, window: self.window, output: self.format, seed: self.seed }
    }
}

/// Module family for `theta` and `proj-structure`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    /// Indecomposable projective `P(λ)`.
    Projective,
    /// Standard module `Δ(λ)`.
    Standard,
    /// Costandard module `∇(λ)`.
    Costandard,
    /// Simple module `L(λ)`.
    Simple,
}

impl From<KindArg> for ModuleKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Projective => ModuleKind::Projective,
            KindArg::Standard => ModuleKind::Standard,
            KindArg::Costandard => ModuleKind::Costandard,
            KindArg::Simple => ModuleKind::Simple,
        }
    }
}

/// The commands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Multiply two circle diagrams given as JSON files (lower factor first).
    Mult {
        /// Lower factor `λ̲μ̄`.
        a: PathBuf,
        /// Upper factor `μ̲ν̄`.
        b: PathBuf,
        /// Show every intermediate stacked diagram.
        #[arg(long)]
        trace: bool,
    },
    /// Orientation of a circle diagram given as a JSON file.
    Orient {
        /// The diagram.
        diagram: PathBuf,
    },
    /// Cup (or cap) diagram of a weight.
    Weight2cup {
        /// Weight, e.g. `3,0,-2`.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Produce the cap diagram instead.
        #[arg(long)]
        cap: bool,
    },
    /// Translation functor on a projective, standard, costandard or simple module.
    Theta {
        /// Use the special matching `t^i`.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "matching", required_unless_present = "matching")]
        special: Option<i64>,
        /// Read the matching from a JSON file with `bottom_arcs` and `top_arcs`.
        #[arg(long)]
        matching: Option<PathBuf>,
        /// Highest weight of the module.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Module family.
        #[arg(long, value_enum, default_value_t = KindArg::Projective)]
        on: KindArg,
    },
    /// Dimension of `e_λ K e_μ`.
    Hom {
        /// λ.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        /// μ.
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Cartan matrix `[P(λ) : L(μ)]` on the window, rows λ and columns μ ascending.
    Cartan,
    /// `Ext¹` between simples: one pair, or the table of the window.
    Ext {
        /// λ of `Ext¹(L(λ), L(μ))`.
        #[arg(long, allow_hyphen_values = true, requires = "mu")]
        lambda: Option<String>,
        /// μ of `Ext¹(L(λ), L(μ))`.
        #[arg(long, allow_hyphen_values = true, requires = "lambda")]
        mu: Option<String>,
    },
    /// Highest weight of the dual of a simple module.
    Dual {
        /// λ.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Ext-quiver with relations of the window.
    Quiver {
        /// Restrict to weights with this many odd entries.
        #[arg(long)]
        block: Option<usize>,
    },
    /// Dimension, composition factors and Loewy layers of a module.
    ProjStructure {
        /// Highest weight.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
        /// Module family.
        #[arg(long, value_enum, default_value_t = KindArg::Projective)]
        kind: KindArg,
    },
    /// Compares the radical and socle filtrations of a projective.
    Koszulity {
        /// Highest weight.
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Up-down tableaux of a given length: counts by shape, or all of one shape.
    Tableaux {
        /// Number of steps.
        #[arg(long)]
        length: usize,
        /// Only tableaux of this shape, e.g. `2,1`.
        #[arg(long)]
        shape: Option<String>,
    },
    /// Properties of a residue sequence.
    Residues {
        /// The sequence, e.g. `0,1,-1,0`.
        #[arg(long, allow_hyphen_values = true)]
        seq: String,
    },
    /// Runs the acceptance suite.
    Selftest {
        /// Run only this criterion (1 to 14).
        #[arg(long)]
        criterion: Option<u8>,
    },
}

/// Text to print and the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    /// Standard output.
    pub text: String,
    /// Exit code.
    pub code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn to_json<T: Serialize + ?Sized>(v: &T) -> CliResult<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn unsupported(command: &str, f: Format) -> CliError {
    CliError::Usage(format!("`{command}` has no {f:?} output"))
}

fn class_json(c: &GrothendieckClass) -> Value {
    c.entries().iter().map(|(w, m)| json!({ "weight": w, "multiplicity": m })).collect()
}

fn layers_json(ls: &[GrothendieckClass]) -> Value {
    ls.iter().map(class_json).collect()
}

fn check_rank(cfg: &RunConfig, w: &Weight) -> CliResult<()> {
    match cfg.n {
        Some(n) if n != w.len() => Err(CliError::Usage(format!("weight {w} has {} entries but -n is {n}", w.len()))),
        _ => Ok(()),
    }
}

fn ascii_circle(d: &CircleDiagram) -> String {
    let dots = orientation_of(d).map(|w| w.dots()).unwrap_or_default();
    render::ascii_diagram(&DiagramJson::from_circle(d), &dots, None)
}

fn circle_out(d: &CircleDiagram, f: Format, command: &str) -> CliResult<String> {
    let dots = orientation_of(d).map(|w| w.dots()).unwrap_or_default();
    let j = DiagramJson::from_circle(d);
    match f {
        Format::Json => to_json(&j),
        Format::Ascii => Ok(render::ascii_diagram(&j, &dots, None)),
        Format::Tikz => Ok(render::tikz_diagram(&j, &dots)),
        Format::Dot => Err(unsupported(command, f)),
    }
}

fn mult(cfg: &RunConfig, a: &Path, b: &Path, trace: bool) -> CliResult<String> {
    let x = read_diagram(a)?.circle()?;
    let y = read_diagram(b)?.circle()?;
    let n = cfg.n.unwrap_or(x.bottom.len());
    let mode = cfg.algebra(n);
    let product = multiply_traced(&x, &y, mode, &mut |_| 0).map_err(|e| {
        CliError::from(e).with_rendering(format!(
            "lower factor:\n{}upper factor:\n{}",
            ascii_circle(&x),
            ascii_circle(&y)
        ))
    })?;
    let mut out = String::new();
    if trace && cfg.output == Format::Json {
        let steps: Vec<Value> = product
            .steps
            .iter()
            .map(|s| json!({ "site": s.site, "kind": s.kind, "orientable": s.orientable }))
            .collect();
        let result = product.result.as_ref().map_or(json!(0), |d| json!(DiagramJson::from_circle(d)));
        return to_json(&json!({ "product": result, "steps": steps }));
    }
    if trace {
        for (i, s) in product.steps.iter().enumerate() {
            let _ = writeln!(
                out,
                "step {}: {:?} at cup {:?}, cap {:?}; orientable: {}",
                i + 1,
                s.kind,
                s.site.cup,
                s.site.cap,
                s.orientable
            );
            out.push_str(&render::ascii_stack(&s.state));
        }
    }
    match &product.result {
        None => out.push_str("0\n"),
        Some(d) => out.push_str(&circle_out(d, cfg.output, "mult")?),
    }
    Ok(out)
}

fn orient(cfg: &RunConfig, path: &Path) -> CliResult<String> {
    let d = read_diagram(path)?.circle()?;
    let o = orientation_of(&d);
    let brute = orientations_brute(&d);
    match cfg.output {
        Format::Json => to_json(&json!({
            "orientation": o,
            "all_orientations": brute,
            "orientable_kn": is_orientable_kn(&d),
            "orientable_k": is_orientable_k(&d),
        })),
        Format::Ascii => {
            let head = match &o {
                Some(w) => format!("orientation: {w}\n"),
                None => "not orientable\n".to_string(),
            };
            Ok(head + &ascii_circle(&d))
        }
        Format::Tikz => circle_out(&d, Format::Tikz, "orient"),
        Format::Dot => Err(unsupported("orient", cfg.output)),
    }
}

fn weight2cup(cfg: &RunConfig, weight: &str, cap: bool) -> CliResult<String> {
    let w = parse_weight(weight)?;
    let j = if cap { DiagramJson::from_cap(&cap_from_weight(&w)) } else { DiagramJson::from_cup(&cup_from_weight(&w)) };
    match cfg.output {
        Format::Json => to_json(&j),
        Format::Ascii => Ok(render::ascii_diagram(&j, &[], None)),
        Format::Tikz => Ok(render::tikz_diagram(&j, &[])),
        Format::Dot => Err(unsupported("weight2cup", cfg.output)),
    }
}

fn matching_arg(special: Option<i64>, matching: &Option<PathBuf>) -> CliResult<CrossinglessMatching> {
    match (special, matching) {
        (Some(i), _) => Ok(special_matching(i)),
        (None, Some(p)) => {
            let text = std::fs::read_to_string(p).map_err(|e| CliError::Usage(format!("{}: {e}", p.display())))?;
            let j: MatchingJson = serde_json::from_str(&text)?;
            Ok(CrossinglessMatching::from_json(&j)?)
        }
        (None, None) => Err(CliError::Usage("give --special or --matching".into())),
    }
}

fn theta(cfg: &RunConfig, t: &CrossinglessMatching, weight: &str, on: KindArg) -> CliResult<String> {
    let g = parse_weight(weight)?;
    check_rank(cfg, &g)?;
    let (value, text) = match on {
        KindArg::Projective => {
            let r = theta_on_projective(t, &g);
            let text = r.as_ref().map_or("0".to_string(), |nu| format!("P{nu}"));
            (json!({ "result": r }), format!("theta P{g} = {text}\n"))
        }
        KindArg::Standard | KindArg::Costandard => {
            let (r, name) = if on == KindArg::Standard {
                (theta_on_standard(t, &g), "Delta")
            } else {
                (theta_on_costandard(t, &g), "Nabla")
            };
            let flag: Vec<String> = r.flag.iter().map(|w| format!("{name}{w}")).collect();
            let end_name = if on == KindArg::Standard { "head" } else { "socle" };
            let mut text = format!("theta {name}{g}: flag [{}]\n", flag.join(", "));
            if let Some(e) = &r.end {
                let _ = writeln!(text, "{end_name}: L{e}");
            }
            (json!({ "flag": r.flag, end_name: r.end }), text)
        }
        KindArg::Simple => {
            let r = theta_on_simple(t, &g);
            let mut text = format!("theta L{g} = {}\n", if r.nonzero { r.class.to_string() } else { "0".into() });
            if let (Some(h), Some(s)) = (&r.head, &r.socle) {
                let _ = writeln!(text, "head: L{h}\nsocle: L{s}");
            }
            (json!({ "class": class_json(&r.class), "nonzero": r.nonzero, "head": r.head, "socle": r.socle }), text)
        }
    };
    match cfg.output {
        Format::Json => to_json(&value),
        Format::Ascii => Ok(text),
        _ => Err(unsupported("theta", cfg.output)),
    }
}

fn simple_out(cfg: &RunConfig, command: &str, value: Value, text: String) -> CliResult<String> {
    match cfg.output {
        Format::Json => to_json(&value),
        Format::Ascii => Ok(text),
        _ => Err(unsupported(command, cfg.output)),
    }
}

fn cartan(cfg: &RunConfig) -> CliResult<String> {
    let n = cfg.rank("cartan")?;
    let mode = cfg.algebra(n);
    let mut ws = weights_in_window(n, cfg.window.lo, cfg.window.hi);
    ws.sort();
    let m: Vec<Vec<usize>> = ws.iter().map(|l| ws.iter().map(|mu| hom_dim(mu, l, mode)).collect()).collect();
    let labels: Vec<String> = ws.iter().map(|w| w.to_string()).collect();
    let wid = labels.iter().map(|l| l.len()).max().unwrap_or(1);
    let mut text = String::new();
    for (l, row) in labels.iter().zip(&m) {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(text, "{l:>wid$} | {}", cells.join(" "));
    }
    simple_out(cfg, "cartan", json!({ "weights": ws, "matrix": m }), text)
}

fn ext(cfg: &RunConfig, lambda: &Option<String>, mu: &Option<String>) -> CliResult<String> {
    if let (Some(l), Some(m)) = (lambda, mu) {
        let (l, m) = (parse_weight(l)?, parse_weight(m)?);
        let e = ext1_dim(&l, &m)?;
        return simple_out(cfg, "ext", json!(e), format!("dim Ext^1(L{l}, L{m}) = {e}\n"));
    }
    let n = cfg.rank("ext")?;
    let mut rows = Vec::new();
    let mut text = String::new();
    for lam in weights_in_window(n, cfg.window.lo, cfg.window.hi) {
        for mu in compatible_weights(&lam, Mode::Kn(n)) {
            if mu == lam {
                continue;
            }
            let kind = is_primitive(&CircleDiagram::from_weights(&mu, &lam))?;
            if kind.is_primitive() {
                let _ = writeln!(text, "Ext^1(L{lam}, L{mu}) = 1  [{kind:?}]");
                rows.push(json!({ "lambda": lam, "mu": mu, "kind": kind }));
            }
        }
    }
    simple_out(cfg, "ext", Value::Array(rows), text)
}

fn dual(cfg: &RunConfig, weight: &str) -> CliResult<String> {
    let w = parse_weight(weight)?;
    let d = simple_dual(&w)?;
    simple_out(cfg, "dual", json!(d), format!("L{w}^* = L{d}\n"))
}

fn quiver(cfg: &RunConfig, block: Option<usize>) -> CliResult<String> {
    let n = cfg.rank("quiver")?;
    let q = build_quiver(n, block, cfg.window.lo, cfg.window.hi)?;
    match cfg.output {
        Format::Json => to_json(&q),
        Format::Ascii => Ok(render::ascii_quiver(&q)),
        Format::Tikz => Ok(render::tikz_quiver(&q)),
        Format::Dot => Ok(render::dot_quiver(&q)),
    }
}

fn proj_structure(cfg: &RunConfig, weight: &str, kind: KindArg) -> CliResult<String> {
    let w = parse_weight(weight)?;
    check_rank(cfg, &w)?;
    let m = build(kind.into(), &w)?;
    let rad = radical_filtration(&m)?;
    let soc = socle_filtration(&m)?;
    let factors = m.composition_factors();
    let flag = (kind == KindArg::Projective).then(|| delta_flag(&w));
    let value = json!({
        "kind": m.kind,
        "weight": w,
        "dim": m.dim(),
        "composition_factors": class_json(&factors),
        "radical_layers": layers_json(&rad),
        "socle_layers": layers_json(&soc),
        "delta_flag": flag,
    });
    match cfg.output {
        Format::Json => to_json(&value),
        Format::Ascii => {
            let mut s = format!("{:?}{w}: dim {}\ncomposition factors: {factors}\n", m.kind, m.dim());
            if let Some(f) = &flag {
                let f: Vec<String> = f.iter().map(|x| format!("Delta{x}")).collect();
                let _ = writeln!(s, "Delta-flag: {}", f.join(", "));
            }
            s.push_str(&render::ascii_layers("radical layers", &rad));
            s.push_str(&render::ascii_layers("socle layers", &soc));
            Ok(s)
        }
        Format::Tikz => Ok(render::tikz_layers(&rad)),
        Format::Dot => Err(unsupported("proj-structure", cfg.output)),
    }
}

fn koszulity(cfg: &RunConfig, weight: &str) -> CliResult<String> {
    let w = parse_weight(weight)?;
    check_rank(cfg, &w)?;
    let r = koszulity_report(&w)?;
    match cfg.output {
        Format::Json => to_json(&json!({
            "radical_layers": layers_json(&r.radical_layers),
            "socle_layers": layers_json(&r.socle_layers),
            "agree": r.agree,
        })),
        Format::Ascii => {
            let mut s = render::ascii_layers(&format!("radical layers of P{w}"), &r.radical_layers);
            s.push_str(&render::ascii_layers(&format!("socle layers of P{w}"), &r.socle_layers));
            let _ = writeln!(s, "agree: {}", r.agree);
            Ok(s)
        }
        Format::Tikz => Ok(render::tikz_layers(&r.radical_layers) + &render::tikz_layers(&r.socle_layers)),
        Format::Dot => Err(unsupported("koszulity", cfg.output)),
    }
}

fn tableaux(cfg: &RunConfig, length: usize, shape: &Option<String>) -> CliResult<String> {
    let Some(shape) = shape else {
        let counts = count_udt_by_shape(length);
        let total: usize = counts.values().map(|c| c * c).sum();
        let rows: Vec<Value> = counts.iter().map(|(p, c)| json!({ "shape": p, "count": c })).collect();
        let mut text = String::new();
        for (p, c) in &counts {
            let _ = writeln!(text, "{p}: {c}");
        }
        let _ = writeln!(text, "sum of squares: {total}");
        return simple_out(cfg, "tableaux", json!({ "by_shape": rows, "sum_of_squares": total }), text);
    };
    let p = Partition::new(parse_parts(shape)?)?;
    let ts = enumerate_udt(length, &p);
    let mut rows = Vec::new();
    let mut text = String::new();
    for t in &ts {
        let shapes = t.shapes();
        let src = residue_seq(t, ResidueFlavor::Source);
        let tgt = residue_seq(t, ResidueFlavor::Target);
        let walk: Vec<String> = std::iter::once("∅".to_string()).chain(shapes.iter().map(|s| s.to_string())).collect();
        let _ = writeln!(text, "{}  source {src:?} target {tgt:?}", walk.join(" -> "));
        rows.push(json!({ "shapes": shapes, "source": src, "target": tgt }));
    }
    simple_out(cfg, "tableaux", Value::Array(rows), text)
}

fn residues(cfg: &RunConfig, seq: &str) -> CliResult<String> {
    let s = parse_ints(seq)?;
    let shapes = tableaux_with_residues(&s, ResidueFlavor::Target);
    let reduced = if shapes.is_empty() { None } else { Some(reduce_residue_seq(&s)?) };
    let st = StackedDiagram::from_residues(&s);
    let orientable = stacked_orientable(&st);
    let orientation = stacked_orientation(&st).map(|o| o.weights);
    let shape_rows: Vec<Value> = shapes.iter().map(|(p, c)| json!({ "shape": p, "count": c })).collect();
    let value = json!({
        "sequence": s,
        "shapes": shape_rows,
        "realizable_empty_shape": seq_realizable_empty_shape(&s),
        "up_tableau": is_up_tableau_residue_seq(&s),
        "reduced": reduced,
        "stacked_orientable": orientable,
        "stacked_orientation": orientation,
    });
    match cfg.output {
        Format::Json => to_json(&value),
        Format::Ascii => {
            let mut t = format!("sequence {s:?}\n");
            let shapes: Vec<String> = shapes.iter().map(|(p, c)| format!("{p} x{c}")).collect();
            let _ = writeln!(t, "target shapes: {}", if shapes.is_empty() { "none".into() } else { shapes.join(", ") });
            let _ = writeln!(t, "realizable with shape ∅: {}", seq_realizable_empty_shape(&s));
            let _ = writeln!(t, "up-tableau sequence: {}", is_up_tableau_residue_seq(&s));
            if let Some(r) = &reduced {
                let _ = writeln!(t, "reduced: {r:?}");
            }
            let _ = writeln!(t, "stacked diagram orientable: {orientable}");
            t.push_str(&render::ascii_stack(&st));
            Ok(t)
        }
        _ => Err(unsupported("residues", cfg.output)),
    }
}

fn selftest(cfg: &RunConfig, criterion: Option<u8>) -> CliResult<Output> {
    let reports = match criterion {
        Some(id) => vec![run_criterion(id, cfg.seed).map_err(|e| CliError::Usage(e.to_string()))?],
        None => run_all(cfg.seed),
    };
    let code = if reports.iter().all(|r| r.passed) { 0 } else { 2 };
    let text = match cfg.output {
        Format::Json => to_json(&reports)?,
        Format::Ascii => reports.iter().map(|r| format!("{r}\n")).collect(),
        f => return Err(unsupported("selftest", f)),
    };
    Ok(Output { text, code })
}

/// Runs a parsed command line.
pub fn run(cli: &Cli) -> CliResult<Output> {
    let cfg = cli.global.config();
    let text = match &cli.command {
        Command::Mult { a, b, trace } => mult(&cfg, a, b, *trace)?,
        Command::Orient { diagram } => orient(&cfg, diagram)?,
        Command::Weight2cup { weight, cap } => weight2cup(&cfg, weight, *cap)?,
        Command::Theta { special, matching, weight, on } => {
            theta(&cfg, &matching_arg(*special, matching)?, weight, *on)?
        }
        Command::Hom { lambda, mu } => {
            let (l, m) = (parse_weight(lambda)?, parse_weight(mu)?);
            if l.len() != m.len() {
                return Err(CliError::Usage(format!("{l} and {m} have different lengths")));
            }
            let d = hom_dim(&l, &m, cfg.algebra(l.len()));
            simple_out(&cfg, "hom", json!(d), format!("{d}\n"))?
        }
        Command::Cartan => cartan(&cfg)?,
        Command::Ext { lambda, mu } => ext(&cfg, lambda, mu)?,
        Command::Dual { weight } => dual(&cfg, weight)?,
        Command::Quiver { block } => quiver(&cfg, *block)?,
        Command::ProjStructure { weight, kind } => proj_structure(&cfg, weight, *kind)?,
        Command::Koszulity { weight } => koszulity(&cfg, weight)?,
        Command::Tableaux { length, shape } => tableaux(&cfg, *length, shape)?,
        Command::Residues { seq } => residues(&cfg, seq)?,
        Command::Selftest { criterion } => return selftest(&cfg, *criterion),
    };
    Ok(Output::ok(text))
}
