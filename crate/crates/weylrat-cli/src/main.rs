//! Command-line front end: rationality queries, ν-sequence dumps, atlas
//! construction with DOT/JSON export, parallel counting, and exact GL_n
//! decomposition runs.
//!
//! Structured output is JSON on stdout; a short human summary goes to
//! stderr. Exit code 0 on success, 1 for domain verdicts (not generic /
//! not stabilized) under `--strict`, 2 for usage errors.

use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use weylrat::atlas::{self, AtlasOptions, EdgeSide};
use weylrat::decompose::{self, Base, SolveFailure, SolveOptions, Verdict, WitnessError};
use weylrat::matgroup::{rat, representative, QMatrix, Rational};
use weylrat::rationality::{self, Certificate};
use weylrat::roots::{Family, LieType, RootSet, RootSystem};
use weylrat::weyl::{self, WeylElement};

#[derive(Parser)]
#[command(name = "weylrat", version, about = "Rational Weyl group elements: nu-sequences, rationality graphs, and exact GL_n decompositions")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Dump the root system tables for one Lie type
    Roots(RootsArgs),
    /// Rationality of one element: nu-sequence, graph, certificate
    Rational(RationalArgs),
    /// Relative nu-sequence of u with respect to a base element v
    Nurel(NurelArgs),
    /// Count the rational elements of a whole Weyl group
    Count(CountArgs),
    /// Build the rationality graph of the whole group
    Atlas(AtlasCmdArgs),
    /// Classify the Coxeter elements of one group
    Coxeter(CoxeterArgs),
    /// Solve g = N·B·u·N⁻¹ in GL_n by parabolic approximation
    Decompose(DecomposeArgs),
    /// Produce a fiber-collision witness certifying a non-solution
    Witness(WitnessArgs),
}

#[derive(Args)]
struct TypeArgs {
    /// Lie family: A, B, C, D, E, F or G
    #[arg(long = "type", value_name = "FAMILY")]
    family: Family,
    /// Rank of the root system
    #[arg(long)]
    rank: usize,
}

impl TypeArgs {
    fn build(&self) -> Result<RootSystem, String> {
        RootSystem::build(LieType::new(self.family, self.rank)).map_err(|e| e.to_string())
    }
}

#[derive(Args)]
struct RootsArgs {
    #[command(flatten)]
    ty: TypeArgs,
    /// Also write the JSON to this file
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct RationalArgs {
    #[command(flatten)]
    ty: TypeArgs,
    /// Comma-separated 1-based simple indices; empty for the identity
    #[arg(long, default_value = "")]
    word: String,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct NurelArgs {
    #[command(flatten)]
    ty: TypeArgs,
    /// Word of the element u
    #[arg(long, default_value = "")]
    word: String,
    /// Word of the base element v
    #[arg(long, default_value = "")]
    vword: String,
    /// Cap on computed terms (default 2|Π₊|+2)
    #[arg(long)]
    max_terms: Option<usize>,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    ty: TypeArgs,
    /// Parallel workers
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Refuse to enumerate groups larger than this
    #[arg(long, default_value_t = 100_000_000)]
    budget: u128,
}

#[derive(Args)]
struct AtlasCmdArgs {
    #[command(flatten)]
    ty: TypeArgs,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, default_value_t = 100_000_000)]
    budget: u128,
    /// Side of the simple-reflection multiplication defining edges
    #[arg(long, default_value = "left", value_parser = parse_edge_side)]
    edge_side: EdgeSide,
    /// Write a Graphviz DOT rendering to this file
    #[arg(long)]
    dot: Option<PathBuf>,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct CoxeterArgs {
    #[command(flatten)]
    ty: TypeArgs,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct DecomposeArgs {
    /// Rank r of A_r; the matrices live in GL_{r+1}
    #[arg(long)]
    rank: usize,
    /// Word of the target element u
    #[arg(long, default_value = "")]
    word: String,
    /// Word of the base solution v (default: the longest element)
    #[arg(long)]
    vword: Option<String>,
    /// JSON matrix file; a seeded random generic matrix is used if absent
    #[arg(long)]
    matrix: Option<PathBuf>,
    #[arg(long, default_value_t = 64)]
    max_iter: usize,
    /// Seed for the generated matrix when --matrix is absent
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Exit nonzero on not-generic / not-stabilized verdicts
    #[arg(long)]
    strict: bool,
    #[arg(long)]
    json: Option<PathBuf>,
}

#[derive(Args)]
struct WitnessArgs {
    /// Rank r of A_r; the matrices live in GL_{r+1}
    #[arg(long)]
    rank: usize,
    /// Word of the element u
    #[arg(long, default_value = "")]
    word: String,
    /// Simple root index fixed by u (fixer witness)
    #[arg(long, conflicts_with = "cycle")]
    alpha: Option<usize>,
    /// Pairwise-orthogonal simple indices forming a Γ(u)-cycle
    #[arg(long)]
    cycle: Option<String>,
    /// JSON matrix file for b ∈ B₊; seeded random upper Borel if absent
    #[arg(long)]
    matrix: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    strict: bool,
    #[arg(long)]
    json: Option<PathBuf>,
}

fn parse_edge_side(s: &str) -> Result<EdgeSide, String> {
    match s {
        "left" => Ok(EdgeSide::Left),
        "right" => Ok(EdgeSide::Right),
        other => Err(format!("unknown edge side `{other}` (expected left or right)")),
    }
}

fn parse_word(s: &str) -> Result<Vec<usize>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| format!("bad word letter `{p}`")))
        .collect()
}

fn root_json(rs: &RootSystem, idx: usize) -> Value {
    Value::from(rs.root(idx).coeffs.clone())
}

fn rootset_json(rs: &RootSystem, set: &RootSet) -> Value {
    Value::from(set.iter().map(|i| root_json(rs, i)).collect::<Vec<_>>())
}

fn word_string(word: &[usize]) -> String {
    let mut s = String::new();
    for (k, i) in word.iter().enumerate() {
        if k > 0 {
            s.push(' ');
        }
        let _ = write!(s, "s{i}");
    }
    if s.is_empty() {
        s.push('e');
    }
    s
}

fn matrix_json(m: &QMatrix) -> Value {
    Value::from(
        m.rows()
            .iter()
            .map(|row| Value::from(row.iter().map(|e| e.to_string()).collect::<Vec<_>>()))
            .collect::<Vec<_>>(),
    )
}

fn parse_matrix(path: &PathBuf) -> Result<QMatrix, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let v: Value = serde_json::from_str(&text).map_err(|e| format!("bad matrix JSON: {e}"))?;
    let rows = v.as_array().ok_or("matrix file must be a JSON array of rows")?;
    let parsed: Result<Vec<Vec<Rational>>, String> = rows
        .iter()
        .map(|row| {
            row.as_array()
                .ok_or_else(|| "each row must be a JSON array".to_string())?
                .iter()
                .map(parse_entry)
                .collect()
        })
        .collect();
    let parsed = parsed?;
    let n = parsed.len();
    if n == 0 || parsed.iter().any(|r| r.len() != n) {
        return Err("matrix must be square and nonempty".into());
    }
    Ok(QMatrix::from_rows(parsed))
}

fn parse_entry(v: &Value) -> Result<Rational, String> {
    match v {
        Value::Number(n) => {
            Rational::from_str(&n.to_string()).map_err(|_| format!("bad entry {n} (integers only)"))
        }
        Value::String(s) => Rational::from_str(s).map_err(|_| format!("bad entry \"{s}\"")),
        other => Err(format!("bad entry {other}")),
    }
}

fn emit(value: &Value, json_path: &Option<PathBuf>) -> Result<(), String> {
    println!("{value}");
    if let Some(path) = json_path {
        std::fs::write(path, format!("{value}\n")).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(())
}

fn element(rs: &RootSystem, word: &[usize]) -> Result<WeylElement, String> {
    WeylElement::from_word(rs, word).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.cmd {
        Cmd::Roots(a) => cmd_roots(a),
        Cmd::Rational(a) => cmd_rational(a),
        Cmd::Nurel(a) => cmd_nurel(a),
        Cmd::Count(a) => cmd_count(a),
        Cmd::Atlas(a) => cmd_atlas(a),
        Cmd::Coxeter(a) => cmd_coxeter(a),
        Cmd::Decompose(a) => cmd_decompose(a),
        Cmd::Witness(a) => cmd_witness(a),
    }
}

fn cmd_roots(a: RootsArgs) -> Result<ExitCode, String> {
    let rs = a.ty.build()?;
    let rank = rs.rank();
    let cartan: Vec<Vec<i32>> =
        (1..=rank).map(|i| (1..=rank).map(|j| rs.cartan(i, j)).collect()).collect();
    let out = json!({
        "type": a.ty.family.to_string(),
        "rank": rank,
        "num_positive": rs.num_positive(),
        "positive_roots": rs.positive_roots().iter().map(|r| r.coeffs.clone()).collect::<Vec<_>>(),
        "cartan": cartan,
        "highest_root": rs.highest_root().coeffs.clone(),
    });
    emit(&out, &a.json)?;
    eprintln!("{}: {} positive roots", rs.lie_type(), rs.num_positive());
    Ok(ExitCode::SUCCESS)
}

fn cmd_rational(a: RationalArgs) -> Result<ExitCode, String> {
    let rs = a.ty.build()?;
    let word = parse_word(&a.word)?;
    let u = element(&rs, &word)?;
    let nu = rationality::nu_sequence(&rs, &u);
    let graph = rationality::gamma(&rs, &u);
    let rational = rationality::is_rational(&rs, &u);
    let certificate = match rationality::certify(&rs, &u) {
        Certificate::EmptyNu { steps } => json!({ "empty_at": steps }),
        Certificate::Cycle(c) => {
            json!({ "cycle": c.iter().map(|&i| root_json(&rs, i)).collect::<Vec<_>>() })
        }
    };
    let out = json!({
        "type": a.ty.family.to_string(),
        "rank": rs.rank(),
        "word": word,
        "length": u.length(),
        "rational": rational,
        "certificate": certificate,
        "nu_terms": nu.terms.iter().map(|t| rootset_json(&rs, t)).collect::<Vec<_>>(),
        "nu_limit": rootset_json(&rs, &nu.limit),
        "gamma": {
            "vertices": graph.vertices.iter().map(|&i| root_json(&rs, i)).collect::<Vec<_>>(),
            "edges": graph.edges().iter()
                .map(|&(x, y)| Value::from(vec![root_json(&rs, x), root_json(&rs, y)]))
                .collect::<Vec<_>>(),
        },
    });
    emit(&out, &a.json)?;
    eprintln!(
        "{} element [{}]: {}",
        rs.lie_type(),
        word_string(&word),
        if rational { "rational" } else { "not rational" }
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_nurel(a: NurelArgs) -> Result<ExitCode, String> {
    let rs = a.ty.build()?;
    let word = parse_word(&a.word)?;
    let vword = parse_word(&a.vword)?;
    let u = element(&rs, &word)?;
    let v = element(&rs, &vword)?;
    let cap = a.max_terms.unwrap_or_else(|| rationality::default_max_terms(&rs));
    let rel = rationality::relative_nu(&rs, &u, &v, cap);
    let out = json!({
        "type": a.ty.family.to_string(),
        "rank": rs.rank(),
        "word": word,
        "vword": vword,
        "terms": rel.terms.iter().map(|t| rootset_json(&rs, t)).collect::<Vec<_>>(),
        "cycle_start": rel.cycle_start,
        "empty_limit": rel.empty_limit,
    });
    emit(&out, &a.json)?;
    eprintln!(
        "relative nu-sequence: {} terms, empty limit: {}",
        rel.terms.len(),
        rel.empty_limit
    );
    Ok(ExitCode::SUCCESS)
}

fn cmd_count(a: CountArgs) -> Result<ExitCode, String> {
    let rs = a.ty.build()?;
    let order = rs.lie_type().group_order();
    if order > a.budget {
        return Err(format!(
            "group order {order} exceeds the element budget {}; rerun with --budget at least {order}",
            a.budget
        ));
    }
    let n = atlas::count_rational(&rs, a.workers);
    println!("{n}");
    eprintln!("{}: {} rational of {} elements", rs.lie_type(), n, order);
    Ok(ExitCode::SUCCESS)
}

fn cmd_atlas(a: AtlasCmdArgs) -> Result<ExitCode, String> {
    let rs = a.ty.build()?;
    let opts = AtlasOptions { workers: a.workers, budget: a.budget, edge_side: a.edge_side };
    let atlas = atlas::build_atlas(&rs, &opts).map_err(|e| e.to_string())?;
    let words: Vec<String> = atlas
        .rational_elements
        .iter()
        .map(|c| word_string(&weyl::from_compact(&rs, c).reduced_word(&rs)))
        .collect();
    let out = json!({
        "type": a.ty.family.to_string(),
        "rank": rs.rank(),
        "count": atlas.count(),
        "vertices": words,
        "edges": atlas.edges.iter().map(|&(u, v, l)| vec![u, v, l]).collect::<Vec<_>>(),
        "components": atlas.num_components,
        "valencies": atlas.valencies,
    });
    emit(&out, &a.json)?;
    if let Some(path) = &a.dot {
        let dot = render_dot(&rs, &words, &atlas.edges);
        std::fs::write(path, dot).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    eprintln!(
        "{}: {} vertices, {} edges, {} component(s)",
        rs.lie_type(),
        atlas.count(),
        atlas.edges.len(),
        atlas.num_components
    );
    Ok(ExitCode::SUCCESS)
}

fn render_dot(rs: &RootSystem, words: &[String], edges: &[(usize, usize, usize)]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph \"{}\" {{", rs.lie_type());
    let _ = writeln!(out, "  node [shape=box];");
    for (i, w) in words.iter().enumerate() {
        let _ = writeln!(out, "  v{i} [label=\"{w}\"];");
    }
    for &(u, v, l) in edges {
        let _ = writeln!(out, "  v{u} -- v{v} [label=\"{l}\"];");
    }
    out.push_str("}\n");
    out
}

fn cmd_coxeter(a: CoxeterArgs) -> Result<ExitCode, String> {
    let rs = a.ty.build()?;
    let report = atlas::coxeter_report(&rs);
    let words: Vec<String> =
        report.rational.iter().map(|c| word_string(&c.reduced_word(&rs))).collect();
    let out = json!({
        "type": a.ty.family.to_string(),
        "rank": rs.rank(),
        "total_coxeter": report.total,
        "rational_coxeter": words,
        "valencies": report.valencies,
    });
    emit(&out, &a.json)?;
    eprintln!(
        "{}: {} of {} Coxeter elements rational",
        rs.lie_type(),
        report.rational.len(),
        report.total
    );
    Ok(ExitCode::SUCCESS)
}

/// Seeded random matrix with entries in [−9, 9], resampled on genericity
/// failures only.
fn seeded_matrix<F: Fn(&QMatrix) -> bool>(n: usize, seed: u64, accept: F) -> Result<QMatrix, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let m = QMatrix::from_rows(
            (0..n)
                .map(|_| {
                    (0..n).map(|_| rat(rng.random_range(-9..=9))).collect()
                })
                .collect(),
        );
        if accept(&m) {
            return Ok(m);
        }
    }
    Err("could not sample a generic matrix from this seed".into())
}

fn cmd_decompose(a: DecomposeArgs) -> Result<ExitCode, String> {
    if a.rank == 0 {
        return Err("rank must be at least 1".into());
    }
    let n = a.rank + 1;
    let word = parse_word(&a.word)?;
    for &i in &word {
        if i < 1 || i > a.rank {
            return Err(format!("word letter {i} out of range 1..={}", a.rank));
        }
    }
    let base = match &a.vword {
        None => Base::Longest,
        Some(v) => {
            let vw = parse_word(v)?;
            if vw.is_empty() {
                Base::Longest
            } else {
                Base::Word(vw)
            }
        }
    };
    let opts = SolveOptions { base, max_iter: a.max_iter, rep_override: None };
    let g = match &a.matrix {
        Some(path) => {
            let m = parse_matrix(path)?;
            if m.size() != n {
                return Err(format!("matrix is {}×{0}, expected {n}×{n} for rank {}", m.size(), a.rank));
            }
            m
        }
        None => seeded_matrix(n, a.seed, |m| {
            !matches!(decompose::solve(m, &word, &opts), Err(SolveFailure::NotGeneric { .. }))
        })?,
    };

    let (out, failed) = match decompose::solve(&g, &word, &opts) {
        Ok(sol) => (
            json!({
                "verdict": "stabilized",
                "iterations": sol.iterations,
                "N": matrix_json(&sol.n_part),
                "B": matrix_json(&sol.b_part),
                "u_rep": matrix_json(&sol.representative),
                "matrix": matrix_json(&g),
            }),
            false,
        ),
        Err(SolveFailure::NotStabilized { trace }) => {
            let iters = match trace.verdict {
                Verdict::NotStabilized(m) => m,
                _ => a.max_iter,
            };
            (
                json!({
                    "verdict": "not_stabilized",
                    "iterations": iters,
                    "u_rep": matrix_json(&representative(n, &word)),
                    "matrix": matrix_json(&g),
                }),
                true,
            )
        }
        Err(SolveFailure::NotGeneric { step }) => (
            json!({
                "verdict": "not_generic",
                "step": step,
                "matrix": matrix_json(&g),
            }),
            true,
        ),
    };
    emit(&out, &a.json)?;
    eprintln!("decompose [{}] in GL_{n}: {}", word_string(&word), out["verdict"].as_str().unwrap());
    if failed && a.strict {
        return Ok(ExitCode::FAILURE);
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_witness(a: WitnessArgs) -> Result<ExitCode, String> {
    if a.rank == 0 {
        return Err("rank must be at least 1".into());
    }
    let n = a.rank + 1;
    let word = parse_word(&a.word)?;
    let cycle = match (&a.alpha, &a.cycle) {
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
        (None, None) => return Err("one of --alpha or --cycle is required".into()),
        (Some(alpha), None) => vec![*alpha],
        (None, Some(c)) => parse_word(c)?,
    };
    let witness_of = |b: &QMatrix| -> Result<decompose::Witness, WitnessError> {
        if cycle.len() == 1 {
            decompose::fixer_witness(b, &word, cycle[0])
        } else {
            decompose::ortho_cycle_witness(b, &word, &cycle)
        }
    };
    let b = match &a.matrix {
        Some(path) => {
            let m = parse_matrix(path)?;
            if m.size() != n {
                return Err(format!("matrix is {}×{0}, expected {n}×{n} for rank {}", m.size(), a.rank));
            }
            m
        }
        None => seeded_matrix(n, a.seed, |m| {
            let mut b = m.clone();
            make_upper_borel(&mut b);
            !matches!(
                witness_of(&b),
                Err(WitnessError::DegenerateInput(_)) | Err(WitnessError::VerificationFailed)
            )
        })
        .map(|mut m| {
            make_upper_borel(&mut m);
            m
        })?,
    };

    let (out, failed) = match witness_of(&b) {
        Ok(w) => {
            let collision = !w.degenerate
                && decompose::check_fiber_collision(&b, &representative(n, &word), &w.matrix);
            (
                json!({
                    "witness": matrix_json(&w.matrix),
                    "degenerate": w.degenerate,
                    "collision": collision,
                    "matrix": matrix_json(&b),
                }),
                false,
            )
        }
        Err(e) => (
            json!({
                "error": e.to_string(),
                "matrix": matrix_json(&b),
            }),
            true,
        ),
    };
    emit(&out, &a.json)?;
    eprintln!("witness for [{}] in GL_{n}", word_string(&word));
    if failed && a.strict {
        return Ok(ExitCode::FAILURE);
    }
    Ok(ExitCode::SUCCESS)
}

/// Zeroes the strict lower part and forces a nonzero diagonal.
fn make_upper_borel(m: &mut QMatrix) {
    let n = m.size();
    for i in 0..n {
        for j in 0..i {
            m[(i, j)] = rat(0);
        }
        if m[(i, i)] == rat(0) {
            m[(i, i)] = rat(1);
        }
    }
}
