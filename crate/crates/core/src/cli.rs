//! The `quif5` command line. Output goes to `out`, diagnostics to `err`;
//! the return value is the process exit code.
//!
//! Exit codes: 0 success, 1 usage, 2 parse error, 3 semantic error,
//! 4 computation error, 5 oracle mismatch.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebra::{BasicAlgebra, DEFAULT_DEGREE_CAP};
use crate::buchberger::buchberger_stdbasis;
use crate::f5::{f5_stdbasis, verify_f5_criterion, F5Options, F5Result};
use crate::loewy::{loewy_layers, minimal_generators};
use crate::module::{FreeModule, ModuleElement};
use crate::oracle::{module_echelon, radical_filtration, standard_basis_defect};
use crate::problem::{load_problem, Instance, ProblemError};
use crate::random::{random_instance, rng, RandomParams};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "quif5", version, about = "Signed standard bases over basic algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print schema-versioned JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for generated instances.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest degree searched when the nilpotency degree is automatic.
    #[arg(long, global = true, default_value_t = DEFAULT_DEGREE_CAP)]
    degree_cap: usize,
    /// Compare the result with the dense linear-algebra oracle.
    #[arg(long, global = true)]
    oracle_check: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dimension, standard monomials and nilpotency degree of the algebra.
    Algebra { file: PathBuf },
    /// Standard basis by toppling reduction.
    Stdbasis { file: PathBuf },
    /// Signed standard basis with syzygy signatures.
    F5 { file: PathBuf },
    /// Loewy layer dimensions and representatives (needs negdeglex).
    Loewy { file: PathBuf },
    /// A minimal generating set of the submodule (needs negdeglex).
    Mingens { file: PathBuf },
    /// Dense pivots and radical dimensions.
    Oracle { file: PathBuf },
    /// Side-by-side statistics on random instances.
    Bench {
        #[arg(long, default_value_t = 20)]
        count: usize,
        /// Also write the table as CSV to this path.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn computation(e: impl std::fmt::Display) -> Self {
        Self { code: 4, message: e.to_string() }
    }
}

impl From<ProblemError> for Failure {
    fn from(e: ProblemError) -> Self {
        let code = match e {
            ProblemError::Parse(_) => 2,
            ProblemError::Semantic(_) => 3,
            ProblemError::Algebra(_) => 4,
        };
        Self { code, message: e.to_string() }
    }
}

/// Rendered output plus the outcome of an optional oracle comparison.
struct Outcome {
    text: String,
    json: Value,
    mismatch: Option<String>,
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match execute(&cli, err) {
        Ok(o) => {
            if cli.json {
                let mut v = o.json;
                v["schema_version"] = json!(SCHEMA_VERSION);
                if cli.oracle_check {
                    v["oracle_check"] = json!({ "ok": o.mismatch.is_none(), "detail": o.mismatch });
                }
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable"));
            } else {
                let _ = write!(out, "{}", o.text);
            }
            match o.mismatch {
                Some(m) => {
                    let _ = writeln!(err, "oracle mismatch: {m}");
                    5
                }
                None => {
                    if cli.oracle_check {
                        let _ = writeln!(err, "oracle check passed");
                    }
                    0
                }
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn load(file: &PathBuf, cli: &Cli, err: &mut dyn Write) -> Result<Instance, Failure> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Failure { code: 1, message: format!("cannot read {}: {e}", file.display()) })?;
    let inst = load_problem(&text, cli.degree_cap)?;
    for w in &inst.warnings {
        let _ = writeln!(err, "{w}");
    }
    Ok(inst)
}

fn execute(cli: &Cli, err: &mut dyn Write) -> Result<Outcome, Failure> {
    match &cli.command {
        Command::Algebra { file } => Ok(algebra_report(&load(file, cli, err)?.algebra)),
        Command::Stdbasis { file } => stdbasis(&load(file, cli, err)?, cli.oracle_check),
        Command::F5 { file } => f5(&load(file, cli, err)?, cli.oracle_check),
        Command::Loewy { file } => loewy(&load(file, cli, err)?, cli.oracle_check),
        Command::Mingens { file } => mingens(&load(file, cli, err)?, cli.oracle_check),
        Command::Oracle { file } => oracle(&load(file, cli, err)?),
        Command::Bench { count, csv } => bench(cli.seed, *count, csv.as_ref()),
    }
}

fn display_all(alg: &BasicAlgebra, fm: &FreeModule, elems: &[ModuleElement]) -> Vec<String> {
    elems.iter().map(|g| fm.display(alg, g)).collect()
}

fn algebra_report(alg: &BasicAlgebra) -> Outcome {
    let mons: Vec<String> = alg.standard_monomials().map(|m| alg.display(m)).collect();
    let text = format!(
        "dim {}\nstandard monomials {}\nnilpotency {}\n  {}\n",
        alg.dim(),
        mons.len(),
        alg.nilpotency(),
        mons.join(", ")
    );
    let json = json!({
        "command": "algebra",
        "dim": alg.dim(),
        "standard_monomials": mons,
        "nilpotency": alg.nilpotency(),
        "truncation": alg.truncation(),
        "field": alg.field().characteristic(),
        "order": alg.order().mode().keyword(),
    });
    Outcome { text, json, mismatch: None }
}

fn defect(inst: &Instance, basis: &[ModuleElement]) -> Result<Option<String>, Failure> {
    standard_basis_defect(&inst.algebra, &inst.module, &inst.generators, basis).map_err(Failure::computation)
}

fn stdbasis(inst: &Instance, check: bool) -> Result<Outcome, Failure> {
    let (alg, fm) = (&inst.algebra, &inst.module);
    let (basis, stats) = buchberger_stdbasis(alg, &inst.generators);
    let shown = display_all(alg, fm, &basis);
    let mut text = format!("basis ({}):\n", basis.len());
    for s in &shown {
        let _ = writeln!(text, "  {s}");
    }
    let _ = writeln!(
        text,
        "processed {}, zero reductions {}, stale {}",
        stats.processed, stats.zero_reductions, stats.stale
    );
    let mismatch = if check { defect(inst, &basis)? } else { None };
    let json = json!({ "command": "stdbasis", "basis": shown, "stats": stats });
    Ok(Outcome { text, json, mismatch })
}

fn run_f5(inst: &Instance) -> Result<F5Result, Failure> {
    f5_stdbasis(&inst.algebra, &inst.generators, F5Options::default()).map_err(Failure::computation)
}

fn f5(inst: &Instance, check: bool) -> Result<Outcome, Failure> {
    let (alg, fm) = (&inst.algebra, &inst.module);
    let res = run_f5(inst)?;
    let rows: Vec<(String, String)> =
        res.basis.iter().map(|g| (g.sig.display(alg), fm.display(alg, &g.poly))).collect();
    let syz: Vec<String> = res.syzygies.iter().map(|s| s.display(alg)).collect();
    let mut text = format!("basis ({}):\n", rows.len());
    for (s, p) in &rows {
        let _ = writeln!(text, "  [{s}] {p}");
    }
    let _ = writeln!(text, "syzygies ({}):", syz.len());
    for s in &syz {
        let _ = writeln!(text, "  {s}");
    }
    let st = &res.stats;
    let _ = writeln!(
        text,
        "pairs {}, processed {}, zero reductions {}, skipped by L {}, rewritten {}",
        st.pairs_generated, st.processed, st.zero_reductions, st.skipped_by_l, st.skipped_rewritten
    );
    let mismatch = if check {
        let polys: Vec<ModuleElement> = res.basis.iter().map(|g| g.poly.clone()).collect();
        match defect(inst, &polys)? {
            Some(d) => Some(d),
            None => {
                let missing = verify_f5_criterion(alg, &res.basis, &res.syzygies);
                (!missing.is_empty()).then(|| format!("{} critical pairs lack an F5 reducer", missing.len()))
            }
        }
    } else {
        None
    };
    let json = json!({
        "command": "f5",
        "basis": rows.iter().map(|(s, p)| json!({ "signature": s, "element": p })).collect::<Vec<_>>(),
        "syzygies": syz,
        "stats": res.stats,
    });
    Ok(Outcome { text, json, mismatch })
}

fn radical_dims(inst: &Instance) -> Result<Vec<usize>, Failure> {
    radical_filtration(&inst.algebra, &inst.module, &inst.generators).map_err(Failure::computation)
}

fn loewy(inst: &Instance, check: bool) -> Result<Outcome, Failure> {
    let (alg, fm) = (&inst.algebra, &inst.module);
    let res = run_f5(inst)?;
    let layers = loewy_layers(alg, &res.basis).map_err(Failure::computation)?;
    let dims: Vec<usize> = layers.iter().map(|l| l.dim()).collect();
    let reps: Vec<Vec<String>> = layers.iter().map(|l| display_all(alg, fm, &l.representatives)).collect();
    let mut text = String::new();
    for (l, r) in layers.iter().zip(&reps) {
        let _ = writeln!(text, "layer {}: dim {}", l.degree, l.dim());
        for s in r {
            let _ = writeln!(text, "  {s}");
        }
    }
    let _ = writeln!(text, "loewy dims {dims:?}");
    let mismatch = if check {
        let rad = radical_dims(inst)?;
        let expected: Vec<usize> = rad.windows(2).map(|w| w[0] - w[1]).collect();
        (expected != dims).then(|| format!("layer dims {dims:?}, radical filtration gives {expected:?}"))
    } else {
        None
    };
    let json = json!({ "command": "loewy", "loewy_dims": dims, "layers": reps });
    Ok(Outcome { text, json, mismatch })
}

fn mingens(inst: &Instance, check: bool) -> Result<Outcome, Failure> {
    let (alg, fm) = (&inst.algebra, &inst.module);
    let res = run_f5(inst)?;
    let gens = minimal_generators(alg, &res.basis).map_err(Failure::computation)?;
    let shown = display_all(alg, fm, &gens);
    let mut text = format!("minimal generators ({}):\n", gens.len());
    for s in &shown {
        let _ = writeln!(text, "  {s}");
    }
    let mismatch = if check {
        let rad = radical_dims(inst)?;
        let head = rad[0] - rad.get(1).copied().unwrap_or(0);
        (head != gens.len()).then(|| format!("{} generators, but dim M / Rad M = {head}", gens.len()))
    } else {
        None
    };
    let json = json!({ "command": "mingens", "count": gens.len(), "generators": shown });
    Ok(Outcome { text, json, mismatch })
}

fn oracle(inst: &Instance) -> Result<Outcome, Failure> {
    let (alg, fm) = (&inst.algebra, &inst.module);
    let ech = module_echelon(alg, fm, &inst.generators).map_err(Failure::computation)?;
    let pivots: Vec<String> = ech.pivots().into_iter().map(|m| fm.display_monomial(alg, m)).collect();
    let rad = radical_dims(inst)?;
    let text = format!("dim M {}\npivots: {}\nradical dims {rad:?}\n", ech.dim(), pivots.join(", "));
    let json = json!({ "command": "oracle", "dim": ech.dim(), "pivots": pivots, "radical_dims": rad });
    Ok(Outcome { text, json, mismatch: None })
}

pub const BENCH_COLUMNS: [&str; 10] = [
    "instance", "p", "dim_a", "rank", "gens", "bb_processed", "bb_zero", "f5_processed", "f5_zero", "basis_size",
];

fn bench(seed: u64, count: usize, csv: Option<&PathBuf>) -> Result<Outcome, Failure> {
    let mut r = rng(seed);
    let params = RandomParams::default();
    let mut rows: Vec<[usize; 10]> = Vec::with_capacity(count);
    for i in 0..count {
        let (_, inst) = random_instance(&mut r, &params);
        let (_, bs) = buchberger_stdbasis(&inst.algebra, &inst.generators);
        let res = run_f5(&inst)?;
        rows.push([
            i,
            inst.algebra.field().characteristic() as usize,
            inst.algebra.dim(),
            inst.module.rank(),
            inst.generators.len(),
            bs.processed,
            bs.zero_reductions,
            res.stats.processed,
            res.stats.zero_reductions,
            res.stats.basis_size,
        ]);
    }
    let mut text = BENCH_COLUMNS.iter().map(|c| format!("{c:>14}")).collect::<String>();
    text.push('\n');
    for row in &rows {
        text.extend(row.iter().map(|v| format!("{v:>14}")));
        text.push('\n');
    }
    let (bz, fz): (usize, usize) = rows.iter().fold((0, 0), |(a, b), r| (a + r[6], b + r[8]));
    let _ = writeln!(text, "total zero reductions: stdbasis {bz}, f5 {fz}");
    if let Some(path) = csv {
        let mut s = BENCH_COLUMNS.join(",");
        s.push('\n');
        for row in &rows {
            s.push_str(&row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","));
            s.push('\n');
        }
        std::fs::write(path, s).map_err(|e| Failure { code: 1, message: format!("cannot write {}: {e}", path.display()) })?;
    }
    let json_rows: Vec<Value> = rows
        .iter()
        .map(|r| Value::Object(BENCH_COLUMNS.iter().zip(r).map(|(c, v)| (c.to_string(), json!(v))).collect()))
        .collect();
    let json = json!({
        "command": "bench",
        "seed": seed,
        "rows": json_rows,
        "total_zero_reductions": { "stdbasis": bz, "f5": fz },
    });
    Ok(Outcome { text, json, mismatch: None })
}
