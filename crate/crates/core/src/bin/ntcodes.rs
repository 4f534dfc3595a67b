//! Command-line front end: field and curve inspection, code construction,
//! dual weight analysis with caching, named theorem checks, and parameter
//! sweeps from a flat config file.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};

use nt_codes::checks::{self, CheckRequest, Verdict};
use nt_codes::code::{self, dual_weight_search, SearchOptions};
use nt_codes::curve::{Curve, Point};
use nt_codes::error::{Error, Result};
use nt_codes::families::CodeFamilySpec;
use nt_codes::gf::Field;
use nt_codes::report::{Cache, Report, RunConfig};

#[derive(Parser)]
#[command(name = "ntcodes", version, about = "evaluation codes on norm-trace curves")]
struct Cli {
    /// Seed for all randomized steps; recorded in every report.
    #[arg(long, global = true, default_value_t = 0xC0DE)]
    seed: u64,
    /// Worker threads for the parallel weight search (default: all cores).
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Directory for cached analysis reports.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Emit progress lines to stderr during long searches.
    #[arg(long, global = true)]
    progress: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Subcommand)]
enum Cmd {
    /// Finite-field inspection.
    Field {
        #[command(subcommand)]
        cmd: FieldCmd,
    },
    /// Norm-trace curve inspection.
    Curve {
        #[command(subcommand)]
        cmd: CurveCmd,
    },
    /// Code construction and weight analysis.
    Code {
        #[command(subcommand)]
        cmd: CodeCmd,
    },
    /// Run a named check against the enumeration oracle.
    Verify {
        #[command(flatten)]
        base: BaseArgs,
        /// One of the registered check names.
        #[arg(long)]
        check: String,
        #[arg(long)]
        d: Option<i64>,
        #[arg(long)]
        a: Option<u64>,
        #[arg(long)]
        b: Option<u64>,
        #[arg(long)]
        s: Option<i64>,
        #[arg(long)]
        trials: Option<u64>,
        #[arg(long)]
        e_points: Option<usize>,
        #[arg(long)]
        e_line: Option<String>,
    },
    /// Run a parameter grid from a flat key-value config file.
    Sweep {
        /// Config file; `key = value` lines, arrays as `[v1, v2]`.
        config: PathBuf,
    },
}

#[derive(Subcommand)]
enum FieldCmd {
    Info {
        #[command(flatten)]
        base: BaseArgs,
    },
}

#[derive(Subcommand)]
enum CurveCmd {
    Points {
        #[command(flatten)]
        base: BaseArgs,
    },
}

#[derive(Subcommand)]
enum CodeCmd {
    Build {
        #[command(flatten)]
        base: BaseArgs,
        #[command(flatten)]
        family: FamilyArgs,
    },
    Analyze {
        #[command(flatten)]
        base: BaseArgs,
        #[command(flatten)]
        family: FamilyArgs,
        /// Analyze the dual of the built code.
        #[arg(long)]
        dual: bool,
        /// Largest weight covered by the support search.
        #[arg(long, default_value_t = 4)]
        w_max: usize,
    },
}

#[derive(Args)]
struct BaseArgs {
    /// Subfield size q (any prime power).
    #[arg(long)]
    q: u64,
    /// Extension degree r >= 2.
    #[arg(long)]
    r: u32,
}

#[derive(Args)]
struct FamilyArgs {
    /// cd | cda | cdab | one_point | two_point
    #[arg(long)]
    family: String,
    #[arg(long)]
    d: Option<i64>,
    #[arg(long)]
    a: Option<u64>,
    #[arg(long)]
    b: Option<u64>,
    #[arg(long)]
    s: Option<i64>,
    #[arg(long)]
    m: Option<u64>,
    #[arg(long)]
    n: Option<u64>,
}

impl FamilyArgs {
    fn to_spec(&self) -> Result<CodeFamilySpec> {
        let need_d = || self.d.ok_or(Error::Config("family requires --d".into()));
        Ok(match self.family.as_str() {
            "cd" => CodeFamilySpec::Cd { d: need_d()? },
            "cda" => CodeFamilySpec::Cda {
                d: need_d()?,
                a: self.a.unwrap_or(0),
            },
            "cdab" => CodeFamilySpec::Cdab {
                d: need_d()?,
                a: self.a.unwrap_or(0),
                b: self.b.unwrap_or(0),
            },
            "one_point" => CodeFamilySpec::OnePoint {
                s: self.s.ok_or(Error::Config("one_point requires --s".into()))?,
            },
            "two_point" => CodeFamilySpec::TwoPoint {
                m: self.m.ok_or(Error::Config("two_point requires --m".into()))?,
                n: self.n.unwrap_or(0),
            },
            other => return Err(Error::Config(format!("unknown family {:?}", other))),
        })
    }
}

fn build_curve(base: &BaseArgs) -> Result<Curve> {
    Curve::build(Arc::new(Field::from_q(base.q, base.r)?))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(w) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(w).build_global() {
            eprintln!("error: workers: {}", e);
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<bool> {
    match &cli.cmd {
        Cmd::Field { cmd: FieldCmd::Info { base } } => {
            let f = Field::from_q(base.q, base.r)?;
            print_field_info(cli.format, &f);
            Ok(true)
        }
        Cmd::Curve { cmd: CurveCmd::Points { base } } => {
            let curve = build_curve(base)?;
            print_points(cli.format, &curve);
            Ok(true)
        }
        Cmd::Code { cmd: CodeCmd::Build { base, family } } => {
            let curve = build_curve(base)?;
            let spec = family.to_spec()?;
            let code = spec.build(&curve)?;
            print_built(cli.format, &spec, &code);
            Ok(true)
        }
        Cmd::Code { cmd: CodeCmd::Analyze { base, family, dual, w_max } } => {
            let report = analyze(cli, base, family, *dual, *w_max)?;
            print_report(cli.format, &report);
            Ok(true)
        }
        Cmd::Verify { base, check, d, a, b, s, trials, e_points, e_line } => {
            let curve = build_curve(base)?;
            let req = CheckRequest {
                name: check.clone(),
                d: *d,
                a: *a,
                b: *b,
                s: *s,
                trials: *trials,
                e_points: *e_points,
                e_line: e_line.clone(),
            };
            let outcome = checks::run_check(&curve, &req, cli.seed)?;
            let ok = outcome.verdict != Verdict::Fail;
            let mut report = Report::new(RunConfig {
                q: base.q,
                r: base.r,
                family: None,
                check: Some(check.clone()),
                dual: false,
                w_max: None,
                seed: cli.seed,
            });
            report.elapsed_ms = outcome.elapsed_ms;
            report.checks.push(outcome);
            print_report(cli.format, &report);
            Ok(ok)
        }
        Cmd::Sweep { config } => sweep(cli, config),
    }
}

fn analyze(
    cli: &Cli,
    base: &BaseArgs,
    family: &FamilyArgs,
    dual: bool,
    w_max: usize,
) -> Result<Report> {
    let spec = family.to_spec()?;
    let config = RunConfig {
        q: base.q,
        r: base.r,
        family: Some(spec.clone()),
        check: None,
        dual,
        w_max: Some(w_max),
        seed: cli.seed,
    };
    let cache = match &cli.cache_dir {
        Some(dir) => Some(Cache::new(dir)?),
        None => None,
    };
    let key = config.cache_key();
    if let Some(c) = &cache {
        if let Some(hit) = c.load(&key) {
            return Ok(hit);
        }
    }
    let curve = build_curve(base)?;
    let code = spec.build(&curve)?;
    let check_matrix = if dual {
        code.gen.clone()
    } else {
        code::dual(&code).gen
    };
    let opts = SearchOptions { progress: cli.progress };
    let mut wrep = dual_weight_search(&check_matrix, &code.points, w_max, opts);
    wrep.classify_supports(&curve);
    let mut report = Report::new(config);
    report.n = Some(code.n());
    report.k = Some(if dual { code.n() - code.k() } else { code.k() });
    report.attach_weights(&wrep);
    if let Some(c) = &cache {
        c.store(&key, &report)?;
    }
    Ok(report)
}

// ---- sweep ----

/// Flat key-value grammar: one `key = value` per line, `#` comments, arrays
/// as `[v1, v2, ...]`. Every array-valued key contributes one grid axis.
fn parse_sweep_config(text: &str) -> Result<BTreeMap<String, Vec<String>>> {
    let mut out = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Error::Config(format!(
                "line {}: expected `key = value`",
                lineno + 1
            )));
        };
        let key = key.trim().to_string();
        let value = value.trim();
        let values: Vec<String> = if value.starts_with('[') && value.ends_with(']') {
            value[1..value.len() - 1]
                .split(',')
                .map(|v| v.trim().to_string())
                .filter(|v| !v.is_empty())
                .collect()
        } else {
            vec![value.to_string()]
        };
        if values.is_empty() {
            return Err(Error::Config(format!("line {}: empty array", lineno + 1)));
        }
        out.insert(key, values);
    }
    Ok(out)
}

fn cartesian(grid: &BTreeMap<String, Vec<String>>) -> Vec<BTreeMap<String, String>> {
    let mut combos = vec![BTreeMap::new()];
    for (key, values) in grid {
        let mut next = Vec::with_capacity(combos.len() * values.len());
        for combo in &combos {
            for v in values {
                let mut c = combo.clone();
                c.insert(key.clone(), v.clone());
                next.push(c);
            }
        }
        combos = next;
    }
    combos
}

fn get_parsed<T: std::str::FromStr>(
    combo: &BTreeMap<String, String>,
    key: &str,
) -> Result<Option<T>> {
    match combo.get(key) {
        None => Ok(None),
        Some(v) => v
            .parse::<T>()
            .map(Some)
            .map_err(|_| Error::Config(format!("bad value {:?} for {}", v, key))),
    }
}

fn sweep(cli: &Cli, path: &PathBuf) -> Result<bool> {
    let text = std::fs::read_to_string(path)?;
    let grid = parse_sweep_config(&text)?;
    let combos = cartesian(&grid);
    let mut all_ok = true;
    for combo in &combos {
        let q: u64 = get_parsed(combo, "q")?.ok_or(Error::Config("sweep requires q".into()))?;
        let r: u32 = get_parsed(combo, "r")?.ok_or(Error::Config("sweep requires r".into()))?;
        let base = BaseArgs { q, r };
        let ok = if let Some(check) = combo.get("check") {
            let curve = build_curve(&base)?;
            let req = CheckRequest {
                name: check.clone(),
                d: get_parsed(combo, "d")?,
                a: get_parsed(combo, "a")?,
                b: get_parsed(combo, "b")?,
                s: get_parsed(combo, "s")?,
                trials: get_parsed(combo, "trials")?,
                e_points: get_parsed(combo, "e_points")?,
                e_line: combo.get("e_line").cloned(),
            };
            let outcome = checks::run_check(&curve, &req, cli.seed)?;
            println!(
                "{} {:?} q={} r={} {}",
                outcome.id,
                outcome.verdict,
                q,
                r,
                outcome
                    .params
                    .iter()
                    .map(|(k, v)| format!("{}={}", k, v))
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            outcome.verdict != Verdict::Fail
        } else {
            let family = FamilyArgs {
                family: combo
                    .get("family")
                    .cloned()
                    .ok_or(Error::Config("sweep requires family or check".into()))?,
                d: get_parsed(combo, "d")?,
                a: get_parsed(combo, "a")?,
                b: get_parsed(combo, "b")?,
                s: get_parsed(combo, "s")?,
                m: get_parsed(combo, "m")?,
                n: get_parsed(combo, "n")?,
            };
            let dual = get_parsed::<bool>(combo, "dual")?.unwrap_or(true);
            let w_max = get_parsed::<usize>(combo, "w_max")?.unwrap_or(4);
            let report = analyze(cli, &base, &family, dual, w_max)?;
            println!(
                "{} n={} k={} distance={}",
                report.config.cache_key(),
                report.n.unwrap_or(0),
                report.k.unwrap_or(0),
                report
                    .distance
                    .map_or("none".to_string(), |d| d.to_string())
            );
            true
        };
        all_ok &= ok;
    }
    println!("sweep: {} runs, {}", combos.len(), if all_ok { "all ok" } else { "FAILURES" });
    Ok(all_ok)
}

// ---- output ----

fn print_field_info(format: Format, f: &Field) {
    let modulus: Vec<u32> = f.modulus().to_vec();
    match format {
        Format::Json => {
            let obj = serde_json::json!({
                "p": f.p, "e": f.e, "r": f.r, "q": f.q,
                "order": f.order, "c": f.c,
                "modulus_coeffs_low_to_high": modulus,
                "log_tables": f.has_tables(),
            });
            println!("{}", serde_json::to_string_pretty(&obj).unwrap());
        }
        Format::Csv => {
            println!("p,e,r,q,order,c");
            println!("{},{},{},{},{},{}", f.p, f.e, f.r, f.q, f.order, f.c);
        }
        Format::Table => {
            println!("p       = {}", f.p);
            println!("e       = {}", f.e);
            println!("r       = {}", f.r);
            println!("q       = {}", f.q);
            println!("order   = {}", f.order);
            println!("c       = {}", f.c);
            println!("modulus = {:?} (constant term first)", modulus);
            println!("tables  = {}", f.has_tables());
        }
    }
}

fn print_points(format: Format, curve: &Curve) {
    let f = &curve.field;
    match format {
        Format::Json => {
            let rows: Vec<serde_json::Value> = curve
                .affine_points
                .iter()
                .map(|p| {
                    let Point::Affine(x, y) = *p else { unreachable!() };
                    serde_json::json!({
                        "x_index": x.0, "y_index": y.0,
                        "x_poly": f.poly_string(x), "y_poly": f.poly_string(y),
                    })
                })
                .collect();
            println!("{}", serde_json::to_string_pretty(&rows).unwrap());
        }
        _ => {
            println!("x_index,y_index,x_poly,y_poly");
            for p in &curve.affine_points {
                let Point::Affine(x, y) = *p else { unreachable!() };
                println!("{},{},{},{}", x.0, y.0, f.poly_string(x), f.poly_string(y));
            }
        }
    }
}

fn print_built(format: Format, spec: &CodeFamilySpec, code: &nt_codes::LinearCode) {
    match format {
        Format::Json => {
            let rows: Vec<Vec<u32>> = (0..code.k())
                .map(|i| code.gen.row(i).iter().map(|c| c.0).collect())
                .collect();
            let obj = serde_json::json!({
                "family": spec.key(), "n": code.n(), "k": code.k(), "gen": rows,
            });
            println!("{}", serde_json::to_string_pretty(&obj).unwrap());
        }
        Format::Csv => {
            println!("family,n,k");
            println!("{},{},{}", spec.key(), code.n(), code.k());
            for i in 0..code.k() {
                let row: Vec<String> =
                    code.gen.row(i).iter().map(|c| c.0.to_string()).collect();
                println!("{}", row.join(","));
            }
        }
        Format::Table => {
            println!("family = {}", spec.key());
            println!("n      = {}", code.n());
            println!("k      = {}", code.k());
            for i in 0..code.k() {
                let row: Vec<String> =
                    code.gen.row(i).iter().map(|c| c.0.to_string()).collect();
                println!("  [{}]", row.join(" "));
            }
        }
    }
}

fn print_report(format: Format, report: &Report) {
    match format {
        Format::Json => {
            println!("{}", serde_json::to_string_pretty(report).unwrap());
        }
        Format::Csv => {
            println!("key,value");
            println!("cache_key,{}", report.config.cache_key());
            if let Some(n) = report.n {
                println!("n,{}", n);
            }
            if let Some(k) = report.k {
                println!("k,{}", k);
            }
            if let Some(d) = report.distance {
                println!("distance,{}", d);
            }
            for (w, c) in &report.counts {
                println!("count_w{},{}", w, c);
            }
            for chk in &report.checks {
                println!("check_{},{:?}", chk.id, chk.verdict);
            }
            println!("elapsed_ms,{}", report.elapsed_ms);
            println!("seed,{}", report.seed);
        }
        Format::Table => {
            println!("run      = {}", report.config.cache_key());
            if let (Some(n), Some(k)) = (report.n, report.k) {
                println!("n, k     = {}, {}", n, k);
            }
            if let Some(d) = report.distance {
                println!("distance = {}", d);
            } else if report.config.w_max.is_some() {
                println!("distance = none found within the searched band");
            }
            for (w, c) in &report.counts {
                println!("  weight {}: {} codewords", w, c);
            }
            if !report.supports.is_empty() {
                let shown = report.supports.len().min(5);
                println!("supports (showing {} of {}):", shown, report.supports.len());
                for s in report.supports.iter().take(shown) {
                    println!(
                        "  points {:?} line {:?} class {:?}",
                        s.points, s.line, s.class
                    );
                }
            }
            for chk in &report.checks {
                println!("check {} -> {:?}", chk.id, chk.verdict);
                for (k, v) in &chk.claimed {
                    println!("  claimed  {} = {}", k, v);
                }
                for (k, v) in &chk.computed {
                    println!("  computed {} = {}", k, v);
                }
                if let Some(w) = &chk.witness {
                    println!("  witness: {}", w);
                }
            }
            println!("elapsed  = {} ms (seed {})", report.elapsed_ms, report.seed);
        }
    }
}
