//! `abnorm`: enumerate abelian ideals, query normalisers, gradings and minimal
//! movers, and run the verification suite.
//!
//! Exit codes: 0 success, 1 a theorem check failed or the engine hit an internal
//! error, 2 usage or input error.

mod input;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use abnorm::gradings;
use abnorm::ideals::{AbelianCatalogue, AbelianIdeal, UpperIdeal};
use abnorm::normalisers::{self, Method};
use abnorm::verify::{self, Report, Verdict, VerifyConfig};
use abnorm::{build_root_system, RootSystem, SimpleSubset, SimpleTypeId};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use input::{Labels, Numbering};
use render::{Format, Output};

/// Directory used for output files when `--output` is relative or absent.
const OUT_DIR_ENV: &str = "ABNORM_OUT_DIR";

#[derive(Parser, Debug)]
#[command(name = "abnorm", version, about = "Abelian ideals of a Borel subalgebra, their normalisers and Z-gradings")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Types: `E6`, `Dn4`, `A1..E8`, `all:rank<=8`, or a comma list.
    #[arg(long = "type", global = true, default_value = "all:rank<=8")]
    type_spec: String,
    /// Labelling of simple roots in input and output.
    #[arg(long, global = true, value_enum, default_value = "bourbaki")]
    numbering: Numbering,
    #[arg(long, global = true, value_enum, default_value = "markdown")]
    format: Format,
    /// Seed for sampled upper ideals.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Sampled upper ideals per type above the exhaustive rank.
    #[arg(long, global = true, default_value_t = 10_000)]
    sample: usize,
    /// Output file; relative paths are resolved against $ABNORM_OUT_DIR when set.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Read `--ideal` as `;`-separated roots instead of root indices.
    #[arg(long, global = true)]
    roots_as_coeffs: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Positive roots in canonical index order.
    Roots,
    /// Abelian ideals with rootlets, dimensions and fibre roles.
    List,
    /// The abelian ideals with a given rootlet.
    Fiber {
        #[arg(long)]
        rootlet: String,
    },
    /// Normaliser of the upper ideal generated by the given roots.
    Normaliser {
        #[arg(long, allow_hyphen_values = true)]
        ideal: String,
        /// bracket, via-min, via-max, minuscule or all.
        #[arg(long, default_value = "all")]
        method: String,
    },
    /// Minimal element w with w(θ) = μ.
    Mover {
        #[arg(long)]
        root: String,
    },
    /// Z-grading attached to a set of simple roots.
    Grading {
        /// Simple roots of degree 1, e.g. `1,3`.
        #[arg(long, default_value = "")]
        support: String,
        /// Report 𝔤(≥j) for this j.
        #[arg(long)]
        tail: Option<i32>,
    },
    /// Exhaustive scan of f₁, f₂, ℱ and ℱ̃.
    Maps,
    /// Run the check registry.
    Verify {
        /// Comma-separated check ids.
        #[arg(long)]
        checks: Option<String>,
        /// Include per-check wall-clock times (not reproducible).
        #[arg(long)]
        timings: bool,
    },
    /// Report-only scan of the conjectural properties of ℱ and ℱ̃.
    Conjectures,
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<abnorm::Error> for Failure {
    fn from(e: abnorm::Error) -> Self {
        match e {
            abnorm::Error::Internal(_) => Failure::Runtime(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type CliResult<T> = Result<T, Failure>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(Failure::Usage(msg.into()))
}

struct Single {
    rs: RootSystem,
    labels: Labels,
}

fn single(g: &Global, command: &str) -> CliResult<Single> {
    let types = input::parse_types(&g.type_spec).map_err(Failure::Usage)?;
    if types.len() != 1 {
        return usage(format!(
            "'{command}' needs exactly one type, but '{}' selects {}",
            g.type_spec,
            types.len()
        ));
    }
    let labels = Labels::new(g.numbering, types[0]).map_err(Failure::Usage)?;
    Ok(Single { rs: build_root_system(types[0]), labels })
}

fn many(g: &Global) -> CliResult<Vec<SimpleTypeId>> {
    let types = input::parse_types(&g.type_spec).map_err(Failure::Usage)?;
    if g.numbering == Numbering::PaperE6 {
        for &t in &types {
            Labels::new(g.numbering, t).map_err(Failure::Usage)?;
        }
    }
    Ok(types)
}

fn ideal_record(s: &Single, cat: &AbelianCatalogue, pos: usize) -> Value {
    let (rs, l) = (&s.rs, &s.labels);
    let ideal = &cat.ideals[pos];
    let rootlet = cat.rootlets[pos];
    let role = match rootlet.and_then(|mu| cat.fiber(mu)) {
        None => "zero",
        Some(f) if f.min_ideal == *ideal && f.max_ideal == *ideal => "min=max",
        Some(f) if f.min_ideal == *ideal => "min",
        Some(f) if f.max_ideal == *ideal => "max",
        Some(_) => "interior",
    };
    json!({
        "index": pos,
        "ideal": ideal.roots().indices(),
        "roots": ideal.roots().iter().map(|i| l.root_string(rs, i)).collect::<Vec<_>>(),
        "dim": ideal.dim(),
        "rootlet": rootlet.map(|mu| l.root_string(rs, mu)),
        "fibre_role": role,
        "word": l.letters(cat.words[pos].letters()),
    })
}

fn cmd_roots(g: &Global) -> CliResult<Output> {
    let s = single(g, "roots")?;
    let rs = &s.rs;
    let records: Vec<Value> = (0..rs.num_pos())
        .map(|i| {
            json!({
                "index": i,
                "root": s.labels.root_string(rs, i),
                "height": rs.root(i).height(),
                "long": rs.is_long(i),
                "theta_product": rs.inner_idx(i, rs.theta()),
            })
        })
        .collect();
    Ok(Output { title: format!("Positive roots of {}", rs.type_id()), records: Value::Array(records) })
}

fn cmd_list(g: &Global) -> CliResult<Output> {
    let s = single(g, "list")?;
    let cat = AbelianCatalogue::build(&s.rs)?;
    let records = (0..cat.ideals.len()).map(|p| ideal_record(&s, &cat, p)).collect();
    Ok(Output { title: format!("Abelian ideals of {}", s.rs.type_id()), records: Value::Array(records) })
}

fn cmd_fiber(g: &Global, rootlet: &str) -> CliResult<Output> {
    let s = single(g, "fiber")?;
    let mu = input::parse_root(&s.rs, &s.labels, rootlet).map_err(Failure::Usage)?;
    if !s.rs.is_long(mu) {
        return usage(format!("rootlet '{rootlet}' is not a long root"));
    }
    let cat = AbelianCatalogue::build(&s.rs)?;
    let records = (0..cat.ideals.len())
        .filter(|&p| cat.rootlets[p] == Some(mu))
        .map(|p| ideal_record(&s, &cat, p))
        .collect();
    Ok(Output {
        title: format!("Fibre over {} in {}", s.labels.root_string(&s.rs, mu), s.rs.type_id()),
        records: Value::Array(records),
    })
}

fn subset_record(l: &Labels, sub: &SimpleSubset) -> (Vec<usize>, Vec<usize>) {
    (l.labels(&sub.levi_indices()), l.labels(&sub.excluded_indices()))
}

fn cmd_normaliser(g: &Global, ideal: &str, method: &str) -> CliResult<Output> {
    let s = single(g, "normaliser")?;
    let rs = &s.rs;
    let gens = input::parse_ideal(rs, &s.labels, ideal, g.roots_as_coeffs).map_err(Failure::Usage)?;
    let u = UpperIdeal::generated_by(rs, gens.iter().copied());
    let methods: Vec<Method> = if method == "all" {
        Method::ALL.to_vec()
    } else {
        vec![method
            .parse()
            .map_err(|_| Failure::Usage(format!("unknown method '{method}'")))?]
    };
    let abelian = u.is_abelian(rs);
    let mut records = Vec::new();
    for m in methods {
        let mut rec = json!({
            "method": m.name(),
            "generators": gens,
            "ideal": u.roots().indices(),
            "abelian": abelian,
        });
        match normalisers::normaliser(rs, &u, m) {
            Ok(sub) => {
                let (levi, excluded) = subset_record(&s.labels, &sub);
                rec["levi_simples"] = json!(levi);
                rec["excluded_simples"] = json!(excluded);
            }
            Err(abnorm::Error::Domain(msg)) if method == "all" => rec["skipped"] = json!(msg),
            Err(e) => return Err(e.into()),
        }
        records.push(rec);
    }
    Ok(Output { title: format!("Normaliser in {}", rs.type_id()), records: Value::Array(records) })
}

fn cmd_mover(g: &Global, root: &str) -> CliResult<(Output, String)> {
    let s = single(g, "mover")?;
    let mu = input::parse_root(&s.rs, &s.labels, root).map_err(Failure::Usage)?;
    if !s.rs.is_long(mu) {
        return usage(format!("root '{root}' is not a long root"));
    }
    let w = abnorm::weyl::minimal_mover_idx(&s.rs, mu)?;
    let letters = s.labels.letters(w.letters());
    let word = letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ");
    let out = Output {
        title: format!("Minimal mover for {} in {}", s.labels.root_string(&s.rs, mu), s.rs.type_id()),
        records: json!([{ "root": s.labels.root_string(&s.rs, mu), "word": word, "length": letters.len() }]),
    };
    Ok((out, word))
}

fn cmd_grading(g: &Global, support: &str, tail: Option<i32>) -> CliResult<Output> {
    let s = single(g, "grading")?;
    let rs = &s.rs;
    let ks = input::parse_support(&s.labels, support).map_err(Failure::Usage)?;
    let sub = SimpleSubset::from_indices(rs.rank(), ks, abnorm::SubsetRole::Excluded);
    let gr = gradings::grading(rs, &sub);
    let f2: AbelianIdeal = gradings::f2(rs, &sub)?;
    let mut rec = json!({
        "support": s.labels.labels(&sub.excluded_indices()),
        "height": gr.height,
        "abelian_threshold": gradings::abelian_threshold(gr.height),
        "degrees": gr.degrees,
        "f2": f2.roots().indices(),
    });
    if let Some(j) = tail {
        let t = gradings::tail(rs, &sub, j)?;
        rec["tail_from"] = json!(j);
        rec["tail"] = json!(t.roots().indices());
        rec["tail_abelian"] = json!(t.is_abelian(rs));
    }
    Ok(Output { title: format!("Grading of {}", rs.type_id()), records: json!([rec]) })
}

fn cmd_maps(g: &Global) -> CliResult<Output> {
    let types = many(g)?;
    let mut records = Vec::new();
    for t in types {
        let report = gradings::scan_maps(&build_root_system(t))?;
        records.push(serde_json::to_value(&report).map_err(|e| Failure::Runtime(e.to_string()))?);
    }
    Ok(Output { title: "Maps f1, f2, F and F~".into(), records: Value::Array(records) })
}

fn run_report(g: &Global, checks: Option<Vec<String>>, timings: bool) -> CliResult<Report> {
    let types = many(g)?;
    let config = VerifyConfig { seed: g.seed, sample_size: g.sample, checks, timings, ..Default::default() };
    Ok(verify::run_all(&types, &config)?)
}

fn report_text(report: &Report, format: Format) -> String {
    match format {
        Format::Json => report.to_json() + "\n",
        Format::Markdown => report.to_markdown(),
        Format::Csv => {
            let records: Vec<Value> = report
                .results
                .iter()
                .map(|r| {
                    let reason = match &r.verdict {
                        Verdict::Skipped { reason } => reason.clone(),
                        _ => String::new(),
                    };
                    let verdict = serde_json::to_value(&r.verdict).expect("verdict serialises");
                    json!({
                        "check_id": r.check_id,
                        "type": r.type_id.to_string(),
                        "verdict": verdict["verdict"],
                        "reason": reason,
                        "witnesses": Value::Array(r.witnesses.clone()).to_string(),
                    })
                })
                .collect();
            render::csv(&Output { title: String::new(), records: Value::Array(records) })
        }
    }
}

fn emit(g: &Global, command: &str, text: &str) -> CliResult<()> {
    let dir = std::env::var_os(OUT_DIR_ENV).map(PathBuf::from);
    let path = match (&g.output, dir) {
        (Some(p), Some(d)) if p.is_relative() => Some(d.join(p)),
        (Some(p), _) => Some(p.clone()),
        (None, Some(d)) => Some(d.join(format!("{command}.{}", g.format.extension()))),
        (None, None) => None,
    };
    match path {
        Some(p) => std::fs::write(&p, text)
            .map_err(|e| Failure::Usage(format!("cannot write '{}': {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn dispatch(cli: Cli) -> CliResult<bool> {
    let g = &cli.global;
    let (name, text, ok) = match &cli.command {
        Command::Roots => ("roots", render::render(&cmd_roots(g)?, g.format), true),
        Command::List => ("list", render::render(&cmd_list(g)?, g.format), true),
        Command::Fiber { rootlet } => ("fiber", render::render(&cmd_fiber(g, rootlet)?, g.format), true),
        Command::Normaliser { ideal, method } => {
            ("normaliser", render::render(&cmd_normaliser(g, ideal, method)?, g.format), true)
        }
        Command::Mover { root } => {
            let (out, word) = cmd_mover(g, root)?;
            let text = match g.format {
                Format::Markdown => word + "\n",
                f => render::render(&out, f),
            };
            ("mover", text, true)
        }
        Command::Grading { support, tail } => ("grading", render::render(&cmd_grading(g, support, *tail)?, g.format), true),
        Command::Maps => ("maps", render::render(&cmd_maps(g)?, g.format), true),
        Command::Verify { checks, timings } => {
            let checks = checks
                .as_ref()
                .map(|c| c.split(',').map(|x| x.trim().to_string()).filter(|x| !x.is_empty()).collect());
            let report = run_report(g, checks, *timings)?;
            ("verify", report_text(&report, g.format), !report.failed())
        }
        Command::Conjectures => {
            let report = run_report(g, Some(vec!["scan_conjectures".into()]), false)?;
            ("conjectures", report_text(&report, g.format), true)
        }
    };
    emit(g, name, &text)?;
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
