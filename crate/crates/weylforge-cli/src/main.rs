//! Command-line front end: inspect Weyl groups, emit invariant generators,
//! build and certify norms, evaluate flat distances, and answer
//! classification queries. All JSON output is deterministic: identical
//! inputs and seeds produce byte-identical bytes.
//!
//! Exit codes: 0 success, 2 usage or unknown input, 3 certification
//! failure (non-positive term or failed convexity), 4 numerical
//! degeneracy (orbit caps, singular directions).

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use std::path::PathBuf;
use std::process::ExitCode;
use weylforge::classify;
use weylforge::exact::{format_q, parse_q, Q};
use weylforge::invariants::{self, Parity, TrigKind};
use weylforge::jsonfmt;
use weylforge::normforge::certify::CertifyOptions;
use weylforge::normforge::{self, eigen, NormDescription, NormError, NormMode, NormSpec};
use weylforge::rootsys::{build_root_system, TypeLabel};
use weylforge::weylgrp::generate_weyl_group;

#[derive(Parser)]
#[command(name = "weylforge", version, about = "Root systems, Weyl groups, invariants, and certified Minkowski norms")]
struct Cli {
    #[command(flatten)]
    global: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct GlobalOpts {
    /// Seed behind every sampling path.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    /// Approximate sphere sample count for certification.
    #[arg(long, global = true)]
    samples: Option<usize>,
    /// Certification tolerance on the minimum eigenvalue.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,
    /// Emit machine-readable JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Weyl-group enumeration cap (elements).
    #[arg(long, global = true, env = "WEYLFORGE_CAP", default_value_t = 10_000_000)]
    cap: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect a Weyl group: order, -id membership, degrees.
    Weyl {
        /// Type label: A, B, C, BC, D, E, F, G (or E6/E7/E8/F4/G2).
        type_label: String,
        rank: usize,
    },
    /// List the invariant generators of a Weyl group.
    Invariants {
        type_label: String,
        rank: usize,
        /// Restrict output to generators of this degree.
        #[arg(long)]
        degree: Option<u32>,
        /// Evaluate each generator at this comma-separated point.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
        /// Include the trigonometric generators in the report.
        #[arg(long)]
        trig: bool,
    },
    /// Build a norm from a spec file; write the resolved norm and its
    /// certificate.
    BuildNorm {
        spec: PathBuf,
        /// Output path for the resolved norm description.
        #[arg(short, long, default_value = "norm.json")]
        out: PathBuf,
        /// Output path for the convexity certificate.
        #[arg(long, default_value = "certificate.json")]
        cert: PathBuf,
    },
    /// Re-certify a previously built norm file.
    Certify {
        norm: PathBuf,
        /// Output path for the certificate (stdout when omitted).
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a norm at a point.
    Eval {
        norm: PathBuf,
        /// Comma-separated coordinates.
        #[arg(long, allow_hyphen_values = true)]
        at: String,
        /// Also print the gradient.
        #[arg(long)]
        grad: bool,
    },
    /// Distance d(x, y) = L(y - x) in the flat model.
    Distance {
        norm: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        from: String,
        #[arg(long, allow_hyphen_values = true)]
        to: String,
        /// Print d(x,y) and d(y,x).
        #[arg(long)]
        both_orders: bool,
    },
    /// Project onto the dominant chamber: eigenvalue spectrum of a
    /// symmetric matrix, or the chamber representative of a vector.
    OrbitProject {
        /// Symmetric matrix, rows separated by ';', entries by ','.
        #[arg(long, allow_hyphen_values = true)]
        matrix: Option<String>,
        /// Group type for --vector projection.
        #[arg(long)]
        type_label: Option<String>,
        #[arg(long)]
        rank: Option<usize>,
        /// Exact rational vector, comma-separated (entries like 3 or -1/2).
        #[arg(long, allow_hyphen_values = true)]
        vector: Option<String>,
    },
    /// Classification queries against the symmetric-space catalog.
    Classify {
        /// Space name, e.g. "SU(3)/SO(3)".
        name: Option<String>,
        /// Dump the whole catalog.
        #[arg(long)]
        dump: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {}", err.message);
            ExitCode::from(err.code)
        }
    }
}

struct CmdError {
    code: u8,
    message: String,
}

impl CmdError {
    fn usage(message: impl Into<String>) -> CmdError {
        CmdError { code: 2, message: message.into() }
    }
}

fn norm_error(err: NormError) -> CmdError {
    let code = match &err {
        NormError::NotPositive { .. } | NormError::ConvexityFail(_) => 3,
        NormError::NonFiniteHessian => 4,
        NormError::Invariant(invariants::InvariantError::DegenerateSample) => 4,
        NormError::Invariant(invariants::InvariantError::OrbitCapExceeded) => 4,
        NormError::Weyl(weylforge::weylgrp::WeylError::OrbitCapExceeded(_)) => 4,
        _ => 2,
    };
    let message = match &err {
        NormError::NotPositive { worst, value } => {
            format!("{err}\nworst point: {worst:?} (value {value})")
        }
        NormError::ConvexityFail(cert) => format!(
            "{err}\nworst point: {:?} (min eigenvalue {})",
            cert.worst_point, cert.min_eigenvalue
        ),
        _ => err.to_string(),
    };
    CmdError { code, message }
}

fn run(cli: &Cli) -> Result<ExitCode, CmdError> {
    match &cli.command {
        Command::Weyl { type_label, rank } => cmd_weyl(cli, type_label, *rank),
        Command::Invariants { type_label, rank, degree, at, trig } => {
            cmd_invariants(cli, type_label, *rank, *degree, at.as_deref(), *trig)
        }
        Command::BuildNorm { spec, out, cert } => cmd_build_norm(cli, spec, out, cert),
        Command::Certify { norm, out } => cmd_certify(cli, norm, out.as_deref()),
        Command::Eval { norm, at, grad } => cmd_eval(cli, norm, at, *grad),
        Command::Distance { norm, from, to, both_orders } => {
            cmd_distance(cli, norm, from, to, *both_orders)
        }
        Command::OrbitProject { matrix, type_label, rank, vector } => cmd_orbit_project(
            cli,
            matrix.as_deref(),
            type_label.as_deref(),
            *rank,
            vector.as_deref(),
        ),
        Command::Classify { name, dump } => cmd_classify(cli, name.as_deref(), *dump),
    }
}

fn parse_type(type_label: &str, rank: usize) -> Result<TypeLabel, CmdError> {
    TypeLabel::parse_with_rank(type_label, rank)
        .filter(|l| l.admissible_rank(rank))
        .ok_or_else(|| CmdError::usage(format!("unknown type/rank: {type_label} {rank}")))
}

fn parse_f64_vec(text: &str) -> Result<Vec<f64>, CmdError> {
    text.split(',')
        .map(|s| s.trim().parse::<f64>().map_err(|e| CmdError::usage(format!("bad number `{s}`: {e}"))))
        .collect()
}

fn parse_q_vec(text: &str) -> Result<Vec<Q>, CmdError> {
    text.split(',')
        .map(|s| parse_q(s).ok_or_else(|| CmdError::usage(format!("bad rational `{s}`"))))
        .collect()
}

fn certify_opts(global: &GlobalOpts, dim: usize) -> CertifyOptions {
    let mut opts = match global.samples {
        Some(total) => CertifyOptions::with_total(total, dim),
        None => CertifyOptions::default(),
    };
    opts.seed = global.seed;
    opts.tolerance = global.tol;
    opts
}

fn print_json<T: Serialize>(value: &T) -> Result<(), CmdError> {
    let text = jsonfmt::to_string(value)
        .map_err(|e| CmdError { code: 2, message: format!("serialization failed: {e}") })?;
    println!("{text}");
    Ok(())
}

fn write_json_file<T: Serialize>(path: &std::path::Path, value: &T) -> Result<(), CmdError> {
    let text = jsonfmt::to_string_pretty(value)
        .map_err(|e| CmdError { code: 2, message: format!("serialization failed: {e}") })?;
    std::fs::write(path, text + "\n")
        .map_err(|e| CmdError { code: 2, message: format!("cannot write {}: {e}", path.display()) })
}

#[derive(Serialize)]
struct WeylReport {
    #[serde(rename = "type")]
    type_label: String,
    rank: usize,
    abstract_label: String,
    order: u128,
    contains_minus_id: bool,
    enumerated: bool,
    degrees: Vec<u32>,
    positive_roots: usize,
    degree_sum_rule: bool,
}

fn cmd_weyl(cli: &Cli, type_label: &str, rank: usize) -> Result<ExitCode, CmdError> {
    let label = parse_type(type_label, rank)?;
    let system = build_root_system(label, rank)
        .map_err(|e| CmdError::usage(e.to_string()))?;
    let positive_roots = system.positive.len();
    let group = generate_weyl_group(system, cli.global.cap)
        .map_err(|e| CmdError::usage(e.to_string()))?;
    let degrees = invariants::chevalley_degrees(label, rank)
        .map_err(|e| CmdError::usage(e.to_string()))?;
    let reduced_positive = if label == TypeLabel::BC {
        // the degree sum rule refers to the reduced system with this group
        build_root_system(TypeLabel::B, rank)
            .map(|s| s.positive.len())
            .unwrap_or(positive_roots)
    } else {
        positive_roots
    };
    let report = WeylReport {
        type_label: label.to_string(),
        rank,
        abstract_label: group.abstract_label.to_string(),
        order: group.order,
        contains_minus_id: group.contains_minus_id,
        enumerated: group.is_enumerated(),
        degrees: degrees.clone(),
        positive_roots,
        degree_sum_rule: invariants::degree_sum_rule_holds(label, rank, reduced_positive),
    };
    if cli.global.json {
        print_json(&report)?;
    } else {
        println!("type: {}_{rank} (W = {})", label, report.abstract_label);
        println!("order: {}", report.order);
        println!("enumerated: {}", report.enumerated);
        println!("contains_minus_id: {}", report.contains_minus_id);
        println!("degrees: {degrees:?}");
        println!("positive roots: {positive_roots}");
        println!(
            "sum(m_i - 1) = {} matches reduced positive-root count: {}",
            degrees.iter().map(|m| m - 1).sum::<u32>(),
            report.degree_sum_rule
        );
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct GeneratorReport {
    degree: u32,
    weight_index: usize,
    orbit_size: usize,
    parity: Parity,
    #[serde(skip_serializing_if = "Option::is_none")]
    value_at: Option<f64>,
}

#[derive(Serialize)]
struct InvariantsReport {
    #[serde(rename = "type")]
    type_label: String,
    rank: usize,
    skew_invariants_exist: bool,
    generators: Vec<GeneratorReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    trigonometric: Vec<TrigReport>,
}

#[derive(Serialize)]
struct TrigReport {
    weight_index: usize,
    kind: TrigKind,
    orbit_size: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    value_at: Option<f64>,
}

fn cmd_invariants(
    cli: &Cli,
    type_label: &str,
    rank: usize,
    degree: Option<u32>,
    at: Option<&str>,
    trig: bool,
) -> Result<ExitCode, CmdError> {
    let label = parse_type(type_label, rank)?;
    let system = build_root_system(label, rank).map_err(|e| CmdError::usage(e.to_string()))?;
    let group = generate_weyl_group(system, cli.global.cap)
        .map_err(|e| CmdError::usage(e.to_string()))?;
    let gens = invariants::homogeneous_generators(&group).map_err(|e| CmdError {
        code: if matches!(e, invariants::InvariantError::DegenerateSample) { 4 } else { 2 },
        message: e.to_string(),
    })?;
    let point = at.map(parse_f64_vec).transpose()?;
    if let Some(p) = &point {
        if p.len() != group.system.ambient_dim {
            return Err(CmdError::usage(format!(
                "point has {} coordinates, ambient dimension is {}",
                p.len(),
                group.system.ambient_dim
            )));
        }
    }
    let generators: Vec<GeneratorReport> = gens
        .iter()
        .filter(|g| degree.is_none_or(|d| g.degree == d))
        .map(|g| GeneratorReport {
            degree: g.degree,
            weight_index: g.weight_index,
            orbit_size: g.orbit_size(),
            parity: g.parity,
            value_at: point.as_ref().map(|p| g.eval_f64(p)),
        })
        .collect();
    let trigonometric = if trig {
        invariants::trigonometric_generators(&group)
            .map_err(|e| CmdError::usage(e.to_string()))?
            .iter()
            .map(|t| TrigReport {
                weight_index: t.weight_index,
                kind: t.kind,
                orbit_size: t.orbit_points.len(),
                value_at: point.as_ref().map(|p| t.eval(p)),
            })
            .collect()
    } else {
        Vec::new()
    };
    let report = InvariantsReport {
        type_label: label.to_string(),
        rank,
        skew_invariants_exist: invariants::skew_invariants_exist(&group),
        generators,
        trigonometric,
    };
    if cli.global.json {
        print_json(&report)?;
    } else {
        println!("W({label}_{rank}): skew invariants exist: {}", report.skew_invariants_exist);
        for g in &report.generators {
            print!(
                "degree {:>2}  weight {}  orbit {:>5}  {:?}",
                g.degree, g.weight_index, g.orbit_size, g.parity
            );
            match g.value_at {
                Some(v) => println!("  value {v:.12e}"),
                None => println!(),
            }
        }
        for t in &report.trigonometric {
            print!("trig {:?} weight {} orbit {}", t.kind, t.weight_index, t.orbit_size);
            match t.value_at {
                Some(v) => println!("  value {v:.12e}"),
                None => println!(),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct BuildReport {
    mode: NormMode,
    dim: usize,
    gamma: f64,
    certificate_verdict: String,
    min_eigenvalue: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    reversibility_defect: Option<f64>,
    norm_file: String,
    certificate_file: String,
}

fn cmd_build_norm(
    cli: &Cli,
    spec_path: &PathBuf,
    out: &PathBuf,
    cert_path: &PathBuf,
) -> Result<ExitCode, CmdError> {
    let text = std::fs::read_to_string(spec_path)
        .map_err(|e| CmdError::usage(format!("cannot read {}: {e}", spec_path.display())))?;
    let spec: NormSpec = serde_json::from_str(&text)
        .map_err(|e| CmdError::usage(format!("malformed spec: {e}")))?;
    let dim = spec_dim(&spec)?;
    let opts = certify_opts(&cli.global, dim);
    let outcome = normforge::build_from_spec(&spec, cli.global.cap, &opts).map_err(norm_error)?;
    let defect = match spec.mode {
        NormMode::Positive => Some(normforge::reversibility_defect(&outcome.norm, &opts)),
        _ => None,
    };
    write_json_file(out, &outcome.norm.description)?;
    write_json_file(cert_path, &outcome.certificate)?;
    let report = BuildReport {
        mode: spec.mode,
        dim,
        gamma: outcome.norm.description.gamma,
        certificate_verdict: if outcome.certificate.passed() { "pass" } else { "fail" }.to_string(),
        min_eigenvalue: outcome.certificate.min_eigenvalue,
        reversibility_defect: defect,
        norm_file: out.display().to_string(),
        certificate_file: cert_path.display().to_string(),
    };
    if cli.global.json {
        print_json(&report)?;
    } else {
        println!("built {:?} norm on R^{dim}", report.mode);
        println!("gamma: {:.17e}", report.gamma);
        println!("certificate: {} (min eigenvalue {:.6e})", report.certificate_verdict, report.min_eigenvalue);
        if let Some(d) = defect {
            println!("reversibility defect: {d:.6e}");
        }
        println!("norm -> {}", report.norm_file);
        println!("certificate -> {}", report.certificate_file);
    }
    Ok(ExitCode::SUCCESS)
}

fn spec_dim(spec: &NormSpec) -> Result<usize, CmdError> {
    match spec.mode {
        NormMode::Product => spec
            .product
            .as_ref()
            .map(|p| p.dims.iter().sum())
            .ok_or_else(|| CmdError::usage("product mode requires product params")),
        _ => {
            let group = spec
                .group
                .as_ref()
                .ok_or_else(|| CmdError::usage("group required"))?;
            let label = group
                .parse_label()
                .map_err(|e| CmdError::usage(e.to_string()))?;
            Ok(ambient_dim(label, group.rank))
        }
    }
}

fn ambient_dim(label: TypeLabel, rank: usize) -> usize {
    match label {
        TypeLabel::A => rank + 1,
        TypeLabel::G2 => 3,
        TypeLabel::E6 | TypeLabel::E7 | TypeLabel::E8 => 8,
        TypeLabel::F4 => 4,
        _ => rank,
    }
}

fn load_norm(cli: &Cli, path: &PathBuf) -> Result<normforge::NormExpression, CmdError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CmdError::usage(format!("cannot read {}: {e}", path.display())))?;
    let desc: NormDescription = serde_json::from_str(&text)
        .map_err(|e| CmdError::usage(format!("malformed norm file: {e}")))?;
    normforge::compile_description(&desc, cli.global.cap).map_err(norm_error)
}

fn cmd_certify(cli: &Cli, norm_path: &PathBuf, out: Option<&std::path::Path>) -> Result<ExitCode, CmdError> {
    let norm = load_norm(cli, norm_path)?;
    let opts = certify_opts(&cli.global, norm.dim);
    let cert = norm.certify(&opts);
    match out {
        Some(path) => write_json_file(path, &cert)?,
        None => print_json(&cert)?,
    }
    if cert.passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!(
            "certification failed: min eigenvalue {} at {:?}",
            cert.min_eigenvalue, cert.worst_point
        );
        Ok(ExitCode::from(3))
    }
}

#[derive(Serialize)]
struct EvalReport {
    value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    gradient: Option<Vec<f64>>,
}

fn cmd_eval(cli: &Cli, norm_path: &PathBuf, at: &str, grad: bool) -> Result<ExitCode, CmdError> {
    let norm = load_norm(cli, norm_path)?;
    let x = parse_f64_vec(at)?;
    if x.len() != norm.dim {
        return Err(CmdError::usage(format!(
            "point has {} coordinates, norm dimension is {}",
            x.len(),
            norm.dim
        )));
    }
    let report = EvalReport {
        value: norm.evaluate(&x),
        gradient: if grad {
            Some(norm.gradient(&x).map_err(norm_error)?)
        } else {
            None
        },
    };
    if cli.global.json {
        print_json(&report)?;
    } else {
        println!("L = {:.17e}", report.value);
        if let Some(g) = &report.gradient {
            println!("grad = {g:?}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct DistanceReport {
    forward: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    backward: Option<f64>,
}

fn cmd_distance(
    cli: &Cli,
    norm_path: &PathBuf,
    from: &str,
    to: &str,
    both_orders: bool,
) -> Result<ExitCode, CmdError> {
    let norm = load_norm(cli, norm_path)?;
    let x = parse_f64_vec(from)?;
    let y = parse_f64_vec(to)?;
    if x.len() != norm.dim || y.len() != norm.dim {
        return Err(CmdError::usage(format!("points must have {} coordinates", norm.dim)));
    }
    let report = DistanceReport {
        forward: normforge::flat_distance(&norm, &x, &y),
        backward: both_orders.then(|| normforge::flat_distance(&norm, &y, &x)),
    };
    if cli.global.json {
        print_json(&report)?;
    } else {
        println!("d(x,y) = {:.17e}", report.forward);
        if let Some(b) = report.backward {
            println!("d(y,x) = {b:.17e}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct ProjectReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    spectrum: Option<Vec<f64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    representative: Option<Vec<String>>,
}

fn cmd_orbit_project(
    cli: &Cli,
    matrix: Option<&str>,
    type_label: Option<&str>,
    rank: Option<usize>,
    vector: Option<&str>,
) -> Result<ExitCode, CmdError> {
    let report = match (matrix, vector) {
        (Some(m), None) => {
            let rows: Vec<Vec<f64>> = m
                .split(';')
                .map(parse_f64_vec)
                .collect::<Result<_, _>>()?;
            let n = rows.len();
            if rows.iter().any(|r| r.len() != n) {
                return Err(CmdError::usage("matrix must be square"));
            }
            let flat: Vec<f64> = rows.into_iter().flatten().collect();
            let sym_err = (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .map(|(i, j)| (flat[i * n + j] - flat[j * n + i]).abs())
                .fold(0.0f64, f64::max);
            if sym_err > 1e-10 {
                return Err(CmdError::usage("matrix must be symmetric"));
            }
            let eigs = eigen::symmetric_eigenvalues(&flat, n);
            ProjectReport { spectrum: Some(eigs), representative: None }
        }
        (None, Some(v)) => {
            let (Some(t), Some(r)) = (type_label, rank) else {
                return Err(CmdError::usage("--vector needs --type-label and --rank"));
            };
            let label = parse_type(t, r)?;
            let system = build_root_system(label, r).map_err(|e| CmdError::usage(e.to_string()))?;
            let group = generate_weyl_group(system, cli.global.cap)
                .map_err(|e| CmdError::usage(e.to_string()))?;
            let vec = parse_q_vec(v)?;
            if vec.len() != group.system.ambient_dim {
                return Err(CmdError::usage(format!(
                    "vector must have {} coordinates",
                    group.system.ambient_dim
                )));
            }
            let rep = group.chamber_representative(&vec);
            ProjectReport {
                spectrum: None,
                representative: Some(rep.iter().map(format_q).collect()),
            }
        }
        _ => return Err(CmdError::usage("pass exactly one of --matrix or --vector")),
    };
    if cli.global.json {
        print_json(&report)?;
    } else if let Some(s) = &report.spectrum {
        let parts: Vec<String> = s.iter().map(|v| format!("{v:.12}")).collect();
        println!("spectrum (descending): {}", parts.join(", "));
    } else if let Some(r) = &report.representative {
        println!("dominant representative: {}", r.join(", "));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(cli: &Cli, name: Option<&str>, dump: bool) -> Result<ExitCode, CmdError> {
    if dump {
        let rows = classify::dump_table();
        if cli.global.json {
            print_json(&rows)?;
        } else {
            for row in &rows {
                println!(
                    "{:>2}: {} | {} | W {:?} | dim {}{}",
                    row.index,
                    row.noncompact,
                    row.compact,
                    row.weyl_family,
                    row.dim_formula,
                    if row.rank_one_family { " | rank-one family" } else { "" }
                );
            }
        }
        return Ok(ExitCode::SUCCESS);
    }
    let Some(name) = name else {
        return Err(CmdError::usage("pass a space name or --dump"));
    };
    let answer = classify::classify_space(name).map_err(|e| CmdError::usage(e.to_string()))?;
    if cli.global.json {
        print_json(&answer)?;
    } else {
        println!("{} | {}", answer.noncompact, answer.compact);
        println!("restricted Weyl group: {} (rank {})", answer.weyl, answer.rank);
        println!("dim: {}", answer.dim);
        println!(
            "non-Riemannian Berwald metrizable: {}",
            answer.nonriemannian_berwald_metrizable
        );
        println!("irreversible metrizable: {}", answer.irreversible_metrizable);
        println!(
            "Cartan-symmetric with absolute norms: {}",
            answer.cartan_symmetric_if_absolute
        );
    }
    Ok(ExitCode::SUCCESS)
}
