use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use hydrospec::analysis::{
    convergence_csv, fit_rate, minimal_resolution, obtain, parse_convergence_csv, region_distance, sweep as run_sweep,
    Accuracy, AnalysisError, RatePoint, Region, SolveRequest, SpectrumCache, SpectrumMeta, SpectrumSet, SweepPlan,
};
use hydrospec::chebtau::{ChebError, Method, OSParams, MIN_TRUNCATION};
use hydrospec::classics::{run_experiment, ClassicsError, GodunovCase};
use hydrospec::precision::{to_decimal, PrecisionContext, PrecisionError};
use hydrospec::{LinalgError, MPReal, QZConfig};

use crate::{plotdata, CompareArgs, GodunovArgs, Problem, SolveArgs, SweepArgs, ThresholdArgs};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Numerical(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numerical(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Numerical(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl From<LinalgError> for CliError {
    fn from(e: LinalgError) -> Self {
        match e {
            LinalgError::InvalidConfig(_) | LinalgError::Precision(_) => CliError::Usage(e.to_string()),
            _ => CliError::Numerical(e.to_string()),
        }
    }
}

impl From<AnalysisError> for CliError {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::Linalg(inner) => inner.into(),
            AnalysisError::Cheb(_) | AnalysisError::Precision(_) | AnalysisError::InvalidPlan(_) => {
                CliError::Usage(e.to_string())
            }
            AnalysisError::EmptySet | AnalysisError::InsufficientPoints(_) => CliError::Numerical(e.to_string()),
            AnalysisError::Io { .. } | AnalysisError::Format(_) => CliError::Io(e.to_string()),
        }
    }
}

impl From<ClassicsError> for CliError {
    fn from(e: ClassicsError) -> Self {
        match e {
            ClassicsError::Linalg(inner) => inner.into(),
            ClassicsError::Analysis(inner) => inner.into(),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<ChebError> for CliError {
    fn from(e: ChebError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<PrecisionError> for CliError {
    fn from(e: PrecisionError) -> Self {
        CliError::Usage(e.to_string())
    }
}

type Result<T> = std::result::Result<T, CliError>;

pub fn write(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

fn ensure_dir(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("{}: {e}", dir.display())))
}

fn check_bits(bits: &[u32]) -> Result<()> {
    if bits.is_empty() {
        return Err(CliError::Usage("at least one precision is required".into()));
    }
    for &p in bits {
        PrecisionContext::new(p)?;
    }
    Ok(())
}

fn check_truncations(ns: &[usize]) -> Result<()> {
    match ns.iter().find(|&&n| n < MIN_TRUNCATION) {
        Some(n) => Err(ChebError::TruncationTooSmall(*n).into()),
        None => Ok(()),
    }
}

/// Parsed parameters and the metadata note when `a` was not given.
fn problem_params(p: &Problem) -> Result<(OSParams, Option<String>)> {
    let (a, note) = match &p.a {
        Some(a) => (a.as_str(), None),
        None => ("1", Some("wavenumber not given; a = 1 assumed".to_string())),
    };
    Ok((OSParams::parse(&p.re, a)?, note))
}

fn open_cache(dir: Option<&PathBuf>) -> Result<Option<SpectrumCache>> {
    dir.map(SpectrumCache::open).transpose().map_err(CliError::from)
}

fn decimal(x: &MPReal) -> String {
    to_decimal(x, x.context().roundtrip_digits())
}

pub fn godunov(args: &GodunovArgs) -> Result<()> {
    let case = GodunovCase::build(args.s)?;
    check_bits(&args.bits)?;
    let out = &args.common.out;
    ensure_dir(out)?;
    let runs = run_experiment(&case, &args.bits, &QZConfig::default())?;
    let tag = format!("godunov_s{:+}", args.s);

    let mut csv = String::from("N,P,eps_P,d_H\n");
    for run in &runs {
        let ctx = PrecisionContext::new(run.p)?;
        let meta = SpectrumMeta {
            flow: tag.clone(),
            re: String::new(),
            a: String::new(),
            method: "standard".into(),
            n: 7,
            p: run.p,
            infinite_count: run.spectrum.infinite_count,
            wall_time_s: run.wall_time_s,
            note: None,
        };
        let set = SpectrumSet::new(meta, run.spectrum.finite.clone());
        set.save(&out.join(format!("{tag}_P{}.json", run.p)))?;
        csv.push_str(&format!("7,{},{},{}\n", run.p, decimal(&ctx.epsilon()), decimal(&run.d_h)));
        println!("P={:<4} d_H={:.3e}", run.p, run.d_h.to_f64());
    }
    write(&out.join(format!("{tag}_convergence.csv")), &csv)?;

    let points: Vec<RatePoint> = runs
        .iter()
        .map(|r| RatePoint {
            eps: PrecisionContext::new(r.p).expect("checked").epsilon(),
            d_h: r.d_h.clone(),
        })
        .collect();
    if let Ok(slope) = fit_rate(&points, &MPReal::zero(PrecisionContext::DOUBLE)) {
        println!("fitted slope of log d_H against log eps_P: {slope:.3}");
    }
    if args.common.emit_plotdata {
        plotdata::godunov(out, &tag, &runs)?;
    }
    Ok(())
}

fn stem(meta: &SpectrumMeta) -> String {
    format!("{}_{}_Re{}_a{}_N{}_P{}", meta.flow, meta.method, meta.re, meta.a, meta.n, meta.p)
}

pub fn solve(args: &SolveArgs) -> Result<()> {
    let (params, note) = problem_params(&args.problem)?;
    check_truncations(&[args.n])?;
    check_bits(&[args.bits])?;
    let out = &args.common.out;
    ensure_dir(out)?;
    let cache = open_cache(args.cache.as_ref())?;
    let req = SolveRequest {
        flow: args.problem.flow,
        params,
        method: args.method,
        n: args.n,
        p: args.bits,
    };
    let mut set = obtain(&req, &QZConfig::default(), cache.as_ref())?;
    set.meta.note = note;
    let filtered = set.filter_region(&Region::for_flow(req.flow));
    let name = stem(&set.meta);
    filtered.save(&out.join(format!("{name}.json")))?;
    if args.raw {
        set.save(&out.join(format!("{name}_raw.json")))?;
    }
    println!(
        "{} finite eigenvalues ({} in Q), {} infinite, {:.2}s",
        set.len(),
        filtered.len(),
        set.meta.infinite_count,
        set.meta.wall_time_s
    );
    if let Some(lead) = filtered.leading() {
        println!("leading eigenvalue in Q: {lead}");
    }
    if args.common.emit_plotdata {
        plotdata::spectrum(out, &name, &set)?;
    }
    Ok(())
}

pub fn sweep(args: &SweepArgs) -> Result<()> {
    let (params, note) = problem_params(&args.problem)?;
    if let Some(note) = note {
        log::warn!("{note}");
    }
    check_truncations(&args.n_list)?;
    check_truncations(&[args.ref_n])?;
    check_bits(&args.bits_list)?;
    check_bits(&[args.ref_bits])?;
    let out = &args.common.out;
    ensure_dir(out)?;
    let cache_dir = args.cache.clone().unwrap_or_else(|| out.join("cache"));
    let cache = SpectrumCache::open(cache_dir)?;
    let plan = SweepPlan {
        flow: args.problem.flow,
        params,
        method: args.method,
        ns: args.n_list.clone(),
        ps: args.bits_list.clone(),
        ref_n: args.ref_n,
        ref_p: args.ref_bits,
        jobs: args.jobs,
    };
    let records = run_sweep(&plan, &QZConfig::default(), Some(&cache))?;
    write(&out.join("convergence.csv"), &convergence_csv(&records))?;
    let failed = records.iter().filter(|r| r.failure.is_some()).count();
    if failed > 0 {
        log::warn!("{failed} of {} sweep points failed and are marked NaN", records.len());
    }
    print_thresholds(&records);
    if args.common.emit_plotdata {
        plotdata::sweep(out, &records)?;
    }
    Ok(())
}

fn print_thresholds(records: &[hydrospec::analysis::ConvergenceRecord]) {
    println!("accuracy,N,P");
    for acc in Accuracy::ALL {
        match minimal_resolution(records, acc.tolerance()) {
            Some((n, p)) => println!("{},{n},{p}", acc.label()),
            None => println!("{},-,-", acc.label()),
        }
    }
}

pub fn thresholds(args: &ThresholdArgs) -> Result<()> {
    let text = fs::read_to_string(&args.csv).map_err(|e| CliError::Usage(format!("{}: {e}", args.csv.display())))?;
    let records = parse_convergence_csv(&text)?;
    print_thresholds(&records);
    Ok(())
}

pub fn compare_d2d4(args: &CompareArgs) -> Result<()> {
    let (params, _) = problem_params(&args.problem)?;
    check_truncations(&args.n_list)?;
    check_bits(&[args.bits])?;
    if !args.reference.is_file() {
        return Err(CliError::Usage(format!("reference file {} not found", args.reference.display())));
    }
    let reference = SpectrumSet::load(&args.reference)?;
    let out = &args.common.out;
    ensure_dir(out)?;
    let cache = open_cache(args.cache.as_ref())?;
    let q = Region::for_flow(args.problem.flow);
    let cfg = QZConfig::default();

    let mut csv = String::from("N,d_H_d2,d_H_d4,wall_d2,wall_d4\n");
    for &n in &args.n_list {
        let mut row = vec![n.to_string()];
        let mut walls = Vec::new();
        for method in [Method::D2, Method::D4] {
            let req = SolveRequest {
                flow: args.problem.flow,
                params: params.clone(),
                method,
                n,
                p: args.bits,
            };
            let set = obtain(&req, &cfg, cache.as_ref())?;
            set.filter_region(&q).save(&out.join(format!("{}.json", stem(&set.meta))))?;
            let d = region_distance(&set, &reference, &q)?;
            row.push(decimal(&d));
            walls.push(set.meta.wall_time_s.to_string());
        }
        row.extend(walls);
        csv.push_str(&row.join(","));
        csv.push('\n');
    }
    let name = format!("compare_d2d4_P{}.csv", args.bits);
    write(&out.join(&name), &csv)?;
    print!("{csv}");
    Ok(())
}
