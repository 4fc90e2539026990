use std::path::{Path, PathBuf};
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::chebtau::{assemble, FlowProfile, Method, OSParams};
use crate::densela::{eigenvalues, QZConfig};
use crate::precision::{from_decimal, to_decimal, MPReal, PrecisionContext};

use super::{hausdorff, AnalysisError, Region, SpectrumMeta, SpectrumSet};

/// One Orr–Sommerfeld discretization to solve.
#[derive(Debug, Clone, PartialEq)]
pub struct SolveRequest {
    pub flow: FlowProfile,
    pub params: OSParams,
    pub method: Method,
    pub n: usize,
    pub p: u32,
}

impl SolveRequest {
    /// Content hash of everything that influences the computed values.
    pub fn cache_key(&self, cfg: &QZConfig) -> String {
        let cfg_text = serde_json::to_string(cfg).expect("config serializes");
        let text = format!(
            "hydrospec-spectrum-v1|{}|{}|{}|{}|{}|{}|{}",
            self.flow,
            self.params.re(),
            self.params.a(),
            self.method,
            self.n,
            self.p,
            cfg_text
        );
        hex::encode(Sha256::digest(text.as_bytes()))
    }
}

/// Assembles and solves one tau system; the wall time covers both steps.
pub fn solve_spectrum(req: &SolveRequest, cfg: &QZConfig) -> Result<SpectrumSet, AnalysisError> {
    let ctx = PrecisionContext::new(req.p)?;
    let start = Instant::now();
    let sys = assemble(req.flow, &req.params, req.method, req.n, ctx)?;
    let spectrum = eigenvalues(sys.a, sys.b, cfg)?;
    let meta = SpectrumMeta {
        flow: req.flow.to_string(),
        re: req.params.re_text(),
        a: req.params.a_text(),
        method: req.method.to_string(),
        n: req.n,
        p: req.p,
        infinite_count: spectrum.infinite_count,
        wall_time_s: start.elapsed().as_secs_f64(),
        note: None,
    };
    Ok(SpectrumSet::new(meta, spectrum.finite))
}

/// Directory of spectrum files keyed by [`SolveRequest::cache_key`].
#[derive(Debug)]
pub struct SpectrumCache {
    dir: PathBuf,
    writer: Mutex<()>,
}

impl SpectrumCache {
    pub fn open(dir: impl Into<PathBuf>) -> Result<Self, AnalysisError> {
        let dir = dir.into();
        std::fs::create_dir_all(&dir).map_err(|e| AnalysisError::io(&dir, e))?;
        Ok(SpectrumCache {
            dir,
            writer: Mutex::new(()),
        })
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, req: &SolveRequest, cfg: &QZConfig) -> PathBuf {
        self.dir.join(format!("{}.json", req.cache_key(cfg)))
    }

    /// Loads the cached spectrum or solves and stores it.
    pub fn get_or_solve(&self, req: &SolveRequest, cfg: &QZConfig) -> Result<SpectrumSet, AnalysisError> {
        let path = self.path_for(req, cfg);
        if path.exists() {
            match SpectrumSet::load(&path) {
                Ok(set) => return Ok(set),
                Err(e) => log::warn!("ignoring unreadable cache entry {}: {e}", path.display()),
            }
        }
        let set = solve_spectrum(req, cfg)?;
        self.store(&path, &set)?;
        Ok(set)
    }

    fn store(&self, path: &Path, set: &SpectrumSet) -> Result<(), AnalysisError> {
        let _guard = self.writer.lock().unwrap_or_else(|e| e.into_inner());
        let tmp = path.with_extension("json.tmp");
        set.save(&tmp)?;
        std::fs::rename(&tmp, path).map_err(|e| AnalysisError::io(path, e))
    }
}

/// Solves through the cache when one is given.
pub fn obtain(req: &SolveRequest, cfg: &QZConfig, cache: Option<&SpectrumCache>) -> Result<SpectrumSet, AnalysisError> {
    match cache {
        Some(c) => c.get_or_solve(req, cfg),
        None => solve_spectrum(req, cfg),
    }
}

/// A grid of `(N, P)` runs compared against one reference run.
#[derive(Debug, Clone)]
pub struct SweepPlan {
    pub flow: FlowProfile,
    pub params: OSParams,
    pub method: Method,
    pub ns: Vec<usize>,
    pub ps: Vec<u32>,
    pub ref_n: usize,
    pub ref_p: u32,
    /// Worker threads; zero means one per core.
    pub jobs: usize,
}

impl SweepPlan {
    fn validate(&self) -> Result<(), AnalysisError> {
        let (Some(&max_n), Some(&max_p)) = (self.ns.iter().max(), self.ps.iter().max()) else {
            return Err(AnalysisError::InvalidPlan("N and P lists must be non-empty".into()));
        };
        if self.ref_n < max_n || self.ref_p < max_p {
            return Err(AnalysisError::InvalidPlan(format!(
                "reference ({}, {}) must dominate the grid maximum ({max_n}, {max_p})",
                self.ref_n, self.ref_p
            )));
        }
        Ok(())
    }

    pub fn request(&self, n: usize, p: u32) -> SolveRequest {
        SolveRequest {
            flow: self.flow,
            params: self.params.clone(),
            method: self.method,
            n,
            p,
        }
    }

    fn grid(&self) -> Vec<(usize, u32)> {
        let mut grid: Vec<(usize, u32)> = self
            .ns
            .iter()
            .flat_map(|&n| self.ps.iter().map(move |&p| (n, p)))
            .collect();
        grid.sort_unstable();
        grid.dedup();
        grid
    }
}

/// One row of a convergence table.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceRecord {
    pub n: usize,
    pub p: u32,
    pub eps_p: MPReal,
    /// `None` when the run failed; see `failure`.
    pub d_h: Option<MPReal>,
    pub failure: Option<String>,
    /// Metadata of the reference run; absent for rows read back from CSV.
    pub reference: Option<SpectrumMeta>,
}

/// Hausdorff distance between the parts of two spectra inside `q`.
pub fn region_distance(x: &SpectrumSet, y: &SpectrumSet, q: &Region) -> Result<MPReal, AnalysisError> {
    hausdorff(x.filter_region(q).eigenvalues(), y.filter_region(q).eigenvalues())
}

/// Solves the reference first, then every grid point on a pool of
/// `plan.jobs` workers. Records come back ordered by `(N, P)`.
pub fn sweep(
    plan: &SweepPlan,
    cfg: &QZConfig,
    cache: Option<&SpectrumCache>,
) -> Result<Vec<ConvergenceRecord>, AnalysisError> {
    plan.validate()?;
    let q = Region::for_flow(plan.flow);
    let reference = obtain(&plan.request(plan.ref_n, plan.ref_p), cfg, cache)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(plan.jobs)
        .build()
        .map_err(|e| AnalysisError::InvalidPlan(e.to_string()))?;
    let grid = plan.grid();
    pool.install(|| {
        grid.par_iter()
            .map(|&(n, p)| {
                let eps_p = PrecisionContext::new(p)?.epsilon();
                let outcome = obtain(&plan.request(n, p), cfg, cache)
                    .and_then(|set| region_distance(&set, &reference, &q));
                let (d_h, failure) = match outcome {
                    Ok(d) => (Some(d), None),
                    Err(e) => {
                        log::warn!("sweep point N={n} P={p} failed: {e}");
                        (None, Some(e.to_string()))
                    }
                };
                Ok(ConvergenceRecord {
                    n,
                    p,
                    eps_p,
                    d_h,
                    failure,
                    reference: Some(reference.meta.clone()),
                })
            })
            .collect()
    })
}

/// Convergence table as CSV with header `N,P,eps_P,d_H`; failed rows carry
/// `NaN`.
pub fn convergence_csv(records: &[ConvergenceRecord]) -> String {
    let mut out = String::from("N,P,eps_P,d_H\n");
    for r in records {
        let eps = to_decimal(&r.eps_p, r.eps_p.context().roundtrip_digits());
        let d = r
            .d_h
            .as_ref()
            .map_or_else(|| "NaN".to_string(), |d| to_decimal(d, d.context().roundtrip_digits()));
        out.push_str(&format!("{},{},{eps},{d}\n", r.n, r.p));
    }
    out
}

/// Reads a table written by [`convergence_csv`]. Values are parsed with
/// enough bits to keep every printed digit.
pub fn parse_convergence_csv(text: &str) -> Result<Vec<ConvergenceRecord>, AnalysisError> {
    let mut lines = text.lines();
    if lines.next().map(str::trim) != Some("N,P,eps_P,d_H") {
        return Err(AnalysisError::Format("expected header N,P,eps_P,d_H".into()));
    }
    let bad = |line: &str| AnalysisError::Format(format!("bad convergence row {line:?}"));
    let mut out = Vec::new();
    for line in lines.filter(|l| !l.trim().is_empty()) {
        let cells: Vec<&str> = line.trim().split(',').collect();
        let [n, p, eps, d] = cells[..] else {
            return Err(bad(line));
        };
        let n: usize = n.parse().map_err(|_| bad(line))?;
        let p: u32 = p.parse().map_err(|_| bad(line))?;
        let parse = |s: &str| {
            let bits = (s.len() as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 8;
            from_decimal(s, PrecisionContext::new(bits)?)
        };
        let d_h = if d == "NaN" { None } else { Some(parse(d)?) };
        out.push(ConvergenceRecord {
            n,
            p,
            eps_p: parse(eps)?,
            failure: d_h.is_none().then(|| "failed".to_string()),
            d_h,
            reference: None,
        });
    }
    Ok(out)
}

/// Accuracy levels of the resolution table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Accuracy {
    TenPercent,
    Single,
    Double,
    Extended,
}

impl Accuracy {
    pub const ALL: [Accuracy; 4] = [Accuracy::TenPercent, Accuracy::Single, Accuracy::Double, Accuracy::Extended];

    pub fn label(self) -> &'static str {
        match self {
            Accuracy::TenPercent => "10%",
            Accuracy::Single => "single",
            Accuracy::Double => "double",
            Accuracy::Extended => "extended",
        }
    }

    /// `0.1`, or `ε_P` of the 24, 53 and 113 bit formats.
    pub fn tolerance(self) -> f64 {
        match self {
            Accuracy::TenPercent => 0.1,
            Accuracy::Single => 2f64.powi(-23),
            Accuracy::Double => 2f64.powi(-52),
            Accuracy::Extended => 2f64.powi(-112),
        }
    }
}

/// Smallest `(N, P)` of the grid, ordered by `N` first, whose distance is
/// within `tol`.
pub fn minimal_resolution(records: &[ConvergenceRecord], tol: f64) -> Option<(usize, u32)> {
    records
        .iter()
        .filter(|r| r.d_h.as_ref().is_some_and(|d| *d <= tol))
        .map(|r| (r.n, r.p))
        .min()
}
