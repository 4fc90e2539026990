//! Plain CSV files shaped like the figures: rate plots, resolution plots
//! and spectrum scatter plots. Values are written as doubles.

use std::collections::BTreeMap;
use std::path::Path;

use hydrospec::analysis::{ConvergenceRecord, SpectrumSet};
use hydrospec::classics::GodunovRun;
use hydrospec::PrecisionContext;

use crate::commands::{write, CliError};

fn d_h_text(r: &ConvergenceRecord) -> String {
    r.d_h.as_ref().map_or_else(|| "nan".into(), |d| format!("{:e}", d.to_f64()))
}

/// `eps_P` against `d_H`, and the computed eigenvalues per precision.
pub fn godunov(out: &Path, tag: &str, runs: &[GodunovRun]) -> Result<(), CliError> {
    let mut rate = String::from("eps_P,d_H\n");
    let mut scatter = String::from("P,re,im\n");
    for run in runs {
        let eps = PrecisionContext::new(run.p).expect("validated").epsilon();
        rate.push_str(&format!("{:e},{:e}\n", eps.to_f64(), run.d_h.to_f64()));
        for z in &run.spectrum.finite {
            scatter.push_str(&format!("{},{:e},{:e}\n", run.p, z.re.to_f64(), z.im.to_f64()));
        }
    }
    write(&out.join(format!("plot_{tag}_rate.csv")), &rate)?;
    write(&out.join(format!("plot_{tag}_spectra.csv")), &scatter)
}

pub fn spectrum(out: &Path, name: &str, set: &SpectrumSet) -> Result<(), CliError> {
    let mut text = String::from("re,im\n");
    for z in set.eigenvalues() {
        text.push_str(&format!("{:e},{:e}\n", z.re.to_f64(), z.im.to_f64()));
    }
    write(&out.join(format!("plot_spectrum_{name}.csv")), &text)
}

/// One series per `P` over `N`, and one series per `N` over `ε_P`.
pub fn sweep(out: &Path, records: &[ConvergenceRecord]) -> Result<(), CliError> {
    let mut by_p: BTreeMap<u32, Vec<&ConvergenceRecord>> = BTreeMap::new();
    for r in records {
        by_p.entry(r.p).or_default().push(r);
    }
    let mut n_plot = String::from("P,N,d_H\n");
    for (p, rows) in &by_p {
        for r in rows {
            n_plot.push_str(&format!("{p},{},{}\n", r.n, d_h_text(r)));
        }
    }
    let mut eps_plot = String::from("N,P,eps_P,d_H\n");
    for r in records {
        eps_plot.push_str(&format!("{},{},{:e},{}\n", r.n, r.p, r.eps_p.to_f64(), d_h_text(r)));
    }
    write(&out.join("plot_sweep_N_dH.csv"), &n_plot)?;
    write(&out.join("plot_sweep_P_dH.csv"), &eps_plot)
}
