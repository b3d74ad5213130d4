use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use qbos::explorer::{write_scan_csv, ScanSummary};
use qbos::{
    bilinear_coefficients, corner_payoff_matrix, dilemma_analysis, enumerate_equilibria, payoffs_closed_form,
    payoffs_trace, reproduce_reference_results, scan_simplex, Corner, GamePayoffs, InitialState, PayoffPair,
    StrategyProfile,
};

use crate::error::CliError;
use crate::report::{regime_label, render_reproduction, Analysis};
use crate::spec::GameSpec;

/// Largest tolerated disagreement between the trace and closed-form payoffs.
pub const CROSS_CHECK_TOLERANCE: f64 = 1e-9;

pub fn load_spec(path: &Path) -> Result<GameSpec, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
    GameSpec::parse(&text)
}

pub fn cross_check(trace: PayoffPair, closed: PayoffPair, at: &StrategyProfile) -> Result<(), CliError> {
    let finite = [trace.alice, trace.bob, closed.alice, closed.bob].iter().all(|x| x.is_finite());
    let gap = trace.max_abs_diff(&closed);
    if finite && gap <= CROSS_CHECK_TOLERANCE {
        Ok(())
    } else {
        Err(CliError::CrossCheck(format!(
            "trace and closed-form payoffs differ by {gap:e} at {at} (limit {CROSS_CHECK_TOLERANCE:e})"
        )))
    }
}

fn checked_payoffs(
    state: &InitialState,
    payoffs: &GamePayoffs,
    profile: &StrategyProfile,
) -> Result<PayoffPair, CliError> {
    let trace = payoffs_trace(state, payoffs, profile);
    cross_check(trace, payoffs_closed_form(state, payoffs, profile), profile)?;
    Ok(trace)
}

pub fn analyze(spec: &GameSpec) -> Result<Analysis, CliError> {
    let state = spec.initial_state();
    let payoffs = &spec.payoffs;
    let corners = corner_payoff_matrix(state, payoffs);
    let equilibria = enumerate_equilibria(state, payoffs);
    for profile in Corner::ALL.map(Corner::profile).iter().chain(equilibria.iter().map(|e| &e.profile)) {
        checked_payoffs(state, payoffs, profile)?;
    }
    let verdict = if payoffs.is_canonical() { Some(dilemma_analysis(state, payoffs)?) } else { None };
    Ok(Analysis {
        spec: spec.clone(),
        regime: regime_label(state),
        corners,
        coefficients: bilinear_coefficients(state, payoffs),
        equilibria,
        verdict,
    })
}

/// `$A` and `$B` at the spec's profile, from the trace.
pub fn payoff(spec: &GameSpec) -> Result<PayoffPair, CliError> {
    let profile = spec.require_profile()?;
    checked_payoffs(spec.initial_state(), &spec.payoffs, &profile)
}

pub fn scan(payoffs: &GamePayoffs, resolution: u32, out: &Path) -> Result<ScanSummary, CliError> {
    let records = scan_simplex(payoffs, resolution)?;
    let io_error = |source| CliError::Io { path: out.display().to_string(), source };
    let file = File::create(out).map_err(io_error)?;
    let mut writer = BufWriter::new(file);
    let summary = write_scan_csv(records, &mut writer).map_err(io_error)?;
    writer.flush().map_err(io_error)?;
    Ok(summary)
}

pub fn summary_line(summary: &ScanSummary) -> String {
    format!(
        "points={} resolved={} resolved_11={} resolved_00={}",
        summary.total, summary.resolved, summary.resolved_11, summary.resolved_00
    )
}

/// The rendered report, or the failures when any check fails.
pub fn reproduce(payoffs: &GamePayoffs) -> Result<String, (String, CliError)> {
    let report = reproduce_reference_results(payoffs).map_err(|e| (String::new(), e.into()))?;
    let text = render_reproduction(&report);
    if report.all_passed() {
        Ok(text)
    } else {
        let failures = report.failures().map(|c| format!("{}: {}", c.name, c.detail)).collect();
        Err((text, CliError::Reproduction { failures }))
    }
}
