//! Sweeps over the simplex of squared amplitudes.
//!
//! Payoffs only see `|a|², |b|², |c|², |d|²`, so scans use real nonnegative
//! amplitudes on the lattice `(i, j, k, l)/N` with `i + j + k + l = N`.

use std::io::{self, Write};

use crate::dilemma::{dilemma_analysis, DilemmaVerdict};
use crate::equilibrium::{corner_payoff_matrix, is_corner_nash, CornerMatrix};
use crate::error::{GameError, Result};
use crate::format::sig12;
use crate::payoffs::{GamePayoffs, PayoffPair};
use crate::state::{Corner, InitialState};
use crate::tolerance;

/// Compositions of `n` into four nonnegative parts, in lexicographic order.
#[derive(Debug, Clone)]
pub struct SimplexLattice {
    n: u32,
    next: Option<[u32; 3]>,
}

impl SimplexLattice {
    pub fn new(n: u32) -> Self {
        Self { n, next: Some([0, 0, 0]) }
    }

    /// `C(n + 3, 3)`.
    pub fn point_count(n: u32) -> u64 {
        let n = n as u64;
        (n + 1) * (n + 2) * (n + 3) / 6
    }
}

impl Iterator for SimplexLattice {
    type Item = [u32; 4];

    fn next(&mut self) -> Option<[u32; 4]> {
        let [i, j, k] = self.next?;
        let n = self.n;
        self.next = if i + j + k < n {
            Some([i, j, k + 1])
        } else if i + j < n {
            Some([i, j + 1, 0])
        } else if i < n {
            Some([i + 1, 0, 0])
        } else {
            None
        };
        Some([i, j, k, n - i - j - k])
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanRecord {
    pub lattice: [u32; 4],
    pub moduli_squared: [f64; 4],
    pub ne_corner_00: bool,
    pub ne_corner_11: bool,
    pub equal_corner_payoffs: bool,
    pub resolved: bool,
    pub selected_corner: Option<Corner>,
    /// `$A, $B` at (1,1), then (1,0), then (0,1).
    pub corner_payoffs: [f64; 6],
}

impl ScanRecord {
    pub const CSV_HEADER: &'static str =
        "a2,b2,c2,d2,ne_00,ne_11,equal_payoffs,resolved,selected,alice_11,bob_11,alice_10,bob_10,alice_01,bob_01";

    pub fn evaluate(lattice: [u32; 4], payoffs: &GamePayoffs) -> Result<Self> {
        let n: u32 = lattice.iter().sum();
        if n == 0 {
            return Err(GameError::InvalidResolution { min: 1, got: 0 });
        }
        let moduli_squared = lattice.map(|x| x as f64 / n as f64);
        let state = InitialState::from_moduli_squared(moduli_squared)?;
        let verdict = dilemma_analysis(&state, payoffs)?;
        Ok(Self::from_verdict(lattice, moduli_squared, &verdict))
    }

    fn from_verdict(lattice: [u32; 4], moduli_squared: [f64; 4], v: &DilemmaVerdict) -> Self {
        let m = &v.corner_matrix;
        let cell = |c: Corner| m.get(c);
        let (top, right, left) = (cell(Corner::OneOne), cell(Corner::OneZero), cell(Corner::ZeroOne));
        Self {
            lattice,
            moduli_squared,
            ne_corner_00: v.corner_00_is_ne,
            ne_corner_11: v.corner_11_is_ne,
            equal_corner_payoffs: v.equal_corner_payoffs,
            resolved: v.resolved,
            selected_corner: v.unique_solution,
            corner_payoffs: [top.alice, top.bob, right.alice, right.bob, left.alice, left.bob],
        }
    }

    pub fn csv_row(&self) -> String {
        let flag = |b: bool| if b { "1" } else { "0" };
        let selected = match self.selected_corner {
            Some(c) => c.label(),
            None => "-",
        };
        let mut fields: Vec<String> = self.moduli_squared.iter().map(|&x| sig12(x)).collect();
        fields.extend(
            [self.ne_corner_00, self.ne_corner_11, self.equal_corner_payoffs, self.resolved]
                .map(|b| flag(b).to_string()),
        );
        fields.push(selected.to_string());
        fields.extend(self.corner_payoffs.iter().map(|&x| sig12(x)));
        fields.join(",")
    }
}

/// Streaming scan; records come out in lexicographic lattice order.
#[derive(Debug, Clone)]
pub struct Scan {
    lattice: SimplexLattice,
    payoffs: GamePayoffs,
}

impl Iterator for Scan {
    type Item = ScanRecord;

    fn next(&mut self) -> Option<ScanRecord> {
        let point = self.lattice.next()?;
        // Lattice points are valid states and the payoffs were checked up front.
        Some(ScanRecord::evaluate(point, &self.payoffs).expect("lattice point evaluates"))
    }
}

pub fn scan_simplex(payoffs: &GamePayoffs, resolution: u32) -> Result<Scan> {
    payoffs.require_canonical()?;
    if resolution == 0 {
        return Err(GameError::InvalidResolution { min: 1, got: 0 });
    }
    Ok(Scan { lattice: SimplexLattice::new(resolution), payoffs: *payoffs })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ScanSummary {
    pub total: u64,
    pub resolved: u64,
    pub resolved_11: u64,
    pub resolved_00: u64,
}

impl ScanSummary {
    pub fn add(&mut self, record: &ScanRecord) {
        self.total += 1;
        if record.resolved {
            self.resolved += 1;
            match record.selected_corner {
                Some(Corner::OneOne) => self.resolved_11 += 1,
                Some(Corner::ZeroZero) => self.resolved_00 += 1,
                _ => {}
            }
        }
    }
}

/// Writes the header and one comma-separated row per record, `\n`-terminated.
pub fn write_scan_csv<W: Write>(records: impl Iterator<Item = ScanRecord>, out: &mut W) -> io::Result<ScanSummary> {
    let mut summary = ScanSummary::default();
    writeln!(out, "{}", ScanRecord::CSV_HEADER)?;
    for record in records {
        summary.add(&record);
        writeln!(out, "{}", record.csv_row())?;
    }
    Ok(summary)
}

/// Resolving lattice points, split by the corner they select.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ResolvingStates {
    pub one_one: Vec<ScanRecord>,
    pub zero_zero: Vec<ScanRecord>,
}

impl ResolvingStates {
    pub fn len(&self) -> usize {
        self.one_one.len() + self.zero_zero.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = &ScanRecord> {
        self.one_one.iter().chain(self.zero_zero.iter())
    }
}

pub fn find_resolving_states(payoffs: &GamePayoffs, resolution: u32) -> Result<ResolvingStates> {
    let mut out = ResolvingStates::default();
    for record in scan_simplex(payoffs, resolution)?.filter(|r| r.resolved) {
        match record.selected_corner {
            Some(Corner::OneOne) => out.one_one.push(record),
            Some(Corner::ZeroZero) => out.zero_zero.push(record),
            _ => unreachable!("resolved records select a coordination corner"),
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub detail: String,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReferenceReport {
    pub payoffs: GamePayoffs,
    /// `(5α + 5β + 6γ)/16`, `(5α + β + 10γ)/16`, `(α + 5β + 10γ)/16`.
    pub primed: [f64; 3],
    pub checks: Vec<CheckOutcome>,
}

impl ReferenceReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// `|a|² = |b|² = |d|² = 5/16, |c|² = 1/16`.
pub fn sixteenths_state() -> InitialState {
    InitialState::from_moduli_squared([5.0, 5.0, 1.0, 5.0].map(|x| x / 16.0)).expect("valid moduli")
}

/// The sixteenths state with `|b|²` and `|c|²` exchanged.
pub fn dual_sixteenths_state() -> InitialState {
    InitialState::from_moduli_squared([5.0, 1.0, 5.0, 5.0].map(|x| x / 16.0)).expect("valid moduli")
}

fn matrix_of(rows: [[(f64, f64); 2]; 2]) -> CornerMatrix {
    CornerMatrix { cells: rows.map(|row| row.map(|(a, b)| PayoffPair::new(a, b))) }
}

/// Re-derives the published corner matrices, equilibrium statuses and
/// dilemma verdicts for a canonical payoff triple.
pub fn reproduce_reference_results(payoffs: &GamePayoffs) -> Result<ReferenceReport> {
    payoffs.require_canonical()?;
    let (alpha, beta, gamma) = (payoffs.alpha(), payoffs.beta(), payoffs.gamma());
    let tol = tolerance::ARITH * payoffs.magnitude().max(1.0);
    let primed = [
        (5.0 * alpha + 5.0 * beta + 6.0 * gamma) / 16.0,
        (5.0 * alpha + beta + 10.0 * gamma) / 16.0,
        (alpha + 5.0 * beta + 10.0 * gamma) / 16.0,
    ];
    let [a1, b1, g1] = primed;
    let mut checks = Vec::new();
    let mut matrix_check = |name: &'static str, state: &InitialState, expected: CornerMatrix| {
        let deviation = corner_payoff_matrix(state, payoffs).max_abs_diff(&expected);
        checks.push(CheckOutcome {
            name,
            detail: format!("max deviation {deviation:.3e} (tolerance {tol:.1e})"),
            passed: deviation <= tol,
        });
    };

    let reference = sixteenths_state();
    matrix_check("sixteenths-state corner matrix", &reference, matrix_of([[(a1, a1), (b1, g1)], [(g1, b1), (a1, a1)]]));
    let mean = (alpha + beta) / 2.0;
    matrix_check(
        "maximally-entangled corner matrix",
        &InitialState::maximally_entangled(),
        matrix_of([[(mean, mean), (gamma, gamma)], [(gamma, gamma), (mean, mean)]]),
    );
    matrix_check(
        "classical corner matrix",
        &InitialState::classical(),
        matrix_of([[(alpha, beta), (gamma, gamma)], [(gamma, gamma), (beta, alpha)]]),
    );

    checks.push(CheckOutcome {
        name: "primed ordering",
        detail: format!("{} > {} > {}", sig12(a1), sig12(b1), sig12(g1)),
        passed: a1 > b1 && b1 > g1,
    });

    let expected_ne =
        [(Corner::OneOne, true), (Corner::OneZero, false), (Corner::ZeroOne, false), (Corner::ZeroZero, true)];
    let mut statuses = Vec::new();
    let mut ne_ok = true;
    for (corner, expected) in expected_ne {
        let check = is_corner_nash(&reference, payoffs, corner);
        ne_ok &= check.is_nash == expected;
        statuses.push(format!("{corner}:{}", if check.is_nash { "NE" } else { "not NE" }));
    }
    checks.push(CheckOutcome { name: "sixteenths-state corner equilibria", detail: statuses.join(" "), passed: ne_ok });

    let verdict_cases = [
        ("sixteenths-state verdict", reference, Some(Corner::OneOne)),
        ("dual-state verdict", dual_sixteenths_state(), Some(Corner::ZeroZero)),
        ("maximally-entangled verdict", InitialState::maximally_entangled(), None),
    ];
    for (name, state, expected) in verdict_cases {
        let v = dilemma_analysis(&state, payoffs)?;
        let describe = |c: Option<Corner>| match c {
            Some(c) => format!("resolved {c}"),
            None => "unresolved".to_string(),
        };
        checks.push(CheckOutcome {
            name,
            detail: format!(
                "{} (maximin alice={}, bob={})",
                describe(v.unique_solution),
                v.maximin_choice_alice.label(),
                v.maximin_choice_bob.label()
            ),
            passed: v.resolved == expected.is_some() && v.unique_solution == expected,
        });
    }

    Ok(ReferenceReport { payoffs: *payoffs, primed, checks })
}
