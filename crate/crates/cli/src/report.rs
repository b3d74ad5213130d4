//! Report documents: a human-readable table, a marker line, then the same
//! content as JSON. Every derived number is rounded to 12 significant digits.
//! The embedded spec keeps full precision so it re-parses to the same spec.

use std::fmt::Write as _;

use qbos::format::{round_sig12, sig12};
use qbos::{
    BilinearCoefficients, Corner, CornerMatrix, DilemmaVerdict, Equilibrium, EquilibriumKind, InitialState, Player,
    ReferenceReport,
};
use serde_json::{json, Value};

use crate::spec::GameSpec;

/// Separates the human section from the JSON section.
pub const MARKER: &str = "=== machine-readable ===";

pub struct Analysis {
    pub spec: GameSpec,
    pub regime: &'static str,
    pub corners: CornerMatrix,
    pub coefficients: BilinearCoefficients,
    pub equilibria: Vec<Equilibrium>,
    /// `None` when the payoffs are not canonical.
    pub verdict: Option<DilemmaVerdict>,
}

pub fn regime_label(state: &InitialState) -> &'static str {
    let [a2, b2, c2, d2] = state.moduli_squared();
    let tol = qbos::tolerance::ARITH;
    if state.as_basis_state().is_some() {
        "classical limit"
    } else if (a2 - 0.5).abs() <= tol && (d2 - 0.5).abs() <= tol && b2 <= tol && c2 <= tol {
        "maximally entangled"
    } else {
        "general"
    }
}

fn num(x: f64) -> Value {
    json!(round_sig12(x))
}

fn pair(a: f64, b: f64) -> String {
    format!("({}, {})", sig12(a), sig12(b))
}

fn corner_json(m: &CornerMatrix) -> Value {
    let mut obj = serde_json::Map::new();
    for c in Corner::ALL {
        let cell = m.get(c);
        obj.insert(c.label().to_string(), json!([num(cell.alice), num(cell.bob)]));
    }
    Value::Object(obj)
}

fn describe_equilibrium(e: &Equilibrium) -> String {
    let (p, q) = (e.profile.p(), e.profile.q());
    match e.kind {
        EquilibriumKind::Corner(c) => c.to_string(),
        EquilibriumKind::InteriorPoint => pair(p, q),
        EquilibriumKind::EdgeSegment { free: Player::Alice, interval } => {
            format!("p in [{}, {}], q = {}", sig12(interval.0), sig12(interval.1), sig12(q))
        }
        EquilibriumKind::EdgeSegment { free: Player::Bob, interval } => {
            format!("p = {}, q in [{}, {}]", sig12(p), sig12(interval.0), sig12(interval.1))
        }
        EquilibriumKind::FullSquare => "every (p, q)".to_string(),
    }
}

fn equilibrium_json(e: &Equilibrium) -> Value {
    let ((p_lo, p_hi), (q_lo, q_hi)) = e.bounds();
    json!({
        "kind": e.kind_label(),
        "p": [num(p_lo), num(p_hi)],
        "q": [num(q_lo), num(q_hi)],
        "strict": e.strict,
        "payoffs": [num(e.payoffs.alice), num(e.payoffs.bob)],
    })
}

fn verdict_json(v: &DilemmaVerdict) -> Value {
    json!({
        "corner_00_is_ne": v.corner_00_is_ne,
        "corner_11_is_ne": v.corner_11_is_ne,
        "equal_corner_payoffs": v.equal_corner_payoffs,
        "maximin_choice_alice": v.maximin_choice_alice.label(),
        "maximin_choice_bob": v.maximin_choice_bob.label(),
        "security_alice": [num(v.security_alice[0]), num(v.security_alice[1])],
        "security_bob": [num(v.security_bob[0]), num(v.security_bob[1])],
        "resolved": v.resolved,
        "unique_solution": v.unique_solution.map(|c| c.label()),
    })
}

impl Analysis {
    pub fn to_json(&self) -> Value {
        let k = &self.coefficients;
        json!({
            "spec": self.spec.to_json(),
            "regime": self.regime,
            "moduli2": self.spec.initial_state().moduli_squared().map(round_sig12),
            "corner_payoffs": corner_json(&self.corners),
            "coefficients": {
                "zeta": num(k.zeta),
                "omega": num(k.omega_cap),
                "k_alice": num(k.k_alice),
                "l_alice": num(k.l_alice),
                "theta_alice": num(k.theta_alice),
                "k_bob": num(k.k_bob),
                "l_bob": num(k.l_bob),
                "theta_bob": num(k.theta_bob),
            },
            "equilibria": self.equilibria.iter().map(equilibrium_json).collect::<Vec<_>>(),
            "dilemma": self.verdict.as_ref().map(verdict_json),
        })
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let g = &self.spec.payoffs;
        let m2 = self.spec.initial_state().moduli_squared();
        let _ =
            writeln!(out, "payoffs     alpha={} beta={} gamma={}", sig12(g.alpha()), sig12(g.beta()), sig12(g.gamma()));
        let _ = writeln!(out, "moduli2     {}", m2.map(sig12).join(" "));
        let _ = writeln!(out, "regime      {}", self.regime);
        out.push('\n');

        let _ = writeln!(out, "corner payoffs (alice, bob)");
        let _ = writeln!(out, "{:<8}{:<34}q=0", "", "q=1");
        for (label, row) in [("p=1", [Corner::OneOne, Corner::OneZero]), ("p=0", [Corner::ZeroOne, Corner::ZeroZero])] {
            let cells = row.map(|c| {
                let v = self.corners.get(c);
                pair(v.alice, v.bob)
            });
            let _ = writeln!(out, "{label:<8}{:<34}{}", cells[0], cells[1]);
        }
        out.push('\n');

        let k = &self.coefficients;
        let _ = writeln!(out, "bilinear coefficients");
        let _ = writeln!(out, "  zeta={} omega={}", sig12(k.zeta), sig12(k.omega_cap));
        let _ = writeln!(out, "  alice  K={} L={} theta={}", sig12(k.k_alice), sig12(k.l_alice), sig12(k.theta_alice));
        let _ = writeln!(out, "  bob    K={} L={} theta={}", sig12(k.k_bob), sig12(k.l_bob), sig12(k.theta_bob));
        out.push('\n');

        let _ = writeln!(out, "equilibria ({})", self.equilibria.len());
        for e in &self.equilibria {
            let _ = writeln!(
                out,
                "  {:<16}{:<40}{:<8}payoffs {}",
                e.kind_label(),
                describe_equilibrium(e),
                if e.strict { "strict" } else { "weak" },
                pair(e.payoffs.alice, e.payoffs.bob)
            );
        }
        out.push('\n');

        match &self.verdict {
            None => {
                let _ = writeln!(out, "dilemma     not evaluated: payoffs violate alpha > beta > gamma");
            }
            Some(v) => {
                let yes = |b: bool| if b { "yes" } else { "no" };
                let _ = writeln!(out, "dilemma");
                let _ = writeln!(out, "  (0,0) is NE          {}", yes(v.corner_00_is_ne));
                let _ = writeln!(out, "  (1,1) is NE          {}", yes(v.corner_11_is_ne));
                let _ = writeln!(out, "  equal payoffs        {}", yes(v.equal_corner_payoffs));
                let _ = writeln!(
                    out,
                    "  maximin alice        {} (security {} vs {})",
                    v.maximin_choice_alice.label(),
                    sig12(v.security_alice[0]),
                    sig12(v.security_alice[1])
                );
                let _ = writeln!(
                    out,
                    "  maximin bob          {} (security {} vs {})",
                    v.maximin_choice_bob.label(),
                    sig12(v.security_bob[0]),
                    sig12(v.security_bob[1])
                );
                let solution = match v.unique_solution {
                    Some(c) => format!("resolved, unique solution {c}"),
                    None => "unresolved".to_string(),
                };
                let _ = writeln!(out, "  verdict              {solution}");
            }
        }
        out.push('\n');
        let _ = writeln!(out, "{MARKER}");
        out.push_str(&serde_json::to_string_pretty(&self.to_json()).expect("report serializes"));
        out.push('\n');
        out
    }
}

pub fn render_reproduction(report: &ReferenceReport) -> String {
    let mut out = String::new();
    let g = &report.payoffs;
    let [a1, b1, g1] = report.primed;
    let _ = writeln!(out, "payoffs     alpha={} beta={} gamma={}", sig12(g.alpha()), sig12(g.beta()), sig12(g.gamma()));
    let _ = writeln!(out, "primed      alpha'={} beta'={} gamma'={}", sig12(a1), sig12(b1), sig12(g1));
    out.push('\n');
    for c in &report.checks {
        let _ = writeln!(out, "{}  {:<36}{}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    let failed = report.failures().count();
    let _ = writeln!(out, "\n{} of {} checks passed", report.checks.len() - failed, report.checks.len());
    let _ = writeln!(out, "{MARKER}");
    let json = json!({
        "payoffs": { "alpha": g.alpha(), "beta": g.beta(), "gamma": g.gamma() },
        "primed": report.primed.map(round_sig12),
        "checks": report.checks.iter().map(|c| json!({ "name": c.name, "passed": c.passed, "detail": c.detail })).collect::<Vec<_>>(),
        "all_passed": report.all_passed(),
    });
    out.push_str(&serde_json::to_string_pretty(&json).expect("report serializes"));
    out.push('\n');
    out
}

/// The JSON section of a report.
pub fn structured_section(report: &str) -> Option<Value> {
    let at = report.find(MARKER)?;
    serde_json::from_str(&report[at + MARKER.len()..]).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn regimes() {
        assert_eq!(regime_label(&InitialState::classical()), "classical limit");
        assert_eq!(regime_label(&InitialState::maximally_entangled()), "maximally entangled");
        let s = InitialState::from_moduli_squared([0.25; 4]).unwrap();
        assert_eq!(regime_label(&s), "general");
        let tt = InitialState::from_moduli_squared([0.0, 0.0, 0.0, 1.0]).unwrap();
        assert_eq!(regime_label(&tt), "classical limit");
    }

    #[test]
    fn structured_section_requires_marker() {
        assert!(structured_section("{}").is_none());
        assert_eq!(structured_section(&format!("x\n{MARKER}\n{{\"a\": 1}}\n")), Some(json!({"a": 1})));
    }
}
