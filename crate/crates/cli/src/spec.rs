//! Game specification documents.
//!
//! ```json
//! {
//!   "payoffs": {"alpha": 2, "beta": 1, "gamma": 0},
//!   "state": {"moduli2": [0.3125, 0.3125, 0.0625, 0.3125]},
//!   "profile": {"p": 1, "q": 1}
//! }
//! ```
//!
//! The state may instead be given as `"amplitudes": [[re, im], ...]`. A
//! report written by this tool is also accepted: its spec is read from the
//! structured section after [`crate::report::MARKER`].

use qbos::{GamePayoffs, InitialState, StrategyProfile, C64};
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::report::MARKER;

/// Largest accepted `|Σ moduli² - 1|`.
pub const MODULI_SUM_TOLERANCE: f64 = qbos::tolerance::MODULI_SUM;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StateSpec {
    Amplitudes([[f64; 2]; 4]),
    Moduli2([f64; 4]),
}

impl StateSpec {
    pub fn initial_state(&self) -> Result<InitialState, CliError> {
        let state = match self {
            StateSpec::Amplitudes(pairs) => InitialState::new(pairs.map(|[re, im]| C64::new(re, im))),
            StateSpec::Moduli2(m) => {
                let sum: f64 = m.iter().sum();
                if (sum - 1.0).abs().is_nan() || (sum - 1.0).abs() > MODULI_SUM_TOLERANCE {
                    return Err(CliError::field(
                        "state",
                        format!("moduli2 sum to {sum}, expected 1 within {MODULI_SUM_TOLERANCE:e}"),
                    ));
                }
                InitialState::from_moduli_squared(*m)
            }
        };
        state.map_err(|e| CliError::field("state", e))
    }

    fn to_json(self) -> Value {
        match self {
            StateSpec::Amplitudes(pairs) => json!({ "amplitudes": pairs }),
            StateSpec::Moduli2(m) => json!({ "moduli2": m }),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GameSpec {
    pub payoffs: GamePayoffs,
    pub state: StateSpec,
    pub profile: Option<StrategyProfile>,
    initial: InitialState,
}

impl GameSpec {
    pub fn new(payoffs: GamePayoffs, state: StateSpec, profile: Option<StrategyProfile>) -> Result<Self, CliError> {
        let initial = state.initial_state()?;
        Ok(Self { payoffs, state, profile, initial })
    }

    pub fn initial_state(&self) -> &InitialState {
        &self.initial
    }

    pub fn require_profile(&self) -> Result<StrategyProfile, CliError> {
        self.profile.ok_or_else(|| CliError::field("profile", "missing; this command needs {\"p\": ..., \"q\": ...}"))
    }

    /// Parses a spec document or a report that embeds one.
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let json_text = match text.find(MARKER) {
            Some(at) => &text[at + MARKER.len()..],
            None => text,
        };
        let value: Value =
            serde_json::from_str(json_text).map_err(|e| CliError::Input(format!("spec is not valid JSON: {e}")))?;
        let root = object(&value, "spec")?;
        let spec_value = match root.get("spec") {
            Some(inner) if !root.contains_key("payoffs") => inner,
            _ => &value,
        };
        Self::from_json(spec_value)
    }

    pub fn from_json(value: &Value) -> Result<Self, CliError> {
        let root = object(value, "spec")?;
        for key in root.keys() {
            if !matches!(key.as_str(), "payoffs" | "state" | "profile") {
                return Err(CliError::field(key.as_str(), "unknown key"));
            }
        }

        let payoffs_obj = object(required(root, "payoffs", "payoffs")?, "payoffs")?;
        let alpha = number(required(payoffs_obj, "alpha", "payoffs.alpha")?, "payoffs.alpha")?;
        let beta = number(required(payoffs_obj, "beta", "payoffs.beta")?, "payoffs.beta")?;
        let gamma = number(required(payoffs_obj, "gamma", "payoffs.gamma")?, "payoffs.gamma")?;
        let payoffs = GamePayoffs::relaxed(alpha, beta, gamma).map_err(|e| CliError::field("payoffs", e))?;

        let state_obj = object(required(root, "state", "state")?, "state")?;
        let state = match (state_obj.get("amplitudes"), state_obj.get("moduli2")) {
            (Some(_), Some(_)) => {
                return Err(CliError::field("state", "give either \"amplitudes\" or \"moduli2\", not both"))
            }
            (None, None) => return Err(CliError::field("state", "expected \"amplitudes\" or \"moduli2\"")),
            (Some(amps), None) => {
                let items = array4(amps, "state.amplitudes")?;
                let mut pairs = [[0.0; 2]; 4];
                for (i, item) in items.iter().enumerate() {
                    let field = format!("state.amplitudes[{i}]");
                    let pair = item
                        .as_array()
                        .filter(|p| p.len() == 2)
                        .ok_or_else(|| CliError::field(field.clone(), "expected a [re, im] pair"))?;
                    pairs[i] = [number(&pair[0], &field)?, number(&pair[1], &field)?];
                }
                StateSpec::Amplitudes(pairs)
            }
            (None, Some(m)) => {
                let items = array4(m, "state.moduli2")?;
                let mut moduli = [0.0; 4];
                for (i, item) in items.iter().enumerate() {
                    moduli[i] = number(item, &format!("state.moduli2[{i}]"))?;
                }
                StateSpec::Moduli2(moduli)
            }
        };
        if let Some(extra) = state_obj.keys().find(|k| !matches!(k.as_str(), "amplitudes" | "moduli2")) {
            return Err(CliError::field(format!("state.{extra}"), "unknown key"));
        }

        let profile = match root.get("profile") {
            None | Some(Value::Null) => None,
            Some(v) => {
                let obj = object(v, "profile")?;
                let p = number(required(obj, "p", "profile.p")?, "profile.p")?;
                let q = number(required(obj, "q", "profile.q")?, "profile.q")?;
                Some(StrategyProfile::new(p, q).map_err(|e| CliError::field("profile", e))?)
            }
        };

        Self::new(payoffs, state, profile)
    }

    pub fn to_json(&self) -> Value {
        let mut root = Map::new();
        root.insert(
            "payoffs".into(),
            json!({ "alpha": self.payoffs.alpha(), "beta": self.payoffs.beta(), "gamma": self.payoffs.gamma() }),
        );
        root.insert("state".into(), self.state.to_json());
        if let Some(profile) = self.profile {
            root.insert("profile".into(), json!({ "p": profile.p(), "q": profile.q() }));
        }
        Value::Object(root)
    }
}

fn object<'a>(value: &'a Value, field: &str) -> Result<&'a Map<String, Value>, CliError> {
    value.as_object().ok_or_else(|| CliError::field(field, "expected an object"))
}

fn required<'a>(obj: &'a Map<String, Value>, key: &str, field: &str) -> Result<&'a Value, CliError> {
    obj.get(key).ok_or_else(|| CliError::field(field, "missing"))
}

fn number(value: &Value, field: &str) -> Result<f64, CliError> {
    value.as_f64().ok_or_else(|| CliError::field(field, "expected a number"))
}

fn array4<'a>(value: &'a Value, field: &str) -> Result<&'a Vec<Value>, CliError> {
    value.as_array().filter(|a| a.len() == 4).ok_or_else(|| CliError::field(field, "expected an array of four entries"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field_of(text: &str) -> String {
        match GameSpec::parse(text).unwrap_err() {
            CliError::Field { field, .. } => field,
            other => panic!("expected a field error, got {other:?}"),
        }
    }

    #[test]
    fn parses_moduli_form() {
        let spec = GameSpec::parse(
            r#"{"payoffs": {"alpha": 2, "beta": 1, "gamma": 0},
                "state": {"moduli2": [0.3125, 0.3125, 0.0625, 0.3125]},
                "profile": {"p": 1, "q": 0}}"#,
        )
        .unwrap();
        assert_eq!(spec.state, StateSpec::Moduli2([0.3125, 0.3125, 0.0625, 0.3125]));
        assert_eq!(spec.profile, Some(StrategyProfile::new(1.0, 0.0).unwrap()));
        assert!(spec.payoffs.is_canonical());
    }

    #[test]
    fn parses_amplitude_form() {
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let text = format!(
            r#"{{"payoffs": {{"alpha": 2, "beta": 1, "gamma": 0}},
                "state": {{"amplitudes": [[{h}, 0], [0, 0], [0, 0], [0, {h}]]}}}}"#
        );
        let spec = GameSpec::parse(&text).unwrap();
        assert!(spec.profile.is_none());
        assert!((spec.initial_state().d().im - h).abs() < 1e-15);
    }

    #[test]
    fn errors_name_the_field() {
        let base = |state: &str| format!(r#"{{"payoffs": {{"alpha": 2, "beta": 1, "gamma": 0}}, "state": {state}}}"#);
        assert_eq!(field_of(&base(r#"{"moduli2": [0.3, 0.3, 0.2, 0.1]}"#)), "state");
        assert_eq!(field_of(&base(r#"{"moduli2": [0.5, 0.5, 0]}"#)), "state.moduli2");
        assert_eq!(field_of(&base(r#"{"moduli2": [0.5, 0.5, "x", 0]}"#)), "state.moduli2[2]");
        assert_eq!(field_of(&base(r#"{"amplitudes": [[1, 0], [0], [0, 0], [0, 0]]}"#)), "state.amplitudes[1]");
        assert_eq!(field_of(&base(r#"{"amplitudes": [[2, 0], [0, 0], [0, 0], [0, 0]]}"#)), "state");
        assert_eq!(field_of(&base(r#"{}"#)), "state");
        assert_eq!(field_of(r#"{"state": {"moduli2": [1, 0, 0, 0]}}"#), "payoffs");
        assert_eq!(
            field_of(r#"{"payoffs": {"alpha": 2, "gamma": 0}, "state": {"moduli2": [1, 0, 0, 0]}}"#),
            "payoffs.beta"
        );
        assert_eq!(
            field_of(
                r#"{"payoffs": {"alpha": 2, "beta": 1, "gamma": 0}, "state": {"moduli2": [1, 0, 0, 0]}, "profile": {"p": 2, "q": 0}}"#
            ),
            "profile"
        );
        assert_eq!(
            field_of(
                r#"{"payoffs": {"alpha": 2, "beta": 1, "gamma": 0}, "state": {"moduli2": [1, 0, 0, 0]}, "extra": 1}"#
            ),
            "extra"
        );
    }

    #[test]
    fn moduli_sum_tolerance_is_inclusive_of_rounding() {
        let ok = r#"{"payoffs": {"alpha": 2, "beta": 1, "gamma": 0}, "state": {"moduli2": [0.5, 0.5000000001, 0, 0]}}"#;
        assert!(GameSpec::parse(ok).is_ok());
        let bad = r#"{"payoffs": {"alpha": 2, "beta": 1, "gamma": 0}, "state": {"moduli2": [0.5, 0.50000001, 0, 0]}}"#;
        assert_eq!(field_of(bad), "state");
    }

    #[test]
    fn json_round_trip_is_exact() {
        let specs = [
            GameSpec::new(
                GamePayoffs::new(1.0 / 3.0, 0.1, -7.25).unwrap(),
                StateSpec::Amplitudes([[0.5, 0.5], [0.5, 0.0], [0.0, -0.5], [0.0, 0.0]]),
                Some(StrategyProfile::new(0.2, 1.0 / 7.0).unwrap()),
            ),
            GameSpec::new(GamePayoffs::relaxed(1.0, 1.0, 0.0).unwrap(), StateSpec::Moduli2([0.1, 0.2, 0.3, 0.4]), None),
        ];
        for spec in specs.map(Result::unwrap) {
            let text = serde_json::to_string(&spec.to_json()).unwrap();
            assert_eq!(GameSpec::parse(&text).unwrap(), spec);
        }
    }
}
