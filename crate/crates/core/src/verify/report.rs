use serde_json::{json, Value};

use crate::poly::{print, PolyMap, Polynomial, VariableFrame};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Outcome {
    Pass,
    Fail,
    Inapplicable,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Inapplicable => "inapplicable",
        }
    }
}

/// Witness values are rendered when recorded, over `x1..xk`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WitnessValue {
    Polynomial(String),
    Map(Vec<String>),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub role: String,
    pub value: WitnessValue,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: String,
    pub instance: String,
    pub outcome: Outcome,
    pub witnesses: Vec<Witness>,
    pub seed: u64,
    pub trials: usize,
    pub failures: usize,
    pub note: Option<String>,
}

impl PropertyReport {
    pub fn new(property: &str) -> Self {
        PropertyReport {
            property: property.to_string(),
            instance: String::new(),
            outcome: Outcome::Pass,
            witnesses: Vec::new(),
            seed: 0,
            trials: 0,
            failures: 0,
            note: None,
        }
    }

    pub fn named(mut self, instance: impl Into<String>) -> Self {
        self.instance = instance.into();
        self
    }

    pub fn seeded(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn inapplicable(mut self, reason: impl Into<String>) -> Self {
        self.outcome = Outcome::Inapplicable;
        self.note = Some(reason.into());
        self
    }

    pub fn noted(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Records one trial; a failing trial turns the report into a failure.
    pub fn trial(&mut self, ok: bool) {
        self.trials += 1;
        if !ok {
            self.failures += 1;
            self.outcome = Outcome::Fail;
        }
    }

    pub fn fail(&mut self) {
        self.outcome = Outcome::Fail;
    }

    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn poly(&mut self, role: &str, f: &Polynomial) {
        let frame = VariableFrame::standard(f.arity());
        self.witnesses.push(Witness {
            role: role.into(),
            value: WitnessValue::Polynomial(print(f, &frame)),
        });
    }

    pub fn map(&mut self, role: &str, f: &PolyMap) {
        let frame = VariableFrame::standard(f.arity());
        self.witnesses.push(Witness {
            role: role.into(),
            value: WitnessValue::Map(f.render(&frame)),
        });
    }

    pub fn text(&mut self, role: &str, text: impl Into<String>) {
        self.witnesses.push(Witness {
            role: role.into(),
            value: WitnessValue::Text(text.into()),
        });
    }

    pub fn to_json(&self) -> Value {
        let witnesses: Vec<Value> = self
            .witnesses
            .iter()
            .map(|w| {
                let value = match &w.value {
                    WitnessValue::Polynomial(s) | WitnessValue::Text(s) => json!(s),
                    WitnessValue::Map(v) => json!(v),
                };
                json!({ "role": w.role, "value": value })
            })
            .collect();
        json!({
            "property": self.property,
            "instance": self.instance,
            "verdict": self.outcome.as_str(),
            "witnesses": witnesses,
            "seed": self.seed,
            "trials": self.trials,
            "failures": self.failures,
            "note": self.note,
        })
    }
}
