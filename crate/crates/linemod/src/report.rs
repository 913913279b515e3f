//! JSON reports. Keys are sorted, rationals are `"p/q"` strings and nothing
//! time-dependent is recorded, so identical runs give identical bytes.

use linemod_core::hilbert::HilbertFunction;
use linemod_core::ncalg::{fmt_q, Alphabet, NcPoly, Q};
use linemod_core::rewrite::{RewriteStep, RewriteSystem};
use serde_json::{json, Map, Value};

#[derive(Clone, Debug)]
pub struct Report {
    pub command: String,
    pub inputs: Map<String, Value>,
    pub results: Map<String, Value>,
    pub pass: bool,
    pub seed: Option<u64>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report { command: command.into(), inputs: Map::new(), results: Map::new(), pass: true, seed: None }
    }

    pub fn input(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.into(), v.into());
        self
    }

    pub fn result(&mut self, key: &str, v: impl Into<Value>) -> &mut Self {
        self.results.insert(key.into(), v.into());
        self
    }

    pub fn to_json(&self) -> Value {
        json!({
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "pass": self.pass,
            "seed": self.seed,
            "versions": { "linemod": env!("CARGO_PKG_VERSION") },
        })
    }

    pub fn render_json(&self, pretty: bool) -> String {
        let v = self.to_json();
        if pretty {
            serde_json::to_string_pretty(&v).expect("serializable")
        } else {
            serde_json::to_string(&v).expect("serializable")
        }
    }

    /// Plain-text summary: a status line and one line per result.
    pub fn render_text(&self) -> String {
        let mut out = format!("{} {}\n", self.command, if self.pass { "PASS" } else { "FAIL" });
        for (k, v) in &self.results {
            out += &format!("  {k}: {}\n", compact(v));
        }
        out
    }
}

fn compact(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn rat(x: &Q) -> Value {
    Value::String(fmt_q(x))
}

pub fn rats(xs: &[Q]) -> Value {
    Value::Array(xs.iter().map(rat).collect())
}

pub fn dims(h: &HilbertFunction) -> Value {
    json!(h.dims)
}

pub fn poly(alpha: &Alphabet, p: &NcPoly) -> Value {
    Value::String(alpha.fmt_poly(p))
}

/// One entry per rewrite: the word rewritten, its coefficient, where, and by which rule.
pub fn trace(rs: &RewriteSystem, steps: &[RewriteStep]) -> Value {
    let a = rs.alphabet();
    Value::Array(
        steps
            .iter()
            .map(|s| {
                let rule = &rs.rules[s.rule];
                json!({
                    "word": a.fmt_word(&s.word),
                    "coeff": rat(&s.coeff),
                    "position": s.position,
                    "rule": format!("{} -> {}", a.fmt_word(&rule.lhs), a.fmt_poly(&rule.rhs)),
                })
            })
            .collect(),
    )
}
