//! Output records. Each record is one line: a JSON object in `json` mode,
//! a human-readable line in `text` mode.

use std::io::{self, Write};

use fermat_core::diophantus20::{DescentState, DescentStepRecord};
use fermat_core::{CirclePoint, Nat, Parametrization, Rational, Triple};
use serde::Serialize;

use crate::verify::{Counterexample, Task};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    #[default]
    Text,
}

pub trait Render: Serialize {
    fn text(&self) -> String;
}

pub fn emit(out: &mut dyn Write, format: Format, record: &impl Render) -> io::Result<()> {
    match format {
        Format::Json => {
            serde_json::to_writer(&mut *out, record)?;
            writeln!(out)
        }
        Format::Text => writeln!(out, "{}", record.text()),
    }
}

/// Summary of one exhaustive verification run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub task: Task,
    pub bound: Nat,
    pub states_checked: u64,
    pub counterexamples: Vec<Counterexample>,
    pub elapsed_ms: u64,
    pub jobs: usize,
}

impl Render for SearchReport {
    fn text(&self) -> String {
        let mut s = format!(
            "{}: bound={} states_checked={} counterexamples={} jobs={} elapsed_ms={}",
            self.task.name(),
            self.bound,
            self.states_checked,
            self.counterexamples.len(),
            self.jobs,
            self.elapsed_ms,
        );
        for c in &self.counterexamples {
            s.push_str("\n  counterexample ");
            s.push_str(&serde_json::to_string(c).unwrap_or_default());
        }
        s
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct TripleRecord {
    pub a: Nat,
    pub b: Nat,
    pub c: Nat,
}

impl From<Triple> for TripleRecord {
    fn from(t: Triple) -> Self {
        TripleRecord {
            a: t.a,
            b: t.b,
            c: t.c,
        }
    }
}

impl Render for TripleRecord {
    fn text(&self) -> String {
        format!("{} {} {}", self.a, self.b, self.c)
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct ClassifyRecord {
    pub a: Nat,
    pub b: Nat,
    pub c: Nat,
    pub m: Nat,
    pub p: Nat,
    pub q: Nat,
    pub orientation: &'static str,
}

impl ClassifyRecord {
    pub fn new(t: Triple, param: Parametrization) -> Self {
        ClassifyRecord {
            a: t.a,
            b: t.b,
            c: t.c,
            m: param.m,
            p: param.p,
            q: param.q,
            orientation: param.orientation.as_str(),
        }
    }
}

impl Render for ClassifyRecord {
    fn text(&self) -> String {
        format!(
            "({}, {}, {}) = m={} p={} q={} {}",
            self.a, self.b, self.c, self.m, self.p, self.q, self.orientation
        )
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct CircleRecord {
    pub r_num: Nat,
    pub r_den: Nat,
    pub x_num: Nat,
    pub x_den: Nat,
    pub y_num: Nat,
    pub y_den: Nat,
}

impl CircleRecord {
    pub fn new(r: Rational, pt: CirclePoint) -> Self {
        CircleRecord {
            r_num: r.num(),
            r_den: r.den(),
            x_num: pt.x().num(),
            x_den: pt.x().den(),
            y_num: pt.y().num(),
            y_den: pt.y().den(),
        }
    }
}

impl Render for CircleRecord {
    fn text(&self) -> String {
        format!(
            "r={}/{} -> ({}/{}, {}/{})",
            self.r_num, self.r_den, self.x_num, self.x_den, self.y_num, self.y_den
        )
    }
}

/// Intermediates of one descent step; absent fields were never reached.
#[derive(Clone, Copy, Debug, Default, Serialize)]
pub struct StepValues {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<Nat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<Nat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub u: Option<Nat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v: Option<Nat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub branch: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<Nat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub w: Option<Nat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<Nat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub b: Option<Nat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_prime: Option<Nat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_prime: Option<Nat>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q_prime: Option<Nat>,
}

impl From<&DescentStepRecord> for StepValues {
    fn from(r: &DescentStepRecord) -> Self {
        StepValues {
            m: r.m,
            n: r.n,
            u: r.u,
            v: r.v,
            branch: r.branch.map(|b| b.as_str()),
            s: r.s,
            w: r.w,
            a: r.a,
            b: r.b,
            k_prime: r.k_prime,
            p_prime: r.p_prime,
            q_prime: r.q_prime,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct StepLine {
    pub step: usize,
    pub p: Nat,
    pub q: Nat,
    pub measure: Nat,
    pub record: StepValues,
}

impl StepLine {
    pub fn new(step: usize, state: &DescentState, measure: Nat, rec: &DescentStepRecord) -> Self {
        StepLine {
            step,
            p: state.p(),
            q: state.q(),
            measure,
            record: rec.into(),
        }
    }
}

impl Render for StepLine {
    fn text(&self) -> String {
        let mut s = format!(
            "step {}: p={} q={} measure={}",
            self.step, self.p, self.q, self.measure
        );
        let r = &self.record;
        let numbers = [
            ("m", r.m),
            ("n", r.n),
            ("u", r.u),
            ("v", r.v),
            ("s", r.s),
            ("w", r.w),
            ("a", r.a),
            ("b", r.b),
            ("k_prime", r.k_prime),
            ("p_prime", r.p_prime),
            ("q_prime", r.q_prime),
        ];
        for (name, value) in numbers {
            if let Some(v) = value {
                s.push_str(&format!(" {name}={v}"));
            }
            if name == "v" {
                if let Some(b) = r.branch {
                    s.push_str(&format!(" branch={b}"));
                }
            }
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DescentSummary {
    pub p: Nat,
    pub q: Nat,
    pub stage: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<&'static str>,
    pub steps: usize,
    pub trace_valid: bool,
}

impl Render for DescentSummary {
    fn text(&self) -> String {
        let detail = self.detail.map(|d| format!(" ({d})")).unwrap_or_default();
        format!(
            "({}, {}) refuted at {}{} after {} step(s); trace {}",
            self.p,
            self.q,
            self.stage,
            detail,
            self.steps,
            if self.trace_valid { "valid" } else { "INVALID" }
        )
    }
}

/// Verdict of one randomized property.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyLine {
    pub property: &'static str,
    pub trials: u64,
    pub seed: u64,
    pub failures: u64,
    /// FNV-1a digest of every sampled case, in sampling order.
    pub digest: String,
}

impl Render for PropertyLine {
    fn text(&self) -> String {
        format!(
            "{}: trials={} seed={} failures={} digest={}",
            self.property, self.trials, self.seed, self.failures, self.digest
        )
    }
}
