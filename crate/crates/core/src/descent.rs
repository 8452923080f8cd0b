//! Infinite descent over a natural-number measure.
//!
//! A step function either produces a strictly smaller state or refutes the
//! current one. Because the measure is a natural number and must strictly
//! drop at every step, a run from `x` visits at most `measure(x) + 1`
//! states. The engine checks the decrease at runtime and reports a
//! [`Error::MeasureViolation`] instead of looping.

use alloc::vec::Vec;

use crate::numeric::Nat;
use crate::{Error, Result};

/// Result of one descent step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StepOutcome<S, R> {
    /// A state with strictly smaller measure that would satisfy the same claim.
    Smaller(S),
    /// The claim fails at this state; the descent stops here.
    Refuted(R),
}

/// Audit trail of a descent run: every visited state with its measure and
/// the refutation that ended it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentTrace<S, R> {
    pub states: Vec<S>,
    pub measures: Vec<Nat>,
    pub terminal: R,
}

impl<S, R> DescentTrace<S, R> {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn last_state(&self) -> Option<&S> {
        self.states.last()
    }
}

pub fn run_descent<S, R, F, M>(initial: S, mut step: F, measure: M) -> Result<DescentTrace<S, R>>
where
    F: FnMut(&S) -> StepOutcome<S, R>,
    M: FnMut(&S) -> Nat,
{
    try_run_descent(initial, |s| Ok(step(s)), measure)
}

/// [`run_descent`] for step functions that can fail, e.g. on overflow.
pub fn try_run_descent<S, R, F, M>(
    initial: S,
    mut step: F,
    mut measure: M,
) -> Result<DescentTrace<S, R>>
where
    F: FnMut(&S) -> Result<StepOutcome<S, R>>,
    M: FnMut(&S) -> Nat,
{
    let mut states = Vec::new();
    let mut measures = Vec::new();
    let mut current = initial;
    let mut current_measure = measure(&current);
    loop {
        let outcome = step(&current)?;
        states.push(current);
        measures.push(current_measure);
        match outcome {
            StepOutcome::Refuted(terminal) => {
                return Ok(DescentTrace {
                    states,
                    measures,
                    terminal,
                });
            }
            StepOutcome::Smaller(next) => {
                let next_measure = measure(&next);
                if next_measure >= current_measure {
                    return Err(Error::MeasureViolation {
                        from: current_measure,
                        to: next_measure,
                    });
                }
                current = next;
                current_measure = next_measure;
            }
        }
    }
}

/// Independent audit of a measure sequence: non-empty, strictly decreasing,
/// and no longer than `measures[0] + 1`.
pub fn check_measures(measures: &[Nat]) -> bool {
    let Some(&first) = measures.first() else {
        return false;
    };
    let bounded = u64::try_from(measures.len()).is_ok_and(|len| len - 1 <= first);
    bounded && measures.windows(2).all(|w| w[1] < w[0])
}

pub fn check_trace<S, R>(trace: &DescentTrace<S, R>) -> bool {
    trace.states.len() == trace.measures.len() && check_measures(&trace.measures)
}
