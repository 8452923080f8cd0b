//! Exhaustive verifiers run over statically partitioned ranges.
//!
//! Each task scans a contiguous index range (hypotenuse, `q`, `m` or `z`).
//! The range is split with [`partition_range`], every chunk runs on its own
//! scoped thread, and the chunk scans are merged in range order, so the
//! report does not depend on `jobs` or on thread scheduling.

use std::ops::RangeInclusive;
use std::thread;
use std::time::Instant;

use fermat_core::{diophantus20, fermat4, Nat, Scan};
use serde::Serialize;

use crate::partition::{partition_range, PartitionError};
use crate::report::SearchReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Task {
    /// x²+y²=z² with xy=2t²
    Dio20,
    /// x⁴+y⁴=z⁴
    Flt4,
    /// pq(q²-p²) a square
    PqSquare,
    /// m²+n² and m²-n² both squares
    RightTriangle,
}

impl Task {
    pub fn name(&self) -> &'static str {
        match self {
            Task::Dio20 => "dio20",
            Task::Flt4 => "flt4",
            Task::PqSquare => "pq_square",
            Task::RightTriangle => "right_triangle",
        }
    }

    /// Scanned index range: hypotenuse for dio20, `z` for flt4, `q` for
    /// pq_square and `m` for right_triangle. `None` when empty.
    pub fn index_range(&self, bound: Nat) -> Option<RangeInclusive<Nat>> {
        let lo = match self {
            Task::Dio20 => 1,
            Task::Flt4 | Task::PqSquare | Task::RightTriangle => 2,
        };
        (lo <= bound).then_some(lo..=bound)
    }

    /// Fails fast when the largest intermediate for `bound` cannot fit in
    /// a `u64`, instead of partway through a long scan.
    fn check_magnitude(&self, bound: Nat) -> fermat_core::Result<()> {
        let largest = match self {
            Task::Dio20 => bound.checked_pow(2),
            Task::RightTriangle => bound.checked_pow(2).and_then(|v| v.checked_mul(2)),
            Task::Flt4 | Task::PqSquare => bound.checked_pow(4),
        };
        let fits = largest.is_some();
        if fits {
            Ok(())
        } else {
            Err(fermat_core::Error::Overflow)
        }
    }

    fn scan(&self, range: RangeInclusive<Nat>) -> fermat_core::Result<Scan<Counterexample>> {
        fn lift<T>(s: Scan<T>, f: impl Fn(T) -> Counterexample) -> Scan<Counterexample> {
            Scan {
                checked: s.checked,
                hits: s.hits.into_iter().map(f).collect(),
            }
        }
        Ok(match self {
            Task::Dio20 => lift(diophantus20::scan_diophantus20(range)?, |w| {
                Counterexample::Dio20 {
                    x: w.x,
                    y: w.y,
                    z: w.z,
                    t: w.t,
                }
            }),
            Task::Flt4 => lift(fermat4::scan_flt4(range)?, |c| Counterexample::Flt4 {
                x: c.x,
                y: c.y,
                z: c.z,
            }),
            Task::PqSquare => lift(diophantus20::scan_pq_square(range)?, |s| {
                Counterexample::PqSquare { p: s.p(), q: s.q() }
            }),
            Task::RightTriangle => lift(diophantus20::scan_right_triangle(range)?, |(m, n)| {
                Counterexample::RightTriangle { m, n }
            }),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Counterexample {
    Dio20 { x: Nat, y: Nat, z: Nat, t: Nat },
    Flt4 { x: Nat, y: Nat, z: Nat },
    PqSquare { p: Nat, q: Nat },
    RightTriangle { m: Nat, n: Nat },
}

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error(transparent)]
    Arithmetic(#[from] fermat_core::Error),
}

/// Runs `task` up to `bound` on `jobs` workers.
pub fn run_verify(task: Task, bound: Nat, jobs: usize) -> Result<SearchReport, VerifyError> {
    let started = Instant::now();
    task.check_magnitude(bound)?;
    let chunks = match task.index_range(bound) {
        Some(r) => partition_range(*r.start(), *r.end(), jobs)?,
        None if jobs == 0 => return Err(PartitionError::ZeroJobs.into()),
        None => Vec::new(),
    };

    let results: Vec<fermat_core::Result<Scan<Counterexample>>> = if chunks.len() <= 1 {
        chunks.into_iter().map(|r| task.scan(r)).collect()
    } else {
        thread::scope(|s| {
            let handles: Vec<_> = chunks
                .into_iter()
                .map(|r| s.spawn(move || task.scan(r)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("verification worker panicked"))
                .collect()
        })
    };

    let mut total = Scan {
        checked: 0,
        hits: Vec::new(),
    };
    for scan in results {
        total.merge(scan?);
    }
    Ok(SearchReport {
        task,
        bound,
        states_checked: total.checked,
        counterexamples: total.hits,
        elapsed_ms: started.elapsed().as_millis() as u64,
        jobs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_ranges() {
        for task in [Task::Dio20, Task::Flt4, Task::PqSquare, Task::RightTriangle] {
            let r = run_verify(task, 0, 3).unwrap();
            assert_eq!((r.states_checked, r.counterexamples.len()), (0, 0));
            let r = run_verify(task, 1, 3).unwrap();
            assert_eq!((r.states_checked, r.counterexamples.len()), (0, 0));
        }
        assert!(matches!(
            run_verify(Task::Flt4, 0, 0),
            Err(VerifyError::Partition(PartitionError::ZeroJobs))
        ));
        assert!(matches!(
            run_verify(Task::Flt4, 10, 0),
            Err(VerifyError::Partition(PartitionError::ZeroJobs))
        ));
    }

    #[test]
    fn counts_do_not_depend_on_jobs() {
        for task in [Task::Dio20, Task::Flt4, Task::PqSquare, Task::RightTriangle] {
            let one = run_verify(task, 120, 1).unwrap();
            for jobs in [2, 3, 7, 200] {
                let many = run_verify(task, 120, jobs).unwrap();
                assert_eq!(one.states_checked, many.states_checked);
                assert_eq!(one.counterexamples, many.counterexamples);
            }
        }
    }

    #[test]
    fn flt4_count_is_pairs_below_bound() {
        let r = run_verify(Task::Flt4, 60, 4).unwrap();
        assert_eq!(r.states_checked, 60 * 59 / 2);
    }

    #[test]
    fn overflow_surfaces() {
        let err = run_verify(Task::Flt4, 70_000, 1).unwrap_err();
        assert!(matches!(
            err,
            VerifyError::Arithmetic(fermat_core::Error::Overflow)
        ));
    }
}
