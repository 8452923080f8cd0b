//! Seeded randomized property checks.
//!
//! Every property draws from its own ChaCha8 stream (seed plus property
//! index), so one seed reproduces every sampled case and verdict exactly,
//! independent of which other properties run.

use fermat_core::diophantus20::uv_split;
use fermat_core::numeric::{
    distinct_parity, gauss_divides, gcd, prop1_holds, prop2_holds, prop3_holds, prop4_decompose,
    rel_prime,
};
use fermat_core::pythagoras::{circle_point, classify, generate, slope_of_point};
use fermat_core::{Orientation, Parametrization, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::report::PropertyLine;

pub const PROPERTIES: [&str; 8] = [
    "prop1",
    "prop2",
    "prop3",
    "prop4_round_trip",
    "gauss",
    "uv_gcd",
    "classify_round_trip",
    "circle_round_trip",
];

/// 64-bit FNV-1a over the sampled values.
#[derive(Clone, Copy)]
struct Digest(u64);

impl Digest {
    fn new() -> Self {
        Digest(0xcbf2_9ce4_8422_2325)
    }

    fn feed(&mut self, values: &[u64]) {
        for v in values {
            for byte in v.to_le_bytes() {
                self.0 ^= u64::from(byte);
                self.0 = self.0.wrapping_mul(0x0000_0100_0000_01b3);
            }
        }
    }
}

struct Sampler {
    rng: ChaCha8Rng,
    digest: Digest,
}

impl Sampler {
    fn draw(&mut self, lo: u64, hi: u64) -> u64 {
        self.rng.random_range(lo..=hi)
    }

    fn record(&mut self, values: &[u64]) {
        self.digest.feed(values);
    }
}

/// One trial: samples a case, records it, returns whether the property held.
fn trial(name: &str, s: &mut Sampler) -> bool {
    match name {
        "prop1" => {
            let (m, n) = loop {
                let m = s.draw(2, 1_000_000);
                let n = s.draw(1, m - 1);
                if rel_prime(m, n) && distinct_parity(m, n) {
                    break (m, n);
                }
            };
            s.record(&[m, n]);
            prop1_holds(m, n) == Ok(true)
        }
        "prop2" => {
            let (m, n) = loop {
                let m = s.draw(1, 1_000_000);
                let n = s.draw(0, m);
                if rel_prime(m, n) {
                    break (m, n);
                }
            };
            s.record(&[m, n]);
            prop2_holds(m, n) == Ok(true)
        }
        "prop3" => {
            let (m, n) = loop {
                let (m, n) = (s.draw(0, 1_000_000), s.draw(0, 1_000_000));
                if rel_prime(m * m, n * n) {
                    break (m, n);
                }
            };
            s.record(&[m, n]);
            prop3_holds(m, n) == Ok(true)
        }
        "prop4_round_trip" => {
            let k = s.draw(1, 3) as usize;
            let roots = loop {
                let roots: Vec<u64> = (0..k).map(|_| s.draw(0, 1000)).collect();
                let pairwise = roots
                    .iter()
                    .enumerate()
                    .all(|(i, &a)| roots[i + 1..].iter().all(|&b| rel_prime(a, b)));
                if pairwise {
                    break roots;
                }
            };
            s.record(&roots);
            let squares: Vec<u64> = roots.iter().map(|r| r * r).collect();
            prop4_decompose(&squares).as_deref() == Ok(&roots[..])
        }
        "gauss" => {
            let (d, a) = loop {
                let (d, a) = (s.draw(1, 10_000), s.draw(0, 10_000));
                if rel_prime(a, d) {
                    break (d, a);
                }
            };
            let b = d * s.draw(0, 10_000);
            s.record(&[d, a, b]);
            gauss_divides(d, a, b) == Ok(true)
        }
        "uv_gcd" => {
            let (u, v) = loop {
                let u = 2 * s.draw(1, 500_000) + 1;
                let v = 2 * s.draw(0, (u - 3) / 2) + 1;
                if rel_prime(u, v) {
                    break (u, v);
                }
            };
            s.record(&[u, v]);
            gcd(u + v, u - v) == 2 && uv_split(u, v).is_ok()
        }
        "classify_round_trip" => {
            let param = loop {
                let (m, q) = (s.draw(1, 1000), s.draw(1, 1000));
                let p = s.draw(0, q);
                let orientation = if s.draw(0, 1) == 0 {
                    Orientation::OddFirst
                } else {
                    Orientation::EvenFirst
                };
                if let Ok(param) = Parametrization::new(m, p, q, orientation) {
                    break param;
                }
            };
            s.record(&[
                param.m,
                param.p,
                param.q,
                (param.orientation == Orientation::EvenFirst) as u64,
            ]);
            generate(param).and_then(classify) == Ok(param)
        }
        "circle_round_trip" => {
            let q = s.draw(1, 10_000);
            let p = s.draw(0, q);
            s.record(&[p, q]);
            let r = Rational::new(p, q).expect("q >= 1");
            circle_point(r).and_then(slope_of_point) == Ok(r)
        }
        other => panic!("unknown property {other}"),
    }
}

/// Runs `trials` cases of the named property.
pub fn run_property(name: &'static str, trials: u64, seed: u64) -> Option<PropertyLine> {
    let index = PROPERTIES.iter().position(|p| *p == name)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let mut sampler = Sampler {
        rng,
        digest: Digest::new(),
    };
    let failures = (0..trials).filter(|_| !trial(name, &mut sampler)).count() as u64;
    Some(PropertyLine {
        property: name,
        trials,
        seed,
        failures,
        digest: format!("{:016x}", sampler.digest.0),
    })
}

pub fn run_props(trials: u64, seed: u64) -> Vec<PropertyLine> {
    PROPERTIES
        .iter()
        .filter_map(|name| run_property(name, trials, seed))
        .collect()
}
