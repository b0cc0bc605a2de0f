//! Randomized probe of localization versus sections on semi-real rings that
//! are not real. Outcomes are evidence only: a failed search never refutes
//! the existence of a gluing.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::poly::{int, Poly};
use crate::ring::{Ring, RingElem, SearchBounds, SigmaDenominator, SumOfSquares};
use crate::sheaf::{
    glue, psi, section_eq, section_validate, verify_glue_certificate, GlueOutcome, Section,
    SigmaFraction,
};
use crate::spectrum::enumerate_primes;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExploreConfig {
    pub min_degree: usize,
    pub max_degree: usize,
    pub rings: usize,
    pub trials: usize,
    pub bounds: SearchBounds,
}

impl Default for ExploreConfig {
    fn default() -> Self {
        ExploreConfig {
            min_degree: 2,
            max_degree: 6,
            rings: 50,
            trials: 4,
            bounds: SearchBounds::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RingTally {
    pub ring: String,
    pub glued: usize,
    pub certificate_exhausted: usize,
    pub structurally_blocked: usize,
    /// Glued results whose certificate or round trip failed to re-check.
    pub reverify_failures: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnresolvedInstance {
    pub ring: String,
    pub f: String,
    pub patches: Vec<String>,
    pub seed: u64,
    pub outcome: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExplorationReport {
    pub seed: u64,
    pub trials_per_ring: usize,
    pub rings: Vec<RingTally>,
    pub unresolved: Vec<UnresolvedInstance>,
}

impl ExplorationReport {
    pub fn totals(&self) -> (usize, usize, usize, usize) {
        self.rings.iter().fold((0, 0, 0, 0), |t, r| {
            (
                t.0 + r.glued,
                t.1 + r.certificate_exhausted,
                t.2 + r.structurally_blocked,
                t.3 + r.reverify_failures,
            )
        })
    }
}

impl fmt::Display for ExplorationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "explore-question seed={} rings={} trials={} (experimental evidence only, no refutation is claimed)",
            self.seed,
            self.rings.len(),
            self.trials_per_ring
        )?;
        for r in &self.rings {
            writeln!(
                f,
                "ring {}: glued={} certificate-exhausted={} structurally-blocked={}",
                r.ring, r.glued, r.certificate_exhausted, r.structurally_blocked
            )?;
        }
        for u in &self.unresolved {
            writeln!(
                f,
                "unresolved instance: ring={} f={} patches=[{}] seed={} outcome={}",
                u.ring,
                u.f,
                u.patches.join(", "),
                u.seed,
                u.outcome
            )?;
        }
        let (g, e, b, v) = self.totals();
        writeln!(
            f,
            "totals: glued={g} certificate-exhausted={e} structurally-blocked={b} reverify-failures={v}"
        )
    }
}

fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize, c: i64) -> Poly {
    let deg = rng.gen_range(0..=max_deg);
    Poly::new((0..=deg).map(|_| int(rng.gen_range(-c..=c))).collect())
}

fn random_factor(rng: &mut ChaCha8Rng) -> Poly {
    match rng.gen_range(0..3) {
        0 => Poly::from_ints(&[rng.gen_range(-3..=3), 1]),
        1 => Poly::from_ints(&[rng.gen_range(1..=4), 0, 1]),
        _ => Poly::from_ints(&[rng.gen_range(1..=4), rng.gen_range(-1..=1), 1]),
    }
}

/// A quotient ring that is semi-real but not real, with modulus degree in
/// the configured range.
pub fn sample_ring(rng: &mut ChaCha8Rng, min_degree: usize, max_degree: usize) -> Result<Ring> {
    let min_degree = min_degree.max(2);
    let max_degree = max_degree.max(min_degree);
    loop {
        let target = rng.gen_range(min_degree..=max_degree);
        let mut m = Poly::from_ints(&[rng.gen_range(-3..=3), 1]).pow(rng.gen_range(1..=2));
        while m.degree().finite().unwrap_or(0) < target {
            m = &m * &random_factor(rng).pow(rng.gen_range(1..=2));
        }
        if m.degree().finite().unwrap_or(0) > max_degree {
            continue;
        }
        let ring = Ring::quotient(m)?;
        if ring.is_semireal() && !ring.is_real() {
            return Ok(ring);
        }
    }
}

/// Data with pairwise disjoint patches: one patch per real prime, each
/// carrying an arbitrary numerator.
fn pointwise_section(rng: &mut ChaCha8Rng, ring: &Ring, f: &RingElem) -> Result<Section> {
    let m = ring.modulus().expect("quotient ring");
    let n = m.degree().finite().unwrap_or(1);
    let mut pairs = Vec::new();
    for p in enumerate_primes(ring)? {
        let q = p.gen().expect("principal").clone();
        let mut rest = m.clone();
        while q.divides(&rest) {
            rest = rest.divrem(&q)?.0;
        }
        let a = ring.elem(random_poly(rng, n - 1, 3));
        pairs.push((ring.elem(rest), a));
    }
    if pairs.is_empty() {
        pairs.push((f.clone(), ring.elem(random_poly(rng, n - 1, 3))));
    }
    Section::from_pairs(f.clone(), pairs)
}

fn psi_section(rng: &mut ChaCha8Rng, ring: &Ring, f: &RingElem) -> Result<Section> {
    let n = ring.modulus().expect("quotient ring").degree().finite().unwrap_or(1);
    let tail: Vec<RingElem> = (0..rng.gen_range(0..=2))
        .map(|_| ring.elem(random_poly(rng, n - 1, 2)))
        .collect();
    let den = SigmaDenominator::new(f.clone(), rng.gen_range(1..=2), SumOfSquares::new(ring, tail)?)?;
    let u = SigmaFraction::new(ring.elem(random_poly(rng, n - 1, 3)), den)?;
    Ok(psi(&u))
}

/// Pointwise data whose patch denominators are perturbed by `1 + h²`, which
/// never vanishes at a real prime but may be a zero divisor.
fn perturbed_section(rng: &mut ChaCha8Rng, ring: &Ring, f: &RingElem) -> Result<Section> {
    let base = pointwise_section(rng, ring, f)?;
    let n = ring.modulus().expect("quotient ring").degree().finite().unwrap_or(1);
    let pairs = base
        .patches()
        .iter()
        .map(|p| {
            let h = ring.elem(random_poly(rng, n - 1, 2));
            let w = &ring.one() + &h.square();
            (p.g() * &w, p.a() * &w)
        })
        .collect();
    Section::from_pairs(f.clone(), pairs)
}

fn sample_section(rng: &mut ChaCha8Rng, ring: &Ring) -> Result<Section> {
    let n = ring.modulus().expect("quotient ring").degree().finite().unwrap_or(1);
    let f = if rng.gen_bool(0.25) {
        ring.one()
    } else {
        let e = ring.elem(random_poly(rng, n - 1, 3));
        if e.is_zero() {
            ring.one()
        } else {
            e
        }
    };
    for _ in 0..4 {
        let s = match rng.gen_range(0..3) {
            0 => pointwise_section(rng, ring, &f)?,
            1 => psi_section(rng, ring, &f)?,
            _ => perturbed_section(rng, ring, &f)?,
        };
        if section_validate(&s)?.is_valid() {
            return Ok(s);
        }
    }
    pointwise_section(rng, ring, &f)
}

fn describe(s: &Section) -> Vec<String> {
    s.patches()
        .iter()
        .map(|p| format!("{}:{}", p.g(), p.a()))
        .collect()
}

pub fn explore_question(config: &ExploreConfig, seed: u64) -> Result<ExplorationReport> {
    config.bounds.validate()?;
    let mut report = ExplorationReport {
        seed,
        trials_per_ring: config.trials,
        rings: Vec::new(),
        unresolved: Vec::new(),
    };
    if config.trials == 0 {
        return Ok(report);
    }
    let mut master = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..config.rings {
        let ring = sample_ring(&mut master, config.min_degree, config.max_degree)?;
        let mut tally = RingTally {
            ring: ring.to_string(),
            glued: 0,
            certificate_exhausted: 0,
            structurally_blocked: 0,
            reverify_failures: 0,
        };
        for _ in 0..config.trials {
            let trial_seed: u64 = master.gen();
            let mut rng = ChaCha8Rng::seed_from_u64(trial_seed);
            let s = sample_section(&mut rng, &ring)?;
            let bounds = SearchBounds {
                seed: trial_seed,
                ..config.bounds.clone()
            };
            let outcome = match glue(&s, &bounds)? {
                GlueOutcome::Glued { fraction, cert, .. } => {
                    tally.glued += 1;
                    let ok = verify_glue_certificate(&cert)? && section_eq(&psi(&fraction), &s)?;
                    if !ok {
                        tally.reverify_failures += 1;
                    }
                    continue;
                }
                GlueOutcome::CertificateExhausted => {
                    tally.certificate_exhausted += 1;
                    "certificate-exhausted"
                }
                GlueOutcome::StructurallyBlocked => {
                    tally.structurally_blocked += 1;
                    "structurally-blocked"
                }
            };
            report.unresolved.push(UnresolvedInstance {
                ring: ring.to_string(),
                f: s.f().to_string(),
                patches: describe(&s),
                seed: trial_seed,
                outcome: outcome.into(),
            });
        }
        report.rings.push(tally);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingElem;

    #[test]
    fn zero_trials_give_an_empty_report() {
        let cfg = ExploreConfig {
            trials: 0,
            ..ExploreConfig::default()
        };
        let r = explore_question(&cfg, 7).unwrap();
        assert!(r.rings.is_empty() && r.unresolved.is_empty());
    }

    #[test]
    fn sampled_rings_are_semireal_not_real() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let r = sample_ring(&mut rng, 2, 6).unwrap();
            assert!(r.is_semireal() && !r.is_real());
            let d = r.modulus().unwrap().degree().finite().unwrap();
            assert!((2..=6).contains(&d));
        }
    }

    #[test]
    fn constant_section_on_double_point_glues() {
        let r = Ring::quotient(Poly::from_ints(&[0, 0, 1])).unwrap();
        let x: RingElem = r.elem(Poly::x());
        let s = Section::from_pairs(r.one(), vec![(r.one(), x.clone())]).unwrap();
        let GlueOutcome::Glued {
            fraction,
            experimental,
            ..
        } = glue(&s, &SearchBounds::default()).unwrap()
        else {
            panic!("glue failed")
        };
        assert!(experimental);
        assert_eq!(fraction.a(), &x);
    }

    #[test]
    fn reports_are_deterministic() {
        let cfg = ExploreConfig {
            rings: 6,
            trials: 3,
            ..ExploreConfig::default()
        };
        let a = explore_question(&cfg, 11).unwrap().to_string();
        let b = explore_question(&cfg, 11).unwrap().to_string();
        assert_eq!(a, b);
        assert!(!a.contains("counterexample"));
    }
}
