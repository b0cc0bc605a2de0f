//! Shared generators and independent oracles for the integration tests.
#![allow(dead_code)]

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use realspec::poly::{int, Poly, Rational};
use realspec::ring::{Ring, RingElem};

pub fn p(c: &[i64]) -> Poly {
    Poly::from_ints(c)
}

pub fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize, c: i64) -> Poly {
    let deg = rng.gen_range(0..=max_deg);
    Poly::new((0..=deg).map(|_| int(rng.gen_range(-c..=c))).collect())
}

pub fn random_nonzero(rng: &mut ChaCha8Rng, max_deg: usize, c: i64) -> Poly {
    loop {
        let q = random_poly(rng, max_deg, c);
        if !q.is_zero() {
            return q;
        }
    }
}

/// A small factor: a rational root, an irrational real pair, or no real root.
pub fn random_small_factor(rng: &mut ChaCha8Rng) -> Poly {
    match rng.gen_range(0..5) {
        0 | 1 => p(&[rng.gen_range(-4..=4), 1]),
        2 => p(&[-rng.gen_range(2..=3), 0, 1]),
        3 => p(&[rng.gen_range(1..=3), 0, 1]),
        _ => p(&[rng.gen_range(1..=3), rng.gen_range(-1..=1), 1]),
    }
}

/// A product of small factors with multiplicities, degree at most `max_deg`,
/// times a random nonzero constant.
pub fn random_structured(rng: &mut ChaCha8Rng, max_deg: usize) -> Poly {
    let mut acc = Poly::constant(int(rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 }));
    for _ in 0..rng.gen_range(0..=4) {
        let q = random_small_factor(rng).pow(rng.gen_range(1..=2));
        let cand = &acc * &q;
        if cand.degree().finite().unwrap_or(0) <= max_deg {
            acc = cand;
        }
    }
    acc
}

/// Mixes structured products, dense random polynomials and zero.
pub fn random_generator(rng: &mut ChaCha8Rng, max_deg: usize) -> Poly {
    match rng.gen_range(0..10) {
        0 => Poly::zero(),
        1..=3 => random_poly(rng, max_deg, 5),
        _ => random_structured(rng, max_deg),
    }
}

pub fn random_monic_modulus(rng: &mut ChaCha8Rng, max_deg: usize) -> Poly {
    loop {
        let m = random_structured(rng, max_deg);
        if m.degree().finite().unwrap_or(0) >= 1 {
            return m.monic();
        }
        if rng.gen_bool(0.3) {
            let d = rng.gen_range(1..=max_deg);
            let mut c: Vec<i64> = (0..d).map(|_| rng.gen_range(-3..=3)).collect();
            c.push(1);
            return p(&c);
        }
    }
}

pub fn random_quotient(rng: &mut ChaCha8Rng, max_deg: usize) -> Ring {
    Ring::quotient(random_monic_modulus(rng, max_deg)).expect("monic nonconstant")
}

/// A real quotient ring: distinct real-rooted irreducible factors.
pub fn random_real_ring(rng: &mut ChaCha8Rng, max_deg: usize) -> Ring {
    let pool = [
        p(&[-2, 0, 1]),
        p(&[-3, 0, 1]),
        p(&[-2, 0, 0, 1]),
        p(&[-1, -1, 1]),
    ];
    loop {
        let mut m = Poly::one();
        let mut roots: Vec<i64> = Vec::new();
        for _ in 0..rng.gen_range(1..=4) {
            if rng.gen_bool(0.7) {
                let r = rng.gen_range(-5..=5);
                if !roots.contains(&r) {
                    roots.push(r);
                    m = &m * &p(&[-r, 1]);
                }
            } else {
                let q = pool[rng.gen_range(0..pool.len())].clone();
                if !q.divides(&m) {
                    m = &m * &q;
                }
            }
        }
        let d = m.degree().finite().unwrap_or(0);
        if d >= 1 && d <= max_deg {
            let ring = Ring::quotient(m).expect("monic");
            assert!(ring.is_real());
            return ring;
        }
    }
}

pub fn random_elem(rng: &mut ChaCha8Rng, ring: &Ring, c: i64) -> RingElem {
    let d = ring
        .modulus()
        .and_then(|m| m.degree().finite())
        .map_or(6, |d| d.saturating_sub(1));
    ring.elem(random_poly(rng, d, c))
}

pub fn random_nonzero_elem(rng: &mut ChaCha8Rng, ring: &Ring, c: i64) -> RingElem {
    loop {
        let e = random_elem(rng, ring, c);
        if !e.is_zero() {
            return e;
        }
    }
}

// ---- independent real-root oracle -------------------------------------------

fn pmul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn ppow(a: &[Rational], e: usize) -> Vec<Rational> {
    let mut acc = vec![Rational::one()];
    for _ in 0..e {
        acc = pmul(&acc, a);
    }
    acc
}

/// Coefficients of `(1+t)^n p((lo + hi t)/(1 + t))`; its positive roots
/// correspond to the roots of `p` in `(lo, hi)`.
fn moebius(c: &[Rational], lo: &Rational, hi: &Rational) -> Vec<Rational> {
    let n = c.len() - 1;
    let num = vec![lo.clone(), hi.clone()];
    let den = vec![Rational::one(), Rational::one()];
    let mut out = vec![Rational::zero(); n + 1];
    for (i, ci) in c.iter().enumerate() {
        if ci.is_zero() {
            continue;
        }
        let term = pmul(&ppow(&num, i), &ppow(&den, n - i));
        for (k, t) in term.iter().enumerate() {
            out[k] += ci * t;
        }
    }
    out
}

fn sign_variations(c: &[Rational]) -> usize {
    let signs: Vec<bool> = c.iter().filter(|x| !x.is_zero()).map(|x| x.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

fn eval(c: &[Rational], x: &Rational) -> Rational {
    c.iter().rev().fold(Rational::zero(), |acc, ci| acc * x + ci)
}

fn count_in(c: &[Rational], lo: Rational, hi: Rational, depth: usize) -> usize {
    match sign_variations(&moebius(c, &lo, &hi)) {
        0 => 0,
        1 => 1,
        _ => {
            assert!(depth < 400, "bisection did not isolate the roots");
            let mid = (&lo + &hi) / int(2);
            let at_mid = usize::from(eval(c, &mid).is_zero());
            count_in(c, lo, mid.clone(), depth + 1) + at_mid + count_in(c, mid, hi, depth + 1)
        }
    }
}

/// Distinct real roots of a squarefree polynomial by Descartes-rule
/// bisection on `(-B, B)` with the Cauchy bound `B`.
pub fn bisection_real_roots(q: &Poly) -> usize {
    let c = q.coeffs();
    assert!(!c.is_empty(), "zero polynomial");
    if c.len() == 1 {
        return 0;
    }
    let lc = c.last().unwrap().abs();
    let b = c[..c.len() - 1]
        .iter()
        .map(|x| x.abs() / &lc)
        .fold(Rational::zero(), |m, v| if v > m { v } else { m })
        + int(1);
    count_in(c, -b.clone(), b, 0)
}
