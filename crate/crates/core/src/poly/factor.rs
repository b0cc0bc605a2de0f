//! Factorization over the rationals (Zassenhaus): squarefree split, modular
//! factorization over a small prime, linear Hensel lifting and exhaustive
//! recombination of the lifted factors.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{self, Zp};
use super::{Poly, Rational};
use crate::error::{Error, Result};

/// `unit * prod factors[i].0 ^ factors[i].1`, factors monic irreducible,
/// pairwise distinct and sorted canonically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Rational,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> Poly {
        self.factors
            .iter()
            .fold(Poly::constant(self.unit.clone()), |acc, (p, e)| &acc * &p.pow(*e))
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.unit)?;
        for (p, e) in &self.factors {
            if *e == 1 {
                write!(f, " * ({p})")?;
            } else {
                write!(f, " * ({p})^{e}")?;
            }
        }
        Ok(())
    }
}

pub(super) fn factor(p: &Poly) -> Result<Factorization> {
    let unit = p
        .leading_coeff()
        .cloned()
        .ok_or(Error::ZeroPolynomial("factor"))?;
    let mut factors = Vec::new();
    for (s, e) in p.squarefree_decomposition()? {
        for q in factor_squarefree(&s) {
            factors.push((q, e));
        }
    }
    factors.sort_by(|a, b| a.0.cmp_canonical(&b.0));
    Ok(Factorization { unit, factors })
}

/// Monic irreducible factors of a squarefree nonconstant polynomial.
pub(super) fn factor_squarefree(f: &Poly) -> Vec<Poly> {
    match f.degree().finite() {
        None | Some(0) => return Vec::new(),
        Some(1) => return vec![f.monic()],
        _ => {}
    }
    let ints = f.primitive_integer();
    zassenhaus(&ints)
        .into_iter()
        .map(|g| Poly::from_bigints(&g).monic())
        .collect()
}

type ZPoly = Vec<BigInt>;

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).step_by(2).filter(|n| (3..).step_by(2).take_while(|d| d * d <= *n).all(|d| n % d != 0))
}

fn reduce_mod_p(f: &[BigInt], p: u64) -> Zp {
    let pb = BigInt::from(p);
    modp::trim(
        f.iter()
            .map(|c| c.mod_floor(&pb).to_u64().expect("residue fits"))
            .collect(),
    )
}

fn zassenhaus(f: &ZPoly) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n <= 1 {
        return vec![f.clone()];
    }
    let lc = f[n].clone();

    // Pick the prime (among a few good ones) giving the fewest modular factors.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ n as u64);
    let mut best: Option<(u64, Vec<Zp>)> = None;
    let mut tried = 0;
    for p in small_primes().take(400) {
        if (&lc % p).is_zero() {
            continue;
        }
        let fp = reduce_mod_p(f, p);
        if fp.len() != n + 1 {
            continue;
        }
        if modp::gcd(&fp, &modp::derivative(&fp, p), p).len() != 1 {
            continue;
        }
        let facs = modp::factor_squarefree(&modp::monic(&fp, p), p, &mut rng);
        if facs.len() == 1 {
            return vec![f.clone()];
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried >= 4 {
            break;
        }
    }
    let (p, facs) = best.expect("a squarefree integer polynomial has a good prime");

    // Coefficient bound for lc * (any factor), doubled for the symmetric range.
    let maxabs = f.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero);
    let bound = (BigInt::from(n + 1).sqrt() + 1) * (BigInt::one() << n) * maxabs * lc.abs();
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut modulus = pb.clone();
    while modulus <= &bound * 2 {
        modulus *= &pb;
        k += 1;
    }

    let lifted = hensel_lift_all(f, &facs, p, k, &modulus);
    recombine(f, lifted, &modulus)
}

fn to_zpoly(a: &[u64]) -> ZPoly {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn zmod(a: &[BigInt], m: &BigInt) -> ZPoly {
    a.iter().map(|c| c.mod_floor(m)).collect()
}

fn ztrim(mut a: ZPoly) -> ZPoly {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

/// Lifts `f = lc * prod facs (mod p)` to a factorization modulo `p^k` with
/// monic factors.
fn hensel_lift_all(f: &[BigInt], facs: &[Zp], p: u64, k: u32, modulus: &BigInt) -> Vec<ZPoly> {
    let mut out = Vec::with_capacity(facs.len());
    let mut cur = zmod(f, modulus);
    let mut lead = f.last().expect("nonzero").mod_floor(modulus);
    for i in 0..facs.len() - 1 {
        let g = &facs[i];
        let h = facs[i + 1..]
            .iter()
            .fold(vec![1u64], |acc, u| modp::mul(&acc, u, p));
        let (big_g, big_h) = hensel_lift_pair(&cur, &lead, g, &h, p, k, modulus);
        out.push(big_g);
        cur = big_h;
        lead = BigInt::one();
    }
    out.push(cur);
    out
}

/// Linear Hensel lifting of `f = lead * g * h (mod p)` to `mod p^k`.
fn hensel_lift_pair(
    f: &[BigInt],
    lead: &BigInt,
    g: &[u64],
    h: &[u64],
    p: u64,
    k: u32,
    modulus: &BigInt,
) -> (ZPoly, ZPoly) {
    let (_, _, t) = modp::ext_gcd(g, h, p);
    let pb = BigInt::from(p);
    let lead_inv = modp::inv(lead.mod_floor(&pb).to_u64().expect("residue"), p);
    let mut big_g = to_zpoly(g);
    let mut big_h = to_zpoly(h);
    let mut q = pb.clone();
    for _ in 1..k {
        let prod = zmul(&zmul(&[lead.clone()], &big_g), &big_h);
        let n = f.len().max(prod.len());
        let err: ZPoly = (0..n)
            .map(|i| {
                let a = f.get(i).cloned().unwrap_or_else(BigInt::zero);
                let b = prod.get(i).cloned().unwrap_or_else(BigInt::zero);
                (a - b).mod_floor(modulus) / &q
            })
            .collect();
        let e = modp::scale(&reduce_mod_p(&err, p), lead_inv, p);
        let dg = modp::rem(&modp::mul(&e, &t, p), g, p);
        let dh = modp::divrem(&modp::sub(&e, &modp::mul(&dg, h, p), p), g, p).0;
        for (i, c) in dg.iter().enumerate() {
            big_g[i] += &q * c;
        }
        if big_h.len() < dh.len() {
            big_h.resize(dh.len(), BigInt::zero());
        }
        for (i, c) in dh.iter().enumerate() {
            big_h[i] += &q * c;
        }
        q *= &pb;
    }
    (zmod(&big_g, modulus), zmod(&big_h, modulus))
}

fn symmetric(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m / 2;
    ztrim(
        a.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn primitive(mut a: ZPoly) -> ZPoly {
    let content = a.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if content.is_zero() {
        return a;
    }
    let div = if a.last().is_some_and(Signed::is_negative) {
        -content
    } else {
        content
    };
    for c in &mut a {
        *c /= &div;
    }
    a
}

/// Exact division over the integers; `None` if `b` does not divide `a`.
fn zdiv_exact(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    if a.len() < b.len() {
        return None;
    }
    let lb = b.last()?;
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - b.len() + 1];
    for k in (0..quot.len()).rev() {
        let top = &rem[k + b.len() - 1];
        if top.is_zero() {
            continue;
        }
        let (c, r) = top.div_rem(lb);
        if !r.is_zero() {
            return None;
        }
        for (j, d) in b.iter().enumerate() {
            rem[k + j] -= &c * d;
        }
        quot[k] = c;
    }
    rem.iter().all(Zero::is_zero).then_some(quot)
}

fn recombine(f: &[BigInt], lifted: Vec<ZPoly>, modulus: &BigInt) -> Vec<ZPoly> {
    let mut remaining: Vec<ZPoly> = lifted;
    let mut cur = f.to_vec();
    let mut out = Vec::new();
    let mut size = 1;
    'outer: while 2 * size <= remaining.len() {
        let lc = cur.last().expect("nonzero").clone();
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let prod = combo
                .iter()
                .fold(vec![lc.clone()], |acc, &i| zmod(&zmul(&acc, &remaining[i]), modulus));
            let candidate = primitive(symmetric(&prod, modulus));
            let plausible = cur[0].is_zero()
                || candidate[0].is_zero() == cur[0].is_zero() && (&cur[0] % &candidate[0]).is_zero();
            if plausible {
                if let Some(q) = zdiv_exact(&cur, &candidate) {
                    out.push(candidate);
                    cur = q;
                    for &i in combo.iter().rev() {
                        remaining.remove(i);
                    }
                    continue 'outer;
                }
            }
            if !next_combination(&mut combo, remaining.len()) {
                break;
            }
        }
        size += 1;
    }
    if cur.len() > 1 {
        out.push(cur);
    }
    out
}

fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn x4_minus_1() {
        let fz = p(&[-1, 0, 0, 0, 1]).factor().unwrap();
        assert_eq!(fz.unit, Rational::one());
        let fs: Vec<Poly> = fz.factors.iter().map(|(q, _)| q.clone()).collect();
        assert_eq!(fs, vec![p(&[-1, 1]), p(&[1, 1]), p(&[1, 0, 1])]);
        assert_eq!(fz.expand(), p(&[-1, 0, 0, 0, 1]));
    }

    #[test]
    fn constant_has_no_factors() {
        let fz = p(&[6]).factor().unwrap();
        assert_eq!(fz.unit, Rational::from_integer(6.into()));
        assert!(fz.factors.is_empty());
    }

    #[test]
    fn x2_minus_2_irreducible() {
        let fz = p(&[-2, 0, 1]).factor().unwrap();
        assert_eq!(fz.factors, vec![(p(&[-2, 0, 1]), 1)]);
    }

    #[test]
    fn zero_is_rejected() {
        assert!(Poly::zero().factor().is_err());
    }

    #[test]
    fn swinnerton_dyer_like_quartic_is_irreducible() {
        // x^4 - 10x^2 + 1 splits modulo every prime but is irreducible over Q.
        let fz = p(&[1, 0, -10, 0, 1]).factor().unwrap();
        assert_eq!(fz.factors.len(), 1);
    }

    #[test]
    fn products_of_quadratics_with_multiplicity() {
        let a = p(&[2, 0, 1]);
        let b = p(&[-3, 1, 1]);
        let c = p(&[1, 1, 0, 1]);
        let f = &(&a.pow(2) * &b) * &c.pow(3);
        let f = f.scale(&Rational::new(BigInt::from(-5), BigInt::from(7)));
        let fz = f.factor().unwrap();
        assert_eq!(fz.expand(), f);
        assert_eq!(fz.factors.len(), 3);
        assert!(fz.factors.iter().any(|(q, e)| *q == a && *e == 2));
        assert!(fz.factors.iter().any(|(q, e)| *q == c && *e == 3));
    }

    #[test]
    fn rational_coefficients() {
        // (x - 1/2)(x + 2/3)
        let f = &Poly::new(vec![super::super::rat(-1, 2), Rational::one()])
            * &Poly::new(vec![super::super::rat(2, 3), Rational::one()]);
        let fz = f.factor().unwrap();
        assert_eq!(fz.factors.len(), 2);
        assert_eq!(fz.expand(), f);
    }

    #[test]
    fn cyclotomic_x12_minus_1() {
        let f = p(&[-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]);
        let fz = f.factor().unwrap();
        // Phi_1, Phi_2, Phi_3, Phi_4, Phi_6, Phi_12
        assert_eq!(fz.factors.len(), 6);
        assert_eq!(fz.expand(), f);
    }
}
