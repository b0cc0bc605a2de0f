//! Polynomials over a small prime field, used only by the factorizer.
//! Coefficients are `u64` residues in ascending degree order; `p < 2^31`.

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;

pub(crate) type Zp = Vec<u64>;

pub(crate) fn trim(mut a: Zp) -> Zp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    (a * b) % p
}

pub(crate) fn inv(a: u64, p: u64) -> u64 {
    powm(a, p - 2, p)
}

fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm(acc, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    acc
}

#[cfg(test)]
pub(crate) fn add(a: &[u64], b: &[u64], p: u64) -> Zp {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(out)
}

pub(crate) fn sub(a: &[u64], b: &[u64], p: u64) -> Zp {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p)
        .collect();
    trim(out)
}

pub(crate) fn mul(a: &[u64], b: &[u64], p: u64) -> Zp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulm(x, y, p)) % p;
        }
    }
    trim(out)
}

pub(crate) fn scale(a: &[u64], c: u64, p: u64) -> Zp {
    trim(a.iter().map(|&x| mulm(x, c, p)).collect())
}

pub(crate) fn monic(a: &[u64], p: u64) -> Zp {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => scale(a, inv(lc, p), p),
    }
}

pub(crate) fn divrem(a: &[u64], b: &[u64], p: u64) -> (Zp, Zp) {
    assert!(!b.is_empty(), "division by zero polynomial mod p");
    if a.len() < b.len() {
        return (Vec::new(), trim(a.to_vec()));
    }
    let inv_lc = inv(*b.last().unwrap(), p);
    let mut rem = a.to_vec();
    let mut quot = vec![0u64; a.len() - b.len() + 1];
    for k in (0..quot.len()).rev() {
        let c = mulm(rem[k + b.len() - 1], inv_lc, p);
        if c != 0 {
            for (j, &d) in b.iter().enumerate() {
                rem[k + j] = (rem[k + j] + p - mulm(c, d, p)) % p;
            }
        }
        quot[k] = c;
    }
    rem.truncate(b.len() - 1);
    (trim(quot), trim(rem))
}

pub(crate) fn rem(a: &[u64], b: &[u64], p: u64) -> Zp {
    divrem(a, b, p).1
}

pub(crate) fn gcd(a: &[u64], b: &[u64], p: u64) -> Zp {
    let mut a = monic(a, p);
    let mut b = monic(b, p);
    while !b.is_empty() {
        let r = monic(&rem(&a, &b, p), p);
        a = b;
        b = r;
    }
    a
}

/// `(g, s, t)` with `s*a + t*b = g`, `g` monic.
pub(crate) fn ext_gcd(a: &[u64], b: &[u64], p: u64) -> (Zp, Zp, Zp) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        let t = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    let c = inv(*r0.last().expect("nonzero gcd"), p);
    (scale(&r0, c, p), scale(&s0, c, p), scale(&t0, c, p))
}

pub(crate) fn derivative(a: &[u64], p: u64) -> Zp {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulm(c, i as u64 % p, p))
            .collect(),
    )
}

fn powmod(base: &[u64], e: &BigUint, m: &[u64], p: u64) -> Zp {
    let mut acc = vec![1u64];
    let base = rem(base, m, p);
    for i in (0..e.bits()).rev() {
        acc = rem(&mul(&acc, &acc, p), m, p);
        if e.bit(i) {
            acc = rem(&mul(&acc, &base, p), m, p);
        }
    }
    acc
}

fn deg(a: &[u64]) -> usize {
    a.len().saturating_sub(1)
}

/// Factors a monic squarefree polynomial over `F_p` (`p` odd) into monic
/// irreducibles: distinct-degree splitting followed by Cantor–Zassenhaus.
pub(crate) fn factor_squarefree<R: Rng>(f: &[u64], p: u64, rng: &mut R) -> Vec<Zp> {
    let mut out = Vec::new();
    let x = vec![0u64, 1];
    let mut rest = f.to_vec();
    let mut h = x.clone();
    let mut d = 1usize;
    while deg(&rest) >= 2 * d {
        h = powmod(&h, &BigUint::from(p), &rest, p);
        let g = gcd(&sub(&h, &x, p), &rest, p);
        if g.len() > 1 {
            equal_degree(&g, d, p, rng, &mut out);
            rest = divrem(&rest, &g, p).0;
            h = rem(&h, &rest, p);
        }
        d += 1;
    }
    if rest.len() > 1 {
        out.push(monic(&rest, p));
    }
    out
}

fn equal_degree<R: Rng>(g: &[u64], d: usize, p: u64, rng: &mut R, out: &mut Vec<Zp>) {
    if deg(g) == d {
        out.push(monic(g, p));
        return;
    }
    let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) >> 1usize;
    loop {
        let a = trim((0..deg(g)).map(|_| rng.gen_range(0..p)).collect());
        if a.len() < 2 {
            continue;
        }
        let b = sub(&powmod(&a, &e, g, p), &[1], p);
        let u = gcd(&b, g, p);
        if u.len() > 1 && u.len() < g.len() {
            let v = divrem(g, &u, p).0;
            equal_degree(&u, d, p, rng, out);
            equal_degree(&v, d, p, rng, out);
            return;
        }
    }
}
