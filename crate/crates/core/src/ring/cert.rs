//! Sums of squares, `Σ_f` denominators and real-radical certificates.
//!
//! Membership `a ∈ √R(I)` is always decided exactly from the real part of
//! the generator. The explicit identity `a^{2m} + Σ b² = c·g` is then
//! constructed: directly when every prime factor of `g` divides `a`, and
//! otherwise by an exact linear-programming search over nonnegative
//! combinations of squares from a bounded dictionary.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::lp::nonneg_solution;
use super::{real_radical_member, Ideal, Ring, RingElem};
use crate::error::{Error, Result};
use crate::poly::{Poly, Rational};

/// `Σ terms[i]²`; the empty sum is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct SumOfSquares {
    ring: Ring,
    terms: Vec<RingElem>,
}

impl SumOfSquares {
    pub fn new(ring: &Ring, terms: Vec<RingElem>) -> Result<Self> {
        for t in &terms {
            ring.ensure_same(t.ring())?;
        }
        Ok(SumOfSquares {
            ring: ring.clone(),
            terms,
        })
    }

    pub fn empty(ring: &Ring) -> Self {
        SumOfSquares {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[RingElem] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn value(&self) -> RingElem {
        self.terms
            .iter()
            .fold(self.ring.zero(), |acc, t| &acc + &t.square())
    }

    /// Multiplies every term by `c`, scaling the value by `c²`.
    pub fn scaled(&self, c: &RingElem) -> SumOfSquares {
        SumOfSquares {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|t| t * c).collect(),
        }
    }

    pub fn concat(&self, other: &SumOfSquares) -> SumOfSquares {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        SumOfSquares {
            ring: self.ring.clone(),
            terms,
        }
    }
}

impl fmt::Debug for SumOfSquares {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.terms.iter().map(|t| t.rep())).finish()
    }
}

/// A witnessed element `f^{2m} + Σ b²` of the multiplicative set `Σ_f`.
#[derive(Clone, PartialEq, Eq)]
pub struct SigmaDenominator {
    f: RingElem,
    m: u32,
    tail: SumOfSquares,
}

impl SigmaDenominator {
    pub fn new(f: RingElem, m: u32, tail: SumOfSquares) -> Result<Self> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial("SigmaDenominator::f"));
        }
        f.ring().ensure_same(tail.ring())?;
        Ok(SigmaDenominator { f, m, tail })
    }

    /// `f^{2m}` with an empty tail.
    pub fn power(f: RingElem, m: u32) -> Result<Self> {
        let tail = SumOfSquares::empty(f.ring());
        SigmaDenominator::new(f, m, tail)
    }

    pub fn f(&self) -> &RingElem {
        &self.f
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn tail(&self) -> &SumOfSquares {
        &self.tail
    }

    pub fn ring(&self) -> &Ring {
        self.f.ring()
    }

    pub fn value(&self) -> RingElem {
        &self.f.pow(2 * self.m) + &self.tail.value()
    }

    /// Product in `Σ_f`: `(f^{2m} + Σx²)(f^{2n} + Σy²)` is again of the
    /// form `f^{2(m+n)} + Σz²`, with the tail built from cross terms.
    pub fn mul(&self, other: &SigmaDenominator) -> Result<SigmaDenominator> {
        self.f.same_ring(&other.f)?;
        if self.f != other.f {
            return Err(Error::DomainMismatch);
        }
        let fm = self.f.pow(self.m);
        let fn_ = other.f.pow(other.m);
        let tail = other
            .tail
            .scaled(&fm)
            .concat(&self.tail.scaled(&fn_));
        let mut terms = tail.terms;
        for x in &self.tail.terms {
            for y in &other.tail.terms {
                terms.push(x * y);
            }
        }
        SigmaDenominator::new(
            self.f.clone(),
            self.m + other.m,
            SumOfSquares::new(self.ring(), terms)?,
        )
    }
}

impl fmt::Debug for SigmaDenominator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})^{} + {:?}", self.f, 2 * self.m, self.tail)
    }
}

/// Limits of the certificate search. Membership decisions never depend on
/// these; only whether an explicit identity is produced does.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBounds {
    /// Largest exponent `m` tried outside the direct construction.
    pub m_max: u32,
    /// Largest degree of a square root in the dictionary; `None` means the
    /// degree of the generator.
    pub sos_degree: Option<usize>,
    /// Numerators and denominators of grid coefficients are at most this.
    pub coeff_bound: u32,
    /// Extra seeded random dictionary elements.
    pub random_roots: usize,
    pub seed: u64,
}

impl Default for SearchBounds {
    fn default() -> Self {
        SearchBounds {
            m_max: 6,
            sos_degree: None,
            coeff_bound: 8,
            random_roots: 16,
            seed: 0,
        }
    }
}

impl SearchBounds {
    pub fn validate(&self) -> Result<()> {
        if self.m_max == 0 {
            return Err(Error::InvalidBounds("m_max must be positive".into()));
        }
        if self.coeff_bound == 0 {
            return Err(Error::InvalidBounds("coeff_bound must be positive".into()));
        }
        if self.sos_degree == Some(0) {
            return Err(Error::InvalidBounds("sos_degree must be positive".into()));
        }
        Ok(())
    }
}

/// Witness of `a ∈ √R(I)`: `a^{2m} + Σ sos² = cofactor · gen(I)` in the ring.
#[derive(Clone, PartialEq, Eq)]
pub struct RealRadicalCertificate {
    pub a: RingElem,
    pub m: u32,
    pub sos: SumOfSquares,
    pub cofactor: RingElem,
    pub ideal: Ideal,
}

impl fmt::Debug for RealRadicalCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({})^{} + {:?} = ({}) * ({})",
            self.a,
            2 * self.m,
            self.sos,
            self.cofactor,
            self.ideal.gen()
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateOutcome {
    Found(RealRadicalCertificate),
    /// `a` is in the real radical, but no identity was found within bounds.
    MemberNoCertificate,
    NotMember,
}

impl CertificateOutcome {
    pub fn certificate(&self) -> Option<&RealRadicalCertificate> {
        match self {
            CertificateOutcome::Found(c) => Some(c),
            _ => None,
        }
    }
}

/// Re-expands the certificate identity in its ring.
pub fn verify_certificate(c: &RealRadicalCertificate) -> Result<bool> {
    let ring = c.ideal.ring();
    ring.ensure_same(c.a.ring())?;
    ring.ensure_same(c.cofactor.ring())?;
    ring.ensure_same(c.sos.ring())?;
    for t in c.sos.terms() {
        ring.ensure_same(t.ring())?;
    }
    if c.m == 0 {
        return Ok(false);
    }
    let lhs = &c.a.pow(2 * c.m) + &c.sos.value();
    let rhs = &c.cofactor * &c.ideal.gen_elem();
    Ok((&lhs - &rhs).is_zero())
}

/// Searches for an explicit real-radical certificate of `a ∈ √R(ideal)`.
pub fn find_certificate(
    ideal: &Ideal,
    a: &RingElem,
    bounds: &SearchBounds,
) -> Result<CertificateOutcome> {
    bounds.validate()?;
    if !real_radical_member(ideal, a)? {
        return Ok(CertificateOutcome::NotMember);
    }
    let ring = ideal.ring().clone();
    let gen = ideal.gen().clone();
    let la = a.rep().clone();

    if gen.is_zero() {
        // Zero ideal of Q[x]: membership forced a = 0.
        let cert = RealRadicalCertificate {
            a: a.clone(),
            m: 1,
            sos: SumOfSquares::empty(&ring),
            cofactor: ring.zero(),
            ideal: ideal.clone(),
        };
        return Ok(checked(cert));
    }

    // gen = g_r * g_n with every prime of g_r dividing a and g_n coprime to a.
    let d = gen.degree().finite().unwrap_or(0) as u32;
    let g_r = gen.gcd0(&la.pow(d.max(1)));
    let g_n = gen.divrem(&g_r)?.0;
    let m0 = (1..=d + 1)
        .find(|&m| g_r.divides(&la.pow(2 * m)))
        .expect("multiplicities are bounded by the degree");

    if g_n.is_unit() {
        return Ok(checked(assemble(ideal, a, m0, Vec::new())?));
    }
    if m0 > bounds.m_max {
        return Ok(CertificateOutcome::MemberNoCertificate);
    }

    let columns = Dictionary::new(&g_n, bounds);
    let inv_r2 = (&g_r * &g_r)
        .inverse_mod(&g_n)
        .expect("g_r is coprime to g_n");
    for m in m0..=bounds.m_max {
        let target = (-&(&la.pow(2 * m) * &inv_r2)).rem(&g_n)?;
        if let Some(ws) = columns.solve(&target) {
            let terms = weighted_squares_to_terms(&ring, &ws, &g_r);
            if let Ok(cert) = assemble(ideal, a, m, terms) {
                if verify_certificate(&cert)? {
                    return Ok(CertificateOutcome::Found(cert));
                }
            }
        }
    }

    if let Some(ws) = neg_one_sos(&g_n, bounds) {
        let terms = weighted_squares_to_terms(&ring, &ws, &la.pow(m0));
        if let Ok(cert) = assemble(ideal, a, m0, terms) {
            if verify_certificate(&cert)? {
                return Ok(CertificateOutcome::Found(cert));
            }
        }
    }
    Ok(CertificateOutcome::MemberNoCertificate)
}

fn checked(cert: RealRadicalCertificate) -> CertificateOutcome {
    match verify_certificate(&cert) {
        Ok(true) => CertificateOutcome::Found(cert),
        _ => CertificateOutcome::MemberNoCertificate,
    }
}

/// Builds the certificate for a chosen tail, computing the cofactor by
/// exact division.
fn assemble(
    ideal: &Ideal,
    a: &RingElem,
    m: u32,
    terms: Vec<RingElem>,
) -> Result<RealRadicalCertificate> {
    let ring = ideal.ring();
    let sos = SumOfSquares::new(ring, terms)?;
    let lhs = &a.pow(2 * m) + &sos.value();
    let cofactor = lhs
        .rep()
        .div_exact(ideal.gen())?
        .ok_or_else(|| Error::Unsupported("cofactor division is not exact".into()))?;
    Ok(RealRadicalCertificate {
        a: a.clone(),
        m,
        sos,
        cofactor: ring.elem(cofactor),
        ideal: ideal.clone(),
    })
}

/// Turns `Σ w_i t_i²` (rational `w_i ≥ 0`) into plain squares of
/// `multiplier · r · t_i`, writing each weight as a sum of rational squares.
pub(crate) fn weighted_squares_to_terms(
    ring: &Ring,
    ws: &[(Rational, Poly)],
    multiplier: &Poly,
) -> Vec<RingElem> {
    let mut out = Vec::new();
    for (w, t) in ws {
        if w.is_zero() {
            continue;
        }
        let base = multiplier * t;
        for r in rational_as_squares(w) {
            out.push(ring.elem(base.scale(&r)));
        }
    }
    out
}

/// Writes a positive rational `n/d` as `Σ (r_i/d)²` by greedily peeling
/// integer squares off `n·d`.
fn rational_as_squares(w: &Rational) -> Vec<Rational> {
    debug_assert!(w.is_positive());
    let den = w.denom().clone();
    let mut rest: BigInt = w.numer() * &den;
    let mut out = Vec::new();
    while rest.is_positive() {
        let r = rest.sqrt();
        rest -= &r * &r;
        out.push(Rational::new(r, den.clone()));
    }
    out
}

/// The bounded set of candidate square roots, with their squares reduced
/// modulo `modulus` and stored as coefficient columns.
struct Dictionary {
    modulus: Poly,
    roots: Vec<Poly>,
    columns: Vec<Vec<Rational>>,
}

impl Dictionary {
    fn new(modulus: &Poly, bounds: &SearchBounds) -> Dictionary {
        let dn = modulus.degree().finite().unwrap_or(0);
        let top = match bounds.sos_degree {
            Some(d) => d.min(dn.saturating_sub(1)),
            None => dn.saturating_sub(1),
        };
        let grid = coefficient_grid(bounds.coeff_bound);
        let mut roots: Vec<Poly> = (0..=top)
            .map(|i| Poly::monomial(Rational::one(), i))
            .collect();
        for i in 1..=top {
            for j in 0..i {
                for c in &grid {
                    roots.push(&Poly::monomial(Rational::one(), i) + &Poly::monomial(c.clone(), j));
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
        for _ in 0..bounds.random_roots {
            let coeffs = (0..=top)
                .map(|_| {
                    if rng.gen_bool(0.3) {
                        Rational::zero()
                    } else {
                        grid[rng.gen_range(0..grid.len())].clone()
                    }
                })
                .collect();
            let r = Poly::new(coeffs);
            if !r.is_zero() {
                roots.push(r);
            }
        }
        let columns = roots
            .iter()
            .map(|r| {
                let sq = (r * r).rem(modulus).expect("nonzero modulus");
                (0..dn).map(|i| sq.coeff(i)).collect()
            })
            .collect();
        Dictionary {
            modulus: modulus.clone(),
            roots,
            columns,
        }
    }

    /// Nonnegative weights with `Σ w_i roots_i² ≡ target (mod modulus)`.
    fn solve(&self, target: &Poly) -> Option<Vec<(Rational, Poly)>> {
        let dn = self.modulus.degree().finite().unwrap_or(0);
        let rhs: Vec<Rational> = (0..dn).map(|i| target.coeff(i)).collect();
        let w = nonneg_solution(&self.columns, &rhs)?;
        Some(
            w.into_iter()
                .zip(&self.roots)
                .filter(|(wi, _)| !wi.is_zero())
                .map(|(wi, r)| (wi, r.clone()))
                .collect(),
        )
    }
}

fn coefficient_grid(bound: u32) -> Vec<Rational> {
    let mut vals: Vec<Rational> = Vec::new();
    for n in 1..=bound as i64 {
        for d in 1..=bound as i64 {
            let v = Rational::new(n.into(), d.into());
            if !vals.contains(&v) {
                vals.push(v);
            }
        }
    }
    vals.sort();
    let mut grid: Vec<Rational> = Vec::with_capacity(2 * vals.len());
    for v in vals {
        grid.push(v.clone());
        grid.push(-v);
    }
    grid
}

/// Weighted squares `S` with `1 + S ≡ 0 (mod n)`, for `n` without real
/// roots. Solves `-1 ≡ s` modulo each irreducible factor, glues the
/// solutions with CRT idempotents, and lifts through multiplicity `E` via
/// `(1 + s)^E = 1 + Σ_k C(E,k) s^k`.
fn neg_one_sos(n: &Poly, bounds: &SearchBounds) -> Option<Vec<(Rational, Poly)>> {
    let rad = n.squarefree_part().ok()?;
    let primes: Vec<Poly> = rad.factor().ok()?.factors.into_iter().map(|(q, _)| q).collect();
    let minus_one = Poly::constant(-Rational::one());
    let mut s: Vec<(Rational, Poly)> = Vec::new();
    for q in &primes {
        if q.count_real_roots().ok()? > 0 {
            return None;
        }
        let local = Dictionary::new(q, bounds).solve(&minus_one)?;
        let cofactor = rad.divrem(q).ok()?.0;
        let idem = if primes.len() == 1 {
            Poly::one()
        } else {
            &cofactor * &cofactor.rem(q).ok()?.inverse_mod(q)?
        };
        for (w, t) in local {
            s.push((w, (&idem * &t).rem(&rad).ok()?));
        }
    }
    let e = n
        .squarefree_decomposition()
        .ok()?
        .iter()
        .map(|(_, i)| *i)
        .max()
        .unwrap_or(1);
    if e == 1 {
        return Some(s);
    }
    let s_val = s
        .iter()
        .fold(Poly::zero(), |acc, (w, t)| &acc + &(t * t).scale(w))
        .rem(n)
        .ok()?;
    let mut out = Vec::new();
    let mut binom = BigInt::one();
    for k in 1..=e {
        binom = binom * BigInt::from(e - k + 1) / BigInt::from(k);
        let c = Rational::from_integer(binom.clone());
        let half = s_val.pow(k / 2).rem(n).ok()?;
        if k % 2 == 0 {
            out.push((c, half));
        } else {
            for (w, t) in &s {
                out.push((&c * w, (t * &half).rem(n).ok()?));
            }
        }
    }
    Some(out)
}
