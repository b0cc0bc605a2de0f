//! The real Zariski spectrum: real primes, closed sets `V(I)`, basic opens
//! `D(f)`, cover decisions and finite subcovers with certificates.
//!
//! A closed set is stored by the generator of the real radical of any ideal
//! cutting it out, so set equality is generator equality. In `Q[x]` the
//! whole space is `0` (only it contains the zero prime); in `Q[x]/(m)` it is
//! the real part of `m`. The empty set is `1` in both.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{bezout_many, Poly};
use crate::ring::{
    find_certificate, real_radical, CertificateOutcome, Ideal, Ring, RingElem, RingKind,
    SearchBounds, SumOfSquares,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimeKind {
    /// The zero ideal of `Q[x]`.
    Zero,
    /// `(q)` with `q` monic irreducible and real-rooted.
    Principal(Poly),
}

#[derive(Clone, PartialEq, Eq)]
pub struct RealPrime {
    ring: Ring,
    kind: PrimeKind,
}

impl RealPrime {
    pub fn zero(ring: &Ring) -> Result<RealPrime> {
        if ring.kind() != RingKind::Base {
            return Err(Error::Unsupported(
                "(0) is not prime in a quotient ring".into(),
            ));
        }
        Ok(RealPrime {
            ring: ring.clone(),
            kind: PrimeKind::Zero,
        })
    }

    /// `(q)` for `q` irreducible with a real root (dividing the modulus in a
    /// quotient ring). `q` is normalized to be monic.
    pub fn principal(ring: &Ring, q: &Poly) -> Result<RealPrime> {
        let q = q.monic();
        let fz = q.factor()?;
        if fz.factors.len() != 1 || fz.factors[0].1 != 1 {
            return Err(Error::Unsupported(format!("{q} is not irreducible")));
        }
        if q.count_real_roots()? == 0 {
            return Err(Error::Unsupported(format!("{q} has no real root")));
        }
        if let Some(m) = ring.modulus() {
            if !q.divides(m) {
                return Err(Error::Unsupported(format!("{q} does not divide {m}")));
            }
        }
        Ok(RealPrime {
            ring: ring.clone(),
            kind: PrimeKind::Principal(q),
        })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn kind(&self) -> &PrimeKind {
        &self.kind
    }

    /// Generator of a principal prime, `None` for the zero prime.
    pub fn gen(&self) -> Option<&Poly> {
        match &self.kind {
            PrimeKind::Zero => None,
            PrimeKind::Principal(q) => Some(q),
        }
    }

    pub fn contains(&self, a: &RingElem) -> Result<bool> {
        self.ring.ensure_same(a.ring())?;
        Ok(match &self.kind {
            PrimeKind::Zero => a.is_zero(),
            PrimeKind::Principal(q) => q.divides(a.rep()),
        })
    }

    pub fn contains_ideal(&self, i: &Ideal) -> Result<bool> {
        self.contains(&i.gen_elem())
    }
}

impl fmt::Display for RealPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            PrimeKind::Zero => write!(f, "(0)"),
            PrimeKind::Principal(q) => write!(f, "({q})"),
        }
    }
}

impl fmt::Debug for RealPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.ring)
    }
}

/// A closed subset `V(I)` of the real spectrum.
#[derive(Clone, PartialEq, Eq)]
pub struct ClosedSet {
    ring: Ring,
    gen: Poly,
}

impl ClosedSet {
    pub fn whole(ring: &Ring) -> ClosedSet {
        v_of(&Ideal::zero(ring))
    }

    pub fn empty(ring: &Ring) -> ClosedSet {
        ClosedSet {
            ring: ring.clone(),
            gen: Poly::one(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gen(&self) -> &Poly {
        &self.gen
    }

    pub fn is_empty(&self) -> bool {
        self.gen.is_one()
    }

    pub fn is_whole(&self) -> bool {
        *self == ClosedSet::whole(&self.ring)
    }

    /// The ideal of functions vanishing on this set (a real ideal).
    pub fn ideal(&self) -> Ideal {
        Ideal::from_poly(&self.ring, &self.gen)
    }

    /// The open complement, which is the basic open of the generator.
    pub fn complement(&self) -> BasicOpen {
        BasicOpen {
            f: self.ring.elem(self.gen.clone()),
        }
    }
}

impl fmt::Display for ClosedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "empty")
        } else if self.gen.is_zero() {
            write!(f, "whole")
        } else {
            write!(f, "V({})", self.gen)
        }
    }
}

impl fmt::Debug for ClosedSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.ring)
    }
}

/// `D(f)`, the complement of `V((f))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasicOpen {
    f: RingElem,
}

impl BasicOpen {
    pub fn new(f: RingElem) -> BasicOpen {
        BasicOpen { f }
    }

    pub fn f(&self) -> &RingElem {
        &self.f
    }

    pub fn closed_complement(&self) -> ClosedSet {
        v_of(&Ideal::principal(&self.f))
    }

    pub fn contains(&self, p: &RealPrime) -> Result<bool> {
        Ok(!prime_in(p, &self.closed_complement())?)
    }

    pub fn is_empty(&self) -> bool {
        self.closed_complement().is_whole()
    }
}

/// `V(I)`, canonically the generator of `√R(I)`.
pub fn v_of(i: &Ideal) -> ClosedSet {
    ClosedSet {
        ring: i.ring().clone(),
        gen: real_radical(i).gen().clone(),
    }
}

/// `V(I) ∪ V(J) = V(IJ)`.
pub fn closed_union(a: &ClosedSet, b: &ClosedSet) -> Result<ClosedSet> {
    a.ring.ensure_same(&b.ring)?;
    Ok(ClosedSet {
        ring: a.ring.clone(),
        gen: a.gen.lcm(&b.gen),
    })
}

/// `⋂ V(I_i) = V(Σ I_i)`.
pub fn closed_intersect(vs: &[ClosedSet]) -> Result<ClosedSet> {
    let first = vs
        .first()
        .ok_or_else(|| Error::Unsupported("intersection of an empty family".into()))?;
    let mut gen = first.gen.clone();
    for v in &vs[1..] {
        first.ring.ensure_same(&v.ring)?;
        gen = gen.gcd0(&v.gen);
    }
    Ok(ClosedSet {
        ring: first.ring.clone(),
        gen,
    })
}

/// `V(I) ⊆ V(J)`, i.e. `√R(I) ⊇ √R(J)`: the generator of the smaller set
/// divides the generator of the larger one.
pub fn closed_subset(a: &ClosedSet, b: &ClosedSet) -> Result<bool> {
    a.ring.ensure_same(&b.ring)?;
    Ok(a.gen.divides(&b.gen))
}

pub fn prime_in(p: &RealPrime, v: &ClosedSet) -> Result<bool> {
    p.ring.ensure_same(&v.ring)?;
    Ok(match &p.kind {
        PrimeKind::Zero => v.gen.is_zero(),
        PrimeKind::Principal(q) => q.divides(&v.gen),
    })
}

/// All real primes of `Q[x]/(m)` in canonical order. The spectrum of `Q[x]`
/// is infinite and is rejected.
pub fn enumerate_primes(ring: &Ring) -> Result<Vec<RealPrime>> {
    let m = ring
        .modulus()
        .ok_or_else(|| Error::Unsupported("the real spectrum of Q[x] is infinite".into()))?;
    let mut out = Vec::new();
    for (q, _) in m.factor()?.factors {
        if q.count_real_roots()? > 0 {
            out.push(RealPrime {
                ring: ring.clone(),
                kind: PrimeKind::Principal(q),
            });
        }
    }
    Ok(out)
}

fn ideal_sum(ring: &Ring, fs: &[RingElem]) -> Result<Ideal> {
    let mut acc = Ideal::zero(ring);
    for g in fs {
        acc = acc.sum(&Ideal::principal(g))?;
    }
    Ok(acc)
}

/// Whether `D(f) ⊆ D(f_1) ∪ … ∪ D(f_n)`, i.e. `V(Σ(f_i)) ⊆ V((f))`.
pub fn cover_check(f: &RingElem, fs: &[RingElem]) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("cover_check"));
    }
    for g in fs {
        f.ring().ensure_same(g.ring())?;
    }
    let covered = v_of(&ideal_sum(f.ring(), fs)?);
    closed_subset(&covered, &v_of(&Ideal::principal(f)))
}

/// Witness `Σ coeffs[j]·generators[j] = f^{2m} + Σ sos²` that the chosen
/// basic opens cover `D(f)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubcoverCertificate {
    pub f: RingElem,
    pub indices: Vec<usize>,
    pub generators: Vec<RingElem>,
    pub coeffs: Vec<RingElem>,
    pub m: u32,
    pub sos: SumOfSquares,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubcoverOutcome {
    Found(SubcoverCertificate),
    /// The subcover is exact, but the radical identity was not found within
    /// the search bounds.
    NoCertificate,
}

pub fn verify_subcover_certificate(c: &SubcoverCertificate) -> Result<bool> {
    let ring = c.f.ring();
    ring.ensure_same(c.sos.ring())?;
    if c.coeffs.len() != c.generators.len() {
        return Ok(false);
    }
    let mut lhs = ring.zero();
    for (a, g) in c.coeffs.iter().zip(&c.generators) {
        ring.ensure_same(a.ring())?;
        ring.ensure_same(g.ring())?;
        lhs = &lhs + &(a * g);
    }
    for t in c.sos.terms() {
        ring.ensure_same(t.ring())?;
    }
    let rhs = &c.f.pow(2 * c.m) + &c.sos.value();
    Ok((&lhs - &rhs).is_zero())
}

/// Greedily shrinks a cover of `D(f)` (dropping indices from the right while
/// the closed set cut out by the remaining generators is unchanged) and
/// tries to certify it with `Σ a_j f_{i_j} = f^{2m} + Σx²`.
pub fn finite_subcover(
    f: &RingElem,
    fs: &[RingElem],
    bounds: &SearchBounds,
) -> Result<(Vec<usize>, SubcoverOutcome)> {
    bounds.validate()?;
    if !cover_check(f, fs)? {
        return Err(Error::NotACover);
    }
    let ring = f.ring();
    let full = v_of(&ideal_sum(ring, fs)?);
    let mut indices: Vec<usize> = (0..fs.len()).collect();
    for i in (0..fs.len()).rev() {
        let trial: Vec<RingElem> = indices
            .iter()
            .filter(|&&j| j != i)
            .map(|&j| fs[j].clone())
            .collect();
        if v_of(&ideal_sum(ring, &trial)?) == full {
            indices.retain(|&j| j != i);
        }
    }
    let generators: Vec<RingElem> = indices.iter().map(|&i| fs[i].clone()).collect();

    let mut lifts: Vec<Poly> = generators.iter().map(|g| g.rep().clone()).collect();
    if let Some(m) = ring.modulus() {
        lifts.push(m.clone());
    }
    let (g, mut cs) = bezout_many(&lifts)?;
    cs.truncate(generators.len());
    let target = Ideal::from_poly(ring, &g);
    let outcome = match find_certificate(&target, f, bounds)? {
        CertificateOutcome::Found(cert) => {
            let coeffs = cs
                .iter()
                .map(|c| &cert.cofactor * &ring.elem(c.clone()))
                .collect();
            let sc = SubcoverCertificate {
                f: f.clone(),
                indices: indices.clone(),
                generators,
                coeffs,
                m: cert.m,
                sos: cert.sos,
            };
            if verify_subcover_certificate(&sc)? {
                SubcoverOutcome::Found(sc)
            } else {
                SubcoverOutcome::NoCertificate
            }
        }
        _ => SubcoverOutcome::NoCertificate,
    };
    Ok((indices, outcome))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn v(ring: &Ring, c: &[i64]) -> ClosedSet {
        v_of(&Ideal::from_poly(ring, &p(c)))
    }

    #[test]
    fn v_of_examples() {
        let b = Ring::base();
        assert!(v(&b, &[1, 0, 1]).is_empty());
        assert_eq!(v(&b, &[-1, 0, 1]).gen(), &p(&[-1, 0, 1]));
        assert!(v(&b, &[0]).is_whole());
        assert_eq!(v(&b, &[0]).gen(), &Poly::zero());
        assert!(v(&b, &[5]).is_empty());
    }

    #[test]
    fn union_examples() {
        let b = Ring::base();
        let u = closed_union(&v(&b, &[-1, 1]), &v(&b, &[1, 1])).unwrap();
        assert_eq!(u, v(&b, &[-1, 0, 1]));
        let h = v(&b, &[-2, 0, 1]);
        assert_eq!(closed_union(&h, &ClosedSet::empty(&b)).unwrap(), h);
        let x = v(&b, &[0, 1]);
        assert_eq!(closed_union(&x, &x).unwrap(), x);
        assert!(closed_union(&x, &ClosedSet::whole(&b)).unwrap().is_whole());
    }

    #[test]
    fn intersect_examples() {
        let b = Ring::base();
        let i = closed_intersect(&[v(&b, &[-1, 0, 1]), v(&b, &[0, -1, 1])]).unwrap();
        assert_eq!(i, v(&b, &[-1, 1]));
        let h = v(&b, &[-2, 0, 1]);
        assert_eq!(closed_intersect(&[h.clone(), ClosedSet::whole(&b)]).unwrap(), h);
        assert!(closed_intersect(&[v(&b, &[-1, 1]), v(&b, &[1, 1])]).unwrap().is_empty());
        assert!(closed_intersect(&[]).is_err());
    }

    #[test]
    fn subset_examples() {
        let b = Ring::base();
        let big = v(&b, &[-1, 0, 1]);
        let small = v(&b, &[-1, 1]);
        assert!(!closed_subset(&big, &small).unwrap());
        assert!(closed_subset(&small, &big).unwrap());
        assert!(closed_subset(&ClosedSet::empty(&b), &small).unwrap());
        assert!(closed_subset(&small, &ClosedSet::whole(&b)).unwrap());
        assert!(!closed_subset(&ClosedSet::whole(&b), &big).unwrap());
    }

    #[test]
    fn prime_in_examples() {
        let b = Ring::base();
        let p1 = RealPrime::principal(&b, &p(&[-1, 1])).unwrap();
        assert!(prime_in(&p1, &v(&b, &[-1, 0, 1])).unwrap());
        let z = RealPrime::zero(&b).unwrap();
        assert!(!prime_in(&z, &v(&b, &[0, 1])).unwrap());
        let px = RealPrime::principal(&b, &Poly::x()).unwrap();
        assert!(prime_in(&px, &ClosedSet::whole(&b)).unwrap());
        assert!(prime_in(&z, &ClosedSet::whole(&b)).unwrap());
    }

    #[test]
    fn real_prime_construction_is_checked() {
        let b = Ring::base();
        assert!(RealPrime::principal(&b, &p(&[1, 0, 1])).is_err());
        assert!(RealPrime::principal(&b, &p(&[-1, 0, 1])).is_err());
        let a = Ring::quotient(p(&[0, 0, 1])).unwrap();
        assert!(RealPrime::zero(&a).is_err());
        assert!(RealPrime::principal(&a, &p(&[-1, 1])).is_err());
    }

    #[test]
    fn enumerate_examples() {
        let a = Ring::quotient(p(&[0, -1, 1])).unwrap();
        let ps = enumerate_primes(&a).unwrap();
        let gens: Vec<&Poly> = ps.iter().map(|q| q.gen().unwrap()).collect();
        // canonical order puts x - 1 before x (constant -1 < 0)
        assert_eq!(gens, vec![&p(&[-1, 1]), &Poly::x()]);
        assert!(enumerate_primes(&Ring::quotient(p(&[1, 0, 1])).unwrap())
            .unwrap()
            .is_empty());
        let c = enumerate_primes(&Ring::quotient(p(&[0, 0, 1])).unwrap()).unwrap();
        assert_eq!(c.len(), 1);
        assert!(enumerate_primes(&Ring::base()).is_err());
    }

    #[test]
    fn cover_examples() {
        let b = Ring::base();
        let e = |c: &[i64]| b.elem(p(c));
        assert!(cover_check(&e(&[-1, 0, 1]), &[e(&[-1, 1]), e(&[1, 1])]).unwrap());
        assert!(cover_check(&e(&[0, 1]), &[e(&[0, 0, 1])]).unwrap());
        let xm1_xx1 = &p(&[-1, 1]) * &p(&[1, 0, 1]);
        assert!(cover_check(&e(&[-1, 0, 1]), &[b.elem(xm1_xx1)]).unwrap());
        assert!(!cover_check(&e(&[-1, 0, 1]), &[e(&[2, 1])]).unwrap());
        assert!(!cover_check(&e(&[1]), &[]).unwrap());
        assert!(cover_check(&b.zero(), &[e(&[1])]).is_err());
    }

    #[test]
    fn subcover_in_quotient() {
        let a = Ring::quotient(p(&[0, -1, 1])).unwrap();
        let fs = [a.elem(Poly::x()), a.elem(p(&[-1, 1]))];
        let (idx, out) = finite_subcover(&a.one(), &fs, &SearchBounds::default()).unwrap();
        assert_eq!(idx, vec![0, 1]);
        let SubcoverOutcome::Found(c) = out else {
            panic!("expected certificate")
        };
        assert_eq!(c.coeffs[0].rep(), &Poly::one());
        assert_eq!(c.coeffs[1].rep(), &p(&[-1]));
        assert!(c.sos.is_empty());
        assert!(verify_subcover_certificate(&c).unwrap());
    }

    #[test]
    fn subcover_drops_redundant_generators() {
        let b = Ring::base();
        let e = |c: &[i64]| b.elem(p(c));
        let (idx, out) = finite_subcover(
            &e(&[-1, 0, 1]),
            &[e(&[-1, 1]), e(&[1, 1]), e(&[0, 1])],
            &SearchBounds::default(),
        )
        .unwrap();
        assert_eq!(idx, vec![0, 1]);
        let SubcoverOutcome::Found(c) = out else {
            panic!("expected certificate")
        };
        assert!(verify_subcover_certificate(&c).unwrap());

        let (idx, out) =
            finite_subcover(&e(&[0, 1]), &[e(&[0, 1]), e(&[1, 0, 1])], &SearchBounds::default())
                .unwrap();
        assert_eq!(idx, vec![1]);
        assert!(matches!(out, SubcoverOutcome::Found(_)));
    }

    #[test]
    fn subcover_rejects_non_covers() {
        let b = Ring::base();
        let r = finite_subcover(
            &b.elem(p(&[-1, 0, 1])),
            &[b.elem(p(&[2, 1]))],
            &SearchBounds::default(),
        );
        assert_eq!(r, Err(Error::NotACover));
    }

    #[test]
    fn basic_open_membership() {
        let a = Ring::quotient(p(&[0, -1, 1])).unwrap();
        let d = BasicOpen::new(a.elem(Poly::x()));
        let ps = enumerate_primes(&a).unwrap();
        assert!(d.contains(&ps[0]).unwrap());
        assert!(!d.contains(&ps[1]).unwrap());
        let empty = BasicOpen::new(Ring::quotient(p(&[0, 0, 1])).unwrap().elem(Poly::x()));
        assert!(empty.is_empty());
    }
}
