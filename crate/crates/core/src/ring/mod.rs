//! The concrete rings `Q[x]` and `Q[x]/(m)`, their principal ideals,
//! annihilators, reality classification and real radicals.
//!
//! Every ideal of these rings is principal. An [`Ideal`] stores one
//! canonical generator: `0` or monic in the base ring, and a monic divisor
//! of the modulus in a quotient ring (so the zero ideal of `Q[x]/(m)` is
//! stored as `(m)`).

mod cert;
mod lp;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::Poly;

pub use cert::{
    find_certificate, verify_certificate, CertificateOutcome, RealRadicalCertificate,
    SearchBounds, SigmaDenominator, SumOfSquares,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingKind {
    Base,
    Quotient,
}

#[derive(Debug)]
struct RingData {
    modulus: Option<Poly>,
    is_real: bool,
    is_semireal: bool,
}

/// `Q[x]` or `Q[x]/(m)` with `m` monic of degree at least one. Cheap to
/// clone; two rings are equal when their moduli are.
#[derive(Clone)]
pub struct Ring(Arc<RingData>);

impl Ring {
    pub fn base() -> Ring {
        Ring(Arc::new(RingData {
            modulus: None,
            is_real: true,
            is_semireal: true,
        }))
    }

    pub fn quotient(modulus: Poly) -> Result<Ring> {
        match modulus.degree().finite() {
            None | Some(0) => {
                return Err(Error::InvalidModulus(format!(
                    "modulus must have degree >= 1, got {modulus}"
                )))
            }
            _ if !modulus.is_monic() => {
                return Err(Error::InvalidModulus(format!(
                    "modulus must be monic, got {modulus}"
                )))
            }
            _ => {}
        }
        let fz = modulus.factor()?;
        let mut any_real = false;
        let mut all_real = true;
        for (q, _) in &fz.factors {
            if q.count_real_roots()? > 0 {
                any_real = true;
            } else {
                all_real = false;
            }
        }
        let squarefree = fz.factors.iter().all(|(_, e)| *e == 1);
        Ok(Ring(Arc::new(RingData {
            modulus: Some(modulus),
            is_real: squarefree && all_real,
            is_semireal: any_real,
        })))
    }

    pub fn make(kind: RingKind, modulus: Option<Poly>) -> Result<Ring> {
        match (kind, modulus) {
            (RingKind::Base, None) => Ok(Ring::base()),
            (RingKind::Base, Some(_)) => Err(Error::InvalidModulus(
                "the base ring takes no modulus".into(),
            )),
            (RingKind::Quotient, Some(m)) => Ring::quotient(m),
            (RingKind::Quotient, None) => {
                Err(Error::InvalidModulus("a quotient ring needs a modulus".into()))
            }
        }
    }

    pub fn kind(&self) -> RingKind {
        match self.0.modulus {
            None => RingKind::Base,
            Some(_) => RingKind::Quotient,
        }
    }

    pub fn modulus(&self) -> Option<&Poly> {
        self.0.modulus.as_ref()
    }

    pub fn is_real(&self) -> bool {
        self.0.is_real
    }

    pub fn is_semireal(&self) -> bool {
        self.0.is_semireal
    }

    /// Canonical representative: remainder modulo the modulus.
    pub fn reduce(&self, p: &Poly) -> Poly {
        match &self.0.modulus {
            None => p.clone(),
            Some(m) => p.rem(m).expect("modulus is nonzero"),
        }
    }

    pub fn elem(&self, p: Poly) -> RingElem {
        RingElem {
            rep: self.reduce(&p),
            ring: self.clone(),
        }
    }

    pub fn zero(&self) -> RingElem {
        self.elem(Poly::zero())
    }

    pub fn one(&self) -> RingElem {
        self.elem(Poly::one())
    }

    /// Gcd of a lift with the modulus (or the lift itself in the base ring):
    /// the generator of the pullback of `(p)` to `Q[x]`.
    pub(crate) fn pullback_gen(&self, p: &Poly) -> Poly {
        match &self.0.modulus {
            None => p.monic(),
            Some(m) => p.gcd0(m),
        }
    }

    pub(crate) fn ensure_same(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.modulus == other.0.modulus
    }
}

impl Eq for Ring {}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0.modulus {
            None => write!(f, "Q[x]"),
            Some(m) => write!(f, "Q[x]/({m})"),
        }
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({self})")
    }
}

/// `(is_real, is_semireal)`.
pub fn classify(ring: &Ring) -> (bool, bool) {
    (ring.is_real(), ring.is_semireal())
}

/// An element of a [`Ring`], stored by its reduced representative.
///
/// Arithmetic operators panic when the operands live in different rings;
/// the public algebra entry points check rings first and return
/// [`Error::RingMismatch`] instead.
#[derive(Clone, PartialEq, Eq)]
pub struct RingElem {
    ring: Ring,
    rep: Poly,
}

impl RingElem {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// The canonical lift to `Q[x]`.
    pub fn rep(&self) -> &Poly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn pow(&self, e: u32) -> RingElem {
        let mut base = self.clone();
        let mut acc = self.ring.one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn square(&self) -> RingElem {
        self * self
    }

    pub(crate) fn same_ring(&self, other: &RingElem) -> Result<()> {
        self.ring.ensure_same(&other.ring)
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rep)
    }
}

impl fmt::Debug for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} in {}", self.rep, self.ring)
    }
}

macro_rules! elem_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for &RingElem {
            type Output = RingElem;
            fn $m(self, rhs: &RingElem) -> RingElem {
                assert!(self.ring == rhs.ring, "ring mismatch in arithmetic");
                self.ring.elem((&self.rep).$m(&rhs.rep))
            }
        }
        impl $tr for RingElem {
            type Output = RingElem;
            fn $m(self, rhs: RingElem) -> RingElem {
                (&self).$m(&rhs)
            }
        }
    };
}

elem_binop!(Add, add);
elem_binop!(Sub, sub);
elem_binop!(Mul, mul);

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        RingElem {
            ring: self.ring.clone(),
            rep: -&self.rep,
        }
    }
}

/// A principal ideal with its canonical generator.
#[derive(Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Ring,
    gen: Poly,
}

impl Ideal {
    /// The ideal generated by (the image of) `p`.
    pub fn from_poly(ring: &Ring, p: &Poly) -> Ideal {
        Ideal {
            gen: ring.pullback_gen(p),
            ring: ring.clone(),
        }
    }

    pub fn principal(a: &RingElem) -> Ideal {
        Ideal::from_poly(&a.ring, &a.rep)
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal::from_poly(ring, &Poly::zero())
    }

    pub fn unit(ring: &Ring) -> Ideal {
        Ideal::from_poly(ring, &Poly::one())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Canonical generator, as a polynomial in `Q[x]`.
    pub fn gen(&self) -> &Poly {
        &self.gen
    }

    pub fn gen_elem(&self) -> RingElem {
        self.ring.elem(self.gen.clone())
    }

    pub fn is_unit(&self) -> bool {
        self.gen.is_one()
    }

    pub fn contains(&self, a: &RingElem) -> Result<bool> {
        self.ring.ensure_same(&a.ring)?;
        Ok(self.gen.divides(&a.rep))
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &Ideal) -> Result<bool> {
        self.ring.ensure_same(&other.ring)?;
        Ok(other.gen.divides(&self.gen))
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.ensure_same(&other.ring)?;
        Ok(Ideal::from_poly(&self.ring, &self.gen.gcd0(&other.gen)))
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.ensure_same(&other.ring)?;
        Ok(Ideal::from_poly(&self.ring, &(&self.gen * &other.gen)))
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.gen)
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) in {}", self.gen, self.ring)
    }
}

/// `Ann(z) = {w : w z = 0}`. In `Q[x]` this is `(0)` unless `z = 0`; in
/// `Q[x]/(m)` it is generated by `m / gcd(m, z)`.
pub fn annihilator(z: &RingElem) -> Ideal {
    match z.ring.modulus() {
        None if z.is_zero() => Ideal::unit(&z.ring),
        None => Ideal::zero(&z.ring),
        Some(m) => {
            let g = m.gcd0(&z.rep);
            let (q, _) = m.divrem(&g).expect("gcd with modulus is nonzero");
            Ideal::from_poly(&z.ring, &q)
        }
    }
}

/// The smallest real ideal containing `ideal`: generated by the real part
/// of the canonical generator, `(0)` for the zero ideal of `Q[x]`, and the
/// unit ideal when no real prime contains `ideal`.
pub fn real_radical(ideal: &Ideal) -> Ideal {
    if ideal.gen.is_zero() {
        return ideal.clone();
    }
    let rp = ideal.gen.real_part().expect("nonzero generator");
    Ideal::from_poly(&ideal.ring, &rp)
}

/// Whether `a` lies in the real radical of `ideal`.
pub fn real_radical_member(ideal: &Ideal, a: &RingElem) -> Result<bool> {
    real_radical(ideal).contains(a)
}
