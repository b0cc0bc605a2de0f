//! Sections of the structure sheaf over basic opens, the localization
//! `Σ_f⁻¹A`, stalks, and the maps between them.
//!
//! A section over `D(f)` is a finite list of local fractions `a_i/g_i` whose
//! opens cover `D(f)`. Two fractions agree on an overlap exactly when the
//! overlap lies inside the real radical of the annihilator of their
//! cross-difference, which is decidable from canonical generators.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{bezout_many, Poly};
use crate::ring::{
    annihilator, find_certificate, real_radical_member, CertificateOutcome, Ideal, Ring,
    RingElem, RingKind, SearchBounds, SigmaDenominator, SumOfSquares,
};
use crate::spectrum::{closed_subset, cover_check, prime_in, v_of, RealPrime};

/// `a/g` on `D(g)`. In a quotient ring `g` may vanish, giving an empty patch.
#[derive(Clone, PartialEq, Eq)]
pub struct LocalFraction {
    g: RingElem,
    a: RingElem,
}

impl LocalFraction {
    pub fn new(g: RingElem, a: RingElem) -> Result<LocalFraction> {
        g.ring().ensure_same(a.ring())?;
        if g.is_zero() && g.ring().kind() == RingKind::Base {
            return Err(Error::ZeroPolynomial("LocalFraction::g"));
        }
        Ok(LocalFraction { g, a })
    }

    pub fn g(&self) -> &RingElem {
        &self.g
    }

    pub fn a(&self) -> &RingElem {
        &self.a
    }
}

impl fmt::Display for LocalFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.a, self.g)
    }
}

impl fmt::Debug for LocalFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Local data on `D(f)`. Construction only checks shapes; use
/// [`section_validate`] for the cover and agreement conditions.
#[derive(Clone, PartialEq, Eq)]
pub struct Section {
    ring: Ring,
    f: RingElem,
    patches: Vec<LocalFraction>,
}

impl Section {
    pub fn new(f: RingElem, patches: Vec<LocalFraction>) -> Result<Section> {
        if f.is_zero() {
            return Err(Error::ZeroPolynomial("Section::f"));
        }
        if patches.is_empty() {
            return Err(Error::NotASection("no patches".into()));
        }
        for p in &patches {
            f.ring().ensure_same(p.g.ring())?;
        }
        Ok(Section {
            ring: f.ring().clone(),
            f,
            patches,
        })
    }

    /// Convenience constructor from `(g_i, a_i)` pairs.
    pub fn from_pairs(f: RingElem, pairs: Vec<(RingElem, RingElem)>) -> Result<Section> {
        let patches = pairs
            .into_iter()
            .map(|(g, a)| LocalFraction::new(g, a))
            .collect::<Result<Vec<_>>>()?;
        Section::new(f, patches)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn f(&self) -> &RingElem {
        &self.f
    }

    pub fn patches(&self) -> &[LocalFraction] {
        &self.patches
    }

    fn gs(&self) -> Vec<RingElem> {
        self.patches.iter().map(|p| p.g.clone()).collect()
    }
}

impl fmt::Display for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "on D({}): [", self.f)?;
        for (i, p) in self.patches.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Section {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.ring)
    }
}

/// `a / (f^{2m} + Σx²)`, an element of `Σ_f⁻¹A`. Compare with [`sigma_eq`].
#[derive(Clone, PartialEq, Eq)]
pub struct SigmaFraction {
    a: RingElem,
    den: SigmaDenominator,
}

impl SigmaFraction {
    pub fn new(a: RingElem, den: SigmaDenominator) -> Result<SigmaFraction> {
        a.ring().ensure_same(den.ring())?;
        Ok(SigmaFraction { a, den })
    }

    pub fn a(&self) -> &RingElem {
        &self.a
    }

    pub fn den(&self) -> &SigmaDenominator {
        &self.den
    }

    pub fn f(&self) -> &RingElem {
        self.den.f()
    }

    pub fn ring(&self) -> &Ring {
        self.a.ring()
    }
}

impl fmt::Display for SigmaFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.a, self.den.value())
    }
}

impl fmt::Debug for SigmaFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / [{:?}]", self.a, self.den)
    }
}

/// Witness `Σ bs[i]·gs[i] = f^{2k} + Σ sos²` for the equalized patch
/// denominators `gs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlueCertificate {
    pub f: RingElem,
    pub gs: Vec<RingElem>,
    pub bs: Vec<RingElem>,
    pub k: u32,
    pub sos: SumOfSquares,
}

pub fn verify_glue_certificate(c: &GlueCertificate) -> Result<bool> {
    let ring = c.f.ring();
    ring.ensure_same(c.sos.ring())?;
    if c.gs.len() != c.bs.len() || c.k == 0 {
        return Ok(false);
    }
    let mut lhs = ring.zero();
    for (b, g) in c.bs.iter().zip(&c.gs) {
        ring.ensure_same(b.ring())?;
        ring.ensure_same(g.ring())?;
        lhs = &lhs + &(b * g);
    }
    for t in c.sos.terms() {
        ring.ensure_same(t.ring())?;
    }
    let rhs = &c.f.pow(2 * c.k) + &c.sos.value();
    Ok((&lhs - &rhs).is_zero())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GlueOutcome {
    Glued {
        fraction: SigmaFraction,
        cert: GlueCertificate,
        /// Set when the ring is semi-real but not real.
        experimental: bool,
    },
    /// The patches cover `D(f)`, but no identity was found within bounds.
    CertificateExhausted,
    /// No power of the overlaps kills the cross-differences, so the data
    /// cannot be equalized.
    StructurallyBlocked,
}

/// A germ `a/s` at a real prime, with `s ∉ prime`.
#[derive(Clone, PartialEq, Eq)]
pub struct StalkElement {
    prime: RealPrime,
    a: RingElem,
    s: RingElem,
}

impl StalkElement {
    pub fn new(prime: RealPrime, a: RingElem, s: RingElem) -> Result<StalkElement> {
        prime.ring().ensure_same(a.ring())?;
        prime.ring().ensure_same(s.ring())?;
        if prime.contains(&s)? {
            return Err(Error::OutOfDomain);
        }
        Ok(StalkElement { prime, a, s })
    }

    pub fn prime(&self) -> &RealPrime {
        &self.prime
    }

    pub fn a(&self) -> &RingElem {
        &self.a
    }

    pub fn s(&self) -> &RingElem {
        &self.s
    }

    /// Image in the residue field `Q[x]/(q)`, reduced mod `q`. `None` at the
    /// zero prime of `Q[x]`.
    pub fn residue(&self) -> Option<Poly> {
        let q = self.prime.gen()?;
        let inv = self.s.rep().inverse_mod(q)?;
        (self.a.rep() * &inv).rem(q).ok()
    }
}

impl fmt::Display for StalkElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({}) at {}", self.a, self.s, self.prime)
    }
}

impl fmt::Debug for StalkElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub covers: bool,
    pub failing_pairs: Vec<(usize, usize)>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.covers && self.failing_pairs.is_empty()
    }
}

fn cross(a1: &RingElem, g1: &RingElem, a2: &RingElem, g2: &RingElem) -> RingElem {
    &(a1 * g2) - &(a2 * g1)
}

/// Whether `a1/g1` and `a2/g2` agree on `D(f·g1·g2)`.
fn agree_on(f: &RingElem, p1: &LocalFraction, p2: &LocalFraction) -> Result<bool> {
    let c = cross(&p1.a, &p1.g, &p2.a, &p2.g);
    let overlap = &(f * &p1.g) * &p2.g;
    real_radical_member(&annihilator(&c), &overlap)
}

/// `u = v` in `Σ_f⁻¹A`: some element of `Σ_f` kills the cross-difference,
/// i.e. `f ∈ √R(Ann(a_u·den_v − a_v·den_u))`.
pub fn sigma_eq(u: &SigmaFraction, v: &SigmaFraction) -> Result<bool> {
    u.ring().ensure_same(v.ring())?;
    if u.f() != v.f() {
        return Err(Error::DomainMismatch);
    }
    let c = cross(&u.a, &u.den.value(), &v.a, &v.den.value());
    real_radical_member(&annihilator(&c), u.f())
}

/// `Σ_f⁻¹A → O(D(f))`, the one-patch section `a/den` on `D(f)`.
pub fn psi(u: &SigmaFraction) -> Section {
    Section {
        ring: u.ring().clone(),
        f: u.f().clone(),
        patches: vec![LocalFraction {
            g: u.den.value(),
            a: u.a.clone(),
        }],
    }
}

/// Checks that the patches cover `D(f)` and agree pairwise on `D(f)`.
pub fn section_validate(s: &Section) -> Result<ValidationReport> {
    let covers = cover_check(&s.f, &s.gs())?;
    let mut failing_pairs = Vec::new();
    for i in 0..s.patches.len() {
        for j in i + 1..s.patches.len() {
            if !agree_on(&s.f, &s.patches[i], &s.patches[j])? {
                failing_pairs.push((i, j));
            }
        }
    }
    Ok(ValidationReport {
        covers,
        failing_pairs,
    })
}

/// Raw locally-fractional data: on `D(h)` the section is `b/f_local`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawPatch {
    pub h: RingElem,
    pub b: RingElem,
    pub f_local: RingElem,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NormalizeOutcome {
    Normalized(Section),
    CertificateExhausted,
}

/// Turns data `b_i/f_i` on `D(h_i)` (with `D(h_i) ⊆ D(f_i)`) into patches
/// `u_i·b_i·h_i² / (h_i²·(h_i^{2n}+Σx²))` whose opens are exactly `D(h_i)`,
/// using certificates `h_i^{2n} + Σx² = u_i·f_i`.
pub fn normalize_basic(
    f: &RingElem,
    raw: &[RawPatch],
    bounds: &SearchBounds,
) -> Result<NormalizeOutcome> {
    let ring = f.ring();
    let mut patches = Vec::with_capacity(raw.len());
    for (i, r) in raw.iter().enumerate() {
        ring.ensure_same(r.h.ring())?;
        ring.ensure_same(r.b.ring())?;
        ring.ensure_same(r.f_local.ring())?;
        let vf = v_of(&Ideal::principal(&r.f_local));
        let vh = v_of(&Ideal::principal(&r.h));
        if !closed_subset(&vf, &vh)? {
            return Err(Error::NotLocallyFractional(format!(
                "patch {i}: D({}) is not inside D({})",
                r.h, r.f_local
            )));
        }
    }
    let hs: Vec<RingElem> = raw.iter().map(|r| r.h.clone()).collect();
    if !cover_check(f, &hs)? {
        return Err(Error::NotLocallyFractional(format!(
            "the opens D(h_i) do not cover D({f})"
        )));
    }
    for r in raw {
        let (ideal, to_f) = ideal_with_multiplier(&r.f_local)?;
        let cert = match find_certificate(&ideal, &r.h, bounds)? {
            CertificateOutcome::Found(c) => c,
            CertificateOutcome::MemberNoCertificate => {
                return Ok(NormalizeOutcome::CertificateExhausted)
            }
            CertificateOutcome::NotMember => unreachable!("checked via closed_subset"),
        };
        // h^{2n} + Σ = cofactor·gen = (cofactor·to_f)·f_local
        let u = &cert.cofactor * &to_f;
        let h2 = r.h.square();
        let den = &r.h.pow(2 * cert.m) + &cert.sos.value();
        debug_assert!((&den - &(&u * &r.f_local)).is_zero());
        let g = &h2 * &den;
        debug_assert_eq!(
            v_of(&Ideal::principal(&g)),
            v_of(&Ideal::principal(&r.h))
        );
        let a = &(&u * &r.b) * &h2;
        patches.push(LocalFraction { g, a });
    }
    Ok(NormalizeOutcome::Normalized(Section::new(f.clone(), patches)?))
}

/// The ideal `(e)` together with `t` such that `gen((e)) = t·e` in the ring.
fn ideal_with_multiplier(e: &RingElem) -> Result<(Ideal, RingElem)> {
    let ring = e.ring();
    let ideal = Ideal::principal(e);
    if e.is_zero() {
        return Ok((ideal, ring.zero()));
    }
    let mut lifts = vec![e.rep().clone()];
    if let Some(m) = ring.modulus() {
        lifts.push(m.clone());
    }
    let (_, cs) = bezout_many(&lifts)?;
    Ok((ideal, ring.elem(cs[0].clone())))
}

/// Replaces every patch whose open leaves `D(f)` by its restriction
/// `(f·g, f·a)` to `D(f)`.
fn restrict_to_domain(s: &Section) -> Section {
    let vf = v_of(&Ideal::principal(&s.f));
    let patches = s
        .patches
        .iter()
        .map(|p| {
            let vg = v_of(&Ideal::principal(&p.g));
            let inside = closed_subset(&vf, &vg).expect("same ring");
            if inside {
                p.clone()
            } else {
                LocalFraction {
                    g: &s.f * &p.g,
                    a: &s.f * &p.a,
                }
            }
        })
        .collect();
    Section {
        ring: s.ring.clone(),
        f: s.f.clone(),
        patches,
    }
}

fn equalize_bound(ring: &Ring) -> u32 {
    match ring.modulus() {
        Some(m) => m.degree().finite().unwrap_or(0) as u32,
        None => 1,
    }
}

/// Least `m` with `(g_i g_j)^m (a_i g_j − a_j g_i) = 0` for all pairs, or
/// `None` if there is none up to the bound.
fn equalizing_exponent(s: &Section) -> Option<u32> {
    let n = s.patches.len();
    (0..=equalize_bound(&s.ring)).find(|&m| {
        (0..n).all(|i| {
            (i + 1..n).all(|j| {
                let (p, q) = (&s.patches[i], &s.patches[j]);
                let c = cross(&p.a, &p.g, &q.a, &q.g);
                (&(&p.g * &q.g).pow(m) * &c).is_zero()
            })
        })
    })
}

fn raise(s: &Section, m: u32) -> Section {
    let patches = s
        .patches
        .iter()
        .map(|p| {
            let gm = p.g.pow(m);
            LocalFraction {
                g: &gm * &p.g,
                a: &gm * &p.a,
            }
        })
        .collect();
    Section {
        ring: s.ring.clone(),
        f: s.f.clone(),
        patches,
    }
}

/// Exponent used by [`equalize`]; `None` when the data cannot be equalized
/// (possible only in non-real rings).
pub fn equalize_exponent(s: &Section) -> Result<Option<u32>> {
    if !section_validate(s)?.is_valid() {
        return Err(Error::NotASection("validation failed".into()));
    }
    Ok(equalizing_exponent(&restrict_to_domain(s)))
}

/// Rewrites the patches so that `g_i·a_j = g_j·a_i` exactly, by
/// `g_i ← g_i^{m+1}`, `a_i ← g_i^m·a_i` for the least working `m`. Patches
/// reaching outside `D(f)` are first restricted to it.
pub fn equalize(s: &Section) -> Result<Section> {
    if !section_validate(s)?.is_valid() {
        return Err(Error::NotASection("validation failed".into()));
    }
    let r = restrict_to_domain(s);
    match equalizing_exponent(&r) {
        Some(m) => Ok(raise(&r, m)),
        None => Err(Error::Unsupported(
            "no power of the overlaps kills the cross-differences".into(),
        )),
    }
}

/// Inverse of [`psi`]: finds `Σ b_i g_i = f^{2k} + Σx²` for the equalized
/// patches and returns `(Σ b_i a_i) / (f^{2k} + Σx²)`.
pub fn glue(s: &Section, bounds: &SearchBounds) -> Result<GlueOutcome> {
    bounds.validate()?;
    let report = section_validate(s)?;
    if !report.covers {
        return Err(Error::NotASection("the patches do not cover D(f)".into()));
    }
    if let Some(&(i, j)) = report.failing_pairs.first() {
        return Err(Error::NotASection(format!(
            "patches {i} and {j} disagree on their overlap"
        )));
    }
    let r = restrict_to_domain(s);
    let Some(m) = equalizing_exponent(&r) else {
        return Ok(GlueOutcome::StructurallyBlocked);
    };
    let eq = raise(&r, m);
    let ring = &s.ring;
    let gs = eq.gs();

    let mut lifts: Vec<Poly> = gs.iter().map(|g| g.rep().clone()).collect();
    if let Some(md) = ring.modulus() {
        lifts.push(md.clone());
    }
    let (d, cs) = bezout_many(&lifts)?;
    let target = Ideal::from_poly(ring, &d);
    let cert = match find_certificate(&target, &s.f, bounds)? {
        CertificateOutcome::Found(c) => c,
        CertificateOutcome::MemberNoCertificate => return Ok(GlueOutcome::CertificateExhausted),
        CertificateOutcome::NotMember => {
            return Err(Error::NotASection("the patches do not cover D(f)".into()))
        }
    };
    let bs: Vec<RingElem> = cs[..gs.len()]
        .iter()
        .map(|c| &cert.cofactor * &ring.elem(c.clone()))
        .collect();
    let a = bs
        .iter()
        .zip(&eq.patches)
        .fold(ring.zero(), |acc, (b, p)| &acc + &(b * &p.a));
    let den = SigmaDenominator::new(s.f.clone(), cert.m, cert.sos.clone())?;
    let gc = GlueCertificate {
        f: s.f.clone(),
        gs,
        bs,
        k: cert.m,
        sos: cert.sos,
    };
    if !verify_glue_certificate(&gc)? {
        return Ok(GlueOutcome::CertificateExhausted);
    }
    let dv = den.value();
    for p in &eq.patches {
        if !(&(&p.g * &a) - &(&dv * &p.a)).is_zero() {
            return Ok(GlueOutcome::CertificateExhausted);
        }
    }
    Ok(GlueOutcome::Glued {
        fraction: SigmaFraction { a, den },
        cert: gc,
        experimental: !ring.is_real(),
    })
}

/// The germ of `s` at `p`, taken from the first patch whose open contains `p`.
pub fn stalk_at(s: &Section, p: &RealPrime) -> Result<StalkElement> {
    s.ring.ensure_same(p.ring())?;
    if prime_in(p, &v_of(&Ideal::principal(&s.f)))? {
        return Err(Error::OutOfDomain);
    }
    for patch in &s.patches {
        if !p.contains(&patch.g)? {
            return Ok(StalkElement {
                prime: p.clone(),
                a: patch.a.clone(),
                s: patch.g.clone(),
            });
        }
    }
    Err(Error::NotASection(format!("no patch contains {p}")))
}

/// Equality in `A_p`: some `h ∉ p` kills `a·s' − a'·s`, i.e. the
/// annihilator of the cross-difference is not inside `p`.
pub fn stalk_eq(u: &StalkElement, v: &StalkElement) -> Result<bool> {
    if u.prime != v.prime {
        return Err(Error::DomainMismatch);
    }
    let c = cross(&u.a, &u.s, &v.a, &v.s);
    Ok(!u.prime.contains_ideal(&annihilator(&c))?)
}

/// Pointwise equality of two sections over the same basic open.
pub fn section_eq(s1: &Section, s2: &Section) -> Result<bool> {
    s1.ring.ensure_same(&s2.ring)?;
    if v_of(&Ideal::principal(&s1.f)) != v_of(&Ideal::principal(&s2.f)) {
        return Err(Error::DomainMismatch);
    }
    for p in &s1.patches {
        for q in &s2.patches {
            if !agree_on(&s1.f, p, q)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
