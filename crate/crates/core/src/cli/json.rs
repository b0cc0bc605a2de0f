//! Certificate documents. Polynomials are stored as canonical expression
//! strings, so a document can be re-checked without any other context.

use serde::{Deserialize, Serialize};

use super::parse::{parse_poly, parse_ring_spec};
use super::CliError;
use crate::ring::{RealRadicalCertificate, Ring, RingElem};
use crate::sheaf::GlueCertificate;
use crate::spectrum::SubcoverCertificate;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CertificateDoc {
    /// `element^{2m} + Σ sos² = cofactor · ideal`.
    RealRadical {
        ring: String,
        element: String,
        ideal: String,
        m: u32,
        sos: Vec<String>,
        cofactor: String,
    },
    /// `Σ coeffs[j] · generators[j] = element^{2m} + Σ sos²`.
    Subcover {
        ring: String,
        element: String,
        indices: Vec<usize>,
        generators: Vec<String>,
        coeffs: Vec<String>,
        m: u32,
        sos: Vec<String>,
    },
    /// `Σ coeffs[i] · generators[i] = element^{2k} + Σ sos²`.
    Glue {
        ring: String,
        element: String,
        generators: Vec<String>,
        coeffs: Vec<String>,
        k: u32,
        sos: Vec<String>,
    },
}

fn strings(es: &[RingElem]) -> Vec<String> {
    es.iter().map(|e| e.to_string()).collect()
}

impl CertificateDoc {
    pub fn real_radical(c: &RealRadicalCertificate) -> CertificateDoc {
        CertificateDoc::RealRadical {
            ring: c.ideal.ring().to_string(),
            element: c.a.to_string(),
            ideal: c.ideal.gen().to_string(),
            m: c.m,
            sos: strings(c.sos.terms()),
            cofactor: c.cofactor.to_string(),
        }
    }

    pub fn subcover(c: &SubcoverCertificate) -> CertificateDoc {
        CertificateDoc::Subcover {
            ring: c.f.ring().to_string(),
            element: c.f.to_string(),
            indices: c.indices.clone(),
            generators: strings(&c.generators),
            coeffs: strings(&c.coeffs),
            m: c.m,
            sos: strings(c.sos.terms()),
        }
    }

    pub fn glue(c: &GlueCertificate) -> CertificateDoc {
        CertificateDoc::Glue {
            ring: c.f.ring().to_string(),
            element: c.f.to_string(),
            generators: strings(&c.gs),
            coeffs: strings(&c.bs),
            k: c.k,
            sos: strings(c.sos.terms()),
        }
    }

    /// Re-expands the stored identity in the stored ring.
    pub fn verify(&self) -> Result<bool, CliError> {
        match self {
            CertificateDoc::RealRadical {
                ring,
                element,
                ideal,
                m,
                sos,
                cofactor,
            } => {
                let r = ring_of(ring)?;
                let lhs = &elem(&r, element)?.pow(2 * m) + &sum_squares(&r, sos)?;
                let rhs = &elem(&r, cofactor)? * &elem(&r, ideal)?;
                Ok(*m > 0 && (&lhs - &rhs).is_zero())
            }
            CertificateDoc::Subcover {
                ring,
                element,
                generators,
                coeffs,
                m,
                sos,
                ..
            } => combination_identity(ring, element, generators, coeffs, *m, sos),
            CertificateDoc::Glue {
                ring,
                element,
                generators,
                coeffs,
                k,
                sos,
            } => combination_identity(ring, element, generators, coeffs, *k, sos),
        }
    }
}

fn ring_of(text: &str) -> Result<Ring, CliError> {
    Ok(parse_ring_spec(text)?.build()?)
}

fn elem(r: &Ring, text: &str) -> Result<RingElem, CliError> {
    Ok(r.elem(parse_poly(text)?))
}

fn sum_squares(r: &Ring, terms: &[String]) -> Result<RingElem, CliError> {
    let mut acc = r.zero();
    for t in terms {
        acc = &acc + &elem(r, t)?.square();
    }
    Ok(acc)
}

fn combination_identity(
    ring: &str,
    element: &str,
    generators: &[String],
    coeffs: &[String],
    m: u32,
    sos: &[String],
) -> Result<bool, CliError> {
    let r = ring_of(ring)?;
    if generators.len() != coeffs.len() || m == 0 {
        return Ok(false);
    }
    let mut lhs = r.zero();
    for (c, g) in coeffs.iter().zip(generators) {
        lhs = &lhs + &(&elem(&r, c)? * &elem(&r, g)?);
    }
    let rhs = &elem(&r, element)?.pow(2 * m) + &sum_squares(&r, sos)?;
    Ok((&lhs - &rhs).is_zero())
}

/// Accepts either a bare certificate or any document with a `certificate`
/// field holding one.
pub fn certificate_from_str(text: &str) -> Result<CertificateDoc, CliError> {
    let v: serde_json::Value =
        serde_json::from_str(text).map_err(|e| CliError::Usage(format!("invalid JSON: {e}")))?;
    let inner = match v.get("certificate") {
        Some(c) if v.get("kind").is_none() => c.clone(),
        _ => v,
    };
    serde_json::from_value(inner).map_err(|e| CliError::Usage(format!("not a certificate: {e}")))
}
