//! Command-line front end.
//!
//! Exit codes: 0 success, 2 parse or usage error, 3 precondition violation,
//! 4 certificate search exhausted (the decision is still printed).

pub mod explore;
pub mod json;
pub mod parse;

use std::ffi::OsString;
use std::fmt;
use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::Error;
use crate::poly::Poly;
use crate::ring::{
    classify, find_certificate, real_radical, CertificateOutcome, Ideal, Ring, RingElem,
    SearchBounds, SigmaDenominator, SumOfSquares,
};
use crate::sheaf::{
    glue, section_eq, section_validate, sigma_eq, stalk_at, GlueOutcome, Section, SigmaFraction,
};
use crate::spectrum::{
    closed_intersect, closed_subset, closed_union, cover_check, enumerate_primes,
    finite_subcover, v_of, ClosedSet, RealPrime, SubcoverOutcome,
};

use explore::{explore_question, ExploreConfig};
use json::{certificate_from_str, CertificateDoc};
use parse::{parse_patch, parse_poly, parse_ring_spec, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_EXHAUSTED: i32 = 4;

#[derive(Debug)]
pub enum CliError {
    Parse(ParseError),
    Usage(String),
    Lib(Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(e) => write!(f, "{e}"),
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) => EXIT_USAGE,
            CliError::Lib(Error::InvalidBounds(_)) => EXIT_USAGE,
            CliError::Lib(_) => EXIT_PRECONDITION,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(
    name = "realspec",
    version,
    about = "Real radicals, real spectra and sheaf sections over Q[x] and Q[x]/(m)"
)]
struct Cli {
    /// Ring, "Q[x]" or "Q[x]/(m)" with m monic.
    #[arg(long, global = true, default_value = "Q[x]")]
    ring: String,
    /// Print one JSON document on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true)]
    m_max: Option<u32>,
    #[arg(long, global = true)]
    sos_degree: Option<usize>,
    #[arg(long, global = true)]
    coeff_bound: Option<u32>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Factor a polynomial over Q.
    Factor {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Product of the irreducible factors with a real root.
    RealPart {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Generator of the real radical of (poly) in the ring.
    RealRadical {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Sturm sequence and number of distinct real roots.
    Sturm {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Whether the ring is real and semi-real.
    Classify,
    /// Real primes of a quotient ring.
    Primes,
    /// Operations on closed sets V(I).
    Vset {
        #[command(subcommand)]
        op: VsetOp,
    },
    /// Decide whether D(g_1), ..., D(g_n) cover D(f).
    Cover(CoverArgs),
    /// Shrink a cover of D(f) and certify it.
    Subcover(CoverArgs),
    /// Real-radical certificates.
    Cert {
        #[command(subcommand)]
        op: CertOp,
    },
    /// Sections over D(f) given by patches "g:a".
    Section {
        #[command(subcommand)]
        op: SectionOp,
    },
    /// Equality of two fractions a / (f^(2m) + sum of squares).
    SigmaEq(SigmaEqArgs),
    /// Probe gluing on semi-real rings that are not real.
    ExploreQuestion(ExploreArgs),
}

#[derive(Debug, Subcommand)]
enum VsetOp {
    /// V(I_1) ∪ ... ∪ V(I_n).
    Union {
        #[arg(required = true, allow_hyphen_values = true)]
        gens: Vec<String>,
    },
    /// V(I_1) ∩ ... ∩ V(I_n).
    Intersect {
        #[arg(required = true, allow_hyphen_values = true)]
        gens: Vec<String>,
    },
    /// V(I) ⊆ V(J).
    Subset {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
}

#[derive(Debug, Args)]
struct CoverArgs {
    #[arg(long = "f", allow_hyphen_values = true)]
    f: String,
    #[arg(required = true, allow_hyphen_values = true)]
    gens: Vec<String>,
}

#[derive(Debug, Subcommand)]
enum CertOp {
    /// Find a^(2m) + sum of squares = c * g for a in the real radical of (g).
    Find {
        #[arg(long, allow_hyphen_values = true)]
        ideal: String,
        #[arg(allow_hyphen_values = true)]
        element: String,
    },
    /// Re-check a JSON certificate (file path, or "-" for stdin).
    Verify { file: String },
}

#[derive(Debug, Args)]
struct SectionArgs {
    #[arg(long = "f", allow_hyphen_values = true)]
    f: String,
    #[arg(long = "patch", required = true, allow_hyphen_values = true)]
    patches: Vec<String>,
}

#[derive(Debug, Subcommand)]
enum SectionOp {
    Validate(SectionArgs),
    Glue(SectionArgs),
    /// Compare with a second section given by --other-f and --other-patch.
    Eq {
        #[command(flatten)]
        s: SectionArgs,
        #[arg(long, allow_hyphen_values = true)]
        other_f: Option<String>,
        #[arg(long = "other-patch", required = true, allow_hyphen_values = true)]
        other: Vec<String>,
    },
    /// Germ at the real prime (q).
    Stalk {
        #[command(flatten)]
        s: SectionArgs,
        #[arg(long, allow_hyphen_values = true)]
        prime: String,
    },
}

#[derive(Debug, Args)]
struct SigmaEqArgs {
    #[arg(long = "f", allow_hyphen_values = true)]
    f: String,
    #[arg(long, allow_hyphen_values = true)]
    u: String,
    #[arg(long, default_value_t = 1)]
    u_m: u32,
    #[arg(long, allow_hyphen_values = true)]
    u_sos: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    v: String,
    #[arg(long, default_value_t = 1)]
    v_m: u32,
    #[arg(long, allow_hyphen_values = true)]
    v_sos: Vec<String>,
}

#[derive(Debug, Args)]
struct ExploreArgs {
    #[arg(long, default_value_t = 50)]
    rings: usize,
    #[arg(long, default_value_t = 4)]
    trials: usize,
    #[arg(long, default_value_t = 2)]
    min_degree: usize,
    #[arg(long, default_value_t = 6)]
    max_degree: usize,
}

/// Output collected by a command before it is written out.
struct Reply {
    text: String,
    json: Value,
    code: i32,
}

impl Reply {
    fn ok(text: impl Into<String>, json: Value) -> Reply {
        Reply {
            text: text.into(),
            json,
            code: EXIT_OK,
        }
    }

    fn with_code(mut self, code: i32) -> Reply {
        self.code = code;
        self
    }
}

struct Ctx {
    ring: Ring,
    bounds: SearchBounds,
}

impl Ctx {
    fn elem(&self, text: &str) -> CliResult<RingElem> {
        Ok(self.ring.elem(parse_poly(text)?))
    }

    fn section(&self, f: &str, patches: &[String]) -> CliResult<Section> {
        let f = self.elem(f)?;
        let mut pairs = Vec::new();
        for p in patches {
            let (g, a) = parse_patch(p)?;
            pairs.push((self.ring.elem(g), self.ring.elem(a)));
        }
        Ok(Section::from_pairs(f, pairs)?)
    }

    fn closed(&self, text: &str) -> CliResult<ClosedSet> {
        Ok(v_of(&Ideal::principal(&self.elem(text)?)))
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    let as_json = cli.json;
    match dispatch(cli) {
        Ok(reply) => {
            let _ = if as_json {
                writeln!(out, "{}", reply.json)
            } else {
                write!(out, "{}", reply.text)
            };
            reply.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli) -> CliResult<Reply> {
    let ring = parse_ring_spec(&cli.ring)?.build()?;
    let defaults = SearchBounds::default();
    let bounds = SearchBounds {
        m_max: cli.m_max.unwrap_or(defaults.m_max),
        sos_degree: cli.sos_degree.or(defaults.sos_degree),
        coeff_bound: cli.coeff_bound.unwrap_or(defaults.coeff_bound),
        random_roots: defaults.random_roots,
        seed: cli.seed,
    };
    bounds.validate()?;
    let ctx = Ctx { ring, bounds };
    match cli.cmd {
        Cmd::Factor { poly } => cmd_factor(&poly),
        Cmd::RealPart { poly } => cmd_real_part(&poly),
        Cmd::RealRadical { poly } => cmd_real_radical(&ctx, &poly),
        Cmd::Sturm { poly } => cmd_sturm(&poly),
        Cmd::Classify => cmd_classify(&ctx),
        Cmd::Primes => cmd_primes(&ctx),
        Cmd::Vset { op } => cmd_vset(&ctx, op),
        Cmd::Cover(a) => cmd_cover(&ctx, &a),
        Cmd::Subcover(a) => cmd_subcover(&ctx, &a),
        Cmd::Cert { op } => cmd_cert(&ctx, op),
        Cmd::Section { op } => cmd_section(&ctx, op),
        Cmd::SigmaEq(a) => cmd_sigma_eq(&ctx, &a),
        Cmd::ExploreQuestion(a) => cmd_explore(&ctx, &a, cli.seed),
    }
}

fn cmd_factor(text: &str) -> CliResult<Reply> {
    let p = parse_poly(text)?;
    let fz = p.factor()?;
    let factors: Vec<Value> = fz
        .factors
        .iter()
        .map(|(q, e)| json!({"factor": q.to_string(), "multiplicity": e}))
        .collect();
    Ok(Reply::ok(
        format!("{fz}\n"),
        json!({"poly": p.to_string(), "unit": fz.unit.to_string(), "factors": factors}),
    ))
}

fn cmd_real_part(text: &str) -> CliResult<Reply> {
    let p = parse_poly(text)?;
    let rp = p.real_part()?;
    Ok(Reply::ok(
        format!("{rp}\n"),
        json!({"poly": p.to_string(), "real_part": rp.to_string()}),
    ))
}

fn cmd_real_radical(ctx: &Ctx, text: &str) -> CliResult<Reply> {
    let ideal = Ideal::principal(&ctx.elem(text)?);
    let rr = real_radical(&ideal);
    Ok(Reply::ok(
        format!("{}\n", rr.gen()),
        json!({
            "ring": ctx.ring.to_string(),
            "ideal": ideal.gen().to_string(),
            "real_radical": rr.gen().to_string(),
        }),
    ))
}

fn cmd_sturm(text: &str) -> CliResult<Reply> {
    let p = parse_poly(text)?;
    let n = p.count_real_roots()?;
    let seq: Vec<String> = p.sturm_sequence().iter().map(Poly::to_string).collect();
    let mut s = String::new();
    for q in &seq {
        s += &format!("{q}\n");
    }
    s += &format!("real roots: {n}\n");
    Ok(Reply::ok(
        s,
        json!({"poly": p.to_string(), "sequence": seq, "real_roots": n}),
    ))
}

fn cmd_classify(ctx: &Ctx) -> CliResult<Reply> {
    let (real, semireal) = classify(&ctx.ring);
    Ok(Reply::ok(
        format!("real={real} semireal={semireal}\n"),
        json!({"ring": ctx.ring.to_string(), "real": real, "semireal": semireal}),
    ))
}

fn cmd_primes(ctx: &Ctx) -> CliResult<Reply> {
    let ps = enumerate_primes(&ctx.ring)?;
    let names: Vec<String> = ps.iter().map(RealPrime::to_string).collect();
    let text = if names.is_empty() {
        "empty\n".to_string()
    } else {
        names.iter().map(|n| format!("{n}\n")).collect()
    };
    Ok(Reply::ok(
        text,
        json!({"ring": ctx.ring.to_string(), "primes": names}),
    ))
}

fn closed_json(v: &ClosedSet) -> Value {
    json!({"set": v.to_string(), "generator": v.gen().to_string()})
}

fn cmd_vset(ctx: &Ctx, op: VsetOp) -> CliResult<Reply> {
    match op {
        VsetOp::Union { gens } => {
            let mut acc = ClosedSet::empty(&ctx.ring);
            for g in &gens {
                acc = closed_union(&acc, &ctx.closed(g)?)?;
            }
            Ok(Reply::ok(format!("{acc}\n"), closed_json(&acc)))
        }
        VsetOp::Intersect { gens } => {
            let vs = gens
                .iter()
                .map(|g| ctx.closed(g))
                .collect::<CliResult<Vec<_>>>()?;
            let v = closed_intersect(&vs)?;
            Ok(Reply::ok(format!("{v}\n"), closed_json(&v)))
        }
        VsetOp::Subset { a, b } => {
            let r = closed_subset(&ctx.closed(&a)?, &ctx.closed(&b)?)?;
            Ok(Reply::ok(format!("{r}\n"), json!({"subset": r})))
        }
    }
}

fn cover_inputs(ctx: &Ctx, a: &CoverArgs) -> CliResult<(RingElem, Vec<RingElem>)> {
    let f = ctx.elem(&a.f)?;
    let gs = a
        .gens
        .iter()
        .map(|g| ctx.elem(g))
        .collect::<CliResult<Vec<_>>>()?;
    Ok((f, gs))
}

fn cmd_cover(ctx: &Ctx, a: &CoverArgs) -> CliResult<Reply> {
    let (f, gs) = cover_inputs(ctx, a)?;
    let c = cover_check(&f, &gs)?;
    Ok(Reply::ok(format!("covered={c}\n"), json!({"covered": c})))
}

fn cert_lines(doc: &CertificateDoc) -> String {
    let v = serde_json::to_value(doc).expect("serializable");
    let mut s = String::from("certificate:\n");
    if let Value::Object(map) = v {
        for (k, v) in map {
            if k == "ring" {
                continue;
            }
            let shown = match v {
                Value::String(t) => t,
                Value::Array(items) => format!(
                    "[{}]",
                    items
                        .iter()
                        .map(|i| match i {
                            Value::String(t) => t.clone(),
                            other => other.to_string(),
                        })
                        .collect::<Vec<_>>()
                        .join(", ")
                ),
                other => other.to_string(),
            };
            s += &format!("  {k} = {shown}\n");
        }
    }
    s
}

fn cmd_subcover(ctx: &Ctx, a: &CoverArgs) -> CliResult<Reply> {
    let (f, gs) = cover_inputs(ctx, a)?;
    let (indices, outcome) = finite_subcover(&f, &gs, &ctx.bounds)?;
    let listed = indices
        .iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(", ");
    let mut text = format!("subcover: {listed}\n");
    Ok(match outcome {
        SubcoverOutcome::Found(c) => {
            let doc = CertificateDoc::subcover(&c);
            text += &cert_lines(&doc);
            Reply::ok(text, json!({"indices": indices, "certificate": doc}))
        }
        SubcoverOutcome::NoCertificate => {
            text += "certificate: not found within bounds\n";
            Reply::ok(text, json!({"indices": indices, "certificate": null}))
                .with_code(EXIT_EXHAUSTED)
        }
    })
}

fn read_input(path: &str) -> CliResult<String> {
    let mut s = String::new();
    let res = if path == "-" {
        std::io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        std::fs::File::open(path).and_then(|mut f| f.read_to_string(&mut s).map(|_| ()))
    };
    res.map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?;
    Ok(s)
}

fn cmd_cert(ctx: &Ctx, op: CertOp) -> CliResult<Reply> {
    match op {
        CertOp::Find { ideal, element } => {
            let ideal = Ideal::principal(&ctx.elem(&ideal)?);
            let a = ctx.elem(&element)?;
            Ok(match find_certificate(&ideal, &a, &ctx.bounds)? {
                CertificateOutcome::Found(c) => {
                    let doc = CertificateDoc::real_radical(&c);
                    let text = format!("member=true\n{}", cert_lines(&doc));
                    Reply::ok(text, json!({"member": true, "certificate": doc}))
                }
                CertificateOutcome::MemberNoCertificate => Reply::ok(
                    "member=true\ncertificate: not found within bounds\n",
                    json!({"member": true, "certificate": null}),
                )
                .with_code(EXIT_EXHAUSTED),
                CertificateOutcome::NotMember => Reply::ok(
                    "member=false\n",
                    json!({"member": false, "certificate": null}),
                ),
            })
        }
        CertOp::Verify { file } => {
            let doc = certificate_from_str(&read_input(&file)?)?;
            let ok = doc.verify()?;
            let reply = Reply::ok(format!("valid={ok}\n"), json!({"valid": ok}));
            Ok(if ok {
                reply
            } else {
                reply.with_code(EXIT_PRECONDITION)
            })
        }
    }
}

fn cmd_section(ctx: &Ctx, op: SectionOp) -> CliResult<Reply> {
    match op {
        SectionOp::Validate(a) => {
            let s = ctx.section(&a.f, &a.patches)?;
            let rep = section_validate(&s)?;
            let mut text = format!("valid={}\ncovers={}\n", rep.is_valid(), rep.covers);
            for (i, j) in &rep.failing_pairs {
                text += &format!("failing pair: {i} {j}\n");
            }
            Ok(Reply::ok(
                text,
                json!({
                    "valid": rep.is_valid(),
                    "covers": rep.covers,
                    "failing_pairs": rep.failing_pairs,
                }),
            ))
        }
        SectionOp::Glue(a) => {
            let s = ctx.section(&a.f, &a.patches)?;
            Ok(match glue(&s, &ctx.bounds)? {
                GlueOutcome::Glued {
                    fraction,
                    cert,
                    experimental,
                } => {
                    let doc = CertificateDoc::glue(&cert);
                    let mut text = format!("{fraction}\n");
                    if experimental {
                        text += "experimental=true\n";
                    }
                    text += &cert_lines(&doc);
                    Reply::ok(
                        text,
                        json!({
                            "outcome": "glued",
                            "numerator": fraction.a().to_string(),
                            "denominator": fraction.den().value().to_string(),
                            "experimental": experimental,
                            "certificate": doc,
                        }),
                    )
                }
                GlueOutcome::CertificateExhausted => Reply::ok(
                    "outcome=certificate-exhausted\n",
                    json!({"outcome": "certificate-exhausted"}),
                )
                .with_code(EXIT_EXHAUSTED),
                GlueOutcome::StructurallyBlocked => Reply::ok(
                    "outcome=structurally-blocked\n",
                    json!({"outcome": "structurally-blocked"}),
                )
                .with_code(EXIT_EXHAUSTED),
            })
        }
        SectionOp::Eq { s, other_f, other } => {
            let s1 = ctx.section(&s.f, &s.patches)?;
            let s2 = ctx.section(other_f.as_deref().unwrap_or(&s.f), &other)?;
            let eq = section_eq(&s1, &s2)?;
            Ok(Reply::ok(format!("equal={eq}\n"), json!({"equal": eq})))
        }
        SectionOp::Stalk { s, prime } => {
            let sec = ctx.section(&s.f, &s.patches)?;
            let p = RealPrime::principal(&ctx.ring, &parse_poly(&prime)?)?;
            let germ = stalk_at(&sec, &p)?;
            let residue = germ.residue().map(|r| r.to_string());
            let mut text = format!("{} / {}\n", germ.a(), germ.s());
            if let Some(r) = &residue {
                text += &format!("residue={r}\n");
            }
            Ok(Reply::ok(
                text,
                json!({
                    "prime": p.to_string(),
                    "numerator": germ.a().to_string(),
                    "denominator": germ.s().to_string(),
                    "residue": residue,
                }),
            ))
        }
    }
}

fn sigma_fraction(ctx: &Ctx, f: &RingElem, a: &str, m: u32, sos: &[String]) -> CliResult<SigmaFraction> {
    let terms = sos
        .iter()
        .map(|t| ctx.elem(t))
        .collect::<CliResult<Vec<_>>>()?;
    let den = SigmaDenominator::new(f.clone(), m, SumOfSquares::new(&ctx.ring, terms)?)?;
    Ok(SigmaFraction::new(ctx.elem(a)?, den)?)
}

fn cmd_sigma_eq(ctx: &Ctx, a: &SigmaEqArgs) -> CliResult<Reply> {
    let f = ctx.elem(&a.f)?;
    let u = sigma_fraction(ctx, &f, &a.u, a.u_m, &a.u_sos)?;
    let v = sigma_fraction(ctx, &f, &a.v, a.v_m, &a.v_sos)?;
    let eq = sigma_eq(&u, &v)?;
    Ok(Reply::ok(format!("equal={eq}\n"), json!({"equal": eq})))
}

fn cmd_explore(ctx: &Ctx, a: &ExploreArgs, seed: u64) -> CliResult<Reply> {
    if a.min_degree > a.max_degree {
        return Err(CliError::Usage("--min-degree exceeds --max-degree".into()));
    }
    let config = ExploreConfig {
        min_degree: a.min_degree,
        max_degree: a.max_degree,
        rings: a.rings,
        trials: a.trials,
        bounds: ctx.bounds.clone(),
    };
    let report = explore_question(&config, seed)?;
    let value = serde_json::to_value(&report).expect("serializable");
    Ok(Reply::ok(report.to_string(), value))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut argv = vec!["realspec"];
        argv.extend_from_slice(args);
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn real_radical_example() {
        let (code, out, _) = call(&["real-radical", "--ring", "Q[x]", "x^2*(x^2+1)"]);
        assert_eq!((code, out.as_str()), (0, "x\n"));
    }

    #[test]
    fn classify_example() {
        let (code, out, _) = call(&["classify", "--ring", "Q[x]/(x^2)"]);
        assert_eq!((code, out.as_str()), (0, "real=false semireal=true\n"));
    }

    #[test]
    fn glue_example() {
        let (code, out, _) = call(&[
            "section", "glue", "--ring", "Q[x]/(x^2-x)", "--f", "1", "--patch", "x:x", "--patch",
            "x-1:0",
        ]);
        assert_eq!(code, 0);
        assert!(out.starts_with("x / 1\n"));
        assert!(out.contains("coeffs = [1, -1]"));
    }

    #[test]
    fn parse_errors_exit_2() {
        let (code, _, err) = call(&["factor", "x^^2"]);
        assert_eq!(code, 2);
        assert!(err.contains("column 3"));
        let (code, _, _) = call(&["nonsense"]);
        assert_eq!(code, 2);
    }

    #[test]
    fn precondition_errors_exit_3() {
        let (code, _, err) = call(&["subcover", "--f", "1", "x"]);
        assert_eq!(code, 3);
        assert!(err.contains("cover"));
        let (code, _, _) = call(&["classify", "--ring", "Q[x]/(2*x)"]);
        assert_eq!(code, 3);
    }
}
