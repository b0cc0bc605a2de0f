//! Values computed by hand or by an independent method, frozen here.

mod common;

use common::{bisection_real_roots, p};
use realspec::poly::{bezout_many, int, rat, Poly};
use realspec::ring::{
    annihilator, classify, find_certificate, real_radical, real_radical_member,
    verify_certificate, CertificateOutcome, Ideal, Ring, SearchBounds,
};
use realspec::spectrum::{
    closed_intersect, closed_subset, closed_union, cover_check, enumerate_primes,
    finite_subcover, v_of, SubcoverOutcome,
};

fn q(m: &[i64]) -> Ring {
    Ring::quotient(p(m)).unwrap()
}

#[test]
fn division_by_hand() {
    let (quo, r) = p(&[0, 0, 0, 1]).divrem(&p(&[1, 0, 1])).unwrap();
    assert_eq!((quo.clone(), r.clone()), (p(&[0, 1]), p(&[0, -1])));
    assert_eq!(&(&quo * &p(&[1, 0, 1])) + &r, p(&[0, 0, 0, 1]));
}

#[test]
fn euclid_by_hand() {
    let g = p(&[-1, 0, 1]).gcd(&p(&[1, -2, 1])).unwrap();
    assert_eq!(g, p(&[-1, 1]));
    assert_eq!(p(&[-1, 1]).gcd(&p(&[1, 1])).unwrap(), Poly::one());
}

#[test]
fn bezout_by_hand() {
    let (g, cs) = bezout_many(&[p(&[-1, 1]), p(&[1, 1])]).unwrap();
    assert_eq!(g, Poly::one());
    assert_eq!(cs, vec![Poly::constant(rat(-1, 2)), Poly::constant(rat(1, 2))]);
    let (g, cs) = bezout_many(&[p(&[0, 0, 1]), p(&[0, 0, 0, 1])]).unwrap();
    assert_eq!((g, cs), (p(&[0, 0, 1]), vec![Poly::one(), Poly::zero()]));
}

#[test]
fn squarefree_by_refactoring() {
    // (x-1)^2 (x+2) -> (x-1)(x+2)
    let a = &p(&[-1, 1]).pow(2) * &p(&[2, 1]);
    assert_eq!(a.squarefree_part().unwrap(), p(&[-2, 1, 1]));
}

#[test]
fn factorization_by_expansion() {
    let fz = p(&[-1, 0, 0, 0, 1]).factor().unwrap();
    let factors: Vec<Poly> = fz.factors.iter().map(|(f, _)| f.clone()).collect();
    assert_eq!(factors, vec![p(&[-1, 1]), p(&[1, 1]), p(&[1, 0, 1])]);
    assert_eq!(fz.expand(), p(&[-1, 0, 0, 0, 1]));
    let fz = p(&[-2, 0, 1]).factor().unwrap();
    assert_eq!(fz.factors, vec![(p(&[-2, 0, 1]), 1)]);
    let fz = p(&[6]).factor().unwrap();
    assert_eq!((fz.unit, fz.factors.len()), (int(6), 0));
}

#[test]
fn root_counts_match_bisection() {
    for (c, n) in [(&[-2, 0, 1][..], 2), (&[1, 0, 1], 0), (&[0, -1, 0, 1], 3)] {
        assert_eq!(p(c).count_real_roots().unwrap(), n);
        assert_eq!(bisection_real_roots(&p(c)), n);
    }
}

#[test]
fn real_parts() {
    assert_eq!(p(&[0, 0, 1, 0, 1]).real_part().unwrap(), Poly::x());
    assert_eq!(p(&[1, 0, 1]).real_part().unwrap(), Poly::one());
    assert_eq!(p(&[-1, 0, 1]).real_part().unwrap(), p(&[-1, 0, 1]));
}

#[test]
fn ring_classification() {
    assert_eq!(classify(&q(&[0, -1, 1])), (true, true));
    assert_eq!(classify(&q(&[0, 0, 1])), (false, true));
    assert_eq!(classify(&q(&[1, 0, 1])), (false, false));
    assert_eq!(classify(&q(&[-2, 1, 1])), (true, true));
    assert_eq!(classify(&q(&[0, 0, -1, 1])), (false, true));
    // x^2 + 1 = 0 in Q[x]/(x^2+1), so -1 = x^2 is a square
    let r = q(&[1, 0, 1]);
    assert!((&r.elem(Poly::x()).square() + &r.one()).is_zero());
}

#[test]
fn annihilators() {
    let r = q(&[0, 0, 1]);
    assert_eq!(annihilator(&r.elem(Poly::x())).gen(), &Poly::x());
    assert_eq!(annihilator(&Ring::base().elem(p(&[-3, 1]))).gen(), &Poly::zero());
    let r = q(&[0, -1, 1]);
    let ann = annihilator(&r.elem(Poly::x()));
    assert_eq!(ann.gen(), &p(&[-1, 1]));
    assert!((&r.elem(Poly::x()) * &ann.gen_elem()).is_zero());
}

#[test]
fn real_radicals() {
    let b = Ring::base();
    assert_eq!(real_radical(&Ideal::from_poly(&b, &p(&[0, 0, 1]))).gen(), &Poly::x());
    assert!(real_radical(&Ideal::from_poly(&b, &p(&[1, 0, 1]))).is_unit());
    assert_eq!(real_radical(&Ideal::zero(&q(&[0, 0, 1]))).gen(), &Poly::x());
    let i = Ideal::from_poly(&b, &p(&[0, 0, 1, 0, 1]));
    assert!(real_radical_member(&i, &b.elem(Poly::x())).unwrap());
    let i = Ideal::from_poly(&b, &p(&[-1, 0, 1]));
    assert!(!real_radical_member(&i, &b.elem(Poly::x())).unwrap());
}

#[test]
fn certificates_by_expansion() {
    let b = Ring::base();
    let bounds = SearchBounds::default();
    let i = Ideal::from_poly(&b, &p(&[1, 0, 1]));
    let c = find_certificate(&i, &b.one(), &bounds).unwrap();
    let c = c.certificate().expect("found").clone();
    assert_eq!((c.m, c.cofactor.rep()), (1, &Poly::one()));
    assert_eq!(c.sos.terms().iter().map(|t| t.rep().clone()).collect::<Vec<_>>(), vec![Poly::x()]);
    assert!(verify_certificate(&c).unwrap());
    let mut broken = c.clone();
    broken.cofactor = b.elem(p(&[2]));
    assert!(!verify_certificate(&broken).unwrap());

    let i = Ideal::from_poly(&b, &p(&[0, 0, 1]));
    let c = find_certificate(&i, &b.elem(Poly::x()), &bounds).unwrap();
    let c = c.certificate().expect("fast path").clone();
    assert!(c.sos.is_empty() && c.m == 1 && c.cofactor.rep().is_one());

    let i = Ideal::from_poly(&b, &p(&[-1, 0, 1]));
    assert_eq!(
        find_certificate(&i, &b.elem(Poly::x()), &bounds).unwrap(),
        CertificateOutcome::NotMember
    );
}

#[test]
fn closed_set_algebra() {
    let b = Ring::base();
    let v = |c: &[i64]| v_of(&Ideal::from_poly(&b, &p(c)));
    assert!(v(&[1, 0, 1]).is_empty());
    assert_eq!(closed_union(&v(&[-1, 1]), &v(&[1, 1])).unwrap(), v(&[-1, 0, 1]));
    assert_eq!(closed_intersect(&[v(&[-1, 0, 1]), v(&[0, -1, 1])]).unwrap(), v(&[-1, 1]));
    assert!(closed_intersect(&[v(&[-1, 1]), v(&[1, 1])]).unwrap().is_empty());
    assert!(!closed_subset(&v(&[-1, 0, 1]), &v(&[-1, 1])).unwrap());
    assert!(closed_subset(&v(&[-1, 1]), &v(&[-1, 0, 1])).unwrap());
}

#[test]
fn spectra() {
    let gens = |m: &[i64]| {
        enumerate_primes(&q(m))
            .unwrap()
            .iter()
            .map(|pr| pr.gen().unwrap().clone())
            .collect::<Vec<_>>()
    };
    assert_eq!(gens(&[0, -1, 1]), vec![p(&[-1, 1]), Poly::x()]);
    assert!(gens(&[1, 0, 1]).is_empty());
    assert_eq!(gens(&[0, 0, 1]), vec![Poly::x()]);
}

#[test]
fn covers() {
    let b = Ring::base();
    let e = |c: &[i64]| b.elem(p(c));
    assert!(cover_check(&e(&[-1, 0, 1]), &[e(&[-1, 1]), e(&[1, 1])]).unwrap());
    assert!(cover_check(&e(&[0, 1]), &[e(&[0, 0, 1])]).unwrap());
    assert!(cover_check(&e(&[-1, 0, 1]), &[e(&[-1, 1, -1, 1])]).unwrap());
    assert!(!cover_check(&e(&[-1, 0, 1]), &[e(&[2, 1])]).unwrap());

    let (idx, out) =
        finite_subcover(&e(&[-1, 0, 1]), &[e(&[-1, 1]), e(&[1, 1]), e(&[0, 1])], &SearchBounds::default())
            .unwrap();
    assert_eq!(idx, vec![0, 1]);
    assert!(matches!(out, SubcoverOutcome::Found(_)));

    let r = q(&[0, -1, 1]);
    let (idx, out) = finite_subcover(
        &r.one(),
        &[r.elem(Poly::x()), r.elem(p(&[-1, 1]))],
        &SearchBounds::default(),
    )
    .unwrap();
    assert_eq!(idx, vec![0, 1]);
    let SubcoverOutcome::Found(c) = out else { panic!("no certificate") };
    assert_eq!(c.coeffs, vec![r.one(), r.elem(p(&[-1]))]);
}
