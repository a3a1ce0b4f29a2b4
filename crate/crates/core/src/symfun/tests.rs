use super::*;
use crate::partition::partitions_up_to;
use crate::poly::{Cap, Ring};

fn ring(n: usize, xcap: u32, bcap: u32) -> RingRef {
    Ring::builder()
        .scalar("b", Cap::Finite(bcap))
        .indexed("x", n, Cap::Finite(xcap))
        .build()
        .unwrap()
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn single_box_in_elementary_functions() {
    let r = ring(3, 3, 3);
    let g = evaluate(&SymFunId::parse("G", "1").unwrap(), &r, Route::Operator).unwrap();
    let e = |k| evaluate(&SymFunId::E(k), &r, Route::Tableaux).unwrap();
    let b = Poly::var(&r, r.scalar("b").unwrap());
    let want = e(1) - &b * &e(2) + &(&b * &b) * &e(3);
    assert_eq!(g, want);
    let gd = evaluate(&SymFunId::parse("g", "1").unwrap(), &r, Route::Operator).unwrap();
    assert_eq!(gd.to_string(), "x1 + x2 + x3");
}

#[test]
fn routes_agree_small() {
    let r = ring(2, 4, 4);
    let ev = Evaluator::for_alphabet(&r, "x").unwrap();
    for lam in partitions_up_to(4) {
        for mu in lam.subdiagrams() {
            let ext = DoubleSlashShape::new(lam.clone(), mu.clone()).unwrap();
            let sk = SkewShape::new(lam.clone(), mu.clone()).unwrap();
            for id in [
                SymFunId::G(ext.clone()),
                SymFunId::GSkew(sk.clone()),
                SymFunId::Gd(sk.clone()),
                SymFunId::J(ext),
                SymFunId::Jd(sk.clone()),
                SymFunId::S(sk),
            ] {
                let a = ev.evaluate(&id, Route::Operator).unwrap();
                let b = ev.evaluate(&id, Route::Tableaux).unwrap();
                assert_eq!(a, b, "{id}");
            }
        }
    }
}

#[test]
fn beta_zero_gives_schur() {
    let r = ring(3, 4, 4);
    let ev = Evaluator::for_alphabet(&r, "x").unwrap();
    let b = r.scalar("b").unwrap();
    for lam in partitions_up_to(4) {
        let g = ev.family(Kind::G, &lam, &Partition::empty()).unwrap();
        let s = schur_polynomial(&SkewShape::straight(lam.clone()), &r, ev.vars()).unwrap();
        assert_eq!(g.specialize(&[(b, Subst::Zero)]), s, "{lam}");
    }
}

#[test]
fn schur_expansion_examples() {
    let r = ring(2, 2, 1);
    let ai = r.alphabet_index("x").unwrap();
    let f = Poly::parse(&r, "x1*x2").unwrap();
    assert_eq!(schur_expand(&f, ai).unwrap().to_string(), "s[1,1]");
    let f = Poly::parse(&r, "x1").unwrap();
    assert!(matches!(schur_expand(&f, ai), Err(Error::NotSymmetric { .. })));

    let r = ring(3, 3, 3);
    let ai = r.alphabet_index("x").unwrap();
    let g = evaluate(&SymFunId::parse("G", "1").unwrap(), &r, Route::Operator).unwrap();
    assert_eq!(schur_expand(&g, ai).unwrap().to_string(), "s[1] + (-b)*s[1,1] + (b^2)*s[1,1,1]");
    let xs = r.vars("x").unwrap();
    let s2 = schur_polynomial(&"2".parse().unwrap(), &r, &xs).unwrap();
    let s1 = schur_polynomial(&"1".parse().unwrap(), &r, &xs).unwrap();
    assert_eq!(schur_expand(&(&s2 * &s1), ai).unwrap().to_string(), "s[3] + s[2,1]");
    let f = Poly::parse(&r, "2*x1*x2*x3 + x1^2*x2 + x1*x2^2 + x1^2*x3 + x1*x3^2 + x2^2*x3 + x2*x3^2")
        .unwrap();
    // too many boxes for two variables is rejected
    let r2 = ring(2, 4, 1);
    let h = Poly::parse(&r2, "x1^3 + x2^3").unwrap();
    assert!(matches!(
        schur_expand(&h, r2.alphabet_index("x").unwrap()),
        Err(Error::NotFaithful { .. })
    ));
    assert_eq!(schur_expand(&f, ai).unwrap().to_string(), "s[2,1]");
}

#[test]
fn omega_small() {
    let r = ring(3, 3, 3);
    let ai = r.alphabet_index("x").unwrap();
    let ev = Evaluator::for_alphabet(&r, "x").unwrap();
    for lam in partitions_up_to(3) {
        for mu in lam.subdiagrams() {
            let g = schur_expand(&ev.family(Kind::G, &lam, &mu).unwrap(), ai).unwrap();
            let j = schur_expand(&ev.family(Kind::J, &lam, &mu).unwrap(), ai).unwrap();
            assert_eq!(omega(&g).unwrap(), j, "{lam}//{mu}");
            assert_eq!(omega(&omega(&g).unwrap()).unwrap(), g);
        }
    }
}

#[test]
fn pure_skew_inversion() {
    let r = ring(2, 4, 4);
    let ev = Evaluator::for_alphabet(&r, "x").unwrap();
    assert_eq!(
        ev.pure_skew_g(&p("2,1"), &Partition::empty()).unwrap(),
        ev.family(Kind::G, &p("2,1"), &Partition::empty()).unwrap()
    );
    for lam in partitions_up_to(5) {
        for nu in lam.subdiagrams() {
            let direct = ev.family(Kind::G, &lam, &nu).unwrap();
            assert_eq!(ev.extended_from_pure_skew(&lam, &nu).unwrap(), direct, "{lam}//{nu}");
        }
    }
}

#[test]
fn peeling_small_products() {
    let r = ring(4, 4, 4);
    let ev = Evaluator::for_alphabet(&r, "x").unwrap();
    let ai = r.alphabet_index("x").unwrap();
    let g1 = ev.family(Kind::G, &p("1"), &Partition::empty()).unwrap();
    let e = basis_expand(&g1, &ev, Kind::G).unwrap();
    assert_eq!(e.expansion.to_string(), "G[1]");
    let e = basis_expand(&(&g1 * &g1), &ev, Kind::G).unwrap();
    assert!(e.residual.is_zero());
    assert_eq!(e.expansion.to_string(), "G[2] + G[1,1] + (-b)*G[2,1]");
    // reassemble the full product from the expansion
    let mut back = Poly::zero(&r);
    for (lam, c) in e.expansion.terms.iter() {
        back += &(c * &ev.family(Kind::G, lam, &Partition::empty()).unwrap());
    }
    assert_eq!(back, &g1 * &g1);

    let d1 = ev.family(Kind::Gd, &p("1"), &Partition::empty()).unwrap();
    let e = basis_expand(&(&d1 * &d1), &ev, Kind::Gd).unwrap();
    assert!(e.residual.is_zero());
    let mut back = Poly::zero(&r);
    for (lam, c) in e.expansion.terms.iter() {
        back += &(c * &ev.family(Kind::Gd, lam, &Partition::empty()).unwrap());
    }
    assert_eq!(schur::dominant_part(&back, ai), schur::dominant_part(&(&d1 * &d1), ai));
}

#[test]
fn damping_and_witness() {
    let r = ring(1, 3, 3);
    let ev = Evaluator::for_alphabet(&r, "x").unwrap();
    assert!(ev.family(Kind::Jd, &p("3"), &Partition::empty()).unwrap().is_zero());
    let r2 = ring(2, 3, 3);
    let ev2 = Evaluator::for_alphabet(&r2, "x").unwrap();
    assert!(!ev2.family(Kind::Jd, &p("3"), &p("1")).unwrap().is_zero());
    assert!(damping_check(DampingFamily::J, 2, 5).unwrap().passed());
    let w = damping_check(DampingFamily::G, 1, 4).unwrap();
    assert!(w.passed(), "{w}");
    assert_eq!(
        ev.family(Kind::Gd, &p("1,1,1"), &Partition::empty()).unwrap().to_string(),
        "b^2*x1"
    );
}

#[test]
fn orthogonality_and_conjugation_small() {
    let o = orthogonality_check(3, 2, 3).unwrap();
    assert!(o.passed(), "{o}");
    let t = tau_check(3, 3, 3).unwrap();
    assert!(t.passed(), "{t}");
}
