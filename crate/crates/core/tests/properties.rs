use grothendieck::graphs::{walk_sum, Direction, FilteredGraph, GraphKind, Param};
use grothendieck::identities::{verify, BetaSpec, IdentityName, IdentitySpec};
use grothendieck::module::ModuleElement;
use grothendieck::partition::{
    horizontal_strips_over, partitions_up_to, rook_strip_removals, DoubleSlashShape, SkewShape,
};
use grothendieck::poly::{cauchy_kernel, Subst};
use grothendieck::schur_ops::{apply_product, apply_series, OpContext, SeriesOperator};
use grothendieck::symfun::{Evaluator, Kind, Route, SymFunId};
use grothendieck::tableau::{count_isvt, count_it, count_st};
use grothendieck::{Cap, Int, Monomial, Partition, Poly, Ring, RingRef};
use proptest::prelude::*;

fn partition(max_weight: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=max_weight.max(1), 0..=max_weight).prop_filter_map("too heavy", move |mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        let p = Partition::new(v).ok()?;
        (p.weight() <= max_weight).then_some(p)
    })
}

fn nested(max_weight: usize) -> impl Strategy<Value = (Partition, Partition)> {
    partition(max_weight).prop_flat_map(|lam| {
        let subs = lam.subdiagrams();
        (Just(lam), prop::sample::select(subs))
    })
}

fn xy_ring(cap: u32) -> RingRef {
    Ring::builder()
        .scalar("b", Cap::Finite(6))
        .indexed("x", 1, Cap::Finite(cap))
        .indexed("y", 1, Cap::Finite(cap))
        .build()
        .unwrap()
}

fn poly_in(ring: &RingRef) -> impl Strategy<Value = Poly> {
    let ring = ring.clone();
    let n = ring.nvars();
    prop::collection::vec((prop::collection::vec(0u32..3, n), -5i64..=5), 0..6).prop_map(move |terms| {
        Poly::from_terms(
            &ring,
            terms.into_iter().map(|(e, c)| {
                let powers: Vec<_> = e.iter().enumerate().map(|(i, &k)| (ring.var_at(i), k)).collect();
                (Monomial::from_powers(&powers), Int::from(c))
            }),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_is_an_involution(p in partition(12)) {
        prop_assert_eq!(p.conjugate().conjugate(), p);
    }

    #[test]
    fn corners_are_distinct_parts(p in partition(12)) {
        let mut distinct = p.parts().to_vec();
        distinct.dedup();
        prop_assert_eq!(p.corner_count(), distinct.len());
    }

    #[test]
    fn strips_swap_under_conjugation((lam, mu) in nested(8)) {
        let s = SkewShape::new(lam.clone(), mu.clone()).unwrap();
        prop_assert_eq!(s.is_horizontal_strip(), s.conjugate().is_vertical_strip());
        prop_assert_eq!(s.is_vertical_strip(), s.conjugate().is_horizontal_strip());
    }

    #[test]
    fn moebius_inversion_on_random_values(lam in partition(8), seed in any::<u64>()) {
        // g is arbitrary; f(λ) = Σ_{μ⊆λ} g(μ); g is recovered with rook-strip signs
        let g = |p: &Partition| {
            let mut h = seed ^ 0x9e37_79b9_7f4a_7c15;
            for &x in p.parts() {
                h = h.wrapping_mul(6364136223846793005).wrapping_add(x as u64 + 1);
            }
            (h >> 40) as i64 % 100
        };
        let f = |p: &Partition| p.subdiagrams().iter().map(g).sum::<i64>();
        let back: i64 = rook_strip_removals(&lam)
            .iter()
            .map(|mu| {
                let k = lam.weight() - mu.weight();
                if k % 2 == 0 { f(mu) } else { -f(mu) }
            })
            .sum();
        prop_assert_eq!(back, g(&lam));
    }

    #[test]
    fn ring_axioms(a in poly_in(&xy_ring(4)), b in poly_in(&xy_ring(4)), c in poly_in(&xy_ring(4))) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn specialization_is_a_ring_map(a in poly_in(&unbounded_b()), b in poly_in(&unbounded_b()), s in 0usize..3) {
        let ring = a.ring().clone();
        let beta = ring.scalar("b").unwrap();
        let sub = [(beta, [Subst::Zero, Subst::One, Subst::MinusOne][s])];
        prop_assert_eq!((&a + &b).specialize(&sub), &a.specialize(&sub) + &b.specialize(&sub));
        prop_assert_eq!((&a * &b).specialize(&sub), &a.specialize(&sub) * &b.specialize(&sub));
    }
}

fn unbounded_b() -> RingRef {
    Ring::builder()
        .scalar("b", Cap::Unbounded)
        .indexed("x", 2, Cap::Finite(6))
        .build()
        .unwrap()
}

#[test]
fn staircase_subdiagrams_match_containment_count() {
    for n in 0..=6 {
        let stair = Partition::staircase(n);
        let brute = partitions_up_to(stair.weight()).iter().filter(|p| stair.contains(p)).count() as u64;
        assert_eq!(stair.subdiagram_count(), brute, "n={n}");
    }
}

fn series_ctx() -> (OpContext, grothendieck::Var, grothendieck::Var) {
    let r = xy_ring(3);
    let ctx = OpContext::with_default_beta(&r).unwrap();
    let x = r.var("x", 1).unwrap();
    let y = r.var("y", 1).unwrap();
    (ctx, x, y)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn series_commute(lam in partition(5)) {
        let (ctx, x, y) = series_ctx();
        let v = ModuleElement::basis(&ctx.ring, lam);
        for (s, t) in [(SeriesOperator::a(x), SeriesOperator::a(y)), (SeriesOperator::b(x), SeriesOperator::b(y))] {
            let st = apply_product(&ctx, &[s, t], &v).unwrap();
            let ts = apply_product(&ctx, &[t, s], &v).unwrap();
            prop_assert_eq!(st, ts);
        }
    }

    #[test]
    fn cauchy_commutation(lam in partition(5)) {
        let (ctx, x, y) = series_ctx();
        let v = ModuleElement::basis(&ctx.ring, lam);
        let lhs = apply_product(&ctx, &[SeriesOperator::b(y), SeriesOperator::a(x)], &v).unwrap();
        let rhs = apply_product(&ctx, &[SeriesOperator::a(x), SeriesOperator::b(y)], &v).unwrap();
        let k = cauchy_kernel(&ctx.ring, &[x], &[y]).unwrap();
        prop_assert_eq!(lhs, rhs.scale_poly(&k));
    }

    #[test]
    fn bar_series_invert(lam in partition(5)) {
        let (ctx, x, _) = series_ctx();
        let ai = x.alphabet();
        let v = ModuleElement::basis(&ctx.ring, lam);
        let negate = |m: ModuleElement| {
            ModuleElement::from_terms(&ctx.ring, m.into_terms().into_iter().map(|(l, p)| (l, p.negate_alphabet(ai))))
        };
        let abar = negate(apply_series(&ctx, SeriesOperator::abar(x), &v).unwrap());
        prop_assert_eq!(apply_series(&ctx, SeriesOperator::a(x), &abar).unwrap(), v.clone());
        let bbar = negate(apply_series(&ctx, SeriesOperator::bbar(x), &v).unwrap());
        prop_assert_eq!(apply_series(&ctx, SeriesOperator::b(x), &bbar).unwrap(), v);
    }

    #[test]
    fn single_variable_closed_forms(lam in partition(5)) {
        let (ctx, x, _) = series_ctx();
        let r = &ctx.ring;
        let (xp, bp) = (Poly::var(r, x), Poly::var(r, ctx.beta));
        let one_minus = &Poly::one(r) - &(&bp * &xp);
        let v = ModuleElement::basis(r, lam.clone());

        let mut want = ModuleElement::zero(r);
        for nu in horizontal_strips_over(&lam, 3) {
            let a = DoubleSlashShape::new(nu.clone(), lam.clone()).unwrap().open_box_count();
            let c = &one_minus.pow(a as u32) * &xp.pow((nu.weight() - lam.weight()) as u32);
            want.add_term(nu, c);
        }
        prop_assert_eq!(apply_series(&ctx, SeriesOperator::a(x), &v).unwrap(), want);

        let mut want = ModuleElement::zero(r);
        for mu in lam.subdiagrams() {
            let s = SkewShape::new(lam.clone(), mu.clone()).unwrap();
            let c = s.column_count();
            want.add_term(mu, &bp.pow((s.size() - c) as u32) * &xp.pow(c as u32));
        }
        prop_assert_eq!(apply_series(&ctx, SeriesOperator::b(x), &v).unwrap(), want);
    }

    #[test]
    fn walks_count_tableaux((lam, mu) in nested(5), m in 0usize..4) {
        let beta_y = FilteredGraph::build(GraphKind::BetaY, Param::Int(1), Param::Formal, 6);
        let moebius_y = FilteredGraph::build(GraphKind::MoebiusY, Param::Formal, Param::Formal, 6);
        let sk = SkewShape::new(lam.clone(), mu.clone()).unwrap();
        let ds = DoubleSlashShape::new(lam.clone(), mu.clone()).unwrap();
        let int = |p: Poly| i64::try_from(p.constant_term()).unwrap();

        let signed = int(walk_sum(&beta_y, &mu, &lam, m, Direction::Up).unwrap());
        let isvt = count_isvt(&ds, m).unwrap() as i64;
        let sign = if (m + sk.size()) % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(signed, sign * isvt);

        let down = int(walk_sum(&beta_y, &lam, &mu, m, Direction::Down).unwrap());
        prop_assert_eq!(down, count_st(&sk, m).unwrap() as i64);

        let down = int(walk_sum(&moebius_y, &lam, &mu, m, Direction::Down).unwrap());
        prop_assert_eq!(down, count_it(&sk, m).unwrap() as i64);
    }
}

#[test]
fn beta_zero_graph_is_young_lattice() {
    let g = FilteredGraph::build(GraphKind::BetaY, Param::Int(0), Param::Formal, 6);
    for (from, to, w) in g.up.entries() {
        assert_eq!(to.weight(), from.weight() + 1);
        assert_eq!(w, Poly::one(&g.ring));
    }
    for (from, to, w) in g.down.entries() {
        assert_eq!(to.weight() + 1, from.weight());
        assert_eq!(w, Poly::one(&g.ring));
    }
}

fn eval_ring(n: usize) -> RingRef {
    Ring::builder()
        .scalar("b", Cap::Finite(5))
        .indexed("x", n, Cap::Finite(5))
        .build()
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn branching_splits_the_alphabet((lam, mu) in nested(5)) {
        let ring = eval_ring(3);
        let xs = ring.vars("x").unwrap();
        let b = ring.scalar("b").unwrap();
        let all = Evaluator::new(&ring, &xs, b);
        let first = Evaluator::new(&ring, &xs[..1], b);
        let rest = Evaluator::new(&ring, &xs[1..], b);
        let between: Vec<Partition> = lam.subdiagrams().into_iter().filter(|n| n.contains(&mu)).collect();
        for kind in [Kind::G, Kind::Gd] {
            let mut sum = Poly::zero(&ring);
            for nu in &between {
                sum += &(&first.family(kind, nu, &mu).unwrap() * &rest.family(kind, &lam, nu).unwrap());
            }
            prop_assert_eq!(all.family(kind, &lam, &mu).unwrap(), sum, "{:?} {} {}", kind, lam, mu);
        }
    }

    #[test]
    fn beta_zero_collapses_to_schur((lam, mu) in nested(5)) {
        let ring = eval_ring(3);
        let ev = Evaluator::for_alphabet(&ring, "x").unwrap();
        let b = ring.scalar("b").unwrap();
        let zero = |p: Poly| p.specialize(&[(b, Subst::Zero)]);
        // G and g become s_{λ/μ}; J and j are their ω-images, s_{λ'/μ'}
        let sk = SkewShape::new(lam.clone(), mu.clone()).unwrap();
        let s = ev.evaluate(&SymFunId::S(sk.clone()), Route::Tableaux).unwrap();
        let sc = ev.evaluate(&SymFunId::S(sk.conjugate()), Route::Tableaux).unwrap();
        for (kind, want) in [(Kind::G, &s), (Kind::Gd, &s), (Kind::J, &sc), (Kind::Jd, &sc)] {
            prop_assert_eq!(&zero(ev.family(kind, &lam, &mu).unwrap()), want, "{:?} {} {}", kind, lam, mu);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn larger_caps_keep_identities((mu, nu) in nested(3), which in 0usize..6) {
        let name = [
            IdentityName::SkewCauchy,
            IdentityName::DualSkewCauchyJj,
            IdentityName::SkewPieriG1k,
            IdentityName::DualSkewPieriGk,
            IdentityName::SkewPieriType2,
            IdentityName::PieriType1,
        ][which];
        for caps in [(4, 4, 5), (5, 4, 5), (4, 5, 5), (4, 4, 6)] {
            let spec = IdentitySpec::new(name).mu(mu.clone()).nu(nu.clone()).k(2).caps(caps.0, caps.1, caps.2);
            let r = verify(&spec).unwrap();
            prop_assert!(r.passed(), "{}", r);
        }
    }

    #[test]
    fn beta_zero_identities_are_classical((mu, nu) in nested(3)) {
        for name in [IdentityName::SkewCauchy, IdentityName::SkewPieriG1k, IdentityName::DualSkewCauchyJg] {
            let spec = IdentitySpec::new(name).mu(mu.clone()).nu(nu.clone()).k(2).beta(BetaSpec::Zero);
            let r = verify(&spec).unwrap();
            prop_assert!(r.passed(), "{}", r);
        }
    }
}

#[test]
fn frobenius_sum_of_squares() {
    let mut fact = 1u64;
    for n in 0..=6u64 {
        if n > 0 {
            fact *= n;
        }
        let total: u64 = grothendieck::partition::partitions_of(n as usize)
            .iter()
            .map(|l| grothendieck::tableau::count_syt(&SkewShape::straight(l.clone())).unwrap().pow(2))
            .sum();
        assert_eq!(total, fact, "n={n}");
    }
}
