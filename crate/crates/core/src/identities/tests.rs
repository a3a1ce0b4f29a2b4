use super::*;

fn p(s: &str) -> Partition {
    if s.is_empty() {
        return Partition::empty();
    }
    s.parse().unwrap()
}

fn ok(spec: IdentitySpec) {
    let r = verify(&spec).unwrap();
    assert!(r.passed(), "{r}\n{r:?}");
}

#[test]
fn cauchy_family_small() {
    for name in [
        IdentityName::SkewCauchy,
        IdentityName::DualSkewCauchyJg,
        IdentityName::DualSkewCauchyGj,
        IdentityName::DualSkewCauchyJj,
    ] {
        for (mu, nu) in [("", ""), ("2", "1,1"), ("1", "2")] {
            ok(IdentitySpec::new(name).mu(p(mu)).nu(p(nu)).caps(3, 3, 4));
        }
    }
    ok(IdentitySpec::new(IdentityName::Cauchy).caps(3, 3, 4));
    ok(IdentitySpec::new(IdentityName::PieriType1).nu(p("2,1")).caps(3, 3, 4));
    ok(IdentitySpec::new(IdentityName::PieriType2).mu(p("1,1")).caps(3, 3, 4));
}

#[test]
fn specializations_small() {
    ok(IdentitySpec::new(IdentityName::SpecializationY1).mu(p("2,1")).caps(3, 3, 4));
    ok(IdentitySpec::new(IdentityName::SpecializationY1).mu(p("2,1")).caps(3, 3, 4).beta(BetaSpec::One));
    ok(IdentitySpec::new(IdentityName::SpecializationYq).mu(p("1")).nu(p("1")).caps(3, 2, 4));
    ok(IdentitySpec::new(IdentityName::SpecializationDcount).caps(4, 2, 4));
    ok(IdentitySpec::new(IdentityName::SpecializationCatalan).mu(p("2,1")).caps(3, 2, 4));
    ok(IdentitySpec::new(IdentityName::SpecializationPureskew).mu(p("2")).caps(3, 3, 4));
}

#[test]
fn catalan_reports_staircase() {
    let r = verify(&IdentitySpec::new(IdentityName::SpecializationCatalan).mu(p("1")).caps(3, 2, 4)).unwrap();
    assert!(r.passed(), "{r}\n{r:?}");
    assert!(r.notes.iter().any(|n| n.contains("= 2 = C_2")), "{r:?}");
}

#[test]
fn beta_one_identities_reject_formal_beta() {
    let r = verify(&IdentitySpec::new(IdentityName::SpecializationDcount).beta(BetaSpec::Formal));
    assert!(matches!(r, Err(Error::InvalidSpec(_))));
}

#[test]
fn skew_pieri_small() {
    for name in [
        IdentityName::SkewPieriG1k,
        IdentityName::SkewPieriGdk,
        IdentityName::DualSkewPieriGk,
        IdentityName::DualSkewPieriGd1k,
    ] {
        for k in 1..=2 {
            for (mu, nu) in [("2,1", "1"), ("2", ""), ("1,1", "1")] {
                ok(IdentitySpec::new(name).mu(p(mu)).nu(p(nu)).k(k).caps(3, 3, 4));
            }
        }
    }
}

#[test]
fn simple_and_schur_rules() {
    for (mu, nu) in [("", ""), ("2,1", "1"), ("2,2", "1")] {
        ok(IdentitySpec::new(IdentityName::SimpleSkewPieri).mu(p(mu)).nu(p(nu)).caps(3, 2, 4));
        ok(IdentitySpec::new(IdentityName::SchurSkewPieri).mu(p(mu)).nu(p(nu)).k(2).vars(3, 1).caps(4, 1, 1));
    }
}

#[test]
fn mixed_sums_small() {
    for name in [
        IdentityName::SkewPieriType1,
        IdentityName::SkewPieriType2,
        IdentityName::SkewPieriType3,
        IdentityName::SkewPieriType4,
    ] {
        for (mu, nu) in [("1", ""), ("2", "1"), ("1", "1,1")] {
            ok(IdentitySpec::new(name).mu(p(mu)).nu(p(nu)).caps(3, 3, 4));
        }
    }
}

#[test]
fn corollaries_small() {
    for k in 1..=2 {
        for (mu, nu) in [("1", ""), ("2,1", "1")] {
            ok(IdentitySpec::new(IdentityName::SingleVarCorollaries).mu(p(mu)).nu(p(nu)).k(k).caps(3, 3, 4));
        }
    }
    ok(IdentitySpec::new(IdentityName::Orthogonality).mu(p("2,1")).nu(p("1")).caps(3, 2, 4));
    ok(IdentitySpec::new(IdentityName::Orthogonality).mu(p("2")).nu(p("2")).caps(3, 2, 4));
    ok(IdentitySpec::new(IdentityName::JColumnGenerating).vars(2, 1).caps(4, 4, 4));
}

#[test]
fn coefficient_values() {
    use crate::poly::{Cap, Ring};
    let c = pieri_coefficient(PieriKind::W, &p("2,1"), &p("2,1"), &p("1"), &p("1"), 1);
    assert!(c.is_zero());
    let c = pieri_coefficient(PieriKind::W, &p("2,1,1"), &p("2,1"), &p("1"), &p("1"), 1);
    assert_eq!(c.to_string(), "1");
    let c = pieri_coefficient(PieriKind::Wd, &p("2,1"), &p("2,1"), &p("1"), &p("1"), 1);
    assert_eq!(c.to_string(), "-1*b");
    let ring = Ring::builder().scalar("b", Cap::Unbounded).scalar("y", Cap::Unbounded).build().unwrap();
    let (b, y) = (ring.scalar("b").unwrap(), ring.scalar("y").unwrap());
    let f = Poly::parse(&ring, "y^2").unwrap();
    let co = y_basis_coefficients(&f, y, b);
    assert_eq!(co[&2].to_string(), "1");
    assert_eq!(co[&1].to_string(), "-b");
}

#[test]
fn table_support_matches_enlarged_enumeration() {
    // summing over supersets up to a larger bound adds only zero terms
    let spec = IdentitySpec::new(IdentityName::SkewCauchy).mu(p("1")).nu(p("1")).caps(3, 3, 4);
    let ctx = Ctx::new(&spec, BetaSpec::Formal).unwrap();
    let table = ctx.evx.table(crate::symfun::Kind::G, &spec.mu).unwrap();
    for extra in [3, 5] {
        let mut sum = ctx.zero();
        for lam in crate::partition::supersets_up_to(&spec.mu, extra) {
            sum += &ctx.evx.family(crate::symfun::Kind::G, &lam, &spec.mu).unwrap();
        }
        let from_table = table.iter().fold(ctx.zero(), |acc, (_, c)| acc + c.clone());
        assert_eq!(sum, from_table, "extra={extra}");
    }
}
