//! The fixed acceptance battery: thirteen criteria, each reduced to one
//! combined report.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::{
    commutator_check, enumerative_identity_check, fubini_brute_force, moebius_from_cauchy, normal_ordering_check,
    q_coefficient, walk_sum, Direction, EnumerativeIdentity, FilteredGraph, GraphKind, NormalOrdering, Param,
    Relation,
};
use crate::identities::{verify, verify_all_pairs, BetaSpec, IdentityName, IdentitySpec};
use crate::partition::{partitions_up_to, Partition};
use crate::report::{Checker, VerificationReport};
use crate::schur_ops::{verify_lemma_relations, LemmaCaps, LemmaSet};
use crate::symfun::{
    basis_phenomenon_check, closed_form_check, damping_check, omega_check, orthogonality_check, route_check,
    DampingFamily,
};

pub const CRITERIA: [(u8, &str); 13] = [
    (1, "lemma battery"),
    (2, "route equivalence"),
    (3, "skew Cauchy and dual variants"),
    (4, "G[lambda//lambda] closed form"),
    (5, "d(mu) generating identity"),
    (6, "skew Pieri rules"),
    (7, "omega duality"),
    (8, "orthogonality"),
    (9, "basis phenomenon and damping"),
    (10, "graph commutators"),
    (11, "worked walk values"),
    (12, "normal ordering"),
    (13, "enumerative identities"),
];

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub title: String,
    pub report: VerificationReport,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!(
            "criterion {:>2} {:<32} {} ({} terms, {} shapes, {} ms)",
            self.id,
            self.title,
            if self.report.passed() { "PASS" } else { "FAIL" },
            self.report.stats.terms_compared,
            self.report.stats.shapes_enumerated,
            self.report.stats.wall_time_ms
        )
    }
}

fn p(parts: &[usize]) -> Partition {
    Partition::from_parts(parts)
}

fn lemmas() -> Result<VerificationReport> {
    let reports = [LemmaSet::Schur, LemmaSet::Deformed, LemmaSet::YangBaxter]
        .into_iter()
        .map(|s| verify_lemma_relations(s, 6, 7, LemmaCaps::default()))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::combine("lemma battery", reports))
}

fn cauchy_family() -> Result<VerificationReport> {
    let names = [
        IdentityName::SkewCauchy,
        IdentityName::DualSkewCauchyJg,
        IdentityName::DualSkewCauchyGj,
        IdentityName::DualSkewCauchyJj,
    ];
    let reports = names
        .into_iter()
        .map(|n| {
            let t = IdentitySpec::new(n).vars(2, 2).caps(4, 4, 5).beta(BetaSpec::Formal);
            verify_all_pairs(&t, 3, false)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(VerificationReport::combine("skew Cauchy family", reports))
}

fn d_identity() -> Result<VerificationReport> {
    let mut reports = Vec::new();
    let mut ch = Checker::new("d-values");
    for (mu, want) in [(p(&[]), 1), (p(&[1]), 2), (p(&[2, 1]), 5)] {
        ch.int(format!("d({mu})"), mu.subdiagram_count() as i64, want);
    }
    // brute force: every subset of cells of (3,2,1) closed under going up/left
    let stair = p(&[3, 2, 1]);
    let cells = stair.cells();
    let brute = (0u32..1 << cells.len())
        .filter(|mask| {
            cells.iter().enumerate().all(|(k, &(r, c))| {
                mask & (1 << k) == 0
                    || cells.iter().enumerate().all(|(l, &(r2, c2))| {
                        !(r2 <= r && c2 <= c) || mask & (1 << l) != 0
                    })
            })
        })
        .count() as i64;
    ch.int("d(3,2,1)", stair.subdiagram_count() as i64, brute);
    ch.note(format!("d(3,2,1) = {brute} by brute force"));
    reports.push(ch.finish());
    for mu in [p(&[]), p(&[1]), p(&[2, 1]), stair] {
        let spec = IdentitySpec::new(IdentityName::SpecializationCatalan)
            .mu(mu)
            .vars(2, 1)
            .caps(5, 1, 5);
        reports.push(verify(&spec)?);
    }
    Ok(VerificationReport::combine("d(mu) identity", reports))
}

fn pieri() -> Result<VerificationReport> {
    let formal = [
        IdentityName::SkewPieriG1k,
        IdentityName::SkewPieriGdk,
        IdentityName::DualSkewPieriGk,
        IdentityName::DualSkewPieriGd1k,
        IdentityName::SimpleSkewPieri,
        IdentityName::SchurSkewPieri,
    ];
    let mut reports = Vec::new();
    for k in 1..=3 {
        for name in formal {
            let t = IdentitySpec::new(name).k(k).vars(2, 2).caps(4, 4, 5);
            reports.push(verify_all_pairs(&t, 4, true)?);
        }
    }
    Ok(VerificationReport::combine("skew Pieri rules", reports))
}

fn basis() -> Result<VerificationReport> {
    Ok(VerificationReport::combine(
        "basis phenomenon and damping",
        vec![
            basis_phenomenon_check(2, 8, 8, 6)?,
            damping_check(DampingFamily::J, 2, 6)?,
            damping_check(DampingFamily::G, 1, 6)?,
        ],
    ))
}

fn graphs() -> Result<VerificationReport> {
    let mut reports = Vec::new();
    for kind in [GraphKind::BetaY, GraphKind::KappaY, GraphKind::MoebiusY] {
        let g = FilteredGraph::build(kind, Param::Formal, Param::Formal, 8);
        reports.push(commutator_check(&g, Relation::for_kind(kind))?);
    }
    reports.push(moebius_from_cauchy(6)?);
    Ok(VerificationReport::combine("graph commutators", reports))
}

fn walks() -> Result<VerificationReport> {
    let mut ch = Checker::new("worked walks");
    let g = FilteredGraph::build(GraphKind::BetaY, Param::Int(1), Param::Formal, 6);
    let up = walk_sum(&g, &p(&[2]), &p(&[2, 1]), 2, Direction::Up)?;
    let down = walk_sum(&g, &p(&[2, 1, 1]), &p(&[1]), 2, Direction::Down)?;
    ch.int("signed up walks (2) -> (2,1)", as_int(&up)?, -3);
    ch.int("down walks (2,1,1) -> (1)", as_int(&down)?, 2);
    Ok(ch.finish())
}

fn as_int(p: &crate::poly::Poly) -> Result<i64> {
    if !p.is_constant() {
        return Err(Error::InvalidSpec(format!("walk sum `{p}` is not a number")));
    }
    i64::try_from(p.constant_term()).map_err(|_| Error::InvalidSpec("walk sum overflows".into()))
}

fn normal_ordering() -> Result<VerificationReport> {
    let mut jobs = Vec::new();
    for n in 0..=3 {
        for m in 0..=3 {
            jobs.push((NormalOrdering::Weyl, n, m));
            jobs.push((NormalOrdering::Shifted, n, m));
        }
    }
    let mut reports = jobs
        .par_iter()
        .map(|&(w, n, m)| normal_ordering_check(w, n, m, 10))
        .collect::<Result<Vec<_>>>()?;
    let mut ch = Checker::new("q_n(i,j) forms");
    let mut literal_mismatch = 0;
    for n in 0..=6 {
        for i in 0..=6 {
            for j in 0..=6 {
                let q = q_coefficient(n, i, j);
                ch.int(format!("q_{n}({i},{j})"), q.alternating, q.eulerian);
                literal_mismatch += (q.literal != q.alternating) as usize;
            }
        }
    }
    ch.note(format!("descent-indexed form without the shift differs at {literal_mismatch} of 343 indices"));
    reports.push(ch.finish());
    Ok(VerificationReport::combine("normal ordering", reports))
}

fn enumerative() -> Result<VerificationReport> {
    let small = partitions_up_to(2);
    let mut jobs = Vec::new();
    for which in [EnumerativeIdentity::SignedFf, EnumerativeIdentity::Fg] {
        for m in 0..=2 {
            for n in 0..=2 {
                for mu in &small {
                    for nu in &small {
                        jobs.push((which, m, n, mu.clone(), nu.clone()));
                    }
                }
            }
        }
    }
    for n in 0..=6 {
        jobs.push((EnumerativeIdentity::FrobeniusAnalogue, n, n, Partition::empty(), Partition::empty()));
    }
    for n in 1..=4 {
        jobs.push((EnumerativeIdentity::Fubini, 0, n, Partition::empty(), Partition::empty()));
    }
    let mut reports = jobs
        .par_iter()
        .map(|(w, m, n, mu, nu)| enumerative_identity_check(*w, *m, *n, mu, nu, 8))
        .collect::<Result<Vec<_>>>()?;
    let mut ch = Checker::new("ordered set partitions");
    for (n, want) in [(1, 1), (2, 3), (3, 13), (4, 75)] {
        ch.int(format!("Fubini({n})"), fubini_brute_force(n) as i64, want);
    }
    reports.push(ch.finish());
    Ok(VerificationReport::combine("enumerative identities", reports))
}

/// Runs one criterion by number.
pub fn run_criterion(id: u8) -> Result<CriterionResult> {
    let (_, title) = CRITERIA
        .iter()
        .find(|(i, _)| *i == id)
        .ok_or_else(|| Error::InvalidSpec(format!("no criterion {id}")))?;
    let start = Instant::now();
    let mut report = match id {
        1 => lemmas()?,
        2 => route_check(6, 3, 6, 6)?,
        3 => cauchy_family()?,
        4 => closed_form_check(6, 2, 6, 6)?,
        5 => d_identity()?,
        6 => pieri()?,
        7 => omega_check(4, 4, 4)?,
        8 => orthogonality_check(4, 4, 4)?,
        9 => basis()?,
        10 => graphs()?,
        11 => walks()?,
        12 => normal_ordering()?,
        _ => enumerative()?,
    };
    // the combined reports sum per-part times, which overcounts under rayon
    report.stats.wall_time_ms = start.elapsed().as_millis();
    Ok(CriterionResult {
        id,
        title: title.to_string(),
        report,
    })
}

/// Runs all criteria in order.
pub fn run_suite() -> Result<Vec<CriterionResult>> {
    CRITERIA.iter().map(|(id, _)| run_criterion(*id)).collect()
}
