//! Whole-family checks over ranges of shapes.

use rayon::prelude::*;

use crate::error::Result;
use crate::partition::{partitions_up_to, DoubleSlashShape, Partition, SkewShape};
use crate::poly::{Cap, Poly, Ring, RingRef};
use crate::report::{Checker, VerificationReport};

use super::basis::basis_expand;
use super::schur::{omega, schur_expand};
use super::{Evaluator, Kind, Route, SymFunId};

fn ring(nvars: usize, xcap: u32, bcap: u32) -> Result<RingRef> {
    Ring::builder()
        .scalar("b", Cap::Finite(bcap))
        .indexed("x", nvars, Cap::Finite(xcap))
        .build()
}

/// Operator and tableau evaluation of `G`, `g`, `J`, `j` agree for every
/// `μ ⊆ λ` with `|λ| ≤ max_weight`.
pub fn route_check(max_weight: usize, nvars: usize, xcap: u32, bcap: u32) -> Result<VerificationReport> {
    let ring = ring(nvars, xcap, bcap)?;
    let ev = Evaluator::for_alphabet(&ring, "x")?;
    let shapes = partitions_up_to(max_weight);
    let reports: Result<Vec<VerificationReport>> = shapes
        .par_iter()
        .map(|lam| {
            let mut ch = Checker::new(format!("routes at {lam}"));
            for mu in lam.subdiagrams() {
                let ext = DoubleSlashShape::new(lam.clone(), mu.clone())?;
                let sk = SkewShape::new(lam.clone(), mu.clone())?;
                for id in [
                    SymFunId::G(ext.clone()),
                    SymFunId::Gd(sk.clone()),
                    SymFunId::J(ext),
                    SymFunId::Jd(sk),
                ] {
                    ch.shape();
                    let a = ev.evaluate(&id, Route::Operator)?;
                    let b = ev.evaluate(&id, Route::Tableaux)?;
                    ch.poly(&id, &a, &b);
                }
            }
            Ok(ch.finish())
        })
        .collect();
    Ok(VerificationReport::combine(
        format!("operator vs tableau routes, |lambda| <= {max_weight}, {nvars} vars"),
        reports?,
    ))
}

/// `G_{λ//λ} = ∏_j (1 − βx_j)^{i(λ)}` by both routes.
pub fn closed_form_check(max_weight: usize, nvars: usize, xcap: u32, bcap: u32) -> Result<VerificationReport> {
    let ring = ring(nvars, xcap, bcap)?;
    let ev = Evaluator::for_alphabet(&ring, "x")?;
    let b = Poly::var(&ring, ev.beta());
    let mut ch = Checker::new(format!("G[lambda//lambda] closed form, |lambda| <= {max_weight}"));
    for lam in partitions_up_to(max_weight) {
        ch.shape();
        let i = lam.corner_count() as u32;
        let mut want = Poly::one(&ring);
        for &x in ev.vars() {
            let f = &Poly::one(&ring) - &(&b * &Poly::var(&ring, x));
            want = &want * &f.pow(i);
        }
        let op = ev.family(Kind::G, &lam, &lam)?;
        let tab = ev.evaluate(&SymFunId::G(DoubleSlashShape::new(lam.clone(), lam.clone())?), Route::Tableaux)?;
        ch.poly(format!("operators at {lam}"), &op, &want);
        ch.poly(format!("tableaux at {lam}"), &tab, &want);
    }
    Ok(ch.finish())
}

/// `ω` of the Schur expansion of `G_{λ//μ}` is the expansion of `J_{λ//μ}`.
pub fn omega_check(max_weight: usize, nvars: usize, cap: u32) -> Result<VerificationReport> {
    let ring = ring(nvars, cap, cap)?;
    let ev = Evaluator::for_alphabet(&ring, "x")?;
    let ai = ring.alphabet_index("x")?;
    let mut ch = Checker::new(format!("omega(G) = J, |lambda| <= {max_weight}"));
    for lam in partitions_up_to(max_weight) {
        for mu in lam.subdiagrams() {
            ch.shape();
            let g = schur_expand(&ev.family(Kind::G, &lam, &mu)?, ai)?;
            let j = schur_expand(&ev.family(Kind::J, &lam, &mu)?, ai)?;
            ch.module(format!("{lam}//{mu}"), &omega(&g)?.terms, &j.terms);
        }
    }
    Ok(ch.finish())
}

/// Every product `G_μ G_ν` with `|μ|, |ν| ≤ max_weight` peels to zero
/// residual in the `G` basis, and the expansion reassembles the product.
pub fn basis_phenomenon_check(max_weight: usize, nvars: usize, xcap: u32, bcap: u32) -> Result<VerificationReport> {
    let ring = ring(nvars, xcap, bcap)?;
    let ev = Evaluator::for_alphabet(&ring, "x")?;
    let zero = Poly::zero(&ring);
    let shapes: Vec<Partition> = partitions_up_to(max_weight).into_iter().filter(|p| !p.is_empty()).collect();
    let mut jobs = Vec::new();
    for (i, mu) in shapes.iter().enumerate() {
        for nu in &shapes[i..] {
            jobs.push((mu.clone(), nu.clone()));
        }
    }
    let reports: Result<Vec<VerificationReport>> = jobs
        .par_iter()
        .map(|(mu, nu)| {
            let mut ch = Checker::new(format!("G[{mu}]*G[{nu}]"));
            ch.shape();
            let empty = Partition::empty();
            let prod = &ev.family(Kind::G, mu, &empty)? * &ev.family(Kind::G, nu, &empty)?;
            let e = basis_expand(&prod, &ev, Kind::G)?;
            ch.poly("residual", &e.residual, &zero);
            let mut back = Poly::zero(&ring);
            for (lam, c) in e.expansion.terms.iter() {
                back += &(c * &ev.family(Kind::G, lam, &empty)?);
            }
            ch.poly("reassembled", &back, &prod);
            ch.note(format!("G[{mu}]*G[{nu}] = {}", e.expansion));
            Ok(ch.finish())
        })
        .collect();
    Ok(VerificationReport::combine(
        format!("finite G-expansion of products, |mu|,|nu| <= {max_weight}"),
        reports?,
    ))
}
