//! Commutation relations of the column operators, checked on every
//! partition up to a given weight.

use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::module::ModuleElement;
use crate::partition::partitions_up_to;
use crate::poly::{Cap, Poly, Ring};
use crate::report::{Checker, VerificationReport};

use super::{ColumnOperator as C, OpContext, OpExpr};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LemmaSet {
    /// Undeformed relations, plus `[u_i d_i, u_{i+1} u_i] = 0`.
    Schur,
    Deformed,
    YangBaxter,
}

impl FromStr for LemmaSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "schur" => Ok(LemmaSet::Schur),
            "deformed" => Ok(LemmaSet::Deformed),
            "yangbaxter" | "yang-baxter" => Ok(LemmaSet::YangBaxter),
            _ => Err(Error::InvalidSpec(format!("unknown lemma set `{s}`"))),
        }
    }
}

/// `lhs = rhs` as operators.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub lhs: OpExpr,
    pub rhs: OpExpr,
}

fn rel(name: String, lhs: OpExpr, rhs: OpExpr) -> Relation {
    Relation { name, lhs, rhs }
}

fn c(op: C) -> OpExpr {
    OpExpr::Column(op)
}

fn p2(a: C, b: C) -> OpExpr {
    OpExpr::prod([c(a), c(b)])
}

/// The relations of a set, instantiated for all columns up to `max_column`.
/// The context ring must contain a scalar `b` and, for the Yang–Baxter set,
/// one-variable alphabets `x` and `y`.
pub fn lemma_relations(ctx: &OpContext, which: LemmaSet, max_column: usize) -> Result<Vec<Relation>> {
    let ring = &ctx.ring;
    let zero = || OpExpr::Sum(vec![]);
    let comm = |a: OpExpr, b: OpExpr| OpExpr::commutator(a, b, ring);
    let m = max_column;
    let mut out = Vec::new();
    match which {
        LemmaSet::Schur => {
            for i in 1..=m {
                for j in i + 2..=m {
                    out.push(rel(format!("[u{j},u{i}]=0"), comm(c(C::u(j)), c(C::u(i))), zero()));
                    out.push(rel(format!("[d{j},d{i}]=0"), comm(c(C::d(j)), c(C::d(i))), zero()));
                }
            }
            for i in 1..m {
                let uu = || p2(C::u(i + 1), C::u(i));
                let dd = || p2(C::d(i), C::d(i + 1));
                out.push(rel(format!("[u{}u{i},u{i}]=0", i + 1), comm(uu(), c(C::u(i))), zero()));
                out.push(rel(format!("[u{}u{i},u{}]=0", i + 1, i + 1), comm(uu(), c(C::u(i + 1))), zero()));
                out.push(rel(format!("[d{i}d{},d{i}]=0", i + 1), comm(dd(), c(C::d(i))), zero()));
                out.push(rel(format!("[d{i}d{},d{}]=0", i + 1, i + 1), comm(dd(), c(C::d(i + 1))), zero()));
                out.push(rel(
                    format!("d{}u{}=u{i}d{i}", i + 1, i + 1),
                    p2(C::d(i + 1), C::u(i + 1)),
                    p2(C::u(i), C::d(i)),
                ));
                out.push(rel(
                    format!("[u{i}d{i},u{}u{i}]=0", i + 1),
                    comm(p2(C::u(i), C::d(i)), uu()),
                    zero(),
                ));
            }
            for i in 1..=m {
                for j in 1..=m {
                    if i != j {
                        out.push(rel(format!("[d{j},u{i}]=0"), comm(c(C::d(j)), c(C::u(i))), zero()));
                    }
                }
            }
            out.push(rel("d1u1=1".into(), p2(C::d(1), C::u(1)), OpExpr::Identity));
        }
        LemmaSet::Deformed => {
            for i in 1..=m {
                for j in i + 2..=m {
                    out.push(rel(format!("[ut{i},ut{j}]=0"), comm(c(C::ut(i)), c(C::ut(j))), zero()));
                    out.push(rel(format!("[dt{i},dt{j}]=0"), comm(c(C::dt(i)), c(C::dt(j))), zero()));
                }
            }
            for i in 1..m {
                out.push(rel(
                    format!("[ut{}ut{i},ut{i}+ut{}]=0", i + 1, i + 1),
                    comm(p2(C::ut(i + 1), C::ut(i)), OpExpr::sum([c(C::ut(i)), c(C::ut(i + 1))])),
                    zero(),
                ));
                out.push(rel(
                    format!("[dt{i}dt{},dt{i}+dt{}]=0", i + 1, i + 1),
                    comm(p2(C::dt(i), C::dt(i + 1)), OpExpr::sum([c(C::dt(i)), c(C::dt(i + 1))])),
                    zero(),
                ));
                out.push(rel(
                    format!("[ut{},dt{i}]=0", i + 1),
                    comm(c(C::ut(i + 1)), c(C::dt(i))),
                    zero(),
                ));
            }
            for i in 1..=m {
                for j in 1..=m {
                    if i.abs_diff(j) >= 2 {
                        out.push(rel(format!("[ut{i},dt{j}]=0"), comm(c(C::ut(i)), c(C::dt(j))), zero()));
                    }
                }
            }
            out.push(rel("dt1ut1=1".into(), p2(C::dt(1), C::ut(1)), OpExpr::Identity));
        }
        LemmaSet::YangBaxter => {
            let x = Poly::var(ring, ring.var("x", 1)?);
            let y = Poly::var(ring, ring.var("y", 1)?);
            let xy = &x * &y;
            for i in 1..m {
                let ux = || OpExpr::one_plus(x.clone(), c(C::ut(i)));
                let dy = || OpExpr::one_plus(y.clone(), c(C::dt(i + 1)));
                let lhs = OpExpr::prod([
                    OpExpr::inverse_one_minus(xy.clone(), p2(C::ut(i), C::dt(i))),
                    ux(),
                    dy(),
                ]);
                let rhs = OpExpr::prod([
                    OpExpr::inverse_one_minus(xy.clone(), p2(C::dt(i + 1), C::ut(i + 1))),
                    dy(),
                    ux(),
                ]);
                out.push(rel(format!("yang-baxter i={i}"), lhs, rhs));
            }
        }
    }
    Ok(out)
}

/// Truncation caps for the lemma battery.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LemmaCaps {
    pub x: u32,
    pub y: u32,
    pub beta: u32,
}

impl Default for LemmaCaps {
    fn default() -> Self {
        LemmaCaps { x: 2, y: 2, beta: 4 }
    }
}

/// Applies both sides of every relation to each partition of weight at most
/// `max_weight`, with column indices up to `max_column`.
pub fn verify_lemma_relations(
    which: LemmaSet,
    max_weight: usize,
    max_column: usize,
    caps: LemmaCaps,
) -> Result<VerificationReport> {
    let ring = Ring::builder()
        .scalar("b", Cap::Finite(caps.beta))
        .indexed("x", 1, Cap::Finite(caps.x))
        .indexed("y", 1, Cap::Finite(caps.y))
        .build()?;
    let ctx = OpContext::with_default_beta(&ring)?;
    let relations = lemma_relations(&ctx, which, max_column)?;
    let shapes = partitions_up_to(max_weight);
    let name = match which {
        LemmaSet::Schur => "lemma relations: schur",
        LemmaSet::Deformed => "lemma relations: deformed",
        LemmaSet::YangBaxter => "lemma relations: yang-baxter",
    };
    let reports: Result<Vec<VerificationReport>> = relations
        .par_iter()
        .map(|r| {
            let mut ch = Checker::new(r.name.clone());
            for lam in &shapes {
                let v = ModuleElement::basis(&ring, lam.clone());
                let a = r.lhs.apply(&ctx, &v)?;
                let b = r.rhs.apply(&ctx, &v)?;
                ch.shape();
                if !ch.module(format!("{} on [{lam}]", r.name), &a, &b) {
                    break;
                }
            }
            Ok(ch.finish())
        })
        .collect();
    let mut rep = VerificationReport::combine(name, reports?);
    rep.notes.push(format!("{} relations, {} partitions", relations.len(), shapes.len()));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn batteries_pass_small() {
        for which in [LemmaSet::Schur, LemmaSet::Deformed, LemmaSet::YangBaxter] {
            let r = verify_lemma_relations(which, 4, 5, LemmaCaps::default()).unwrap();
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn a_false_relation_is_caught() {
        // Local Knuth relations fail for the deformed operators.
        let ring = Ring::builder().scalar("b", Cap::Finite(3)).build().unwrap();
        let ctx = OpContext::with_default_beta(&ring).unwrap();
        let lhs = OpExpr::commutator(p2(C::ut(2), C::ut(1)), c(C::ut(1)), &ring);
        let mut ch = Checker::new("knuth");
        let mut failed = false;
        for lam in partitions_up_to(4) {
            let v = ModuleElement::basis(&ring, lam);
            if !ch.module("x", &lhs.apply(&ctx, &v).unwrap(), &ModuleElement::zero(&ring)) {
                failed = true;
            }
        }
        assert!(failed);
    }
}
