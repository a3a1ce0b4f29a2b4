//! Schur operators on the module spanned by partitions, their β-deformations
//! and the generating series `A`, `B`, `Ā`, `B̄`.

mod expr;
mod lemmas;

use std::fmt;

use crate::error::{Error, Result};
use crate::module::ModuleElement;
use crate::partition::Partition;
use crate::poly::{Int, Monomial, Poly, RingRef, Var};

pub use expr::OpExpr;
pub use lemmas::{lemma_relations, verify_lemma_relations, LemmaCaps, LemmaSet, Relation};

/// Ring plus the variable playing the role of β.
#[derive(Clone, Debug)]
pub struct OpContext {
    pub ring: RingRef,
    pub beta: Var,
}

impl OpContext {
    pub fn new(ring: &RingRef, beta: Var) -> Self {
        OpContext {
            ring: ring.clone(),
            beta,
        }
    }

    /// Uses the scalar alphabet named `b` as β.
    pub fn with_default_beta(ring: &RingRef) -> Result<Self> {
        Ok(Self::new(ring, ring.scalar("b")?))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColumnKind {
    U,
    D,
    UTilde,
    DTilde,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ColumnOperator {
    pub kind: ColumnKind,
    pub column: usize,
}

impl ColumnOperator {
    pub fn u(i: usize) -> Self {
        ColumnOperator { kind: ColumnKind::U, column: i }
    }
    pub fn d(i: usize) -> Self {
        ColumnOperator { kind: ColumnKind::D, column: i }
    }
    pub fn ut(i: usize) -> Self {
        ColumnOperator { kind: ColumnKind::UTilde, column: i }
    }
    pub fn dt(i: usize) -> Self {
        ColumnOperator { kind: ColumnKind::DTilde, column: i }
    }
}

impl fmt::Display for ColumnOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            ColumnKind::U => "u",
            ColumnKind::D => "d",
            ColumnKind::UTilde => "ut",
            ColumnKind::DTilde => "dt",
        };
        write!(f, "{k}{}", self.column)
    }
}

/// Action on a single partition: list of (result, power of β, sign).
fn column_basis_action(op: ColumnOperator, lam: &Partition) -> Vec<(Partition, u32, i8)> {
    let i = op.column;
    match op.kind {
        ColumnKind::U => lam.add_to_column(i).map(|p| (p, 0, 1)).into_iter().collect(),
        ColumnKind::D => lam.remove_from_column(i).map(|p| (p, 0, 1)).into_iter().collect(),
        ColumnKind::UTilde => {
            let mut out = Vec::with_capacity(2);
            if let Some(p) = lam.add_to_column(i) {
                out.push((p, 0, 1));
            }
            // u_i d_i λ = λ exactly when the bottom box of column i is removable
            if lam.remove_from_column(i).is_some() {
                out.push((lam.clone(), 1, -1));
            }
            out
        }
        ColumnKind::DTilde => {
            let mut out = Vec::new();
            let mut cur = lam.clone();
            let mut l = 0;
            while let Some(p) = cur.remove_from_column(i) {
                out.push((p.clone(), l, 1));
                l += 1;
                cur = p;
            }
            out
        }
    }
}

/// Applies a column operator, extended linearly.
pub fn apply_column(ctx: &OpContext, op: ColumnOperator, v: &ModuleElement) -> ModuleElement {
    let mut out = ModuleElement::zero(&ctx.ring);
    for (lam, p) in v.iter() {
        for (mu, bpow, sign) in column_basis_action(op, lam) {
            let m = Monomial::from_powers(&[(ctx.beta, bpow)]);
            out.add_term(mu, p.mul_monomial(m, &Int::from(sign)));
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SeriesKind {
    A,
    B,
    ABar,
    BBar,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SeriesOperator {
    pub kind: SeriesKind,
    pub var: Var,
}

impl SeriesOperator {
    pub fn a(var: Var) -> Self {
        SeriesOperator { kind: SeriesKind::A, var }
    }
    pub fn b(var: Var) -> Self {
        SeriesOperator { kind: SeriesKind::B, var }
    }
    pub fn abar(var: Var) -> Self {
        SeriesOperator { kind: SeriesKind::ABar, var }
    }
    pub fn bbar(var: Var) -> Self {
        SeriesOperator { kind: SeriesKind::BBar, var }
    }
}

/// `v + c·op(v)` for a deformed column operator, done in one pass.
fn one_plus(ctx: &OpContext, op: ColumnOperator, c: Monomial, sign: i8, v: ModuleElement) -> ModuleElement {
    let mut out = ModuleElement::zero(&ctx.ring);
    let s = Int::from(sign);
    for (lam, p) in v.into_terms() {
        for (mu, bpow, sg) in column_basis_action(op, &lam) {
            let m = Monomial(c.0 + Monomial::from_powers(&[(ctx.beta, bpow)]).0);
            let k = if sg < 0 { -&s } else { s.clone() };
            out.add_term(mu, p.mul_monomial(m, &k));
        }
        out.add_term(lam, p);
    }
    out
}

/// `Σ_k (c·op)^k v`; terminates by truncation (`ũ`) or by weight (`d̃`).
fn inverse_one_minus(ctx: &OpContext, op: ColumnOperator, c: Monomial, v: ModuleElement) -> ModuleElement {
    let mut acc = v.clone();
    let mut w = v;
    loop {
        w = apply_column(ctx, op, &w).mul_monomial(c, &Int::ONE);
        if w.is_zero() {
            return acc;
        }
        acc.add_assign(&w);
    }
}

fn series_cap(ctx: &OpContext, var: Var) -> Result<usize> {
    let a = &ctx.ring.alphabets()[var.alphabet()];
    a.cap
        .finite()
        .map(|d| d as usize)
        .ok_or_else(|| Error::UnboundedCap(a.name.clone()))
}

/// Applies a generating series in one variable.
///
/// `A(x) = ⋯(1+xũ_2)(1+xũ_1)` acts with `ũ_1` first; columns beyond
/// `maxColumn + D + 1` cannot be reached within x-degree `D`, since opening
/// each new column costs one power of `x`. `Ā(x) = (1−xũ_1)^{-1}(1−xũ_2)^{-1}⋯`
/// acts with the highest column first. `B(x) = (1+xd̃_1)(1+xd̃_2)⋯` acts with
/// the highest column first and `B̄(x) = ⋯(1−xd̃_2)^{-1}(1−xd̃_1)^{-1}` with
/// `d̃_1` first.
pub fn apply_series(ctx: &OpContext, op: SeriesOperator, v: &ModuleElement) -> Result<ModuleElement> {
    let x = Monomial::var(op.var);
    let mut w = v.clone();
    match op.kind {
        SeriesKind::A => {
            let k = v.max_column() + series_cap(ctx, op.var)? + 1;
            for i in 1..=k {
                w = one_plus(ctx, ColumnOperator::ut(i), x, 1, w);
            }
        }
        SeriesKind::ABar => {
            let k = v.max_column() + series_cap(ctx, op.var)? + 1;
            for i in (1..=k).rev() {
                w = inverse_one_minus(ctx, ColumnOperator::ut(i), x, w);
            }
        }
        SeriesKind::B => {
            for i in (1..=v.max_column()).rev() {
                w = one_plus(ctx, ColumnOperator::dt(i), x, 1, w);
            }
        }
        SeriesKind::BBar => {
            for i in 1..=v.max_column() {
                w = inverse_one_minus(ctx, ColumnOperator::dt(i), x, w);
            }
        }
    }
    Ok(w)
}

/// Same as [`apply_series`] for `A`/`Ā` but with an explicit column horizon.
pub fn apply_series_with_horizon(
    ctx: &OpContext,
    op: SeriesOperator,
    v: &ModuleElement,
    horizon: usize,
) -> ModuleElement {
    let x = Monomial::var(op.var);
    let mut w = v.clone();
    match op.kind {
        SeriesKind::A => {
            for i in 1..=horizon {
                w = one_plus(ctx, ColumnOperator::ut(i), x, 1, w);
            }
        }
        SeriesKind::ABar => {
            for i in (1..=horizon).rev() {
                w = inverse_one_minus(ctx, ColumnOperator::ut(i), x, w);
            }
        }
        SeriesKind::B => {
            for i in (1..=horizon).rev() {
                w = one_plus(ctx, ColumnOperator::dt(i), x, 1, w);
            }
        }
        SeriesKind::BBar => {
            for i in 1..=horizon {
                w = inverse_one_minus(ctx, ColumnOperator::dt(i), x, w);
            }
        }
    }
    w
}

/// Applies a product of series written left to right, so the last one acts
/// first: `ops = [A(x_n), …, A(x_1)]`.
pub fn apply_product(ctx: &OpContext, ops: &[SeriesOperator], v: &ModuleElement) -> Result<ModuleElement> {
    let mut w = v.clone();
    for op in ops.iter().rev() {
        w = apply_series(ctx, *op, &w)?;
    }
    Ok(w)
}

/// `⟨ops · ket, bra⟩`.
pub fn matrix_element(ctx: &OpContext, bra: &Partition, ops: &[SeriesOperator], ket: &Partition) -> Result<Poly> {
    let v = ModuleElement::basis(&ctx.ring, ket.clone());
    Ok(apply_product(ctx, ops, &v)?.coefficient(bra))
}

/// `[A(x_n)⋯A(x_1)]`-style product over `vars`, with `vars[0]` acting first.
pub fn series_product(kind: SeriesKind, vars: &[Var]) -> Vec<SeriesOperator> {
    vars.iter()
        .rev()
        .map(|&var| SeriesOperator { kind, var })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Cap, Ring};

    fn ctx(xcap: u32) -> OpContext {
        let r = Ring::builder()
            .scalar("b", Cap::Finite(6))
            .indexed("x", 2, Cap::Finite(xcap))
            .indexed("y", 1, Cap::Finite(xcap))
            .build()
            .unwrap();
        OpContext::with_default_beta(&r).unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn elem(c: &OpContext, terms: &[(&str, &str)]) -> ModuleElement {
        ModuleElement::from_terms(
            &c.ring,
            terms.iter().map(|(l, q)| (p(l), Poly::parse(&c.ring, q).unwrap())),
        )
    }

    #[test]
    fn deformed_column_examples() {
        let c = ctx(4);
        let v = ModuleElement::basis(&c.ring, p("2,1"));
        assert_eq!(apply_column(&c, ColumnOperator::ut(2), &v), elem(&c, &[("2,2", "1"), ("2,1", "-b")]));
        let v = ModuleElement::basis(&c.ring, p("3,1"));
        assert_eq!(apply_column(&c, ColumnOperator::ut(2), &v), elem(&c, &[("3,2", "1")]));
        let v = ModuleElement::basis(&c.ring, p("3,2,2,2"));
        assert_eq!(
            apply_column(&c, ColumnOperator::dt(2), &v),
            elem(&c, &[("3,2,2,1", "1"), ("3,2,1,1", "b"), ("3,1,1,1", "b^2")])
        );
    }

    #[test]
    fn d1_u1_is_identity() {
        let c = ctx(4);
        for lam in crate::partition::partitions_up_to(6) {
            let v = ModuleElement::basis(&c.ring, lam);
            let w = apply_column(&c, ColumnOperator::d(1), &apply_column(&c, ColumnOperator::u(1), &v));
            assert_eq!(w, v);
        }
    }

    #[test]
    fn series_small_cases() {
        let c = ctx(2);
        let x = c.ring.var("x", 1).unwrap();
        let y = c.ring.var("y", 1).unwrap();
        let v = ModuleElement::basis(&c.ring, p("-"));
        // ũ_1 opens (1); the loop of ũ_1 is never reached again, and ũ_2 has
        // nothing to remove from (1), so no β term appears
        let got = apply_series(&c, SeriesOperator::a(x), &v).unwrap();
        assert_eq!(got, elem(&c, &[("-", "1"), ("1", "x1"), ("2", "x1^2")]));
        let v = ModuleElement::basis(&c.ring, p("1"));
        let got = apply_series(&c, SeriesOperator::a(x), &v).unwrap();
        assert_eq!(got.coefficient(&p("2")).to_string(), "x1 - b*x1^2");
        // (1 + yd̃_1)(1 + yd̃_2)(2): d̃_2 gives (1), then d̃_1 gives ∅
        let v = ModuleElement::basis(&c.ring, p("2"));
        let got = apply_series(&c, SeriesOperator::b(y), &v).unwrap();
        assert_eq!(got, elem(&c, &[("2", "1"), ("1", "y1"), ("-", "y1^2")]));
        let bra = matrix_element(&c, &p("-"), &[SeriesOperator::b(y)], &p("1")).unwrap();
        assert_eq!(bra.to_string(), "y1");
        let ket = matrix_element(&c, &p("1"), &[SeriesOperator::a(x)], &p("-")).unwrap();
        assert_eq!(ket.to_string(), "x1");
    }

    #[test]
    fn unbounded_series_variable_rejected() {
        let r = Ring::builder()
            .scalar("b", Cap::Finite(2))
            .indexed("x", 1, Cap::Unbounded)
            .build()
            .unwrap();
        let c = OpContext::with_default_beta(&r).unwrap();
        let v = ModuleElement::basis(&r, p("-"));
        let x = r.var("x", 1).unwrap();
        assert!(matches!(apply_series(&c, SeriesOperator::a(x), &v), Err(Error::UnboundedCap(_))));
    }

    #[test]
    fn horizon_is_sufficient() {
        let c = ctx(3);
        let x = c.ring.var("x", 1).unwrap();
        for lam in crate::partition::partitions_up_to(4) {
            let v = ModuleElement::basis(&c.ring, lam.clone());
            let k = lam.first_part() + 3 + 1;
            for kind in [SeriesKind::A, SeriesKind::ABar] {
                let op = SeriesOperator { kind, var: x };
                let a = apply_series_with_horizon(&c, op, &v, k);
                let b = apply_series_with_horizon(&c, op, &v, k + 3);
                assert_eq!(a, b);
            }
        }
    }
}
