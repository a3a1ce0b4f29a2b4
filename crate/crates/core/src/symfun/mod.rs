//! Symmetric functions `G`, `g`, `J`, `j`, `s`, `h`, `e`, evaluated either
//! through the operator series or through tableaux.

mod basis;
mod checks;
mod schur;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::module::ModuleElement;
use crate::partition::{DoubleSlashShape, Partition, SkewShape};
use crate::poly::{Int, Monomial, Poly, RingRef, Subst, Var};
use crate::schur_ops::{apply_product, series_product, OpContext, SeriesKind};
use crate::tableau::{weight_sum, Family, TableauShape};

pub use basis::{basis_expand, damping_check, orthogonality_check, tau_check, BasisExpansion, DampingFamily};
pub use checks::{basis_phenomenon_check, closed_form_check, omega_check, route_check};
pub use schur::{kostka, omega, schur_expand, schur_polynomial, Basis, SymExpansion, SymExpansionJson};

/// Which symmetric function.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SymFunId {
    G(DoubleSlashShape),
    /// `G_{λ/μ}`, related to the extended shapes by Möbius inversion.
    GSkew(SkewShape),
    Gd(SkewShape),
    J(DoubleSlashShape),
    Jd(SkewShape),
    S(SkewShape),
    H(usize),
    E(usize),
}

impl SymFunId {
    /// Parses a family letter (`G`, `Gskew`, `g`, `J`, `j`, `s`, `h`, `e`)
    /// together with a shape string or, for `h`/`e`, an integer.
    pub fn parse(family: &str, shape: &str) -> Result<Self> {
        Ok(match family {
            "G" => SymFunId::G(shape.parse()?),
            "Gskew" => SymFunId::GSkew(shape.parse()?),
            "g" => SymFunId::Gd(shape.parse()?),
            "J" => SymFunId::J(shape.parse()?),
            "j" => SymFunId::Jd(shape.parse()?),
            "s" => SymFunId::S(shape.parse()?),
            "h" | "e" => {
                let k = shape
                    .trim()
                    .parse()
                    .map_err(|_| Error::InvalidSpec(format!("`{shape}` is not a degree")))?;
                if family == "h" {
                    SymFunId::H(k)
                } else {
                    SymFunId::E(k)
                }
            }
            _ => return Err(Error::InvalidSpec(format!("unknown family `{family}`"))),
        })
    }
}

impl fmt::Display for SymFunId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymFunId::G(s) => write!(f, "G[{s}]"),
            SymFunId::GSkew(s) => write!(f, "G[{s}]"),
            SymFunId::Gd(s) => write!(f, "g[{s}]"),
            SymFunId::J(s) => write!(f, "J[{s}]"),
            SymFunId::Jd(s) => write!(f, "j[{s}]"),
            SymFunId::S(s) => write!(f, "s[{s}]"),
            SymFunId::H(k) => write!(f, "h[{k}]"),
            SymFunId::E(k) => write!(f, "e[{k}]"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    Operator,
    Tableaux,
}

impl FromStr for Route {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "operator" | "operators" => Ok(Route::Operator),
            "tableaux" | "tableau" => Ok(Route::Tableaux),
            _ => Err(Error::InvalidSpec(format!("unknown route `{s}`"))),
        }
    }
}

/// The four operator families, by which series generates them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    G,
    Gd,
    J,
    Jd,
}

impl Kind {
    fn series(self) -> SeriesKind {
        match self {
            Kind::G => SeriesKind::A,
            Kind::Gd => SeriesKind::B,
            Kind::J => SeriesKind::ABar,
            Kind::Jd => SeriesKind::BBar,
        }
    }

    /// `G`, `J` are read off `series · μ` at `λ`; `g`, `j` off `series · λ` at `μ`.
    fn grows(self) -> bool {
        matches!(self, Kind::G | Kind::J)
    }
}

/// Evaluates families in a fixed set of variables, caching operator tables.
///
/// A table is the whole vector `A(x_n)⋯A(x_1)·μ` (or its analogue), which
/// holds `G_{λ//μ}` for every `λ` at once.
pub struct Evaluator {
    ctx: OpContext,
    xs: Vec<Var>,
    tables: Mutex<HashMap<(Kind, Partition), Arc<ModuleElement>>>,
}

impl Evaluator {
    pub fn new(ring: &RingRef, xs: &[Var], beta: Var) -> Self {
        Evaluator {
            ctx: OpContext::new(ring, beta),
            xs: xs.to_vec(),
            tables: Mutex::new(HashMap::new()),
        }
    }

    /// Uses the alphabet `name` for the variables and the scalar `b` for β.
    pub fn for_alphabet(ring: &RingRef, name: &str) -> Result<Self> {
        Ok(Self::new(ring, &ring.vars(name)?, ring.scalar("b")?))
    }

    pub fn ring(&self) -> &RingRef {
        &self.ctx.ring
    }

    pub fn vars(&self) -> &[Var] {
        &self.xs
    }

    pub fn beta(&self) -> Var {
        self.ctx.beta
    }

    pub fn context(&self) -> &OpContext {
        &self.ctx
    }

    /// `series product · ket` for the given family.
    pub fn table(&self, kind: Kind, ket: &Partition) -> Result<Arc<ModuleElement>> {
        let key = (kind, ket.clone());
        if let Some(t) = self.tables.lock().unwrap().get(&key) {
            return Ok(t.clone());
        }
        let v = ModuleElement::basis(&self.ctx.ring, ket.clone());
        let ops = series_product(kind.series(), &self.xs);
        let t = Arc::new(apply_product(&self.ctx, &ops, &v)?);
        self.tables.lock().unwrap().insert(key, t.clone());
        Ok(t)
    }

    /// The family member `kind[outer, inner]` (`λ//μ` or `λ/μ`).
    pub fn family(&self, kind: Kind, outer: &Partition, inner: &Partition) -> Result<Poly> {
        if !outer.contains(inner) {
            return Ok(Poly::zero(&self.ctx.ring));
        }
        if kind.grows() {
            Ok(self.table(kind, inner)?.coefficient(outer))
        } else {
            Ok(self.table(kind, outer)?.coefficient(inner))
        }
    }

    pub fn evaluate(&self, id: &SymFunId, route: Route) -> Result<Poly> {
        match route {
            Route::Operator => self.by_operators(id),
            Route::Tableaux => self.by_tableaux(id),
        }
    }

    fn by_operators(&self, id: &SymFunId) -> Result<Poly> {
        match id {
            SymFunId::G(s) => self.family(Kind::G, s.outer(), s.inner()),
            SymFunId::GSkew(s) => self.pure_skew_g(s.outer(), s.inner()),
            SymFunId::Gd(s) => self.family(Kind::Gd, s.outer(), s.inner()),
            SymFunId::J(s) => self.family(Kind::J, s.outer(), s.inner()),
            SymFunId::Jd(s) => self.family(Kind::Jd, s.outer(), s.inner()),
            SymFunId::S(s) => Ok(self.beta_zero(&self.family(Kind::Gd, s.outer(), s.inner())?)),
            SymFunId::H(k) => self.by_operators(&SymFunId::S(SkewShape::straight(Partition::from_parts(&[*k])))),
            SymFunId::E(k) => self.by_operators(&SymFunId::S(SkewShape::straight(Partition::from_parts(&vec![1; *k])))),
        }
    }

    fn by_tableaux(&self, id: &SymFunId) -> Result<Poly> {
        let ring = &self.ctx.ring;
        let b = self.ctx.beta;
        match id {
            SymFunId::G(s) => weight_sum(Family::Svt, &TableauShape::Extended(s.clone()), ring, &self.xs, b),
            SymFunId::GSkew(s) => {
                let mut out = Poly::zero(ring);
                for nu in s.inner().subdiagrams() {
                    let w = weight_sum(
                        Family::Svt,
                        &TableauShape::Extended(DoubleSlashShape::new(s.outer().clone(), nu.clone())?),
                        ring,
                        &self.xs,
                        b,
                    )?;
                    out += &(&self.beta_power(s.inner().weight() - nu.weight()) * &w);
                }
                Ok(out)
            }
            SymFunId::Gd(s) => weight_sum(Family::Rpp, &TableauShape::Skew(s.clone()), ring, &self.xs, b),
            SymFunId::J(s) => weight_sum(Family::Msvt, &TableauShape::Extended(s.conjugate()), ring, &self.xs, b),
            SymFunId::Jd(s) => weight_sum(Family::Ssyt, &TableauShape::Skew(s.conjugate()), ring, &self.xs, b),
            SymFunId::S(s) => Ok(self.beta_zero(&weight_sum(
                Family::Ssyt,
                &TableauShape::Skew(s.clone()),
                ring,
                &self.xs,
                b,
            )?)),
            SymFunId::H(k) => self.by_tableaux(&SymFunId::S(SkewShape::straight(Partition::from_parts(&[*k])))),
            SymFunId::E(k) => self.by_tableaux(&SymFunId::S(SkewShape::straight(Partition::from_parts(&vec![1; *k])))),
        }
    }

    fn beta_zero(&self, p: &Poly) -> Poly {
        p.specialize(&[(self.ctx.beta, Subst::Zero)])
    }

    fn beta_power(&self, k: usize) -> Poly {
        Poly::monomial(&self.ctx.ring, Monomial::from_powers(&[(self.ctx.beta, k as u32)]), 1)
    }

    /// `G_{λ/μ} = Σ_{ν⊆μ} β^{|μ/ν|} G_{λ//ν}`.
    ///
    /// Defined for every `λ`: when `λ` does not contain `μ` only the `ν ⊆ λ`
    /// terms survive, and the result is usually nonzero (`G_{∅/(1)} = 1`).
    pub fn pure_skew_g(&self, lam: &Partition, mu: &Partition) -> Result<Poly> {
        let mut out = Poly::zero(&self.ctx.ring);
        for nu in mu.subdiagrams() {
            let g = self.family(Kind::G, lam, &nu)?;
            out += &(&self.beta_power(mu.weight() - nu.weight()) * &g);
        }
        Ok(out)
    }

    /// The inverse relation `G_{λ//ν} = Σ_{ν/κ rook strip} (−β)^{|ν/κ|} G_{λ/κ}`.
    pub fn extended_from_pure_skew(&self, lam: &Partition, nu: &Partition) -> Result<Poly> {
        let mut out = Poly::zero(&self.ctx.ring);
        for kappa in crate::partition::rook_strip_removals(nu) {
            let k = nu.weight() - kappa.weight();
            let sign = if k % 2 == 0 { Int::ONE } else { -Int::ONE };
            out += &self.pure_skew_g(lam, &kappa)?.mul_monomial(
                Monomial::from_powers(&[(self.ctx.beta, k as u32)]),
                &sign,
            );
        }
        Ok(out)
    }
}

/// Evaluates `id` in the alphabet `x` of `ring` with β the scalar `b`.
pub fn evaluate(id: &SymFunId, ring: &RingRef, route: Route) -> Result<Poly> {
    Evaluator::for_alphabet(ring, "x")?.evaluate(id, route)
}

#[cfg(test)]
mod tests;
