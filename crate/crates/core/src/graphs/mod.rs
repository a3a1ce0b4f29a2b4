//! Weighted filtered Young graphs and their up/down operators on the
//! space spanned by partitions of weight at most `N`.

mod enumerative;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::module::ModuleElement;
use crate::partition::{partitions_up_to, rook_strip_removals, Partition, SkewShape};
use crate::poly::{Cap, Int, Poly, Ring, RingRef};
use crate::report::{Checker, VerificationReport};

pub use enumerative::{
    enumerative_identity_check, eulerian, fubini_brute_force, normal_ordering_check, q_coefficient, EnumerativeIdentity,
    NormalOrdering, QCoefficient,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GraphKind {
    #[serde(rename = "betaY")]
    BetaY,
    #[serde(rename = "kappaY")]
    KappaY,
    #[serde(rename = "moebiusY")]
    MoebiusY,
}

impl FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "betaY" => Ok(GraphKind::BetaY),
            "kappaY" => Ok(GraphKind::KappaY),
            "moebiusY" => Ok(GraphKind::MoebiusY),
            _ => Err(Error::InvalidSpec(format!("unknown graph `{s}`"))),
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphKind::BetaY => "betaY",
            GraphKind::KappaY => "kappaY",
            GraphKind::MoebiusY => "moebiusY",
        })
    }
}

/// A parameter left formal or fixed to an integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Param {
    Formal,
    Int(i64),
}

impl FromStr for Param {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "formal" {
            return Ok(Param::Formal);
        }
        s.parse()
            .map(Param::Int)
            .map_err(|_| Error::InvalidSpec(format!("parameter must be `formal` or an integer, not `{s}`")))
    }
}

/// The ring shared by all graphs: scalars `b` (β) and `k` (ϰ), unbounded.
pub fn graph_ring() -> RingRef {
    Ring::builder()
        .scalar("b", Cap::Unbounded)
        .scalar("k", Cap::Unbounded)
        .build()
        .expect("two scalars fit")
}

fn param_poly(ring: &RingRef, name: &str, p: Param) -> Poly {
    match p {
        Param::Formal => Poly::var(ring, ring.scalar(name).expect("graph ring")),
        Param::Int(v) => Poly::constant(ring, v),
    }
}

/// A linear map on the span of partitions of weight `≤ rank_bound`, stored
/// as the image of each basis vector. Terms leaving the space are dropped.
#[derive(Clone, Debug)]
pub struct Operator {
    ring: RingRef,
    rank_bound: usize,
    images: BTreeMap<Partition, ModuleElement>,
}

impl Operator {
    pub fn zero(ring: &RingRef, rank_bound: usize) -> Self {
        Operator {
            ring: ring.clone(),
            rank_bound,
            images: BTreeMap::new(),
        }
    }

    pub fn identity(ring: &RingRef, rank_bound: usize) -> Self {
        let mut op = Self::zero(ring, rank_bound);
        for lam in partitions_up_to(rank_bound) {
            op.images.insert(lam.clone(), ModuleElement::basis(ring, lam));
        }
        op
    }

    fn add_edge(&mut self, from: &Partition, to: Partition, w: Poly) {
        if to.weight() > self.rank_bound || w.is_zero() {
            return;
        }
        self.images
            .entry(from.clone())
            .or_insert_with(|| ModuleElement::zero(&self.ring))
            .add_term(to, w);
    }

    pub fn image(&self, lam: &Partition) -> ModuleElement {
        self.images
            .get(lam)
            .cloned()
            .unwrap_or_else(|| ModuleElement::zero(&self.ring))
    }

    pub fn apply(&self, v: &ModuleElement) -> ModuleElement {
        let mut out = ModuleElement::zero(&self.ring);
        for (lam, c) in v.iter() {
            if let Some(img) = self.images.get(lam) {
                out.add_owned(img.scale_poly(c));
            }
        }
        out
    }

    /// Applies `word` in written order, so the last operator acts first.
    pub fn apply_word(word: &[&Operator], v: &ModuleElement) -> ModuleElement {
        word.iter().rev().fold(v.clone(), |acc, op| op.apply(&acc))
    }

    /// Nonzero entries `(from, to, weight)` in the deterministic partition order.
    pub fn entries(&self) -> Vec<(Partition, Partition, Poly)> {
        let mut out = Vec::new();
        for (from, img) in &self.images {
            for (to, w) in img.iter() {
                out.push((from.clone(), to.clone(), w.clone()));
            }
        }
        out
    }

    /// `self ∘ other`, computed column by column.
    pub fn compose(&self, other: &Operator) -> Operator {
        let mut out = Operator::zero(&self.ring, self.rank_bound);
        for lam in other.images.keys() {
            let img = self.apply(&other.image(lam));
            if !img.is_zero() {
                out.images.insert(lam.clone(), img);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.images.values().all(|v| v.is_zero())
    }
}

/// One of the three graphs, truncated at rank `N`.
#[derive(Clone, Debug)]
pub struct FilteredGraph {
    pub kind: GraphKind,
    pub rank_bound: usize,
    pub ring: RingRef,
    pub beta: Poly,
    pub kappa: Poly,
    pub up: Operator,
    pub down: Operator,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeJson {
    pub from: String,
    pub to: String,
    pub weight: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct GraphJson {
    pub kind: GraphKind,
    pub rank_bound: usize,
    pub vertices: Vec<String>,
    pub up_edges: Vec<EdgeJson>,
    pub down_edges: Vec<EdgeJson>,
}

/// Removals of `k ≥ 1` boxes from the bottom of a single column.
fn single_column_removals(lam: &Partition) -> Vec<(Partition, usize)> {
    let conj = lam.conjugate();
    let mut out = Vec::new();
    for c in 1..=lam.first_part() {
        let slack = conj.part(c) - conj.part(c + 1);
        let mut parts = conj.parts().to_vec();
        for k in 1..=slack {
            parts[c - 1] -= 1;
            out.push((Partition::new(parts.clone()).expect("still a partition").conjugate(), k));
        }
    }
    out
}

impl FilteredGraph {
    pub fn build(kind: GraphKind, beta: Param, kappa: Param, rank_bound: usize) -> Self {
        let ring = graph_ring();
        let b = param_poly(&ring, "b", beta);
        let k = param_poly(&ring, "k", kappa);
        let mut up = Operator::zero(&ring, rank_bound);
        let mut down = Operator::zero(&ring, rank_bound);
        let loop_weight = match kind {
            GraphKind::MoebiusY => Poly::one(&ring),
            _ => -&b,
        };
        for lam in partitions_up_to(rank_bound) {
            for r in 1..=lam.len() + 1 {
                if let Some(nu) = lam.add_to_row(r) {
                    up.add_edge(&lam, nu, Poly::one(&ring));
                }
            }
            let i = lam.corner_count() as i64;
            up.add_edge(&lam, lam.clone(), loop_weight.scale(&Int::from(i)));
            match kind {
                GraphKind::BetaY => {
                    for (mu, len) in single_column_removals(&lam) {
                        down.add_edge(&lam, mu, b.pow(len as u32 - 1));
                    }
                }
                GraphKind::KappaY => {
                    for mu in lam.subdiagrams().into_iter().filter(|m| *m != lam) {
                        let s = SkewShape::new(lam.clone(), mu.clone()).expect("subdiagram");
                        let c = s.column_count() as u32;
                        down.add_edge(&lam, mu, &k.pow(c) * &b.pow(s.size() as u32 - c));
                    }
                }
                GraphKind::MoebiusY => {
                    for mu in rook_strip_removals(&lam).into_iter().filter(|m| *m != lam) {
                        down.add_edge(&lam, mu, Poly::one(&ring));
                    }
                }
            }
        }
        FilteredGraph {
            kind,
            rank_bound,
            ring,
            beta: b,
            kappa: k,
            up,
            down,
        }
    }

    pub fn vertices(&self) -> Vec<Partition> {
        partitions_up_to(self.rank_bound)
    }

    /// Up edges with each of the `i(λ)` loops listed separately.
    pub fn unfolded_up_edges(&self, lam: &Partition) -> Vec<(Partition, Poly)> {
        let mut out = Vec::new();
        for (to, w) in self.up.image(lam).iter() {
            if to == lam {
                let unit = match self.kind {
                    GraphKind::MoebiusY => Poly::one(&self.ring),
                    _ => -&self.beta,
                };
                out.extend(std::iter::repeat_n((to.clone(), unit), lam.corner_count()));
            } else {
                out.push((to.clone(), w.clone()));
            }
        }
        out
    }

    pub fn to_json(&self) -> GraphJson {
        let edges = |op: &Operator| {
            op.entries()
                .into_iter()
                .map(|(from, to, w)| EdgeJson {
                    from: from.to_string(),
                    to: to.to_string(),
                    weight: w.to_string(),
                })
                .collect()
        };
        GraphJson {
            kind: self.kind,
            rank_bound: self.rank_bound,
            vertices: self.vertices().iter().map(|p| p.to_string()).collect(),
            up_edges: edges(&self.up),
            down_edges: edges(&self.down),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    /// `[D, U] = 1`
    DuUdEq1,
    /// `[D, U] = ϰ(1 + D)`
    EqKappa1PlusD,
    /// `[D, U] = 1 + D`
    Eq1PlusD,
}

impl Relation {
    pub fn for_kind(kind: GraphKind) -> Self {
        match kind {
            GraphKind::BetaY => Relation::DuUdEq1,
            GraphKind::KappaY => Relation::EqKappa1PlusD,
            GraphKind::MoebiusY => Relation::Eq1PlusD,
        }
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "DU_UD_eq_1" => Ok(Relation::DuUdEq1),
            "eq_kappa_1_plus_D" => Ok(Relation::EqKappa1PlusD),
            "eq_1_plus_D" => Ok(Relation::Eq1PlusD),
            _ => Err(Error::InvalidSpec(format!("unknown relation `{s}`"))),
        }
    }
}

/// `[D, U] v = (α + γD) v` for the given down operator, on `|v| ≤ N − 1`.
fn check_commutator(ch: &mut Checker, ring: &RingRef, n: usize, up: &Operator, down: &Operator, alpha: &Poly, gamma: &Poly) {
    if n == 0 {
        return;
    }
    for lam in partitions_up_to(n - 1) {
        ch.shape();
        let v = ModuleElement::basis(ring, lam.clone());
        let du = down.apply(&up.apply(&v));
        let ud = up.apply(&down.apply(&v));
        let lhs = du.sub(&ud);
        let mut rhs = v.scale_poly(alpha);
        rhs.add_owned(down.apply(&v).scale_poly(gamma));
        ch.module(format!("v={lam}"), &lhs, &rhs);
    }
}

pub fn commutator_check(g: &FilteredGraph, relation: Relation) -> Result<VerificationReport> {
    if Relation::for_kind(g.kind) != relation {
        return Err(Error::InvalidSpec(format!("{relation:?} is not the relation of {}", g.kind)));
    }
    let one = Poly::one(&g.ring);
    let (alpha, gamma) = match relation {
        Relation::DuUdEq1 => (one, Poly::zero(&g.ring)),
        Relation::EqKappa1PlusD => (g.kappa.clone(), g.kappa.clone()),
        Relation::Eq1PlusD => (one.clone(), one),
    };
    let mut ch = Checker::new(format!("commutator of {} at N={}", g.kind, g.rank_bound));
    check_commutator(&mut ch, &g.ring, g.rank_bound, &g.up, &g.down, &alpha, &gamma);
    Ok(ch.finish())
}

/// Builds the Cauchy filtration at `ϰ = β = −1`, transforms its down
/// operator by `D ↦ −D(1 + D)^{-1}`, and compares with the Möbius
/// deformation.
pub fn moebius_from_cauchy(rank_bound: usize) -> Result<VerificationReport> {
    let cauchy = FilteredGraph::build(GraphKind::KappaY, Param::Int(-1), Param::Int(-1), rank_bound);
    let moebius = FilteredGraph::build(GraphKind::MoebiusY, Param::Formal, Param::Formal, rank_bound);
    let ring = &cauchy.ring;
    let mut ch = Checker::new(format!("Moebius deformation from the Cauchy filtration at N={rank_bound}"));

    // D̂ = Σ_{k≥1} (−1)^k D̄^k, which terminates since D̄ lowers rank
    let mut hat = Operator::zero(ring, rank_bound);
    for lam in cauchy.vertices() {
        ch.shape();
        let mut power = ModuleElement::basis(ring, lam.clone());
        let mut acc = ModuleElement::zero(ring);
        for k in 1..=rank_bound + 1 {
            power = cauchy.down.apply(&power);
            if power.is_zero() {
                break;
            }
            if k % 2 == 0 {
                acc.add_assign(&power);
            } else {
                acc = acc.sub(&power);
            }
        }
        let tail = cauchy.down.apply(&power);
        ch.module(format!("nilpotency at {lam}"), &tail, &ModuleElement::zero(ring));
        ch.module(format!("down row at {lam}"), &acc, &moebius.down.image(&lam));
        hat.images.insert(lam, acc);
    }
    let one = Poly::one(ring);
    check_commutator(&mut ch, ring, rank_bound, &cauchy.up, &hat, &one, &one);
    ch.note("up operator taken from the Cauchy filtration at beta = -1");
    Ok(ch.finish())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Up,
    Down,
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "up" => Ok(Direction::Up),
            "down" => Ok(Direction::Down),
            _ => Err(Error::InvalidSpec(format!("direction must be up or down, not `{s}`"))),
        }
    }
}

/// Weighted sum over walks of `steps` edges from `from` to `to`.
pub fn walk_sum(g: &FilteredGraph, from: &Partition, to: &Partition, steps: usize, dir: Direction) -> Result<Poly> {
    let top = from.weight().max(to.weight());
    if top > g.rank_bound {
        return Err(Error::InvalidSpec(format!(
            "walk endpoints exceed the rank bound {}",
            g.rank_bound
        )));
    }
    let op = match dir {
        Direction::Up => &g.up,
        Direction::Down => &g.down,
    };
    let mut v = ModuleElement::basis(&g.ring, from.clone());
    for _ in 0..steps {
        v = op.apply(&v);
    }
    Ok(v.coefficient(to))
}

#[cfg(test)]
mod tests;
