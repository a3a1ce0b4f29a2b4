//! Exact verification of the Cauchy, Pieri and related identities at
//! finite truncation.
//!
//! Infinite sums over `λ` are taken over the support of an operator table
//! (for instance `A(x_m)⋯A(x_1)·μ`), which is exactly the set of `λ` whose
//! term survives the x-cap. No separate enumeration bound is needed.

mod cauchy;
mod pieri;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{partitions_up_to, Partition};
use crate::poly::{Cap, Poly, Ring, RingRef, Subst, Var};
use crate::report::{Checker, VerificationReport};
use crate::symfun::Evaluator;

pub use pieri::{pieri_coefficient, y_basis_coefficients, PieriKind};

/// β as a formal variable or specialized after expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BetaSpec {
    Formal,
    Zero,
    One,
    MinusOne,
}

impl FromStr for BetaSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "formal" | "b" => Ok(BetaSpec::Formal),
            "0" => Ok(BetaSpec::Zero),
            "1" => Ok(BetaSpec::One),
            "-1" => Ok(BetaSpec::MinusOne),
            _ => Err(Error::InvalidSpec(format!("beta must be formal, 0, 1 or -1, not `{s}`"))),
        }
    }
}

impl fmt::Display for BetaSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BetaSpec::Formal => "formal",
            BetaSpec::Zero => "0",
            BetaSpec::One => "1",
            BetaSpec::MinusOne => "-1",
        })
    }
}

macro_rules! identity_names {
    ($($variant:ident => $name:literal,)*) => {
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
        pub enum IdentityName {
            $($variant,)*
        }

        impl IdentityName {
            pub const ALL: &'static [IdentityName] = &[$(IdentityName::$variant,)*];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(IdentityName::$variant => $name,)*
                }
            }
        }

        impl FromStr for IdentityName {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(IdentityName::$variant),)*
                    _ => Err(Error::InvalidSpec(format!("unknown identity `{s}`"))),
                }
            }
        }
    };
}

identity_names! {
    SkewCauchy => "skewCauchy",
    DualSkewCauchyJg => "dualSkewCauchyJg",
    DualSkewCauchyGj => "dualSkewCauchyGj",
    DualSkewCauchyJj => "dualSkewCauchyJj",
    Cauchy => "cauchy",
    PieriType1 => "pieriType1",
    PieriType2 => "pieriType2",
    SpecializationY1 => "specializationY1",
    SpecializationYq => "specializationYq",
    SpecializationDcount => "specializationDcount",
    SpecializationCatalan => "specializationCatalan",
    SpecializationPureskew => "specializationPureskew",
    SkewPieriG1k => "skewPieriG1k",
    SkewPieriGdk => "skewPierigk",
    DualSkewPieriGk => "dualSkewPieriGk",
    DualSkewPieriGd1k => "dualSkewPierig1k",
    SimpleSkewPieri => "simpleSkewPieri",
    SchurSkewPieri => "schurSkewPieri",
    SkewPieriType1 => "skewPieriType1",
    SkewPieriType2 => "skewPieriType2",
    SkewPieriType3 => "skewPieriType3",
    SkewPieriType4 => "skewPieriType4",
    SingleVarCorollaries => "singleVarCorollaries",
    Orthogonality => "orthogonality",
    JColumnGenerating => "jColumnGenerating",
}

impl fmt::Display for IdentityName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl IdentityName {
    /// Identities that only hold at β = 1.
    pub fn needs_beta_one(self) -> bool {
        matches!(
            self,
            IdentityName::SpecializationDcount
                | IdentityName::SpecializationCatalan
                | IdentityName::SpecializationPureskew
                | IdentityName::SimpleSkewPieri
        )
    }

    pub fn default_beta(self) -> BetaSpec {
        if self.needs_beta_one() {
            BetaSpec::One
        } else if self == IdentityName::SchurSkewPieri {
            BetaSpec::Zero
        } else {
            BetaSpec::Formal
        }
    }
}

/// One identity instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentitySpec {
    pub name: IdentityName,
    pub mu: Partition,
    pub nu: Partition,
    pub k: usize,
    pub xvars: usize,
    pub yvars: usize,
    pub xcap: u32,
    pub ycap: u32,
    pub bcap: u32,
    /// `None` picks the identity's natural specialization.
    pub beta: Option<BetaSpec>,
}

impl IdentitySpec {
    pub fn new(name: IdentityName) -> Self {
        IdentitySpec {
            name,
            mu: Partition::empty(),
            nu: Partition::empty(),
            k: 1,
            xvars: 2,
            yvars: 2,
            xcap: 4,
            ycap: 4,
            bcap: 5,
            beta: None,
        }
    }

    pub fn mu(mut self, mu: Partition) -> Self {
        self.mu = mu;
        self
    }

    pub fn nu(mut self, nu: Partition) -> Self {
        self.nu = nu;
        self
    }

    pub fn k(mut self, k: usize) -> Self {
        self.k = k;
        self
    }

    pub fn vars(mut self, x: usize, y: usize) -> Self {
        self.xvars = x;
        self.yvars = y;
        self
    }

    pub fn caps(mut self, x: u32, y: u32, b: u32) -> Self {
        self.xcap = x;
        self.ycap = y;
        self.bcap = b;
        self
    }

    pub fn beta(mut self, beta: BetaSpec) -> Self {
        self.beta = Some(beta);
        self
    }

    fn label(&self) -> String {
        format!("{} mu={} nu={} k={}", self.name, self.mu, self.nu, self.k)
    }
}

/// Rings and evaluators shared by the identity checks.
pub(crate) struct Ctx {
    pub ring: RingRef,
    pub beta: BetaSpec,
    pub b: Var,
    pub q: Var,
    pub xs: Vec<Var>,
    pub ys: Vec<Var>,
    pub xai: usize,
    pub yai: usize,
    pub evx: Evaluator,
    pub evy: Evaluator,
}

impl Ctx {
    fn new(spec: &IdentitySpec, beta: BetaSpec) -> Result<Self> {
        // β must not be truncated before a ±1 substitution
        let bcap = match beta {
            BetaSpec::One | BetaSpec::MinusOne => Cap::Unbounded,
            _ => Cap::Finite(spec.bcap),
        };
        let ring = Ring::builder()
            .scalar("b", bcap)
            .indexed("x", spec.xvars, Cap::Finite(spec.xcap))
            .indexed("y", spec.yvars, Cap::Finite(spec.ycap))
            .scalar("q", Cap::Finite(spec.ycap))
            .build()?;
        let b = ring.scalar("b")?;
        let xs = ring.vars("x")?;
        let ys = ring.vars("y")?;
        Ok(Ctx {
            beta,
            b,
            q: ring.scalar("q")?,
            xai: ring.alphabet_index("x")?,
            yai: ring.alphabet_index("y")?,
            evx: Evaluator::new(&ring, &xs, b),
            evy: Evaluator::new(&ring, &ys, b),
            xs,
            ys,
            ring,
        })
    }

    pub fn specialize(&self, p: &Poly) -> Poly {
        match self.beta {
            BetaSpec::Formal => p.clone(),
            BetaSpec::Zero => p.specialize(&[(self.b, Subst::Zero)]),
            BetaSpec::One => p.specialize(&[(self.b, Subst::One)]),
            BetaSpec::MinusOne => p.specialize(&[(self.b, Subst::MinusOne)]),
        }
    }

    pub fn compare(&self, ch: &mut Checker, ctx: impl fmt::Display, lhs: &Poly, rhs: &Poly) -> bool {
        ch.poly(ctx, &self.specialize(lhs), &self.specialize(rhs))
    }

    pub fn zero(&self) -> Poly {
        Poly::zero(&self.ring)
    }

    pub fn one(&self) -> Poly {
        Poly::one(&self.ring)
    }

    /// `β^e`, or zero for negative `e`.
    pub fn beta_pow(&self, e: i64) -> Poly {
        if e < 0 {
            return self.zero();
        }
        Poly::var(&self.ring, self.b).pow(e as u32)
    }
}

/// Runs one identity instance.
pub fn verify(spec: &IdentitySpec) -> Result<VerificationReport> {
    let beta = spec.beta.unwrap_or(spec.name.default_beta());
    if spec.name.needs_beta_one() && beta != BetaSpec::One {
        return Err(Error::InvalidSpec(format!("{} holds only at beta = 1", spec.name)));
    }
    if spec.name == IdentityName::SchurSkewPieri && beta != BetaSpec::Zero {
        return Err(Error::InvalidSpec("schurSkewPieri is the beta = 0 statement".into()));
    }
    let ctx = Ctx::new(spec, beta)?;
    let mut ch = Checker::new(format!("{} [beta={beta}]", spec.label()));
    use IdentityName as N;
    match spec.name {
        N::SkewCauchy | N::DualSkewCauchyJg | N::DualSkewCauchyGj | N::DualSkewCauchyJj => {
            cauchy::skew_cauchy(&ctx, spec, &mut ch)?
        }
        N::Cauchy => cauchy::skew_cauchy(&ctx, &spec.clone().mu(Partition::empty()).nu(Partition::empty()), &mut ch)?,
        N::PieriType1 | N::PieriType2 => cauchy::pieri_type(&ctx, spec, &mut ch)?,
        N::SpecializationY1 => cauchy::specialization_y1(&ctx, spec, &mut ch)?,
        N::SpecializationYq => cauchy::specialization_yq(&ctx, spec, &mut ch)?,
        N::SpecializationDcount => cauchy::dcount(&ctx, &mut ch)?,
        N::SpecializationCatalan => cauchy::catalan(&ctx, spec, &mut ch)?,
        N::SpecializationPureskew => cauchy::pure_skew(&ctx, spec, &mut ch)?,
        N::SkewPieriG1k | N::SkewPieriGdk | N::DualSkewPieriGk | N::DualSkewPieriGd1k => {
            pieri::skew_pieri(&ctx, spec, &mut ch)?
        }
        N::SimpleSkewPieri => pieri::simple_skew_pieri(&ctx, spec, &mut ch)?,
        N::SchurSkewPieri => pieri::schur_skew_pieri(&ctx, spec, &mut ch)?,
        N::SkewPieriType1 | N::SkewPieriType2 | N::SkewPieriType3 | N::SkewPieriType4 => {
            cauchy::skew_pieri_type(&ctx, spec, &mut ch)?
        }
        N::SingleVarCorollaries => pieri::single_var_corollaries(&ctx, spec, &mut ch)?,
        N::Orthogonality => cauchy::orthogonality(&ctx, spec, &mut ch)?,
        N::JColumnGenerating => cauchy::j_column_generating(&ctx, &mut ch)?,
    }
    Ok(ch.finish())
}

/// Runs `name` for every pair `ν ⊆ μ` (or every pair, when the identity
/// has no containment condition) with `|μ|, |ν| ≤ max_weight`, in parallel.
pub fn verify_all_pairs(template: &IdentitySpec, max_weight: usize, require_nested: bool) -> Result<VerificationReport> {
    use rayon::prelude::*;
    let shapes = partitions_up_to(max_weight);
    let mut jobs = Vec::new();
    for mu in &shapes {
        for nu in &shapes {
            if !require_nested || mu.contains(nu) {
                jobs.push(template.clone().mu(mu.clone()).nu(nu.clone()));
            }
        }
    }
    let reports: Result<Vec<VerificationReport>> = jobs.par_iter().map(verify).collect();
    Ok(VerificationReport::combine(
        format!("{} over |mu|,|nu| <= {max_weight}", template.name),
        reports?,
    ))
}

#[cfg(test)]
mod tests;
