//! Expansion of symmetric polynomials in Schur polynomials, and `ω`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::module::{ModuleElement, ModuleTermJson};
use crate::partition::{horizontal_strips_under, partitions_of, Partition, SkewShape};
use crate::poly::{Int, Monomial, Poly, RingRef, Var};
use crate::tableau::{enumerate, Family, TableauShape};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    Monomial,
    Schur,
    #[serde(rename = "G")]
    GBasis,
    #[serde(rename = "g")]
    GdBasis,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::Monomial => "monomial",
            Basis::Schur => "schur",
            Basis::GBasis => "G",
            Basis::GdBasis => "g",
        })
    }
}

impl FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "monomial" | "m" => Ok(Basis::Monomial),
            "schur" | "s" => Ok(Basis::Schur),
            "G" => Ok(Basis::GBasis),
            "g" => Ok(Basis::GdBasis),
            _ => Err(Error::InvalidSpec(format!("unknown basis `{s}`"))),
        }
    }
}

/// `Σ c_λ b_λ` in some basis `b`; coefficients are free of the expanded
/// alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymExpansion {
    pub basis: Basis,
    pub nvars: usize,
    pub terms: ModuleElement,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymExpansionJson {
    pub basis: Basis,
    pub terms: Vec<ModuleTermJson>,
}

impl SymExpansion {
    pub fn to_json(&self) -> SymExpansionJson {
        SymExpansionJson {
            basis: self.basis,
            terms: self.terms.to_json(),
        }
    }
}

impl fmt::Display for SymExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_zero() {
            return f.write_str("0");
        }
        let prefix = match self.basis {
            Basis::Monomial => "m",
            Basis::Schur => "s",
            Basis::GBasis => "G",
            Basis::GdBasis => "g",
        };
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(lam, c)| {
                if c.is_constant() && c.constant_term() == Int::ONE {
                    format!("{prefix}[{lam}]")
                } else {
                    format!("({c})*{prefix}[{lam}]")
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

fn kostka_cache() -> &'static Mutex<HashMap<(Partition, Vec<usize>), u64>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Vec<usize>), u64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Number of semistandard tableaux of shape `nu` and content `content`,
/// by peeling one horizontal strip per letter.
pub fn kostka(nu: &Partition, content: &[usize]) -> u64 {
    if content.iter().sum::<usize>() != nu.weight() {
        return 0;
    }
    let Some((&last, rest)) = content.split_last() else {
        return 1;
    };
    let key = (nu.clone(), content.to_vec());
    if let Some(&k) = kostka_cache().lock().unwrap().get(&key) {
        return k;
    }
    let k = horizontal_strips_under(nu)
        .into_iter()
        .filter(|rho| nu.weight() - rho.weight() == last)
        .map(|rho| kostka(&rho, rest))
        .sum();
    kostka_cache().lock().unwrap().insert(key, k);
    k
}

fn exponent_key(ring: &RingRef, ai: usize, lam: &Partition) -> Option<Monomial> {
    let a = &ring.alphabets()[ai];
    if lam.len() > a.size {
        return None;
    }
    let powers: Vec<(Var, u32)> = lam
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| (ring.var_at(a.offset() + i), p as u32))
        .collect();
    Some(Monomial::from_powers(&powers))
}

/// Checks symmetry under adjacent transpositions of alphabet `ai`.
pub(crate) fn check_symmetric(f: &Poly, ai: usize) -> Result<()> {
    let ring = f.ring();
    let a = &ring.alphabets()[ai];
    let split = f.split_by_alphabet(ai);
    for (m, c) in &split {
        let e = m.exponents(ring);
        let base = a.offset();
        for i in 0..a.size.saturating_sub(1) {
            if e[base + i] == e[base + i + 1] {
                continue;
            }
            let mut sw = e.clone();
            sw.swap(base + i, base + i + 1);
            let key = Monomial::from_exponents(ring, &sw)?;
            if split.get(&key) != Some(c) {
                return Err(Error::NotSymmetric {
                    alphabet: a.name.clone(),
                    i: i + 1,
                    j: i + 2,
                });
            }
        }
    }
    Ok(())
}

/// `f = Σ c_λ s_λ(x)` for the alphabet `ai`, computed per homogeneous
/// component by triangular elimination against the monomials `x^λ`.
///
/// Requires symmetry and that every component degree is at most the number
/// of variables, so that no `s_λ` collapses to zero.
pub fn schur_expand(f: &Poly, ai: usize) -> Result<SymExpansion> {
    check_symmetric(f, ai)?;
    expand_dominant(f, ai)
}

/// Schur expansion read off the monomials `x^λ` only; `f` may already be
/// restricted to its dominant part.
pub(crate) fn expand_dominant(f: &Poly, ai: usize) -> Result<SymExpansion> {
    let ring = f.ring();
    let n = ring.alphabets()[ai].size;
    if let Some(d) = f.max_degree_in(ai) {
        if d as usize > n {
            return Err(Error::NotFaithful { degree: d as usize, vars: n });
        }
    }
    let split = f.split_by_alphabet(ai);
    let mut degrees: Vec<u32> = split.keys().map(|m| ring.degree_in(ai, m.0)).collect();
    degrees.sort_unstable();
    degrees.dedup();
    let mut out = ModuleElement::zero(ring);
    for d in degrees {
        // lexicographically decreasing order refines dominance
        let mut lams = partitions_of(d as usize);
        lams.sort_by(|a, b| b.parts().cmp(a.parts()));
        let mut found: Vec<(Partition, Poly)> = Vec::new();
        for lam in lams {
            let Some(key) = exponent_key(ring, ai, &lam) else {
                continue;
            };
            let mut c = split.get(&key).cloned().unwrap_or_else(|| Poly::zero(ring));
            for (nu, cn) in &found {
                let k = kostka(nu, lam.parts());
                if k != 0 {
                    c -= &cn.scale(&Int::from(k));
                }
            }
            if !c.is_zero() {
                found.push((lam, c));
            }
        }
        for (lam, c) in found {
            out.add_term(lam, c);
        }
    }
    Ok(SymExpansion {
        basis: Basis::Schur,
        nvars: n,
        terms: out,
    })
}

/// `ω(s_λ) = s_{λ'}`.
pub fn omega(e: &SymExpansion) -> Result<SymExpansion> {
    if e.basis != Basis::Schur {
        return Err(Error::InvalidSpec("omega needs a Schur expansion".into()));
    }
    let mut out = ModuleElement::zero(e.terms.ring());
    for (lam, c) in e.terms.iter() {
        let conj = lam.conjugate();
        if conj.len() > e.nvars {
            return Err(Error::NotFaithful {
                degree: lam.weight(),
                vars: e.nvars,
            });
        }
        out.add_term(conj, c.clone());
    }
    Ok(SymExpansion {
        basis: Basis::Schur,
        nvars: e.nvars,
        terms: out,
    })
}

/// `s_{λ/μ}(xs)` by summing `x^T` over semistandard tableaux.
pub fn schur_polynomial(shape: &SkewShape, ring: &RingRef, xs: &[Var]) -> Result<Poly> {
    let ts = enumerate(Family::Ssyt, &TableauShape::Skew(shape.clone()), xs.len(), None)?;
    let terms = ts.iter().map(|t| {
        let powers: Vec<(Var, u32)> = t
            .cells
            .iter()
            .map(|(_, e)| (xs[e[0] - 1], 1))
            .collect();
        (Monomial::from_powers(&powers), Int::ONE)
    });
    Ok(Poly::from_terms(ring, terms))
}

/// Keeps only terms whose exponents in alphabet `ai` are weakly
/// decreasing; a symmetric polynomial is determined by them.
pub(crate) fn dominant_part(f: &Poly, ai: usize) -> Poly {
    let ring = f.ring();
    let a = &ring.alphabets()[ai];
    let (lo, n) = (a.offset(), a.size);
    let terms = f.terms().filter(|(m, _)| {
        let e = m.exponents(ring);
        e[lo..lo + n].windows(2).all(|w| w[0] >= w[1])
    });
    Poly::from_terms(ring, terms.map(|(m, c)| (m, c.clone())))
}
