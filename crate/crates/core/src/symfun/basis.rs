//! Expansions in the `G` and `g` bases, and the checks built on them.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::module::ModuleElement;
use crate::partition::{partitions_up_to, Partition};
use crate::poly::{Cap, Int, Monomial, Poly, Ring};
use crate::report::{Checker, VerificationReport};

use super::schur::{check_symmetric, dominant_part, expand_dominant, Basis, SymExpansion};
use super::{Evaluator, Kind};

/// Result of peeling: the expansion, what could not be peeled, and the
/// largest weight in the support.
#[derive(Clone, Debug)]
pub struct BasisExpansion {
    pub expansion: SymExpansion,
    pub residual: Poly,
    pub max_support_weight: usize,
}

/// Expands `f` in `{G_λ}` (peeling from the lowest degree, since
/// `G_λ = s_λ + higher terms`) or in `{g_λ}` (from the highest degree).
///
/// Only dominant monomials are tracked. Peeling stops with a nonzero
/// residual if a component exceeds the number of variables.
pub fn basis_expand(f: &Poly, ev: &Evaluator, kind: Kind) -> Result<BasisExpansion> {
    let ai = ev
        .vars()
        .first()
        .ok_or_else(|| Error::InvalidSpec("no variables".into()))?
        .alphabet();
    let ring = ev.ring();
    let n = ring.alphabets()[ai].size;
    let basis = match kind {
        Kind::G => Basis::GBasis,
        Kind::Gd => Basis::GdBasis,
        _ => return Err(Error::InvalidSpec("only the G and g bases are supported".into())),
    };
    check_symmetric(f, ai)?;
    let mut rem = dominant_part(f, ai);
    let mut terms = ModuleElement::zero(ring);
    let mut cache: HashMap<Partition, Poly> = HashMap::new();
    let mut max_w = 0;
    while !rem.is_zero() {
        let d = if kind == Kind::G {
            rem.min_degree_in(ai)
        } else {
            rem.max_degree_in(ai)
        }
        .expect("nonzero");
        if d as usize > n {
            break;
        }
        let comp = rem.component(ai, d);
        let se = expand_dominant(&comp, ai)?;
        for (lam, c) in se.terms.iter() {
            let b = match cache.get(lam) {
                Some(b) => b.clone(),
                None => {
                    let full = ev.family(kind, lam, &Partition::empty())?;
                    let b = dominant_part(&full, ai);
                    cache.insert(lam.clone(), b.clone());
                    b
                }
            };
            rem -= &(c * &b);
            terms.add_term(lam.clone(), c.clone());
            max_w = max_w.max(lam.weight());
        }
    }
    Ok(BasisExpansion {
        expansion: SymExpansion { basis, nvars: n, terms },
        residual: rem,
        max_support_weight: max_w,
    })
}

fn conjugate_terms(e: &ModuleElement) -> ModuleElement {
    ModuleElement::from_terms(e.ring(), e.iter().map(|(l, c)| (l.conjugate(), c.clone())))
}

/// Conjugation symmetry of basis expansions.
///
/// If `G_{λ//μ} = Σ c_ρ G_ρ` then `G_{λ'//μ'} = Σ c_ρ G_{ρ'}`, likewise for
/// products `G_μ G_ν` and for the `g` family. This is what it means for the
/// involutions sending `G_λ ↦ G_{λ'}` and `g_λ ↦ g_{λ'}` to be ring maps
/// that respect the skew functions.
pub fn tau_check(max_weight: usize, nvars: usize, cap: u32) -> Result<VerificationReport> {
    let ring = Ring::builder()
        .scalar("b", Cap::Finite(cap))
        .indexed("x", nvars, Cap::Finite(cap))
        .build()?;
    let ev = Evaluator::for_alphabet(&ring, "x")?;
    let mut ch = Checker::new("conjugation symmetry of G and g expansions");
    let shapes = partitions_up_to(max_weight);
    let compare = |ch: &mut Checker, ctx: String, a: &BasisExpansion, b: &BasisExpansion| {
        let zero = Poly::zero(&ring);
        ch.poly(format!("{ctx}: residual"), &a.residual, &zero)
            && ch.poly(format!("{ctx}: conjugate residual"), &b.residual, &zero)
            && ch.module(ctx, &conjugate_terms(&a.expansion.terms), &b.expansion.terms)
    };
    for lam in &shapes {
        for mu in lam.subdiagrams() {
            ch.shape();
            let (lc, mc) = (lam.conjugate(), mu.conjugate());
            let a = basis_expand(&ev.family(Kind::G, lam, &mu)?, &ev, Kind::G)?;
            let b = basis_expand(&ev.family(Kind::G, &lc, &mc)?, &ev, Kind::G)?;
            compare(&mut ch, format!("G[{lam}//{mu}]"), &a, &b);
            if lam.weight() - mu.weight() <= nvars.min(cap as usize) {
                let a = basis_expand(&ev.family(Kind::Gd, lam, &mu)?, &ev, Kind::Gd)?;
                let b = basis_expand(&ev.family(Kind::Gd, &lc, &mc)?, &ev, Kind::Gd)?;
                compare(&mut ch, format!("g[{lam}/{mu}]"), &a, &b);
            }
        }
    }
    let small: Vec<&Partition> = shapes.iter().filter(|p| p.weight() <= max_weight / 2).collect();
    for mu in &small {
        for nu in &small {
            let g = |p: &Partition, k: Kind| ev.family(k, p, &Partition::empty());
            let (mc, nc) = (mu.conjugate(), nu.conjugate());
            let a = basis_expand(&(&g(mu, Kind::G)? * &g(nu, Kind::G)?), &ev, Kind::G)?;
            let b = basis_expand(&(&g(&mc, Kind::G)? * &g(&nc, Kind::G)?), &ev, Kind::G)?;
            compare(&mut ch, format!("G[{mu}]*G[{nu}]"), &a, &b);
            if mu.weight() + nu.weight() <= nvars.min(cap as usize) {
                let a = basis_expand(&(&g(mu, Kind::Gd)? * &g(nu, Kind::Gd)?), &ev, Kind::Gd)?;
                let b = basis_expand(&(&g(&mc, Kind::Gd)? * &g(&nc, Kind::Gd)?), &ev, Kind::Gd)?;
                compare(&mut ch, format!("g[{mu}]*g[{nu}]"), &a, &b);
            }
        }
    }
    Ok(ch.finish())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DampingFamily {
    J,
    G,
}

/// For `j`: `j_{λ/μ}(x_1..x_n) = 0` whenever `λ_1 > μ_1 + n`, over all
/// `|λ| ≤ bound`. For `g`: exhibits `g_{(1^k)}(x_1) = β^{k−1} x_1 ≠ 0` for
/// every `k ≤ bound`, so no bound on the length of `λ` in terms of `n`
/// holds; the report passes when that witness is confirmed.
pub fn damping_check(family: DampingFamily, nvars: usize, bound: usize) -> Result<VerificationReport> {
    let cap = bound as u32;
    match family {
        DampingFamily::J => {
            let ring = Ring::builder()
                .scalar("b", Cap::Finite(cap))
                .indexed("x", nvars, Cap::Finite(cap))
                .build()?;
            let ev = Evaluator::for_alphabet(&ring, "x")?;
            let mut ch = Checker::new(format!("damping of j in {nvars} variables"));
            let zero = Poly::zero(&ring);
            let (mut vanishing, mut nonzero) = (0, 0);
            for lam in partitions_up_to(bound) {
                for mu in lam.subdiagrams() {
                    let j = ev.family(Kind::Jd, &lam, &mu)?;
                    ch.shape();
                    if lam.first_part() > mu.first_part() + nvars {
                        vanishing += 1;
                        ch.poly(format!("j[{lam}/{mu}]"), &j, &zero);
                    } else if !j.is_zero() {
                        nonzero += 1;
                    }
                }
            }
            ch.note(format!("{vanishing} shapes beyond the bound vanish; {nonzero} within it are nonzero"));
            Ok(ch.finish())
        }
        DampingFamily::G => {
            let ring = Ring::builder()
                .scalar("b", Cap::Finite(cap))
                .indexed("x", 1, Cap::Finite(cap))
                .build()?;
            let ev = Evaluator::for_alphabet(&ring, "x")?;
            let mut ch = Checker::new("g has no damping bound");
            let (x, b) = (ev.vars()[0], ev.beta());
            for k in 1..=bound {
                let lam = Partition::from_parts(&vec![1; k]);
                let g = ev.family(Kind::Gd, &lam, &Partition::empty())?;
                let want = Poly::monomial(&ring, Monomial::from_powers(&[(x, 1), (b, k as u32 - 1)]), Int::ONE);
                ch.shape();
                ch.poly(format!("g[{lam}] in one variable"), &g, &want);
            }
            ch.note(format!("g[1^k](x1) = b^(k-1)*x1 is nonzero for k = 1..{bound}"));
            Ok(ch.finish())
        }
    }
}

/// `Σ_ρ G_{λ//ρ}(x) J_{ρ//μ}(−x) = δ_{λμ}` for all `|λ|, |μ| ≤ max_weight`.
pub fn orthogonality_check(max_weight: usize, nvars: usize, cap: u32) -> Result<VerificationReport> {
    let ring = Ring::builder()
        .scalar("b", Cap::Finite(cap))
        .indexed("x", nvars, Cap::Finite(cap))
        .build()?;
    let ev = Evaluator::for_alphabet(&ring, "x")?;
    let ai = ring.alphabet_index("x")?;
    let mut ch = Checker::new("orthogonality of G and J");
    let shapes = partitions_up_to(max_weight);
    for lam in &shapes {
        for mu in &shapes {
            ch.shape();
            let mut sum = Poly::zero(&ring);
            if lam.contains(mu) {
                for rho in lam.subdiagrams().into_iter().filter(|r| r.contains(mu)) {
                    let g = ev.family(Kind::G, lam, &rho)?;
                    let j = ev.family(Kind::J, &rho, mu)?.negate_alphabet(ai);
                    sum += &(&g * &j);
                }
            }
            let want = if lam == mu { Poly::one(&ring) } else { Poly::zero(&ring) };
            ch.poly(format!("lambda={lam}, mu={mu}"), &sum, &want);
        }
    }
    Ok(ch.finish())
}
