//! Cauchy-type sums and their specializations.

use crate::error::{Error, Result};
use crate::partition::{horizontal_strips_over, DoubleSlashShape, Partition, SkewShape};
use crate::poly::{cauchy_kernel, dual_kernel, Poly, Var};
use crate::report::Checker;
use crate::symfun::{Evaluator, Kind};

use super::{Ctx, IdentityName, IdentitySpec};

fn skew(lam: &Partition, mu: &Partition) -> SkewShape {
    SkewShape::new(lam.clone(), mu.clone()).expect("contained")
}

fn open_boxes(lam: &Partition, mu: &Partition) -> usize {
    DoubleSlashShape::new(lam.clone(), mu.clone()).expect("contained").open_box_count()
}

/// `∏_i 1/(1 − t·x_i)`.
fn h_generating(ctx: &Ctx, t: &Poly, xs: &[Var]) -> Result<Poly> {
    let mut out = ctx.one();
    for &x in xs {
        out = &out * &(t * &Poly::var(&ctx.ring, x)).geometric()?;
    }
    Ok(out)
}

fn kernel(ctx: &Ctx, dual: bool) -> Result<Poly> {
    if dual {
        Ok(dual_kernel(&ctx.ring, &ctx.xs, &ctx.ys))
    } else {
        cauchy_kernel(&ctx.ring, &ctx.xs, &ctx.ys)
    }
}

/// `Σ_λ X_{λ//μ}(x) Y_{λ/ν}(y) = K · Σ_κ X_{ν//κ}(x) Y_{μ/κ}(y)`.
fn cauchy_pair(ctx: &Ctx, kx: Kind, ky: Kind, dual: bool, mu: &Partition, nu: &Partition, ch: &mut Checker) -> Result<()> {
    let mut lhs = ctx.zero();
    let table = ctx.evx.table(kx, mu)?;
    for (lam, c) in table.iter() {
        ch.shape();
        lhs += &(c * &ctx.evy.family(ky, lam, nu)?);
    }
    let mut inner = ctx.zero();
    for kappa in nu.subdiagrams().into_iter().filter(|k| mu.contains(k)) {
        inner += &(&ctx.evx.family(kx, nu, &kappa)? * &ctx.evy.family(ky, mu, &kappa)?);
    }
    let rhs = &kernel(ctx, dual)? * &inner;
    ctx.compare(ch, format!("mu={mu}, nu={nu}"), &lhs, &rhs);
    Ok(())
}

pub(super) fn skew_cauchy(ctx: &Ctx, spec: &IdentitySpec, ch: &mut Checker) -> Result<()> {
    let (kx, ky, dual) = match spec.name {
        IdentityName::DualSkewCauchyJg => (Kind::J, Kind::Gd, true),
        IdentityName::DualSkewCauchyGj => (Kind::G, Kind::Jd, true),
        IdentityName::DualSkewCauchyJj => (Kind::J, Kind::Jd, false),
        _ => (Kind::G, Kind::Gd, false),
    };
    cauchy_pair(ctx, kx, ky, dual, &spec.mu, &spec.nu, ch)
}

pub(super) fn pieri_type(ctx: &Ctx, spec: &IdentitySpec, ch: &mut Checker) -> Result<()> {
    let empty = Partition::empty();
    if spec.name == IdentityName::PieriType1 {
        ch.note("sum of G[lambda](x) g[lambda/nu](y)");
        cauchy_pair(ctx, Kind::G, Kind::Gd, false, &empty, &spec.nu, ch)
    } else {
        ch.note("sum of G[lambda//mu](x) g[lambda](y)");
        cauchy_pair(ctx, Kind::G, Kind::Gd, false, &spec.mu, &empty, ch)
    }
}

/// `y = (1, 0, 0, …)`: `Σ_λ β^{|λ|−λ_1} G_{λ//μ} = β^{|μ|−μ_1} ∏ 1/(1−x_i)`.
pub(super) fn specialization_y1(ctx: &Ctx, spec: &IdentitySpec, ch: &mut Checker) -> Result<()> {
    let mu = &spec.mu;
    let mut lhs = ctx.zero();
    for (lam, c) in ctx.evx.table(Kind::G, mu)?.iter() {
        ch.shape();
        lhs += &(&ctx.beta_pow((lam.weight() - lam.first_part()) as i64) * c);
    }
    let rhs = &ctx.beta_pow((mu.weight() - mu.first_part()) as i64) * &h_generating(ctx, &ctx.one(), &ctx.xs)?;
    ctx.compare(ch, format!("mu={mu}"), &lhs, &rhs);
    Ok(())
}

/// `q^{c(λ/ν)} β^{|λ/ν|−c(λ/ν)}`, the one-variable `g_{λ/ν}(q)`.
fn g_at_q(ctx: &Ctx, lam: &Partition, nu: &Partition) -> Poly {
    let s = skew(lam, nu);
    let c = s.column_count();
    &Poly::var(&ctx.ring, ctx.q).pow(c as u32) * &ctx.beta_pow((s.size() - c) as i64)
}

pub(super) fn specialization_yq(ctx: &Ctx, spec: &IdentitySpec, ch: &mut Checker) -> Result<()> {
    let q = Poly::var(&ctx.ring, ctx.q);
    let hq = h_generating(ctx, &q, &ctx.xs)?;
    let hq_y = h_generating(ctx, &q, &ctx.ys)?;
    let empty = Partition::empty();
    let g_table = ctx.evx.table(Kind::G, &empty)?;

    // Σ_{λ⊇ν} g_{λ/ν}(q) G_λ(x) = ∏ 1/(1−q x_i) · G_ν(x)
    let nu = &spec.nu;
    let mut lhs = ctx.zero();
    for (lam, c) in g_table.iter().filter(|(l, _)| l.contains(nu)) {
        ch.shape();
        lhs += &(&g_at_q(ctx, lam, nu) * c);
    }
    let rhs = &hq * &ctx.evx.family(Kind::G, nu, &empty)?;
    ctx.compare(ch, format!("G side, nu={nu}"), &lhs, &rhs);

    // Σ_{λ/μ horizontal} (1−βq)^{a(λ//μ)} q^{|λ/μ|} g_λ(y) = ∏ 1/(1−q y_j) · g_μ(y)
    let mu = &spec.mu;
    let mbq = -(&Poly::var(&ctx.ring, ctx.b) * &q);
    let mut lhs = ctx.zero();
    for lam in horizontal_strips_over(mu, spec.ycap as usize) {
        ch.shape();
        let w = &mbq.one_plus_pow(open_boxes(&lam, mu) as i64)? * &q.pow((lam.weight() - mu.weight()) as u32);
        lhs += &(&w * &ctx.evy.family(Kind::Gd, &lam, &empty)?);
    }
    let rhs = &hq_y * &ctx.evy.family(Kind::Gd, mu, &empty)?;
    ctx.compare(ch, format!("g side, mu={mu}"), &lhs, &rhs);

    // Σ_λ G_λ(x) Σ_{ν⊆λ} g_{λ/ν}(q) g_ν(y) = Ω · ∏ 1/(1−q x_i)
    let mut lhs = ctx.zero();
    for (lam, c) in g_table.iter() {
        let mut gq = ctx.zero();
        for nu in lam.subdiagrams() {
            gq += &(&g_at_q(ctx, lam, &nu) * &ctx.evy.family(Kind::Gd, &nu, &empty)?);
        }
        lhs += &(c * &gq);
    }
    let rhs = &kernel(ctx, false)? * &hq;
    ctx.compare(ch, "Cauchy sum with q-deformed g", &lhs, &rhs);
    Ok(())
}

/// `Σ_λ d(λ) G_λ = ∏ (1−x_i)^{-2}` at β = 1.
pub(super) fn dcount(ctx: &Ctx, ch: &mut Checker) -> Result<()> {
    let mut lhs = ctx.zero();
    for (lam, c) in ctx.evx.table(Kind::G, &Partition::empty())?.iter() {
        ch.shape();
        lhs += &c.scale(&lam.subdiagram_count().into());
    }
    let h = h_generating(ctx, &ctx.one(), &ctx.xs)?;
    ctx.compare(ch, "sum of d(lambda) G[lambda]", &lhs, &(&h * &h));
    Ok(())
}

fn catalan_number(n: usize) -> u64 {
    // C_n = binom(2n, n) / (n + 1)
    let mut c: u64 = 1;
    for i in 0..n as u64 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// `Σ_λ G_{λ/μ} = d(μ) ∏ 1/(1−x_i)` at β = 1.
pub(super) fn catalan(ctx: &Ctx, spec: &IdentitySpec, ch: &mut Checker) -> Result<()> {
    let mu = &spec.mu;
    let mut lhs = ctx.zero();
    let mut seen = std::collections::BTreeSet::new();
    for nu in mu.subdiagrams() {
        for (lam, _) in ctx.evx.table(Kind::G, &nu)?.iter() {
            seen.insert(lam.clone());
        }
    }
    for lam in &seen {
        ch.shape();
        lhs += &ctx.evx.pure_skew_g(lam, mu)?;
    }
    let d = mu.subdiagram_count();
    ch.int("d(mu) against the subdiagram list", d, mu.subdiagrams().len() as u64);
    let rhs = h_generating(ctx, &ctx.one(), &ctx.xs)?.scale(&d.into());
    ctx.compare(ch, format!("mu={mu}"), &lhs, &rhs);
    let n = mu.len();
    if n > 0 && *mu == Partition::staircase(n) {
        ch.int(format!("d of staircase {n} is the Catalan number C_{}", n + 1), d, catalan_number(n + 1));
        ch.note(format!("d({mu}) = {d} = C_{} (C_{n} = {})", n + 1, catalan_number(n)));
    }
    Ok(())
}

/// `Σ_λ G_{λ/μ}(x) g_λ(y) = Ω · g_μ(1, y)` at β = 1.
pub(super) fn pure_skew(ctx: &Ctx, spec: &IdentitySpec, ch: &mut Checker) -> Result<()> {
    let mu = &spec.mu;
    let empty = Partition::empty();
    let mut seen = std::collections::BTreeSet::new();
    for nu in mu.subdiagrams() {
        for (lam, _) in ctx.evx.table(Kind::G, &nu)?.iter() {
            seen.insert(lam.clone());
        }
    }
    let mut lhs = ctx.zero();
    for lam in &seen {
        ch.shape();
        lhs += &(&ctx.evx.pure_skew_g(lam, mu)? * &ctx.evy.family(Kind::Gd, lam, &empty)?);
    }
    // g_μ(1, y) by branching off the first variable
    let mut g1 = ctx.zero();
    for nu in mu.subdiagrams() {
        let s = skew(mu, &nu);
        let w = ctx.beta_pow((s.size() - s.column_count()) as i64);
        g1 += &(&w * &ctx.evy.family(Kind::Gd, &nu, &empty)?);
    }
    let rhs = &kernel(ctx, false)? * &g1;
    ctx.compare(ch, format!("mu={mu}"), &lhs, &rhs);
    Ok(())
}

/// The four mixed sums whose right sides are a single skew function.
pub(super) fn skew_pieri_type(ctx: &Ctx, spec: &IdentitySpec, ch: &mut Checker) -> Result<()> {
    let (mu, nu) = (&spec.mu, &spec.nu);
    let (xai, yai) = (ctx.xai, ctx.yai);
    let mut lhs = ctx.zero();
    let rhs = match spec.name {
        IdentityName::SkewPieriType1 | IdentityName::SkewPieriType3 => {
            // Σ Y_{λ/μ}(y) Z_{ν/η}(−y) G_{λ//η}(x)
            let (ky, kz, dual) = if spec.name == IdentityName::SkewPieriType1 {
                (Kind::Gd, Kind::Jd, false)
            } else {
                (Kind::Jd, Kind::Gd, true)
            };
            for eta in nu.subdiagrams() {
                let z = ctx.evy.family(kz, nu, &eta)?.negate_alphabet(yai);
                if z.is_zero() {
                    continue;
                }
                for (lam, g) in ctx.evx.table(Kind::G, &eta)?.iter().filter(|(l, _)| l.contains(mu)) {
                    ch.shape();
                    lhs += &(&(&ctx.evy.family(ky, lam, mu)? * &z) * g);
                }
            }
            &kernel(ctx, dual)? * &ctx.evx.family(Kind::G, mu, nu)?
        }
        _ => {
            // Σ X_{λ//μ}(x) Z_{ν//η}(−x) g_{λ/η}(y)
            let (kx, kz, dual) = if spec.name == IdentityName::SkewPieriType2 {
                (Kind::G, Kind::J, false)
            } else {
                (Kind::J, Kind::G, true)
            };
            for eta in nu.subdiagrams() {
                let z = ctx.evx.family(kz, nu, &eta)?.negate_alphabet(xai);
                if z.is_zero() {
                    continue;
                }
                for (lam, x) in ctx.evx.table(kx, mu)?.iter() {
                    ch.shape();
                    lhs += &(&(x * &z) * &ctx.evy.family(Kind::Gd, lam, &eta)?);
                }
            }
            &kernel(ctx, dual)? * &ctx.evy.family(Kind::Gd, mu, nu)?
        }
    };
    ctx.compare(ch, format!("mu={mu}, nu={nu}"), &lhs, &rhs);
    Ok(())
}

/// `Σ_ρ G_{μ//ρ}(x) J_{ρ//ν}(−x) = δ_{μν}`, and with the factors swapped.
pub(super) fn orthogonality(ctx: &Ctx, spec: &IdentitySpec, ch: &mut Checker) -> Result<()> {
    let (mu, nu) = (&spec.mu, &spec.nu);
    let want = if mu == nu { ctx.one() } else { ctx.zero() };
    for (first, second, label) in [(Kind::G, Kind::J, "G then J"), (Kind::J, Kind::G, "J then G")] {
        let mut sum = ctx.zero();
        if mu.contains(nu) {
            for rho in mu.subdiagrams().into_iter().filter(|r| r.contains(nu)) {
                ch.shape();
                let a = ctx.evx.family(first, mu, &rho)?;
                let b = ctx.evx.family(second, &rho, nu)?.negate_alphabet(ctx.xai);
                sum += &(&a * &b);
            }
        }
        ctx.compare(ch, format!("{label}, mu={mu}, nu={nu}"), &sum, &want);
    }
    Ok(())
}

/// `Σ_ρ G_ρ(x) j_ρ(y) = 1 + Σ_k G_{(1^k)}(x) y(β+y)^{k−1} = ∏ (1 + x_i y)`
/// in a single `y`.
pub(super) fn j_column_generating(ctx: &Ctx, ch: &mut Checker) -> Result<()> {
    let y = *ctx
        .ys
        .first()
        .ok_or_else(|| Error::InvalidSpec("jColumnGenerating needs a y variable".into()))?;
    let evy1 = Evaluator::new(&ctx.ring, &[y], ctx.b);
    let empty = Partition::empty();
    let yp = Poly::var(&ctx.ring, y);
    let bpy = &Poly::var(&ctx.ring, ctx.b) + &yp;
    let mut lhs = ctx.zero();
    let mut middle = ctx.one();
    for (rho, g) in ctx.evx.table(Kind::G, &empty)?.iter() {
        ch.shape();
        let j = evy1.family(Kind::Jd, rho, &empty)?;
        if rho.is_empty() {
            lhs += &(g * &j);
            continue;
        }
        lhs += &(g * &j);
        if rho.first_part() == 1 {
            let k = rho.len() as u32;
            let col = &yp * &bpy.pow(k - 1);
            ch.poly(format!("j[{rho}](y) in one variable"), &j, &col);
            middle += &(g * &col);
        } else {
            ch.poly(format!("j[{rho}](y) vanishes in one variable"), &j, &ctx.zero());
        }
    }
    let rhs = dual_kernel(&ctx.ring, &ctx.xs, &[y]);
    ctx.compare(ch, "sum over all shapes against column sum", &lhs, &middle);
    ctx.compare(ch, "column sum against the product", &middle, &rhs);
    Ok(())
}
