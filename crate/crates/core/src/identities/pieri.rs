//! Skew Pieri rules and their closed-form coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{
    horizontal_strips_over, horizontal_strips_under, vertical_strips_over, vertical_strips_under, DoubleSlashShape,
    Partition, SkewShape,
};
use crate::poly::{binomial, Int, Monomial, Poly, Var};
use crate::report::Checker;
use crate::symfun::{Kind, SymFunId, Route};

use super::{Ctx, IdentityName, IdentitySpec};

/// Which product the coefficient belongs to.
///
/// `W`: `G_{(1^k)} G_{μ//ν}`, `w`: `g_{(k)} g_{μ/ν}`, `V`: `G_{(k)} G_{μ//ν}`,
/// `v`: `g_{(1^k)} g_{μ/ν}`, and `hG`, `hg`, `eG`, `eg` for products with
/// the Schur functions `h_k`, `e_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PieriKind {
    W,
    #[serde(rename = "w")]
    Wd,
    V,
    #[serde(rename = "v")]
    Vd,
    #[serde(rename = "hG")]
    HG,
    #[serde(rename = "hg")]
    Hg,
    #[serde(rename = "eG")]
    EG,
    #[serde(rename = "eg")]
    Eg,
}

impl PieriKind {
    pub const ALL: [PieriKind; 8] = [
        PieriKind::W,
        PieriKind::Wd,
        PieriKind::V,
        PieriKind::Vd,
        PieriKind::HG,
        PieriKind::Hg,
        PieriKind::EG,
        PieriKind::Eg,
    ];
}

impl FromStr for PieriKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "W" => PieriKind::W,
            "w" => PieriKind::Wd,
            "V" => PieriKind::V,
            "v" => PieriKind::Vd,
            "hG" => PieriKind::HG,
            "hg" => PieriKind::Hg,
            "eG" => PieriKind::EG,
            "eg" => PieriKind::Eg,
            _ => return Err(Error::InvalidSpec(format!("unknown coefficient kind `{s}`"))),
        })
    }
}

impl fmt::Display for PieriKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PieriKind::W => "W",
            PieriKind::Wd => "w",
            PieriKind::V => "V",
            PieriKind::Vd => "v",
            PieriKind::HG => "hG",
            PieriKind::Hg => "hg",
            PieriKind::EG => "eG",
            PieriKind::Eg => "eg",
        })
    }
}

/// `value · β^beta_power`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieriCoefficient {
    pub value: Int,
    pub beta_power: u32,
}

impl PieriCoefficient {
    pub fn zero() -> Self {
        PieriCoefficient {
            value: Int::ZERO,
            beta_power: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.value == Int::ZERO
    }

    pub fn to_poly(&self, ring: &crate::poly::RingRef, beta: Var) -> Poly {
        Poly::monomial(ring, Monomial::from_powers(&[(beta, self.beta_power)]), self.value.clone())
    }
}

impl fmt::Display for PieriCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.is_zero(), self.beta_power) {
            (true, _) => f.write_str("0"),
            (false, 0) => write!(f, "{}", self.value),
            (false, 1) => write!(f, "{}*b", self.value),
            (false, e) => write!(f, "{}*b^{e}", self.value),
        }
    }
}

struct Strip {
    size: i64,
    cols: i64,
    rows: i64,
    horizontal: bool,
    vertical: bool,
}

fn strip(outer: &Partition, inner: &Partition) -> Option<Strip> {
    let s = SkewShape::new(outer.clone(), inner.clone()).ok()?;
    Some(Strip {
        size: s.size() as i64,
        cols: s.column_count() as i64,
        rows: s.row_count() as i64,
        horizontal: s.is_horizontal_strip(),
        vertical: s.is_vertical_strip(),
    })
}

fn open(outer: &Partition, inner: &Partition) -> i64 {
    DoubleSlashShape::new(outer.clone(), inner.clone())
        .expect("contained")
        .open_box_count() as i64
}

fn signed(odd: i64) -> Int {
    if odd.rem_euclid(2) == 0 {
        Int::ONE
    } else {
        -Int::ONE
    }
}

/// Closed-form coefficient of `λ, η` in the product named by `kind`, with
/// `μ, ν` the skew shape being multiplied. Zero when the strip conditions
/// fail.
pub fn pieri_coefficient(
    kind: PieriKind,
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
    eta: &Partition,
    k: usize,
) -> PieriCoefficient {
    let (Some(a), Some(b)) = (strip(lam, mu), strip(nu, eta)) else {
        return PieriCoefficient::zero();
    };
    let k = k as i64;
    let (s1, s2) = (a.size, b.size);
    // (ok, sign exponent, β exponent, binomial top, binomial bottom)
    let (ok, sign, beta, top, bottom) = match kind {
        PieriKind::W => (a.vertical, s1 - k, s1 + s2 - k, a.cols + b.cols - 1, s1 + b.cols - k),
        PieriKind::V => (a.horizontal, s1 - k, s1 + s2 - k, a.rows + b.rows - 1, s1 + b.rows - k),
        PieriKind::Wd | PieriKind::Hg => {
            let ok = a.horizontal && b.vertical;
            let top = if ok { open(lam, mu) - open(&nu.conjugate(), &eta.conjugate()) - s2 } else { 0 };
            (ok, k - s1, k - s1 - s2, top, k - s1 - s2)
        }
        PieriKind::Vd => {
            let ok = a.vertical && b.horizontal;
            let top = if ok { open(&lam.conjugate(), &mu.conjugate()) - open(nu, eta) - s2 } else { 0 };
            (ok, k - s1, k - s1 - s2, top, k - s1 - s2)
        }
        PieriKind::HG => (b.vertical, k - a.cols, s1 + s2 - k, s2 - b.cols, k - a.cols - b.cols),
        PieriKind::EG => (a.vertical, b.cols, s1 + s2 - k, s1 - a.cols, k - a.cols - b.cols),
        PieriKind::Eg => {
            let ok = a.vertical && b.horizontal;
            let top = if ok { -open(&lam.conjugate(), &mu.conjugate()) - s1 + open(nu, eta) } else { 0 };
            (ok, s2, k - s1 - s2, top, k - s1 - s2)
        }
    };
    if !ok {
        return PieriCoefficient::zero();
    }
    let c = binomial(top, bottom);
    if c == Int::ZERO {
        return PieriCoefficient::zero();
    }
    debug_assert!(beta >= 0, "{kind}: nonzero coefficient with negative beta power");
    if beta < 0 {
        return PieriCoefficient::zero();
    }
    PieriCoefficient {
        value: signed(sign) * c,
        beta_power: beta as u32,
    }
}

/// Coordinates of `p` in the basis `1, y, y(β+y), y(β+y)^2, …` of
/// polynomials in `y` over the other variables.
pub fn y_basis_coefficients(p: &Poly, y: Var, beta: Var) -> BTreeMap<usize, Poly> {
    let ring = p.ring().clone();
    let yp = Poly::var(&ring, y);
    let bpy = &Poly::var(&ring, beta) + &yp;
    let mut rem = p.clone();
    let mut out = BTreeMap::new();
    while !rem.is_zero() {
        let d = rem.terms().map(|(m, _)| m.exponent(y)).max().expect("nonzero");
        let top = Poly::from_terms(
            &ring,
            rem.terms()
                .filter(|(m, _)| m.exponent(y) == d)
                .map(|(m, c)| (strip_var(m, y), c.clone())),
        );
        if d == 0 {
            out.insert(0, top);
            break;
        }
        rem -= &(&top * &(&yp * &bpy.pow(d - 1)));
        out.insert(d as usize, top);
    }
    out
}

fn strip_var(m: Monomial, v: Var) -> Monomial {
    Monomial(m.0 & !(0xffu128 << (8 * v.index())))
}

fn coef(ctx: &Ctx, c: &PieriCoefficient) -> Poly {
    c.to_poly(&ctx.ring, ctx.b)
}

fn require_nested(spec: &IdentitySpec) -> Result<()> {
    if spec.mu.contains(&spec.nu) {
        Ok(())
    } else {
        Err(Error::InvalidSpec(format!("{} needs nu inside mu", spec.name)))
    }
}

fn column(k: usize) -> Partition {
    Partition::from_parts(&vec![1; k])
}

fn row(k: usize) -> Partition {
    if k == 0 {
        Partition::empty()
    } else {
        Partition::from_parts(&[k])
    }
}

/// Sums `Σ coefficient · X_{λ//η}` (or `X_{λ/η}`) over the given pairs.
fn expand(ctx: &Ctx, kind: Kind, lams: &[Partition], etas: &[Partition], f: impl Fn(&Partition, &Partition) -> PieriCoefficient, ch: &mut Checker) -> Result<Poly> {
    let mut out = ctx.zero();
    for lam in lams {
        for eta in etas {
            let c = f(lam, eta);
            if c.is_zero() {
                continue;
            }
            ch.shape();
            out += &(&coef(ctx, &c) * &ctx.evx.family(kind, lam, eta)?);
        }
    }
    Ok(out)
}

pub(super) fn skew_pieri(ctx: &Ctx, spec: &IdentitySpec, ch: &mut Checker) -> Result<()> {
    require_nested(spec)?;
    let (mu, nu, k) = (&spec.mu, &spec.nu, spec.k);
    let empty = Partition::empty();
    let xcap = spec.xcap as usize;
    let (left, lams, etas, family, pk) = match spec.name {
        IdentityName::SkewPieriG1k => (
            ctx.evx.family(Kind::G, &column(k), &empty)?,
            vertical_strips_over(mu, xcap),
            nu.subdiagrams(),
            Kind::G,
            PieriKind::W,
        ),
        IdentityName::DualSkewPieriGk => (
            ctx.evx.family(Kind::G, &row(k), &empty)?,
            horizontal_strips_over(mu, xcap),
            nu.subdiagrams(),
            Kind::G,
            PieriKind::V,
        ),
        IdentityName::SkewPieriGdk => (
            ctx.evx.family(Kind::Gd, &row(k), &empty)?,
            horizontal_strips_over(mu, k),
            vertical_strips_under(nu),
            Kind::Gd,
            PieriKind::Wd,
        ),
        _ => (
            ctx.evx.family(Kind::Gd, &column(k), &empty)?,
            vertical_strips_over(mu, k),
            horizontal_strips_under(nu),
            Kind::Gd,
            PieriKind::Vd,
        ),
    };
    let lhs = &left * &ctx.evx.family(family, mu, nu)?;
    let rhs = expand(ctx, family, &lams, &etas, |l, e| pieri_coefficient(pk, l, mu, nu, e, k), ch)?;
    ctx.compare(ch, format!("{pk} expansion, mu={mu}, nu={nu}, k={k}"), &lhs, &rhs);
    if spec.name == IdentityName::SkewPieriG1k {
        extraction_check(ctx, &lams, &etas, mu, nu, k, ch);
    }
    Ok(())
}

/// Reads `W` off the single-variable dual Cauchy expansion: the coefficient
/// of `G_{λ//η}` there is a polynomial in `y` whose coordinate at
/// `y(β+y)^{k−1}` must be `W`.
fn extraction_check(ctx: &Ctx, lams: &[Partition], etas: &[Partition], mu: &Partition, nu: &Partition, k: usize, ch: &mut Checker) {
    let Ok(ring) = crate::poly::Ring::builder()
        .scalar("b", crate::poly::Cap::Unbounded)
        .scalar("y", crate::poly::Cap::Unbounded)
        .build()
    else {
        return;
    };
    let (b, y) = (ring.scalar("b").unwrap(), ring.scalar("y").unwrap());
    let (bp, yp) = (Poly::var(&ring, b), Poly::var(&ring, y));
    for lam in lams {
        for eta in etas {
            let (s1, s2) = (SkewShape::new(lam.clone(), mu.clone()).unwrap(), SkewShape::new(nu.clone(), eta.clone()).unwrap());
            let (c1, c2) = (s1.column_count() as u32, s2.column_count() as u32);
            let mut p = &(&yp.pow(c1 + c2) * &(&bp + &yp).pow(s1.size() as u32 - c1)) * &bp.pow(s2.size() as u32 - c2);
            if c2 % 2 == 1 {
                p = -p;
            }
            let got = y_basis_coefficients(&p, y, b).remove(&k).unwrap_or_else(|| Poly::zero(&ring));
            let want = pieri_coefficient(PieriKind::W, lam, mu, nu, eta, k).to_poly(&ring, b);
            ch.poly(format!("coefficient extraction at lambda={lam}, eta={eta}"), &got, &want);
        }
    }
    let _ = ctx;
}

/// The `k = 1` rules at β = 1.
pub(super) fn simple_skew_pieri(ctx: &Ctx, spec: &IdentitySpec, ch: &mut Checker) -> Result<()> {
    require_nested(spec)?;
    let (mu, nu) = (&spec.mu, &spec.nu);
    let empty = Partition::empty();
    let one = row(1);

    // G_1 G_{μ//ν} = Σ_{(λ,η) ≠ (μ,ν)} (−1)^{|λ/μ|−1} G_{λ//η}, λ/μ rook strip, η ⊆ ν
    let lhs = &ctx.evx.family(Kind::G, &one, &empty)? * &ctx.evx.family(Kind::G, mu, nu)?;
    let mut rhs = ctx.zero();
    for lam in vertical_strips_over(mu, spec.xcap as usize) {
        let s = SkewShape::new(lam.clone(), mu.clone()).unwrap();
        if !s.is_rook_strip() {
            continue;
        }
        for eta in nu.subdiagrams() {
            if lam == *mu && eta == *nu {
                continue;
            }
            ch.shape();
            let g = ctx.evx.family(Kind::G, &lam, &eta)?;
            if s.size() % 2 == 1 {
                rhs += &g;
            } else {
                rhs -= &g;
            }
        }
    }
    ctx.compare(ch, format!("G rule, mu={mu}, nu={nu}"), &lhs, &rhs);

    // g_1 g_{μ/ν} = β(i(ν) − i(μ)) g_{μ/ν} + Σ_{λ=μ+□} g_{λ/ν} − Σ_{η=ν−□} g_{μ/η}
    let g = ctx.evx.family(Kind::Gd, mu, nu)?;
    let lhs = &ctx.evx.family(Kind::Gd, &one, &empty)? * &g;
    let shift = nu.corner_count() as i64 - mu.corner_count() as i64;
    let mut rhs = &ctx.beta_pow(1) * &g.scale(&shift.into());
    for lam in horizontal_strips_over(mu, 1).into_iter().filter(|l| l != mu) {
        ch.shape();
        rhs += &ctx.evx.family(Kind::Gd, &lam, nu)?;
    }
    for eta in nu.subdiagrams().into_iter().filter(|e| e.weight() + 1 == nu.weight()) {
        ch.shape();
        rhs -= &ctx.evx.family(Kind::Gd, mu, &eta)?;
    }
    ctx.compare(ch, format!("g rule, mu={mu}, nu={nu}"), &lhs, &rhs);
    Ok(())
}

/// `s_k s_{μ/ν} = Σ (−1)^{|ν/η|} s_{λ/η}` over horizontal `λ/μ`, vertical
/// `ν/η` with `|λ/μ| + |ν/η| = k`.
pub(super) fn schur_skew_pieri(ctx: &Ctx, spec: &IdentitySpec, ch: &mut Checker) -> Result<()> {
    require_nested(spec)?;
    let (mu, nu, k) = (&spec.mu, &spec.nu, spec.k);
    let s = |outer: &Partition, inner: &Partition| ctx.evx.family(Kind::Gd, outer, inner);
    let lhs = &s(&row(k), &Partition::empty())? * &s(mu, nu)?;
    let mut rhs = ctx.zero();
    for lam in horizontal_strips_over(mu, k) {
        for eta in vertical_strips_under(nu) {
            let (s1, s2) = (lam.weight() - mu.weight(), nu.weight() - eta.weight());
            if s1 + s2 != k {
                continue;
            }
            ch.shape();
            let t = s(&lam, &eta)?;
            if s2 % 2 == 0 {
                rhs += &t;
            } else {
                rhs -= &t;
            }
        }
    }
    ctx.compare(ch, format!("mu={mu}, nu={nu}, k={k}"), &lhs, &rhs);
    Ok(())
}

/// Closed forms in one of the two alphabets, and the `h_k`, `e_k` rules.
pub(super) fn single_var_corollaries(ctx: &Ctx, spec: &IdentitySpec, ch: &mut Checker) -> Result<()> {
    require_nested(spec)?;
    let (mu, nu, k) = (&spec.mu, &spec.nu, spec.k);
    let ring = &ctx.ring;
    let xcap = spec.xcap as usize;
    let (Some(&y), Some(&x)) = (ctx.ys.first(), ctx.xs.first()) else {
        return Err(Error::InvalidSpec("needs at least one x and one y variable".into()));
    };
    let (xp, yp, bp) = (Poly::var(ring, x), Poly::var(ring, y), Poly::var(ring, ctx.b));
    let g_mn = ctx.evx.family(Kind::G, mu, nu)?;
    let gd_mn_y = ctx.evy.family(Kind::Gd, mu, nu)?;
    let sign = |odd: usize, p: Poly| if odd % 2 == 1 { -p } else { p };

    // ∏ 1/(1 − x_i y) G_{μ//ν}(x)
    let mut lhs = g_mn.clone();
    for &xi in &ctx.xs {
        lhs = &lhs * &(&Poly::var(ring, xi) * &yp).geometric()?;
    }
    let mut rhs = ctx.zero();
    for eta in vertical_strips_under(nu) {
        let b2 = SkewShape::new(nu.clone(), eta.clone()).unwrap();
        let (s2, c2) = (b2.size() as u32, b2.column_count() as u32);
        for (lam, g) in ctx.evx.table(Kind::G, &eta)?.iter().filter(|(l, _)| l.contains(mu)) {
            ch.shape();
            let b1 = SkewShape::new(lam.clone(), mu.clone()).unwrap();
            let (s1, c1) = (b1.size() as u32, b1.column_count() as u32);
            let w = &(&yp.pow(c1 + c2) * &bp.pow(s1 - c1)) * &(&bp - &yp).pow(s2 - c2);
            rhs += &(&sign(c2 as usize, w) * g);
        }
    }
    ctx.compare(ch, "single y, Cauchy kernel", &lhs, &rhs);

    // ∏ 1/(1 − x y_j) g_{μ/ν}(y)
    let mut lhs = gd_mn_y.clone();
    for &yj in &ctx.ys {
        lhs = &lhs * &(&xp * &Poly::var(ring, yj)).geometric()?;
    }
    let mut rhs = ctx.zero();
    let mbx = -(&bp * &xp);
    for lam in horizontal_strips_over(mu, xcap) {
        for eta in vertical_strips_under(nu) {
            ch.shape();
            let (s1, s2) = (lam.weight() - mu.weight(), nu.weight() - eta.weight());
            let e = open(&lam, mu) - open(&nu.conjugate(), &eta.conjugate()) - s2 as i64;
            let w = &mbx.one_plus_pow(e)? * &xp.pow((s1 + s2) as u32);
            rhs += &(&sign(s2, w) * &ctx.evy.family(Kind::Gd, &lam, &eta)?);
        }
    }
    ctx.compare(ch, "single x, Cauchy kernel", &lhs, &rhs);

    // ∏ (1 + x_i y) G_{μ//ν}(x)
    let mut lhs = g_mn.clone();
    for &xi in &ctx.xs {
        lhs = &lhs * &(&ctx.one() + &(&Poly::var(ring, xi) * &yp));
    }
    let mut rhs = ctx.zero();
    for lam in vertical_strips_over(mu, xcap) {
        let b1 = SkewShape::new(lam.clone(), mu.clone()).unwrap();
        let (s1, c1) = (b1.size() as u32, b1.column_count() as u32);
        for eta in nu.subdiagrams() {
            ch.shape();
            let b2 = SkewShape::new(nu.clone(), eta.clone()).unwrap();
            let (s2, c2) = (b2.size() as u32, b2.column_count() as u32);
            let w = &(&yp.pow(c1 + c2) * &(&bp + &yp).pow(s1 - c1)) * &bp.pow(s2 - c2);
            rhs += &(&sign(c2 as usize, w) * &ctx.evx.family(Kind::G, &lam, &eta)?);
        }
    }
    ctx.compare(ch, "single y, dual kernel", &lhs, &rhs);

    // ∏ (1 + x y_j) g_{μ/ν}(y)
    let mut lhs = gd_mn_y;
    for &yj in &ctx.ys {
        lhs = &lhs * &(&ctx.one() + &(&xp * &Poly::var(ring, yj)));
    }
    let mut rhs = ctx.zero();
    let bx = &bp * &xp;
    for lam in vertical_strips_over(mu, xcap) {
        for eta in horizontal_strips_under(nu) {
            ch.shape();
            let (s1, s2) = (lam.weight() - mu.weight(), nu.weight() - eta.weight());
            let e = -open(&lam.conjugate(), &mu.conjugate()) - s1 as i64 + open(nu, &eta);
            let w = &bx.one_plus_pow(e)? * &xp.pow((s1 + s2) as u32);
            rhs += &(&sign(s2, w) * &ctx.evy.family(Kind::Gd, &lam, &eta)?);
        }
    }
    ctx.compare(ch, "single x, dual kernel", &lhs, &rhs);

    // h_k and e_k rules in x
    let h = ctx.evx.evaluate(&SymFunId::H(k), Route::Operator)?;
    let e = ctx.evx.evaluate(&SymFunId::E(k), Route::Operator)?;
    let gd_mn = ctx.evx.family(Kind::Gd, mu, nu)?;
    let mut supersets = std::collections::BTreeSet::new();
    for eta in vertical_strips_under(nu) {
        for (lam, _) in ctx.evx.table(Kind::G, &eta)?.iter().filter(|(l, _)| l.contains(mu)) {
            supersets.insert(lam.clone());
        }
    }
    let supersets: Vec<Partition> = supersets.into_iter().collect();
    let cases = [
        (PieriKind::HG, &h, &g_mn, Kind::G, supersets, vertical_strips_under(nu)),
        (PieriKind::Hg, &h, &gd_mn, Kind::Gd, horizontal_strips_over(mu, k), vertical_strips_under(nu)),
        (PieriKind::EG, &e, &g_mn, Kind::G, vertical_strips_over(mu, xcap), nu.subdiagrams()),
        (PieriKind::Eg, &e, &gd_mn, Kind::Gd, vertical_strips_over(mu, k), horizontal_strips_under(nu)),
    ];
    for (pk, left, right, family, lams, etas) in cases {
        let lhs = left * right;
        let rhs = expand(ctx, family, &lams, &etas, |l, e| pieri_coefficient(pk, l, mu, nu, e, k), ch)?;
        ctx.compare(ch, format!("{pk} rule, k={k}"), &lhs, &rhs);
    }
    Ok(())
}
