//! Eulerian numbers, normal ordering, and tableau-count identities.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::module::ModuleElement;
use crate::partition::{partitions_of, partitions_up_to, supersets_up_to, DoubleSlashShape, Partition, SkewShape};
use crate::poly::{binomial, Int, Poly};
use crate::report::{Checker, VerificationReport};
use crate::tableau::{count_isvt, count_it, count_st, count_syt};

use super::{walk_sum, Direction, FilteredGraph, GraphKind, Operator, Param};

/// Permutations of `[i]` with `s` descents; `A_{0,0} = 1`.
pub fn eulerian(i: usize, s: usize) -> u64 {
    let mut row = vec![1u64];
    for n in 1..=i {
        let mut next = vec![0u64; n];
        for (k, slot) in next.iter_mut().enumerate() {
            let stay = if k < row.len() { (k as u64 + 1) * row[k] } else { 0 };
            let grow = if k >= 1 && k - 1 < row.len() { (n - k) as u64 * row[k - 1] } else { 0 };
            *slot = stay + grow;
        }
        row = next;
    }
    row.get(s).copied().unwrap_or(0)
}

/// `q_n(i, j)` three ways.
///
/// `alternating` is `Σ_k (−1)^{n−k} C(j, n−k) k^i`, which is what the
/// normal-ordering derivation produces. `eulerian` reads the same number off
/// `(1−z)^{j−i−1} z A_i(z)`; `literal` is the descent-indexed sum
/// `Σ_ℓ C(i−j+ℓ, ℓ) A_{i, n−ℓ}` without the shift by `z`, kept to report
/// where it disagrees.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QCoefficient {
    pub alternating: i64,
    pub eulerian: i64,
    pub literal: i64,
}

fn to_i64(x: Int) -> i64 {
    i64::try_from(x).expect("small binomial")
}

pub fn q_coefficient(n: usize, i: usize, j: usize) -> QCoefficient {
    let mut alternating = 0i64;
    for k in 0..=n {
        let term = to_i64(binomial(j as i64, (n - k) as i64)) * (k as i64).pow(i as u32);
        alternating += if (n - k) % 2 == 0 { term } else { -term };
    }
    // [z^t] of Σ_m m^i z^m (1−z)^{i+1}
    let shifted = |t: usize| -> i64 {
        if i == 0 {
            (t == 0) as i64
        } else if t == 0 {
            0
        } else {
            eulerian(i, t - 1) as i64
        }
    };
    let mut eul = 0i64;
    let mut literal = 0i64;
    for l in 0..=n {
        let c = to_i64(binomial(i as i64 - j as i64 + l as i64, l as i64));
        eul += c * shifted(n - l);
        literal += c * eulerian(i, n - l) as i64;
    }
    QCoefficient {
        alternating,
        eulerian: eul,
        literal,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormalOrdering {
    /// `[D,U] = 1` on the β-filtration with formal β.
    Weyl,
    /// `[D,U] = 1 + D` on the Cauchy filtration at `ϰ = 1`.
    Shifted,
}

impl FromStr for NormalOrdering {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "weyl" => Ok(NormalOrdering::Weyl),
            "shifted" => Ok(NormalOrdering::Shifted),
            _ => Err(Error::InvalidSpec(format!("unknown ordering `{s}`"))),
        }
    }
}

fn power(op: &Operator, k: usize, v: &ModuleElement) -> ModuleElement {
    (0..k).fold(v.clone(), |acc, _| op.apply(&acc))
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// `D^n U^m` against its normal-ordered form on every `|v| ≤ N − m`.
pub fn normal_ordering_check(which: NormalOrdering, n: usize, m: usize, rank_bound: usize) -> Result<VerificationReport> {
    if m > rank_bound {
        return Err(Error::InvalidSpec("m exceeds the rank bound".into()));
    }
    let g = match which {
        NormalOrdering::Weyl => FilteredGraph::build(GraphKind::BetaY, Param::Formal, Param::Formal, rank_bound),
        NormalOrdering::Shifted => FilteredGraph::build(GraphKind::KappaY, Param::Formal, Param::Int(1), rank_bound),
    };
    let mut ch = Checker::new(format!("{which:?} normal ordering of D^{n} U^{m} at N={rank_bound}"));
    let mut literal_mismatch = 0;
    let mut coeffs: Vec<(usize, usize, i64)> = Vec::new();
    match which {
        NormalOrdering::Weyl => {
            for i in 0..=m.min(n) {
                let c = factorial(i) * to_i64(binomial(m as i64, i as i64) * binomial(n as i64, i as i64));
                coeffs.push((i, i, c));
            }
        }
        NormalOrdering::Shifted => {
            for i in 0..=m {
                for j in 0..=n {
                    let q = q_coefficient(n, i, j);
                    ch.int(format!("q_{n}({i},{j}) two ways"), q.alternating, q.eulerian);
                    if q.literal != q.alternating {
                        literal_mismatch += 1;
                    }
                    let c = q.alternating * to_i64(binomial(m as i64, i as i64) * binomial(n as i64, j as i64));
                    coeffs.push((i, j, c));
                }
            }
        }
    }
    for lam in partitions_up_to(rank_bound - m) {
        ch.shape();
        let v = ModuleElement::basis(&g.ring, lam.clone());
        let lhs = power(&g.down, n, &power(&g.up, m, &v));
        let mut rhs = ModuleElement::zero(&g.ring);
        for &(i, j, c) in &coeffs {
            if c == 0 {
                continue;
            }
            let t = power(&g.up, m - i, &power(&g.down, n - j, &v));
            rhs.add_owned(t.scale_poly(&Poly::constant(&g.ring, c)));
        }
        ch.module(format!("v={lam}"), &lhs, &rhs);
    }
    if literal_mismatch > 0 {
        ch.note(format!(
            "{literal_mismatch} of the q_{n}(i,j) differ when the Eulerian sum is read without the z shift"
        ));
    }
    Ok(ch.finish())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerativeIdentity {
    SignedFf,
    Fg,
    FrobeniusAnalogue,
    Fubini,
}

impl FromStr for EnumerativeIdentity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "signedFf" => Ok(EnumerativeIdentity::SignedFf),
            "Fg" => Ok(EnumerativeIdentity::Fg),
            "frobeniusAnalogue" => Ok(EnumerativeIdentity::FrobeniusAnalogue),
            "fubini" => Ok(EnumerativeIdentity::Fubini),
            _ => Err(Error::InvalidSpec(format!("unknown enumerative identity `{s}`"))),
        }
    }
}

fn big_f(lam: &Partition, mu: &Partition, m: usize) -> Result<i64> {
    if !lam.contains(mu) {
        return Ok(0);
    }
    Ok(count_isvt(&DoubleSlashShape::new(lam.clone(), mu.clone())?, m)? as i64)
}

fn skew_count(f: fn(&SkewShape, usize) -> Result<u64>, lam: &Partition, mu: &Partition, n: usize) -> Result<i64> {
    if !lam.contains(mu) {
        return Ok(0);
    }
    Ok(f(&SkewShape::new(lam.clone(), mu.clone())?, n)? as i64)
}

fn syt(lam: &Partition, mu: &Partition) -> Result<i64> {
    if !lam.contains(mu) {
        return Ok(0);
    }
    Ok(count_syt(&SkewShape::new(lam.clone(), mu.clone())?)? as i64)
}

fn sign(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Ordered set partitions of `[n]`, by counting surjections onto `[k]`.
pub fn fubini_brute_force(n: usize) -> u64 {
    let mut total = 0u64;
    for k in 1..=n.max(1) {
        if n == 0 {
            return 1;
        }
        let mut assignment = vec![0usize; n];
        loop {
            let mut hit = vec![false; k];
            for &a in &assignment {
                hit[a] = true;
            }
            if hit.iter().all(|&h| h) {
                total += 1;
            }
            let mut pos = 0;
            loop {
                if pos == n {
                    break;
                }
                assignment[pos] += 1;
                if assignment[pos] < k {
                    break;
                }
                assignment[pos] = 0;
                pos += 1;
            }
            if pos == n {
                break;
            }
        }
    }
    total
}

/// Both sides from tableau counts; walk sums on the matching graph are
/// checked against the counts on the left.
pub fn enumerative_identity_check(
    which: EnumerativeIdentity,
    m: usize,
    n: usize,
    mu: &Partition,
    nu: &Partition,
    rank_bound: usize,
) -> Result<VerificationReport> {
    let mut ch = Checker::new(format!("{which:?} m={m} n={n} mu={mu} nu={nu}"));
    match which {
        EnumerativeIdentity::SignedFf | EnumerativeIdentity::Fg => {
            if mu.weight() + m > rank_bound || nu.weight() + m > rank_bound {
                return Err(Error::InvalidSpec("shapes plus steps exceed the rank bound".into()));
            }
            let signed = which == EnumerativeIdentity::SignedFf;
            let g = if signed {
                FilteredGraph::build(GraphKind::BetaY, Param::Int(1), Param::Formal, rank_bound)
            } else {
                FilteredGraph::build(GraphKind::MoebiusY, Param::Formal, Param::Formal, rank_bound)
            };
            let small: fn(&SkewShape, usize) -> Result<u64> = if signed { count_st } else { count_it };
            let as_int = |p: Poly| -> i64 { to_i64(p.constant_term()) };

            let mut lhs = 0i64;
            for lam in supersets_up_to(mu, m).into_iter().filter(|l| l.contains(nu)) {
                ch.shape();
                let s = (lam.weight() - mu.weight()) as i64;
                let up = if signed { sign(m as i64 - s) } else { 1 } * big_f(&lam, mu, m)?;
                let down = skew_count(small, &lam, nu, n)?;
                ch.int(format!("up walks {mu} -> {lam}"), as_int(walk_sum(&g, mu, &lam, m, Direction::Up)?), up);
                ch.int(format!("down walks {lam} -> {nu}"), as_int(walk_sum(&g, &lam, nu, n, Direction::Down)?), down);
                lhs += up * down;
            }
            let v = ModuleElement::basis(&g.ring, mu.clone());
            let word = Operator::apply_word(
                &std::iter::repeat_n(&g.down, n).chain(std::iter::repeat_n(&g.up, m)).collect::<Vec<_>>(),
                &v,
            );
            ch.int("matrix element of D^n U^m", as_int(word.coefficient(nu)), lhs);

            let mut rhs = 0i64;
            let kappas: Vec<Partition> = mu.subdiagrams().into_iter().filter(|k| nu.contains(k)).collect();
            if signed {
                for i in 0..=m.min(n) {
                    let c = factorial(i) * to_i64(binomial(m as i64, i as i64) * binomial(n as i64, i as i64));
                    for kappa in &kappas {
                        let e = (m - i) as i64 - (nu.weight() - kappa.weight()) as i64;
                        rhs += c * sign(e) * big_f(nu, kappa, m - i)? * skew_count(small, mu, kappa, n - i)?;
                    }
                }
            } else {
                for i in 0..=m {
                    for j in 0..=n {
                        let q = q_coefficient(n, i, j).alternating;
                        if q == 0 {
                            continue;
                        }
                        let c = q * to_i64(binomial(m as i64, i as i64) * binomial(n as i64, j as i64));
                        for kappa in &kappas {
                            rhs += c * big_f(nu, kappa, m - i)? * skew_count(small, mu, kappa, n - j)?;
                        }
                    }
                }
            }
            ch.int("left side against the normal-ordered right side", lhs, rhs);
        }
        EnumerativeIdentity::FrobeniusAnalogue => {
            let mut lhs = 0i64;
            for lam in supersets_up_to(mu, n).into_iter().filter(|l| l.weight() == mu.weight() + n) {
                if lam.contains(nu) && lam.weight() == nu.weight() + m {
                    ch.shape();
                    lhs += syt(&lam, mu)? * syt(&lam, nu)?;
                }
            }
            let mut rhs = 0i64;
            for i in 0..=m.min(n) {
                let c = factorial(i) * to_i64(binomial(m as i64, i as i64) * binomial(n as i64, i as i64));
                for kappa in mu.subdiagrams().into_iter().filter(|k| nu.contains(k)) {
                    if nu.weight() - kappa.weight() == n - i && mu.weight() - kappa.weight() == m - i {
                        rhs += c * syt(nu, &kappa)? * syt(mu, &kappa)?;
                    }
                }
            }
            ch.int("SYT sums", lhs, rhs);
            if mu.is_empty() && nu.is_empty() && m == n {
                let sq: i64 = partitions_of(n).iter().map(|l| syt(l, &Partition::empty()).unwrap().pow(2)).sum();
                ch.int(format!("sum of f_lambda^2 over lambda of {n}"), sq, factorial(n));
            }
        }
        EnumerativeIdentity::Fubini => {
            // F_λ(n) uses each value once, so Σ_λ F_λ(n) g_λ(k) = k!·S(n, k)
            // and the ordered set partitions need the sum over k ≤ n.
            let empty = Partition::empty();
            let (mut fixed, mut summed) = (0i64, 0i64);
            for lam in partitions_up_to(n) {
                ch.shape();
                let f = big_f(&lam, &empty, n)?;
                if f == 0 {
                    continue;
                }
                fixed += f * skew_count(count_it, &lam, &empty, n)?;
                for k in 0..=n {
                    summed += f * skew_count(count_it, &lam, &empty, k)?;
                }
            }
            ch.int(format!("sum of F(n) g(n) at n={n}"), fixed, factorial(n));
            let brute = fubini_brute_force(n) as i64;
            ch.int(format!("ordered set partitions of {n}"), summed, brute);
            ch.note(format!("sum over k <= n of F(n) g(k) = {summed}; with k = n alone it is n! = {fixed}"));
        }
    }
    Ok(ch.finish())
}
