//! Exact sparse polynomials over the integers with per-alphabet truncation.

mod ring;
mod series;
mod text;

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::Arc;

use rustc_hash::FxHashMap;

pub use dashu_int::IBig as Int;
pub use ring::{Alphabet, Cap, Ring, RingBuilder, RingRef, Var, MAX_VARS, PACKED_DEGREE_LIMIT};
pub use series::{cauchy_kernel, dual_kernel};
pub use text::{PolyJson, TermJson};

use crate::error::{Error, Result};

/// A monomial as a packed exponent vector (one byte per variable).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(pub(crate) u128);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn var(v: Var) -> Self {
        Monomial(v.unit())
    }

    pub fn from_exponents(ring: &Ring, exps: &[u32]) -> Result<Self> {
        ring.pack(exps)
            .map(Monomial)
            .ok_or_else(|| Error::InvalidSpec(format!("bad exponent vector {exps:?}")))
    }

    /// Builds `∏ v^e`; panics on packing overflow.
    pub fn from_powers(powers: &[(Var, u32)]) -> Self {
        let mut m = 0u128;
        for &(v, e) in powers {
            let cur = (m >> (8 * v.index())) & 0xff;
            assert!(cur as u32 + e <= PACKED_DEGREE_LIMIT, "exponent overflow");
            m += (e as u128) << (8 * v.index());
        }
        Monomial(m)
    }

    pub fn exponent(self, v: Var) -> u32 {
        ((self.0 >> (8 * v.index())) & 0xff) as u32
    }

    pub fn exponents(self, ring: &Ring) -> Vec<u32> {
        ring.exponents(self.0)
    }

    pub fn total_degree(self) -> u32 {
        let mut s = 0;
        let mut m = self.0;
        while m != 0 {
            s += (m & 0xff) as u32;
            m >>= 8;
        }
        s
    }
}

/// An exact polynomial whose terms respect the caps of its ring.
///
/// Terms are kept sorted by packed monomial, with no zero coefficients.
#[derive(Clone)]
pub struct Poly {
    ring: RingRef,
    terms: Vec<(u128, Int)>,
}

fn same_ring(a: &RingRef, b: &RingRef) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Poly {}

impl Poly {
    pub fn zero(ring: &RingRef) -> Self {
        Poly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &RingRef, c: impl Into<Int>) -> Self {
        Self::monomial(ring, Monomial::ONE, c)
    }

    pub fn var(ring: &RingRef, v: Var) -> Self {
        Self::monomial(ring, Monomial::var(v), 1)
    }

    /// `c·m`, or zero if `m` exceeds the caps.
    pub fn monomial(ring: &RingRef, m: Monomial, c: impl Into<Int>) -> Self {
        let c = c.into();
        let mut p = Self::zero(ring);
        if c != Int::ZERO && ring.fits(m.0) {
            p.terms.push((m.0, c));
        }
        p
    }

    /// Sums duplicate monomials, drops zeros and truncated terms.
    pub fn from_terms(ring: &RingRef, terms: impl IntoIterator<Item = (Monomial, Int)>) -> Self {
        let mut acc: FxHashMap<u128, Int> = FxHashMap::default();
        for (m, c) in terms {
            if ring.fits(m.0) {
                *acc.entry(m.0).or_insert(Int::ZERO) += c;
            }
        }
        Self::from_map(ring, acc)
    }

    fn from_map(ring: &RingRef, acc: FxHashMap<u128, Int>) -> Self {
        let mut terms: Vec<(u128, Int)> = acc.into_iter().filter(|(_, c)| *c != Int::ZERO).collect();
        terms.sort_unstable_by_key(|t| t.0);
        Poly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &Int)> + '_ {
        self.terms.iter().map(|(m, c)| (Monomial(*m), c))
    }

    pub fn coefficient_of(&self, m: Monomial) -> Int {
        match self.terms.binary_search_by_key(&m.0, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Int::ZERO,
        }
    }

    /// The constant coefficient.
    pub fn constant_term(&self) -> Int {
        self.coefficient_of(Monomial::ONE)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| *m == 0)
    }

    fn check_ring(&self, other: &Poly) {
        assert!(
            same_ring(&self.ring, &other.ring),
            "polynomials from different ring contexts"
        );
    }

    /// Re-homes the polynomial into a ring with identical layout (caps may
    /// differ; terms beyond the new caps are dropped).
    pub fn into_ring(&self, ring: &RingRef) -> Result<Poly> {
        if ring.var_names() != self.ring.var_names() {
            return Err(Error::InvalidSpec("ring layouts differ".into()));
        }
        Ok(Poly {
            ring: ring.clone(),
            terms: self.terms.iter().filter(|(m, _)| ring.fits(*m)).cloned().collect(),
        })
    }

    /// `c·m·self`, truncated. Keeps the term order since the shift is uniform.
    pub fn mul_monomial(&self, m: Monomial, c: &Int) -> Poly {
        if *c == Int::ZERO {
            return Poly::zero(&self.ring);
        }
        let dm = self.ring.degrees(m.0);
        let one = *c == Int::ONE;
        let terms = self
            .terms
            .iter()
            .filter(|(t, _)| self.ring.product_fits(&self.ring.degrees(*t), &dm))
            .map(|(t, k)| (t + m.0, if one { k.clone() } else { k * c }))
            .collect();
        Poly {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &Int) -> Poly {
        self.mul_monomial(Monomial::ONE, c)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    /// Total degree in alphabet `ai`, over all terms (max), or `None` if zero.
    pub fn max_degree_in(&self, ai: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| self.ring.degree_in(ai, *m)).max()
    }

    pub fn min_degree_in(&self, ai: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| self.ring.degree_in(ai, *m)).min()
    }

    /// The part of homogeneous degree `d` in alphabet `ai`.
    pub fn component(&self, ai: usize, d: u32) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| self.ring.degree_in(ai, *m) == d)
                .cloned()
                .collect(),
        }
    }

    /// Groups terms by their exponents in alphabet `ai`; values carry the
    /// remaining variables.
    pub fn split_by_alphabet(&self, ai: usize) -> BTreeMap<Monomial, Poly> {
        let mask = self.ring.alphabets()[ai].mask;
        let mut out: BTreeMap<Monomial, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let key = Monomial(m & mask);
            out.entry(key)
                .or_insert_with(|| Poly::zero(&self.ring))
                .terms
                .push((m & !mask, c.clone()));
        }
        // pushes happen in ascending order of the full key, but the residual
        // keys need not be sorted
        for p in out.values_mut() {
            p.terms.sort_unstable_by_key(|t| t.0);
        }
        out
    }

    /// Multiplies each term by `(-1)^{deg_ai}`, i.e. `f(−x)` for alphabet `ai`.
    pub fn negate_alphabet(&self, ai: usize) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    if self.ring.degree_in(ai, *m) % 2 == 1 {
                        (*m, -c)
                    } else {
                        (*m, c.clone())
                    }
                })
                .collect(),
        }
    }

    /// Exact substitution by 0, ±1 or another variable of the ring.
    pub fn specialize(&self, assignment: &[(Var, Subst)]) -> Poly {
        let mut acc: FxHashMap<u128, Int> = FxHashMap::default();
        'terms: for (m, c) in &self.terms {
            let mut m = *m;
            let mut c = c.clone();
            for &(v, s) in assignment {
                let shift = 8 * v.index();
                let e = ((m >> shift) & 0xff) as u32;
                if e == 0 {
                    continue;
                }
                m &= !(0xffu128 << shift);
                match s {
                    Subst::Zero => continue 'terms,
                    Subst::One => {}
                    Subst::MinusOne => {
                        if e % 2 == 1 {
                            c = -c;
                        }
                    }
                    Subst::Var(w) => {
                        let cur = ((m >> (8 * w.index())) & 0xff) as u32;
                        if cur + e > PACKED_DEGREE_LIMIT {
                            continue 'terms;
                        }
                        let grown = m + ((e as u128) << (8 * w.index()));
                        // the target alphabet cap may be exceeded
                        let limit = self.ring.alphabets()[w.alphabet()].limit();
                        if self.ring.degree_in(w.alphabet(), m) + e > limit {
                            if self.ring.alphabets()[w.alphabet()].cap == Cap::Unbounded {
                                panic!("substitution overflows an unbounded alphabet");
                            }
                            continue 'terms;
                        }
                        m = grown;
                    }
                }
            }
            *acc.entry(m).or_insert(Int::ZERO) += c;
        }
        Poly::from_map(&self.ring, acc)
    }

    /// Substitution from integer values; only 0 and ±1 are accepted.
    pub fn specialize_values(&self, assignment: &[(Var, i64)]) -> Result<Poly> {
        let mut subst = Vec::with_capacity(assignment.len());
        for &(v, x) in assignment {
            subst.push((v, Subst::from_value(x)?));
        }
        Ok(self.specialize(&subst))
    }

    /// `(1 + self)^e` for any integer `e`; negative exponents need `self` to
    /// be nilpotent under the caps.
    pub fn one_plus_pow(&self, e: i64) -> Result<Poly> {
        series::one_plus_pow(self, e)
    }

    /// `Σ_k self^k = (1 − self)^{-1}`.
    pub fn geometric(&self) -> Result<Poly> {
        series::geometric(self)
    }

    /// Whether every term has positive degree in some finitely capped
    /// alphabet, so powers eventually vanish.
    pub fn is_nilpotent(&self) -> bool {
        self.terms.iter().all(|(m, _)| {
            self.ring
                .alphabets()
                .iter()
                .enumerate()
                .any(|(ai, a)| a.cap.finite().is_some() && self.ring.degree_in(ai, *m) > 0)
        })
    }

    /// The nonzero term of smallest graded-lex position in `self − other`.
    pub fn first_difference(&self, other: &Poly) -> Option<(Monomial, Int, Int)> {
        self.check_ring(other);
        let diff = self - other;
        let ring = &self.ring;
        diff.terms
            .iter()
            .map(|(m, _)| *m)
            .min_by(|a, b| text::graded_cmp(ring, *a, *b))
            .map(|m| {
                let m = Monomial(m);
                (m, self.coefficient_of(m), other.coefficient_of(m))
            })
    }
}

/// A substitution target.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Subst {
    Zero,
    One,
    MinusOne,
    Var(Var),
}

impl Subst {
    pub fn from_value(x: i64) -> Result<Self> {
        match x {
            0 => Ok(Subst::Zero),
            1 => Ok(Subst::One),
            -1 => Ok(Subst::MinusOne),
            other => Err(Error::BadSubstitution(other)),
        }
    }
}

fn merge(a: &Poly, b: &Poly, negate_b: bool) -> Poly {
    a.check_ring(b);
    let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
    let (mut i, mut j) = (0, 0);
    while i < a.terms.len() && j < b.terms.len() {
        let (ma, ca) = &a.terms[i];
        let (mb, cb) = &b.terms[j];
        if ma < mb {
            out.push((*ma, ca.clone()));
            i += 1;
        } else if mb < ma {
            out.push((*mb, if negate_b { -cb } else { cb.clone() }));
            j += 1;
        } else {
            let c = if negate_b { ca - cb } else { ca + cb };
            if c != Int::ZERO {
                out.push((*ma, c));
            }
            i += 1;
            j += 1;
        }
    }
    out.extend(a.terms[i..].iter().cloned());
    out.extend(
        b.terms[j..]
            .iter()
            .map(|(m, c)| (*m, if negate_b { -c } else { c.clone() })),
    );
    Poly {
        ring: a.ring.clone(),
        terms: out,
    }
}

fn multiply(a: &Poly, b: &Poly) -> Poly {
    a.check_ring(b);
    if a.is_zero() || b.is_zero() {
        return Poly::zero(&a.ring);
    }
    let (a, b) = if a.terms.len() <= b.terms.len() { (a, b) } else { (b, a) };
    let ring = &a.ring;
    if a.terms.len() == 1 {
        return b.mul_monomial(Monomial(a.terms[0].0), &a.terms[0].1);
    }
    let da: Vec<_> = a.terms.iter().map(|(m, _)| ring.degrees(*m)).collect();
    let db: Vec<_> = b.terms.iter().map(|(m, _)| ring.degrees(*m)).collect();
    let mut acc: FxHashMap<u128, Int> = FxHashMap::default();
    for (i, (ma, ca)) in a.terms.iter().enumerate() {
        for (j, (mb, cb)) in b.terms.iter().enumerate() {
            if ring.product_fits(&da[i], &db[j]) {
                *acc.entry(ma + mb).or_insert(Int::ZERO) += ca * cb;
            }
        }
    }
    Poly::from_map(ring, acc)
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        merge(self, rhs, false)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        merge(self, rhs, true)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        multiply(self, rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        if self.is_zero() {
            self.check_ring(rhs);
            self.terms = rhs.terms.clone();
        } else if !rhs.is_zero() {
            *self = merge(self, rhs, false);
        }
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        if !rhs.is_zero() {
            *self = merge(self, rhs, true);
        }
    }
}

/// Binomial coefficient `C(a, r)` for any integer `a`; zero when `r < 0`.
pub fn binomial(a: i64, r: i64) -> Int {
    if r < 0 {
        return Int::ZERO;
    }
    let mut num = Int::ONE;
    let mut den = Int::ONE;
    for t in 0..r {
        num *= Int::from(a - t);
        den *= Int::from(t + 1);
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(xcap: u32) -> RingRef {
        Ring::builder()
            .scalar("b", Cap::Finite(4))
            .indexed("x", 2, Cap::Finite(xcap))
            .build()
            .unwrap()
    }

    #[test]
    fn basic_arithmetic() {
        let r = ring(4);
        let x1 = Poly::var(&r, r.var("x", 1).unwrap());
        let one = Poly::one(&r);
        assert_eq!(&(&one + &x1) * &(&one - &x1), &one - &x1.pow(2));
        let b = Poly::var(&r, r.scalar("b").unwrap());
        let s = &one + &(&b * &x1);
        assert_eq!(s.pow(2).to_string(), "1 + 2*b*x1 + b^2*x1^2");
    }

    #[test]
    fn truncation() {
        let r = ring(2);
        let x1 = Poly::var(&r, r.var("x", 1).unwrap());
        let one = Poly::one(&r);
        let f = &(&one + &x1) + &x1.pow(2);
        assert_eq!((&f * &x1).to_string(), "x1 + x1^2");
    }

    #[test]
    fn specialization() {
        let r = ring(4);
        let x1 = Poly::var(&r, r.var("x", 1).unwrap());
        let x2 = Poly::var(&r, r.var("x", 2).unwrap());
        let b = Poly::var(&r, r.scalar("b").unwrap());
        let f = &x1 + &x2;
        assert_eq!(f.specialize(&[(r.var("x", 2).unwrap(), Subst::Zero)]), x1);
        let g = &Poly::one(&r) - &(&b * &x1);
        let g1 = g.specialize(&[(r.scalar("b").unwrap(), Subst::One)]);
        assert_eq!(g1, &Poly::one(&r) - &x1);
        assert!(Subst::from_value(2).is_err());
    }

    #[test]
    fn generalized_binomial() {
        assert_eq!(binomial(5, 2), Int::from(10));
        assert_eq!(binomial(-1, 3), Int::from(-1));
        assert_eq!(binomial(-1, 0), Int::from(1));
        assert_eq!(binomial(3, -1), Int::ZERO);
        assert_eq!(binomial(2, 5), Int::ZERO);
        assert_eq!(binomial(-3, 2), Int::from(6));
    }
}
