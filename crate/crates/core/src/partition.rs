//! Partitions, skew shapes and the extended shapes `λ//μ`.
//!
//! Cells are 1-indexed `(row, column)` in English notation.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::ParseError;

pub type Cell = (usize, usize);

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition, dropping trailing zeros. Fails on increasing parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, ParseError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ParseError::NotDecreasing(parts));
        }
        Ok(Partition(parts))
    }

    /// Panicking constructor for literals in tests and tables.
    pub fn from_parts(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("parts must be weakly decreasing")
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (1-indexed), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Height of column `j` (1-indexed).
    pub fn column_height(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.0.iter().take_while(|&&p| p >= j).count()
    }

    pub fn first_part(&self) -> usize {
        self.part(1)
    }

    pub fn conjugate(&self) -> Partition {
        let n = self.first_part();
        Partition((1..=n).map(|j| self.column_height(j)).collect())
    }

    pub fn contains_cell(&self, (r, c): Cell) -> bool {
        r >= 1 && c >= 1 && self.part(r) >= c
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.weight());
        for (i, &p) in self.0.iter().enumerate() {
            for j in 1..=p {
                out.push((i + 1, j));
            }
        }
        out
    }

    /// Removable boxes (inner corners), top to bottom.
    pub fn removable_boxes(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for i in 1..=self.len() {
            if self.part(i) > self.part(i + 1) {
                out.push((i, self.part(i)));
            }
        }
        out
    }

    /// `i(λ)`, the number of removable boxes.
    pub fn corner_count(&self) -> usize {
        self.removable_boxes().len()
    }

    /// Adds a box at the end of row `r`, if the result is a partition.
    pub fn add_to_row(&self, r: usize) -> Option<Partition> {
        if r == 0 || r > self.len() + 1 || (r > 1 && self.part(r - 1) == self.part(r)) {
            return None;
        }
        let mut parts = self.0.clone();
        if r == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[r - 1] += 1;
        }
        Some(Partition(parts))
    }

    /// Adds a box at the bottom of column `c`, if the result is a partition.
    pub fn add_to_column(&self, c: usize) -> Option<Partition> {
        if c == 0 {
            return None;
        }
        let h = self.column_height(c);
        if c > 1 && self.column_height(c - 1) <= h {
            return None;
        }
        self.add_to_row(h + 1)
    }

    /// Removes the bottom box of column `c`, if the result is a partition.
    pub fn remove_from_column(&self, c: usize) -> Option<Partition> {
        let h = self.column_height(c);
        if h == 0 || self.part(h) != c {
            return None;
        }
        let mut parts = self.0.clone();
        parts[h - 1] -= 1;
        if parts[h - 1] == 0 {
            parts.pop();
        }
        Some(Partition(parts))
    }

    /// The number of partitions contained in `self` (including ∅ and itself).
    pub fn subdiagram_count(&self) -> u64 {
        // DP over rows from the bottom: ways[v] = number of fillings of the
        // rows below with the current row's part equal to v.
        let n = self.len();
        if n == 0 {
            return 1;
        }
        let mut ways: Vec<u64> = vec![1; self.part(n) + 1];
        for i in (1..n).rev() {
            let cap = self.part(i);
            let mut next = vec![0u64; cap + 1];
            let mut acc = 0u64;
            for (v, slot) in next.iter_mut().enumerate() {
                if v < ways.len() {
                    acc += ways[v];
                }
                *slot = acc;
            }
            ways = next;
        }
        ways.iter().sum()
    }

    /// All partitions contained in `self`, in the standard order.
    pub fn subdiagrams(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(lam: &Partition, i: usize, bound: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if i > lam.len() {
                return;
            }
            let hi = bound.min(lam.part(i));
            for v in 1..=hi {
                cur.push(v);
                rec(lam, i + 1, v, cur, out);
                cur.pop();
            }
        }
        rec(self, 1, usize::MAX, &mut cur, &mut out);
        out.sort();
        out
    }

    /// The staircase `δ_n = (n, n−1, …, 1)`.
    pub fn staircase(n: usize) -> Partition {
        Partition((1..=n).rev().collect())
    }
}

impl Ord for Partition {
    /// By weight, then lexicographically descending.
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        f.write_str(&s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "-" || s == "∅" {
            return Ok(Partition::empty());
        }
        if s.is_empty() {
            return Err(ParseError::Empty);
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let v: usize = tok
                .trim()
                .parse()
                .map_err(|_| ParseError::BadPart(tok.to_string()))?;
            if v == 0 {
                return Err(ParseError::BadPart(tok.to_string()));
            }
            parts.push(v);
        }
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// All partitions of weight exactly `n`, lexicographically descending.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut cur, &mut out);
    out
}

/// All partitions of weight at most `n`.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// All partitions `λ ⊇ μ` with `|λ/μ| ≤ extra`.
pub fn supersets_up_to(mu: &Partition, extra: usize) -> Vec<Partition> {
    let mut out = vec![mu.clone()];
    let mut frontier = vec![mu.clone()];
    for _ in 0..extra {
        let mut next = std::collections::BTreeSet::new();
        for lam in &frontier {
            for r in 1..=lam.len() + 1 {
                if let Some(nu) = lam.add_to_row(r) {
                    next.insert(nu);
                }
            }
        }
        frontier = next.into_iter().collect();
        out.extend(frontier.iter().cloned());
    }
    out
}

/// `λ/μ` with `μ ⊆ λ`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

/// Strip classification; the flags are not exclusive.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default, Serialize)]
pub struct StripKind {
    pub empty: bool,
    pub horizontal: bool,
    pub vertical: bool,
    pub rook: bool,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, ParseError> {
        if !outer.contains(&inner) {
            return Err(ParseError::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for i in 1..=self.outer.len() {
            for j in self.inner.part(i) + 1..=self.outer.part(i) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.outer.contains_cell(cell) && !self.inner.contains_cell(cell)
    }

    /// `c(λ/μ)`: number of nonempty columns.
    pub fn column_count(&self) -> usize {
        (1..=self.outer.first_part())
            .filter(|&j| self.outer.column_height(j) > self.inner.column_height(j))
            .count()
    }

    /// `r(λ/μ)`: number of nonempty rows.
    pub fn row_count(&self) -> usize {
        (1..=self.outer.len())
            .filter(|&i| self.outer.part(i) > self.inner.part(i))
            .count()
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    pub fn is_horizontal_strip(&self) -> bool {
        self.size() == self.column_count()
    }

    pub fn is_vertical_strip(&self) -> bool {
        self.size() == self.row_count()
    }

    /// Every box of `λ/μ` is a removable box of `λ`.
    pub fn is_rook_strip(&self) -> bool {
        self.cells().iter().all(|&(r, c)| {
            self.outer.part(r) == c && self.outer.part(r + 1) < c
        })
    }

    pub fn strip_kind(&self) -> StripKind {
        StripKind {
            empty: self.size() == 0,
            horizontal: self.is_horizontal_strip(),
            vertical: self.is_vertical_strip(),
            rook: self.is_rook_strip(),
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl FromStr for SkewShape {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.contains("//") {
            return Err(ParseError::WrongShapeKind(s.to_string()));
        }
        match s.split_once('/') {
            Some((o, i)) => SkewShape::new(o.parse()?, i.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

/// Which part of `λ//μ` a cell belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CellKind {
    Skew,
    Corner,
}

/// `λ//μ = λ/μ ∪ I(μ)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct DoubleSlashShape {
    outer: Partition,
    inner: Partition,
}

impl DoubleSlashShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, ParseError> {
        SkewShape::new(outer.clone(), inner.clone())?;
        Ok(DoubleSlashShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn skew(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.clone(),
            inner: self.inner.clone(),
        }
    }

    pub fn conjugate(&self) -> DoubleSlashShape {
        DoubleSlashShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    /// Cells in row-major order with their provenance.
    pub fn cells(&self) -> Vec<(Cell, CellKind)> {
        let mut out: Vec<(Cell, CellKind)> = self
            .skew()
            .cells()
            .into_iter()
            .map(|c| (c, CellKind::Skew))
            .chain(self.inner.removable_boxes().into_iter().map(|c| (c, CellKind::Corner)))
            .collect();
        out.sort_by_key(|&(c, _)| c);
        out
    }

    /// `a(λ//μ)`: columns of `λ//μ` that are not columns of `λ/μ`.
    pub fn open_box_count(&self) -> usize {
        let skew = self.skew();
        self.inner
            .removable_boxes()
            .iter()
            .filter(|&&(_, c)| self.outer.column_height(c) == skew.inner.column_height(c))
            .count()
    }
}

impl fmt::Display for DoubleSlashShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}//{}", self.outer, self.inner)
    }
}

impl FromStr for DoubleSlashShape {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.split_once("//") {
            Some((o, i)) => DoubleSlashShape::new(o.parse()?, i.parse()?),
            None => {
                if s.contains('/') {
                    return Err(ParseError::WrongShapeKind(s.to_string()));
                }
                DoubleSlashShape::new(s.parse()?, Partition::empty())
            }
        }
    }
}

/// Möbius function of Young's lattice.
pub fn moebius(lam: &Partition, mu: &Partition) -> i64 {
    match SkewShape::new(lam.clone(), mu.clone()) {
        Ok(s) if s.is_rook_strip() => {
            if s.size() % 2 == 0 {
                1
            } else {
                -1
            }
        }
        _ => 0,
    }
}

/// All `μ ⊆ λ` such that `λ/μ` is a rook strip.
pub fn rook_strip_removals(lam: &Partition) -> Vec<Partition> {
    let corners = lam.removable_boxes();
    let mut out = Vec::with_capacity(1 << corners.len());
    for mask in 0u32..(1 << corners.len()) {
        let mut parts = lam.parts().to_vec();
        for (k, &(r, _)) in corners.iter().enumerate() {
            if mask & (1 << k) != 0 {
                parts[r - 1] -= 1;
            }
        }
        out.push(Partition::new(parts).expect("removing corners keeps a partition"));
    }
    out.sort();
    out
}

/// All `λ ⊇ μ` such that `λ/μ` is a horizontal strip of size at most `max`.
pub fn horizontal_strips_over(mu: &Partition, max: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let rows = mu.len() + 1;
    let mut cur = mu.parts().to_vec();
    cur.push(0);
    fn rec(mu: &Partition, i: usize, rows: usize, rem: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i > rows {
            out.push(Partition::new(cur.clone()).unwrap());
            return;
        }
        let base = mu.part(i);
        let cap = if i == 1 { base + rem } else { mu.part(i - 1).min(base + rem) };
        for v in base..=cap {
            cur[i - 1] = v;
            rec(mu, i + 1, rows, rem - (v - base), cur, out);
        }
        cur[i - 1] = base;
    }
    rec(mu, 1, rows, max, &mut cur, &mut out);
    out.sort();
    out
}

/// All `λ ⊇ μ` such that `λ/μ` is a vertical strip of size at most `max`.
pub fn vertical_strips_over(mu: &Partition, max: usize) -> Vec<Partition> {
    let mut out: Vec<Partition> = horizontal_strips_over(&mu.conjugate(), max)
        .into_iter()
        .map(|p| p.conjugate())
        .collect();
    out.sort();
    out
}

/// All `η ⊆ ν` such that `ν/η` is a horizontal strip.
pub fn horizontal_strips_under(nu: &Partition) -> Vec<Partition> {
    let mut out: Vec<Partition> = nu
        .subdiagrams()
        .into_iter()
        .filter(|eta| SkewShape::new(nu.clone(), eta.clone()).unwrap().is_horizontal_strip())
        .collect();
    out.sort();
    out
}

/// All `η ⊆ ν` such that `ν/η` is a vertical strip.
pub fn vertical_strips_under(nu: &Partition) -> Vec<Partition> {
    let mut out: Vec<Partition> = nu
        .subdiagrams()
        .into_iter()
        .filter(|eta| SkewShape::new(nu.clone(), eta.clone()).unwrap().is_vertical_strip())
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("5,3,3,1").conjugate(), p("4,3,3,1,1"));
        assert_eq!(p("-").conjugate(), p("-"));
        assert_eq!(p("4").conjugate(), p("1,1,1,1"));
    }

    #[test]
    fn corners() {
        assert_eq!(p("4,3,2").removable_boxes(), vec![(1, 4), (2, 3), (3, 2)]);
        assert!(p("-").removable_boxes().is_empty());
        assert_eq!(p("2,2").removable_boxes(), vec![(2, 2)]);
    }

    #[test]
    fn open_boxes() {
        let s: DoubleSlashShape = "5,3,3,1//4,3,2".parse().unwrap();
        assert_eq!(s.open_box_count(), 2);
        let s: DoubleSlashShape = "4,3,2//4,3,2".parse().unwrap();
        assert_eq!(s.open_box_count(), 3);
        let s: DoubleSlashShape = "1//-".parse().unwrap();
        assert_eq!(s.open_box_count(), 0);
    }

    #[test]
    fn strip_statistics() {
        let s: SkewShape = "5,3,3,1/4,3,2".parse().unwrap();
        assert_eq!((s.column_count(), s.row_count()), (3, 3));
        // cells (1,5), (3,3), (4,1): one per row and column
        assert!(s.is_horizontal_strip() && s.is_vertical_strip());
        // cells (1,5), (3,3), (4,1) are all corners of the outer shape
        assert!(s.is_rook_strip());
        let s: SkewShape = "2,1/1".parse().unwrap();
        let k = s.strip_kind();
        assert!(k.horizontal && k.vertical && k.rook && !k.empty);
        let s: SkewShape = "3,1/3,1".parse().unwrap();
        let k = s.strip_kind();
        assert!(k.empty && k.horizontal && k.vertical && k.rook);
    }

    #[test]
    fn moebius_examples() {
        assert_eq!(moebius(&p("2,2"), &p("2,1")), -1);
        assert_eq!(moebius(&p("2,1"), &p("1")), 1);
        assert_eq!(moebius(&p("2"), &p("-")), 0);
    }

    #[test]
    fn subdiagram_counts() {
        assert_eq!(p("1").subdiagram_count(), 2);
        assert_eq!(p("2,1").subdiagram_count(), 5);
        assert_eq!(Partition::staircase(3).subdiagram_count(), 14);
        for n in 0..=6 {
            let d = Partition::staircase(n);
            assert_eq!(d.subdiagram_count() as usize, d.subdiagrams().len());
        }
    }

    #[test]
    fn enumeration_order() {
        assert_eq!(partitions_up_to(0), vec![p("-")]);
        assert_eq!(partitions_up_to(2), vec![p("-"), p("1"), p("2"), p("1,1")]);
        assert_eq!(partitions_up_to(6).len(), 30);
    }

    #[test]
    fn shape_round_trip() {
        for s in ["5,3,3,1", "-", "3,1"] {
            assert_eq!(s.parse::<Partition>().unwrap().to_string(), s);
        }
        for s in ["5,3,3,1/4,3,2", "2,1/-", "-/-"] {
            assert_eq!(s.parse::<SkewShape>().unwrap().to_string(), s);
        }
        for s in ["2//1", "5,3,3,1//4,3,2", "-//-"] {
            let d: DoubleSlashShape = s.parse().unwrap();
            assert_eq!(d.to_string(), if s == "2//1" { "2//1" } else { s });
        }
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2/3".parse::<SkewShape>().is_err());
        assert!("2,x".parse::<Partition>().is_err());
    }

    #[test]
    fn column_moves() {
        assert_eq!(p("2,1").add_to_column(2), Some(p("2,2")));
        assert_eq!(p("1").add_to_column(2), Some(p("2")));
        assert_eq!(p("1").add_to_column(3), None);
        assert_eq!(p("2,2").add_to_column(2), None);
        assert_eq!(p("3,2,2,2").remove_from_column(2), Some(p("3,2,2,1")));
        assert_eq!(p("2").remove_from_column(1), None);
    }

    #[test]
    fn strip_generators() {
        let hs = horizontal_strips_over(&p("1"), 2);
        assert_eq!(hs, vec![p("1"), p("2"), p("1,1"), p("3"), p("2,1")]);
        let vs = vertical_strips_over(&p("-"), 2);
        assert_eq!(vs, vec![p("-"), p("1"), p("1,1")]);
        assert_eq!(rook_strip_removals(&p("2,1")), vec![p("1"), p("2"), p("1,1"), p("2,1")]);
    }
}
