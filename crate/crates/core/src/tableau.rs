//! Tableau families: depth-first enumeration, weight generating functions
//! and the counts used by the enumerative identities.

use std::fmt;
use std::str::FromStr;

use rustc_hash::FxHashMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::partition::{Cell, CellKind, DoubleSlashShape, SkewShape};
use crate::poly::{Int, Monomial, Poly, RingRef, Var};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Family {
    /// Set-valued tableaux on `λ//μ`.
    Svt,
    /// Reverse plane partitions on `λ/μ`.
    Rpp,
    /// Multiset-valued tableaux on `λ//μ`.
    Msvt,
    Ssyt,
    /// Increasing set-valued tableaux; every value used exactly once.
    Isvt,
    /// Rows strict, columns weak, each value in one column, all values used.
    St,
    /// Rows and columns strict, all values used.
    It,
    Syt,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Svt,
        Family::Rpp,
        Family::Msvt,
        Family::Ssyt,
        Family::Isvt,
        Family::St,
        Family::It,
        Family::Syt,
    ];

    /// Whether the family lives on extended shapes `λ//μ`.
    pub fn uses_corners(self) -> bool {
        matches!(self, Family::Svt | Family::Msvt | Family::Isvt)
    }

    fn row_strict(self) -> bool {
        matches!(self, Family::Isvt | Family::St | Family::It | Family::Syt)
    }

    fn col_strict(self) -> bool {
        !matches!(self, Family::Rpp | Family::St)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::Svt => "SVT",
            Family::Rpp => "RPP",
            Family::Msvt => "MSVT",
            Family::Ssyt => "SSYT",
            Family::Isvt => "ISVT",
            Family::St => "ST",
            Family::It => "IT",
            Family::Syt => "SYT",
        };
        f.write_str(s)
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidSpec(format!("unknown tableau family `{s}`")))
    }
}

/// Shape a filling lives on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TableauShape {
    Extended(DoubleSlashShape),
    Skew(SkewShape),
}

impl TableauShape {
    fn cells(&self) -> Vec<(Cell, CellKind)> {
        match self {
            TableauShape::Extended(s) => s.cells(),
            TableauShape::Skew(s) => s.cells().into_iter().map(|c| (c, CellKind::Skew)).collect(),
        }
    }

    /// Number of cells that must be filled.
    pub fn skew_size(&self) -> usize {
        match self {
            TableauShape::Extended(s) => s.skew().size(),
            TableauShape::Skew(s) => s.size(),
        }
    }

    /// Parses `λ//μ` or `λ/μ` according to what the family expects.
    pub fn parse_for(family: Family, s: &str) -> Result<Self> {
        if family.uses_corners() {
            Ok(TableauShape::Extended(s.parse()?))
        } else {
            Ok(TableauShape::Skew(s.parse()?))
        }
    }

    fn check(&self, family: Family) -> Result<()> {
        let ok = matches!(
            (self, family.uses_corners()),
            (TableauShape::Extended(_), true) | (TableauShape::Skew(_), false)
        );
        if ok {
            Ok(())
        } else {
            Err(ParseError::WrongShapeKind(format!("{self} for {family}")).into())
        }
    }
}

impl fmt::Display for TableauShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableauShape::Extended(s) => write!(f, "{s}"),
            TableauShape::Skew(s) => write!(f, "{s}"),
        }
    }
}

/// One filling; entries of each cell are sorted (with repeats for MSVT).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    pub family: Family,
    pub shape: TableauShape,
    pub cells: Vec<(Cell, Vec<usize>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauJson {
    pub shape: String,
    pub cells: Vec<CellJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellJson {
    pub row: usize,
    pub col: usize,
    pub entries: Vec<usize>,
}

impl Tableau {
    /// Total number of entries `|T|`.
    pub fn size(&self) -> usize {
        self.cells.iter().map(|(_, e)| e.len()).sum()
    }

    pub fn to_json(&self) -> TableauJson {
        TableauJson {
            shape: self.shape.to_string(),
            cells: self
                .cells
                .iter()
                .map(|&((row, col), ref e)| CellJson {
                    row,
                    col,
                    entries: e.clone(),
                })
                .collect(),
        }
    }
}

/// Search parameters.
#[derive(Clone, Copy, Debug)]
struct Limits {
    n: usize,
    /// Upper bound on `|T|`; required for multisets.
    budget: usize,
}

struct Search<'a> {
    family: Family,
    cells: &'a [(Cell, CellKind)],
    left: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    limits: Limits,
    content: Vec<Vec<usize>>,
    used: Vec<u32>,
    /// Column holding each value, for ST.
    value_col: Vec<usize>,
    total: usize,
}

impl<'a> Search<'a> {
    fn new(family: Family, cells: &'a [(Cell, CellKind)], limits: Limits) -> Self {
        let pos: FxHashMap<Cell, usize> = cells.iter().enumerate().map(|(i, &(c, _))| (c, i)).collect();
        let left = cells.iter().map(|&((r, c), _)| pos.get(&(r, c.wrapping_sub(1))).copied()).collect();
        let above = cells.iter().map(|&((r, c), _)| pos.get(&(r.wrapping_sub(1), c)).copied()).collect();
        Search {
            family,
            cells,
            left,
            above,
            limits,
            content: vec![Vec::new(); cells.len()],
            used: vec![0; limits.n + 1],
            value_col: vec![0; limits.n + 1],
            total: 0,
        }
    }

    fn lower_bound(&self, k: usize) -> usize {
        let mut lo = 1;
        if let Some(m) = self.left[k].and_then(|j| self.content[j].last()) {
            lo = lo.max(m + self.family.row_strict() as usize);
        }
        if let Some(m) = self.above[k].and_then(|j| self.content[j].last()) {
            lo = lo.max(m + self.family.col_strict() as usize);
        }
        lo
    }

    /// Entries still needed later: one per remaining skew cell.
    fn reserved_after(&self, k: usize) -> usize {
        self.cells[k + 1..].iter().filter(|(_, kind)| *kind == CellKind::Skew).count()
    }

    fn complete(&self) -> bool {
        match self.family {
            Family::Isvt | Family::St | Family::It | Family::Syt => self.used[1..].iter().all(|&u| u > 0),
            _ => true,
        }
    }

    fn run(&mut self, k: usize, visit: &mut dyn FnMut(&[Vec<usize>])) {
        if k == self.cells.len() {
            if self.complete() {
                visit(&self.content);
            }
            return;
        }
        let lo = self.lower_bound(k);
        let n = self.limits.n;
        let corner = self.cells[k].1 == CellKind::Corner;
        let room = self.limits.budget.saturating_sub(self.total + self.reserved_after(k));
        if corner {
            self.content[k].clear();
            self.run(k + 1, visit);
        }
        if room == 0 || lo > n {
            return;
        }
        match self.family {
            Family::Svt | Family::Isvt => self.sets(k, lo, room, false, visit),
            Family::Msvt => self.sets(k, lo, room, true, visit),
            _ => {
                for v in lo..=n {
                    if !self.admissible(k, v) {
                        continue;
                    }
                    self.push(k, v);
                    self.run(k + 1, visit);
                    self.pop(k);
                }
            }
        }
    }

    /// Nonempty (multi)subsets of `[lo, n]` with at most `room` entries,
    /// built in increasing order into `content[k]`.
    fn sets(&mut self, k: usize, lo: usize, room: usize, multi: bool, visit: &mut dyn FnMut(&[Vec<usize>])) {
        for v in lo..=self.limits.n {
            if !self.admissible(k, v) {
                continue;
            }
            self.push(k, v);
            self.run(k + 1, visit);
            if room > 1 {
                let next = if multi { v } else { v + 1 };
                self.sets(k, next, room - 1, multi, visit);
            }
            self.pop(k);
        }
    }

    fn admissible(&self, k: usize, v: usize) -> bool {
        match self.family {
            Family::Isvt | Family::Syt => self.used[v] == 0,
            Family::St => self.used[v] == 0 || self.value_col[v] == self.cells[k].0 .1,
            _ => true,
        }
    }

    fn push(&mut self, k: usize, v: usize) {
        self.content[k].push(v);
        self.used[v] += 1;
        self.value_col[v] = self.cells[k].0 .1;
        self.total += 1;
    }

    fn pop(&mut self, k: usize) {
        let v = self.content[k].pop().expect("nonempty cell");
        self.used[v] -= 1;
        self.total -= 1;
    }
}

fn search(family: Family, shape: &TableauShape, n: usize, budget: Option<usize>, visit: &mut dyn FnMut(&[Vec<usize>])) -> Result<()> {
    shape.check(family)?;
    let cells = shape.cells();
    let budget = match (family, budget) {
        (Family::Msvt, None) => {
            return Err(Error::InvalidSpec("multiset-valued tableaux need an entry bound".into()))
        }
        (_, Some(b)) => b,
        (_, None) => usize::MAX,
    };
    let n = if family == Family::Syt { shape.skew_size() } else { n };
    let mut s = Search::new(family, &cells, Limits { n, budget });
    s.run(0, visit);
    Ok(())
}

/// All fillings with entries in `[n]` (for SYT, `n` is the shape size),
/// in a fixed depth-first order. `max_entries` bounds `|T|` and is required
/// for MSVT.
pub fn enumerate(family: Family, shape: &TableauShape, n: usize, max_entries: Option<usize>) -> Result<Vec<Tableau>> {
    let cells = shape.cells();
    let mut out = Vec::new();
    search(family, shape, n, max_entries, &mut |content| {
        out.push(Tableau {
            family,
            shape: shape.clone(),
            cells: cells.iter().zip(content).map(|(&(c, _), e)| (c, e.clone())).collect(),
        });
    })?;
    Ok(out)
}

/// Number of fillings, without materializing them.
pub fn count(family: Family, shape: &TableauShape, n: usize) -> Result<u64> {
    let mut c = 0u64;
    search(family, shape, n, None, &mut |_| c += 1)?;
    Ok(c)
}

pub fn count_isvt(shape: &DoubleSlashShape, n: usize) -> Result<u64> {
    count(Family::Isvt, &TableauShape::Extended(shape.clone()), n)
}

pub fn count_st(shape: &SkewShape, n: usize) -> Result<u64> {
    count(Family::St, &TableauShape::Skew(shape.clone()), n)
}

pub fn count_it(shape: &SkewShape, n: usize) -> Result<u64> {
    count(Family::It, &TableauShape::Skew(shape.clone()), n)
}

pub fn count_syt(shape: &SkewShape) -> Result<u64> {
    count(Family::Syt, &TableauShape::Skew(shape.clone()), 0)
}

/// `Σ_T wt(T)` over fillings with entries in `[xs.len()]`.
///
/// SVT and MSVT: `(−β)^{|T|−|λ/μ|} x^T`. RPP: `β^{|λ/μ|−|T|} ∏ x_i^{c_i}`
/// with `c_i` the number of columns containing `i`. SSYT:
/// `∏ x_i^{r_i} (x_i+β)^{a_i−r_i}` with `r_i` the number of rows containing
/// `i` and `a_i` its multiplicity.
pub fn weight_sum(family: Family, shape: &TableauShape, ring: &RingRef, xs: &[Var], beta: Var) -> Result<Poly> {
    let n = xs.len();
    let size = shape.skew_size();
    let budget = match family {
        Family::Svt | Family::Msvt => {
            let a = &ring.alphabets()[xs.first().map(|v| v.alphabet()).unwrap_or(0)];
            match a.cap.finite() {
                Some(d) => Some(d as usize),
                None if family == Family::Msvt => return Err(Error::UnboundedCap(a.name.clone())),
                None => None,
            }
        }
        Family::Rpp | Family::Ssyt => None,
        _ => return Err(Error::InvalidSpec(format!("{family} has no weight generating function"))),
    };
    let cells = shape.cells();
    // Tableaux sharing the same statistics have the same weight.
    let mut stats: FxHashMap<Vec<u32>, u64> = FxHashMap::default();
    search(family, shape, n, budget, &mut |content| {
        let mut key = vec![0u32; 2 * n];
        match family {
            Family::Svt | Family::Msvt => {
                for e in content.iter().flatten() {
                    key[e - 1] += 1;
                }
            }
            Family::Rpp => {
                let mut seen: Vec<(usize, usize)> = Vec::new();
                for (&((_, c), _), e) in cells.iter().zip(content) {
                    let v = e[0];
                    if !seen.contains(&(c, v)) {
                        seen.push((c, v));
                        key[v - 1] += 1;
                    }
                }
            }
            _ => {
                let mut seen: Vec<(usize, usize)> = Vec::new();
                for (&((r, _), _), e) in cells.iter().zip(content) {
                    let v = e[0];
                    key[n + v - 1] += 1;
                    if !seen.contains(&(r, v)) {
                        seen.push((r, v));
                        key[v - 1] += 1;
                    }
                }
            }
        }
        *stats.entry(key).or_insert(0) += 1;
    })?;

    let mut out = Poly::zero(ring);
    let mut terms = Vec::new();
    for (key, mult) in stats {
        let mult = Int::from(mult);
        match family {
            Family::Svt | Family::Msvt => {
                let total: u32 = key[..n].iter().sum();
                let extra = total - size as u32;
                let mut powers: Vec<(Var, u32)> = xs.iter().zip(&key).map(|(&v, &e)| (v, e)).collect();
                powers.push((beta, extra));
                let sign = if extra % 2 == 0 { mult } else { -mult };
                terms.push((Monomial::from_powers(&powers), sign));
            }
            Family::Rpp => {
                let total: u32 = key[..n].iter().sum();
                let mut powers: Vec<(Var, u32)> = xs.iter().zip(&key).map(|(&v, &e)| (v, e)).collect();
                powers.push((beta, size as u32 - total));
                terms.push((Monomial::from_powers(&powers), mult));
            }
            _ => {
                let mut p = Poly::constant(ring, mult);
                for (i, &v) in xs.iter().enumerate() {
                    let (r, a) = (key[i], key[n + i]);
                    let xv = Poly::var(ring, v);
                    p = p * xv.pow(r) * (&xv + &Poly::var(ring, beta)).pow(a - r);
                }
                out += &p;
            }
        }
    }
    out += &Poly::from_terms(ring, terms);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Cap, Ring};

    fn ext(s: &str) -> TableauShape {
        TableauShape::Extended(s.parse().unwrap())
    }

    fn skew(s: &str) -> TableauShape {
        TableauShape::Skew(s.parse().unwrap())
    }

    fn ring(n: usize, xcap: u32) -> RingRef {
        Ring::builder()
            .scalar("b", Cap::Finite(4))
            .indexed("x", n, Cap::Finite(xcap))
            .build()
            .unwrap()
    }

    #[test]
    fn listed_fillings() {
        let t = enumerate(Family::Svt, &ext("1"), 2, None).unwrap();
        let got: Vec<Vec<usize>> = t.iter().map(|t| t.cells[0].1.clone()).collect();
        assert_eq!(got, vec![vec![1], vec![1, 2], vec![2]]);
        assert_eq!(count(Family::Isvt, &ext("2,1//2"), 2).unwrap(), 3);
        assert_eq!(enumerate(Family::Rpp, &skew("2,2/1"), 1, None).unwrap().len(), 1);
        assert_eq!(count_st(&"2,1,1/1".parse().unwrap(), 2).unwrap(), 2);
        assert_eq!(count_syt(&"2,1".parse().unwrap()).unwrap(), 2);
        assert!(count(Family::Svt, &skew("2/1"), 2).is_err());
    }

    #[test]
    fn small_weight_sums() {
        let r = ring(1, 2);
        let xs = r.vars("x").unwrap();
        let b = r.scalar("b").unwrap();
        let w = weight_sum(Family::Svt, &ext("2//1"), &r, &xs, b).unwrap();
        assert_eq!(w.to_string(), "x1 - b*x1^2");
        let r = ring(1, 4);
        let xs = r.vars("x").unwrap();
        let w = weight_sum(Family::Rpp, &skew("2,2/1"), &r, &xs, b).unwrap();
        assert_eq!(w.to_string(), "b*x1^2");
        let w = weight_sum(Family::Svt, &ext("2,1//2,1"), &r, &xs, b).unwrap();
        assert_eq!(w.to_string(), "1 - 2*b*x1 + b^2*x1^2");
        // one cell, multisets {1^k}: x/(1+βx)
        let w = weight_sum(Family::Msvt, &ext("1"), &r, &xs, b).unwrap();
        assert_eq!(w.to_string(), "x1 - b*x1^2 + b^2*x1^3 - b^3*x1^4");
    }

    #[test]
    fn json_form() {
        let t = &enumerate(Family::Svt, &ext("2//1"), 1, None).unwrap()[1];
        let j = serde_json::to_string(&t.to_json()).unwrap();
        assert_eq!(j, r#"{"shape":"2//1","cells":[{"row":1,"col":1,"entries":[1]},{"row":1,"col":2,"entries":[1]}]}"#);
    }
}
