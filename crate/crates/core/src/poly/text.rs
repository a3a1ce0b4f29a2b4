use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Int, Monomial, Poly, Ring, RingRef};
use crate::error::{Error, ParseError, Result};

/// Graded lexicographic order: lower total degree first, then larger
/// exponent of the earlier variable first.
pub(super) fn graded_cmp(ring: &Ring, a: u128, b: u128) -> Ordering {
    let (ma, mb) = (Monomial(a), Monomial(b));
    ma.total_degree().cmp(&mb.total_degree()).then_with(|| {
        for i in 0..ring.nvars() {
            let ea = (a >> (8 * i)) & 0xff;
            let eb = (b >> (8 * i)) & 0xff;
            if ea != eb {
                return eb.cmp(&ea);
            }
        }
        Ordering::Equal
    })
}

impl Poly {
    /// Terms in canonical graded-lex order.
    pub fn sorted_terms(&self) -> Vec<(Monomial, Int)> {
        let mut t: Vec<(Monomial, Int)> = self.terms().map(|(m, c)| (m, c.clone())).collect();
        t.sort_by(|a, b| graded_cmp(self.ring(), a.0 .0, b.0 .0));
        t
    }

    pub fn monomial_string(&self, m: Monomial) -> String {
        let ring = self.ring();
        let mut factors = Vec::new();
        for i in 0..ring.nvars() {
            let e = ((m.0 >> (8 * i)) & 0xff) as u32;
            if e == 0 {
                continue;
            }
            let name = ring.var_name(ring.var_at(i));
            if e == 1 {
                factors.push(name);
            } else {
                factors.push(format!("{name}^{e}"));
            }
        }
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }

    /// Parses the canonical text form against `ring`.
    pub fn parse(ring: &RingRef, s: &str) -> Result<Poly> {
        let names = ring.var_names();
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(ParseError::Empty.into());
        }
        if s == "0" {
            return Ok(Poly::zero(ring));
        }
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (i, ch) in s.chars().enumerate() {
            if (ch == '+' || ch == '-') && !cur.is_empty() {
                pieces.push((neg, std::mem::take(&mut cur)));
                neg = ch == '-';
            } else if (ch == '+' || ch == '-') && i == 0 {
                neg = ch == '-';
            } else if ch == '+' || ch == '-' {
                return Err(ParseError::BadTerm(s.clone()).into());
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(ParseError::BadTerm(s.clone()).into());
        }
        pieces.push((neg, cur));

        let mut terms = Vec::new();
        for (neg, body) in pieces {
            let mut coeff = Int::ONE;
            let mut exps = vec![0u32; ring.nvars()];
            for factor in body.split('*') {
                if factor.is_empty() {
                    return Err(ParseError::BadTerm(body.clone()).into());
                }
                if factor.chars().all(|c| c.is_ascii_digit()) {
                    let v: Int = factor
                        .parse()
                        .map_err(|_| ParseError::BadTerm(factor.to_string()))?;
                    coeff *= v;
                    continue;
                }
                let (name, e) = match factor.split_once('^') {
                    Some((n, e)) => (
                        n,
                        e.parse::<u32>()
                            .map_err(|_| ParseError::BadTerm(factor.to_string()))?,
                    ),
                    None => (factor, 1),
                };
                let idx = names
                    .iter()
                    .position(|n| n == name)
                    .ok_or_else(|| ParseError::UnknownVariable(name.to_string()))?;
                exps[idx] += e;
            }
            if neg {
                coeff = -coeff;
            }
            let m = Monomial::from_exponents(ring, &exps)?;
            terms.push((m, coeff));
        }
        Ok(Poly::from_terms(ring, terms))
    }

    pub fn to_json(&self) -> PolyJson {
        PolyJson {
            variables: self.ring().var_names(),
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(m, c)| TermJson {
                    exponents: m.exponents(self.ring()),
                    coefficient: c.to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(ring: &RingRef, j: &PolyJson) -> Result<Poly> {
        if j.variables != ring.var_names() {
            return Err(Error::InvalidSpec(format!(
                "variables {:?} do not match the ring {:?}",
                j.variables,
                ring.var_names()
            )));
        }
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in &j.terms {
            let c: Int = t
                .coefficient
                .parse()
                .map_err(|_| ParseError::BadTerm(t.coefficient.clone()))?;
            terms.push((Monomial::from_exponents(ring, &t.exponents)?, c));
        }
        Ok(Poly::from_terms(ring, terms))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.sorted_terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in terms.iter().enumerate() {
            let negative = *c < Int::ZERO;
            let abs = if negative { -c } else { c.clone() };
            if k == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            if m.0 == 0 {
                write!(f, "{abs}")?;
            } else if abs == Int::ONE {
                f.write_str(&self.monomial_string(*m))?;
            } else {
                write!(f, "{abs}*{}", self.monomial_string(*m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// JSON form of a polynomial: variable names and exponent vectors in ring
/// order, coefficients as decimal strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub variables: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exponents: Vec<u32>,
    pub coefficient: String,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Cap;

    fn ring() -> RingRef {
        Ring::builder()
            .scalar("b", Cap::Finite(6))
            .indexed("x", 2, Cap::Finite(6))
            .build()
            .unwrap()
    }

    #[test]
    fn canonical_round_trip() {
        let r = ring();
        for s in ["1 - 2*b*x1 + b^2*x1^2", "x1 - b*x1^2", "-3", "0", "x1*x2 - 12*b^3*x2^3"] {
            let p = Poly::parse(&r, s).unwrap();
            assert_eq!(p.to_string(), s);
        }
        let p = Poly::parse(&r, "x2 + x1 + x1").unwrap();
        assert_eq!(p.to_string(), "2*x1 + x2");
        assert!(Poly::parse(&r, "z1").is_err());
        assert!(Poly::parse(&r, "x1 +").is_err());
    }

    #[test]
    fn json_round_trip() {
        let r = ring();
        let p = Poly::parse(&r, "1 - 2*b*x1 + b^2*x1^2").unwrap();
        let j = serde_json::to_string(&p.to_json()).unwrap();
        let back: PolyJson = serde_json::from_str(&j).unwrap();
        assert_eq!(Poly::from_json(&r, &back).unwrap(), p);
    }
}
