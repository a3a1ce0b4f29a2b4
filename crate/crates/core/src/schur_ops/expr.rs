use std::fmt;

use crate::error::{Error, ParseError, Result};
use crate::module::ModuleElement;
use crate::poly::Poly;

use super::{apply_column, apply_series, ColumnOperator, OpContext, SeriesOperator};

/// Geometric series stop after this many nonzero powers.
const MAX_GEOMETRIC_STEPS: usize = 4096;

/// Operator expressions built from column operators and series.
///
/// `Product` is kept in written order: its last factor acts first.
#[derive(Clone, Debug)]
pub enum OpExpr {
    Identity,
    Column(ColumnOperator),
    Series(SeriesOperator),
    Scaled(Poly, Box<OpExpr>),
    Sum(Vec<OpExpr>),
    Product(Vec<OpExpr>),
    /// `(1 − c·op)^{-1}`, summed until the powers vanish under truncation.
    InverseOneMinus(Poly, Box<OpExpr>),
}

impl OpExpr {
    pub fn col(op: ColumnOperator) -> Self {
        OpExpr::Column(op)
    }

    pub fn prod(factors: impl IntoIterator<Item = OpExpr>) -> Self {
        OpExpr::Product(factors.into_iter().collect())
    }

    pub fn sum(terms: impl IntoIterator<Item = OpExpr>) -> Self {
        OpExpr::Sum(terms.into_iter().collect())
    }

    pub fn scaled(c: Poly, e: OpExpr) -> Self {
        OpExpr::Scaled(c, Box::new(e))
    }

    pub fn neg(e: OpExpr, ring: &crate::poly::RingRef) -> Self {
        OpExpr::Scaled(Poly::constant(ring, -1), Box::new(e))
    }

    /// `1 + c·op`.
    pub fn one_plus(c: Poly, e: OpExpr) -> Self {
        OpExpr::Sum(vec![OpExpr::Identity, OpExpr::scaled(c, e)])
    }

    pub fn inverse_one_minus(c: Poly, e: OpExpr) -> Self {
        OpExpr::InverseOneMinus(c, Box::new(e))
    }

    /// `ab − ba`.
    pub fn commutator(a: OpExpr, b: OpExpr, ring: &crate::poly::RingRef) -> Self {
        OpExpr::sum([
            OpExpr::prod([a.clone(), b.clone()]),
            OpExpr::neg(OpExpr::prod([b, a]), ring),
        ])
    }

    pub fn apply(&self, ctx: &OpContext, v: &ModuleElement) -> Result<ModuleElement> {
        Ok(match self {
            OpExpr::Identity => v.clone(),
            OpExpr::Column(op) => apply_column(ctx, *op, v),
            OpExpr::Series(op) => apply_series(ctx, *op, v)?,
            OpExpr::Scaled(c, e) => e.apply(ctx, v)?.scale_poly(c),
            OpExpr::Sum(ts) => {
                let mut out = ModuleElement::zero(&ctx.ring);
                for t in ts {
                    out.add_owned(t.apply(ctx, v)?);
                }
                out
            }
            OpExpr::Product(fs) => {
                let mut w = v.clone();
                for f in fs.iter().rev() {
                    if w.is_zero() {
                        break;
                    }
                    w = f.apply(ctx, &w)?;
                }
                w
            }
            OpExpr::InverseOneMinus(c, e) => {
                let mut acc = v.clone();
                let mut w = v.clone();
                for _ in 0..MAX_GEOMETRIC_STEPS {
                    w = e.apply(ctx, &w)?.scale_poly(c);
                    if w.is_zero() {
                        return Ok(acc);
                    }
                    acc.add_assign(&w);
                }
                return Err(Error::NonTerminating(format!(
                    "(1 - ({c})·{e})^-1 did not vanish after {MAX_GEOMETRIC_STEPS} powers"
                )));
            }
        })
    }

    /// Parses a word such as `ut2 dt1 A(x1)`; factors may be separated by
    /// spaces or `*` and are kept in written order.
    pub fn parse_word(ctx: &OpContext, s: &str) -> Result<OpExpr> {
        let mut factors = Vec::new();
        for tok in s.split(|c: char| c.is_whitespace() || c == '*').filter(|t| !t.is_empty()) {
            factors.push(parse_factor(ctx, tok)?);
        }
        if factors.is_empty() {
            return Err(ParseError::BadOperator(s.to_string()).into());
        }
        Ok(if factors.len() == 1 {
            factors.pop().unwrap()
        } else {
            OpExpr::Product(factors)
        })
    }
}

fn parse_factor(ctx: &OpContext, tok: &str) -> Result<OpExpr> {
    let bad = || Error::from(ParseError::BadOperator(tok.to_string()));
    if let Some(open) = tok.find('(') {
        let name = &tok[..open];
        let arg = tok[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let split = arg.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
        let idx: usize = arg[split..].parse().map_err(|_| bad())?;
        let var = ctx.ring.var(&arg[..split], idx)?;
        let op = match name {
            "A" => SeriesOperator::a(var),
            "B" => SeriesOperator::b(var),
            "Abar" => SeriesOperator::abar(var),
            "Bbar" => SeriesOperator::bbar(var),
            _ => return Err(bad()),
        };
        return Ok(OpExpr::Series(op));
    }
    let split = tok.find(|c: char| c.is_ascii_digit()).ok_or_else(bad)?;
    let i: usize = tok[split..].parse().map_err(|_| bad())?;
    if i == 0 {
        return Err(bad());
    }
    let op = match &tok[..split] {
        "u" => ColumnOperator::u(i),
        "d" => ColumnOperator::d(i),
        "ut" => ColumnOperator::ut(i),
        "dt" => ColumnOperator::dt(i),
        _ => return Err(bad()),
    };
    Ok(OpExpr::Column(op))
}

impl fmt::Display for OpExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OpExpr::Identity => f.write_str("1"),
            OpExpr::Column(op) => write!(f, "{op}"),
            OpExpr::Series(op) => {
                let k = match op.kind {
                    super::SeriesKind::A => "A",
                    super::SeriesKind::B => "B",
                    super::SeriesKind::ABar => "Abar",
                    super::SeriesKind::BBar => "Bbar",
                };
                write!(f, "{k}(v{})", op.var.index())
            }
            OpExpr::Scaled(c, e) => write!(f, "({c})·{e}"),
            OpExpr::Sum(ts) => {
                f.write_str("(")?;
                for (i, t) in ts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    write!(f, "{t}")?;
                }
                f.write_str(")")
            }
            OpExpr::Product(fs) => {
                for (i, t) in fs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{t}")?;
                }
                Ok(())
            }
            OpExpr::InverseOneMinus(c, e) => write!(f, "(1 - ({c})·[{e}])^-1"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Partition;
    use crate::poly::{Cap, Ring};

    #[test]
    fn parse_and_apply_word() {
        let r = Ring::builder()
            .scalar("b", Cap::Finite(3))
            .indexed("x", 1, Cap::Finite(2))
            .build()
            .unwrap();
        let ctx = OpContext::with_default_beta(&r).unwrap();
        let v = ModuleElement::basis(&r, "2,1".parse::<Partition>().unwrap());
        // d_2 u_2 acts as u_1 d_1 on (2,1): both give (2,1)
        let lhs = OpExpr::parse_word(&ctx, "d2 u2").unwrap().apply(&ctx, &v).unwrap();
        let rhs = OpExpr::parse_word(&ctx, "u1*d1").unwrap().apply(&ctx, &v).unwrap();
        assert_eq!(lhs, rhs);
        assert!(OpExpr::parse_word(&ctx, "q3").is_err());
        assert!(OpExpr::parse_word(&ctx, "u0").is_err());
        assert!(OpExpr::parse_word(&ctx, "A(z1)").is_err());
        let a = OpExpr::parse_word(&ctx, "A(x1)").unwrap();
        assert_eq!(a.apply(&ctx, &ModuleElement::basis(&r, Partition::empty())).unwrap().len(), 3);
    }
}
