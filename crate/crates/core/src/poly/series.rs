use super::{binomial, Poly, RingRef, Var};
use crate::error::{Error, Result};

fn require_nilpotent(t: &Poly, what: &str) -> Result<()> {
    if t.is_nilpotent() {
        Ok(())
    } else {
        Err(Error::NonTerminating(format!(
            "{what}: argument has a term of degree zero in every capped alphabet"
        )))
    }
}

pub(super) fn one_plus_pow(t: &Poly, e: i64) -> Result<Poly> {
    if e >= 0 {
        return Ok((&Poly::one(t.ring()) + t).pow(e as u32));
    }
    require_nilpotent(t, "negative binomial power")?;
    let mut out = Poly::one(t.ring());
    let mut tk = Poly::one(t.ring());
    let mut k = 0i64;
    loop {
        k += 1;
        tk = &tk * t;
        if tk.is_zero() {
            return Ok(out);
        }
        out += &tk.scale(&binomial(e, k));
    }
}

pub(super) fn geometric(t: &Poly) -> Result<Poly> {
    require_nilpotent(t, "geometric series")?;
    let mut out = Poly::one(t.ring());
    let mut tk = Poly::one(t.ring());
    loop {
        tk = &tk * t;
        if tk.is_zero() {
            return Ok(out);
        }
        out += &tk;
    }
}

/// `∏_{i,j} 1/(1 − x_i y_j)`, truncated.
pub fn cauchy_kernel(ring: &RingRef, xs: &[Var], ys: &[Var]) -> Result<Poly> {
    let mut out = Poly::one(ring);
    for &x in xs {
        for &y in ys {
            let xy = &Poly::var(ring, x) * &Poly::var(ring, y);
            out = &out * &geometric(&xy)?;
        }
    }
    Ok(out)
}

/// `∏_{i,j} (1 + x_i y_j)`, truncated.
pub fn dual_kernel(ring: &RingRef, xs: &[Var], ys: &[Var]) -> Poly {
    let mut out = Poly::one(ring);
    for &x in xs {
        for &y in ys {
            let xy = &Poly::var(ring, x) * &Poly::var(ring, y);
            out = &out * &(&Poly::one(ring) + &xy);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{Cap, Int, Monomial, Ring};

    fn ring(m: usize, n: usize, cap: u32) -> RingRef {
        Ring::builder()
            .indexed("x", m, Cap::Finite(cap))
            .indexed("y", n, Cap::Finite(cap))
            .build()
            .unwrap()
    }

    #[test]
    fn kernel_examples() {
        let r = ring(1, 1, 2);
        let k = cauchy_kernel(&r, &r.vars("x").unwrap(), &r.vars("y").unwrap()).unwrap();
        assert_eq!(k.to_string(), "1 + x1*y1 + x1^2*y1^2");

        let r = ring(2, 1, 4);
        let k = cauchy_kernel(&r, &r.vars("x").unwrap(), &r.vars("y").unwrap()).unwrap();
        let m = Monomial::from_exponents(&r, &[1, 1, 2]).unwrap();
        assert_eq!(k.coefficient_of(m), Int::from(1));
        let d = dual_kernel(&r, &r.vars("x").unwrap(), &r.vars("y").unwrap());
        assert_eq!(d.coefficient_of(m), Int::from(1));

        let r = ring(1, 2, 4);
        let d = dual_kernel(&r, &r.vars("x").unwrap(), &r.vars("y").unwrap());
        let m = Monomial::from_exponents(&r, &[2, 1, 1]).unwrap();
        assert_eq!(d.coefficient_of(m), Int::from(1));

        let r = ring(1, 1, 2);
        assert_eq!(cauchy_kernel(&r, &[], &r.vars("y").unwrap()).unwrap(), Poly::one(&r));
        let r1 = ring(1, 1, 2);
        assert_eq!(dual_kernel(&r1, &r1.vars("x").unwrap(), &r1.vars("y").unwrap()).to_string(), "1 + x1*y1");
    }

    #[test]
    fn kernel_inverse() {
        for m in 0..=2 {
            for n in 0..=2 {
                for cap in 0..=6 {
                    let r = ring(m.max(1), n.max(1), cap);
                    let xs = &r.vars("x").unwrap()[..m];
                    let ys = &r.vars("y").unwrap()[..n];
                    let k = cauchy_kernel(&r, xs, ys).unwrap();
                    let mut inv = Poly::one(&r);
                    for &x in xs {
                        for &y in ys {
                            inv = &inv * &(&Poly::one(&r) - &(&Poly::var(&r, x) * &Poly::var(&r, y)));
                        }
                    }
                    assert_eq!(&k * &inv, Poly::one(&r));
                }
            }
        }
    }

    #[test]
    fn negative_powers() {
        let r = ring(1, 1, 5);
        let x = Poly::var(&r, r.var("x", 1).unwrap());
        let p = x.one_plus_pow(-2).unwrap();
        assert_eq!(&p * &(&Poly::one(&r) + &x).pow(2), Poly::one(&r));
        assert!(Poly::one(&r).geometric().is_err());
    }
}
