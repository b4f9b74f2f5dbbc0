//! Rational functions in commuting symbols.
//!
//! Numerator and denominator are coprime and the denominator is monic in
//! graded-lex order, so two equal functions have identical representations.

use std::fmt;
use std::sync::Arc;

use super::mpoly::{gcd, MPoly};
use super::number::Number;
use super::FunctionField;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq)]
pub struct RatFunc {
    num: MPoly,
    den: MPoly,
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl RatFunc {
    /// Builds `num / den` in canonical form.
    pub fn new(num: MPoly, den: MPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let ring = num.ring().clone();
        if num.is_zero() {
            return Ok(Self::from_poly(MPoly::zero(&ring)));
        }
        let g = gcd(&num, &den);
        let (n, d) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        Ok(Self::with_monic_den(n, d))
    }

    fn with_monic_den(num: MPoly, den: MPoly) -> Self {
        let lc = den.lc().expect("nonzero denominator").clone();
        if lc.is_one() {
            return RatFunc { num, den };
        }
        let inv = lc.inv().expect("nonzero leading coefficient");
        RatFunc { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn from_poly(num: MPoly) -> Self {
        let den = MPoly::one(num.ring());
        RatFunc { num, den }
    }

    pub fn constant(ring: &Arc<FunctionField>, c: Number) -> Self {
        Self::from_poly(MPoly::constant(ring, c))
    }

    pub fn var(ring: &Arc<FunctionField>, i: usize) -> Self {
        Self::from_poly(MPoly::var(ring, i))
    }

    pub fn ring(&self) -> &Arc<FunctionField> {
        self.num.ring()
    }

    pub fn num(&self) -> &MPoly {
        &self.num
    }

    pub fn den(&self) -> &MPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn constant_value(&self) -> Option<Number> {
        if self.den.is_one() {
            self.num.constant_value()
        } else {
            None
        }
    }

    pub fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        let c = if negate { other.num.neg() } else { other.num.clone() };
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.add(&c));
        }
        if self.den == other.den {
            let n = self.num.add(&c);
            return Self::new(n, self.den.clone()).expect("nonzero denominator");
        }
        let g = gcd(&self.den, &other.den);
        if g.is_one() {
            let n = self.num.mul(&other.den).add(&c.mul(&self.den));
            let d = self.den.mul(&other.den);
            // Coprime denominators: only factors of d1*d2 can cancel, and each
            // divides exactly one of them; a full gcd is still required.
            return Self::new(n, d).expect("nonzero denominator");
        }
        let b1 = self.den.div_exact(&g).expect("gcd divides");
        let d1 = other.den.div_exact(&g).expect("gcd divides");
        let n = self.num.mul(&d1).add(&c.mul(&b1));
        if n.is_zero() {
            return Self::from_poly(MPoly::zero(self.ring()));
        }
        let g2 = gcd(&n, &g);
        let (n, gq) = if g2.is_one() {
            (n, g)
        } else {
            (n.div_exact(&g2).expect("gcd divides"), g.div_exact(&g2).expect("gcd divides"))
        };
        let d = b1.mul(&d1).mul(&gq);
        Self::with_monic_den(n, d)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.add_impl(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add_impl(other, true)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::from_poly(MPoly::zero(self.ring()));
        }
        let g1 = gcd(&self.num, &other.den);
        let g2 = gcd(&other.num, &self.den);
        let a = self.num.div_exact(&g1).expect("gcd divides");
        let d = other.den.div_exact(&g1).expect("gcd divides");
        let c = other.num.div_exact(&g2).expect("gcd divides");
        let b = self.den.div_exact(&g2).expect("gcd divides");
        Self::with_monic_den(a.mul(&c), b.mul(&d))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::with_monic_den(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn scale(&self, c: &Number) -> Self {
        if c.is_zero() {
            return Self::from_poly(MPoly::zero(self.ring()));
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Evaluates at a point, failing when the denominator vanishes there.
    pub fn eval(&self, point: &[Number]) -> Result<Number> {
        let d = self.den.eval(point);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.num.eval(point).try_div(&d)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            if self.num.nterms() <= 1 {
                let s = self.num.to_string();
                if s.starts_with('-') && !self.num.is_constant() {
                    return write!(f, "({s})");
                }
                return write!(f, "{s}");
            }
            return write!(f, "({})", self.num);
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::BaseField;

    fn ring() -> Arc<FunctionField> {
        Arc::new(FunctionField::new(BaseField::Rationals, vec!["a".into(), "b".into()]))
    }

    #[test]
    fn cancellation() {
        let r = ring();
        let a = RatFunc::var(&r, 0);
        let b = RatFunc::var(&r, 1);
        let x = a.div(&b).unwrap();
        let y = b.div(&a).unwrap();
        assert!(x.mul(&y).is_one());
        let s = a.add(&b).div(&a.mul(&a).sub(&b.mul(&b))).unwrap();
        let expect = RatFunc::constant(&r, r.base.one()).div(&a.sub(&b)).unwrap();
        assert_eq!(s, expect);
    }

    #[test]
    fn addition_with_shared_factor() {
        let r = ring();
        let a = RatFunc::var(&r, 0);
        let b = RatFunc::var(&r, 1);
        let one = RatFunc::constant(&r, r.base.one());
        // 1/(a(a+b)) + 1/(b(a+b)) = 1/(ab)
        let ab = a.add(&b);
        let lhs = one.div(&a.mul(&ab)).unwrap().add(&one.div(&b.mul(&ab)).unwrap());
        assert_eq!(lhs, one.div(&a.mul(&b)).unwrap());
    }

    #[test]
    fn denominator_is_monic() {
        let r = ring();
        let a = RatFunc::var(&r, 0);
        let three = RatFunc::constant(&r, r.base.from_i64(3));
        let x = a.div(&a.mul(&three).add(&three)).unwrap();
        assert!(x.den().lc().unwrap().is_one());
        assert_eq!(x.to_string(), "(1/3*a)/(a+1)");
    }
}
