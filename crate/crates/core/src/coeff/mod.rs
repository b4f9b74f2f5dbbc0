//! Exact coefficient fields.
//!
//! A [`Scalar`] is either a constant from a [`BaseField`] (rationals, a
//! cyclotomic field or a prime field) or a rational function over one of
//! those in a fixed list of commuting symbols.

mod mpoly;
mod number;
mod qcomb;
mod ratfunc;
mod text;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

pub use mpoly::{gcd, Exponents, MPoly};
pub use number::{cyclotomic_polynomial, is_prime, BaseField, CycloField, Cyclotomic, Modular, Number};
pub use qcomb::{gauss_binom, q_int, sym_binom};
pub use ratfunc::RatFunc;
pub use text::parse_scalar;

use crate::error::{Error, Result};

/// Polynomial ring data shared by every rational function of one field.
#[derive(Debug)]
pub struct FunctionField {
    pub base: BaseField,
    pub symbols: Vec<String>,
}

impl PartialEq for FunctionField {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && self.symbols == other.symbols
    }
}

impl Eq for FunctionField {}

impl FunctionField {
    pub fn new(base: BaseField, symbols: Vec<String>) -> Self {
        FunctionField { base, symbols }
    }

    pub fn nvars(&self) -> usize {
        self.symbols.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == name)
    }
}

/// A coefficient field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldSpec {
    Base(BaseField),
    Functions(Arc<FunctionField>),
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Base(BaseField::Rationals)
    }

    pub fn cyclotomic(m: u32) -> Result<Self> {
        Ok(FieldSpec::Base(BaseField::cyclotomic(m)?))
    }

    pub fn prime(l: u64) -> Result<Self> {
        Ok(FieldSpec::Base(BaseField::prime(l)?))
    }

    pub fn functions(base: BaseField, symbols: Vec<String>) -> Self {
        FieldSpec::Functions(Arc::new(FunctionField::new(base, symbols)))
    }

    pub fn base(&self) -> &BaseField {
        match self {
            FieldSpec::Base(b) => b,
            FieldSpec::Functions(f) => &f.base,
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.base().characteristic()
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, FieldSpec::Functions(_))
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        self.lift(self.base().from_i64(v))
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    /// Embeds a constant into this field.
    pub fn lift(&self, n: Number) -> Scalar {
        match self {
            FieldSpec::Base(_) => Scalar::Num(n),
            FieldSpec::Functions(f) => Scalar::Func(RatFunc::constant(f, n)),
        }
    }

    pub fn symbol(&self, name: &str) -> Option<Scalar> {
        match self {
            FieldSpec::Base(_) => None,
            FieldSpec::Functions(f) => f.index_of(name).map(|i| Scalar::Func(RatFunc::var(f, i))),
        }
    }

    pub fn generator(&self) -> Option<Scalar> {
        self.base().generator().map(|g| self.lift(g))
    }

    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (_, Scalar::Num(n)) => self.base().contains(n),
            (FieldSpec::Functions(f), Scalar::Func(r)) => **f == **r.ring(),
            _ => false,
        }
    }

    /// Converts `s` into this field's representation.
    pub fn coerce(&self, s: &Scalar) -> Result<Scalar> {
        if !self.contains(s) {
            return Err(Error::MixedFields(format!("{s} is not in {self}")));
        }
        Ok(match (self, s) {
            (FieldSpec::Functions(_), Scalar::Num(n)) => self.lift(n.clone()),
            _ => s.clone(),
        })
    }

    /// Random nonzero constant of small height, for numeric spot checks.
    pub fn random_nonzero<R: rand::Rng>(&self, rng: &mut R) -> Scalar {
        loop {
            let n = match self.base() {
                BaseField::Rationals => {
                    let a = rng.gen_range(-9i64..=9);
                    let b = rng.gen_range(1i64..=5);
                    self.base().from_i64(a).try_div(&self.base().from_i64(b)).unwrap()
                }
                BaseField::Cyclotomic(f) => {
                    let k = rng.gen_range(0..f.order() as i64);
                    let z = Number::Cyclotomic(Cyclotomic::root_power(f.clone(), k));
                    let a = self.base().from_i64(rng.gen_range(1i64..=3));
                    z.try_mul(&a).unwrap()
                }
                BaseField::Prime(l) => self.base().from_i64(rng.gen_range(0..*l as i64)),
            };
            if !n.is_zero() {
                return self.lift(n);
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Base(b) => write!(f, "{}", b.name()),
            FieldSpec::Functions(ff) => write!(f, "ratfunc({}:{})", ff.base.name(), ff.symbols.join(",")),
        }
    }
}

/// An element of a [`FieldSpec`].
#[derive(Clone, Debug)]
pub enum Scalar {
    Num(Number),
    Func(RatFunc),
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Num(a), Scalar::Num(b)) => a == b,
            (Scalar::Func(a), Scalar::Func(b)) => a == b,
            (Scalar::Num(a), Scalar::Func(b)) | (Scalar::Func(b), Scalar::Num(a)) => {
                b.constant_value().is_some_and(|c| &c == a)
            }
        }
    }
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Num(n) => n.is_zero(),
            Scalar::Func(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Num(n) => n.is_one(),
            Scalar::Func(r) => r.is_one(),
        }
    }

    /// The constant value, if this scalar does not depend on any symbol.
    pub fn as_number(&self) -> Option<Number> {
        match self {
            Scalar::Num(n) => Some(n.clone()),
            Scalar::Func(r) => r.constant_value(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Num(n) => FieldSpec::Base(n.base_field()),
            Scalar::Func(r) => FieldSpec::Functions(r.ring().clone()),
        }
    }

    fn promote(a: &Scalar, b: &Scalar) -> Result<(RatFunc, RatFunc)> {
        let lift = |n: &Number, ring: &Arc<FunctionField>| -> Result<RatFunc> {
            if !ring.base.contains(n) {
                return Err(Error::MixedFields(format!("{n} is not in {}", ring.base.name())));
            }
            let n = ring.base.one().try_mul(n)?;
            Ok(RatFunc::constant(ring, n))
        };
        match (a, b) {
            (Scalar::Func(x), Scalar::Func(y)) => {
                if x.ring() != y.ring() && **x.ring() != **y.ring() {
                    return Err(Error::MixedFields("different symbol sets".into()));
                }
                Ok((x.clone(), y.clone()))
            }
            (Scalar::Num(n), Scalar::Func(y)) => Ok((lift(n, y.ring())?, y.clone())),
            (Scalar::Func(x), Scalar::Num(n)) => Ok((x.clone(), lift(n, x.ring())?)),
            _ => unreachable!(),
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Num(a), Scalar::Num(b)) => Ok(Scalar::Num(a.try_add(b)?)),
            _ => {
                let (x, y) = Self::promote(self, other)?;
                Ok(Scalar::Func(x.add(&y)))
            }
        }
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        match (self, other) {
            (Scalar::Num(a), Scalar::Num(b)) => Ok(Scalar::Num(a.try_mul(b)?)),
            (Scalar::Num(a), Scalar::Func(y)) | (Scalar::Func(y), Scalar::Num(a)) => {
                if !y.ring().base.contains(a) {
                    return Err(Error::MixedFields(format!("{a} is not in {}", y.ring().base.name())));
                }
                Ok(Scalar::Func(y.scale(a)))
            }
            _ => {
                let (x, y) = Self::promote(self, other)?;
                Ok(Scalar::Func(x.mul(&y)))
            }
        }
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.try_mul(&other.inv()?)
    }

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Num(n) => Ok(Scalar::Num(n.inv()?)),
            Scalar::Func(r) => Ok(Scalar::Func(r.inv()?)),
        }
    }

    fn neg_ref(&self) -> Scalar {
        match self {
            Scalar::Num(n) => Scalar::Num(n.neg()),
            Scalar::Func(r) => Scalar::Func(r.neg()),
        }
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut k = e.unsigned_abs();
        let mut acc = self.one_like();
        let mut sq = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &sq;
            }
            k >>= 1;
            if k > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    pub fn one_like(&self) -> Scalar {
        self.field().one()
    }

    pub fn zero_like(&self) -> Scalar {
        self.field().zero()
    }

    /// Whether the text form needs parentheses when used as a factor.
    pub fn is_atomic(&self) -> bool {
        match self {
            Scalar::Num(n) => n.is_atomic(),
            Scalar::Func(r) => match r.constant_value() {
                Some(n) => n.is_atomic(),
                None => r.den().is_one() && r.num().nterms() == 1,
            },
        }
    }

    /// Rough size of the representation, used to pick cheap pivots.
    pub fn weight(&self) -> usize {
        match self {
            Scalar::Num(_) => 1,
            Scalar::Func(r) => match r.constant_value() {
                Some(_) => 1,
                None => r.num().nterms() + r.den().nterms(),
            },
        }
    }

    /// Whether the text form would start with a minus sign.
    pub fn has_negative_sign(&self) -> bool {
        match self {
            Scalar::Num(n) => n.is_negative_rational(),
            Scalar::Func(r) => r.num().lc().is_some_and(|c| c.is_negative_rational()),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Num(n) => write!(f, "{n}"),
            Scalar::Func(r) => match r.constant_value() {
                Some(n) => write!(f, "{n}"),
                None => write!(f, "{r}"),
            },
        }
    }
}

macro_rules! binop {
    ($tr:ident, $m:ident, $imp:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                self.$imp(rhs).unwrap_or_else(|e| panic!("scalar {}: {e}", stringify!($m)))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                self.$m(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);
binop!(Div, div, try_div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_ref()
    }
}
