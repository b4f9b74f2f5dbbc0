//! Constant fields: the rationals, cyclotomic extensions of the rationals,
//! and prime fields.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// The field `Q(ζ_m)`, stored as `Q[z] / Φ_m(z)`.
#[derive(Debug, PartialEq, Eq)]
pub struct CycloField {
    order: u32,
    /// Coefficients of the monic cyclotomic polynomial, lowest degree first.
    phi: Vec<BigRational>,
}

impl CycloField {
    pub fn new(order: u32) -> Result<Arc<Self>> {
        if order == 0 {
            return Err(Error::Parse("cyclotomic order must be at least 1".into()));
        }
        let phi = cyclotomic_polynomial(order)
            .into_iter()
            .map(BigRational::from_integer)
            .collect();
        Ok(Arc::new(CycloField { order, phi }))
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// `φ(m)`, the dimension over the rationals.
    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    fn reduce(&self, mut v: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.degree();
        if v.len() > d {
            for i in (d..v.len()).rev() {
                if v[i].is_zero() {
                    continue;
                }
                let c = std::mem::take(&mut v[i]);
                for k in 0..d {
                    if !self.phi[k].is_zero() {
                        let t = &c * &self.phi[k];
                        v[i - d + k] -= t;
                    }
                }
            }
            v.truncate(d);
        }
        trim(&mut v);
        v
    }
}

/// Integer coefficients of `Φ_m`, lowest degree first.
pub fn cyclotomic_polynomial(m: u32) -> Vec<BigInt> {
    // x^m - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = -BigInt::one();
    num[m as usize] = BigInt::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            let div = cyclotomic_polynomial(d);
            num = exact_div_int(&num, &div);
        }
    }
    num
}

fn exact_div_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    // b is monic.
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let dq = r.len() - 1 - db;
    let mut q = vec![BigInt::zero(); dq + 1];
    for i in (0..=dq).rev() {
        let c = r[i + db].clone();
        if c.is_zero() {
            continue;
        }
        for (k, bk) in b.iter().enumerate() {
            r[i + k] -= &c * bk;
        }
        q[i] = c;
    }
    q
}

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Element of a cyclotomic field.
#[derive(Debug, Clone)]
pub struct Cyclotomic {
    field: Arc<CycloField>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Cyclotomic {
    pub fn new(field: Arc<CycloField>, coeffs: Vec<BigRational>) -> Self {
        let coeffs = field.reduce(coeffs);
        Cyclotomic { field, coeffs }
    }

    pub fn from_rational(field: Arc<CycloField>, c: BigRational) -> Self {
        Self::new(field, vec![c])
    }

    /// `ζ^k` for the distinguished primitive root `ζ = z`.
    pub fn root_power(field: Arc<CycloField>, k: i64) -> Self {
        let m = field.order as i64;
        let k = k.rem_euclid(m) as usize;
        let mut v = vec![BigRational::zero(); k + 1];
        v[k] = BigRational::one();
        Self::new(field, v)
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    /// Coefficients on `1, z, z^2, ...`, trailing zeros removed.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self.coeffs.len() {
            0 => None,
            1 => Some(&self.coeffs[0]),
            _ => None,
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field.order != other.field.order {
            return Err(Error::MixedFields(format!(
                "cyclotomic({}) vs cyclotomic({})",
                self.field.order, other.field.order
            )));
        }
        Ok(())
    }

    fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            v[i] += c;
        }
        trim(&mut v);
        Ok(Cyclotomic { field: self.field.clone(), coeffs: v })
    }

    fn neg(&self) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Cyclotomic { field: self.field.clone(), coeffs: vec![] });
        }
        let mut v = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Ok(Self::new(self.field.clone(), v))
    }

    fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(c) = self.as_rational() {
            return Ok(Self::from_rational(self.field.clone(), c.recip()));
        }
        // Extended Euclid: find s with s*a = 1 mod phi.
        let mut r0 = self.field.phi.clone();
        let mut r1 = self.coeffs.clone();
        let mut s0: Vec<BigRational> = vec![];
        let mut s1: Vec<BigRational> = vec![BigRational::one()];
        while r1.len() > 1 {
            let (q, r) = poly_divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // r1 is a nonzero constant since phi is irreducible.
        let c = r1[0].recip();
        let s: Vec<BigRational> = s1.into_iter().map(|x| x * &c).collect();
        Ok(Self::new(self.field.clone(), s))
    }
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut v = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    trim(&mut v);
    v
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut v = vec![BigRational::zero(); n];
    for (i, c) in a.iter().enumerate() {
        v[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        v[i] -= c;
    }
    trim(&mut v);
    v
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    if r.len() < b.len() {
        return (vec![], r);
    }
    let lead = b[db].recip();
    let mut q = vec![BigRational::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] * &lead;
        if c.is_zero() {
            continue;
        }
        for (k, bk) in b.iter().enumerate() {
            r[i + k] -= &c * bk;
        }
        q[i] = c;
    }
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

/// Element of the prime field `F_l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Modular {
    value: u64,
    modulus: u64,
}

impl Modular {
    pub fn new(value: i64, modulus: u64) -> Self {
        let v = value.rem_euclid(modulus as i64) as u64;
        Modular { value: v, modulus }
    }

    pub fn from_bigint(value: &BigInt, modulus: u64) -> Self {
        let m = BigInt::from(modulus);
        let v = value.mod_floor(&m).to_u64().unwrap_or(0);
        Modular { value: v, modulus }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::MixedFields(format!(
                "F_{} vs F_{}",
                self.modulus, other.modulus
            )));
        }
        Ok(())
    }

    fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(Modular { value: (self.value + o.value) % self.modulus, modulus: self.modulus })
    }

    fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let v = (self.value as u128 * o.value as u128) % self.modulus as u128;
        Ok(Modular { value: v as u64, modulus: self.modulus })
    }

    fn neg(&self) -> Self {
        Modular { value: (self.modulus - self.value) % self.modulus, modulus: self.modulus }
    }

    fn inv(&self) -> Result<Self> {
        if self.value == 0 {
            return Err(Error::DivisionByZero);
        }
        // Fermat: a^(l-2).
        let mut base = *self;
        let mut e = self.modulus - 2;
        let mut acc = Modular { value: 1 % self.modulus, modulus: self.modulus };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            base = base.mul(&base)?;
            e >>= 1;
        }
        Ok(acc)
    }
}

/// Kind of constant field, without the element data.
#[derive(Debug, Clone)]
pub enum BaseField {
    Rationals,
    Cyclotomic(Arc<CycloField>),
    Prime(u64),
}

impl PartialEq for BaseField {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (BaseField::Rationals, BaseField::Rationals) => true,
            (BaseField::Cyclotomic(a), BaseField::Cyclotomic(b)) => a.order == b.order,
            (BaseField::Prime(a), BaseField::Prime(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for BaseField {}

impl BaseField {
    pub fn cyclotomic(order: u32) -> Result<Self> {
        Ok(BaseField::Cyclotomic(CycloField::new(order)?))
    }

    pub fn prime(l: u64) -> Result<Self> {
        if l < 2 || !is_prime(l) {
            return Err(Error::Parse(format!("{l} is not prime")));
        }
        Ok(BaseField::Prime(l))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            BaseField::Prime(l) => *l,
            _ => 0,
        }
    }

    pub fn from_i64(&self, v: i64) -> Number {
        self.from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn zero(&self) -> Number {
        self.from_i64(0)
    }

    pub fn one(&self) -> Number {
        self.from_i64(1)
    }

    pub fn from_rational(&self, c: BigRational) -> Number {
        match self {
            BaseField::Rationals => Number::Rational(c),
            BaseField::Cyclotomic(f) => Number::Cyclotomic(Cyclotomic::from_rational(f.clone(), c)),
            BaseField::Prime(l) => {
                // Denominators are invertible unless divisible by l; callers pass integers.
                let num = Modular::from_bigint(c.numer(), *l);
                let den = Modular::from_bigint(c.denom(), *l);
                match den.inv() {
                    Ok(d) => Number::Modular(num.mul(&d).expect("same modulus")),
                    Err(_) => Number::Modular(Modular::new(0, *l)),
                }
            }
        }
    }

    /// The cyclotomic generator `z`, if this field has one.
    pub fn generator(&self) -> Option<Number> {
        match self {
            BaseField::Cyclotomic(f) => Some(Number::Cyclotomic(Cyclotomic::root_power(f.clone(), 1))),
            _ => None,
        }
    }

    pub fn name(&self) -> String {
        match self {
            BaseField::Rationals => "rationals".into(),
            BaseField::Cyclotomic(f) => format!("cyclotomic({})", f.order),
            BaseField::Prime(l) => format!("prime({l})"),
        }
    }

    /// Whether `n` lives in this field (rationals embed into cyclotomic fields).
    pub fn contains(&self, n: &Number) -> bool {
        match (self, n) {
            (BaseField::Rationals, Number::Rational(_)) => true,
            (BaseField::Cyclotomic(_), Number::Rational(_)) => true,
            (BaseField::Cyclotomic(f), Number::Cyclotomic(c)) => f.order == c.field.order,
            (BaseField::Prime(l), Number::Modular(m)) => *l == m.modulus,
            _ => false,
        }
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of a constant field.
#[derive(Debug, Clone)]
pub enum Number {
    Rational(BigRational),
    Cyclotomic(Cyclotomic),
    Modular(Modular),
}

impl PartialEq for Number {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Number::Rational(a), Number::Rational(b)) => a == b,
            (Number::Cyclotomic(a), Number::Cyclotomic(b)) => a == b,
            (Number::Modular(a), Number::Modular(b)) => a == b,
            (Number::Rational(a), Number::Cyclotomic(c)) | (Number::Cyclotomic(c), Number::Rational(a)) => {
                if a.is_zero() {
                    c.is_zero()
                } else {
                    c.as_rational() == Some(a)
                }
            }
            _ => false,
        }
    }
}

impl Number {
    pub fn is_zero(&self) -> bool {
        match self {
            Number::Rational(r) => r.is_zero(),
            Number::Cyclotomic(c) => c.is_zero(),
            Number::Modular(m) => m.value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Number::Rational(r) => r.is_one(),
            Number::Cyclotomic(c) => c.as_rational().is_some_and(|r| r.is_one()),
            Number::Modular(m) => m.value == 1,
        }
    }

    pub fn base_field(&self) -> BaseField {
        match self {
            Number::Rational(_) => BaseField::Rationals,
            Number::Cyclotomic(c) => BaseField::Cyclotomic(c.field.clone()),
            Number::Modular(m) => BaseField::Prime(m.modulus),
        }
    }

    /// Rational value, when the element is one.
    pub fn to_rational(&self) -> Option<BigRational> {
        match self {
            Number::Rational(r) => Some(r.clone()),
            Number::Cyclotomic(c) => {
                if c.is_zero() {
                    Some(BigRational::zero())
                } else {
                    c.as_rational().cloned()
                }
            }
            Number::Modular(_) => None,
        }
    }

    fn lift(a: &Number, b: &Number) -> Result<(Number, Number)> {
        match (a, b) {
            (Number::Rational(r), Number::Cyclotomic(c)) => Ok((
                Number::Cyclotomic(Cyclotomic::from_rational(c.field.clone(), r.clone())),
                b.clone(),
            )),
            (Number::Cyclotomic(c), Number::Rational(r)) => Ok((
                a.clone(),
                Number::Cyclotomic(Cyclotomic::from_rational(c.field.clone(), r.clone())),
            )),
            _ => Err(Error::MixedFields(format!(
                "{} vs {}",
                a.base_field().name(),
                b.base_field().name()
            ))),
        }
    }

    pub fn try_add(&self, other: &Number) -> Result<Number> {
        match (self, other) {
            (Number::Rational(a), Number::Rational(b)) => Ok(Number::Rational(a + b)),
            (Number::Cyclotomic(a), Number::Cyclotomic(b)) => Ok(Number::Cyclotomic(a.add(b)?)),
            (Number::Modular(a), Number::Modular(b)) => Ok(Number::Modular(a.add(b)?)),
            _ => {
                let (a, b) = Number::lift(self, other)?;
                a.try_add(&b)
            }
        }
    }

    pub fn try_sub(&self, other: &Number) -> Result<Number> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Number) -> Result<Number> {
        match (self, other) {
            (Number::Rational(a), Number::Rational(b)) => Ok(Number::Rational(a * b)),
            (Number::Cyclotomic(a), Number::Cyclotomic(b)) => Ok(Number::Cyclotomic(a.mul(b)?)),
            (Number::Modular(a), Number::Modular(b)) => Ok(Number::Modular(a.mul(b)?)),
            (Number::Rational(r), Number::Cyclotomic(c)) | (Number::Cyclotomic(c), Number::Rational(r)) => {
                Ok(Number::Cyclotomic(Cyclotomic {
                    field: c.field.clone(),
                    coeffs: if r.is_zero() { vec![] } else { c.coeffs.iter().map(|x| x * r).collect() },
                }))
            }
            _ => {
                let (a, b) = Number::lift(self, other)?;
                a.try_mul(&b)
            }
        }
    }

    pub fn try_div(&self, other: &Number) -> Result<Number> {
        self.try_mul(&other.inv()?)
    }

    pub fn neg(&self) -> Number {
        match self {
            Number::Rational(a) => Number::Rational(-a),
            Number::Cyclotomic(c) => Number::Cyclotomic(c.neg()),
            Number::Modular(m) => Number::Modular(m.neg()),
        }
    }

    pub fn inv(&self) -> Result<Number> {
        match self {
            Number::Rational(a) => {
                if a.is_zero() {
                    Err(Error::DivisionByZero)
                } else {
                    Ok(Number::Rational(a.recip()))
                }
            }
            Number::Cyclotomic(c) => Ok(Number::Cyclotomic(c.inv()?)),
            Number::Modular(m) => Ok(Number::Modular(m.inv()?)),
        }
    }

    /// Whether the element is `±(simple rational)`, so it renders without parentheses.
    pub fn is_atomic(&self) -> bool {
        match self {
            Number::Rational(_) | Number::Modular(_) => true,
            Number::Cyclotomic(c) => {
                c.coeffs.len() <= 1
                    || (c.coeffs.iter().filter(|x| !x.is_zero()).count() == 1
                        && c.coeffs.last().is_some_and(|x| x.is_one()))
            }
        }
    }

    pub fn is_negative_rational(&self) -> bool {
        match self {
            Number::Rational(r) => r.is_negative(),
            Number::Cyclotomic(c) => c.coeffs.len() == 1 && c.coeffs[0].is_negative(),
            Number::Modular(_) => false,
        }
    }
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Number {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Number::Rational(r) => fmt_rational(r, f),
            Number::Modular(m) => write!(f, "{}", m.value),
            Number::Cyclotomic(c) => {
                if c.coeffs.is_empty() {
                    return write!(f, "0");
                }
                let mut first = true;
                for (k, a) in c.coeffs.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    let neg = a.is_negative();
                    let abs = a.abs();
                    if first {
                        if neg {
                            write!(f, "-")?;
                        }
                    } else {
                        write!(f, "{}", if neg { "-" } else { "+" })?;
                    }
                    first = false;
                    match k {
                        0 => fmt_rational(&abs, f)?,
                        _ => {
                            if !abs.is_one() {
                                fmt_rational(&abs, f)?;
                                write!(f, "*")?;
                            }
                            if k == 1 {
                                write!(f, "z")?;
                            } else {
                                write!(f, "z^{k}")?;
                            }
                        }
                    }
                }
                Ok(())
            }
        }
    }
}
