//! Sparse multivariate polynomials over a constant field.
//!
//! Terms are kept sorted in descending graded-lexicographic order with no
//! zero coefficients, so structural equality is polynomial equality.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::number::Number;
use super::FunctionField;

pub type Exponents = Vec<u32>;

fn grlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn add_n(a: &Number, b: &Number) -> Number {
    a.try_add(b).expect("coefficients share a field")
}

fn mul_n(a: &Number, b: &Number) -> Number {
    a.try_mul(b).expect("coefficients share a field")
}

#[derive(Clone)]
pub struct MPoly {
    ring: Arc<FunctionField>,
    terms: Vec<(Exponents, Number)>,
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

impl MPoly {
    pub fn zero(ring: &Arc<FunctionField>) -> Self {
        MPoly { ring: ring.clone(), terms: vec![] }
    }

    pub fn constant(ring: &Arc<FunctionField>, c: Number) -> Self {
        if c.is_zero() {
            return Self::zero(ring);
        }
        MPoly { ring: ring.clone(), terms: vec![(vec![0; ring.nvars()], c)] }
    }

    pub fn one(ring: &Arc<FunctionField>) -> Self {
        Self::constant(ring, ring.base.one())
    }

    pub fn var(ring: &Arc<FunctionField>, i: usize) -> Self {
        let mut e = vec![0; ring.nvars()];
        e[i] = 1;
        MPoly { ring: ring.clone(), terms: vec![(e, ring.base.one())] }
    }

    pub fn monomial(ring: &Arc<FunctionField>, exps: Exponents, c: Number) -> Self {
        if c.is_zero() {
            return Self::zero(ring);
        }
        MPoly { ring: ring.clone(), terms: vec![(exps, c)] }
    }

    fn from_unsorted(ring: &Arc<FunctionField>, map: HashMap<Exponents, Number>) -> Self {
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| grlex(&b.0, &a.0));
        MPoly { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<FunctionField> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Exponents, Number)] {
        &self.terms
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.iter().all(|&e| e == 0))
    }

    pub fn constant_value(&self) -> Option<Number> {
        if self.terms.is_empty() {
            Some(self.ring.base.zero())
        } else if self.is_constant() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && !self.is_zero() && self.terms[0].1.is_one()
    }

    /// Leading coefficient in graded-lex order.
    pub fn lc(&self) -> Option<&Number> {
        self.terms.first().map(|t| &t.1)
    }

    pub fn neg(&self) -> Self {
        MPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Less
            } else if j == b.len() {
                Ordering::Greater
            } else {
                grlex(&a[i].0, &b[j].0)
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { b[j].1.neg() } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        a[i].1.try_sub(&b[j].1).expect("coefficients share a field")
                    } else {
                        add_n(&a[i].1, &b[j].1)
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        MPoly { ring: self.ring.clone(), terms: out }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    pub fn scale(&self, c: &Number) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        MPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), mul_n(x, c))).collect(),
        }
    }

    pub fn mul_monomial(&self, exps: &[u32], c: &Number) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        MPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, x)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), mul_n(x, c)))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        if other.terms.len() == 1 {
            return self.mul_monomial(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_monomial(&self.terms[0].0, &self.terms[0].1);
        }
        let mut acc: HashMap<Exponents, Number> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let c = mul_n(ca, cb);
                match acc.get_mut(&e) {
                    Some(v) => *v = add_n(v, &c),
                    None => {
                        acc.insert(e, c);
                    }
                }
            }
        }
        Self::from_unsorted(&self.ring, acc)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.iter().map(|(e, _)| e[v]).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(e, _)| e.iter().sum::<u32>()).max().unwrap_or(0)
    }

    pub fn vars_used(&self) -> Vec<bool> {
        let mut used = vec![false; self.nvars()];
        for (e, _) in &self.terms {
            for (u, &x) in used.iter_mut().zip(e) {
                *u |= x > 0;
            }
        }
        used
    }

    /// Exact quotient, or `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero(&self.ring));
        }
        for v in 0..self.nvars() {
            if divisor.degree_in(v) > self.degree_in(v) {
                return None;
            }
        }
        if divisor.terms.len() == 1 {
            let (de, dc) = &divisor.terms[0];
            let inv = dc.inv().ok()?;
            let mut terms = Vec::with_capacity(self.terms.len());
            for (e, c) in &self.terms {
                if !divides(de, e) {
                    return None;
                }
                terms.push((e.iter().zip(de).map(|(a, b)| a - b).collect(), mul_n(c, &inv)));
            }
            return Some(MPoly { ring: self.ring.clone(), terms });
        }
        let (le, lc) = &divisor.terms[0];
        let inv = lc.inv().ok()?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((re, rc)) = rem.terms.first() {
            if !divides(le, re) {
                return None;
            }
            let te: Exponents = re.iter().zip(le).map(|(a, b)| a - b).collect();
            let tc = mul_n(rc, &inv);
            rem = rem.sub(&divisor.mul_monomial(&te, &tc));
            quot.push((te, tc));
        }
        Some(MPoly { ring: self.ring.clone(), terms: quot })
    }

    /// Scale so that the leading coefficient is one.
    pub fn monic(&self) -> Self {
        match self.lc() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Componentwise minimum of the exponent vectors.
    pub fn monomial_content(&self) -> Exponents {
        let mut m = match self.terms.first() {
            Some((e, _)) => e.clone(),
            None => return vec![0; self.nvars()],
        };
        for (e, _) in &self.terms[1..] {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).min(*b);
            }
        }
        m
    }

    fn div_by_monomial(&self, m: &[u32]) -> Self {
        MPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(m).map(|(a, b)| a - b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Coefficients of `self` viewed as a univariate polynomial in `v`.
    pub fn coeffs_in(&self, v: usize) -> Vec<MPoly> {
        let d = self.degree_in(v) as usize;
        let mut parts: Vec<Vec<(Exponents, Number)>> = vec![Vec::new(); d + 1];
        for (e, c) in &self.terms {
            let k = e[v] as usize;
            let mut e2 = e.clone();
            e2[v] = 0;
            parts[k].push((e2, c.clone()));
        }
        // Zeroing one coordinate keeps grlex order within a fixed degree in v
        // only up to total degree shifts; re-sort each part.
        parts
            .into_iter()
            .map(|mut t| {
                t.sort_by(|a, b| grlex(&b.0, &a.0));
                MPoly { ring: self.ring.clone(), terms: t }
            })
            .collect()
    }


    fn content_in(&self, v: usize) -> MPoly {
        let mut coeffs: Vec<MPoly> = self.coeffs_in(v).into_iter().filter(|c| !c.is_zero()).collect();
        coeffs.sort_by_key(|c| c.nterms());
        let mut g = coeffs[0].monic();
        for c in &coeffs[1..] {
            if g.is_constant() {
                break;
            }
            g = gcd(&g, c);
        }
        g
    }

    /// Pseudo-remainder with respect to `v`.
    fn prem(&self, b: &Self, v: usize) -> Self {
        let db = b.degree_in(v);
        let bc = b.coeffs_in(v);
        let lcb = &bc[db as usize];
        let mut r = self.clone();
        while !r.is_zero() {
            let dr = r.degree_in(v);
            if dr < db {
                break;
            }
            let lcr = r.coeffs_in(v).swap_remove(dr as usize);
            let mut shift = vec![0; self.nvars()];
            shift[v] = dr - db;
            let lcr_shift = lcr.mul_monomial(&shift, &self.ring.base.one());
            r = lcb.mul(&r).sub(&lcr_shift.mul(b));
        }
        r
    }

    pub fn eval(&self, point: &[Number]) -> Number {
        let mut acc = self.ring.base.zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t = mul_n(&t, x);
                }
            }
            acc = add_n(&acc, &t);
        }
        acc
    }
}

/// Monic greatest common divisor (zero only when both inputs are zero).
pub fn gcd(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() {
        return MPoly::one(&a.ring);
    }
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let m: Exponents = ma.iter().zip(&mb).map(|(x, y)| *x.min(y)).collect();
    let a1 = a.div_by_monomial(&ma);
    let b1 = b.div_by_monomial(&mb);
    let g = gcd_no_monomial(&a1, &b1);
    let one = a.ring.base.one();
    g.mul_monomial(&m, &one).monic()
}

fn gcd_no_monomial(a: &MPoly, b: &MPoly) -> MPoly {
    if a.is_constant() || b.is_constant() {
        return MPoly::one(&a.ring);
    }
    let ua = a.vars_used();
    let ub = b.vars_used();
    if !ua.iter().zip(&ub).any(|(x, y)| *x && *y) {
        return MPoly::one(&a.ring);
    }
    if a == b {
        return a.monic();
    }
    // Cheap exact-division probes.
    if b.nterms() <= a.nterms() && a.div_exact(b).is_some() {
        return b.monic();
    }
    if a.nterms() <= b.nterms() && b.div_exact(a).is_some() {
        return a.monic();
    }
    // A variable present in only one argument cannot occur in the gcd.
    if let Some(v) = (0..ua.len()).find(|&v| ua[v] && !ub[v]) {
        return gcd(&a.content_in(v), b);
    }
    if let Some(v) = (0..ub.len()).find(|&v| ub[v] && !ua[v]) {
        return gcd(a, &b.content_in(v));
    }
    // Main variable: the shared one of least combined degree.
    let v = (0..ua.len())
        .filter(|&v| ua[v])
        .min_by_key(|&v| (a.degree_in(v) + b.degree_in(v), v))
        .expect("shared variable exists");
    let ca = a.content_in(v);
    let cb = b.content_in(v);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let c = gcd(&ca, &cb);
    let g = primitive_prs(pa, pb, v);
    c.mul(&g).monic()
}

fn primitive_part(p: &MPoly, v: usize) -> MPoly {
    let c = p.content_in(v);
    p.div_exact(&c).expect("content divides")
}

fn primitive_prs(a: MPoly, b: MPoly, v: usize) -> MPoly {
    let (mut a, mut b) = if a.degree_in(v) >= b.degree_in(v) { (a, b) } else { (b, a) };
    loop {
        if b.degree_in(v) == 0 {
            return MPoly::one(&a.ring);
        }
        let r = a.prem(&b, v);
        if r.is_zero() {
            return primitive_part(&b, v);
        }
        if r.degree_in(v) == 0 {
            return MPoly::one(&a.ring);
        }
        a = b;
        b = primitive_part(&r, v);
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let is_const = e.iter().all(|&x| x == 0);
            let neg = c.is_negative_rational();
            let abs = if neg { c.neg() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            let mut wrote = false;
            if is_const || !abs.is_one() {
                if abs.is_atomic() {
                    write!(f, "{abs}")?;
                } else {
                    write!(f, "({abs})")?;
                }
                wrote = true;
            }
            for (k, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if wrote {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.ring.symbols[k])?;
                if x > 1 {
                    write!(f, "^{x}")?;
                }
                wrote = true;
            }
        }
        Ok(())
    }
}
