//! Pairing contexts: the matrix `p_ij = χ^i(g_j)` of a set of quantum variables.
//!
//! Variables and group generators are indexed from zero in the API. The
//! group is free abelian on `g_1..g_n`, so a group element is an exponent
//! vector.

use std::fmt::Write as _;

use crate::coeff::{parse_scalar, BaseField, FieldSpec, Scalar};
use crate::error::{Error, Result};
use crate::perm::Perm;

pub type GroupElement = Vec<i32>;

/// A list of index pairs `(i, j)` standing for the product of the `p_ij`.
pub type BraceWord = Vec<(usize, usize)>;

#[derive(Clone, Debug)]
pub struct PairingContext {
    n: usize,
    field: FieldSpec,
    p: Vec<Vec<Scalar>>,
    p_inv: Vec<Vec<Scalar>>,
    names: Vec<String>,
    constraint: Option<(usize, usize)>,
}

impl PartialEq for PairingContext {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.field == other.field && self.p == other.p
    }
}

pub fn symbol_name(i: usize, j: usize) -> String {
    format!("p[{}][{}]", i + 1, j + 1)
}

impl PairingContext {
    pub fn new(field: FieldSpec, p: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = p.len();
        let mut coerced = Vec::with_capacity(n);
        let mut p_inv = Vec::with_capacity(n);
        for (i, row) in p.iter().enumerate() {
            if row.len() != n {
                return Err(Error::ContextInconsistent(format!("row {} has {} entries, expected {n}", i + 1, row.len())));
            }
            let mut r = Vec::with_capacity(n);
            let mut ri = Vec::with_capacity(n);
            for (j, v) in row.iter().enumerate() {
                let v = field.coerce(v)?;
                if v.is_zero() {
                    return Err(Error::ContextInconsistent(format!("{} is zero", symbol_name(i, j))));
                }
                ri.push(v.inv()?);
                r.push(v);
            }
            coerced.push(r);
            p_inv.push(ri);
        }
        Ok(PairingContext {
            n,
            field,
            p: coerced,
            p_inv,
            names: (1..=n).map(|i| format!("x{i}")).collect(),
            constraint: None,
        })
    }

    /// Independent symbols `p[i][j]` over `base`. With `constrain = Some((i, j))`
    /// that entry is eliminated so that the product of all off-diagonal entries is 1.
    pub fn symbolic(n: usize, base: BaseField, constrain: Option<(usize, usize)>) -> Result<Self> {
        if let Some((i, j)) = constrain {
            if i == j || i >= n || j >= n {
                return Err(Error::ContextInconsistent("constrained entry must be off-diagonal and in range".into()));
            }
        }
        let mut symbols = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if Some((i, j)) != constrain {
                    symbols.push(symbol_name(i, j));
                }
            }
        }
        let field = FieldSpec::functions(base, symbols);
        let mut p = vec![vec![field.one(); n]; n];
        for (i, row) in p.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                if Some((i, j)) != constrain {
                    *v = field.symbol(&symbol_name(i, j)).expect("symbol exists");
                }
            }
        }
        if let Some((ci, cj)) = constrain {
            p[ci][cj] = eliminated_entry(&field, &p, (ci, cj))?;
        }
        let mut ctx = Self::new(field, p)?;
        ctx.constraint = constrain;
        Ok(ctx)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.n);
        self.names = names;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn constraint(&self) -> Option<(usize, usize)> {
        self.constraint
    }

    pub fn p(&self, i: usize, j: usize) -> &Scalar {
        &self.p[i][j]
    }

    pub fn p_inv(&self, i: usize, j: usize) -> &Scalar {
        &self.p_inv[i][j]
    }

    pub fn matrix(&self) -> &[Vec<Scalar>] {
        &self.p
    }

    pub fn one(&self) -> Scalar {
        self.field.one()
    }

    pub fn zero(&self) -> Scalar {
        self.field.zero()
    }

    /// `p_ij · p_ji`.
    pub fn pair_product(&self, i: usize, j: usize) -> Scalar {
        &self.p[i][j] * &self.p[j][i]
    }

    /// Parses a scalar in this context; `p[i][j]` resolves to the matrix entry.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let resolve = |name: &str| -> Option<Scalar> {
            let (i, j) = parse_symbol_indices(name)?;
            if i < self.n && j < self.n {
                Some(self.p[i][j].clone())
            } else {
                None
            }
        };
        parse_scalar(text, &self.field, &resolve)
    }

    /// `∏_{x in word} ∏_j p[x][j]^{g_j}`.
    pub fn chi_word_on_group(&self, word: &[usize], g: &[i32]) -> Scalar {
        let mut acc = self.one();
        for &x in word {
            for (j, &e) in g.iter().enumerate() {
                acc = &acc * &self.p_power(x, j, e);
            }
        }
        acc
    }

    /// `p_ij^e` using the cached inverse for negative exponents.
    pub fn p_power(&self, i: usize, j: usize, e: i32) -> Scalar {
        match e.cmp(&0) {
            std::cmp::Ordering::Equal => self.one(),
            std::cmp::Ordering::Greater => self.p[i][j].pow(e as i64).expect("nonzero"),
            std::cmp::Ordering::Less => self.p_inv[i][j].pow(-(e as i64)).expect("nonzero"),
        }
    }

    /// `ν(q_k) = ∏_{i<k} p[ν(i)][ν(k)]` (zero-based position `k`).
    pub fn q_k(&self, nu: &Perm, k: usize) -> Scalar {
        (0..k).fold(self.one(), |acc, i| &acc * &self.p[nu.apply(i)][nu.apply(k)])
    }

    /// `ν(q*_k) = ∏_{i<k} p[ν(k)][ν(i)]^{-1}`.
    pub fn q_k_star(&self, nu: &Perm, k: usize) -> Scalar {
        (0..k).fold(self.one(), |acc, i| &acc * &self.p_inv[nu.apply(k)][nu.apply(i)])
    }

    /// `{A} = A − Ā^{-1}`, with `Ā` the product of the transposed pairs.
    pub fn brace(&self, w: &[(usize, usize)]) -> Scalar {
        let a = w.iter().fold(self.one(), |acc, &(i, j)| &acc * &self.p[i][j]);
        let abar_inv = w.iter().fold(self.one(), |acc, &(i, j)| &acc * &self.p_inv[j][i]);
        &a - &abar_inv
    }

    /// Whether `∏_{i≠j in subset} p_ij = 1`.
    pub fn is_conforming(&self, subset: &[usize]) -> bool {
        self.conforming_product(subset).is_one()
    }

    pub fn conforming_product(&self, subset: &[usize]) -> Scalar {
        let mut acc = self.one();
        for &i in subset {
            for &j in subset {
                if i != j {
                    acc = &acc * &self.p[i][j];
                }
            }
        }
        acc
    }

    /// The condition Γ_4^{(ij)}: `{p_ij}`, `{p_ij p_ik p_kj}` and `{p_ij p_is p_sj}` are all nonzero.
    pub fn gamma4(&self, i: usize, j: usize) -> Result<bool> {
        if self.n != 4 {
            return Err(Error::ArityMismatch { expected: 4, found: self.n });
        }
        if i == j || i >= 4 || j >= 4 {
            return Err(Error::PreconditionFailed("gamma4 needs two distinct indices".into()));
        }
        let rest: Vec<usize> = (0..4).filter(|&t| t != i && t != j).collect();
        let (k, s) = (rest[0], rest[1]);
        Ok(!self.brace(&[(i, j)]).is_zero()
            && !self.brace(&[(i, j), (i, k), (k, j)]).is_zero()
            && !self.brace(&[(i, j), (i, s), (s, j)]).is_zero())
    }

    /// Restricts to the listed variables, in the given order.
    pub fn restrict(&self, vars: &[usize]) -> PairingContext {
        let p = vars.iter().map(|&i| vars.iter().map(|&j| self.p[i][j].clone()).collect()).collect();
        let mut ctx = Self::new(self.field.clone(), p).expect("entries already validated");
        ctx.names = vars.iter().map(|&i| self.names[i].clone()).collect();
        ctx
    }

    /// Context file text; parses back to an equal context.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n={} field={}", self.n, self.field_text());
        for i in 0..self.n {
            for j in 0..self.n {
                let _ = writeln!(out, "p {} {} {}", i + 1, j + 1, self.p[i][j]);
            }
        }
        if let Some((i, j)) = self.constraint {
            let _ = writeln!(out, "constrain ({},{})", i + 1, j + 1);
        }
        if self.names.iter().enumerate().any(|(i, name)| *name != format!("x{}", i + 1)) {
            let _ = writeln!(out, "names {}", self.names.join(" "));
        }
        out
    }

    fn field_text(&self) -> String {
        match &self.field {
            FieldSpec::Base(b) => b.name(),
            FieldSpec::Functions(f) => {
                let default: Vec<String> = (0..self.n)
                    .flat_map(|i| (0..self.n).map(move |j| (i, j)))
                    .filter(|&(i, j)| Some((i, j)) != self.constraint)
                    .map(|(i, j)| symbol_name(i, j))
                    .collect();
                if f.symbols == default {
                    format!("ratfunc({})", f.base.name())
                } else {
                    format!("ratfunc({}:{})", f.base.name(), f.symbols.join(","))
                }
            }
        }
    }

    /// Parses the context file format:
    ///
    /// ```text
    /// n=2 field=ratfunc(rationals)
    /// p 1 2 p[1][2]
    /// constrain (2,1)
    /// names a b
    /// ```
    ///
    /// In a function field, omitted entries default to their own symbol.
    pub fn parse(text: &str) -> Result<Self> {
        let lines: Vec<&str> = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty())
            .collect();
        let header = lines.first().ok_or_else(|| Error::Parse("empty context".into()))?;
        let mut n = None;
        let mut field_spec = None;
        for part in header.split_whitespace() {
            if let Some(v) = part.strip_prefix("n=") {
                n = Some(v.parse::<usize>().map_err(|_| Error::Parse(format!("bad arity {v}")))?);
            } else if let Some(v) = part.strip_prefix("field=") {
                field_spec = Some(v.to_string());
            } else {
                return Err(Error::Parse(format!("unexpected header item {part}")));
            }
        }
        let n = n.ok_or_else(|| Error::Parse("header lacks n=".into()))?;
        let field_spec = field_spec.unwrap_or_else(|| "rationals".into());
        if n == 0 {
            return Err(Error::Parse("arity must be positive".into()));
        }

        let mut constraint = None;
        let mut names: Option<Vec<String>> = None;
        let mut entries: Vec<(usize, usize, String)> = Vec::new();
        for line in &lines[1..] {
            if let Some(rest) = line.strip_prefix("constrain") {
                let body = rest.trim().trim_start_matches('(').trim_end_matches(')');
                let ij: Vec<usize> = body
                    .split([',', ' '])
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad constrain line {line}"))))
                    .collect::<Result<_>>()?;
                if ij.len() != 2 || ij[0] == 0 || ij[1] == 0 || ij[0] > n || ij[1] > n || ij[0] == ij[1] {
                    return Err(Error::Parse(format!("bad constrain line {line}")));
                }
                constraint = Some((ij[0] - 1, ij[1] - 1));
            } else if let Some(rest) = line.strip_prefix("names ") {
                let list: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                let valid = |t: &String| t.chars().next().is_some_and(|c| c.is_alphabetic()) && t.chars().all(|c| c.is_alphanumeric() || c == '_');
                if list.len() != n || !list.iter().all(valid) || (1..n).any(|k| list[k..].contains(&list[k - 1])) {
                    return Err(Error::Parse(format!("bad names line {line}")));
                }
                names = Some(list);
            } else if let Some(rest) = line.strip_prefix("p ") {
                let mut it = rest.trim().splitn(3, char::is_whitespace);
                let i = it.next().and_then(|t| t.parse::<usize>().ok());
                let j = it.next().and_then(|t| t.trim().parse::<usize>().ok());
                let v = it.next().map(|s| s.trim().to_string());
                match (i, j, v) {
                    (Some(i), Some(j), Some(v)) if i >= 1 && j >= 1 && i <= n && j <= n && !v.is_empty() => {
                        entries.push((i - 1, j - 1, v));
                    }
                    _ => return Err(Error::Parse(format!("bad entry line {line}"))),
                }
            } else {
                return Err(Error::Parse(format!("unrecognized line {line}")));
            }
        }

        let field = parse_field_spec(&field_spec, n, constraint)?;
        if constraint.is_some() && !field.is_symbolic() {
            return Err(Error::Parse("constrain requires a rational function field".into()));
        }
        let mut given: Vec<Vec<Option<String>>> = vec![vec![None; n]; n];
        for (i, j, v) in entries {
            if given[i][j].is_some() {
                return Err(Error::Parse(format!("duplicate entry for {}", symbol_name(i, j))));
            }
            given[i][j] = Some(v);
        }
        // Entries are resolved against the bare symbols, so the constrained
        // symbol may only appear through its own eliminated value.
        let mut p: Vec<Vec<Scalar>> = vec![vec![field.one(); n]; n];
        let resolve_plain = |name: &str| -> Option<Scalar> { field.symbol(name) };
        for i in 0..n {
            for j in 0..n {
                if Some((i, j)) == constraint {
                    continue;
                }
                p[i][j] = match &given[i][j] {
                    Some(v) => parse_scalar(v, &field, &resolve_plain)?,
                    None => field
                        .symbol(&symbol_name(i, j))
                        .ok_or_else(|| Error::Parse(format!("missing entry for {}", symbol_name(i, j))))?,
                };
            }
        }
        if let Some((ci, cj)) = constraint {
            let value = eliminated_entry(&field, &p, (ci, cj))?;
            if let Some(v) = &given[ci][cj] {
                let stated = parse_scalar(v, &field, &resolve_plain)?;
                if stated != value {
                    return Err(Error::ContextInconsistent(format!(
                        "{} is fixed by the constraint to {value}",
                        symbol_name(ci, cj)
                    )));
                }
            }
            p[ci][cj] = value;
        }
        let mut ctx = Self::new(field, p)?;
        ctx.constraint = constraint;
        if let Some(names) = names {
            ctx.names = names;
        }
        Ok(ctx)
    }
}

fn eliminated_entry(field: &FieldSpec, p: &[Vec<Scalar>], c: (usize, usize)) -> Result<Scalar> {
    let mut prod = field.one();
    for (i, row) in p.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            if i != j && (i, j) != c {
                if v.is_zero() {
                    return Err(Error::ContextInconsistent(format!("{} is zero", symbol_name(i, j))));
                }
                prod = &prod * v;
            }
        }
    }
    prod.inv()
}

/// Splits `p[i][j]` into zero-based indices.
pub fn parse_symbol_indices(name: &str) -> Option<(usize, usize)> {
    let rest = name.strip_prefix("p[")?;
    let (a, rest) = rest.split_once("][")?;
    let b = rest.strip_suffix(']')?;
    let i: usize = a.trim().parse().ok()?;
    let j: usize = b.trim().parse().ok()?;
    if i == 0 || j == 0 {
        return None;
    }
    Some((i - 1, j - 1))
}

fn parse_base_field(s: &str) -> Result<BaseField> {
    let s = s.trim();
    if s == "rationals" {
        return Ok(BaseField::Rationals);
    }
    let inner = |prefix: &str| -> Option<&str> { s.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')') };
    if let Some(m) = inner("cyclotomic") {
        let m: u32 = m.trim().parse().map_err(|_| Error::Parse(format!("bad cyclotomic order {m}")))?;
        return BaseField::cyclotomic(m);
    }
    if let Some(l) = inner("prime") {
        let l: u64 = l.trim().parse().map_err(|_| Error::Parse(format!("bad characteristic {l}")))?;
        return BaseField::prime(l);
    }
    Err(Error::Parse(format!("unknown field {s}")))
}

/// `rationals`, `cyclotomic(m)`, `prime(l)`, `ratfunc(<base>)` or `ratfunc(<base>:sym,...)`.
pub fn parse_field_spec(s: &str, n: usize, constraint: Option<(usize, usize)>) -> Result<FieldSpec> {
    let s = s.trim();
    if let Some(body) = s.strip_prefix("ratfunc(").and_then(|b| b.strip_suffix(')')) {
        let (base, syms) = match body.split_once(':') {
            Some((b, list)) => (b, Some(list)),
            None => (body, None),
        };
        let base = parse_base_field(base)?;
        let symbols: Vec<String> = match syms {
            Some(list) => list.split(',').map(|t| t.trim().to_string()).filter(|t| !t.is_empty()).collect(),
            None => (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, j)))
                .filter(|&(i, j)| Some((i, j)) != constraint)
                .map(|(i, j)| symbol_name(i, j))
                .collect(),
        };
        if let Some((i, j)) = constraint {
            if symbols.contains(&symbol_name(i, j)) {
                return Err(Error::Parse(format!("constrained symbol {} may not be a field symbol", symbol_name(i, j))));
            }
        }
        return Ok(FieldSpec::functions(base, symbols));
    }
    Ok(FieldSpec::Base(parse_base_field(s)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(n: usize) -> PairingContext {
        PairingContext::symbolic(n, BaseField::Rationals, None).unwrap()
    }

    #[test]
    fn chi_on_group() {
        let c = sym(3);
        assert_eq!(c.chi_word_on_group(&[0], &[0, 1, 0]), c.p(0, 1).clone());
        assert!(c.chi_word_on_group(&[], &[3, 1, 2]).is_one());
        assert_eq!(c.chi_word_on_group(&[0, 1], &[0, 0, 1]), c.p(0, 2) * c.p(1, 2));
    }

    #[test]
    fn q_values() {
        let c = sym(3);
        let id = Perm::identity(3);
        let s23 = Perm::parse(3, "(23)").unwrap();
        assert_eq!(c.q_k(&id, 1), c.p(0, 1).clone());
        assert_eq!(c.q_k(&id, 2), c.p(0, 2) * c.p(1, 2));
        assert_eq!(c.q_k(&s23, 2), c.p(0, 1) * c.p(2, 1));
        assert_eq!(c.q_k_star(&id, 1), c.p(1, 0).inv().unwrap());
        assert_eq!(c.q_k_star(&s23, 2), (c.p(1, 0) * c.p(1, 2)).inv().unwrap());
    }

    #[test]
    fn braces() {
        let c = sym(3);
        let lhs = c.brace(&[(0, 1), (0, 2), (1, 2)]);
        let prod = c.conforming_product(&[0, 1, 2]);
        // {p12 p13 p23} = A (1 - 1/prod)
        let a = c.p(0, 1) * c.p(0, 2) * c.p(1, 2);
        assert_eq!(lhs, &a * &(&c.one() - &prod.inv().unwrap()));
        assert!(!c.is_conforming(&[0, 1]));
    }

    #[test]
    fn constrained_mode() {
        let c = PairingContext::symbolic(4, BaseField::Rationals, Some((1, 0))).unwrap();
        assert!(c.is_conforming(&[0, 1, 2, 3]));
        assert!(c.gamma4(0, 3).unwrap());
        let text = c.to_text();
        let back = PairingContext::parse(&text).unwrap();
        assert_eq!(back, c);
        assert!(matches!(sym(3).gamma4(0, 1), Err(Error::ArityMismatch { .. })));
    }

    #[test]
    fn file_format() {
        let t = "n=2 field=cyclotomic(4)\np 1 1 1\np 1 2 z\np 2 1 -z\np 2 2 1\n";
        let c = PairingContext::parse(t).unwrap();
        assert!(c.pair_product(0, 1).is_one());
        assert_eq!(PairingContext::parse(&c.to_text()).unwrap(), c);
        let zero = "n=1 field=rationals\np 1 1 0\n";
        assert!(matches!(PairingContext::parse(zero), Err(Error::ContextInconsistent(_))));
        assert!(matches!(PairingContext::parse("n=1 field=rationals\n"), Err(Error::Parse(_))));
        assert!(matches!(PairingContext::parse("n=x\n"), Err(Error::Parse(_))));
    }
}
