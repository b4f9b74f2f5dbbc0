//! Named pairing contexts for standard examples of quantum variables.
//!
//! [`from_spec`] reads the compact form `name` or `name:key=value,key=value`,
//! for instance `drinfeld-jimbo:cartan=B2,k` or `pareigis:n=4`.

use std::collections::VecDeque;

use num_integer::Integer;

use crate::coeff::{BaseField, FieldSpec, Scalar};
use crate::error::{Error, Result};
use crate::pairing::{parse_field_spec, PairingContext};

/// Names accepted by [`from_spec`].
pub const PRESET_NAMES: [&str; 6] = ["symbolic", "drinfeld-jimbo", "quantum-plane", "heisenberg", "pareigis", "color"];

/// A Cartan matrix of type `A_r`, `B_r`, `C_r`, `D_r` or `G2`, with
/// `a_ij = 2(α_i, α_j)/(α_i, α_i)` and Bourbaki numbering.
pub fn cartan_matrix(name: &str) -> Result<Vec<Vec<i64>>> {
    let bad = || Error::PreconditionFailed(format!("unknown Cartan type {name}"));
    let (kind, rank) = name.split_at(1);
    let r: usize = rank.parse().map_err(|_| bad())?;
    let kind = kind.to_ascii_uppercase();
    let min_rank = match kind.as_str() {
        "A" => 1,
        "B" | "C" => 2,
        "D" => 4,
        "G" => 2,
        _ => return Err(bad()),
    };
    if r < min_rank || (kind == "G" && r != 2) {
        return Err(bad());
    }
    let mut a = vec![vec![0i64; r]; r];
    for i in 0..r {
        a[i][i] = 2;
        if i + 1 < r {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    match kind.as_str() {
        "B" => a[r - 1][r - 2] = -2,
        "C" => a[r - 2][r - 1] = -2,
        "D" => {
            a[r - 2][r - 1] = 0;
            a[r - 1][r - 2] = 0;
            a[r - 3][r - 1] = -1;
            a[r - 1][r - 3] = -1;
        }
        "G" => a[0][1] = -3,
        _ => {}
    }
    Ok(a)
}

/// Smallest positive integers `d_i` with `d_i a_ij = d_j a_ji`, found by
/// propagating ratios along nonzero entries.
pub fn symmetrizer(a: &[Vec<i64>]) -> Result<Vec<u32>> {
    let r = a.len();
    if a.iter().any(|row| row.len() != r) {
        return Err(Error::PreconditionFailed("Cartan matrix must be square".into()));
    }
    let not_sym = || Error::PreconditionFailed("matrix is not symmetrizable".into());
    // d_i as a fraction (num, den).
    let mut d: Vec<Option<(i64, i64)>> = vec![None; r];
    for start in 0..r {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some((1, 1));
        let mut queue = VecDeque::from([start]);
        while let Some(i) = queue.pop_front() {
            let (ni, di) = d[i].unwrap();
            for j in 0..r {
                if i == j || (a[i][j] == 0 && a[j][i] == 0) {
                    continue;
                }
                if a[i][j] == 0 || a[j][i] == 0 {
                    return Err(not_sym());
                }
                // d_j = d_i a_ij / a_ji
                let (mut nj, mut dj) = (ni * a[i][j], di * a[j][i]);
                if dj < 0 {
                    nj = -nj;
                    dj = -dj;
                }
                let g = nj.gcd(&dj);
                let val = (nj / g, dj / g);
                if val.0 <= 0 {
                    return Err(not_sym());
                }
                match d[j] {
                    None => {
                        d[j] = Some(val);
                        queue.push_back(j);
                    }
                    Some(existing) if existing != val => return Err(not_sym()),
                    Some(_) => {}
                }
            }
        }
    }
    let d: Vec<(i64, i64)> = d.into_iter().map(|v| v.unwrap()).collect();
    let lcm = d.iter().fold(1i64, |acc, &(_, den)| acc.lcm(&den));
    let ints: Vec<i64> = d.iter().map(|&(num, den)| num * lcm / den).collect();
    let g = ints.iter().fold(0i64, |acc, &v| acc.gcd(&v));
    Ok(ints.iter().map(|&v| (v / g) as u32).collect())
}

fn q_field(field: Option<&str>, q: Option<&str>) -> Result<(FieldSpec, Scalar)> {
    match field {
        None => {
            let f = FieldSpec::functions(BaseField::Rationals, vec!["q".into()]);
            let q = match q {
                None => f.symbol("q").expect("declared symbol"),
                Some(text) => crate::coeff::parse_scalar(text, &f, &|_| None)?,
            };
            Ok((f, q))
        }
        Some(spec) => {
            let f = parse_field_spec(spec, 0, None)?;
            let text = q.ok_or_else(|| Error::PreconditionFailed("a numeric field needs an explicit q".into()))?;
            let q = crate::coeff::parse_scalar(text, &f, &|_| None)?;
            if q.is_zero() {
                return Err(Error::ContextInconsistent("q must be nonzero".into()));
            }
            Ok((f, q))
        }
    }
}

/// Skew primitive generators `e_i = E_i K_i`, `f_i = F_i K_i` (and, with
/// `with_k`, `k_i = 1 − K_i`) of the quantum enveloping algebra of a
/// symmetrizable matrix. `g_{e_i} = g_{f_i} = K_i²`, `g_{k_i} = K_i`, and
/// `χ^{e_i}(K_j) = q^{-d_i a_ij}`, `χ^{f_i}(K_j) = q^{d_i a_ij}`, `χ^{k_i} = 1`.
pub fn drinfeld_jimbo(a: &[Vec<i64>], with_k: bool, field: Option<&str>, q: Option<&str>) -> Result<PairingContext> {
    let d = symmetrizer(a)?;
    let r = a.len();
    let (f, q) = q_field(field, q)?;
    let blocks = if with_k { 3 } else { 2 };
    let n = blocks * r;
    // Exponent of q in χ^{var}(K_j), and the power of K_j in g_{var}.
    let weight = |var: usize, j: usize| -> i64 {
        let (kind, i) = (var / r, var % r);
        let base = d[i] as i64 * a[i][j];
        match kind {
            0 => -base,
            1 => base,
            _ => 0,
        }
    };
    let k_power = |var: usize| -> i64 { if var / r == 2 { 1 } else { 2 } };
    let mut p = vec![vec![f.one(); n]; n];
    for (u, row) in p.iter_mut().enumerate() {
        for (v, entry) in row.iter_mut().enumerate() {
            *entry = q.pow(weight(u, v % r) * k_power(v))?;
        }
    }
    let prefixes = ["e", "f", "k"];
    let names = (0..n).map(|v| format!("{}{}", prefixes[v / r], v % r + 1)).collect();
    Ok(PairingContext::new(f, p)?.with_names(names))
}

/// One variable with `x g = q g x`, `q` a symbol.
pub fn quantum_plane() -> PairingContext {
    let f = FieldSpec::functions(BaseField::Rationals, vec!["q".into()]);
    let q = f.symbol("q").expect("declared symbol");
    PairingContext::new(f, vec![vec![q]]).expect("nonzero entry").with_names(vec!["x".into()])
}

/// The generators `e1`, `e2` of the quantum Heisenberg subalgebra of `U_q(sl3)`.
pub fn heisenberg() -> PairingContext {
    let a = cartan_matrix("A2").expect("valid type");
    let ctx = drinfeld_jimbo(&a, false, None, None).expect("valid preset");
    ctx.restrict(&[0, 1])
}

/// `n` variables over `cyclotomic(m)` with `p_ij = ζ` for `i ≠ j`, `ζ` a
/// primitive `n`-th root of unity, and `p_ii = 1`.
pub fn pareigis(n: usize, m: Option<u32>) -> Result<PairingContext> {
    if n < 2 {
        return Err(Error::PreconditionFailed("the Pareigis preset needs at least two variables".into()));
    }
    let m = m.unwrap_or(n as u32);
    if !(m as usize).is_multiple_of(n) {
        return Err(Error::PreconditionFailed(format!("cyclotomic({m}) has no primitive {n}-th root of unity")));
    }
    let f = FieldSpec::cyclotomic(m)?;
    let zeta = match f.generator() {
        Some(z) => z.pow((m as usize / n) as i64)?,
        None => -&f.one(),
    };
    let p = (0..n).map(|i| (0..n).map(|j| if i == j { f.one() } else { zeta.clone() }).collect()).collect();
    PairingContext::new(f, p)
}

/// Color superalgebra generators with `p_ij = λ(grade_i, grade_j)` given as a
/// table; the bicharacter must satisfy `λ(f, g) λ(g, f) = 1`.
pub fn color(table: &[Vec<String>], field: Option<&str>) -> Result<PairingContext> {
    let n = table.len();
    let f = parse_field_spec(field.unwrap_or("rationals"), n, None)?;
    let mut p = Vec::with_capacity(n);
    for row in table {
        if row.len() != n {
            return Err(Error::Parse("bicharacter table must be square".into()));
        }
        p.push(row.iter().map(|t| crate::coeff::parse_scalar(t, &f, &|_| None)).collect::<Result<Vec<_>>>()?);
    }
    let ctx = PairingContext::new(f, p)?;
    for i in 0..n {
        for j in i..n {
            if !ctx.pair_product(i, j).is_one() {
                return Err(Error::ContextInconsistent(format!(
                    "lambda({}, {}) lambda({}, {}) is not 1",
                    i + 1,
                    j + 1,
                    j + 1,
                    i + 1
                )));
            }
        }
    }
    Ok(ctx)
}

/// Splits `a=1,b=[[1,2],[3,4]],flag` at top-level commas.
fn split_options(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            _ => {}
        }
        if ch == ',' && depth == 0 {
            out.push(std::mem::take(&mut cur));
        } else {
            cur.push(ch);
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur);
    }
    out.into_iter().map(|t| t.trim().to_string()).collect()
}

/// Parses `[[a,b],[c,d]]` into rows of entry strings.
pub fn parse_table(s: &str) -> Result<Vec<Vec<String>>> {
    let bad = || Error::Parse(format!("bad matrix {s}"));
    let inner = s.trim().strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(bad)?;
    split_options(inner)
        .iter()
        .map(|row| {
            let body = row.strip_prefix('[').and_then(|t| t.strip_suffix(']')).ok_or_else(bad)?;
            Ok(split_options(body))
        })
        .collect()
}

/// Parses a Cartan type name or an explicit integer matrix.
pub fn parse_cartan(s: &str) -> Result<Vec<Vec<i64>>> {
    if s.trim_start().starts_with('[') {
        parse_table(s)?
            .iter()
            .map(|row| row.iter().map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("bad Cartan entry {t}")))).collect())
            .collect()
    } else {
        cartan_matrix(s.trim())
    }
}

/// Builds a preset context from `name` or `name:key=value,…`.
///
/// | name | options |
/// |---|---|
/// | `symbolic` | `n`, `base`, `constrain=i.j` |
/// | `drinfeld-jimbo` | `cartan` (type or matrix), `k`, `field`, `q` |
/// | `quantum-plane`, `heisenberg` | none |
/// | `pareigis` | `n`, `m` |
/// | `color` | `table`, `field` |
pub fn from_spec(spec: &str) -> Result<PairingContext> {
    let (name, rest) = spec.split_once(':').unwrap_or((spec, ""));
    let mut opts: Vec<(String, Option<String>)> = Vec::new();
    for item in split_options(rest) {
        match item.split_once('=') {
            Some((k, v)) => opts.push((k.trim().to_string(), Some(v.trim().to_string()))),
            None => opts.push((item, None)),
        }
    }
    let get = |key: &str| opts.iter().find(|(k, _)| k == key).and_then(|(_, v)| v.clone());
    let flag = |key: &str| opts.iter().any(|(k, _)| k == key);
    let allowed: &[&str] = match name {
        "symbolic" => &["n", "base", "constrain"],
        "drinfeld-jimbo" => &["cartan", "k", "field", "q"],
        "pareigis" => &["n", "m"],
        "color" => &["table", "field"],
        "quantum-plane" | "heisenberg" => &[],
        _ => {
            return Err(Error::PreconditionFailed(format!("unknown preset {name}; expected one of {}", PRESET_NAMES.join(", "))))
        }
    };
    if let Some((k, _)) = opts.iter().find(|(k, _)| !allowed.contains(&k.as_str())) {
        return Err(Error::Parse(format!("preset {name} has no option {k}")));
    }
    let int = |key: &str, default: usize| -> Result<usize> {
        match get(key) {
            None => Ok(default),
            Some(v) => v.parse().map_err(|_| Error::Parse(format!("bad value {v} for {key}"))),
        }
    };
    match name {
        "symbolic" => {
            let n = int("n", 2)?;
            let base = match get("base") {
                None => BaseField::Rationals,
                Some(b) => parse_field_spec(&b, n, None)?.base().clone(),
            };
            let constrain = match get("constrain").as_deref() {
                None | Some("none") => None,
                Some(v) => {
                    let (i, j) = v.split_once('.').ok_or_else(|| Error::Parse(format!("bad constrain {v}; use i.j")))?;
                    let i: usize = i.parse().map_err(|_| Error::Parse(format!("bad constrain {v}")))?;
                    let j: usize = j.parse().map_err(|_| Error::Parse(format!("bad constrain {v}")))?;
                    if i == 0 || j == 0 || i > n || j > n || i == j {
                        return Err(Error::Parse(format!("bad constrain {v}")));
                    }
                    Some((i - 1, j - 1))
                }
            };
            if n == 0 {
                return Err(Error::Parse("arity must be positive".into()));
            }
            PairingContext::symbolic(n, base, constrain)
        }
        "drinfeld-jimbo" => {
            let cartan = parse_cartan(&get("cartan").unwrap_or_else(|| "A2".into()))?;
            drinfeld_jimbo(&cartan, flag("k"), get("field").as_deref(), get("q").as_deref())
        }
        "quantum-plane" => Ok(quantum_plane()),
        "heisenberg" => Ok(heisenberg()),
        "pareigis" => {
            let m = get("m").map(|v| v.parse::<u32>().map_err(|_| Error::Parse(format!("bad value {v} for m")))).transpose()?;
            pareigis(int("n", 4)?, m)
        }
        "color" => {
            let table = parse_table(&get("table").ok_or_else(|| Error::Parse("color preset needs table=[[...]]".into()))?)?;
            color(&table, get("field").as_deref())
        }
        _ => unreachable!("checked above"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops;

    #[test]
    fn symmetrizers() {
        assert_eq!(symmetrizer(&cartan_matrix("A3").unwrap()).unwrap(), vec![1, 1, 1]);
        assert_eq!(symmetrizer(&cartan_matrix("B2").unwrap()).unwrap(), vec![2, 1]);
        assert_eq!(symmetrizer(&cartan_matrix("C3").unwrap()).unwrap(), vec![1, 1, 2]);
        assert_eq!(symmetrizer(&cartan_matrix("G2").unwrap()).unwrap(), vec![1, 3]);
        assert_eq!(symmetrizer(&cartan_matrix("D4").unwrap()).unwrap(), vec![1, 1, 1, 1]);
        assert!(symmetrizer(&[vec![2, -1], vec![0, 2]]).is_err());
    }

    #[test]
    fn drinfeld_jimbo_a2_pairings() {
        let ctx = from_spec("drinfeld-jimbo:cartan=A2").unwrap();
        assert_eq!(ctx.n(), 4);
        assert_eq!(ctx.names(), ["e1", "e2", "f1", "f2"]);
        let q = ctx.field().symbol("q").unwrap();
        assert_eq!(*ctx.p(0, 0), q.pow(-4).unwrap());
        assert_eq!(*ctx.p(0, 1), q.pow(2).unwrap());
        assert_eq!(*ctx.p(2, 1), q.pow(-2).unwrap());
        for i in 0..2 {
            assert!(ctx.pair_product(i, i + 2).is_one());
        }
    }

    #[test]
    fn serre_operations_on_drinfeld_jimbo() {
        for ty in ["A2", "B2", "C2", "G2"] {
            let a = cartan_matrix(ty).unwrap();
            let d = symmetrizer(&a).unwrap();
            let ctx = drinfeld_jimbo(&a, false, None, None).unwrap();
            let q = ctx.field().symbol("q").unwrap();
            let qi = q.inv().unwrap();
            for (i, j) in [(0, 1), (1, 0)] {
                let f = ops::serre(&ctx, 2 + j, 2 + i, a[i][j], d[i], &q).unwrap();
                let e = ops::serre(&ctx, j, i, a[i][j], d[i], &qi).unwrap();
                assert_eq!(f.len(), e.len(), "{ty}");
            }
        }
    }

    #[test]
    fn k_variables() {
        let ctx = from_spec("drinfeld-jimbo:cartan=[[2,-1],[-1,2]],k").unwrap();
        assert_eq!(ctx.n(), 6);
        assert_eq!(ctx.names()[4], "k1");
        assert!(ctx.p(4, 0).is_one());
        let q = ctx.field().symbol("q").unwrap();
        assert_eq!(*ctx.p(0, 4), q.pow(-2).unwrap());
    }

    #[test]
    fn pareigis_and_color() {
        let ctx = from_spec("pareigis:n=4").unwrap();
        assert_eq!(ctx.pair_product(0, 1), -&ctx.one());
        assert!(ctx.gamma4(0, 3).unwrap());
        let c = from_spec("color:table=[[1,-1],[-1,-1]]").unwrap();
        assert_eq!(c.n(), 2);
        assert!(from_spec("color:table=[[1,2],[2,1]]").is_err());
        assert!(from_spec("pareigis:n=3,m=4").is_err());
        assert!(from_spec("nothing").is_err());
        assert!(from_spec("pareigis:x=1").is_err());
    }

    #[test]
    fn text_round_trip_keeps_names() {
        for spec in ["heisenberg", "quantum-plane", "drinfeld-jimbo:cartan=B2,k", "symbolic:n=3,constrain=2.1", "pareigis:n=3"] {
            let ctx = from_spec(spec).unwrap();
            let back = PairingContext::parse(&ctx.to_text()).unwrap();
            assert_eq!(back, ctx, "{spec}");
            assert_eq!(back.names(), ctx.names(), "{spec}");
        }
    }
}
