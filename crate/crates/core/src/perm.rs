//! Permutations of variable indices.
//!
//! A permutation acts on variables by `ν(x_i) = x_{ν(i)}`. Cycle notation
//! `(234)` sends 2 to 3, 3 to 4 and 4 to 2. Indices are zero-based in the
//! API and one-based in text.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n).collect() }
    }

    /// From one-line notation (zero-based images).
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Perm { images })
    }

    /// From one-based cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for c in cycles {
            for (k, &a) in c.iter().enumerate() {
                let b = c[(k + 1) % c.len()];
                if a == 0 || a > n || b == 0 || b > n {
                    return Err(Error::Parse(format!("cycle entry out of range 1..{n}")));
                }
                images[a - 1] = b - 1;
            }
        }
        Self::from_images(images)
    }

    /// Parses `id`, `(23)`, `(12)(34)` or `(1,10)`.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "id" || s.is_empty() {
            return Ok(Self::identity(n));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(|| Error::Parse(format!("bad cycle notation {s}")))?;
            let close = open.find(')').ok_or_else(|| Error::Parse(format!("unclosed cycle in {s}")))?;
            let body = &open[..close];
            let entries: Vec<usize> = if body.contains(',') {
                body.split(',')
                    .map(|t| t.trim().parse().map_err(|_| Error::Parse(format!("bad cycle entry {t}"))))
                    .collect::<Result<_>>()?
            } else {
                body.chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad cycle entry {c}"))))
                    .collect::<Result<_>>()?
            };
            cycles.push(entries);
            rest = open[close + 1..].trim_start();
        }
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Self::from_cycles(n, &refs)
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Perm { images: inv }
    }

    /// All permutations in lexicographic order of one-line notation.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
            if cur.len() == n {
                out.push(Perm { images: cur.clone() });
                return;
            }
            for i in 0..n {
                if !used[i] {
                    used[i] = true;
                    cur.push(i);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }

    /// Permutations fixing the first index. For `n = 4` the order is
    /// id, (23), (234), (34), (24), (243); otherwise lexicographic.
    pub fn fixing_first(n: usize) -> Vec<Perm> {
        if n == 4 {
            return ["id", "(23)", "(234)", "(34)", "(24)", "(243)"]
                .iter()
                .map(|s| Self::parse(4, s).expect("valid cycle"))
                .collect();
        }
        Self::all(n).into_iter().filter(|p| n == 0 || p.images[0] == 0).collect()
    }

    fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut c = vec![start];
            seen[start] = true;
            let mut j = self.images[start];
            while j != start {
                seen[j] = true;
                c.push(j);
                j = self.images[j];
            }
            out.push(c);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "id");
        }
        let sep = if self.images.len() > 9 { "," } else { "" };
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", parts.join(sep))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_convention() {
        let p = Perm::parse(4, "(234)").unwrap();
        assert_eq!(p.images(), &[0, 2, 3, 1]);
        assert_eq!(p.to_string(), "(234)");
        assert_eq!(p.inverse().to_string(), "(243)");
        assert!(p.compose(&p.inverse()).is_identity());
    }

    #[test]
    fn orders() {
        let s = Perm::fixing_first(4);
        let names: Vec<String> = s.iter().map(|p| p.to_string()).collect();
        assert_eq!(names, ["id", "(23)", "(234)", "(34)", "(24)", "(243)"]);
        let s3: Vec<String> = Perm::fixing_first(3).iter().map(|p| p.to_string()).collect();
        assert_eq!(s3, ["id", "(23)"]);
        assert_eq!(Perm::all(5).len(), 120);
        assert_eq!(Perm::parse(3, "(12)(3)").unwrap().images(), &[1, 0, 2]);
    }
}
