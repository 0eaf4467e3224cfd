//! Permutations of `{1..n}` acting on the right: `i^(g·h) = (i^g)^h`.
//!
//! Points are 1-based in cycle notation and 0-based in the API.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree).collect(),
        }
    }

    /// Builds from a 0-based image list, checking that it is a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(Error::PointOutOfRange {
                    point: x + 1,
                    degree: n,
                });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::RepeatedPoint(x + 1));
            }
        }
        Ok(Self { images })
    }

    /// Builds from 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(Error::PointOutOfRange { point: p, degree });
                }
                if std::mem::replace(&mut used[p - 1], true) {
                    return Err(Error::RepeatedPoint(p));
                }
                let next = cycle[(k + 1) % cycle.len()];
                if next == 0 || next > degree {
                    return Err(Error::PointOutOfRange {
                        point: next,
                        degree,
                    });
                }
                images[p - 1] = next - 1;
            }
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` then `other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.then(other))
    }

    /// Unchecked right-action product; panics on a degree mismatch.
    pub fn then(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Self {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Self { images: inv }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity(self.degree());
        for _ in 0..e.unsigned_abs() {
            acc = acc.then(&base);
        }
        acc
    }

    /// `h⁻¹·self·h`.
    pub fn conjugate_by(&self, h: &Self) -> Self {
        h.inverse().then(self).then(h)
    }

    /// `[self, h] = self⁻¹·h⁻¹·self·h`.
    pub fn commutator(&self, h: &Self) -> Self {
        self.inverse().then(&h.inverse()).then(self).then(h)
    }

    /// Disjoint cycles (1-based), each starting at its smallest point, in
    /// order of smallest point; fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Order of the permutation (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| {
            let l = c.len() as u64;
            acc / gcd(acc, l) * l
        })
    }

    pub fn sign(&self) -> i8 {
        let even_cycles = self.cycles().iter().filter(|c| c.len() % 2 == 0).count();
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Smallest moved point (0-based).
    pub fn first_moved(&self) -> Option<usize> {
        self.images.iter().enumerate().position(|(i, &x)| i != x)
    }

    /// Restriction to the first `n` points, which must be an invariant set.
    pub fn restrict(&self, n: usize) -> Result<Self> {
        Self::from_images(self.images[..n].to_vec())
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Cycle lengths including fixed points, sorted in decreasing order.
pub fn cycle_type(g: &Permutation) -> Vec<usize> {
    let mut lengths: Vec<usize> = g.cycles().iter().map(Vec::len).collect();
    let moved: usize = lengths.iter().sum();
    lengths.extend(std::iter::repeat_n(1, g.degree() - moved));
    lengths.sort_unstable_by(|a, b| b.cmp(a));
    lengths
}

pub fn p_compose(g: &Permutation, h: &Permutation) -> Result<Permutation> {
    g.compose(h)
}

pub fn p_inverse(g: &Permutation) -> Permutation {
    g.inverse()
}

/// Parses `id` or a sequence of cycles such as `(1,2)(3, 6)(4,5)`.
pub fn parse_cycles(text: &str, degree: usize) -> Result<Permutation> {
    let err = |reason: &str| Error::Parse {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let trimmed = text.trim();
    if trimmed == "id" {
        return Ok(Permutation::identity(degree));
    }
    if trimmed.is_empty() {
        return Err(err("empty input"));
    }
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut rest = trimmed;
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
        let close = body.find(')').ok_or_else(|| err("unclosed cycle"))?;
        let inner = &body[..close];
        let mut cycle = Vec::new();
        for tok in inner.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                return Err(err("empty point"));
            }
            let p: usize = tok
                .parse()
                .map_err(|_| err("point is not a positive integer"))?;
            cycle.push(p);
        }
        cycles.push(cycle);
        rest = body[close + 1..].trim_start();
    }
    let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
    Permutation::from_cycles(degree, &refs)
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("id");
        }
        for c in cycles {
            let pts: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", pts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[deg {}]", self, self.degree())
    }
}

/// Degree-6 parsing, the common case.
impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_cycles(s, 6)
    }
}
