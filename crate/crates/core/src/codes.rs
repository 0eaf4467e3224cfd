//! GF(4) and the code spanned by the rows of `H₆` under `ω ↦ x`.

use std::fmt;
use std::ops::{Add, Mul};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::H6_EXPONENTS;
use crate::report::Report;

/// An element of GF(4) = GF(2)[x]/(x² + x + 1), stored as the bit pattern
/// of its coordinates on `1, x`: `0`, `1`, `x = 2`, `x² = x + 1 = 3`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gf4(u8);

const LOG: [u8; 4] = [0, 0, 1, 2];
const EXP: [u8; 3] = [1, 2, 3];

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    pub const X: Gf4 = Gf4(2);
    pub const X2: Gf4 = Gf4(3);

    pub fn new(bits: u8) -> Self {
        assert!(bits < 4, "GF(4) element out of range");
        Gf4(bits)
    }

    pub fn all() -> [Gf4; 4] {
        [Self::ZERO, Self::ONE, Self::X, Self::X2]
    }

    /// `x^k`.
    pub fn x_pow(k: u8) -> Self {
        Gf4(EXP[(k % 3) as usize])
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn inverse(self) -> Option<Self> {
        (!self.is_zero()).then(|| Gf4(EXP[((3 - LOG[self.0 as usize]) % 3) as usize]))
    }
}

impl Add for Gf4 {
    type Output = Gf4;
    // characteristic 2: addition is XOR of the coordinate bits
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    fn mul(self, rhs: Gf4) -> Gf4 {
        if self.is_zero() || rhs.is_zero() {
            return Gf4::ZERO;
        }
        Gf4(EXP[((LOG[self.0 as usize] + LOG[rhs.0 as usize]) % 3) as usize])
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["0", "1", "x", "x2"][self.0 as usize])
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A linear code, kept as a reduced row-echelon generator matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearCode {
    length: usize,
    rows: Vec<Vec<Gf4>>,
}

impl LinearCode {
    /// Spans the given words; dependent rows are dropped.
    pub fn from_rows(length: usize, words: &[Vec<Gf4>]) -> Result<Self> {
        if let Some(w) = words.iter().find(|w| w.len() != length) {
            return Err(Error::Dimension(format!(
                "word of length {} in a code of length {length}",
                w.len()
            )));
        }
        let mut rows: Vec<Vec<Gf4>> = words.to_vec();
        let mut rank = 0;
        for col in 0..length {
            let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, pivot);
            let inv = rows[rank][col].inverse().expect("non-zero pivot");
            rows[rank] = rows[rank].iter().map(|&v| v * inv).collect();
            for r in 0..rows.len() {
                let f = rows[r][col];
                if r != rank && !f.is_zero() {
                    let pivot_row = rows[rank].clone();
                    for (x, p) in rows[r].iter_mut().zip(pivot_row) {
                        *x = *x + f * p;
                    }
                }
            }
            rank += 1;
        }
        rows.truncate(rank);
        Ok(Self { length, rows })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    pub fn generator_rows(&self) -> &[Vec<Gf4>] {
        &self.rows
    }

    /// All `4^k` codewords, the zero word first.
    pub fn codewords(&self) -> Vec<Vec<Gf4>> {
        let k = self.dimension();
        (0..4usize.pow(k as u32))
            .map(|mut code| {
                let mut word = vec![Gf4::ZERO; self.length];
                for row in &self.rows {
                    let c = Gf4::new((code % 4) as u8);
                    code /= 4;
                    for (w, &g) in word.iter_mut().zip(row) {
                        *w = *w + c * g;
                    }
                }
                word
            })
            .collect()
    }

    /// `counts[w]` is the number of codewords of Hamming weight `w`.
    pub fn weight_distribution(&self) -> Vec<usize> {
        let mut counts = vec![0; self.length + 1];
        for w in self.codewords() {
            counts[weight(&w)] += 1;
        }
        counts
    }

    pub fn min_distance(&self) -> Result<usize> {
        self.codewords()
            .iter()
            .skip(1)
            .map(|w| weight(w))
            .min()
            .ok_or(Error::ZeroCode)
    }

    /// Deletes coordinate `coord` (1-based).
    pub fn puncture(&self, coord: usize) -> Result<Self> {
        if coord == 0 || coord > self.length {
            return Err(Error::PointOutOfRange {
                point: coord,
                degree: self.length,
            });
        }
        let rows: Vec<Vec<Gf4>> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(i, _)| i != coord - 1)
                    .map(|(_, &v)| v)
                    .collect()
            })
            .collect();
        Self::from_rows(self.length - 1, &rows)
    }

    /// `(n, k, d)`.
    pub fn parameters(&self) -> Result<CodeParameters> {
        Ok(CodeParameters {
            n: self.length,
            k: self.dimension(),
            d: self.min_distance()?,
        })
    }
}

fn weight(w: &[Gf4]) -> usize {
    w.iter().filter(|v| !v.is_zero()).count()
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct CodeParameters {
    pub n: usize,
    pub k: usize,
    pub d: usize,
}

impl fmt::Display for CodeParameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n, self.k, self.d)
    }
}

/// Rows of `H₆` with `ω^a ↦ omega_image^a`.
pub fn h6_code_with(omega_image: Gf4) -> Result<LinearCode> {
    let k = LOG[omega_image.0 as usize];
    if omega_image.is_zero() {
        return Err(Error::Dimension("ω cannot map to 0".into()));
    }
    let rows: Vec<Vec<Gf4>> = H6_EXPONENTS
        .iter()
        .map(|r| r.iter().map(|&a| Gf4::x_pow(a * k)).collect())
        .collect();
    LinearCode::from_rows(6, &rows)
}

/// The hexacode: rows of `H₆` under `1 ↦ 1, ω ↦ x, ω̄ ↦ x²`.
pub fn h6_code() -> LinearCode {
    h6_code_with(Gf4::X).expect("x is a unit")
}

pub fn min_distance(c: &LinearCode) -> Result<usize> {
    c.min_distance()
}

pub fn puncture(c: &LinearCode, coord: usize) -> Result<LinearCode> {
    c.puncture(coord)
}

fn params_string(c: &LinearCode) -> String {
    c.parameters()
        .map_or_else(|e| e.to_string(), |p| p.to_string())
}

pub fn verify_codes() -> Report {
    let mut r = Report::new("codes");
    let hexa = h6_code();
    r.check(
        "hexacode",
        "parameters of the row span of H6",
        "(6,3,4)",
        params_string(&hexa),
    );
    r.check(
        "codewords",
        "number of codewords",
        64,
        hexa.codewords().len(),
    );
    for coord in 1..=6 {
        let id = format!("puncture_{coord}");
        let claim = format!("puncturing coordinate {coord}");
        let computed = hexa
            .puncture(coord)
            .map_or_else(|e| e.to_string(), |c| params_string(&c));
        r.check(&id, &claim, "(5,3,3)", computed);
    }
    let other = h6_code_with(Gf4::X2).map_or_else(|e| e.to_string(), |c| params_string(&c));
    r.check(
        "omega_to_x2",
        "ω ↦ x² gives the same parameters",
        "(6,3,4)",
        other,
    );
    r
}
