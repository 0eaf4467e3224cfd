//! Dense matrices over the exact rings of [`crate::exactnum`].

use std::fmt;
use std::hash::{Hash, Hasher};

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactnum::{EisensteinRational, SplitQuaternion};

/// Minimal ring interface used by [`ExactMatrix`].
pub trait ExactRing: Clone + PartialEq + Eq + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn write_canonical(&self, out: &mut Vec<u8>);
}

impl ExactRing for EisensteinRational {
    fn zero() -> Self {
        EisensteinRational::zero()
    }
    fn one() -> Self {
        EisensteinRational::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        EisensteinRational::is_zero(self)
    }
    fn write_canonical(&self, out: &mut Vec<u8>) {
        EisensteinRational::write_canonical(self, out)
    }
}

impl ExactRing for SplitQuaternion {
    fn zero() -> Self {
        SplitQuaternion::zero()
    }
    fn one() -> Self {
        SplitQuaternion::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        SplitQuaternion::is_zero(self)
    }
    fn write_canonical(&self, out: &mut Vec<u8>) {
        SplitQuaternion::write_canonical(self, out)
    }
}

/// Row-major dense matrix. Indices are 0-based in the API.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix<R> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

pub type EisMatrix = ExactMatrix<EisensteinRational>;
pub type SqMatrix = ExactMatrix<SplitQuaternion>;

impl<R: ExactRing> ExactMatrix<R> {
    pub fn from_vec(rows: usize, cols: usize, entries: Vec<R>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |_, _| R::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { R::one() } else { R::zero() })
    }

    pub fn scalar(n: usize, s: R) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { s.clone() } else { R::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn map<S: ExactRing>(&self, f: impl Fn(&R) -> S) -> ExactMatrix<S> {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        mat_mul(self, rhs)
    }

    pub fn scale(&self, s: &R) -> Self {
        self.map(|x| s.mul(x))
    }

    /// Row-major canonical serialization; the `Hash` impl is defined on it.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(16 + 20 * self.entries.len());
        out.extend_from_slice(&(self.rows as u32).to_be_bytes());
        out.extend_from_slice(&(self.cols as u32).to_be_bytes());
        for e in &self.entries {
            e.write_canonical(&mut out);
        }
        out
    }

    /// Rows of entry strings, for JSON export.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|e| e.to_string()).collect())
            .collect()
    }
}

impl<R: ExactRing> Hash for ExactMatrix<R> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical_bytes().hash(state);
    }
}

impl<R: ExactRing> fmt::Debug for ExactMatrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub fn mat_mul<R: ExactRing>(a: &ExactMatrix<R>, b: &ExactMatrix<R>) -> Result<ExactMatrix<R>> {
    if a.cols != b.rows {
        return Err(Error::Dimension(format!(
            "cannot multiply {}x{} by {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    Ok(ExactMatrix::from_fn(a.rows, b.cols, |i, j| {
        let mut acc = R::zero();
        for t in 0..a.cols {
            let x = a.get(i, t);
            let y = b.get(t, j);
            if !x.is_zero() && !y.is_zero() {
                acc = acc.add(&x.mul(y));
            }
        }
        acc
    }))
}

impl EisMatrix {
    pub fn conj(&self) -> Self {
        self.map(|x| x.conj())
    }

    /// Rank over Q(ω) by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<EisensteinRational>> =
            (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..self.rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, pivot);
            let inv = m[rank][col].inverse().expect("nonzero pivot");
            let pivot_row: Vec<_> = m[rank].iter().map(|x| x * &inv).collect();
            for (r, row) in m.iter_mut().enumerate() {
                if r == rank || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&factor * p);
                }
            }
            m[rank] = pivot_row;
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

/// Conjugate transpose. Only defined over Q(ω); split-quaternion matrices
/// have no `dagger`.
pub fn dagger(a: &EisMatrix) -> EisMatrix {
    EisMatrix::from_fn(a.cols, a.rows, |i, j| a.get(j, i).conj())
}

/// Outcome of [`check_hadamard`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HadamardVerdict {
    Hadamard,
    /// All entries unimodular but `A·A† ≠ n·I`.
    NotOrthogonal,
    /// First entry (1-based) whose absolute value is not 1.
    NonUnimodular {
        row: usize,
        col: usize,
    },
}

pub fn check_hadamard(a: &EisMatrix) -> Result<HadamardVerdict> {
    if !a.is_square() {
        return Err(Error::Dimension(format!(
            "Hadamard check needs a square matrix, got {}x{}",
            a.rows, a.cols
        )));
    }
    for i in 0..a.rows {
        for j in 0..a.cols {
            let x = a.get(i, j);
            if !(x * &x.conj()).is_one() {
                return Ok(HadamardVerdict::NonUnimodular {
                    row: i + 1,
                    col: j + 1,
                });
            }
        }
    }
    let n = EisensteinRational::new(
        BigRational::from_integer((a.rows as i64).into()),
        BigRational::zero(),
    );
    if mat_mul(a, &dagger(a))? == EisMatrix::scalar(a.rows, n) {
        Ok(HadamardVerdict::Hadamard)
    } else {
        Ok(HadamardVerdict::NotOrthogonal)
    }
}

/// `A·A† = n·I` exactly. Non-unimodular input is `false`; use
/// [`check_hadamard`] to tell the two failure modes apart.
pub fn is_hadamard(a: &EisMatrix) -> Result<bool> {
    Ok(check_hadamard(a)? == HadamardVerdict::Hadamard)
}

/// Exponent table of H₆: entry (i, j) is ω^H6_EXPONENTS[i][j].
pub const H6_EXPONENTS: [[u8; 6]; 6] = [
    [0, 0, 0, 0, 0, 0],
    [0, 0, 1, 2, 2, 1],
    [0, 1, 0, 1, 2, 2],
    [0, 2, 1, 0, 1, 2],
    [0, 2, 2, 1, 0, 1],
    [0, 1, 2, 2, 1, 0],
];

/// The 6×6 complex Hadamard matrix with cube-root-of-unity entries:
/// a border of ones around the circulant with first row (1, ω, ω̄, ω̄, ω).
pub fn h6() -> EisMatrix {
    EisMatrix::from_fn(6, 6, |i, j| {
        EisensteinRational::omega_pow(H6_EXPONENTS[i][j] as i64)
    })
}

/// H₆ with entries moved into the split-quaternion ring.
pub fn h6_split() -> SqMatrix {
    h6().map(|x| SplitQuaternion::from_complex(x.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w() -> EisensteinRational {
        EisensteinRational::omega()
    }

    #[test]
    fn h6_entries() {
        let h = h6();
        assert!(h.get(0, 0).is_one());
        assert_eq!(*h.get(1, 2), w());
        assert_eq!(*h.get(5, 1), w());
        assert_eq!(h, h.transpose());
        for k in 0..6 {
            assert!(h.get(0, k).is_one() && h.get(k, 0).is_one());
        }
        // trailing block is circulant with first row (1, ω, ω̄, ω̄, ω)
        for i in 1..6 {
            for j in 1..6 {
                let shifted = h.get(1 + (i % 5), 1 + (j % 5));
                assert_eq!(h.get(i, j), shifted);
            }
        }
    }

    #[test]
    fn identity_products() {
        let h = h6();
        assert_eq!(mat_mul(&EisMatrix::identity(6), &h).unwrap(), h);
        let sixth = EisensteinRational::from_ratios((1, 6), (0, 1));
        let inv = dagger(&h).scale(&sixth);
        assert_eq!(mat_mul(&h, &inv).unwrap(), EisMatrix::identity(6));
    }

    #[test]
    fn split_quaternion_diagonal_beta_squares() {
        let b = SqMatrix::scalar(2, SplitQuaternion::beta());
        assert_eq!(mat_mul(&b, &b).unwrap(), SqMatrix::identity(2));
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = EisMatrix::zeros(2, 3);
        assert!(matches!(mat_mul(&a, &a), Err(Error::Dimension(_))));
        assert!(EisMatrix::from_vec(2, 2, vec![EisensteinRational::one()]).is_err());
    }

    #[test]
    fn dagger_examples() {
        let h = h6();
        assert_eq!(dagger(&EisMatrix::identity(6)), EisMatrix::identity(6));
        assert_eq!(dagger(&h), h.conj());
        assert_eq!(dagger(&dagger(&h)), h);
    }

    #[test]
    fn hadamard_examples() {
        assert!(is_hadamard(&h6()).unwrap());
        assert!(!is_hadamard(&EisMatrix::identity(6)).unwrap());
        let ones = EisMatrix::from_fn(6, 6, |_, _| EisensteinRational::one());
        assert!(!is_hadamard(&ones).unwrap());
    }

    #[test]
    fn failure_modes_are_distinguished() {
        assert_eq!(
            check_hadamard(&EisMatrix::identity(6)).unwrap(),
            HadamardVerdict::NonUnimodular { row: 1, col: 2 }
        );
        let ones = EisMatrix::from_fn(6, 6, |_, _| EisensteinRational::one());
        assert_eq!(
            check_hadamard(&ones).unwrap(),
            HadamardVerdict::NotOrthogonal
        );
        assert!(matches!(
            is_hadamard(&EisMatrix::zeros(2, 3)),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn every_single_entry_mutation_breaks_hadamard() {
        let h = h6();
        for i in 0..6 {
            for j in 0..6 {
                let mut m = h.clone();
                let next = m.get(i, j).mul_omega_pow(1);
                m.set(i, j, next);
                assert!(!is_hadamard(&m).unwrap(), "({i},{j})");
            }
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(h6().rank(), 6);
        let ones = EisMatrix::from_fn(6, 6, |_, _| EisensteinRational::one());
        assert_eq!(ones.rank(), 1);
        assert_eq!(EisMatrix::zeros(3, 3).rank(), 0);
    }

    fn small_matrix(r: usize, c: usize) -> impl Strategy<Value = EisMatrix> {
        proptest::collection::vec((-3i64..4, -3i64..4), r * c).prop_map(move |v| {
            EisMatrix::from_vec(
                r,
                c,
                v.into_iter()
                    .map(|(a, b)| EisensteinRational::from_ints(a, b))
                    .collect(),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn mat_mul_is_associative(a in small_matrix(2, 3), b in small_matrix(3, 4), c in small_matrix(4, 2)) {
            let left = mat_mul(&mat_mul(&a, &b).unwrap(), &c).unwrap();
            let right = mat_mul(&a, &mat_mul(&b, &c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn dagger_reverses_products(a in small_matrix(3, 2), b in small_matrix(2, 3)) {
            let lhs = dagger(&mat_mul(&a, &b).unwrap());
            let rhs = mat_mul(&dagger(&b), &dagger(&a)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
