//! Monomial matrices `P = D·K` with cube-root-of-unity entries, and their
//! split-quaternion counterparts with entries `ω^a·β^b`.
//!
//! `K` is the permutation matrix with `K[i, i^k] = 1`, so row `i` of `P`
//! carries `ω^phase[i]` in column `i^k` and matrix products correspond to
//! right-action products of the permutations.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactnum::{EisensteinRational, SplitQuaternion};
use crate::linalg::{EisMatrix, SqMatrix};
use crate::perm::{parse_cycles, Permutation};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialMatrix {
    phases: Vec<u8>,
    perm: Permutation,
}

impl MonomialMatrix {
    pub fn new(phases: Vec<u8>, perm: Permutation) -> Result<Self> {
        if phases.len() != perm.degree() {
            return Err(Error::DegreeMismatch(phases.len(), perm.degree()));
        }
        Ok(Self {
            phases: phases.into_iter().map(|p| p % 3).collect(),
            perm,
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            phases: vec![0; n],
            perm: Permutation::identity(n),
        }
    }

    pub fn diagonal(phases: Vec<u8>) -> Self {
        let n = phases.len();
        Self::new(phases, Permutation::identity(n)).expect("degrees agree")
    }

    pub fn permutation(perm: Permutation) -> Self {
        Self {
            phases: vec![0; perm.degree()],
            perm,
        }
    }

    /// The scalar matrix ω^k·I.
    pub fn scalar(n: usize, k: u8) -> Self {
        Self::diagonal(vec![k % 3; n])
    }

    pub fn degree(&self) -> usize {
        self.phases.len()
    }

    pub fn phases(&self) -> &[u8] {
        &self.phases
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.is_diagonal() && self.phases.iter().all(|&p| p == 0)
    }

    pub fn is_diagonal(&self) -> bool {
        self.perm.is_identity()
    }

    /// `self · other` as matrices.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.then(other))
    }

    pub(crate) fn then(&self, other: &Self) -> Self {
        // (D1K1)(D2K2) = D1·(K1 D2 K1⁻¹)·K1K2, and (K D K⁻¹)[i,i] = d[i^k]
        let phases = (0..self.degree())
            .map(|i| (self.phases[i] + other.phases[self.perm.apply(i)]) % 3)
            .collect();
        Self {
            phases,
            perm: self.perm.then(&other.perm),
        }
    }

    pub fn inverse(&self) -> Self {
        let kinv = self.perm.inverse();
        let phases = (0..self.degree())
            .map(|i| (3 - self.phases[kinv.apply(i)]) % 3)
            .collect();
        Self { phases, perm: kinv }
    }

    /// Entrywise complex conjugation.
    pub fn conj_entries(&self) -> Self {
        Self {
            phases: self.phases.iter().map(|&p| (3 - p) % 3).collect(),
            perm: self.perm.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::identity(self.degree());
        for _ in 0..e {
            acc = acc.then(self);
        }
        acc
    }

    pub fn to_matrix(&self) -> EisMatrix {
        let mut m = EisMatrix::zeros(self.degree(), self.degree());
        for i in 0..self.degree() {
            m.set(
                i,
                self.perm.apply(i),
                EisensteinRational::omega_pow(self.phases[i] as i64),
            );
        }
        m
    }

    /// Recovers the monomial form of a matrix, if it is monomial with
    /// cube-root entries.
    pub fn from_matrix(m: &EisMatrix) -> Option<Self> {
        if !m.is_square() {
            return None;
        }
        let n = m.rows();
        let mut phases = Vec::with_capacity(n);
        let mut images = Vec::with_capacity(n);
        for i in 0..n {
            let nonzero: Vec<usize> = (0..n).filter(|&j| !m.get(i, j).is_zero()).collect();
            let [j] = nonzero[..] else { return None };
            phases.push(m.get(i, j).as_cube_root()?);
            images.push(j);
        }
        let perm = Permutation::from_images(images).ok()?;
        Some(Self { phases, perm })
    }

    /// det = sign(K)·ω^(Σ phases).
    pub fn determinant(&self) -> EisensteinRational {
        let sum: i64 = self.phases.iter().map(|&p| p as i64).sum();
        let root = EisensteinRational::omega_pow(sum);
        if self.perm.sign() < 0 {
            -root
        } else {
            root
        }
    }

    /// `self⁻¹ · h · q`, computed by index arithmetic:
    /// entry (i, j) is ω^(q[t] − p[l])·h[l, t] with l = i^(k⁻¹), t = j^(kq⁻¹).
    pub fn sandwich(&self, h: &EisMatrix, q: &MonomialMatrix) -> Result<EisMatrix> {
        let n = self.degree();
        if h.rows() != n || h.cols() != q.degree() {
            return Err(Error::Dimension(format!(
                "{n}x{n} monomial against {}x{} matrix",
                h.rows(),
                h.cols()
            )));
        }
        let pinv = self.perm.inverse();
        let qinv = q.perm.inverse();
        Ok(EisMatrix::from_fn(n, q.degree(), |i, j| {
            let l = pinv.apply(i);
            let t = qinv.apply(j);
            let k = q.phases[t] as i64 - self.phases[l] as i64;
            h.get(l, t).mul_omega_pow(k)
        }))
    }
}

pub fn mono_compose(p1: &MonomialMatrix, p2: &MonomialMatrix) -> Result<MonomialMatrix> {
    p1.compose(p2)
}

pub fn mono_inverse(p: &MonomialMatrix) -> MonomialMatrix {
    p.inverse()
}

pub fn mono_to_matrix(p: &MonomialMatrix) -> EisMatrix {
    p.to_matrix()
}

/// The projection `P = DK ↦ K`.
pub fn pi(p: &MonomialMatrix) -> Permutation {
    p.perm.clone()
}

pub fn mono_conj_entries(p: &MonomialMatrix) -> MonomialMatrix {
    p.conj_entries()
}

fn phase_token(a: u8) -> &'static str {
    match a % 3 {
        0 => "1",
        1 => "w",
        _ => "w2",
    }
}

fn parse_phase(tok: &str) -> Option<u8> {
    match tok {
        "1" => Some(0),
        "w" => Some(1),
        "w2" | "W" => Some(2),
        _ => None,
    }
}

/// Splits `[e1,...,en]cycles` into entry tokens and the cycle part.
fn split_monomial_text(text: &str) -> Result<(Vec<&str>, &str)> {
    let err = |reason: &str| Error::Parse {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let t = text.trim();
    let body = t.strip_prefix('[').ok_or_else(|| err("expected '['"))?;
    let close = body.find(']').ok_or_else(|| err("missing ']'"))?;
    let entries = body[..close].split(',').map(str::trim).collect();
    Ok((entries, body[close + 1..].trim()))
}

fn parse_perm_suffix(rest: &str, degree: usize) -> Result<Permutation> {
    if rest.is_empty() {
        Ok(Permutation::identity(degree))
    } else {
        parse_cycles(rest, degree)
    }
}

/// `[1,1,w,w2,w2,w](1,2)`; the cycle part is omitted for diagonal matrices.
impl fmt::Display for MonomialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<&str> = self.phases.iter().map(|&p| phase_token(p)).collect();
        write!(f, "[{}]", entries.join(","))?;
        if !self.perm.is_identity() {
            write!(f, "{}", self.perm)?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for MonomialMatrix {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (tokens, rest) = split_monomial_text(s)?;
        let phases = tokens
            .iter()
            .map(|t| {
                parse_phase(t).ok_or_else(|| Error::Parse {
                    text: s.to_string(),
                    reason: format!("bad entry {t:?}"),
                })
            })
            .collect::<Result<Vec<u8>>>()?;
        let perm = parse_perm_suffix(rest, phases.len())?;
        Self::new(phases, perm)
    }
}

/// Monomial matrix over the split quaternions with entries `ω^a·β^b`
/// (β on the right).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialBMatrix {
    entries: Vec<(u8, u8)>,
    perm: Permutation,
}

impl MonomialBMatrix {
    pub fn new(entries: Vec<(u8, u8)>, perm: Permutation) -> Result<Self> {
        if entries.len() != perm.degree() {
            return Err(Error::DegreeMismatch(entries.len(), perm.degree()));
        }
        Ok(Self {
            entries: entries.into_iter().map(|(a, b)| (a % 3, b % 2)).collect(),
            perm,
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            entries: vec![(0, 0); n],
            perm: Permutation::identity(n),
        }
    }

    /// β·I.
    pub fn beta_scalar(n: usize) -> Self {
        Self {
            entries: vec![(0, 1); n],
            perm: Permutation::identity(n),
        }
    }

    pub fn from_complex(m: &MonomialMatrix) -> Self {
        Self {
            entries: m.phases().iter().map(|&a| (a, 0)).collect(),
            perm: m.perm().clone(),
        }
    }

    pub fn degree(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[(u8, u8)] {
        &self.entries
    }

    pub fn perm(&self) -> &Permutation {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.entries.iter().all(|&e| e == (0, 0))
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        // ω^a1 β^b1 · ω^a2 β^b2 = ω^(a1 ± a2) β^(b1+b2), the sign flipping
        // when β passes ω^a2
        let entries = (0..self.degree())
            .map(|i| {
                let (a1, b1) = self.entries[i];
                let (a2, b2) = other.entries[self.perm.apply(i)];
                let a2 = if b1 == 1 { (3 - a2) % 3 } else { a2 };
                ((a1 + a2) % 3, (b1 + b2) % 2)
            })
            .collect();
        Ok(Self {
            entries,
            perm: self.perm.then(&other.perm),
        })
    }

    pub fn to_matrix(&self) -> SqMatrix {
        let mut m = SqMatrix::zeros(self.degree(), self.degree());
        for (i, &(a, b)) in self.entries.iter().enumerate() {
            m.set(i, self.perm.apply(i), SplitQuaternion::unit(a as i64, b));
        }
        m
    }
}

pub fn mono_b_compose(a: &MonomialBMatrix, b: &MonomialBMatrix) -> Result<MonomialBMatrix> {
    a.compose(b)
}

pub fn mono_b_to_matrix(a: &MonomialBMatrix) -> SqMatrix {
    a.to_matrix()
}

/// Entries `1`, `w`, `w2`, each with an optional `B` suffix (`B` alone is β).
impl fmt::Display for MonomialBMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self
            .entries
            .iter()
            .map(|&(a, b)| match (a, b) {
                (0, 1) => "B".to_string(),
                (a, 1) => format!("{}B", phase_token(a)),
                (a, _) => phase_token(a).to_string(),
            })
            .collect();
        write!(f, "[{}]", entries.join(","))?;
        if !self.perm.is_identity() {
            write!(f, "{}", self.perm)?;
        }
        Ok(())
    }
}

impl fmt::Debug for MonomialBMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for MonomialBMatrix {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (tokens, rest) = split_monomial_text(s)?;
        let entries = tokens
            .iter()
            .map(|t| {
                let (core, b) = match t.strip_suffix('B') {
                    Some("") => ("1", 1),
                    Some(c) => (c, 1),
                    None => (*t, 0),
                };
                parse_phase(core)
                    .map(|a| (a, b))
                    .ok_or_else(|| Error::Parse {
                        text: s.to_string(),
                        reason: format!("bad entry {t:?}"),
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        let perm = parse_perm_suffix(rest, entries.len())?;
        Self::new(entries, perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::mat_mul;
    use proptest::prelude::*;

    fn m(s: &str) -> MonomialMatrix {
        s.parse().unwrap()
    }

    fn w(k: i64) -> EisensteinRational {
        EisensteinRational::omega_pow(k)
    }

    #[test]
    fn text_round_trip() {
        let t = m("[1,1,w,w2,w2,w](1,2)");
        assert_eq!(t.to_string(), "[1,1,w,w2,w2,w](1,2)");
        assert_eq!(m("[w,w,w,w,w,w]").to_string(), "[w,w,w,w,w,w]");
        assert_eq!(m("[w,1,1]id"), m("[w,1,1]"));
        assert!("[1,x](1,2)".parse::<MonomialMatrix>().is_err());
        assert!("[1,1](1,3)".parse::<MonomialMatrix>().is_err());
    }

    #[test]
    fn to_matrix_examples() {
        let k = m("[1,1,1,1,1,1](2,3,4,5,6)");
        let km = k.to_matrix();
        assert!(km.get(0, 0).is_one());
        assert!(km.get(1, 2).is_one() && km.get(5, 1).is_one());

        let p = m("[1,1,w,w2,w2,w](1,2)").to_matrix();
        assert!(p.get(0, 1).is_one());
        assert!(p.get(1, 0).is_one());
        assert_eq!(*p.get(2, 2), w(1));
        assert_eq!(*p.get(3, 3), w(2));
        assert_eq!(
            MonomialMatrix::identity(6).to_matrix(),
            EisMatrix::identity(6)
        );
    }

    #[test]
    fn composition_examples() {
        let p = m("[1,1,w,w2,w2,w](1,2)");
        assert_eq!(MonomialMatrix::identity(6).compose(&p).unwrap(), p);

        // τ₂'s first component squared, cross-checked by brute-force matrix product
        let sq = p.compose(&p).unwrap();
        assert!(sq.perm().is_identity());
        let brute = mat_mul(&p.to_matrix(), &p.to_matrix()).unwrap();
        assert_eq!(sq.to_matrix(), brute);
        assert_eq!(MonomialMatrix::from_matrix(&brute), Some(sq));

        let prod = MonomialMatrix::scalar(6, 1)
            .compose(&MonomialMatrix::scalar(6, 2))
            .unwrap();
        assert!(prod.is_identity());
        assert!(matches!(
            p.compose(&MonomialMatrix::identity(5)),
            Err(Error::DegreeMismatch(6, 5))
        ));
    }

    #[test]
    fn inverse_examples() {
        assert!(mono_inverse(&MonomialMatrix::identity(6)).is_identity());
        let k = MonomialMatrix::permutation("(1,2,3)".parse().unwrap());
        assert_eq!(
            k.inverse(),
            MonomialMatrix::permutation("(1,3,2)".parse().unwrap())
        );
        assert_eq!(m("[w,1,1,1,1,1]").inverse(), m("[w2,1,1,1,1,1]"));
    }

    #[test]
    fn pi_and_conjugation_examples() {
        assert_eq!(pi(&m("[1,1,w,w2,w2,w](1,2)")).to_string(), "(1,2)");
        assert_eq!(
            pi(&m("[1,1,w2,w,w,w2](1,2)(3,6)(4,5)")).to_string(),
            "(1,2)(3,6)(4,5)"
        );
        assert!(pi(&MonomialMatrix::identity(6)).is_identity());
        assert_eq!(mono_conj_entries(&m("[w,1,1]")), m("[w2,1,1]"));
        let k = MonomialMatrix::permutation("(1,2)".parse().unwrap());
        assert_eq!(k.conj_entries(), k);
        let p = m("[1,w,w2,w,1,w2](1,5)(2,3)");
        assert_eq!(p.conj_entries().conj_entries(), p);
    }

    #[test]
    fn determinants() {
        assert!(m("[1,1,1,1,1,1](2,3,4,5,6)").determinant().is_one());
        assert_eq!(m("[1,1,w,w2,w2,w](1,2)").determinant(), -w(0));
        assert_eq!(m("[1,1,w2,w,w,w2](1,2)(3,6)(4,5)").determinant(), -w(0));
    }

    #[test]
    fn split_monomial_examples() {
        let rhs: MonomialBMatrix = "[B,B,wB,w2B,w2B,wB](1,2)".parse().unwrap();
        assert_eq!(rhs.to_string(), "[B,B,wB,w2B,w2B,wB](1,2)");
        assert!(rhs.compose(&rhs).unwrap().is_identity());
        let brute = mat_mul(&rhs.to_matrix(), &rhs.to_matrix()).unwrap();
        assert_eq!(brute, SqMatrix::identity(6));

        let b = MonomialBMatrix::beta_scalar(6);
        assert!(mono_b_compose(&b, &b).unwrap().is_identity());
        assert_eq!(
            mono_b_to_matrix(&b.compose(&b).unwrap()),
            SqMatrix::identity(6)
        );
        assert_eq!(MonomialBMatrix::identity(6).compose(&rhs).unwrap(), rhs);
    }

    fn mono(n: usize) -> impl Strategy<Value = MonomialMatrix> {
        (
            proptest::collection::vec(0u8..3, n),
            Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
        )
            .prop_map(|(ph, im)| {
                MonomialMatrix::new(ph, Permutation::from_images(im).unwrap()).unwrap()
            })
    }

    fn mono_b(n: usize) -> impl Strategy<Value = MonomialBMatrix> {
        (
            proptest::collection::vec((0u8..3, 0u8..2), n),
            Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
        )
            .prop_map(|(e, im)| {
                MonomialBMatrix::new(e, Permutation::from_images(im).unwrap()).unwrap()
            })
    }

    proptest! {
        #[test]
        fn pi_is_a_homomorphism(p in mono(6), q in mono(6)) {
            prop_assert_eq!(pi(&p.compose(&q).unwrap()), pi(&p).then(&pi(&q)));
        }

        #[test]
        fn to_matrix_is_multiplicative(p in mono(6), q in mono(6)) {
            let lhs = p.compose(&q).unwrap().to_matrix();
            let rhs = mat_mul(&p.to_matrix(), &q.to_matrix()).unwrap();
            prop_assert_eq!(lhs, rhs);
            prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
        }

        #[test]
        fn conjugation_is_an_automorphism(p in mono(6), q in mono(6)) {
            let lhs = p.compose(&q).unwrap().conj_entries();
            let rhs = p.conj_entries().compose(&q.conj_entries()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn split_to_matrix_is_multiplicative(a in mono_b(5), b in mono_b(5)) {
            let lhs = a.compose(&b).unwrap().to_matrix();
            let rhs = mat_mul(&a.to_matrix(), &b.to_matrix()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn sandwich_matches_matrix_products(p in mono(6), q in mono(6)) {
            let h = crate::linalg::h6();
            let direct = p.sandwich(&h, &q).unwrap();
            let brute = mat_mul(&mat_mul(&p.inverse().to_matrix(), &h).unwrap(), &q.to_matrix()).unwrap();
            prop_assert_eq!(direct, brute);
        }
    }
}
