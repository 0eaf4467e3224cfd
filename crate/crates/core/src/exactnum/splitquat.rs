use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg};

use super::EisensteinRational;

/// An element `z + w·β` of the exact split-quaternion subalgebra over Q(ω).
///
/// The defining relations are β² = 1 and β·u = ū·β for u in Q(ω), which give
///
/// ```text
/// (z1 + w1β)(z2 + w2β) = (z1z2 + w1·w̄2) + (z1w2 + w1·z̄2)β
/// ```
///
/// β is always written on the right of its coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SplitQuaternion {
    z: EisensteinRational,
    w: EisensteinRational,
}

impl SplitQuaternion {
    pub fn new(z: EisensteinRational, w: EisensteinRational) -> Self {
        Self { z, w }
    }

    pub fn from_complex(z: EisensteinRational) -> Self {
        Self {
            z,
            w: EisensteinRational::zero(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_complex(EisensteinRational::one())
    }

    pub fn beta() -> Self {
        Self {
            z: EisensteinRational::zero(),
            w: EisensteinRational::one(),
        }
    }

    /// The unit ω^a·β^b.
    pub fn unit(a: i64, b: u8) -> Self {
        let root = EisensteinRational::omega_pow(a);
        if b.is_multiple_of(2) {
            Self::from_complex(root)
        } else {
            Self::new(EisensteinRational::zero(), root)
        }
    }

    pub fn complex_part(&self) -> &EisensteinRational {
        &self.z
    }

    pub fn beta_part(&self) -> &EisensteinRational {
        &self.w
    }

    pub fn is_zero(&self) -> bool {
        self.z.is_zero() && self.w.is_zero()
    }

    pub fn write_canonical(&self, out: &mut Vec<u8>) {
        self.z.write_canonical(out);
        self.w.write_canonical(out);
    }
}

pub fn sq_mul(p: &SplitQuaternion, q: &SplitQuaternion) -> SplitQuaternion {
    p * q
}

impl<'a> Mul<&'a SplitQuaternion> for &'a SplitQuaternion {
    type Output = SplitQuaternion;
    fn mul(self, rhs: &SplitQuaternion) -> SplitQuaternion {
        SplitQuaternion {
            z: &(&self.z * &rhs.z) + &(&self.w * &rhs.w.conj()),
            w: &(&self.z * &rhs.w) + &(&self.w * &rhs.z.conj()),
        }
    }
}

impl Mul for SplitQuaternion {
    type Output = SplitQuaternion;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<'a> Add<&'a SplitQuaternion> for &'a SplitQuaternion {
    type Output = SplitQuaternion;
    fn add(self, rhs: &SplitQuaternion) -> SplitQuaternion {
        SplitQuaternion {
            z: &self.z + &rhs.z,
            w: &self.w + &rhs.w,
        }
    }
}

impl Add for SplitQuaternion {
    type Output = SplitQuaternion;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl AddAssign<&SplitQuaternion> for SplitQuaternion {
    fn add_assign(&mut self, rhs: &SplitQuaternion) {
        self.z += &rhs.z;
        self.w += &rhs.w;
    }
}

impl Neg for &SplitQuaternion {
    type Output = SplitQuaternion;
    fn neg(self) -> SplitQuaternion {
        SplitQuaternion {
            z: -&self.z,
            w: -&self.w,
        }
    }
}

impl fmt::Display for SplitQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})+({})*B", self.z, self.w)
    }
}

impl fmt::Debug for SplitQuaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(a: i64, b: i64) -> SplitQuaternion {
        SplitQuaternion::from_complex(EisensteinRational::from_ints(a, b))
    }

    #[test]
    fn beta_squares_to_one() {
        let b = SplitQuaternion::beta();
        assert_eq!(sq_mul(&b, &b), SplitQuaternion::one());
    }

    #[test]
    fn beta_omega_is_an_involution() {
        let b = SplitQuaternion::beta();
        for k in 0..3 {
            let w = SplitQuaternion::from_complex(EisensteinRational::omega_pow(k));
            let bw = &b * &w;
            assert_eq!(&bw * &bw, SplitQuaternion::one(), "k = {k}");
            let wb = &w * &b;
            assert_eq!(&wb * &wb, SplitQuaternion::one(), "k = {k}");
        }
    }

    #[test]
    fn beta_conjugates_the_complex_subfield() {
        let b = SplitQuaternion::beta();
        let w = cx(0, 1);
        let wbar_b = &cx(-1, -1) * &b;
        assert_eq!(&b * &w, wbar_b);
        assert_eq!(SplitQuaternion::unit(2, 1), wbar_b);
    }

    #[test]
    fn multiplication_law_frozen() {
        // z + wβ with z = 1 + 2ω, w = 3 − ω against z = −2 + ω, w = 5ω.
        let p = SplitQuaternion::new(
            EisensteinRational::from_ints(1, 2),
            EisensteinRational::from_ints(3, -1),
        );
        let q = SplitQuaternion::new(
            EisensteinRational::from_ints(-2, 1),
            EisensteinRational::from_ints(0, 5),
        );
        // Hand expansion with β u = ū β:
        // z = (1+2ω)(−2+ω) + (3−ω)·conj(5ω) = (−4−5ω) + (−20−15ω)
        // w = (1+2ω)(5ω) + (3−ω)·conj(−2+ω) = (−10−5ω) + (−10−ω)
        let expected = SplitQuaternion::new(
            EisensteinRational::from_ints(-24, -20),
            EisensteinRational::from_ints(-20, -6),
        );
        assert_eq!(&p * &q, expected);
    }

    #[test]
    fn display_format() {
        assert_eq!(SplitQuaternion::beta().to_string(), "(0+0*w)+(1+0*w)*B");
    }
}
