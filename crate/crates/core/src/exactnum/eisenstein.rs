use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An element `a + b·ω` of the field Q(ω), where ω is a primitive cube root
/// of unity (ω² = −1 − ω).
///
/// Both coordinates are kept as reduced `BigRational`s, so the derived
/// `Eq`/`Hash` are structural on the canonical form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EisensteinRational {
    a: BigRational,
    b: BigRational,
}

impl EisensteinRational {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Self { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Self {
            a: BigRational::from_integer(BigInt::from(a)),
            b: BigRational::from_integer(BigInt::from(b)),
        }
    }

    pub fn from_ratios(a: (i64, i64), b: (i64, i64)) -> Self {
        Self {
            a: BigRational::new(a.0.into(), a.1.into()),
            b: BigRational::new(b.0.into(), b.1.into()),
        }
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0)
    }

    pub fn omega() -> Self {
        Self::from_ints(0, 1)
    }

    /// ω̄ = ω² = −1 − ω.
    pub fn omega_bar() -> Self {
        Self::from_ints(-1, -1)
    }

    /// ω^k for any integer k.
    pub fn omega_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => Self::one(),
            1 => Self::omega(),
            _ => Self::omega_bar(),
        }
    }

    pub fn re_part(&self) -> &BigRational {
        &self.a
    }

    pub fn omega_part(&self) -> &BigRational {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// Complex conjugation: ω ↦ ω², so a + bω ↦ (a − b) − bω.
    pub fn conj(&self) -> Self {
        Self {
            a: &self.a - &self.b,
            b: -&self.b,
        }
    }

    /// The field norm x·x̄ = a² − ab + b², always a non-negative rational.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        let c = self.conj();
        Some(Self {
            a: c.a / &n,
            b: c.b / n,
        })
    }

    /// Multiplication by ω^k without a general product.
    pub fn mul_omega_pow(&self, k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => self.clone(),
            // (a + bω)ω = −b + (a − b)ω
            1 => Self {
                a: -&self.b,
                b: &self.a - &self.b,
            },
            // (a + bω)ω² = (b − a) − aω
            _ => Self {
                a: &self.b - &self.a,
                b: -&self.a,
            },
        }
    }

    /// Returns `k` if this element equals ω^k.
    pub fn as_cube_root(&self) -> Option<u8> {
        (0..3u8).find(|&k| *self == Self::omega_pow(k as i64))
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self {
            a: &self.a * r,
            b: &self.b * r,
        }
    }

    /// Canonical serialization: numerators and denominators of both
    /// coordinates in signed big-endian form, each length-prefixed.
    pub fn write_canonical(&self, out: &mut Vec<u8>) {
        for r in [&self.a, &self.b] {
            for n in [r.numer(), r.denom()] {
                let bytes = n.to_signed_bytes_be();
                out.extend_from_slice(&(bytes.len() as u32).to_be_bytes());
                out.extend_from_slice(&bytes);
            }
        }
    }
}

impl Default for EisensteinRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl<'a> Add<&'a EisensteinRational> for &'a EisensteinRational {
    type Output = EisensteinRational;
    fn add(self, rhs: &EisensteinRational) -> EisensteinRational {
        EisensteinRational {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Add for EisensteinRational {
    type Output = EisensteinRational;
    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl AddAssign<&EisensteinRational> for EisensteinRational {
    fn add_assign(&mut self, rhs: &EisensteinRational) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl<'a> Sub<&'a EisensteinRational> for &'a EisensteinRational {
    type Output = EisensteinRational;
    fn sub(self, rhs: &EisensteinRational) -> EisensteinRational {
        EisensteinRational {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Sub for EisensteinRational {
    type Output = EisensteinRational;
    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<'a> Mul<&'a EisensteinRational> for &'a EisensteinRational {
    type Output = EisensteinRational;
    fn mul(self, rhs: &EisensteinRational) -> EisensteinRational {
        // (a1 + b1ω)(a2 + b2ω) = a1a2 + (a1b2 + b1a2)ω + b1b2ω², ω² = −1 − ω
        let bb = &self.b * &rhs.b;
        EisensteinRational {
            a: &self.a * &rhs.a - &bb,
            b: &self.a * &rhs.b + &self.b * &rhs.a - bb,
        }
    }
}

impl Mul for EisensteinRational {
    type Output = EisensteinRational;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Neg for &EisensteinRational {
    type Output = EisensteinRational;
    fn neg(self) -> EisensteinRational {
        EisensteinRational {
            a: -&self.a,
            b: -&self.b,
        }
    }
}

impl Neg for EisensteinRational {
    type Output = EisensteinRational;
    fn neg(self) -> Self {
        -&self
    }
}

/// Free-function form of the field operations.
pub fn eis_add(x: &EisensteinRational, y: &EisensteinRational) -> EisensteinRational {
    x + y
}

pub fn eis_mul(x: &EisensteinRational, y: &EisensteinRational) -> EisensteinRational {
    x * y
}

pub fn eis_conj(x: &EisensteinRational) -> EisensteinRational {
    x.conj()
}

/// Renders as `a+b*w`, e.g. `1+0*w`, `-1-1*w`, `1/2+3/4*w`.
impl fmt::Display for EisensteinRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.b.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}*w", self.a, sign, self.b.abs())
    }
}

impl fmt::Debug for EisensteinRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(a: i64, b: i64) -> EisensteinRational {
        EisensteinRational::from_ints(a, b)
    }

    #[test]
    fn addition_examples() {
        let w = EisensteinRational::omega();
        let w2 = &w * &w;
        assert_eq!(&w + &w2, e(-1, 0));
        assert_eq!(eis_add(&EisensteinRational::zero(), &w), w);
        assert_eq!(e(1, 1) + e(1, 1), e(2, 2));
    }

    #[test]
    fn multiplication_examples() {
        let w = EisensteinRational::omega();
        assert_eq!(&w * &w, e(-1, -1));
        assert_eq!(eis_mul(&w, &EisensteinRational::omega_bar()), e(1, 0));
        let minus_w2 = -(&w * &w);
        let minus_w = -&w;
        assert_eq!(&minus_w2 * &minus_w, e(1, 0));
        assert_eq!(&(&w * &w) * &w, EisensteinRational::one());
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(eis_conj(&EisensteinRational::omega()), e(-1, -1));
        assert_eq!(eis_conj(&e(1, 0)), e(1, 0));
        assert_eq!(e(2, 3).conj().conj(), e(2, 3));
    }

    #[test]
    fn omega_powers_and_shortcuts() {
        for k in -4i64..5 {
            let x = e(3, -7);
            let mut y = x.clone();
            for _ in 0..k.rem_euclid(3) {
                y = &y * &EisensteinRational::omega();
            }
            assert_eq!(x.mul_omega_pow(k), y);
            assert_eq!(
                EisensteinRational::omega_pow(k).as_cube_root(),
                Some(k.rem_euclid(3) as u8)
            );
        }
        assert_eq!(e(2, 0).as_cube_root(), None);
    }

    #[test]
    fn inverse_and_norm() {
        let x = e(2, 5);
        let inv = x.inverse().unwrap();
        assert!((&x * &inv).is_one());
        assert_eq!(EisensteinRational::omega().norm(), BigRational::one());
        assert!(EisensteinRational::zero().inverse().is_none());
    }

    #[test]
    fn canonical_form_after_arithmetic() {
        let half = EisensteinRational::from_ratios((1, 2), (2, 4));
        assert_eq!(half, EisensteinRational::from_ratios((2, 4), (-3, -6)));
        assert_eq!(half.to_string(), "1/2+1/2*w");
        assert_eq!(e(-1, -1).to_string(), "-1-1*w");
    }
}
