//! The group `X = ⟨τ₁, τ₂, *⟩` acting on 6×6 matrices by
//! `H ↦ P⁻¹·H·Q` followed by complex conjugation when the flag is set.

mod prop1;
mod prop2;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::grouptheory::GroupElement;
use crate::linalg::EisMatrix;
use crate::monomial::MonomialMatrix;
use crate::perm::Permutation;

pub use prop1::{
    m_submodule_check, normal_subgroup_n, submodule_closure_order, verify_prop1, x0_group, x_group,
    y_group, NGroup,
};
pub use prop2::{
    compute_aut_linear, compute_aut_star, named_group_order, verify_prop2, AutLinear, AutStar,
    NamedGroup,
};

/// A triple `(P, Q, ε)` with `ε` the conjugation flag.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct XElement {
    p: MonomialMatrix,
    q: MonomialMatrix,
    eps: bool,
}

impl XElement {
    pub fn new(p: MonomialMatrix, q: MonomialMatrix, eps: bool) -> Result<Self> {
        for m in [&p, &q] {
            if m.degree() != 6 {
                return Err(Error::DegreeMismatch(6, m.degree()));
            }
        }
        Ok(Self { p, q, eps })
    }

    /// Parses two monomial matrices in the `[1,w,w2,...](cycles)` notation.
    pub fn parse(p: &str, q: &str, eps: bool) -> Result<Self> {
        Self::new(p.parse()?, q.parse()?, eps)
    }

    pub fn identity() -> Self {
        Self {
            p: MonomialMatrix::identity(6),
            q: MonomialMatrix::identity(6),
            eps: false,
        }
    }

    pub fn p(&self) -> &MonomialMatrix {
        &self.p
    }

    pub fn q(&self) -> &MonomialMatrix {
        &self.q
    }

    pub fn eps(&self) -> bool {
        self.eps
    }

    pub fn is_identity(&self) -> bool {
        !self.eps && self.p.is_identity() && self.q.is_identity()
    }

    /// `(P₁·conj^ε₁(P₂), Q₁·conj^ε₁(Q₂), ε₁+ε₂)`.
    pub fn compose(&self, other: &Self) -> Self {
        let twist = |m: &MonomialMatrix| {
            if self.eps {
                m.conj_entries()
            } else {
                m.clone()
            }
        };
        Self {
            p: self.p.then(&twist(&other.p)),
            q: self.q.then(&twist(&other.q)),
            eps: self.eps ^ other.eps,
        }
    }

    pub fn inverse(&self) -> Self {
        let twist = |m: MonomialMatrix| if self.eps { m.conj_entries() } else { m };
        Self {
            p: twist(self.p.inverse()),
            q: twist(self.q.inverse()),
            eps: self.eps,
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        (0..e.unsigned_abs()).fold(Self::identity(), |acc, _| acc.compose(&base))
    }

    /// `H^g`.
    pub fn act(&self, h: &EisMatrix) -> Result<EisMatrix> {
        if h.rows() != 6 || h.cols() != 6 {
            return Err(Error::Dimension(format!(
                "expected 6x6, got {}x{}",
                h.rows(),
                h.cols()
            )));
        }
        let m = self.p.sandwich(h, &self.q)?;
        Ok(if self.eps { m.conj() } else { m })
    }

    /// Permutation of the 36 points `6a+i+1` (the vector `ω^a·e_i` on the row
    /// side) and `18+6b+j+1` (`ω^b·e_j` on the column side).
    pub fn to_perm36(&self) -> Permutation {
        let mut images = vec![0; 36];
        for a in 0..3u8 {
            for r in 0..6 {
                let row = (a + 3 - self.p.phases()[r]) % 3;
                let col = (a + self.q.phases()[r]) % 3;
                let (row, col) = if self.eps {
                    ((3 - row) % 3, (3 - col) % 3)
                } else {
                    (row, col)
                };
                let a = a as usize;
                images[6 * a + r] = 6 * row as usize + self.p.perm().apply(r);
                images[18 + 6 * a + r] = 18 + 6 * col as usize + self.q.perm().apply(r);
            }
        }
        Permutation::from_images(images).expect("bijective by construction")
    }

    /// The row half of [`XElement::to_perm36`]: the 18-point action.
    pub fn to_perm18(&self) -> Permutation {
        self.to_perm36().restrict(18).expect("rows are invariant")
    }
}

impl GroupElement for XElement {
    fn op(&self, other: &Self) -> Self {
        self.compose(other)
    }
    fn inv(&self) -> Self {
        self.inverse()
    }
    fn is_identity(&self) -> bool {
        XElement::is_identity(self)
    }
}

/// `(P, Q)` or `(P, Q)*`.
impl fmt::Display for XElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.q)?;
        if self.eps {
            f.write_str("*")?;
        }
        Ok(())
    }
}

impl fmt::Debug for XElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Accepts the [`Display`](fmt::Display) form.
impl FromStr for XElement {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            text: s.to_string(),
            reason: reason.to_string(),
        };
        let t = s.trim();
        let (t, eps) = match t.strip_suffix('*') {
            Some(rest) => (rest.trim_end(), true),
            None => (t, false),
        };
        let inner = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| err("expected (P, Q)"))?;
        // the separator is the comma following the first ']'s cycle part
        let close = inner.find(']').ok_or_else(|| err("missing ']'"))?;
        let split = inner[close..]
            .find(", ")
            .or_else(|| inner[close..].find(",["))
            .ok_or_else(|| err("missing second component"))?
            + close;
        Self::parse(inner[..split].trim(), inner[split + 1..].trim(), eps)
    }
}

pub fn x_compose(g: &XElement, h: &XElement) -> XElement {
    g.compose(h)
}

pub fn x_inverse(g: &XElement) -> XElement {
    g.inverse()
}

pub fn x_act(g: &XElement, h: &EisMatrix) -> Result<EisMatrix> {
    g.act(h)
}

pub fn x_to_perm36(g: &XElement) -> Permutation {
    g.to_perm36()
}

pub fn x_to_perm18(g: &XElement) -> Permutation {
    g.to_perm18()
}

pub fn tau1() -> XElement {
    XElement::parse(
        "[1,1,1,1,1,1](2,3,4,5,6)",
        "[1,1,1,1,1,1](2,3,4,5,6)",
        false,
    )
    .expect("static")
}

pub fn tau2() -> XElement {
    XElement::parse(
        "[1,1,w,w2,w2,w](1,2)",
        "[1,1,w2,w,w,w2](1,2)(3,6)(4,5)",
        false,
    )
    .expect("static")
}

pub fn star() -> XElement {
    XElement {
        eps: true,
        ..XElement::identity()
    }
}

/// `((1,2), (1,2)(3,6)(4,5))` with trivial phases.
pub fn tau2prime() -> XElement {
    XElement::parse("[1,1,1,1,1,1](1,2)", "[1,1,1,1,1,1](1,2)(3,6)(4,5)", false).expect("static")
}

pub fn sylow_x() -> XElement {
    XElement::parse(
        "[w2,1,w,w,1,w2](1,2,3)",
        "[w,1,w,1,w2,w2](1,4,6)(2,3,5)",
        false,
    )
    .expect("static")
}

pub fn sylow_y() -> XElement {
    XElement::parse(
        "[w,w2,1,1,w2,w](4,5,6)",
        "[w,w,w,w,w,w](1,4,6)(2,5,3)",
        false,
    )
    .expect("static")
}

/// `(ωI, ωI)`.
pub fn omega_scalar() -> XElement {
    XElement {
        p: MonomialMatrix::scalar(6, 1),
        q: MonomialMatrix::scalar(6, 1),
        eps: false,
    }
}

/// `n_k = [τ₂,*]^(τ₁^(k−2))` for `2 ≤ k ≤ 6`, so that `n₂ = [τ₂,*]` carries
/// row 2 of `H₆` on its first diagonal and `n_k` carries row `k`.
pub fn n_element(k: usize) -> XElement {
    assert!((2..=6).contains(&k), "n_k is defined for 2 <= k <= 6");
    tau2()
        .commutator(&star())
        .conjugate_by(&tau1().pow(k as i64 - 2))
}
