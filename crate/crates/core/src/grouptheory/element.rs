use std::hash::Hash;

use crate::monomial::MonomialMatrix;
use crate::perm::Permutation;

/// Group elements with a right-action product `a.op(b)` = "a then b".
pub trait GroupElement: Clone + Eq + Hash {
    fn op(&self, other: &Self) -> Self;
    fn inv(&self) -> Self;
    fn is_identity(&self) -> bool;

    /// `[a, b] = a⁻¹·b⁻¹·a·b`.
    fn commutator(&self, other: &Self) -> Self {
        self.inv().op(&other.inv()).op(self).op(other)
    }

    /// `a^b = b⁻¹·a·b`.
    fn conjugate_by(&self, other: &Self) -> Self {
        other.inv().op(self).op(other)
    }
}

impl GroupElement for Permutation {
    fn op(&self, other: &Self) -> Self {
        self.then(other)
    }
    fn inv(&self) -> Self {
        self.inverse()
    }
    fn is_identity(&self) -> bool {
        Permutation::is_identity(self)
    }
}

impl GroupElement for MonomialMatrix {
    fn op(&self, other: &Self) -> Self {
        self.then(other)
    }
    fn inv(&self) -> Self {
        self.inverse()
    }
    fn is_identity(&self) -> bool {
        MonomialMatrix::is_identity(self)
    }
}
