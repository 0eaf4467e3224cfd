//! The monomial representation of `Aut*(H₆)` over the split quaternions:
//! an element `(P, Q, ε)` becomes `(P·(βI)^ε, Q·(βI)^ε)`, and `H₆`
//! intertwines the two components.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactnum::{EisensteinRational, SplitQuaternion};
use crate::hadamard_aut::{compute_aut_linear, star, tau1, tau2, tau2prime, XElement};
use crate::linalg::{dagger, h6, h6_split, mat_mul, EisMatrix, SqMatrix};
use crate::monomial::{MonomialBMatrix, MonomialMatrix};
use crate::perm::cycle_type;
use crate::report::Report;

/// Default seed for the randomized word checks.
pub const DEFAULT_SEED: u64 = 6;

const WORD_LENGTH: usize = 10;
const WORD_COUNT: usize = 100;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BRepElement {
    pub a: MonomialBMatrix,
    pub b: MonomialBMatrix,
}

impl BRepElement {
    pub fn identity() -> Self {
        Self {
            a: MonomialBMatrix::identity(6),
            b: MonomialBMatrix::identity(6),
        }
    }

    pub fn compose(&self, other: &Self) -> Self {
        Self {
            a: self.a.compose(&other.a).expect("degree 6"),
            b: self.b.compose(&other.b).expect("degree 6"),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_identity() && self.b.is_identity()
    }
}

impl fmt::Display for BRepElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

impl fmt::Debug for BRepElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn fixes_h6(g: &XElement) -> bool {
    g.act(&h6()).is_ok_and(|m| m == h6())
}

fn attach_beta(m: &MonomialMatrix, eps: bool) -> MonomialBMatrix {
    let base = MonomialBMatrix::from_complex(m);
    if eps {
        base.compose(&MonomialBMatrix::beta_scalar(6))
            .expect("degree 6")
    } else {
        base
    }
}

pub fn b_rep(g: &XElement) -> Result<BRepElement> {
    if !fixes_h6(g) {
        return Err(Error::NotInStabilizer);
    }
    Ok(BRepElement {
        a: attach_beta(g.p(), g.eps()),
        b: attach_beta(g.q(), g.eps()),
    })
}

fn six() -> SplitQuaternion {
    SplitQuaternion::from_complex(EisensteinRational::from_ints(6, 0))
}

/// `H₆·B′·H₆† = 6·A′`, i.e. `H₆·B′·H₆⁻¹ = A′` with the inverse cleared.
pub fn intertwines(a: &SqMatrix, b: &SqMatrix) -> bool {
    let hc = dagger(&h6()).map(|x| SplitQuaternion::from_complex(x.clone()));
    mat_mul(&h6_split(), b)
        .and_then(|hb| mat_mul(&hb, &hc))
        .is_ok_and(|lhs| lhs == a.scale(&six()))
}

pub fn verify_intertwining(g: &XElement) -> Result<bool> {
    let rep = b_rep(g)?;
    Ok(intertwines(&rep.a.to_matrix(), &rep.b.to_matrix()))
}

/// Dimension over Q(ω) of the matrices commuting with every `gens[k]`.
pub fn commutant_dimension(gens: &[EisMatrix]) -> usize {
    let n = gens.first().map_or(0, EisMatrix::rows);
    let unknowns = n * n;
    let mut rows = Vec::with_capacity(gens.len() * unknowns * unknowns);
    for g in gens {
        // (G·X − X·G)[i][j] = Σ_l G[i][l]·X[l][j] − Σ_l X[i][l]·G[l][j]
        for i in 0..n {
            for j in 0..n {
                let mut row = vec![EisensteinRational::zero(); unknowns];
                for l in 0..n {
                    row[l * n + j] += g.get(i, l);
                    row[i * n + l] += &-g.get(l, j);
                }
                rows.extend(row);
            }
        }
    }
    let system =
        EisMatrix::from_vec(gens.len() * unknowns, unknowns, rows).expect("row lengths agree");
    unknowns - system.rank()
}

fn random_word(rng: &mut ChaCha8Rng) -> Vec<usize> {
    (0..WORD_LENGTH).map(|_| rng.gen_range(0..2)).collect()
}

pub fn verify_theorem(seed: u64) -> Report {
    let mut r = Report::new("theorem");
    let gens = [tau1(), tau2().compose(&star())];
    let reps: Vec<BRepElement> = gens
        .iter()
        .map(|g| b_rep(g).expect("generators fix H6"))
        .collect();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hom_ok = true;
    let mut inter_ok = true;
    for _ in 0..WORD_COUNT {
        let letters = random_word(&mut rng);
        let g = letters
            .iter()
            .fold(XElement::identity(), |acc, &l| acc.compose(&gens[l]));
        let image = letters
            .iter()
            .fold(BRepElement::identity(), |acc, &l| acc.compose(&reps[l]));
        match b_rep(&g) {
            Ok(direct) => hom_ok &= direct == image,
            Err(_) => hom_ok = false,
        }
        inter_ok &= verify_intertwining(&g).unwrap_or(false);
    }
    r.check(
        "b_rep_homomorphism",
        "b_rep is multiplicative on random words in τ1, τ2*",
        true,
        hom_ok,
    );
    let gens_inter = gens.iter().all(|g| verify_intertwining(g).unwrap_or(false));
    r.check(
        "intertwining_generators",
        "H6 intertwines both components for τ1 and τ2*",
        true,
        gens_inter,
    );
    r.check(
        "intertwining_words",
        "H6 intertwines both components on random words",
        true,
        inter_ok,
    );

    let displayed = &reps[1];
    r.check(
        "display_lhs",
        "inner matrix on the left (β on the right of each phase)",
        "[B,B,w2B,wB,wB,w2B](1,2)(3,6)(4,5)",
        &displayed.b,
    );
    r.check(
        "display_rhs",
        "matrix on the right (β on the right of each phase)",
        "[B,B,wB,w2B,w2B,wB](1,2)",
        &displayed.a,
    );
    r.check(
        "display_equation",
        "H6·B′·H6⁻¹ = A′ for τ2*",
        true,
        intertwines(&displayed.a.to_matrix(), &displayed.b.to_matrix()),
    );
    let rhs = displayed.a.to_matrix();
    r.check(
        "rhs_involution",
        "the right-hand matrix squares to the identity",
        true,
        mat_mul(&rhs, &rhs).is_ok_and(|sq| sq == SqMatrix::identity(6)),
    );
    let beta = SplitQuaternion::beta();
    let squares = [EisensteinRational::omega(), EisensteinRational::omega_bar()]
        .into_iter()
        .all(|w| {
            let x = &beta * &SplitQuaternion::from_complex(w);
            &x * &x == SplitQuaternion::one()
        });
    r.check("beta_omega_squares", "(βω)² = (βω̄)² = 1", true, squares);

    let t = tau2prime();
    let fmt_type = |v: Vec<usize>| format!("{v:?}");
    r.check(
        "cycle_type_rho1",
        "first projection of τ2′ is a transposition",
        "[2, 1, 1, 1, 1]",
        fmt_type(cycle_type(t.p().perm())),
    );
    r.check(
        "cycle_type_rho2",
        "second projection of τ2′ is a triple transposition",
        "[2, 2, 2]",
        fmt_type(cycle_type(t.q().perm())),
    );

    let linear: Vec<EisMatrix> = compute_aut_linear()
        .generators
        .iter()
        .map(|g| g.p().to_matrix())
        .collect();
    r.check(
        "commutant",
        "only scalars commute with the linear part of the first component",
        1,
        commutant_dimension(&linear),
    );
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hadamard_aut::sylow_x;
    use proptest::prelude::*;

    fn tau2_star() -> XElement {
        tau2().compose(&star())
    }

    #[test]
    fn images_of_simple_elements() {
        let t1 = b_rep(&tau1()).unwrap();
        assert_eq!(t1.a.to_string(), "[1,1,1,1,1,1](2,3,4,5,6)");
        assert_eq!(t1.a, t1.b);
        assert!(b_rep(&XElement::identity()).unwrap().is_identity());
        assert!(matches!(b_rep(&star()), Err(Error::NotInStabilizer)));
        assert!(matches!(
            verify_intertwining(&tau2()),
            Err(Error::NotInStabilizer)
        ));
    }

    #[test]
    fn intertwining_examples() {
        assert!(verify_intertwining(&tau2_star()).unwrap());
        assert!(verify_intertwining(&tau1()).unwrap());
        assert!(verify_intertwining(&XElement::identity()).unwrap());
        assert!(verify_intertwining(&sylow_x()).unwrap());
    }

    #[test]
    fn beta_on_the_left_does_not_intertwine() {
        // Reading each displayed entry as β·ω^a instead of ω^a·β.
        let rep = b_rep(&tau2_star()).unwrap();
        let left = |m: &MonomialBMatrix| {
            let flipped: Vec<(u8, u8)> =
                m.entries().iter().map(|&(a, b)| ((3 - a) % 3, b)).collect();
            MonomialBMatrix::new(flipped, m.perm().clone()).unwrap()
        };
        let (a, b) = (left(&rep.a), left(&rep.b));
        assert!(!intertwines(&a.to_matrix(), &b.to_matrix()));
        assert!(intertwines(&rep.a.to_matrix(), &rep.b.to_matrix()));
    }

    #[test]
    fn commutant_of_small_cases() {
        let id = EisMatrix::identity(3);
        assert_eq!(commutant_dimension(&[id]), 9);
        let diag = MonomialMatrix::diagonal(vec![0, 1, 2]).to_matrix();
        assert_eq!(commutant_dimension(std::slice::from_ref(&diag)), 3);
        let cyc = MonomialMatrix::permutation(crate::perm::parse_cycles("(1,2,3)", 3).unwrap())
            .to_matrix();
        assert_eq!(commutant_dimension(&[diag, cyc]), 1);
    }

    #[test]
    fn theorem_report_passes() {
        let r = verify_theorem(DEFAULT_SEED);
        assert!(r.pass, "{r}");
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]
        #[test]
        fn b_rep_is_multiplicative(a in prop::collection::vec(0usize..2, 0..10),
                                   b in prop::collection::vec(0usize..2, 0..10)) {
            let gens = [tau1(), tau2_star()];
            let word = |w: &[usize]| w.iter().fold(XElement::identity(), |acc, &l| acc.compose(&gens[l]));
            let (g, h) = (word(&a), word(&b));
            let lhs = b_rep(&g.compose(&h)).unwrap();
            let rhs = b_rep(&g).unwrap().compose(&b_rep(&h).unwrap());
            prop_assert_eq!(lhs, rhs);
        }
    }
}
