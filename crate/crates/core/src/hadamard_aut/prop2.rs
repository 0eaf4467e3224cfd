use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigUint;

use super::{
    normal_subgroup_n, omega_scalar, star, sylow_x, sylow_y, tau1, tau2, x0_group, x_group,
    y_group, XElement,
};
use crate::error::{Error, Result};
use crate::grouptheory::{
    center_of, derived_subgroup, is_simple_small, orbit_stabilizer_with, quotient_action, Bsgs,
    GroupElement,
};
use crate::linalg::{h6, is_hadamard, mat_mul};
use crate::perm::Permutation;
use crate::report::Report;

/// The stabiliser of `H₆` in `X`.
pub struct AutStar {
    /// Schreier generators kept from the orbit enumeration.
    pub generators: Vec<XElement>,
    pub orbit_size: usize,
    /// 36-point image of the generators.
    pub bsgs: Bsgs,
}

impl AutStar {
    pub fn order(&self) -> BigUint {
        self.bsgs.order()
    }

    pub fn contains(&self, g: &XElement) -> bool {
        self.bsgs.contains(&g.to_perm36())
    }
}

/// The `ε = 0` part of the stabiliser.
pub struct AutLinear {
    pub generators: Vec<XElement>,
    pub bsgs: Bsgs,
}

impl AutLinear {
    pub fn order(&self) -> BigUint {
        self.bsgs.order()
    }

    pub fn perm_generators(&self) -> &[Permutation] {
        self.bsgs.generators()
    }
}

/// Keeps a Schreier generator only if its 36-point image is new to the
/// subgroup generated so far.
struct Sifter {
    perms: Vec<Permutation>,
    bsgs: Option<Bsgs>,
}

impl Sifter {
    fn new() -> Self {
        Self {
            perms: Vec::new(),
            bsgs: None,
        }
    }

    fn keep(&mut self, g: &XElement) -> bool {
        let p = g.to_perm36();
        if self.bsgs.as_ref().is_some_and(|b| b.contains(&p)) {
            return false;
        }
        self.perms.push(p);
        self.bsgs = Some(Bsgs::new(&self.perms).expect("36 points"));
        true
    }

    fn finish(self) -> Bsgs {
        self.bsgs
            .unwrap_or_else(|| Bsgs::new(&[Permutation::identity(36)]).expect("identity"))
    }
}

/// Orbit of `H₆` under `X` by hashing exact matrices; the stabiliser comes
/// from the Schreier generators.
pub fn compute_aut_star() -> &'static AutStar {
    static CELL: OnceLock<AutStar> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut sifter = Sifter::new();
        let result = orbit_stabilizer_with(
            &[tau1(), tau2(), star()],
            h6(),
            |h, g| g.act(h).expect("6x6"),
            |g| sifter.keep(g),
        )
        .expect("matrix action is a right action");
        AutStar {
            generators: result.stabilizer_gens,
            orbit_size: result.orbit.len(),
            bsgs: sifter.finish(),
        }
    })
}

/// Kernel of `g ↦ ε(g)` on the stabiliser.
pub fn compute_aut_linear() -> &'static AutLinear {
    static CELL: OnceLock<AutLinear> = OnceLock::new();
    CELL.get_or_init(|| {
        let star_group = compute_aut_star();
        let mut sifter = Sifter::new();
        let result = orbit_stabilizer_with(
            &star_group.generators,
            false,
            |s, g| s ^ g.eps(),
            |g| sifter.keep(g),
        )
        .expect("flag action is a right action");
        AutLinear {
            generators: result.stabilizer_gens,
            bsgs: sifter.finish(),
        }
    })
}

/// Groups whose orders the command line can report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGroup {
    X,
    X0,
    N,
    Y,
    AutStar,
    Aut,
}

impl FromStr for NamedGroup {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "X" => Self::X,
            "X0" => Self::X0,
            "N" => Self::N,
            "Y" => Self::Y,
            "autstar" => Self::AutStar,
            "aut" => Self::Aut,
            _ => {
                return Err(Error::Parse {
                    text: s.to_string(),
                    reason: "expected one of X, X0, N, Y, autstar, aut".to_string(),
                })
            }
        })
    }
}

impl fmt::Display for NamedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::X => "X",
            Self::X0 => "X0",
            Self::N => "N",
            Self::Y => "Y",
            Self::AutStar => "autstar",
            Self::Aut => "aut",
        })
    }
}

pub fn named_group_order(g: NamedGroup) -> BigUint {
    match g {
        NamedGroup::X => x_group().order(),
        NamedGroup::X0 => x0_group().order(),
        NamedGroup::N => normal_subgroup_n().bsgs.order(),
        NamedGroup::Y => y_group().order(),
        NamedGroup::AutStar => compute_aut_star().order(),
        NamedGroup::Aut => compute_aut_linear().order(),
    }
}

fn order_of(perms: &[Permutation]) -> BigUint {
    if perms.is_empty() {
        return 1u32.into();
    }
    Bsgs::new(perms).expect("common degree").order()
}

pub fn verify_prop2() -> Report {
    let mut r = Report::new("prop2");
    let h = h6();
    r.check(
        "h6_hadamard",
        "H6·H6† = 6·I",
        true,
        is_hadamard(&h).unwrap_or(false),
    );

    let c = tau2().commutator(&star());
    r.check(
        "commutator_tau2_star",
        "[τ2,*] is the displayed diagonal pair",
        "([1,1,w,w2,w2,w], [1,1,w2,w,w,w2])",
        &c,
    );
    r.check(
        "tau1_fixes",
        "H6^τ1 = H6",
        true,
        tau1().act(&h).ok() == Some(h.clone()),
    );
    r.check(
        "tau2_conjugates",
        "H6^τ2 = H6*",
        true,
        tau2().act(&h).ok() == Some(h.conj()),
    );

    let aut = compute_aut_star();
    r.check("orbit_H6", "orbit of H6 under X", 39_366, aut.orbit_size);
    r.check("order_autstar", "|Aut*(H6)| = 3·720", 2160, aut.order());
    r.check(
        "orbit_stabilizer",
        "|orbit| · |Aut*(H6)| = |X|",
        x_group().order(),
        aut.order() * BigUint::from(aut.orbit_size),
    );
    let t2s = tau2().compose(&star());
    r.check(
        "tau1_in_autstar",
        "τ1 fixes H6",
        true,
        aut.contains(&tau1()),
    );
    r.check(
        "tau2star_in_autstar",
        "τ2* fixes H6",
        true,
        aut.contains(&t2s),
    );
    r.check(
        "star_not_in_autstar",
        "* does not fix H6",
        false,
        aut.contains(&star()),
    );
    let pair = Bsgs::new(&[tau1().to_perm36(), t2s.to_perm36()]).expect("36 points");
    let same =
        pair.order() == aut.order() && aut.bsgs.generators().iter().all(|g| pair.contains(g));
    r.check("autstar_generated", "Aut*(H6) = ⟨τ1, τ2*⟩", true, same);
    let fixed = aut
        .generators
        .iter()
        .all(|g| g.act(&h).ok() == Some(h.clone()));
    r.check(
        "generators_fix_H6",
        "stabiliser generators fix H6",
        true,
        fixed,
    );

    let lin = compute_aut_linear();
    let gens = lin.perm_generators();
    r.check("order_aut", "|Aut(H6)| = 3·360", 1080, lin.order());
    r.check(
        "aut_linear",
        "linear part has no conjugation",
        true,
        lin.generators.iter().all(|g| !g.eps()),
    );
    let derived = derived_subgroup(gens).unwrap_or_default();
    r.check(
        "aut_perfect",
        "Aut(H6) is perfect",
        1080,
        order_of(&derived),
    );
    let centre = center_of(gens).unwrap_or_default();
    r.check("aut_center_order", "|Z(Aut(H6))| = 3", 3, order_of(&centre));
    let scalar = omega_scalar().to_perm36();
    let centre_is_scalar =
        centre.len() == 1 && (centre[0] == scalar || centre[0] == scalar.inverse());
    r.check(
        "aut_center_scalar",
        "Z(Aut(H6)) = ⟨(ωI, ωI)⟩",
        true,
        centre_is_scalar,
    );
    match quotient_action(gens, &centre) {
        Ok(quotient) => {
            r.check(
                "aut_mod_center_order",
                "|Aut(H6)/Z| = 360",
                360,
                order_of(&quotient),
            );
            r.check(
                "aut_mod_center_simple",
                "Aut(H6)/Z is simple",
                true,
                is_simple_small(&quotient).unwrap_or(false),
            );
        }
        Err(e) => {
            r.push(
                "aut_mod_center_order",
                "|Aut(H6)/Z| = 360",
                "360".into(),
                e.to_string(),
                false,
            );
        }
    }

    let intertwines = lin.generators.iter().all(|g| {
        let lhs = mat_mul(&h, &g.q().to_matrix());
        let rhs = mat_mul(&g.p().to_matrix(), &h);
        lhs.is_ok() && lhs == rhs
    });
    r.check(
        "intertwining_complex",
        "H6·Q = P·H6 for each linear generator",
        true,
        intertwines,
    );
    let meet = [tau1(), t2s.clone()]
        .iter()
        .all(|g| g.act(&h).ok() == Some(h.clone()));
    r.check("pair_fixes", "τ1 and τ2* fix H6", true, meet);
    let n_meet = normal_subgroup_n();
    let n_elements =
        crate::grouptheory::enumerate_group(n_meet.bsgs.generators(), 100_000).unwrap_or_default();
    let in_both = n_elements.iter().filter(|g| aut.bsgs.contains(g)).count();
    r.check("autstar_cap_N", "|Aut*(H6) ∩ N| = 3", 3, in_both);

    r.check(
        "x_fixes",
        "x fixes H6",
        true,
        sylow_x().act(&h).ok() == Some(h.clone()),
    );
    r.check(
        "y_fixes",
        "y fixes H6",
        true,
        sylow_y().act(&h).ok() == Some(h.clone()),
    );
    r.check(
        "commutator_xy",
        "[x,y] = (ωI, ωI)",
        omega_scalar(),
        sylow_x().commutator(&sylow_y()),
    );
    r
}
