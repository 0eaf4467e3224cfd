use std::collections::{BTreeMap, HashSet};
use std::sync::OnceLock;

use num_bigint::BigUint;

use super::{n_element, star, tau1, tau2, tau2prime, XElement};
use crate::exactnum::EisensteinRational;
use crate::grouptheory::GroupElement;
use crate::grouptheory::{
    action_kernel_order, check_relations, enumerate_group, orbit_stabilizer_with, s6_relators, Bsgs,
};
use crate::monomial::MonomialMatrix;
use crate::perm::Permutation;
use crate::report::Report;

fn perm_bsgs(gens: &[XElement]) -> Bsgs {
    let perms: Vec<Permutation> = gens.iter().map(XElement::to_perm36).collect();
    Bsgs::new(&perms).expect("36-point images share a degree")
}

/// `X = ⟨τ₁, τ₂, *⟩` on 36 points.
pub fn x_group() -> &'static Bsgs {
    static CELL: OnceLock<Bsgs> = OnceLock::new();
    CELL.get_or_init(|| perm_bsgs(&[tau1(), tau2(), star()]))
}

/// `X₀ = ⟨τ₁, τ₂⟩` on 36 points.
pub fn x0_group() -> &'static Bsgs {
    static CELL: OnceLock<Bsgs> = OnceLock::new();
    CELL.get_or_init(|| perm_bsgs(&[tau1(), tau2()]))
}

/// `Y = ⟨τ₁, τ₂′⟩` on 36 points.
pub fn y_group() -> Bsgs {
    perm_bsgs(&[tau1(), tau2prime()])
}

/// Phase-forgetting map from the 36 points to 12 blocks (6 row, 6 column).
fn phase_blocks() -> Vec<usize> {
    (0..36)
        .map(|p| if p < 18 { p % 6 } else { 6 + p % 6 })
        .collect()
}

/// The subgroup of `X₀` whose elements have diagonal components.
pub struct NGroup {
    pub generators: Vec<XElement>,
    pub bsgs: Bsgs,
}

/// `N` as the kernel of `X₀` acting on the underlying permutation pair,
/// from Schreier generators over that action.
pub fn normal_subgroup_n() -> &'static NGroup {
    static CELL: OnceLock<NGroup> = OnceLock::new();
    CELL.get_or_init(|| {
        let id = Permutation::identity(6);
        let mut kept_perms: Vec<Permutation> = Vec::new();
        let mut bsgs: Option<Bsgs> = None;
        let result = orbit_stabilizer_with(
            &[tau1(), tau2()],
            (id.clone(), id),
            |s: &(Permutation, Permutation), g: &XElement| {
                (s.0.then(g.p().perm()), s.1.then(g.q().perm()))
            },
            |h| {
                let p = h.to_perm36();
                if bsgs.as_ref().is_some_and(|b| b.contains(&p)) {
                    return false;
                }
                kept_perms.push(p);
                bsgs = Some(Bsgs::new(&kept_perms).expect("36 points"));
                true
            },
        )
        .expect("permutation-pair action is a right action");
        NGroup {
            generators: result.stabilizer_gens,
            bsgs: bsgs.expect("N is non-trivial"),
        }
    })
}

/// Order of the group generated by the diagonal matrices `ms`, read off
/// their action on the 18 phase-row points.
fn diagonal_group_order(ms: &[&MonomialMatrix]) -> BigUint {
    let id = MonomialMatrix::identity(6);
    let perms: Vec<Permutation> = ms
        .iter()
        .map(|&m| {
            XElement::new(m.clone(), id.clone(), false)
                .expect("degree 6")
                .to_perm18()
        })
        .chain(std::iter::once(Permutation::identity(18)))
        .collect();
    Bsgs::new(&perms).expect("18 points").order()
}

fn s6_coordinate_perms() -> &'static [Permutation] {
    static CELL: OnceLock<Vec<Permutation>> = OnceLock::new();
    CELL.get_or_init(|| {
        enumerate_group(
            &[
                "(1,2)".parse().expect("static"),
                "(1,2,3,4,5,6)".parse().expect("static"),
            ],
            1000,
        )
        .expect("S6 has 720 elements")
    })
}

/// Size of the smallest subset of `(Z/3)⁶` containing `v` that is closed
/// under coordinate permutations and addition. Entries of `v` are
/// exponents of ω.
pub fn submodule_closure_order(v: [u8; 6]) -> usize {
    let orbit: HashSet<[u8; 6]> = s6_coordinate_perms()
        .iter()
        .map(|g| {
            let mut w = [0u8; 6];
            for i in 0..6 {
                w[g.apply(i)] = v[i] % 3;
            }
            w
        })
        .collect();
    let mut span: HashSet<[u8; 6]> = HashSet::from([[0; 6]]);
    for o in &orbit {
        if span.contains(o) {
            continue;
        }
        let mut next = HashSet::new();
        for s in &span {
            for k in 0..3 {
                let mut w = *s;
                for i in 0..6 {
                    w[i] = (w[i] + k * o[i]) % 3;
                }
                next.insert(w);
            }
        }
        span = next;
    }
    span.len()
}

/// Every non-constant element of the zero-sum module `M ≅ 3⁵` generates
/// all of `M`; the non-zero constants generate a module of order 3.
pub fn m_submodule_check() -> bool {
    let mut checked = 0;
    for code in 0..729u32 {
        let mut v = [0u8; 6];
        let mut c = code;
        for x in &mut v {
            *x = (c % 3) as u8;
            c /= 3;
        }
        if v.iter().map(|&x| x as u32).sum::<u32>() % 3 != 0 {
            continue;
        }
        checked += 1;
        let constant = v.iter().all(|&x| x == v[0]);
        let expected = match (constant, v[0]) {
            (true, 0) => 1,
            (true, _) => 3,
            (false, _) => 243,
        };
        if submodule_closure_order(v) != expected {
            return false;
        }
    }
    checked == 243
}

pub fn verify_prop1() -> Report {
    let mut r = Report::new("prop1");
    let x = x_group();
    let x0 = x0_group();
    r.check("order_X", "|X| = 2·3^10·720", 85_030_560u64, x.order());
    r.check("order_X0", "|X0| = |X|/2", 42_515_280u64, x0.order());

    let blocks = phase_blocks();
    let kernel_order = action_kernel_order(x0, &blocks)
        .map(|o| o.to_string())
        .unwrap_or_else(|e| e.to_string());
    r.check(
        "order_N",
        "kernel of X0 on the 12 phase-forgetting blocks has order 3^10",
        59_049u64,
        kernel_order,
    );
    let n = normal_subgroup_n();
    r.check(
        "order_N_generated",
        "Schreier generators of the kernel generate a group of order 3^10",
        59_049u64,
        n.bsgs.order(),
    );
    r.check(
        "N_diagonal",
        "every generator of N has diagonal components",
        true,
        n.generators
            .iter()
            .all(|g| g.p().is_diagonal() && g.q().is_diagonal()),
    );
    let x_perms: Vec<Permutation> = [tau1(), tau2(), star()]
        .iter()
        .map(XElement::to_perm36)
        .collect();
    let normal = n.generators.iter().all(|h| {
        let hp = h.to_perm36();
        x_perms.iter().all(|g| n.bsgs.contains(&hp.conjugate_by(g)))
    });
    r.check("N_normal", "N is normal in X", true, normal);

    let firsts: Vec<&MonomialMatrix> = n.generators.iter().map(XElement::p).collect();
    let seconds: Vec<&MonomialMatrix> = n.generators.iter().map(XElement::q).collect();
    r.check(
        "N_proj1",
        "first projection of N has order 3^5",
        243,
        diagonal_group_order(&firsts),
    );
    r.check(
        "N_proj2",
        "second projection of N has order 3^5",
        243,
        diagonal_group_order(&seconds),
    );

    let y = y_group();
    r.check("order_Y", "|Y| = 720", 720, y.order());
    let t = tau2prime().to_perm36();
    let s = tau1().to_perm36().then(&t);
    let assignment = BTreeMap::from([('s', s), ('t', t)]);
    let relations =
        check_relations(&s6_relators(), &assignment, &Permutation::identity(36)).unwrap_or(false);
    r.check(
        "Y_relations",
        "s = τ1τ2′, t = τ2′ satisfy the S6 presentation",
        true,
        relations,
    );
    let y_elements = enumerate_group(y.generators(), 10_000).expect("720 elements");
    let meet = y_elements.iter().filter(|g| n.bsgs.contains(g)).count();
    r.check("Y_cap_N", "Y ∩ N = 1", 1, meet);

    let prod = n_element(3)
        .compose(&n_element(4).pow(2))
        .compose(&n_element(5).pow(2));
    r.check(
        "n3_n4sq_n5sq",
        "n3·n4²·n5²",
        "([1,1,1,1,w,w2], [1,1,1,1,w2,w])",
        &prod,
    );
    r.check(
        "n3_n4sq_n5sq_conj",
        "(n3·n4²·n5²)^τ2′",
        "([1,1,1,1,w,w2], [1,1,w,w2,1,1])",
        prod.conjugate_by(&tau2prime()),
    );

    let one = EisensteinRational::one();
    let dets: Vec<EisensteinRational> = [tau1(), tau2()]
        .iter()
        .flat_map(|g| [g.p().determinant(), g.q().determinant()])
        .collect();
    let rendered: Vec<String> = dets.iter().map(ToString::to_string).collect();
    r.push(
        "determinants",
        "components of τ1 and τ2 have determinant ±1",
        "each ±1".to_string(),
        rendered.join(", "),
        dets.iter().all(|d| *d == one || *d == -&one),
    );

    r.check(
        "M_submodules",
        "non-constant elements generate M; constants generate order 3",
        true,
        m_submodule_check(),
    );

    r.check(
        "perm18_tau1",
        "18-point image of τ1",
        "(2,3,4,5,6)(8,9,10,11,12)(14,15,16,17,18)",
        tau1().to_perm18(),
    );
    r.check(
        "perm18_tau2",
        "18-point image of τ2",
        "(1,2)(3,15,9)(4,10,16)(5,11,17)(6,18,12)(7,8)(13,14)",
        tau2().to_perm18(),
    );
    r.check(
        "perm18_star",
        "18-point image of *",
        "(7,13)(8,14)(9,15)(10,16)(11,17)(12,18)",
        star().to_perm18(),
    );
    let x18: Vec<Permutation> = [tau1(), tau2(), star()]
        .iter()
        .map(XElement::to_perm18)
        .collect();
    let image18 = Bsgs::new(&x18).expect("18 points").order();
    r.check(
        "kernel_18",
        "kernel of X on 18 points has order 3^5",
        243,
        x.order() / image18,
    );
    let n_elements = enumerate_group(n.bsgs.generators(), 100_000).expect("3^10 elements");
    let trivial_rows = n_elements
        .iter()
        .filter(|g| g.images()[..18].iter().enumerate().all(|(i, &x)| i == x))
        .count();
    r.check(
        "kernel_18_in_N",
        "elements of N with trivial first component number 3^5",
        243,
        trivial_rows,
    );
    r
}
