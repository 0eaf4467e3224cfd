use std::collections::{HashMap, HashSet};

use num_bigint::BigUint;

use super::{orbit_stabilizer_with, Bsgs};
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Default element cap for routines that enumerate a whole group.
pub const ENUMERATION_CAP: usize = 1_000_000;

/// All elements of `⟨gens⟩` by breadth-first closure, identity first.
pub fn enumerate_group(gens: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let degree = gens.first().ok_or(Error::NoGenerators)?.degree();
    let id = Permutation::identity(degree);
    let mut seen = HashSet::from([id.clone()]);
    let mut elements = vec![id];
    let mut head = 0;
    while head < elements.len() {
        let g = elements[head].clone();
        head += 1;
        for s in gens {
            let h = g.compose(s)?;
            if seen.insert(h.clone()) {
                if elements.len() >= cap {
                    return Err(Error::CapExceeded(cap));
                }
                elements.push(h);
            }
        }
    }
    Ok(elements)
}

fn bsgs_or_trivial(gens: &[Permutation], degree: usize) -> Bsgs {
    if gens.is_empty() {
        Bsgs::new(&[Permutation::identity(degree)]).expect("identity generator")
    } else {
        Bsgs::new(gens).expect("common degree")
    }
}

/// Greedy irredundant subsequence: an element is kept only if it is not in
/// the group generated by those kept before it.
pub fn reduce_generators<'a, I>(candidates: I) -> Vec<Permutation>
where
    I: IntoIterator<Item = &'a Permutation>,
{
    let mut kept: Vec<Permutation> = Vec::new();
    let mut bsgs: Option<Bsgs> = None;
    for g in candidates {
        if g.is_identity() || bsgs.as_ref().is_some_and(|b| b.contains(g)) {
            continue;
        }
        kept.push(g.clone());
        bsgs = Some(Bsgs::new(&kept).expect("common degree"));
    }
    kept
}

/// Generators of the normal closure of `subset` in `⟨gens⟩`.
pub fn normal_closure(subset: &[Permutation], gens: &[Permutation]) -> Result<Vec<Permutation>> {
    let degree = gens.first().ok_or(Error::NoGenerators)?.degree();
    let mut closure = reduce_generators(subset);
    let mut bsgs = bsgs_or_trivial(&closure, degree);
    let mut i = 0;
    while i < closure.len() {
        let h = closure[i].clone();
        for g in gens {
            let c = g.inverse().compose(&h)?.then(g);
            if !bsgs.contains(&c) {
                closure.push(c);
                bsgs = Bsgs::new(&closure)?;
            }
        }
        i += 1;
    }
    Ok(closure)
}

/// Generators of `[G, G]`: the normal closure of the generator commutators.
pub fn derived_subgroup(gens: &[Permutation]) -> Result<Vec<Permutation>> {
    let mut comms = Vec::new();
    for (i, a) in gens.iter().enumerate() {
        for b in &gens[i + 1..] {
            comms.push(a.commutator(b));
        }
    }
    normal_closure(&comms, gens)
}

/// Generators of `Z(⟨gens⟩)`, by enumeration (at most [`ENUMERATION_CAP`]
/// elements). Empty for a trivial centre.
pub fn center_of(gens: &[Permutation]) -> Result<Vec<Permutation>> {
    let elements = enumerate_group(gens, ENUMERATION_CAP)?;
    let central: Vec<Permutation> = elements
        .into_iter()
        .filter(|z| gens.iter().all(|g| z.then(g) == g.then(z)))
        .collect();
    Ok(reduce_generators(&central))
}

/// Simplicity by brute force: every non-identity conjugacy class must
/// normally generate the whole group.
pub fn is_simple_small(gens: &[Permutation]) -> Result<bool> {
    let elements = enumerate_group(gens, ENUMERATION_CAP)?;
    if elements.len() == 1 {
        return Ok(false);
    }
    let order = BigUint::from(elements.len());
    let mut classified: HashSet<Permutation> = HashSet::new();
    for g in &elements {
        if classified.contains(g) {
            continue;
        }
        // conjugacy class of g
        let mut class = vec![g.clone()];
        classified.insert(g.clone());
        let mut head = 0;
        while head < class.len() {
            let x = class[head].clone();
            head += 1;
            for s in gens {
                let y = x.conjugate_by(s);
                if classified.insert(y.clone()) {
                    class.push(y);
                }
            }
        }
        if g.is_identity() {
            continue;
        }
        let closure = normal_closure(std::slice::from_ref(g), gens)?;
        if Bsgs::new(&closure)?.order() != order {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Generators of `⟨gens⟩/⟨normal_gens⟩` acting on the right cosets.
/// Fails with `NotHomomorphism` if the subgroup is not normal.
pub fn quotient_action(
    gens: &[Permutation],
    normal_gens: &[Permutation],
) -> Result<Vec<Permutation>> {
    let degree = gens.first().ok_or(Error::NoGenerators)?.degree();
    let normal_bsgs = bsgs_or_trivial(normal_gens, degree);
    for n in normal_gens {
        for g in gens {
            if !normal_bsgs.contains(&n.conjugate_by(g)) {
                return Err(Error::NotHomomorphism(format!(
                    "{n} conjugated by {g} leaves the subgroup"
                )));
            }
        }
    }
    let elements = enumerate_group(gens, ENUMERATION_CAP)?;
    let normal_elements = if normal_gens.is_empty() {
        vec![Permutation::identity(degree)]
    } else {
        enumerate_group(normal_gens, ENUMERATION_CAP)?
    };
    let mut coset_of: HashMap<Permutation, usize> = HashMap::new();
    let mut reps: Vec<Permutation> = Vec::new();
    for g in &elements {
        if coset_of.contains_key(g) {
            continue;
        }
        for n in &normal_elements {
            coset_of.insert(n.then(g), reps.len());
        }
        reps.push(g.clone());
    }
    gens.iter()
        .map(|s| Permutation::from_images(reps.iter().map(|r| coset_of[&r.then(s)]).collect()))
        .collect()
}

/// Action of the generators on blocks, where `block_of[p]` names the block
/// of point `p` (blocks numbered `0..k`).
pub fn induced_block_action(gens: &[Permutation], block_of: &[usize]) -> Result<Vec<Permutation>> {
    let nblocks = block_of.iter().max().map_or(0, |m| m + 1);
    gens.iter()
        .enumerate()
        .map(|(i, g)| {
            if g.degree() != block_of.len() {
                return Err(Error::DegreeMismatch(block_of.len(), g.degree()));
            }
            let mut image: Vec<Option<usize>> = vec![None; nblocks];
            for (p, &b) in block_of.iter().enumerate() {
                let target = block_of[g.apply(p)];
                match image[b] {
                    Some(t) if t != target => return Err(Error::BlocksNotPreserved(i)),
                    _ => image[b] = Some(target),
                }
            }
            let images = image
                .into_iter()
                .map(|x| x.ok_or(Error::BlocksNotPreserved(i)))
                .collect::<Result<Vec<_>>>()?;
            Permutation::from_images(images).map_err(|_| Error::BlocksNotPreserved(i))
        })
        .collect()
}

/// Order of the kernel of the induced action on blocks: `|G| / |image|`.
pub fn action_kernel_order(group: &Bsgs, block_of: &[usize]) -> Result<BigUint> {
    let image = induced_block_action(group.generators(), block_of)?;
    let image_order = Bsgs::new(&image)?.order();
    Ok(group.order() / image_order)
}

/// Generators of the kernel of the induced block action, as Schreier
/// generators of the regular action on the image group.
pub fn action_kernel_generators(
    gens: &[Permutation],
    block_of: &[usize],
) -> Result<Vec<Permutation>> {
    let images = induced_block_action(gens, block_of)?;
    let image_of: HashMap<&Permutation, &Permutation> = gens.iter().zip(&images).collect();
    let nblocks = images[0].degree();
    let block_image = |g: &Permutation| -> Permutation {
        match image_of.get(g) {
            Some(&img) => img.clone(),
            None => induced_block_action(std::slice::from_ref(g), block_of)
                .expect("blocks preserved by the group")
                .remove(0),
        }
    };
    let mut kernel: Vec<Permutation> = Vec::new();
    let mut kernel_bsgs: Option<Bsgs> = None;
    orbit_stabilizer_with(
        gens,
        Permutation::identity(nblocks),
        |state, g| state.then(&block_image(g)),
        |h| {
            if kernel_bsgs.as_ref().is_some_and(|b| b.contains(h)) {
                return false;
            }
            kernel.push(h.clone());
            kernel_bsgs = Some(Bsgs::new(&kernel).expect("common degree"));
            false
        },
    )?;
    Ok(kernel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    fn p(s: &str, n: usize) -> Permutation {
        parse_cycles(s, n).unwrap()
    }

    fn order(gens: &[Permutation]) -> BigUint {
        if gens.is_empty() {
            return 1u32.into();
        }
        Bsgs::new(gens).unwrap().order()
    }

    #[test]
    fn derived_subgroup_of_s3_is_a3() {
        let d = derived_subgroup(&[p("(1,2)", 3), p("(1,2,3)", 3)]).unwrap();
        assert_eq!(order(&d), 3u32.into());
        let d6 = derived_subgroup(&[p("(1,2)", 6), p("(2,3,4,5,6)", 6)]).unwrap();
        assert_eq!(order(&d6), 360u32.into());
    }

    #[test]
    fn derived_subgroup_is_normal() {
        let gens = [p("(1,2)", 5), p("(1,2,3,4,5)", 5)];
        let d = derived_subgroup(&gens).unwrap();
        let b = Bsgs::new(&d).unwrap();
        for g in enumerate_group(&gens, 1000).unwrap().iter().step_by(7) {
            for h in &d {
                assert!(b.contains(&h.conjugate_by(g)));
            }
        }
    }

    #[test]
    fn centres() {
        // D4 on 4 points has centre generated by (1,3)(2,4)
        let d4 = [p("(1,2,3,4)", 4), p("(1,3)", 4)];
        let z = center_of(&d4).unwrap();
        assert_eq!(z, vec![p("(1,3)(2,4)", 4)]);
        assert!(center_of(&[p("(1,2)", 3), p("(1,2,3)", 3)])
            .unwrap()
            .is_empty());
    }

    #[test]
    fn simplicity() {
        let a5 = [p("(1,2,3)", 5), p("(1,2,3,4,5)", 5)];
        assert!(is_simple_small(&a5).unwrap());
        let s5 = [p("(1,2)", 5), p("(1,2,3,4,5)", 5)];
        assert!(!is_simple_small(&s5).unwrap());
        assert!(is_simple_small(&[p("(1,2,3)", 3)]).unwrap());
        assert!(!is_simple_small(&[Permutation::identity(3)]).unwrap());
    }

    #[test]
    fn quotient_by_centre() {
        let d4 = [p("(1,2,3,4)", 4), p("(1,3)", 4)];
        let z = center_of(&d4).unwrap();
        let q = quotient_action(&d4, &z).unwrap();
        assert_eq!(q[0].degree(), 4);
        assert_eq!(order(&q), 4u32.into());
        // not normal
        assert!(quotient_action(&d4, &[p("(1,3)", 4)]).is_err());
    }

    #[test]
    fn kernel_orders() {
        // S3 x S3 on 6 points acting on the two blocks {1,2,3},{4,5,6}
        let gens = [
            p("(1,2)", 6),
            p("(1,2,3)", 6),
            p("(4,5)", 6),
            p("(1,4)(2,5)(3,6)", 6),
        ];
        let b = Bsgs::new(&gens).unwrap();
        let blocks = [0, 0, 0, 1, 1, 1];
        assert_eq!(action_kernel_order(&b, &blocks).unwrap(), 36u32.into());
        let kernel = action_kernel_generators(&gens, &blocks).unwrap();
        assert_eq!(order(&kernel), 36u32.into());
        // singleton blocks: faithful
        let singletons: Vec<usize> = (0..6).collect();
        assert_eq!(action_kernel_order(&b, &singletons).unwrap(), 1u32.into());
        // not a block system
        assert!(matches!(
            action_kernel_order(&b, &[0, 0, 1, 1, 2, 2]),
            Err(Error::BlocksNotPreserved(_))
        ));
    }

    #[test]
    fn enumeration_cap() {
        let s6 = [p("(1,2)", 6), p("(2,3,4,5,6)", 6)];
        assert!(matches!(
            enumerate_group(&s6, 100),
            Err(Error::CapExceeded(100))
        ));
    }
}
