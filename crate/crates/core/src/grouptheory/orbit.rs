use std::collections::{HashMap, HashSet};
use std::hash::Hash;

use super::GroupElement;
use crate::error::{Error, Result};

/// Result of a breadth-first orbit enumeration.
#[derive(Debug, Clone)]
pub struct OrbitStabilizer<S, G> {
    /// Orbit points in discovery order; `orbit[0]` is the seed.
    pub orbit: Vec<S>,
    /// `transversal[k]` maps the seed to `orbit[k]`.
    pub transversal: Vec<G>,
    /// Kept Schreier generators `u_s·g·u_{s·g}⁻¹`.
    pub stabilizer_gens: Vec<G>,
}

impl<S, G> OrbitStabilizer<S, G> {
    pub fn orbit_size(&self) -> usize {
        self.orbit.len()
    }
}

/// Orbit of `seed` under `⟨gens⟩` and Schreier generators of its stabiliser.
///
/// `act(s, g)` must be a right action. It is spot-checked on the seed for
/// every ordered pair of generators before enumeration starts. Each distinct
/// non-identity Schreier generator is offered to `keep`, and only those for
/// which it returns `true` are recorded; `keep` is the hook callers use to
/// discard generators that already lie in the subgroup built so far.
pub fn orbit_stabilizer_with<S, G, A, K>(
    gens: &[G],
    seed: S,
    act: A,
    mut keep: K,
) -> Result<OrbitStabilizer<S, G>>
where
    S: Clone + Eq + Hash,
    G: GroupElement,
    A: Fn(&S, &G) -> S,
    K: FnMut(&G) -> bool,
{
    let first = gens.first().ok_or(Error::NoGenerators)?;
    for (i, g) in gens.iter().enumerate() {
        for (j, h) in gens.iter().enumerate() {
            if act(&act(&seed, g), h) != act(&seed, &g.op(h)) {
                return Err(Error::InconsistentAction(format!(
                    "act(act(s, g{i}), g{j}) != act(s, g{i}·g{j})"
                )));
            }
        }
    }
    let identity = first.op(&first.inv());
    let mut index: HashMap<S, usize> = HashMap::new();
    index.insert(seed.clone(), 0);
    let mut orbit = vec![seed];
    let mut transversal = vec![identity];
    let mut seen_gens: HashSet<G> = HashSet::new();
    let mut stabilizer_gens = Vec::new();

    let mut head = 0;
    while head < orbit.len() {
        let s = orbit[head].clone();
        let us = transversal[head].clone();
        head += 1;
        for g in gens {
            let t = act(&s, g);
            let usg = us.op(g);
            match index.get(&t) {
                None => {
                    index.insert(t.clone(), orbit.len());
                    orbit.push(t);
                    transversal.push(usg);
                }
                Some(&k) => {
                    let schreier = usg.op(&transversal[k].inv());
                    if schreier.is_identity() || seen_gens.contains(&schreier) {
                        continue;
                    }
                    seen_gens.insert(schreier.clone());
                    if keep(&schreier) {
                        stabilizer_gens.push(schreier);
                    }
                }
            }
        }
    }
    Ok(OrbitStabilizer {
        orbit,
        transversal,
        stabilizer_gens,
    })
}

/// Keeps every distinct non-identity Schreier generator.
pub fn orbit_stabilizer<S, G, A>(gens: &[G], seed: S, act: A) -> Result<OrbitStabilizer<S, G>>
where
    S: Clone + Eq + Hash,
    G: GroupElement,
    A: Fn(&S, &G) -> S,
{
    orbit_stabilizer_with(gens, seed, act, |_| true)
}
