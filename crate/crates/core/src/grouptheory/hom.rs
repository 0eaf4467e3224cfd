use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A homomorphism between permutation groups, tabulated on the whole domain.
#[derive(Clone, Debug)]
pub struct GroupHom {
    domain_gens: Vec<Permutation>,
    image_gens: Vec<Permutation>,
    elements: Vec<Permutation>,
    table: HashMap<Permutation, Permutation>,
}

impl GroupHom {
    pub fn domain_gens(&self) -> &[Permutation] {
        &self.domain_gens
    }

    pub fn image_gens(&self) -> &[Permutation] {
        &self.image_gens
    }

    pub fn apply(&self, g: &Permutation) -> Option<&Permutation> {
        self.table.get(g)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Domain elements in breadth-first discovery order.
    pub fn domain(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Permutation, &Permutation)> {
        self.elements.iter().map(|g| (g, &self.table[g]))
    }

    pub fn is_injective(&self) -> bool {
        let mut images: Vec<&Permutation> = self.table.values().collect();
        images.sort_unstable();
        images.dedup();
        images.len() == self.table.len()
    }
}

/// Extends generator images to the whole domain by walking its Cayley graph.
///
/// Every edge `g → g·d_i` is checked against `T(g)·e_i`, so a returned table
/// is a homomorphism; any clash is reported as `NotHomomorphism`.
pub fn hom_closure(pairs: &[(Permutation, Permutation)], cap: usize) -> Result<GroupHom> {
    let (d0, e0) = pairs.first().ok_or(Error::NoGenerators)?;
    let (dn, en) = (d0.degree(), e0.degree());
    for (d, e) in pairs {
        if d.degree() != dn {
            return Err(Error::DegreeMismatch(dn, d.degree()));
        }
        if e.degree() != en {
            return Err(Error::DegreeMismatch(en, e.degree()));
        }
    }
    let id = Permutation::identity(dn);
    let mut table = HashMap::from([(id.clone(), Permutation::identity(en))]);
    let mut elements = vec![id];
    let mut head = 0;
    while head < elements.len() {
        let g = elements[head].clone();
        head += 1;
        let tg = table[&g].clone();
        for (d, e) in pairs {
            let h = g.then(d);
            let th = tg.then(e);
            match table.get(&h) {
                Some(existing) if *existing != th => {
                    return Err(Error::NotHomomorphism(format!(
                        "{h} is sent to both {existing} and {th}"
                    )));
                }
                Some(_) => {}
                None => {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded(cap));
                    }
                    table.insert(h.clone(), th);
                    elements.push(h);
                }
            }
        }
    }
    Ok(GroupHom {
        domain_gens: pairs.iter().map(|(d, _)| d.clone()).collect(),
        image_gens: pairs.iter().map(|(_, e)| e.clone()).collect(),
        elements,
        table,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::parse_cycles;

    fn p(s: &str) -> Permutation {
        parse_cycles(s, 6).unwrap()
    }

    #[test]
    fn identity_map_on_s6() {
        let gens = [p("(1,2)"), p("(2,3,4,5,6)")];
        let pairs: Vec<_> = gens.iter().map(|g| (g.clone(), g.clone())).collect();
        let hom = hom_closure(&pairs, 100_000).unwrap();
        assert_eq!(hom.len(), 720);
        assert!(hom.entries().all(|(g, h)| g == h));
        assert!(hom.is_injective());
    }

    #[test]
    fn two_element_domain() {
        let hom = hom_closure(&[(p("(1,2)"), p("(1,2)(3,6)(4,5)"))], 10).unwrap();
        assert_eq!(hom.len(), 2);
        assert_eq!(hom.apply(&p("(1,2)")).unwrap(), &p("(1,2)(3,6)(4,5)"));
    }

    #[test]
    fn inconsistent_images_are_rejected() {
        // a transposition cannot go to a 3-cycle
        assert!(matches!(
            hom_closure(&[(p("(1,2)"), p("(1,2,3)"))], 10),
            Err(Error::NotHomomorphism(_))
        ));
        assert!(matches!(
            hom_closure(
                &[
                    (p("(1,2)"), p("(1,2)")),
                    (p("(2,3,4,5,6)"), p("(2,3,4,5,6)"))
                ],
                100
            ),
            Err(Error::CapExceeded(100))
        ));
    }
}
