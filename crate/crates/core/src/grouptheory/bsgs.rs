use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    point: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(point: usize, degree: usize) -> Self {
        let mut level = Self {
            point,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: vec![None; degree],
        };
        level.rebuild();
        level
    }

    /// FIFO breadth-first orbit, generators in insertion order.
    fn rebuild(&mut self) {
        let degree = self.transversal.len();
        self.transversal = vec![None; degree];
        self.transversal[self.point] = Some(Permutation::identity(degree));
        self.orbit = vec![self.point];
        let mut head = 0;
        while head < self.orbit.len() {
            let x = self.orbit[head];
            head += 1;
            for g in &self.gens {
                let y = g.apply(x);
                if self.transversal[y].is_none() {
                    let u = self.transversal[x].as_ref().expect("orbit point").then(g);
                    self.transversal[y] = Some(u);
                    self.orbit.push(y);
                }
            }
        }
    }
}

/// Base and strong generating set, built by deterministic Schreier–Sims.
#[derive(Clone, Debug)]
pub struct Bsgs {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
}

impl Bsgs {
    pub fn new(gens: &[Permutation]) -> Result<Self> {
        let first = gens.first().ok_or(Error::NoGenerators)?;
        let degree = first.degree();
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch(degree, g.degree()));
        }
        let mut bsgs = Self {
            degree,
            generators: gens.to_vec(),
            levels: Vec::new(),
        };
        let nontrivial: Vec<Permutation> =
            gens.iter().filter(|g| !g.is_identity()).cloned().collect();

        // Initial base: smallest point moved by each generator not yet
        // fixing the base pointwise.
        for g in &nontrivial {
            if bsgs.levels.iter().all(|l| g.apply(l.point) == l.point) {
                let p = g.first_moved().expect("non-identity");
                bsgs.levels.push(Level::new(p, degree));
            }
        }
        for i in 0..bsgs.levels.len() {
            let fixed: Vec<usize> = bsgs.levels[..i].iter().map(|l| l.point).collect();
            bsgs.levels[i].gens = nontrivial
                .iter()
                .filter(|g| fixed.iter().all(|&b| g.apply(b) == b))
                .cloned()
                .collect();
            bsgs.levels[i].rebuild();
        }
        bsgs.schreier_sims();
        Ok(bsgs)
    }

    fn schreier_sims(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        'levels: while i >= 0 {
            let lvl = i as usize;
            let orbit = self.levels[lvl].orbit.clone();
            let gens = self.levels[lvl].gens.clone();
            for &x in &orbit {
                let ux = self.levels[lvl].transversal[x]
                    .clone()
                    .expect("orbit point");
                for s in &gens {
                    let y = s.apply(x);
                    let uy = self.levels[lvl].transversal[y]
                        .as_ref()
                        .expect("orbit point");
                    let h = ux.then(s).then(&uy.inverse());
                    if h.is_identity() {
                        continue;
                    }
                    let (residue, j) = self.strip(&h, lvl + 1);
                    if j < self.levels.len() || !residue.is_identity() {
                        if j == self.levels.len() {
                            let p = residue.first_moved().expect("non-identity residue");
                            self.levels.push(Level::new(p, self.degree));
                        }
                        for l in lvl + 1..=j {
                            self.levels[l].gens.push(residue.clone());
                            self.levels[l].rebuild();
                        }
                        i = j as isize;
                        continue 'levels;
                    }
                }
            }
            i -= 1;
        }
    }

    /// Sifts `g` from `level` downwards; returns the residue and the level
    /// at which sifting stopped (`levels.len()` if it went all the way).
    fn strip(&self, g: &Permutation, level: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, l) in self.levels.iter().enumerate().skip(level) {
            let x = h.apply(l.point);
            match &l.transversal[x] {
                Some(u) => h = h.then(&u.inverse()),
                None => return (h, i),
            }
        }
        (h, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// 0-based base points.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, j) = self.strip(g, 0);
        j == self.levels.len() && residue.is_identity()
    }

    pub fn membership(&self, g: &Permutation) -> Result<bool> {
        if g.degree() != self.degree {
            return Err(Error::DegreeMismatch(self.degree, g.degree()));
        }
        Ok(self.contains(g))
    }

    pub fn is_trivial(&self) -> bool {
        self.levels.is_empty()
    }
}

pub fn bsgs_build(gens: &[Permutation]) -> Result<Bsgs> {
    Bsgs::new(gens)
}

pub fn group_order(b: &Bsgs) -> BigUint {
    b.order()
}

pub fn membership(b: &Bsgs, g: &Permutation) -> Result<bool> {
    b.membership(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grouptheory::enumerate_group;
    use crate::perm::parse_cycles;

    fn p(s: &str, n: usize) -> Permutation {
        parse_cycles(s, n).unwrap()
    }

    #[test]
    fn small_orders() {
        assert_eq!(bsgs_build(&[p("(1,2,3)", 3)]).unwrap().order(), 3u32.into());
        assert_eq!(bsgs_build(&[p("(1,2)", 6)]).unwrap().order(), 2u32.into());
        let s6 = bsgs_build(&[p("(2,3,4,5,6)", 6), p("(1,2)", 6)]).unwrap();
        assert_eq!(s6.order(), 720u32.into());
        let oracle = enumerate_group(&[p("(2,3,4,5,6)", 6), p("(1,2)", 6)], 10_000).unwrap();
        assert_eq!(oracle.len(), 720);
        assert_eq!(s6.orbit_lengths().iter().product::<usize>(), 720);
    }

    #[test]
    fn membership_examples() {
        let c3 = bsgs_build(&[p("(1,2,3)", 3)]).unwrap();
        assert!(!membership(&c3, &p("(1,2)", 3)).unwrap());
        assert!(membership(&c3, &p("(1,3,2)", 3)).unwrap());
        assert!(membership(&c3, &Permutation::identity(3)).unwrap());
        assert!(matches!(
            membership(&c3, &Permutation::identity(4)),
            Err(Error::DegreeMismatch(3, 4))
        ));
    }

    #[test]
    fn degree_and_emptiness_errors() {
        assert!(matches!(bsgs_build(&[]), Err(Error::NoGenerators)));
        assert!(matches!(
            bsgs_build(&[p("(1,2)", 3), p("(1,2)", 4)]),
            Err(Error::DegreeMismatch(3, 4))
        ));
        let trivial = bsgs_build(&[Permutation::identity(5)]).unwrap();
        assert!(trivial.is_trivial());
        assert_eq!(trivial.order(), 1u32.into());
    }

    #[test]
    fn larger_groups_match_known_orders() {
        // M11 on 11 points
        let m11 = bsgs_build(&[
            p("(1,2,3,4,5,6,7,8,9,10,11)", 11),
            p("(3,7,11,8)(4,10,5,6)", 11),
        ])
        .unwrap();
        assert_eq!(m11.order(), 7920u32.into());
        // A8 inside S8
        let a8 = bsgs_build(&[p("(1,2,3)", 8), p("(2,3,4,5,6,7,8)", 8)]).unwrap();
        assert_eq!(a8.order(), 20160u32.into());
        assert!(!a8.contains(&p("(1,2)", 8)));
    }

    #[test]
    fn deterministic_base() {
        let gens = [p("(2,3,4,5,6)", 6), p("(1,2)", 6)];
        let a = bsgs_build(&gens).unwrap();
        let b = bsgs_build(&gens).unwrap();
        assert_eq!(a.base(), b.base());
        assert_eq!(a.strong_generators(), b.strong_generators());
        assert_eq!(a.base()[0], 1);
    }
}
