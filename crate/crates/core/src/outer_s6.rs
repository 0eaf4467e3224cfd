//! The outer automorphism of S₆ read off the two projections of
//! `Y = ⟨τ₁, τ₂′⟩`, with the synthematic totals as an independent check.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::grouptheory::{enumerate_group, hom_closure};
use crate::hadamard_aut::{tau1, tau2prime};
use crate::perm::{cycle_type, parse_cycles, Permutation};
use crate::report::Report;

/// All 720 elements of S₆, sorted.
pub fn s6_elements() -> &'static [Permutation] {
    static CELL: OnceLock<Vec<Permutation>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut all = enumerate_group(&s6_generators(), 1000).expect("720 elements");
        all.sort();
        all
    })
}

/// `(1,2)` and `(1,2,3,4,5,6)`.
pub fn s6_generators() -> [Permutation; 2] {
    [
        parse_cycles("(1,2)", 6).expect("static"),
        parse_cycles("(1,2,3,4,5,6)", 6).expect("static"),
    ]
}

/// A map S₆ → S₆ stored as a full table.
#[derive(Clone, PartialEq, Eq)]
pub struct AutoTable {
    images: HashMap<Permutation, Permutation>,
}

impl AutoTable {
    pub fn from_fn(f: impl Fn(&Permutation) -> Permutation) -> Self {
        Self {
            images: s6_elements().iter().map(|g| (g.clone(), f(g))).collect(),
        }
    }

    pub fn identity() -> Self {
        Self::from_fn(Clone::clone)
    }

    /// `g ↦ h⁻¹·g·h`.
    pub fn conjugation(h: &Permutation) -> Self {
        Self::from_fn(|g| g.conjugate_by(h))
    }

    pub fn apply(&self, g: &Permutation) -> Option<&Permutation> {
        self.images.get(g)
    }

    fn at(&self, g: &Permutation) -> &Permutation {
        &self.images[g]
    }

    /// `(g, T(g))` in the sorted order of `g`.
    pub fn entries(&self) -> Vec<(&Permutation, &Permutation)> {
        s6_elements().iter().map(|g| (g, self.at(g))).collect()
    }

    /// `g ↦ other(self(g))`.
    pub fn then(&self, other: &Self) -> Self {
        Self::from_fn(|g| other.at(self.at(g)).clone())
    }

    pub fn is_bijective(&self) -> bool {
        self.images.len() == 720 && self.images.values().collect::<BTreeSet<_>>().len() == 720
    }

    /// `T(gh) = T(g)·T(h)` over all 720² pairs.
    pub fn is_multiplicative(&self) -> bool {
        let all = s6_elements();
        all.iter().all(|g| {
            let tg = self.at(g);
            all.iter()
                .all(|h| *self.at(&g.then(h)) == tg.then(self.at(h)))
        })
    }

    /// The images of every class of equal cycle type share one cycle type.
    pub fn preserves_classes(&self) -> bool {
        let mut class_image: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        self.images.iter().all(|(g, t)| {
            let image_type = cycle_type(t);
            class_image
                .entry(cycle_type(g))
                .or_insert_with(|| image_type.clone())
                == &image_type
        })
    }
}

impl fmt::Debug for AutoTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b] = s6_generators();
        write!(
            f,
            "AutoTable {{ {a} -> {}, {b} -> {} }}",
            self.at(&a),
            self.at(&b)
        )
    }
}

/// σ from the generator pairs of `τ₁` and `τ₂′`, completed by closure.
pub fn build_outer() -> Result<AutoTable> {
    let pairs: Vec<(Permutation, Permutation)> = [tau1(), tau2prime()]
        .iter()
        .map(|g| (g.p().perm().clone(), g.q().perm().clone()))
        .collect();
    let hom = hom_closure(&pairs, 1000)?;
    if hom.len() != 720 || !hom.is_injective() {
        return Err(Error::NotHomomorphism(format!(
            "closure has {} entries and is not a bijection of S6",
            hom.len()
        )));
    }
    let table = AutoTable::from_fn(|g| hom.apply(g).expect("closure covers S6").clone());
    debug_assert!(table.is_bijective());
    Ok(table)
}

/// The conjugator `h` with `T(g) = h⁻¹·g·h` for all `g`, if there is one.
pub fn is_inner(t: &AutoTable) -> Result<Option<Permutation>> {
    if !t.is_multiplicative() {
        return Err(Error::NotHomomorphism("table is not multiplicative".into()));
    }
    Ok(compare_up_to_inner(t, &AutoTable::identity()))
}

/// Some `h` with `T1(g) = h⁻¹·T2(g)·h` for all `g`. Both tables must be
/// automorphisms, so agreement on generators suffices.
pub fn compare_up_to_inner(t1: &AutoTable, t2: &AutoTable) -> Option<Permutation> {
    let gens = s6_generators();
    s6_elements()
        .iter()
        .find(|h| gens.iter().all(|g| *t1.at(g) == t2.at(g).conjugate_by(h)))
        .cloned()
}

/// A 2-subset `{a, b}` with `a < b`, 1-based.
pub type Duad = (usize, usize);

/// Three disjoint duads covering `{1..6}`, sorted.
pub type Syntheme = [Duad; 3];

/// Five synthemes sharing no duad; together they cover all 15 duads.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SynthematicTotal {
    pub synthemes: [Syntheme; 5],
}

impl SynthematicTotal {
    fn image(&self, g: &Permutation) -> Self {
        let mut synthemes = self.synthemes.map(|s| map_syntheme(&s, g));
        synthemes.sort();
        Self { synthemes }
    }

    pub fn duads(&self) -> BTreeSet<Duad> {
        self.synthemes.iter().flatten().copied().collect()
    }
}

impl fmt::Display for SynthematicTotal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .synthemes
            .iter()
            .map(|s| {
                s.iter()
                    .map(|(a, b)| format!("{a}{b}"))
                    .collect::<Vec<_>>()
                    .join("|")
            })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

fn map_syntheme(s: &Syntheme, g: &Permutation) -> Syntheme {
    let mut out = s.map(|(a, b)| {
        let (x, y) = (g.apply(a - 1) + 1, g.apply(b - 1) + 1);
        (x.min(y), x.max(y))
    });
    out.sort();
    out
}

/// The 15 perfect matchings of `{1..6}`, sorted.
pub fn synthemes() -> Vec<Syntheme> {
    let mut out = Vec::new();
    for b in 2..=6 {
        let rest: Vec<usize> = (2..=6).filter(|&x| x != b).collect();
        // match rest[0] with each of the remaining three
        for k in 1..4 {
            let others: Vec<usize> = rest[1..]
                .iter()
                .copied()
                .filter(|&x| x != rest[k])
                .collect();
            let mut s = [(1, b), (rest[0], rest[k]), (others[0], others[1])];
            s.sort();
            out.push(s);
        }
    }
    out.sort();
    out
}

/// The 6 synthematic totals, sorted.
pub fn sylvester_totals() -> Vec<SynthematicTotal> {
    let all = synthemes();
    let mut totals = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    extend_totals(&all, 0, &mut chosen, &mut totals);
    totals.sort();
    totals
}

fn extend_totals(
    all: &[Syntheme],
    start: usize,
    chosen: &mut Vec<usize>,
    out: &mut Vec<SynthematicTotal>,
) {
    if chosen.len() == 5 {
        let mut synthemes = [[(0, 0); 3]; 5];
        for (slot, &i) in synthemes.iter_mut().zip(chosen.iter()) {
            *slot = all[i];
        }
        out.push(SynthematicTotal { synthemes });
        return;
    }
    for i in start..all.len() {
        let clash = chosen
            .iter()
            .any(|&j| all[j].iter().any(|d| all[i].contains(d)));
        if !clash {
            chosen.push(i);
            extend_totals(all, i + 1, chosen, out);
            chosen.pop();
        }
    }
}

/// S₆ acting on the six totals, relabelled as points `1..6` in sorted order.
pub fn totals_outer() -> Result<AutoTable> {
    let totals = sylvester_totals();
    let index: HashMap<&SynthematicTotal, usize> =
        totals.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut table = HashMap::new();
    for g in s6_elements() {
        let images = totals
            .iter()
            .map(|t| {
                index.get(&t.image(g)).copied().ok_or_else(|| {
                    Error::InconsistentAction(format!("{g} does not permute the totals"))
                })
            })
            .collect::<Result<Vec<usize>>>()?;
        table.insert(g.clone(), Permutation::from_images(images)?);
    }
    let t = AutoTable { images: table };
    if !t.is_bijective() || !t.is_multiplicative() {
        return Err(Error::NotHomomorphism(
            "action on totals is not an automorphism".into(),
        ));
    }
    Ok(t)
}

pub fn verify_outer() -> Report {
    let mut r = Report::new("outer");
    let sigma = match build_outer() {
        Ok(t) => t,
        Err(e) => {
            r.push(
                "build_outer",
                "σ extends to S6",
                "table".into(),
                e.to_string(),
                false,
            );
            return r;
        }
    };
    r.check(
        "bijective",
        "σ is a bijection of S6",
        true,
        sigma.is_bijective(),
    );
    r.check(
        "multiplicative",
        "σ(gh) = σ(g)σ(h) for all 720² pairs",
        true,
        sigma.is_multiplicative(),
    );
    let at = |s: &str| {
        sigma
            .apply(&parse_cycles(s, 6).expect("static"))
            .map_or("missing".to_string(), ToString::to_string)
    };
    r.check("sigma_12", "σ((1,2))", "(1,2)(3,6)(4,5)", at("(1,2)"));
    r.check(
        "sigma_23456",
        "σ((2,3,4,5,6))",
        "(2,3,4,5,6)",
        at("(2,3,4,5,6)"),
    );
    r.check(
        "sigma_123456",
        "σ((1,2,3,4,5,6))",
        "(1,2,6)(3,5)",
        at("(1,2,3,4,5,6)"),
    );
    let inner = is_inner(&sigma).map(|h| h.map_or("none".to_string(), |h| h.to_string()));
    r.check(
        "sigma_outer",
        "σ is not inner",
        "none",
        inner.unwrap_or_else(|e| e.to_string()),
    );
    r.check(
        "sigma_classes",
        "σ maps each conjugacy class onto one class",
        true,
        sigma.preserves_classes(),
    );
    let square = sigma.then(&sigma);
    r.check(
        "sigma_squared_inner",
        "σ² is inner",
        true,
        is_inner(&square).is_ok_and(|h| h.is_some()),
    );

    let totals = sylvester_totals();
    r.check("synthemes", "number of synthemes", 15, synthemes().len());
    r.check("totals", "number of synthematic totals", 6, totals.len());
    r.check(
        "totals_cover",
        "each total covers the 15 duads once",
        true,
        totals.iter().all(|t| t.duads().len() == 15),
    );
    match totals_outer() {
        Ok(t) => {
            r.check(
                "totals_outer",
                "S6 on the totals is not inner",
                "none",
                is_inner(&t)
                    .map(|h| h.map_or("none".to_string(), |h| h.to_string()))
                    .unwrap_or_else(|e| e.to_string()),
            );
            r.check(
                "sigma_vs_totals",
                "σ and the totals action differ by an inner automorphism",
                true,
                compare_up_to_inner(&sigma, &t).is_some(),
            );
        }
        Err(e) => {
            r.push(
                "totals_outer",
                "S6 permutes the totals",
                "table".into(),
                e.to_string(),
                false,
            );
        }
    }
    r
}
