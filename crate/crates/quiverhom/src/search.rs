//! Deterministic candidate enumeration and counterexample hunts.
//!
//! The candidate grammar walks, in a fixed order: all simple modules, all
//! indecomposable projectives, all cyclic quotients of each projective by
//! subsets of its length-one basis paths, then radicals, tops and
//! socle-quotients of the projectives, and finally first and second syzygies
//! of everything collected so far. Zero modules are skipped and candidates
//! are deduplicated by a cheap fingerprint (dimension vector plus hom counts
//! against the simples); the fingerprint is not an isomorphism test, so
//! distinct candidates may still be isomorphic.
//!
//! Hunts evaluate every candidate independently and report witnesses in
//! candidate order, so identical inputs always produce identical output.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::algebra::{BoundQuiverAlgebra, Path};
use crate::homalg::{
    ext_module, is_reflexive, is_torsionless, is_two_reflexive, syzygy, ExtReport,
    TwoReflexiveVerdict,
};
use crate::module::{hom_basis, Module, Side};

/// A candidate module together with the recipe that produced it.
#[derive(Clone)]
pub struct Candidate {
    pub module: Module,
    pub recipe: String,
}

/// The deduplicated candidate list for one algebra and side.
pub struct CandidateSet {
    pub algebra: Arc<BoundQuiverAlgebra>,
    pub side: Side,
    pub candidates: Vec<Candidate>,
}

/// Verdicts attached to a hunt witness.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct Verdicts {
    pub torsionless: bool,
    pub reflexive: bool,
    pub two_reflexive: TwoReflexiveVerdict,
}

/// A module found by a hunt, with its `Ext^2(-, R)` report and verdicts.
pub struct Witness {
    pub recipe: String,
    pub module: Module,
    pub ext2: ExtReport,
    pub verdicts: Verdicts,
}

pub type Fingerprint = (Vec<usize>, Vec<(usize, usize)>);

/// Dimension vector plus the sorted multiset of per-simple hom counts
/// `(dim Hom(M, S_v), dim Hom(S_v, M))`. Cheap dedup key, not an
/// isomorphism invariant refinement.
pub fn fingerprint(m: &Module) -> Fingerprint {
    let algebra = m.algebra();
    let mut pairs: Vec<(usize, usize)> = (0..algebra.quiver().vertex_count())
        .map(|v| {
            let s = Module::simple(algebra, v, m.side()).expect("vertex exists");
            let to_simple = hom_basis(m, &s).expect("same algebra and side").len();
            let from_simple = hom_basis(&s, m).expect("same algebra and side").len();
            (to_simple, from_simple)
        })
        .collect();
    pairs.sort_unstable();
    (m.dims().as_slice().to_vec(), pairs)
}

fn render_kill_list(algebra: &BoundQuiverAlgebra, kill: &[Path]) -> String {
    let mut out = String::from("[");
    for (i, p) in kill.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        let _ = write!(out, "{}", p.display(algebra.quiver()));
    }
    out.push(']');
    out
}

/// Enumerates candidates in the fixed grammar order, deduplicating by
/// fingerprint and truncating once `budget` candidates have been kept.
pub fn enumerate_candidates(
    algebra: &Arc<BoundQuiverAlgebra>,
    side: Side,
    budget: usize,
) -> CandidateSet {
    let quiver = algebra.quiver();
    let mut seen: alloc::collections::BTreeSet<Fingerprint> = alloc::collections::BTreeSet::new();
    let mut candidates: Vec<Candidate> = Vec::new();
    let push = |candidates: &mut Vec<Candidate>,
                    seen: &mut alloc::collections::BTreeSet<Fingerprint>,
                    module: Module,
                    recipe: String| {
        if candidates.len() >= budget || module.is_zero() {
            return;
        }
        if seen.insert(fingerprint(&module)) {
            candidates.push(Candidate { module, recipe });
        }
    };

    for v in 0..quiver.vertex_count() {
        let m = Module::simple(algebra, v, side).expect("vertex exists");
        push(&mut candidates, &mut seen, m, format!("simple {}", quiver.vertex_label(v)));
    }
    for v in 0..quiver.vertex_count() {
        let m = Module::projective(algebra, v, side).expect("vertex exists");
        push(&mut candidates, &mut seen, m, format!("projective {}", quiver.vertex_label(v)));
    }
    for v in 0..quiver.vertex_count() {
        // length-one basis paths anchored at v on the generator side
        let anchored: Vec<Path> = algebra
            .basis()
            .iter()
            .filter(|p| {
                p.len() == 1
                    && match side {
                        Side::Right => p.source() == v,
                        Side::Left => p.target() == v,
                    }
            })
            .cloned()
            .collect();
        for mask in 0u32..(1 << anchored.len()) {
            let kill: Vec<Path> = anchored
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, p)| p.clone())
                .collect();
            let m = Module::cyclic_quotient(algebra, v, side, &kill)
                .expect("anchored basis paths are valid kill paths");
            let recipe = format!(
                "cyclic_quotient {} kill {}",
                quiver.vertex_label(v),
                render_kill_list(algebra, &kill)
            );
            push(&mut candidates, &mut seen, m, recipe);
        }
    }
    for v in 0..quiver.vertex_count() {
        let p = Module::projective(algebra, v, side).expect("vertex exists");
        let label = quiver.vertex_label(v);
        push(
            &mut candidates,
            &mut seen,
            p.radical().0,
            format!("radical projective {label}"),
        );
        push(&mut candidates, &mut seen, p.top().0, format!("top projective {label}"));
        push(
            &mut candidates,
            &mut seen,
            p.socle().1.cokernel().0,
            format!("socle_quotient projective {label}"),
        );
    }
    for k in 1..=2usize {
        let base: Vec<Candidate> = candidates.clone();
        for c in &base {
            let m = syzygy(&c.module, k).expect("small syzygy degrees are below the cap");
            push(
                &mut candidates,
                &mut seen,
                m,
                format!("syzygy {k} of {}", c.recipe),
            );
        }
    }
    CandidateSet { algebra: Arc::clone(algebra), side, candidates }
}

fn verdicts_for(module: &Module) -> Verdicts {
    Verdicts {
        torsionless: is_torsionless(module),
        reflexive: is_reflexive(module).expect("reflexivity criteria agree"),
        two_reflexive: is_two_reflexive(module),
    }
}

fn witness_for(candidate: &Candidate) -> Witness {
    Witness {
        recipe: candidate.recipe.clone(),
        module: candidate.module.clone(),
        ext2: ext_module(&candidate.module, 2).expect("degree 2 is below the cap"),
        verdicts: verdicts_for(&candidate.module),
    }
}

/// All candidates whose `Ext^2(M, R)` is nonzero and projective.
pub fn hunt_ext2_projective(set: &CandidateSet) -> Vec<Witness> {
    set.candidates
        .iter()
        .filter(|c| {
            let ext2 = ext_module(&c.module, 2).expect("degree 2 is below the cap");
            !ext2.is_zero && ext2.is_projective
        })
        .map(witness_for)
        .collect()
}

/// All candidates that are 2-reflexive but not reflexive.
pub fn hunt_2reflexive_not_reflexive(set: &CandidateSet) -> Vec<Witness> {
    set.candidates
        .iter()
        .map(witness_for)
        .filter(|w| {
            w.verdicts.two_reflexive == TwoReflexiveVerdict::TwoReflexive && !w.verdicts.reflexive
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;
    use crate::presets;

    #[test]
    fn paper_candidates_contain_the_named_modules() {
        let alg = presets::paper_algebra(FieldSpec::rational());
        let set = enumerate_candidates(&alg, Side::Right, 100);
        let recipes: Vec<&str> = set.candidates.iter().map(|c| c.recipe.as_str()).collect();
        for v in 1..=4 {
            assert!(recipes.contains(&format!("simple {v}").as_str()));
        }
        // projective 4 coincides with simple 4 and is deduplicated
        for v in 1..=3 {
            assert!(recipes.contains(&format!("projective {v}").as_str()));
        }
        assert_eq!(
            Module::projective(&alg, 3, Side::Right).unwrap(),
            Module::simple(&alg, 3, Side::Right).unwrap()
        );
        let n = set
            .candidates
            .iter()
            .find(|c| c.recipe == "cyclic_quotient 1 kill [a]")
            .expect("the quotient killing a is enumerated");
        assert_eq!(n.module.dims().as_slice(), &[1, 0, 1, 0]);
        assert_eq!(n.module, presets::module_n(&alg));
    }

    #[test]
    fn trivial_algebras_enumerate_tightly() {
        let q = crate::algebra::Quiver::new(vec!["1".into()], vec![]).unwrap();
        let rel = crate::algebra::RelationSet::radical_square(&q);
        let alg = alloc::sync::Arc::new(
            crate::algebra::BoundQuiverAlgebra::build(FieldSpec::rational(), q, rel).unwrap(),
        );
        let set = enumerate_candidates(&alg, Side::Right, 100);
        // the simple and the projective coincide; nothing else survives dedup
        assert_eq!(set.candidates.len(), 1);
        assert_eq!(set.candidates[0].recipe, "simple 1");

        let duals = presets::dual_numbers(FieldSpec::rational());
        let set = enumerate_candidates(&duals, Side::Right, 100);
        let recipes: Vec<&str> = set.candidates.iter().map(|c| c.recipe.as_str()).collect();
        assert_eq!(recipes, ["simple 1", "projective 1"]);
    }

    #[test]
    fn budget_truncates() {
        let alg = presets::paper_algebra(FieldSpec::rational());
        assert!(enumerate_candidates(&alg, Side::Right, 0).candidates.is_empty());
        assert_eq!(enumerate_candidates(&alg, Side::Right, 3).candidates.len(), 3);
    }

    #[test]
    fn hunts_on_the_paper_algebra() {
        let alg = presets::paper_algebra(FieldSpec::rational());
        let set = enumerate_candidates(&alg, Side::Right, 100);

        let ext2 = hunt_ext2_projective(&set);
        assert!(ext2.iter().any(|w| w.recipe == "cyclic_quotient 1 kill [a]"));
        let n = ext2
            .iter()
            .find(|w| w.recipe == "cyclic_quotient 1 kill [a]")
            .unwrap();
        assert_eq!(n.ext2.dims.as_slice(), &[1, 0, 0, 0]);

        let wild = hunt_2reflexive_not_reflexive(&set);
        assert!(wild.iter().any(|w| w.recipe == "simple 3"));
        for w in &wild {
            // the combination the two criteria force on such witnesses
            let tr = crate::homalg::transpose(&w.module);
            assert!(ext_module(&tr, 1).unwrap().is_zero);
            let ext2 = ext_module(&tr, 2).unwrap();
            assert!(!ext2.is_zero && ext2.is_projective);
        }
    }

    #[test]
    fn hunts_on_the_commutative_control_are_empty() {
        let alg = presets::dual_numbers(FieldSpec::rational());
        let set = enumerate_candidates(&alg, Side::Right, 100);
        assert!(hunt_ext2_projective(&set).is_empty());
        assert!(hunt_2reflexive_not_reflexive(&set).is_empty());
    }

    #[test]
    fn projective_only_candidates_yield_no_witnesses() {
        let alg = presets::paper_algebra(FieldSpec::rational());
        let candidates = (0..4)
            .map(|v| Candidate {
                module: Module::projective(&alg, v, Side::Right).unwrap(),
                recipe: format!("projective {}", v + 1),
            })
            .collect();
        let set = CandidateSet { algebra: alg.clone(), side: Side::Right, candidates };
        assert!(hunt_2reflexive_not_reflexive(&set).is_empty());
        assert!(hunt_ext2_projective(&set).is_empty());
    }

    #[test]
    fn enumeration_is_deterministic() {
        let alg = presets::paper_algebra(FieldSpec::rational());
        let a = enumerate_candidates(&alg, Side::Left, 100);
        let b = enumerate_candidates(&alg, Side::Left, 100);
        let ra: Vec<_> = a.candidates.iter().map(|c| (&c.recipe, c.module.dims())).collect();
        let rb: Vec<_> = b.candidates.iter().map(|c| (&c.recipe, c.module.dims())).collect();
        assert_eq!(ra, rb);
    }
}
