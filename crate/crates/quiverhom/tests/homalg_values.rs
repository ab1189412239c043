//! Frozen homological values over the builtin four-vertex algebra, checked
//! over the rationals and over F_2, plus the cross-route consistency
//! invariants (hom-complex ranks against materialized Ext-modules, dualized
//! short exact sequences, evaluation-map naturality).

use quiverhom::homalg::{
    d_k, dual, ext_dim, ext_module, evaluation_map, induced_dual_hom, is_reflexive,
    is_torsionless, is_two_reflexive, min_resolution, syzygy, transpose, TwoReflexiveVerdict,
};
use quiverhom::module::hom_basis;
use quiverhom::presets;
use quiverhom::search::enumerate_candidates;
use quiverhom::{DimensionVector, FieldSpec, Module, ModuleHom, Side};

fn dims(v: &[usize]) -> DimensionVector {
    DimensionVector::new(v.to_vec())
}

fn fields() -> Vec<FieldSpec> {
    vec![FieldSpec::rational(), FieldSpec::prime(2).unwrap()]
}

#[test]
fn dual_dimension_vectors() {
    for field in fields() {
        let alg = presets::paper_algebra(field);
        let s2 = Module::simple(&alg, 1, Side::Right).unwrap();
        let s3 = Module::simple(&alg, 2, Side::Right).unwrap();
        let e2r = Module::projective(&alg, 1, Side::Right).unwrap();
        let re3 = Module::projective(&alg, 2, Side::Left).unwrap();
        let y = presets::module_y(&alg);
        let y2 = presets::module_y2(&alg);

        assert_eq!(dual(&s2).dims(), &dims(&[1, 0, 0, 0]));
        assert_eq!(dual(&s3).dims(), &dims(&[1, 1, 0, 0]));
        assert_eq!(dual(&e2r).dims(), &dims(&[1, 1, 0, 0]));
        assert_eq!(dual(&re3).dims(), &dims(&[0, 0, 1, 1]));
        assert_eq!(dual(&y).dims(), &dims(&[0, 0, 0, 1]));
        assert_eq!(y2.dims(), &dims(&[1, 1, 0, 0]));
        assert_eq!(dual(&y2).dims(), &dims(&[1, 1, 2, 0]));

        // all duals switch sides
        assert_eq!(dual(&s2).side(), Side::Left);
        assert_eq!(dual(&y).side(), Side::Right);
    }
}

#[test]
fn dual_dims_agree_with_hom_counting() {
    let alg = presets::paper_algebra(FieldSpec::rational());
    let modules = vec![
        Module::simple(&alg, 1, Side::Right).unwrap(),
        presets::module_n(&alg),
        presets::module_y2(&alg),
        Module::projective(&alg, 0, Side::Right).unwrap(),
    ];
    for m in &modules {
        let d = dual(m);
        for v in 0..4 {
            let p = Module::projective(m.algebra(), v, m.side()).unwrap();
            assert_eq!(d.dims()[v], hom_basis(m, &p).unwrap().len());
            assert_eq!(d.dims()[v], ext_dim(m, &p, 0).unwrap());
        }
    }
}

#[test]
fn resolutions_and_syzygies() {
    for field in fields() {
        let alg = presets::paper_algebra(field);
        let s3 = Module::simple(&alg, 2, Side::Right).unwrap();
        let res = min_resolution(&s3, 1).unwrap();
        assert_eq!(res.term_summands(), &[vec![2], vec![3]]);
        assert_eq!(res.terms()[0].dims(), &dims(&[0, 0, 1, 1]));
        assert_eq!(res.terms()[1].dims(), &dims(&[0, 0, 0, 1]));
        // the resolution stops there
        assert!(syzygy(&s3, 2).unwrap().is_zero());

        let n = presets::module_n(&alg);
        let res = min_resolution(&n, 1).unwrap();
        assert_eq!(res.term_summands(), &[vec![0], vec![1]]);
        assert_eq!(
            syzygy(&n, 1).unwrap(),
            Module::simple(&alg, 1, Side::Right).unwrap()
        );

        let e1r = Module::projective(&alg, 0, Side::Right).unwrap();
        assert!(syzygy(&e1r, 1).unwrap().is_zero());
    }
}

#[test]
fn transpose_values() {
    for field in fields() {
        let alg = presets::paper_algebra(field);
        let s3 = Module::simple(&alg, 2, Side::Right).unwrap();
        let tr_s3 = transpose(&s3);
        assert_eq!(tr_s3.dims(), &dims(&[0, 0, 0, 1]));
        assert_eq!(tr_s3.side(), Side::Left);

        assert!(transpose(&Module::projective(&alg, 0, Side::Right).unwrap()).is_zero());

        // four-term bookkeeping fixes the transpose of S2:
        // dims(Tr) = dims(P1*) - dims(P0*) + dims(S2*) = [1,1,1,0] - [1,1,0,0] + [1,0,0,0]
        let s2 = Module::simple(&alg, 1, Side::Right).unwrap();
        assert_eq!(transpose(&s2).dims(), &dims(&[1, 0, 1, 0]));
    }
}

#[test]
fn transpose_alternating_sum_identity() {
    let alg = presets::paper_algebra(FieldSpec::rational());
    for side in [Side::Right, Side::Left] {
        for candidate in enumerate_candidates(&alg, side, 100).candidates {
            let m = candidate.module;
            let res = min_resolution(&m, 1).unwrap();
            let tr = transpose(&m);
            let d0 = dual(&res.terms()[0]);
            let d1 = dual(&res.terms()[1]);
            let dm = dual(&m);
            for v in 0..4 {
                assert_eq!(
                    tr.dims()[v] + d0.dims()[v],
                    d1.dims()[v] + dm.dims()[v],
                    "alternating sum fails for {} at vertex {v}",
                    candidate.recipe
                );
            }
        }
    }
}

#[test]
fn syzygies_of_the_transpose() {
    for field in fields() {
        let alg = presets::paper_algebra(field);
        let s3 = Module::simple(&alg, 2, Side::Right).unwrap();
        // first syzygy of Tr(S3) is the simple left module Y
        let omega = syzygy(&transpose(&s3), 1).unwrap();
        assert_eq!(omega, presets::module_y(&alg));
        assert_eq!(d_k(&s3, 1).unwrap(), presets::module_y(&alg));
        assert_eq!(d_k(&s3, 0).unwrap().dims(), &dims(&[0, 0, 0, 1]));

        let e1r = Module::projective(&alg, 0, Side::Right).unwrap();
        for k in 0..3 {
            assert!(d_k(&e1r, k).unwrap().is_zero());
        }
    }
}

#[test]
fn ext_values() {
    for field in fields() {
        let alg = presets::paper_algebra(field);
        let n = presets::module_n(&alg);
        let ext2 = ext_module(&n, 2).unwrap();
        assert_eq!(ext2.dims, dims(&[1, 0, 0, 0]));
        assert!(!ext2.is_zero);
        assert!(ext2.is_projective);
        assert_eq!(ext2.module.side(), Side::Left);

        let s2 = Module::simple(&alg, 1, Side::Right).unwrap();
        let ext1 = ext_module(&s2, 1).unwrap();
        assert_eq!(ext1.dims, dims(&[1, 0, 0, 0]));
        assert!(ext1.is_projective && !ext1.is_zero);

        let y = presets::module_y(&alg);
        let ext1y = ext_module(&y, 1).unwrap();
        assert_eq!(ext1y.dims, dims(&[1, 1, 1, 0]));
        assert!(ext1y.is_projective && !ext1y.is_zero);
        assert_eq!(ext1y.module.side(), Side::Right);

        let e3r = Module::projective(&alg, 2, Side::Right).unwrap();
        for i in 1..=5 {
            assert!(ext_module(&e3r, i).unwrap().is_zero);
        }
    }
}

#[test]
fn ext_dims_cross_checked_against_hom_complex_ranks() {
    let alg = presets::paper_algebra(FieldSpec::rational());
    for side in [Side::Right, Side::Left] {
        for candidate in enumerate_candidates(&alg, side, 100).candidates {
            let m = candidate.module;
            for degree in 1..=3usize {
                let materialized = ext_module(&m, degree).unwrap();
                for v in 0..4 {
                    let p = Module::projective(&alg, v, side).unwrap();
                    assert_eq!(
                        materialized.dims[v],
                        ext_dim(&m, &p, degree).unwrap(),
                        "Ext^{degree} dims at vertex {v} for {}",
                        candidate.recipe
                    );
                }
            }
        }
    }
}

/// Dualizing a short exact sequence with projective middle term must give
/// the four-term exact sequence `0 -> C* -> B* -> A* -> Ext^1(C, R) -> 0`.
#[test]
fn dualized_short_exact_sequences() {
    let alg = presets::paper_algebra(FieldSpec::rational());
    // 0 -> S3 -> e2R -> S2 -> 0 (socle inclusion), and the analogous
    // sequences the resolution machinery produces for S3 and Y
    let e2r = Module::projective(&alg, 1, Side::Right).unwrap();
    let (_, socle_inclusion) = e2r.socle();
    check_four_term(&socle_inclusion);

    let s3 = Module::simple(&alg, 2, Side::Right).unwrap();
    let res = min_resolution(&s3, 1).unwrap();
    check_four_term(&res.differentials()[0]);

    let re3 = Module::projective(&alg, 2, Side::Left).unwrap();
    let (_, radical_inclusion) = re3.radical();
    check_four_term(&radical_inclusion);
}

fn check_four_term(inclusion: &ModuleHom) {
    let (c, projection) = inclusion.cokernel();
    let a = inclusion.source();
    let b = inclusion.target();
    assert!(b.is_projective(), "middle term must be projective here");

    let dual_proj = induced_dual_hom(&projection); // C* -> B*
    let dual_incl = induced_dual_hom(inclusion); // B* -> A*
    assert!(dual_proj.is_injective());
    // exactness in the middle: ker(B* -> A*) = im(C* -> B*)
    let (kernel, _) = dual_incl.kernel();
    let (image, _) = dual_proj.image();
    assert_eq!(kernel.dims(), image.dims());
    // the cokernel of B* -> A* is Ext^1(C, R), vertex by vertex
    let (coker, _) = dual_incl.cokernel();
    let ext1 = ext_module(&c, 1).unwrap();
    assert_eq!(coker.dims(), &ext1.dims);
    let _ = a;
}

#[test]
fn evaluation_maps() {
    for field in fields() {
        let alg = presets::paper_algebra(field);
        let e2r = Module::projective(&alg, 1, Side::Right).unwrap();
        assert!(evaluation_map(&e2r).is_isomorphism());

        let s3 = Module::simple(&alg, 2, Side::Right).unwrap();
        let ev = evaluation_map(&s3);
        assert!(!ev.is_isomorphism());

        let s2 = Module::simple(&alg, 1, Side::Right).unwrap();
        let ev = evaluation_map(&s2);
        assert!(ev.is_injective());
        assert!(!ev.is_surjective());
        assert_eq!(ev.target().dims(), &dims(&[1, 1, 1, 0]));
    }
}

#[test]
fn evaluation_is_natural() {
    let alg = presets::paper_algebra(FieldSpec::rational());
    let e1r = Module::projective(&alg, 0, Side::Right).unwrap();
    let e2r = Module::projective(&alg, 1, Side::Right).unwrap();
    let s2 = Module::simple(&alg, 1, Side::Right).unwrap();
    let n = presets::module_n(&alg);
    let field = alg.field().clone();

    let mut homs: Vec<ModuleHom> = Vec::new();
    for (src, tgt) in [(&s2, &e1r), (&e2r, &e2r), (&e1r, &n), (&n, &e1r), (&s2, &n)] {
        let basis = hom_basis(src, tgt).unwrap();
        // exercise single basis elements and a small combination
        homs.extend(basis.iter().cloned());
        if basis.len() >= 2 {
            homs.push(basis[0].add(&basis[1].scale(&field.integer(2))));
        }
    }
    for f in &homs {
        let double_dual = induced_dual_hom(&induced_dual_hom(f));
        let lhs = f.compose(&evaluation_map(f.target()));
        let rhs = evaluation_map(f.source()).compose(&double_dual);
        assert_eq!(lhs.maps(), rhs.maps(), "ev must commute with f**");
    }
}

#[test]
fn torsionless_and_reflexivity_verdicts() {
    for field in fields() {
        let alg = presets::paper_algebra(field);
        let s3 = Module::simple(&alg, 2, Side::Right).unwrap();
        let s2 = Module::simple(&alg, 1, Side::Right).unwrap();
        let s1 = Module::simple(&alg, 0, Side::Right).unwrap();
        let e1r = Module::projective(&alg, 0, Side::Right).unwrap();
        let n = presets::module_n(&alg);

        assert!(is_torsionless(&s3));
        assert!(is_torsionless(&s2));
        assert!(is_torsionless(&e1r));
        assert!(!is_torsionless(&s1));
        assert!(!is_torsionless(&n));

        assert!(is_reflexive(&e1r).unwrap());
        assert!(!is_reflexive(&s3).unwrap());
        assert!(!is_reflexive(&n).unwrap());

        assert_eq!(is_two_reflexive(&s3), TwoReflexiveVerdict::TwoReflexive);
        assert_eq!(is_two_reflexive(&e1r), TwoReflexiveVerdict::TwoReflexive);
        assert_eq!(
            is_two_reflexive(&s1),
            TwoReflexiveVerdict::CriterionInapplicable
        );
        // Ext^2(Tr S2, R) has dimension vector [1,0,1,0] and is not
        // projective, so S2 is torsionless but not 2-reflexive
        let ext2 = ext_module(&transpose(&s2), 2).unwrap();
        assert_eq!(ext2.dims, dims(&[1, 0, 1, 0]));
        assert!(!ext2.is_projective);
        assert_eq!(is_two_reflexive(&s2), TwoReflexiveVerdict::NotTwoReflexive);
    }
}

#[test]
fn dual_criteria_agree_across_the_candidate_set() {
    let alg = presets::paper_algebra(FieldSpec::rational());
    for side in [Side::Right, Side::Left] {
        for candidate in enumerate_candidates(&alg, side, 100).candidates {
            let m = candidate.module;
            let ev = evaluation_map(&m);
            let tr = transpose(&m);
            let ext1 = ext_module(&tr, 1).unwrap().is_zero;
            let ext2 = ext_module(&tr, 2).unwrap().is_zero;
            assert_eq!(ev.is_injective(), ext1, "{}", candidate.recipe);
            assert_eq!(ev.is_isomorphism(), ext1 && ext2, "{}", candidate.recipe);
        }
    }
}
