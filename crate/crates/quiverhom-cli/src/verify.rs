//! The `verify-paper` check battery: sixteen frozen homological facts about
//! the builtin `paper` algebra, all of which must reproduce exactly over any
//! ground field. Any mismatch is reported with the offending check name.

use std::sync::Arc;

use quiverhom::homalg::{
    ext_module, is_reflexive, is_torsionless, is_two_reflexive, min_resolution,
};
use quiverhom::presets;
use quiverhom::search::fingerprint;
use quiverhom::{BoundQuiverAlgebra, FieldSpec, Module, Side};

use crate::report::{CheckOutcome, VerifyPayload};

/// Builds the check battery's algebra. With `tamper` set, a deliberately
/// corrupted variant (the arrow `d` is dropped) is used instead, as a
/// negative control: several checks must then fail.
fn battery_algebra(field: FieldSpec, tamper: bool) -> Arc<BoundQuiverAlgebra> {
    if !tamper {
        return presets::paper_algebra(field);
    }
    let quiver = quiverhom::Quiver::new(
        vec!["1".into(), "2".into(), "3".into(), "4".into()],
        vec![
            ("a".into(), "1".into(), "2".into()),
            ("b".into(), "2".into(), "3".into()),
            ("c".into(), "3".into(), "4".into()),
        ],
    )
    .expect("tampered quiver is well formed");
    let relations = quiverhom::RelationSet::radical_square(&quiver);
    Arc::new(
        quiverhom::BoundQuiverAlgebra::build(field, quiver, relations)
            .expect("rad^2 is admissible"),
    )
}

fn dims_of(m: &Module) -> String {
    format!("{}", m.dims())
}

fn dims_check(name: &'static str, expected: &[usize], actual: &Module) -> CheckOutcome {
    let expected_str = format!(
        "[{}]",
        expected.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    );
    CheckOutcome {
        name,
        pass: actual.dims().as_slice() == expected,
        expected: expected_str,
        actual: dims_of(actual),
    }
}

fn ext_check(
    name: &'static str,
    module: &Module,
    degree: usize,
    expected_dims: &[usize],
) -> CheckOutcome {
    let report = ext_module(module, degree).expect("small degrees are below the cap");
    let expected_str = format!(
        "dims [{}], nonzero, projective",
        expected_dims.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    );
    let actual = format!(
        "dims {}, {}zero, {}projective",
        report.dims,
        if report.is_zero { "" } else { "non" },
        if report.is_projective { "" } else { "not " },
    );
    CheckOutcome {
        name,
        pass: report.dims.as_slice() == expected_dims && !report.is_zero && report.is_projective,
        expected: expected_str,
        actual,
    }
}

/// Runs the sixteen checks and tallies the outcome.
pub fn run_verify(field: FieldSpec, tamper: bool) -> VerifyPayload {
    let alg = battery_algebra(field.clone(), tamper);
    let s2 = Module::simple(&alg, 1, Side::Right).expect("vertex 2 exists");
    let s3 = Module::simple(&alg, 2, Side::Right).expect("vertex 3 exists");
    let e1r = Module::projective(&alg, 0, Side::Right).expect("vertex 1 exists");
    let e2r = Module::projective(&alg, 1, Side::Right).expect("vertex 2 exists");
    let re3 = Module::projective(&alg, 2, Side::Left).expect("vertex 3 exists");
    let n = presets::module_n(&alg);
    let y = presets::module_y(&alg);
    let y2 = presets::module_y2(&alg);

    let mut checks: Vec<CheckOutcome> = Vec::with_capacity(16);

    checks.push(dims_check("hom_s2_r", &[1, 0, 0, 0], &quiverhom::homalg::dual(&s2)));
    checks.push(dims_check("hom_e2r_r", &[1, 1, 0, 0], &quiverhom::homalg::dual(&e2r)));
    checks.push(dims_check("hom_s3_r", &[1, 1, 0, 0], &quiverhom::homalg::dual(&s3)));
    checks.push(ext_check("ext1_s2_r", &s2, 1, &[1, 0, 0, 0]));

    // the first syzygy of N must literally be the simple module S2
    let omega_n = quiverhom::homalg::syzygy(&n, 1).expect("degree 1 is below the cap");
    checks.push(CheckOutcome {
        name: "syzygy1_n",
        pass: omega_n == s2,
        expected: "the simple right module at vertex 2, dims [0,1,0,0]".into(),
        actual: format!("dims {}, literal match: {}", omega_n.dims(), omega_n == s2),
    });

    checks.push(ext_check("ext2_n_r", &n, 2, &[1, 0, 0, 0]));

    // minimal resolution of S3: 0 -> e4R -> e3R -> S3 -> 0
    let res = min_resolution(&s3, 1).expect("length 1 is below the cap");
    let summands_ok = res.term_summands() == [vec![2], vec![3]];
    let terminates = res.syzygies()[1].is_zero();
    checks.push(CheckOutcome {
        name: "resolution_s3",
        pass: summands_ok && terminates,
        expected: "0 -> e4R -> e3R -> S3 -> 0".into(),
        actual: format!(
            "terms P0 dims {}, P1 dims {}, second syzygy zero: {terminates}",
            res.terms()[0].dims(),
            res.terms()[1].dims()
        ),
    });

    let tr_s3 = quiverhom::homalg::transpose(&s3);
    checks.push(dims_check("transpose_s3", &[0, 0, 0, 1], &tr_s3));

    let omega_tr = quiverhom::homalg::syzygy(&tr_s3, 1).expect("degree 1 is below the cap");
    checks.push(CheckOutcome {
        name: "syzygy1_transpose_s3",
        pass: omega_tr == y,
        expected: "the simple left module at vertex 3, dims [0,0,1,0]".into(),
        actual: format!("dims {}, literal match: {}", omega_tr.dims(), omega_tr == y),
    });

    checks.push(dims_check("hom_y_r", &[0, 0, 0, 1], &quiverhom::homalg::dual(&y)));
    checks.push(dims_check("hom_re3_r", &[0, 0, 1, 1], &quiverhom::homalg::dual(&re3)));

    // dual(Y2) has dims [1,1,2,0] and the hom fingerprint of S3 + e1R
    let dual_y2 = quiverhom::homalg::dual(&y2);
    let reference = s3.direct_sum(&e1r).expect("same algebra and side");
    let fingerprint_match = fingerprint(&dual_y2) == fingerprint(&reference);
    checks.push(CheckOutcome {
        name: "hom_y2_r",
        pass: dual_y2.dims().as_slice() == [1, 1, 2, 0] && fingerprint_match,
        expected: "[1,1,2,0] with the hom fingerprint of S3 + e1R".into(),
        actual: format!(
            "dims {}, fingerprint match: {fingerprint_match}",
            dual_y2.dims()
        ),
    });

    checks.push(ext_check("ext1_y_r", &y, 1, &[1, 1, 1, 0]));

    let torsionless = is_torsionless(&s3);
    checks.push(CheckOutcome {
        name: "s3_torsionless",
        pass: torsionless,
        expected: "true".into(),
        actual: format!("{torsionless}"),
    });

    let two_reflexive = is_two_reflexive(&s3);
    checks.push(CheckOutcome {
        name: "s3_two_reflexive",
        pass: two_reflexive == quiverhom::homalg::TwoReflexiveVerdict::TwoReflexive,
        expected: "true".into(),
        actual: two_reflexive.as_str().into(),
    });

    let reflexive = is_reflexive(&s3).expect("reflexivity criteria agree");
    checks.push(CheckOutcome {
        name: "s3_not_reflexive",
        pass: !reflexive,
        expected: "false".into(),
        actual: format!("{reflexive}"),
    });

    let passed = checks.iter().filter(|c| c.pass).count();
    VerifyPayload {
        field: format!("{field}"),
        passed,
        failed: checks.len() - passed,
        checks,
    }
}
