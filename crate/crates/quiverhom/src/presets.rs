//! The example algebras and modules that the CLI exposes under builtin
//! names (`paper`, `dualnumbers`, `N`, `Y`, `Y2`, ...).

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{BoundQuiverAlgebra, Quiver, RelationSet};
use crate::field::FieldSpec;
use crate::module::{Module, Side};

/// The builtin `paper` algebra: the radical-square-zero bound quiver algebra
/// on the quiver
///
/// ```text
/// 1 --a--> 2 --b--> 3 --c--> 4        plus    1 --d--> 3
/// ```
///
/// Its dimension is 8 (four trivial paths and four arrows).
pub fn paper_algebra(field: FieldSpec) -> Arc<BoundQuiverAlgebra> {
    let vertices: Vec<String> = vec!["1".into(), "2".into(), "3".into(), "4".into()];
    let arrows = vec![
        ("a".into(), "1".into(), "2".into()),
        ("b".into(), "2".into(), "3".into()),
        ("c".into(), "3".into(), "4".into()),
        ("d".into(), "1".into(), "3".into()),
    ];
    let quiver = Quiver::new(vertices, arrows).expect("paper quiver is well formed");
    let relations = RelationSet::radical_square(&quiver);
    Arc::new(BoundQuiverAlgebra::build(field, quiver, relations).expect("rad^2 is admissible"))
}

/// The builtin `dualnumbers` algebra `K[x]/(x^2)`: one vertex, one loop,
/// radical square zero. A commutative local algebra, useful as a negative
/// control for the hunts.
pub fn dual_numbers(field: FieldSpec) -> Arc<BoundQuiverAlgebra> {
    let quiver = Quiver::new(
        vec!["1".into()],
        vec![("x".into(), "1".into(), "1".into())],
    )
    .expect("dual numbers quiver is well formed");
    let relations = RelationSet::radical_square(&quiver);
    Arc::new(BoundQuiverAlgebra::build(field, quiver, relations).expect("rad^2 is admissible"))
}

/// The builtin right module `N` over the `paper` algebra: the cyclic
/// quotient of `e1R` killing the arrow `a`. Its dimension vector is
/// `[1,0,1,0]`.
pub fn module_n(algebra: &Arc<BoundQuiverAlgebra>) -> Module {
    let a = algebra
        .quiver()
        .path_from_arrow_names(&["a".into()])
        .expect("arrow a exists");
    Module::cyclic_quotient(algebra, 0, Side::Right, &[a]).expect("N is well formed")
}

/// The builtin left module `Y` over the `paper` algebra: the simple left
/// module at vertex 3, dimension vector `[0,0,1,0]`.
pub fn module_y(algebra: &Arc<BoundQuiverAlgebra>) -> Module {
    Module::simple(algebra, 2, Side::Left).expect("vertex 3 exists")
}

/// The builtin left module `Y2` over the `paper` algebra: the radical of
/// `Re3`, dimension vector `[1,1,0,0]`. It sits in the exact sequence
/// `0 -> Y2 -> Re3 -> Y -> 0`.
pub fn module_y2(algebra: &Arc<BoundQuiverAlgebra>) -> Module {
    let re3 = Module::projective(algebra, 2, Side::Left).expect("vertex 3 exists");
    re3.radical().0
}
