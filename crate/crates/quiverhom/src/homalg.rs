//! The homological toolkit: duals `Hom(-, R)`, minimal projective
//! resolutions, syzygies, the transpose, Ext-modules, the evaluation map
//! and the reflexivity decision procedures.
//!
//! Duality switches sides: for a right module `M` the dual `M* = Hom(M, R)`
//! is the left module whose space at the vertex `i` is `Hom(M, e_iR)`, with
//! arrows acting by postcomposition with multiplication maps between the
//! projectives. All constructions fix the deterministic bases produced by
//! [`hom_basis`] and the matrix kernel routines, so every dimension vector
//! and every induced map is reproducible exactly.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::VertexId;
use crate::field::Scalar;
use crate::matrix::Matrix;
use crate::module::{hom_basis, DimensionVector, Module, ModuleError, ModuleHom};
use crate::Side;

/// Resolutions and Ext degrees are computed lazily up to this cap unless a
/// caller raises it explicitly; radical-square-zero algebras can have
/// infinite global dimension, so some ceiling is needed.
pub const DEFAULT_DEGREE_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomalgError {
    DegreeCapExceeded { requested: usize, cap: usize },
    DegreeOutOfRange { requested: usize },
    /// The evaluation-map criterion and the Ext-vanishing criterion for
    /// reflexivity disagreed; this indicates a bug, not bad input.
    CriteriaDisagree { dims: String },
    Module(ModuleError),
}

impl fmt::Display for HomalgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomalgError::DegreeCapExceeded { requested, cap } => {
                write!(f, "degree {requested} exceeds the cap {cap}")
            }
            HomalgError::DegreeOutOfRange { requested } => {
                write!(f, "degree must be >= 1, got {requested}")
            }
            HomalgError::CriteriaDisagree { dims } => write!(
                f,
                "internal inconsistency: evaluation-map and Ext-vanishing reflexivity \
                 criteria disagree on a module with dimension vector {dims}"
            ),
            HomalgError::Module(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for HomalgError {}

impl From<ModuleError> for HomalgError {
    fn from(e: ModuleError) -> Self {
        HomalgError::Module(e)
    }
}

/// A minimal projective resolution `... -> P_1 -> P_0 -> M -> 0`, computed
/// to a requested length.
pub struct Resolution {
    module: Module,
    terms: Vec<Module>,
    term_summands: Vec<Vec<VertexId>>,
    differentials: Vec<ModuleHom>,
    augmentation: ModuleHom,
    syzygies: Vec<Module>,
}

impl Resolution {
    pub fn module(&self) -> &Module {
        &self.module
    }

    /// `P_0, P_1, ..., P_length`.
    pub fn terms(&self) -> &[Module] {
        &self.terms
    }

    /// Indecomposable summand vertices of each term, with multiplicity.
    pub fn term_summands(&self) -> &[Vec<VertexId>] {
        &self.term_summands
    }

    /// `differentials()[k]` is `d_{k+1}: P_{k+1} -> P_k`.
    pub fn differentials(&self) -> &[ModuleHom] {
        &self.differentials
    }

    pub fn augmentation(&self) -> &ModuleHom {
        &self.augmentation
    }

    /// `syzygies()[k]` is the syzygy module `Omega^{k+1}(M)`.
    pub fn syzygies(&self) -> &[Module] {
        &self.syzygies
    }
}

/// Minimal projective resolution through `P_length`, built by iterated
/// projective covers of successive kernels.
pub fn min_resolution(m: &Module, length: usize) -> Result<Resolution, HomalgError> {
    min_resolution_with_cap(m, length, DEFAULT_DEGREE_CAP)
}

pub fn min_resolution_with_cap(
    m: &Module,
    length: usize,
    cap: usize,
) -> Result<Resolution, HomalgError> {
    if length > cap {
        return Err(HomalgError::DegreeCapExceeded { requested: length, cap });
    }
    let cover = m.projective_cover();
    let mut terms = Vec::with_capacity(length + 1);
    let mut term_summands = Vec::with_capacity(length + 1);
    terms.push(cover.module);
    term_summands.push(cover.summands);
    let augmentation = cover.cover;
    let (mut syzygy, mut inclusion) = augmentation.kernel();
    let mut syzygies = Vec::with_capacity(length + 1);
    let mut differentials = Vec::with_capacity(length);
    syzygies.push(syzygy.clone());
    for _ in 1..=length {
        let cover = syzygy.projective_cover();
        // d_k is the cover of the syzygy followed by its inclusion
        differentials.push(cover.cover.compose(&inclusion));
        terms.push(cover.module);
        term_summands.push(cover.summands);
        let (next, next_inclusion) = cover.cover.kernel();
        syzygy = next;
        inclusion = next_inclusion;
        syzygies.push(syzygy.clone());
    }
    Ok(Resolution {
        module: m.clone(),
        terms,
        term_summands,
        differentials,
        augmentation,
        syzygies,
    })
}

/// The syzygy `Omega^k(M)`; `Omega^0(M) = M`.
pub fn syzygy(m: &Module, k: usize) -> Result<Module, HomalgError> {
    if k == 0 {
        return Ok(m.clone());
    }
    Ok(min_resolution(m, k - 1)?.syzygies[k - 1].clone())
}

/// The dual `Hom(M, R)` on the opposite side, together with the hom-space
/// bases that realize each vertex space.
pub fn dual_with_basis(m: &Module) -> (Module, Vec<Vec<ModuleHom>>) {
    let algebra = m.algebra();
    let quiver = algebra.quiver();
    let field = algebra.field().clone();
    let dual_side = m.side().flip();
    let bases: Vec<Vec<ModuleHom>> = (0..quiver.vertex_count())
        .map(|v| {
            let proj = Module::projective(algebra, v, m.side()).expect("vertex exists");
            hom_basis(m, &proj).expect("same algebra and side")
        })
        .collect();
    let dims = DimensionVector::new(bases.iter().map(Vec::len).collect());
    let mut action = Vec::with_capacity(quiver.arrows().len());
    for a in 0..quiver.arrows().len() {
        let (from, to) = match dual_side {
            Side::Left => (quiver.arrow(a).target, quiver.arrow(a).source),
            Side::Right => (quiver.arrow(a).source, quiver.arrow(a).target),
        };
        let mult = multiplication_hom(m, a, from, to);
        let columns: Vec<Vec<Scalar>> = bases[from]
            .iter()
            .map(|psi| express_in_hom_basis(&bases[to], &psi.compose(&mult)))
            .collect();
        action.push(Matrix::from_columns(field.clone(), bases[to].len(), &columns));
    }
    let dual = Module::new(algebra, dual_side, dims, action)
        .expect("dual of a valid module is valid");
    (dual, bases)
}

/// The dual `Hom(M, R)` as a module on the opposite side.
pub fn dual(m: &Module) -> Module {
    dual_with_basis(m).0
}

/// Multiplication by the arrow `a` as a map between indecomposable
/// projectives on the side of `m`: prepending for right modules
/// (`e_{t(a)}R -> e_{s(a)}R`), appending for left modules
/// (`Re_{s(a)} -> Re_{t(a)}`).
fn multiplication_hom(m: &Module, a: usize, from: VertexId, to: VertexId) -> ModuleHom {
    let algebra = m.algebra();
    let field = algebra.field().clone();
    let arrow_path = algebra.quiver().arrow_as_path(a);
    let (source, source_blocks) =
        Module::projective_with_paths(algebra, from, m.side()).expect("vertex exists");
    let (target, target_blocks) =
        Module::projective_with_paths(algebra, to, m.side()).expect("vertex exists");
    let maps: Vec<Matrix> = (0..source_blocks.len())
        .map(|w| {
            let mut matrix = Matrix::zero(
                field.clone(),
                target_blocks[w].len(),
                source_blocks[w].len(),
            );
            for (col, p) in source_blocks[w].iter().enumerate() {
                let product = match m.side() {
                    Side::Right => algebra.multiply(&arrow_path, p),
                    Side::Left => algebra.multiply(p, &arrow_path),
                };
                if let Some(q) = product {
                    let row = target_blocks[w]
                        .iter()
                        .position(|candidate| *candidate == q)
                        .expect("product of basis paths is a basis path");
                    matrix.set(row, col, field.one());
                }
            }
            matrix
        })
        .collect();
    ModuleHom::new(source, target, maps).expect("multiplication is a module map")
}

/// Coordinates of `h` with respect to a basis of its hom space.
fn express_in_hom_basis(basis: &[ModuleHom], h: &ModuleHom) -> Vec<Scalar> {
    let field = h.source().algebra().field().clone();
    let flat = h.flatten();
    let columns: Vec<Vec<Scalar>> = basis.iter().map(ModuleHom::flatten).collect();
    let matrix = Matrix::from_columns(field.clone(), flat.len(), &columns);
    let rhs = Matrix::from_columns(field, flat.len(), &[flat]);
    matrix
        .solve(&rhs)
        .expect("hom lies in the span of the hom basis")
        .column(0)
}

/// The contravariantly induced map `Hom(f, R): dual(target) -> dual(source)`.
pub fn induced_dual_hom(f: &ModuleHom) -> ModuleHom {
    let (dual_target, target_bases) = dual_with_basis(f.target());
    let (dual_source, source_bases) = dual_with_basis(f.source());
    let field = f.source().algebra().field().clone();
    let maps: Vec<Matrix> = (0..target_bases.len())
        .map(|v| {
            let columns: Vec<Vec<Scalar>> = target_bases[v]
                .iter()
                .map(|psi| express_in_hom_basis(&source_bases[v], &f.compose(psi)))
                .collect();
            Matrix::from_columns(field.clone(), source_bases[v].len(), &columns)
        })
        .collect();
    ModuleHom::new(dual_target, dual_source, maps)
        .expect("the dualized map commutes with the action")
}

/// The transpose: cokernel of `Hom(d_1, R)` for the minimal projective
/// presentation `P_1 --d_1--> P_0 -> M -> 0`. Lives on the opposite side;
/// zero exactly when `M` is projective.
pub fn transpose(m: &Module) -> Module {
    let res = min_resolution(m, 1).expect("length 1 is below any cap");
    induced_dual_hom(&res.differentials()[0]).cokernel().0
}

/// `D_k(M) = Omega^k(transpose(M))`.
pub fn d_k(m: &Module, k: usize) -> Result<Module, HomalgError> {
    syzygy(&transpose(m), k)
}

/// An Ext-module `Ext^i(M, R)`, materialized as a module on the opposite
/// side, with the projectivity verdict the hunts care about.
#[derive(Clone)]
pub struct ExtReport {
    pub module: Module,
    pub degree: usize,
    pub dims: DimensionVector,
    pub is_zero: bool,
    pub is_projective: bool,
    /// dimension vector of `ker Hom(d_{i+1}, R)` (the cocycles)
    pub kernel_dims: DimensionVector,
    /// dimension vector of `im Hom(d_i, R)` (the coboundaries)
    pub image_dims: DimensionVector,
}

/// Computes `Ext^i(M, R)` for `i >= 1` as the homology of the dualized
/// minimal resolution: `ker Hom(d_{i+1}, R) / im Hom(d_i, R)`, with the
/// arrow action induced on the subquotient.
pub fn ext_module(m: &Module, degree: usize) -> Result<ExtReport, HomalgError> {
    ext_module_with_cap(m, degree, DEFAULT_DEGREE_CAP)
}

pub fn ext_module_with_cap(
    m: &Module,
    degree: usize,
    cap: usize,
) -> Result<ExtReport, HomalgError> {
    if degree == 0 {
        return Err(HomalgError::DegreeOutOfRange { requested: degree });
    }
    if degree > cap {
        return Err(HomalgError::DegreeCapExceeded { requested: degree, cap });
    }
    let res = min_resolution_with_cap(m, degree + 1, cap.max(degree + 1))?;
    let delta_in = induced_dual_hom(&res.differentials()[degree - 1]);
    let delta_out = induced_dual_hom(&res.differentials()[degree]);
    let (cocycles, inclusion) = delta_out.kernel();
    // factor the incoming dual differential through the cocycles
    let factor_maps: Vec<Matrix> = (0..cocycles.dims().len())
        .map(|v| {
            inclusion
                .map(v)
                .solve(delta_in.map(v))
                .expect("dual differentials compose to zero")
        })
        .collect();
    let coboundaries = ModuleHom::new(delta_in.source().clone(), cocycles.clone(), factor_maps)
        .expect("factored map commutes with the action");
    let image_dims = coboundaries.image().0.dims().clone();
    let ext = coboundaries.cokernel().0;
    Ok(ExtReport {
        degree,
        dims: ext.dims().clone(),
        is_zero: ext.is_zero(),
        is_projective: ext.is_projective(),
        kernel_dims: cocycles.dims().clone(),
        image_dims,
        module: ext,
    })
}

/// The `K`-dimension of `Ext^i(M, N)` computed along an independent route:
/// ranks in the hom complex `Hom(P_*, N)`, never materializing duals.
/// Degree `0` gives `dim Hom(M, N)`.
pub fn ext_dim(m: &Module, n: &Module, degree: usize) -> Result<usize, HomalgError> {
    let res = min_resolution(m, degree + 1)?;
    let rank_of_induced = |d: &ModuleHom, basis: &[ModuleHom]| -> usize {
        if basis.is_empty() {
            return 0;
        }
        let field = m.algebra().field().clone();
        let columns: Vec<Vec<Scalar>> =
            basis.iter().map(|psi| d.compose(psi).flatten()).collect();
        let len = columns[0].len();
        Matrix::from_columns(field, len, &columns).rank()
    };
    let hom_here = hom_basis(&res.terms()[degree], n)?;
    let rank_out = rank_of_induced(&res.differentials()[degree], &hom_here);
    let rank_in = if degree == 0 {
        0
    } else {
        let hom_prev = hom_basis(&res.terms()[degree - 1], n)?;
        rank_of_induced(&res.differentials()[degree - 1], &hom_prev)
    };
    Ok(hom_here.len() - rank_out - rank_in)
}

/// The canonical evaluation map `ev_M: M -> M**`, `ev(m)(psi) = psi(m)`,
/// constructed explicitly on the deterministic dual bases.
pub fn evaluation_map(m: &Module) -> ModuleHom {
    let algebra = m.algebra();
    let field = algebra.field().clone();
    let (mstar, star_bases) = dual_with_basis(m);
    let (mstarstar, double_bases) = dual_with_basis(&mstar);
    let maps: Vec<Matrix> = (0..m.dims().len())
        .map(|j| {
            let proj = Module::projective(algebra, j, mstar.side()).expect("vertex exists");
            let columns: Vec<Vec<Scalar>> = (0..m.dims()[j])
                .map(|b| {
                    // evaluation at the b-th basis vector of M_j is a hom
                    // M* -> (projective at j on the dual side): the value of
                    // psi at that vector, read through the shared path basis
                    // of e_iRe_j
                    let eta_maps: Vec<Matrix> = (0..m.dims().len())
                        .map(|i| {
                            let cols: Vec<Vec<Scalar>> = star_bases[i]
                                .iter()
                                .map(|psi| psi.map(j).column(b))
                                .collect();
                            Matrix::from_columns(field.clone(), proj.dims()[i], &cols)
                        })
                        .collect();
                    let eta = ModuleHom::new(mstar.clone(), proj.clone(), eta_maps)
                        .expect("evaluation at a module element is a module map");
                    express_in_hom_basis(&double_bases[j], &eta)
                })
                .collect();
            Matrix::from_columns(field.clone(), mstarstar.dims()[j], &columns)
        })
        .collect();
    ModuleHom::new(m.clone(), mstarstar, maps)
        .expect("the evaluation map commutes with the action")
}

/// Whether `M` embeds into a projective (equivalently, the evaluation map
/// is injective). Cross-checked against the vanishing of
/// `Ext^1(transpose(M), R)`; a disagreement would be a bug and panics.
pub fn is_torsionless(m: &Module) -> bool {
    let by_evaluation = evaluation_map(m).is_injective();
    let by_ext = ext_module(&transpose(m), 1)
        .expect("degree 1 is below the cap")
        .is_zero;
    assert_eq!(
        by_evaluation, by_ext,
        "torsionless criteria disagree on a module with dims {}",
        m.dims()
    );
    by_evaluation
}

/// Whether the evaluation map `M -> M**` is an isomorphism. The result is
/// computed twice, via the evaluation map and via the vanishing of
/// `Ext^{1,2}(transpose(M), R)`; disagreement signals an implementation bug
/// and is reported as an error.
pub fn is_reflexive(m: &Module) -> Result<bool, HomalgError> {
    let by_evaluation = evaluation_map(m).is_isomorphism();
    let tr = transpose(m);
    let ext1 = ext_module(&tr, 1)?.is_zero;
    let ext2 = ext_module(&tr, 2)?.is_zero;
    let by_ext = ext1 && ext2;
    if by_evaluation != by_ext {
        return Err(HomalgError::CriteriaDisagree { dims: format!("{}", m.dims()) });
    }
    Ok(by_evaluation)
}

/// Outcome of the 2-reflexivity test.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TwoReflexiveVerdict {
    TwoReflexive,
    NotTwoReflexive,
    /// The module is not torsionless, so the projectivity criterion for
    /// `Ext^2(transpose(M), R)` does not apply.
    CriterionInapplicable,
}

impl TwoReflexiveVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            TwoReflexiveVerdict::TwoReflexive => "true",
            TwoReflexiveVerdict::NotTwoReflexive => "false",
            TwoReflexiveVerdict::CriterionInapplicable => "inapplicable",
        }
    }
}

impl fmt::Display for TwoReflexiveVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Decides 2-reflexivity for torsionless modules: `M` is 2-reflexive if and
/// only if `Ext^2(transpose(M), R)` is projective. For modules that are not
/// torsionless the criterion does not apply and the verdict says so.
pub fn is_two_reflexive(m: &Module) -> TwoReflexiveVerdict {
    if !is_torsionless(m) {
        return TwoReflexiveVerdict::CriterionInapplicable;
    }
    let ext2 = ext_module(&transpose(m), 2).expect("degree 2 is below the cap");
    if ext2.is_projective {
        TwoReflexiveVerdict::TwoReflexive
    } else {
        TwoReflexiveVerdict::NotTwoReflexive
    }
}
