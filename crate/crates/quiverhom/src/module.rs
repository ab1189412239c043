//! Finite-dimensional right and left modules over a bound quiver algebra,
//! stored as quiver representations.
//!
//! Path composition is fixed globally as "first `p`, then `q`", so a right
//! module is a representation of the quiver itself: the arrow `a` acts by a
//! matrix from the vertex space at `source(a)` to the vertex space at
//! `target(a)`. A left module is stored as a representation of the opposite
//! quiver, i.e. `a` acts from the space at `target(a)` to the space at
//! `source(a)`. All matrices act on column vectors.
//!
//! Module and homomorphism constructors validate their data (relation
//! monomials act by zero, commuting squares hold), so the algebraic
//! invariants are re-checked on every internally constructed object.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Index;

use crate::algebra::{ArrowId, BoundQuiverAlgebra, Path, VertexId};
use crate::matrix::Matrix;

/// Which side the algebra acts on.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Right,
    Left,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Right => Side::Left,
            Side::Left => Side::Right,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Side::Right => "right",
            Side::Left => "left",
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Per-vertex dimensions in declaration order, displayed like `[1,0,1,0]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DimensionVector(Vec<usize>);

impl DimensionVector {
    pub fn new(dims: Vec<usize>) -> Self {
        DimensionVector(dims)
    }

    pub fn zeros(len: usize) -> Self {
        DimensionVector(vec![0; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    pub fn plus(&self, other: &DimensionVector) -> DimensionVector {
        assert_eq!(self.len(), other.len(), "dimension vector length mismatch");
        DimensionVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Index<usize> for DimensionVector {
    type Output = usize;

    fn index(&self, v: usize) -> &usize {
        &self.0[v]
    }
}

impl fmt::Display for DimensionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]")
    }
}

impl From<Vec<usize>> for DimensionVector {
    fn from(dims: Vec<usize>) -> Self {
        DimensionVector(dims)
    }
}

/// Errors from module and homomorphism construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleError {
    UnknownVertex(usize),
    DimsLengthMismatch { expected: usize, got: usize },
    ActionCountMismatch { expected: usize, got: usize },
    ActionShapeMismatch { arrow: String, expected: (usize, usize), got: (usize, usize) },
    RelationViolated { path: String },
    AlgebraMismatch,
    SideMismatch,
    MapShapeMismatch { vertex: String, expected: (usize, usize), got: (usize, usize) },
    MapCountMismatch { expected: usize, got: usize },
    NotCommuting { arrow: String },
    KillPathNotBasis { path: String },
    KillPathWrongAnchor { path: String, expected_vertex: String },
}

impl fmt::Display for ModuleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleError::UnknownVertex(v) => write!(f, "unknown vertex index {v}"),
            ModuleError::DimsLengthMismatch { expected, got } => {
                write!(f, "dimension vector has length {got}, quiver has {expected} vertices")
            }
            ModuleError::ActionCountMismatch { expected, got } => {
                write!(f, "got {got} action matrices for {expected} arrows")
            }
            ModuleError::ActionShapeMismatch { arrow, expected, got } => write!(
                f,
                "action of arrow {arrow:?} has shape {}x{}, expected {}x{}",
                got.0, got.1, expected.0, expected.1
            ),
            ModuleError::RelationViolated { path } => {
                write!(f, "relation path {path:?} does not act by zero")
            }
            ModuleError::AlgebraMismatch => write!(f, "modules live over different algebras"),
            ModuleError::SideMismatch => write!(f, "modules live on different sides"),
            ModuleError::MapShapeMismatch { vertex, expected, got } => write!(
                f,
                "map at vertex {vertex:?} has shape {}x{}, expected {}x{}",
                got.0, got.1, expected.0, expected.1
            ),
            ModuleError::MapCountMismatch { expected, got } => {
                write!(f, "got {got} vertex maps for {expected} vertices")
            }
            ModuleError::NotCommuting { arrow } => {
                write!(f, "maps do not commute with the action of arrow {arrow:?}")
            }
            ModuleError::KillPathNotBasis { path } => {
                write!(f, "kill path {path:?} is not a basis path")
            }
            ModuleError::KillPathWrongAnchor { path, expected_vertex } => write!(
                f,
                "kill path {path:?} is not anchored at vertex {expected_vertex:?}"
            ),
        }
    }
}

impl core::error::Error for ModuleError {}

/// A finite-dimensional module as a quiver representation: one vector space
/// dimension per vertex and one action matrix per arrow.
#[derive(Clone, PartialEq, Eq)]
pub struct Module {
    algebra: Arc<BoundQuiverAlgebra>,
    side: Side,
    dims: DimensionVector,
    action: Vec<Matrix>,
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module({} {})", self.side, self.dims)
    }
}

impl Module {
    /// Validating constructor. `action[i]` is the matrix of arrow `i`; for a
    /// right module it maps the space at `source` to the space at `target`,
    /// for a left module the other way around.
    pub fn new(
        algebra: &Arc<BoundQuiverAlgebra>,
        side: Side,
        dims: DimensionVector,
        action: Vec<Matrix>,
    ) -> Result<Self, ModuleError> {
        let quiver = algebra.quiver();
        if dims.len() != quiver.vertex_count() {
            return Err(ModuleError::DimsLengthMismatch {
                expected: quiver.vertex_count(),
                got: dims.len(),
            });
        }
        if action.len() != quiver.arrows().len() {
            return Err(ModuleError::ActionCountMismatch {
                expected: quiver.arrows().len(),
                got: action.len(),
            });
        }
        let module = Module { algebra: Arc::clone(algebra), side, dims, action };
        for (id, arrow) in quiver.arrows().iter().enumerate() {
            let expected = (
                module.dims[module.acting_target(id)],
                module.dims[module.acting_source(id)],
            );
            let got = (module.action[id].rows(), module.action[id].cols());
            if expected != got {
                return Err(ModuleError::ActionShapeMismatch {
                    arrow: arrow.name.clone(),
                    expected,
                    got,
                });
            }
        }
        module.validate_relations()?;
        Ok(module)
    }

    /// The zero module.
    pub fn zero(algebra: &Arc<BoundQuiverAlgebra>, side: Side) -> Self {
        let n = algebra.quiver().vertex_count();
        let field = algebra.field().clone();
        let action = algebra
            .quiver()
            .arrows()
            .iter()
            .map(|_| Matrix::zero(field.clone(), 0, 0))
            .collect();
        Module {
            algebra: Arc::clone(algebra),
            side,
            dims: DimensionVector::zeros(n),
            action,
        }
    }

    /// The simple module at a vertex: one-dimensional there, all arrows act
    /// by zero.
    pub fn simple(
        algebra: &Arc<BoundQuiverAlgebra>,
        vertex: VertexId,
        side: Side,
    ) -> Result<Self, ModuleError> {
        let quiver = algebra.quiver();
        if vertex >= quiver.vertex_count() {
            return Err(ModuleError::UnknownVertex(vertex));
        }
        let mut dims = vec![0; quiver.vertex_count()];
        dims[vertex] = 1;
        let dims = DimensionVector::new(dims);
        let field = algebra.field().clone();
        let mut probe = Module {
            algebra: Arc::clone(algebra),
            side,
            dims,
            action: Vec::new(),
        };
        probe.action = (0..quiver.arrows().len())
            .map(|a| {
                Matrix::zero(
                    field.clone(),
                    probe.dims[probe.acting_target(a)],
                    probe.dims[probe.acting_source(a)],
                )
            })
            .collect();
        Ok(probe)
    }

    /// The indecomposable projective at a vertex: `e_vR` (right) or `Re_v`
    /// (left), the representation on basis paths out of / into the vertex.
    pub fn projective(
        algebra: &Arc<BoundQuiverAlgebra>,
        vertex: VertexId,
        side: Side,
    ) -> Result<Self, ModuleError> {
        Ok(Self::projective_with_paths(algebra, vertex, side)?.0)
    }

    /// As [`Module::projective`], also returning the basis paths that span
    /// each vertex space, in basis order.
    pub fn projective_with_paths(
        algebra: &Arc<BoundQuiverAlgebra>,
        vertex: VertexId,
        side: Side,
    ) -> Result<(Self, Vec<Vec<Path>>), ModuleError> {
        let quiver = algebra.quiver();
        if vertex >= quiver.vertex_count() {
            return Err(ModuleError::UnknownVertex(vertex));
        }
        let field = algebra.field().clone();
        let blocks: Vec<Vec<Path>> = (0..quiver.vertex_count())
            .map(|w| {
                let paths = match side {
                    Side::Right => algebra.paths_between(vertex, w),
                    Side::Left => algebra.paths_between(w, vertex),
                };
                paths.into_iter().cloned().collect()
            })
            .collect();
        let dims = DimensionVector::new(blocks.iter().map(Vec::len).collect());
        let mut action = Vec::with_capacity(quiver.arrows().len());
        for a in 0..quiver.arrows().len() {
            let arrow_path = quiver.arrow_as_path(a);
            let (from, to) = match side {
                Side::Right => (quiver.arrow(a).source, quiver.arrow(a).target),
                Side::Left => (quiver.arrow(a).target, quiver.arrow(a).source),
            };
            let mut m = Matrix::zero(field.clone(), blocks[to].len(), blocks[from].len());
            for (col, p) in blocks[from].iter().enumerate() {
                let product = match side {
                    // append the arrow to a path leaving `vertex`
                    Side::Right => algebra.multiply(p, &arrow_path),
                    // prepend the arrow to a path entering `vertex`
                    Side::Left => algebra.multiply(&arrow_path, p),
                };
                if let Some(q) = product {
                    let row = blocks[to]
                        .iter()
                        .position(|candidate| *candidate == q)
                        .expect("product of basis paths is a basis path");
                    m.set(row, col, field.one());
                }
            }
            action.push(m);
        }
        let module = Module::new(algebra, side, dims, action)?;
        Ok((module, blocks))
    }

    /// Quotient of the projective at `vertex` by the submodule generated by
    /// the given basis paths (anchored at `vertex` on the generator side).
    pub fn cyclic_quotient(
        algebra: &Arc<BoundQuiverAlgebra>,
        vertex: VertexId,
        side: Side,
        kill: &[Path],
    ) -> Result<Self, ModuleError> {
        let (proj, blocks) = Self::projective_with_paths(algebra, vertex, side)?;
        let field = algebra.field().clone();
        let mut generators: Vec<Vec<Vec<crate::field::Scalar>>> =
            vec![Vec::new(); blocks.len()];
        for path in kill {
            let rendered = path.display(algebra.quiver()).to_string();
            if !algebra.is_basis_path(path) {
                return Err(ModuleError::KillPathNotBasis { path: rendered });
            }
            let anchor = match side {
                Side::Right => path.source(),
                Side::Left => path.target(),
            };
            if anchor != vertex {
                return Err(ModuleError::KillPathWrongAnchor {
                    path: rendered,
                    expected_vertex: algebra.quiver().vertex_label(vertex).to_string(),
                });
            }
            let block_vertex = match side {
                Side::Right => path.target(),
                Side::Left => path.source(),
            };
            let idx = blocks[block_vertex]
                .iter()
                .position(|p| p == path)
                .expect("anchored basis path lies in its block");
            let mut v = vec![field.zero(); proj.dims[block_vertex]];
            v[idx] = field.one();
            generators[block_vertex].push(v);
        }
        let gen_matrices: Vec<Matrix> = generators
            .iter()
            .enumerate()
            .map(|(v, cols)| Matrix::from_columns(field.clone(), proj.dims[v], cols))
            .collect();
        let (_, inclusion) = proj.submodule(&gen_matrices);
        Ok(inclusion.cokernel().0)
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &Module) -> Result<Module, ModuleError> {
        if self.algebra != other.algebra {
            return Err(ModuleError::AlgebraMismatch);
        }
        if self.side != other.side {
            return Err(ModuleError::SideMismatch);
        }
        let field = self.algebra.field().clone();
        let dims = self.dims.plus(&other.dims);
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| Matrix::block_diag(field.clone(), &[a, b]))
            .collect();
        Module::new(&self.algebra, self.side, dims, action)
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.algebra
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dims(&self) -> &DimensionVector {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.total()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_zero()
    }

    pub fn arrow_action(&self, a: ArrowId) -> &Matrix {
        &self.action[a]
    }

    /// Where the action of arrow `a` starts, in the stored orientation.
    pub fn acting_source(&self, a: ArrowId) -> VertexId {
        let arrow = self.algebra.quiver().arrow(a);
        match self.side {
            Side::Right => arrow.source,
            Side::Left => arrow.target,
        }
    }

    /// Where the action of arrow `a` lands, in the stored orientation.
    pub fn acting_target(&self, a: ArrowId) -> VertexId {
        let arrow = self.algebra.quiver().arrow(a);
        match self.side {
            Side::Right => arrow.target,
            Side::Left => arrow.source,
        }
    }

    /// The action of a basis path. For a right module this maps the space at
    /// `path.source()` to the space at `path.target()`; for a left module
    /// the other way around.
    pub fn path_action(&self, path: &Path) -> Matrix {
        let field = self.algebra.field().clone();
        match self.side {
            Side::Right => {
                let mut m = Matrix::identity(field, self.dims[path.source()]);
                for &a in path.arrows() {
                    m = self.action[a].mul(&m);
                }
                m
            }
            Side::Left => {
                let mut m = Matrix::identity(field, self.dims[path.target()]);
                for &a in path.arrows().iter().rev() {
                    m = self.action[a].mul(&m);
                }
                m
            }
        }
    }

    fn validate_relations(&self) -> Result<(), ModuleError> {
        let quiver = self.algebra.quiver();
        for monomial in self.algebra.relations().monomials() {
            if !self.path_action_unchecked(monomial).is_zero() {
                return Err(ModuleError::RelationViolated {
                    path: monomial.display(quiver).to_string(),
                });
            }
        }
        if let Some(n) = self.algebra.relations().radical_power() {
            let n = n as usize;
            // depth-first over composable arrow sequences, pruning once the
            // running composite vanishes; only length-n composites matter
            let mut stack: Vec<(VertexId, usize, Matrix, ArrowId)> = Vec::new();
            for a in 0..quiver.arrows().len() {
                stack.push((quiver.arrow(a).target, 1, self.action[a].clone(), a));
            }
            while let Some((end, len, composite, first)) = stack.pop() {
                if composite.is_zero() {
                    continue;
                }
                if len == n {
                    return Err(ModuleError::RelationViolated {
                        path: alloc::format!(
                            "a length-{n} path starting with arrow {:?}",
                            quiver.arrow(first).name
                        ),
                    });
                }
                for a in 0..quiver.arrows().len() {
                    if quiver.arrow(a).source != end {
                        continue;
                    }
                    let next = match self.side {
                        Side::Right => self.action[a].mul(&composite),
                        Side::Left => composite.mul(&self.action[a]),
                    };
                    stack.push((quiver.arrow(a).target, len + 1, next, first));
                }
            }
        }
        Ok(())
    }

    // Same as `path_action` but usable on relation paths that are not in
    // the basis.
    fn path_action_unchecked(&self, path: &Path) -> Matrix {
        self.path_action(path)
    }

    /// The smallest submodule containing the given spanning vectors (one
    /// matrix of column vectors per vertex), with its inclusion map.
    pub fn submodule(&self, generators: &[Matrix]) -> (Module, ModuleHom) {
        assert_eq!(generators.len(), self.dims.len(), "one generator block per vertex");
        let field = self.algebra.field().clone();
        let mut basis: Vec<Matrix> = generators.iter().map(Matrix::col_space_basis).collect();
        loop {
            let mut candidates: Vec<Vec<&Matrix>> = Vec::new();
            let mut images: Vec<(usize, Matrix)> = Vec::new();
            for a in 0..self.action.len() {
                let from = self.acting_source(a);
                let to = self.acting_target(a);
                images.push((to, self.action[a].mul(&basis[from])));
            }
            for v in 0..self.dims.len() {
                let mut parts = vec![&basis[v]];
                for (to, img) in &images {
                    if *to == v {
                        parts.push(img);
                    }
                }
                candidates.push(parts);
            }
            let next: Vec<Matrix> = candidates
                .into_iter()
                .enumerate()
                .map(|(v, parts)| {
                    Matrix::hstack(field.clone(), self.dims[v], &parts).col_space_basis()
                })
                .collect();
            let stable = next.iter().zip(&basis).all(|(n, b)| n.cols() == b.cols());
            basis = next;
            if stable {
                break;
            }
        }
        let dims = DimensionVector::new(basis.iter().map(Matrix::cols).collect());
        let action: Vec<Matrix> = (0..self.action.len())
            .map(|a| {
                let from = self.acting_source(a);
                let to = self.acting_target(a);
                basis[to]
                    .solve(&self.action[a].mul(&basis[from]))
                    .expect("submodule spans are closed under the action")
            })
            .collect();
        let sub = Module::new(&self.algebra, self.side, dims, action)
            .expect("submodule of a valid module is valid");
        let inclusion = ModuleHom::new(sub.clone(), self.clone(), basis)
            .expect("submodule inclusion commutes with the action");
        (sub, inclusion)
    }

    /// The radical `M rad(R)` (right) or `rad(R) M` (left): the submodule
    /// spanned by the images of all arrow actions. Returns the submodule and
    /// its inclusion.
    pub fn radical(&self) -> (Module, ModuleHom) {
        let field = self.algebra.field().clone();
        let generators: Vec<Matrix> = (0..self.dims.len())
            .map(|v| {
                let parts: Vec<&Matrix> = (0..self.action.len())
                    .filter(|&a| self.acting_target(a) == v)
                    .map(|a| &self.action[a])
                    .collect();
                Matrix::hstack(field.clone(), self.dims[v], &parts)
            })
            .collect();
        self.submodule(&generators)
    }

    /// The largest semisimple quotient `M / rad M`, with the projection.
    pub fn top(&self) -> (Module, ModuleHom) {
        self.radical().1.cokernel()
    }

    /// The largest semisimple submodule: the joint kernel of all arrow
    /// actions leaving each vertex (the algebra's radical is generated by
    /// its arrows, so this is the socle). Returns it with its inclusion.
    pub fn socle(&self) -> (Module, ModuleHom) {
        let field = self.algebra.field().clone();
        let basis: Vec<Matrix> = (0..self.dims.len())
            .map(|v| {
                let parts: Vec<&Matrix> = (0..self.action.len())
                    .filter(|&a| self.acting_source(a) == v)
                    .map(|a| &self.action[a])
                    .collect();
                Matrix::vstack(field.clone(), self.dims[v], &parts).kernel_basis()
            })
            .collect();
        let dims = DimensionVector::new(basis.iter().map(Matrix::cols).collect());
        let action: Vec<Matrix> = (0..self.action.len())
            .map(|a| {
                let from = self.acting_source(a);
                let to = self.acting_target(a);
                basis[to]
                    .solve(&self.action[a].mul(&basis[from]))
                    .expect("arrow action maps the socle into the socle")
            })
            .collect();
        let socle = Module::new(&self.algebra, self.side, dims, action)
            .expect("socle of a valid module is valid");
        let inclusion = ModuleHom::new(socle.clone(), self.clone(), basis)
            .expect("socle inclusion commutes with the action");
        (socle, inclusion)
    }

    /// The projective cover: `P = direct sum of projectives matching top(M)`
    /// together with the surjection `P -> M`. The kernel of the cover lies
    /// in `rad P` because the summand multiplicities match the top exactly.
    pub fn projective_cover(&self) -> ProjectiveCover {
        let field = self.algebra.field().clone();
        let (top, projection) = self.top();
        // lift a basis of the top back to module elements, vertex by vertex
        let mut summands: Vec<VertexId> = Vec::new();
        let mut generators: Vec<Vec<crate::field::Scalar>> = Vec::new();
        for v in 0..self.dims.len() {
            let mult = top.dims()[v];
            if mult == 0 {
                continue;
            }
            let section = projection
                .map(v)
                .solve(&Matrix::identity(field.clone(), mult))
                .expect("top projection is surjective");
            for k in 0..mult {
                summands.push(v);
                generators.push(section.column(k));
            }
        }
        let mut module = Module::zero(&self.algebra, self.side);
        let mut blocks_per_summand: Vec<Vec<Vec<Path>>> = Vec::new();
        for &v in &summands {
            let (p, blocks) = Module::projective_with_paths(&self.algebra, v, self.side)
                .expect("cover vertex exists");
            module = module.direct_sum(&p).expect("same algebra and side");
            blocks_per_summand.push(blocks);
        }
        // the cover sends the generator of each summand to its lifted top
        // basis vector; a path p then goes to path_action(p) of that vector
        let maps: Vec<Matrix> = (0..self.dims.len())
            .map(|w| {
                let mut columns: Vec<Vec<crate::field::Scalar>> = Vec::new();
                for (idx, blocks) in blocks_per_summand.iter().enumerate() {
                    let generator =
                        Matrix::from_columns(field.clone(), generators[idx].len(), &[
                            generators[idx].clone()
                        ]);
                    for path in &blocks[w] {
                        let img = self.path_action(path).mul(&generator);
                        columns.push(img.column(0));
                    }
                }
                Matrix::from_columns(field.clone(), self.dims[w], &columns)
            })
            .collect();
        let cover = ModuleHom::new(module.clone(), self.clone(), maps)
            .expect("projective cover commutes with the action");
        ProjectiveCover { module, cover, summands }
    }

    /// Whether the module is projective: its projective cover has the same
    /// dimension vector, hence is an isomorphism.
    pub fn is_projective(&self) -> bool {
        self.projective_cover().module.dims() == self.dims()
    }
}

/// A projective cover `P -> M` with the multiset of its indecomposable
/// summands (vertices, with multiplicity, in vertex order).
pub struct ProjectiveCover {
    pub module: Module,
    pub cover: ModuleHom,
    pub summands: Vec<VertexId>,
}

/// A homomorphism of modules: one matrix per vertex commuting with all arrow
/// actions.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleHom {
    source: Module,
    target: Module,
    maps: Vec<Matrix>,
}

impl fmt::Debug for ModuleHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleHom({} -> {})", self.source.dims(), self.target.dims())
    }
}

impl ModuleHom {
    /// Validating constructor: checks shapes and the commuting squares
    /// `target.action(a) . maps[from] = maps[to] . source.action(a)`.
    pub fn new(source: Module, target: Module, maps: Vec<Matrix>) -> Result<Self, ModuleError> {
        if source.algebra != target.algebra {
            return Err(ModuleError::AlgebraMismatch);
        }
        if source.side != target.side {
            return Err(ModuleError::SideMismatch);
        }
        let quiver = source.algebra.quiver();
        if maps.len() != quiver.vertex_count() {
            return Err(ModuleError::MapCountMismatch {
                expected: quiver.vertex_count(),
                got: maps.len(),
            });
        }
        for v in 0..quiver.vertex_count() {
            let expected = (target.dims[v], source.dims[v]);
            let got = (maps[v].rows(), maps[v].cols());
            if expected != got {
                return Err(ModuleError::MapShapeMismatch {
                    vertex: quiver.vertex_label(v).to_string(),
                    expected,
                    got,
                });
            }
        }
        for a in 0..quiver.arrows().len() {
            let from = source.acting_source(a);
            let to = source.acting_target(a);
            let lhs = target.action[a].mul(&maps[from]);
            let rhs = maps[to].mul(&source.action[a]);
            if lhs != rhs {
                return Err(ModuleError::NotCommuting {
                    arrow: quiver.arrow(a).name.clone(),
                });
            }
        }
        Ok(ModuleHom { source, target, maps })
    }

    pub fn identity(module: &Module) -> Self {
        let field = module.algebra.field().clone();
        let maps = (0..module.dims.len())
            .map(|v| Matrix::identity(field.clone(), module.dims[v]))
            .collect();
        ModuleHom { source: module.clone(), target: module.clone(), maps }
    }

    pub fn zero(source: Module, target: Module) -> Self {
        let field = source.algebra.field().clone();
        let maps = (0..source.dims.len())
            .map(|v| Matrix::zero(field.clone(), target.dims[v], source.dims[v]))
            .collect();
        ModuleHom { source, target, maps }
    }

    pub fn source(&self) -> &Module {
        &self.source
    }

    pub fn target(&self) -> &Module {
        &self.target
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, v: VertexId) -> &Matrix {
        &self.maps[v]
    }

    /// Composition `self` then `then` (so `then . self`).
    pub fn compose(&self, then: &ModuleHom) -> ModuleHom {
        assert_eq!(
            self.target, then.source,
            "compose: inner modules do not match"
        );
        let maps = (0..self.maps.len())
            .map(|v| then.maps[v].mul(&self.maps[v]))
            .collect();
        ModuleHom { source: self.source.clone(), target: then.target.clone(), maps }
    }

    pub fn add(&self, other: &ModuleHom) -> ModuleHom {
        assert_eq!(self.source, other.source, "add: source mismatch");
        assert_eq!(self.target, other.target, "add: target mismatch");
        let maps = self
            .maps
            .iter()
            .zip(&other.maps)
            .map(|(a, b)| a.add(b))
            .collect();
        ModuleHom { source: self.source.clone(), target: self.target.clone(), maps }
    }

    pub fn scale(&self, s: &crate::field::Scalar) -> ModuleHom {
        let maps = self.maps.iter().map(|m| m.scale(s)).collect();
        ModuleHom { source: self.source.clone(), target: self.target.clone(), maps }
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn is_injective(&self) -> bool {
        (0..self.maps.len()).all(|v| self.maps[v].rank() == self.source.dims[v])
    }

    pub fn is_surjective(&self) -> bool {
        (0..self.maps.len()).all(|v| self.maps[v].rank() == self.target.dims[v])
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.dims == self.target.dims && self.is_injective()
    }

    /// Kernel submodule with its inclusion into the source.
    pub fn kernel(&self) -> (Module, ModuleHom) {
        let src = &self.source;
        let basis: Vec<Matrix> = self.maps.iter().map(Matrix::kernel_basis).collect();
        let dims = DimensionVector::new(basis.iter().map(Matrix::cols).collect());
        let action: Vec<Matrix> = (0..src.action.len())
            .map(|a| {
                let from = src.acting_source(a);
                let to = src.acting_target(a);
                basis[to]
                    .solve(&src.action[a].mul(&basis[from]))
                    .expect("action maps the kernel into the kernel")
            })
            .collect();
        let kernel = Module::new(&src.algebra, src.side, dims, action)
            .expect("kernel of a valid hom is valid");
        let inclusion = ModuleHom::new(kernel.clone(), src.clone(), basis)
            .expect("kernel inclusion commutes with the action");
        (kernel, inclusion)
    }

    /// Image submodule with its inclusion into the target.
    pub fn image(&self) -> (Module, ModuleHom) {
        self.target.submodule(&self.maps)
    }

    /// Cokernel quotient with the projection from the target.
    ///
    /// The quotient coordinates are the non-pivot coordinates of the image,
    /// as produced by [`Matrix::coimage_projection`], so cokernels are
    /// deterministic.
    pub fn cokernel(&self) -> (Module, ModuleHom) {
        let tgt = &self.target;
        let projections: Vec<Matrix> = self
            .maps
            .iter()
            .map(|m| m.coimage_projection().0)
            .collect();
        let dims = DimensionVector::new(projections.iter().map(Matrix::rows).collect());
        let action: Vec<Matrix> = (0..tgt.action.len())
            .map(|a| {
                let from = tgt.acting_source(a);
                let to = tgt.acting_target(a);
                // solve X . q_from = q_to . action(a) through transposes;
                // q_from is surjective so X is unique
                let rhs = projections[to].mul(&tgt.action[a]).transpose();
                projections[from]
                    .transpose()
                    .solve(&rhs)
                    .expect("action descends to the quotient")
                    .transpose()
            })
            .collect();
        let cokernel = Module::new(&tgt.algebra, tgt.side, dims, action)
            .expect("cokernel of a valid hom is valid");
        let projection = ModuleHom::new(tgt.clone(), cokernel.clone(), projections)
            .expect("cokernel projection commutes with the action");
        (cokernel, projection)
    }

    /// Flattens all vertex matrices into one coordinate vector (vertex by
    /// vertex, row-major). Used to express homs in a hom-space basis.
    pub fn flatten(&self) -> Vec<crate::field::Scalar> {
        let mut out = Vec::new();
        for m in &self.maps {
            for r in 0..m.rows() {
                for c in 0..m.cols() {
                    out.push(m.entry(r, c).clone());
                }
            }
        }
        out
    }
}

/// A basis of the space of module homomorphisms `M -> N`, computed as the
/// null space of the commuting-square constraints. The order is inherited
/// from the deterministic kernel basis, so repeated calls agree.
pub fn hom_basis(m: &Module, n: &Module) -> Result<Vec<ModuleHom>, ModuleError> {
    if m.algebra != n.algebra {
        return Err(ModuleError::AlgebraMismatch);
    }
    if m.side != n.side {
        return Err(ModuleError::SideMismatch);
    }
    let field = m.algebra.field().clone();
    let vertices = m.dims.len();
    // unknowns: the entries of f_v (an n.dims[v] x m.dims[v] matrix),
    // vertex blocks in order, each row-major
    let mut offsets = vec![0usize; vertices + 1];
    for v in 0..vertices {
        offsets[v + 1] = offsets[v] + n.dims[v] * m.dims[v];
    }
    let unknowns = offsets[vertices];
    let mut rows: Vec<Vec<crate::field::Scalar>> = Vec::new();
    for a in 0..m.algebra.quiver().arrows().len() {
        let from = m.acting_source(a);
        let to = m.acting_target(a);
        let na = n.arrow_action(a);
        let ma = m.arrow_action(a);
        // constraint: n.action(a) . f_from - f_to . m.action(a) = 0
        for r in 0..n.dims[to] {
            for c in 0..m.dims[from] {
                let mut row = vec![field.zero(); unknowns];
                for k in 0..n.dims[from] {
                    let coeff = na.entry(r, k);
                    if !coeff.is_zero() {
                        let idx = offsets[from] + k * m.dims[from] + c;
                        row[idx] = field.add(&row[idx], coeff);
                    }
                }
                for l in 0..m.dims[to] {
                    let coeff = ma.entry(l, c);
                    if !coeff.is_zero() {
                        let idx = offsets[to] + r * m.dims[to] + l;
                        row[idx] = field.sub(&row[idx], coeff);
                    }
                }
                rows.push(row);
            }
        }
    }
    let mut constraint = Matrix::zero(field.clone(), rows.len(), unknowns);
    for (r, row) in rows.iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            if !v.is_zero() {
                constraint.set(r, c, v.clone());
            }
        }
    }
    let kernel = constraint.kernel_basis();
    let mut basis = Vec::with_capacity(kernel.cols());
    for k in 0..kernel.cols() {
        let maps: Vec<Matrix> = (0..vertices)
            .map(|v| {
                Matrix::from_fn(field.clone(), n.dims[v], m.dims[v], |r, c| {
                    kernel.entry(offsets[v] + r * m.dims[v] + c, k).clone()
                })
            })
            .collect();
        basis.push(
            ModuleHom::new(m.clone(), n.clone(), maps)
                .expect("kernel of the constraint system is a hom"),
        );
    }
    Ok(basis)
}
