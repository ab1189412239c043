//! Quivers, paths and bound quiver algebras `KQ/I`.
//!
//! Only monomial admissible ideals are supported: a radical power `rad^n`
//! (all paths of length `>= n` vanish), a set of monomial relations (paths of
//! length `>= 2` that vanish together with every path containing them), or
//! both. Such quotients have a basis consisting of the surviving paths, which
//! the constructor enumerates once; multiplication of basis paths is either
//! again a basis path or zero.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::field::FieldSpec;

/// Index of a vertex in declaration order.
pub type VertexId = usize;
/// Index of an arrow in declaration order.
pub type ArrowId = usize;

/// Default ceiling on the number of basis paths enumerated before a relation
/// set is declared non-admissible.
pub const DEFAULT_BASIS_CAP: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: VertexId,
    pub target: VertexId,
}

/// A finite quiver: ordered vertex labels and ordered named arrows. Loops
/// and parallel arrows are allowed; labels and arrow names must be unique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

/// Errors from quiver, relation and algebra construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    DuplicateVertex(String),
    DuplicateArrow(String),
    UnknownVertex(String),
    UnknownArrow(String),
    EmptyQuiver,
    NonComposablePath { earlier: String, later: String },
    RelationTooShort { length: usize },
    RadicalPowerTooSmall { power: u32 },
    BasisCapExceeded { cap: usize },
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::DuplicateVertex(v) => write!(f, "duplicate vertex label {v:?}"),
            AlgebraError::DuplicateArrow(a) => write!(f, "duplicate arrow name {a:?}"),
            AlgebraError::UnknownVertex(v) => write!(f, "unknown vertex {v:?}"),
            AlgebraError::UnknownArrow(a) => write!(f, "unknown arrow {a:?}"),
            AlgebraError::EmptyQuiver => write!(f, "a quiver needs at least one vertex"),
            AlgebraError::NonComposablePath { earlier, later } => {
                write!(f, "arrows {earlier:?} and {later:?} do not compose")
            }
            AlgebraError::RelationTooShort { length } => {
                write!(f, "relation monomials must have length >= 2, got {length}")
            }
            AlgebraError::RadicalPowerTooSmall { power } => {
                write!(f, "radical power must be >= 2, got {power}")
            }
            AlgebraError::BasisCapExceeded { cap } => {
                write!(f, "path enumeration exceeded the cap of {cap} basis paths; relations are not admissible")
            }
        }
    }
}

impl core::error::Error for AlgebraError {}

impl Quiver {
    /// Builds a quiver from vertex labels and `(name, from, to)` arrow
    /// triples given by label.
    pub fn new(
        vertices: Vec<String>,
        arrows: Vec<(String, String, String)>,
    ) -> Result<Self, AlgebraError> {
        if vertices.is_empty() {
            return Err(AlgebraError::EmptyQuiver);
        }
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(AlgebraError::DuplicateVertex(v.clone()));
            }
        }
        let index = |label: &String| {
            vertices
                .iter()
                .position(|v| v == label)
                .ok_or_else(|| AlgebraError::UnknownVertex(label.clone()))
        };
        let mut built = Vec::with_capacity(arrows.len());
        for (name, from, to) in arrows {
            if built.iter().any(|a: &Arrow| a.name == name) {
                return Err(AlgebraError::DuplicateArrow(name));
            }
            built.push(Arrow { source: index(&from)?, target: index(&to)?, name });
        }
        Ok(Quiver { vertices, arrows: built })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_label(&self, v: VertexId) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, label: &str) -> Option<VertexId> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, a: ArrowId) -> &Arrow {
        &self.arrows[a]
    }

    pub fn arrow_index(&self, name: &str) -> Option<ArrowId> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// The length-one path consisting of the single arrow `a`.
    pub fn arrow_as_path(&self, a: ArrowId) -> Path {
        let arrow = self.arrow(a);
        Path { source: arrow.source, target: arrow.target, arrows: alloc::vec![a] }
    }

    /// The quiver with every arrow reversed (same vertex and arrow order).
    pub fn reversed(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow { name: a.name.clone(), source: a.target, target: a.source })
                .collect(),
        }
    }

    /// Resolves a sequence of arrow names into a [`Path`], checking
    /// composability. Empty sequences are not expressible here; use
    /// [`Path::trivial`] for idempotents.
    pub fn path_from_arrow_names(&self, names: &[String]) -> Result<Path, AlgebraError> {
        let mut arrows = Vec::with_capacity(names.len());
        for name in names {
            let id = self
                .arrow_index(name)
                .ok_or_else(|| AlgebraError::UnknownArrow(name.clone()))?;
            if let Some(&prev) = arrows.last() {
                let prev: &Arrow = self.arrow(prev);
                if prev.target != self.arrow(id).source {
                    return Err(AlgebraError::NonComposablePath {
                        earlier: prev.name.clone(),
                        later: name.clone(),
                    });
                }
            }
            arrows.push(id);
        }
        match arrows.first() {
            None => Err(AlgebraError::RelationTooShort { length: 0 }),
            Some(&first) => {
                let source = self.arrow(first).source;
                let target = self.arrow(*arrows.last().unwrap()).target;
                Ok(Path { source, target, arrows })
            }
        }
    }
}

/// A directed path: `arrows` traversed in order, first to last. The empty
/// sequence is the trivial path `e_v` at its vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    source: VertexId,
    target: VertexId,
    arrows: Vec<ArrowId>,
}

impl Path {
    pub fn trivial(v: VertexId) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn target(&self) -> VertexId {
        self.target
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    fn extended(&self, quiver: &Quiver, a: ArrowId) -> Path {
        debug_assert_eq!(self.target, quiver.arrow(a).source);
        let mut arrows = self.arrows.clone();
        arrows.push(a);
        Path { source: self.source, target: quiver.arrow(a).target, arrows }
    }

    /// Whether `needle`'s arrow sequence occurs contiguously inside this one.
    fn contains_subpath(&self, needle: &Path) -> bool {
        let n = needle.arrows.len();
        if n == 0 || n > self.arrows.len() {
            return n == 0;
        }
        self.arrows.windows(n).any(|w| w == needle.arrows.as_slice())
    }

    /// Renders as `e<label>` for trivial paths or arrow names joined by `*`.
    pub fn display<'a>(&'a self, quiver: &'a Quiver) -> PathDisplay<'a> {
        PathDisplay { path: self, quiver }
    }
}

pub struct PathDisplay<'a> {
    path: &'a Path,
    quiver: &'a Quiver,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.arrows.is_empty() {
            write!(f, "e{}", self.quiver.vertex_label(self.path.source))
        } else {
            for (i, a) in self.path.arrows.iter().enumerate() {
                if i > 0 {
                    write!(f, "*")?;
                }
                write!(f, "{}", self.quiver.arrow(*a).name)?;
            }
            Ok(())
        }
    }
}

/// A monomial relation set: an optional radical power (kill all paths of
/// that length and longer) plus explicit monomial relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSet {
    radical_power: Option<u32>,
    monomials: Vec<Path>,
}

impl RelationSet {
    pub fn new(
        quiver: &Quiver,
        radical_power: Option<u32>,
        monomials: &[Vec<String>],
    ) -> Result<Self, AlgebraError> {
        if let Some(p) = radical_power {
            if p < 2 {
                return Err(AlgebraError::RadicalPowerTooSmall { power: p });
            }
        }
        let mut paths = Vec::with_capacity(monomials.len());
        for names in monomials {
            if names.len() < 2 {
                return Err(AlgebraError::RelationTooShort { length: names.len() });
            }
            paths.push(quiver.path_from_arrow_names(names)?);
        }
        Ok(RelationSet { radical_power, monomials: paths })
    }

    /// The relation set `rad^2 = 0`.
    pub fn radical_square(quiver: &Quiver) -> Self {
        let _ = quiver;
        RelationSet { radical_power: Some(2), monomials: Vec::new() }
    }

    pub fn radical_power(&self) -> Option<u32> {
        self.radical_power
    }

    pub fn monomials(&self) -> &[Path] {
        &self.monomials
    }

    fn kills(&self, path: &Path) -> bool {
        if let Some(n) = self.radical_power {
            if path.len() >= n as usize {
                return true;
            }
        }
        self.monomials.iter().any(|m| path.contains_subpath(m))
    }

    fn reversed(&self, original: &Quiver) -> RelationSet {
        let monomials = self
            .monomials
            .iter()
            .map(|m| Path {
                source: m.target,
                target: m.source,
                arrows: m.arrows.iter().rev().copied().collect(),
            })
            .collect();
        let _ = original;
        RelationSet { radical_power: self.radical_power, monomials }
    }
}

/// A finite-dimensional bound quiver algebra `KQ/I` with its enumerated
/// basis of surviving paths.
///
/// Basis order is by path length, then by source vertex, then by the
/// sequence of arrow names; everything downstream inherits its determinism
/// from this order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundQuiverAlgebra {
    field: FieldSpec,
    quiver: Quiver,
    relations: RelationSet,
    cap: usize,
    basis: Vec<Path>,
    index: BTreeMap<Path, usize>,
}

impl BoundQuiverAlgebra {
    /// Builds the algebra, enumerating its path basis with the default cap.
    pub fn build(
        field: FieldSpec,
        quiver: Quiver,
        relations: RelationSet,
    ) -> Result<Self, AlgebraError> {
        Self::build_with_cap(field, quiver, relations, DEFAULT_BASIS_CAP)
    }

    /// Builds the algebra with an explicit ceiling on the basis size. When
    /// enumeration exceeds the cap the relations are rejected as
    /// non-admissible (enumeration would not otherwise terminate for, say, an
    /// unbound loop).
    pub fn build_with_cap(
        field: FieldSpec,
        quiver: Quiver,
        relations: RelationSet,
        cap: usize,
    ) -> Result<Self, AlgebraError> {
        let mut basis: Vec<Path> = (0..quiver.vertex_count()).map(Path::trivial).collect();
        if basis.len() > cap {
            return Err(AlgebraError::BasisCapExceeded { cap });
        }
        let mut frontier = basis.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for path in &frontier {
                for (id, arrow) in quiver.arrows().iter().enumerate() {
                    if arrow.source != path.target() {
                        continue;
                    }
                    let longer = path.extended(&quiver, id);
                    // monomial ideals: once a path dies every extension dies,
                    // so extending survivors only is exhaustive
                    if !relations.kills(&longer) {
                        next.push(longer);
                    }
                }
            }
            basis.extend(next.iter().cloned());
            if basis.len() > cap {
                return Err(AlgebraError::BasisCapExceeded { cap });
            }
            frontier = next;
        }
        basis.sort_by(|a, b| Self::path_key(&quiver, a).cmp(&Self::path_key(&quiver, b)));
        let index = basis.iter().cloned().zip(0..).collect();
        Ok(BoundQuiverAlgebra { field, quiver, relations, cap, basis, index })
    }

    fn path_key<'a>(quiver: &'a Quiver, p: &'a Path) -> (usize, VertexId, Vec<&'a str>) {
        let names = p.arrows().iter().map(|&a| quiver.arrow(a).name.as_str()).collect();
        (p.len(), p.source(), names)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &RelationSet {
        &self.relations
    }

    /// The `K`-dimension of the algebra.
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_index(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn is_basis_path(&self, p: &Path) -> bool {
        self.index.contains_key(p)
    }

    /// Basis paths with the given source, in basis order.
    pub fn paths_from(&self, v: VertexId) -> Vec<&Path> {
        self.basis.iter().filter(|p| p.source() == v).collect()
    }

    /// Basis paths with the given target, in basis order.
    pub fn paths_into(&self, v: VertexId) -> Vec<&Path> {
        self.basis.iter().filter(|p| p.target() == v).collect()
    }

    /// Basis paths from `i` to `j`, in basis order.
    pub fn paths_between(&self, i: VertexId, j: VertexId) -> Vec<&Path> {
        self.basis
            .iter()
            .filter(|p| p.source() == i && p.target() == j)
            .collect()
    }

    /// Product of two basis paths, traversing `p` first and then `q`;
    /// `None` encodes zero (non-composable endpoints or a killed path).
    ///
    /// Panics when either argument is not a basis path.
    pub fn multiply(&self, p: &Path, q: &Path) -> Option<Path> {
        assert!(self.is_basis_path(p), "multiply: left factor is not a basis path");
        assert!(self.is_basis_path(q), "multiply: right factor is not a basis path");
        if p.target() != q.source() {
            return None;
        }
        let mut arrows = p.arrows().to_vec();
        arrows.extend_from_slice(q.arrows());
        let product = Path { source: p.source(), target: q.target(), arrows };
        self.is_basis_path(&product).then_some(product)
    }

    /// The opposite algebra: every arrow (and every relation monomial)
    /// reversed. `opposite` is an involution and preserves dimension.
    pub fn opposite(&self) -> BoundQuiverAlgebra {
        let quiver = self.quiver.reversed();
        let relations = self.relations.reversed(&self.quiver);
        Self::build_with_cap(self.field.clone(), quiver, relations, self.cap)
            .expect("opposite of an admissible algebra is admissible")
    }
}
