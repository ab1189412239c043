//! JSON spec files for algebras and modules.
//!
//! Algebra spec:
//!
//! ```json
//! {
//!   "field": {"kind": "rational"} | {"kind": "prime", "p": 2},
//!   "quiver": {
//!     "vertices": ["1", "2"],
//!     "arrows": [{"name": "a", "from": "1", "to": "2"}]
//!   },
//!   "relations": {"radical_power": 2, "monomials": [["a", "b"]]}
//! }
//! ```
//!
//! Module spec: a `side` (`"right"` or `"left"`) plus a `construct` that is
//! one of `simple`, `projective`, `cyclic_quotient` (kill paths are arrow
//! name sequences) or `explicit` (dimension per vertex label and one matrix
//! per arrow name; entries are integers or `"num/den"` strings; omitted
//! vertices and arrows default to zero).

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Deserialize;

use quiverhom::{
    BoundQuiverAlgebra, DimensionVector, FieldSpec, Matrix, Module, Quiver, RelationSet, Scalar,
    Side,
};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub field: FieldJson,
    pub quiver: QuiverJson,
    #[serde(default)]
    pub relations: RelationsJson,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldJson {
    Rational,
    Prime { p: u64 },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverJson {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowJson>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowJson {
    pub name: String,
    pub from: String,
    pub to: String,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationsJson {
    #[serde(default)]
    pub radical_power: Option<u32>,
    #[serde(default)]
    pub monomials: Vec<Vec<String>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub side: SideJson,
    pub construct: ConstructJson,
}

#[derive(Copy, Clone, Debug, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SideJson {
    Right,
    Left,
}

impl From<SideJson> for Side {
    fn from(s: SideJson) -> Side {
        match s {
            SideJson::Right => Side::Right,
            SideJson::Left => Side::Left,
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ConstructJson {
    Simple {
        vertex: String,
    },
    Projective {
        vertex: String,
    },
    CyclicQuotient {
        vertex: String,
        #[serde(default)]
        kill: Vec<Vec<String>>,
    },
    Explicit {
        dims: BTreeMap<String, usize>,
        #[serde(default)]
        action: BTreeMap<String, Vec<Vec<EntryJson>>>,
    },
}

/// A matrix entry: an integer, or a string like `"3"` or `"-1/2"`.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum EntryJson {
    Int(i64),
    Literal(String),
}

impl EntryJson {
    fn to_scalar(&self, field: &FieldSpec) -> Result<Scalar, String> {
        match self {
            EntryJson::Int(n) => Ok(field.integer(*n)),
            EntryJson::Literal(s) => {
                let parse_int =
                    |t: &str| t.trim().parse::<i64>().map_err(|_| format!("bad scalar {s:?}"));
                match s.split_once('/') {
                    None => Ok(field.integer(parse_int(s)?)),
                    Some((num, den)) => field
                        .fraction(parse_int(num)?, parse_int(den)?)
                        .map_err(|e| e.to_string()),
                }
            }
        }
    }
}

pub fn parse_algebra(text: &str) -> Result<Arc<BoundQuiverAlgebra>, String> {
    let spec: AlgebraSpec =
        serde_json::from_str(text).map_err(|e| format!("algebra spec: {e}"))?;
    build_algebra(&spec)
}

pub fn build_algebra(spec: &AlgebraSpec) -> Result<Arc<BoundQuiverAlgebra>, String> {
    let field = match spec.field {
        FieldJson::Rational => FieldSpec::rational(),
        FieldJson::Prime { p } => FieldSpec::prime(p).map_err(|e| e.to_string())?,
    };
    let arrows = spec
        .quiver
        .arrows
        .iter()
        .map(|a| (a.name.clone(), a.from.clone(), a.to.clone()))
        .collect();
    let quiver =
        Quiver::new(spec.quiver.vertices.clone(), arrows).map_err(|e| e.to_string())?;
    let relations = RelationSet::new(
        &quiver,
        spec.relations.radical_power,
        &spec.relations.monomials,
    )
    .map_err(|e| e.to_string())?;
    BoundQuiverAlgebra::build(field, quiver, relations)
        .map(Arc::new)
        .map_err(|e| e.to_string())
}

pub fn parse_module(text: &str, algebra: &Arc<BoundQuiverAlgebra>) -> Result<Module, String> {
    let spec: ModuleSpec = serde_json::from_str(text).map_err(|e| format!("module spec: {e}"))?;
    build_module(&spec, algebra)
}

pub fn build_module(spec: &ModuleSpec, algebra: &Arc<BoundQuiverAlgebra>) -> Result<Module, String> {
    let side: Side = spec.side.into();
    let quiver = algebra.quiver();
    let vertex_index = |label: &str| {
        quiver
            .vertex_index(label)
            .ok_or_else(|| format!("unknown vertex {label:?}"))
    };
    match &spec.construct {
        ConstructJson::Simple { vertex } => {
            Module::simple(algebra, vertex_index(vertex)?, side).map_err(|e| e.to_string())
        }
        ConstructJson::Projective { vertex } => {
            Module::projective(algebra, vertex_index(vertex)?, side).map_err(|e| e.to_string())
        }
        ConstructJson::CyclicQuotient { vertex, kill } => {
            let mut paths = Vec::with_capacity(kill.len());
            for names in kill {
                paths.push(
                    quiver
                        .path_from_arrow_names(names)
                        .map_err(|e| format!("kill path: {e}"))?,
                );
            }
            Module::cyclic_quotient(algebra, vertex_index(vertex)?, side, &paths)
                .map_err(|e| e.to_string())
        }
        ConstructJson::Explicit { dims, action } => {
            let field = algebra.field().clone();
            let mut dim_vec = vec![0usize; quiver.vertex_count()];
            for (label, d) in dims {
                dim_vec[vertex_index(label)?] = *d;
            }
            let mut matrices = Vec::with_capacity(quiver.arrows().len());
            for (id, arrow) in quiver.arrows().iter().enumerate() {
                let (rows, cols) = match side {
                    Side::Right => (dim_vec[arrow.target], dim_vec[arrow.source]),
                    Side::Left => (dim_vec[arrow.source], dim_vec[arrow.target]),
                };
                let matrix = match action.get(&arrow.name) {
                    None => Matrix::zero(field.clone(), rows, cols),
                    Some(data) => {
                        if data.len() != rows || data.iter().any(|r| r.len() != cols) {
                            return Err(format!(
                                "action of arrow {:?} must be a {rows}x{cols} matrix",
                                arrow.name
                            ));
                        }
                        let mut m = Matrix::zero(field.clone(), rows, cols);
                        for (r, row) in data.iter().enumerate() {
                            for (c, entry) in row.iter().enumerate() {
                                m.set(r, c, entry.to_scalar(&field)?);
                            }
                        }
                        m
                    }
                };
                let _ = id;
                matrices.push(matrix);
            }
            for name in action.keys() {
                if quiver.arrow_index(name).is_none() {
                    return Err(format!("unknown arrow {name:?} in action"));
                }
            }
            Module::new(algebra, side, DimensionVector::new(dim_vec), matrices)
                .map_err(|e| e.to_string())
        }
    }
}
