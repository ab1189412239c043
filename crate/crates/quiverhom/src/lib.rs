//! Exact homological algebra over finite-dimensional bound quiver algebras.
//!
//! The crate computes with right and left modules over algebras of the form
//! `KQ/I`, where `Q` is a finite quiver and `I` is a monomial admissible ideal
//! (for example `rad^2(KQ)`). Modules are stored as quiver representations
//! with exact matrix entries (arbitrary-precision rationals or a prime field),
//! so every rank, kernel and cokernel below is computed without rounding.
//!
//! Layers, bottom up:
//!
//! * [`field`] / [`matrix`] — exact dense linear algebra (`rref`, rank,
//!   kernels, solving, canonical quotient projections).
//! * [`algebra`] — quivers, paths and bound quiver algebras with an
//!   enumerated path basis.
//! * [`module`] — modules as representations: simples, projectives, cyclic
//!   quotients, radicals/tops/socles, kernels/cokernels/images of
//!   homomorphisms, hom-space bases and projective covers.
//! * [`homalg`] — duals `Hom(-, R)`, minimal projective resolutions,
//!   syzygies, the transpose, Ext-modules, the evaluation map `M -> M**`,
//!   and the torsionless/reflexive/2-reflexive decision procedures.
//! * [`search`] — deterministic candidate enumeration and hunts for modules
//!   with prescribed homological behaviour.
//! * [`presets`] — the example algebras and modules that ship with the CLI.
//!
//! The crate is `no_std` (it requires `alloc`); all types are immutable after
//! construction and all operations are pure functions.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod algebra;
pub mod field;
pub mod homalg;
pub mod matrix;
pub mod module;
pub mod presets;
pub mod search;

pub use algebra::{BoundQuiverAlgebra, Path, Quiver, RelationSet};
pub use field::{FieldSpec, Scalar};
pub use matrix::Matrix;
pub use module::{DimensionVector, Module, ModuleHom, Side};
