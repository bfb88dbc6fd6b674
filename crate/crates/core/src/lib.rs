//! Exact arithmetic for Kazhdan-Patterson covering groups of `GL_r` over a
//! tame p-adic field: Hilbert symbols, cocycles and centers, metaplectic
//! tensor product multiplicities, segment combinatorics, germ values at
//! torsion points, and Whittaker dimensions checked against enumeration.

pub mod cli;
pub mod combinat;
pub mod cover;
pub mod cyclotomic;
pub mod error;
pub mod germ;
pub mod local_field;
pub mod segments;
pub mod whittaker;

pub use cover::{Composition, CoverParams, TorusClass};
pub use cyclotomic::{CycInt, GroupRing};
pub use error::{Error, Result};
pub use germ::TorusPoint;
pub use local_field::{FieldClass, LocalFieldModel, RootOfUnity};
pub use segments::{CuspidalLabel, GrothendieckElement, Kind, ProductTerm, Segment};
pub use whittaker::{DimResult, Provenance};
