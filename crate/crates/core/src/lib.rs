//! Exact classification of extended magical sl2-triples.
//!
//! Everything here is integer arithmetic over simple-root coefficient vectors,
//! partitions and explicit integer matrix models. The modules build on each
//! other roughly in this order:
//!
//! - [`rootsys`]: root systems of every simple type and ad_h gradings.
//! - [`orbits`]: partitions, signed Young diagrams and weighted Dynkin diagrams.
//! - [`sl2data`]: sl2-module multiplicities and the closed dimension formulas.
//! - [`oracle`]: brute-force matrix models of sl2-triples and Cartan involutions.
//! - [`realforms`]: the catalog of real forms and centralizer real forms.
//! - [`magical`]: the extended magical criterion and family classification.
//! - [`moduli`]: Slodowy parameter counts, expected dimensions, Cayley domains.
//! - [`dataset`]: curated exceptional orbit records.
//! - [`verify`]: the cross-check suite behind `magical verify`.

pub mod dataset;
pub mod error;
mod linalg;
pub mod magical;
pub mod moduli;
pub mod oracle;
pub mod orbits;
pub mod realforms;
pub mod rootsys;
pub mod sl2data;
pub mod verify;

pub use error::{Error, Result};
pub use magical::{classify_family, classify_real_form, extended_magical_status, MagicalStatus, Verdict};
pub use orbits::{OrbitLabel, Partition, SignedPartitionData};
pub use realforms::{describe, RealForm, RealFormDescriptor};
pub use rootsys::{ad_grading, build_root_system, Family, GradingDims, LieType, RootSystem, WeightedDynkinDiagram};
pub use sl2data::{module_multiplicities, Sl2Data};
