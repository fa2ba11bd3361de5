//! Edge ideals of simple graphs: Hilbert series, graded Betti numbers and the
//! combinatorial invariants that control them, with special support for
//! Cameron–Walker graphs.

pub mod bits;
pub mod cameron_walker;
mod canon;
pub mod families;
pub mod graph;
pub mod hilbert;
pub mod homology;
pub mod invariants;
pub mod poly;
pub mod resolution;

pub use bits::VertexSet;
pub use cameron_walker::{CwError, CwReport, CwSpec, Recognition};
pub use families::{Family, FamilyPrediction, Predicted};
pub use graph::{CanonicalKey, GraphError, GraphJson, SimpleGraph};
pub use hilbert::{HilbertData, HilbertError, HilbertSeries};
pub use homology::{Field, SimplicialComplex};
pub use invariants::{Witness, WitnessedValue};
pub use poly::IntPolynomial;
pub use resolution::{BettiTable, HomologicalReport, ResolutionError};
