//! Exact computation with chromatic signed-symmetric functions of signed
//! graphs: power-sum expansions over edge subsets and over the flats of the
//! frame matroid, the reciprocity involution, Zaslavsky's two chromatic
//! polynomials, geometric chamber oracles, and the signed-path
//! distinguishing search.
//!
//! Everything is exact: coefficients are big integers, feasibility and
//! interpolation run over big rationals, and all outputs are canonically
//! ordered so identical inputs produce identical bytes.

pub mod chambers;
pub mod chromatic;
pub mod error;
pub mod flats;
pub mod graph;
pub mod partition;
pub mod paths;
pub mod poly;
pub mod ssym;
pub mod truncated;

pub use chambers::{Chamber, ChamberSet, MultiplicityCheck, Sign, SignVector};
pub use chromatic::ChromaticReport;
pub use error::{Error, Result};
pub use flats::{Flat, FlatLattice};
pub use graph::{BalanceDecomposition, EdgeRef, SignedGraph};
pub use partition::PartitionType;
pub use paths::{CollisionReport, Composition, MainTheoremCheck};
pub use poly::IntPolynomial;
pub use ssym::{SSymFunction, SymFunction, TriangularityReport};
pub use truncated::TruncatedPolynomial;
