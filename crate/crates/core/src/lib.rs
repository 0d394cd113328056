//! Ideal lattices and terminal spaces of finite commutative monoids.
//!
//! A monoid is given by its Cayley table ([`FiniteMonoid`]). From it we
//! enumerate every ideal ([`IdealLattice`]), classify them, and build the
//! space of strongly irreducible ideals under the hull-kernel topology
//! ([`TerminalSpace`]). The [`verifier`] runs every structural check on one
//! monoid and collects the results in a [`VerificationReport`].

pub mod analysis;
pub mod corpus;
pub mod element_set;
pub mod ideal;
pub mod io;
pub mod iso;
pub mod monoid;
pub mod topology;
pub mod verifier;

pub use analysis::Analysis;
pub use corpus::{enumerate_commutative_monoids, make_family, CorpusError, FamilySpec};
pub use element_set::ElementSet;
pub use ideal::{
    classify_all, classify_ideal, enumerate_ideals, generated_ideal, is_ideal, lattice_analysis,
    product_ideal, radical, Ideal, IdealClassification, IdealError, IdealLattice, Refutation,
};
pub use io::{export_dot, parse_monoid_file, serialize_monoid, ParseError, ReportDocument};
pub use iso::is_isomorphic;
pub use monoid::{validate_monoid, FiniteMonoid, MonoidError};
pub use topology::{build_terminal_space, SubsetMode, TerminalSpace, TopologyError};
pub use verifier::{run_all, Status, VerificationReport, VerifyOptions};
