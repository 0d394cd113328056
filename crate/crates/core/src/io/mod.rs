//! Reading and writing monoids, reports and graphs.

mod dot;
mod report;
mod text;

pub use dot::export_dot;
pub use report::{
    DensitySection, IdealEntry, LatticeSection, MonoidSection, RadicalsSection, ReportDocument,
    TopologySection, REPORT_FORMAT,
};
pub use text::{parse_monoid_file, serialize_monoid, ParseError};
