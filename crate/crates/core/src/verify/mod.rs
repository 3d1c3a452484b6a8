//! Verification harness: relation checks, spectra, basis constructions,
//! ladder actions, series expansions and structural invariants.

mod relations;
mod report;
pub mod basis;
pub mod ladder;
pub mod series;
pub mod spectra;
pub mod structure;

pub use relations::{
    check_all, check_casimirs, check_relation, check_relations, check_relations_tol, check_strongest, mutated_catalog, MATRIX_TOL,
    SAMPLE_QS, SCALAR_TOL,
};
pub use report::{exit_code, reports_to_json, summarize, Mode, Report, ReportJson, Summary, Verdict, Witness};
