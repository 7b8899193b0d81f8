//! Document formats: profiles, weighted majority graphs and verdict reports.

mod graph_doc;
mod profile_doc;
mod report;

pub use graph_doc::{parse_graph, serialize_graph, GraphDocument};
pub use profile_doc::{parse_profile, serialize_profile};
pub use report::{
    describe_universe, describe_witness, embedded_profiles, parse_report, render_theorem_report, serialize_report, theorem_report_json,
    Report,
    PROFILE_BEGIN, PROFILE_END,
};
