//! Necessary-condition oracles for n-congruence (trace congruences and
//! 2-division splitting types), and the reverse 6-congruence pipelines.

pub mod checks;
pub mod examples;
pub mod pipeline;
pub mod report;

pub use checks::{batch_check_by_name, batch_checks, jacobian_report, BatchCheck, CheckRow, JacobianReport};
pub use examples::{example410_point, example410_t, example49_point};
pub use pipeline::{known_label, reverse6_pipeline, run_one, PipelineParam, PipelineReport, PipelineRun, Skipped};
pub use report::{ap_mod_n_check, ap_mod_n_check_with, mod2_type_check, ApPair, CongruenceReport, Mod2Report};
