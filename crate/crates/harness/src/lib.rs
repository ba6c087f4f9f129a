//! Scenario runner binding named claims to computations, with JSON and text
//! reports.

pub mod descriptors;
pub mod report;
pub mod scenarios;

pub use report::{Claim, Provenance, Report, Status};
pub use scenarios::{list_scenarios, run_all, run_scenario, Overrides, Scenario};
