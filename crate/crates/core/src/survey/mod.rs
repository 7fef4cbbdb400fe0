//! Enumeration by genus and batch checks over the enumerated semigroups.

mod classify;
mod scan;
mod tree;

pub use classify::{
    family_scan, height1_classify, predicted_height1, Family, FamilyScanReport, FamilyScanRow,
    Height1Report,
};
pub use scan::{
    checkpoint_path, conjecture_scan, counterexample_path, run_survey, ScanOutcome, ScanSummary,
    SurveyReport, SurveyRow,
};
pub use tree::{count_by_genus, enumerate_semigroups, tree_levels, TreeLevels, TreeNode};
