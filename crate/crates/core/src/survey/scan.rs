//! Cyclotomic versus complete intersection over symmetric semigroups.

use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, BufWriter, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::cyclotomy::{is_cyclotomic, semigroup_polynomial};
use crate::error::{Error, Result};
use crate::intpoly::is_kronecker_graeffe;
use crate::semigroup::NumericalSemigroup;
use crate::structure::is_complete_intersection;

use super::tree::{tree_levels, TreeNode};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRow {
    pub generators: Vec<u64>,
    pub frobenius: i64,
    pub genus: u64,
    pub symmetric: bool,
    pub cyclotomic: bool,
    pub complete_intersection: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub depth: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub height: Option<u32>,
    pub agreement: bool,
}

impl SurveyRow {
    pub fn compute(s: &NumericalSemigroup) -> SurveyRow {
        let factorization = is_cyclotomic(s);
        let ci = is_complete_intersection(s).is_some();
        let symmetric = s.is_symmetric();
        let cyclotomic = factorization.is_some();
        assert!(
            !cyclotomic || symmetric,
            "cyclotomic but not symmetric: {s}"
        );
        SurveyRow {
            generators: s.generators().to_vec(),
            frobenius: s.frobenius(),
            genus: s.genus(),
            symmetric,
            cyclotomic,
            complete_intersection: ci,
            depth: factorization.as_ref().map(|f| f.depth()),
            height: factorization.as_ref().map(|f| f.height()),
            agreement: cyclotomic == ci,
        }
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("row serializes")
    }

    /// Parses one JSONL row and checks its internal consistency.
    pub fn from_json_line(line: &str) -> Result<SurveyRow> {
        let row: SurveyRow = serde_json::from_str(line)?;
        if row.agreement != (row.cyclotomic == row.complete_intersection) {
            return Err(Error::Parse("agreement flag is inconsistent".into()));
        }
        if row.cyclotomic != (row.depth.is_some() && row.height.is_some()) {
            return Err(Error::Parse(
                "depth/height must be present exactly for cyclotomic rows".into(),
            ));
        }
        if row.generators.is_empty() || row.generators.contains(&0) {
            return Err(Error::Parse("generators must be positive".into()));
        }
        Ok(row)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub max_frobenius: u64,
    pub total: usize,
    pub cyclotomic: usize,
    pub complete_intersection: usize,
    pub agreements: usize,
    pub disagreements: usize,
}

impl ScanSummary {
    fn add(&mut self, row: &SurveyRow) {
        self.total += 1;
        self.cyclotomic += usize::from(row.cyclotomic);
        self.complete_intersection += usize::from(row.complete_intersection);
        if row.agreement {
            self.agreements += 1;
        } else {
            self.disagreements += 1;
        }
    }
}

#[derive(Debug, Clone)]
pub struct ScanOutcome {
    pub rows: Vec<SurveyRow>,
    pub summary: ScanSummary,
}

impl ScanOutcome {
    pub fn non_cyclotomic(&self) -> impl Iterator<Item = &SurveyRow> {
        self.rows.iter().filter(|r| !r.cyclotomic)
    }

    pub fn disagreements(&self) -> impl Iterator<Item = &SurveyRow> {
        self.rows.iter().filter(|r| !r.agreement)
    }
}

/// Symmetric semigroups with `F <= max_frobenius`, level by level in genus.
/// A symmetric semigroup of genus `g` has `F = 2g - 1`.
fn symmetric_levels(max_frobenius: u64) -> impl Iterator<Item = (u64, Vec<TreeNode>)> {
    let max_genus = max_frobenius.div_ceil(2);
    tree_levels(max_genus, move |n| n.frobenius() <= max_frobenius as i64).map(|(g, level)| {
        (
            g,
            level.into_iter().filter(TreeNode::is_symmetric).collect(),
        )
    })
}

fn rows_for(level: &[TreeNode]) -> Vec<SurveyRow> {
    level
        .par_iter()
        .map(|n| SurveyRow::compute(&n.to_semigroup()))
        .collect()
}

/// Computes every row in memory.
pub fn conjecture_scan(max_frobenius: u64) -> ScanOutcome {
    let mut summary = ScanSummary {
        max_frobenius,
        ..ScanSummary::default()
    };
    let mut rows = Vec::new();
    for (_, level) in symmetric_levels(max_frobenius) {
        for row in rows_for(&level) {
            summary.add(&row);
            rows.push(row);
        }
    }
    ScanOutcome { rows, summary }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct Checkpoint {
    max_frobenius: u64,
    completed_genus: u64,
    rows: usize,
}

pub fn checkpoint_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".checkpoint");
    PathBuf::from(name)
}

pub fn counterexample_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".counterexample.json");
    PathBuf::from(name)
}

/// Result of a file-backed scan.
#[derive(Debug, Clone)]
pub struct SurveyReport {
    pub summary: ScanSummary,
    /// Genus levels reused from an earlier run.
    pub resumed_levels: u64,
    pub counterexamples: Vec<SurveyRow>,
}

impl SurveyReport {
    /// `0` when every row agrees, `2` when a counterexample was found.
    pub fn exit_code(&self) -> i32 {
        if self.counterexamples.is_empty() {
            0
        } else {
            2
        }
    }
}

fn load_checkpoint(out: &Path, max_frobenius: u64) -> Result<Option<(Checkpoint, Vec<SurveyRow>)>> {
    let path = checkpoint_path(out);
    if !path.exists() || !out.exists() {
        return Ok(None);
    }
    let cp: Checkpoint = serde_json::from_str(&fs::read_to_string(&path)?)?;
    if cp.max_frobenius != max_frobenius {
        return Ok(None);
    }
    let reader = BufReader::new(File::open(out)?);
    let mut rows = Vec::with_capacity(cp.rows);
    for line in reader.lines().take(cp.rows) {
        rows.push(SurveyRow::from_json_line(&line?)?);
    }
    if rows.len() != cp.rows {
        return Ok(None);
    }
    Ok(Some((cp, rows)))
}

fn dump_counterexample(out: &Path, row: &SurveyRow) -> Result<()> {
    let s = NumericalSemigroup::from_generators(&row.generators)?;
    let p = semigroup_polynomial(&s);
    let witness = json!({
        "row": row,
        "polynomial": p.to_string(),
        "factorization": is_cyclotomic(&s),
        "graeffe": is_kronecker_graeffe(&p).ok(),
        "gluing_tree": is_complete_intersection(&s).map(|t| t.to_json_value()),
    });
    fs::write(
        counterexample_path(out),
        serde_json::to_string_pretty(&witness)? + "\n",
    )?;
    Ok(())
}

/// Runs the scan with rows streamed to `out` as JSONL and a checkpoint after
/// every genus level. A rerun with the same bound resumes after the last
/// completed level. A disagreement is written, its witness dumped next to
/// `out`, and reported through [`SurveyReport::exit_code`].
pub fn run_survey(max_frobenius: u64, out: &Path) -> Result<SurveyReport> {
    let resumed = load_checkpoint(out, max_frobenius)?;
    let mut summary = ScanSummary {
        max_frobenius,
        ..ScanSummary::default()
    };
    let mut counterexamples = Vec::new();
    let (start_genus, mut written) = match &resumed {
        Some((cp, rows)) => {
            for row in rows {
                summary.add(row);
                if !row.agreement {
                    counterexamples.push(row.clone());
                }
            }
            (cp.completed_genus + 1, rows.len())
        }
        None => (0, 0),
    };
    // drop anything past the checkpointed rows
    let keep_bytes: u64 = match &resumed {
        Some((_, rows)) => rows.iter().map(|r| r.to_json_line().len() as u64 + 1).sum(),
        None => 0,
    };
    let mut file = OpenOptions::new()
        .create(true)
        .write(true)
        .truncate(false)
        .open(out)?;
    file.set_len(keep_bytes)?;
    file.seek(SeekFrom::End(0))?;
    let mut writer = BufWriter::new(file);

    for (genus, level) in symmetric_levels(max_frobenius) {
        if genus < start_genus {
            continue;
        }
        for row in rows_for(&level) {
            writeln!(writer, "{}", row.to_json_line())?;
            summary.add(&row);
            if !row.agreement {
                dump_counterexample(out, &row)?;
                counterexamples.push(row);
            }
            written += 1;
        }
        writer.flush()?;
        let cp = Checkpoint {
            max_frobenius,
            completed_genus: genus,
            rows: written,
        };
        fs::write(checkpoint_path(out), serde_json::to_string(&cp)?)?;
    }
    Ok(SurveyReport {
        summary,
        resumed_levels: start_genus,
        counterexamples,
    })
}
