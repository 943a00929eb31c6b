//! Batch runs and table reproduction behind the command-line interface.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::catalog::{certify, recipe_for, table1_rows, table2_rows, Dispatch, Outcome, TableRow};
use crate::search::SearchContext;
use crate::signature::{bordered_surface_criterion, Adjacency, NecSignature};

/// Process exit codes, one per outcome.
pub mod exit {
    pub const CERTIFIED: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const OPEN: i32 = 2;
    pub const FUCHSIAN: i32 = 3;
    pub const NON_HYPERBOLIC: i32 = 4;
    pub const SEARCH_FAILED: i32 = 5;
    pub const VERIFY_FAILED: i32 = 6;
}

pub fn exit_code(outcome: &Outcome) -> i32 {
    match outcome.status() {
        "certified" => exit::CERTIFIED,
        "open_table2" => exit::OPEN,
        "fuchsian" => exit::FUCHSIAN,
        "non_hyperbolic" => exit::NON_HYPERBOLIC,
        _ => exit::SEARCH_FAILED,
    }
}

/// Seed for row `index` of a batch, so rows are independent of scheduling.
pub fn row_seed(seed: u64, index: usize) -> u64 {
    seed ^ (index as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

#[derive(Debug, Clone, Serialize)]
pub struct BatchRow {
    pub line: usize,
    pub signature: String,
    pub status: String,
    pub recipe: Option<String>,
    pub index: Option<u128>,
    pub genus: Option<i128>,
    /// Matching unresolved-table rows, or the failure reason.
    pub detail: Option<String>,
    pub wall_ms: f64,
}

/// Summary of one certify run, without the certificate body.
pub fn summarize(line: usize, text: &str, outcome: &Outcome, wall_ms: f64) -> BatchRow {
    let mut row = BatchRow {
        line,
        signature: text.to_string(),
        status: outcome.status().to_string(),
        recipe: None,
        index: None,
        genus: None,
        detail: None,
        wall_ms,
    };
    match outcome {
        Outcome::Certified(c) => {
            row.recipe = Some(c.recipe.clone());
            row.index = Some(c.index());
            row.genus = c.kernel.genus;
        }
        Outcome::Open { rows, reason } => {
            row.detail = Some(if rows.is_empty() {
                reason.clone()
            } else {
                format!("rows {rows:?}")
            })
        }
        Outcome::NotApplicable(_) => {}
        Outcome::SearchFailed(e) => row.detail = Some(e.clone()),
    }
    row
}

/// Runs every non-comment line of `input` concurrently, returning rows in
/// input order. Unparseable lines get status `parse_error`.
pub fn run_batch(input: &str, ctx: &SearchContext) -> Vec<BatchRow> {
    let lines: Vec<(usize, &str)> = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    lines
        .par_iter()
        .enumerate()
        .map(|(i, &(line, text))| {
            let start = Instant::now();
            let row_ctx = SearchContext {
                seed: row_seed(ctx.seed, i),
                ..*ctx
            };
            match text.parse::<NecSignature>() {
                Ok(sig) => {
                    let outcome = certify(&sig, &row_ctx);
                    summarize(line, text, &outcome, start.elapsed().as_secs_f64() * 1e3)
                }
                Err(e) => BatchRow {
                    line,
                    signature: text.to_string(),
                    status: "parse_error".into(),
                    recipe: None,
                    index: None,
                    genus: None,
                    detail: Some(e.to_string()),
                    wall_ms: 0.0,
                },
            }
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct TableReportRow {
    pub table: u8,
    #[serde(flatten)]
    pub row: TableRow,
    pub status: String,
    pub recipe_used: Option<String>,
    pub index: Option<u128>,
    pub verified: bool,
}

/// Instantiates every solved row at its example and confirms every
/// unresolved row's example is reported open.
pub fn tables_report(ctx: &SearchContext) -> Vec<TableReportRow> {
    let solved = table1_rows().into_iter().map(|r| (1u8, r));
    let open = table2_rows().into_iter().map(|r| (2u8, r));
    solved
        .chain(open)
        .map(|(table, row)| {
            let sig: NecSignature = row.example.parse().expect("table example parses");
            let outcome = certify(&sig, ctx);
            let (recipe_used, index, verified) = match &outcome {
                Outcome::Certified(c) => (
                    Some(c.recipe.clone()),
                    Some(c.index()),
                    matches!(c.verify(), Ok(v) if v.pass),
                ),
                Outcome::Open { rows, .. } => (None, None, rows.contains(&row.row)),
                _ => (None, None, false),
            };
            TableReportRow {
                table,
                status: outcome.status().to_string(),
                row,
                recipe_used,
                index,
                verified,
            }
        })
        .collect()
}

/// The bordered-surface criterion under both adjacency readings, with the
/// catalog's dispatch for comparison.
#[derive(Debug, Clone, Serialize)]
pub struct ConventionReport {
    pub signature: String,
    pub cyclic: Option<bool>,
    pub linear: Option<bool>,
    pub agree: bool,
    pub dispatch: Dispatch,
}

pub fn convention_report(sig: &NecSignature) -> ConventionReport {
    let cyclic = bordered_surface_criterion(sig, Adjacency::Cyclic);
    let linear = bordered_surface_criterion(sig, Adjacency::Linear);
    ConventionReport {
        signature: sig.to_string(),
        cyclic,
        linear,
        agree: cyclic == linear,
        dispatch: recipe_for(sig),
    }
}
