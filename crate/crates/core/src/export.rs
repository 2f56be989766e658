//! Machine-readable table export.
//!
//! Quantum dimensions are written as exact `(a, b, radicand)` triples with
//! `a` and `b` rational strings (`"2"`, `"-1/2"`). Cells are unordered pairs
//! `a ≤ b` in label order and products are listed in label order, so the
//! output for a given table is byte-stable.

use std::collections::BTreeMap;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::completion::{Completion, CompletionStatus, FilledCell, FilledTable, Origin};
use crate::error::Error;
use crate::fusion::{qdim, FusionVector, GenericVariant, Rule};
use crate::label::{enumerate_simples, Label, LabelClass, RankParam};
use crate::ring::Axiom;
use crate::{QDim, TOOL_VERSION};

/// `a + b·√radicand`, exactly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactQDim {
    pub a: String,
    pub b: String,
    pub radicand: u64,
}

impl From<&QDim> for ExactQDim {
    fn from(q: &QDim) -> Self {
        ExactQDim {
            a: q.rational().to_string(),
            b: q.irrational().to_string(),
            radicand: q.radicand(),
        }
    }
}

impl ExactQDim {
    pub fn to_qdim(&self) -> Result<QDim, Error> {
        let parse = |s: &str| {
            s.parse::<Rational64>()
                .map_err(|_| Error::Export(format!("{s:?} is not an exact rational")))
        };
        Ok(QDim::new(parse(&self.a)?, parse(&self.b)?, self.radicand))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleEntry {
    pub index: usize,
    pub label: Label,
    pub class: LabelClass,
    pub qdim: ExactQDim,
}

pub fn simple_entries(k: RankParam) -> Vec<SimpleEntry> {
    enumerate_simples(k)
        .into_iter()
        .enumerate()
        .map(|(index, label)| SimpleEntry {
            index,
            label,
            class: label.class(),
            qdim: ExactQDim::from(&qdim(k, label)),
        })
        .collect()
}

/// How a cell got its value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Source {
    /// A closed-form rule alone.
    Rule,
    /// The completion solver, for uncovered cells or degenerate pairs.
    Completion,
    /// No value could be determined.
    Unresolved,
}

impl Source {
    pub fn name(self) -> &'static str {
        match self {
            Source::Rule => "rule",
            Source::Completion => "completion",
            Source::Unresolved => "unresolved",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub c: Label,
    pub mult: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellEntry {
    pub a: Label,
    pub b: Label,
    pub source: Source,
    pub rule: Option<Rule>,
    /// Residues whose `D(r,0)`/`D(r,1)` split came from completion.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub degenerate: Vec<u32>,
    /// `None` when the cell is unresolved.
    pub products: Option<Vec<Summand>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomSummary {
    pub axiom: Axiom,
    pub checked: u64,
    pub skipped: u64,
    pub failures: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletionSummary {
    #[serde(flatten)]
    pub status: CompletionStatus,
    pub unknown_cells: usize,
    pub conflicts: usize,
    pub axioms: Vec<AxiomSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableExport {
    pub k: RankParam,
    pub variant: GenericVariant,
    pub tool_version: String,
    pub simples: Vec<SimpleEntry>,
    pub cells: Vec<CellEntry>,
    pub completion: CompletionSummary,
}

fn cell_entry(a: Label, b: Label, cell: &FilledCell) -> CellEntry {
    let source = match (&cell.vector, &cell.origin) {
        (None, _) => Source::Unresolved,
        (Some(_), None) => Source::Rule,
        (Some(_), Some(_)) => Source::Completion,
    };
    let degenerate = match &cell.origin {
        Some(Origin::Degenerate { residues, .. }) => residues.clone(),
        _ => Vec::new(),
    };
    CellEntry {
        a,
        b,
        source,
        rule: cell.rule,
        degenerate,
        products: cell
            .vector
            .as_ref()
            .map(|v| v.iter().map(|(c, mult)| Summand { c, mult }).collect()),
    }
}

/// CSV columns, one row per nonzero structure constant `N^c_{a,b}` with
/// `a ≤ b`; unresolved cells get one row with empty `c` and `mult`.
pub const CSV_HEADER: [&str; 6] = ["a", "b", "c", "mult", "source", "rule"];

impl TableExport {
    pub fn from_completion(completion: &Completion) -> Self {
        let table = &completion.table;
        let report = &completion.report;
        TableExport {
            k: table.k,
            variant: table.variant,
            tool_version: TOOL_VERSION.to_string(),
            simples: simple_entries(table.k),
            cells: table.cells().map(|(&(a, b), cell)| cell_entry(a, b, cell)).collect(),
            completion: CompletionSummary {
                status: report.status,
                unknown_cells: report.unknown_cells,
                conflicts: report.conflicts.len(),
                axioms: report
                    .axiom_log
                    .0
                    .iter()
                    .map(|r| AxiomSummary {
                        axiom: r.axiom,
                        checked: r.checked,
                        skipped: r.skipped,
                        failures: r.failures,
                    })
                    .collect(),
            },
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("export serializes");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> Result<Self, Error> {
        serde_json::from_str(s).map_err(|e| Error::Export(e.to_string()))
    }

    pub fn csv_rows(&self) -> Vec<[String; 6]> {
        let mut rows = Vec::new();
        for cell in &self.cells {
            let rule = cell.rule.map(|r| r.name().to_string()).unwrap_or_default();
            match &cell.products {
                None => rows.push([
                    cell.a.to_string(),
                    cell.b.to_string(),
                    String::new(),
                    String::new(),
                    cell.source.name().to_string(),
                    rule,
                ]),
                Some(products) => {
                    for s in products {
                        rows.push([
                            cell.a.to_string(),
                            cell.b.to_string(),
                            s.c.to_string(),
                            s.mult.to_string(),
                            cell.source.name().to_string(),
                            rule.clone(),
                        ]);
                    }
                }
            }
        }
        rows
    }

    /// Rebuilds the table, checking labels, qdims and cell coverage.
    pub fn to_filled_table(&self) -> Result<FilledTable, Error> {
        let k = self.k;
        let labels = enumerate_simples(k);
        if self.simples.len() != labels.len() {
            return Err(Error::Export(format!(
                "{} simples, expected {}",
                self.simples.len(),
                labels.len()
            )));
        }
        for (entry, &label) in self.simples.iter().zip(&labels) {
            if entry.label != label || entry.qdim.to_qdim()? != qdim(k, label) {
                return Err(Error::Export(format!("simple {} does not match {label}", entry.label)));
            }
        }
        let mut cells = BTreeMap::new();
        for entry in &self.cells {
            entry.a.validate(k)?;
            entry.b.validate(k)?;
            if entry.a > entry.b {
                return Err(Error::Export(format!(
                    "cell ({}, {}) is out of order",
                    entry.a, entry.b
                )));
            }
            let vector = match &entry.products {
                Some(products) => {
                    for s in products {
                        s.c.validate(k)?;
                    }
                    Some(products.iter().map(|s| (s.c, s.mult)).collect::<FusionVector>())
                }
                None => None,
            };
            let origin = match entry.source {
                Source::Rule => None,
                _ if entry.degenerate.is_empty() => Some(Origin::Uncovered),
                _ => Some(Origin::Degenerate {
                    rule: entry.rule.ok_or_else(|| {
                        Error::Export(format!(
                            "cell ({}, {}) has degenerate pairs but no rule",
                            entry.a, entry.b
                        ))
                    })?,
                    residues: entry.degenerate.clone(),
                }),
            };
            let cell = FilledCell {
                rule: entry.rule,
                origin,
                vector,
            };
            if cells.insert((entry.a, entry.b), cell).is_some() {
                return Err(Error::Export(format!("cell ({}, {}) repeated", entry.a, entry.b)));
            }
        }
        let expected = labels.len() * (labels.len() + 1) / 2;
        if cells.len() != expected {
            return Err(Error::Export(format!("{} cells, expected {expected}", cells.len())));
        }
        Ok(FilledTable::from_parts(k, self.variant, labels, cells))
    }
}
