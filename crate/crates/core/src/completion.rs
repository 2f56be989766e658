//! Completion of the fusion table.
//!
//! The closed-form rules leave two kinds of holes: non-diagonal cells that no
//! rule covers, and degenerate formal pairs `(a, a)` whose split between
//! `D(a,0)` and `D(a,1)` is unknown. [`build_partial_table`] records both as
//! unknowns. [`complete_table`] narrows them by associativity with the simple
//! currents (`(s ⊠ x) ⊠ y = s ⊠ (x ⊠ y)` for every current `s`), enumerates
//! whatever remains, and keeps the assignments that pass every axiom.
//! Covered cells are never changed.

use std::collections::BTreeMap;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::currents::simple_current_group_axiom;
use crate::error::Error;
use crate::fusion::{
    fuse, qdim, qdim_vector, DegeneratePolicy, FusionResult, FusionVector, GenericVariant, Rule, RuleVariantConfig,
};
use crate::label::{enumerate_simples, Label, LabelClass, RankParam};
use crate::ring::{verify_axioms, AxiomLog, Counterexample, FusionRing, VerifyMode};
use crate::QDim;

/// Where an unknown cell came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum Origin {
    /// No rule covers the cell.
    Uncovered,
    /// A rule covers the cell up to degenerate pairs at these residues.
    Degenerate { rule: Rule, residues: Vec<u32> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownCell {
    pub origin: Origin,
    /// Summands fixed by the rule.
    pub fixed: FusionVector,
    /// `qdim(x)·qdim(y)`.
    pub budget: QDim,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CellState {
    Known { rule: Rule, vector: FusionVector },
    Unknown(UnknownCell),
}

/// Rule-evaluated table for one `k` and one generic-rule variant, keyed by
/// unordered label pairs `(x, y)` with `x ≤ y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialTable {
    pub k: RankParam,
    pub variant: GenericVariant,
    labels: Vec<Label>,
    cells: BTreeMap<(Label, Label), CellState>,
}

fn ordered(x: Label, y: Label) -> (Label, Label) {
    if x <= y {
        (x, y)
    } else {
        (y, x)
    }
}

impl PartialTable {
    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn cell(&self, x: Label, y: Label) -> Option<&CellState> {
        self.cells.get(&ordered(x, y))
    }

    pub fn cells(&self) -> impl Iterator<Item = (&(Label, Label), &CellState)> {
        self.cells.iter()
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn unknown_cells(&self) -> impl Iterator<Item = (&(Label, Label), &UnknownCell)> {
        self.cells.iter().filter_map(|(key, state)| match state {
            CellState::Unknown(u) => Some((key, u)),
            CellState::Known { .. } => None,
        })
    }
}

/// Evaluates every unordered pair of simples.
pub fn build_partial_table(k: RankParam, variant: GenericVariant) -> PartialTable {
    let labels = enumerate_simples(k);
    let cfg = RuleVariantConfig {
        generic: variant,
        degenerate: DegeneratePolicy::Defer,
    };
    let mut cells = BTreeMap::new();
    for (a, &x) in labels.iter().enumerate() {
        for &y in &labels[a..] {
            let budget = &qdim(k, x) * &qdim(k, y);
            let state = match fuse(k, x, y, cfg).expect("enumerated labels are valid") {
                FusionResult::Uncovered { .. } => CellState::Unknown(UnknownCell {
                    origin: Origin::Uncovered,
                    fixed: FusionVector::new(),
                    budget,
                }),
                FusionResult::Covered(p) if p.degenerate.is_empty() => CellState::Known {
                    rule: p.rule,
                    vector: p.vector,
                },
                FusionResult::Covered(p) => CellState::Unknown(UnknownCell {
                    origin: Origin::Degenerate {
                        rule: p.rule,
                        residues: p.degenerate,
                    },
                    fixed: p.vector,
                    budget,
                }),
            };
            cells.insert((x, y), state);
        }
    }
    PartialTable {
        k,
        variant,
        labels,
        cells,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "status", content = "count")]
pub enum CompletionStatus {
    Unique,
    Ambiguous(usize),
    Infeasible,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolvedCell {
    pub a: Label,
    pub b: Label,
    pub origin: Origin,
    pub products: FusionVector,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompletionReport {
    pub k: RankParam,
    pub variant: GenericVariant,
    #[serde(flatten)]
    pub status: CompletionStatus,
    pub unknown_cells: usize,
    /// Residual assignments enumerated after propagation.
    pub assignments_checked: u64,
    /// Values of the unknown cells, when the status is unique.
    pub resolved: Vec<ResolvedCell>,
    /// Every passing assignment, when the status is ambiguous.
    pub solutions: Vec<Vec<ResolvedCell>>,
    /// Contradictions found while propagating through the simple currents.
    pub conflicts: Vec<Counterexample>,
    pub axiom_log: AxiomLog,
}

impl CompletionReport {
    pub fn is_unique(&self) -> bool {
        self.status == CompletionStatus::Unique
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// A table in which each cell holds a value, or `None` where completion could
/// not determine one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilledTable {
    pub k: RankParam,
    pub variant: GenericVariant,
    labels: Vec<Label>,
    cells: BTreeMap<(Label, Label), FilledCell>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FilledCell {
    /// The covering rule, if any.
    pub rule: Option<Rule>,
    /// Set for cells that were unknown before completion.
    pub origin: Option<Origin>,
    pub vector: Option<FusionVector>,
}

impl FilledTable {
    pub(crate) fn from_parts(
        k: RankParam,
        variant: GenericVariant,
        labels: Vec<Label>,
        cells: BTreeMap<(Label, Label), FilledCell>,
    ) -> Self {
        FilledTable {
            k,
            variant,
            labels,
            cells,
        }
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn cell(&self, x: Label, y: Label) -> Option<&FilledCell> {
        self.cells.get(&ordered(x, y))
    }

    pub fn cells(&self) -> impl Iterator<Item = (&(Label, Label), &FilledCell)> {
        self.cells.iter()
    }

    pub fn is_complete(&self) -> bool {
        self.cells.values().all(|c| c.vector.is_some())
    }

    /// `N^c_{a,b}`.
    pub fn structure_constant(&self, a: Label, b: Label, c: Label) -> Result<u32, Error> {
        for x in [a, b, c] {
            x.validate(self.k)?;
        }
        let cell = self.cell(a, b).expect("all pairs are present");
        cell.vector.as_ref().map(|v| v.get(c)).ok_or(Error::Unresolved(a, b))
    }

    pub fn product(&self, a: Label, b: Label) -> Result<&FusionVector, Error> {
        a.validate(self.k)?;
        b.validate(self.k)?;
        self.cell(a, b)
            .and_then(|c| c.vector.as_ref())
            .ok_or(Error::Unresolved(a, b))
    }

    /// The unique `y` with `N^{D(0,0)}_{x,y} = 1`.
    pub fn dual(&self, x: Label) -> Result<Label, Error> {
        x.validate(self.k)?;
        let ring = self.to_ring();
        ring.dual(x.index(self.k))
            .map(|y| self.labels[y])
            .map_err(|e| Error::NoDual {
                label: x.to_string(),
                reason: match e {
                    crate::ring::DualFailure::RowIncomplete => "some products are unresolved".into(),
                    crate::ring::DualFailure::Missing => "the unit occurs in no product".into(),
                    crate::ring::DualFailure::Ambiguous(hits) => format!(
                        "the unit occurs in {}",
                        hits.iter()
                            .map(|&(y, m)| format!("{x} ⊠ {} ({m}×)", self.labels[y]))
                            .collect::<Vec<_>>()
                            .join(", ")
                    ),
                },
            })
    }

    pub fn to_ring(&self) -> FusionRing<Rational64> {
        let k = self.k;
        let names = self.labels.iter().map(Label::to_string).collect();
        let qdims = self.labels.iter().map(|&x| qdim(k, x)).collect();
        let unit = Label::Diag { i: 0, eps: 0 }.index(k);
        let mut ring = FusionRing::new(names, unit, qdims);
        for (&(x, y), cell) in &self.cells {
            if let Some(v) = &cell.vector {
                ring.set_symmetric(x.index(k), y.index(k), v.iter().map(|(c, m)| (c.index(k), m)));
            }
        }
        ring
    }
}

/// Full axiom suite on an orbifold table: the generic checks plus the
/// simple-current group structure.
pub fn verify_table(table: &FilledTable, mode: VerifyMode) -> AxiomLog {
    let ring = table.to_ring();
    let mut log = verify_axioms(&ring, mode);
    log.push(simple_current_group_axiom(table.k, &ring));
    log
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompletionOptions {
    /// Upper bound on residual assignments to enumerate.
    pub max_assignments: u128,
}

impl Default for CompletionOptions {
    fn default() -> Self {
        CompletionOptions {
            max_assignments: 10_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Completion {
    pub report: CompletionReport,
    pub table: FilledTable,
}

#[derive(Clone, Debug)]
enum Space {
    List(Vec<FusionVector>),
    /// Any vector whose quantum dimension equals the budget.
    Any,
}

struct Solver<'a> {
    pt: &'a PartialTable,
    index: BTreeMap<(Label, Label), usize>,
    keys: Vec<(Label, Label)>,
    spaces: Vec<Space>,
    conflicts: Vec<Counterexample>,
    failed: Vec<bool>,
}

fn split_candidates(fixed: &FusionVector, residues: &[u32]) -> Vec<FusionVector> {
    let mut out = vec![fixed.clone()];
    for &r in residues {
        let mut next = Vec::with_capacity(out.len() * 3);
        for base in &out {
            for m0 in (0..=2).rev() {
                let mut v = base.clone();
                v.add(Label::Diag { i: r, eps: 0 }, m0);
                v.add(Label::Diag { i: r, eps: 1 }, 2 - m0);
                next.push(v);
            }
        }
        out = next;
    }
    out.sort_by(|a, b| a.iter().cmp(b.iter()));
    out.dedup();
    out
}

/// Every vector over `labels` with quantum dimension exactly `budget`.
fn compositions(k: RankParam, labels: &[Label], budget: &QDim, limit: u128) -> Result<Vec<FusionVector>, Error> {
    fn go(
        k: RankParam,
        labels: &[Label],
        start: usize,
        remaining: &QDim,
        current: &mut FusionVector,
        out: &mut Vec<FusionVector>,
        limit: u128,
    ) -> Result<(), Error> {
        let zero = QDim::zero(remaining.radicand());
        if *remaining == zero {
            out.push(current.clone());
            if out.len() as u128 > limit {
                return Err(Error::SearchSpaceTooLarge(out.len() as u128, limit));
            }
            return Ok(());
        }
        for (pos, &label) in labels.iter().enumerate().skip(start) {
            let q = qdim(k, label);
            let rest = remaining + &QDim::new(-*q.rational(), -*q.irrational(), q.radicand());
            // Every qdim is positive, so a negative remainder cannot be filled.
            if rest < zero {
                continue;
            }
            current.add(label, 1);
            go(k, labels, pos, &rest, current, out, limit)?;
            let mut trimmed = FusionVector::new();
            let mut removed = false;
            for (l, m) in current.iter() {
                if l == label && !removed {
                    trimmed.add(l, m - 1);
                    removed = true;
                } else {
                    trimmed.add(l, m);
                }
            }
            *current = trimmed;
        }
        Ok(())
    }
    let mut out = Vec::new();
    go(k, labels, 0, budget, &mut FusionVector::new(), &mut out, limit)?;
    Ok(out)
}

impl<'a> Solver<'a> {
    fn new(pt: &'a PartialTable) -> Self {
        let mut index = BTreeMap::new();
        let mut keys = Vec::new();
        let mut spaces = Vec::new();
        for (key, cell) in pt.unknown_cells() {
            index.insert(*key, keys.len());
            keys.push(*key);
            spaces.push(match &cell.origin {
                Origin::Uncovered => Space::Any,
                Origin::Degenerate { residues, .. } => Space::List(split_candidates(&cell.fixed, residues)),
            });
        }
        let n = keys.len();
        Solver {
            pt,
            index,
            keys,
            spaces,
            conflicts: Vec::new(),
            failed: vec![false; n],
        }
    }

    /// The value of a cell if it is known or pinned to a single candidate.
    fn value(&self, x: Label, y: Label) -> Option<&FusionVector> {
        let key = ordered(x, y);
        match self.index.get(&key) {
            Some(&u) => match &self.spaces[u] {
                Space::List(c) if c.len() == 1 => Some(&c[0]),
                _ => None,
            },
            None => match self.pt.cells.get(&key) {
                Some(CellState::Known { vector, .. }) => Some(vector),
                _ => None,
            },
        }
    }

    /// `s ⊠ z` for each simple `z`, when `s` acts by a permutation through known cells.
    fn current_actions(&self) -> Vec<(Label, BTreeMap<Label, Label>)> {
        let mut out = Vec::new();
        'currents: for &s in self.pt.labels.iter().filter(|l| l.class() == LabelClass::Diag) {
            let mut action = BTreeMap::new();
            for &z in &self.pt.labels {
                match self.pt.cells.get(&ordered(s, z)) {
                    Some(CellState::Known { vector, .. }) => match vector.iter().collect::<Vec<_>>()[..] {
                        [(image, 1)] => {
                            action.insert(z, image);
                        }
                        _ => continue 'currents,
                    },
                    _ => continue 'currents,
                }
            }
            let mut images: Vec<Label> = action.values().copied().collect();
            images.sort();
            images.dedup();
            if images.len() == self.pt.labels.len() {
                out.push((s, action));
            }
        }
        out
    }

    fn propagate(&mut self) {
        let actions = self.current_actions();
        let inverses: Vec<BTreeMap<Label, Label>> = actions
            .iter()
            .map(|(_, act)| act.iter().map(|(&z, &image)| (image, z)).collect())
            .collect();
        let k = self.pt.k;
        let mut changed = true;
        while changed {
            changed = false;
            for u in 0..self.keys.len() {
                if self.failed[u] {
                    continue;
                }
                let (x, y) = self.keys[u];
                for (ai, (s, act)) in actions.iter().enumerate() {
                    for (moved, fixed) in [(x, y), (y, x)] {
                        let target_key = ordered(act[&moved], fixed);
                        let apply = |v: &FusionVector| v.map_labels(|z| act[&z]);
                        let target = if target_key == self.keys[u] {
                            None
                        } else {
                            match self.value(target_key.0, target_key.1) {
                                Some(v) => Some(v.clone()),
                                None => continue,
                            }
                        };
                        let before = match &self.spaces[u] {
                            Space::List(c) => c.len(),
                            Space::Any => usize::MAX,
                        };
                        let next = match (&self.spaces[u], &target) {
                            (Space::List(c), Some(t)) => {
                                Space::List(c.iter().filter(|v| apply(v) == *t).cloned().collect())
                            }
                            (Space::List(c), None) => {
                                Space::List(c.iter().filter(|v| apply(v) == **v).cloned().collect())
                            }
                            (Space::Any, Some(t)) => {
                                let pre = t.map_labels(|z| inverses[ai][&z]);
                                let budget = &self.pt.unknown(self.keys[u]).budget;
                                if qdim_vector(k, &pre) == *budget {
                                    Space::List(vec![pre])
                                } else {
                                    Space::List(Vec::new())
                                }
                            }
                            (Space::Any, None) => continue,
                        };
                        let after = match &next {
                            Space::List(c) => c.len(),
                            Space::Any => usize::MAX,
                        };
                        if after == 0 {
                            let required = match &target {
                                Some(t) => format!("{s} ⊠ ({x} ⊠ {y}) must equal ({s} ⊠ {moved}) ⊠ {fixed} = {t}"),
                                None => format!("{s} ⊠ ({x} ⊠ {y}) must equal {x} ⊠ {y}"),
                            };
                            let left = match &self.spaces[u] {
                                Space::List(c) if c.len() == 1 => {
                                    format!("earlier constraints force {x} ⊠ {y} = {}", c[0])
                                }
                                Space::List(c) => {
                                    format!("none of the {} candidates for {x} ⊠ {y} satisfies this", c.len())
                                }
                                Space::Any => {
                                    format!("{s}⁻¹ applied to it has the wrong quantum dimension for {x} ⊠ {y}")
                                }
                            };
                            self.conflicts.push(Counterexample {
                                labels: vec![s.to_string(), x.to_string(), y.to_string()],
                                detail: format!("associativity: {required}; {left}"),
                            });
                            self.failed[u] = true;
                        }
                        if after != before {
                            changed = true;
                        }
                        self.spaces[u] = next;
                        if self.failed[u] {
                            break;
                        }
                    }
                    if self.failed[u] {
                        break;
                    }
                }
            }
        }
    }
}

impl PartialTable {
    fn unknown(&self, key: (Label, Label)) -> &UnknownCell {
        match &self.cells[&key] {
            CellState::Unknown(u) => u,
            CellState::Known { .. } => panic!("cell {key:?} is known"),
        }
    }

    /// The table with covered cells filled and every unknown cell taken from
    /// `values` (in unknown-cell order), or left empty where `values` has `None`.
    fn fill(&self, values: &[Option<&FusionVector>]) -> FilledTable {
        let mut cells = BTreeMap::new();
        let mut u = 0;
        for (&key, state) in &self.cells {
            let cell = match state {
                CellState::Known { rule, vector } => FilledCell {
                    rule: Some(*rule),
                    origin: None,
                    vector: Some(vector.clone()),
                },
                CellState::Unknown(unknown) => {
                    let v = values[u].cloned();
                    u += 1;
                    FilledCell {
                        rule: match &unknown.origin {
                            Origin::Degenerate { rule, .. } => Some(*rule),
                            Origin::Uncovered => None,
                        },
                        origin: Some(unknown.origin.clone()),
                        vector: v,
                    }
                }
            };
            cells.insert(key, cell);
        }
        FilledTable {
            k: self.k,
            variant: self.variant,
            labels: self.labels.clone(),
            cells,
        }
    }

    fn resolved_cells(&self, values: &[&FusionVector]) -> Vec<ResolvedCell> {
        self.unknown_cells()
            .zip(values)
            .map(|((&(a, b), cell), v)| ResolvedCell {
                a,
                b,
                origin: cell.origin.clone(),
                products: (*v).clone(),
            })
            .collect()
    }
}

/// Solves the unknown cells of `pt` and verifies the result.
pub fn complete_table(pt: &PartialTable, opts: CompletionOptions) -> Result<Completion, Error> {
    let mut solver = Solver::new(pt);
    solver.propagate();
    let unknown_cells = solver.keys.len();

    if !solver.conflicts.is_empty() {
        let table = pt.fill(&vec![None; unknown_cells]);
        let axiom_log = verify_table(&table, VerifyMode::Exhaustive);
        let report = CompletionReport {
            k: pt.k,
            variant: pt.variant,
            status: CompletionStatus::Infeasible,
            unknown_cells,
            assignments_checked: 0,
            resolved: Vec::new(),
            solutions: Vec::new(),
            conflicts: solver.conflicts,
            axiom_log,
        };
        return Ok(Completion { report, table });
    }

    let mut lists: Vec<Vec<FusionVector>> = Vec::with_capacity(unknown_cells);
    for (u, space) in solver.spaces.iter().enumerate() {
        lists.push(match space {
            Space::List(c) => c.clone(),
            Space::Any => compositions(
                pt.k,
                &pt.labels,
                &pt.unknown(solver.keys[u]).budget,
                opts.max_assignments,
            )?,
        });
    }
    let total: u128 = lists.iter().map(|c| c.len() as u128).product();
    if total > opts.max_assignments {
        return Err(Error::SearchSpaceTooLarge(total, opts.max_assignments));
    }

    let mut passing: Vec<Vec<usize>> = Vec::new();
    let mut first_log: Option<(Vec<usize>, AxiomLog)> = None;
    let mut choice = vec![0usize; unknown_cells];
    let mut checked = 0u64;
    if total > 0 {
        loop {
            let values: Vec<Option<&FusionVector>> = choice.iter().zip(&lists).map(|(&c, l)| Some(&l[c])).collect();
            let table = pt.fill(&values);
            let mode = if total == 1 {
                VerifyMode::Exhaustive
            } else {
                VerifyMode::FirstFailure
            };
            let log = verify_table(&table, mode);
            checked += 1;
            if log.all_pass() {
                passing.push(choice.clone());
            }
            if first_log.is_none() {
                first_log = Some((choice.clone(), log));
            }
            // Odometer over the residual candidates, last cell fastest.
            let mut pos = unknown_cells;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                choice[pos] += 1;
                if choice[pos] < lists[pos].len() {
                    break;
                }
                choice[pos] = 0;
                if pos == 0 {
                    pos = usize::MAX;
                    break;
                }
            }
            if pos == usize::MAX || unknown_cells == 0 {
                break;
            }
        }
    }

    let pick = |choice: &[usize]| -> Vec<&FusionVector> { choice.iter().zip(&lists).map(|(&c, l)| &l[c]).collect() };
    let (status, shown, resolved, solutions) = match passing.len() {
        1 => {
            let values = pick(&passing[0]);
            (
                CompletionStatus::Unique,
                Some(passing[0].clone()),
                pt.resolved_cells(&values),
                Vec::new(),
            )
        }
        0 => (
            CompletionStatus::Infeasible,
            first_log.as_ref().map(|(c, _)| c.clone()),
            Vec::new(),
            Vec::new(),
        ),
        n => {
            let all = passing.iter().map(|c| pt.resolved_cells(&pick(c))).collect();
            (
                CompletionStatus::Ambiguous(n),
                Some(passing[0].clone()),
                Vec::new(),
                all,
            )
        }
    };

    let (table, axiom_log) = match &shown {
        Some(choice) => {
            let values: Vec<Option<&FusionVector>> = pick(choice).into_iter().map(Some).collect();
            let table = pt.fill(&values);
            let log = match &first_log {
                Some((c, log)) if c == choice && total == 1 => log.clone(),
                _ => verify_table(&table, VerifyMode::Exhaustive),
            };
            (table, log)
        }
        None => {
            let table = pt.fill(&vec![None; unknown_cells]);
            let log = verify_table(&table, VerifyMode::Exhaustive);
            (table, log)
        }
    };
    // Only a unique solution fills the table; otherwise unknown cells stay empty
    // unless propagation alone pinned them.
    let table = if status == CompletionStatus::Unique {
        table
    } else {
        let pinned: Vec<Option<&FusionVector>> = lists
            .iter()
            .map(|l| if l.len() == 1 { Some(&l[0]) } else { None })
            .collect();
        pt.fill(&pinned)
    };

    let report = CompletionReport {
        k: pt.k,
        variant: pt.variant,
        status,
        unknown_cells,
        assignments_checked: checked,
        resolved,
        solutions,
        conflicts: Vec::new(),
        axiom_log,
    };
    Ok(Completion { report, table })
}

/// Outcome of completing the table under each generic-rule variant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arbitration {
    pub k: RankParam,
    pub reports: Vec<CompletionReport>,
    /// Variants whose completion is unique and passes every axiom.
    pub passing: Vec<GenericVariant>,
}

impl Arbitration {
    /// The single passing variant, if exactly one passes.
    pub fn verdict(&self) -> Option<GenericVariant> {
        match self.passing[..] {
            [v] => Some(v),
            _ => None,
        }
    }
}

pub fn arbitrate(k: RankParam, opts: CompletionOptions) -> Result<Arbitration, Error> {
    let mut reports = Vec::new();
    let mut passing = Vec::new();
    for variant in GenericVariant::ALL {
        let completion = complete_table(&build_partial_table(k, variant), opts)?;
        if completion.report.is_unique() && completion.report.axiom_log.all_pass() {
            passing.push(variant);
        }
        reports.push(completion.report);
    }
    Ok(Arbitration { k, reports, passing })
}
