use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use orbifold_fusion::branching::{branch, qdim_sub};
use orbifold_fusion::completion::{
    arbitrate, build_partial_table, complete_table, CellState, Completion, CompletionOptions, CompletionReport,
    CompletionStatus, Origin,
};
use orbifold_fusion::export::{simple_entries, ExactQDim, TableExport, CSV_HEADER};
use orbifold_fusion::fusion::{qdim, qdim_vector};
use orbifold_fusion::ring::AxiomLog;
use orbifold_fusion::{FusionVector, GenericVariant, Label, QDim, RankParam};

const EXIT_USAGE: u8 = 2;
const EXIT_MATH: u8 = 3;

#[derive(Parser)]
#[command(
    name = "orbifold-fusion",
    version,
    about = "Fusion rules of the Z_2 permutation orbifold of a rank-one lattice VOA"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the simples with their quantum dimensions.
    Enumerate(Common),
    /// Decompose a fusion product.
    Fuse {
        #[command(flatten)]
        common: Common,
        a: Label,
        b: Label,
    },
    /// Export the completed fusion table.
    Table(Common),
    /// Run the axiom suite; without a variant, arbitrate between both.
    Verify(Common),
    /// Run the completion solver and print its report.
    Complete(Common),
    /// Restrict a simple to the subalgebra.
    Branch {
        #[command(flatten)]
        common: Common,
        label: Label,
    },
    /// Exact quantum dimension of a simple.
    Qdim {
        #[command(flatten)]
        common: Common,
        label: Label,
    },
}

#[derive(Args)]
struct Common {
    /// Rank parameter, k ≥ 1.
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    k: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Generic non-diagonal rule; overrides ORBIFOLD_FUSION_VARIANT.
    #[arg(long, value_enum, env = "ORBIFOLD_FUSION_VARIANT")]
    variant: Option<VariantArg>,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Printed,
    Corrected,
}

impl From<VariantArg> for GenericVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Printed => GenericVariant::Printed,
            VariantArg::Corrected => GenericVariant::Corrected,
        }
    }
}

impl Common {
    fn rank(&self) -> RankParam {
        RankParam::new(self.k).expect("clap enforces k ≥ 1")
    }

    fn variant(&self) -> GenericVariant {
        self.variant.map(Into::into).unwrap_or_default()
    }
}

/// A failed command: message plus exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn math(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_MATH,
            message: message.into(),
        }
    }

    fn io(path: &Path, e: io::Error) -> Self {
        Failure {
            code: 1,
            message: format!("cannot write {}: {e}", path.display()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn emit(out: Option<&Path>, body: &str) -> Outcome {
    match out {
        Some(path) => fs::write(path, body).map_err(|e| Failure::io(path, e)),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(body.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure::io(Path::new("<stdout>"), e))
        }
    }
}

fn json_body(value: &impl serde::Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

fn csv_body<R: AsRef<[String]>>(header: &[&str], rows: impl IntoIterator<Item = R>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row.as_ref()).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv is utf-8")
}

fn check_label(k: RankParam, x: Label) -> Outcome {
    x.validate(k).map(|_| ()).map_err(|e| Failure::usage(e.to_string()))
}

/// Exact form, plus a marked decimal when irrational.
fn qdim_text(q: &QDim) -> String {
    if q.is_rational() {
        q.to_string()
    } else {
        format!("{q} ≈ {:.6} (approximate)", q.to_f64())
    }
}

fn qdim_json(q: &QDim) -> serde_json::Value {
    serde_json::to_value(ExactQDim::from(q)).expect("qdim serializes")
}

fn summands_json(v: &FusionVector) -> serde_json::Value {
    v.iter().map(|(c, mult)| json!({ "c": c, "mult": mult })).collect()
}

fn cmd_enumerate(c: &Common) -> Outcome {
    let k = c.rank();
    let entries = simple_entries(k);
    let body = match c.format {
        Format::Json => json_body(&json!({ "k": k, "simples": entries })),
        Format::Csv => csv_body(
            &["index", "label", "class", "qdim_a", "qdim_b", "radicand"],
            entries.iter().map(|e| {
                vec![
                    e.index.to_string(),
                    e.label.to_string(),
                    serde_json::to_value(e.class).unwrap().as_str().unwrap().to_string(),
                    e.qdim.a.clone(),
                    e.qdim.b.clone(),
                    e.qdim.radicand.to_string(),
                ]
            }),
        ),
        Format::Text => {
            let mut s = format!("k = {k}: {} simples\n", entries.len());
            for e in &entries {
                s += &format!(
                    "{:>4}  {:<9} {}\n",
                    e.index,
                    e.label.to_string(),
                    qdim_text(&qdim(k, e.label))
                );
            }
            s
        }
    };
    emit(c.out.as_deref(), &body)
}

fn report_path(c: &Common) -> PathBuf {
    c.out
        .clone()
        .unwrap_or_else(|| std::env::temp_dir().join(format!("orbifold-fusion-report-k{}-{}.json", c.k, c.variant())))
}

fn write_report(c: &Common, report: &CompletionReport) -> Result<PathBuf, Failure> {
    let path = report_path(c);
    fs::write(&path, report.to_json() + "\n").map_err(|e| Failure::io(&path, e))?;
    Ok(path)
}

fn describe_status(report: &CompletionReport) -> String {
    match report.status {
        CompletionStatus::Unique => "unique".into(),
        CompletionStatus::Ambiguous(n) => format!("ambiguous ({n} solutions)"),
        CompletionStatus::Infeasible => "infeasible".into(),
    }
}

fn cmd_fuse(c: &Common, a: Label, b: Label) -> Outcome {
    let k = c.rank();
    check_label(k, a)?;
    check_label(k, b)?;
    let variant = c.variant();
    let pt = build_partial_table(k, variant);
    let (vector, rule, origin) = match pt.cell(a, b).expect("every pair has a cell") {
        CellState::Known { rule, vector } => (vector.clone(), Some(*rule), None),
        CellState::Unknown(_) => {
            let completion =
                complete_table(&pt, CompletionOptions::default()).map_err(|e| Failure::math(e.to_string()))?;
            let cell = completion.table.cell(a, b).expect("every pair has a cell");
            match (&cell.vector, completion.report.is_unique()) {
                (Some(v), true) => (v.clone(), cell.rule, cell.origin.clone()),
                _ => {
                    let path = write_report(c, &completion.report)?;
                    return Err(Failure::math(format!(
                        "{a} ⊠ {b} needs completion, which is {} for k = {k} ({variant}); report written to {}",
                        describe_status(&completion.report),
                        path.display()
                    )));
                }
            }
        }
    };
    let degenerate = match &origin {
        Some(Origin::Degenerate { residues, .. }) => residues.clone(),
        _ => Vec::new(),
    };
    let from_degenerate = |x: Label| matches!(x, Label::Diag { i, .. } if degenerate.contains(&i));
    let source = if origin.is_some() { "completion" } else { "rule" };
    let rule_name = rule.map(|r| r.name()).unwrap_or("none");
    let (qa, qb) = (qdim(k, a), qdim(k, b));
    let expected = &qa * &qb;
    let total = qdim_vector(k, &vector);
    let holds = expected == total;
    let body = match c.format {
        Format::Json => json_body(&json!({
            "k": k,
            "variant": variant,
            "a": a,
            "b": b,
            "products": summands_json(&vector),
            "source": source,
            "rule": rule,
            "degenerate": degenerate,
            "qdim": { "product": qdim_json(&expected), "sum": qdim_json(&total), "holds": holds },
        })),
        Format::Csv => csv_body(
            &CSV_HEADER,
            vector.iter().map(|(x, m)| {
                vec![
                    a.to_string(),
                    b.to_string(),
                    x.to_string(),
                    m.to_string(),
                    source.to_string(),
                    rule_name.to_string(),
                ]
            }),
        ),
        Format::Text => {
            let terms: Vec<String> = vector
                .iter()
                .map(|(x, m)| {
                    let mark = if from_degenerate(x) { "*" } else { "" };
                    if m == 1 {
                        format!("{x}{mark}")
                    } else {
                        format!("{m}·{x}{mark}")
                    }
                })
                .collect();
            let mut s = format!("{a} ⊠ {b} = {}\n", terms.join(" + "));
            s += &format!("rule: {rule_name}\n");
            if origin.is_some() {
                s += &format!("completed by the solver for k = {k} ({variant})\n");
            }
            if !degenerate.is_empty() {
                s += "* from a degenerate pair split by the solver\n";
            }
            s += &format!(
                "qdim: {} · {} = {}, summands give {} ({})\n",
                qa,
                qb,
                expected,
                total,
                if holds { "holds" } else { "FAILS" }
            );
            s
        }
    };
    emit(c.out.as_deref(), &body)?;
    if holds {
        Ok(())
    } else {
        Err(Failure::math(format!("qdim identity fails for {a} ⊠ {b}")))
    }
}

fn complete(c: &Common) -> Result<Completion, Failure> {
    complete_table(
        &build_partial_table(c.rank(), c.variant()),
        CompletionOptions::default(),
    )
    .map_err(|e| Failure::math(e.to_string()))
}

fn cmd_table(c: &Common) -> Outcome {
    let completion = complete(c)?;
    let export = TableExport::from_completion(&completion);
    let body = match c.format {
        Format::Json => export.to_json(),
        Format::Csv => csv_body(&CSV_HEADER, export.csv_rows()),
        Format::Text => {
            let mut s = format!(
                "k = {}, variant {}, completion {}\n",
                export.k,
                export.variant,
                describe_status(&completion.report)
            );
            for (&(a, b), cell) in completion.table.cells() {
                let value = cell.vector.as_ref().map_or("unresolved".to_string(), |v| v.to_string());
                s += &format!("{a} ⊠ {b} = {value}\n");
            }
            s
        }
    };
    emit(c.out.as_deref(), &body)?;
    completion_outcome(&completion.report)
}

fn completion_outcome(report: &CompletionReport) -> Outcome {
    if report.is_unique() && report.axiom_log.all_pass() {
        Ok(())
    } else {
        Err(Failure::math(format!(
            "completion for k = {} ({}) is {}; {} axiom(s) fail",
            report.k,
            report.variant,
            describe_status(report),
            report.axiom_log.failing().count()
        )))
    }
}

fn log_text(log: &AxiomLog) -> String {
    let mut s = String::new();
    for r in &log.0 {
        if r.passed() {
            s += &format!(
                "  PASS {:<20} {} checked, {} skipped\n",
                r.axiom.name(),
                r.checked,
                r.skipped
            );
        } else {
            s += &format!(
                "  FAIL {:<20} {} of {} checked fail\n",
                r.axiom.name(),
                r.failures,
                r.checked
            );
            if let Some(first) = r.counterexamples.first() {
                s += &format!("       first: {first}\n");
            }
        }
    }
    s
}

fn report_text(report: &CompletionReport) -> String {
    let mut s = format!(
        "k = {}, variant {}: completion {}, {} unknown cell(s), {} assignment(s) checked\n",
        report.k,
        report.variant,
        describe_status(report),
        report.unknown_cells,
        report.assignments_checked
    );
    if !report.conflicts.is_empty() {
        s += &format!(
            "  {} propagation conflict(s); first: {}\n",
            report.conflicts.len(),
            report.conflicts[0]
        );
    }
    for cell in &report.resolved {
        s += &format!("  {} ⊠ {} = {}\n", cell.a, cell.b, cell.products);
    }
    s += &log_text(&report.axiom_log);
    s
}

fn cmd_verify(c: &Common) -> Outcome {
    if c.variant.is_some() {
        let completion = complete(c)?;
        let report = &completion.report;
        let body = match c.format {
            Format::Json => json_body(report),
            Format::Csv => csv_body(
                &[
                    "variant",
                    "axiom",
                    "checked",
                    "skipped",
                    "failures",
                    "first_counterexample",
                ],
                axiom_rows(report),
            ),
            Format::Text => report_text(report),
        };
        emit(c.out.as_deref(), &body)?;
        return completion_outcome(report);
    }
    let arbitration = arbitrate(c.rank(), CompletionOptions::default()).map_err(|e| Failure::math(e.to_string()))?;
    let verdict = match arbitration.passing[..] {
        [v] => format!("passing variant: {v}"),
        [] => "no variant passes".to_string(),
        _ => format!(
            "several variants pass: {}",
            arbitration
                .passing
                .iter()
                .map(|v| v.name())
                .collect::<Vec<_>>()
                .join(", ")
        ),
    };
    let body = match c.format {
        Format::Json => json_body(&arbitration),
        Format::Csv => csv_body(
            &[
                "variant",
                "axiom",
                "checked",
                "skipped",
                "failures",
                "first_counterexample",
            ],
            arbitration.reports.iter().flat_map(axiom_rows),
        ),
        Format::Text => {
            let mut s: String = arbitration.reports.iter().map(report_text).collect();
            s += &verdict;
            s.push('\n');
            s
        }
    };
    emit(c.out.as_deref(), &body)?;
    match arbitration.verdict() {
        Some(_) => Ok(()),
        None => Err(Failure::math(format!("k = {}: {verdict}", c.k))),
    }
}

fn axiom_rows(report: &CompletionReport) -> Vec<Vec<String>> {
    report
        .axiom_log
        .0
        .iter()
        .map(|r| {
            vec![
                report.variant.to_string(),
                r.axiom.name().to_string(),
                r.checked.to_string(),
                r.skipped.to_string(),
                r.failures.to_string(),
                r.counterexamples.first().map(|x| x.to_string()).unwrap_or_default(),
            ]
        })
        .collect()
}

fn cmd_complete(c: &Common) -> Outcome {
    let completion = complete(c)?;
    let report = &completion.report;
    let body = match c.format {
        Format::Json => report.to_json() + "\n",
        Format::Csv => csv_body(
            &["a", "b", "c", "mult"],
            report.resolved.iter().flat_map(|cell| {
                cell.products
                    .iter()
                    .map(|(x, m)| vec![cell.a.to_string(), cell.b.to_string(), x.to_string(), m.to_string()])
                    .collect::<Vec<_>>()
            }),
        ),
        Format::Text => report_text(report),
    };
    emit(c.out.as_deref(), &body)?;
    completion_outcome(report)
}

fn cmd_branch(c: &Common, x: Label) -> Outcome {
    let k = c.rank();
    check_label(k, x)?;
    let parts = branch(k, x);
    let body = match c.format {
        Format::Json => json_body(&json!({
            "k": k,
            "label": x,
            "summands": parts.iter().map(|(s, m)| json!({
                "lattice": s.lattice,
                "module": s.plus.to_string(),
                "mult": m,
                "qdim": qdim_json(&qdim_sub(k, *s)),
            })).collect::<Vec<_>>(),
        })),
        Format::Csv => csv_body(
            &["label", "lattice", "module", "mult"],
            parts
                .iter()
                .map(|(s, m)| vec![x.to_string(), s.lattice.to_string(), s.plus.to_string(), m.to_string()]),
        ),
        Format::Text => {
            let terms: Vec<String> = parts.iter().map(|(s, _)| s.to_string()).collect();
            format!("{x} → {}\n", terms.join(" + "))
        }
    };
    emit(c.out.as_deref(), &body)
}

fn cmd_qdim(c: &Common, x: Label) -> Outcome {
    let k = c.rank();
    check_label(k, x)?;
    let q = qdim(k, x);
    let exact = ExactQDim::from(&q);
    let body = match c.format {
        Format::Json => json_body(&json!({ "k": k, "label": x, "qdim": exact })),
        Format::Csv => csv_body(
            &["label", "qdim_a", "qdim_b", "radicand"],
            [vec![
                x.to_string(),
                exact.a.clone(),
                exact.b.clone(),
                exact.radicand.to_string(),
            ]],
        ),
        Format::Text => {
            let approx = if q.is_rational() {
                String::new()
            } else {
                format!(" ≈ {:.6} (approximate)", q.to_f64())
            };
            format!(
                "{x}: {q} = ({}, {}) with radicand {}{approx}\n",
                exact.a, exact.b, exact.radicand
            )
        }
    };
    emit(c.out.as_deref(), &body)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Enumerate(c) => cmd_enumerate(c),
        Command::Fuse { common, a, b } => cmd_fuse(common, *a, *b),
        Command::Table(c) => cmd_table(c),
        Command::Verify(c) => cmd_verify(c),
        Command::Complete(c) => cmd_complete(c),
        Command::Branch { common, label } => cmd_branch(common, *label),
        Command::Qdim { common, label } => cmd_qdim(common, *label),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
