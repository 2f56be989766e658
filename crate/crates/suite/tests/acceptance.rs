//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use orbifold_fusion::branching::{branch, qdim_sub};
use orbifold_fusion::completion::{arbitrate, build_partial_table, complete_table, CompletionOptions};
use orbifold_fusion::currents::{simple_current_group_axiom, simple_currents};
use orbifold_fusion::fusion::{fuse_vector, global_dimension, qdim, qdim_vector};
use orbifold_fusion::label::LabelClass;
use orbifold_fusion::ring::{verify_axioms, Axiom, VerifyMode};
use orbifold_fusion::{enumerate_simples, FusionVector, GenericVariant, Label, QDim, RankParam, RuleVariantConfig};

struct Outcome {
    pass: bool,
    detail: String,
}

fn k(n: u32) -> RankParam {
    RankParam::new(n).unwrap()
}

fn l(s: &str) -> Label {
    s.parse().unwrap()
}

fn within(elapsed: Duration, limit: Duration) -> (bool, String) {
    (
        elapsed < limit,
        format!("{:.2}s of {}s allowed", elapsed.as_secs_f64(), limit.as_secs()),
    )
}

fn classification_counts() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 1..=8u32 {
        let simples = enumerate_simples(k(n));
        let count = |c| simples.iter().filter(|x| x.class() == c).count();
        let got = (
            simples.len(),
            count(LabelClass::NonDiag),
            count(LabelClass::Diag),
            count(LabelClass::Twist),
        );
        let n = n as usize;
        let want = (2 * n * n + 7 * n, 2 * n * n - n, 4 * n, 4 * n);
        if got != want {
            bad.push(format!("k={n}: {got:?} != {want:?}"));
        }
    }
    let (fast, time) = within(start.elapsed(), Duration::from_secs(1));
    Outcome {
        pass: bad.is_empty() && fast,
        detail: if bad.is_empty() {
            format!("k=1..8, {time}")
        } else {
            bad.join("; ")
        },
    }
}

fn quantum_dimensions() -> Outcome {
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 1..=8u32 {
        let r = 2 * n as u64;
        for x in enumerate_simples(k(n)) {
            let want = match x.class() {
                LabelClass::NonDiag => QDim::from_int(2, r),
                LabelClass::Diag => QDim::one(r),
                LabelClass::Twist => QDim::root(r),
            };
            let got = qdim(k(n), x);
            if got != want || got < QDim::one(r) {
                bad.push(format!("k={n} {x}: {got}"));
            }
        }
    }
    let (fast, time) = within(start.elapsed(), Duration::from_secs(1));
    Outcome {
        pass: bad.is_empty() && fast,
        detail: if bad.is_empty() {
            format!("k=1..8, {time}")
        } else {
            bad.join("; ")
        },
    }
}

fn qdim_homomorphism() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    let mut k6 = Duration::ZERO;
    for n in 1..=6u32 {
        let start = Instant::now();
        let completion = complete_table(
            &build_partial_table(k(n), GenericVariant::default()),
            CompletionOptions::default(),
        )
        .unwrap();
        let table = &completion.table;
        let (mut mismatched, mut unresolved, mut pairs) = (0, 0, 0);
        for &a in table.labels() {
            for &b in table.labels() {
                pairs += 1;
                match table.product(a, b) {
                    Ok(v) if qdim_vector(k(n), v) == &qdim(k(n), a) * &qdim(k(n), b) => {}
                    Ok(_) => mismatched += 1,
                    Err(_) => unresolved += 1,
                }
            }
        }
        if n == 6 {
            k6 = start.elapsed();
        }
        pass &= mismatched == 0 && unresolved == 0;
        parts.push(format!(
            "k={n}: {mismatched} mismatched, {unresolved} unresolved of {pairs}"
        ));
    }
    let (fast, time) = within(k6, Duration::from_secs(30));
    Outcome {
        pass: pass && fast,
        detail: format!("{}; k=6 {time}", parts.join("; ")),
    }
}

const SUITE: [Axiom; 6] = [
    Axiom::Unit,
    Axiom::Commutativity,
    Axiom::Associativity,
    Axiom::DualInvolution,
    Axiom::UnitDelta,
    Axiom::DualSymmetry,
];

fn full_axiom_suite() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    let mut k4 = Duration::ZERO;
    for n in 1..=4u32 {
        let start = Instant::now();
        let arbitration = arbitrate(k(n), CompletionOptions::default()).unwrap();
        if n == 4 {
            k4 = start.elapsed();
        }
        let mut per_variant = Vec::new();
        for report in &arbitration.reports {
            let failing: Vec<&str> = SUITE
                .iter()
                .filter(|&&a| report.axiom_log.get(a).is_some_and(|r| !r.passed()))
                .map(|a| a.name())
                .collect();
            per_variant.push(format!(
                "{} {:?} fails [{}]",
                report.variant,
                report.status,
                failing.join(",")
            ));
        }
        let verdict = match arbitration.verdict() {
            Some(v) => format!("passing variant {v}"),
            None => format!("{} variant(s) pass", arbitration.passing.len()),
        };
        pass &= arbitration.verdict().is_some();
        parts.push(format!("k={n}: {verdict} ({})", per_variant.join("; ")));
    }
    let (fast, time) = within(k4, Duration::from_secs(60));
    Outcome {
        pass: pass && fast,
        detail: format!("{}; k=4 {time}", parts.join(" | ")),
    }
}

fn spot_table() -> Outcome {
    // Hand-evaluated at k = 1 from the closed-form rules.
    let cases: [(&str, &str, &[&str]); 9] = [
        ("N(1,0)", "T(0,0)", &["T(1,0)", "T(1,1)"]),
        ("N(1,0)", "D(1,0)", &["N(1,0)"]),
        ("D(1,0)", "D(1,1)", &["D(0,1)"]),
        ("D(1,0)", "T(0,0)", &["T(0,0)"]),
        ("D(0,1)", "T(1,0)", &["T(1,1)"]),
        ("N(1,0)", "N(1,0)", &["D(0,0)", "D(0,1)", "D(1,0)", "D(1,1)"]),
        ("T(0,0)", "T(0,1)", &["D(0,1)", "D(1,0)"]),
        ("T(1,0)", "T(1,1)", &["D(0,1)", "D(1,1)"]),
        ("T(0,0)", "T(1,0)", &["N(1,0)"]),
    ];
    let mut bad = Vec::new();
    for (a, b, want) in cases {
        let want: FusionVector = want.iter().map(|s| (l(s), 1)).collect();
        for v in GenericVariant::ALL {
            match fuse_vector(k(1), l(a), l(b), RuleVariantConfig::with_generic(v)) {
                Ok(got) if got == want => {}
                Ok(got) => bad.push(format!("{a} ⊠ {b} = {got} under {v}, expected {want}")),
                Err(e) => bad.push(format!("{a} ⊠ {b}: {e}")),
            }
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: if bad.is_empty() {
            "9 products match under both variants".into()
        } else {
            bad.join("; ")
        },
    }
}

fn element_orders(table: &[Vec<usize>]) -> Vec<usize> {
    let mut orders: Vec<usize> = (0..table.len())
        .map(|a| {
            let (mut x, mut n) = (a, 1);
            while x != 0 {
                x = table[x][a];
                n += 1;
            }
            n
        })
        .collect();
    orders.sort();
    orders
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Element orders of `Z_m × Z_2`.
fn expected_orders(m: usize) -> Vec<usize> {
    let mut orders: Vec<usize> = (0..m)
        .flat_map(|a| {
            (0..2).map(move |e| {
                let oa = m / gcd(a, m);
                if e == 0 {
                    oa
                } else {
                    oa * 2 / gcd(oa, 2)
                }
            })
        })
        .collect();
    orders.sort();
    orders
}

fn simple_current_group() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=6u32 {
        let g = match simple_currents(k(n), RuleVariantConfig::default()) {
            Ok(g) => g,
            Err(e) => {
                bad.push(format!("k={n}: {e}"));
                continue;
            }
        };
        let size = g.order();
        let abelian = (0..size).all(|a| (0..size).all(|b| g.table[a][b] == g.table[b][a]));
        let associative = (0..size)
            .all(|a| (0..size).all(|b| (0..size).all(|c| g.table[g.table[a][b]][c] == g.table[a][g.table[b][c]])));
        let inverses = (0..size).all(|a| g.table[a].contains(&0));
        let all_diag = g.elements.iter().all(|x| x.class() == LabelClass::Diag) && size == 4 * n as usize;
        if !(abelian && associative && inverses && all_diag)
            || element_orders(&g.table) != expected_orders(2 * n as usize)
        {
            bad.push(format!("k={n}: not Z_{} × Z_2", 2 * n));
        }
        // The same structure on the completed table.
        let completion = complete_table(
            &build_partial_table(k(n), GenericVariant::default()),
            CompletionOptions::default(),
        )
        .unwrap();
        let r = simple_current_group_axiom(k(n), &completion.table.to_ring());
        if !r.passed() {
            bad.push(format!("k={n}: {}", r.counterexamples[0]));
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: if bad.is_empty() {
            "k=1..6, order 4k, Z_2k × Z_2".into()
        } else {
            bad.join("; ")
        },
    }
}

fn branching_consistency() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=6u32 {
        let mut seen = BTreeMap::new();
        let simples = enumerate_simples(k(n));
        for &x in &simples {
            let parts = branch(k(n), x);
            let total = parts.iter().fold(QDim::zero(2 * n as u64), |acc, (s, m)| {
                acc + qdim_sub(k(n), *s).scale(*m as u64)
            });
            if parts.len() != 2 || parts[0].0 == parts[1].0 || total != qdim(k(n), x).scale(2) {
                bad.push(format!("k={n} {x}"));
            }
            for (s, _) in parts {
                if let Some(y) = seen.insert(s, x) {
                    bad.push(format!("k={n}: {s} from {x} and {y}"));
                }
            }
        }
        if seen.len() != 2 * simples.len() {
            bad.push(format!("k={n}: {} distinct summands", seen.len()));
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: if bad.is_empty() {
            "k=1..6, 2 distinct summands each, all distinct, qdim doubled".into()
        } else {
            bad.join("; ")
        },
    }
}

fn global_dimension_oracle() -> Outcome {
    let mut bad = Vec::new();
    for n in 1..=8u32 {
        let r = 2 * n as u64;
        let summed: QDim = enumerate_simples(k(n))
            .into_iter()
            .map(|x| &qdim(k(n), x) * &qdim(k(n), x))
            .sum();
        let closed = QDim::from_int(16 * (n as i64) * (n as i64), r);
        if summed != closed || global_dimension(k(n)) != closed {
            bad.push(format!("k={n}: {summed} vs {closed}"));
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: if bad.is_empty() {
            "k=1..8, sum of squares = 16k²".into()
        } else {
            bad.join("; ")
        },
    }
}

fn completion_determinism() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for n in 1..=4u32 {
        let arbitration = arbitrate(k(n), CompletionOptions::default()).unwrap();
        let variant = arbitration.verdict();
        let chosen = variant.unwrap_or_default();
        let run = || {
            complete_table(&build_partial_table(k(n), chosen), CompletionOptions::default())
                .unwrap()
                .report
        };
        let (first, second) = (run(), run());
        let identical = first.to_json() == second.to_json();
        pass &= variant.is_some() && first.is_unique() && identical;
        parts.push(format!(
            "k={n}: {} {:?}, byte-identical {identical}",
            variant.map_or(format!("no passing variant, showing {chosen}"), |v| format!(
                "variant {v}"
            )),
            first.status
        ));
    }
    Outcome {
        pass,
        detail: parts.join("; "),
    }
}

fn mutation_sensitivity() -> Outcome {
    let completion = complete_table(
        &build_partial_table(k(2), GenericVariant::default()),
        CompletionOptions::default(),
    )
    .unwrap();
    let ring = completion.table.to_ring();
    let n = ring.len();
    let (mut mutations, mut caught, mut absent) = (0, 0, 0);
    let mut missed = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if ring.product(a, b).is_none() {
                absent += 1;
                continue;
            }
            for c in 0..n {
                let mut m = ring.clone();
                m.set_constant(a, b, c, ring.constant(a, b, c).unwrap() + 1);
                mutations += 1;
                let log = verify_axioms(&m, VerifyMode::Exhaustive);
                let named = log.failing().any(|r| {
                    r.counterexamples.iter().any(|x| {
                        x.labels.iter().any(|s| s == ring.name(a)) && x.labels.iter().any(|s| s == ring.name(b))
                    })
                });
                if named {
                    caught += 1;
                } else if missed.len() < 3 {
                    missed.push(format!("N^{}_{{{},{}}}", ring.name(c), ring.name(a), ring.name(b)));
                }
            }
        }
    }
    Outcome {
        pass: caught == mutations && mutations > 0,
        detail: format!(
            "k=2: {caught}/{mutations} single +1 mutations produce a counterexample naming the mutated cell ({absent} unresolved cells have no constants to mutate){}",
            if missed.is_empty() { String::new() } else { format!("; missed {}", missed.join(", ")) }
        ),
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("classification counts", classification_counts),
        ("quantum dimensions", quantum_dimensions),
        ("qdim homomorphism", qdim_homomorphism),
        ("full axiom suite", full_axiom_suite),
        ("spot table k=1", spot_table),
        ("simple-current group", simple_current_group),
        ("branching consistency", branching_consistency),
        ("global dimension", global_dimension_oracle),
        ("completion determinism and uniqueness", completion_determinism),
        ("mutation sensitivity", mutation_sensitivity),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let outcome = check();
        if !outcome.pass {
            failed += 1;
        }
        println!(
            "{} {name}: {}",
            if outcome.pass { "PASS" } else { "FAIL" },
            outcome.detail
        );
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
