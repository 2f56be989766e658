//! Structure-constant tables of based rings and the axiom checks run on them.
//!
//! [`FusionRing`] knows nothing about the orbifold: simples are indices, the
//! quantum dimensions live in any [`Surd`] coefficient type, and cells may be
//! missing. Every check quantifies exhaustively over the simples, skipping
//! instances that touch a missing cell and counting them as skipped.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::surd::{Coefficient, Surd};

/// Number of counterexamples kept per axiom.
pub const MAX_COUNTEREXAMPLES: usize = 5;

#[derive(Clone, Debug, PartialEq)]
pub struct FusionRing<T> {
    names: Vec<String>,
    unit: usize,
    qdims: Vec<Surd<T>>,
    /// Ordered cells, `a * n + b`, each a sorted sparse row without zeros.
    cells: Vec<Option<Vec<(usize, u32)>>>,
}

impl<T: Coefficient> FusionRing<T> {
    /// A ring with every cell missing.
    pub fn new(names: Vec<String>, unit: usize, qdims: Vec<Surd<T>>) -> Self {
        assert_eq!(names.len(), qdims.len());
        assert!(unit < names.len());
        let n = names.len();
        FusionRing {
            names,
            unit,
            qdims,
            cells: vec![None; n * n],
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn qdim(&self, a: usize) -> &Surd<T> {
        &self.qdims[a]
    }

    /// Sets the ordered cell `a ⊠ b`.
    pub fn set(&mut self, a: usize, b: usize, entries: impl IntoIterator<Item = (usize, u32)>) {
        let n = self.len();
        let mut row: Vec<(usize, u32)> = Vec::new();
        for (c, m) in entries {
            assert!(c < n, "label index {c} out of range");
            row.push((c, m));
        }
        row.sort_unstable();
        row.dedup_by(|next, kept| {
            if next.0 == kept.0 {
                kept.1 += next.1;
                true
            } else {
                false
            }
        });
        row.retain(|&(_, m)| m > 0);
        self.cells[a * n + b] = Some(row);
    }

    /// Sets both `a ⊠ b` and `b ⊠ a`.
    pub fn set_symmetric(&mut self, a: usize, b: usize, entries: impl IntoIterator<Item = (usize, u32)>) {
        self.set(a, b, entries);
        let row = self.cells[a * self.len() + b].clone();
        let n = self.len();
        self.cells[b * n + a] = row;
    }

    pub fn clear(&mut self, a: usize, b: usize) {
        let n = self.len();
        self.cells[a * n + b] = None;
    }

    pub fn product(&self, a: usize, b: usize) -> Option<&[(usize, u32)]> {
        self.cells[a * self.len() + b].as_deref()
    }

    /// `N^c_{a,b}`, or `None` when the cell is missing.
    pub fn constant(&self, a: usize, b: usize, c: usize) -> Option<u32> {
        let row = self.product(a, b)?;
        Some(match row.binary_search_by_key(&c, |&(l, _)| l) {
            Ok(pos) => row[pos].1,
            Err(_) => 0,
        })
    }

    /// Overwrites the single constant `N^c_{a,b}`; the cell must be present.
    pub fn set_constant(&mut self, a: usize, b: usize, c: usize, value: u32) {
        let mut row = self.product(a, b).expect("cell must be present").to_vec();
        row.retain(|&(l, _)| l != c);
        row.push((c, value));
        self.set(a, b, row);
    }

    pub fn is_complete(&self) -> bool {
        self.cells.iter().all(Option::is_some)
    }

    /// The unique `y` with `N^unit_{x,y} = 1`, when the row of `x` is fully
    /// known and the unit appears exactly once with multiplicity one.
    pub fn dual(&self, x: usize) -> Result<usize, DualFailure> {
        let mut hits = Vec::new();
        for y in 0..self.len() {
            match self.constant(x, y, self.unit) {
                None => return Err(DualFailure::RowIncomplete),
                Some(0) => {}
                Some(n) => hits.push((y, n)),
            }
        }
        match hits[..] {
            [(y, 1)] => Ok(y),
            [] => Err(DualFailure::Missing),
            _ => Err(DualFailure::Ambiguous(hits)),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DualFailure {
    RowIncomplete,
    Missing,
    /// Every `(y, N^unit_{x,y})` with a nonzero constant.
    Ambiguous(Vec<(usize, u32)>),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    /// Every cell is known and holds nonnegative integers.
    Integrality,
    Unit,
    Commutativity,
    Associativity,
    /// `N^unit_{x,y} = δ_{y, x'}`.
    UnitDelta,
    /// `x'' = x` and `qdim(x') = qdim(x)`.
    DualInvolution,
    /// `N^c_{a,b} = N^{b'}_{a,c'}`.
    DualSymmetry,
    QdimHomomorphism,
    QdimLowerBound,
    /// Simples of quantum dimension one have single-summand products and close
    /// under fusion.
    SimpleCurrents,
    /// The simple currents form the expected abelian group.
    SimpleCurrentGroup,
}

impl Axiom {
    pub fn name(self) -> &'static str {
        match self {
            Axiom::Integrality => "integrality",
            Axiom::Unit => "unit",
            Axiom::Commutativity => "commutativity",
            Axiom::Associativity => "associativity",
            Axiom::UnitDelta => "unit-delta",
            Axiom::DualInvolution => "dual-involution",
            Axiom::DualSymmetry => "dual-symmetry",
            Axiom::QdimHomomorphism => "qdim-homomorphism",
            Axiom::QdimLowerBound => "qdim-lower-bound",
            Axiom::SimpleCurrents => "simple-currents",
            Axiom::SimpleCurrentGroup => "simple-current-group",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Counterexample {
    pub labels: Vec<String>,
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.labels.join(", "), self.detail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomResult {
    pub axiom: Axiom,
    pub checked: u64,
    pub skipped: u64,
    pub failures: u64,
    /// The first failures in iteration order, at most [`MAX_COUNTEREXAMPLES`].
    pub counterexamples: Vec<Counterexample>,
}

impl AxiomResult {
    pub fn new(axiom: Axiom) -> Self {
        AxiomResult {
            axiom,
            checked: 0,
            skipped: 0,
            failures: 0,
            counterexamples: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn ok(&mut self) {
        self.checked += 1;
    }

    pub fn skip(&mut self) {
        self.skipped += 1;
    }

    pub fn fail(&mut self, labels: Vec<String>, detail: String) {
        self.checked += 1;
        self.failures += 1;
        if self.counterexamples.len() < MAX_COUNTEREXAMPLES {
            self.counterexamples.push(Counterexample { labels, detail });
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomLog(pub Vec<AxiomResult>);

impl AxiomLog {
    pub fn all_pass(&self) -> bool {
        self.0.iter().all(AxiomResult::passed)
    }

    pub fn get(&self, axiom: Axiom) -> Option<&AxiomResult> {
        self.0.iter().find(|r| r.axiom == axiom)
    }

    pub fn failing(&self) -> impl Iterator<Item = &AxiomResult> {
        self.0.iter().filter(|r| !r.passed())
    }

    pub fn push(&mut self, result: AxiomResult) {
        self.0.push(result);
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum VerifyMode {
    /// Count every failure.
    #[default]
    Exhaustive,
    /// Stop each axiom at its first failure.
    FirstFailure,
}

struct Checker<'a, T> {
    ring: &'a FusionRing<T>,
    mode: VerifyMode,
}

impl<T: Coefficient + fmt::Display> Checker<'_, T> {
    fn names(&self, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| self.ring.name(i).to_string()).collect()
    }

    fn render(&self, row: &[(usize, u32)]) -> String {
        if row.is_empty() {
            return "0".into();
        }
        row.iter()
            .map(|&(c, m)| {
                if m == 1 {
                    self.ring.name(c).to_string()
                } else {
                    format!("{m}·{}", self.ring.name(c))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    fn stop(&self, r: &AxiomResult) -> bool {
        self.mode == VerifyMode::FirstFailure && r.failures > 0
    }

    fn integrality(&self) -> AxiomResult {
        let mut r = AxiomResult::new(Axiom::Integrality);
        let n = self.ring.len();
        'outer: for a in 0..n {
            for b in 0..n {
                match self.ring.product(a, b) {
                    Some(_) => r.ok(),
                    None => r.fail(self.names(&[a, b]), "cell is unresolved".into()),
                }
                if self.stop(&r) {
                    break 'outer;
                }
            }
        }
        r
    }

    fn unit(&self) -> AxiomResult {
        let mut r = AxiomResult::new(Axiom::Unit);
        let u = self.ring.unit();
        for x in 0..self.ring.len() {
            for (a, b) in [(u, x), (x, u)] {
                match self.ring.product(a, b) {
                    None => r.skip(),
                    Some(row) if row == [(x, 1)] => r.ok(),
                    Some(row) => {
                        let detail = format!("{} ⊠ {} = {}", self.ring.name(a), self.ring.name(b), self.render(row));
                        r.fail(self.names(&[a, b]), detail)
                    }
                }
            }
            if self.stop(&r) {
                break;
            }
        }
        r
    }

    fn commutativity(&self) -> AxiomResult {
        let mut r = AxiomResult::new(Axiom::Commutativity);
        let n = self.ring.len();
        'outer: for a in 0..n {
            for b in a + 1..n {
                match (self.ring.product(a, b), self.ring.product(b, a)) {
                    (Some(x), Some(y)) if x == y => r.ok(),
                    (Some(x), Some(y)) => {
                        let detail = format!("{} versus {}", self.render(x), self.render(y));
                        r.fail(self.names(&[a, b]), detail)
                    }
                    _ => r.skip(),
                }
                if self.stop(&r) {
                    break 'outer;
                }
            }
        }
        r
    }

    fn associativity(&self) -> AxiomResult {
        let mut r = AxiomResult::new(Axiom::Associativity);
        let n = self.ring.len();
        let mut left = vec![0u64; n];
        let mut right = vec![0u64; n];
        'outer: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    match self.triple(a, b, c, &mut left, &mut right) {
                        None => r.skip(),
                        Some(true) => r.ok(),
                        Some(false) => {
                            let detail = format!(
                                "({a} ⊠ {b}) ⊠ {c} = {} but {a} ⊠ ({b} ⊠ {c}) = {}",
                                render_dense(self.ring, &left),
                                render_dense(self.ring, &right),
                                a = self.ring.name(a),
                                b = self.ring.name(b),
                                c = self.ring.name(c),
                            );
                            r.fail(self.names(&[a, b, c]), detail);
                        }
                    }
                    if self.stop(&r) {
                        break 'outer;
                    }
                }
            }
        }
        r
    }

    /// Fills `left = (a⊠b)⊠c` and `right = a⊠(b⊠c)`; `None` if a cell is missing.
    fn triple(&self, a: usize, b: usize, c: usize, left: &mut [u64], right: &mut [u64]) -> Option<bool> {
        left.iter_mut().for_each(|x| *x = 0);
        right.iter_mut().for_each(|x| *x = 0);
        let ab = self.ring.product(a, b)?;
        let bc = self.ring.product(b, c)?;
        for &(e, m) in ab {
            for &(d, m2) in self.ring.product(e, c)? {
                left[d] += m as u64 * m2 as u64;
            }
        }
        for &(f, m) in bc {
            for &(d, m2) in self.ring.product(a, f)? {
                right[d] += m as u64 * m2 as u64;
            }
        }
        Some(left == right)
    }

    fn duals(&self) -> Vec<Result<usize, DualFailure>> {
        (0..self.ring.len()).map(|x| self.ring.dual(x)).collect()
    }

    fn unit_delta(&self, duals: &[Result<usize, DualFailure>]) -> AxiomResult {
        let mut r = AxiomResult::new(Axiom::UnitDelta);
        let u = self.ring.name(self.ring.unit()).to_string();
        for (x, d) in duals.iter().enumerate() {
            match d {
                Ok(_) => r.ok(),
                Err(DualFailure::RowIncomplete) => r.skip(),
                Err(DualFailure::Missing) => r.fail(
                    self.names(&[x]),
                    format!("{u} occurs in no product of {}", self.ring.name(x)),
                ),
                Err(DualFailure::Ambiguous(hits)) => {
                    let detail = hits
                        .iter()
                        .map(|&(y, m)| format!("N^{u}_{{{},{}}} = {m}", self.ring.name(x), self.ring.name(y)))
                        .collect::<Vec<_>>()
                        .join(", ");
                    r.fail(self.names(&[x]), detail)
                }
            }
            if self.stop(&r) {
                break;
            }
        }
        r
    }

    fn dual_involution(&self, duals: &[Result<usize, DualFailure>]) -> AxiomResult {
        let mut r = AxiomResult::new(Axiom::DualInvolution);
        for (x, d) in duals.iter().enumerate() {
            let Ok(y) = *d else {
                r.skip();
                continue;
            };
            match &duals[y] {
                Ok(z) if *z == x && self.ring.qdim(x) == self.ring.qdim(y) => r.ok(),
                Ok(z) if *z == x => r.fail(self.names(&[x, y]), "dual changes the quantum dimension".into()),
                Ok(z) => r.fail(
                    self.names(&[x, y, *z]),
                    format!("dual of dual of {} is {}", self.ring.name(x), self.ring.name(*z)),
                ),
                Err(_) => r.fail(
                    self.names(&[x, y]),
                    format!("{} has a dual but {} does not", self.ring.name(x), self.ring.name(y)),
                ),
            }
            if self.stop(&r) {
                break;
            }
        }
        r
    }

    fn dual_symmetry(&self, duals: &[Result<usize, DualFailure>]) -> AxiomResult {
        let mut r = AxiomResult::new(Axiom::DualSymmetry);
        let n = self.ring.len();
        'outer: for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    let (Ok(bd), Ok(cd)) = (&duals[b], &duals[c]) else {
                        r.skip();
                        continue;
                    };
                    match (self.ring.constant(a, b, c), self.ring.constant(a, *cd, *bd)) {
                        (Some(x), Some(y)) if x == y => r.ok(),
                        (Some(x), Some(y)) => {
                            let detail = format!(
                                "N^{c}_{{{a},{b}}} = {x} but N^{bd}_{{{a},{cd}}} = {y}",
                                a = self.ring.name(a),
                                b = self.ring.name(b),
                                c = self.ring.name(c),
                                bd = self.ring.name(*bd),
                                cd = self.ring.name(*cd),
                            );
                            r.fail(self.names(&[a, b, c]), detail)
                        }
                        _ => r.skip(),
                    }
                    if self.stop(&r) {
                        break 'outer;
                    }
                }
            }
        }
        r
    }

    fn qdim_homomorphism(&self) -> AxiomResult {
        let mut r = AxiomResult::new(Axiom::QdimHomomorphism);
        let n = self.ring.len();
        'outer: for a in 0..n {
            for b in 0..n {
                let Some(row) = self.ring.product(a, b) else {
                    r.skip();
                    continue;
                };
                let expected = self.ring.qdim(a) * self.ring.qdim(b);
                let actual = row
                    .iter()
                    .map(|&(c, m)| self.ring.qdim(c).scale(m as u64))
                    .fold(Surd::zero(expected.radicand()), |acc, x| acc + x);
                if actual == expected {
                    r.ok();
                } else {
                    let detail = format!(
                        "qdim({}) = {actual} but qdim({})·qdim({}) = {expected}",
                        self.render(row),
                        self.ring.name(a),
                        self.ring.name(b)
                    );
                    r.fail(self.names(&[a, b]), detail);
                }
                if self.stop(&r) {
                    break 'outer;
                }
            }
        }
        r
    }

    fn qdim_lower_bound(&self) -> AxiomResult {
        let mut r = AxiomResult::new(Axiom::QdimLowerBound);
        for x in 0..self.ring.len() {
            let q = self.ring.qdim(x);
            if *q >= Surd::one(q.radicand()) {
                r.ok();
            } else {
                r.fail(self.names(&[x]), format!("qdim = {q} < 1"));
            }
            if self.stop(&r) {
                break;
            }
        }
        r
    }

    fn simple_currents(&self) -> AxiomResult {
        let mut r = AxiomResult::new(Axiom::SimpleCurrents);
        let n = self.ring.len();
        let currents: Vec<usize> = (0..n).filter(|&x| self.ring.qdim(x).is_one()).collect();
        'outer: for &s in &currents {
            for y in 0..n {
                match self.ring.product(s, y) {
                    None => r.skip(),
                    Some([(z, 1)]) => {
                        if currents.contains(&y) && !currents.contains(z) {
                            let detail = format!(
                                "{} ⊠ {} = {} leaves the simple currents",
                                self.ring.name(s),
                                self.ring.name(y),
                                self.ring.name(*z)
                            );
                            r.fail(self.names(&[s, y]), detail);
                        } else {
                            r.ok();
                        }
                    }
                    Some(row) => {
                        let detail = format!(
                            "{} ⊠ {} = {} is not simple",
                            self.ring.name(s),
                            self.ring.name(y),
                            self.render(row)
                        );
                        r.fail(self.names(&[s, y]), detail);
                    }
                }
                if self.stop(&r) {
                    break 'outer;
                }
            }
        }
        r
    }
}

fn render_dense<T>(ring: &FusionRing<T>, v: &[u64]) -> String {
    let parts: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, &m)| m > 0)
        .map(|(c, &m)| {
            if m == 1 {
                ring.names[c].clone()
            } else {
                format!("{m}·{}", ring.names[c])
            }
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Runs every generic axiom check on `ring`.
pub fn verify_axioms<T: Coefficient + fmt::Display>(ring: &FusionRing<T>, mode: VerifyMode) -> AxiomLog {
    let c = Checker { ring, mode };
    let duals = c.duals();
    AxiomLog(vec![
        c.integrality(),
        c.unit(),
        c.commutativity(),
        c.associativity(),
        c.unit_delta(&duals),
        c.dual_involution(&duals),
        c.dual_symmetry(&duals),
        c.qdim_homomorphism(),
        c.qdim_lower_bound(),
        c.simple_currents(),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    type Q = Surd<Rational64>;

    /// Group ring of Z/n.
    fn cyclic(n: usize) -> FusionRing<Rational64> {
        let names = (0..n).map(|i| format!("g{i}")).collect();
        let mut ring = FusionRing::new(names, 0, vec![Q::one(1); n]);
        for a in 0..n {
            for b in 0..n {
                ring.set(a, b, [((a + b) % n, 1)]);
            }
        }
        ring
    }

    /// Fibonacci: τ ⊠ τ = 1 + τ, qdim τ = (1 + √5)/2.
    fn fibonacci() -> FusionRing<Rational64> {
        let half = Rational64::new(1, 2);
        let names = vec!["1".to_string(), "tau".to_string()];
        let mut ring = FusionRing::new(names, 0, vec![Q::one(5), Q::new(half, half, 5)]);
        ring.set(0, 0, [(0, 1)]);
        ring.set_symmetric(0, 1, [(1, 1)]);
        ring.set(1, 1, [(0, 1), (1, 1)]);
        ring
    }

    /// Ising: σ ⊠ σ = 1 + ψ, ψ ⊠ ψ = 1, ψ ⊠ σ = σ.
    fn ising() -> FusionRing<Rational64> {
        let names = vec!["1".to_string(), "psi".to_string(), "sigma".to_string()];
        let mut ring = FusionRing::new(names, 0, vec![Q::one(2), Q::one(2), Q::root(2)]);
        for x in 0..3 {
            ring.set_symmetric(0, x, [(x, 1)]);
        }
        ring.set(1, 1, [(0, 1)]);
        ring.set_symmetric(1, 2, [(2, 1)]);
        ring.set(2, 2, [(0, 1), (1, 1)]);
        ring
    }

    #[test]
    fn consistent_rings_pass() {
        for ring in [cyclic(1), cyclic(5), fibonacci(), ising()] {
            let log = verify_axioms(&ring, VerifyMode::Exhaustive);
            assert!(log.all_pass(), "{log:?}");
        }
    }

    #[test]
    fn approximate_coefficients_work() {
        let ring = fibonacci();
        let mut approx = FusionRing::new(
            vec!["1".into(), "tau".into()],
            0,
            vec![Surd::<f64>::one(5), Surd::new(0.5, 0.5, 5)],
        );
        for a in 0..2 {
            for b in 0..2 {
                approx.set(a, b, ring.product(a, b).unwrap().to_vec());
            }
        }
        assert!(verify_axioms(&approx, VerifyMode::Exhaustive).all_pass());
    }

    #[test]
    fn every_single_bump_is_caught() {
        for ring in [cyclic(4), fibonacci(), ising()] {
            let n = ring.len();
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        let mut bad = ring.clone();
                        let v = bad.constant(a, b, c).unwrap();
                        bad.set_constant(a, b, c, v + 1);
                        let log = verify_axioms(&bad, VerifyMode::FirstFailure);
                        let hom = log.get(Axiom::QdimHomomorphism).unwrap();
                        assert!(!hom.passed());
                        assert_eq!(hom.counterexamples[0].labels, vec![ring.name(a), ring.name(b)]);
                    }
                }
            }
        }
    }

    #[test]
    fn broken_associativity_is_named() {
        // Z/3 with g1 ⊠ g1 swapped to g0: not associative, not unital-consistent.
        let mut ring = cyclic(3);
        ring.set(1, 1, [(0, 1)]);
        let log = verify_axioms(&ring, VerifyMode::Exhaustive);
        let assoc = log.get(Axiom::Associativity).unwrap();
        assert!(!assoc.passed());
        assert!(!assoc.counterexamples.is_empty());
        assert!(!log.get(Axiom::UnitDelta).unwrap().passed());
    }

    #[test]
    fn missing_cells_are_skipped_and_reported() {
        let mut ring = ising();
        ring.clear(2, 2);
        let log = verify_axioms(&ring, VerifyMode::Exhaustive);
        let integrality = log.get(Axiom::Integrality).unwrap();
        assert_eq!(integrality.failures, 1);
        assert_eq!(integrality.counterexamples[0].labels, vec!["sigma", "sigma"]);
        let assoc = log.get(Axiom::Associativity).unwrap();
        assert!(assoc.passed());
        assert!(assoc.skipped > 0);
    }

    #[test]
    fn duals() {
        let ring = cyclic(5);
        assert_eq!(ring.dual(2), Ok(3));
        let mut doubled = cyclic(3);
        doubled.set(1, 2, [(0, 2)]);
        assert_eq!(doubled.dual(1), Err(DualFailure::Ambiguous(vec![(2, 2)])));
        let mut partial = cyclic(3);
        partial.clear(1, 0);
        assert_eq!(partial.dual(1), Err(DualFailure::RowIncomplete));
    }
}
