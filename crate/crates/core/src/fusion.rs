//! Quantum dimensions and the rule-based fusion products of the orbifold simples.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::label::{enumerate_simples, Label, RankParam};
use crate::QDim;

/// Finite formal sum of simples with positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FusionVector(BTreeMap<Label, u32>);

impl FusionVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(label: Label) -> Self {
        let mut v = Self::new();
        v.add(label, 1);
        v
    }

    pub fn add(&mut self, label: Label, mult: u32) {
        if mult > 0 {
            *self.0.entry(label).or_insert(0) += mult;
        }
    }

    pub fn merge(&mut self, other: &FusionVector) {
        for (&label, &mult) in &other.0 {
            self.add(label, mult);
        }
    }

    pub fn get(&self, label: Label) -> u32 {
        self.0.get(&label).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Label, u32)> + '_ {
        self.0.iter().map(|(&l, &m)| (l, m))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sum of multiplicities.
    pub fn total(&self) -> u32 {
        self.0.values().sum()
    }

    /// Relabels every summand through `f`, accumulating collisions.
    pub fn map_labels(&self, mut f: impl FnMut(Label) -> Label) -> FusionVector {
        let mut out = FusionVector::new();
        for (label, mult) in self.iter() {
            out.add(f(label), mult);
        }
        out
    }
}

impl FromIterator<(Label, u32)> for FusionVector {
    fn from_iter<I: IntoIterator<Item = (Label, u32)>>(iter: I) -> Self {
        let mut v = FusionVector::new();
        for (label, mult) in iter {
            v.add(label, mult);
        }
        v
    }
}

impl fmt::Display for FusionVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        for (n, (label, mult)) in self.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            if mult > 1 {
                write!(f, "{mult}·")?;
            }
            write!(f, "{label}")?;
        }
        Ok(())
    }
}

/// Reading of the second summand in the generic non-diagonal product.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenericVariant {
    /// `(i+q, j+p)`.
    #[default]
    Corrected,
    /// `(i+q, j−p)`, as typeset in the source.
    Printed,
}

impl GenericVariant {
    pub const ALL: [GenericVariant; 2] = [GenericVariant::Corrected, GenericVariant::Printed];

    pub fn name(self) -> &'static str {
        match self {
            GenericVariant::Corrected => "corrected",
            GenericVariant::Printed => "printed",
        }
    }
}

impl fmt::Display for GenericVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for GenericVariant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "corrected" => Ok(GenericVariant::Corrected),
            "printed" => Ok(GenericVariant::Printed),
            other => Err(format!("unknown variant {other:?}: expected printed or corrected")),
        }
    }
}

/// What [`fuse`] does with a formal pair `(a, a)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DegeneratePolicy {
    /// Expand to `D(a,0) + D(a,1)`.
    #[default]
    Split,
    /// Leave it out of the vector; it is only listed in [`Product::degenerate`].
    Defer,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RuleVariantConfig {
    pub generic: GenericVariant,
    pub degenerate: DegeneratePolicy,
}

impl RuleVariantConfig {
    pub fn with_generic(generic: GenericVariant) -> Self {
        RuleVariantConfig {
            generic,
            ..Default::default()
        }
    }
}

/// Which fusion rule produced a product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    NonDiagTwist,
    NonDiagDiag,
    DiagDiag,
    DiagTwist,
    NonDiagEqualDifference,
    NonDiagGeneric,
    /// Twist ⊠ Twist with `k+i`, `k+j` both odd.
    TwistTwistOdd,
    /// Twist ⊠ Twist with `k+i`, `k+j` both even.
    TwistTwistEven,
    /// Twist ⊠ Twist with `k+i`, `k+j` of opposite parity.
    TwistTwistMixed,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::NonDiagTwist => "nondiag-twist",
            Rule::NonDiagDiag => "nondiag-diag",
            Rule::DiagDiag => "diag-diag",
            Rule::DiagTwist => "diag-twist",
            Rule::NonDiagEqualDifference => "nondiag-nondiag-equal-difference",
            Rule::NonDiagGeneric => "nondiag-nondiag-generic",
            Rule::TwistTwistOdd => "twist-twist-odd",
            Rule::TwistTwistEven => "twist-twist-even",
            Rule::TwistTwistMixed => "twist-twist-mixed",
        }
    }
}

/// Result of reducing a formal pair of residues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormalizedSummand {
    NonDiag(Label),
    /// Both residues coincide; carries the common residue.
    DegenerateDiagonal(u32),
}

/// Reduces `(a, b)` mod `2k`. Distinct residues give the canonical `NonDiag`
/// label (larger residue first); equal residues give a degenerate marker.
pub fn normalize_pair(k: RankParam, a: i64, b: i64) -> NormalizedSummand {
    match Label::non_diag(k, a, b) {
        Ok(label) => NormalizedSummand::NonDiag(label),
        Err(_) => NormalizedSummand::DegenerateDiagonal(k.reduce(a)),
    }
}

/// A product covered by one of the rules.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Product {
    pub rule: Rule,
    /// The product; degenerate summands are included only under
    /// [`DegeneratePolicy::Split`].
    pub vector: FusionVector,
    /// Residues of degenerate formal pairs, one entry per occurrence.
    pub degenerate: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FusionResult {
    Covered(Product),
    /// `NonDiag ⊠ NonDiag` with differences summing to `2k` but not equal.
    Uncovered {
        left: Label,
        right: Label,
    },
}

impl FusionResult {
    pub fn covered(&self) -> Option<&Product> {
        match self {
            FusionResult::Covered(p) => Some(p),
            FusionResult::Uncovered { .. } => None,
        }
    }
}

/// Quantum dimension of a simple: 2 for `NonDiag`, 1 for `Diag`, `√(2k)` for `Twist`.
pub fn qdim(k: RankParam, x: Label) -> QDim {
    let d = k.modulus() as u64;
    match x {
        Label::NonDiag { .. } => QDim::from_int(2, d),
        Label::Diag { .. } => QDim::one(d),
        Label::Twist { .. } => QDim::root(d),
    }
}

pub fn qdim_vector(k: RankParam, v: &FusionVector) -> QDim {
    v.iter()
        .map(|(label, mult)| qdim(k, label).scale(mult as u64))
        .fold(QDim::zero(k.modulus() as u64), |acc, x| acc + x)
}

/// `Σ qdim(x)²` over all simples.
pub fn global_dimension(k: RankParam) -> QDim {
    enumerate_simples(k)
        .into_iter()
        .map(|x| {
            let q = qdim(k, x);
            &q * &q
        })
        .fold(QDim::zero(k.modulus() as u64), |acc, x| acc + x)
}

struct Builder {
    k: RankParam,
    policy: DegeneratePolicy,
    vector: FusionVector,
    degenerate: Vec<u32>,
}

impl Builder {
    fn new(k: RankParam, policy: DegeneratePolicy) -> Self {
        Builder {
            k,
            policy,
            vector: FusionVector::new(),
            degenerate: Vec::new(),
        }
    }

    fn push(&mut self, label: Label) {
        self.vector.add(label, 1);
    }

    fn push_pair(&mut self, a: i64, b: i64) {
        match normalize_pair(self.k, a, b) {
            NormalizedSummand::NonDiag(label) => self.push(label),
            NormalizedSummand::DegenerateDiagonal(r) => {
                self.degenerate.push(r);
                if self.policy == DegeneratePolicy::Split {
                    self.push(Label::Diag { i: r, eps: 0 });
                    self.push(Label::Diag { i: r, eps: 1 });
                }
            }
        }
    }

    fn finish(self, rule: Rule) -> FusionResult {
        FusionResult::Covered(Product {
            rule,
            vector: self.vector,
            degenerate: self.degenerate,
        })
    }
}

/// Evaluates `x ⊠ y` by the closed-form rules. Arguments are put in label
/// order first, so `fuse(x, y) == fuse(y, x)`.
pub fn fuse(k: RankParam, x: Label, y: Label, cfg: RuleVariantConfig) -> Result<FusionResult, Error> {
    x.validate(k)?;
    y.validate(k)?;
    let (x, y) = if x <= y { (x, y) } else { (y, x) };
    let kk = k.get() as i64;
    let m = k.modulus() as i64;
    let mut out = Builder::new(k, cfg.degenerate);

    use Label::*;
    let result = match (x, y) {
        (NonDiag { i, j }, Twist { i: l, .. }) => {
            let t = i as i64 + j as i64 + l as i64;
            out.push(Label::twist(k, t, 0));
            out.push(Label::twist(k, t, 1));
            out.finish(Rule::NonDiagTwist)
        }
        (NonDiag { i, j }, Diag { i: l, .. }) => {
            out.push_pair(i as i64 + l as i64, j as i64 + l as i64);
            out.finish(Rule::NonDiagDiag)
        }
        (Diag { i, eps }, Diag { i: j, eps: e1 }) => {
            out.push(Label::diag(k, i as i64 + j as i64, (eps + e1) as i64));
            out.finish(Rule::DiagDiag)
        }
        (Diag { i, eps }, Twist { i: j, eps: e1 }) => {
            out.push(Label::twist(k, 2 * i as i64 + j as i64, (eps + e1) as i64));
            out.finish(Rule::DiagTwist)
        }
        (NonDiag { i, j }, NonDiag { i: p, j: q }) => {
            let (i, j, p, q) = (i as i64, j as i64, p as i64, q as i64);
            let (d1, d2) = (i - j, p - q);
            if d1 == d2 {
                for base in [p + j, p - i] {
                    out.push(Label::diag(k, base, 0));
                    out.push(Label::diag(k, base, 1));
                }
                out.finish(Rule::NonDiagEqualDifference)
            } else if d1 + d2 == m {
                FusionResult::Uncovered { left: x, right: y }
            } else {
                out.push_pair(i + p, j + q);
                match cfg.generic {
                    GenericVariant::Corrected => out.push_pair(i + q, j + p),
                    GenericVariant::Printed => out.push_pair(i + q, j - p),
                }
                out.finish(Rule::NonDiagGeneric)
            }
        }
        (Twist { i, eps }, Twist { i: j, eps: e1 }) => {
            let (i, j, e) = (i as i64, j as i64, (eps + e1) as i64);
            let (pi, pj) = ((kk + i).rem_euclid(2), (kk + j).rem_euclid(2));
            let r_parity = if pi == pj {
                // i + j is even here; halve the integer representatives.
                let half = (i + j) / 2;
                let shift = if pi == 1 { 1 } else { 0 };
                out.push(Label::diag(k, half, e));
                out.push(Label::diag(k, kk + half, e + shift));
                0
            } else {
                1
            };
            for r in (1..m).filter(|r| r % 2 == r_parity) {
                out.push_pair(i + r, j - r);
            }
            let rule = match (pi, pj) {
                (1, 1) => Rule::TwistTwistOdd,
                (0, 0) => Rule::TwistTwistEven,
                _ => Rule::TwistTwistMixed,
            };
            out.finish(rule)
        }
        _ => unreachable!("arguments are ordered by label class"),
    };
    Ok(result)
}

/// `N^c_{a,b}` read from the rule-based product.
///
/// Fails on uncovered cells, and on cells with degenerate summands when the
/// policy defers them.
pub fn structure_constant(k: RankParam, a: Label, b: Label, c: Label, cfg: RuleVariantConfig) -> Result<u32, Error> {
    c.validate(k)?;
    match fuse(k, a, b, cfg)? {
        FusionResult::Uncovered { left, right } => Err(Error::Uncovered(left, right)),
        FusionResult::Covered(p) => {
            if cfg.degenerate == DegeneratePolicy::Defer && !p.degenerate.is_empty() {
                return Err(Error::Unexpanded(a, b));
            }
            Ok(p.vector.get(c))
        }
    }
}

/// Product under `cfg`, or an error when no rule covers the cell.
pub fn fuse_vector(k: RankParam, x: Label, y: Label, cfg: RuleVariantConfig) -> Result<FusionVector, Error> {
    match fuse(k, x, y, cfg)? {
        FusionResult::Covered(p) => Ok(p.vector),
        FusionResult::Uncovered { left, right } => Err(Error::Uncovered(left, right)),
    }
}

/// The unique `y` with `D(0,0) ∈ x ⊠ y`, found by scanning every product of `x`.
///
/// Fails if a product of `x` is uncovered, or if the unit appears in zero or
/// several products or with multiplicity above one.
pub fn dual(k: RankParam, x: Label, cfg: RuleVariantConfig) -> Result<Label, Error> {
    x.validate(k)?;
    let unit = Label::Diag { i: 0, eps: 0 };
    let mut hits = Vec::new();
    for y in enumerate_simples(k) {
        let n = fuse_vector(k, x, y, cfg)?.get(unit);
        if n > 0 {
            hits.push((y, n));
        }
    }
    match hits[..] {
        [(y, 1)] => Ok(y),
        [(y, n)] => Err(Error::NoDual {
            label: x.to_string(),
            reason: format!("the unit occurs {n} times in {x} ⊠ {y}"),
        }),
        [] => Err(Error::NoDual {
            label: x.to_string(),
            reason: "the unit occurs in no product".into(),
        }),
        _ => Err(Error::NoDual {
            label: x.to_string(),
            reason: format!(
                "the unit occurs in several products: {}",
                hits.iter().map(|(y, _)| y.to_string()).collect::<Vec<_>>().join(", ")
            ),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: u32) -> RankParam {
        RankParam::new(n).unwrap()
    }

    fn l(s: &str) -> Label {
        s.parse().unwrap()
    }

    fn v(items: &[&str]) -> FusionVector {
        items.iter().map(|s| (l(s), 1)).collect()
    }

    fn product(k_: u32, x: &str, y: &str) -> Product {
        fuse(k(k_), l(x), l(y), RuleVariantConfig::default())
            .unwrap()
            .covered()
            .cloned()
            .unwrap()
    }

    #[test]
    fn normalize_pair_examples() {
        assert_eq!(normalize_pair(k(2), 1, -2), NormalizedSummand::NonDiag(l("N(2,1)")));
        assert_eq!(normalize_pair(k(2), 3, 4), NormalizedSummand::NonDiag(l("N(3,0)")));
        assert_eq!(normalize_pair(k(2), 2, -2), NormalizedSummand::DegenerateDiagonal(2));
    }

    #[test]
    fn qdim_values() {
        assert_eq!(qdim(k(3), l("N(2,0)")), QDim::from_int(2, 6));
        assert_eq!(qdim(k(3), l("D(1,1)")), QDim::one(6));
        assert_eq!(qdim(k(2), l("T(0,0)")), QDim::from_int(2, 4));
        assert!(qdim(k(2), l("T(0,0)")).is_rational());
    }

    #[test]
    fn qdim_vector_examples() {
        assert_eq!(qdim_vector(k(1), &v(&["D(0,0)", "D(1,1)"])), QDim::from_int(2, 2));
        assert_eq!(qdim_vector(k(2), &v(&["N(3,0)", "N(2,1)"])), QDim::from_int(4, 4));
        assert_eq!(qdim_vector(k(1), &v(&["T(0,0)", "T(0,1)"])), QDim::root(2).scale(2));
    }

    #[test]
    fn unit_acts_trivially() {
        for n in 1..=4 {
            for x in enumerate_simples(k(n)) {
                let p = product(n, "D(0,0)", &x.to_string());
                assert_eq!(p.vector, FusionVector::single(x));
            }
        }
    }

    #[test]
    fn spot_products_k1() {
        assert_eq!(
            product(1, "N(1,0)", "N(1,0)").vector,
            v(&["D(1,0)", "D(1,1)", "D(0,0)", "D(0,1)"])
        );
        assert_eq!(product(1, "T(0,0)", "T(0,1)").vector, v(&["D(0,1)", "D(1,0)"]));
        assert_eq!(product(1, "T(0,0)", "T(1,0)").vector, v(&["N(1,0)"]));
        assert_eq!(product(1, "D(1,0)", "T(0,0)").vector, v(&["T(0,0)"]));
    }

    #[test]
    fn nondiag_twist_k2() {
        let p = product(2, "N(1,0)", "T(2,0)");
        assert_eq!(p.rule, Rule::NonDiagTwist);
        assert_eq!(p.vector, v(&["T(3,0)", "T(3,1)"]));
    }

    #[test]
    fn uncovered_cell() {
        // Differences 1 and 3 sum to 2k = 4.
        let r = fuse(k(2), l("N(1,0)"), l("N(3,0)"), RuleVariantConfig::default()).unwrap();
        assert!(matches!(r, FusionResult::Uncovered { .. }));
        assert!(matches!(
            structure_constant(
                k(2),
                l("N(3,0)"),
                l("N(1,0)"),
                l("D(0,0)"),
                RuleVariantConfig::default()
            ),
            Err(Error::Uncovered(..))
        ));
    }

    #[test]
    fn generic_variants_differ() {
        let x = l("N(1,0)");
        let y = l("N(3,1)");
        let corrected = fuse_vector(k(2), x, y, RuleVariantConfig::with_generic(GenericVariant::Corrected)).unwrap();
        let printed = fuse_vector(k(2), x, y, RuleVariantConfig::with_generic(GenericVariant::Printed)).unwrap();
        // (1+3, 0+1) = N(1,0); corrected (1+1, 0+3) = N(3,2); printed (1+1, 0-3) = (2,1) = N(2,1).
        assert_eq!(corrected, v(&["N(1,0)", "N(3,2)"]));
        assert_eq!(printed, v(&["N(1,0)", "N(2,1)"]));

        let (x, y) = (l("N(2,1)"), l("N(3,1)"));
        let corrected = fuse_vector(k(2), x, y, RuleVariantConfig::with_generic(GenericVariant::Corrected)).unwrap();
        let printed = fuse_vector(k(2), x, y, RuleVariantConfig::with_generic(GenericVariant::Printed)).unwrap();
        assert_eq!(corrected, v(&["N(2,1)", "N(3,0)"]));
        assert_eq!(printed, v(&["N(2,1)", "N(3,2)"]));
    }

    #[test]
    fn twist_twist_degenerate_k2() {
        let p = product(2, "T(0,0)", "T(0,0)");
        assert_eq!(p.rule, Rule::TwistTwistEven);
        assert_eq!(p.degenerate, vec![2]);
        let mut expected = v(&["D(0,0)", "D(2,0)", "D(2,1)"]);
        expected.add(l("D(2,0)"), 1);
        assert_eq!(p.vector, expected);
        let cfg = RuleVariantConfig {
            degenerate: DegeneratePolicy::Defer,
            ..Default::default()
        };
        let deferred = fuse(k(2), l("T(0,0)"), l("T(0,0)"), cfg).unwrap();
        assert_eq!(deferred.covered().unwrap().vector, v(&["D(0,0)", "D(2,0)"]));
        assert!(structure_constant(k(2), l("T(0,0)"), l("T(0,0)"), l("D(0,0)"), cfg).is_err());
    }

    #[test]
    fn structure_constants_k1() {
        let c = RuleVariantConfig::default();
        assert_eq!(
            structure_constant(k(1), l("N(1,0)"), l("N(1,0)"), l("D(0,0)"), c),
            Ok(1)
        );
        assert_eq!(
            structure_constant(k(1), l("D(1,0)"), l("T(0,0)"), l("T(0,0)"), c),
            Ok(1)
        );
        assert_eq!(
            structure_constant(k(1), l("D(1,0)"), l("T(0,0)"), l("T(1,0)"), c),
            Ok(0)
        );
        assert_eq!(
            structure_constant(k(1), l("D(0,0)"), l("N(1,0)"), l("N(1,0)"), c),
            Ok(1)
        );
    }

    #[test]
    fn duals() {
        let c = RuleVariantConfig::default();
        assert_eq!(dual(k(1), l("D(1,0)"), c), Ok(l("D(1,0)")));
        for n in 1..=4 {
            assert_eq!(dual(k(n), l("D(0,0)"), c), Ok(l("D(0,0)")));
        }
        // N(3,1) at k = 2: its square contains the unit twice.
        assert!(matches!(dual(k(2), l("N(3,1)"), c), Err(Error::NoDual { .. })));
    }

    #[test]
    fn global_dimension_small() {
        assert_eq!(global_dimension(k(1)), QDim::from_int(16, 2));
        assert_eq!(global_dimension(k(2)), QDim::from_int(64, 4));
        assert_eq!(global_dimension(k(3)), QDim::from_int(144, 6));
    }

    #[test]
    fn invalid_labels_rejected() {
        assert!(fuse(k(1), l("D(2,0)"), l("D(0,0)"), RuleVariantConfig::default()).is_err());
    }
}
