//! Simple currents: the simples of quantum dimension one.

use num_rational::Rational64;

use crate::error::Error;
use crate::fusion::{fuse_vector, qdim, RuleVariantConfig};
use crate::label::{enumerate_simples, Label, LabelClass, RankParam};
use crate::ring::{Axiom, AxiomResult, FusionRing};

/// The simple currents with their multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleCurrentGroup {
    pub k: RankParam,
    /// In label order; `elements[0]` is the unit `D(0,0)`.
    pub elements: Vec<Label>,
    /// `table[a][b]` is the index in `elements` of `elements[a] ⊠ elements[b]`.
    pub table: Vec<Vec<usize>>,
}

impl SimpleCurrentGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> Label {
        self.elements[0]
    }
}

/// Image of `(i, ε)` in `Z_{2k} × Z_2` under the expected isomorphism.
fn expected_product(k: RankParam, a: Label, b: Label) -> Option<Label> {
    match (a, b) {
        (Label::Diag { i, eps }, Label::Diag { i: j, eps: e }) => {
            Some(Label::diag(k, i as i64 + j as i64, (eps + e) as i64))
        }
        _ => None,
    }
}

/// Collects `{x : qdim(x) = 1}` and checks it is exactly the `Diag` family,
/// that each current fuses with every simple to a single simple, and that the
/// currents form `Z_{2k} × Z_2` under `(i,ε)·(j,ε₁) = (i+j, ε+ε₁)`.
pub fn simple_currents(k: RankParam, cfg: RuleVariantConfig) -> Result<SimpleCurrentGroup, Error> {
    let simples = enumerate_simples(k);
    let elements: Vec<Label> = simples.iter().copied().filter(|&x| qdim(k, x).is_one()).collect();
    if let Some(x) = elements.iter().find(|x| x.class() != LabelClass::Diag) {
        return Err(Error::SimpleCurrents(format!(
            "{x} has quantum dimension 1 but is not diagonal"
        )));
    }
    if elements.len() != 2 * k.modulus() as usize {
        return Err(Error::SimpleCurrents(format!(
            "{} simple currents, expected {}",
            elements.len(),
            2 * k.modulus()
        )));
    }
    let position = |x: Label| elements.iter().position(|&e| e == x);
    let mut table = vec![vec![0; elements.len()]; elements.len()];
    for (a, &s) in elements.iter().enumerate() {
        for &y in &simples {
            let v = fuse_vector(k, s, y, cfg)?;
            let single = match v.iter().collect::<Vec<_>>()[..] {
                [(z, 1)] => z,
                _ => return Err(Error::SimpleCurrents(format!("{s} ⊠ {y} = {v} is not simple"))),
            };
            if let Some(b) = position(y) {
                let expected = expected_product(k, s, y).expect("both are diagonal");
                if single != expected {
                    return Err(Error::SimpleCurrents(format!(
                        "{s} ⊠ {y} = {single}, expected {expected} in Z_{} × Z_2",
                        k.modulus()
                    )));
                }
                table[a][b] = position(single).expect("expected product is a current");
            }
        }
    }
    Ok(SimpleCurrentGroup { k, elements, table })
}

/// Checks on a table that the quantum-dimension-one simples are exactly the
/// `4k` diagonal labels and multiply as `Z_{2k} × Z_2`.
pub fn simple_current_group_axiom(k: RankParam, ring: &FusionRing<Rational64>) -> AxiomResult {
    let mut r = AxiomResult::new(Axiom::SimpleCurrentGroup);
    let simples = enumerate_simples(k);
    for (x, label) in simples.iter().enumerate() {
        let is_current = ring.qdim(x).is_one();
        if is_current == (label.class() == LabelClass::Diag) {
            r.ok();
        } else {
            r.fail(
                vec![label.to_string()],
                format!("qdim = {} for a {:?} label", ring.qdim(x), label.class()),
            );
        }
    }
    let diags: Vec<usize> = (0..simples.len())
        .filter(|&x| simples[x].class() == LabelClass::Diag)
        .collect();
    for &a in &diags {
        for &b in &diags {
            let expected = expected_product(k, simples[a], simples[b]).expect("diagonal").index(k);
            match ring.product(a, b) {
                None => r.skip(),
                Some(row) if row == [(expected, 1)] => r.ok(),
                Some(row) => {
                    let got: Vec<String> = row.iter().map(|&(c, m)| format!("{m}·{}", simples[c])).collect();
                    r.fail(
                        vec![simples[a].to_string(), simples[b].to_string()],
                        format!("product is {}, expected {}", got.join(" + "), simples[expected]),
                    );
                }
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn groups_for_small_k() {
        for n in 1..=6 {
            let k = RankParam::new(n).unwrap();
            let g = simple_currents(k, RuleVariantConfig::default()).unwrap();
            assert_eq!(g.order(), 4 * n as usize);
            assert_eq!(g.identity(), Label::Diag { i: 0, eps: 0 });
            // Identity row and inverses.
            assert!(g.table[0].iter().enumerate().all(|(b, &c)| b == c));
            for a in 0..g.order() {
                assert_eq!(g.table[a].iter().filter(|&&c| c == 0).count(), 1);
            }
        }
    }

    #[test]
    fn k1_is_klein_four() {
        let g = simple_currents(RankParam::new(1).unwrap(), RuleVariantConfig::default()).unwrap();
        // Every element squares to the identity.
        assert!((0..4).all(|a| g.table[a][a] == 0));
    }
}
