//! Rank parameter and labels of the irreducible orbifold modules.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, LabelParseError};

/// The integer `k` with `⟨α,α⟩ = 2k` for the rank-one lattice `Zα`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct RankParam(u32);

impl RankParam {
    pub fn new(k: u32) -> Result<Self, Error> {
        if k == 0 {
            return Err(Error::InvalidRank(k));
        }
        Ok(RankParam(k))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// `2k`: the number of cosets of `Zα` in its dual lattice.
    pub fn modulus(self) -> u32 {
        2 * self.0
    }

    /// `4k`: the number of cosets of `Zβ` in its dual lattice, `⟨β,β⟩ = 4k`.
    pub fn lattice_modulus(self) -> u32 {
        4 * self.0
    }

    /// Reduces an arbitrary integer into `[0, 2k)`.
    pub fn reduce(self, n: i64) -> u32 {
        n.rem_euclid(self.modulus() as i64) as u32
    }

    /// Number of simples, `2k² + 7k`.
    pub fn simple_count(self) -> usize {
        let k = self.0 as usize;
        2 * k * k + 7 * k
    }

    pub fn non_diag_count(self) -> usize {
        let k = self.0 as usize;
        2 * k * k - k
    }
}

impl TryFrom<u32> for RankParam {
    type Error = Error;

    fn try_from(k: u32) -> Result<Self, Error> {
        RankParam::new(k)
    }
}

impl From<RankParam> for u32 {
    fn from(k: RankParam) -> u32 {
        k.0
    }
}

impl fmt::Display for RankParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// An irreducible module of the orbifold.
///
/// * `NonDiag { i, j }` is the untwisted module built from the unordered pair
///   of lattice cosets `{i, j}`, stored with `i > j`.
/// * `Diag { i, eps }` is one of the two halves of the diagonal coset `(i, i)`.
/// * `Twist { i, eps }` is one of the two halves of a swap-twisted module.
///
/// The derived order is the enumeration order: all `NonDiag` lexicographically,
/// then `Diag`, then `Twist`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    NonDiag { i: u32, j: u32 },
    Diag { i: u32, eps: u32 },
    Twist { i: u32, eps: u32 },
}

/// The three families of simples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LabelClass {
    NonDiag,
    Diag,
    Twist,
}

impl Label {
    /// Canonical non-diagonal label from two distinct residues, in either order.
    pub fn non_diag(k: RankParam, a: i64, b: i64) -> Result<Self, Error> {
        let (a, b) = (k.reduce(a), k.reduce(b));
        match a.cmp(&b) {
            std::cmp::Ordering::Greater => Ok(Label::NonDiag { i: a, j: b }),
            std::cmp::Ordering::Less => Ok(Label::NonDiag { i: b, j: a }),
            std::cmp::Ordering::Equal => Err(Error::DegeneratePair(a)),
        }
    }

    pub fn diag(k: RankParam, i: i64, eps: i64) -> Self {
        Label::Diag {
            i: k.reduce(i),
            eps: eps.rem_euclid(2) as u32,
        }
    }

    pub fn twist(k: RankParam, i: i64, eps: i64) -> Self {
        Label::Twist {
            i: k.reduce(i),
            eps: eps.rem_euclid(2) as u32,
        }
    }

    pub fn class(self) -> LabelClass {
        match self {
            Label::NonDiag { .. } => LabelClass::NonDiag,
            Label::Diag { .. } => LabelClass::Diag,
            Label::Twist { .. } => LabelClass::Twist,
        }
    }

    pub fn is_valid(self, k: RankParam) -> bool {
        let m = k.modulus();
        match self {
            Label::NonDiag { i, j } => i < m && j < i,
            Label::Diag { i, eps } | Label::Twist { i, eps } => i < m && eps < 2,
        }
    }

    pub fn validate(self, k: RankParam) -> Result<Self, Error> {
        if self.is_valid(k) {
            Ok(self)
        } else {
            Err(Error::InvalidLabel {
                label: self,
                k: k.get(),
            })
        }
    }

    /// Position of the label in [`enumerate_simples`]. The label must be valid for `k`.
    pub fn index(self, k: RankParam) -> usize {
        let nd = k.non_diag_count();
        let m = k.modulus() as usize;
        match self {
            Label::NonDiag { i, j } => {
                let (i, j) = (i as usize, j as usize);
                i * (i - 1) / 2 + j
            }
            Label::Diag { i, eps } => nd + 2 * i as usize + eps as usize,
            Label::Twist { i, eps } => nd + 2 * m + 2 * i as usize + eps as usize,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Label::NonDiag { i, j } => write!(f, "N({i},{j})"),
            Label::Diag { i, eps } => write!(f, "D({i},{eps})"),
            Label::Twist { i, eps } => write!(f, "T({i},{eps})"),
        }
    }
}

/// Parses `N(i,j)`, `D(i,e)`, `T(i,e)` and the aliases `(i j)`, `~(i e)`,
/// `^(i e)`. Whitespace is ignored. Indices are not reduced; use
/// [`Label::validate`] against a rank.
impl FromStr for Label {
    type Err = LabelParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || LabelParseError(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (kind, rest) = match compact.chars().next() {
            Some(c @ ('N' | 'D' | 'T' | 'n' | 'd' | 't' | '~' | '^')) => {
                (c.to_ascii_uppercase(), &compact[c.len_utf8()..])
            }
            Some('(') => ('N', compact.as_str()),
            _ => return Err(err()),
        };
        let inner = rest
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(err)?;
        // Canonical form separates with a comma; the aliases use whitespace,
        // which has already been squeezed out, so "(3 1)" arrives as "31".
        // Re-split the original text in that case.
        let parts: Vec<u32> = if inner.contains(',') {
            inner
                .split(',')
                .map(|p| p.parse().map_err(|_| err()))
                .collect::<Result<_, _>>()?
        } else {
            let open = s.find('(').ok_or_else(err)?;
            let close = s.rfind(')').ok_or_else(err)?;
            s[open + 1..close]
                .split_whitespace()
                .map(|p| p.parse().map_err(|_| err()))
                .collect::<Result<_, _>>()?
        };
        let [a, b] = parts[..] else {
            return Err(err());
        };
        Ok(match kind {
            'N' => {
                if a == b {
                    return Err(err());
                }
                Label::NonDiag {
                    i: a.max(b),
                    j: a.min(b),
                }
            }
            'D' | '~' => Label::Diag { i: a, eps: b },
            _ => Label::Twist { i: a, eps: b },
        })
    }
}

impl Serialize for Label {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// All simples for `k`: `NonDiag` by `(i, j)`, then `Diag` by `(i, ε)`, then
/// `Twist` by `(i, ε)`. The list has `2k² + 7k` entries.
pub fn enumerate_simples(k: RankParam) -> Vec<Label> {
    let m = k.modulus();
    let mut out = Vec::with_capacity(k.simple_count());
    for i in 0..m {
        for j in 0..i {
            out.push(Label::NonDiag { i, j });
        }
    }
    for i in 0..m {
        for eps in 0..2 {
            out.push(Label::Diag { i, eps });
        }
    }
    for i in 0..m {
        for eps in 0..2 {
            out.push(Label::Twist { i, eps });
        }
    }
    out
}
