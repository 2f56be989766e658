//! Decomposition of orbifold simples into simples of the subalgebra
//! `V_{Zβ} ⊗ V_{Zβ}^+`, where `⟨β,β⟩ = 4k`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::label::{Label, RankParam};
use crate::QDim;

/// Simple modules of `V_{Zβ}^+`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PlusTag {
    /// `V_{Zβ}^+`
    Plus,
    /// `V_{Zβ}^-`
    Minus,
    /// `V_{Zβ + (s/4k)β}` for `1 ≤ s ≤ 2k−1`.
    Coset(u32),
    /// `V_{Zβ + β/2}^+`
    HalfPlus,
    /// `V_{Zβ + β/2}^-`
    HalfMinus,
    /// `(V_{Zβ}^{T_1})^+`
    T1Plus,
    T1Minus,
    T2Plus,
    T2Minus,
}

impl PlusTag {
    pub fn is_valid(self, k: RankParam) -> bool {
        match self {
            PlusTag::Coset(s) => (1..k.modulus()).contains(&s),
            _ => true,
        }
    }

    /// Quantum dimension over `V_{Zβ}^+`.
    pub fn qdim(self, k: RankParam) -> QDim {
        let d = k.modulus() as u64;
        match self {
            PlusTag::Plus | PlusTag::Minus | PlusTag::HalfPlus | PlusTag::HalfMinus => QDim::one(d),
            PlusTag::Coset(_) => QDim::from_int(2, d),
            PlusTag::T1Plus | PlusTag::T1Minus | PlusTag::T2Plus | PlusTag::T2Minus => QDim::root(d),
        }
    }
}

impl fmt::Display for PlusTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PlusTag::Plus => write!(f, "V+"),
            PlusTag::Minus => write!(f, "V-"),
            PlusTag::Coset(s) => write!(f, "V_{s}"),
            PlusTag::HalfPlus => write!(f, "Vhalf+"),
            PlusTag::HalfMinus => write!(f, "Vhalf-"),
            PlusTag::T1Plus => write!(f, "T1+"),
            PlusTag::T1Minus => write!(f, "T1-"),
            PlusTag::T2Plus => write!(f, "T2+"),
            PlusTag::T2Minus => write!(f, "T2-"),
        }
    }
}

/// `V_{Zβ + (lattice/4k)β} ⊗ plus`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SubalgebraLabel {
    pub lattice: u32,
    pub plus: PlusTag,
}

impl SubalgebraLabel {
    pub fn is_valid(self, k: RankParam) -> bool {
        self.lattice < k.lattice_modulus() && self.plus.is_valid(k)
    }
}

impl fmt::Display for SubalgebraLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(lattice {}, {})", self.lattice, self.plus)
    }
}

/// Lattice factors have quantum dimension 1, so this is the plus-factor value.
pub fn qdim_sub(k: RankParam, s: SubalgebraLabel) -> QDim {
    s.plus.qdim(k)
}

/// The two subalgebra summands of `x`, each with multiplicity one.
pub fn branch(k: RankParam, x: Label) -> Vec<(SubalgebraLabel, u32)> {
    let kk = k.get();
    let m4 = k.lattice_modulus();
    let at = |lattice: u32, plus: PlusTag| {
        (
            SubalgebraLabel {
                lattice: lattice % m4,
                plus,
            },
            1,
        )
    };
    match x {
        Label::NonDiag { i, j } => vec![
            at(i + j, PlusTag::Coset(i - j)),
            at(2 * kk + i + j, PlusTag::Coset(2 * kk - (i - j))),
        ],
        Label::Diag { i, eps } => {
            let (plus, half) = if eps == 0 {
                (PlusTag::Plus, PlusTag::HalfPlus)
            } else {
                (PlusTag::Minus, PlusTag::HalfMinus)
            };
            vec![at(2 * i, plus), at(2 * (i + kk), half)]
        }
        Label::Twist { i, eps } => {
            let (first, second) = match ((kk + i) % 2, eps) {
                (0, 0) => (PlusTag::T1Plus, PlusTag::T1Plus),
                (0, _) => (PlusTag::T1Minus, PlusTag::T1Minus),
                (_, 0) => (PlusTag::T2Plus, PlusTag::T2Minus),
                (_, _) => (PlusTag::T2Minus, PlusTag::T2Plus),
            };
            vec![at(i, first), at(2 * kk + i, second)]
        }
    }
}
