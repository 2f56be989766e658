//! Exact fusion ring of the 2-cycle permutation orbifold `(V_L ⊗ V_L)^{Z_2}`
//! of a rank-one lattice vertex operator algebra `V_L`, `L = Zα`, `⟨α,α⟩ = 2k`.
//!
//! * [`label`]: the `2k² + 7k` simples.
//! * [`fusion`]: quantum dimensions and the closed-form fusion rules.
//! * [`branching`]: restriction to the subalgebra `V_{Zβ} ⊗ V_{Zβ}^+`.
//! * [`ring`]: generic structure-constant tables and axiom checks.
//! * [`completion`]: fills cells no rule covers and verifies the full table.
//! * [`export`]: the JSON table export.
//!
//! Arithmetic on quantum dimensions is exact; see [`surd::Surd`].

pub mod branching;
pub mod completion;
pub mod currents;
pub mod error;
pub mod export;
pub mod fusion;
pub mod label;
pub mod ring;
pub mod surd;

use num_rational::Rational64;

pub use error::{Error, LabelParseError};
pub use fusion::{FusionResult, FusionVector, GenericVariant, RuleVariantConfig};
pub use label::{enumerate_simples, Label, RankParam};

/// Exact quantum dimension `a + b·√(2k)` with rational coefficients.
pub type QDim = surd::Surd<Rational64>;

/// Floating-point counterpart of [`QDim`], for display only.
pub type QDimApprox = surd::Surd<f64>;

/// Version string written into exports.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
