//! Frames of translates on the p-adic line.
//!
//! This crate computes with the locally compact group G = Q_p and its compact
//! open subgroup H = Z_p: exact arithmetic in Z[1/p], complex step functions,
//! the Fourier transform as an exact DFT, translation operators indexed by
//! the discrete quotient G/H, and the spectral symbol whose range determines
//! when the translates of a single function form a frame.  A brute-force
//! oracle layer (Gram matrices, direct frame sums) cross-checks every
//! spectral quantity along an independent route.
//!
//! Start with the runnable examples:
//!
//! ```text
//! cargo run --example padic_arithmetic      exact Z[1/p] values and characters
//! cargo run --example step_functions        resolution, inner products, periodization
//! cargo run --example fourier_pairs         transforms, Plancherel, fast vs naive
//! cargo run --example translations          translation operators and the group law
//! cargo run --example spectral_symbols      the symbol, frame bounds, zero sets
//! cargo run --example gram_oracle           Gram spectra vs symbol values
//! cargo run --example frame_catalog         the four named generator families
//! cargo run --example offset_sections       how the section choice enters
//! ```
//!
//! The `padic-frames` binary exposes the same computations as subcommands
//! (`example`, `phi`, `verify`) with JSON/CSV output for scripting.

pub mod catalog;
pub mod cli;
pub mod config;
pub mod error;
pub mod fourier;
pub mod group;
pub mod jacobi;
pub mod oracle;
pub mod padic;
pub mod pruefer;
pub mod sampling;
pub mod section;
pub mod spectral;
pub mod stepfn;
pub mod suites;
pub mod translates;

pub use error::{Error, Result};
pub use group::GroupContext;
pub use padic::{character, PAdicRational};
pub use pruefer::{pruefer_add, pruefer_sub, PrueferElement};
pub use section::Section;
pub use stepfn::StepFunction;
