//! Exact computations with braided binary quadratic nonsymmetric operads.
//!
//! * [`linalg`]: rational matrices, row reduction, tiny polynomial systems.
//! * [`braid`]: permutations, positive braid lifts, Yang–Baxter checks.
//! * [`operad`]: presentations, quotient components, composition, `⋆_n`.
//! * [`coherence`]: unit actions, C1–C5, the subspaces `Λ′` and `Λ″`.
//! * [`hopf`]: the truncated free algebra `A⁺` and its braided Hopf axioms.

pub mod braid;
pub mod coherence;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod operad;
pub mod presets;
