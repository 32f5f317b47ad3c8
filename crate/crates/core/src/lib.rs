//! C1 paraconsistent logic (parser, Hilbert proof checker, bivaluation
//! decision procedure), a three-valued LP layer, an exact two-qubit CHSH
//! harness, and a bridge reading CHSH outcomes as C1 theories.

pub mod bridge;
pub mod formula;
pub mod fuzz;
pub mod lp;
pub mod parse;
pub mod proofs;
pub mod quantum;
pub mod scalar;
pub mod semantics;

pub use formula::{Binding, Formula, IffMode};
pub use parse::{parse, ParseError};
pub use scalar::Real;
pub use semantics::{Status, Valuation, Verdict, C1};

pub type TwoQubitState64 = quantum::TwoQubitState<f64>;
pub type TwoQubitState32 = quantum::TwoQubitState<f32>;
pub type ChshAngles64 = quantum::ChshAngles<f64>;
pub type ChshAngles32 = quantum::ChshAngles<f32>;
pub type ChshResult64 = quantum::ChshResult<f64>;
pub type ChshResult32 = quantum::ChshResult<f32>;
pub type SurfacePoint64 = quantum::SurfacePoint<f64>;
pub type TruthDegree64 = lp::TruthDegree<f64>;
pub type TruthDegree32 = lp::TruthDegree<f32>;
