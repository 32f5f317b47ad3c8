use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst};

/// Floating-point scalar used by the quantum and truth-degree code.
pub trait Real: Float + FloatConst + Debug + Display + Default + Send + Sync + 'static {
    /// Absolute tolerance for normalization checks and zero-weight tests.
    fn tolerance() -> Self;

    fn lit(x: f64) -> Self {
        Self::from(x).expect("literal fits the scalar type")
    }
}

impl Real for f64 {
    fn tolerance() -> Self {
        1e-12
    }
}

impl Real for f32 {
    fn tolerance() -> Self {
        1e-5
    }
}
