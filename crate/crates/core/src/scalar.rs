use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};
use std::fmt::{Debug, Display, LowerExp};

/// Real scalar used by the closed-form predictions, the power-law tables,
/// the one-fifth controller and the statistics.
///
/// Implemented for `f32` and `f64`. The stochastic engines convert to `f64`
/// at the point where a probability is handed to the generator.
pub trait Real:
    'static
    + Copy
    + Send
    + Sync
    + Float
    + FloatConst
    + NumAssign
    + FromPrimitive
    + ToPrimitive
    + Default
    + Debug
    + Display
    + LowerExp
{
    /// Lossy conversion from any primitive; panics only on non-representable input,
    /// which cannot happen for the integer/float ranges used here.
    #[inline]
    fn of<P: ToPrimitive>(value: P) -> Self {
        Self::from(value).expect("primitive not representable in Real")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f32 {}
impl Real for f64 {}
