//! BiD codes: binary abelian codes of length `3^m` whose GF(4) spectrum is
//! supported on trit indices with weight in a contiguous range `r1..=r2`.

pub mod codes;
pub mod decode;
pub mod distance;
pub mod error;
pub mod field;
pub mod gf2;
pub mod sim;
pub mod transform;
pub mod verify;

pub use codes::{CodeSpec, GeneratorMatrix, Kernel, WeightSet};
pub use decode::{DecodeOutput, DecoderConfig, DecoderKind};
pub use distance::DistanceInterval;
pub use error::{Error, Result};
pub use field::{TritTuple, F4};
pub use gf2::{BitMatrix, BitVec};
pub use sim::{Channel, TrialLedger};
pub use transform::{Encoder, EncoderConfig, FrozenSpec, PreTransform};
