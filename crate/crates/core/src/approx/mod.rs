//! Coreset approximation for convex containers.

mod fptas;
mod kernel;

pub use fptas::{alpha_constants, fptas_ab, fptas_alpha, orientation_schedule, schedule_step, AlphaConstants};
pub use kernel::{eps_kernel, EpsKernel};
