pub mod cohomology;
pub mod error;
pub mod exact;
pub mod formulas;
pub mod pointconfig;
pub mod rng;
pub mod secants;
pub mod tables;
pub mod varieties;

pub use error::{Error, Result};
pub use exact::{binom, Field, MPoly, Matrix, Scalar};
pub use pointconfig::PointConfig;
pub use varieties::{Construction, Descriptor, ParamVariety};
