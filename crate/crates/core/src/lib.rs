pub mod error;
pub mod forms;
pub mod linalg;
pub mod projgeom;
pub mod curve;
pub mod sphere;
pub mod writhe;
pub mod cli;

pub use error::{Error, ErrorClass, Result};
