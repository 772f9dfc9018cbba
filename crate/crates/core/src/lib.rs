pub mod api;
pub mod cli;
pub mod compalg;
pub mod error;
pub mod exactfield;
pub mod freudenthal;
pub mod linalg;
pub mod orbits;
pub mod quadforms;
pub mod symplectic;
pub mod quartic;
pub mod wedgerep;

pub use error::{Error, Result};
