//! Exact generation, reduction and checking of spectral inequalities for the
//! univariant quantum marginal problem on small multipartite systems.

pub mod chamber;
pub mod error;
pub mod inequality;
pub mod io;
pub mod lp;
pub mod polytope;
pub mod quantum;
pub mod schubert;
pub mod spectra;
pub mod symmetric;

pub use error::{Error, Result};
