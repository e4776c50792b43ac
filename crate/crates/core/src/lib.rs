pub mod carruth;
pub mod cli;
pub mod error;
pub mod infinite;
pub mod natural;
pub mod ordinal;
pub mod parse;
pub mod random;
pub mod rearrange;
pub mod selftest;
pub mod sequence;

pub use error::{Error, Result};
pub use ordinal::{Natural, Ordinal, Term};
pub use sequence::{OmegaSequence, SeqClass};
