//! Exact equicorrelationality of integer and binary sequences.

pub mod class;
pub mod cli;
pub mod compose;
pub mod error;
pub mod literal;
pub mod poly;
pub mod search;
pub mod seq;

pub use class::{classify, EquicorrClassReport};
pub use error::{Error, Result};
pub use literal::{format_literal, parse_literal};
pub use poly::{factor, IrreducibleFactorization};
pub use search::{BinarySeq, NontrivialClass, SearchOptions, VolumeDistribution};
pub use seq::{equicorrelational, AutocorrFunction, IntLaurentSeq, PalindromeKind, SeqKind};
