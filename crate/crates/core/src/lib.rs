//! Deletion distance from binary words to palindromes and antipalindromes.
//!
//! - [`word`]: packed words, symmetry predicates, reversal/complement orbits.
//! - [`subseq`]: `S_d(w)` by interval DP, deletion witnesses, brute-force oracle.
//! - [`extremal`]: exhaustive `S_d(n)` with orbit pruning.
//! - [`bounds`]: the extremal construction family and closed-form bounds.
//! - [`game`]: exact minimax for the alternating deletion game.
//! - [`verify`]: named verification suites.
//! - [`cli`]: the `palsym` command line.

pub mod bounds;
pub mod cli;
pub mod error;
pub mod extremal;
pub mod game;
pub mod subseq;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use subseq::{sd, sd_witness, DeletionWitness, SdValue, TargetKind};
pub use word::{parse_word, Letter, SymmetryClass, Word};
