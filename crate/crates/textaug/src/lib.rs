//! Deterministic text augmentation for classification corpora.
//!
//! Two augmenters over whitespace-tokenized sentences:
//!
//! * [`aeda`] — random punctuation insertion. Marks are inserted at random
//!   word positions, so every original word survives in order; only the
//!   positions shift.
//! * [`eda`] — the classic word-level family: synonym replacement, random
//!   insertion, random swap, random deletion.
//!
//! Around them sits a small experiment kit: TSV corpus handling
//! ([`corpus`]), a deterministic bag-of-words classifier ([`classifier`]),
//! and a seeded sweep harness ([`harness`]) that scores method x
//! training-size x augmentation-count x seed grids. Everything random runs
//! on explicit [`rng::RngStream`] values, so identical seeds give
//! byte-identical outputs on any platform and any thread count.
//!
//! ```
//! use textaug::aeda::{self, AedaParams};
//! use textaug::rng::RngStream;
//! use textaug::text::{detokenize, tokenize};
//!
//! let sentence = tokenize("the cat sat on the mat");
//! let mut rng = RngStream::new(42);
//! let augmented = aeda::augment(&sentence, &AedaParams::default(), &mut rng).unwrap();
//!
//! // the original words are still there, in order
//! assert!(sentence.is_subsequence_of(&augmented));
//! assert_eq!(detokenize(&augmented), "the . cat sat on ! the mat");
//! ```
//!
//! The `textaug` binary exposes the same operations as `augment`, `stats`,
//! `split`, `evaluate`, and `sweep` subcommands. The mdbook guide under
//! `book/` walks through the concepts; its code snippets compile and run
//! as doc-tests of this crate.

pub mod aeda;
pub mod classifier;
pub mod corpus;
pub mod eda;
pub mod error;
pub mod harness;
pub mod ratio;
pub mod rng;
pub mod text;

pub use error::{Error, Result};

// Every code block in the guide runs under `cargo test --doc`.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    pub struct Introduction;
    #[doc = include_str!("../../../book/src/tokens.md")]
    pub struct Tokens;
    #[doc = include_str!("../../../book/src/punctuation-insertion.md")]
    pub struct PunctuationInsertion;
    #[doc = include_str!("../../../book/src/word-ops.md")]
    pub struct WordOps;
    #[doc = include_str!("../../../book/src/corpora.md")]
    pub struct Corpora;
    #[doc = include_str!("../../../book/src/classifier.md")]
    pub struct Classifier;
    #[doc = include_str!("../../../book/src/experiments.md")]
    pub struct Experiments;
    #[doc = include_str!("../../../book/src/reproducibility.md")]
    pub struct Reproducibility;
    #[doc = include_str!("../../../book/src/cli.md")]
    pub struct Cli;
}
