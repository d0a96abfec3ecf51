//! Whitespace tokenization shared by the augmenters and the classifier.
//!
//! Sentences are ordered sequences of whitespace-free tokens. No punctuation
//! splitting, lowercasing, or normalization happens here: the corpora this
//! toolkit targets already space-separate punctuation, and byte-exact tokens
//! keep every operation deterministic across platforms.

use crate::error::{Error, Result};

/// An ordered sequence of non-empty tokens, none containing whitespace.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct TokenSeq {
    tokens: Vec<String>,
}

impl TokenSeq {
    /// Builds a sequence from pre-split tokens, checking the invariants.
    pub fn new(tokens: Vec<String>) -> Result<TokenSeq> {
        for t in &tokens {
            if t.is_empty() {
                return Err(Error::InvalidInput("empty token".into()));
            }
            if t.chars().any(char::is_whitespace) {
                return Err(Error::InvalidInput(format!(
                    "token {t:?} contains whitespace"
                )));
            }
        }
        Ok(TokenSeq { tokens })
    }

    /// Internal constructor for tokens known to satisfy the invariants.
    pub(crate) fn from_valid(tokens: Vec<String>) -> TokenSeq {
        debug_assert!(tokens
            .iter()
            .all(|t| !t.is_empty() && !t.chars().any(char::is_whitespace)));
        TokenSeq { tokens }
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn iter(&self) -> std::slice::Iter<'_, String> {
        self.tokens.iter()
    }

    pub fn into_tokens(self) -> Vec<String> {
        self.tokens
    }

    /// True if `self` appears inside `other` in order (not necessarily
    /// contiguously).
    pub fn is_subsequence_of(&self, other: &TokenSeq) -> bool {
        let mut mine = self.tokens.iter();
        let mut next = mine.next();
        for tok in &other.tokens {
            match next {
                Some(t) if t == tok => next = mine.next(),
                Some(_) => {}
                None => return true,
            }
        }
        next.is_none()
    }
}

impl std::ops::Index<usize> for TokenSeq {
    type Output = String;

    fn index(&self, i: usize) -> &String {
        &self.tokens[i]
    }
}

/// Splits on maximal whitespace runs; empty fields are dropped, so any mix
/// of spaces collapses. Empty input yields an empty sequence.
pub fn tokenize(text: &str) -> TokenSeq {
    TokenSeq {
        tokens: text.split_whitespace().map(str::to_string).collect(),
    }
}

/// Joins tokens with single spaces. Inverse of [`tokenize`] on any text
/// that is already single-space separated with no surrounding whitespace.
pub fn detokenize(seq: &TokenSeq) -> String {
    seq.tokens.join(" ")
}
