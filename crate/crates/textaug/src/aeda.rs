//! Random punctuation insertion (the `aeda` method).
//!
//! A sentence of `L` tokens gains `n` punctuation marks, where `n` is drawn
//! uniformly from `{1, ..., max(1, floor(ratio * L))}` (default ratio 1/3,
//! so at least one mark is always inserted). The `n` insertion slots are
//! distinct token positions sampled without replacement; each chosen slot
//! receives one mark, drawn uniformly and independently from the alphabet,
//! placed immediately before the token at that position. The original
//! token sequence therefore survives, in order, inside every augmentation —
//! the words only shift right.
//!
//! Draw order is frozen (count, then slots via partial Fisher-Yates sorted
//! ascending, then one mark per slot in slot order) and pinned by the
//! golden files under `tests/golden/`.

use rayon::prelude::*;

use crate::corpus::{Corpus, LabeledExample};
use crate::error::{Error, Result};
use crate::ratio::Ratio;
use crate::rng::RngStream;
use crate::text::{detokenize, tokenize, TokenSeq};

/// The six default marks.
pub const DEFAULT_PUNCTUATION: [&str; 6] = [".", ";", "?", ":", "!", ","];

/// Parameters for punctuation insertion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AedaParams {
    /// Upper bound on insertions as a fraction of sentence length, in (0, 1].
    pub ratio: Ratio,
    /// Candidate marks; distinct single tokens.
    pub punctuation: Vec<String>,
}

impl Default for AedaParams {
    fn default() -> Self {
        AedaParams {
            ratio: Ratio::ONE_THIRD,
            punctuation: DEFAULT_PUNCTUATION.iter().map(|s| s.to_string()).collect(),
        }
    }
}

impl AedaParams {
    pub fn validate(&self) -> Result<()> {
        if !self.ratio.in_unit_interval_right_closed() {
            return Err(Error::InvalidConfig(format!(
                "insertion ratio must be in (0, 1], got {}",
                self.ratio
            )));
        }
        if self.punctuation.is_empty() {
            return Err(Error::InvalidConfig("empty punctuation alphabet".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for mark in &self.punctuation {
            if mark.is_empty() || mark.chars().any(char::is_whitespace) {
                return Err(Error::InvalidConfig(format!(
                    "punctuation mark {mark:?} is not a single whitespace-free token"
                )));
            }
            if !seen.insert(mark.as_str()) {
                return Err(Error::InvalidConfig(format!(
                    "duplicate punctuation mark {mark:?}"
                )));
            }
        }
        Ok(())
    }
}

/// Uniform draw from `{1, ..., max(1, floor(ratio * len))}`.
///
/// For `len < 1/ratio` the interval collapses to `{1}`; a draw is still
/// consumed so the stream position stays aligned with the reference
/// sampler.
pub fn draw_insertion_count(len: usize, ratio: Ratio, rng: &mut RngStream) -> Result<usize> {
    if len == 0 {
        return Err(Error::InvalidInput(
            "insertion count is undefined for an empty sequence".into(),
        ));
    }
    let hi = ratio.floor_mul(len as u64).max(1);
    Ok(1 + rng.next_below(hi) as usize)
}

/// One augmentation of `s` together with the `(slot, mark)` insertions
/// that produced it, in ascending slot order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentTrace {
    pub output: TokenSeq,
    pub insertions: Vec<(usize, String)>,
}

/// Like [`augment`], but also reports where each mark went. Slot `i` means
/// the mark sits immediately before the original token at index `i`.
pub fn augment_traced(
    s: &TokenSeq,
    params: &AedaParams,
    rng: &mut RngStream,
) -> Result<AugmentTrace> {
    if s.is_empty() {
        return Err(Error::InvalidInput(
            "cannot augment an empty sequence".into(),
        ));
    }
    params.validate()?;
    let len = s.len();
    let n = draw_insertion_count(len, params.ratio, rng)?;
    let slots = rng.sample_indices(len, n);
    let marks: Vec<&String> = slots
        .iter()
        .map(|_| &params.punctuation[rng.next_below(params.punctuation.len() as u64) as usize])
        .collect();

    let mut out = Vec::with_capacity(len + n);
    let mut next = 0usize;
    for (i, tok) in s.iter().enumerate() {
        if next < slots.len() && slots[next] == i {
            out.push(marks[next].clone());
            next += 1;
        }
        out.push(tok.clone());
    }
    Ok(AugmentTrace {
        output: TokenSeq::from_valid(out),
        insertions: slots
            .into_iter()
            .zip(marks.into_iter().cloned())
            .collect(),
    })
}

/// Inserts 1 to `max(1, floor(ratio * len))` random marks at distinct
/// random positions of a non-empty sequence.
pub fn augment(s: &TokenSeq, params: &AedaParams, rng: &mut RngStream) -> Result<TokenSeq> {
    Ok(augment_traced(s, params, rng)?.output)
}

/// Expands a corpus: every example is followed by `num_aug` augmented
/// copies with the same label. Copy `j` of example `i` draws from the
/// stream derived from `(master_seed, i, j)`, so the result is identical
/// whatever the thread count or schedule. `num_aug == 0` returns the
/// originals unchanged.
pub fn batch(
    corpus: &Corpus,
    num_aug: usize,
    params: &AedaParams,
    master_seed: u64,
) -> Result<Corpus> {
    if corpus.is_empty() {
        return Err(Error::InvalidInput("cannot augment an empty corpus".into()));
    }
    params.validate()?;
    let blocks: Vec<Vec<LabeledExample>> = corpus
        .examples
        .par_iter()
        .enumerate()
        .map(|(i, ex)| -> Result<Vec<LabeledExample>> {
            let tokens = tokenize(&ex.text);
            if num_aug > 0 && tokens.is_empty() {
                return Err(Error::InvalidInput(format!(
                    "example {}: cannot augment empty text",
                    i + 1
                )));
            }
            let mut block = Vec::with_capacity(1 + num_aug);
            block.push(ex.clone());
            for j in 0..num_aug {
                let mut rng = RngStream::derived(master_seed, &[i as u64, j as u64]);
                let augmented = augment(&tokens, params, &mut rng)?;
                block.push(LabeledExample {
                    label: ex.label.clone(),
                    text: detokenize(&augmented),
                });
            }
            Ok(block)
        })
        .collect::<Result<_>>()?;
    Ok(Corpus::new(blocks.into_iter().flatten().collect()))
}
