//! Multinomial bag-of-words classifier with additive smoothing.
//!
//! Deliberately boring: no randomness anywhere, so experiment variance
//! comes only from the data operations, and ties break toward the
//! lexicographically smallest label so scores are stable run to run.

use std::collections::HashMap;

use crate::corpus::Corpus;
use crate::error::{Error, Result};
use crate::text::tokenize;

/// A fitted model: class log-priors plus per-class token log-likelihoods.
#[derive(Debug, Clone)]
pub struct BowModel {
    labels: Vec<String>,
    log_priors: Vec<f64>,
    vocab: HashMap<String, usize>,
    /// `log_likelihood[class][vocab_index]`
    log_likelihood: Vec<Vec<f64>>,
    /// Log-mass assigned to any token outside the vocabulary, per class.
    log_unseen: Vec<f64>,
    smoothing: f64,
}

impl BowModel {
    /// Fits add-`smoothing` multinomial estimates over whitespace tokens.
    /// Needs a non-empty corpus with at least two classes.
    pub fn fit(train: &Corpus, smoothing: f64) -> Result<BowModel> {
        if smoothing <= 0.0 || !smoothing.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "smoothing must be positive and finite, got {smoothing}"
            )));
        }
        if train.is_empty() {
            return Err(Error::InvalidInput("cannot fit on an empty corpus".into()));
        }
        let mut labels: Vec<String> = train.iter().map(|ex| ex.label.clone()).collect();
        labels.sort();
        labels.dedup();
        if labels.len() < 2 {
            return Err(Error::InvalidInput(format!(
                "training corpus has a single class ({:?})",
                labels[0]
            )));
        }
        let class_of: HashMap<&str, usize> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), i))
            .collect();

        let mut vocab: HashMap<String, usize> = HashMap::new();
        let mut doc_counts = vec![0u64; labels.len()];
        let mut token_totals = vec![0u64; labels.len()];
        // token counts per (class, vocab index); grown as the vocab grows
        let mut counts: Vec<Vec<u64>> = vec![Vec::new(); labels.len()];
        for ex in train.iter() {
            let class = class_of[ex.label.as_str()];
            doc_counts[class] += 1;
            for tok in tokenize(&ex.text).into_tokens() {
                let next_index = vocab.len();
                let index = *vocab.entry(tok).or_insert(next_index);
                for per_class in counts.iter_mut() {
                    if per_class.len() <= index {
                        per_class.resize(index + 1, 0);
                    }
                }
                counts[class][index] += 1;
                token_totals[class] += 1;
            }
        }
        let vocab_len = vocab.len();
        for per_class in counts.iter_mut() {
            per_class.resize(vocab_len, 0);
        }

        let n_docs = train.len() as f64;
        let log_priors = doc_counts
            .iter()
            .map(|&d| (d as f64 / n_docs).ln())
            .collect();
        let mut log_likelihood = Vec::with_capacity(labels.len());
        let mut log_unseen = Vec::with_capacity(labels.len());
        for (class, per_class) in counts.iter().enumerate() {
            let denom = token_totals[class] as f64 + smoothing * vocab_len as f64;
            log_likelihood.push(
                per_class
                    .iter()
                    .map(|&c| ((c as f64 + smoothing) / denom).ln())
                    .collect(),
            );
            log_unseen.push((smoothing / denom).ln());
        }
        Ok(BowModel {
            labels,
            log_priors,
            vocab,
            log_likelihood,
            log_unseen,
            smoothing,
        })
    }

    /// Class labels in sorted order.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vocab_size(&self) -> usize {
        self.vocab.len()
    }

    pub fn smoothing(&self) -> f64 {
        self.smoothing
    }

    /// `P(label)` as fitted.
    pub fn prior(&self, label: &str) -> Option<f64> {
        let class = self.labels.iter().position(|l| l == label)?;
        Some(self.log_priors[class].exp())
    }

    /// `P(token | label)`; tokens outside the vocabulary get the smoothed
    /// unseen mass.
    pub fn token_prob(&self, label: &str, token: &str) -> Option<f64> {
        let class = self.labels.iter().position(|l| l == label)?;
        Some(match self.vocab.get(token) {
            Some(&index) => self.log_likelihood[class][index].exp(),
            None => self.log_unseen[class].exp(),
        })
    }

    /// Unnormalized log-posterior of every class for `text`, in label order.
    pub fn log_scores(&self, text: &str) -> Vec<f64> {
        let tokens = tokenize(text);
        self.labels
            .iter()
            .enumerate()
            .map(|(class, _)| {
                let mut score = self.log_priors[class];
                for tok in tokens.iter() {
                    score += match self.vocab.get(tok.as_str()) {
                        Some(&index) => self.log_likelihood[class][index],
                        None => self.log_unseen[class],
                    };
                }
                score
            })
            .collect()
    }

    /// Most probable label; ties go to the lexicographically smallest.
    pub fn predict(&self, text: &str) -> &str {
        let scores = self.log_scores(text);
        let mut best = 0usize;
        for (class, &score) in scores.iter().enumerate().skip(1) {
            if score > scores[best] {
                best = class;
            }
        }
        &self.labels[best]
    }

    /// Fraction of exact label matches on a non-empty test corpus.
    pub fn accuracy(&self, test: &Corpus) -> Result<f64> {
        if test.is_empty() {
            return Err(Error::InvalidInput("empty test corpus".into()));
        }
        let correct = test
            .iter()
            .filter(|ex| self.predict(&ex.text) == ex.label)
            .count();
        Ok(correct as f64 / test.len() as f64)
    }
}
