//! Labeled-corpus ingestion, splitting, subsampling, and statistics.
//!
//! The on-disk format is one `label<TAB>text` pair per line, UTF-8, LF
//! newlines. There is no escaping convention, so tabs and newlines are
//! rejected outright rather than quoted. Labels are opaque strings: binary
//! sentiment sets and six-way question sets share one code path.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::ratio::Ratio;
use crate::rng::RngStream;
use crate::text::tokenize;

/// One classification example.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledExample {
    pub label: String,
    pub text: String,
}

impl LabeledExample {
    pub fn new(label: impl Into<String>, text: impl Into<String>) -> Result<LabeledExample> {
        let ex = LabeledExample {
            label: label.into(),
            text: text.into(),
        };
        ex.validate()?;
        Ok(ex)
    }

    fn validate(&self) -> Result<()> {
        if self.label.is_empty() {
            return Err(Error::InvalidInput("empty label".into()));
        }
        for (what, field) in [("label", &self.label), ("text", &self.text)] {
            if field.contains('\t') {
                return Err(Error::InvalidInput(format!("{what} contains a tab: {field:?}")));
            }
            if field.contains('\n') || field.contains('\r') {
                return Err(Error::InvalidInput(format!(
                    "{what} contains a line break: {field:?}"
                )));
            }
        }
        Ok(())
    }
}

/// An ordered collection of labeled examples.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Corpus {
    pub examples: Vec<LabeledExample>,
}

impl Corpus {
    pub fn new(examples: Vec<LabeledExample>) -> Corpus {
        Corpus { examples }
    }

    pub fn len(&self) -> usize {
        self.examples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.examples.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, LabeledExample> {
        self.examples.iter()
    }
}

/// Summary statistics in the shape of the usual dataset tables.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusStats {
    pub n_examples: usize,
    pub n_class: usize,
    /// Mean whitespace-token count; round only for display.
    pub avg_len: f64,
    pub vocab_size: usize,
}

/// Reads a `label<TAB>text` file. Empty lines are skipped; anything else
/// that deviates from the format is an error carrying its 1-based line
/// number.
pub fn read_tsv(path: impl AsRef<Path>) -> Result<Corpus> {
    let path = path.as_ref();
    let content = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    let mut examples = Vec::new();
    for (idx, line) in content.split('\n').enumerate() {
        let lineno = idx + 1;
        if line.is_empty() {
            continue;
        }
        if line.contains('\r') {
            return Err(Error::malformed(
                path,
                lineno,
                "carriage return found; corpus files use LF line endings",
            ));
        }
        let Some((label, text)) = line.split_once('\t') else {
            return Err(Error::malformed(path, lineno, "missing tab separator"));
        };
        if label.is_empty() {
            return Err(Error::malformed(path, lineno, "empty label"));
        }
        if text.contains('\t') {
            return Err(Error::malformed(path, lineno, "text contains a tab"));
        }
        examples.push(LabeledExample {
            label: label.to_string(),
            text: text.to_string(),
        });
    }
    if examples.is_empty() {
        return Err(Error::InvalidInput(format!(
            "{}: no examples (empty corpus)",
            path.display()
        )));
    }
    Ok(Corpus { examples })
}

/// Renders the canonical byte representation: `label<TAB>text<LF>` per
/// example, nothing after the final LF.
pub fn to_tsv_string(corpus: &Corpus) -> Result<String> {
    let mut out = String::new();
    for (i, ex) in corpus.examples.iter().enumerate() {
        ex.validate().map_err(|e| {
            Error::InvalidInput(format!("example {}: {e}", i + 1))
        })?;
        out.push_str(&ex.label);
        out.push('\t');
        out.push_str(&ex.text);
        out.push('\n');
    }
    Ok(out)
}

/// Writes the canonical TSV form of `corpus` to `path`.
pub fn write_tsv(corpus: &Corpus, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let bytes = to_tsv_string(corpus)?;
    std::fs::write(path, bytes).map_err(|e| Error::io(path, e))
}

/// Shuffle-split into `(train, test)` under `seed`. The permuted corpus is
/// cut after `ceil((1 - test_fraction) * n)` examples.
pub fn split(corpus: &Corpus, test_fraction: Ratio, seed: u64) -> Result<(Corpus, Corpus)> {
    let n = corpus.len();
    if n < 2 {
        return Err(Error::InvalidInput(format!(
            "cannot split a corpus of {n} example(s)"
        )));
    }
    if !test_fraction.strictly_inside_unit_interval() {
        return Err(Error::InvalidConfig(format!(
            "test fraction must be strictly between 0 and 1, got {test_fraction}"
        )));
    }
    let train_len = test_fraction.complement().ceil_mul(n as u64) as usize;
    if train_len == 0 || train_len == n {
        return Err(Error::InvalidConfig(format!(
            "test fraction {test_fraction} leaves an empty side for {n} examples"
        )));
    }
    let mut order: Vec<usize> = (0..n).collect();
    RngStream::new(seed).shuffle(&mut order);
    let pick = |ix: &[usize]| Corpus {
        examples: ix.iter().map(|&i| corpus.examples[i].clone()).collect(),
    };
    Ok((pick(&order[..train_len]), pick(&order[train_len..])))
}

/// A subsample request: an absolute count or a fraction of the corpus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SampleSize {
    Count(usize),
    Fraction(Ratio),
}

impl SampleSize {
    /// Number of examples this request selects out of `n`.
    pub fn resolve(&self, n: usize) -> Result<usize> {
        let k = match self {
            SampleSize::Count(k) => *k,
            SampleSize::Fraction(f) => {
                if !f.in_unit_interval_right_closed() {
                    return Err(Error::InvalidConfig(format!(
                        "sample fraction must be in (0, 1], got {f}"
                    )));
                }
                f.floor_mul(n as u64) as usize
            }
        };
        if k == 0 {
            return Err(Error::InvalidConfig(format!(
                "sample size {self} selects no examples from {n}"
            )));
        }
        if k > n {
            return Err(Error::InvalidInput(format!(
                "requested {k} examples from a corpus of {n}"
            )));
        }
        Ok(k)
    }
}

impl fmt::Display for SampleSize {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SampleSize::Count(k) => write!(f, "{k}"),
            SampleSize::Fraction(r) => write!(f, "{r}"),
        }
    }
}

/// `"full"` means the whole corpus; values containing `.` or `/` are
/// fractions; bare integers are absolute counts.
impl FromStr for SampleSize {
    type Err = Error;

    fn from_str(s: &str) -> Result<SampleSize> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("full") {
            return Ok(SampleSize::Fraction(Ratio::ONE));
        }
        if s.contains('.') || s.contains('/') {
            return Ok(SampleSize::Fraction(s.parse()?));
        }
        let k: usize = s
            .parse()
            .map_err(|_| Error::InvalidConfig(format!("cannot parse sample size from {s:?}")))?;
        Ok(SampleSize::Count(k))
    }
}

/// Uniform sample without replacement under `seed`; the survivors keep
/// their original relative order.
pub fn subsample(corpus: &Corpus, size: SampleSize, seed: u64) -> Result<Corpus> {
    let n = corpus.len();
    let k = size.resolve(n)?;
    let picked = RngStream::new(seed).sample_indices(n, k);
    Ok(Corpus {
        examples: picked
            .into_iter()
            .map(|i| corpus.examples[i].clone())
            .collect(),
    })
}

/// Label-stratified sample without replacement: per-class quotas are
/// proportional (floored, remainders to the largest fractions, ties by
/// label order), then each class is sampled uniformly under `seed`.
/// Original relative order is preserved.
pub fn subsample_stratified(corpus: &Corpus, size: SampleSize, seed: u64) -> Result<Corpus> {
    let n = corpus.len();
    let k = size.resolve(n)?;

    // positions per label, in first-appearance label order
    let mut labels: Vec<&str> = Vec::new();
    let mut positions: HashMap<&str, Vec<usize>> = HashMap::new();
    for (i, ex) in corpus.iter().enumerate() {
        let slot = positions.entry(ex.label.as_str()).or_default();
        if slot.is_empty() {
            labels.push(ex.label.as_str());
        }
        slot.push(i);
    }
    labels.sort_unstable();

    let mut quotas: Vec<usize> = Vec::with_capacity(labels.len());
    let mut remainders: Vec<(u64, usize)> = Vec::with_capacity(labels.len());
    let mut assigned = 0usize;
    for (class, label) in labels.iter().enumerate() {
        let count = positions[label].len();
        let exact_num = (k * count) as u64;
        quotas.push((exact_num / n as u64) as usize);
        remainders.push((exact_num % n as u64, class));
        assigned += quotas[class];
    }
    // hand out the k - assigned leftovers by largest remainder
    remainders.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    for &(_, class) in remainders.iter().take(k - assigned) {
        quotas[class] += 1;
    }

    let mut rng = RngStream::new(seed);
    let mut picked: Vec<usize> = Vec::with_capacity(k);
    for (class, label) in labels.iter().enumerate() {
        let pool = &positions[label];
        let take = quotas[class].min(pool.len());
        for meta in rng.sample_indices(pool.len(), take) {
            picked.push(pool[meta]);
        }
    }
    picked.sort_unstable();
    Ok(Corpus {
        examples: picked
            .into_iter()
            .map(|i| corpus.examples[i].clone())
            .collect(),
    })
}

/// Class count, mean token length, example count, and vocabulary size.
pub fn stats(corpus: &Corpus) -> Result<CorpusStats> {
    if corpus.is_empty() {
        return Err(Error::InvalidInput("stats of an empty corpus".into()));
    }
    let mut labels = HashSet::new();
    let mut vocab = HashSet::new();
    let mut token_total = 0usize;
    for ex in corpus.iter() {
        labels.insert(ex.label.as_str());
        for tok in tokenize(&ex.text).into_tokens() {
            token_total += 1;
            vocab.insert(tok);
        }
    }
    Ok(CorpusStats {
        n_examples: corpus.len(),
        n_class: labels.len(),
        avg_len: token_total as f64 / corpus.len() as f64,
        vocab_size: vocab.len(),
    })
}
