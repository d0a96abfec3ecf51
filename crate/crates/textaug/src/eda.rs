//! The classic four word-level augmentation operations (the `eda` method):
//! synonym replacement, random insertion, random swap, random deletion.
//!
//! Per-operation intensity follows the usual convention: a rate `alpha`
//! applied to a sentence of `L` tokens performs `max(1, round(alpha * L))`
//! edits, except that a rate of exactly zero disables the operation.
//! Deletion instead keeps each token independently with probability
//! `1 - p_rd`.
//!
//! Synonyms come from a plain TSV lexicon (`word<TAB>syn1,syn2,...`), so
//! any thesaurus export can be dropped in; a small bundled lexicon and a
//! bundled English stopword list back the tests and the defaults.

use std::collections::{HashMap, HashSet};
use std::path::Path;

use rayon::prelude::*;

use crate::corpus::{Corpus, LabeledExample};
use crate::error::{Error, Result};
use crate::ratio::Ratio;
use crate::rng::RngStream;
use crate::text::{detokenize, tokenize, TokenSeq};

const BUNDLED_LEXICON: &str = include_str!("../data/lexicon_small.tsv");
const BUNDLED_STOPWORDS: &str = include_str!("../data/stopwords_en.txt");

/// Rates for the four operations plus the number of variants per sentence.
#[derive(Debug, Clone, PartialEq)]
pub struct EdaParams {
    pub alpha_sr: Ratio,
    pub alpha_ri: Ratio,
    pub alpha_rs: Ratio,
    pub p_rd: f64,
    pub num_aug: usize,
}

impl Default for EdaParams {
    fn default() -> Self {
        let tenth = Ratio::new(1, 10).expect("static ratio");
        EdaParams {
            alpha_sr: tenth,
            alpha_ri: tenth,
            alpha_rs: tenth,
            p_rd: 0.1,
            num_aug: 9,
        }
    }
}

impl EdaParams {
    pub fn validate(&self) -> Result<()> {
        for (name, alpha) in [
            ("alpha_sr", self.alpha_sr),
            ("alpha_ri", self.alpha_ri),
            ("alpha_rs", self.alpha_rs),
        ] {
            if !alpha.in_unit_interval_closed() {
                return Err(Error::InvalidConfig(format!(
                    "{name} must be in [0, 1], got {alpha}"
                )));
            }
        }
        if !(0.0..=1.0).contains(&self.p_rd) {
            return Err(Error::InvalidConfig(format!(
                "p_rd must be in [0, 1], got {}",
                self.p_rd
            )));
        }
        Ok(())
    }

    /// Edit count for a rate on a sentence of `len` tokens.
    fn intensity(alpha: Ratio, len: usize) -> usize {
        if alpha.is_zero() {
            0
        } else {
            alpha.round_mul(len as u64).max(1) as usize
        }
    }
}

/// word -> ordered synonym phrases, all lowercase.
#[derive(Debug, Clone, Default)]
pub struct SynonymLexicon {
    entries: HashMap<String, Vec<String>>,
}

impl SynonymLexicon {
    /// The small lexicon shipped with the crate.
    pub fn bundled() -> SynonymLexicon {
        Self::parse(BUNDLED_LEXICON, "<bundled lexicon>").expect("bundled lexicon is valid")
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<SynonymLexicon> {
        let path = path.as_ref();
        let content = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&content, path)
    }

    /// Parses `word<TAB>syn1,syn2,...` lines. Everything is lowercased and
    /// trimmed; a word listing itself as a synonym, an empty synonym, or a
    /// duplicate word is an error with its line number.
    pub fn parse(content: &str, origin: impl AsRef<Path>) -> Result<SynonymLexicon> {
        let origin = origin.as_ref();
        let mut entries = HashMap::new();
        for (idx, line) in content.split('\n').enumerate() {
            let lineno = idx + 1;
            if line.trim().is_empty() {
                continue;
            }
            let Some((word, rest)) = line.split_once('\t') else {
                return Err(Error::malformed(origin, lineno, "missing tab separator"));
            };
            let word = word.trim().to_lowercase();
            if word.is_empty() || word.chars().any(char::is_whitespace) {
                return Err(Error::malformed(origin, lineno, "bad head word"));
            }
            let mut synonyms = Vec::new();
            for raw in rest.split(',') {
                let syn = raw.trim().to_lowercase();
                if syn.is_empty() {
                    return Err(Error::malformed(origin, lineno, "empty synonym"));
                }
                if syn == word {
                    return Err(Error::malformed(
                        origin,
                        lineno,
                        format!("{word:?} lists itself as a synonym"),
                    ));
                }
                synonyms.push(syn);
            }
            if synonyms.is_empty() {
                return Err(Error::malformed(origin, lineno, "no synonyms"));
            }
            if entries.insert(word.clone(), synonyms).is_some() {
                return Err(Error::malformed(
                    origin,
                    lineno,
                    format!("duplicate entry for {word:?}"),
                ));
            }
        }
        Ok(SynonymLexicon { entries })
    }

    /// Builds a lexicon from in-memory pairs; used by tests and small demos.
    pub fn from_pairs(pairs: &[(&str, &[&str])]) -> Result<SynonymLexicon> {
        let mut content = String::new();
        for (word, syns) in pairs {
            content.push_str(word);
            content.push('\t');
            content.push_str(&syns.join(","));
            content.push('\n');
        }
        Self::parse(&content, "<inline lexicon>")
    }

    /// Synonyms for `word`, looked up case-insensitively.
    pub fn get(&self, word: &str) -> Option<&[String]> {
        self.entries.get(&word.to_lowercase()).map(Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Lowercase words excluded from synonym replacement.
#[derive(Debug, Clone, Default)]
pub struct StopwordSet {
    words: HashSet<String>,
}

impl StopwordSet {
    /// The bundled English list (one word per line).
    pub fn bundled() -> StopwordSet {
        Self::parse(BUNDLED_STOPWORDS)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<StopwordSet> {
        let path = path.as_ref();
        let content = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Ok(Self::parse(&content))
    }

    fn parse(content: &str) -> StopwordSet {
        StopwordSet {
            words: content
                .lines()
                .map(|l| l.trim().to_lowercase())
                .filter(|l| !l.is_empty())
                .collect(),
        }
    }

    pub fn from_words<I: IntoIterator<Item = S>, S: Into<String>>(words: I) -> StopwordSet {
        StopwordSet {
            words: words.into_iter().map(|w| w.into().to_lowercase()).collect(),
        }
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(&word.to_lowercase())
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

fn eligible(token: &str, lexicon: &SynonymLexicon, stopwords: &StopwordSet) -> bool {
    !stopwords.contains(token) && lexicon.get(token).is_some()
}

/// Replaces up to `n` distinct eligible tokens (non-stopwords with lexicon
/// entries) by a uniformly chosen synonym. Multi-word synonyms splice in,
/// so the output can be longer than the input.
pub fn synonym_replacement(
    s: &TokenSeq,
    n: usize,
    lexicon: &SynonymLexicon,
    stopwords: &StopwordSet,
    rng: &mut RngStream,
) -> TokenSeq {
    if n == 0 {
        return s.clone();
    }
    let eligible_positions: Vec<usize> = (0..s.len())
        .filter(|&i| eligible(&s[i], lexicon, stopwords))
        .collect();
    if eligible_positions.is_empty() {
        return s.clone();
    }
    let take = n.min(eligible_positions.len());
    let chosen = rng.sample_indices(eligible_positions.len(), take);
    let mut replacements: HashMap<usize, Vec<String>> = HashMap::new();
    for meta in chosen {
        let pos = eligible_positions[meta];
        let synonyms = lexicon.get(&s[pos]).expect("eligibility checked");
        let syn = &synonyms[rng.next_below(synonyms.len() as u64) as usize];
        replacements.insert(pos, syn.split_whitespace().map(str::to_string).collect());
    }
    let mut out = Vec::with_capacity(s.len());
    for (i, tok) in s.iter().enumerate() {
        match replacements.remove(&i) {
            Some(words) => out.extend(words),
            None => out.push(tok.clone()),
        }
    }
    TokenSeq::from_valid(out)
}

/// `n` times: pick a random position of the current sequence; if its token
/// is eligible, insert one of its synonyms at a uniformly random slot.
/// Each insertion gives up after 10 failed picks.
pub fn random_insertion(
    s: &TokenSeq,
    n: usize,
    lexicon: &SynonymLexicon,
    stopwords: &StopwordSet,
    rng: &mut RngStream,
) -> TokenSeq {
    if s.is_empty() {
        return s.clone();
    }
    let mut out: Vec<String> = s.tokens().to_vec();
    for _ in 0..n {
        for _attempt in 0..10 {
            let pick = rng.next_below(out.len() as u64) as usize;
            if !eligible(&out[pick], lexicon, stopwords) {
                continue;
            }
            let synonyms = lexicon.get(&out[pick]).expect("eligibility checked");
            let syn = &synonyms[rng.next_below(synonyms.len() as u64) as usize];
            let slot = rng.next_below(out.len() as u64 + 1) as usize;
            let words: Vec<String> = syn.split_whitespace().map(str::to_string).collect();
            out.splice(slot..slot, words);
            break;
        }
    }
    TokenSeq::from_valid(out)
}

/// `n` times, exchanges two distinct uniform positions. Sequences shorter
/// than two tokens come back unchanged.
pub fn random_swap(s: &TokenSeq, n: usize, rng: &mut RngStream) -> TokenSeq {
    let len = s.len();
    if len < 2 {
        return s.clone();
    }
    let mut out: Vec<String> = s.tokens().to_vec();
    for _ in 0..n {
        let i = rng.next_below(len as u64) as usize;
        let j = loop {
            let j = rng.next_below(len as u64) as usize;
            if j != i {
                break j;
            }
        };
        out.swap(i, j);
    }
    TokenSeq::from_valid(out)
}

/// Keeps each token independently with probability `1 - p`. If everything
/// is deleted, one uniformly chosen original token survives.
pub fn random_deletion(s: &TokenSeq, p: f64, rng: &mut RngStream) -> TokenSeq {
    if s.is_empty() {
        return s.clone();
    }
    let mut out = Vec::with_capacity(s.len());
    for tok in s.iter() {
        if rng.next_f64() >= p {
            out.push(tok.clone());
        }
    }
    if out.is_empty() {
        let survivor = rng.next_below(s.len() as u64) as usize;
        out.push(s[survivor].clone());
    }
    TokenSeq::from_valid(out)
}

/// Which operation produced a variant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdaOp {
    SynonymReplacement,
    RandomInsertion,
    RandomSwap,
    RandomDeletion,
}

/// [`augment`] with each variant tagged by the operation that made it.
pub fn augment_traced(
    s: &TokenSeq,
    params: &EdaParams,
    lexicon: &SynonymLexicon,
    stopwords: &StopwordSet,
    rng: &mut RngStream,
) -> Result<Vec<(EdaOp, TokenSeq)>> {
    if s.is_empty() {
        return Err(Error::InvalidInput(
            "cannot augment an empty sequence".into(),
        ));
    }
    params.validate()?;
    if !params.alpha_sr.is_zero() && stopwords.is_empty() {
        return Err(Error::InvalidConfig(
            "synonym replacement requires a non-empty stopword set".into(),
        ));
    }
    if params.num_aug == 0 {
        return Ok(Vec::new());
    }
    let per_op = params.num_aug.div_ceil(4);
    let len = s.len();
    let mut candidates = Vec::with_capacity(4 * per_op);
    for _ in 0..per_op {
        let n = EdaParams::intensity(params.alpha_sr, len);
        candidates.push((
            EdaOp::SynonymReplacement,
            synonym_replacement(s, n, lexicon, stopwords, rng),
        ));
    }
    for _ in 0..per_op {
        let n = EdaParams::intensity(params.alpha_ri, len);
        candidates.push((
            EdaOp::RandomInsertion,
            random_insertion(s, n, lexicon, stopwords, rng),
        ));
    }
    for _ in 0..per_op {
        let n = EdaParams::intensity(params.alpha_rs, len);
        candidates.push((EdaOp::RandomSwap, random_swap(s, n, rng)));
    }
    for _ in 0..per_op {
        candidates.push((EdaOp::RandomDeletion, random_deletion(s, params.p_rd, rng)));
    }
    rng.shuffle(&mut candidates);
    candidates.truncate(params.num_aug);
    Ok(candidates)
}

/// Generates `params.num_aug` variants of a non-empty sentence: each of
/// the four operations contributes `ceil(num_aug / 4)` candidates, the
/// pool is shuffled, and the first `num_aug` survive.
pub fn augment(
    s: &TokenSeq,
    params: &EdaParams,
    lexicon: &SynonymLexicon,
    stopwords: &StopwordSet,
    rng: &mut RngStream,
) -> Result<Vec<TokenSeq>> {
    Ok(augment_traced(s, params, lexicon, stopwords, rng)?
        .into_iter()
        .map(|(_, seq)| seq)
        .collect())
}

/// Corpus expansion mirroring [`crate::aeda::batch`]: each example is
/// followed by its `params.num_aug` variants, generated from the stream
/// derived from `(master_seed, example_index)`. Schedule-independent.
pub fn batch(
    corpus: &Corpus,
    params: &EdaParams,
    lexicon: &SynonymLexicon,
    stopwords: &StopwordSet,
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
            if params.num_aug > 0 && tokens.is_empty() {
                return Err(Error::InvalidInput(format!(
                    "example {}: cannot augment empty text",
                    i + 1
                )));
            }
            let mut block = Vec::with_capacity(1 + params.num_aug);
            block.push(ex.clone());
            if params.num_aug > 0 {
                let mut rng = RngStream::derived(master_seed, &[i as u64]);
                for variant in augment(&tokens, params, lexicon, stopwords, &mut rng)? {
                    block.push(LabeledExample {
                        label: ex.label.clone(),
                        text: detokenize(&variant),
                    });
                }
            }
            Ok(block)
        })
        .collect::<Result<_>>()?;
    Ok(Corpus::new(blocks.into_iter().flatten().collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashMap, HashSet};

    fn seq(text: &str) -> TokenSeq {
        tokenize(text)
    }

    fn single_word_lexicon() -> SynonymLexicon {
        SynonymLexicon::from_pairs(&[
            ("good", &["great", "fine"]),
            ("bad", &["poor"]),
            ("movie", &["film"]),
            ("slow", &["sluggish"]),
        ])
        .unwrap()
    }

    fn no_stopwords() -> StopwordSet {
        StopwordSet::from_words(Vec::<String>::new())
    }

    #[test]
    fn bundled_data_parses() {
        let lex = SynonymLexicon::bundled();
        assert!(lex.len() >= 50, "bundled lexicon has {} entries", lex.len());
        assert!(lex.get("good").is_some());
        let stop = StopwordSet::bundled();
        assert!(stop.len() >= 150, "bundled stopwords has {}", stop.len());
        assert!(stop.contains("the"));
        assert!(stop.contains("The"));
    }

    #[test]
    fn lexicon_rejects_self_synonym_and_duplicates() {
        assert!(SynonymLexicon::parse("good\tgood,great\n", "<t>").is_err());
        assert!(SynonymLexicon::parse("good\tgreat\ngood\tfine\n", "<t>").is_err());
        assert!(SynonymLexicon::parse("good\t\n", "<t>").is_err());
        assert!(SynonymLexicon::parse("no-tab-line\n", "<t>").is_err());
    }

    #[test]
    fn lexicon_lookup_is_case_insensitive() {
        let lex = single_word_lexicon();
        assert_eq!(lex.get("GOOD"), lex.get("good"));
    }

    #[test]
    fn sr_zero_is_identity() {
        let s = seq("good movie tonight");
        let out = synonym_replacement(
            &s,
            0,
            &single_word_lexicon(),
            &no_stopwords(),
            &mut RngStream::new(0),
        );
        assert_eq!(out, s);
    }

    #[test]
    fn sr_single_eligible_target() {
        let lex = SynonymLexicon::from_pairs(&[("good", &["great"])]).unwrap();
        let out = synonym_replacement(
            &seq("good movie"),
            1,
            &lex,
            &no_stopwords(),
            &mut RngStream::new(4),
        );
        assert_eq!(out, seq("great movie"));
    }

    #[test]
    fn sr_empty_lexicon_identity() {
        let s = seq("good movie");
        let lex = SynonymLexicon::default();
        let out = synonym_replacement(&s, 3, &lex, &no_stopwords(), &mut RngStream::new(1));
        assert_eq!(out, s);
    }

    #[test]
    fn sr_replacement_count_bounded() {
        let lex = single_word_lexicon();
        let stop = no_stopwords();
        let s = seq("good bad movie good again slow done");
        let n_eligible = 5; // good, bad, movie, good, slow
        for seed in 0..1000u64 {
            let n = (seed % 7) as usize;
            let out = synonym_replacement(&s, n, &lex, &stop, &mut RngStream::new(seed));
            assert_eq!(out.len(), s.len(), "single-word synonyms keep length");
            let changed = s
                .iter()
                .zip(out.iter())
                .filter(|(a, b)| a != b)
                .count();
            assert!(changed <= n.min(n_eligible));
        }
    }

    #[test]
    fn sr_never_touches_stopwords() {
        // Even a stopword with a lexicon entry must stay put.
        let lex = SynonymLexicon::from_pairs(&[("the", &["a"]), ("good", &["great"])]).unwrap();
        let stop = StopwordSet::from_words(["the"]);
        let s = seq("the good the");
        for seed in 0..100u64 {
            let out = synonym_replacement(&s, 3, &lex, &stop, &mut RngStream::new(seed));
            assert_eq!(out[0], "the");
            assert_eq!(out[2], "the");
        }
    }

    #[test]
    fn sr_multi_word_synonym_splices() {
        let lex = SynonymLexicon::from_pairs(&[("excellent", &["top notch"])]).unwrap();
        let out = synonym_replacement(
            &seq("excellent film"),
            1,
            &lex,
            &no_stopwords(),
            &mut RngStream::new(0),
        );
        assert_eq!(out, seq("top notch film"));
    }

    #[test]
    fn ri_zero_is_identity() {
        let s = seq("good movie");
        let out = random_insertion(
            &s,
            0,
            &single_word_lexicon(),
            &no_stopwords(),
            &mut RngStream::new(0),
        );
        assert_eq!(out, s);
    }

    #[test]
    fn ri_single_word_two_slots() {
        let lex = SynonymLexicon::from_pairs(&[("good", &["great"])]).unwrap();
        let stop = no_stopwords();
        let mut seen = HashSet::new();
        for seed in 0..50u64 {
            let out = random_insertion(&seq("good"), 1, &lex, &stop, &mut RngStream::new(seed));
            assert!(out == seq("great good") || out == seq("good great"));
            seen.insert(detokenize(&out));
        }
        assert_eq!(seen.len(), 2, "both slots should occur");
    }

    #[test]
    fn ri_length_bound() {
        let lex = single_word_lexicon();
        let stop = no_stopwords();
        let s = seq("good bad movie and nothing else here");
        for seed in 0..1000u64 {
            let n = (seed % 5) as usize;
            let out = random_insertion(&s, n, &lex, &stop, &mut RngStream::new(seed));
            assert!(out.len() >= s.len());
            assert!(out.len() <= s.len() + n);
        }
    }

    #[test]
    fn ri_no_eligible_words_skips() {
        let lex = SynonymLexicon::from_pairs(&[("absent", &["missing"])]).unwrap();
        let s = seq("nothing matches here");
        let out = random_insertion(&s, 4, &lex, &no_stopwords(), &mut RngStream::new(3));
        assert_eq!(out, s);
    }

    #[test]
    fn rs_zero_is_identity_and_pair_swaps() {
        let s = seq("a b");
        assert_eq!(random_swap(&s, 0, &mut RngStream::new(0)), s);
        assert_eq!(random_swap(&s, 1, &mut RngStream::new(0)), seq("b a"));
        assert_eq!(random_swap(&seq("x"), 5, &mut RngStream::new(0)), seq("x"));
    }

    #[test]
    fn rs_preserves_multiset() {
        let s = seq("one two three two one five six");
        let mut expect: Vec<&String> = s.iter().collect();
        expect.sort();
        for seed in 0..1000u64 {
            let out = random_swap(&s, 3, &mut RngStream::new(seed));
            let mut got: Vec<&String> = out.iter().collect();
            got.sort();
            assert_eq!(got, expect);
        }
    }

    #[test]
    fn rd_p_zero_is_identity() {
        let s = seq("keep all of these tokens");
        assert_eq!(random_deletion(&s, 0.0, &mut RngStream::new(0)), s);
    }

    #[test]
    fn rd_p_one_leaves_single_original_token() {
        let s = seq("alpha beta gamma");
        let mut survivors = HashSet::new();
        for seed in 0..60u64 {
            let out = random_deletion(&s, 1.0, &mut RngStream::new(seed));
            assert_eq!(out.len(), 1);
            assert!(s.tokens().contains(&out[0]));
            survivors.insert(out[0].clone());
        }
        assert_eq!(survivors.len(), 3, "fallback should be uniform-ish");
    }

    #[test]
    fn rd_kept_count_within_binomial_bound() {
        let tokens: Vec<String> = (0..1000).map(|i| format!("t{i}")).collect();
        let s = TokenSeq::new(tokens).unwrap();
        let out = random_deletion(&s, 0.1, &mut RngStream::new(12));
        let kept = out.len() as i64;
        assert!((kept - 900).abs() <= 40, "kept {kept}");
    }

    #[test]
    fn rd_output_is_subsequence() {
        let s = seq("a b c d e f g h i j");
        for seed in 0..200u64 {
            let out = random_deletion(&s, 0.3, &mut RngStream::new(seed));
            assert!(out.is_subsequence_of(&s));
        }
    }

    #[test]
    fn augment_four_gives_one_per_op() {
        let params = EdaParams {
            num_aug: 4,
            ..EdaParams::default()
        };
        let variants = augment_traced(
            &seq("the good movie was not bad at all ."),
            &params,
            &single_word_lexicon(),
            &StopwordSet::bundled(),
            &mut RngStream::new(0),
        )
        .unwrap();
        assert_eq!(variants.len(), 4);
        let mut per_op: HashMap<EdaOp, usize> = HashMap::new();
        for (op, _) in &variants {
            *per_op.entry(*op).or_insert(0) += 1;
        }
        assert_eq!(per_op.len(), 4);
        assert!(per_op.values().all(|&c| c == 1));
    }

    #[test]
    fn augment_nine_caps_three_per_op() {
        let params = EdaParams {
            num_aug: 9,
            ..EdaParams::default()
        };
        let variants = augment_traced(
            &seq("a good movie with a bad plot ."),
            &params,
            &single_word_lexicon(),
            &StopwordSet::bundled(),
            &mut RngStream::new(5),
        )
        .unwrap();
        assert_eq!(variants.len(), 9);
        let mut per_op: HashMap<EdaOp, usize> = HashMap::new();
        for (op, _) in &variants {
            *per_op.entry(*op).or_insert(0) += 1;
        }
        assert!(per_op.values().all(|&c| c <= 3));
    }

    #[test]
    fn augment_identity_when_all_rates_zero() {
        let params = EdaParams {
            alpha_sr: Ratio::ZERO,
            alpha_ri: Ratio::ZERO,
            alpha_rs: Ratio::ZERO,
            p_rd: 0.0,
            num_aug: 8,
        };
        let s = seq("every variant must equal this sentence");
        let variants = augment(
            &s,
            &params,
            &single_word_lexicon(),
            &no_stopwords(),
            &mut RngStream::new(2),
        )
        .unwrap();
        assert_eq!(variants.len(), 8);
        assert!(variants.iter().all(|v| v == &s));
    }

    #[test]
    fn augment_needs_stopwords_when_replacement_enabled() {
        let s = seq("a good movie");
        let err = augment(
            &s,
            &EdaParams::default(),
            &single_word_lexicon(),
            &no_stopwords(),
            &mut RngStream::new(0),
        );
        assert!(err.is_err());
        // alpha_sr = 0 lifts the requirement
        let params = EdaParams {
            alpha_sr: Ratio::ZERO,
            ..EdaParams::default()
        };
        assert!(augment(
            &s,
            &params,
            &single_word_lexicon(),
            &no_stopwords(),
            &mut RngStream::new(0)
        )
        .is_ok());
    }

    #[test]
    fn params_reject_out_of_range_rates() {
        let bad_p = EdaParams {
            p_rd: 1.5,
            ..EdaParams::default()
        };
        assert!(bad_p.validate().is_err());
        let bad_alpha = EdaParams {
            alpha_sr: Ratio::new(3, 2).unwrap(),
            ..EdaParams::default()
        };
        assert!(bad_alpha.validate().is_err());
        assert!(EdaParams::default().validate().is_ok());
    }

    #[test]
    fn augment_rejects_empty_input() {
        let params = EdaParams::default();
        assert!(augment(
            &seq(""),
            &params,
            &single_word_lexicon(),
            &no_stopwords(),
            &mut RngStream::new(0)
        )
        .is_err());
    }

    #[test]
    fn batch_shape_determinism_and_threads() {
        let corpus = Corpus::new(
            (0..30)
                .map(|i| {
                    LabeledExample::new(
                        if i % 2 == 0 { "1" } else { "0" },
                        format!("the good movie number {i} was not bad ."),
                    )
                    .unwrap()
                })
                .collect(),
        );
        let params = EdaParams {
            num_aug: 3,
            ..EdaParams::default()
        };
        let lex = SynonymLexicon::bundled();
        let stop = StopwordSet::bundled();
        let a = batch(&corpus, &params, &lex, &stop, 11).unwrap();
        assert_eq!(a.len(), 30 * 4);
        let b = batch(&corpus, &params, &lex, &stop, 11).unwrap();
        assert_eq!(a, b);
        let pooled = rayon::ThreadPoolBuilder::new()
            .num_threads(8)
            .build()
            .unwrap()
            .install(|| batch(&corpus, &params, &lex, &stop, 11).unwrap());
        assert_eq!(a, pooled);
        for (i, block) in a.examples.chunks(4).enumerate() {
            assert_eq!(block[0], corpus.examples[i]);
        }
    }
}
