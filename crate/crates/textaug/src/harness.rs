//! The experiment grid: method x training size x augmentation count x seed.
//!
//! Each grid cell subsamples the training set, optionally expands it with
//! one of the augmenters, fits the bag-of-words classifier, and scores the
//! untouched test set. The cell seed drives subsampling and augmentation
//! through separately tagged derived streams and nothing else — the
//! classifier is deterministic — so a report is a pure function of its
//! configuration, whatever the thread count.
//!
//! Reports are written as JSON (with a `schema_version` field) plus a flat
//! CSV of the per-cell accuracies in a fixed column order.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::aeda::{self, AedaParams};
use crate::classifier::BowModel;
use crate::corpus::{read_tsv, subsample, subsample_stratified, Corpus, SampleSize};
use crate::eda::{self, EdaParams, StopwordSet, SynonymLexicon};
use crate::error::{Error, Result};
use crate::rng::derive_seed;

/// Report format version.
pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Stream tag for the subsampling draw of a cell.
pub const TAG_SUBSAMPLE: u64 = 1;
/// Stream tag for the augmentation draws of a cell.
pub const TAG_AUGMENT: u64 = 2;

/// Training-data treatment for a cell. The declaration order is the
/// canonical report order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Original,
    Eda,
    Aeda,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Original => "original",
            Method::Eda => "eda",
            Method::Aeda => "aeda",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        match s.trim().to_lowercase().as_str() {
            "original" => Ok(Method::Original),
            "eda" => Ok(Method::Eda),
            "aeda" => Ok(Method::Aeda),
            other => Err(Error::InvalidConfig(format!(
                "unknown method {other:?} (expected original, eda, or aeda)"
            ))),
        }
    }
}

/// Everything a cell needs besides its grid coordinates.
#[derive(Debug, Clone)]
pub struct CellParams {
    pub aeda: AedaParams,
    pub eda: EdaParams,
    pub lexicon: SynonymLexicon,
    pub stopwords: StopwordSet,
    pub smoothing: f64,
}

impl Default for CellParams {
    fn default() -> Self {
        CellParams {
            aeda: AedaParams::default(),
            eda: EdaParams::default(),
            lexicon: SynonymLexicon::bundled(),
            stopwords: StopwordSet::bundled(),
            smoothing: 1.0,
        }
    }
}

/// Accuracy of one grid cell: augment (never the test set), fit, score.
/// `num_aug` and the seed are ignored for [`Method::Original`].
pub fn run_cell(
    method: Method,
    train: &Corpus,
    test: &Corpus,
    num_aug: usize,
    seed: u64,
    params: &CellParams,
) -> Result<f64> {
    let augmented = match method {
        Method::Original => None,
        Method::Aeda => Some(aeda::batch(
            train,
            num_aug,
            &params.aeda,
            derive_seed(seed, &[TAG_AUGMENT]),
        )?),
        Method::Eda => {
            let eda_params = EdaParams {
                num_aug,
                ..params.eda.clone()
            };
            Some(eda::batch(
                train,
                &eda_params,
                &params.lexicon,
                &params.stopwords,
                derive_seed(seed, &[TAG_AUGMENT]),
            )?)
        }
    };
    let training_set = augmented.as_ref().unwrap_or(train);
    let model = BowModel::fit(training_set, params.smoothing)?;
    model.accuracy(test)
}

/// One scored grid cell.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CellResult {
    pub method: Method,
    pub train_size: usize,
    pub num_aug: usize,
    pub seed: u64,
    pub accuracy: f64,
}

/// Mean and standard deviation over seeds for one (method, size, num_aug).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Aggregate {
    pub method: Method,
    pub train_size: usize,
    pub num_aug: usize,
    pub n_seeds: usize,
    pub mean: f64,
    pub stddev: f64,
}

/// The full result of a sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalReport {
    pub schema_version: u32,
    pub cells: Vec<CellResult>,
    pub aggregates: Vec<Aggregate>,
}

impl EvalReport {
    pub fn to_json_string(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    /// Per-cell table, fixed column order.
    pub fn to_csv_string(&self) -> String {
        let mut out = String::from("method,train_size,num_aug,seed,accuracy\n");
        for c in &self.cells {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                c.method, c.train_size, c.num_aug, c.seed, c.accuracy
            ));
        }
        out
    }
}

/// Groups cells by (method, size, num_aug) and computes mean and
/// population standard deviation, in canonical order.
pub fn aggregate(cells: &[CellResult]) -> Vec<Aggregate> {
    let mut groups: BTreeMap<(Method, usize, usize), Vec<f64>> = BTreeMap::new();
    for c in cells {
        groups
            .entry((c.method, c.train_size, c.num_aug))
            .or_default()
            .push(c.accuracy);
    }
    groups
        .into_iter()
        .map(|((method, train_size, num_aug), accs)| {
            let n = accs.len() as f64;
            let mean = accs.iter().sum::<f64>() / n;
            let var = accs.iter().map(|a| (a - mean) * (a - mean)).sum::<f64>() / n;
            Aggregate {
                method,
                train_size,
                num_aug,
                n_seeds: accs.len(),
                mean,
                stddev: var.sqrt(),
            }
        })
        .collect()
}

/// Mean improvement over the `original` baseline, in accuracy points.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Improvement {
    pub method: Method,
    pub train_size: usize,
    pub num_aug: usize,
    pub delta_points: f64,
}

/// For every non-baseline aggregate: `(mean(method) - mean(original)) * 100`
/// at the same size and augmentation count. Errors if a baseline cell
/// group is missing.
pub fn improvement_table(report: &EvalReport) -> Result<Vec<Improvement>> {
    let baseline: BTreeMap<(usize, usize), f64> = report
        .aggregates
        .iter()
        .filter(|a| a.method == Method::Original)
        .map(|a| ((a.train_size, a.num_aug), a.mean))
        .collect();
    let mut table = Vec::new();
    for agg in &report.aggregates {
        if agg.method == Method::Original {
            continue;
        }
        let Some(base) = baseline.get(&(agg.train_size, agg.num_aug)) else {
            return Err(Error::InvalidInput(format!(
                "no original baseline for train_size={} num_aug={}",
                agg.train_size, agg.num_aug
            )));
        };
        table.push(Improvement {
            method: agg.method,
            train_size: agg.train_size,
            num_aug: agg.num_aug,
            delta_points: (agg.mean - base) * 100.0,
        });
    }
    Ok(table)
}

/// A parsed sweep configuration.
#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    pub train_path: PathBuf,
    pub test_path: PathBuf,
    pub methods: Vec<Method>,
    pub sizes: Vec<SampleSize>,
    pub num_augs: Vec<usize>,
    pub seeds: Vec<u64>,
    pub aeda: AedaParams,
    pub eda: EdaParams,
    pub lexicon_path: Option<PathBuf>,
    pub stopwords_path: Option<PathBuf>,
    pub smoothing: f64,
    /// Opt-in label-stratified subsampling (uniform by default).
    pub stratified: bool,
}

impl ExperimentConfig {
    pub fn from_file(path: impl AsRef<Path>) -> Result<ExperimentConfig> {
        let path = path.as_ref();
        let content = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let base = path.parent().unwrap_or(Path::new("."));
        Self::parse(&content, base)
    }

    /// Parses the flat `key = value` format. Lines starting with `#` and
    /// blank lines are skipped; list values are comma-separated. Relative
    /// paths are resolved against `base_dir`.
    pub fn parse(content: &str, base_dir: &Path) -> Result<ExperimentConfig> {
        let mut seen: HashSet<String> = HashSet::new();
        let mut train = None;
        let mut test = None;
        let mut methods = None;
        let mut sizes = None;
        let mut num_augs = None;
        let mut seeds = None;
        let mut aeda = AedaParams::default();
        let mut eda = EdaParams::default();
        let mut lexicon_path = None;
        let mut stopwords_path = None;
        let mut smoothing = 1.0f64;
        let mut stratified = false;

        let resolve = |value: &str| -> PathBuf {
            let p = Path::new(value);
            if p.is_absolute() {
                p.to_path_buf()
            } else {
                base_dir.join(p)
            }
        };

        for raw in content.lines() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(Error::InvalidConfig(format!(
                    "expected `key = value`, got {line:?}"
                )));
            };
            let key = key.trim();
            let value = value.trim();
            if !seen.insert(key.to_string()) {
                return Err(Error::InvalidConfig(format!("duplicate key {key:?}")));
            }
            if value.is_empty() {
                return Err(Error::InvalidConfig(format!("empty value for {key:?}")));
            }
            let list = || value.split(',').map(str::trim);
            match key {
                "train" => train = Some(resolve(value)),
                "test" => test = Some(resolve(value)),
                "methods" => {
                    methods = Some(list().map(Method::from_str).collect::<Result<Vec<_>>>()?)
                }
                "sizes" => {
                    sizes = Some(
                        list()
                            .map(SampleSize::from_str)
                            .collect::<Result<Vec<_>>>()?,
                    )
                }
                "num_augs" => {
                    num_augs = Some(
                        list()
                            .map(|v| {
                                v.parse::<usize>().map_err(|_| {
                                    Error::InvalidConfig(format!("bad num_augs entry {v:?}"))
                                })
                            })
                            .collect::<Result<Vec<_>>>()?,
                    )
                }
                "seeds" => {
                    seeds = Some(
                        list()
                            .map(|v| {
                                v.parse::<u64>().map_err(|_| {
                                    Error::InvalidConfig(format!("bad seeds entry {v:?}"))
                                })
                            })
                            .collect::<Result<Vec<_>>>()?,
                    )
                }
                "ratio" => aeda.ratio = value.parse()?,
                // marks never contain whitespace, so the list is space-separated
                "punctuation" => {
                    aeda.punctuation = value.split_whitespace().map(str::to_string).collect()
                }
                "alpha_sr" => eda.alpha_sr = value.parse()?,
                "alpha_ri" => eda.alpha_ri = value.parse()?,
                "alpha_rs" => eda.alpha_rs = value.parse()?,
                "p_rd" => {
                    eda.p_rd = value.parse::<f64>().map_err(|_| {
                        Error::InvalidConfig(format!("bad p_rd value {value:?}"))
                    })?
                }
                "lexicon" => lexicon_path = Some(resolve(value)),
                "stopwords" => stopwords_path = Some(resolve(value)),
                "smoothing" => {
                    smoothing = value.parse::<f64>().map_err(|_| {
                        Error::InvalidConfig(format!("bad smoothing value {value:?}"))
                    })?
                }
                "stratified" => {
                    stratified = value.parse::<bool>().map_err(|_| {
                        Error::InvalidConfig(format!("bad stratified value {value:?}"))
                    })?
                }
                other => {
                    return Err(Error::InvalidConfig(format!("unknown key {other:?}")));
                }
            }
        }

        let require = |name: &str| Error::InvalidConfig(format!("missing required key {name:?}"));
        let config = ExperimentConfig {
            train_path: train.ok_or_else(|| require("train"))?,
            test_path: test.ok_or_else(|| require("test"))?,
            methods: methods.ok_or_else(|| require("methods"))?,
            sizes: sizes.ok_or_else(|| require("sizes"))?,
            num_augs: num_augs.ok_or_else(|| require("num_augs"))?,
            seeds: seeds.ok_or_else(|| require("seeds"))?,
            aeda,
            eda,
            lexicon_path,
            stopwords_path,
            smoothing,
            stratified,
        };
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        self.aeda.validate()?;
        self.eda.validate()?;
        for (name, len) in [
            ("methods", self.methods.len()),
            ("sizes", self.sizes.len()),
            ("num_augs", self.num_augs.len()),
            ("seeds", self.seeds.len()),
        ] {
            if len == 0 {
                return Err(Error::InvalidConfig(format!("{name} must be non-empty")));
            }
        }
        let distinct = |n: usize, name: &str, count: usize| {
            if n != count {
                Err(Error::InvalidConfig(format!("{name} must be distinct")))
            } else {
                Ok(())
            }
        };
        distinct(
            self.methods.iter().collect::<HashSet<_>>().len(),
            "methods",
            self.methods.len(),
        )?;
        distinct(
            self.seeds.iter().collect::<HashSet<_>>().len(),
            "seeds",
            self.seeds.len(),
        )?;
        distinct(
            self.num_augs.iter().collect::<HashSet<_>>().len(),
            "num_augs",
            self.num_augs.len(),
        )?;
        Ok(())
    }

    fn cell_params(&self) -> Result<CellParams> {
        let lexicon = match &self.lexicon_path {
            Some(p) => SynonymLexicon::from_file(p)?,
            None => SynonymLexicon::bundled(),
        };
        let stopwords = match &self.stopwords_path {
            Some(p) => StopwordSet::from_file(p)?,
            None => StopwordSet::bundled(),
        };
        Ok(CellParams {
            aeda: self.aeda.clone(),
            eda: self.eda.clone(),
            lexicon,
            stopwords,
            smoothing: self.smoothing,
        })
    }
}

/// Runs the full cross product. Cells execute in parallel; the report is
/// assembled in canonical (method, size, num_aug, seed) order, so its
/// bytes do not depend on scheduling.
pub fn run_experiment(config: &ExperimentConfig) -> Result<EvalReport> {
    config.validate()?;
    let train = read_tsv(&config.train_path)?;
    let test = read_tsv(&config.test_path)?;
    let params = config.cell_params()?;

    let mut resolved_sizes = Vec::with_capacity(config.sizes.len());
    for size in &config.sizes {
        resolved_sizes.push(size.resolve(train.len())?);
    }
    if resolved_sizes.iter().collect::<HashSet<_>>().len() != resolved_sizes.len() {
        return Err(Error::InvalidConfig(
            "sizes resolve to duplicate training set sizes".into(),
        ));
    }

    let mut grid = Vec::new();
    for &method in &config.methods {
        for &size in &resolved_sizes {
            for &num_aug in &config.num_augs {
                for &seed in &config.seeds {
                    grid.push((method, size, num_aug, seed));
                }
            }
        }
    }

    let mut cells: Vec<CellResult> = grid
        .par_iter()
        .map(|&(method, size, num_aug, seed)| -> Result<CellResult> {
            let in_cell = |e: Error| {
                Error::InvalidInput(format!(
                    "cell (method={method}, size={size}, num_aug={num_aug}, seed={seed}): {e}"
                ))
            };
            let sub_seed = derive_seed(seed, &[TAG_SUBSAMPLE]);
            let sub = if config.stratified {
                subsample_stratified(&train, SampleSize::Count(size), sub_seed)
            } else {
                subsample(&train, SampleSize::Count(size), sub_seed)
            }
            .map_err(in_cell)?;
            let accuracy =
                run_cell(method, &sub, &test, num_aug, seed, &params).map_err(in_cell)?;
            Ok(CellResult {
                method,
                train_size: size,
                num_aug,
                seed,
                accuracy,
            })
        })
        .collect::<Result<_>>()?;

    cells.sort_by_key(|c| (c.method, c.train_size, c.num_aug, c.seed));
    let aggregates = aggregate(&cells);
    Ok(EvalReport {
        schema_version: REPORT_SCHEMA_VERSION,
        cells,
        aggregates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{write_tsv, LabeledExample};
    use crate::ratio::Ratio;
    use crate::rng::RngStream;

    /// Two-class corpus with class-typical and shared words.
    fn synthetic_corpus(n: usize, seed: u64) -> Corpus {
        let pos = ["charming", "warm", "deft", "radiant", "tender"];
        let neg = ["plodding", "stale", "clumsy", "hollow", "grating"];
        let shared = ["the", "film", "story", "scenes", "with", "a", "tone", "."];
        let mut rng = RngStream::new(seed);
        let examples = (0..n)
            .map(|i| {
                let positive = i % 2 == 0;
                let own: &[&str] = if positive { &pos } else { &neg };
                let mut words = Vec::new();
                for _ in 0..3 {
                    words.push(own[rng.next_below(own.len() as u64) as usize]);
                }
                for _ in 0..5 {
                    words.push(shared[rng.next_below(shared.len() as u64) as usize]);
                }
                LabeledExample::new(if positive { "1" } else { "0" }, words.join(" ")).unwrap()
            })
            .collect();
        Corpus::new(examples)
    }

    fn write_corpora(dir: &Path) -> (PathBuf, PathBuf) {
        let train = dir.join("train.tsv");
        let test = dir.join("test.tsv");
        write_tsv(&synthetic_corpus(60, 1), &train).unwrap();
        write_tsv(&synthetic_corpus(40, 2), &test).unwrap();
        (train, test)
    }

    fn base_config(train: PathBuf, test: PathBuf) -> ExperimentConfig {
        ExperimentConfig {
            train_path: train,
            test_path: test,
            methods: vec![Method::Original, Method::Eda, Method::Aeda],
            // one absolute count and one fraction (1/2 of 60 -> 30)
            sizes: vec![
                SampleSize::Count(20),
                SampleSize::Fraction(Ratio::new(1, 2).unwrap()),
            ],
            num_augs: vec![2],
            seeds: vec![0, 1, 2, 3, 4],
            aeda: AedaParams::default(),
            eda: EdaParams::default(),
            lexicon_path: None,
            stopwords_path: None,
            smoothing: 1.0,
            stratified: false,
        }
    }

    #[test]
    fn grid_of_thirty_cells() {
        let dir = tempfile::tempdir().unwrap();
        let (train, test) = write_corpora(dir.path());
        let report = run_experiment(&base_config(train, test)).unwrap();
        let (methods, sizes, num_augs, seeds) = (3, 2, 1, 5);
        assert_eq!(report.cells.len(), methods * sizes * num_augs * seeds);
        assert_eq!(report.schema_version, REPORT_SCHEMA_VERSION);
        // canonical order
        let mut sorted = report.cells.clone();
        sorted.sort_by_key(|c| (c.method, c.train_size, c.num_aug, c.seed));
        assert_eq!(report.cells, sorted);
    }

    #[test]
    fn aggregate_mean_of_two_cells() {
        let cells = vec![
            CellResult {
                method: Method::Aeda,
                train_size: 10,
                num_aug: 1,
                seed: 0,
                accuracy: 0.8,
            },
            CellResult {
                method: Method::Aeda,
                train_size: 10,
                num_aug: 1,
                seed: 1,
                accuracy: 0.9,
            },
        ];
        let aggs = aggregate(&cells);
        assert_eq!(aggs.len(), 1);
        assert!((aggs[0].mean - 0.85).abs() < 1e-12);
        assert_eq!(aggs[0].n_seeds, 2);
        assert!((aggs[0].stddev - 0.05).abs() < 1e-12);
    }

    fn agg(method: Method, mean: f64) -> Aggregate {
        Aggregate {
            method,
            train_size: 500,
            num_aug: 16,
            n_seeds: 5,
            mean,
            stddev: 0.0,
        }
    }

    #[test]
    fn improvement_deltas_match_hand_arithmetic() {
        let report = EvalReport {
            schema_version: REPORT_SCHEMA_VERSION,
            cells: vec![],
            aggregates: vec![agg(Method::Original, 0.750), agg(Method::Aeda, 0.782)],
        };
        let table = improvement_table(&report).unwrap();
        assert_eq!(table.len(), 1);
        assert!((table[0].delta_points - 3.2).abs() < 1e-9);

        let report = EvalReport {
            schema_version: REPORT_SCHEMA_VERSION,
            cells: vec![],
            aggregates: vec![agg(Method::Original, 0.879), agg(Method::Eda, 0.863)],
        };
        let table = improvement_table(&report).unwrap();
        assert!((table[0].delta_points + 1.6).abs() < 1e-9);

        let report = EvalReport {
            schema_version: REPORT_SCHEMA_VERSION,
            cells: vec![],
            aggregates: vec![agg(Method::Original, 0.8), agg(Method::Aeda, 0.8)],
        };
        assert_eq!(improvement_table(&report).unwrap()[0].delta_points, 0.0);
    }

    #[test]
    fn improvement_requires_baseline() {
        let report = EvalReport {
            schema_version: REPORT_SCHEMA_VERSION,
            cells: vec![],
            aggregates: vec![agg(Method::Aeda, 0.9)],
        };
        assert!(improvement_table(&report).is_err());
    }

    #[test]
    fn original_ignores_num_aug_and_seed() {
        let train = synthetic_corpus(30, 3);
        let test = synthetic_corpus(20, 4);
        let params = CellParams::default();
        let a = run_cell(Method::Original, &train, &test, 0, 0, &params).unwrap();
        let b = run_cell(Method::Original, &train, &test, 9, 1234, &params).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn aeda_with_zero_augmentations_equals_original() {
        let train = synthetic_corpus(30, 5);
        let test = synthetic_corpus(20, 6);
        let params = CellParams::default();
        for seed in 0..5u64 {
            let original = run_cell(Method::Original, &train, &test, 0, seed, &params).unwrap();
            let degenerate = run_cell(Method::Aeda, &train, &test, 0, seed, &params).unwrap();
            assert_eq!(original, degenerate);
        }
    }

    #[test]
    fn augmentation_never_touches_the_test_set() {
        // An empty-text example is un-augmentable: if the harness ever fed
        // the test set through an augmenter, this would error out.
        let train = synthetic_corpus(30, 7);
        let mut test = synthetic_corpus(10, 8);
        test.examples
            .push(LabeledExample::new("1", "").unwrap());
        let params = CellParams::default();
        run_cell(Method::Aeda, &train, &test, 4, 0, &params).unwrap();
        run_cell(Method::Eda, &train, &test, 4, 0, &params).unwrap();
    }

    #[test]
    fn report_bytes_are_reproducible() {
        let dir = tempfile::tempdir().unwrap();
        let (train, test) = write_corpora(dir.path());
        let config = base_config(train, test);
        let a = run_experiment(&config).unwrap().to_json_string();
        let b = run_experiment(&config).unwrap().to_json_string();
        assert_eq!(a, b);
    }

    #[test]
    fn config_parse_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let (train, test) = write_corpora(dir.path());
        let content = format!(
            "# sweep over the toy corpus\n\
             train = {}\n\
             test = {}\n\
             methods = original, eda, aeda\n\
             sizes = 20, 0.5, full\n\
             num_augs = 0, 4\n\
             seeds = 0, 1, 2\n\
             ratio = 1/3\n\
             alpha_sr = 0.1\n\
             p_rd = 0.2\n\
             smoothing = 0.5\n",
            train.display(),
            test.display()
        );
        let config = ExperimentConfig::parse(&content, dir.path()).unwrap();
        assert_eq!(config.methods.len(), 3);
        assert_eq!(config.sizes[1], SampleSize::Fraction(Ratio::new(1, 2).unwrap()));
        assert_eq!(config.num_augs, vec![0, 4]);
        assert_eq!(config.eda.p_rd, 0.2);
        assert_eq!(config.smoothing, 0.5);
    }

    #[test]
    fn config_rejects_unknown_duplicate_and_missing_keys() {
        let base = Path::new(".");
        assert!(ExperimentConfig::parse("bogus = 1\n", base).is_err());
        let dup = "train = a\ntrain = b\n";
        assert!(ExperimentConfig::parse(dup, base).is_err());
        let missing = "train = a\ntest = b\nmethods = aeda\nsizes = 10\nnum_augs = 1\n";
        assert!(ExperimentConfig::parse(missing, base).is_err());
        let dup_seeds =
            "train = a\ntest = b\nmethods = aeda\nsizes = 10\nnum_augs = 1\nseeds = 3,3\n";
        assert!(ExperimentConfig::parse(dup_seeds, base).is_err());
    }

    #[test]
    fn relative_paths_resolve_against_config_dir() {
        let content = "train = data/train.tsv\ntest = /abs/test.tsv\nmethods = original\n\
                       sizes = 10\nnum_augs = 0\nseeds = 1\n";
        let config = ExperimentConfig::parse(content, Path::new("/cfg/dir")).unwrap();
        assert_eq!(config.train_path, Path::new("/cfg/dir/data/train.tsv"));
        assert_eq!(config.test_path, Path::new("/abs/test.tsv"));
    }

    #[test]
    fn csv_has_fixed_columns() {
        let report = EvalReport {
            schema_version: REPORT_SCHEMA_VERSION,
            cells: vec![CellResult {
                method: Method::Original,
                train_size: 10,
                num_aug: 0,
                seed: 7,
                accuracy: 0.5,
            }],
            aggregates: vec![],
        };
        assert_eq!(
            report.to_csv_string(),
            "method,train_size,num_aug,seed,accuracy\noriginal,10,0,7,0.5\n"
        );
    }
}
