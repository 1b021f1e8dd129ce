//! Corpus ingestion, tokenization, and the seeded sampling that constructs
//! the adaptation setting (unlabeled target sample vs. held-out test set).

use std::collections::HashSet;
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Binary document label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Label {
    NonHate,
    Hate,
}

impl Label {
    /// Parse a label from the accepted vocabularies: `0`/`1` and
    /// `non-hate`/`hate` (case-insensitive).
    pub fn parse(s: &str) -> Option<Label> {
        match s.trim().to_lowercase().as_str() {
            "0" | "non-hate" | "nonhate" => Some(Label::NonHate),
            "1" | "hate" => Some(Label::Hate),
            _ => None,
        }
    }

    pub fn as_int(self) -> u8 {
        match self {
            Label::NonHate => 0,
            Label::Hate => 1,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::NonHate => write!(f, "non-hate"),
            Label::Hate => write!(f, "hate"),
        }
    }
}

/// A unit of text with tokens, an optional label, and a domain tag.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub id: String,
    pub raw_text: String,
    pub tokens: Vec<String>,
    pub label: Option<Label>,
    pub domain: String,
}

impl Document {
    /// Build a document; `tokens` is always derived from `raw_text`.
    pub fn new(
        id: impl Into<String>,
        raw_text: impl Into<String>,
        label: Option<Label>,
        domain: impl Into<String>,
    ) -> Document {
        let raw_text = raw_text.into();
        let tokens = tokenize(&raw_text);
        Document {
            id: id.into(),
            raw_text,
            tokens,
            label,
            domain: domain.into(),
        }
    }
}

/// An ordered collection of documents.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Corpus {
    pub name: String,
    pub documents: Vec<Document>,
    pub labeled: bool,
}

impl Corpus {
    /// Validates id uniqueness and, for labeled corpora, label presence.
    pub fn new(
        name: impl Into<String>,
        documents: Vec<Document>,
        labeled: bool,
    ) -> Result<Corpus, CorpusError> {
        let mut seen = HashSet::new();
        for doc in &documents {
            if !seen.insert(doc.id.clone()) {
                return Err(CorpusError::DuplicateId { id: doc.id.clone() });
            }
            if labeled && doc.label.is_none() {
                return Err(CorpusError::MissingLabel {
                    path: String::new(),
                    line: 0,
                    id: doc.id.clone(),
                });
            }
        }
        Ok(Corpus {
            name: name.into(),
            documents,
            labeled,
        })
    }

    pub fn len(&self) -> usize {
        self.documents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.documents.is_empty()
    }

    /// Documents carrying a specific label.
    pub fn with_label(&self, label: Label) -> Vec<&Document> {
        self.documents
            .iter()
            .filter(|d| d.label == Some(label))
            .collect()
    }

    /// A labeled sub-corpus holding only the documents with `label`.
    pub fn filter_label(&self, label: Label, name: impl Into<String>) -> Corpus {
        Corpus {
            name: name.into(),
            documents: self
                .documents
                .iter()
                .filter(|d| d.label == Some(label))
                .cloned()
                .collect(),
            labeled: self.labeled,
        }
    }
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("{path}:{line}: malformed record: {reason}")]
    MalformedRecord {
        path: String,
        line: usize,
        reason: String,
    },
    #[error("{path}:{line}: record {id:?} has no label but the corpus was declared labeled")]
    MissingLabel {
        path: String,
        line: usize,
        id: String,
    },
    #[error("duplicate document id {id:?}")]
    DuplicateId { id: String },
    #[error("corpus is empty")]
    EmptyCorpus,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Reserved slot marker used by the templating stage. `tokenize` never
/// emits it: a natural occurrence is rewritten to `rep_`.
pub const SLOT_TOKEN: &str = "REP";

fn is_word_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_'
}

/// Lowercase, split word-character runs, keep apostrophe suffixes such as
/// `'s` as single tokens, and emit runs of one repeated punctuation
/// character (`--`, `!!`) as one token each.
pub fn tokenize(text: &str) -> Vec<String> {
    let lowered = text.to_lowercase();
    let chars: Vec<char> = lowered.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if is_word_char(c) {
            let start = i;
            while i < chars.len() && is_word_char(chars[i]) {
                i += 1;
            }
            tokens.push(finish_word(chars[start..i].iter().collect()));
        } else if c == '\'' && i + 1 < chars.len() && is_word_char(chars[i + 1]) {
            // contraction suffix: the apostrophe plus the following run
            let start = i;
            i += 1;
            while i < chars.len() && is_word_char(chars[i]) {
                i += 1;
            }
            tokens.push(chars[start..i].iter().collect());
        } else {
            // a run of the same punctuation character is one token
            let start = i;
            while i < chars.len() && chars[i] == c {
                i += 1;
            }
            // an apostrophe run may not swallow a following contraction start
            if c == '\'' && i > start + 1 && i < chars.len() && is_word_char(chars[i]) {
                i -= 1;
            }
            tokens.push(chars[start..i].iter().collect());
        }
    }
    tokens
}

fn finish_word(w: String) -> String {
    if w == "rep" {
        "rep_".to_string()
    } else {
        w
    }
}

/// Input format accepted by [`load_corpus`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusFormat {
    Jsonl,
    Csv,
}

impl CorpusFormat {
    /// Infer the format from a file extension; defaults to JSONL.
    pub fn from_path(path: &Path) -> CorpusFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some("csv") => CorpusFormat::Csv,
            _ => CorpusFormat::Jsonl,
        }
    }
}

#[derive(Deserialize)]
struct JsonlRecord {
    id: String,
    text: String,
    #[serde(default)]
    label: Option<serde_json::Value>,
}

fn parse_label_value(value: &serde_json::Value) -> Option<Label> {
    match value {
        serde_json::Value::Number(n) => match n.as_i64() {
            Some(0) => Some(Label::NonHate),
            Some(1) => Some(Label::Hate),
            _ => None,
        },
        serde_json::Value::String(s) => Label::parse(s),
        _ => None,
    }
}

/// Load a corpus from disk. One document per record, in file order.
pub fn load_corpus(
    path: impl AsRef<Path>,
    format: CorpusFormat,
    labeled: bool,
) -> Result<Corpus, CorpusError> {
    let path = path.as_ref();
    let name = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("corpus")
        .to_string();
    load_corpus_as(path, format, labeled, &name, &name)
}

/// [`load_corpus`] with an explicit corpus name and per-document domain tag.
pub fn load_corpus_as(
    path: impl AsRef<Path>,
    format: CorpusFormat,
    labeled: bool,
    name: &str,
    domain: &str,
) -> Result<Corpus, CorpusError> {
    let path = path.as_ref();
    let documents = match format {
        CorpusFormat::Jsonl => load_jsonl(path, labeled, domain)?,
        CorpusFormat::Csv => load_csv(path, labeled, domain)?,
    };
    Corpus::new(name, documents, labeled)
}

fn load_jsonl(path: &Path, labeled: bool, domain: &str) -> Result<Vec<Document>, CorpusError> {
    let display = path.display().to_string();
    let reader = BufReader::new(File::open(path)?);
    let mut documents = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let record: JsonlRecord =
            serde_json::from_str(&line).map_err(|e| CorpusError::MalformedRecord {
                path: display.clone(),
                line: lineno,
                reason: e.to_string(),
            })?;
        let label = match &record.label {
            Some(v) => Some(parse_label_value(v).ok_or_else(|| CorpusError::MalformedRecord {
                path: display.clone(),
                line: lineno,
                reason: format!("unrecognized label {v}"),
            })?),
            None => None,
        };
        if labeled && label.is_none() {
            return Err(CorpusError::MissingLabel {
                path: display.clone(),
                line: lineno,
                id: record.id.clone(),
            });
        }
        documents.push(Document::new(
            record.id,
            record.text,
            if labeled { label } else { None },
            domain,
        ));
    }
    Ok(documents)
}

fn load_csv(path: &Path, labeled: bool, domain: &str) -> Result<Vec<Document>, CorpusError> {
    let display = path.display().to_string();
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .from_path(path)
        .map_err(|e| CorpusError::MalformedRecord {
            path: display.clone(),
            line: 1,
            reason: e.to_string(),
        })?;
    let headers = reader
        .headers()
        .map_err(|e| CorpusError::MalformedRecord {
            path: display.clone(),
            line: 1,
            reason: e.to_string(),
        })?
        .clone();
    let col = |name: &str| headers.iter().position(|h| h == name);
    let id_col = col("id").ok_or_else(|| CorpusError::MalformedRecord {
        path: display.clone(),
        line: 1,
        reason: "missing `id` column".into(),
    })?;
    let text_col = col("text").ok_or_else(|| CorpusError::MalformedRecord {
        path: display.clone(),
        line: 1,
        reason: "missing `text` column".into(),
    })?;
    let label_col = col("label");

    let mut documents = Vec::new();
    for (idx, row) in reader.records().enumerate() {
        let lineno = idx + 2; // header is line 1
        let row = row.map_err(|e| CorpusError::MalformedRecord {
            path: display.clone(),
            line: lineno,
            reason: e.to_string(),
        })?;
        let field = |c: usize| row.get(c).unwrap_or("");
        let id = field(id_col).to_string();
        let text = field(text_col).to_string();
        let raw_label = label_col.map(|c| field(c)).unwrap_or("");
        let label = if raw_label.trim().is_empty() {
            None
        } else {
            Some(
                Label::parse(raw_label).ok_or_else(|| CorpusError::MalformedRecord {
                    path: display.clone(),
                    line: lineno,
                    reason: format!("unrecognized label {raw_label:?}"),
                })?,
            )
        };
        if labeled && label.is_none() {
            return Err(CorpusError::MissingLabel {
                path: display.clone(),
                line: lineno,
                id,
            });
        }
        documents.push(Document::new(
            id,
            text,
            if labeled { label } else { None },
            domain,
        ));
    }
    Ok(documents)
}

#[derive(Serialize)]
struct JsonlOut<'a> {
    id: &'a str,
    text: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<u8>,
}

/// Persist a corpus as JSONL (`id`, `text`, and `label` when present).
pub fn write_corpus_jsonl(corpus: &Corpus, path: impl AsRef<Path>) -> Result<(), CorpusError> {
    let mut out = BufWriter::new(File::create(path)?);
    for doc in &corpus.documents {
        let record = JsonlOut {
            id: &doc.id,
            text: &doc.raw_text,
            label: doc.label.map(Label::as_int),
        };
        serde_json::to_writer(&mut out, &record).map_err(|e| {
            CorpusError::MalformedRecord {
                path: String::new(),
                line: 0,
                reason: e.to_string(),
            }
        })?;
        out.write_all(b"\n")?;
    }
    out.flush()?;
    Ok(())
}

/// Deterministic index split: Fisher-Yates shuffle of `0..n` driven by
/// ChaCha8 seeded with `seed`; the first `floor(fraction * n)` shuffled
/// indices form the sample. Both halves are returned in ascending order.
fn split_indices(n: usize, fraction: f64, seed: u64) -> (Vec<usize>, Vec<usize>) {
    let m = (fraction * n as f64).floor() as usize;
    let mut indices: Vec<usize> = (0..n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    indices.shuffle(&mut rng);
    let mut sample = indices[..m].to_vec();
    let mut rest = indices[m..].to_vec();
    sample.sort_unstable();
    rest.sort_unstable();
    (sample, rest)
}

/// Partition a corpus into (`fraction` part, remainder), keeping labels on
/// both sides. Outputs preserve the original document order.
pub fn split_fraction(
    corpus: &Corpus,
    fraction: f64,
    seed: u64,
) -> Result<(Corpus, Corpus), CorpusError> {
    if corpus.is_empty() {
        return Err(CorpusError::EmptyCorpus);
    }
    let (sample_idx, rest_idx) = split_indices(corpus.len(), fraction, seed);
    let pick = |indices: &[usize], suffix: &str| Corpus {
        name: format!("{}-{}", corpus.name, suffix),
        documents: indices
            .iter()
            .map(|&i| corpus.documents[i].clone())
            .collect(),
        labeled: corpus.labeled,
    };
    Ok((pick(&sample_idx, "sample"), pick(&rest_idx, "rest")))
}

/// Construct the adaptation setting: a label-stripped sample of
/// `floor(fraction * n)` documents plus the labeled remainder as test set.
pub fn sample_unlabeled(
    corpus: &Corpus,
    fraction: f64,
    seed: u64,
) -> Result<(Corpus, Corpus), CorpusError> {
    let (mut unlabeled, mut test) = split_fraction(corpus, fraction, seed)?;
    unlabeled.name = format!("{}-unlabeled", corpus.name);
    unlabeled.labeled = false;
    for doc in &mut unlabeled.documents {
        doc.label = None;
    }
    test.name = format!("{}-test", corpus.name);
    Ok((unlabeled, test))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::io::Write as _;

    #[test]
    fn tokenize_table_sentences() {
        assert_eq!(
            tokenize("Bananas are very yucky!"),
            vec!["bananas", "are", "very", "yucky", "!"]
        );
        assert_eq!(tokenize(""), Vec::<String>::new());
        assert_eq!(tokenize("Honda CRV's"), vec!["honda", "crv", "'s"]);
        assert_eq!(
            tokenize("The problem with Honda CRV's is that they are boring"),
            vec!["the", "problem", "with", "honda", "crv", "'s", "is", "that", "they", "are", "boring"]
        );
        assert_eq!(
            tokenize("I hate Sundays -- they are so dull"),
            vec!["i", "hate", "sundays", "--", "they", "are", "so", "dull"]
        );
    }

    #[test]
    fn tokenize_punctuation_runs_and_contractions() {
        assert_eq!(tokenize("wait... what?!"), vec!["wait", "...", "what", "?", "!"]);
        assert_eq!(tokenize("don't"), vec!["don", "'t"]);
        assert_eq!(tokenize("dogs'"), vec!["dogs", "'"]);
        assert_eq!(tokenize("''s"), vec!["'", "'s"]);
        assert_eq!(tokenize("rock 'n' roll"), vec!["rock", "'n", "'", "roll"]);
    }

    #[test]
    fn tokenize_reserves_slot_token() {
        assert_eq!(tokenize("they are REP"), vec!["they", "are", "rep_"]);
        assert_eq!(tokenize("rep"), vec!["rep_"]);
        // the rewritten form is stable under re-tokenization
        assert_eq!(tokenize("rep_"), vec!["rep_"]);
    }

    proptest! {
        #[test]
        fn tokenize_idempotent_and_lowercase(text in "\\PC{0,60}") {
            let tokens = tokenize(&text);
            for t in &tokens {
                prop_assert!(!t.is_empty());
                prop_assert_eq!(t.to_lowercase(), t.clone());
                prop_assert_ne!(t.as_str(), SLOT_TOKEN);
            }
            let rejoined = tokens.join(" ");
            prop_assert_eq!(tokenize(&rejoined), tokens);
        }
    }

    fn corpus_of(n: usize) -> Corpus {
        let docs = (0..n)
            .map(|i| {
                Document::new(
                    format!("d{i}"),
                    format!("text number {i}"),
                    Some(if i % 2 == 0 { Label::Hate } else { Label::NonHate }),
                    "test",
                )
            })
            .collect();
        Corpus::new("toy", docs, true).unwrap()
    }

    #[test]
    fn sample_floor_and_partition() {
        let corpus = corpus_of(9);
        let (unlabeled, test) = sample_unlabeled(&corpus, 0.1, 0).unwrap();
        assert_eq!(unlabeled.len(), 0); // floor(0.9)
        assert_eq!(test.len(), 9);

        let corpus = corpus_of(30);
        let (unlabeled, test) = sample_unlabeled(&corpus, 0.1, 0).unwrap();
        assert_eq!(unlabeled.len(), 3);
        assert_eq!(test.len(), 27);
        assert!(unlabeled.documents.iter().all(|d| d.label.is_none()));
        assert!(!unlabeled.labeled);
        assert!(test.documents.iter().all(|d| d.label.is_some()));
    }

    #[test]
    fn sample_fraction_zero_is_identity() {
        let corpus = corpus_of(5);
        let (unlabeled, test) = sample_unlabeled(&corpus, 0.0, 3).unwrap();
        assert!(unlabeled.is_empty());
        assert_eq!(test.len(), 5);
        assert_eq!(
            test.documents.iter().map(|d| d.id.as_str()).collect::<Vec<_>>(),
            vec!["d0", "d1", "d2", "d3", "d4"]
        );
    }

    /// Independent oracle for the documented shuffle: Fisher-Yates over
    /// 0..n with ChaCha8(seed), exactly as `rand` implements `shuffle`.
    fn oracle_split(n: usize, fraction: f64, seed: u64) -> (Vec<usize>, Vec<usize>) {
        use rand::Rng;
        let mut indices: Vec<usize> = (0..n).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in (1..n).rev() {
            let j = rng.gen_range(0..=i);
            indices.swap(i, j);
        }
        let m = (fraction * n as f64).floor() as usize;
        let mut sample = indices[..m].to_vec();
        let mut rest = indices[m..].to_vec();
        sample.sort_unstable();
        rest.sort_unstable();
        (sample, rest)
    }

    #[test]
    fn sample_matches_shuffle_oracle_and_golden() {
        let corpus = corpus_of(10);
        let (unlabeled, test) = sample_unlabeled(&corpus, 0.5, 7).unwrap();
        let (sample_idx, rest_idx) = oracle_split(10, 0.5, 7);
        let ids = |idx: &[usize]| idx.iter().map(|&i| format!("d{i}")).collect::<Vec<_>>();
        assert_eq!(
            unlabeled.documents.iter().map(|d| d.id.clone()).collect::<Vec<_>>(),
            ids(&sample_idx)
        );
        assert_eq!(
            test.documents.iter().map(|d| d.id.clone()).collect::<Vec<_>>(),
            ids(&rest_idx)
        );
        // frozen golden value for (n=10, fraction=0.5, seed=7)
        let got: Vec<String> = unlabeled.documents.iter().map(|d| d.id.clone()).collect();
        assert_eq!(got, GOLDEN_SPLIT_10_05_7, "seeded split drifted");
    }

    const GOLDEN_SPLIT_10_05_7: [&str; 5] = ["d0", "d3", "d5", "d8", "d9"];

    proptest! {
        #[test]
        fn sample_is_a_partition(n in 1usize..40, fraction in 0.0f64..1.0, seed in 0u64..50) {
            let corpus = corpus_of(n);
            let (unlabeled, test) = sample_unlabeled(&corpus, fraction, seed).unwrap();
            prop_assert_eq!(unlabeled.len() + test.len(), n);
            prop_assert_eq!(unlabeled.len(), (fraction * n as f64).floor() as usize);
            let mut ids: Vec<&str> = unlabeled.documents.iter().chain(&test.documents).map(|d| d.id.as_str()).collect();
            ids.sort_unstable();
            let mut expect: Vec<String> = (0..n).map(|i| format!("d{i}")).collect();
            expect.sort();
            prop_assert_eq!(ids, expect.iter().map(|s| s.as_str()).collect::<Vec<_>>());

            let (u2, t2) = sample_unlabeled(&corpus, fraction, seed).unwrap();
            prop_assert_eq!(unlabeled, u2);
            prop_assert_eq!(test, t2);
        }
    }

    #[test]
    fn load_jsonl_basic() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.jsonl");
        std::fs::write(
            &path,
            "{\"id\":\"a1\",\"text\":\"x y\",\"label\":1}\n{\"id\":\"a2\",\"text\":\"z\",\"label\":\"non-hate\"}\n",
        )
        .unwrap();
        let corpus = load_corpus(&path, CorpusFormat::Jsonl, true).unwrap();
        assert_eq!(corpus.len(), 2);
        assert_eq!(corpus.documents[0].id, "a1");
        assert_eq!(corpus.documents[0].tokens, vec!["x", "y"]);
        assert_eq!(corpus.documents[0].label, Some(Label::Hate));
        assert_eq!(corpus.documents[1].label, Some(Label::NonHate));
    }

    #[test]
    fn load_jsonl_missing_label() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.jsonl");
        std::fs::write(&path, "{\"id\":\"a1\",\"text\":\"x\"}\n").unwrap();
        let err = load_corpus(&path, CorpusFormat::Jsonl, true).unwrap_err();
        assert!(matches!(err, CorpusError::MissingLabel { line: 1, .. }), "{err}");
    }

    #[test]
    fn load_jsonl_malformed_reports_line() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.jsonl");
        std::fs::write(&path, "{\"id\":\"a1\",\"text\":\"x\",\"label\":0}\nnot json\n").unwrap();
        let err = load_corpus(&path, CorpusFormat::Jsonl, true).unwrap_err();
        assert!(matches!(err, CorpusError::MalformedRecord { line: 2, .. }), "{err}");
    }

    #[test]
    fn load_jsonl_duplicate_id() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.jsonl");
        std::fs::write(
            &path,
            "{\"id\":\"a\",\"text\":\"x\",\"label\":0}\n{\"id\":\"a\",\"text\":\"y\",\"label\":1}\n",
        )
        .unwrap();
        let err = load_corpus(&path, CorpusFormat::Jsonl, true).unwrap_err();
        assert!(matches!(err, CorpusError::DuplicateId { .. }), "{err}");
    }

    #[test]
    fn load_csv_in_order() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.csv");
        let mut f = File::create(&path).unwrap();
        writeln!(f, "id,text,label").unwrap();
        writeln!(f, "r1,\"first, with comma\",hate").unwrap();
        writeln!(f, "r2,second,0").unwrap();
        writeln!(f, "r3,third,1").unwrap();
        drop(f);
        let corpus = load_corpus(&path, CorpusFormat::Csv, true).unwrap();
        assert_eq!(corpus.len(), 3);
        let ids: Vec<_> = corpus.documents.iter().map(|d| d.id.as_str()).collect();
        assert_eq!(ids, vec!["r1", "r2", "r3"]);
        assert_eq!(corpus.documents[0].label, Some(Label::Hate));
        assert_eq!(corpus.documents[1].label, Some(Label::NonHate));
    }

    #[test]
    fn unlabeled_load_ignores_labels() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.jsonl");
        std::fs::write(&path, "{\"id\":\"a1\",\"text\":\"x\",\"label\":1}\n").unwrap();
        let corpus = load_corpus(&path, CorpusFormat::Jsonl, false).unwrap();
        assert_eq!(corpus.documents[0].label, None);
        assert!(!corpus.labeled);
    }

    #[test]
    fn corpus_roundtrip_jsonl() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.jsonl");
        let corpus = corpus_of(4);
        write_corpus_jsonl(&corpus, &path).unwrap();
        let loaded = load_corpus_as(&path, CorpusFormat::Jsonl, true, "toy", "test").unwrap();
        assert_eq!(loaded, corpus);
    }
}
