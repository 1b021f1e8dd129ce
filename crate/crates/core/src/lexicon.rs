//! Hate lexicon loading/consolidation and token-level weak labeling of
//! source hate-speech sentences for tagger training.

use std::collections::BTreeSet;
use std::fmt;
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::{tokenize, Corpus, Label};

/// A set of lowercase unigram tokens plus the original multi-token phrases.
/// Every token of every phrase is consolidated into `unigrams`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lexicon {
    pub unigrams: BTreeSet<String>,
    pub phrases: BTreeSet<Vec<String>>,
    pub source_name: String,
}

impl Lexicon {
    pub fn new(source_name: impl Into<String>) -> Lexicon {
        Lexicon {
            unigrams: BTreeSet::new(),
            phrases: BTreeSet::new(),
            source_name: source_name.into(),
        }
    }

    /// Build from unigram tokens only (how target-domain lexicons arise).
    pub fn from_unigrams(
        unigrams: impl IntoIterator<Item = String>,
        source_name: impl Into<String>,
    ) -> Lexicon {
        Lexicon {
            unigrams: unigrams.into_iter().collect(),
            phrases: BTreeSet::new(),
            source_name: source_name.into(),
        }
    }

    /// Tokenize an entry and fold it in: multi-token entries are stored as
    /// phrases and their tokens merged into the unigram set.
    pub fn add_entry(&mut self, entry: &str) {
        let tokens = tokenize(entry);
        if tokens.is_empty() {
            return;
        }
        if tokens.len() > 1 {
            self.phrases.insert(tokens.clone());
        }
        self.unigrams.extend(tokens);
    }

    pub fn is_empty(&self) -> bool {
        self.unigrams.is_empty()
    }

    pub fn len(&self) -> usize {
        self.unigrams.len()
    }

    pub fn contains(&self, token: &str) -> bool {
        self.unigrams.contains(token)
    }

    /// Unigrams in deterministic (sorted) order.
    pub fn sorted_unigrams(&self) -> Vec<&str> {
        self.unigrams.iter().map(|s| s.as_str()).collect()
    }

    /// Number of unigrams shared with another lexicon.
    pub fn overlap_count(&self, other: &Lexicon) -> usize {
        self.unigrams.intersection(&other.unigrams).count()
    }
}

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("lexicon {path:?} has no non-blank entries")]
    EmptyLexicon { path: String },
    #[error("document {id:?} is not hate-labeled; weak labeling uses hate examples only")]
    NonHateInput { id: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Load a lexicon file (one term or phrase per line, `#` comments) and
/// consolidate phrase tokens into the unigram set.
pub fn load_and_consolidate(path: impl AsRef<Path>) -> Result<Lexicon, LexiconError> {
    let path = path.as_ref();
    let name = path
        .file_stem()
        .and_then(|s| s.to_str())
        .unwrap_or("lexicon")
        .to_string();
    let reader = BufReader::new(File::open(path)?);
    let mut lexicon = Lexicon::new(name);
    for line in reader.lines() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        lexicon.add_entry(trimmed);
    }
    if lexicon.is_empty() {
        return Err(LexiconError::EmptyLexicon {
            path: path.display().to_string(),
        });
    }
    Ok(lexicon)
}

/// Persist unigrams one per line, sorted.
pub fn write_lexicon(lexicon: &Lexicon, path: impl AsRef<Path>) -> Result<(), LexiconError> {
    let mut out = BufWriter::new(File::create(path)?);
    for token in lexicon.sorted_unigrams() {
        writeln!(out, "{token}")?;
    }
    out.flush()?;
    Ok(())
}

/// Per-token tag over the {OTG, O} label set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Tag {
    #[serde(rename = "O")]
    O,
    #[serde(rename = "OTG")]
    Otg,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tag::O => write!(f, "O"),
            Tag::Otg => write!(f, "OTG"),
        }
    }
}

/// A sentence with one tag per token.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TaggedSentence {
    pub doc_id: String,
    pub tokens: Vec<String>,
    pub tags: Vec<Tag>,
}

impl TaggedSentence {
    /// Panics if `tags` and `tokens` lengths differ; use `validate` for
    /// untrusted input.
    pub fn new(doc_id: impl Into<String>, tokens: Vec<String>, tags: Vec<Tag>) -> TaggedSentence {
        assert_eq!(tokens.len(), tags.len(), "tags must align with tokens");
        TaggedSentence {
            doc_id: doc_id.into(),
            tokens,
            tags,
        }
    }

    pub fn validate(&self) -> bool {
        self.tokens.len() == self.tags.len()
    }

    pub fn otg_count(&self) -> usize {
        self.tags.iter().filter(|t| **t == Tag::Otg).count()
    }
}

/// Read tagged sentences from JSONL, checking tag/token alignment.
pub fn read_tagged_jsonl(path: impl AsRef<Path>) -> Result<Vec<TaggedSentence>, std::io::Error> {
    let reader = BufReader::new(File::open(path)?);
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let sentence: TaggedSentence = serde_json::from_str(&line).map_err(|e| {
            std::io::Error::new(
                std::io::ErrorKind::InvalidData,
                format!("line {}: {e}", idx + 1),
            )
        })?;
        if !sentence.validate() {
            return Err(std::io::Error::new(
                std::io::ErrorKind::InvalidData,
                format!("line {}: tags do not align with tokens", idx + 1),
            ));
        }
        out.push(sentence);
    }
    Ok(out)
}

pub fn write_tagged_jsonl(
    sentences: &[TaggedSentence],
    path: impl AsRef<Path>,
) -> Result<(), std::io::Error> {
    let mut out = BufWriter::new(File::create(path)?);
    for sentence in sentences {
        serde_json::to_writer(&mut out, sentence)
            .map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e))?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

/// Weak-label hate documents: a token is OTG iff it matches a lexicon
/// unigram or lies inside a contiguous phrase match; everything else is O.
pub fn weak_label(
    hate_docs: &Corpus,
    lexicon: &Lexicon,
) -> Result<Vec<TaggedSentence>, LexiconError> {
    for doc in &hate_docs.documents {
        if doc.label != Some(Label::Hate) {
            return Err(LexiconError::NonHateInput { id: doc.id.clone() });
        }
    }
    Ok(hate_docs
        .documents
        .iter()
        .map(|doc| TaggedSentence {
            doc_id: doc.id.clone(),
            tokens: doc.tokens.clone(),
            tags: label_tokens(&doc.tokens, lexicon),
        })
        .collect())
}

/// Tag a token sequence against a lexicon (unigram or phrase-span match).
pub fn label_tokens(tokens: &[String], lexicon: &Lexicon) -> Vec<Tag> {
    let mut otg = vec![false; tokens.len()];
    for (i, token) in tokens.iter().enumerate() {
        if lexicon.contains(token) {
            otg[i] = true;
        }
    }
    for phrase in &lexicon.phrases {
        if phrase.len() > tokens.len() {
            continue;
        }
        for start in 0..=(tokens.len() - phrase.len()) {
            if tokens[start..start + phrase.len()] == phrase[..] {
                for flag in &mut otg[start..start + phrase.len()] {
                    *flag = true;
                }
            }
        }
    }
    otg.into_iter()
        .map(|hit| if hit { Tag::Otg } else { Tag::O })
        .collect()
}

/// Number of sentences that contain no OTG tag at all (kept in training;
/// reported for the pipeline manifest).
pub fn count_all_o(sentences: &[TaggedSentence]) -> usize {
    sentences.iter().filter(|s| s.otg_count() == 0).count()
}
