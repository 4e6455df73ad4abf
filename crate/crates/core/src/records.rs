//! Bibliographic record types, the in-memory corpus, and doc-type filtering.
//!
//! Two ingestion formats are supported: a field-tagged flat file export
//! ([`tagged`]) and the canonical one-object-per-line interchange format
//! ([`jsonl`]). Both produce the same [`Corpus`].

use std::collections::BTreeMap;

use thiserror::Error;

mod jsonl;
mod tagged;

pub use jsonl::{parse_canonical_jsonlines, to_canonical_jsonlines};
pub use tagged::{parse_tagged_records, ParseReport, SkippedRecord};

/// Errors raised while ingesting record streams.
#[derive(Debug, Error)]
pub enum RecordError {
    /// A tagged record block is unusable (e.g. missing SO or PY).
    #[error("malformed record {ordinal}: {reason}")]
    MalformedRecord { ordinal: usize, reason: String },

    /// A canonical-format line is missing a required key.
    #[error("line {line}: missing key `{key}`")]
    SchemaError { line: usize, key: String },

    /// A canonical-format line is not valid JSON or has a wrong value type.
    #[error("line {line}: {message}")]
    InvalidLine { line: usize, message: String },
}

/// Document type of a record.
///
/// Only the four named variants are admissible to sampling; `Other` is
/// retained for audit but never sampled.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DocType {
    Article,
    ProceedingsPaper,
    Review,
    BookChapter,
    Other(String),
}

impl DocType {
    /// Parses a single doc-type label, case-insensitively.
    pub fn parse_label(label: &str) -> DocType {
        let trimmed = label.trim();
        match trimmed.to_ascii_lowercase().as_str() {
            "article" => DocType::Article,
            "proceedings paper" => DocType::ProceedingsPaper,
            "review" => DocType::Review,
            "book chapter" => DocType::BookChapter,
            _ => DocType::Other(trimmed.to_string()),
        }
    }

    /// Canonical display label.
    pub fn label(&self) -> &str {
        match self {
            DocType::Article => "Article",
            DocType::ProceedingsPaper => "Proceedings Paper",
            DocType::Review => "Review",
            DocType::BookChapter => "Book Chapter",
            DocType::Other(label) => label,
        }
    }

    /// The four doc types admissible to sampling.
    pub fn sampleable() -> [DocType; 4] {
        [
            DocType::Article,
            DocType::ProceedingsPaper,
            DocType::Review,
            DocType::BookChapter,
        ]
    }
}

/// Splits a possibly compound label ("Article; Proceedings Paper") into its
/// component doc types.
pub fn parse_doc_types(raw: &str) -> Vec<DocType> {
    let types: Vec<DocType> = raw
        .split(';')
        .map(str::trim)
        .filter(|part| !part.is_empty())
        .map(DocType::parse_label)
        .collect();
    if types.is_empty() {
        vec![DocType::Other(String::new())]
    } else {
        types
    }
}

/// Joins doc-type components back into the compound label form.
pub fn doc_types_label(types: &[DocType]) -> String {
    types
        .iter()
        .map(DocType::label)
        .collect::<Vec<_>>()
        .join("; ")
}

/// One author of an article together with the raw affiliation strings
/// attached to them in the source record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuthorEntry {
    pub display_name: String,
    /// May be empty when the source record carries no affiliation for the
    /// author.
    pub raw_affiliations: Vec<String>,
}

impl AuthorEntry {
    pub fn new(display_name: impl Into<String>) -> AuthorEntry {
        AuthorEntry {
            display_name: display_name.into(),
            raw_affiliations: Vec::new(),
        }
    }
}

/// Sort key used for reverse-chronological sampling: publication year, then
/// volume, then issue, then position in the source file. Absent volume/issue
/// order before any present value, so records lacking them fall back to file
/// sequence within their year.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct OrderKey {
    pub year: i32,
    pub volume: Option<u32>,
    pub issue: Option<u32>,
    pub sequence: u32,
}

/// One publication.
#[derive(Debug, Clone, PartialEq)]
pub struct ArticleRecord {
    /// Unique within a [`Corpus`].
    pub record_id: String,
    pub journal_name: String,
    pub pub_year: i32,
    pub volume: Option<u32>,
    pub issue: Option<u32>,
    /// Position in the source stream; breaks ordering ties so sampling is
    /// deterministic.
    pub record_sequence: u32,
    /// Components of the (possibly compound) doc-type label, in source order.
    pub doc_types: Vec<DocType>,
    pub authors: Vec<AuthorEntry>,
    pub author_keywords: Vec<String>,
    pub times_cited: u64,
}

impl ArticleRecord {
    pub fn order_key(&self) -> OrderKey {
        OrderKey {
            year: self.pub_year,
            volume: self.volume,
            issue: self.issue,
            sequence: self.record_sequence,
        }
    }

    /// Total number of authors (the N_i of the per-article tally).
    pub fn author_count(&self) -> usize {
        self.authors.len()
    }

    /// True when at least one author carries an affiliation string.
    pub fn has_affiliation_data(&self) -> bool {
        self.authors
            .iter()
            .any(|author| !author.raw_affiliations.is_empty())
    }

    /// True when any doc-type component is in `allowed`.
    pub fn matches_doc_types(&self, allowed: &[DocType]) -> bool {
        self.doc_types.iter().any(|t| allowed.contains(t))
    }
}

/// An immutable collection of article records with a journal index.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Corpus {
    articles: Vec<ArticleRecord>,
    journal_index: BTreeMap<String, Vec<usize>>,
}

impl Corpus {
    /// Builds a corpus, indexing articles by journal name. The index covers
    /// exactly the stored articles.
    pub fn from_articles(articles: Vec<ArticleRecord>) -> Corpus {
        let mut journal_index: BTreeMap<String, Vec<usize>> = BTreeMap::new();
        for (idx, article) in articles.iter().enumerate() {
            journal_index
                .entry(article.journal_name.clone())
                .or_default()
                .push(idx);
        }
        Corpus {
            articles,
            journal_index,
        }
    }

    pub fn articles(&self) -> &[ArticleRecord] {
        &self.articles
    }

    pub fn len(&self) -> usize {
        self.articles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.articles.is_empty()
    }

    pub fn journals(&self) -> impl Iterator<Item = &str> {
        self.journal_index.keys().map(String::as_str)
    }

    pub fn journal_count(&self) -> usize {
        self.journal_index.len()
    }

    pub fn contains_journal(&self, journal_name: &str) -> bool {
        self.journal_index.contains_key(journal_name)
    }

    /// Articles of one journal, in source order.
    pub fn articles_for(&self, journal_name: &str) -> Option<Vec<&ArticleRecord>> {
        self.journal_index
            .get(journal_name)
            .map(|ids| ids.iter().map(|&i| &self.articles[i]).collect())
    }

    /// Record ids of one journal, in source order.
    pub fn record_ids_for(&self, journal_name: &str) -> Option<Vec<&str>> {
        self.journal_index
            .get(journal_name)
            .map(|ids| ids.iter().map(|&i| self.articles[i].record_id.as_str()).collect())
    }

    /// Merges corpora into one, renumbering record ids and sequences so they
    /// stay unique and deterministic across input order.
    pub fn merge(parts: Vec<Corpus>) -> Corpus {
        let mut articles = Vec::new();
        for part in parts {
            articles.extend(part.articles);
        }
        for (idx, article) in articles.iter_mut().enumerate() {
            article.record_id = record_id_for(idx);
            article.record_sequence = idx as u32;
        }
        Corpus::from_articles(articles)
    }
}

/// Deterministic record id for the record at `ordinal` (0-based).
pub(crate) fn record_id_for(ordinal: usize) -> String {
    format!("r{:06}", ordinal + 1)
}

/// Returns a corpus containing exactly the articles with any doc-type
/// component in `allowed`; the journal index is rebuilt.
pub fn filter_doc_types(corpus: &Corpus, allowed: &[DocType]) -> Corpus {
    let kept: Vec<ArticleRecord> = corpus
        .articles()
        .iter()
        .filter(|article| article.matches_doc_types(allowed))
        .cloned()
        .collect();
    Corpus::from_articles(kept)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn article(id: &str, journal: &str, doc_types: Vec<DocType>) -> ArticleRecord {
        ArticleRecord {
            record_id: id.to_string(),
            journal_name: journal.to_string(),
            pub_year: 2020,
            volume: None,
            issue: None,
            record_sequence: 0,
            doc_types,
            authors: vec![AuthorEntry::new("Smith, J")],
            author_keywords: Vec::new(),
            times_cited: 0,
        }
    }

    #[test]
    fn doc_type_labels_round_trip() {
        for label in ["Article", "Proceedings Paper", "Review", "Book Chapter"] {
            assert_eq!(DocType::parse_label(label).label(), label);
        }
        assert_eq!(DocType::parse_label("ARTICLE"), DocType::Article);
        assert_eq!(
            DocType::parse_label("Editorial Material"),
            DocType::Other("Editorial Material".to_string())
        );
    }

    #[test]
    fn compound_doc_type_splits_into_components() {
        let types = parse_doc_types("Article; Proceedings Paper");
        assert_eq!(types, vec![DocType::Article, DocType::ProceedingsPaper]);
        assert_eq!(doc_types_label(&types), "Article; Proceedings Paper");
    }

    #[test]
    fn filter_keeps_allowed_types_only() {
        let corpus = Corpus::from_articles(vec![
            article("r1", "A", vec![DocType::Article]),
            article("r2", "B", vec![DocType::Other("Editorial".into())]),
        ]);
        let filtered = filter_doc_types(&corpus, &DocType::sampleable());
        assert_eq!(filtered.len(), 1);
        assert_eq!(filtered.articles()[0].record_id, "r1");
        assert!(filtered.contains_journal("A"));
        assert!(!filtered.contains_journal("B"));
    }

    #[test]
    fn filter_with_empty_allowed_set_empties_the_corpus() {
        let corpus = Corpus::from_articles(vec![article("r1", "A", vec![DocType::Article])]);
        let filtered = filter_doc_types(&corpus, &[]);
        assert!(filtered.is_empty());
        assert_eq!(filtered.journal_count(), 0);
    }

    #[test]
    fn compound_type_admitted_when_any_component_allowed() {
        let corpus = Corpus::from_articles(vec![article(
            "r1",
            "A",
            parse_doc_types("Article; Proceedings Paper"),
        )]);
        assert_eq!(filter_doc_types(&corpus, &[DocType::ProceedingsPaper]).len(), 1);
        assert_eq!(filter_doc_types(&corpus, &[DocType::Article]).len(), 1);
        assert_eq!(filter_doc_types(&corpus, &[DocType::Review]).len(), 0);
    }

    #[test]
    fn filter_count_matches_type_histogram() {
        let mut articles = Vec::new();
        let histogram = [
            (DocType::Article, 7usize),
            (DocType::Review, 3),
            (DocType::ProceedingsPaper, 2),
            (DocType::Other("Editorial".into()), 4),
            (DocType::BookChapter, 1),
        ];
        let mut n = 0;
        for (doc_type, count) in &histogram {
            for _ in 0..*count {
                articles.push(article(&format!("r{n}"), "J", vec![doc_type.clone()]));
                n += 1;
            }
        }
        let corpus = Corpus::from_articles(articles);
        let allowed = [DocType::Article, DocType::Review];
        let expected: usize = histogram
            .iter()
            .filter(|(t, _)| allowed.contains(t))
            .map(|(_, c)| *c)
            .sum();
        assert_eq!(filter_doc_types(&corpus, &allowed).len(), expected);
    }

    #[test]
    fn filtering_is_idempotent() {
        let corpus = Corpus::from_articles(vec![
            article("r1", "A", vec![DocType::Article]),
            article("r2", "A", vec![DocType::Review]),
            article("r3", "B", vec![DocType::Other("News Item".into())]),
        ]);
        let allowed = DocType::sampleable();
        let once = filter_doc_types(&corpus, &allowed);
        let twice = filter_doc_types(&once, &allowed);
        assert_eq!(once, twice);
    }

    #[test]
    fn journal_index_covers_articles_exactly_once() {
        let corpus = Corpus::from_articles(vec![
            article("r1", "A", vec![DocType::Article]),
            article("r2", "B", vec![DocType::Article]),
            article("r3", "A", vec![DocType::Article]),
        ]);
        let indexed: usize = corpus
            .journals()
            .map(|j| corpus.record_ids_for(j).unwrap().len())
            .sum();
        assert_eq!(indexed, corpus.len());
        let ids = corpus.record_ids_for("A").unwrap();
        assert_eq!(ids, vec!["r1", "r3"]);
    }

    #[test]
    fn order_key_sorts_year_then_volume_then_issue_then_sequence() {
        let key = |year, volume, issue, sequence| OrderKey {
            year,
            volume,
            issue,
            sequence,
        };
        assert!(key(2020, None, None, 0) > key(2019, Some(9), Some(9), 9));
        assert!(key(2020, Some(2), None, 0) > key(2020, Some(1), Some(4), 5));
        assert!(key(2020, Some(1), Some(2), 0) > key(2020, Some(1), Some(1), 5));
        assert!(key(2020, Some(1), Some(1), 6) > key(2020, Some(1), Some(1), 5));
        // Absent volume/issue order before any present value.
        assert!(key(2020, None, None, 9) < key(2020, Some(0), None, 0));
    }

    #[test]
    fn merge_renumbers_ids_uniquely() {
        let a = Corpus::from_articles(vec![article("r000001", "A", vec![DocType::Article])]);
        let b = Corpus::from_articles(vec![article("r000001", "B", vec![DocType::Article])]);
        let merged = Corpus::merge(vec![a, b]);
        assert_eq!(merged.len(), 2);
        assert_eq!(merged.articles()[0].record_id, "r000001");
        assert_eq!(merged.articles()[1].record_id, "r000002");
    }
}
