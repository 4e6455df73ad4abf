//! Canonical one-object-per-line interchange format.
//!
//! This is the lossless format the pipeline round-trips through: every key
//! the corpus model carries appears on each line, UTF-8, one record per line.

use serde::{Deserialize, Serialize};

use super::{
    doc_types_label, parse_doc_types, record_id_for, ArticleRecord, AuthorEntry, Corpus,
    RecordError,
};

#[derive(Serialize, Deserialize)]
struct JsonRecord {
    journal: String,
    year: i32,
    #[serde(skip_serializing_if = "Option::is_none")]
    volume: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    issue: Option<u32>,
    doc_type: String,
    authors: Vec<JsonAuthor>,
    #[serde(default)]
    keywords: Vec<String>,
    #[serde(default)]
    times_cited: u64,
}

#[derive(Serialize, Deserialize)]
struct JsonAuthor {
    name: String,
    #[serde(default)]
    affiliations: Vec<String>,
}

const REQUIRED_KEYS: [&str; 4] = ["journal", "year", "doc_type", "authors"];

/// Parses the canonical one-object-per-line format. Blank lines are ignored.
pub fn parse_canonical_jsonlines(input: &str) -> Result<Corpus, RecordError> {
    let mut articles = Vec::new();
    for (index, line) in input.lines().enumerate() {
        let line_no = index + 1;
        if line.trim().is_empty() {
            continue;
        }
        let value: serde_json::Value =
            serde_json::from_str(line).map_err(|e| RecordError::InvalidLine {
                line: line_no,
                message: e.to_string(),
            })?;
        let object = value.as_object().ok_or_else(|| RecordError::InvalidLine {
            line: line_no,
            message: "expected a JSON object".to_string(),
        })?;
        for key in REQUIRED_KEYS {
            if !object.contains_key(key) {
                return Err(RecordError::SchemaError {
                    line: line_no,
                    key: key.to_string(),
                });
            }
        }
        let record: JsonRecord =
            serde_json::from_value(value).map_err(|e| RecordError::InvalidLine {
                line: line_no,
                message: e.to_string(),
            })?;
        let ordinal = articles.len();
        articles.push(ArticleRecord {
            record_id: record_id_for(ordinal),
            journal_name: record.journal,
            pub_year: record.year,
            volume: record.volume,
            issue: record.issue,
            record_sequence: ordinal as u32,
            doc_types: parse_doc_types(&record.doc_type),
            authors: record
                .authors
                .into_iter()
                .map(|a| AuthorEntry {
                    display_name: a.name,
                    raw_affiliations: a.affiliations,
                })
                .collect(),
            author_keywords: record.keywords,
            times_cited: record.times_cited,
        });
    }
    Ok(Corpus::from_articles(articles))
}

/// Serializes a corpus to the canonical format, one record per line in
/// storage order. Deterministic: identical corpora give identical bytes.
pub fn to_canonical_jsonlines(corpus: &Corpus) -> String {
    let mut out = String::new();
    for article in corpus.articles() {
        let record = JsonRecord {
            journal: article.journal_name.clone(),
            year: article.pub_year,
            volume: article.volume,
            issue: article.issue,
            doc_type: doc_types_label(&article.doc_types),
            authors: article
                .authors
                .iter()
                .map(|a| JsonAuthor {
                    name: a.display_name.clone(),
                    affiliations: a.raw_affiliations.clone(),
                })
                .collect(),
            keywords: article.author_keywords.clone(),
            times_cited: article.times_cited,
        };
        out.push_str(&serde_json::to_string(&record).expect("record serialization"));
        out.push('\n');
    }
    out
}
