//! Parser for field-tagged flat-file exports.
//!
//! Each record is a block of lines beginning with two-letter tags (PT, AU,
//! TI, SO, DT, DE, C1, TC, PY, VL, IS). Continuation lines are indented three
//! spaces; a record ends with `ER` and the file ends with `EF`. Under `AU`
//! and `C1` each line is a separate entry (one author / one address clause);
//! under the other tags continuation lines extend the value.

use super::{
    parse_doc_types, record_id_for, ArticleRecord, AuthorEntry, Corpus, RecordError,
};

/// A record block that could not be assembled, with the 1-based block ordinal.
#[derive(Debug, Clone)]
pub struct SkippedRecord {
    pub ordinal: usize,
    pub reason: String,
}

/// Outcome of a lenient parse: the corpus plus skipped blocks and
/// non-fatal warnings (e.g. bracketed C1 names that match no author).
#[derive(Debug)]
pub struct ParseReport {
    pub corpus: Corpus,
    pub skipped: Vec<SkippedRecord>,
    pub warnings: Vec<String>,
}

/// Parses a field-tagged export. In strict mode the first unusable block
/// aborts the parse; otherwise unusable blocks are reported in the
/// [`ParseReport`] and skipped.
pub fn parse_tagged_records(input: &str, strict: bool) -> Result<ParseReport, RecordError> {
    let mut blocks: Vec<Vec<(String, String)>> = Vec::new();
    let mut current: Vec<(String, String)> = Vec::new();
    let mut current_tag: Option<String> = None;

    'lines: for raw_line in input.lines() {
        let line = raw_line.trim_end();
        if line.is_empty() {
            current_tag = None;
            continue;
        }
        if let Some(rest) = line.strip_prefix("   ") {
            // Continuation of the previous tag.
            let Some(tag) = current_tag.clone() else {
                continue;
            };
            let value = rest.trim().to_string();
            if tag == "AU" || tag == "C1" {
                current.push((tag, value));
            } else if let Some(last) = current.iter_mut().rev().find(|(t, _)| *t == tag) {
                if last.1.is_empty() {
                    last.1 = value;
                } else {
                    last.1.push(' ');
                    last.1.push_str(&value);
                }
            }
            continue;
        }
        let (tag, value) = match line.split_once(' ') {
            Some((tag, value)) => (tag.trim(), value.trim()),
            None => (line, ""),
        };
        match tag {
            "ER" => {
                blocks.push(std::mem::take(&mut current));
                current_tag = None;
            }
            "EF" => break 'lines,
            _ if tag.len() == 2 && tag.chars().all(|c| c.is_ascii_alphanumeric()) => {
                current.push((tag.to_string(), value.to_string()));
                current_tag = Some(tag.to_string());
            }
            // Header lines like "FN ..." have longer tags; ignore them.
            _ => {
                current_tag = None;
            }
        }
    }
    if !current.is_empty() {
        // Unterminated trailing block; treat it as a record.
        blocks.push(current);
    }

    let mut articles = Vec::new();
    let mut skipped = Vec::new();
    let mut warnings = Vec::new();
    for (index, block) in blocks.iter().enumerate() {
        let ordinal = index + 1;
        match assemble(block, ordinal, articles.len(), &mut warnings) {
            Ok(article) => articles.push(article),
            Err(reason) => {
                if strict {
                    return Err(RecordError::MalformedRecord { ordinal, reason });
                }
                skipped.push(SkippedRecord { ordinal, reason });
            }
        }
    }
    Ok(ParseReport {
        corpus: Corpus::from_articles(articles),
        skipped,
        warnings,
    })
}

fn assemble(
    block: &[(String, String)],
    ordinal: usize,
    accepted: usize,
    warnings: &mut Vec<String>,
) -> Result<ArticleRecord, String> {
    let single = |wanted: &str| -> Option<String> {
        let mut joined = String::new();
        for (tag, value) in block {
            if tag == wanted {
                if !joined.is_empty() {
                    joined.push(' ');
                }
                joined.push_str(value);
            }
        }
        if joined.is_empty() {
            None
        } else {
            Some(joined)
        }
    };

    let journal_name = single("SO").ok_or("missing SO (journal name)")?;
    let pub_year = single("PY")
        .ok_or("missing PY (publication year)")?
        .trim()
        .parse::<i32>()
        .map_err(|_| "unparseable PY (publication year)".to_string())?;
    let volume = single("VL").and_then(|v| v.trim().parse::<u32>().ok());
    let issue = single("IS").and_then(|v| v.trim().parse::<u32>().ok());
    let doc_types = match single("DT") {
        Some(label) => parse_doc_types(&label),
        None => vec![super::DocType::Other("Unspecified".to_string())],
    };
    let times_cited = single("TC")
        .and_then(|v| v.trim().parse::<u64>().ok())
        .unwrap_or(0);
    let author_keywords: Vec<String> = single("DE")
        .map(|de| {
            de.split(';')
                .map(str::trim)
                .filter(|k| !k.is_empty())
                .map(str::to_string)
                .collect()
        })
        .unwrap_or_default();

    let mut authors: Vec<AuthorEntry> = block
        .iter()
        .filter(|(tag, _)| tag == "AU")
        .map(|(_, name)| AuthorEntry::new(name.trim()))
        .filter(|a| !a.display_name.is_empty())
        .collect();

    for (tag, clause) in block {
        if tag != "C1" {
            continue;
        }
        attach_affiliation(clause, &mut authors, ordinal, warnings);
    }

    Ok(ArticleRecord {
        record_id: record_id_for(accepted),
        journal_name,
        pub_year,
        volume,
        issue,
        record_sequence: accepted as u32,
        doc_types,
        authors,
        author_keywords,
        times_cited,
    })
}

/// Attaches one C1 address clause. A leading `[Name; Name]` group restricts
/// the address to the bracketed authors (matched on normalized
/// surname + first initial); a clause with no bracket attaches to all
/// authors.
fn attach_affiliation(
    clause: &str,
    authors: &mut [AuthorEntry],
    ordinal: usize,
    warnings: &mut Vec<String>,
) {
    let clause = clause.trim();
    if clause.is_empty() {
        return;
    }
    if let Some(rest) = clause.strip_prefix('[') {
        let Some((names, address)) = rest.split_once(']') else {
            // Unclosed bracket; treat the whole clause as an address for all.
            attach_to_all(clause, authors, ordinal, warnings);
            return;
        };
        let address = address.trim_start_matches(|c: char| c == ',' || c.is_whitespace());
        if address.is_empty() {
            return;
        }
        for name in names.split(';') {
            let key = author_key(name);
            let mut matched = false;
            for author in authors.iter_mut() {
                if author_key(&author.display_name) == key {
                    author.raw_affiliations.push(address.to_string());
                    matched = true;
                }
            }
            if !matched {
                warnings.push(format!(
                    "record {ordinal}: C1 author \"{}\" matches no AU entry",
                    name.trim()
                ));
            }
        }
    } else {
        attach_to_all(clause, authors, ordinal, warnings);
    }
}

fn attach_to_all(
    address: &str,
    authors: &mut [AuthorEntry],
    ordinal: usize,
    warnings: &mut Vec<String>,
) {
    if authors.is_empty() {
        warnings.push(format!("record {ordinal}: C1 address with no AU entries"));
        return;
    }
    for author in authors.iter_mut() {
        author.raw_affiliations.push(address.trim().to_string());
    }
}

/// Normalized (surname, first-initial) pair used for C1 bracket matching:
/// lowercase, punctuation stripped.
fn author_key(name: &str) -> (String, Option<char>) {
    let name = name.trim();
    let (surname, given) = match name.split_once(',') {
        Some((s, g)) => (s, Some(g)),
        None => (name, None),
    };
    let surname: String = surname
        .chars()
        .map(|c| {
            if c.is_alphanumeric() {
                c.to_ascii_lowercase()
            } else {
                ' '
            }
        })
        .collect::<String>()
        .split_whitespace()
        .collect::<Vec<_>>()
        .join(" ");
    let initial = given.and_then(|g| {
        g.chars()
            .find(|c| c.is_alphabetic())
            .map(|c| c.to_ascii_lowercase())
    });
    (surname, initial)
}
