//! Keyword co-occurrence networks, institution output tables and the
//! institution collaboration network.
//!
//! Institution credit here uses whole counting: an article credits every
//! distinct institution appearing in its affiliation strings once. Labels
//! are the raw first comma-segment of the affiliation, so no elite matching
//! is involved.

use std::collections::BTreeMap;

use crate::elite::normalize_name;
use crate::records::ArticleRecord;

/// An undirected weighted graph: no self-loops, each unordered pair at most
/// once, weights at least 1. Edge endpoints index into `nodes`.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedGraph {
    pub nodes: Vec<GraphNode>,
    pub edges: Vec<GraphEdge>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GraphNode {
    pub label: String,
    /// Number of articles the labelled item occurs in.
    pub occurrence_count: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GraphEdge {
    pub a: usize,
    pub b: usize,
    pub weight: u64,
}

impl WeightedGraph {
    pub fn edge_weight(&self, label_a: &str, label_b: &str) -> Option<u64> {
        let a = self.nodes.iter().position(|n| n.label == label_a)?;
        let b = self.nodes.iter().position(|n| n.label == label_b)?;
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        self.edges
            .iter()
            .find(|e| e.a == a && e.b == b)
            .map(|e| e.weight)
    }
}

/// A keyword co-occurrence graph together with the corpus-wide keyword
/// counts it was thresholded from.
#[derive(Debug, Clone)]
pub struct CooccurrenceReport {
    pub graph: WeightedGraph,
    /// Distinct normalized keywords across the input articles.
    pub total_keywords: usize,
    /// Keywords retained: incident to at least one edge meeting the
    /// co-occurrence threshold.
    pub displayed_keywords: usize,
}

/// Builds the keyword co-occurrence network. Keywords are normalized
/// (lowercased, trimmed); an edge's weight is the number of articles
/// containing both keywords; edges below `min_cooccurrence` are dropped and
/// only nodes incident to a retained edge are kept.
pub fn keyword_cooccurrence<'a, I>(articles: I, min_cooccurrence: u64) -> CooccurrenceReport
where
    I: IntoIterator<Item = &'a ArticleRecord>,
{
    let mut occurrences: BTreeMap<String, u64> = BTreeMap::new();
    let mut pair_weights: BTreeMap<(String, String), u64> = BTreeMap::new();
    for article in articles {
        let mut keywords: Vec<String> = article
            .author_keywords
            .iter()
            .map(|k| k.trim().to_lowercase())
            .filter(|k| !k.is_empty())
            .collect();
        keywords.sort();
        keywords.dedup();
        for keyword in &keywords {
            *occurrences.entry(keyword.clone()).or_insert(0) += 1;
        }
        for i in 0..keywords.len() {
            for j in (i + 1)..keywords.len() {
                let pair = (keywords[i].clone(), keywords[j].clone());
                *pair_weights.entry(pair).or_insert(0) += 1;
            }
        }
    }

    let retained: Vec<(&(String, String), &u64)> = pair_weights
        .iter()
        .filter(|(_, &w)| w >= min_cooccurrence)
        .collect();
    let mut displayed: Vec<&str> = retained
        .iter()
        .flat_map(|((a, b), _)| [a.as_str(), b.as_str()])
        .collect();
    displayed.sort();
    displayed.dedup();

    let index: BTreeMap<&str, usize> = displayed
        .iter()
        .enumerate()
        .map(|(i, &k)| (k, i))
        .collect();
    let nodes: Vec<GraphNode> = displayed
        .iter()
        .map(|&k| GraphNode {
            label: k.to_string(),
            occurrence_count: occurrences[k],
        })
        .collect();
    let edges: Vec<GraphEdge> = retained
        .iter()
        .map(|((a, b), &w)| GraphEdge {
            a: index[a.as_str()],
            b: index[b.as_str()],
            weight: w,
        })
        .collect();

    CooccurrenceReport {
        graph: WeightedGraph { nodes, edges },
        total_keywords: occurrences.len(),
        displayed_keywords: displayed.len(),
    }
}

/// One row of the institution output table.
#[derive(Debug, Clone, PartialEq)]
pub struct InstitutionRow {
    pub institution: String,
    /// Publications crediting the institution (whole counting).
    pub tp: u64,
    /// Percentage of the input articles crediting the institution.
    pub rho_pct: f64,
    /// Total citations of those publications.
    pub tc: u64,
    pub tc_per_tp: f64,
    /// Mean publication year of those publications.
    pub avg_py: f64,
}

/// One row of the citing-institution table.
#[derive(Debug, Clone, PartialEq)]
pub struct CitingInstitutionRow {
    pub institution: String,
    /// Citing papers crediting the institution (whole counting).
    pub cp: u64,
    pub rho_pct: f64,
    pub avg_py: f64,
}

/// Distinct institutions credited by one article: the normalized first
/// comma-segment of each affiliation string, with the first-seen raw segment
/// kept as the display label.
fn credited_institutions(article: &ArticleRecord) -> Vec<(String, String)> {
    let mut seen: BTreeMap<String, String> = BTreeMap::new();
    for author in &article.authors {
        for raw in &author.raw_affiliations {
            let Some(segment) = raw.split(',').next() else {
                continue;
            };
            let display = segment.trim();
            if display.is_empty() {
                continue;
            }
            let key = normalize_name(display);
            if key.is_empty() {
                continue;
            }
            seen.entry(key).or_insert_with(|| display.to_string());
        }
    }
    seen.into_iter().collect()
}

struct InstitutionAccumulator {
    display: String,
    articles: u64,
    citations: u64,
    year_sum: i64,
}

fn accumulate<'a, I>(articles: I) -> (BTreeMap<String, InstitutionAccumulator>, usize)
where
    I: IntoIterator<Item = &'a ArticleRecord>,
{
    let mut stats: BTreeMap<String, InstitutionAccumulator> = BTreeMap::new();
    let mut total = 0usize;
    for article in articles {
        total += 1;
        for (key, display) in credited_institutions(article) {
            let entry = stats.entry(key).or_insert_with(|| InstitutionAccumulator {
                display,
                articles: 0,
                citations: 0,
                year_sum: 0,
            });
            entry.articles += 1;
            entry.citations += article.times_cited;
            entry.year_sum += i64::from(article.pub_year);
        }
    }
    (stats, total)
}

/// Institutions with the greatest output over the input articles, whole
/// counted, sorted by publications then citations then name.
pub fn institution_output_table<'a, I>(articles: I, top_k: usize) -> Vec<InstitutionRow>
where
    I: IntoIterator<Item = &'a ArticleRecord>,
{
    let (stats, total) = accumulate(articles);
    let mut rows: Vec<InstitutionRow> = stats
        .into_values()
        .map(|acc| InstitutionRow {
            rho_pct: 100.0 * acc.articles as f64 / total as f64,
            tc_per_tp: acc.citations as f64 / acc.articles as f64,
            avg_py: acc.year_sum as f64 / acc.articles as f64,
            institution: acc.display,
            tp: acc.articles,
            tc: acc.citations,
        })
        .collect();
    rows.sort_by(|a, b| {
        b.tp.cmp(&a.tp)
            .then(b.tc.cmp(&a.tc))
            .then_with(|| a.institution.cmp(&b.institution))
    });
    rows.truncate(top_k);
    rows
}

/// Same whole-counting semantics over a corpus of citing papers.
pub fn citing_institution_table<'a, I>(citing_articles: I, top_k: usize) -> Vec<CitingInstitutionRow>
where
    I: IntoIterator<Item = &'a ArticleRecord>,
{
    let (stats, total) = accumulate(citing_articles);
    let mut rows: Vec<CitingInstitutionRow> = stats
        .into_values()
        .map(|acc| CitingInstitutionRow {
            rho_pct: 100.0 * acc.articles as f64 / total as f64,
            avg_py: acc.year_sum as f64 / acc.articles as f64,
            institution: acc.display,
            cp: acc.articles,
        })
        .collect();
    rows.sort_by(|a, b| {
        b.cp.cmp(&a.cp)
            .then_with(|| a.institution.cmp(&b.institution))
    });
    rows.truncate(top_k);
    rows
}

/// Builds the institution collaboration network: nodes are institutions,
/// and an edge's weight is the number of articles whose author set spans
/// both institutions.
pub fn collaboration_network<'a, I>(articles: I) -> WeightedGraph
where
    I: IntoIterator<Item = &'a ArticleRecord>,
{
    let mut occurrences: BTreeMap<String, (String, u64)> = BTreeMap::new();
    let mut pair_weights: BTreeMap<(String, String), u64> = BTreeMap::new();
    for article in articles {
        let credited = credited_institutions(article);
        for (key, display) in &credited {
            let entry = occurrences
                .entry(key.clone())
                .or_insert_with(|| (display.clone(), 0));
            entry.1 += 1;
        }
        for i in 0..credited.len() {
            for j in (i + 1)..credited.len() {
                let pair = (credited[i].0.clone(), credited[j].0.clone());
                *pair_weights.entry(pair).or_insert(0) += 1;
            }
        }
    }
    let index: BTreeMap<&str, usize> = occurrences
        .keys()
        .enumerate()
        .map(|(i, k)| (k.as_str(), i))
        .collect();
    let nodes: Vec<GraphNode> = occurrences
        .values()
        .map(|(display, count)| GraphNode {
            label: display.clone(),
            occurrence_count: *count,
        })
        .collect();
    let edges: Vec<GraphEdge> = pair_weights
        .iter()
        .map(|((a, b), &w)| GraphEdge {
            a: index[a.as_str()],
            b: index[b.as_str()],
            weight: w,
        })
        .collect();
    WeightedGraph { nodes, edges }
}
