//! Per-article tallies and the five journal-level indices.
//!
//! For a journal sample of M articles, with X_i elite authors, Y_i non-elite
//! authors and N_i total authors in article i:
//!
//! * `AAI  = (Σ X_i/N_i) / (Σ (X_i+Y_i)/N_i)` — since X_i+Y_i = N_i the
//!   denominator equals M; the identity is asserted at runtime.
//! * `AAIW` replaces the numerator terms by `Σ_{j elite} w(ij)/N_i`, where
//!   w(ij) is the weight of the matched institution (1.2 for tier 1 by
//!   default, 1.0 otherwise). With all weights 1 it reduces to AAI.
//! * `D = −Σ p_j ln(p_j)` over elite institutions with at least one sampled
//!   author, where p_j is that institution's share of the sample's elite
//!   authors. A sample with no elite authors has D = 0.
//! * `AAID = AAI·D` and `AAIWD = AAIW·D`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::elite::{match_affiliation, EliteInstitution, EliteSet};
use crate::records::{ArticleRecord, Corpus};
use crate::sampling::{sample_articles, SampleError};

#[derive(Debug, Error)]
pub enum IndexError {
    #[error("article has no authors")]
    NoAuthors,

    #[error("empty sample")]
    EmptySample,
}

/// Errors from the composed per-journal scoring pipeline.
#[derive(Debug, Error)]
pub enum ScoreError {
    #[error(transparent)]
    Sample(#[from] SampleError),

    #[error(transparent)]
    Index(#[from] IndexError),
}

/// Author counts for one article. An author counts at most once regardless of
/// how many affiliations they carry.
#[derive(Debug, Clone, PartialEq)]
pub struct ArticleTally {
    x: u32,
    y: u32,
    weighted_x: f64,
    elite_counts: BTreeMap<String, u32>,
}

impl ArticleTally {
    /// Builds a tally from raw counts. Panics if the per-institution counts
    /// do not sum to `x`: that indicates a bookkeeping bug, not bad input.
    pub fn from_counts(
        x: u32,
        y: u32,
        weighted_x: f64,
        elite_counts: BTreeMap<String, u32>,
    ) -> ArticleTally {
        let total: u32 = elite_counts.values().sum();
        assert_eq!(total, x, "per-institution counts must sum to x");
        assert!(weighted_x >= f64::from(x) - 1e-9);
        ArticleTally {
            x,
            y,
            weighted_x,
            elite_counts,
        }
    }

    /// Elite author count (X_i).
    pub fn x(&self) -> u32 {
        self.x
    }

    /// Non-elite author count (Y_i).
    pub fn y(&self) -> u32 {
        self.y
    }

    /// Total author count (N_i = X_i + Y_i).
    pub fn n(&self) -> u32 {
        self.x + self.y
    }

    /// Sum of institution weights over the elite authors.
    pub fn weighted_x(&self) -> f64 {
        self.weighted_x
    }

    /// Elite author count per canonical institution name.
    pub fn elite_counts(&self) -> &BTreeMap<String, u32> {
        &self.elite_counts
    }
}

/// Resolves each author of an article to elite or non-elite and tallies the
/// counts. An author with several affiliation strings resolves to the single
/// highest-weight (then lexicographically first) matched institution.
pub fn tally_article(
    article: &ArticleRecord,
    elite: &EliteSet,
) -> Result<ArticleTally, IndexError> {
    if article.authors.is_empty() {
        return Err(IndexError::NoAuthors);
    }
    let mut x = 0u32;
    let mut y = 0u32;
    let mut weighted_x = 0.0f64;
    let mut elite_counts: BTreeMap<String, u32> = BTreeMap::new();
    for author in &article.authors {
        let mut resolved: Option<&EliteInstitution> = None;
        for raw in &author.raw_affiliations {
            let Some(candidate) = match_affiliation(raw, elite) else {
                continue;
            };
            let replace = match resolved {
                None => true,
                Some(current) => {
                    candidate.weight > current.weight
                        || (candidate.weight == current.weight
                            && candidate.canonical_name < current.canonical_name)
                }
            };
            if replace {
                resolved = Some(candidate);
            }
        }
        match resolved {
            Some(institution) => {
                x += 1;
                weighted_x += institution.weight;
                *elite_counts
                    .entry(institution.canonical_name.clone())
                    .or_insert(0) += 1;
            }
            None => y += 1,
        }
    }
    Ok(ArticleTally {
        x,
        y,
        weighted_x,
        elite_counts,
    })
}

fn denominator(tallies: &[ArticleTally]) -> f64 {
    let den: f64 = tallies
        .iter()
        .map(|t| f64::from(t.x() + t.y()) / f64::from(t.n()))
        .sum();
    // X_i + Y_i = N_i by construction, so the denominator is the sample size.
    assert!(
        (den - tallies.len() as f64).abs() < 1e-9,
        "tally denominator must equal the sample size"
    );
    den
}

/// The author-affiliation index of a sample; lies in [0, 1].
pub fn aai(tallies: &[ArticleTally]) -> Result<f64, IndexError> {
    if tallies.is_empty() {
        return Err(IndexError::EmptySample);
    }
    let num: f64 = tallies
        .iter()
        .map(|t| f64::from(t.x()) / f64::from(t.n()))
        .sum();
    Ok(num / denominator(tallies))
}

/// The tier-weighted author-affiliation index of a sample.
pub fn aaiw(tallies: &[ArticleTally]) -> Result<f64, IndexError> {
    if tallies.is_empty() {
        return Err(IndexError::EmptySample);
    }
    let num: f64 = tallies
        .iter()
        .map(|t| t.weighted_x() / f64::from(t.n()))
        .sum();
    Ok(num / denominator(tallies))
}

/// Shannon-entropy diversity of elite-institution authorship over a sample,
/// in nats. Proportions are taken over elite authors, so they sum to one;
/// a sample whose elite authors all come from one institution has D = 0, and
/// a sample with no elite authors at all is defined to have D = 0.
pub fn diversity(tallies: &[ArticleTally]) -> f64 {
    let mut counts: BTreeMap<&str, u64> = BTreeMap::new();
    for tally in tallies {
        for (name, count) in tally.elite_counts() {
            *counts.entry(name.as_str()).or_insert(0) += u64::from(*count);
        }
    }
    let total: u64 = counts.values().sum();
    if total == 0 {
        return 0.0;
    }
    let total = total as f64;
    let entropy: f64 = counts
        .values()
        .map(|&count| {
            let p = count as f64 / total;
            -p * p.ln()
        })
        .sum();
    entropy.max(0.0)
}

/// Diversity-scaled index: the product of AAI and D.
pub fn aaid(aai_value: f64, d_value: f64) -> f64 {
    aai_value * d_value
}

/// Diversity-scaled weighted index: the product of AAIW and D.
pub fn aaiwd(aaiw_value: f64, d_value: f64) -> f64 {
    aaiw_value * d_value
}

/// Scoring parameters: sample size and the anchor year for the
/// reverse-chronological cut.
#[derive(Debug, Clone, Copy)]
pub struct ScoreConfig {
    pub m: usize,
    pub anchor_year: i32,
}

impl Default for ScoreConfig {
    fn default() -> ScoreConfig {
        ScoreConfig {
            m: 60,
            anchor_year: 2020,
        }
    }
}

/// All five indices for one journal, plus ingested external indicators.
/// The product indices are always derived from the stored factors.
#[derive(Debug, Clone, PartialEq)]
pub struct JournalScore {
    pub journal_name: String,
    pub aai: f64,
    pub aaiw: f64,
    pub d: f64,
    pub m_used: usize,
    pub jif: Option<f64>,
    pub es: Option<f64>,
}

impl JournalScore {
    pub fn aaid(&self) -> f64 {
        aaid(self.aai, self.d)
    }

    pub fn aaiwd(&self) -> f64 {
        aaiwd(self.aaiw, self.d)
    }
}

/// External indicator values (JIF and ES) keyed by journal name,
/// matched case-insensitively after whitespace normalization.
#[derive(Debug, Clone, Default)]
pub struct IndicatorTable {
    entries: BTreeMap<String, (Option<f64>, Option<f64>)>,
}

#[derive(Debug, Error)]
pub enum IndicatorError {
    #[error("indicator file row {row}: {message}")]
    InvalidRow { row: usize, message: String },
}

impl IndicatorTable {
    /// Parses a summary CSV with header `journal,jif,es`. Empty cells mean
    /// the indicator is unavailable for that journal.
    pub fn parse_csv(input: &str) -> Result<IndicatorTable, IndicatorError> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(true)
            .from_reader(input.as_bytes());
        let mut entries = BTreeMap::new();
        for (index, result) in reader.records().enumerate() {
            let row = index + 2;
            let record = result.map_err(|e| IndicatorError::InvalidRow {
                row,
                message: e.to_string(),
            })?;
            let journal = record
                .get(0)
                .map(str::trim)
                .filter(|j| !j.is_empty())
                .ok_or_else(|| IndicatorError::InvalidRow {
                    row,
                    message: "empty journal name".to_string(),
                })?;
            let parse_cell = |i: usize, name: &str| -> Result<Option<f64>, IndicatorError> {
                match record.get(i).map(str::trim) {
                    None | Some("") => Ok(None),
                    Some(cell) => cell.parse::<f64>().map(Some).map_err(|_| {
                        IndicatorError::InvalidRow {
                            row,
                            message: format!("unparseable {name} value `{cell}`"),
                        }
                    }),
                }
            };
            let jif = parse_cell(1, "jif")?;
            let es = parse_cell(2, "es")?;
            entries.insert(Self::key(journal), (jif, es));
        }
        Ok(IndicatorTable { entries })
    }

    fn key(journal: &str) -> String {
        journal
            .split_whitespace()
            .collect::<Vec<_>>()
            .join(" ")
            .to_lowercase()
    }

    pub fn lookup(&self, journal: &str) -> (Option<f64>, Option<f64>) {
        self.entries
            .get(&Self::key(journal))
            .copied()
            .unwrap_or((None, None))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Samples a journal, tallies its articles and computes all five indices.
pub fn score_journal(
    corpus: &Corpus,
    journal_name: &str,
    elite: &EliteSet,
    config: &ScoreConfig,
    indicators: Option<&IndicatorTable>,
) -> Result<JournalScore, ScoreError> {
    let sample = sample_articles(corpus, journal_name, config.m, config.anchor_year)?;
    let tallies: Vec<ArticleTally> = sample
        .articles
        .iter()
        .map(|article| tally_article(article, elite))
        .collect::<Result<_, _>>()?;
    let aai_value = aai(&tallies)?;
    let aaiw_value = aaiw(&tallies)?;
    let d_value = diversity(&tallies);
    let (jif, es) = indicators
        .map(|table| table.lookup(journal_name))
        .unwrap_or((None, None));
    Ok(JournalScore {
        journal_name: journal_name.to_string(),
        aai: aai_value,
        aaiw: aaiw_value,
        d: d_value,
        m_used: sample.m_used,
        jif,
        es,
    })
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeSet;

    use super::*;
    use crate::elite::{assemble, AliasTable};
    use crate::records::AuthorEntry;

    fn elite_set(tier1: &[&str], tier2: &[&str], tier1_weight: f64) -> EliteSet {
        let names: BTreeSet<String> = tier1
            .iter()
            .chain(tier2.iter())
            .map(|s| s.to_string())
            .collect();
        let tier1: BTreeSet<String> = tier1.iter().map(|s| s.to_string()).collect();
        assemble(
            &names,
            &tier1,
            &AliasTable::new(),
            &BTreeMap::new(),
            tier1_weight,
        )
        .unwrap()
    }

    fn article_with_affiliations(affiliations: &[&[&str]]) -> ArticleRecord {
        ArticleRecord {
            record_id: "r1".to_string(),
            journal_name: "J".to_string(),
            pub_year: 2020,
            volume: None,
            issue: None,
            record_sequence: 0,
            doc_types: vec![crate::records::DocType::Article],
            authors: affiliations
                .iter()
                .enumerate()
                .map(|(i, affs)| AuthorEntry {
                    display_name: format!("Author{i:02}, A"),
                    raw_affiliations: affs.iter().map(|s| s.to_string()).collect(),
                })
                .collect(),
            author_keywords: Vec::new(),
            times_cited: 0,
        }
    }

    fn tally(x: u32, y: u32, weighted_x: f64, counts: &[(&str, u32)]) -> ArticleTally {
        ArticleTally::from_counts(
            x,
            y,
            weighted_x,
            counts.iter().map(|(n, c)| (n.to_string(), *c)).collect(),
        )
    }

    #[test]
    fn mixed_tier_article_tallies_correctly() {
        let elite = elite_set(&["Tier One Univ"], &["Tier Two Univ"], 1.2);
        let article = article_with_affiliations(&[
            &["Tier One Univ, City, Country"],
            &["Tier Two Univ, Town, Country"],
            &["Unknown Inst, Elsewhere"],
        ]);
        let tally = tally_article(&article, &elite).unwrap();
        assert_eq!(tally.x(), 2);
        assert_eq!(tally.y(), 1);
        assert_eq!(tally.n(), 3);
        assert!((tally.weighted_x() - 2.2).abs() < 1e-12);
        assert_eq!(tally.elite_counts().len(), 2);
    }

    #[test]
    fn all_non_elite_article_has_zero_counts() {
        let elite = elite_set(&[], &["Somewhere Univ"], 1.2);
        let article = article_with_affiliations(&[&["Inst A, X"], &["Inst B, Y"]]);
        let tally = tally_article(&article, &elite).unwrap();
        assert_eq!(tally.x(), 0);
        assert_eq!(tally.weighted_x(), 0.0);
        assert!(tally.elite_counts().is_empty());
    }

    #[test]
    fn multi_affiliation_author_counts_once_at_highest_weight() {
        let elite = elite_set(&["Tier One Univ"], &["Tier Two Univ"], 1.2);
        let article = article_with_affiliations(&[&[
            "Tier Two Univ, Town",
            "Tier One Univ, City",
        ]]);
        let tally = tally_article(&article, &elite).unwrap();
        assert_eq!(tally.x(), 1);
        assert!((tally.weighted_x() - 1.2).abs() < 1e-12);
        assert_eq!(tally.elite_counts().get("Tier One Univ"), Some(&1));
        assert_eq!(tally.elite_counts().get("Tier Two Univ"), None);
    }

    #[test]
    fn no_authors_is_an_error() {
        let elite = elite_set(&[], &["U"], 1.2);
        let article = article_with_affiliations(&[]);
        assert!(matches!(
            tally_article(&article, &elite),
            Err(IndexError::NoAuthors)
        ));
    }

    #[test]
    fn aai_endpoints() {
        let all_elite: Vec<ArticleTally> =
            (0..5).map(|_| tally(3, 0, 3.0, &[("U", 3)])).collect();
        assert_eq!(aai(&all_elite).unwrap(), 1.0);
        let none_elite: Vec<ArticleTally> = (0..5).map(|_| tally(0, 4, 0.0, &[])).collect();
        assert_eq!(aai(&none_elite).unwrap(), 0.0);
    }

    #[test]
    fn aai_of_empty_sample_is_an_error() {
        assert!(matches!(aai(&[]), Err(IndexError::EmptySample)));
        assert!(matches!(aaiw(&[]), Err(IndexError::EmptySample)));
    }

    #[test]
    fn aai_equals_mean_of_elite_fractions() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let tallies: Vec<ArticleTally> = (0..60)
            .map(|_| {
                let n = rng.random_range(1..=8u32);
                let x = rng.random_range(0..=n);
                tally(x, n - x, f64::from(x), &[("U", x)][..(x > 0) as usize])
            })
            .collect();
        let direct: f64 = tallies
            .iter()
            .map(|t| f64::from(t.x()) / f64::from(t.n()))
            .sum::<f64>()
            / 60.0;
        assert!((aai(&tallies).unwrap() - direct).abs() < 1e-12);
    }

    #[test]
    fn aaiw_equals_aai_with_unit_weights() {
        let elite = elite_set(&["A Univ"], &["B Univ"], 1.0);
        let article = article_with_affiliations(&[&["A Univ, X"], &["B Univ, Y"], &["C, Z"]]);
        let tallies = vec![tally_article(&article, &elite).unwrap()];
        assert_eq!(aai(&tallies).unwrap(), aaiw(&tallies).unwrap());
    }

    #[test]
    fn aaiw_is_bounded_by_aai_and_its_tier1_multiple() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(13);
        for _ in 0..100 {
            let tallies: Vec<ArticleTally> = (0..20)
                .map(|_| {
                    let n = rng.random_range(1..=6u32);
                    let x = rng.random_range(0..=n);
                    let tier1 = rng.random_range(0..=x);
                    let weighted = f64::from(x - tier1) + 1.2 * f64::from(tier1);
                    let mut counts = BTreeMap::new();
                    if tier1 > 0 {
                        counts.insert("T1".to_string(), tier1);
                    }
                    if x - tier1 > 0 {
                        counts.insert("T2".to_string(), x - tier1);
                    }
                    ArticleTally::from_counts(x, n - x, weighted, counts)
                })
                .collect();
            let a = aai(&tallies).unwrap();
            let w = aaiw(&tallies).unwrap();
            assert!(w >= a - 1e-12);
            assert!(w <= 1.2 * a + 1e-12);
        }
    }

    #[test]
    fn diversity_of_single_institution_is_zero() {
        let tallies = vec![tally(3, 0, 3.0, &[("Only U", 3)])];
        assert_eq!(diversity(&tallies), 0.0);
    }

    #[test]
    fn diversity_of_no_elite_authors_is_zero() {
        let tallies = vec![tally(0, 3, 0.0, &[])];
        assert_eq!(diversity(&tallies), 0.0);
    }

    #[test]
    fn diversity_of_uniform_counts_is_ln_k() {
        for k in [2usize, 4, 8, 16] {
            let counts: Vec<(String, u32)> =
                (0..k).map(|i| (format!("U{i:02}"), 5u32)).collect();
            let refs: Vec<(&str, u32)> =
                counts.iter().map(|(n, c)| (n.as_str(), *c)).collect();
            let tallies = vec![tally(5 * k as u32, 0, 5.0 * k as f64, &refs)];
            let expected = (k as f64).ln();
            assert!(
                (diversity(&tallies) - expected).abs() < 1e-12,
                "k = {k}"
            );
        }
    }

    #[test]
    fn diversity_matches_direct_entropy_evaluation() {
        let counts = [("A", 6u32), ("B", 6), ("C", 4), ("D", 4), ("E", 3)];
        let tallies = vec![tally(23, 0, 23.0, &counts)];
        let total: f64 = counts.iter().map(|(_, c)| f64::from(*c)).sum();
        let expected: f64 = counts
            .iter()
            .map(|(_, c)| {
                let p = f64::from(*c) / total;
                -p * p.ln()
            })
            .sum();
        assert!((diversity(&tallies) - expected).abs() < 1e-15);
    }

    #[test]
    fn diversity_aggregates_across_tallies_and_ignores_scale() {
        let spread = vec![
            tally(2, 0, 2.0, &[("A", 1), ("B", 1)]),
            tally(2, 1, 2.0, &[("A", 1), ("B", 1)]),
        ];
        let single = vec![tally(4, 0, 4.0, &[("A", 2), ("B", 2)])];
        let scaled = vec![tally(40, 0, 40.0, &[("A", 20), ("B", 20)])];
        assert!((diversity(&spread) - diversity(&single)).abs() < 1e-15);
        assert!((diversity(&single) - diversity(&scaled)).abs() < 1e-15);
        assert!((diversity(&single) - 2.0f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn products_match_reference_values() {
        assert!((aaid(0.434, 2.906) - 1.260).abs() <= 0.002);
        assert!((aaiwd(0.464, 2.906) - 1.348).abs() <= 0.002);
        assert_eq!(aaid(0.7, 0.0), 0.0);
        assert_eq!(aaiwd(0.0, 3.0), 0.0);
    }

    #[test]
    fn indicator_table_matches_case_insensitively() {
        let table = IndicatorTable::parse_csv(
            "journal,jif,es\nJournal of Professional Capital and Community,0.824,0.00019\nNo Es Journal,1.5,\n",
        )
        .unwrap();
        assert_eq!(
            table.lookup("journal of  professional capital and community"),
            (Some(0.824), Some(0.00019))
        );
        assert_eq!(table.lookup("No Es Journal"), (Some(1.5), None));
        assert_eq!(table.lookup("Unknown"), (None, None));
    }

    #[test]
    fn score_journal_composes_the_pipeline() {
        use crate::records::DocType;
        let elite = elite_set(&[], &["U0", "U1", "U2", "U3", "U4"], 1.2);
        let articles: Vec<ArticleRecord> = (0..10)
            .map(|i| {
                let mut article = article_with_affiliations(&[&[""]]);
                article.record_id = format!("r{i}");
                article.record_sequence = i;
                article.pub_year = 2015 + (i as i32) % 5;
                article.doc_types = vec![DocType::Article];
                article.authors = vec![AuthorEntry {
                    display_name: format!("A{i}, B"),
                    raw_affiliations: vec![format!("U{}, City", i % 5)],
                }];
                article
            })
            .collect();
        let corpus = Corpus::from_articles(articles);
        let score = score_journal(
            &corpus,
            "J",
            &elite,
            &ScoreConfig {
                m: 10,
                anchor_year: 2020,
            },
            None,
        )
        .unwrap();
        assert_eq!(score.m_used, 10);
        assert_eq!(score.aai, 1.0);
        assert!((score.d - 5.0f64.ln()).abs() < 1e-12);
        assert!((score.aaid() - 5.0f64.ln()).abs() < 1e-12);
        assert_eq!(score.aaiw, 1.0);
    }

    #[test]
    fn zero_elite_journal_scores_zero_everywhere() {
        let elite = elite_set(&[], &["Elite U"], 1.2);
        let article = article_with_affiliations(&[&["Plain Inst, Town"]]);
        let corpus = Corpus::from_articles(vec![article]);
        let score = score_journal(&corpus, "J", &elite, &ScoreConfig::default(), None).unwrap();
        assert_eq!(score.aai, 0.0);
        assert_eq!(score.aaiw, 0.0);
        assert_eq!(score.d, 0.0);
        assert_eq!(score.aaid(), 0.0);
        assert_eq!(score.aaiwd(), 0.0);
    }

    #[test]
    fn unknown_journal_propagates() {
        let elite = elite_set(&[], &["U"], 1.2);
        let corpus = Corpus::from_articles(vec![]);
        assert!(matches!(
            score_journal(&corpus, "Nope", &elite, &ScoreConfig::default(), None),
            Err(ScoreError::Sample(SampleError::UnknownJournal(_)))
        ));
    }
}
