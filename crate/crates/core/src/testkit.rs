//! Synthetic corpus generation with ground-truth labels, independent
//! brute-force oracles for differential testing, and transcribed reference
//! constants from the published study results.
//!
//! The generator is pinned to ChaCha8 seeded with [`GenSpec::seed`], so
//! generated corpora, and any golden files derived from them, are identical
//! across platforms and releases.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::elite::{assemble, AliasTable, AnnualRankingList, EliteSet, RankedEntry};
use crate::records::{ArticleRecord, AuthorEntry, Corpus, DocType};

pub mod oracles;
pub mod reference;

#[derive(Debug, Error)]
pub enum GenError {
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
}

/// Parameters of a synthetic corpus. Same seed, same corpus bytes.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GenSpec {
    pub seed: u64,
    pub journals: usize,
    pub articles_per_journal: usize,
    /// Per-journal probability that an author is affiliated with an elite
    /// institution; one entry per journal.
    pub elite_fraction_per_journal: Vec<f64>,
    /// Dirichlet-style concentration of the per-journal distribution over
    /// elite institutions: 0 → all elite authors of a journal come from one
    /// institution; +∞ → exactly uniform shares.
    pub institution_concentration: f64,
    /// Inclusive (min, max) authors per article.
    pub authors_per_article: (usize, usize),
    /// Size of the keyword vocabulary articles draw from.
    pub keyword_pool: usize,
}

impl GenSpec {
    /// A spec with the same elite fraction planted in every journal.
    pub fn uniform(
        seed: u64,
        journals: usize,
        articles_per_journal: usize,
        elite_fraction: f64,
    ) -> GenSpec {
        GenSpec {
            seed,
            journals,
            articles_per_journal,
            elite_fraction_per_journal: vec![elite_fraction; journals],
            institution_concentration: 1.0,
            authors_per_article: (1, 6),
            keyword_pool: 30,
        }
    }

    fn validate(&self, elite_size: usize) -> Result<(), GenError> {
        if self.elite_fraction_per_journal.len() != self.journals {
            return Err(GenError::InvalidSpec(format!(
                "need one elite fraction per journal ({} != {})",
                self.elite_fraction_per_journal.len(),
                self.journals
            )));
        }
        for &fraction in &self.elite_fraction_per_journal {
            if !(0.0..=1.0).contains(&fraction) {
                return Err(GenError::InvalidSpec(format!(
                    "elite fraction {fraction} outside [0, 1]"
                )));
            }
            if fraction > 0.0 && elite_size == 0 {
                return Err(GenError::InvalidSpec(
                    "positive elite fraction with an empty elite set".to_string(),
                ));
            }
        }
        let (min, max) = self.authors_per_article;
        if min < 1 || min > max {
            return Err(GenError::InvalidSpec(format!(
                "invalid authors per article range ({min}, {max})"
            )));
        }
        if self.keyword_pool == 0 {
            return Err(GenError::InvalidSpec("empty keyword pool".to_string()));
        }
        if self.institution_concentration.is_nan() || self.institution_concentration < 0.0 {
            return Err(GenError::InvalidSpec(format!(
                "invalid institution concentration {}",
                self.institution_concentration
            )));
        }
        Ok(())
    }
}

/// Planted labels for one generated author.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AuthorTruth {
    /// Canonical name of the planted elite institution, if any.
    pub elite_institution: Option<String>,
    /// The institution weight the author should contribute (0 if non-elite).
    pub weight: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ArticleTruth {
    pub record_id: String,
    pub authors: Vec<AuthorTruth>,
}

impl ArticleTruth {
    pub fn elite_count(&self) -> u32 {
        self.authors
            .iter()
            .filter(|a| a.elite_institution.is_some())
            .count() as u32
    }

    pub fn author_count(&self) -> u32 {
        self.authors.len() as u32
    }

    pub fn weighted_elite(&self) -> f64 {
        self.authors.iter().map(|a| a.weight).sum()
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JournalTruth {
    pub journal: String,
    pub elite_fraction: f64,
    pub articles: Vec<ArticleTruth>,
}

/// Every label the generator planted, keyed the same way as the corpus.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroundTruth {
    pub journals: Vec<JournalTruth>,
}

/// Per-journal shares over the elite institutions for planting institution
/// assignments: one-hot for zero concentration, exactly uniform for an
/// infinite one, Dirichlet(alpha) otherwise.
fn institution_shares(rng: &mut ChaCha8Rng, h: usize, concentration: f64) -> Vec<f64> {
    if h == 0 {
        return Vec::new();
    }
    if h == 1 {
        return vec![1.0];
    }
    if concentration == 0.0 {
        let mut shares = vec![0.0; h];
        shares[rng.random_range(0..h)] = 1.0;
        return shares;
    }
    if concentration.is_infinite() {
        return vec![1.0 / h as f64; h];
    }
    let gamma = rand_distr::Gamma::new(concentration, 1.0).expect("valid gamma parameters");
    let mut shares: Vec<f64> = (0..h).map(|_| rng.sample(gamma)).collect();
    let total: f64 = shares.iter().sum();
    if total <= 0.0 {
        // All-zero draws can happen for tiny concentrations; degenerate to
        // one-hot, which is the concentration → 0 limit anyway.
        let mut one_hot = vec![0.0; h];
        one_hot[rng.random_range(0..h)] = 1.0;
        return one_hot;
    }
    for share in &mut shares {
        *share /= total;
    }
    shares
}

fn sample_index(rng: &mut ChaCha8Rng, shares: &[f64]) -> usize {
    let u: f64 = rng.random();
    let mut cumulative = 0.0;
    for (index, &share) in shares.iter().enumerate() {
        cumulative += share;
        if u < cumulative {
            return index;
        }
    }
    shares.len() - 1
}

/// Generates a corpus whose per-author elite membership is Bernoulli with
/// the journal's planted fraction, with institution assignment following the
/// concentration parameter over `elite`. Returns the corpus together with
/// every planted label.
pub fn gen_corpus(spec: &GenSpec, elite: &EliteSet) -> Result<(Corpus, GroundTruth), GenError> {
    spec.validate(elite.len())?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut articles: Vec<ArticleRecord> = Vec::new();
    let mut truth = GroundTruth {
        journals: Vec::with_capacity(spec.journals),
    };
    let mut author_counter = 0u64;
    let per_year = spec.articles_per_journal.div_ceil(5).max(1);

    for journal_index in 0..spec.journals {
        let journal = format!("Synthetic Journal {:03}", journal_index + 1);
        let fraction = spec.elite_fraction_per_journal[journal_index];
        let shares = institution_shares(&mut rng, elite.len(), spec.institution_concentration);
        let mut journal_truth = JournalTruth {
            journal: journal.clone(),
            elite_fraction: fraction,
            articles: Vec::with_capacity(spec.articles_per_journal),
        };

        for article_index in 0..spec.articles_per_journal {
            let ordinal = articles.len();
            let record_id = format!("r{:06}", ordinal + 1);
            // Article 0 is the newest: years step down every `per_year`
            // articles and the issue number decreases within the journal.
            let pub_year = 2020 - (article_index / per_year) as i32;
            let issue = Some((spec.articles_per_journal - article_index) as u32);

            let author_count =
                rng.random_range(spec.authors_per_article.0..=spec.authors_per_article.1);
            let mut authors = Vec::with_capacity(author_count);
            let mut author_truths = Vec::with_capacity(author_count);
            for _ in 0..author_count {
                author_counter += 1;
                let display_name = format!("Author{author_counter:06}, A.");
                let is_elite = fraction > 0.0 && rng.random_bool(fraction);
                if is_elite {
                    let institution = &elite.institutions()[sample_index(&mut rng, &shares)];
                    authors.push(AuthorEntry {
                        display_name,
                        raw_affiliations: vec![format!(
                            "{}, Campus Rd, Synthland",
                            institution.canonical_name
                        )],
                    });
                    author_truths.push(AuthorTruth {
                        elite_institution: Some(institution.canonical_name.clone()),
                        weight: institution.weight,
                    });
                } else {
                    let site = rng.random_range(0..1000u32);
                    authors.push(AuthorEntry {
                        display_name,
                        raw_affiliations: vec![format!(
                            "Independent Inst {site:03}, Town, Synthland"
                        )],
                    });
                    author_truths.push(AuthorTruth {
                        elite_institution: None,
                        weight: 0.0,
                    });
                }
            }

            let keyword_count = rng.random_range(1..=4.min(spec.keyword_pool));
            let mut keyword_ids: Vec<usize> =
                (0..keyword_count).map(|_| rng.random_range(0..spec.keyword_pool)).collect();
            keyword_ids.sort_unstable();
            keyword_ids.dedup();
            let author_keywords: Vec<String> = keyword_ids
                .iter()
                .map(|id| format!("keyword {id:03}"))
                .collect();

            let times_cited = rng.random_range(0..=40);

            journal_truth.articles.push(ArticleTruth {
                record_id: record_id.clone(),
                authors: author_truths,
            });
            articles.push(ArticleRecord {
                record_id,
                journal_name: journal.clone(),
                pub_year,
                volume: None,
                issue,
                record_sequence: ordinal as u32,
                doc_types: vec![DocType::Article],
                authors,
                author_keywords,
                times_cited,
            });
        }
        truth.journals.push(journal_truth);
    }
    Ok((Corpus::from_articles(articles), truth))
}

/// A synthetic elite set built through the real assembly pipeline:
/// `size` institutions, the first `tier1` of them in tier 1.
pub fn synthetic_elite_set(size: usize, tier1: usize, tier1_weight: f64) -> EliteSet {
    let lists = synthetic_ranking_lists(size, 2020);
    let names = crate::elite::build_elite_set(&lists, 2020, size as u32).expect("years present");
    let tier1_names = crate::elite::build_tier1(&lists, 2020, tier1 as u32).expect("years present");
    assemble(
        &names,
        &tier1_names,
        &AliasTable::new(),
        &std::collections::BTreeMap::new(),
        tier1_weight,
    )
    .expect("synthetic names are collision-free")
}

/// Four identical annual ranking lists covering `size` synthetic
/// institutions, ranked 1..=size.
pub fn synthetic_ranking_lists(size: usize, anchor_year: i32) -> Vec<AnnualRankingList> {
    ((anchor_year - 3)..=anchor_year)
        .map(|year| AnnualRankingList {
            year,
            entries: (0..size)
                .map(|i| RankedEntry {
                    rank: i as u32 + 1,
                    canonical_name: format!("Synthetic University {:03}", i + 1),
                    location: "Synthland".to_string(),
                })
                .collect(),
        })
        .collect()
}

/// Pretty-printed JSON sidecar of the planted labels.
pub fn truth_to_json(truth: &GroundTruth) -> String {
    let mut out = serde_json::to_string_pretty(truth).expect("ground truth serializes");
    out.push('\n');
    out
}

/// Parses a ground-truth sidecar back.
pub fn truth_from_json(input: &str) -> Result<GroundTruth, serde_json::Error> {
    serde_json::from_str(input)
}

/// Synthetic external-indicator CSV (header `journal,jif,es`) for a
/// generated corpus, so the comparison pipeline has JIF/ES columns to work
/// with. Drawn from a stream independent of the corpus generator's.
pub fn synthetic_indicator_csv(truth: &GroundTruth, seed: u64) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    let mut out = String::from("journal,jif,es\n");
    for journal in &truth.journals {
        let jif: f64 = rng.random_range(0.1..8.0);
        let es: f64 = rng.random_range(0.00005..0.015);
        out.push_str(&format!("{},{jif:.3},{es:.5}\n", journal.journal));
    }
    out
}

/// Serializes a corpus to the field-tagged flat-file form, suitable for
/// round-trip testing of the tagged parser.
pub fn to_tagged(corpus: &Corpus) -> String {
    let mut out = String::from("FN Synthetic Corpus Export\nVR 1.0\n");
    for article in corpus.articles() {
        out.push_str("PT J\n");
        for author in &article.authors {
            out.push_str("AU ");
            out.push_str(&author.display_name);
            out.push('\n');
        }
        out.push_str("SO ");
        out.push_str(&article.journal_name);
        out.push('\n');
        out.push_str("DT ");
        out.push_str(&crate::records::doc_types_label(&article.doc_types));
        out.push('\n');
        if !article.author_keywords.is_empty() {
            out.push_str("DE ");
            out.push_str(&article.author_keywords.join("; "));
            out.push('\n');
        }
        for author in &article.authors {
            for affiliation in &author.raw_affiliations {
                out.push_str(&format!("C1 [{}] {}\n", author.display_name, affiliation));
            }
        }
        out.push_str(&format!("TC {}\n", article.times_cited));
        out.push_str(&format!("PY {}\n", article.pub_year));
        if let Some(volume) = article.volume {
            out.push_str(&format!("VL {volume}\n"));
        }
        if let Some(issue) = article.issue {
            out.push_str(&format!("IS {issue}\n"));
        }
        out.push_str("ER\n\n");
    }
    out.push_str("EF\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::indices::{aai, diversity, tally_article};
    use crate::records::{parse_canonical_jsonlines, to_canonical_jsonlines};

    #[test]
    fn same_seed_gives_identical_corpora() {
        let elite = synthetic_elite_set(10, 3, 1.2);
        let spec = GenSpec::uniform(99, 3, 20, 0.4);
        let (a, _) = gen_corpus(&spec, &elite).unwrap();
        let (b, _) = gen_corpus(&spec, &elite).unwrap();
        assert_eq!(to_canonical_jsonlines(&a), to_canonical_jsonlines(&b));
    }

    #[test]
    fn all_elite_single_institution_journal_has_unit_aai_and_zero_diversity() {
        let elite = synthetic_elite_set(1, 0, 1.2);
        let spec = GenSpec {
            institution_concentration: 1.0,
            ..GenSpec::uniform(7, 1, 30, 1.0)
        };
        let (corpus, _) = gen_corpus(&spec, &elite).unwrap();
        let tallies: Vec<_> = corpus
            .articles()
            .iter()
            .map(|a| tally_article(a, &elite).unwrap())
            .collect();
        assert_eq!(aai(&tallies).unwrap(), 1.0);
        assert_eq!(diversity(&tallies), 0.0);
    }

    #[test]
    fn zero_fraction_journal_has_all_zero_indices() {
        let elite = synthetic_elite_set(5, 2, 1.2);
        let (corpus, truth) = gen_corpus(&GenSpec::uniform(8, 1, 25, 0.0), &elite).unwrap();
        let tallies: Vec<_> = corpus
            .articles()
            .iter()
            .map(|a| tally_article(a, &elite).unwrap())
            .collect();
        assert_eq!(aai(&tallies).unwrap(), 0.0);
        assert_eq!(diversity(&tallies), 0.0);
        for article in &truth.journals[0].articles {
            assert_eq!(article.elite_count(), 0);
        }
    }

    #[test]
    fn uniform_concentration_diversity_approaches_ln_k() {
        let k = 6;
        let elite = synthetic_elite_set(k, 0, 1.2);
        let spec = GenSpec {
            institution_concentration: f64::INFINITY,
            authors_per_article: (2, 4),
            ..GenSpec::uniform(21, 1, 400, 1.0)
        };
        let (corpus, _) = gen_corpus(&spec, &elite).unwrap();
        let tallies: Vec<_> = corpus
            .articles()
            .iter()
            .map(|a| tally_article(a, &elite).unwrap())
            .collect();
        let d = diversity(&tallies);
        let target = (k as f64).ln();
        assert!((d - target).abs() < 0.02, "d = {d}, ln k = {target}");
    }

    #[test]
    fn zero_concentration_plants_a_single_institution() {
        let elite = synthetic_elite_set(8, 0, 1.2);
        let spec = GenSpec {
            institution_concentration: 0.0,
            ..GenSpec::uniform(3, 1, 50, 1.0)
        };
        let (_, truth) = gen_corpus(&spec, &elite).unwrap();
        let mut institutions: Vec<&str> = truth.journals[0]
            .articles
            .iter()
            .flat_map(|a| a.authors.iter())
            .filter_map(|a| a.elite_institution.as_deref())
            .collect();
        institutions.sort_unstable();
        institutions.dedup();
        assert_eq!(institutions.len(), 1);
    }

    #[test]
    fn generated_labels_match_tallies_exactly() {
        let elite = synthetic_elite_set(12, 4, 1.2);
        let spec = GenSpec::uniform(33, 4, 15, 0.5);
        let (corpus, truth) = gen_corpus(&spec, &elite).unwrap();
        for journal_truth in &truth.journals {
            let articles = corpus.articles_for(&journal_truth.journal).unwrap();
            for (article, article_truth) in articles.iter().zip(&journal_truth.articles) {
                assert_eq!(article.record_id, article_truth.record_id);
                let tally = tally_article(article, &elite).unwrap();
                assert_eq!(tally.x(), article_truth.elite_count());
                assert_eq!(tally.n(), article_truth.author_count());
                assert!((tally.weighted_x() - article_truth.weighted_elite()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn invalid_specs_are_rejected() {
        let elite = synthetic_elite_set(3, 1, 1.2);
        let mut spec = GenSpec::uniform(1, 2, 5, 0.5);
        spec.elite_fraction_per_journal.pop();
        assert!(gen_corpus(&spec, &elite).is_err());

        let spec = GenSpec::uniform(1, 1, 5, 1.5);
        assert!(gen_corpus(&spec, &elite).is_err());

        let mut spec = GenSpec::uniform(1, 1, 5, 0.5);
        spec.authors_per_article = (0, 3);
        assert!(gen_corpus(&spec, &elite).is_err());

        let mut spec = GenSpec::uniform(1, 1, 5, 0.5);
        spec.keyword_pool = 0;
        assert!(gen_corpus(&spec, &elite).is_err());

        let empty = synthetic_elite_set(0, 0, 1.2);
        assert!(gen_corpus(&GenSpec::uniform(1, 1, 5, 0.5), &empty).is_err());
        assert!(gen_corpus(&GenSpec::uniform(1, 1, 5, 0.0), &empty).is_ok());
    }

    #[test]
    fn canonical_round_trip_reproduces_the_corpus() {
        let elite = synthetic_elite_set(6, 2, 1.2);
        let (corpus, _) = gen_corpus(&GenSpec::uniform(55, 3, 12, 0.4), &elite).unwrap();
        let reparsed = parse_canonical_jsonlines(&to_canonical_jsonlines(&corpus)).unwrap();
        assert_eq!(corpus, reparsed);
    }

    #[test]
    fn generated_articles_are_reverse_chronological_in_order() {
        let elite = synthetic_elite_set(4, 1, 1.2);
        let (corpus, _) = gen_corpus(&GenSpec::uniform(2, 1, 40, 0.3), &elite).unwrap();
        let articles = corpus.articles_for("Synthetic Journal 001").unwrap();
        for pair in articles.windows(2) {
            assert!(pair[0].order_key() > pair[1].order_key());
        }
    }
}
