//! Reverse-chronological journal sampling and AAI convergence series.

use std::cmp::Reverse;

use thiserror::Error;

use crate::elite::EliteSet;
use crate::indices::tally_article;
use crate::records::{ArticleRecord, Corpus};

#[derive(Debug, Error)]
pub enum SampleError {
    #[error("unknown journal `{0}`")]
    UnknownJournal(String),
}

/// A journal's sample: the most recent eligible articles, newest first.
#[derive(Debug, Clone)]
pub struct SampleSet<'a> {
    pub journal_name: String,
    /// Strictly ordered by descending order key (newest first).
    pub articles: Vec<&'a ArticleRecord>,
    pub m_requested: usize,
    pub m_used: usize,
    /// Year-eligible articles skipped because no author carried any
    /// affiliation string; such articles cannot be tallied and the
    /// next-newest article takes their place.
    pub excluded_without_affiliations: usize,
}

impl SampleSet<'_> {
    /// How far the sample fell short of the requested size.
    pub fn shortfall(&self) -> usize {
        self.m_requested - self.m_used
    }
}

/// Selects up to `m` articles of a journal published no later than
/// `anchor_year`, newest first by (year, volume, issue, sequence). If fewer
/// than `m` eligible articles exist, all are returned.
pub fn sample_articles<'a>(
    corpus: &'a Corpus,
    journal_name: &str,
    m: usize,
    anchor_year: i32,
) -> Result<SampleSet<'a>, SampleError> {
    let all = corpus
        .articles_for(journal_name)
        .ok_or_else(|| SampleError::UnknownJournal(journal_name.to_string()))?;
    let mut excluded = 0usize;
    let mut eligible: Vec<&ArticleRecord> = Vec::with_capacity(all.len());
    for article in all {
        if article.pub_year > anchor_year {
            continue;
        }
        if !article.has_affiliation_data() {
            excluded += 1;
            continue;
        }
        eligible.push(article);
    }
    eligible.sort_by_key(|a| Reverse(a.order_key()));
    eligible.truncate(m);
    let m_used = eligible.len();
    Ok(SampleSet {
        journal_name: journal_name.to_string(),
        articles: eligible,
        m_requested: m,
        m_used,
        excluded_without_affiliations: excluded,
    })
}

/// The AAI evaluated on the `m` most recent sample articles, for
/// m = 1..=m_max. `m_max` is clamped to the sample size. Suitable for
/// plotting convergence behavior against the sample size.
pub fn convergence_series(
    sample: &SampleSet<'_>,
    elite: &EliteSet,
    m_max: usize,
) -> Vec<(usize, f64)> {
    let m_max = m_max.min(sample.m_used);
    let mut series = Vec::with_capacity(m_max);
    let mut fraction_sum = 0.0f64;
    for (index, article) in sample.articles.iter().take(m_max).enumerate() {
        // Sampling excluded articles without affiliation data, and those
        // without authors have no affiliation data either.
        let tally = tally_article(article, elite).expect("sampled article has authors");
        fraction_sum += f64::from(tally.x()) / f64::from(tally.n());
        series.push((index + 1, fraction_sum / (index + 1) as f64));
    }
    series
}
