//! Diversity-based author-affiliation indices for academic journal ranking.
//!
//! The crate ingests bibliographic records (field-tagged exports or the
//! canonical one-object-per-line format), builds a tiered elite-institution
//! set from annual ranking lists, samples each journal's most recent articles,
//! and computes five journal-level indicators:
//!
//! * `AAI` — the share of authors affiliated with elite institutions,
//! * `D` — Shannon-entropy diversity of elite-institution authorship,
//! * `AAID` — `AAI * D`,
//! * `AAIW` / `AAIWD` — tier-weighted variants where first-tier authors
//!   carry a configurable weight (1.2 by default).
//!
//! On top of the indices it provides competition rankings, Spearman
//! correlation panels with significance stars, keyword co-occurrence and
//! institution collaboration networks, and deterministic table emission.
//! The [`testkit`] module holds a seeded corpus generator and independent
//! brute-force oracles used for differential testing.

pub mod elite;
pub mod indices;
pub mod networks;
pub mod records;
pub mod report;
pub mod sampling;
pub mod stats;
pub mod testkit;

pub use elite::{AnnualRankingList, EliteInstitution, EliteSet, Tier};
pub use indices::{ArticleTally, JournalScore, ScoreConfig};
pub use records::{ArticleRecord, AuthorEntry, Corpus, DocType};
pub use sampling::SampleSet;
pub use stats::{CorrelationPanel, RankVector};
