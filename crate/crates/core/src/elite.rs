//! Tiered elite-institution set construction and affiliation resolution.
//!
//! The elite set is built from annual ranking lists: set A is the anchor
//! year's top `top_n`, set B is every institution appearing at least twice in
//! the three preceding years' top `top_n`, and the result is A ∪ B. The
//! first tier is the union of annual top-10 entries over all four years and
//! carries a heavier weight (1.2 by default).

use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum EliteError {
    #[error("no ranking list for year {0}")]
    MissingYear(i32),

    #[error("tier-1 institution `{0}` is not in the elite set")]
    TierNotSubset(String),

    #[error("alias `{alias}` maps to both `{first}` and `{second}`")]
    DuplicateAlias {
        alias: String,
        first: String,
        second: String,
    },

    #[error("ranking list row {row}: {message}")]
    InvalidRankingList { row: usize, message: String },
}

/// One row of an annual ranking list. Ties share a rank value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedEntry {
    pub rank: u32,
    pub canonical_name: String,
    pub location: String,
}

/// One year's ranking list, ordered by non-decreasing rank.
#[derive(Debug, Clone)]
pub struct AnnualRankingList {
    pub year: i32,
    pub entries: Vec<RankedEntry>,
}

impl AnnualRankingList {
    /// Entries whose rank value is at most `top_n`. The cutoff applies to the
    /// rank value, not the row count, so ties at the boundary are included.
    pub fn top(&self, top_n: u32) -> impl Iterator<Item = &RankedEntry> {
        self.entries.iter().filter(move |e| e.rank <= top_n)
    }
}

/// Parses ranking lists from CSV with header `year,rank,name,location`,
/// grouping rows by year and ordering each year's entries by rank.
pub fn parse_ranking_lists(input: &str) -> Result<Vec<AnnualRankingList>, EliteError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(input.as_bytes());
    let mut by_year: BTreeMap<i32, Vec<RankedEntry>> = BTreeMap::new();
    for (index, result) in reader.records().enumerate() {
        let row = index + 2; // 1-based, after the header
        let record = result.map_err(|e| EliteError::InvalidRankingList {
            row,
            message: e.to_string(),
        })?;
        let field = |i: usize, name: &str| -> Result<&str, EliteError> {
            record.get(i).ok_or_else(|| EliteError::InvalidRankingList {
                row,
                message: format!("missing column `{name}`"),
            })
        };
        let year: i32 = field(0, "year")?
            .trim()
            .parse()
            .map_err(|_| EliteError::InvalidRankingList {
                row,
                message: "unparseable year".to_string(),
            })?;
        let rank: u32 = field(1, "rank")?
            .trim()
            .parse()
            .map_err(|_| EliteError::InvalidRankingList {
                row,
                message: "unparseable rank".to_string(),
            })?;
        let name = field(2, "name")?.trim().to_string();
        if name.is_empty() {
            return Err(EliteError::InvalidRankingList {
                row,
                message: "empty institution name".to_string(),
            });
        }
        let location = field(3, "location")?.trim().to_string();
        by_year.entry(year).or_default().push(RankedEntry {
            rank,
            canonical_name: name,
            location,
        });
    }
    Ok(by_year
        .into_iter()
        .map(|(year, mut entries)| {
            entries.sort_by_key(|e| e.rank);
            AnnualRankingList { year, entries }
        })
        .collect())
}

fn list_for(lists: &[AnnualRankingList], year: i32) -> Result<&AnnualRankingList, EliteError> {
    lists
        .iter()
        .find(|l| l.year == year)
        .ok_or(EliteError::MissingYear(year))
}

/// Builds the elite canonical-name set: A ∪ B where A is the anchor year's
/// top `top_n` and B is every institution appearing at least twice in the
/// three preceding years' top `top_n` lists.
pub fn build_elite_set(
    lists: &[AnnualRankingList],
    anchor_year: i32,
    top_n: u32,
) -> Result<BTreeSet<String>, EliteError> {
    let anchor = list_for(lists, anchor_year)?;
    let mut names: BTreeSet<String> = anchor
        .top(top_n)
        .map(|e| e.canonical_name.clone())
        .collect();
    let mut appearances: BTreeMap<String, u32> = BTreeMap::new();
    for year in (anchor_year - 3)..anchor_year {
        let list = list_for(lists, year)?;
        // An institution counts once per year regardless of duplicate rows.
        let year_names: BTreeSet<&str> = list.top(top_n).map(|e| e.canonical_name.as_str()).collect();
        for name in year_names {
            *appearances.entry(name.to_string()).or_insert(0) += 1;
        }
    }
    for (name, count) in appearances {
        if count >= 2 {
            names.insert(name);
        }
    }
    Ok(names)
}

/// Builds the first-tier set: the union of top `top_n` entries over the
/// anchor year and the three preceding years.
pub fn build_tier1(
    lists: &[AnnualRankingList],
    anchor_year: i32,
    top_n: u32,
) -> Result<BTreeSet<String>, EliteError> {
    let mut names = BTreeSet::new();
    for year in (anchor_year - 3)..=anchor_year {
        let list = list_for(lists, year)?;
        names.extend(list.top(top_n).map(|e| e.canonical_name.clone()));
    }
    Ok(names)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tier {
    Tier1,
    Tier2,
}

/// A canonical elite institution with its tier, weight and normalized
/// aliases.
#[derive(Debug, Clone)]
pub struct EliteInstitution {
    pub canonical_name: String,
    pub location: String,
    pub tier: Tier,
    pub weight: f64,
    pub aliases: BTreeSet<String>,
}

/// The assembled elite set. Immutable after assembly; lookups are read-only.
#[derive(Debug, Clone)]
pub struct EliteSet {
    institutions: Vec<EliteInstitution>,
    alias_index: HashMap<String, usize>,
}

impl EliteSet {
    pub fn institutions(&self) -> &[EliteInstitution] {
        &self.institutions
    }

    /// Number of institutions (the `h` of the diversity formula).
    pub fn len(&self) -> usize {
        self.institutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.institutions.is_empty()
    }

    pub fn tier1_count(&self) -> usize {
        self.institutions
            .iter()
            .filter(|i| i.tier == Tier::Tier1)
            .count()
    }

    pub fn tier2_count(&self) -> usize {
        self.len() - self.tier1_count()
    }

    pub fn by_name(&self, canonical_name: &str) -> Option<&EliteInstitution> {
        self.institutions
            .iter()
            .find(|i| i.canonical_name == canonical_name)
    }

    /// A new elite set containing only the first-tier institutions (used for
    /// the comparison that recomputes the indices against the 13-institution
    /// set).
    pub fn tier1_subset(&self) -> EliteSet {
        let institutions: Vec<EliteInstitution> = self
            .institutions
            .iter()
            .filter(|i| i.tier == Tier::Tier1)
            .cloned()
            .collect();
        build_index(institutions).expect("subset of a valid alias index")
    }
}

/// Alias table: canonical name to the extra aliases it may appear under in
/// raw affiliation strings.
#[derive(Debug, Clone, Default)]
pub struct AliasTable {
    entries: BTreeMap<String, Vec<String>>,
}

impl AliasTable {
    pub fn new() -> AliasTable {
        AliasTable::default()
    }

    /// Parses the `canonical|alias|alias` line format. Blank lines and lines
    /// starting with `#` are skipped; a line with no `|` declares a canonical
    /// name with no extra aliases.
    pub fn parse(input: &str) -> AliasTable {
        let mut entries = BTreeMap::new();
        for line in input.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split('|').map(str::trim);
            let Some(canonical) = parts.next().filter(|c| !c.is_empty()) else {
                continue;
            };
            let aliases: Vec<String> = parts
                .filter(|a| !a.is_empty())
                .map(str::to_string)
                .collect();
            entries.insert(canonical.to_string(), aliases);
        }
        AliasTable { entries }
    }

    pub fn aliases_for(&self, canonical_name: &str) -> &[String] {
        self.entries
            .get(canonical_name)
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    pub fn insert(&mut self, canonical: impl Into<String>, aliases: Vec<String>) {
        self.entries.insert(canonical.into(), aliases);
    }
}

/// Normalizes an institution name or affiliation fragment for matching:
/// ASCII-fold diacritics, lowercase, strip punctuation, collapse whitespace.
pub fn normalize_name(raw: &str) -> String {
    deunicode::deunicode(raw)
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() {
                c.to_ascii_lowercase()
            } else {
                ' '
            }
        })
        .collect::<String>()
        .split_whitespace()
        .collect::<Vec<_>>()
        .join(" ")
}

/// Assembles the elite set from canonical names, the tier-1 subset, an alias
/// table and per-name locations. Tier-1 institutions carry `tier1_weight`;
/// the rest carry 1.0. Every institution's normalized canonical name is
/// always an alias.
pub fn assemble(
    elite_names: &BTreeSet<String>,
    tier1_names: &BTreeSet<String>,
    aliases: &AliasTable,
    locations: &BTreeMap<String, String>,
    tier1_weight: f64,
) -> Result<EliteSet, EliteError> {
    for name in tier1_names {
        if !elite_names.contains(name) {
            return Err(EliteError::TierNotSubset(name.clone()));
        }
    }
    let mut institutions = Vec::with_capacity(elite_names.len());
    for name in elite_names {
        let tier = if tier1_names.contains(name) {
            Tier::Tier1
        } else {
            Tier::Tier2
        };
        let weight = match tier {
            Tier::Tier1 => tier1_weight,
            Tier::Tier2 => 1.0,
        };
        let mut alias_set: BTreeSet<String> = BTreeSet::new();
        alias_set.insert(normalize_name(name));
        for alias in aliases.aliases_for(name) {
            let normalized = normalize_name(alias);
            if !normalized.is_empty() {
                alias_set.insert(normalized);
            }
        }
        institutions.push(EliteInstitution {
            canonical_name: name.clone(),
            location: locations.get(name).cloned().unwrap_or_default(),
            tier,
            weight,
            aliases: alias_set,
        });
    }
    build_index(institutions)
}

fn build_index(institutions: Vec<EliteInstitution>) -> Result<EliteSet, EliteError> {
    let mut alias_index: HashMap<String, usize> = HashMap::new();
    for (idx, institution) in institutions.iter().enumerate() {
        for alias in &institution.aliases {
            if let Some(&existing) = alias_index.get(alias) {
                if existing != idx {
                    return Err(EliteError::DuplicateAlias {
                        alias: alias.clone(),
                        first: institutions[existing].canonical_name.clone(),
                        second: institution.canonical_name.clone(),
                    });
                }
            }
            alias_index.insert(alias.clone(), idx);
        }
    }
    Ok(EliteSet {
        institutions,
        alias_index,
    })
}

/// Resolves a raw affiliation string to an elite institution, if any.
///
/// The leading comma-delimited segment is tried first as an exact alias hit;
/// failing that, any alias appearing as a whole-token substring of the
/// normalized string matches. The longest alias wins; remaining ties break
/// by canonical-name order. Pure and deterministic.
///
/// The substring rule is deliberately permissive: a string such as
/// "Univ Toronto Press Inc, Toronto, Canada" matches an alias "Univ Toronto".
/// This is a known false-positive class accepted in exchange for recall on
/// abbreviated affiliation strings.
pub fn match_affiliation<'a>(raw: &str, elite: &'a EliteSet) -> Option<&'a EliteInstitution> {
    let leading = raw.split(',').next().unwrap_or("");
    let leading_norm = normalize_name(leading);
    if !leading_norm.is_empty() {
        if let Some(&idx) = elite.alias_index.get(&leading_norm) {
            return Some(&elite.institutions[idx]);
        }
    }
    let full = format!(" {} ", normalize_name(raw));
    let mut best: Option<(&str, &'a EliteInstitution)> = None;
    for institution in &elite.institutions {
        for alias in &institution.aliases {
            if alias.is_empty() || !full.contains(&format!(" {alias} ")) {
                continue;
            }
            let better = match best {
                None => true,
                Some((best_alias, best_inst)) => {
                    alias.len() > best_alias.len()
                        || (alias.len() == best_alias.len()
                            && institution.canonical_name < best_inst.canonical_name)
                }
            };
            if better {
                best = Some((alias, institution));
            }
        }
    }
    best.map(|(_, institution)| institution)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn list(year: i32, names: &[&str]) -> AnnualRankingList {
        AnnualRankingList {
            year,
            entries: names
                .iter()
                .enumerate()
                .map(|(i, name)| RankedEntry {
                    rank: i as u32 + 1,
                    canonical_name: name.to_string(),
                    location: String::new(),
                })
                .collect(),
        }
    }

    fn simple_set(names: &[&str], tier1: &[&str], tier1_weight: f64) -> EliteSet {
        let elite: BTreeSet<String> = names.iter().map(|s| s.to_string()).collect();
        let tier1: BTreeSet<String> = tier1.iter().map(|s| s.to_string()).collect();
        assemble(
            &elite,
            &tier1,
            &AliasTable::new(),
            &BTreeMap::new(),
            tier1_weight,
        )
        .unwrap()
    }

    #[test]
    fn identical_lists_all_years_give_the_single_top_set() {
        let names: Vec<String> = (0..50).map(|i| format!("Univ {i:02}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let lists: Vec<AnnualRankingList> =
            (2017..=2020).map(|year| list(year, &refs)).collect();
        let result = build_elite_set(&lists, 2020, 50).unwrap();
        assert_eq!(result.len(), 50);
    }

    #[test]
    fn missing_year_is_reported() {
        let lists = vec![list(2020, &["A"]), list(2019, &["A"]), list(2018, &["A"])];
        match build_elite_set(&lists, 2020, 1) {
            Err(EliteError::MissingYear(2017)) => {}
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn set_b_needs_two_appearances_in_the_history_years() {
        // "Once" appears only in 2017; "Twice" in 2017 and 2018; the anchor
        // list contributes "A" and "B" unconditionally.
        let lists = vec![
            list(2017, &["Once", "Twice"]),
            list(2018, &["Twice", "B"]),
            list(2019, &["B", "A"]),
            list(2020, &["A", "B"]),
        ];
        let result = build_elite_set(&lists, 2020, 2).unwrap();
        let expected: BTreeSet<String> = ["A", "B", "Twice"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(result, expected);
    }

    #[test]
    fn elite_set_matches_brute_force_on_randomized_overlaps() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let pool: Vec<String> = (0..30).map(|i| format!("Inst {i:02}")).collect();
        for _ in 0..50 {
            let lists: Vec<AnnualRankingList> = (2017..=2020)
                .map(|year| {
                    let mut names: Vec<&str> = pool.iter().map(String::as_str).collect();
                    names.shuffle(&mut rng);
                    list(year, &names[..10])
                })
                .collect();
            let result = build_elite_set(&lists, 2020, 10).unwrap();

            // Brute force: count membership per year directly.
            let mut expected: BTreeSet<String> = lists[3]
                .entries
                .iter()
                .map(|e| e.canonical_name.clone())
                .collect();
            for name in &pool {
                let appearances = lists[..3]
                    .iter()
                    .filter(|l| l.entries.iter().any(|e| &e.canonical_name == name))
                    .count();
                if appearances >= 2 {
                    expected.insert(name.clone());
                }
            }
            assert_eq!(result, expected);

            let tier1 = build_tier1(&lists, 2020, 5).unwrap();
            let mut union: BTreeSet<String> = BTreeSet::new();
            for l in &lists {
                union.extend(l.entries.iter().take(5).map(|e| e.canonical_name.clone()));
            }
            assert_eq!(tier1, union);

            // A ∪ B is at least set A and at most four lists' worth.
            assert!(result.len() >= 10 && result.len() <= 40);
        }
    }

    #[test]
    fn tier1_of_identical_lists_is_the_top_ten() {
        let names: Vec<String> = (0..50).map(|i| format!("Univ {i:02}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let lists: Vec<AnnualRankingList> =
            (2017..=2020).map(|year| list(year, &refs)).collect();
        assert_eq!(build_tier1(&lists, 2020, 10).unwrap().len(), 10);
    }

    #[test]
    fn tier1_ignores_order_changes_below_the_cutoff() {
        let names: Vec<String> = (0..30).map(|i| format!("Univ {i:02}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let lists: Vec<AnnualRankingList> =
            (2017..=2020).map(|year| list(year, &refs)).collect();
        let baseline = build_tier1(&lists, 2020, 10).unwrap();

        let mut permuted = lists.clone();
        for l in &mut permuted {
            // Reverse everything past the cutoff, keeping the rank values.
            let tail: Vec<String> = l.entries[10..]
                .iter()
                .rev()
                .map(|e| e.canonical_name.clone())
                .collect();
            for (entry, name) in l.entries[10..].iter_mut().zip(tail) {
                entry.canonical_name = name;
            }
        }
        assert_eq!(build_tier1(&permuted, 2020, 10).unwrap(), baseline);
    }

    #[test]
    fn tie_ranks_at_the_cutoff_are_included() {
        let entries = vec![
            RankedEntry { rank: 1, canonical_name: "A".into(), location: String::new() },
            RankedEntry { rank: 2, canonical_name: "B".into(), location: String::new() },
            RankedEntry { rank: 2, canonical_name: "C".into(), location: String::new() },
            RankedEntry { rank: 4, canonical_name: "D".into(), location: String::new() },
        ];
        let l = AnnualRankingList { year: 2020, entries };
        let top2: Vec<&str> = l.top(2).map(|e| e.canonical_name.as_str()).collect();
        assert_eq!(top2, vec!["A", "B", "C"]);
    }

    #[test]
    fn assemble_assigns_tiers_and_weights() {
        let set = simple_set(&["A", "B", "C"], &["B"], 1.2);
        assert_eq!(set.len(), 3);
        assert_eq!(set.tier1_count(), 1);
        assert_eq!(set.tier2_count(), 2);
        let b = set.by_name("B").unwrap();
        assert_eq!(b.tier, Tier::Tier1);
        assert_eq!(b.weight, 1.2);
        assert_eq!(set.by_name("A").unwrap().weight, 1.0);
    }

    #[test]
    fn tier_not_subset_is_rejected() {
        let elite: BTreeSet<String> = ["A"].iter().map(|s| s.to_string()).collect();
        let tier1: BTreeSet<String> = ["Z"].iter().map(|s| s.to_string()).collect();
        match assemble(&elite, &tier1, &AliasTable::new(), &BTreeMap::new(), 1.2) {
            Err(EliteError::TierNotSubset(name)) => assert_eq!(name, "Z"),
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn duplicate_alias_is_rejected() {
        let elite: BTreeSet<String> = ["Univ A", "Univ B"].iter().map(|s| s.to_string()).collect();
        let mut aliases = AliasTable::new();
        aliases.insert("Univ A", vec!["Shared Alias".to_string()]);
        aliases.insert("Univ B", vec!["shared alias".to_string()]);
        match assemble(&elite, &BTreeSet::new(), &aliases, &BTreeMap::new(), 1.2) {
            Err(EliteError::DuplicateAlias { alias, .. }) => {
                assert_eq!(alias, "shared alias");
            }
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn normalization_folds_case_punctuation_and_diacritics() {
        assert_eq!(normalize_name("Univ. of  Toronto,"), "univ of toronto");
        assert_eq!(normalize_name("Université de Montréal"), "universite de montreal");
        assert_eq!(normalize_name("King's College London"), "king s college london");
    }

    #[test]
    fn leading_segment_alias_hit_matches() {
        let mut aliases = AliasTable::new();
        aliases.insert("University of Toronto", vec!["Univ Toronto".to_string()]);
        let elite: BTreeSet<String> = ["University of Toronto"].iter().map(|s| s.to_string()).collect();
        let set = assemble(&elite, &BTreeSet::new(), &aliases, &BTreeMap::new(), 1.2).unwrap();
        let hit = match_affiliation("Univ Toronto, Toronto, Canada", &set).unwrap();
        assert_eq!(hit.canonical_name, "University of Toronto");
    }

    #[test]
    fn substring_rule_matches_and_is_a_documented_false_positive_class() {
        let mut aliases = AliasTable::new();
        aliases.insert("University of Toronto", vec!["Univ Toronto".to_string()]);
        let elite: BTreeSet<String> = ["University of Toronto"].iter().map(|s| s.to_string()).collect();
        let set = assemble(&elite, &BTreeSet::new(), &aliases, &BTreeMap::new(), 1.2).unwrap();
        let hit = match_affiliation("Univ Toronto Press Inc, Toronto, Canada", &set).unwrap();
        assert_eq!(hit.canonical_name, "University of Toronto");
    }

    #[test]
    fn whole_token_boundary_is_required() {
        let set = simple_set(&["York University"], &[], 1.2);
        // "New York University" contains "york university" as whole tokens, so
        // it matches; "Yorkshire University" must not.
        assert!(match_affiliation("Dept Hist, York University, Toronto", &set).is_some());
        assert!(match_affiliation("Yorkshire Universityy, Leeds", &set).is_none());
    }

    #[test]
    fn longest_alias_wins_then_lexicographic_canonical_name() {
        let mut aliases = AliasTable::new();
        aliases.insert("Generic University", vec!["State Univ".to_string()]);
        aliases.insert("Michigan State University", vec!["Michigan State Univ".to_string()]);
        let elite: BTreeSet<String> = ["Generic University", "Michigan State University"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let set = assemble(&elite, &BTreeSet::new(), &aliases, &BTreeMap::new(), 1.2).unwrap();
        let hit = match_affiliation("Dept Educ, Michigan State Univ, E Lansing", &set).unwrap();
        assert_eq!(hit.canonical_name, "Michigan State University");
    }

    #[test]
    fn no_match_is_a_valid_outcome() {
        let set = simple_set(&["A University"], &[], 1.2);
        assert!(match_affiliation("Completely Unrelated Inst, Nowhere", &set).is_none());
    }

    #[test]
    fn match_is_pure_and_deterministic() {
        let set = simple_set(&["Alpha Univ", "Beta Univ"], &["Alpha Univ"], 1.2);
        let raw = "Beta Univ, Somewhere";
        let first = match_affiliation(raw, &set).map(|i| i.canonical_name.clone());
        for _ in 0..10 {
            let again = match_affiliation(raw, &set).map(|i| i.canonical_name.clone());
            assert_eq!(first, again);
        }
    }

    #[test]
    fn parse_ranking_lists_groups_and_sorts_by_rank() {
        let csv = "year,rank,name,location\n2020,2,B Univ,UK\n2020,1,A Univ,USA\n2019,1,C Univ,DE\n";
        let lists = parse_ranking_lists(csv).unwrap();
        assert_eq!(lists.len(), 2);
        assert_eq!(lists[0].year, 2019);
        assert_eq!(lists[1].entries[0].canonical_name, "A Univ");
        assert_eq!(lists[1].entries[1].rank, 2);
    }

    #[test]
    fn parse_ranking_lists_handles_quoted_names() {
        let csv = "year,rank,name,location\n2020,8,\"University of California, Berkeley\",USA\n";
        let lists = parse_ranking_lists(csv).unwrap();
        assert_eq!(
            lists[0].entries[0].canonical_name,
            "University of California, Berkeley"
        );
    }

    #[test]
    fn alias_table_parses_pipe_separated_lines() {
        let table = AliasTable::parse(
            "# comment\nUniversity of Toronto|Univ Toronto|U Toronto\nHarvard University\n",
        );
        assert_eq!(
            table.aliases_for("University of Toronto"),
            &["Univ Toronto".to_string(), "U Toronto".to_string()]
        );
        assert!(table.aliases_for("Harvard University").is_empty());
    }

    #[test]
    fn tier1_subset_keeps_only_tier1() {
        let set = simple_set(&["A", "B", "C"], &["A", "C"], 1.2);
        let subset = set.tier1_subset();
        assert_eq!(subset.len(), 2);
        assert!(subset.by_name("B").is_none());
        assert_eq!(subset.tier1_count(), 2);
    }
}
