//! Independent brute-force oracles for differential testing.
//!
//! Every function here recomputes a result the main modules produce, by the
//! most naive route available: direct summation, counting-based rank
//! assignment, exhaustive permutation. They share no code with the
//! implementations they check.

use crate::indices::ArticleTally;

use super::ArticleTruth;

/// Mean of per-article elite fractions, term by term.
pub fn oracle_aai(tallies: &[ArticleTally]) -> f64 {
    let m = tallies.len() as f64;
    tallies
        .iter()
        .map(|t| f64::from(t.x()) / f64::from(t.n()) / m)
        .sum()
}

/// Mean of per-article weighted elite fractions, term by term.
pub fn oracle_aaiw(tallies: &[ArticleTally]) -> f64 {
    let m = tallies.len() as f64;
    tallies.iter().map(|t| t.weighted_x() / f64::from(t.n()) / m).sum()
}

/// Entropy of a count vector, directly.
pub fn oracle_entropy(counts: &[u64]) -> f64 {
    let total: u64 = counts.iter().sum();
    if total == 0 {
        return 0.0;
    }
    let total = total as f64;
    counts
        .iter()
        .filter(|&&c| c > 0)
        .map(|&c| {
            let p = c as f64 / total;
            -p * p.ln()
        })
        .sum()
}

/// Recomputes a journal's (aai, aaiw, d) from planted generator labels only,
/// independent of affiliation matching and tallying.
pub fn oracle_score_from_truth(articles: &[ArticleTruth]) -> (f64, f64, f64) {
    let m = articles.len() as f64;
    let mut aai = 0.0;
    let mut aaiw = 0.0;
    let mut counts: std::collections::BTreeMap<&str, u64> = std::collections::BTreeMap::new();
    for article in articles {
        let n = f64::from(article.author_count());
        aai += f64::from(article.elite_count()) / n / m;
        aaiw += article.weighted_elite() / n / m;
        for author in &article.authors {
            if let Some(name) = author.elite_institution.as_deref() {
                *counts.entry(name).or_insert(0) += 1;
            }
        }
    }
    let count_values: Vec<u64> = counts.values().copied().collect();
    (aai, aaiw, oracle_entropy(&count_values))
}

/// Competition ranks by counting strictly greater values.
pub fn oracle_rank_descending(values: &[f64]) -> Vec<u32> {
    values
        .iter()
        .map(|&v| values.iter().filter(|&&w| w > v).count() as u32 + 1)
        .collect()
}

/// Average ascending ranks by counting: rank = (#smaller) + (#equal + 1)/2.
pub fn oracle_average_ranks(values: &[f64]) -> Vec<f64> {
    values
        .iter()
        .map(|&v| {
            let smaller = values.iter().filter(|&&w| w < v).count() as f64;
            let equal = values.iter().filter(|&&w| w == v).count() as f64;
            smaller + (equal + 1.0) / 2.0
        })
        .collect()
}

/// Spearman rho via counting-based rank assignment and a direct product-sum
/// Pearson formula. Returns NaN for constant input.
pub fn oracle_spearman_rho(x: &[f64], y: &[f64]) -> f64 {
    assert_eq!(x.len(), y.len());
    let n = x.len() as f64;
    let rx = oracle_average_ranks(x);
    let ry = oracle_average_ranks(y);
    let sum_x: f64 = rx.iter().sum();
    let sum_y: f64 = ry.iter().sum();
    let sum_xy: f64 = rx.iter().zip(&ry).map(|(a, b)| a * b).sum();
    let sum_x2: f64 = rx.iter().map(|a| a * a).sum();
    let sum_y2: f64 = ry.iter().map(|b| b * b).sum();
    let numerator = n * sum_xy - sum_x * sum_y;
    let denominator = ((n * sum_x2 - sum_x * sum_x) * (n * sum_y2 - sum_y * sum_y)).sqrt();
    numerator / denominator
}

/// Exact two-sided permutation p-value for Spearman rho: the share of the
/// n! permutations of `y` whose |rho| is at least the observed |rho|.
/// Only feasible for small n; returns None above `n = 8`.
pub fn oracle_spearman_exact_p(x: &[f64], y: &[f64]) -> Option<f64> {
    let n = x.len();
    if n != y.len() || !(2..=8).contains(&n) {
        return None;
    }
    let observed = oracle_spearman_rho(x, y).abs();
    let mut permutation: Vec<usize> = (0..n).collect();
    let mut at_least = 0u64;
    let mut total = 0u64;
    permute(&mut permutation, 0, &mut |perm| {
        let shuffled: Vec<f64> = perm.iter().map(|&i| y[i]).collect();
        let rho = oracle_spearman_rho(x, &shuffled).abs();
        total += 1;
        if rho >= observed - 1e-12 {
            at_least += 1;
        }
    });
    Some(at_least as f64 / total as f64)
}

fn permute(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// Direct mean and sample standard deviation.
pub fn oracle_mean_std(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    let ss: f64 = values.iter().map(|v| (v - mean) * (v - mean)).sum();
    (mean, (ss / (n - 1.0)).sqrt())
}
