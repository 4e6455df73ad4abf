//! Competition rankings, Spearman rank correlation with tie correction, and
//! descriptive correlation panels with significance stars.

use statrs::distribution::{ContinuousCDF, StudentsT};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum StatsError {
    #[error("input lengths differ: {x_len} vs {y_len}")]
    LengthMismatch { x_len: usize, y_len: usize },

    #[error("need at least {needed} observations, got {got}")]
    InsufficientData { needed: usize, got: usize },

    #[error("degenerate input: {0}")]
    DegenerateInput(String),
}

/// Values with their competition ("1224") ranks, descending: equal values
/// share the minimum rank and the next distinct value's rank skips by the
/// tie-group size.
#[derive(Debug, Clone, PartialEq)]
pub struct RankVector {
    pub values: Vec<f64>,
    pub ranks: Vec<u32>,
}

/// Competition ranks over full-precision values, descending.
pub fn rank_descending(values: &[f64]) -> RankVector {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[b].total_cmp(&values[a]));
    let mut ranks = vec![0u32; values.len()];
    let mut position = 0usize;
    while position < order.len() {
        let mut end = position;
        while end + 1 < order.len()
            && values[order[end + 1]].total_cmp(&values[order[position]]).is_eq()
        {
            end += 1;
        }
        for &idx in &order[position..=end] {
            ranks[idx] = position as u32 + 1;
        }
        position = end + 1;
    }
    RankVector {
        values: values.to_vec(),
        ranks,
    }
}

/// Average (fractional) ranks, ascending, with ties sharing the mean of the
/// positions they occupy.
fn average_ranks(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
    let mut ranks = vec![0.0f64; values.len()];
    let mut position = 0usize;
    while position < order.len() {
        let mut end = position;
        while end + 1 < order.len()
            && values[order[end + 1]].total_cmp(&values[order[position]]).is_eq()
        {
            end += 1;
        }
        let mean_rank = (position + end) as f64 / 2.0 + 1.0;
        for &idx in &order[position..=end] {
            ranks[idx] = mean_rank;
        }
        position = end + 1;
    }
    ranks
}

fn pearson(x: &[f64], y: &[f64]) -> Option<f64> {
    let n = x.len() as f64;
    let mean_x = x.iter().sum::<f64>() / n;
    let mean_y = y.iter().sum::<f64>() / n;
    let mut cov = 0.0;
    let mut var_x = 0.0;
    let mut var_y = 0.0;
    for (&a, &b) in x.iter().zip(y) {
        cov += (a - mean_x) * (b - mean_y);
        var_x += (a - mean_x) * (a - mean_x);
        var_y += (b - mean_y) * (b - mean_y);
    }
    if var_x == 0.0 || var_y == 0.0 {
        return None;
    }
    Some(cov / (var_x * var_y).sqrt())
}

/// Spearman rank correlation with tie correction: both vectors are converted
/// to average ranks and the Pearson correlation of the rank vectors is
/// returned together with a two-sided p-value from the t-approximation
/// `t = rho·sqrt((n−2)/(1−rho²))` with n−2 degrees of freedom. `rho = ±1`
/// yields `p = 0`.
pub fn spearman(x: &[f64], y: &[f64]) -> Result<(f64, f64), StatsError> {
    if x.len() != y.len() {
        return Err(StatsError::LengthMismatch {
            x_len: x.len(),
            y_len: y.len(),
        });
    }
    let n = x.len();
    if n < 3 {
        return Err(StatsError::InsufficientData { needed: 3, got: n });
    }
    let rank_x = average_ranks(x);
    let rank_y = average_ranks(y);
    let rho = pearson(&rank_x, &rank_y)
        .ok_or_else(|| StatsError::DegenerateInput("constant input vector".to_string()))?;
    let rho = rho.clamp(-1.0, 1.0);
    Ok((rho, spearman_p_value(rho, n)))
}

fn spearman_p_value(rho: f64, n: usize) -> f64 {
    let one_minus = 1.0 - rho * rho;
    if one_minus <= 0.0 {
        return 0.0;
    }
    let dof = (n - 2) as f64;
    let t = rho.abs() * (dof / one_minus).sqrt();
    let dist = StudentsT::new(0.0, 1.0, dof).expect("valid t distribution");
    (2.0 * dist.sf(t)).clamp(0.0, 1.0)
}

/// Significance stars for the 0.05 / 0.001 / 0.0001 threshold ladder.
pub fn star_code(p: f64) -> &'static str {
    if p < 0.0001 {
        "***"
    } else if p < 0.001 {
        "**"
    } else if p < 0.05 {
        "*"
    } else {
        ""
    }
}

/// The number of indicators a panel compares.
pub const PANEL_WIDTH: usize = 5;

/// Means, sample standard deviations and all pairwise Spearman correlations
/// of five indicators over a set of journals. Matrices are full 5×5,
/// symmetric, with an exact unit diagonal; a degenerate (constant) indicator
/// pair is reported as a NaN correlation with p = 1.
#[derive(Debug, Clone)]
pub struct CorrelationPanel {
    pub labels: [String; PANEL_WIDTH],
    /// Journals retained after listwise-complete filtering.
    pub n: usize,
    pub means: [f64; PANEL_WIDTH],
    pub std_devs: [f64; PANEL_WIDTH],
    pub rho: [[f64; PANEL_WIDTH]; PANEL_WIDTH],
    pub p: [[f64; PANEL_WIDTH]; PANEL_WIDTH],
    pub stars: [[&'static str; PANEL_WIDTH]; PANEL_WIDTH],
}

/// Builds a correlation panel from per-journal indicator rows. Rows with any
/// missing indicator are dropped listwise so every pairwise comparison uses
/// the same n.
pub fn build_panel(
    labels: [String; PANEL_WIDTH],
    rows: &[[Option<f64>; PANEL_WIDTH]],
) -> Result<CorrelationPanel, StatsError> {
    let complete: Vec<[f64; PANEL_WIDTH]> = rows
        .iter()
        .filter_map(|row| {
            let mut values = [0.0f64; PANEL_WIDTH];
            for (slot, cell) in values.iter_mut().zip(row) {
                *slot = (*cell)?;
            }
            Some(values)
        })
        .collect();
    let n = complete.len();
    if n < 3 {
        return Err(StatsError::InsufficientData { needed: 3, got: n });
    }

    let mut means = [0.0f64; PANEL_WIDTH];
    let mut std_devs = [0.0f64; PANEL_WIDTH];
    let mut columns: Vec<Vec<f64>> = (0..PANEL_WIDTH).map(|_| Vec::with_capacity(n)).collect();
    for row in &complete {
        for (i, &value) in row.iter().enumerate() {
            columns[i].push(value);
        }
    }
    for i in 0..PANEL_WIDTH {
        means[i] = columns[i].iter().sum::<f64>() / n as f64;
        let ss: f64 = columns[i].iter().map(|v| (v - means[i]).powi(2)).sum();
        std_devs[i] = (ss / (n - 1) as f64).sqrt();
    }

    let mut rho = [[1.0f64; PANEL_WIDTH]; PANEL_WIDTH];
    let mut p = [[0.0f64; PANEL_WIDTH]; PANEL_WIDTH];
    let mut stars = [[""; PANEL_WIDTH]; PANEL_WIDTH];
    for i in 0..PANEL_WIDTH {
        for j in 0..i {
            let (r, pv) = match spearman(&columns[i], &columns[j]) {
                Ok(pair) => pair,
                Err(StatsError::DegenerateInput(_)) => (f64::NAN, 1.0),
                Err(other) => return Err(other),
            };
            rho[i][j] = r;
            rho[j][i] = r;
            p[i][j] = pv;
            p[j][i] = pv;
            let star = if r.is_nan() { "" } else { star_code(pv) };
            stars[i][j] = star;
            stars[j][i] = star;
        }
    }

    Ok(CorrelationPanel {
        labels,
        n,
        means,
        std_devs,
        rho,
        p,
        stars,
    })
}
