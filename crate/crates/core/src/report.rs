//! Deterministic table and CSV emission.
//!
//! All numeric formatting is locale-independent ("." decimal separator) and
//! rounds half away from zero at the printed precision, so emitted bytes are
//! stable across platforms and golden files stay valid. Indices print to 3
//! decimals, eigenfactor scores to 5, ranks as integers.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::indices::JournalScore;
use crate::networks::{CitingInstitutionRow, InstitutionRow, WeightedGraph};
use crate::stats::{rank_descending, CorrelationPanel, PANEL_WIDTH};

/// Output syntax for emitted tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Text,
    Markdown,
}

impl FromStr for TableFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<TableFormat, String> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(TableFormat::Csv),
            "text" | "txt" | "aligned" => Ok(TableFormat::Text),
            "markdown" | "md" => Ok(TableFormat::Markdown),
            other => Err(format!("unknown format `{other}` (csv, text, markdown)")),
        }
    }
}

/// Which indicator a ranking table is sorted by.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SortKey {
    Aai,
    Aaiw,
    Aaid,
    Aaiwd,
    D,
    Jif,
    Es,
}

impl SortKey {
    /// The weighted family shows AAIW/AAIWD columns; everything else shows
    /// the plain AAI/AAID columns.
    pub fn weighted_family(self) -> bool {
        matches!(self, SortKey::Aaiw | SortKey::Aaiwd)
    }
}

impl FromStr for SortKey {
    type Err = String;

    fn from_str(s: &str) -> Result<SortKey, String> {
        match s.to_ascii_lowercase().as_str() {
            "aai" => Ok(SortKey::Aai),
            "aaiw" => Ok(SortKey::Aaiw),
            "aaid" => Ok(SortKey::Aaid),
            "aaiwd" => Ok(SortKey::Aaiwd),
            "d" | "diversity" => Ok(SortKey::D),
            "jif" => Ok(SortKey::Jif),
            "es" => Ok(SortKey::Es),
            other => Err(format!(
                "unknown sort key `{other}` (aai, aaiw, aaid, aaiwd, d, jif, es)"
            )),
        }
    }
}

/// Formats `value` with exactly `decimals` fraction digits, rounding half
/// away from zero on the decimal expansion (conventional table typesetting).
pub fn format_fixed(value: f64, decimals: usize) -> String {
    if !value.is_finite() {
        return if value.is_nan() {
            "NA".to_string()
        } else {
            value.to_string()
        };
    }
    // Print with guard digits first, then round the decimal expansion; this
    // keeps values that are decimal halves (0.0625, 1.2605) rounding the way
    // a typesetter would, independent of their binary representation.
    let guarded = format!("{:.*}", decimals + 9, value.abs());
    let (int_part, frac_part) = guarded.split_once('.').expect("fixed format has a point");
    let mut digits: Vec<u8> = int_part
        .bytes()
        .chain(frac_part.bytes())
        .map(|b| b - b'0')
        .collect();
    let keep = int_part.len() + decimals;
    let round_up = digits.get(keep).is_some_and(|&d| d >= 5);
    digits.truncate(keep);
    if round_up {
        let mut i = digits.len();
        loop {
            if i == 0 {
                digits.insert(0, 1);
                break;
            }
            i -= 1;
            if digits[i] == 9 {
                digits[i] = 0;
            } else {
                digits[i] += 1;
                break;
            }
        }
    }
    let int_len = digits.len() - decimals;
    let mut out = String::new();
    if value < 0.0 && digits.iter().any(|&d| d != 0) {
        out.push('-');
    }
    let int_digits = &digits[..int_len];
    let first_nonzero = int_digits.iter().position(|&d| d != 0);
    match first_nonzero {
        Some(pos) => {
            for &d in &int_digits[pos..] {
                out.push((b'0' + d) as char);
            }
        }
        None => out.push('0'),
    }
    if decimals > 0 {
        out.push('.');
        for &d in &digits[int_len..] {
            out.push((b'0' + d) as char);
        }
    }
    out
}

/// Quotes a CSV field when it contains a delimiter, quote or newline.
pub fn csv_escape(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// One emitted ranking row: the printed values and their global ranks.
/// `index`/`product` hold AAI/AAID or AAIW/AAIWD depending on the family.
#[derive(Debug, Clone, PartialEq)]
pub struct RankingRow {
    pub journal: String,
    pub index: f64,
    pub index_rank: u32,
    pub d: f64,
    pub d_rank: u32,
    pub product: f64,
    pub product_rank: u32,
    pub jif: Option<f64>,
    pub jif_rank: Option<u32>,
    pub es: Option<f64>,
    pub es_rank: Option<u32>,
}

/// A ranking table: rows sorted by the sort key descending (ties broken by
/// journal name), ranks computed over the full journal population.
#[derive(Debug, Clone)]
pub struct RankingTable {
    pub rows: Vec<RankingRow>,
    pub sort_key: SortKey,
}

/// Competition ranks over the subset of rows where the optional indicator is
/// present; positions of missing values get `None`.
fn optional_ranks(values: &[Option<f64>]) -> Vec<Option<u32>> {
    let present: Vec<f64> = values.iter().copied().flatten().collect();
    if present.is_empty() {
        return vec![None; values.len()];
    }
    let ranked = rank_descending(&present);
    let mut iter = ranked.ranks.into_iter();
    values
        .iter()
        .map(|v| v.map(|_| iter.next().expect("one rank per present value")))
        .collect()
}

impl RankingTable {
    /// Builds the table from journal scores, computing every rank over the
    /// full population.
    pub fn from_scores(scores: &[JournalScore], sort_key: SortKey) -> RankingTable {
        let weighted = sort_key.weighted_family();
        let index_values: Vec<f64> = scores
            .iter()
            .map(|s| if weighted { s.aaiw } else { s.aai })
            .collect();
        let product_values: Vec<f64> = scores
            .iter()
            .map(|s| if weighted { s.aaiwd() } else { s.aaid() })
            .collect();
        let d_values: Vec<f64> = scores.iter().map(|s| s.d).collect();
        let jif_values: Vec<Option<f64>> = scores.iter().map(|s| s.jif).collect();
        let es_values: Vec<Option<f64>> = scores.iter().map(|s| s.es).collect();

        let index_ranks = rank_descending(&index_values).ranks;
        let product_ranks = rank_descending(&product_values).ranks;
        let d_ranks = rank_descending(&d_values).ranks;
        let jif_ranks = optional_ranks(&jif_values);
        let es_ranks = optional_ranks(&es_values);

        let mut rows: Vec<RankingRow> = scores
            .iter()
            .enumerate()
            .map(|(i, score)| RankingRow {
                journal: score.journal_name.clone(),
                index: index_values[i],
                index_rank: index_ranks[i],
                d: d_values[i],
                d_rank: d_ranks[i],
                product: product_values[i],
                product_rank: product_ranks[i],
                jif: jif_values[i],
                jif_rank: jif_ranks[i],
                es: es_values[i],
                es_rank: es_ranks[i],
            })
            .collect();

        let sort_value = |row: &RankingRow| -> f64 {
            match sort_key {
                SortKey::Aai | SortKey::Aaiw => row.index,
                SortKey::Aaid | SortKey::Aaiwd => row.product,
                SortKey::D => row.d,
                SortKey::Jif => row.jif.unwrap_or(f64::NEG_INFINITY),
                SortKey::Es => row.es.unwrap_or(f64::NEG_INFINITY),
            }
        };
        rows.sort_by(|a, b| {
            sort_value(b)
                .total_cmp(&sort_value(a))
                .then_with(|| a.journal.cmp(&b.journal))
        });
        RankingTable { rows, sort_key }
    }

    pub fn header_labels(&self) -> [String; 11] {
        let (index, product) = if self.sort_key.weighted_family() {
            ("aaiw", "aaiwd")
        } else {
            ("aai", "aaid")
        };
        [
            "journal".to_string(),
            index.to_string(),
            format!("r_{index}"),
            "d".to_string(),
            "r_d".to_string(),
            product.to_string(),
            format!("r_{product}"),
            "jif".to_string(),
            "r_jif".to_string(),
            "es".to_string(),
            "r_es".to_string(),
        ]
    }

    fn row_cells(row: &RankingRow) -> [String; 11] {
        [
            row.journal.clone(),
            format_fixed(row.index, 3),
            row.index_rank.to_string(),
            format_fixed(row.d, 3),
            row.d_rank.to_string(),
            format_fixed(row.product, 3),
            row.product_rank.to_string(),
            row.jif.map(|v| format_fixed(v, 3)).unwrap_or_default(),
            row.jif_rank.map(|r| r.to_string()).unwrap_or_default(),
            row.es.map(|v| format_fixed(v, 5)).unwrap_or_default(),
            row.es_rank.map(|r| r.to_string()).unwrap_or_default(),
        ]
    }

    /// Emits the first `top_k` rows (ranks remain global).
    pub fn emit(&self, format: TableFormat, top_k: usize) -> String {
        let header = self.header_labels();
        let rows: Vec<[String; 11]> = self
            .rows
            .iter()
            .take(top_k)
            .map(RankingTable::row_cells)
            .collect();
        emit_cells(&header, &rows, format)
    }
}

fn emit_cells<const W: usize>(
    header: &[String; W],
    rows: &[[String; W]],
    format: TableFormat,
) -> String {
    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            out.push_str(
                &header
                    .iter()
                    .map(|h| csv_escape(h))
                    .collect::<Vec<_>>()
                    .join(","),
            );
            out.push('\n');
            for row in rows {
                out.push_str(
                    &row.iter()
                        .map(|c| csv_escape(c))
                        .collect::<Vec<_>>()
                        .join(","),
                );
                out.push('\n');
            }
        }
        TableFormat::Text => {
            let mut widths = [0usize; W];
            for (i, h) in header.iter().enumerate() {
                widths[i] = h.chars().count();
            }
            for row in rows {
                for (i, cell) in row.iter().enumerate() {
                    widths[i] = widths[i].max(cell.chars().count());
                }
            }
            let emit_row = |out: &mut String, cells: &[String; W]| {
                let mut line = String::new();
                for (i, cell) in cells.iter().enumerate() {
                    if i > 0 {
                        line.push_str("  ");
                    }
                    let _ = write!(line, "{:<width$}", cell, width = widths[i]);
                }
                out.push_str(line.trim_end());
                out.push('\n');
            };
            emit_row(&mut out, header);
            for row in rows {
                emit_row(&mut out, row);
            }
        }
        TableFormat::Markdown => {
            out.push_str(&format!("| {} |\n", header.join(" | ")));
            out.push_str(&format!("|{}\n", " --- |".repeat(W)));
            for row in rows {
                out.push_str(&format!("| {} |\n", row.join(" | ")));
            }
        }
    }
    out
}

/// Emits a convergence series as CSV with columns `m,aai`.
pub fn emit_convergence_csv(series: &[(usize, f64)]) -> String {
    let mut out = String::from("m,aai\n");
    for (m, value) in series {
        let _ = writeln!(out, "{m},{}", format_fixed(*value, 6));
    }
    out
}

/// Emits one correlation panel. The text layout mirrors a three-panel
/// comparison table: order, indicator, mean, standard deviation, then the
/// lower triangle of Spearman correlations with star suffixes and a bare
/// `1` on the diagonal.
pub fn emit_panel(panel: &CorrelationPanel, title: &str, format: TableFormat) -> String {
    let header: [String; 9] = [
        "order".to_string(),
        "indicator".to_string(),
        "mean".to_string(),
        "std_dev".to_string(),
        "1".to_string(),
        "2".to_string(),
        "3".to_string(),
        "4".to_string(),
        "5".to_string(),
    ];
    let mut rows: Vec<[String; 9]> = Vec::with_capacity(PANEL_WIDTH);
    for i in 0..PANEL_WIDTH {
        let mut cells: [String; 9] = [
            (i + 1).to_string(),
            panel.labels[i].clone(),
            format_fixed(panel.means[i], 3),
            format_fixed(panel.std_devs[i], 3),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
            String::new(),
        ];
        for j in 0..=i {
            cells[4 + j] = if i == j {
                "1".to_string()
            } else if panel.rho[i][j].is_nan() {
                "NA".to_string()
            } else {
                format!("{}{}", format_fixed(panel.rho[i][j], 3), panel.stars[i][j])
            };
        }
        rows.push(cells);
    }
    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            let _ = writeln!(out, "# {title} (n = {})", panel.n);
            out.push_str(&emit_cells(&header, &rows, TableFormat::Csv));
        }
        _ => {
            let _ = writeln!(out, "{title} (n = {})", panel.n);
            out.push_str(&emit_cells(&header, &rows, format));
        }
    }
    out
}

/// Emits per-journal scores as CSV with full-precision values, suitable for
/// downstream tools. Missing indicators are empty cells.
pub fn emit_scores_csv(scores: &[JournalScore]) -> String {
    let mut out = String::from("journal,m_used,aai,d,aaid,aaiw,aaiwd,jif,es\n");
    for score in scores {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{},{},{}",
            csv_escape(&score.journal_name),
            score.m_used,
            score.aai,
            score.d,
            score.aaid(),
            score.aaiw,
            score.aaiwd(),
            score.jif.map(|v| v.to_string()).unwrap_or_default(),
            score.es.map(|v| v.to_string()).unwrap_or_default(),
        );
    }
    out
}

/// Emits graph nodes as CSV with columns `label,count`.
pub fn emit_nodes_csv(graph: &WeightedGraph) -> String {
    let mut out = String::from("label,count\n");
    for node in &graph.nodes {
        let _ = writeln!(out, "{},{}", csv_escape(&node.label), node.occurrence_count);
    }
    out
}

/// Emits graph edges as CSV with columns `source,target,weight`, using node
/// labels so the file imports directly into standard graph tools.
pub fn emit_edges_csv(graph: &WeightedGraph) -> String {
    let mut out = String::from("source,target,weight\n");
    for edge in &graph.edges {
        let _ = writeln!(
            out,
            "{},{},{}",
            csv_escape(&graph.nodes[edge.a].label),
            csv_escape(&graph.nodes[edge.b].label),
            edge.weight
        );
    }
    out
}

/// Emits the institution output table with the printed precisions of the
/// published layout: percentages and per-paper citations to 2 decimals, mean
/// year to 1.
pub fn emit_institution_table(rows: &[InstitutionRow]) -> String {
    let mut out = String::from("rank,institution,tp,rho_pct,tc,tc_per_tp,avg_py\n");
    for (i, row) in rows.iter().enumerate() {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{},{}",
            i + 1,
            csv_escape(&row.institution),
            row.tp,
            format_fixed(row.rho_pct, 2),
            row.tc,
            format_fixed(row.tc_per_tp, 2),
            format_fixed(row.avg_py, 1),
        );
    }
    out
}

/// Emits the citing-institution table.
pub fn emit_citing_table(rows: &[CitingInstitutionRow]) -> String {
    let mut out = String::from("rank,institution,cp,rho_pct,avg_py\n");
    for (i, row) in rows.iter().enumerate() {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            i + 1,
            csv_escape(&row.institution),
            row.cp,
            format_fixed(row.rho_pct, 2),
            format_fixed(row.avg_py, 1),
        );
    }
    out
}
