//! Pearson chi-square over contingency tables, plus the built-in corpus
//! counts behind the topic/focus positional assignments.
//!
//! Two corpus analyses ship with the crate: the distribution of the
//! backward-looking center over SOV vs OSV sentences, and the distribution
//! of givenness statuses over sentence positions (sentence-initial,
//! immediately preverbal, postverbal). Both come out significant under the
//! uncorrected Pearson statistic; no continuity correction is applied
//! anywhere.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatsError {
    #[error("table must be rectangular and at least 2x2 with a positive total")]
    Malformed,
    #[error("degenerate table: row or column with an all-zero total")]
    Degenerate,
}

/// A labeled contingency table of non-negative counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContingencyTable {
    pub name: String,
    pub row_labels: Vec<String>,
    pub col_labels: Vec<String>,
    pub counts: Vec<Vec<u64>>,
}

impl ContingencyTable {
    pub fn new(
        name: &str,
        row_labels: &[&str],
        col_labels: &[&str],
        counts: Vec<Vec<u64>>,
    ) -> Result<ContingencyTable, StatsError> {
        let rows = counts.len();
        let cols = counts.first().map(|r| r.len()).unwrap_or(0);
        if rows < 2
            || cols < 2
            || counts.iter().any(|r| r.len() != cols)
            || row_labels.len() != rows
            || col_labels.len() != cols
            || counts.iter().flatten().sum::<u64>() == 0
        {
            return Err(StatsError::Malformed);
        }
        Ok(ContingencyTable {
            name: name.to_string(),
            row_labels: row_labels.iter().map(|s| s.to_string()).collect(),
            col_labels: col_labels.iter().map(|s| s.to_string()).collect(),
            counts,
        })
    }

    pub fn row_totals(&self) -> Vec<u64> {
        self.counts.iter().map(|r| r.iter().sum()).collect()
    }

    pub fn col_totals(&self) -> Vec<u64> {
        let cols = self.counts[0].len();
        (0..cols)
            .map(|j| self.counts.iter().map(|r| r[j]).sum())
            .collect()
    }

    pub fn grand_total(&self) -> u64 {
        self.counts.iter().flatten().sum()
    }
}

impl fmt::Display for ContingencyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let label_width = self.row_labels.iter().map(|l| l.len()).max().unwrap_or(0);
        write!(f, "  {:label_width$}", "")?;
        for col in &self.col_labels {
            write!(f, "  {col:>10}")?;
        }
        writeln!(f)?;
        for (label, row) in self.row_labels.iter().zip(&self.counts) {
            write!(f, "  {label:label_width$}")?;
            for count in row {
                write!(f, "  {count:>10}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ChiSquareResult {
    pub statistic: f64,
    pub degrees_of_freedom: usize,
}

/// The uncorrected Pearson statistic: sum of (observed − expected)² /
/// expected, with expected cell counts from the row and column marginals.
pub fn chi_square(table: &ContingencyTable) -> Result<ChiSquareResult, StatsError> {
    let row_totals = table.row_totals();
    let col_totals = table.col_totals();
    if row_totals.contains(&0) || col_totals.contains(&0) {
        return Err(StatsError::Degenerate);
    }
    let n = table.grand_total() as f64;
    let mut statistic = 0.0;
    for (i, row) in table.counts.iter().enumerate() {
        for (j, &observed) in row.iter().enumerate() {
            let expected = row_totals[i] as f64 * col_totals[j] as f64 / n;
            let diff = observed as f64 - expected;
            statistic += diff * diff / expected;
        }
    }
    Ok(ChiSquareResult {
        statistic,
        degrees_of_freedom: (table.counts.len() - 1) * (table.counts[0].len() - 1),
    })
}

/// Critical values for the significance bands reported by the CLI.
/// (df, threshold, band label), tightest band first per df.
const CRITICAL_VALUES: &[(usize, f64, &str)] = &[
    (1, 10.828, "p < 0.001"),
    (1, 7.879, "p < 0.005"),
    (1, 6.635, "p < 0.01"),
    (1, 3.841, "p < 0.05"),
    (2, 13.816, "p < 0.001"),
    (2, 10.597, "p < 0.005"),
    (2, 9.210, "p < 0.01"),
    (2, 5.991, "p < 0.05"),
];

/// The tightest significance band the statistic clears, for df 1 or 2.
pub fn significance_band(result: &ChiSquareResult) -> Option<&'static str> {
    CRITICAL_VALUES
        .iter()
        .find(|(df, threshold, _)| {
            *df == result.degrees_of_freedom && result.statistic >= *threshold
        })
        .map(|(_, _, band)| *band)
}

// ---------------------------------------------------------------------------
// Built-in corpus tables
// ---------------------------------------------------------------------------

/// Cb position in 30 SOV and 30 OSV corpus sentences, restricted to the
/// discourses where the analysis was conclusive.
pub fn figure1_table() -> ContingencyTable {
    ContingencyTable::new(
        "Cb by word order",
        &["SOV", "OSV"],
        &["Cb=Subject", "Cb=Object"],
        vec![vec![14, 6], vec![4, 16]],
    )
    .expect("static table")
}

/// Givenness status by sentence position, all four status rows.
pub fn figure2_table() -> ContingencyTable {
    ContingencyTable::new(
        "Given/new status by sentence position",
        &[
            "discourse-old",
            "inferrable",
            "d-new hearer-old",
            "d-new hearer-new",
        ],
        &["S-init", "IPV", "Post-V"],
        vec![
            vec![55, 43, 56],
            vec![8, 10, 4],
            vec![1, 1, 0],
            vec![0, 10, 0],
        ],
    )
    .expect("static table")
}

/// The brand-new (hearer-new) row against everything else, over the
/// sentence-initial and immediately-preverbal columns: the contrast that
/// ties presentational focus to the preverbal position.
pub fn figure2_brand_new_vs_given() -> ContingencyTable {
    ContingencyTable::new(
        "brand-new vs given, S-init vs IPV",
        &["brand-new", "given"],
        &["S-init", "IPV"],
        vec![vec![0, 10], vec![64, 54]],
    )
    .expect("static table")
}

/// Both corpus tables, in presentation order.
pub fn builtin_tables() -> Vec<ContingencyTable> {
    vec![figure1_table(), figure2_table()]
}

/// The published goodness-of-fit footnote (SOV counts taken as expected
/// frequencies for the OSV observations, chi-square = 8.8) does not follow
/// from the published counts; recomputing the straightforward statistic
/// gives a very different value, so the tool reports it as not reproduced
/// instead of silently substituting its own number.
#[derive(Debug, Clone, PartialEq)]
pub struct FootnoteCheck {
    pub published: f64,
    pub recomputed: f64,
}

impl FootnoteCheck {
    pub fn reproduced(&self) -> bool {
        (self.published - self.recomputed).abs() < 0.05
    }
}

pub fn footnote_check() -> FootnoteCheck {
    // goodness of fit of the OSV Cb counts against the SOV counts as
    // expected frequencies, over the two conclusive rows
    let observed = [4.0, 16.0];
    let expected = [14.0, 6.0];
    let recomputed = observed
        .iter()
        .zip(expected.iter())
        .map(|(o, e)| (o - e) * (o - e) / e)
        .sum();
    FootnoteCheck {
        published: 8.8,
        recomputed,
    }
}
