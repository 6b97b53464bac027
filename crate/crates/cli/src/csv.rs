//! Fixed-schema CSV rows for the random-experiment batches.

use antimagic::{format_rational, TrialBatchRecord};

pub const HEADER: &str = "n,p,trials,seed,frac_diam_le2,frac_radius_le2,mean_X,expected_X,frac_X_ge_1,markov_ok,frac_antimagic_verified";

pub fn row(record: &TrialBatchRecord) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{},{},{}",
        record.n,
        format_rational(&record.p),
        record.trials,
        record.seed,
        format_rational(&record.frac_diam_le2),
        format_rational(&record.frac_radius_le2),
        format_rational(&record.mean_x),
        format_rational(&record.expected_x),
        format_rational(&record.frac_x_ge_1),
        record.markov_ok,
        record
            .frac_antimagic_verified
            .as_ref()
            .map(format_rational)
            .unwrap_or_default(),
    )
}

/// Header plus one row, newline-terminated.
pub fn table(record: &TrialBatchRecord) -> String {
    format!("{HEADER}\n{}\n", row(record))
}

#[cfg(test)]
mod tests {
    use super::*;
    use antimagic::{diameter2_trials, parse_rational};

    #[test]
    fn rows_are_exact_and_stable() {
        let p = parse_rational("1/2").unwrap();
        let record = diameter2_trials(2, &p, 4, 9).unwrap();
        let line = row(&record);
        assert!(line.starts_with("2,1/2,4,9,"));
        assert_eq!(line.split(',').count(), 11);
        // diam2 mode leaves the pipeline column empty
        assert!(line.ends_with(','));
        assert_eq!(row(&record), line);
    }
}
