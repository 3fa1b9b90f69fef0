use std::io::Read;
use std::path::Path;

use crate::dataset::Dataset;
use crate::error::{DataError, Result};

/// Parses a raw (unnormalized) dataset from a headered CSV file.
///
/// Every column except the optional label column must be numeric. Label
/// strings are mapped to indices in first-appearance order.
pub fn load_csv(path: &Path, label_column: Option<&str>) -> Result<Dataset> {
    let file = std::fs::File::open(path).map_err(|source| DataError::Io {
        path: path.display().to_string(),
        source,
    })?;
    load_csv_reader(file, label_column)
}

/// As [`load_csv`], reading from any source.
pub fn load_csv_reader<R: Read>(reader: R, label_column: Option<&str>) -> Result<Dataset> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .from_reader(reader);

    let headers: Vec<String> = rdr.headers()?.iter().map(str::to_string).collect();
    let label_idx = match label_column {
        Some(name) => Some(
            headers
                .iter()
                .position(|h| h == name)
                .ok_or_else(|| DataError::MissingColumn(name.to_string()))?,
        ),
        None => None,
    };

    let mut x = Vec::new();
    let mut label_strings: Vec<String> = Vec::new();
    for (i, record) in rdr.records().enumerate() {
        let record = record?;
        let row_no = i + 2; // 1-based, after the header line
        if record.len() != headers.len() {
            return Err(DataError::RaggedRow {
                row: row_no,
                expected: headers.len(),
                got: record.len(),
            });
        }
        let mut row = Vec::with_capacity(headers.len() - label_idx.map_or(0, |_| 1));
        for (col, cell) in record.iter().enumerate() {
            if Some(col) == label_idx {
                label_strings.push(cell.to_string());
                continue;
            }
            let value: f64 = cell.trim().parse().map_err(|_| DataError::NonNumericCell {
                row: row_no,
                column: headers[col].clone(),
                value: cell.to_string(),
            })?;
            row.push(value);
        }
        x.push(row);
    }

    let (labels, class_names) = match label_idx {
        None => (None, Vec::new()),
        Some(_) => {
            let mut names: Vec<String> = Vec::new();
            let labels = label_strings
                .into_iter()
                .map(|s| match names.iter().position(|n| *n == s) {
                    Some(idx) => idx,
                    None => {
                        names.push(s);
                        names.len() - 1
                    }
                })
                .collect();
            (Some(labels), names)
        }
    };

    Ok(Dataset::new(x, labels, class_names))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_labeled_csv() {
        let text = "a,b,class\n1,2,x\n3,4,y\n5,6,x\n";
        let ds = load_csv_reader(text.as_bytes(), Some("class")).unwrap();
        assert_eq!(ds.n_samples(), 3);
        assert_eq!(ds.n_features(), 2);
        assert_eq!(ds.class_names, vec!["x", "y"]);
        assert_eq!(ds.labels, Some(vec![0, 1, 0]));
        assert_eq!(ds.x[2], vec![5.0, 6.0]);
    }

    #[test]
    fn parses_unlabeled_csv() {
        let text = "a,b\n1,2\n3,4\n";
        let ds = load_csv_reader(text.as_bytes(), None).unwrap();
        assert!(ds.labels.is_none());
        assert!(ds.class_names.is_empty());
        assert_eq!(ds.n_features(), 2);
    }

    #[test]
    fn non_numeric_cell_names_row_and_column() {
        let text = "a,b,class\n1,2,x\n1,abc,y\n";
        let err = load_csv_reader(text.as_bytes(), Some("class")).unwrap_err();
        match err {
            DataError::NonNumericCell { row, column, value } => {
                assert_eq!(row, 3);
                assert_eq!(column, "b");
                assert_eq!(value, "abc");
            }
            other => panic!("unexpected error {other}"),
        }
    }

    #[test]
    fn ragged_row_is_reported() {
        let text = "a,b\n1,2\n1\n";
        let err = load_csv_reader(text.as_bytes(), None).unwrap_err();
        assert!(matches!(err, DataError::RaggedRow { row: 3, .. }));
    }

    #[test]
    fn missing_label_column_is_reported() {
        let text = "a,b\n1,2\n";
        let err = load_csv_reader(text.as_bytes(), Some("class")).unwrap_err();
        assert!(matches!(err, DataError::MissingColumn(c) if c == "class"));
    }

    #[test]
    fn missing_file_is_reported_with_path() {
        let err = load_csv(Path::new("/no/such/file.csv"), None).unwrap_err();
        assert!(matches!(err, DataError::Io { .. }));
    }
}
