use std::path::PathBuf;

use crate::csv_load::{load_csv, load_csv_reader};
use crate::dataset::Dataset;
use crate::error::{DataError, Result};

/// Environment variable that points at an alternative data directory
/// holding `iris.csv` / `wine.csv`.
pub const DATA_DIR_ENV: &str = "STA_DATA_DIR";

const IRIS_CSV: &str = include_str!("../../../data/iris.csv");
const WINE_CSV: &str = include_str!("../../../data/wine.csv");

/// Loads one of the bundled raw datasets by name (`iris` or `wine`).
///
/// When `STA_DATA_DIR` is set, `<dir>/<name>.csv` is read instead of the
/// compiled-in copy.
pub fn bundled_dataset(name: &str) -> Result<Dataset> {
    let label_col = match name {
        "iris" => "species",
        "wine" => "class",
        other => return Err(DataError::UnknownDataset(other.to_string())),
    };
    if let Ok(dir) = std::env::var(DATA_DIR_ENV) {
        let path = PathBuf::from(dir).join(format!("{name}.csv"));
        return load_csv(&path, Some(label_col));
    }
    let text = match name {
        "iris" => IRIS_CSV,
        _ => WINE_CSV,
    };
    load_csv_reader(text.as_bytes(), Some(label_col))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iris_has_expected_shape() {
        let ds = bundled_dataset("iris").unwrap();
        assert_eq!(ds.n_samples(), 150);
        assert_eq!(ds.n_features(), 4);
        assert_eq!(ds.class_names, vec!["setosa", "versicolor", "virginica"]);
        let labels = ds.labels.unwrap();
        for c in 0..3 {
            assert_eq!(labels.iter().filter(|&&l| l == c).count(), 50);
        }
    }

    #[test]
    fn wine_has_expected_shape() {
        let ds = bundled_dataset("wine").unwrap();
        assert_eq!(ds.n_samples(), 178);
        assert_eq!(ds.n_features(), 13);
        assert_eq!(ds.num_classes(), 3);
    }

    #[test]
    fn unknown_name_is_rejected() {
        assert!(matches!(
            bundled_dataset("mnist-full").unwrap_err(),
            DataError::UnknownDataset(_)
        ));
    }
}
