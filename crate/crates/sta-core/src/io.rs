use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::grid::GridTopology;
use crate::model::{FeatureRange, StaModel};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct GridSpec {
    rows: usize,
    cols: usize,
}

/// On-disk model document. Matrices are row-major arrays of arrays and
/// every number is written with 17 significant digits, which round-trips
/// f64 exactly.
#[derive(Serialize, Deserialize)]
struct ModelFile {
    format_version: u32,
    grid: GridSpec,
    sigma_rbf: f64,
    input_dim: usize,
    num_classes: usize,
    class_names: Vec<String>,
    normalization: Vec<FeatureRange>,
    #[serde(rename = "W")]
    w: Vec<Vec<f64>>,
    #[serde(rename = "V_dec")]
    v_dec: Vec<Vec<f64>>,
    #[serde(rename = "V_cls")]
    v_cls: Vec<Vec<f64>>,
}

/// JSON formatter that writes floats as `d.dddddddddddddddde±x`
/// (17 significant digits).
struct SigDigitFormatter;

impl serde_json::ser::Formatter for SigDigitFormatter {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Serializes a model to its JSON document text.
pub fn model_to_string(model: &StaModel) -> Result<String> {
    model.validate()?;
    let file = ModelFile {
        format_version: FORMAT_VERSION,
        grid: GridSpec {
            rows: model.grid.rows(),
            cols: model.grid.cols(),
        },
        sigma_rbf: model.sigma_rbf,
        input_dim: model.input_dim,
        num_classes: model.num_classes,
        class_names: model.class_names.clone(),
        normalization: model.normalization.clone(),
        w: model.w.clone(),
        v_dec: model.v_dec.clone(),
        v_cls: model.v_cls.clone(),
    };
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, SigDigitFormatter);
    file.serialize(&mut ser)?;
    Ok(String::from_utf8(buf).expect("serializer emits UTF-8"))
}

/// Writes the model document to `path`.
pub fn save_model(model: &StaModel, path: &Path) -> Result<()> {
    let text = model_to_string(model)?;
    let mut f = std::fs::File::create(path)?;
    f.write_all(text.as_bytes())?;
    f.write_all(b"\n")?;
    Ok(())
}

/// Parses a model from its JSON document text.
pub fn model_from_str(text: &str) -> Result<StaModel> {
    let file: ModelFile = serde_json::from_str(text)?;
    if file.format_version != FORMAT_VERSION {
        return Err(CoreError::VersionMismatch {
            expected: FORMAT_VERSION,
            found: file.format_version,
        });
    }
    let model = StaModel {
        grid: GridTopology::new(file.grid.rows, file.grid.cols)?,
        w: file.w,
        v_dec: file.v_dec,
        v_cls: file.v_cls,
        sigma_rbf: file.sigma_rbf,
        input_dim: file.input_dim,
        num_classes: file.num_classes,
        class_names: file.class_names,
        normalization: file.normalization,
    };
    model.validate()?;
    Ok(model)
}

/// Loads a model document from `path`.
pub fn load_model(path: &Path) -> Result<StaModel> {
    let text = std::fs::read_to_string(path)?;
    model_from_str(&text)
}
