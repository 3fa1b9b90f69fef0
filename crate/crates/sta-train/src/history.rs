use std::path::Path;

use crate::error::Result;

/// Per-epoch training record. Losses are means over the epoch's samples,
/// each evaluated before that sample's update.
#[derive(Debug, Clone, PartialEq)]
pub struct EpochRecord {
    pub epoch: u32,
    /// Annealing width S(t) used throughout the epoch.
    pub s_t: f64,
    /// Mean weighted reconstruction term of the cost.
    pub loss_rec: f64,
    /// Mean weighted classification term of the cost.
    pub loss_cls: f64,
    pub loss_total: f64,
}

/// The full loss trajectory of one training run.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct TrainHistory {
    pub records: Vec<EpochRecord>,
}

impl TrainHistory {
    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    /// CSV document with header `epoch,S_t,loss_rec,loss_cls,loss_total`.
    pub fn to_csv_string(&self) -> String {
        let mut out = String::from("epoch,S_t,loss_rec,loss_cls,loss_total\n");
        for r in &self.records {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                r.epoch, r.s_t, r.loss_rec, r.loss_cls, r.loss_total
            ));
        }
        out
    }

    pub fn write_csv(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.to_csv_string())?;
        Ok(())
    }
}
