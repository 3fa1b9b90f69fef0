use crate::error::{CoreError, Result};

/// Rectangular arrangement of the hidden units. Unit `j` sits at grid
/// coordinate `(j / cols, j % cols)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridTopology {
    rows: usize,
    cols: usize,
    coords: Vec<(usize, usize)>,
}

impl GridTopology {
    /// Builds a `rows x cols` grid. At least 4 units are required.
    pub fn new(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 || cols == 0 || rows * cols < 4 {
            return Err(CoreError::InvalidArgument(format!(
                "grid must have rows*cols >= 4 units, got {rows}x{cols}"
            )));
        }
        let coords = (0..rows * cols).map(|j| (j / cols, j % cols)).collect();
        Ok(Self { rows, cols, coords })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Number of hidden units.
    pub fn n_units(&self) -> usize {
        self.rows * self.cols
    }

    /// Grid coordinate of unit `j`.
    pub fn coord(&self, j: usize) -> Result<(usize, usize)> {
        self.coords
            .get(j)
            .copied()
            .ok_or_else(|| CoreError::InvalidArgument(format!("unit index {j} out of range")))
    }

    /// Unit index at `(row, col)`.
    pub fn index(&self, row: usize, col: usize) -> Result<usize> {
        if row >= self.rows || col >= self.cols {
            return Err(CoreError::InvalidArgument(format!(
                "coordinate ({row},{col}) outside {}x{} grid",
                self.rows, self.cols
            )));
        }
        Ok(row * self.cols + col)
    }

    /// Euclidean distance between the grid coordinates of units `a` and `b`.
    pub fn distance(&self, a: usize, b: usize) -> Result<f64> {
        let (ra, ca) = self.coord(a)?;
        let (rb, cb) = self.coord(b)?;
        let dr = ra as f64 - rb as f64;
        let dc = ca as f64 - cb as f64;
        Ok((dr * dr + dc * dc).sqrt())
    }
}

/// Euclidean distance between the integer grid coordinates of units `a` and `b`.
pub fn grid_distance(a: usize, b: usize, grid: &GridTopology) -> Result<f64> {
    grid.distance(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_grids_below_four_units() {
        assert!(GridTopology::new(1, 3).is_err());
        assert!(GridTopology::new(0, 5).is_err());
        assert!(GridTopology::new(2, 2).is_ok());
        assert!(GridTopology::new(1, 4).is_ok());
    }

    #[test]
    fn index_coordinate_round_trip_is_exact() {
        let g = GridTopology::new(3, 5).unwrap();
        for j in 0..g.n_units() {
            let (r, c) = g.coord(j).unwrap();
            assert_eq!(g.index(r, c).unwrap(), j);
        }
    }

    #[test]
    fn distance_identity_is_zero() {
        let g = GridTopology::new(4, 4).unwrap();
        assert_eq!(grid_distance(7, 7, &g).unwrap(), 0.0);
    }

    #[test]
    fn distance_axis_aligned() {
        let g = GridTopology::new(1, 4).unwrap();
        // units at (0,0) and (0,3)
        assert_eq!(grid_distance(0, 3, &g).unwrap(), 3.0);
    }

    #[test]
    fn distance_three_four_five() {
        let g = GridTopology::new(4, 5).unwrap();
        // (0,0) and (3,4)
        let a = g.index(0, 0).unwrap();
        let b = g.index(3, 4).unwrap();
        assert_eq!(grid_distance(a, b, &g).unwrap(), 5.0);
    }

    #[test]
    fn distance_rejects_out_of_range_index() {
        let g = GridTopology::new(2, 2).unwrap();
        assert!(grid_distance(0, 4, &g).is_err());
        assert!(grid_distance(9, 0, &g).is_err());
    }
}
