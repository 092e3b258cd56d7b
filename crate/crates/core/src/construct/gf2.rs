//! Binary matroids from matrices over GF(2). Columns are bitmasks of row
//! indices; the represented matroid's circuits are the minimal nonempty
//! column sets whose XOR vanishes.

use crate::error::{Error, Result};
use crate::family::CircuitFamily;
use crate::matroid::Matroid;
use crate::subset::{subsets_of_size, Subset};

/// Hard cap on column count for matroid extraction (subset scan).
pub const GF2_MAX_COLS: usize = 24;

/// A matrix over GF(2), stored column-wise: `cols[j]` has bit `i` set iff
/// entry `(i, j)` is 1.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: usize,
    cols: Vec<u64>,
}

impl Gf2Matrix {
    /// Build a matrix, validating that every column fits in `rows` bits.
    pub fn new(rows: usize, cols: Vec<u64>) -> Result<Gf2Matrix> {
        if rows > 64 {
            return Err(Error::GroundTooLarge(rows));
        }
        if cols.len() > GF2_MAX_COLS {
            return Err(Error::SearchCap {
                size: cols.len(),
                cap: GF2_MAX_COLS,
            });
        }
        if rows < 64 {
            for (j, &c) in cols.iter().enumerate() {
                if c >> rows != 0 {
                    return Err(Error::InvalidParams(format!(
                        "column {j} has a bit outside the {rows} rows"
                    )));
                }
            }
        }
        Ok(Gf2Matrix { rows, cols })
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Columns as row-index bitmasks.
    pub fn cols(&self) -> &[u64] {
        &self.cols
    }

    /// The represented matroid on column indices: circuits are minimal
    /// nonempty column subsets XORing to zero.
    pub fn matroid(&self) -> Result<Matroid> {
        let n = self.cols.len();
        let mut circuits: Vec<Subset> = Vec::new();
        for k in 1..=n {
            'candidate: for cand in subsets_of_size(n, k) {
                for &c in &circuits {
                    if c.is_subset_of(cand) {
                        continue 'candidate;
                    }
                }
                let mut xor = 0u64;
                for j in cand.iter() {
                    xor ^= self.cols[j];
                }
                if xor == 0 {
                    circuits.push(cand);
                }
            }
        }
        Ok(Matroid::new_unchecked(CircuitFamily::new(n, circuits)?))
    }
}
