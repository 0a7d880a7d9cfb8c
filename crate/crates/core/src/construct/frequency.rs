use crate::error::{Error, Result};
use crate::matrix::{BinaryMatrix, IntersectMode};
use crate::objective::Bicluster;

/// Per column, the number of rows with `x_j = v`.
pub fn frequency_counts(matrix: &BinaryMatrix, mode: IntersectMode) -> Result<Vec<usize>> {
    let Some(v) = mode.value() else {
        return Err(Error::UnsupportedMode { op: "frequency_counts", mode });
    };
    Ok((1..=matrix.n())
        .map(|j| {
            let ones = matrix.column_sum(j);
            if v == 1 {
                ones
            } else {
                matrix.r() - ones
            }
        })
        .collect())
}

/// Per column, the number of sets whose intersect set contains it.
pub fn higher_order_frequency(sets: &[Bicluster], mode: IntersectMode, n: usize) -> Result<Vec<usize>> {
    let mut counts = vec![0; n];
    for s in sets {
        if s.mode() != mode {
            return Err(Error::ModeMismatch { expected: mode, found: s.mode() });
        }
        for &j in s.cols() {
            if j > n {
                return Err(Error::ColumnOutOfRange { col: j, cols: n });
            }
            counts[j - 1] += 1;
        }
    }
    Ok(counts)
}

/// `out[i][k]` holds the rows shared by sets `i` and `k`, sorted.
pub fn pairwise_overlaps(sets: &[Bicluster]) -> Vec<Vec<Vec<usize>>> {
    sets.iter()
        .map(|a| {
            sets.iter()
                .map(|b| a.rows().iter().copied().filter(|&i| b.contains_row(i)).collect())
                .collect()
        })
        .collect()
}
