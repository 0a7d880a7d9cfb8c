//! The reference set as a binary matrix and the intersect-set algebra over it.
//!
//! Rows are the solutions `x(1)..x(r)`, columns are the variables `1..n`.
//! Every public index in this crate is 1-based; storage is 0-based and
//! word-packed so that agreement sets reduce to bitwise ANDs.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bits;
use crate::error::{Error, Result};

/// Which agreement the intersect set counts: columns fixed at 0, at 1, or at either.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IntersectMode {
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "1")]
    One,
    #[serde(rename = "01")]
    ZeroOne,
}

impl IntersectMode {
    pub const ALL: [IntersectMode; 3] = [IntersectMode::Zero, IntersectMode::One, IntersectMode::ZeroOne];

    /// The single bit value tracked by `Zero`/`One`; `None` for `ZeroOne`.
    pub fn value(self) -> Option<u8> {
        match self {
            IntersectMode::Zero => Some(0),
            IntersectMode::One => Some(1),
            IntersectMode::ZeroOne => None,
        }
    }

    pub fn counts_zeros(self) -> bool {
        matches!(self, IntersectMode::Zero | IntersectMode::ZeroOne)
    }

    pub fn counts_ones(self) -> bool {
        matches!(self, IntersectMode::One | IntersectMode::ZeroOne)
    }
}

impl fmt::Display for IntersectMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IntersectMode::Zero => "0",
            IntersectMode::One => "1",
            IntersectMode::ZeroOne => "01",
        })
    }
}

impl FromStr for IntersectMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "0" => Ok(IntersectMode::Zero),
            "1" => Ok(IntersectMode::One),
            "01" => Ok(IntersectMode::ZeroOne),
            other => Err(Error::InvalidConfig(format!("unknown mode `{other}`, expected 0, 1 or 01"))),
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    cells: Vec<u8>,
    ones: Vec<u64>,
    zeros: Vec<u64>,
}

impl BinaryMatrix {
    /// Builds a matrix from row vectors of 0/1 entries.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let r = rows.len();
        let n = rows.first().map_or(0, |row| row.as_ref().len());
        if r == 0 || n == 0 {
            return Err(Error::EmptyMatrix);
        }
        let words = bits::words_for(n);
        let mut cells = Vec::with_capacity(r * n);
        let mut ones = vec![0u64; r * words];
        let mut zeros = vec![0u64; r * words];
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::LengthMismatch { left: n, right: row.len() });
            }
            for (j, &value) in row.iter().enumerate() {
                let target = match value {
                    0 => &mut zeros,
                    1 => &mut ones,
                    _ => return Err(Error::NonBinaryEntry { row: i + 1, col: j + 1, value }),
                };
                bits::set(&mut target[i * words..(i + 1) * words], j);
                cells.push(value);
            }
        }
        Ok(BinaryMatrix { rows: r, cols: n, words, cells, ones, zeros })
    }

    /// Number of rows `r`.
    pub fn r(&self) -> usize {
        self.rows
    }

    /// Number of columns `n`.
    pub fn n(&self) -> usize {
        self.cols
    }

    /// Entry `x(row)_col`, 1-based.
    pub fn entry(&self, row: usize, col: usize) -> u8 {
        self.cells[(row - 1) * self.cols + (col - 1)]
    }

    /// Row `x(row)` as a 0/1 slice, 1-based row index.
    pub fn row(&self, row: usize) -> &[u8] {
        self.row0(row - 1)
    }

    pub(crate) fn row0(&self, i: usize) -> &[u8] {
        &self.cells[i * self.cols..(i + 1) * self.cols]
    }

    pub(crate) fn words(&self) -> usize {
        self.words
    }

    pub(crate) fn ones0(&self, i: usize) -> &[u64] {
        &self.ones[i * self.words..(i + 1) * self.words]
    }

    pub(crate) fn zeros0(&self, i: usize) -> &[u64] {
        &self.zeros[i * self.words..(i + 1) * self.words]
    }

    /// `f_j`: number of rows with a 1 in column `col` (1-based).
    pub fn column_sum(&self, col: usize) -> usize {
        (0..self.rows).filter(|&i| self.cells[i * self.cols + col - 1] == 1).count()
    }

    /// `|x(row)|_v`: components of a single row counted under `mode`.
    pub fn row_count(&self, row: usize, mode: IntersectMode) -> usize {
        let i = row - 1;
        match mode {
            IntersectMode::Zero => bits::count(self.zeros0(i)),
            IntersectMode::One => bits::count(self.ones0(i)),
            IntersectMode::ZeroOne => self.cols,
        }
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &[u8]> {
        self.cells.chunks(self.cols)
    }

    /// Checks that `rows` is a nonempty list of valid 1-based row indices.
    pub(crate) fn check_rows(&self, rows: &[usize]) -> Result<()> {
        if rows.is_empty() {
            return Err(Error::EmptyRowSet);
        }
        match rows.iter().find(|&&i| i == 0 || i > self.rows) {
            Some(&row) => Err(Error::RowOutOfRange { row, rows: self.rows }),
            None => Ok(()),
        }
    }

    pub(crate) fn check_row(&self, row: usize) -> Result<()> {
        self.check_rows(std::slice::from_ref(&row))
    }

    /// Agreement bitsets `(N_0(S), N_1(S))` for 0-based rows; `rows` must be nonempty.
    pub(crate) fn agreement0(&self, rows: impl IntoIterator<Item = usize>) -> (Vec<u64>, Vec<u64>) {
        let mut rows = rows.into_iter();
        let first = rows.next().expect("agreement over an empty row set");
        let mut zeros = self.zeros0(first).to_vec();
        let mut ones = self.ones0(first).to_vec();
        for i in rows {
            bits::and_assign(&mut zeros, self.zeros0(i));
            bits::and_assign(&mut ones, self.ones0(i));
        }
        (zeros, ones)
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BinaryMatrix {}x{}", self.rows, self.cols)?;
        for row in self.rows_iter() {
            let line: Vec<String> = row.iter().map(u8::to_string).collect();
            writeln!(f, "  {}", line.join(" "))?;
        }
        Ok(())
    }
}

/// 1-based column indices of an agreement pair under `mode`.
pub(crate) fn agreement_columns(zeros: &[u64], ones: &[u64], mode: IntersectMode) -> Vec<usize> {
    let mut out: Vec<usize> = match mode {
        IntersectMode::Zero => bits::ones(zeros).collect(),
        IntersectMode::One => bits::ones(ones).collect(),
        IntersectMode::ZeroOne => {
            let mut both: Vec<usize> = bits::ones(zeros).chain(bits::ones(ones)).collect();
            both.sort_unstable();
            both
        }
    };
    out.iter_mut().for_each(|j| *j += 1);
    out
}

pub(crate) fn agreement_count(zeros: &[u64], ones: &[u64], mode: IntersectMode) -> usize {
    match mode {
        IntersectMode::Zero => bits::count(zeros),
        IntersectMode::One => bits::count(ones),
        IntersectMode::ZeroOne => bits::count(zeros) + bits::count(ones),
    }
}

/// `N_v(S)`: the columns on which every row of `rows` takes the value selected by `mode`.
///
/// Row indices are 1-based; the result is sorted ascending and 1-based.
pub fn intersect_sets(rows: &[usize], matrix: &BinaryMatrix, mode: IntersectMode) -> Result<Vec<usize>> {
    matrix.check_rows(rows)?;
    let (zeros, ones) = matrix.agreement0(rows.iter().map(|&i| i - 1));
    Ok(agreement_columns(&zeros, &ones, mode))
}

/// `|N_v(S)|` without materializing the column list.
pub fn intersect_count(rows: &[usize], matrix: &BinaryMatrix, mode: IntersectMode) -> Result<usize> {
    matrix.check_rows(rows)?;
    let (zeros, ones) = matrix.agreement0(rows.iter().map(|&i| i - 1));
    Ok(agreement_count(&zeros, &ones, mode))
}
