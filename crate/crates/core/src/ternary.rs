//! Analog vectors over `{0, 1, #}` and the component-wise meet.
//!
//! `#` marks a column on which the rows folded so far disagree. Once a
//! component becomes `#` it stays `#` under further meets.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{BinaryMatrix, IntersectMode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Trit {
    Zero,
    One,
    Hash,
}

impl Trit {
    pub fn from_bit(bit: u8) -> Trit {
        if bit == 0 {
            Trit::Zero
        } else {
            Trit::One
        }
    }

    #[inline]
    pub fn meet(self, other: Trit) -> Trit {
        if self == other {
            self
        } else {
            Trit::Hash
        }
    }

    #[inline]
    pub fn counts_under(self, mode: IntersectMode) -> bool {
        matches!(
            (self, mode),
            (Trit::Zero, IntersectMode::Zero | IntersectMode::ZeroOne) | (Trit::One, IntersectMode::One | IntersectMode::ZeroOne)
        )
    }

    /// The fractional coding `0`, `1`, `1/2` for `#`.
    pub fn as_fraction(self) -> f64 {
        match self {
            Trit::Zero => 0.0,
            Trit::One => 1.0,
            Trit::Hash => 0.5,
        }
    }
}

impl fmt::Display for Trit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Trit::Zero => "0",
            Trit::One => "1",
            Trit::Hash => "#",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TernaryVector(Vec<Trit>);

impl TernaryVector {
    pub fn new(comps: Vec<Trit>) -> Self {
        TernaryVector(comps)
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        TernaryVector(bits.iter().map(|&b| Trit::from_bit(b)).collect())
    }

    /// Parses a string such as `"#10#"`; whitespace is ignored.
    pub fn parse(s: &str) -> Result<Self> {
        s.chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| match c {
                '0' => Ok(Trit::Zero),
                '1' => Ok(Trit::One),
                '#' => Ok(Trit::Hash),
                other => Err(Error::parse(1, format!("unexpected symbol `{other}` in ternary vector"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(TernaryVector)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn comps(&self) -> &[Trit] {
        &self.0
    }

    /// Component `j`, 1-based.
    pub fn get(&self, j: usize) -> Trit {
        self.0[j - 1]
    }

    /// Keeps only the components counted under `mode`, writing `#` elsewhere.
    pub fn masked(&self, mode: IntersectMode) -> TernaryVector {
        TernaryVector(
            self.0
                .iter()
                .map(|&t| if t.counts_under(mode) { t } else { Trit::Hash })
                .collect(),
        )
    }

    /// 1-based columns counted under `mode`.
    pub fn columns(&self, mode: IntersectMode) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, t)| t.counts_under(mode))
            .map(|(j, _)| j + 1)
            .collect()
    }

    pub(crate) fn meet_bits_in_place(&mut self, row: &[u8]) {
        for (z, &x) in self.0.iter_mut().zip(row) {
            *z = z.meet(Trit::from_bit(x));
        }
    }
}

impl fmt::Display for TernaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, t) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{t}")?;
        }
        Ok(())
    }
}

/// Component-wise meet: equal components survive, anything else becomes `#`.
pub fn ternary_meet(z1: &TernaryVector, z2: &TernaryVector) -> Result<TernaryVector> {
    if z1.len() != z2.len() {
        return Err(Error::LengthMismatch { left: z1.len(), right: z2.len() });
    }
    Ok(TernaryVector(z1.0.iter().zip(&z2.0).map(|(&a, &b)| a.meet(b)).collect()))
}

/// Folds the meet over the rows of `rows` (1-based). A singleton yields the row itself.
pub fn analog_vector(rows: &[usize], matrix: &BinaryMatrix) -> Result<TernaryVector> {
    matrix.check_rows(rows)?;
    let mut z = TernaryVector::from_bits(matrix.row(rows[0]));
    for &i in &rows[1..] {
        z.meet_bits_in_place(matrix.row(i));
    }
    Ok(z)
}

/// `|z|_v`: components equal to 0, to 1, or to either.
pub fn count_v(z: &TernaryVector, mode: IntersectMode) -> usize {
    z.0.iter().filter(|t| t.counts_under(mode)).count()
}
