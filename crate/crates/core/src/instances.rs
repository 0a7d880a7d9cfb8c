//! Instance generation, the target-row and bound rules used by experiments,
//! the `.bmat` text format, and the two worked example matrices.
//!
//! Random matrices come from ChaCha8 seeded with a 64-bit seed, so a given
//! [`GenSpec`] produces the same matrix on every platform.

use std::io::{Read, Write};

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{BinaryMatrix, IntersectMode};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GenSpec {
    pub r: usize,
    pub n: usize,
    #[serde(default = "default_density")]
    pub density: f64,
    pub rng_seed: u64,
}

fn default_density() -> f64 {
    0.5
}

impl GenSpec {
    pub fn new(r: usize, n: usize, rng_seed: u64) -> Self {
        GenSpec { r, n, density: default_density(), rng_seed }
    }

    pub fn with_density(mut self, density: f64) -> Self {
        self.density = density;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.r == 0 || self.n == 0 {
            return Err(Error::InvalidConfig("r and n must be at least 1".into()));
        }
        if !(0.0..=1.0).contains(&self.density) {
            return Err(Error::InvalidConfig(format!("density {} outside [0, 1]", self.density)));
        }
        Ok(())
    }
}

/// Draws each entry independently, 1 with probability `density`.
///
/// Each entry consumes one `u64`; its top 53 bits form a uniform `u` in
/// `[0, 1)` and the entry is `u < density`.
pub fn generate(spec: &GenSpec) -> Result<BinaryMatrix> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.rng_seed);
    let scale = 1.0 / (1u64 << 53) as f64;
    let rows: Vec<Vec<u8>> = (0..spec.r)
        .map(|_| {
            (0..spec.n)
                .map(|_| (((rng.next_u64() >> 11) as f64 * scale) < spec.density) as u8)
                .collect()
        })
        .collect();
    BinaryMatrix::from_rows(&rows)
}

/// Target row `x(h)` for experiments: most `v`-components for `Zero`/`One`,
/// largest `| |x|_0 - |x|_1 |` for `ZeroOne`. Ties go to the lowest index.
pub fn choose_target(matrix: &BinaryMatrix, mode: IntersectMode) -> usize {
    let score = |i: usize| match mode {
        IntersectMode::ZeroOne => {
            matrix.row_count(i, IntersectMode::Zero).abs_diff(matrix.row_count(i, IntersectMode::One))
        }
        _ => matrix.row_count(i, mode),
    };
    let mut best = 1;
    for i in 2..=matrix.r() {
        if score(i) > score(best) {
            best = i;
        }
    }
    best
}

/// `L = |N_v(R)| + alpha * (|N_v(x(h))| - |N_v(R)|)`, rounded to nearest with halves up.
pub fn compute_l1(matrix: &BinaryMatrix, mode: IntersectMode, target: usize, alpha: f64) -> Result<usize> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::InvalidConfig(format!("alpha {alpha} outside [0, 1]")));
    }
    matrix.check_row(target)?;
    let all: Vec<usize> = (1..=matrix.r()).collect();
    let low = crate::matrix::intersect_count(&all, matrix, mode)? as f64;
    let high = crate::matrix::intersect_count(&[target], matrix, mode)? as f64;
    // 1e-9 keeps products like 0.6 * 5 from landing just below an integer
    Ok((low + alpha * (high - low) + 0.5 + 1e-9).floor() as usize)
}

/// Parses the text format: a `r n` header then `r` lines of `n` tokens in `{0, 1}`.
pub fn parse_instance(text: &str) -> Result<BinaryMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing `r n` header"))?;
    let dims: Vec<&str> = header.split_whitespace().collect();
    let [r, n] = dims.as_slice() else {
        return Err(Error::parse(hline, "header must be `r n`"));
    };
    let parse_dim = |s: &str| -> Result<usize> {
        s.parse::<usize>()
            .ok()
            .filter(|&d| d > 0)
            .ok_or_else(|| Error::parse(hline, format!("invalid dimension `{s}`")))
    };
    let (r, n) = (parse_dim(r)?, parse_dim(n)?);
    let mut rows = Vec::with_capacity(r);
    for (line, body) in lines {
        if rows.len() == r {
            return Err(Error::parse(line, format!("more than {r} rows")));
        }
        let row = body
            .split_whitespace()
            .map(|tok| match tok {
                "0" => Ok(0u8),
                "1" => Ok(1u8),
                other => Err(Error::parse(line, format!("token `{other}` is not 0 or 1"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        if row.len() != n {
            return Err(Error::parse(line, format!("expected {n} tokens, found {}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != r {
        return Err(Error::parse(hline, format!("header declares {r} rows, found {}", rows.len())));
    }
    BinaryMatrix::from_rows(&rows)
}

pub fn format_instance(matrix: &BinaryMatrix) -> String {
    let mut out = format!("{} {}\n", matrix.r(), matrix.n());
    for row in matrix.rows_iter() {
        let toks: Vec<&str> = row.iter().map(|&b| if b == 1 { "1" } else { "0" }).collect();
        out.push_str(&toks.join(" "));
        out.push('\n');
    }
    out
}

pub fn read_instance<R: Read>(mut source: R) -> Result<BinaryMatrix> {
    let mut text = String::new();
    source.read_to_string(&mut text)?;
    parse_instance(&text)
}

pub fn write_instance<W: Write>(matrix: &BinaryMatrix, mut dest: W) -> Result<()> {
    dest.write_all(format_instance(matrix).as_bytes())?;
    Ok(())
}

const CONSTRUCTION_4X11: [[u8; 11]; 4] = [
    [0, 1, 0, 0, 1, 1, 1, 0, 1, 0, 0],
    [1, 1, 0, 0, 1, 1, 1, 1, 0, 0, 0],
    [0, 1, 0, 1, 1, 1, 0, 1, 1, 0, 0],
    [1, 1, 0, 1, 0, 1, 0, 1, 1, 1, 0],
];

const ALGORITHM_12X12: [[u8; 12]; 12] = [
    [1, 1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0],
    [1, 1, 1, 0, 1, 0, 1, 0, 1, 0, 0, 0],
    [1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 0, 0],
    [1, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0],
    [0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1],
    [0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1],
    [0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 1, 1],
    [0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 1, 1],
    [0, 1, 0, 0, 0, 0, 1, 1, 1, 1, 1, 1],
    [1, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 1],
    [0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 0, 1],
];

/// The four-row vector-analog construction example.
pub fn construction_4x11() -> BinaryMatrix {
    BinaryMatrix::from_rows(&CONSTRUCTION_4X11).expect("embedded matrix is valid")
}

/// The twelve-row worked example used for the heuristic and the epsilon-constraint traces.
pub fn algorithm_12x12() -> BinaryMatrix {
    BinaryMatrix::from_rows(&ALGORITHM_12X12).expect("embedded matrix is valid")
}

pub const EMBEDDED_NAMES: [&str; 2] = ["construction_4x11", "algorithm_12x12"];

pub fn paper_examples() -> Vec<(&'static str, BinaryMatrix)> {
    vec![("construction_4x11", construction_4x11()), ("algorithm_12x12", algorithm_12x12())]
}

/// Looks up an embedded matrix by its reserved name.
pub fn named_instance(name: &str) -> Option<BinaryMatrix> {
    match name {
        "construction_4x11" => Some(construction_4x11()),
        "algorithm_12x12" => Some(algorithm_12x12()),
        _ => None,
    }
}
