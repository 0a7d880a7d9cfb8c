//! Integer-programming models of the rows and columns problems, written in
//! LP format for external MIP solvers.
//!
//! Variables are all binary: `y<i>` selects row `i`, `z<j>_0` is 0 exactly
//! when every selected row has a 0 in column `j`, and `z<j>_1` likewise for 1.

mod build;
mod lp;
mod verify;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntersectMode;

pub use build::{build_bi_objective, build_ip1, build_ip2};
pub use lp::{parse_lp, write_model, write_model_string};
pub use verify::verify_assignment;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ExportOptions {
    /// Tighter big-M coefficients on the linking rows: column sums instead of `r`.
    pub strengthen: bool,
    /// Variable fixings and the optional `vi_*` valid inequalities.
    pub preprocess: bool,
    /// Seeded form: row `h` is always selected and only `N_v(x(h))` columns get variables.
    pub seed_row: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    /// Maximize `|S|` subject to `|N_v(S)| >= L`.
    Rows,
    /// Maximize `|N_v(S)|` subject to `|S| >= L`.
    Columns,
    /// Bi-objective pair, first objective `|S|`, no bound.
    PairRows,
    /// Bi-objective pair, second objective `|N_v(S)|`, no bound.
    PairColumns,
}

impl ModelKind {
    fn tag(self) -> &'static str {
        match self {
            ModelKind::Rows => "rows",
            ModelKind::Columns => "columns",
            ModelKind::PairRows => "pair_rows",
            ModelKind::PairColumns => "pair_columns",
        }
    }

    fn from_tag(s: &str) -> Option<Self> {
        [ModelKind::Rows, ModelKind::Columns, ModelKind::PairRows, ModelKind::PairColumns]
            .into_iter()
            .find(|k| k.tag() == s)
    }
}

/// What a model encodes; carried in the LP header so files are self-describing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelMeta {
    pub kind: ModelKind,
    pub mode: IntersectMode,
    pub bound: Option<usize>,
    pub seed_row: Option<usize>,
    pub strengthen: bool,
    pub preprocess: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Variable {
    pub name: String,
    /// Binary variables may be fixed to 0 or 1.
    pub fixed: Option<u8>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sense {
    Maximize,
    Minimize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

impl Relation {
    fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Eq => "=",
        }
    }

    fn holds(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Eq => lhs == rhs,
        }
    }
}

/// `(coefficient, variable)` pairs.
pub type Terms = Vec<(i64, String)>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Objective {
    pub sense: Sense,
    pub terms: Terms,
    pub constant: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraint {
    pub name: String,
    pub terms: Terms,
    pub relation: Relation,
    pub rhs: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IPModel {
    pub name: String,
    pub meta: ModelMeta,
    /// Free-text header lines.
    pub comments: Vec<String>,
    pub variables: Vec<Variable>,
    pub objective: Objective,
    pub constraints: Vec<Constraint>,
}

impl IPModel {
    pub fn variable(&self, name: &str) -> Option<&Variable> {
        self.variables.iter().find(|v| v.name == name)
    }

    pub fn constraint(&self, name: &str) -> Option<&Constraint> {
        self.constraints.iter().find(|c| c.name == name)
    }

    /// Every referenced variable is declared, names are unique, fixings are 0/1.
    pub fn validate(&self) -> Result<()> {
        let mut seen = std::collections::HashSet::new();
        for v in &self.variables {
            if !seen.insert(v.name.as_str()) {
                return Err(Error::InvalidConfig(format!("variable {} declared twice", v.name)));
            }
            if v.fixed.is_some_and(|x| x > 1) {
                return Err(Error::InvalidConfig(format!("variable {} fixed outside 0/1", v.name)));
            }
        }
        let refs = self.objective.terms.iter().chain(self.constraints.iter().flat_map(|c| &c.terms));
        for (_, name) in refs {
            if !seen.contains(name.as_str()) {
                return Err(Error::InvalidConfig(format!("variable {name} is used but not declared")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for IPModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&write_model_string(self))
    }
}

pub(crate) fn y_name(i: usize) -> String {
    format!("y{i}")
}

pub(crate) fn z_name(j: usize, k: u8) -> String {
    format!("z{j}_{k}")
}

/// Inverse of the naming scheme.
pub(crate) enum VarRef {
    Y(usize),
    Z(usize, u8),
}

pub(crate) fn parse_name(name: &str) -> Option<VarRef> {
    if let Some(rest) = name.strip_prefix('y') {
        return rest.parse().ok().map(VarRef::Y);
    }
    let rest = name.strip_prefix('z')?;
    let (j, k) = rest.split_once('_')?;
    let k = match k {
        "0" => 0,
        "1" => 1,
        _ => return None,
    };
    Some(VarRef::Z(j.parse().ok()?, k))
}
