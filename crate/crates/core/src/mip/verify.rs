use std::collections::HashMap;

use super::{parse_name, IPModel, VarRef};
use crate::error::{Error, Result};
use crate::matrix::{intersect_sets, BinaryMatrix, IntersectMode};

/// Builds the assignment implied by the row set `rows` and checks it against
/// every fixing and constraint of `model`.
///
/// `y_i = 1` exactly for `i` in `rows`; `z_j^k = 0` exactly when `j` is in
/// `N_k` of the selected rows (the seed row included for seeded models). An
/// empty selection sets every `z` to 0.
pub fn verify_assignment(model: &IPModel, rows: &[usize], matrix: &BinaryMatrix, mode: IntersectMode) -> Result<bool> {
    if model.meta.mode != mode {
        return Err(Error::ModeMismatch { expected: mode, found: model.meta.mode });
    }
    let mut selected: Vec<usize> = rows.to_vec();
    selected.extend(model.meta.seed_row);
    selected.sort_unstable();
    selected.dedup();
    if !selected.is_empty() {
        matrix.check_rows(&selected)?;
    }
    let (agree0, agree1) = if selected.is_empty() {
        (vec![true; matrix.n() + 1], vec![true; matrix.n() + 1])
    } else {
        let mut a0 = vec![false; matrix.n() + 1];
        let mut a1 = vec![false; matrix.n() + 1];
        for j in intersect_sets(&selected, matrix, IntersectMode::Zero)? {
            a0[j] = true;
        }
        for j in intersect_sets(&selected, matrix, IntersectMode::One)? {
            a1[j] = true;
        }
        (a0, a1)
    };

    let mut values: HashMap<&str, i64> = HashMap::with_capacity(model.variables.len());
    for var in &model.variables {
        let value = match parse_name(&var.name) {
            Some(VarRef::Y(i)) => i64::from(selected.binary_search(&i).is_ok()),
            Some(VarRef::Z(j, k)) if j >= 1 && j <= matrix.n() => {
                let agrees = if k == 0 { agree0[j] } else { agree1[j] };
                i64::from(!agrees)
            }
            _ => return Err(Error::InvalidConfig(format!("unrecognized variable {}", var.name))),
        };
        if var.fixed.is_some_and(|x| i64::from(x) != value) {
            return Ok(false);
        }
        values.insert(var.name.as_str(), value);
    }
    for c in &model.constraints {
        let mut lhs = 0i64;
        for (coef, name) in &c.terms {
            let v = values
                .get(name.as_str())
                .ok_or_else(|| Error::InvalidConfig(format!("variable {name} is used but not declared")))?;
            lhs += coef * v;
        }
        if !c.relation.holds(lhs, c.rhs) {
            return Ok(false);
        }
    }
    Ok(true)
}
