use super::{
    y_name, z_name, Constraint, ExportOptions, IPModel, ModelKind, ModelMeta, Objective, Relation, Sense, Terms,
    Variable,
};
use crate::error::{Error, Result};
use crate::matrix::{BinaryMatrix, IntersectMode};

/// Column-value families carried by a mode: `z^0`, `z^1` or both.
fn families(mode: IntersectMode) -> &'static [u8] {
    match mode {
        IntersectMode::Zero => &[0],
        IntersectMode::One => &[1],
        IntersectMode::ZeroOne => &[0, 1],
    }
}

/// Coefficient of `y_i` in the linking rows of family `k`: 1 when row `i`
/// breaks agreement on value `k` in column `j`.
fn coef(x: u8, k: u8) -> i64 {
    i64::from(x != k)
}

struct Layout<'a> {
    matrix: &'a BinaryMatrix,
    mode: IntersectMode,
    opts: ExportOptions,
    /// Rows with a `y` variable, 1-based.
    rows: Vec<usize>,
    /// `(column, family)` pairs with a `z` variable, in family-major order.
    zs: Vec<(usize, u8)>,
}

impl<'a> Layout<'a> {
    fn new(matrix: &'a BinaryMatrix, mode: IntersectMode, opts: &ExportOptions) -> Result<Self> {
        if let Some(h) = opts.seed_row {
            matrix.check_row(h)?;
        }
        let rows: Vec<usize> = (1..=matrix.r()).filter(|&i| Some(i) != opts.seed_row).collect();
        let mut zs = Vec::new();
        for &k in families(mode) {
            for j in 1..=matrix.n() {
                // seeded: only columns where the seed row has value k can still agree on k
                if opts.seed_row.is_none_or(|h| matrix.entry(h, j) == k) {
                    zs.push((j, k));
                }
            }
        }
        if rows.is_empty() && zs.is_empty() {
            return Err(Error::InvalidConfig("the model would have no variables".into()));
        }
        Ok(Layout { matrix, mode, opts: *opts, rows, zs })
    }

    fn f(&self, j: usize) -> usize {
        self.matrix.column_sum(j)
    }

    /// Count of rows with value `k` in column `j`.
    fn with_value(&self, j: usize, k: u8) -> usize {
        if k == 1 {
            self.f(j)
        } else {
            self.matrix.r() - self.f(j)
        }
    }

    fn variables(&self, bound_for_rows: Option<usize>) -> Vec<Variable> {
        let mut vars: Vec<Variable> = self
            .rows
            .iter()
            .map(|&i| Variable { name: y_name(i), fixed: self.y_fixing(i, bound_for_rows) })
            .collect();
        vars.extend(self.zs.iter().map(|&(j, k)| Variable { name: z_name(j, k), fixed: self.z_fixing(j, k) }));
        vars
    }

    /// A column where no row has the opposite value agrees for every `S`.
    fn z_fixing(&self, j: usize, k: u8) -> Option<u8> {
        if !self.opts.preprocess {
            return None;
        }
        (self.with_value(j, 1 - k) == 0).then_some(0)
    }

    /// In the seeded rows problem a row sharing too few agreeing columns with
    /// the seed can never join a feasible set.
    fn y_fixing(&self, i: usize, bound: Option<usize>) -> Option<u8> {
        let (Some(h), Some(bound), true) = (self.opts.seed_row, bound, self.opts.preprocess) else {
            return None;
        };
        let shared = (1..=self.matrix.n())
            .filter(|&j| {
                let x = self.matrix.entry(h, j);
                x == self.matrix.entry(i, j) && self.mode.value().is_none_or(|v| v == x)
            })
            .count();
        (shared < bound).then_some(0)
    }

    fn linking(&self) -> Vec<Constraint> {
        let r = self.matrix.r() as i64;
        let mut out = Vec::with_capacity(2 * self.zs.len());
        for &(j, k) in &self.zs {
            let z = z_name(j, k);
            let breaking: Terms = self
                .rows
                .iter()
                .filter(|&&i| coef(self.matrix.entry(i, j), k) != 0)
                .map(|&i| (1, y_name(i)))
                .collect();
            // z <= sum
            let mut lo = vec![(1, z.clone())];
            lo.extend(breaking.iter().map(|(c, y)| (-c, y.clone())));
            out.push(Constraint { name: format!("lo_{z}"), terms: lo, relation: Relation::Le, rhs: 0 });
            // sum <= M z
            let big_m = if self.opts.strengthen { self.with_value(j, 1 - k) as i64 } else { r };
            let mut hi = breaking;
            hi.push((-big_m, z.clone()));
            out.push(Constraint { name: format!("hi_{z}"), terms: hi, relation: Relation::Le, rhs: 0 });
        }
        out
    }

    /// If `j` agrees on `k` then `|S|` is at most the number of rows with value `k` there.
    fn valid_inequalities(&self) -> Vec<Constraint> {
        if !self.opts.preprocess {
            return Vec::new();
        }
        let r = self.matrix.r();
        let seeded = i64::from(self.opts.seed_row.is_some());
        let mut out = Vec::new();
        for &(j, k) in &self.zs {
            let cap = self.with_value(j, k);
            if cap >= r {
                continue;
            }
            let z = z_name(j, k);
            let mut terms: Terms = self.rows.iter().map(|&i| (1, y_name(i))).collect();
            terms.push((-((r - cap) as i64), z.clone()));
            out.push(Constraint { name: format!("vi_{z}"), terms, relation: Relation::Le, rhs: cap as i64 - seeded });
        }
        out
    }

    fn y_sum(&self) -> Terms {
        self.rows.iter().map(|&i| (1, y_name(i))).collect()
    }

    fn z_sum(&self) -> Terms {
        self.zs.iter().map(|&(j, k)| (1, z_name(j, k))).collect()
    }

    /// LP rows need at least one term; an empty sum becomes `0 <first variable>`.
    fn non_empty(&self, terms: Terms) -> Terms {
        if !terms.is_empty() {
            return terms;
        }
        let first = self.rows.first().map(|&i| y_name(i)).unwrap_or_else(|| {
            let (j, k) = self.zs[0];
            z_name(j, k)
        });
        vec![(0, first)]
    }

    fn meta(&self, kind: ModelKind, bound: Option<usize>) -> ModelMeta {
        ModelMeta {
            kind,
            mode: self.mode,
            bound,
            seed_row: self.opts.seed_row,
            strengthen: self.opts.strengthen,
            preprocess: self.opts.preprocess,
        }
    }

    fn comments(&self, headline: String) -> Vec<String> {
        let mut c = vec![headline];
        c.push(format!("mode v = {}, {} rows, {} columns", self.mode, self.matrix.r(), self.matrix.n()));
        if let Some(h) = self.opts.seed_row {
            c.push(format!("seeded on row {h}: y{h} is implicitly 1, z declared only where row {h} agrees"));
        }
        if self.opts.strengthen {
            c.push("linking rows use column counts instead of r".into());
        }
        if self.opts.preprocess {
            c.push("fixings are applied before strengthening; vi_* rows are optional valid inequalities".into());
        }
        c
    }

    fn objective_rows(&self) -> Objective {
        Objective { sense: Sense::Maximize, terms: self.non_empty(self.y_sum()), constant: 0 }
    }

    fn objective_columns(&self) -> Objective {
        let terms: Terms = self.z_sum().into_iter().map(|(_, z)| (-1, z)).collect();
        Objective { sense: Sense::Maximize, terms: self.non_empty(terms), constant: self.zs.len() as i64 }
    }
}

fn model_name(prefix: &str, mode: IntersectMode, opts: &ExportOptions) -> String {
    let mut name = format!("{prefix}_v{mode}");
    if let Some(h) = opts.seed_row {
        name.push_str(&format!("_h{h}"));
    }
    name
}

/// Rows problem: maximize `|S|` subject to `|N_v(S)| >= bound`.
pub fn build_ip1(matrix: &BinaryMatrix, mode: IntersectMode, bound: usize, opts: &ExportOptions) -> Result<IPModel> {
    let lay = Layout::new(matrix, mode, opts)?;
    // sum of (1 - z) >= L, written as sum z <= count - L
    let card = Constraint {
        name: "card".into(),
        terms: lay.non_empty(lay.z_sum()),
        relation: Relation::Le,
        rhs: lay.zs.len() as i64 - bound as i64,
    };
    let mut constraints = vec![card];
    constraints.extend(lay.linking());
    constraints.extend(lay.valid_inequalities());
    let model = IPModel {
        name: model_name("ip1", mode, opts),
        meta: lay.meta(ModelKind::Rows, Some(bound)),
        comments: lay.comments(format!("maximize |S| subject to |N_v(S)| >= {bound}")),
        variables: lay.variables(Some(bound)),
        objective: lay.objective_rows(),
        constraints,
    };
    debug_assert!(model.validate().is_ok());
    Ok(model)
}

/// Columns problem: maximize `|N_v(S)|` subject to `|S| >= bound`.
pub fn build_ip2(matrix: &BinaryMatrix, mode: IntersectMode, bound: usize, opts: &ExportOptions) -> Result<IPModel> {
    if bound == 0 {
        return Err(Error::InvalidConfig("the size bound must be at least 1".into()));
    }
    if bound > matrix.r() {
        return Err(Error::BoundTooLarge { bound, rows: matrix.r() });
    }
    let lay = Layout::new(matrix, mode, opts)?;
    let seeded = usize::from(opts.seed_row.is_some());
    let card = Constraint {
        name: "card".into(),
        terms: lay.non_empty(lay.y_sum()),
        relation: Relation::Ge,
        rhs: (bound - seeded) as i64,
    };
    let mut constraints = vec![card];
    constraints.extend(lay.linking());
    constraints.extend(lay.valid_inequalities());
    let model = IPModel {
        name: model_name("ip2", mode, opts),
        meta: lay.meta(ModelKind::Columns, Some(bound)),
        comments: lay.comments(format!("maximize |N_v(S)| subject to |S| >= {bound}")),
        variables: lay.variables(None),
        objective: lay.objective_columns(),
        constraints,
    };
    debug_assert!(model.validate().is_ok());
    Ok(model)
}

/// The bi-objective model as two single-objective models over the same
/// constraints: the first maximizes `|S|`, the second `|N_v(S)|`.
pub fn build_bi_objective(matrix: &BinaryMatrix, mode: IntersectMode, opts: &ExportOptions) -> Result<(IPModel, IPModel)> {
    let lay = Layout::new(matrix, mode, opts)?;
    let mut constraints = lay.linking();
    constraints.extend(lay.valid_inequalities());
    let pair = |kind: ModelKind, k: usize, objective: Objective| {
        let what = if k == 1 { "|S|" } else { "|N_v(S)|" };
        let mut comments = lay.comments(format!("objective {k} of 2 of the bi-objective pair: maximize {what}"));
        comments.push("both files share variables and constraints; combine them in a multi-objective solver".into());
        IPModel {
            name: format!("{}_obj{k}", model_name("bi", mode, opts)),
            meta: lay.meta(kind, None),
            comments,
            variables: lay.variables(None),
            objective,
            constraints: constraints.clone(),
        }
    };
    Ok((
        pair(ModelKind::PairRows, 1, lay.objective_rows()),
        pair(ModelKind::PairColumns, 2, lay.objective_columns()),
    ))
}
