//! LP-format text: `Maximize`, `Subject To`, `Bounds`, `Binaries`, `End`.
//!
//! The header comments carry the model name and a `meta:` line so that
//! [`parse_lp`] recovers an equal [`IPModel`].

use std::fmt::Write as _;
use std::io::Write;

use super::{Constraint, IPModel, ModelKind, ModelMeta, Objective, Relation, Sense, Terms, Variable};
use crate::error::{Error, Result};
use crate::matrix::IntersectMode;

const TERMS_PER_LINE: usize = 8;

fn write_terms(out: &mut String, terms: &Terms, constant: i64) {
    let mut first = true;
    for (k, (c, name)) in terms.iter().enumerate() {
        if k > 0 && k % TERMS_PER_LINE == 0 {
            out.push_str("\n   ");
        }
        let (sign, mag) = if *c < 0 { ("-", -c) } else { ("+", *c) };
        match (first, sign) {
            (true, "+") => {}
            (true, _) => out.push_str("- "),
            (false, _) => {
                out.push(' ');
                out.push_str(sign);
                out.push(' ');
            }
        }
        if mag != 1 {
            let _ = write!(out, "{mag} ");
        }
        out.push_str(name);
        first = false;
    }
    if constant != 0 {
        let sign = if constant < 0 { '-' } else { '+' };
        let _ = write!(out, " {sign} {}", constant.abs());
    }
}

fn meta_line(m: &ModelMeta) -> String {
    let opt = |x: Option<usize>| x.map_or("none".to_string(), |v| v.to_string());
    format!(
        "meta: kind={} mode={} bound={} seed={} strengthen={} preprocess={}",
        m.kind.tag(),
        m.mode,
        opt(m.bound),
        opt(m.seed_row),
        m.strengthen,
        m.preprocess
    )
}

/// Renders `model` as LP text; identical models give identical bytes.
pub fn write_model_string(model: &IPModel) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "\\ name: {}", model.name);
    let _ = writeln!(out, "\\ {}", meta_line(&model.meta));
    for c in &model.comments {
        let _ = writeln!(out, "\\ {c}");
    }
    out.push_str(match model.objective.sense {
        Sense::Maximize => "Maximize\n",
        Sense::Minimize => "Minimize\n",
    });
    out.push_str(" obj: ");
    write_terms(&mut out, &model.objective.terms, model.objective.constant);
    out.push_str("\nSubject To\n");
    for c in &model.constraints {
        let _ = write!(out, " {}: ", c.name);
        write_terms(&mut out, &c.terms, 0);
        let _ = writeln!(out, " {} {}", c.relation.symbol(), c.rhs);
    }
    let fixed: Vec<&Variable> = model.variables.iter().filter(|v| v.fixed.is_some()).collect();
    if !fixed.is_empty() {
        out.push_str("Bounds\n");
        for v in fixed {
            let _ = writeln!(out, " {} = {}", v.name, v.fixed.unwrap());
        }
    }
    out.push_str("Binaries\n");
    for chunk in model.variables.chunks(TERMS_PER_LINE * 2) {
        let names: Vec<&str> = chunk.iter().map(|v| v.name.as_str()).collect();
        let _ = writeln!(out, " {}", names.join(" "));
    }
    out.push_str("End\n");
    out
}

pub fn write_model<W: Write>(model: &IPModel, mut dest: W) -> Result<()> {
    dest.write_all(write_model_string(model).as_bytes())?;
    Ok(())
}

#[derive(Clone, Copy, PartialEq)]
enum Section {
    Header,
    Objective,
    Constraints,
    Bounds,
    Binaries,
    Done,
}

/// Parses `a - 3 b + c + 12` into terms and a constant.
fn parse_terms(text: &str, line: usize) -> Result<(Terms, i64)> {
    let toks: Vec<&str> = text.split_whitespace().collect();
    let is_num = |t: &str| t.chars().all(|c| c.is_ascii_digit());
    let mut terms = Vec::new();
    let mut constant = 0i64;
    let mut sign = 1i64;
    let mut k = 0;
    while k < toks.len() {
        match toks[k] {
            "+" => sign = 1,
            "-" => sign = -1,
            t if is_num(t) => {
                let c: i64 = t.parse().map_err(|_| Error::parse(line, format!("bad number `{t}`")))?;
                match toks.get(k + 1) {
                    Some(&name) if name != "+" && name != "-" && !is_num(name) => {
                        terms.push((sign * c, name.to_string()));
                        k += 1;
                    }
                    _ => constant += sign * c,
                }
                sign = 1;
            }
            name => {
                terms.push((sign, name.to_string()));
                sign = 1;
            }
        }
        k += 1;
    }
    Ok((terms, constant))
}

fn parse_meta(text: &str, line: usize) -> Result<ModelMeta> {
    let bad = |what: &str| Error::parse(line, format!("bad meta field `{what}`"));
    let mut meta = ModelMeta {
        kind: ModelKind::Rows,
        mode: IntersectMode::Zero,
        bound: None,
        seed_row: None,
        strengthen: false,
        preprocess: false,
    };
    let opt = |v: &str| -> Option<Option<usize>> {
        if v == "none" {
            Some(None)
        } else {
            v.parse().ok().map(Some)
        }
    };
    for field in text.split_whitespace() {
        let (k, v) = field.split_once('=').ok_or_else(|| bad(field))?;
        match k {
            "kind" => meta.kind = ModelKind::from_tag(v).ok_or_else(|| bad(field))?,
            "mode" => meta.mode = v.parse()?,
            "bound" => meta.bound = opt(v).ok_or_else(|| bad(field))?,
            "seed" => meta.seed_row = opt(v).ok_or_else(|| bad(field))?,
            "strengthen" => meta.strengthen = v.parse().map_err(|_| bad(field))?,
            "preprocess" => meta.preprocess = v.parse().map_err(|_| bad(field))?,
            _ => return Err(bad(field)),
        }
    }
    Ok(meta)
}

/// Reads text produced by [`write_model`] back into a model.
pub fn parse_lp(text: &str) -> Result<IPModel> {
    let mut name = None;
    let mut meta = None;
    let mut comments = Vec::new();
    let mut sense = None;
    // (line, name, body) of the item being accumulated across continuation lines
    let mut objective_text = String::new();
    let mut rows: Vec<(usize, String, String)> = Vec::new();
    let mut fixed: Vec<(String, u8)> = Vec::new();
    let mut binaries: Vec<String> = Vec::new();
    let mut section = Section::Header;

    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        if let Some(c) = raw.strip_prefix('\\') {
            let c = c.strip_prefix(' ').unwrap_or(c);
            if let Some(n) = c.strip_prefix("name: ") {
                name = Some(n.to_string());
            } else if let Some(m) = c.strip_prefix("meta: ") {
                meta = Some(parse_meta(m, line)?);
            } else {
                comments.push(c.to_string());
            }
            continue;
        }
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        let next = match trimmed {
            "Maximize" => Some((Section::Objective, Some(Sense::Maximize))),
            "Minimize" => Some((Section::Objective, Some(Sense::Minimize))),
            "Subject To" => Some((Section::Constraints, None)),
            "Bounds" => Some((Section::Bounds, None)),
            "Binaries" => Some((Section::Binaries, None)),
            "End" => Some((Section::Done, None)),
            _ => None,
        };
        if let Some((s, sn)) = next {
            section = s;
            if sn.is_some() {
                sense = sn;
            }
            continue;
        }
        let continuation = raw.starts_with("   ");
        match section {
            Section::Objective => {
                let body = if continuation {
                    trimmed
                } else {
                    trimmed.strip_prefix("obj:").ok_or_else(|| Error::parse(line, "objective must be named `obj`"))?
                };
                objective_text.push(' ');
                objective_text.push_str(body);
            }
            Section::Constraints => {
                if continuation {
                    let last = rows.last_mut().ok_or_else(|| Error::parse(line, "continuation without a row"))?;
                    last.2.push(' ');
                    last.2.push_str(trimmed);
                } else {
                    let (n, body) = trimmed.split_once(':').ok_or_else(|| Error::parse(line, "constraint without a name"))?;
                    rows.push((line, n.trim().to_string(), body.to_string()));
                }
            }
            Section::Bounds => {
                let (v, x) = trimmed.split_once('=').ok_or_else(|| Error::parse(line, "expected `name = value`"))?;
                let x: u8 = x.trim().parse().map_err(|_| Error::parse(line, "bound value must be 0 or 1"))?;
                fixed.push((v.trim().to_string(), x));
            }
            Section::Binaries => binaries.extend(trimmed.split_whitespace().map(str::to_string)),
            Section::Header | Section::Done => return Err(Error::parse(line, format!("unexpected text `{trimmed}`"))),
        }
    }

    let sense = sense.ok_or_else(|| Error::parse(1, "missing objective section"))?;
    let (terms, constant) = parse_terms(&objective_text, 1)?;
    let mut constraints = Vec::with_capacity(rows.len());
    for (line, cname, body) in rows {
        let (lhs, rel, rhs) = ["<=", ">=", "="]
            .iter()
            .find_map(|op| body.split_once(op).map(|(l, r)| (l, *op, r)))
            .ok_or_else(|| Error::parse(line, "constraint without a relation"))?;
        let relation = match rel {
            "<=" => Relation::Le,
            ">=" => Relation::Ge,
            _ => Relation::Eq,
        };
        let (terms, c) = parse_terms(lhs, line)?;
        let rhs: i64 = rhs.trim().parse().map_err(|_| Error::parse(line, "right-hand side must be an integer"))?;
        constraints.push(Constraint { name: cname, terms, relation, rhs: rhs - c });
    }
    let variables = binaries
        .into_iter()
        .map(|n| {
            let fixed = fixed.iter().find(|(v, _)| *v == n).map(|&(_, x)| x);
            Variable { name: n, fixed }
        })
        .collect();
    let model = IPModel {
        name: name.unwrap_or_default(),
        meta: meta.ok_or_else(|| Error::parse(1, "missing `meta:` header"))?,
        comments,
        variables,
        objective: Objective { sense, terms, constant },
        constraints,
    };
    model.validate()?;
    Ok(model)
}
