use anyhow::{bail, Result};
use clap::ValueEnum;
use serde_json::json;
use twistcheck::reps::{bivector_latex, element_json, fundamental_rep, matrix_json, matrix_latex, rp_matrix, RepMatrix};
use twistcheck::scalars::Rat;
use twistcheck::twists::{build_fp, classical_r, iota_for_r, usl_context};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Object {
    /// R_p in the fundamental representation, exact.
    Rmatrix,
    /// Expansion of the universal twist F_p to the given ζ-order.
    Twist,
    /// The classical r-matrix.
    RClassical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Latex,
    Text,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Latex => "tex",
            Format::Text => "txt",
        }
    }
}

impl Object {
    pub fn name(self) -> &'static str {
        match self {
            Object::Rmatrix => "rmatrix",
            Object::Twist => "twist",
            Object::RClassical => "r-classical",
        }
    }
}

fn text_matrix(m: &RepMatrix) -> String {
    let mut s = String::new();
    for i in 0..m.dim() {
        let row: Vec<String> = (0..m.dim()).map(|j| m.get(i, j).to_string()).collect();
        s += &row.join(" | ");
        s.push('\n');
    }
    s
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

/// Render one catalog object. Output depends only on the arguments.
pub fn export(what: Object, n: usize, a: &Rat, order: usize, format: Format) -> Result<String> {
    if !(3..=4).contains(&n) || (n == 3 && *a != Rat::new(1, 1)) {
        bail!("unknown object: {} for n = {n}, a = {a}", what.name());
    }
    let header = |body: serde_json::Value| json!({ "object": what.name(), "n": n, "a": a.to_string(), "data": body });
    Ok(match what {
        Object::Rmatrix => {
            let m = rp_matrix(n, a, &fundamental_rep(n)?)?;
            match format {
                Format::Json => with_newline(serde_json::to_string_pretty(&header(matrix_json(&m)))?),
                Format::Latex => matrix_latex(&m),
                Format::Text => text_matrix(&m),
            }
        }
        Object::Twist => {
            let m = iota_for_r(n, a, order)?;
            let f = build_fp(&m, order)?.expand(order)?;
            match format {
                Format::Json => with_newline(serde_json::to_string_pretty(&header(element_json(&f, &m.target.pres)))?),
                Format::Text => with_newline(f.render(&m.target.pres)),
                Format::Latex => bail!("twist expansions are exported as json or text"),
            }
        }
        Object::RClassical => {
            let c = usl_context(n)?;
            let r = classical_r(&c.pres, n, a)?;
            let p = &c.pres;
            match format {
                Format::Json => with_newline(serde_json::to_string_pretty(&header(element_json(&r, p)))?),
                Format::Latex => with_newline(bivector_latex(&r, p)?),
                Format::Text => with_newline(r.render(p)),
            }
        }
    })
}

/// File stem for an export, e.g. `rmatrix-n4-a1_3`.
pub fn file_stem(what: Object, n: usize, a: &Rat) -> String {
    let mut s = format!("{}-n{n}", what.name());
    if n == 4 {
        s += &format!("-a{}", a.to_string().replace('/', "_"));
    }
    s
}
