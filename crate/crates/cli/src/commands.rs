//! Subcommand implementations. Each returns the full text written to stdout.

use std::path::Path;

use lefsig_core::symplectic::{random_lagrangian, random_symplectic};
use lefsig_core::{
    cover_breakdown, generate, is_symplectic, maslov_index, meyer_cocycle, signature, wall_space, Lagrangian,
    MonodromyWord, PositiveFamilySpec, Rational, RationalMatrix, SymplecticSpace,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::document::FibrationDocument;
use crate::error::{CliError, CliResult};
use crate::matrices::MatrixDocument;
use crate::table::Table;

fn rational_strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn matrix_strings(m: &RationalMatrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| rational_strings(r)).collect()
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn format_class(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn load_word(path: &Path) -> CliResult<(FibrationDocument, MonodromyWord)> {
    let doc = FibrationDocument::load(path)?;
    let word = doc.to_word()?;
    Ok((doc, word))
}

#[derive(Serialize)]
struct StepJson {
    k: usize,
    vector: Vec<i64>,
    chirality: i64,
    solvable: bool,
    sigma: i64,
    contribution: i64,
    running_total: i64,
    witness: Option<Vec<String>>,
    cumulative_action: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct TraceJson {
    name: Option<String>,
    genus: u32,
    boundary: u32,
    dimension: usize,
    null_homologous_count: usize,
    steps: Vec<StepJson>,
    signature: i64,
}

pub fn cmd_signature(path: &Path, trace: bool, json: bool) -> CliResult<String> {
    let (doc, word) = load_word(path)?;
    let result = signature(&word)?;
    let running = result.running_totals();
    if json {
        let steps = result
            .steps
            .iter()
            .zip(&running)
            .map(|(s, &r)| StepJson {
                k: s.index,
                vector: s.cycle.class.clone(),
                chirality: s.cycle.chirality.sign(),
                solvable: s.solvable,
                sigma: s.sigma,
                contribution: s.contribution(),
                running_total: r,
                witness: s.witness.as_deref().map(rational_strings),
                cumulative_action: matrix_strings(&s.cumulative_action),
            })
            .collect();
        return Ok(to_json(&TraceJson {
            name: doc.name,
            genus: doc.genus,
            boundary: doc.boundary,
            dimension: word.space().dim(),
            null_homologous_count: result.null_homologous_count,
            steps,
            signature: result.total,
        }));
    }
    let mut out = String::new();
    if trace {
        let mut table = Table::new(["k", "class", "hand", "solvable", "sigma_k", "running"]);
        for (s, r) in result.steps.iter().zip(&running) {
            table.push(vec![
                s.index.to_string(),
                format_class(&s.cycle.class),
                format!("{:+}", s.cycle.chirality.sign()),
                if s.solvable { "yes" } else { "no" }.into(),
                s.sigma.to_string(),
                r.to_string(),
            ]);
        }
        out.push_str(&table.render());
        out.push_str(&format!("null-homologous cycles: {}\n", result.null_homologous_count));
    }
    out.push_str(&format!("signature: {}\n", result.total));
    Ok(out)
}

#[derive(Serialize)]
struct CorrectionJson {
    m: u32,
    sigma: i64,
    matrix: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct PowerJson {
    name: Option<String>,
    folds: u32,
    base_signature: i64,
    monodromy: Vec<Vec<String>>,
    corrections: Vec<CorrectionJson>,
    signature: i64,
}

pub fn cmd_power(path: &Path, n: u32, json: bool) -> CliResult<String> {
    if n == 0 {
        return Err(CliError::Invalid("option `--n`: the number of folds must be at least 1".into()));
    }
    let (doc, word) = load_word(path)?;
    let base = signature(&word)?.total;
    let phi = word.monodromy();
    let report = cover_breakdown(&word.space(), base, &phi, n)?;
    if json {
        return Ok(to_json(&PowerJson {
            name: doc.name,
            folds: n,
            base_signature: base,
            monodromy: matrix_strings(&phi),
            corrections: report
                .corrections
                .iter()
                .map(|c| CorrectionJson { m: c.power, sigma: c.sigma, matrix: matrix_strings(&c.matrix) })
                .collect(),
            signature: report.total,
        }));
    }
    let mut out = format!("base signature: {base}\nfolds: {n}\n");
    if !report.corrections.is_empty() {
        let mut table = Table::new(["m", "correction"]);
        for c in &report.corrections {
            table.push(vec![c.power.to_string(), c.sigma.to_string()]);
        }
        out.push_str(&table.render());
    }
    out.push_str(&format!("signature: {}\n", report.total));
    Ok(out)
}

fn load_lagrangians(path: &Path) -> CliResult<(SymplecticSpace, Vec<Lagrangian>)> {
    let doc = MatrixDocument::load(path)?;
    doc.expect_shape(3)?;
    let space = SymplecticSpace::standard(doc.dimension / 2);
    let mut out = Vec::with_capacity(3);
    for i in 0..3 {
        let spanning = doc.matrix(i, doc.dimension)?.to_rows();
        let l = Lagrangian::new(&space, spanning)
            .map_err(|e| CliError::Invalid(format!("field `matrices[{i}]`: {e}")))?;
        out.push(l);
    }
    Ok((space, out))
}

#[derive(Serialize)]
struct MaslovJson {
    dimension: usize,
    wall_dimension: usize,
    wall_form: Vec<Vec<String>>,
    maslov_index: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    axioms: Option<Vec<AxiomJson>>,
}

#[derive(Serialize)]
struct AxiomJson {
    axiom: &'static str,
    passed: bool,
}

/// Checks the index axioms on the given triple with a fixed random seed.
fn check_axioms(space: &SymplecticSpace, l: &[Lagrangian]) -> CliResult<Vec<(&'static str, bool)>> {
    let tau = |a: &Lagrangian, b: &Lagrangian, c: &Lagrangian| maslov_index(a, b, c);
    let (a, b, c) = (&l[0], &l[1], &l[2]);
    let t = tau(a, b, c)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0);

    let line = SymplecticSpace::standard(1);
    let span = |v: [i64; 2]| Lagrangian::from_int_vectors(&line, &[v]);
    let normalization = tau(&span([1, 0])?, &span([1, 1])?, &span([0, 1])?)? == -1;

    let skew = [
        (tau(b, c, a)?, t),
        (tau(c, a, b)?, t),
        (tau(b, a, c)?, -t),
        (tau(a, c, b)?, -t),
        (tau(c, b, a)?, -t),
    ]
    .iter()
    .all(|(x, y)| x == y);

    let mut invariance = true;
    let mut additivity = true;
    let mut cocycle = true;
    for _ in 0..10 {
        let m = random_symplectic(space, &mut rng, 4);
        invariance &= tau(&a.image(&m)?, &b.image(&m)?, &c.image(&m)?)? == t;
        let extra: Vec<Lagrangian> = (0..3).map(|_| random_lagrangian(space, &mut rng)).collect();
        let t2 = tau(&extra[0], &extra[1], &extra[2])?;
        additivity &= tau(&a.direct_sum(&extra[0]), &b.direct_sum(&extra[1]), &c.direct_sum(&extra[2]))? == t + t2;
        let d = &extra[0];
        cocycle &= tau(b, c, d)? - tau(a, c, d)? + tau(a, b, d)? - t == 0;
    }
    Ok(vec![
        ("normalization", normalization),
        ("skew symmetry", skew),
        ("symplectic invariance", invariance),
        ("direct-sum additivity", additivity),
        ("cocycle", cocycle),
    ])
}

pub fn cmd_maslov(path: &Path, axioms: bool, json: bool) -> CliResult<String> {
    let (space, l) = load_lagrangians(path)?;
    let w = wall_space(&l[0], &l[1], &l[2])?;
    let index = w.signature();
    let checks = if axioms { Some(check_axioms(&space, &l)?) } else { None };
    let failed = checks.iter().flatten().filter(|(_, ok)| !ok).count();
    let out = if json {
        to_json(&MaslovJson {
            dimension: space.dim(),
            wall_dimension: w.dim(),
            wall_form: matrix_strings(&w.form_matrix),
            maslov_index: index,
            axioms: checks
                .as_ref()
                .map(|cs| cs.iter().map(|&(axiom, passed)| AxiomJson { axiom, passed }).collect()),
        })
    } else {
        let mut out = String::new();
        if let Some(cs) = &checks {
            let mut table = Table::new(["axiom", "result"]);
            for (name, ok) in cs {
                table.push(vec![name.to_string(), if *ok { "pass" } else { "fail" }.into()]);
            }
            out.push_str(&table.render());
        }
        out.push_str(&format!("wall dimension: {}\nmaslov index: {index}\n", w.dim()));
        out
    };
    if failed > 0 {
        print!("{out}");
        return Err(lefsig_core::Error::Internal(format!("{failed} Maslov index axiom checks failed")).into());
    }
    Ok(out)
}

#[derive(Serialize)]
struct MeyerJson {
    dimension: usize,
    meyer_cocycle: i64,
}

pub fn cmd_meyer(path: &Path, json: bool) -> CliResult<String> {
    let doc = MatrixDocument::load(path)?;
    doc.expect_shape(2)?;
    let space = SymplecticSpace::standard(doc.dimension / 2);
    let mut ms = Vec::with_capacity(2);
    for i in 0..2 {
        let m = doc.matrix(i, doc.dimension)?;
        if m.rows() != doc.dimension || !is_symplectic(&space, &m)? {
            return Err(CliError::Invalid(format!(
                "field `matrices[{i}]`: not a {d}x{d} symplectic matrix for the standard form",
                d = doc.dimension
            )));
        }
        ms.push(m);
    }
    let value = meyer_cocycle(&space, &ms[0], &ms[1])?;
    Ok(if json {
        to_json(&MeyerJson { dimension: doc.dimension, meyer_cocycle: value })
    } else {
        format!("meyer cocycle: {value}\n")
    })
}

/// Returns the document text and the signature of the generated word.
pub fn cmd_generate(genus: u32, boundary: u32, n: u32) -> CliResult<(String, i64, usize)> {
    let word = generate(PositiveFamilySpec { genus, boundary, repetitions: n })?;
    let total = signature(&word)?.total;
    let name = format!("positive family genus {genus} boundary {boundary} n {n}");
    let doc = FibrationDocument::from_word(&word, Some(name));
    Ok((doc.to_canonical_json(), total, word.len()))
}
