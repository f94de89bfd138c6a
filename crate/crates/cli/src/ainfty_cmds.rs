//! Hochschild dimensions and A-infinity deformations of finite categories.

use std::path::Path;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::Value;
use twisted_hodge::ainfty::bundled;
use twisted_hodge::ainfty::text::{parse_document, write_document, Document};
use twisted_hodge::ainfty::{
    cocycle_basis, default_k_max, deform, deform_unchecked, hh_dimensions, AInfinityStructure, Field, StasheffReport,
    Unitality,
};
use twisted_hodge::{verify_stasheff, Cochain, Rational};

use crate::error::CliError;
use crate::report::{aligned, document, s, table, Report};

/// A category with coefficients and an optional cochain, and where it came from.
pub struct Input {
    pub source: String,
    pub doc: Document<Rational>,
}

pub fn load(example: Option<&str>, input: Option<&Path>) -> Result<Input, CliError> {
    match (example, input) {
        (Some(name), None) => {
            let ex = bundled::example(name).ok_or_else(|| {
                CliError::Usage(format!("unknown example {name:?}; known: {}", bundled::EXAMPLE_NAMES.join(", ")))
            })?;
            Ok(Input {
                source: format!("example {name}"),
                doc: Document {
                    category: ex.category,
                    bimodule: ex.bimodule,
                    cochain: ex.cochain,
                },
            })
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            Ok(Input {
                source: format!("file {}", path.display()),
                doc: parse_document(&text)?,
            })
        }
        _ => Err(CliError::Usage("give exactly one of --example and --input".into())),
    }
}

fn objects_json(objects: &[String]) -> Value {
    Value::Array(objects.iter().map(s).collect())
}

fn unitality_text(u: &Unitality, objects: &[String]) -> String {
    match u {
        Unitality::NotApplicable => "not applicable".into(),
        Unitality::Holds => "holds".into(),
        Unitality::Fails { arity, chain, tuple } => format!(
            "fails for m_{arity} on chain {} at basis {:?}",
            chain.iter().map(|&o| objects[o].as_str()).collect::<Vec<_>>().join(","),
            tuple
        ),
    }
}

type Fields = Vec<(&'static str, Value)>;

/// JSON fields, pretty text and CSV rows describing one identity check.
fn stasheff_fields(report: &StasheffReport<Rational>, objects: &[String]) -> (Fields, String, Vec<Vec<String>>) {
    let rows: Vec<Vec<String>> = report
        .checks
        .iter()
        .map(|c| {
            let state = if c.vacuous {
                "vacuous"
            } else if c.passed {
                "pass"
            } else {
                "fail"
            };
            vec![c.k.to_string(), state.to_string(), c.tuples.to_string()]
        })
        .collect();
    let status = if report.fully_passed() { "PASS" } else { "FAIL" };
    let failure = report.first_failure.as_ref().map(|f| {
        let chain: Vec<String> = f.chain.iter().map(|&o| objects[o].clone()).collect();
        (
            f.k,
            chain,
            f.tuple.iter().map(ToString::to_string).collect::<Vec<_>>(),
            f.residual.iter().map(ToString::to_string).collect::<Vec<_>>(),
        )
    });
    let mut pretty = format!(
        "{status} through k={} (k_max {}, {} tuple evaluations)\n",
        report.passes_through(),
        report.k_max,
        report.evaluations
    );
    if let Some((k, chain, tuple, residual)) = &failure {
        pretty.push_str(&format!(
            "first failure at k={k} on chain {} with basis tuple ({}); residual [{}]\n",
            chain.join(","),
            tuple.join(","),
            residual.join(", ")
        ));
    }
    pretty.push_str(&format!("strict unitality: {}\n\n", unitality_text(&report.unitality, objects)));
    pretty.push_str(&aligned(&["k", "identity", "tuples"], &rows));
    let failure_json = match failure {
        None => Value::Null,
        Some((k, chain, tuple, residual)) => {
            let mut v = document(
                "failure",
                vec![
                    ("k", s(k)),
                    ("chain", Value::Array(chain.into_iter().map(Value::String).collect())),
                    ("tuple", Value::Array(tuple.into_iter().map(Value::String).collect())),
                    ("residual", Value::Array(residual.into_iter().map(Value::String).collect())),
                ],
            );
            v.as_object_mut().expect("documents are objects").remove("kind");
            v
        }
    };
    let fields = vec![
        ("status", s(status)),
        ("k_max", s(report.k_max)),
        ("passes_through", s(report.passes_through())),
        ("evaluations", s(report.evaluations)),
        ("checks", table(&["k", "identity", "tuples"], &rows)),
        ("first_failure", failure_json),
        ("unitality", s(unitality_text(&report.unitality, objects))),
    ];
    (fields, pretty, rows)
}

fn structure_lines(a: &AInfinityStructure<Rational>) -> String {
    a.support()
        .iter()
        .map(|&i| format!("m_{i}: {} non-zero basis values\n", a.num_entries(i)))
        .collect()
}

fn verify_report(
    command: &str,
    input: &Input,
    structure: &AInfinityStructure<Rational>,
    preface: String,
    extra: Fields,
    k_max: Option<usize>,
    budget: u64,
) -> Result<Report, CliError> {
    let k_max = k_max.unwrap_or_else(|| default_k_max(structure));
    let report = verify_stasheff(structure, k_max, budget)?;
    let objects = input.doc.category.objects();
    let (fields, body, rows) = stasheff_fields(&report, objects);
    let mut all = vec![
        ("command", s(command)),
        ("source", s(&input.source)),
        ("objects", objects_json(objects)),
        ("support", Value::Array(structure.support().into_iter().map(s).collect())),
    ];
    all.extend(extra);
    all.extend(fields);
    Ok(Report {
        json: document("ainfty_report", all),
        header: vec!["k".into(), "identity".into(), "tuples".into()],
        rows,
        pretty: format!("ainfty {command}: {}\n{preface}{}{body}", input.source, structure_lines(structure)),
    })
}

/// Checks the A-infinity identities of the input category, deformed by its
/// cochain when one is given. A non-cocycle is deformed anyway so the failing
/// identity can be reported.
pub fn cmd_verify(input: &Input, k_max: Option<usize>, budget: u64) -> Result<Report, CliError> {
    let Document { category, bimodule, cochain } = &input.doc;
    match cochain {
        None => verify_report("verify", input, &category.as_ainfinity(), String::new(), vec![], k_max, budget),
        Some(eta) => {
            let cocycle = eta.differential(category, bimodule)?.is_zero();
            let deformed = deform_unchecked(category, bimodule, eta)?;
            let preface = format!(
                "deformed by a degree-{} cochain ({})\n",
                eta.degree(),
                if cocycle { "a cocycle" } else { "not a cocycle" }
            );
            let extra = vec![("cochain_degree", s(eta.degree())), ("cocycle", Value::Bool(cocycle))];
            verify_report("verify", input, &deformed.structure, preface, extra, k_max, budget)
        }
    }
}

pub fn cmd_hhdim(input: &Input, up_to: usize, budget: u64) -> Result<Report, CliError> {
    let dims = hh_dimensions(&input.doc.category, &input.doc.bimodule, up_to, budget)?;
    let rows: Vec<Vec<String>> = dims.iter().enumerate().map(|(n, v)| vec![n.to_string(), v.to_string()]).collect();
    let json = document(
        "ainfty_report",
        vec![
            ("command", s("hhdim")),
            ("source", s(&input.source)),
            ("objects", objects_json(input.doc.category.objects())),
            ("dims", table(&["degree", "dim"], &rows)),
        ],
    );
    Ok(Report {
        json,
        header: vec!["degree".into(), "dim".into()],
        rows: rows.clone(),
        pretty: format!("dim HH^n for {}\n\n{}", input.source, aligned(&["n", "dim"], &rows)),
    })
}

/// A random integer combination of a cocycle basis, never zero when the basis is non-empty.
fn random_cocycle(basis: &[Cochain<Rational>], degree: usize, seed: u64) -> Cochain<Rational> {
    let mut rng = StdRng::seed_from_u64(seed);
    loop {
        let mut eta = Cochain::zero(degree);
        for b in basis {
            let c = Rational::from_i64(rng.gen_range(-3..=3));
            eta = eta.add(&b.scaled(&c)).expect("basis cochains share a degree");
        }
        if !eta.is_zero() {
            return eta;
        }
    }
}

/// Deforms the input by its cochain, or by a seeded random cocycle of
/// `degree` when it has none, then verifies the result.
pub fn cmd_deform(
    input: &Input,
    degree: usize,
    seed: u64,
    k_max: Option<usize>,
    budget: u64,
    emit: Option<&Path>,
) -> Result<Report, CliError> {
    let Document { category, bimodule, cochain } = &input.doc;
    let (eta, origin) = match cochain {
        Some(eta) => (eta.clone(), "the input cochain".to_string()),
        None => {
            let basis = cocycle_basis(category, bimodule, degree, budget)?;
            if basis.is_empty() {
                return Err(CliError::Precondition(format!(
                    "no non-zero normalized cocycles in degree {degree}"
                )));
            }
            (
                random_cocycle(&basis, degree, seed),
                format!("a random cocycle (seed {seed}, cocycle space of dimension {})", basis.len()),
            )
        }
    };
    let deformed = deform(category, bimodule, &eta)?;
    let projection = deformed.projection.check(&deformed.structure, category);
    if !projection {
        return Err(CliError::Internal("the projection to X is not a strict functor".into()));
    }
    if let Some(path) = emit {
        let doc = Document {
            category: category.clone(),
            bimodule: bimodule.clone(),
            cochain: Some(eta.clone()),
        };
        std::fs::write(path, write_document(&doc))
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
    }
    let preface = format!(
        "deformed by {origin} of degree {} with {} non-zero values; projection to X is a strict functor\n",
        eta.degree(),
        eta.num_entries()
    );
    let extra = vec![
        ("cochain_degree", s(eta.degree())),
        ("cochain_entries", s(eta.num_entries())),
        ("seed", if cochain.is_some() { Value::Null } else { s(seed) }),
        ("projection_strict", Value::Bool(projection)),
    ];
    verify_report("deform", input, &deformed.structure, preface, extra, k_max, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example(name: &str) -> Input {
        load(Some(name), None).unwrap()
    }

    #[test]
    fn perturbed_example_fails_at_four() {
        let r = cmd_verify(&example("dual-numbers-perturbed"), None, 1_000_000).unwrap();
        assert_eq!(r.json["status"], "FAIL");
        assert_eq!(r.json["first_failure"]["k"], "4");
        assert_eq!(r.json["cocycle"], Value::Bool(false));
    }

    #[test]
    fn deform_is_reproducible_from_a_seed() {
        let a = cmd_deform(&example("dual-numbers"), 3, 9, None, 1_000_000, None).unwrap();
        let b = cmd_deform(&example("dual-numbers"), 3, 9, None, 1_000_000, None).unwrap();
        assert_eq!(a.json, b.json);
        assert_eq!(a.json["status"], "PASS");
    }

    #[test]
    fn deform_rejects_spaces_without_cocycles() {
        assert!(matches!(cmd_deform(&example("a2"), 3, 0, None, 1_000_000, None), Err(CliError::Precondition(_))));
        assert!(matches!(
            cmd_deform(&example("dual-numbers-perturbed"), 3, 0, None, 1_000_000, None),
            Err(CliError::Precondition(_))
        ));
    }

    #[test]
    fn unknown_example_is_a_usage_error() {
        assert!(matches!(load(Some("nope"), None), Err(CliError::Usage(_))));
    }

    #[test]
    fn tiny_budget_is_reported() {
        let r = cmd_hhdim(&example("matrix-algebra"), 3, 10);
        assert!(matches!(r, Err(CliError::Budget(_))));
    }
}
