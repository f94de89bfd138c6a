//! Diamonds, Hochschild profiles, kernel tables, searches and quadric checks.

use std::ops::RangeInclusive;

use serde_json::Value;
use twisted_hodge::{
    candidate_search, diamond, guaranteed_kernel_check, kernel_dim, les_ledger, profile, pushforward_dim_via_hh_on_x,
    BigInt, CandidateStatus, Hypersurface, Target, TwistedHodgeDiamond,
};

use crate::error::CliError;
use crate::report::{aligned, document, s, table, Report};

/// Draws the diamond with `h^{n,n}` on top, `h^{0,0}` at the bottom, `h^{n,0}`
/// left and `h^{0,n}` right. Zero entries off the four lines are left blank.
pub fn render_diamond(dia: &TwistedHodgeDiamond) -> String {
    let rows = dia.rows();
    let shown = |i: i64, j: i64| -> Option<String> {
        let v = dia.get(i, j);
        (dia.on_support(i, j) || v != BigInt::from(0)).then(|| v.to_string())
    };
    let width = rows
        .iter()
        .flatten()
        .filter_map(|&(i, j, _)| shown(i, j))
        .map(|v| v.len())
        .max()
        .unwrap_or(1);
    let columns = 2 * dia.hypersurface().dim() as usize + 1;
    let mut out = String::new();
    for row in rows {
        let mut slots = vec![String::new(); columns];
        for (i, j, c) in row {
            if let Some(v) = shown(i, j) {
                slots[c] = v;
            }
        }
        let line: String = slots.iter().map(|v| format!("{v:<width$} ")).collect();
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn cmd_diamond(n: i64, d: i64, twist: i64) -> Result<Report, CliError> {
    let x = Hypersurface::new(n, d)?;
    let dia = diamond(&x, twist);
    let rows: Vec<Vec<String>> = dia
        .nonzero_entries()
        .into_iter()
        .map(|(i, j, v)| vec![i.to_string(), j.to_string(), v.to_string()])
        .collect();
    let json = document(
        "diamond",
        vec![("n", s(n)), ("d", s(d)), ("twist", s(twist)), ("entries", table(&["i", "j", "value"], &rows))],
    );
    let pretty = format!("h^{{i,j}}(X, O_X({twist})) for the {x}\n\n{}", render_diamond(&dia));
    Ok(Report {
        json,
        header: vec!["i".into(), "j".into(), "value".into()],
        rows,
        pretty,
    })
}

fn profile_report(x: &Hypersurface, p: i64, target: Target, title: &str) -> Result<Report, CliError> {
    let prof = profile(x, p, target)?;
    let rows: Vec<Vec<String>> = prof.dims.iter().map(|(m, v)| vec![m.to_string(), v.to_string()]).collect();
    let json = document(
        "profile",
        vec![
            ("n", s(x.dim())),
            ("d", s(x.degree())),
            ("p", s(p)),
            ("target", s(target)),
            ("dims", table(&["m", "value"], &rows)),
        ],
    );
    let pretty = format!("{title} for the {x}, p = {p}\n\n{}", aligned(&["m", "dim"], &rows));
    Ok(Report {
        json,
        header: vec!["m".into(), "value".into()],
        rows,
        pretty,
    })
}

pub fn cmd_hh(n: i64, d: i64, p: i64, target: Target) -> Result<Report, CliError> {
    let x = Hypersurface::new(n, d)?;
    let title = match target {
        Target::OnX => "dim HH^m(X, O_X(p))",
        Target::Pushforward => "dim HH^m(P^{n+1}, f_* O_X(p))",
        Target::Kernel => "dim ker f_* on HH^m(X, O_X(p))",
    };
    profile_report(&x, p, target, title)
}

/// The pushforward profile, cross-checked against the route through `HH(X)`
/// whenever `t - p` is outside `{0, d}`.
pub fn cmd_pushforward(n: i64, d: i64, p: i64) -> Result<Report, CliError> {
    let x = Hypersurface::new(n, d)?;
    let mut report = profile_report(&x, p, Target::Pushforward, "dim HH^m(P^{n+1}, f_* O_X(p))")?;
    let q = x.canonical_twist() - p;
    if q == 0 || q == d {
        report.pretty.push_str(&format!("\nsecond route skipped: t - p = {q} lies in {{0, d}}\n"));
        return Ok(report);
    }
    for row in &report.rows {
        let m: i64 = row[0].parse().expect("m is written as an integer");
        let via = pushforward_dim_via_hh_on_x(&x, p, m)?;
        if via.to_string() != row[1] {
            return Err(CliError::Internal(format!(
                "pushforward dimension at m = {m}: direct sum {} but route through HH(X) gives {via}",
                row[1]
            )));
        }
    }
    report.pretty.push_str("\nsecond route through HH(X): agrees at every m\n");
    Ok(report)
}

/// An expected kernel value `m:value` to compare against.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expectation {
    pub m: i64,
    pub value: BigInt,
}

impl std::str::FromStr for Expectation {
    type Err = String;

    fn from_str(src: &str) -> Result<Self, Self::Err> {
        let (m, v) = src.split_once(':').ok_or_else(|| format!("expected M:VALUE, got {src:?}"))?;
        Ok(Expectation {
            m: m.trim().parse().map_err(|e| format!("bad degree {m:?}: {e}"))?,
            value: v.trim().parse().map_err(|e| format!("bad value {v:?}: {e}"))?,
        })
    }
}

pub fn cmd_kernel(
    n: i64,
    d: i64,
    p: i64,
    m: Option<i64>,
    verify_les: bool,
    expect: &[Expectation],
) -> Result<Report, CliError> {
    let x = Hypersurface::new(n, d)?;
    let degrees: Vec<i64> = match m {
        Some(m) => vec![m],
        None => (0..=2 * n).collect(),
    };
    let values = degrees
        .iter()
        .map(|&m| kernel_dim(&x, p, m).map(|v| (m, v)))
        .collect::<Result<Vec<_>, _>>()?;
    let rows: Vec<Vec<String>> = values.iter().map(|(m, v)| vec![m.to_string(), v.to_string()]).collect();

    let mut fields = vec![
        ("n", s(n)),
        ("d", s(d)),
        ("p", s(p)),
        ("rows", table(&["m", "value"], &rows)),
    ];
    let mut pretty = match m {
        Some(_) => format!("{}\n", values[0].1),
        None => format!(
            "dim ker f_* on HH^m(X, O_X({p})) for the {x}\n\n{}",
            aligned(&["m", "dim"], &rows)
        ),
    };

    let mut disagreement = None;
    if verify_les {
        let ledger = les_ledger(&x, p)?;
        let mismatches: Vec<String> = values
            .iter()
            .filter(|(m, v)| ledger.kernel(*m) != *v)
            .map(|(m, v)| format!("m = {m}: closed form {v}, exact sequence {}", ledger.kernel(*m)))
            .collect();
        fields.push(("les_agrees", Value::Bool(mismatches.is_empty())));
        if mismatches.is_empty() {
            pretty.push_str("exact-sequence ledger: agrees\n");
        } else {
            disagreement = Some(mismatches.join("; "));
        }
    }

    if !expect.is_empty() {
        let mut checks = Vec::new();
        for e in expect {
            let computed = kernel_dim(&x, p, e.m)?;
            let agrees = computed == e.value;
            pretty.push_str(&format!(
                "expected {} at m = {}: computed {computed} [{}]\n",
                e.value,
                e.m,
                if agrees { "agrees" } else { "DISCREPANCY" }
            ));
            checks.push(document(
                "expectation",
                vec![
                    ("m", s(e.m)),
                    ("expected", s(&e.value)),
                    ("computed", s(&computed)),
                    ("agrees", Value::Bool(agrees)),
                ],
            ));
        }
        for c in &mut checks {
            c.as_object_mut().expect("documents are objects").remove("kind");
        }
        fields.push(("expectations", Value::Array(checks)));
    }

    if let Some(msg) = disagreement {
        return Err(CliError::Internal(format!("kernel oracle disagreement: {msg}")));
    }
    Ok(Report {
        json: document("kernel_table", fields),
        header: vec!["m".into(), "value".into()],
        rows,
        pretty,
    })
}

/// Parses `A..B` (inclusive) or a single integer `A`.
pub fn parse_range(src: &str) -> Result<RangeInclusive<i64>, String> {
    let parse = |t: &str| t.trim().parse::<i64>().map_err(|e| format!("bad bound {t:?}: {e}"));
    let range = match src.split_once("..") {
        Some((a, b)) => parse(a)?..=parse(b.strip_prefix('=').unwrap_or(b))?,
        None => {
            let v = parse(src)?;
            v..=v
        }
    };
    if range.is_empty() {
        return Err(format!("empty range {src:?}"));
    }
    Ok(range)
}

pub fn cmd_search(n: RangeInclusive<i64>, d: RangeInclusive<i64>, p: RangeInclusive<i64>) -> Result<Report, CliError> {
    if *n.start() < 1 || *d.start() < 1 {
        return Err(CliError::Usage("search ranges need n >= 1 and d >= 1".into()));
    }
    let found = candidate_search(n, d, p)?;
    let header = ["n", "d", "p", "m", "status", "dim", "t_minus_p"];
    let rows: Vec<Vec<String>> = found
        .iter()
        .map(|r| {
            let t_minus_p = Hypersurface::new(r.n, r.d).map(|x| x.canonical_twist() - r.p).unwrap_or_default();
            let (status, dim) = match &r.status {
                CandidateStatus::Computed(v) => ("computed", v.to_string()),
                CandidateStatus::Skipped { .. } => ("skipped", String::new()),
            };
            [r.n, r.d, r.p, r.m]
                .iter()
                .map(ToString::to_string)
                .chain([status.to_string(), dim, t_minus_p.to_string()])
                .collect()
        })
        .collect();
    let json_rows: Vec<Value> = found
        .iter()
        .zip(&rows)
        .map(|(r, row)| {
            document(
                "row",
                vec![
                    ("n", s(&row[0])),
                    ("d", s(&row[1])),
                    ("p", s(&row[2])),
                    ("m", s(&row[3])),
                    ("status", s(&row[4])),
                    ("dim", r.dim().map(s).unwrap_or(Value::Null)),
                    ("t_minus_p", s(&row[6])),
                ],
            )
        })
        .map(|mut v| {
            v.as_object_mut().expect("documents are objects").remove("kind");
            v
        })
        .collect();
    let candidates = found.iter().filter(|r| r.is_candidate()).count();
    let pretty = format!(
        "dim ker f_* in degree n + 3 ({} cells, {candidates} with non-zero kernel)\n\n{}",
        found.len(),
        aligned(&header, &rows)
    );
    Ok(Report {
        json: document("search_table", vec![("rows", Value::Array(json_rows))]),
        header: header.iter().map(ToString::to_string).collect(),
        rows,
        pretty,
    })
}

pub fn cmd_quadric(k: i64, d: i64) -> Result<Report, CliError> {
    let value = guaranteed_kernel_check(k, d)?;
    let n = 2 * k - 1;
    let p = -k * d - d;
    let rows = vec![vec![(n + 3).to_string(), value.to_string()]];
    let json = document(
        "kernel_table",
        vec![
            ("n", s(n)),
            ("d", s(d)),
            ("p", s(p)),
            ("k", s(k)),
            ("rows", table(&["m", "value"], &rows)),
        ],
    );
    Ok(Report {
        json,
        header: vec!["m".into(), "value".into()],
        rows,
        pretty: format!("{value}\n"),
    })
}
