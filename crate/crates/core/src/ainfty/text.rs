//! Plain-text format for categories, bimodules and cochains.
//!
//! One record per line; `#` starts a comment. Coefficients are integers or
//! fractions `p/q`. Basis indices are 0-based.
//!
//! ```text
//! objects A B
//! hom A A 1
//! hom B B 1
//! hom A B 1
//! identity A 0
//! identity B 0
//! compose A B C out in1 in2 coeff   # coeff * e_out added to e_in1 * e_in2
//! bimodule regular                  # or mhom/left/right records below
//! mhom A B dim
//! left A B C out in1 in2 coeff      # X(A,B) x M(B,C) -> M(A,C)
//! right A B C out in1 in2 coeff     # M(A,B) x X(B,C) -> M(A,C)
//! cochain 3
//! value A,A,A,A 1,1,1 target coeff  # use - for the empty tuple in degree 0
//! ```
//!
//! Compositions and actions involving identities are implicit.

use std::fmt::Write as _;

use num_bigint::BigInt;

use super::category::{CentralBimodule, FiniteLinearCategory, Obj};
use super::cochain::Cochain;
use super::field::Field;
use super::AInfinityError;

/// A parsed input: a category, its coefficient bimodule and an optional cochain.
#[derive(Debug, Clone, PartialEq)]
pub struct Document<F> {
    pub category: FiniteLinearCategory<F>,
    pub bimodule: CentralBimodule<F>,
    pub cochain: Option<Cochain<F>>,
}

type Record<F> = (usize, Obj, Obj, Obj, usize, usize, usize, F);

fn parse_err(line: usize, message: impl Into<String>) -> AInfinityError {
    AInfinityError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_coeff<F: Field>(line: usize, s: &str) -> Result<F, AInfinityError> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let parse = |t: &str| {
        t.parse::<BigInt>()
            .map_err(|_| parse_err(line, format!("invalid coefficient '{s}'")))
    };
    F::from_ratio(&parse(num)?, &parse(den)?)
        .ok_or_else(|| parse_err(line, format!("coefficient '{s}' has a zero denominator in this field")))
}

fn parse_usize(line: usize, s: &str) -> Result<usize, AInfinityError> {
    s.parse()
        .map_err(|_| parse_err(line, format!("expected a nonnegative integer, found '{s}'")))
}

/// Parses a document; a missing `bimodule` section means the regular bimodule.
pub fn parse_document<F: Field>(src: &str) -> Result<Document<F>, AInfinityError> {
    let mut objects: Option<Vec<String>> = None;
    let mut homs: Vec<(usize, Obj, Obj, usize)> = Vec::new();
    let mut identities: Vec<(usize, Obj, usize)> = Vec::new();
    let mut compositions: Vec<Record<F>> = Vec::new();
    let mut regular = false;
    let mut mhoms: Vec<(usize, Obj, Obj, usize)> = Vec::new();
    let mut lefts: Vec<Record<F>> = Vec::new();
    let mut rights: Vec<Record<F>> = Vec::new();
    let mut cochain_degree: Option<(usize, usize)> = None;
    let mut values: Vec<(usize, Vec<Obj>, Vec<usize>, usize, F)> = Vec::new();

    for (idx, raw) in src.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let keyword = fields[0];
        let args = &fields[1..];
        if keyword == "objects" {
            if objects.is_some() {
                return Err(parse_err(line, "duplicate objects record"));
            }
            if args.is_empty() {
                return Err(parse_err(line, "at least one object is required"));
            }
            let names: Vec<String> = args.iter().map(|s| s.to_string()).collect();
            for (i, n) in names.iter().enumerate() {
                if names[..i].contains(n) {
                    return Err(parse_err(line, format!("duplicate object '{n}'")));
                }
            }
            objects = Some(names);
            continue;
        }
        let names = objects
            .as_ref()
            .ok_or_else(|| parse_err(line, "the objects record must come first"))?;
        let obj = |s: &str| {
            names
                .iter()
                .position(|n| n == s)
                .ok_or_else(|| parse_err(line, format!("unknown object '{s}'")))
        };
        let expect = |n: usize| {
            if args.len() == n {
                Ok(())
            } else {
                Err(parse_err(line, format!("'{keyword}' takes {n} fields, found {}", args.len())))
            }
        };
        let in_cochain = cochain_degree.is_some();
        if in_cochain && keyword != "value" {
            return Err(parse_err(line, "only value records may follow the cochain record"));
        }
        match keyword {
            "hom" | "mhom" => {
                expect(3)?;
                let rec = (line, obj(args[0])?, obj(args[1])?, parse_usize(line, args[2])?);
                if keyword == "hom" {
                    homs.push(rec);
                } else {
                    mhoms.push(rec);
                }
            }
            "identity" => {
                expect(2)?;
                identities.push((line, obj(args[0])?, parse_usize(line, args[1])?));
            }
            "compose" | "left" | "right" => {
                expect(7)?;
                let rec = (
                    line,
                    obj(args[0])?,
                    obj(args[1])?,
                    obj(args[2])?,
                    parse_usize(line, args[3])?,
                    parse_usize(line, args[4])?,
                    parse_usize(line, args[5])?,
                    parse_coeff(line, args[6])?,
                );
                match keyword {
                    "compose" => compositions.push(rec),
                    "left" => lefts.push(rec),
                    _ => rights.push(rec),
                }
            }
            "bimodule" => {
                expect(1)?;
                if args[0] != "regular" {
                    return Err(parse_err(line, "the only named bimodule is 'regular'"));
                }
                regular = true;
            }
            "cochain" => {
                expect(1)?;
                cochain_degree = Some((line, parse_usize(line, args[0])?));
            }
            "value" => {
                let Some((_, degree)) = cochain_degree else {
                    return Err(parse_err(line, "value record before the cochain record"));
                };
                expect(4)?;
                let chain = args[0].split(',').map(obj).collect::<Result<Vec<_>, _>>()?;
                let tuple = if args[1] == "-" {
                    Vec::new()
                } else {
                    args[1]
                        .split(',')
                        .map(|s| parse_usize(line, s))
                        .collect::<Result<Vec<_>, _>>()?
                };
                if chain.len() != degree + 1 || tuple.len() != degree {
                    return Err(parse_err(line, format!("a degree-{degree} value needs {} objects and {degree} indices", degree + 1)));
                }
                values.push((line, chain, tuple, parse_usize(line, args[2])?, parse_coeff(line, args[3])?));
            }
            other => return Err(parse_err(line, format!("unknown record '{other}'"))),
        }
    }

    let names = objects.ok_or_else(|| parse_err(0, "missing objects record"))?;
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    let mut builder = FiniteLinearCategory::builder(&refs);
    for (_, a, b, d) in homs {
        builder = builder.hom(a, b, d);
    }
    for (_, a, i) in identities {
        builder = builder.identity(a, i);
    }
    for (_, a, b, c, out, i, j, coeff) in compositions {
        builder = builder.compose(a, b, c, out, i, j, coeff);
    }
    let category = builder.build()?;

    let explicit = !mhoms.is_empty() || !lefts.is_empty() || !rights.is_empty();
    if regular && explicit {
        return Err(parse_err(0, "'bimodule regular' cannot be combined with explicit bimodule records"));
    }
    let bimodule = if explicit {
        let mut b = CentralBimodule::builder(&category);
        for (_, a, c, d) in mhoms {
            b = b.space(a, c, d);
        }
        for (_, a, bb, c, out, i, j, coeff) in lefts {
            b = b.left(a, bb, c, out, i, j, coeff);
        }
        for (_, a, bb, c, out, i, j, coeff) in rights {
            b = b.right(a, bb, c, out, i, j, coeff);
        }
        b.build()?
    } else {
        CentralBimodule::regular(&category)
    };

    let cochain = match cochain_degree {
        None => None,
        Some((_, degree)) => {
            let mut eta = Cochain::zero(degree);
            for (line, chain, tuple, target, coeff) in values {
                let dim = bimodule.dim(chain[0], chain[degree]);
                if target >= dim {
                    return Err(parse_err(line, format!("target index {target} out of range")));
                }
                eta.add_component(chain, tuple, target, dim, coeff);
            }
            eta.check_shape(&category, &bimodule)
                .map_err(|e| parse_err(0, e.to_string()))?;
            Some(eta)
        }
    };

    Ok(Document {
        category,
        bimodule,
        cochain,
    })
}

/// Writes a document in the format accepted by [`parse_document`].
pub fn write_document<F: Field>(doc: &Document<F>) -> String {
    let x = &doc.category;
    let names = x.objects();
    let n = x.num_objects();
    let mut out = String::new();
    let _ = writeln!(out, "objects {}", names.join(" "));
    for a in 0..n {
        for b in 0..n {
            if x.dim(a, b) > 0 {
                let _ = writeln!(out, "hom {} {} {}", names[a], names[b], x.dim(a, b));
            }
        }
    }
    for a in 0..n {
        let _ = writeln!(out, "identity {} {}", names[a], x.identity(a));
    }
    let mut records: Vec<String> = Vec::new();
    for ((a, b, c), (i, j), v) in x.composition_table().iter() {
        if x.is_identity(a, b, i) || x.is_identity(b, c, j) {
            continue;
        }
        for (o, coeff) in v.iter().enumerate() {
            if !coeff.is_zero() {
                records.push(format!("compose {} {} {} {o} {i} {j} {coeff}", names[a], names[b], names[c]));
            }
        }
    }
    records.sort();
    for r in records {
        let _ = writeln!(out, "{r}");
    }

    let m = &doc.bimodule;
    if *m == CentralBimodule::regular(x) {
        let _ = writeln!(out, "bimodule regular");
    } else {
        for a in 0..n {
            for b in 0..n {
                if m.dim(a, b) > 0 {
                    let _ = writeln!(out, "mhom {} {} {}", names[a], names[b], m.dim(a, b));
                }
            }
        }
        let mut records: Vec<String> = Vec::new();
        for ((a, b, c), (i, j), v) in m.left_table().iter() {
            if x.is_identity(a, b, i) {
                continue;
            }
            for (o, coeff) in v.iter().enumerate() {
                if !coeff.is_zero() {
                    records.push(format!("left {} {} {} {o} {i} {j} {coeff}", names[a], names[b], names[c]));
                }
            }
        }
        for ((a, b, c), (i, j), v) in m.right_table().iter() {
            if x.is_identity(b, c, j) {
                continue;
            }
            for (o, coeff) in v.iter().enumerate() {
                if !coeff.is_zero() {
                    records.push(format!("right {} {} {} {o} {i} {j} {coeff}", names[a], names[b], names[c]));
                }
            }
        }
        records.sort();
        for r in records {
            let _ = writeln!(out, "{r}");
        }
    }

    if let Some(eta) = &doc.cochain {
        let _ = writeln!(out, "cochain {}", eta.degree());
        for (chain, tuple, v) in eta.entries() {
            let chain_s: Vec<&str> = chain.iter().map(|&o| names[o].as_str()).collect();
            let tuple_s = if tuple.is_empty() {
                "-".to_string()
            } else {
                tuple.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
            };
            for (t, coeff) in v.iter().enumerate() {
                if !coeff.is_zero() {
                    let _ = writeln!(out, "value {} {tuple_s} {t} {coeff}", chain_s.join(","));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ainfty::bundled;
    use crate::ainfty::field::{Rational, F32003};

    const DUAL: &str = "
        # k[x]/(x^2) deformed by eta(x,x,x) = x
        objects o
        hom o o 2
        identity o 0
        bimodule regular
        cochain 3
        value o,o,o,o 1,1,1 1 1
    ";

    #[test]
    fn parses_the_dual_numbers_example() {
        let doc: Document<Rational> = parse_document(DUAL).unwrap();
        assert_eq!(doc.category, bundled::dual_numbers());
        assert_eq!(doc.cochain.unwrap(), bundled::dual_numbers_cocycle());
    }

    #[test]
    fn round_trips_every_bundled_example() {
        for name in bundled::EXAMPLE_NAMES {
            let ex = bundled::example(name).unwrap();
            let doc = Document {
                category: ex.category,
                bimodule: ex.bimodule,
                cochain: ex.cochain,
            };
            let text = write_document(&doc);
            let back: Document<Rational> = parse_document(&text).unwrap();
            assert_eq!(back, doc, "round trip failed for {name}");
        }
    }

    #[test]
    fn explicit_bimodule_and_fractions() {
        let src = "
            objects o
            hom o o 2
            identity o 0
            mhom o o 1
            cochain 1
            value o,o 1 0 -3/4
        ";
        let doc: Document<Rational> = parse_document(src).unwrap();
        assert_eq!(doc.bimodule.dim(0, 0), 1);
        let eta = doc.cochain.unwrap();
        assert_eq!(eta.get(&[0, 0], &[1]).unwrap()[0], Rational::new((-3).into(), 4.into()));
        let text = write_document(&Document {
            category: doc.category.clone(),
            bimodule: doc.bimodule.clone(),
            cochain: Some(eta.clone()),
        });
        let back: Document<Rational> = parse_document(&text).unwrap();
        assert_eq!(back.cochain.unwrap(), eta);
        let modp: Document<F32003> = parse_document(src).unwrap();
        assert!(!modp.cochain.unwrap().is_zero());
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_document::<Rational>("objects a\nhom a b 1\n").unwrap_err();
        assert_eq!(
            err,
            AInfinityError::Parse {
                line: 2,
                message: "unknown object 'b'".into()
            }
        );
        let err = parse_document::<Rational>("hom a a 1\n").unwrap_err();
        assert!(matches!(err, AInfinityError::Parse { line: 1, .. }));
        let err = parse_document::<Rational>("objects a\nhom a a 1\nidentity a 0\ncompose a a a 0 0 0 x\n").unwrap_err();
        assert!(matches!(err, AInfinityError::Parse { line: 4, .. }));
        let err = parse_document::<Rational>("objects a\nhom a a 1\nidentity a 0\ncochain 1\nvalue a 0 0 1\n").unwrap_err();
        assert!(matches!(err, AInfinityError::Parse { line: 5, .. }));
        let err = parse_document::<F32003>("objects a\nhom a a 1\nidentity a 0\ncochain 0\nvalue a - 0 1/32003\n").unwrap_err();
        assert!(matches!(err, AInfinityError::Parse { line: 5, .. }));
    }

    #[test]
    fn rejects_invalid_categories() {
        let err = parse_document::<Rational>("objects a\nhom a a 2\n").unwrap_err();
        assert!(matches!(err, AInfinityError::InvalidStructure(_)));
    }
}
