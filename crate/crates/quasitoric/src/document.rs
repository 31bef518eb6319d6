//! Plain-text document formats for problems, relations, and curve points.
//!
//! Documents are TOML.  A problem carries `cyclotomic_order` (default 1),
//! `type` (the exponent triple), and `F` (three polynomial strings); a
//! relation carries `h`; a point carries `z1` and `z2` as `num|den` pairs.
//! Emitted documents are byte-deterministic and re-readable.

use std::fmt;

use serde::Deserialize;

use crate::correspond::CurvePoint;
use crate::poly::{format_form, parse_form, Form, FormError, FormRatio};
use crate::relation::{ProblemInstance, Relation};
use crate::types::{TypeError, TypeTriple};

#[derive(Debug)]
pub enum DocumentError {
    /// The TOML structure is malformed.
    Structure(String),
    /// A polynomial field failed to parse.
    Polynomial { field: String, source: FormError },
    /// The type triple has a zero entry.
    Type(TypeError),
    /// The document's field order contradicts the surrounding context.
    OrderMismatch { expected: u32, found: u32 },
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocumentError::Structure(msg) => write!(f, "malformed document: {msg}"),
            DocumentError::Polynomial { field, source } => {
                write!(f, "field {field}: {source}")
            }
            DocumentError::Type(e) => write!(f, "{e}"),
            DocumentError::OrderMismatch { expected, found } => {
                write!(
                    f,
                    "document sets cyclotomic_order = {found}, expected {expected}"
                )
            }
        }
    }
}

impl std::error::Error for DocumentError {}

#[derive(Debug, Deserialize)]
struct RawProblem {
    cyclotomic_order: Option<u32>,
    #[serde(rename = "type")]
    ptype: [u64; 3],
    #[serde(rename = "F")]
    coeffs: [String; 3],
}

#[derive(Debug, Deserialize)]
struct RawRelation {
    cyclotomic_order: Option<u32>,
    h: [String; 3],
}

#[derive(Debug, Deserialize)]
struct RawPoint {
    cyclotomic_order: Option<u32>,
    z1: String,
    z2: String,
}

#[derive(Debug, Deserialize)]
struct RawRelationList {
    cyclotomic_order: Option<u32>,
    relations: Vec<[String; 3]>,
}

/// A parsed problem document plus whether any polynomial field used the
/// symbol `z` (for the order-1 collapse warning).
#[derive(Clone, Debug)]
pub struct ProblemDocument {
    pub problem: ProblemInstance,
    pub mentions_zeta: bool,
}

/// A parsed relation document.
#[derive(Clone, Debug)]
pub struct RelationDocument {
    pub relation: Relation,
    pub mentions_zeta: bool,
}

/// A parsed point document.
#[derive(Clone, Debug)]
pub struct PointDocument {
    pub point: CurvePoint,
    pub mentions_zeta: bool,
}

/// A parsed list-of-relations document, as emitted by fiber, search, and
/// sampling commands.
#[derive(Clone, Debug)]
pub struct RelationListDocument {
    pub relations: Vec<Relation>,
    pub mentions_zeta: bool,
}

fn structure(e: toml::de::Error) -> DocumentError {
    DocumentError::Structure(e.message().to_string())
}

fn field_form(text: &str, order: u32, field: &str) -> Result<Form, DocumentError> {
    parse_form(text, order).map_err(|source| DocumentError::Polynomial {
        field: field.to_string(),
        source,
    })
}

fn check_order(declared: Option<u32>, expected: u32) -> Result<u32, DocumentError> {
    match declared {
        None => Ok(expected),
        Some(found) if found == expected => Ok(found),
        Some(found) => Err(DocumentError::OrderMismatch { expected, found }),
    }
}

/// Parses a problem document.  A missing `cyclotomic_order` means 1.
pub fn read_problem(text: &str) -> Result<ProblemDocument, DocumentError> {
    let raw: RawProblem = toml::from_str(text).map_err(structure)?;
    let order = raw.cyclotomic_order.unwrap_or(1);
    if order == 0 {
        return Err(DocumentError::Structure(
            "cyclotomic_order must be positive".to_string(),
        ));
    }
    let ptype = TypeTriple::new(raw.ptype).map_err(DocumentError::Type)?;
    let coeffs = [
        field_form(&raw.coeffs[0], order, "F[0]")?,
        field_form(&raw.coeffs[1], order, "F[1]")?,
        field_form(&raw.coeffs[2], order, "F[2]")?,
    ];
    let mentions_zeta = raw.coeffs.iter().any(|s| s.contains('z'));
    Ok(ProblemDocument {
        problem: ProblemInstance::new(coeffs, ptype),
        mentions_zeta,
    })
}

/// Parses a relation document in the field of the surrounding problem; a
/// declared `cyclotomic_order` must agree.
pub fn read_relation(text: &str, order: u32) -> Result<RelationDocument, DocumentError> {
    let raw: RawRelation = toml::from_str(text).map_err(structure)?;
    let order = check_order(raw.cyclotomic_order, order)?;
    let h = [
        field_form(&raw.h[0], order, "h[0]")?,
        field_form(&raw.h[1], order, "h[1]")?,
        field_form(&raw.h[2], order, "h[2]")?,
    ];
    let mentions_zeta = raw.h.iter().any(|s| s.contains('z'));
    Ok(RelationDocument {
        relation: Relation::new(h),
        mentions_zeta,
    })
}

fn parse_ratio(text: &str, order: u32, field: &str) -> Result<FormRatio, DocumentError> {
    let (num_text, den_text) = match text.split_once('|') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let num = field_form(num_text, order, field)?;
    let den = field_form(den_text, order, field)?;
    FormRatio::new(num, den).map_err(|source| DocumentError::Polynomial {
        field: field.to_string(),
        source,
    })
}

/// Parses a point document (`z1`/`z2` as `num|den` polynomial pairs).
pub fn read_point(text: &str, order: u32) -> Result<PointDocument, DocumentError> {
    let raw: RawPoint = toml::from_str(text).map_err(structure)?;
    let order = check_order(raw.cyclotomic_order, order)?;
    let z1 = parse_ratio(&raw.z1, order, "z1")?;
    let z2 = parse_ratio(&raw.z2, order, "z2")?;
    let mentions_zeta = raw.z1.contains('z') || raw.z2.contains('z');
    Ok(PointDocument {
        point: CurvePoint { z1, z2 },
        mentions_zeta,
    })
}

/// Parses a list-of-relations document.
pub fn read_relation_list(
    text: &str,
    order: u32,
) -> Result<RelationListDocument, DocumentError> {
    let raw: RawRelationList = toml::from_str(text).map_err(structure)?;
    let order = check_order(raw.cyclotomic_order, order)?;
    let mut relations = Vec::with_capacity(raw.relations.len());
    let mut mentions_zeta = false;
    for (i, entry) in raw.relations.iter().enumerate() {
        let h = [
            field_form(&entry[0], order, &format!("relations[{i}][0]"))?,
            field_form(&entry[1], order, &format!("relations[{i}][1]"))?,
            field_form(&entry[2], order, &format!("relations[{i}][2]"))?,
        ];
        mentions_zeta |= entry.iter().any(|s| s.contains('z'));
        relations.push(Relation::new(h));
    }
    Ok(RelationListDocument {
        relations,
        mentions_zeta,
    })
}

fn relation_line(r: &Relation) -> String {
    format!(
        "[\"{}\", \"{}\", \"{}\"]",
        format_form(&r.h[0]),
        format_form(&r.h[1]),
        format_form(&r.h[2])
    )
}

/// Canonical single-relation document, optionally annotated with its type.
pub fn write_relation(order: u32, ptype: Option<TypeTriple>, r: &Relation) -> String {
    let mut out = format!("cyclotomic_order = {order}\n");
    if let Some(t) = ptype {
        let e = t.entries();
        out.push_str(&format!("type = [{}, {}, {}]\n", e[0], e[1], e[2]));
    }
    out.push_str(&format!("h = {}\n", relation_line(r)));
    out
}

/// Canonical point document.
pub fn write_point(order: u32, pt: &CurvePoint) -> String {
    format!(
        "cyclotomic_order = {order}\nz1 = \"{}|{}\"\nz2 = \"{}|{}\"\n",
        format_form(pt.z1.numerator()),
        format_form(pt.z1.denominator()),
        format_form(pt.z2.numerator()),
        format_form(pt.z2.denominator())
    )
}

/// Canonical list-of-relations document with optional extra fields
/// (search note, sampling parameters and equivalence report).
pub fn write_relation_list(
    order: u32,
    ptype: Option<TypeTriple>,
    relations: &[Relation],
    note: Option<&str>,
    parameters: Option<&[String]>,
    equivalent_pairs: Option<&[(usize, usize)]>,
) -> String {
    let mut out = format!("cyclotomic_order = {order}\n");
    if let Some(t) = ptype {
        let e = t.entries();
        out.push_str(&format!("type = [{}, {}, {}]\n", e[0], e[1], e[2]));
    }
    if relations.is_empty() {
        out.push_str("relations = []\n");
    } else {
        out.push_str("relations = [\n");
        for r in relations {
            out.push_str(&format!("    {},\n", relation_line(r)));
        }
        out.push_str("]\n");
    }
    if let Some(note) = note {
        out.push_str(&format!("note = \"{note}\"\n"));
    }
    if let Some(parameters) = parameters {
        if parameters.is_empty() {
            out.push_str("parameters = []\n");
        } else {
            out.push_str("parameters = [\n");
            for p in parameters {
                out.push_str(&format!("    \"{p}\",\n"));
            }
            out.push_str("]\n");
        }
    }
    if let Some(pairs) = equivalent_pairs {
        if pairs.is_empty() {
            out.push_str("equivalent_pairs = []\n");
        } else {
            out.push_str("equivalent_pairs = [\n");
            for (i, j) in pairs {
                out.push_str(&format!("    [{i}, {j}],\n"));
            }
            out.push_str("]\n");
        }
    }
    out
}
