//! Argument and family-file parsing.

use cyclotype_core::experiment::FamilySource;
use cyclotype_core::family::{BivariatePoly, FamilySpec, GenericTemplate};
use cyclotype_core::field::{FieldDescriptor, FieldElem};
use cyclotype_core::poly::Poly;
use cyclotype_core::Error;

use serde::Deserialize;

/// Splits q into (p, nu) and builds the field; q must be a prime power.
pub fn field_from_q(q: u64) -> Result<FieldDescriptor, Error> {
    if q < 2 {
        return Err(Error::InvalidInput(format!("q={q} is not a prime power")));
    }
    let mut p = q;
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            p = d;
            break;
        }
        d += 1;
    }
    let mut nu = 0u32;
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
        nu += 1;
    }
    if rest != 1 {
        return Err(Error::InvalidInput(format!(
            "q={q} is not a prime power"
        )));
    }
    FieldDescriptor::make(p, nu)
}

/// Parses one field element: a bare residue for prime fields, or a
/// bracketed coordinate vector like `[1,0,1]`.
pub fn elem_from_arg(field: &FieldDescriptor, text: &str) -> Result<FieldElem, Error> {
    let text = text.trim();
    if let Some(inner) = text.strip_prefix('[') {
        let inner = inner
            .strip_suffix(']')
            .ok_or_else(|| Error::InvalidInput(format!("unbalanced brackets in {text:?}")))?;
        let coords = inner
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::InvalidInput(format!("bad coordinate {tok:?}")))
            })
            .collect::<Result<Vec<u64>, Error>>()?;
        field.elem(&coords)
    } else {
        let v = text
            .parse::<i64>()
            .map_err(|_| Error::InvalidInput(format!("bad residue {text:?}")))?;
        Ok(field.from_i64(v))
    }
}

/// Parses `--poly`: comma-separated coefficients low-to-high, each either a
/// residue or a bracketed coordinate vector.
pub fn poly_from_arg(field: &FieldDescriptor, text: &str) -> Result<Poly, Error> {
    let mut coeffs = Vec::new();
    let mut depth = 0usize;
    let mut token = String::new();
    for ch in text.chars() {
        match ch {
            '[' => {
                depth += 1;
                token.push(ch);
            }
            ']' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| Error::InvalidInput("unbalanced brackets".into()))?;
                token.push(ch);
            }
            ',' if depth == 0 => {
                coeffs.push(elem_from_arg(field, &token)?);
                token.clear();
            }
            _ => token.push(ch),
        }
    }
    if depth != 0 {
        return Err(Error::InvalidInput("unbalanced brackets".into()));
    }
    if !token.trim().is_empty() {
        coeffs.push(elem_from_arg(field, &token)?);
    }
    if coeffs.is_empty() {
        return Err(Error::InvalidInput("empty polynomial".into()));
    }
    Ok(Poly::from_coeffs(field.clone(), coeffs))
}

#[derive(Deserialize)]
struct FamilyFile {
    field: FieldSection,
    #[serde(rename = "F")]
    f: Option<FSection>,
    phi: Option<PhiSection>,
    #[serde(default)]
    fixture: Option<String>,
}

#[derive(Deserialize)]
struct FieldSection {
    p: u64,
    nu: u32,
}

#[derive(Deserialize)]
struct FSection {
    n: u32,
    coeffs_x: Vec<Vec<CoeffValue>>,
}

#[derive(Deserialize)]
struct PhiSection {
    d: u32,
    support: Vec<u32>,
}

/// A coefficient in a family file: a prime residue or a coordinate vector.
#[derive(Deserialize)]
#[serde(untagged)]
enum CoeffValue {
    Scalar(i64),
    Coords(Vec<u64>),
}

impl CoeffValue {
    fn to_elem(&self, field: &FieldDescriptor) -> Result<FieldElem, Error> {
        match self {
            CoeffValue::Scalar(v) => Ok(field.from_i64(*v)),
            CoeffValue::Coords(c) => field.elem(c),
        }
    }
}

/// Parses the family-spec JSON format:
/// `{"field":{"p":101,"nu":1}, "F":{"n":2,"coeffs_x":[[0,100],[0],[1]]},
///   "phi":{"d":2,"support":[0,1]}, "fixture":null}`.
///
/// A non-null `fixture` resolves from the registry instead of `F`/`phi`.
/// `q_override` replaces the file's field when given.
pub fn family_from_json(text: &str, q_override: Option<u64>) -> Result<FamilySource, Error> {
    let file: FamilyFile = serde_json::from_str(text)
        .map_err(|e| Error::InvalidInput(format!("bad family file: {e}")))?;
    let field = match q_override {
        Some(q) => field_from_q(q)?,
        None => FieldDescriptor::make(file.field.p, file.field.nu)?,
    };
    if let Some(key) = file.fixture {
        return Ok(FamilySource::Fixture { key, field });
    }
    let f_section = file
        .f
        .ok_or_else(|| Error::InvalidInput("family file needs F or fixture".into()))?;
    let phi_section = file
        .phi
        .ok_or_else(|| Error::InvalidInput("family file needs phi or fixture".into()))?;
    if f_section.coeffs_x.len() != f_section.n as usize + 1 {
        return Err(Error::InvalidInput(format!(
            "F.coeffs_x has {} entries but n = {}",
            f_section.coeffs_x.len(),
            f_section.n
        )));
    }
    let coeffs_x = f_section
        .coeffs_x
        .iter()
        .map(|poly_coeffs| {
            let elems = poly_coeffs
                .iter()
                .map(|c| c.to_elem(&field))
                .collect::<Result<Vec<FieldElem>, Error>>()?;
            Ok(Poly::from_coeffs(field.clone(), elems))
        })
        .collect::<Result<Vec<Poly>, Error>>()?;
    let f = BivariatePoly::new(field.clone(), coeffs_x)?;
    let phi = GenericTemplate::new(phi_section.d, phi_section.support)?;
    Ok(FamilySource::Inline(FamilySpec::new(f, phi)?))
}
