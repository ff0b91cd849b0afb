//! Reading polynomial, point, form and pencil arguments, with `@file` indirection.

use hypercone::algebra::{parse_rational, CRational, Rational};
use hypercone::arrangement::LinearFormSet;
use hypercone::improj::{HermitianPencil, RasterBox};
use serde_json::Value;

use crate::CliError;

/// The argument itself, or the contents of the file after a leading `@`.
pub fn resolve(arg: &str) -> Result<String, CliError> {
    match arg.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path)
            .map(|s| s.trim().to_string())
            .map_err(|e| CliError::Io(format!("{path}: {e}"))),
        None => Ok(arg.to_string()),
    }
}

pub fn rationals(csv: &str) -> Result<Vec<Rational>, CliError> {
    csv.split(',')
        .map(|x| {
            parse_rational(x.trim()).ok_or_else(|| CliError::Usage(format!("not a rational number: {:?}", x.trim())))
        })
        .collect()
}

pub fn raster_box(csv: &str) -> Result<RasterBox, CliError> {
    let v = rationals(csv)?;
    let [a, b, c, d]: [Rational; 4] =
        v.try_into().map_err(|_| CliError::Usage("--box needs four numbers x_min,x_max,y_min,y_max".into()))?;
    Ok(RasterBox::new(a, b, c, d)?)
}

fn scalar(v: &Value) -> Result<CRational, CliError> {
    match v {
        Value::Number(n) => crate::parse::parse_scalar(&n.to_string()).map_err(CliError::from),
        Value::String(s) => crate::parse::parse_scalar(s).map_err(CliError::from),
        _ => Err(CliError::Usage(format!("expected a number or string, got {v}"))),
    }
}

fn real(v: &Value) -> Result<Rational, CliError> {
    let c = scalar(v)?;
    if !c.is_real() {
        return Err(CliError::Usage(format!("expected a real number, got {c}")));
    }
    Ok(c.re)
}

fn json(text: &str) -> Result<Value, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Usage(format!("invalid JSON: {e}")))
}

/// A JSON array of forms, each an array of coefficients: `[[1, 0], [0, "1/2"]]`.
pub fn forms(text: &str) -> Result<LinearFormSet, CliError> {
    let Value::Array(rows) = json(text)? else {
        return Err(CliError::Usage("forms must be a JSON array of arrays".into()));
    };
    let forms: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| match r {
            Value::Array(xs) => xs.iter().map(real).collect(),
            _ => Err(CliError::Usage("each form must be an array of coefficients".into())),
        })
        .collect::<Result<_, _>>()?;
    let n = forms.first().map(Vec::len).ok_or_else(|| CliError::Usage("no forms given".into()))?;
    Ok(LinearFormSet::new(n, forms)?)
}

/// A JSON array of square matrices with entries such as `1`, `"-1/2"` or `"2-i"`.
pub fn pencil(text: &str) -> Result<HermitianPencil, CliError> {
    let Value::Array(mats) = json(text)? else {
        return Err(CliError::Usage("pencil must be a JSON array of matrices".into()));
    };
    let mats = mats
        .iter()
        .map(|m| match m {
            Value::Array(rows) => rows
                .iter()
                .map(|r| match r {
                    Value::Array(xs) => xs.iter().map(scalar).collect(),
                    _ => Err(CliError::Usage("matrix rows must be arrays".into())),
                })
                .collect(),
            _ => Err(CliError::Usage("each matrix must be an array of rows".into())),
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(HermitianPencil::new(mats)?)
}
