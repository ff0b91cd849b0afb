use std::collections::BTreeMap;

use serde::Serialize;

use super::*;
use crate::algebra::parse_rational;

#[derive(Clone, Debug, Serialize)]
pub struct ParamSpec {
    pub name: &'static str,
    pub default: &'static str,
    pub help: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogSpec {
    pub name: &'static str,
    pub description: &'static str,
    pub params: Vec<ParamSpec>,
}

const fn p(name: &'static str, default: &'static str, help: &'static str) -> ParamSpec {
    ParamSpec { name, default, help }
}

pub fn catalog() -> Vec<CatalogSpec> {
    let spec = |name, description, params| CatalogSpec { name, description, params };
    vec![
        spec("coordinate_product", "z1 z2 ... zn", vec![p("n", "2", "number of variables")]),
        spec("lorentz", "z1^2 - z2^2 - ... - zn^2", vec![p("n", "3", "number of variables")]),
        spec(
            "diag_det",
            "determinant of a diagonal pencil",
            vec![p("rows", "1,1;1,-1", "diagonal rows separated by ';', entries by ','")],
        ),
        spec("pauli", "determinant of the pencil I, sigma_z, sigma_x", vec![]),
        spec("quartic_g", "(-z1^2 + z2^2 - 1)(z1^2 - z2^2 - 1)", vec![]),
        spec(
            "p_k2",
            "disk factor times rotated copies of quartic_g, at least K strictly convex components",
            vec![p("K", "4", "number of strictly convex components wanted"), p("r", "5", "disk radius")],
        ),
        spec(
            "p_kn",
            "ball factor times rotated hyperboloids in n variables",
            vec![
                p("K", "2", "number of strictly convex components wanted"),
                p("n", "3", "variables"),
                p("r", "4", "stretch"),
            ],
        ),
        spec(
            "random_linear",
            "product of d integer linear forms in general position",
            vec![p("n", "3", "variables"), p("d", "3", "number of forms"), p("seed", "0", "random seed")],
        ),
        spec("sphere", "z1^2 + ... + zn^2 + c", vec![p("n", "2", "variables"), p("c", "1", "constant term")]),
        spec("hyperbola", "z1^2 - z2^2 - 1", vec![]),
        spec("cubic_six", "z1^3 - 2 z1^2 z2 + z1 z2^2 + z1 + z2 + 1", vec![]),
    ]
}

fn get<'a>(spec: &'a CatalogSpec, args: &'a BTreeMap<String, String>, key: &str) -> &'a str {
    args.get(key)
        .map(String::as_str)
        .or_else(|| spec.params.iter().find(|q| q.name == key).map(|q| q.default))
        .expect("parameter declared in the catalog")
}

fn int_arg<T: std::str::FromStr>(spec: &CatalogSpec, args: &BTreeMap<String, String>, key: &str) -> Result<T> {
    let v = get(spec, args, key);
    v.trim().parse().map_err(|_| Error::InvalidArgument(format!("parameter {key}: expected an integer, got {v:?}")))
}

fn rat_arg(spec: &CatalogSpec, args: &BTreeMap<String, String>, key: &str) -> Result<Rational> {
    let v = get(spec, args, key);
    parse_rational(v.trim())
        .ok_or_else(|| Error::InvalidArgument(format!("parameter {key}: expected a rational, got {v:?}")))
}

fn rows_arg(text: &str) -> Result<Vec<Vec<Rational>>> {
    text.split(';')
        .map(|row| {
            row.split(',')
                .map(|x| {
                    parse_rational(x.trim())
                        .ok_or_else(|| Error::InvalidArgument(format!("bad rational {x:?} in rows")))
                })
                .collect()
        })
        .collect()
}

/// Instantiate a catalog entry by name; missing parameters take their defaults.
pub fn build(name: &str, args: &BTreeMap<String, String>) -> Result<CatalogEntry> {
    let all = catalog();
    let spec = all
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown catalog entry {name:?}")))?;
    if let Some(k) = args.keys().find(|k| !spec.params.iter().any(|q| q.name == k.as_str())) {
        return Err(Error::InvalidArgument(format!("{name} has no parameter {k:?}")));
    }
    match name {
        "coordinate_product" => coordinate_product(int_arg(spec, args, "n")?),
        "lorentz" => lorentz(int_arg(spec, args, "n")?),
        "diag_det" => diag_det(&rows_arg(get(spec, args, "rows"))?),
        "pauli" => pauli_pencil(),
        "quartic_g" => Ok(quartic_g()),
        "p_k2" => p_k2(int_arg(spec, args, "K")?, &rat_arg(spec, args, "r")?),
        "p_kn" => p_kn(int_arg(spec, args, "K")?, int_arg(spec, args, "n")?, &rat_arg(spec, args, "r")?),
        "random_linear" => {
            random_linear_entry(int_arg(spec, args, "n")?, int_arg(spec, args, "d")?, int_arg(spec, args, "seed")?)
        }
        "sphere" => sphere(int_arg(spec, args, "n")?, &rat_arg(spec, args, "c")?),
        "hyperbola" => Ok(hyperbola()),
        "cubic_six" => Ok(cubic_six()),
        _ => unreachable!("catalog and builder disagree"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_builds_with_defaults() {
        for s in catalog() {
            let e = build(s.name, &BTreeMap::new()).unwrap();
            assert!(!e.poly.is_zero(), "{}", s.name);
        }
    }

    #[test]
    fn parameters_override_defaults() {
        let args = BTreeMap::from([("n".to_string(), "4".to_string())]);
        assert_eq!(build("lorentz", &args).unwrap().poly.nvars(), 4);
        assert!(build("lorentz", &BTreeMap::from([("m".to_string(), "1".to_string())])).is_err());
        assert!(build("nope", &BTreeMap::new()).is_err());
    }
}
