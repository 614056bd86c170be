//! `key = value` singularity spec files.
//!
//! ```text
//! # Fermat quintic
//! variables = [z0, z1, z2, z3, z4]
//! degree = 5
//! f = "z0^5 + z1^5 + z2^5 + z3^5 + z4^5"
//! weights = [1/5, 1/5, 1/5, 1/5, 1/5]
//! deformations = ["z0*z1*z2*z3*z4"]
//! points = [[1/10], [-1/7]]
//! ```

use std::collections::BTreeMap;

use lgcy_core::milnor::{classify_deformation, DeformationClass};
use lgcy_core::poly::is_quasi_homogeneous;
use lgcy_core::scalar::{int, parse_rational};
use lgcy_core::{parse_polynomial, Polynomial, Rational, WeightSystem};

use crate::CliError;

#[derive(Clone, Debug)]
pub struct SingularitySpec {
    pub variables: Vec<String>,
    pub degree: u32,
    pub f: Polynomial,
    pub weights: WeightSystem,
    pub deformations: Vec<Polynomial>,
    pub deformation_classes: Vec<DeformationClass>,
    pub points: Vec<Vec<Rational>>,
}

#[derive(Clone, Debug, PartialEq)]
enum Value {
    Atom(String),
    Str(String),
    List(Vec<Value>),
}

struct ValueParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl ValueParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn value(&mut self) -> Result<Value, String> {
        self.skip_ws();
        match self.src.get(self.pos) {
            None => Err("missing value".into()),
            Some(b'[') => {
                self.pos += 1;
                let mut items = Vec::new();
                self.skip_ws();
                if self.src.get(self.pos) == Some(&b']') {
                    self.pos += 1;
                    return Ok(Value::List(items));
                }
                loop {
                    items.push(self.value()?);
                    self.skip_ws();
                    match self.src.get(self.pos) {
                        Some(b',') => self.pos += 1,
                        Some(b']') => {
                            self.pos += 1;
                            return Ok(Value::List(items));
                        }
                        _ => return Err(format!("expected ',' or ']' at column {}", self.pos + 1)),
                    }
                }
            }
            Some(b'"') => {
                self.pos += 1;
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos] != b'"' {
                    self.pos += 1;
                }
                if self.pos == self.src.len() {
                    return Err("unterminated string".into());
                }
                let s = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
                self.pos += 1;
                Ok(Value::Str(s))
            }
            Some(_) => {
                let start = self.pos;
                while self.pos < self.src.len() && !matches!(self.src[self.pos], b',' | b']' | b'[' | b'"') {
                    self.pos += 1;
                }
                let atom = String::from_utf8_lossy(&self.src[start..self.pos]).trim().to_string();
                if atom.is_empty() {
                    return Err(format!("empty value at column {}", start + 1));
                }
                Ok(Value::Atom(atom))
            }
        }
    }
}

fn parse_value(text: &str) -> Result<Value, String> {
    let mut p = ValueParser {
        src: text.as_bytes(),
        pos: 0,
    };
    let v = p.value()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(format!("trailing characters at column {}", p.pos + 1));
    }
    Ok(v)
}

const KEYS: [&str; 6] = ["variables", "degree", "f", "weights", "deformations", "points"];

fn raw_entries(text: &str) -> Result<BTreeMap<String, (usize, Value)>, CliError> {
    let mut out = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, rest) = line
            .split_once('=')
            .ok_or_else(|| CliError::spec(lineno, "expected 'key = value'"))?;
        let key = key.trim();
        if !KEYS.contains(&key) {
            return Err(CliError::spec(lineno, format!("unknown key '{key}'")));
        }
        let value = parse_value(rest).map_err(|e| CliError::spec(lineno, e))?;
        if out.insert(key.to_string(), (lineno, value)).is_some() {
            return Err(CliError::spec(lineno, format!("duplicate key '{key}'")));
        }
    }
    Ok(out)
}

fn atom_list(line: usize, v: &Value, what: &str) -> Result<Vec<String>, CliError> {
    match v {
        Value::List(items) => items
            .iter()
            .map(|x| match x {
                Value::Atom(a) => Ok(a.clone()),
                _ => Err(CliError::spec(line, format!("{what} must be a list of bare values"))),
            })
            .collect(),
        _ => Err(CliError::spec(line, format!("{what} must be a list"))),
    }
}

fn rational_list(line: usize, v: &Value, what: &str) -> Result<Vec<Rational>, CliError> {
    atom_list(line, v, what)?
        .iter()
        .map(|a| parse_rational(a).ok_or_else(|| CliError::spec(line, format!("'{a}' is not a rational number"))))
        .collect()
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

pub fn parse_spec(text: &str) -> Result<SingularitySpec, CliError> {
    let entries = raw_entries(text)?;
    let get = |key: &str| {
        entries
            .get(key)
            .ok_or_else(|| CliError::Validation(format!("missing key '{key}'")))
    };

    let (line, v) = get("variables")?;
    let variables = atom_list(*line, v, "variables")?;
    if variables.is_empty() {
        return Err(CliError::spec(*line, "at least one variable is required"));
    }
    for (i, name) in variables.iter().enumerate() {
        if !is_identifier(name) {
            return Err(CliError::spec(*line, format!("'{name}' is not a valid variable name")));
        }
        if variables[..i].contains(name) {
            return Err(CliError::spec(*line, format!("variable '{name}' is repeated")));
        }
    }

    let (line, v) = get("degree")?;
    let degree: u32 = match v {
        Value::Atom(a) => a.parse().ok().filter(|&d| d >= 2),
        _ => None,
    }
    .ok_or_else(|| CliError::spec(*line, "degree must be an integer >= 2"))?;

    let (line, v) = get("f")?;
    let f = match v {
        Value::Str(s) => parse_polynomial(s, &variables).map_err(|e| CliError::spec(*line, e.to_string()))?,
        _ => return Err(CliError::spec(*line, "f must be a quoted polynomial")),
    };

    let weights = match entries.get("weights") {
        None => WeightSystem::homogeneous(variables.len(), degree),
        Some((line, v)) => {
            let w = rational_list(*line, v, "weights")?;
            if w.len() != variables.len() {
                return Err(CliError::spec(*line, "one weight per variable is required"));
            }
            WeightSystem::new(w, degree).map_err(|e| CliError::spec(*line, e.to_string()))?
        }
    };
    if !is_quasi_homogeneous(&f, &weights) {
        return Err(CliError::Validation(
            "f is not quasi-homogeneous of weighted degree 1 for the given weights".into(),
        ));
    }

    let mut deformations = Vec::new();
    let mut deformation_classes = Vec::new();
    if let Some((line, v)) = entries.get("deformations") {
        let Value::List(items) = v else {
            return Err(CliError::spec(*line, "deformations must be a list of quoted polynomials"));
        };
        for item in items {
            let Value::Str(s) = item else {
                return Err(CliError::spec(*line, "deformations must be a list of quoted polynomials"));
            };
            let phi = parse_polynomial(s, &variables).map_err(|e| CliError::spec(*line, e.to_string()))?;
            let class = classify_deformation(&phi, &weights)
                .map_err(|_| CliError::spec(*line, format!("deformation '{s}' is not weighted-homogeneous")))?;
            deformations.push(phi);
            deformation_classes.push(class);
        }
    }

    let mut points = Vec::new();
    if let Some((line, v)) = entries.get("points") {
        let Value::List(items) = v else {
            return Err(CliError::spec(*line, "points must be a list of rational vectors"));
        };
        for item in items {
            let p = rational_list(*line, item, "points")?;
            if p.len() != deformations.len() {
                return Err(CliError::spec(*line, "each point needs one coordinate per deformation"));
            }
            points.push(p);
        }
    }

    Ok(SingularitySpec {
        variables,
        degree,
        f,
        weights,
        deformations,
        deformation_classes,
        points,
    })
}

impl SingularitySpec {
    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn origin(&self) -> Vec<Rational> {
        vec![int(0); self.deformations.len()]
    }

    pub fn render(&self, p: &Polynomial) -> String {
        p.to_string_with(&self.variables)
    }
}
