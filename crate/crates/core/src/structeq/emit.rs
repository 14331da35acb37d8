//! LaTeX and JSON rendering of equations and constraint tables.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

use super::constraints::ConstraintTable;
use super::equations::StructureEquation;
use super::forms::Form;
use super::symbols::generator_latex;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmitFormat {
    Latex,
    Json,
}

impl FromStr for EmitFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "latex" => Ok(EmitFormat::Latex),
            "json" => Ok(EmitFormat::Json),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

impl fmt::Display for EmitFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EmitFormat::Latex => "latex",
            EmitFormat::Json => "json",
        })
    }
}

fn signed_tail(f: &Form) -> String {
    if f.is_zero() {
        return String::new();
    }
    let s = f.to_latex();
    match s.strip_prefix('-') {
        Some(rest) => format!(" - {rest}"),
        None => format!(" + {s}"),
    }
}

pub fn equation_latex(e: &StructureEquation) -> String {
    let rhs = e.rhs_form();
    let rhs = if rhs.is_zero() { "0".to_string() } else { rhs.to_latex() };
    format!("d{}{} = {}", generator_latex(e.generator), signed_tail(&e.mc), rhs)
}

pub fn emit_equations(eqs: &[StructureEquation], format: EmitFormat) -> Result<String> {
    match format {
        EmitFormat::Latex => {
            let mut out = String::from("\\begin{align*}\n");
            let lines: Vec<String> = eqs.iter().map(|e| format!("  & {}", equation_latex(e))).collect();
            out.push_str(&lines.join(",\\\\\n"));
            out.push_str(".\n\\end{align*}\n");
            Ok(out)
        }
        EmitFormat::Json => Ok(serde_json::to_string_pretty(eqs)? + "\n"),
    }
}

pub fn parse_equations_json(text: &str) -> Result<Vec<StructureEquation>> {
    Ok(serde_json::from_str(text)?)
}

#[derive(Serialize)]
struct ConstraintEntryView {
    symbol: String,
    sources: Vec<String>,
    implied_by_conjugation: bool,
}

#[derive(Serialize)]
struct RelationView {
    name: String,
    lhs: String,
    rhs: Vec<(String, String)>,
}

#[derive(Serialize)]
struct ConstraintTableView {
    vanishing: Vec<ConstraintEntryView>,
    relations: Vec<RelationView>,
}

pub fn emit_constraints(table: &ConstraintTable, format: EmitFormat) -> Result<String> {
    match format {
        EmitFormat::Json => {
            let view = ConstraintTableView {
                vanishing: table
                    .vanishing()
                    .map(|e| ConstraintEntryView {
                        symbol: e.symbol.to_string(),
                        sources: e.sources.clone(),
                        implied_by_conjugation: e.implied_by_conjugation,
                    })
                    .collect(),
                relations: table
                    .relations()
                    .iter()
                    .map(|r| RelationView {
                        name: r.name.clone(),
                        lhs: r.lhs.to_string(),
                        rhs: r.rhs.iter().map(|(c, s)| (c.to_string(), s.to_string())).collect(),
                    })
                    .collect(),
            };
            Ok(serde_json::to_string_pretty(&view)? + "\n")
        }
        EmitFormat::Latex => {
            let mut out = String::from("\\begin{align*}\n");
            let mut lines: Vec<String> = table
                .vanishing()
                .map(|e| {
                    let tag = if e.implied_by_conjugation { " \\text{ (conj.)}" } else { "" };
                    format!("  & {} = 0{}", e.symbol.to_latex(), tag)
                })
                .collect();
            for r in table.relations() {
                let terms: Vec<String> = r
                    .rhs
                    .iter()
                    .map(|(c, s)| format!("\\left({}\\right) {}", c.to_latex(), s.to_latex()))
                    .collect();
                lines.push(format!("  & {} = {}", r.lhs.to_latex(), terms.join(" + ")));
            }
            out.push_str(&lines.join(",\\\\\n"));
            out.push_str(".\n\\end{align*}\n");
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::Fixtures;
    use crate::structeq::generate_structure_equations;

    fn eqs() -> Vec<StructureEquation> {
        let fx = Fixtures::embedded().unwrap();
        generate_structure_equations(&ConstraintTable::from_fixture(&fx.constraints).unwrap()).unwrap()
    }

    #[test]
    fn first_equation_latex() {
        let s = equation_latex(&eqs()[0]);
        assert!(s.contains("\\vartheta^{-2}"), "{s}");
        assert!(s.contains("\\frac{i}{2}"), "{s}");
    }

    #[test]
    fn json_round_trip() {
        let e = eqs();
        let text = emit_equations(&e, EmitFormat::Json).unwrap();
        assert_eq!(parse_equations_json(&text).unwrap(), e);
    }

    #[test]
    fn unknown_format() {
        assert!(matches!("pdf".parse::<EmitFormat>(), Err(Error::UnsupportedFormat(_))));
    }
}
