//! The two on-disk square formats and report rendering.
//!
//! Text: one row per line, integers separated by whitespace.
//! Structured: a JSON object with `order` and `cells` (array of rows), plus
//! optional `family` and `assignment` metadata.

use std::fmt;

use clap::ValueEnum;
use magic_core::{FamilyCensus, LinearConstraint, Square, ValueAssignment, VerificationReport};
use serde::{Deserialize, Serialize};
use serde_json::json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssignmentDoc {
    pub latin: Vec<i64>,
    pub greek: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareDocument {
    pub order: usize,
    pub cells: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assignment: Option<AssignmentDoc>,
}

impl SquareDocument {
    pub fn from_square(square: &Square) -> Self {
        SquareDocument { order: square.order().get(), cells: square.to_rows(), family: None, assignment: None }
    }

    pub fn with_family(mut self, family: impl Into<String>) -> Self {
        self.family = Some(family.into());
        self
    }

    pub fn with_assignment(mut self, va: &ValueAssignment) -> Self {
        self.assignment = Some(AssignmentDoc { latin: va.latin().to_vec(), greek: va.greek().to_vec() });
        self
    }

    pub fn to_square(&self) -> Square {
        Square::from_rows(self.cells.clone()).expect("documents are validated on parse")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { line, column, message: message.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Reads a square in either format. The order is the number of rows and
/// every row must have that many cells.
pub fn parse_square(input: &str) -> Result<SquareDocument, ParseError> {
    if input.trim_start().starts_with('{') {
        parse_structured(input)
    } else {
        parse_text(input)
    }
}

fn parse_text(input: &str) -> Result<SquareDocument, ParseError> {
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut last_line = 1;
    for (i, line) in input.lines().enumerate() {
        let lineno = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        last_line = lineno;
        let mut row = Vec::new();
        let mut rest = line;
        let mut offset = 0;
        while let Some(start) = rest.find(|c: char| !c.is_whitespace()) {
            let tail = &rest[start..];
            let len = tail.find(char::is_whitespace).unwrap_or(tail.len());
            let token = &tail[..len];
            let column = line[..offset + start].chars().count() + 1;
            let value = token
                .parse::<i64>()
                .map_err(|_| ParseError::new(lineno, column, format!("`{token}` is not an integer")))?;
            row.push(value);
            offset += start + len;
            rest = &tail[len..];
        }
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(ParseError::new(
                    lineno,
                    1,
                    format!("ragged row at line {lineno}: expected {} cells, found {}", first.len(), row.len()),
                ));
            }
        }
        rows.push(row);
    }
    let Some(width) = rows.first().map(Vec::len) else {
        return Err(ParseError::new(1, 1, "empty input"));
    };
    if rows.len() != width {
        return Err(ParseError::new(
            last_line + 1,
            1,
            format!("found {} rows of {width} cells; a square needs {width} rows", rows.len()),
        ));
    }
    Ok(SquareDocument { order: width, cells: rows, family: None, assignment: None })
}

fn parse_structured(input: &str) -> Result<SquareDocument, ParseError> {
    let doc: SquareDocument =
        serde_json::from_str(input).map_err(|e| ParseError::new(e.line(), e.column(), e.to_string()))?;
    if doc.order == 0 {
        return Err(ParseError::new(1, 1, "order must be at least 1"));
    }
    if doc.cells.len() != doc.order {
        return Err(ParseError::new(1, 1, format!("order {} but {} rows", doc.order, doc.cells.len())));
    }
    if let Some((i, row)) = doc.cells.iter().enumerate().find(|(_, r)| r.len() != doc.order) {
        return Err(ParseError::new(
            1,
            1,
            format!("ragged row {}: expected {} cells, found {}", i + 1, doc.order, row.len()),
        ));
    }
    Ok(doc)
}

/// Anything the CLI prints.
pub trait Render {
    fn render_text(&self) -> String;
    fn render_structured(&self) -> serde_json::Value;
}

pub fn render(item: &impl Render, format: Format) -> String {
    match format {
        Format::Text => item.render_text(),
        Format::Structured => serde_json::to_string_pretty(&item.render_structured()).expect("json values serialize"),
    }
}

impl Render for SquareDocument {
    fn render_text(&self) -> String {
        self.to_square().to_string()
    }

    fn render_structured(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data")
    }
}

/// A square together with its audit.
pub struct VerifiedSquare<'a> {
    pub square: &'a Square,
    pub report: &'a VerificationReport,
}

impl Render for VerifiedSquare<'_> {
    fn render_text(&self) -> String {
        let r = self.report;
        let mut out = String::new();
        out.push_str(&format!("order: {}\n", r.order));
        out.push_str(&format!("expected_sum: {}\n", r.expected_sum));
        out.push_str(&format!("verdict: {}\n", r.verdict));
        out.push_str(&format!("bijection: {}\n", if r.bijection_ok { "ok" } else { "failed" }));
        if r.violations.is_empty() {
            out.push_str("violations: none\n");
        } else {
            let v: Vec<String> = r.violations.iter().map(|l| format!("{l} (sum {})", r.line_sums[l])).collect();
            out.push_str(&format!("violations: {}\n", v.join(", ")));
        }
        for (value, positions) in &r.duplicate_values {
            let p: Vec<String> = positions.iter().map(|(a, b)| format!("({a},{b})")).collect();
            out.push_str(&format!("duplicate: {value} at {}\n", p.join(" ")));
        }
        out.push_str("line sums:\n");
        for (line, sum) in &r.line_sums {
            out.push_str(&format!("  {line}: {sum}\n"));
        }
        out.pop();
        out
    }

    fn render_structured(&self) -> serde_json::Value {
        let r = self.report;
        json!({
            "order": r.order.get(),
            "cells": self.square.to_rows(),
            "expected_sum": r.expected_sum,
            "verdict": r.verdict.as_str(),
            "bijection_ok": r.bijection_ok,
            "violations": r.violations.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
            "line_sums": r.line_sums.iter()
                .map(|(l, s)| json!({ "line": l.to_string(), "sum": s }))
                .collect::<Vec<_>>(),
            "duplicate_values": r.duplicate_values.iter()
                .map(|(v, p)| json!({ "value": v, "positions": p }))
                .collect::<Vec<_>>(),
        })
    }
}

impl Render for FamilyCensus {
    fn render_text(&self) -> String {
        format!(
            "family: {}\nassignments: {}\nsquares: {}\nsquares (dihedral): {}",
            self.family, self.assignments_total, self.squares_distinct, self.squares_distinct_dihedral
        )
    }

    fn render_structured(&self) -> serde_json::Value {
        json!({
            "family": self.family.as_str(),
            "assignments_total": self.assignments_total,
            "squares_distinct": self.squares_distinct,
            "squares_distinct_dihedral": self.squares_distinct_dihedral,
        })
    }
}

/// A family's constraint list.
pub struct ConstraintList<'a> {
    pub family: &'a str,
    pub constraints: &'a [LinearConstraint],
}

impl Render for ConstraintList<'_> {
    fn render_text(&self) -> String {
        if self.constraints.is_empty() {
            return "no constraints".to_string();
        }
        self.constraints.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("\n")
    }

    fn render_structured(&self) -> serde_json::Value {
        json!({
            "family": self.family,
            "constraints": self.constraints.iter().map(|c| json!({
                "equation": c.to_string(),
                "latin": c.latin_part(),
                "greek": c.greek_part(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Several squares, separated by blank lines in text form.
pub struct SquareList<'a> {
    pub label: String,
    pub squares: Vec<&'a Square>,
}

impl Render for SquareList<'_> {
    fn render_text(&self) -> String {
        self.squares.iter().map(|s| s.to_string()).collect::<Vec<_>>().join("\n\n")
    }

    fn render_structured(&self) -> serde_json::Value {
        json!({
            "label": self.label,
            "count": self.squares.len(),
            "squares": self.squares.iter().map(|s| s.to_rows()).collect::<Vec<_>>(),
        })
    }
}
