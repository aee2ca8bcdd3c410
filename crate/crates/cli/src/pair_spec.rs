//! The `key: value` pair-specification format:
//!
//! ```text
//! # S3 with the transposition subgroup
//! degree: 3
//! group: (1 2), (1 2 3)
//! subgroup: (1 2)
//! ```
//!
//! Generators are 1-based cycle strings separated by commas outside
//! parentheses. An empty or missing `subgroup` means the trivial subgroup.

use std::sync::Arc;

use hecke_core::{Error as CoreError, GroupConfig, HeckePair, Permutation};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairSpecError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("line {line}, column {column}: {message}")]
    Semantic { line: usize, column: usize, message: String },
    #[error("{0}")]
    Group(CoreError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairSpec {
    pub degree: usize,
    pub group_generators: Vec<Permutation>,
    pub subgroup_generators: Vec<Permutation>,
    subgroup_line: usize,
}

#[derive(Debug)]
struct Field<'a> {
    line: usize,
    /// 1-based column where `value` starts.
    column: usize,
    value: &'a str,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> PairSpecError {
    PairSpecError::Syntax { line, column, message: message.into() }
}

/// Splits at commas that are not inside parentheses; yields (offset, item).
fn split_generators(value: &str) -> Vec<(usize, &str)> {
    let mut items = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in value.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                items.push((start, &value[start..i]));
                start = i + 1;
            }
            _ => {}
        }
    }
    items.push((start, &value[start..]));
    items
}

fn parse_generators(degree: usize, field: &Field<'_>) -> Result<Vec<Permutation>, PairSpecError> {
    if field.value.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for (offset, item) in split_generators(field.value) {
        let lead = item.len() - item.trim_start().len();
        let column = field.column + offset + lead;
        let text = item.trim();
        if text.is_empty() {
            return Err(syntax(field.line, column, "empty generator"));
        }
        match Permutation::parse_cycles(degree, text) {
            Ok(p) => out.push(p),
            Err(CoreError::PointOutOfRange { column: c, point, degree }) => {
                return Err(PairSpecError::Semantic {
                    line: field.line,
                    column: column + c - 1,
                    message: format!("point {point} outside 1..={degree}"),
                })
            }
            Err(CoreError::CycleSyntax { column: c, message }) => {
                return Err(syntax(field.line, column + c - 1, message))
            }
            Err(other) => return Err(syntax(field.line, column, other.to_string())),
        }
    }
    Ok(out)
}

pub fn parse_pair_spec(text: &str) -> Result<PairSpec, PairSpecError> {
    let mut degree: Option<Field<'_>> = None;
    let mut group: Option<Field<'_>> = None;
    let mut subgroup: Option<Field<'_>> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let indent = raw.len() - trimmed.len();
        let Some(colon) = raw.find(':') else {
            return Err(syntax(line, indent + 1, "expected `key: value`"));
        };
        let key = raw[..colon].trim();
        let field = Field { line, column: colon + 2, value: &raw[colon + 1..] };
        let slot = match key {
            "degree" => &mut degree,
            "group" => &mut group,
            "subgroup" => &mut subgroup,
            _ => return Err(syntax(line, indent + 1, format!("unknown key {key:?}"))),
        };
        if slot.is_some() {
            return Err(syntax(line, indent + 1, format!("duplicate key {key:?}")));
        }
        *slot = Some(field);
    }

    let degree_field = degree.ok_or_else(|| syntax(1, 1, "missing key \"degree\""))?;
    let lead = degree_field.value.len() - degree_field.value.trim_start().len();
    let degree: usize = degree_field
        .value
        .trim()
        .parse()
        .ok()
        .filter(|&d| d >= 1)
        .ok_or_else(|| syntax(degree_field.line, degree_field.column + lead, "degree must be a positive integer"))?;
    let group_field = group.ok_or_else(|| syntax(1, 1, "missing key \"group\""))?;
    let group_generators = parse_generators(degree, &group_field)?;
    let (subgroup_generators, subgroup_line) = match &subgroup {
        Some(field) => (parse_generators(degree, field)?, field.line),
        None => (Vec::new(), 0),
    };
    Ok(PairSpec { degree, group_generators, subgroup_generators, subgroup_line })
}

impl PairSpec {
    pub fn build(&self, config: GroupConfig) -> Result<Arc<HeckePair>, PairSpecError> {
        let pair = HeckePair::from_generators(
            self.degree,
            &self.group_generators,
            &self.subgroup_generators,
            config,
        )
        .map_err(|e| match e {
            CoreError::NotAMember(p) => PairSpecError::Semantic {
                line: self.subgroup_line,
                column: 1,
                message: format!("subgroup generator {p} is not in the group"),
            },
            other => PairSpecError::Group(other),
        })?;
        Ok(pair.with_label(self.label()))
    }

    pub fn label(&self) -> String {
        let list = |gens: &[Permutation]| -> String {
            gens.iter().map(Permutation::to_cycle_string).collect::<Vec<_>>().join(", ")
        };
        format!("<{}> / <{}>", list(&self.group_generators), list(&self.subgroup_generators))
    }
}
