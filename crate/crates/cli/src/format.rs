//! Distribution files: JSON and CSV.

use std::fs;
use std::path::Path;

use pid_core::JointDistribution;
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

/// A state or outcome entry; files may spell symbols as strings or integers.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Symbol {
    Integer(i64),
    Text(String),
}

impl Symbol {
    fn text(&self) -> String {
        match self {
            Symbol::Integer(v) => v.to_string(),
            Symbol::Text(s) => s.clone(),
        }
    }

    fn from_text(text: &str) -> Self {
        match text.parse::<i64>() {
            Ok(v) if v.to_string() == text => Symbol::Integer(v),
            _ => Symbol::Text(text.to_string()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Entry {
    pub outcome: Vec<Symbol>,
    pub p: f64,
}

/// On-disk JSON layout. Variable 0 is the default target.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DistributionFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comment: Option<String>,
    pub variables: Vec<String>,
    pub states: Vec<Vec<Symbol>>,
    pub probs: Vec<Entry>,
}

impl DistributionFile {
    pub fn from_distribution(d: &JointDistribution, comment: Option<&str>) -> Self {
        DistributionFile {
            comment: comment.map(str::to_string),
            variables: d.variable_names().to_vec(),
            states: d
                .alphabets()
                .iter()
                .map(|a| a.iter().map(|s| Symbol::from_text(s)).collect())
                .collect(),
            probs: d
                .support()
                .map(|(outcome, p)| Entry {
                    outcome: outcome
                        .iter()
                        .enumerate()
                        .map(|(v, &k)| Symbol::from_text(&d.alphabet(v)[k]))
                        .collect(),
                    p,
                })
                .collect(),
        }
    }

    pub fn to_distribution(&self) -> pid_core::Result<JointDistribution> {
        let alphabets = self
            .states
            .iter()
            .map(|a| a.iter().map(Symbol::text).collect())
            .collect();
        let entries = self
            .probs
            .iter()
            .map(|e| (e.outcome.iter().map(Symbol::text).collect::<Vec<_>>(), e.p));
        JointDistribution::from_symbols(self.variables.clone(), alphabets, entries)
    }
}

pub fn parse_json(path: &Path, text: &str) -> Result<JointDistribution> {
    let file: DistributionFile =
        serde_json::from_str(text).map_err(|e| CliError::format(path, e))?;
    Ok(file.to_distribution()?)
}

/// CSV with a header of variable names and a final `p` column. Alphabets are
/// the symbols seen in each column, in order of first appearance.
pub fn parse_csv(path: &Path, text: &str) -> Result<JointDistribution> {
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let header = reader
        .headers()
        .map_err(|e| CliError::format(path, e))?
        .clone();
    if header.len() < 2 || &header[header.len() - 1] != "p" {
        return Err(CliError::format(
            path,
            "expected variable columns followed by a final \"p\" column",
        ));
    }
    let names: Vec<String> = header
        .iter()
        .take(header.len() - 1)
        .map(str::to_string)
        .collect();
    let mut alphabets: Vec<Vec<String>> = vec![Vec::new(); names.len()];
    let mut entries = Vec::new();
    for (row, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::format(path, e))?;
        let p_text = &record[names.len()];
        let p: f64 = p_text.parse().map_err(|_| {
            CliError::format(path, format!("row {}: bad probability {p_text:?}", row + 1))
        })?;
        let mut outcome = Vec::with_capacity(names.len());
        for (v, symbol) in record.iter().take(names.len()).enumerate() {
            if !alphabets[v].iter().any(|s| s == symbol) {
                alphabets[v].push(symbol.to_string());
            }
            outcome.push(symbol.to_string());
        }
        entries.push((outcome, p));
    }
    Ok(JointDistribution::from_symbols(names, alphabets, entries)?)
}

/// Reads a distribution, choosing CSV for `.csv` files and JSON otherwise.
pub fn load(path: &Path) -> Result<JointDistribution> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let is_csv = path
        .extension()
        .is_some_and(|e| e.eq_ignore_ascii_case("csv"));
    if is_csv {
        parse_csv(path, &text)
    } else {
        parse_json(path, &text)
    }
}

pub fn save(path: &Path, d: &JointDistribution, comment: Option<&str>) -> Result<()> {
    let file = DistributionFile::from_distribution(d, comment);
    let mut text = serde_json::to_string_pretty(&file).expect("distribution serializes");
    text.push('\n');
    fs::write(path, text).map_err(|e| CliError::io(path, e))
}
