//! JSON-driven command runner for the `braided` library.
//!
//! A [`RunConfig`] names a command together with the field, group, module and
//! structure it applies to. [`run_command`] resolves those, dispatches through
//! [`COMMANDS`] and returns a deterministic [`Report`].

pub mod commands;
pub mod config;

use std::sync::Arc;
use std::time::Instant;

use braided::gmodule::GModule;
use braided::group::FinGroup;
use braided::{BraidedError, Field};
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

pub use commands::COMMANDS;
pub use config::RunConfig;
use config::{resolve_structure, Structure};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("input error: {0}")]
    Input(String),
    #[error("cap exceeded: {0}")]
    Cap(String),
    #[error("check failed: {0}")]
    Check(String),
    #[error(transparent)]
    Braided(#[from] BraidedError),
}

impl CliError {
    /// 1 for a failed check, 2 for bad input or an exceeded cap.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Check(_) => 1,
            CliError::Braided(BraidedError::Check(_) | BraidedError::Unstable(_)) => 1,
            _ => 2,
        }
    }
}

/// Limits and switches that come from the command line rather than the config.
#[derive(Clone, Debug)]
pub struct Options {
    pub max_group_order: usize,
    pub max_matrix_dim: usize,
    pub timing: bool,
}

impl Default for Options {
    fn default() -> Options {
        Options { max_group_order: 100_000, max_matrix_dim: 3000, timing: false }
    }
}

/// A Hilbert-series style table for CSV output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn to_csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| CliError::Input(format!("csv: {e}"));
        w.write_record(&self.header).map_err(io)?;
        for r in &self.rows {
            w.write_record(r).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Input(format!("csv: {e}")))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

pub struct Outcome {
    pub pass: bool,
    pub result: Value,
    pub table: Option<Table>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GroupSummary {
    pub order: usize,
    pub generators: Vec<String>,
    pub classes: Vec<ClassSummary>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassSummary {
    pub representative: String,
    pub size: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub config: RunConfig,
    pub pass: bool,
    pub exit_code: u8,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
    #[serde(skip)]
    pub table: Option<Table>,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Command-independent state: the field and lazily resolved group data.
pub struct Context<'a> {
    pub config: &'a RunConfig,
    pub options: &'a Options,
    pub field: Field,
    group: Option<Arc<FinGroup>>,
}

impl<'a> Context<'a> {
    pub fn new(config: &'a RunConfig, options: &'a Options) -> Result<Context<'a>, CliError> {
        let field = config.field()?;
        let group = match config.group {
            Some(_) => Some(config.group(options.max_group_order)?),
            None => None,
        };
        Ok(Context { config, options, field, group })
    }

    pub fn n(&self) -> usize {
        self.config.truncation
    }

    pub fn group(&self) -> Result<&Arc<FinGroup>, CliError> {
        self.group.as_ref().ok_or_else(|| CliError::Input(format!("{} needs a group", self.config.command)))
    }

    pub fn module(&self) -> Result<GModule, CliError> {
        self.config.module(self.group()?, self.field)
    }

    pub fn structure(&self, module: &GModule) -> Result<Structure, CliError> {
        let spec = self
            .config
            .structure
            .as_ref()
            .ok_or_else(|| CliError::Input(format!("{} needs a structure", self.config.command)))?;
        resolve_structure(spec, module)
    }

    /// Rejects a computation whose widest matrix has `base^n * factor` columns above the cap.
    pub fn check_size(&self, base: usize, n: usize, factor: usize) -> Result<(), CliError> {
        let mut cols = factor.max(1);
        for _ in 0..n {
            cols = cols.saturating_mul(base.max(1));
        }
        if cols > self.options.max_matrix_dim {
            return Err(CliError::Cap(format!(
                "about {cols} columns at degree {n} exceeds --max-matrix-dim {}",
                self.options.max_matrix_dim
            )));
        }
        Ok(())
    }

    fn summary(&self) -> Option<GroupSummary> {
        let g = self.group.as_ref()?;
        Some(GroupSummary {
            order: g.order(),
            generators: g.generators().iter().map(|&x| g.label(x).to_string()).collect(),
            classes: g
                .conjugacy_classes()
                .iter()
                .map(|c| ClassSummary { representative: g.label(c.representative).to_string(), size: c.members.len() })
                .collect(),
        })
    }
}

pub fn find_command(name: &str) -> Option<&'static commands::Command> {
    COMMANDS.iter().find(|c| c.name == name)
}

/// Runs one configuration. Errors become part of the report; the exit code is
/// 0 on pass, 1 on a failed check and 2 on bad input or an exceeded cap.
pub fn run_command(config: &RunConfig, options: &Options) -> Report {
    let start = Instant::now();
    let mut report = Report {
        command: config.command.clone(),
        config: config.clone(),
        pass: false,
        exit_code: 2,
        group: None,
        result: None,
        error: None,
        wall_time_ms: None,
        table: None,
    };
    let outcome = find_command(&config.command)
        .ok_or_else(|| CliError::Input(format!("unknown command {:?}", config.command)))
        .and_then(|cmd| {
            let ctx = Context::new(config, options)?;
            report.group = ctx.summary();
            (cmd.run)(&ctx)
        });
    match outcome {
        Ok(o) => {
            report.pass = o.pass;
            report.exit_code = if o.pass { 0 } else { 1 };
            report.result = Some(o.result);
            report.table = o.table;
        }
        Err(e) => {
            report.exit_code = e.exit_code();
            report.error = Some(e.to_string());
        }
    }
    if options.timing {
        report.wall_time_ms = Some(start.elapsed().as_millis());
    }
    report
}
