//! The `zlab` command line: one JSON document (or one CSV series) per invocation.

pub mod args;
mod commands;
pub mod input;

use std::ffi::OsString;
use std::path::Path;

use clap::Parser;
use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

pub use args::Cli;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorKind {
    Usage,
    Io,
    Input,
    Budget,
    Compute,
    CheckFailed,
}

#[derive(Debug, Error)]
#[error("{message}")]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
    /// Partial result, for instance the report of a failed check.
    pub payload: Option<Value>,
}

impl CliError {
    pub fn new(kind: ErrorKind, message: impl ToString) -> CliError {
        CliError { kind, message: message.to_string(), payload: None }
    }

    pub fn input(message: impl ToString) -> CliError {
        CliError::new(ErrorKind::Input, message)
    }

    pub fn compute(message: impl ToString) -> CliError {
        CliError::new(ErrorKind::Compute, message)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Payload {
    Json(Value),
    Csv(String),
    /// Help or version text.
    Text(String),
    None,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ErrorInfo {
    pub kind: ErrorKind,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Payload,
    pub diagnostics: Vec<String>,
    pub error: Option<ErrorInfo>,
}

impl CommandResult {
    pub fn ok(payload: Payload, diagnostics: Vec<String>) -> CommandResult {
        CommandResult { status: Status::Ok, payload, diagnostics, error: None }
    }

    pub fn failed(e: CliError, diagnostics: Vec<String>) -> CommandResult {
        let payload = e.payload.map(Payload::Json).unwrap_or(Payload::None);
        CommandResult { status: Status::Error, payload, diagnostics, error: Some(ErrorInfo { kind: e.kind, message: e.message }) }
    }

    pub fn is_ok(&self) -> bool {
        self.status == Status::Ok
    }

    /// The JSON payload, if any.
    pub fn json(&self) -> Option<&Value> {
        match &self.payload {
            Payload::Json(v) => Some(v),
            _ => None,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match &self.error {
            None => 0,
            Some(e) => match e.kind {
                ErrorKind::Usage => 2,
                ErrorKind::CheckFailed => 3,
                ErrorKind::Budget => 4,
                _ => 1,
            },
        }
    }

    /// Standard-output text: the payload on success, the structured error otherwise.
    pub fn render(&self) -> String {
        match self.status {
            Status::Ok => match &self.payload {
                Payload::Json(v) => pretty(v),
                Payload::Csv(s) | Payload::Text(s) => s.clone(),
                Payload::None => String::new(),
            },
            Status::Error => {
                let payload = match &self.payload {
                    Payload::Json(v) => v.clone(),
                    _ => Value::Null,
                };
                let doc = serde_json::json!({
                    "status": self.status,
                    "error": self.error,
                    "payload": payload,
                    "diagnostics": self.diagnostics,
                });
                pretty(&doc)
            }
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

/// Parses `argv` (program name first) and executes the command.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind as K;
            return match e.kind() {
                K::DisplayHelp | K::DisplayVersion | K::DisplayHelpOnMissingArgumentOrSubcommand => {
                    CommandResult::ok(Payload::Text(e.to_string()), Vec::new())
                }
                _ => CommandResult::failed(CliError::new(ErrorKind::Usage, e.to_string().trim_end()), Vec::new()),
            };
        }
    };
    let mut diagnostics = Vec::new();
    let out = cli.out.clone();
    let result = commands::dispatch(&cli, &mut diagnostics);
    match result {
        Ok(payload) => match out {
            Some(path) => match write_payload(&path, &payload) {
                Ok(()) => CommandResult::ok(Payload::None, diagnostics),
                Err(e) => CommandResult::failed(e, diagnostics),
            },
            None => CommandResult::ok(payload, diagnostics),
        },
        Err(e) => CommandResult::failed(e, diagnostics),
    }
}

fn write_payload(path: &Path, payload: &Payload) -> Result<(), CliError> {
    let text = match payload {
        Payload::Json(v) => pretty(v) + "\n",
        Payload::Csv(s) | Payload::Text(s) => s.clone(),
        Payload::None => String::new(),
    };
    std::fs::write(path, text).map_err(|e| CliError::new(ErrorKind::Io, format!("{}: {e}", path.display())))
}
