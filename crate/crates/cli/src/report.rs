use std::process::ExitCode;

use serde::Serialize;
use serde_json::Value;
use twinline::kernel::{verify_certificate, Certificate, Space};
use twinline::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// How a finished command ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Outcome {
    Positive,
    Negative,
}

impl Outcome {
    pub fn from_bool(yes: bool) -> Self {
        if yes {
            Outcome::Positive
        } else {
            Outcome::Negative
        }
    }
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub verdict: String,
    pub certificate: Value,
    pub citations: Vec<String>,
    #[serde(skip)]
    pub outcome: Outcome,
    #[serde(skip)]
    pub checks: Vec<(Space, Certificate)>,
}

impl Report {
    pub fn new(command: impl Into<String>, verdict: impl Into<String>, outcome: Outcome) -> Self {
        Report {
            command: command.into(),
            verdict: verdict.into(),
            certificate: Value::Null,
            citations: Vec::new(),
            outcome,
            checks: Vec::new(),
        }
    }

    /// Attaches a certificate that is re-verified before printing.
    pub fn certified(mut self, space: &Space, cert: Certificate) -> Self {
        self.certificate = serde_json::to_value(&cert).expect("certificates serialize");
        self.checks.push((space.clone(), cert));
        self
    }

    /// Attaches a structured report; `checks` lists the certificates inside it.
    pub fn with_body(mut self, body: &impl Serialize, checks: Vec<(Space, Certificate)>) -> Self {
        self.certificate = serde_json::to_value(body).expect("reports serialize");
        self.checks = checks;
        self
    }

    pub fn cite(mut self, names: &[&str]) -> Self {
        self.citations = names.iter().map(|s| s.to_string()).collect();
        self
    }

    pub fn emit(&self, format: Format) -> ExitCode {
        if let Some((space, c)) = self.checks.iter().find(|(s, c)| !verify_certificate(s, c)) {
            eprintln!("internal error: certificate failed re-verification on {space}: {c:?}");
            return ExitCode::from(4);
        }
        match format {
            Format::Json => println!("{}", serde_json::to_string_pretty(self).expect("reports serialize")),
            Format::Text => {
                println!("{}", self.verdict);
                if !self.certificate.is_null() {
                    println!("certificate: {}", self.certificate);
                }
                if !self.citations.is_empty() {
                    println!("see: {}", self.citations.join("; "));
                }
            }
        }
        match self.outcome {
            Outcome::Positive => ExitCode::SUCCESS,
            Outcome::Negative => ExitCode::from(3),
        }
    }
}

pub fn error_exit(e: &Error, format: Format, command: &str) -> ExitCode {
    let code = match e {
        Error::Parse { .. } | Error::InvalidPoint(_) => 1,
        _ => 2,
    };
    match format {
        Format::Json => {
            let v = serde_json::json!({ "command": command, "error": e.to_string() });
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
        }
        Format::Text => eprintln!("error: {e}"),
    }
    ExitCode::from(code)
}
