use std::io::Write;
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::fail::Failure;

/// Scientific notation, 17 significant digits.
pub fn sci(x: f64) -> String {
    format!("{x:.16e}")
}

/// Flags that change how a run executes but not what it computes.
const EXECUTION_FLAGS: [&str; 2] = ["--threads", "--out"];

/// The command line with execution-only flags removed.
pub fn reproducible_args(args: &[String]) -> Vec<String> {
    let mut out = Vec::new();
    let mut skip = false;
    for arg in args.iter().skip(1) {
        if skip {
            skip = false;
            continue;
        }
        if let Some(flag) = EXECUTION_FLAGS.iter().find(|f| arg.starts_with(*f)) {
            skip = arg.len() == flag.len();
            continue;
        }
        out.push(arg.clone());
    }
    out
}

/// First 16 hex digits of the SHA-256 of the resolved parameter list.
pub fn param_hash(params: &[(&str, String)]) -> String {
    let mut h = Sha256::new();
    for (k, v) in params {
        h.update(k.as_bytes());
        h.update(b"=");
        h.update(v.as_bytes());
        h.update(b"\n");
    }
    h.finalize().iter().take(8).map(|b| format!("{b:02x}")).collect()
}

pub struct Csv {
    text: String,
}

impl Csv {
    pub fn new(args: &[String], params: &[(&str, String)], header: &[&str]) -> Self {
        let command = reproducible_args(args).join(" ");
        let listed: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        let mut text = format!(
            "# unruh-fluid {} | {} | {} | sha256:{}\n",
            env!("CARGO_PKG_VERSION"),
            command,
            listed.join(","),
            param_hash(params)
        );
        text.push_str(&header.join(","));
        text.push('\n');
        Self { text }
    }

    pub fn row(&mut self, fields: &[String]) {
        self.text.push_str(&fields.join(","));
        self.text.push('\n');
    }

    pub fn into_string(self) -> String {
        self.text
    }
}

/// Writes to `out`, or stdout when absent.
pub fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Failure::usage(format!("cannot write stdout: {e}")))
        }
    }
}
