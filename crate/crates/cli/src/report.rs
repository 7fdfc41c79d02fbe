use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::context::Context;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputMode {
    Text,
    Json,
    Csv,
}

/// What a command produced, in each output form.
pub struct Output {
    pub result: Value,
    pub text: String,
    /// Only commands with dimension sequences have a CSV form.
    pub csv: Option<String>,
}

#[derive(Serialize)]
struct Report<'a> {
    command: &'a str,
    inputs_digest: String,
    seed: u64,
    timing_ms: u128,
    result: &'a Value,
}

/// SHA-256 over the command line and the bytes of every file read.
pub fn inputs_digest(ctx: &Context) -> String {
    let mut h = Sha256::new();
    h.update(ctx.command.as_bytes());
    for (name, bytes) in ctx.inputs() {
        h.update([0u8]);
        h.update(name.as_bytes());
        h.update([0u8]);
        h.update(bytes);
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

pub fn render(ctx: &Context, out: &Output, mode: OutputMode) -> String {
    match (mode, &out.csv) {
        (OutputMode::Json, _) => {
            let report = Report {
                command: &ctx.command,
                inputs_digest: inputs_digest(ctx),
                seed: ctx.seed,
                timing_ms: ctx.started.elapsed().as_millis(),
                result: &out.result,
            };
            let mut s = serde_json::to_string_pretty(&report).expect("serializable");
            s.push('\n');
            s
        }
        (OutputMode::Csv, Some(csv)) => csv.clone(),
        _ => format!("{}seed: {}\n", out.text, ctx.seed),
    }
}
