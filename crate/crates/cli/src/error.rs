use std::path::PathBuf;

use letterbraid_core::Error;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read `{path}`: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {message}")]
    File { path: PathBuf, message: String },
    #[error("--{flag}: {source}")]
    Input { flag: &'static str, text: String, source: Error },
    #[error("`{0}` is not an invariant of the presentation (run `lb check` for a witness)")]
    NotInvariant(String),
    #[error(transparent)]
    Domain(#[from] Error),
}

impl CliError {
    /// 2 for anything wrong with the input, 1 for mathematical failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::NotInvariant(_) => 1,
            CliError::Domain(e) if !e.is_parse_error() => 1,
            _ => 2,
        }
    }

    /// The message, with a caret under the offending character when the input has one.
    pub fn diagnostic(&self) -> String {
        let mut out = format!("error: {self}");
        if let CliError::Input { text, source, .. } = self {
            if let Some(pos) = source.position() {
                let column = text.get(..pos.min(text.len())).map_or(pos, |s| s.chars().count());
                out.push_str(&format!("\n  {text}\n  {}^", " ".repeat(column)));
            }
        }
        out
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
