//! Reading presentations, words, tensors and group tables from flags and files.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use letterbraid_core::{
    Alphabet, Endo, Error, FiniteGroupTable, FreeGroupRingElement, GroupHom, Presentation, RingSpec, TensorElement,
    Word,
};
use serde::Deserialize;

use crate::error::{CliError, Result};

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn flagged<T>(flag: &'static str, text: &str, parse: impl FnOnce(&str) -> std::result::Result<T, Error>) -> Result<T> {
    parse(text).map_err(|source| CliError::Input { flag, text: text.to_string(), source })
}

/// The group from `--gens` (free) or `--presentation` (a file).
pub fn group(gens: Option<&str>, presentation: Option<&Path>) -> Result<Presentation> {
    match (gens, presentation) {
        (Some(g), None) => Ok(Presentation::free(&flagged("gens", g, Alphabet::parse)?)),
        (None, Some(path)) => {
            let text = read(path)?;
            Presentation::parse(&text).map_err(|e| CliError::File { path: path.to_path_buf(), message: e.to_string() })
        }
        _ => Err(CliError::Usage("exactly one of --gens and --presentation is required".into())),
    }
}

pub fn word(text: &str, alphabet: &Alphabet) -> Result<Word> {
    flagged("word", text, |t| Word::parse(t, alphabet))
}

/// A single word, or failing that a formal combination such as `2 x y - x`.
pub fn combination(text: &str, alphabet: &Alphabet, ring: RingSpec) -> Result<FreeGroupRingElement> {
    match Word::parse(text, alphabet) {
        Ok(w) => Ok(FreeGroupRingElement::from_word(&w, ring)),
        Err(word_err) => FreeGroupRingElement::parse(text, alphabet, ring).map_err(|_| CliError::Input {
            flag: "word",
            text: text.to_string(),
            source: word_err,
        }),
    }
}

pub fn tensor(text: &str, alphabet: &Alphabet, ring: RingSpec) -> Result<TensorElement> {
    flagged("tensor", text, |t| TensorElement::parse(t, alphabet, ring))
}

pub fn endo(text: &str, p: &Presentation) -> Result<Endo> {
    flagged("endo", text, |t| Endo::parse(p, t))
}

/// A homomorphism into `target`; its source generators are the names on the left.
pub fn hom(text: &str, target: &Alphabet) -> Result<GroupHom> {
    flagged("endo", text, |t| GroupHom::parse(t, target))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TableFile {
    size: usize,
    mul: Vec<Vec<usize>>,
    gens: BTreeMap<String, usize>,
}

/// `{"size": n, "mul": [[...]], "gens": {"x": i, ...}}`.
pub fn table(path: &Path) -> Result<FiniteGroupTable> {
    let text = read(path)?;
    let file_error = |message: String| CliError::File { path: path.to_path_buf(), message };
    let parsed: TableFile = serde_json::from_str(&text).map_err(|e| file_error(e.to_string()))?;
    if parsed.mul.len() != parsed.size {
        return Err(file_error(format!("`size` is {} but `mul` has {} rows", parsed.size, parsed.mul.len())));
    }
    FiniteGroupTable::new(parsed.mul, parsed.gens.into_iter().collect()).map_err(|e| file_error(e.to_string()))
}
