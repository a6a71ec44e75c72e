//! Line-based phrase files and their JSON mirror.
//!
//! ```text
//! # trefoil
//! @preset alpha_star
//! @letters A:a+ B:b+ C:a+
//! @phrase ABCABC
//! ```
//!
//! Custom data replaces `@preset` with `@alphabet`, `@tau`, `@triples` and
//! `@shift` lines. `@gausscode` carries a signed Gauss code instead of a
//! phrase; components are separated by `/`.

use nanoword::codec::{CodecError, SignedGaussCode};
use nanoword::phrase::split_word_token;
use nanoword::presets::{preset, preset_name};
use nanoword::{HomotopyData, Nanophrase, RawPhrase};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Data(String),
    #[error("no {0} in input")]
    Missing(&'static str),
    #[error("gauss code: {0}")]
    Gauss(CodecError),
}

/// Where the homotopy data of a file comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CustomData {
    pub symbols: Vec<String>,
    #[serde(default)]
    pub tau: Vec<(String, String)>,
    #[serde(default)]
    pub triples: Vec<[String; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shift: Option<Vec<(String, String)>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DataSpec {
    Preset(String),
    Custom(CustomData),
}

impl DataSpec {
    pub fn build(&self) -> Result<HomotopyData, FormatError> {
        fn pairs(v: &[(String, String)]) -> Vec<(&str, &str)> {
            v.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect()
        }
        match self {
            DataSpec::Preset(name) => preset(name).map_err(|e| FormatError::Data(e.to_string())),
            DataSpec::Custom(c) => {
                let names: Vec<&str> = c.symbols.iter().map(String::as_str).collect();
                let triples: Vec<[&str; 3]> =
                    c.triples.iter().map(|[a, b, c]| [a.as_str(), b.as_str(), c.as_str()]).collect();
                let shift = c.shift.as_deref().map(pairs);
                HomotopyData::from_names(&names, &pairs(&c.tau), &triples, shift.as_deref())
                    .map_err(|e| FormatError::Data(e.to_string()))
            }
        }
    }

    /// The preset name when `data` is a preset, the explicit tables otherwise.
    pub fn of(data: &HomotopyData) -> DataSpec {
        if let Some(name) = preset_name(data) {
            return DataSpec::Preset(name.to_string());
        }
        let name = |s| data.name(s).to_string();
        let pairs = |table: &[nanoword::Symbol]| {
            table
                .iter()
                .enumerate()
                .filter(|&(i, s)| i < s.index())
                .map(|(i, &s)| (data.names()[i].clone(), name(s)))
                .collect::<Vec<_>>()
        };
        DataSpec::Custom(CustomData {
            symbols: data.names().to_vec(),
            tau: pairs(data.tau_table()),
            triples: data.triples().iter().map(|t| [name(t[0]), name(t[1]), name(t[2])]).collect(),
            shift: data.shift_table().map(pairs),
        })
    }
}

/// A parsed input file. Phrase files carry `data` and `phrase`; Gauss code
/// files carry `gauss`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Document {
    pub data: Option<DataSpec>,
    pub phrase: Option<RawPhrase>,
    pub gauss: Option<SignedGaussCode>,
}

impl Document {
    /// Data and resolved phrase; an invalid phrase is reported by the caller.
    pub fn data(&self) -> Result<HomotopyData, FormatError> {
        self.data.as_ref().ok_or(FormatError::Missing("@preset or @alphabet"))?.build()
    }

    pub fn raw_phrase(&self) -> Result<&RawPhrase, FormatError> {
        self.phrase.as_ref().ok_or(FormatError::Missing("@phrase"))
    }
}

/// Parses text or, when the first non-blank character is `{`, JSON.
pub fn parse_auto(input: &str) -> Result<Document, FormatError> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

pub fn parse_text(input: &str) -> Result<Document, FormatError> {
    let mut doc = Document::default();
    let mut custom: Option<CustomData> = None;
    let mut letters: Vec<(String, String)> = Vec::new();
    let mut words: Option<Vec<String>> = None;
    let mut gauss: Vec<String> = Vec::new();

    for (i, raw) in input.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("");
        let trimmed = line.trim_start();
        if trimmed.is_empty() {
            continue;
        }
        let indent = line.len() - trimmed.len();
        let err = |offset: usize, message: String| FormatError::Syntax { line: line_no, column: indent + offset + 1, message };
        let (directive, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
        let rest_offset = trimmed.len() - rest.len();
        // (column offset inside `trimmed`, token)
        let tokens: Vec<(usize, &str)> = rest
            .split_whitespace()
            .map(|t| (rest_offset + (t.as_ptr() as usize - rest.as_ptr() as usize), t))
            .collect();
        let needs_alphabet = || err(0, format!("{directive} needs a preceding @alphabet"));
        match directive {
            "@preset" => {
                let [(_, name)] = tokens[..] else {
                    return Err(err(0, "@preset takes exactly one name".into()));
                };
                doc.data = Some(DataSpec::Preset(name.to_string()));
            }
            "@alphabet" => {
                if tokens.is_empty() {
                    return Err(err(0, "@alphabet needs at least one symbol".into()));
                }
                custom = Some(CustomData {
                    symbols: tokens.iter().map(|(_, t)| t.to_string()).collect(),
                    tau: Vec::new(),
                    triples: Vec::new(),
                    shift: None,
                });
            }
            "@tau" | "@shift" => {
                let c = custom.as_mut().ok_or_else(needs_alphabet)?;
                let mut pairs = Vec::new();
                for &(at, t) in &tokens {
                    let (a, b) = t.split_once(':').ok_or_else(|| err(at, format!("expected a:b, found `{t}`")))?;
                    pairs.push((a.to_string(), b.to_string()));
                }
                if directive == "@tau" {
                    c.tau.extend(pairs);
                } else {
                    c.shift.get_or_insert_with(Vec::new).extend(pairs);
                }
            }
            "@triples" => {
                let c = custom.as_mut().ok_or_else(needs_alphabet)?;
                for &(at, t) in &tokens {
                    let inner = t
                        .strip_prefix('(')
                        .and_then(|t| t.strip_suffix(')'))
                        .ok_or_else(|| err(at, format!("expected (a,b,c), found `{t}`")))?;
                    let parts: Vec<&str> = inner.split(',').collect();
                    let [a, b, s] = parts[..] else {
                        return Err(err(at, format!("a triple has three symbols, found `{t}`")));
                    };
                    c.triples.push([a.to_string(), b.to_string(), s.to_string()]);
                }
            }
            "@letters" => {
                for &(at, t) in &tokens {
                    let (l, s) = t.split_once(':').ok_or_else(|| err(at, format!("expected LETTER:symbol, found `{t}`")))?;
                    if l.is_empty() || l == "-" || l.contains('.') || s.is_empty() {
                        return Err(err(at, format!("bad letter declaration `{t}`")));
                    }
                    letters.push((l.to_string(), s.to_string()));
                }
            }
            "@phrase" => {
                words.get_or_insert_with(Vec::new).extend(tokens.iter().map(|(_, t)| t.to_string()));
            }
            "@gausscode" => gauss.push(rest.to_string()),
            other => return Err(err(0, format!("unknown directive `{other}`"))),
        }
    }

    if let Some(c) = custom {
        if doc.data.is_some() {
            return Err(FormatError::Data("both @preset and @alphabet given".into()));
        }
        doc.data = Some(DataSpec::Custom(c));
    }
    if let Some(words) = words {
        let words = words
            .iter()
            .map(|w| split_word_token(w, |name| letters.iter().any(|(l, _)| l == name)))
            .collect();
        doc.phrase = Some(RawPhrase { letters, words });
    } else if !letters.is_empty() {
        return Err(FormatError::Missing("@phrase"));
    }
    if !gauss.is_empty() {
        let joined = gauss.join(" / ");
        let components: Vec<&str> = joined.split('/').map(str::trim).filter(|c| !c.is_empty()).collect();
        doc.gauss = Some(SignedGaussCode::parse_components(&components).map_err(FormatError::Gauss)?);
    }
    Ok(doc)
}

/// Renders a phrase: `@preset` or the data tables, then `@letters` and
/// `@phrase`. Words are written bare when every letter name is one
/// character and dot-separated otherwise.
pub fn write_text(data: &HomotopyData, phrase: &Nanophrase) -> String {
    let mut out = String::new();
    match DataSpec::of(data) {
        DataSpec::Preset(name) => out.push_str(&format!("@preset {name}\n")),
        DataSpec::Custom(c) => {
            out.push_str(&format!("@alphabet {}\n", c.symbols.join(" ")));
            if !c.tau.is_empty() {
                out.push_str(&format!("@tau {}\n", pairs_text(&c.tau)));
            }
            let triples: Vec<String> = c.triples.iter().map(|[a, b, s]| format!("({a},{b},{s})")).collect();
            out.push_str(&format!("@triples {}\n", triples.join(" ")));
            if let Some(shift) = &c.shift {
                out.push_str(format!("@shift {}", pairs_text(shift)).trim_end());
                out.push('\n');
            }
        }
    }
    let letters: Vec<String> =
        phrase.letters().iter().map(|l| format!("{}:{}", l.name, data.name(l.symbol))).collect();
    if !letters.is_empty() {
        out.push_str(&format!("@letters {}\n", letters.join(" ")));
    }
    out.push_str("@phrase");
    for w in word_texts(phrase) {
        out.push(' ');
        out.push_str(&w);
    }
    out.push('\n');
    out
}

fn pairs_text(pairs: &[(String, String)]) -> String {
    pairs.iter().map(|(a, b)| format!("{a}:{b}")).collect::<Vec<_>>().join(" ")
}

pub fn word_texts(phrase: &Nanophrase) -> Vec<String> {
    let bare = phrase.letters().iter().all(|l| l.name.chars().count() == 1);
    phrase
        .words()
        .iter()
        .map(|w| {
            if w.is_empty() {
                return "-".to_string();
            }
            let names: Vec<&str> = w.iter().map(|&id| phrase.letter(id).name.as_str()).collect();
            names.join(if bare { "" } else { "." })
        })
        .collect()
}

#[derive(Debug, Serialize, Deserialize)]
struct JsonLetter {
    name: String,
    symbol: String,
}

#[derive(Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    preset: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    alphabet: Option<CustomData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    letters: Option<Vec<JsonLetter>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    words: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    gausscode: Option<Vec<String>>,
}

pub fn parse_json(input: &str) -> Result<Document, FormatError> {
    let j: JsonDocument = serde_json::from_str(input)?;
    let data = match (j.preset, j.alphabet) {
        (Some(_), Some(_)) => return Err(FormatError::Data("both preset and alphabet given".into())),
        (Some(p), None) => Some(DataSpec::Preset(p)),
        (None, Some(c)) => Some(DataSpec::Custom(c)),
        (None, None) => None,
    };
    let phrase = match (j.letters, j.words) {
        (letters, Some(words)) => Some(RawPhrase {
            letters: letters.unwrap_or_default().into_iter().map(|l| (l.name, l.symbol)).collect(),
            words,
        }),
        (Some(_), None) => return Err(FormatError::Missing("words")),
        (None, None) => None,
    };
    let gauss = match j.gausscode {
        Some(components) => {
            let refs: Vec<&str> = components.iter().map(String::as_str).collect();
            Some(SignedGaussCode::parse_components(&refs).map_err(FormatError::Gauss)?)
        }
        None => None,
    };
    Ok(Document { data, phrase, gauss })
}

/// The JSON mirror of [`write_text`].
pub fn to_json(data: &HomotopyData, phrase: &Nanophrase) -> serde_json::Value {
    let (preset, alphabet) = match DataSpec::of(data) {
        DataSpec::Preset(p) => (Some(p), None),
        DataSpec::Custom(c) => (None, Some(c)),
    };
    let doc = JsonDocument {
        preset,
        alphabet,
        letters: Some(
            phrase
                .letters()
                .iter()
                .map(|l| JsonLetter { name: l.name.clone(), symbol: data.name(l.symbol).to_string() })
                .collect(),
        ),
        words: Some(
            phrase
                .words()
                .iter()
                .map(|w| w.iter().map(|&id| phrase.letter(id).name.clone()).collect())
                .collect(),
        ),
        gausscode: None,
    };
    serde_json::to_value(doc).expect("plain data serializes")
}
