//! Signed Gauss codes of pointed ordered link diagrams and their
//! nanophrases over `α★`.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::phrase::{Letter, LetterId, Nanophrase};
use crate::presets::{alpha_star, projection, PresetError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Layer {
    Over,
    Under,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// One passage of a component through a crossing, written `O1+`, `U3-`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Passage {
    pub label: String,
    pub layer: Layer,
    pub sign: Sign,
}

impl Passage {
    pub fn parse(token: &str) -> Result<Passage, CodecError> {
        let bad = || CodecError::BadPassage(token.to_string());
        let mut chars = token.chars();
        let layer = match chars.next() {
            Some('O') | Some('o') => Layer::Over,
            Some('U') | Some('u') => Layer::Under,
            _ => return Err(bad()),
        };
        let rest = chars.as_str();
        let sign = match rest.chars().last() {
            Some('+') => Sign::Plus,
            Some('-') => Sign::Minus,
            _ => return Err(bad()),
        };
        let label = &rest[..rest.len() - 1];
        if label.is_empty() || !label.chars().all(|c| c.is_ascii_alphanumeric()) {
            return Err(bad());
        }
        Ok(Passage { label: label.to_string(), layer, sign })
    }
}

impl fmt::Display for Passage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = if self.layer == Layer::Over { 'O' } else { 'U' };
        let s = if self.sign == Sign::Plus { '+' } else { '-' };
        write!(f, "{l}{}{s}", self.label)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodecError {
    BadPassage(String),
    /// A crossing label that does not occur exactly twice.
    LabelCount { label: String, count: usize },
    /// Both passages of a crossing are over (or both under).
    SameLayer { label: String },
    SignMismatch { label: String },
}

impl fmt::Display for CodecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CodecError::BadPassage(t) => write!(f, "malformed passage `{t}` (expected e.g. O1+ or U2-)"),
            CodecError::LabelCount { label, count } => {
                write!(f, "crossing `{label}` occurs {count} times, expected 2")
            }
            CodecError::SameLayer { label } => write!(f, "crossing `{label}` needs one over and one under passage"),
            CodecError::SignMismatch { label } => write!(f, "passages of crossing `{label}` carry different signs"),
        }
    }
}

impl core::error::Error for CodecError {}

/// A signed Gauss code: one passage list per component, each read from
/// the component's origin.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SignedGaussCode {
    pub components: Vec<Vec<Passage>>,
}

impl SignedGaussCode {
    pub fn new(components: Vec<Vec<Passage>>) -> Self {
        SignedGaussCode { components }
    }

    /// Parses components given as whitespace-separated passage tokens.
    pub fn parse_components(components: &[&str]) -> Result<Self, CodecError> {
        let components = components
            .iter()
            .map(|c| c.split_whitespace().map(Passage::parse).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SignedGaussCode { components })
    }

    pub fn validate(&self) -> Result<(), CodecError> {
        let mut seen: BTreeMap<&str, Vec<&Passage>> = BTreeMap::new();
        for p in self.components.iter().flatten() {
            seen.entry(p.label.as_str()).or_default().push(p);
        }
        for (label, ps) in seen {
            if ps.len() != 2 {
                return Err(CodecError::LabelCount { label: label.to_string(), count: ps.len() });
            }
            if ps[0].layer == ps[1].layer {
                return Err(CodecError::SameLayer { label: label.to_string() });
            }
            if ps[0].sign != ps[1].sign {
                return Err(CodecError::SignMismatch { label: label.to_string() });
            }
        }
        Ok(())
    }

    /// The code of the diagram with crossing `label` switched: over and
    /// under exchange and the sign flips.
    pub fn crossing_changed(&self, label: &str) -> SignedGaussCode {
        let components = self
            .components
            .iter()
            .map(|c| {
                c.iter()
                    .map(|p| {
                        if p.label == label {
                            let layer = if p.layer == Layer::Over { Layer::Under } else { Layer::Over };
                            Passage { label: p.label.clone(), layer, sign: p.sign.flipped() }
                        } else {
                            p.clone()
                        }
                    })
                    .collect()
            })
            .collect();
        SignedGaussCode { components }
    }
}

impl fmt::Display for SignedGaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(" /")?;
            }
            for (j, p) in c.iter().enumerate() {
                if i > 0 || j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
        }
        Ok(())
    }
}

/// Symbol of a crossing from its first passage:
/// (under, +) → a+, (over, +) → b+, (under, −) → b−, (over, −) → a−.
fn symbol_name(first: Layer, sign: Sign) -> &'static str {
    match (first, sign) {
        (Layer::Under, Sign::Plus) => "a+",
        (Layer::Over, Sign::Plus) => "b+",
        (Layer::Under, Sign::Minus) => "b-",
        (Layer::Over, Sign::Minus) => "a-",
    }
}

/// One word per component; letters are named by crossing labels and
/// carry the symbol read off their first passage.
pub fn encode(code: &SignedGaussCode) -> Result<Nanophrase, CodecError> {
    code.validate()?;
    let data = alpha_star();
    let mut ids: BTreeMap<&str, LetterId> = BTreeMap::new();
    let mut letters = Vec::new();
    let mut words = Vec::with_capacity(code.components.len());
    for c in &code.components {
        let mut word = Vec::with_capacity(c.len());
        for p in c {
            let id = *ids.entry(p.label.as_str()).or_insert_with(|| {
                let sym = data.symbol(symbol_name(p.layer, p.sign)).expect("alpha_star symbol");
                letters.push(Letter { name: p.label.clone(), symbol: sym });
                LetterId(letters.len() as u32 - 1)
            });
            word.push(id);
        }
        words.push(word);
    }
    Ok(Nanophrase::new(letters, words).expect("validated code is a Gauss phrase"))
}

/// Projection `α★ → α₀` dropping the sign subscripts.
pub fn forget_orientation_data(phrase: &Nanophrase) -> Result<Nanophrase, PresetError> {
    projection("star_to_0")?.apply(phrase)
}
