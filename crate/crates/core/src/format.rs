//! JSON system files.
//!
//! ```json
//! {
//!   "alphabet": "abc",
//!   "rules": [
//!     { "id": "R1",
//!       "left":  { "prefix": "ab", "infix": "abc", "suffix": "ba" },
//!       "right": { "prefix": "ba", "infix": "abc", "suffix": "ab" } },
//!     { "id": "swap-ac", "left": { "prefix": "ac" }, "right": { "prefix": "ca" } }
//!   ],
//!   "counters": ["abc"]
//! }
//! ```
//!
//! A pattern without `infix` is a plain word. A file with a `counters` key
//! (even an empty list) describes a Parikh rewriting system.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presets::NamedSystem;
use crate::prs::{Counter, ParikhRewritingSystem};
use crate::thue::{RewritePattern, RuleFamily, ThueSystem};
use crate::words::Alphabet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PatternFile {
    pub prefix: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub infix: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub suffix: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RuleFile {
    pub id: String,
    pub left: PatternFile,
    pub right: PatternFile,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemFile {
    pub alphabet: String,
    pub rules: Vec<RuleFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counters: Option<Vec<String>>,
}

impl PatternFile {
    fn from_pattern(alphabet: &Alphabet, p: &RewritePattern) -> PatternFile {
        let suffix = (!p.suffix.is_empty()).then(|| alphabet.render(&p.suffix));
        PatternFile {
            prefix: alphabet.render(&p.prefix),
            infix: p.infix.map(|g| alphabet.render_set(g)),
            suffix,
        }
    }

    fn to_pattern(&self, alphabet: &Alphabet, id: &str) -> Result<RewritePattern> {
        let invalid = |e: Error| Error::InvalidRule {
            id: id.to_string(),
            reason: e.to_string(),
        };
        let prefix = alphabet.word(&self.prefix).map_err(invalid)?;
        let suffix = alphabet
            .word(self.suffix.as_deref().unwrap_or(""))
            .map_err(invalid)?;
        Ok(match &self.infix {
            None => RewritePattern::word(prefix.concat(&suffix)),
            Some(g) => {
                RewritePattern::parametric(prefix, alphabet.letter_set(g).map_err(invalid)?, suffix)
            }
        })
    }
}

impl SystemFile {
    pub fn from_thue(system: &ThueSystem) -> SystemFile {
        let a = system.alphabet();
        SystemFile {
            alphabet: a.to_string(),
            rules: system
                .rules()
                .iter()
                .map(|r| RuleFile {
                    id: r.id.clone(),
                    left: PatternFile::from_pattern(a, &r.left),
                    right: PatternFile::from_pattern(a, &r.right),
                })
                .collect(),
            counters: None,
        }
    }

    pub fn from_prs(prs: &ParikhRewritingSystem) -> SystemFile {
        let mut file = SystemFile::from_thue(prs.thue());
        file.counters = Some(
            prs.counters()
                .iter()
                .map(|c| prs.alphabet().render(c.word()))
                .collect(),
        );
        file
    }

    pub fn from_system(system: &NamedSystem) -> SystemFile {
        match system {
            NamedSystem::Thue(t) => SystemFile::from_thue(t),
            NamedSystem::Prs(p) => SystemFile::from_prs(p),
        }
    }

    /// Validates the file and builds the system it describes.
    pub fn build(&self) -> Result<NamedSystem> {
        let alphabet = Alphabet::parse(&self.alphabet)?;
        let rules = self
            .rules
            .iter()
            .map(|r| {
                let left = r.left.to_pattern(&alphabet, &r.id)?;
                let right = r.right.to_pattern(&alphabet, &r.id)?;
                if left.infix != right.infix {
                    return Err(Error::InvalidRule {
                        id: r.id.clone(),
                        reason: "both sides must have the same infix alphabet".into(),
                    });
                }
                Ok(RuleFamily {
                    id: r.id.clone(),
                    left,
                    right,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let thue = ThueSystem::new(alphabet, rules)?;
        match &self.counters {
            None => Ok(NamedSystem::Thue(thue)),
            Some(counters) => {
                let counters = counters
                    .iter()
                    .map(|c| Counter::parse(thue.alphabet(), c))
                    .collect::<Result<Vec<_>>>()?;
                Ok(NamedSystem::Prs(ParikhRewritingSystem::new(
                    thue, counters,
                )?))
            }
        }
    }
}

/// Parses and validates a JSON system file.
pub fn parse_system(json: &str) -> Result<NamedSystem> {
    let file: SystemFile = serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    file.build()
}

/// Pretty-printed JSON for a system; [`parse_system`] reads it back.
pub fn system_to_json(system: &NamedSystem) -> String {
    serde_json::to_string_pretty(&SystemFile::from_system(system)).expect("plain data serializes")
}
