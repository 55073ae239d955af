//! The small knowledge base: semantic types and inferability links.
//!
//! Contrastive focus needs to know what an entity could be contrasted with.
//! The knowledge base assigns every concept one of three semantic types
//! (agent, object, event); the alternative set of an entity is every
//! discourse-model entity of the same type, the entity itself excluded.
//!
//! Inferability links (`infer a b`) declare that concept `a` can be
//! accommodated by the hearer once `b` is in the discourse model — e.g.
//! giving is expected once a talk has been mentioned. Links are single-hop
//! and unidirectional.
//!
//! File format, one declaration per line, `#` comments:
//!
//! ```text
//! type <concept> <agent|object|event>
//! infer <concept> <concept>
//! ```

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::discourse::DiscourseModel;
use crate::interlingua::{realized_entities, SemanticRep};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum SemanticType {
    Agent,
    Object,
    Event,
}

impl SemanticType {
    pub fn keyword(self) -> &'static str {
        match self {
            SemanticType::Agent => "agent",
            SemanticType::Object => "object",
            SemanticType::Event => "event",
        }
    }

    fn from_keyword(s: &str) -> Option<SemanticType> {
        Some(match s {
            "agent" => SemanticType::Agent,
            "object" => SemanticType::Object,
            "event" => SemanticType::Event,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KbError {
    #[error("kb line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("kb line {line}: duplicate type declaration for `{concept}`")]
    DuplicateType { line: usize, concept: String },
    #[error("no semantic type declared for `{concept}`")]
    UnknownConcept { concept: String },
    #[error("document mentions concepts with no kb type entry: {}", concepts.join(", "))]
    MissingTypes { concepts: Vec<String> },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct KnowledgeBase {
    types: BTreeMap<String, SemanticType>,
    infer_links: BTreeSet<(String, String)>,
}

impl KnowledgeBase {
    pub fn load(text: &str) -> Result<KnowledgeBase, KbError> {
        let mut kb = KnowledgeBase::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let decl = raw.split('#').next().unwrap_or("").trim();
            if decl.is_empty() {
                continue;
            }
            let words: Vec<&str> = decl.split_whitespace().collect();
            match words.as_slice() {
                ["type", concept, ty] => {
                    let ty = SemanticType::from_keyword(ty).ok_or_else(|| KbError::Parse {
                        line,
                        msg: format!("unknown semantic type `{ty}`"),
                    })?;
                    if kb.types.insert(concept.to_string(), ty).is_some() {
                        return Err(KbError::DuplicateType {
                            line,
                            concept: concept.to_string(),
                        });
                    }
                }
                ["infer", a, b] => {
                    kb.infer_links.insert((a.to_string(), b.to_string()));
                }
                _ => {
                    return Err(KbError::Parse {
                        line,
                        msg: format!(
                            "expected `type <concept> <type>` or `infer <a> <b>`, found `{decl}`"
                        ),
                    })
                }
            }
        }
        Ok(kb)
    }

    pub fn semantic_type(&self, concept: &str) -> Option<SemanticType> {
        self.types.get(concept).copied()
    }

    pub fn infer_links(&self) -> impl Iterator<Item = &(String, String)> {
        self.infer_links.iter()
    }

    /// True if `concept` is accommodatable given the current discourse model:
    /// some `infer concept b` link exists with `b` already in the model.
    pub fn is_inferrable(&self, concept: &str, model: &DiscourseModel) -> bool {
        self.infer_links
            .iter()
            .any(|(a, b)| a == concept && model.contains(b))
    }

    /// Fails fast if any concept realized in the document (events included)
    /// lacks a type entry.
    pub fn validate_document(&self, reps: &[SemanticRep]) -> Result<(), KbError> {
        let mut missing = BTreeSet::new();
        for rep in reps {
            for entity in realized_entities(rep, true) {
                if !self.types.contains_key(&entity.concept) {
                    missing.insert(entity.concept);
                }
            }
        }
        if missing.is_empty() {
            Ok(())
        } else {
            Err(KbError::MissingTypes {
                concepts: missing.into_iter().collect(),
            })
        }
    }
}

/// The alternatives an entity would be contrasted with: all discourse-model
/// concepts sharing its semantic type, minus the anchor itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternativeSet {
    pub anchor: String,
    pub members: BTreeSet<String>,
}

impl AlternativeSet {
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

pub fn alternative_set(
    kb: &KnowledgeBase,
    model: &DiscourseModel,
    anchor: &str,
) -> Result<AlternativeSet, KbError> {
    let anchor_type = kb
        .semantic_type(anchor)
        .ok_or_else(|| KbError::UnknownConcept {
            concept: anchor.to_string(),
        })?;
    let members = model
        .concepts()
        .filter(|c| *c != anchor && kb.semantic_type(c) == Some(anchor_type))
        .map(|c| c.to_string())
        .collect();
    Ok(AlternativeSet {
        anchor: anchor.to_string(),
        members,
    })
}
