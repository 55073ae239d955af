//! Discourse model and centering bookkeeping.
//!
//! The discourse model is the registry of everything mentioned so far, built
//! incrementally as sentences are committed in document order. Events are
//! registered like any other entity, so a verb becomes discourse-old once
//! its event concept has been realized.
//!
//! Centering state is kept per utterance: the Cf list ranks every discourse
//! entity realized in the utterance, and the backward-looking center (Cb) of
//! an utterance is the highest ranked element of the *previous* utterance's
//! Cf list that is realized again in the current one.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use crate::interlingua::{realized_entities, EntityRef, SemanticRep};
use crate::knowledge::KnowledgeBase;

/// Givenness status of an entity at a particular point in the discourse.
///
/// Everything except `BrandNew` behaves like discourse-old information for
/// the topic and focus algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    DiscourseOld,
    Inferrable,
    HearerOld,
    BrandNew,
}

impl Status {
    pub fn is_brand_new(self) -> bool {
        self == Status::BrandNew
    }

    /// Inferrable and hearer-old entities behave like discourse-old ones.
    pub fn behaves_old(self) -> bool {
        !self.is_brand_new()
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::DiscourseOld => "discourse-old",
            Status::Inferrable => "inferrable",
            Status::HearerOld => "hearer-old",
            Status::BrandNew => "brand-new",
        })
    }
}

/// One registered discourse entity with its mention history.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscourseEntity {
    pub concept: String,
    /// Status the entity had when it was first registered (hearer-old when
    /// its referential form signalled familiarity, brand-new otherwise).
    /// Inferrability is a query-time notion, see [`lookup_status`].
    pub status: Status,
    pub first_mention: usize,
    pub last_mention: usize,
    pub mention_count: usize,
}

/// The persistent entity registry. Entities are only ever added or updated,
/// never removed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DiscourseModel {
    entities: BTreeMap<String, DiscourseEntity>,
    sentence_count: usize,
}

impl DiscourseModel {
    pub fn new() -> Self {
        DiscourseModel::default()
    }

    pub fn contains(&self, concept: &str) -> bool {
        self.entities.contains_key(concept)
    }

    pub fn get(&self, concept: &str) -> Option<&DiscourseEntity> {
        self.entities.get(concept)
    }

    pub fn len(&self) -> usize {
        self.entities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entities.is_empty()
    }

    pub fn sentence_count(&self) -> usize {
        self.sentence_count
    }

    pub fn concepts(&self) -> impl Iterator<Item = &str> {
        self.entities.keys().map(|s| s.as_str())
    }

    pub fn entities(&self) -> impl Iterator<Item = &DiscourseEntity> {
        self.entities.values()
    }

    /// Registers one mention at the current sentence ordinal.
    pub fn record_mention(&mut self, entity: &EntityRef) {
        let ordinal = self.sentence_count;
        self.entities
            .entry(entity.concept.clone())
            .and_modify(|e| {
                e.last_mention = ordinal;
                e.mention_count += 1;
            })
            .or_insert_with(|| DiscourseEntity {
                concept: entity.concept.clone(),
                status: if entity.form.signals_hearer_old() {
                    Status::HearerOld
                } else {
                    Status::BrandNew
                },
                first_mention: ordinal,
                last_mention: ordinal,
                mention_count: 1,
            });
    }

    /// Commits a fully planned sentence: registers every realized entity
    /// (events included) and advances the sentence counter. Must be called
    /// after planning, in document order.
    pub fn commit_sentence(&mut self, rep: &SemanticRep) {
        self.sentence_count += 1;
        for entity in realized_entities(rep, true) {
            self.record_mention(&entity);
        }
    }

    /// Diagnostic text dump, one entity per line in concept order.
    pub fn dump(&self) -> String {
        let mut out = format!(
            "-- discourse model ({} sentences) --\n",
            self.sentence_count
        );
        for e in self.entities.values() {
            out.push_str(&format!(
                "{}\tstatus={}\tfirst={}\tlast={}\tmentions={}\n",
                e.concept, e.status, e.first_mention, e.last_mention, e.mention_count
            ));
        }
        out
    }
}

/// The ranked forward-looking centers of one utterance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfList {
    pub ranked: Vec<String>,
}

impl fmt::Display for CfList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.ranked.join(", "))
    }
}

/// Builds the Cf list of a sentence: realized entities in ranking order,
/// duplicates removed keeping the first occurrence.
pub fn build_cf(rep: &SemanticRep) -> CfList {
    let mut ranked = Vec::new();
    for entity in realized_entities(rep, true) {
        if !ranked.contains(&entity.concept) {
            ranked.push(entity.concept);
        }
    }
    CfList { ranked }
}

/// The backward-looking center: the first element of the previous
/// utterance's Cf list that is realized in the current utterance.
pub fn compute_cb(prev: &CfList, current_realized: &BTreeSet<String>) -> Option<String> {
    prev.ranked
        .iter()
        .find(|c| current_realized.contains(*c))
        .cloned()
}

/// Centering snapshot for one utterance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterAnalysis {
    pub cb: Option<String>,
    pub cf: CfList,
}

impl CenterAnalysis {
    pub fn analyze(prev: Option<&CfList>, rep: &SemanticRep) -> CenterAnalysis {
        let cf = build_cf(rep);
        let current: BTreeSet<String> = cf.ranked.iter().cloned().collect();
        let cb = prev.and_then(|p| compute_cb(p, &current));
        CenterAnalysis { cb, cf }
    }
}

/// Determines the givenness status of one entity occurrence against the
/// model of all prior sentences.
///
/// Mentioned → discourse-old; accommodatable through an inferability link →
/// inferrable; realized with a familiarity-signalling form (definite NP,
/// name, overt pronoun) → hearer-old; otherwise brand-new.
pub fn lookup_status(model: &DiscourseModel, entity: &EntityRef, kb: &KnowledgeBase) -> Status {
    if model.contains(&entity.concept) {
        Status::DiscourseOld
    } else if kb.is_inferrable(&entity.concept, model) {
        Status::Inferrable
    } else if entity.form.signals_hearer_old() {
        Status::HearerOld
    } else {
        Status::BrandNew
    }
}
