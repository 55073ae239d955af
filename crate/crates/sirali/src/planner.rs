//! Topic and focus selection, and the topic / focus / ground partition.
//!
//! The topic algorithm tries four steps in order and takes the first that
//! succeeds:
//!
//! 1. the backward-looking center — the first entity shared between the
//!    previous sentence's Cf list and the current one;
//! 2. the first discourse-old entity in the current Cf list;
//! 3. a situation-setting adverb, as a discourse-new topic;
//! 4. the first entity in the Cf list (i.e. the subject), as a discourse-new
//!    topic.
//!
//! The focus algorithm has two steps:
//!
//! 1. if any non-topic constituent is brand-new, the focus is exactly the
//!    brand-new constituents (presentational focus, possibly broad);
//! 2. otherwise every constituent with a non-empty alternative set is
//!    focused (contrastive focus).
//!
//! Inferrable and hearer-old entities count as discourse-old in both
//! algorithms. Events take part like ordinary entities, with one exception:
//! they are never chosen as topics. A fronted verb cannot fill the
//! sentence-initial topic slot while remaining clause-final, so when the Cb
//! is an event, step 1 simply fails over to step 2.
//!
//! Whatever is neither topic nor focus is the ground.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::discourse::{compute_cb, lookup_status, CfList, DiscourseModel};
use crate::interlingua::{realized_constituents, Constituent, ConstituentKind, SemanticRep};
use crate::knowledge::{alternative_set, KbError, KnowledgeBase};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TopicStep {
    /// Step 1: backward-looking center.
    Cb,
    /// Step 2: first discourse-old entity in the Cf list.
    DiscourseOld,
    /// Step 3: situation-setting adverb as discourse-new topic.
    SettingAdverb,
    /// Step 4: the subject as discourse-new topic.
    Subject,
}

impl TopicStep {
    pub fn number(self) -> u8 {
        match self {
            TopicStep::Cb => 1,
            TopicStep::DiscourseOld => 2,
            TopicStep::SettingAdverb => 3,
            TopicStep::Subject => 4,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FocusStep {
    /// Step 1: presentational focus on brand-new constituents.
    DiscourseNew,
    /// Step 2: contrastive focus on constituents with alternatives.
    Contrastive,
    /// Neither step produced anything (everything old, no alternatives):
    /// the verb is focused so the comment is never empty. Reported as
    /// step 2, of which it is the degenerate outcome.
    FallbackVerb,
}

impl FocusStep {
    pub fn number(self) -> u8 {
        match self {
            FocusStep::DiscourseNew => 1,
            FocusStep::Contrastive | FocusStep::FallbackVerb => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlanError {
    #[error("cannot select a topic: clause realizes no entity besides its event")]
    NoTopicCandidate,
    #[error(transparent)]
    Kb(#[from] KbError),
}

/// The information-structure partition of one sentence.
///
/// Exactly one topic; the topic, focus, and ground are pairwise disjoint and
/// together cover every realized constituent (the verb included).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InformationStructure {
    pub topic: Constituent,
    pub topic_step: TopicStep,
    pub focus: Vec<Constituent>,
    pub focus_step: FocusStep,
    pub ground: Vec<Constituent>,
    pub cb: Option<String>,
}

impl InformationStructure {
    /// The `(T:n,F:m)` step annotation.
    pub fn annotation(&self) -> String {
        format!(
            "(T:{},F:{})",
            self.topic_step.number(),
            self.focus_step.number()
        )
    }

    pub fn is_focused(&self, c: &Constituent) -> bool {
        self.focus.iter().any(|f| f.entity.index == c.entity.index)
    }

    pub fn is_ground(&self, c: &Constituent) -> bool {
        self.ground.iter().any(|g| g.entity.index == c.entity.index)
    }

    /// Checks the partition invariant against the sentence it was built for.
    pub fn is_partition_of(&self, rep: &SemanticRep) -> bool {
        let all = realized_constituents(rep);
        let mut indices: BTreeSet<usize> = BTreeSet::new();
        indices.insert(self.topic.entity.index);
        for c in self.focus.iter().chain(self.ground.iter()) {
            if !indices.insert(c.entity.index) {
                return false; // overlap
            }
        }
        let expected: BTreeSet<usize> = all.iter().map(|c| c.entity.index).collect();
        indices == expected
    }
}

fn realized_concepts(constituents: &[Constituent]) -> BTreeSet<String> {
    constituents
        .iter()
        .map(|c| c.concept().to_string())
        .collect()
}

/// First non-verb constituent realizing `concept`, in ranking order.
fn nominal_realization<'a>(
    constituents: &'a [Constituent],
    concept: &str,
) -> Option<&'a Constituent> {
    constituents
        .iter()
        .find(|c| !c.is_verb() && c.concept() == concept)
}

/// Runs the four-step topic algorithm. The model must reflect prior
/// sentences only.
pub fn select_topic(
    rep: &SemanticRep,
    prev_cf: Option<&CfList>,
    model: &DiscourseModel,
    kb: &KnowledgeBase,
) -> Result<(Constituent, TopicStep), PlanError> {
    let constituents = realized_constituents(rep);
    let current = realized_concepts(&constituents);

    // step 1: the Cb, provided it is realized by something other than a verb
    if let Some(prev) = prev_cf {
        if let Some(cb) = compute_cb(prev, &current) {
            if let Some(c) = nominal_realization(&constituents, &cb) {
                return Ok((c.clone(), TopicStep::Cb));
            }
        }
    }

    // step 2: first discourse-old entity in the current Cf list
    let mut seen = BTreeSet::new();
    for c in constituents.iter().filter(|c| !c.is_verb()) {
        if !seen.insert(c.concept().to_string()) {
            continue;
        }
        if lookup_status(model, &c.entity, kb).behaves_old() {
            return Ok((c.clone(), TopicStep::DiscourseOld));
        }
    }

    // step 3: leftmost situation-setting adverb
    if let Some(c) = constituents
        .iter()
        .find(|c| matches!(c.kind, ConstituentKind::Adjunct { setting: true }))
    {
        return Ok((c.clone(), TopicStep::SettingAdverb));
    }

    // step 4: first entity in the Cf list, i.e. the subject
    constituents
        .iter()
        .find(|c| !c.is_verb())
        .map(|c| (c.clone(), TopicStep::Subject))
        .ok_or(PlanError::NoTopicCandidate)
}

/// Runs the two-step focus algorithm over every realized constituent except
/// the topic.
pub fn select_focus(
    rep: &SemanticRep,
    topic: &Constituent,
    model: &DiscourseModel,
    kb: &KnowledgeBase,
) -> Result<(Vec<Constituent>, FocusStep), PlanError> {
    let candidates: Vec<Constituent> = realized_constituents(rep)
        .into_iter()
        .filter(|c| c.entity.index != topic.entity.index)
        .collect();

    // step 1: presentational focus on brand-new constituents
    let brand_new: Vec<Constituent> = candidates
        .iter()
        .filter(|c| lookup_status(model, &c.entity, kb).is_brand_new())
        .cloned()
        .collect();
    if !brand_new.is_empty() {
        return Ok((brand_new, FocusStep::DiscourseNew));
    }

    // step 2: contrastive focus wherever an alternative set is non-empty
    let mut contrastive = Vec::new();
    for c in &candidates {
        if !alternative_set(kb, model, c.concept())?.is_empty() {
            contrastive.push(c.clone());
        }
    }
    if !contrastive.is_empty() {
        return Ok((contrastive, FocusStep::Contrastive));
    }

    // everything is old and uncontrastable: focus the verb so the comment
    // is never empty
    let verb = candidates
        .iter()
        .find(|c| c.is_verb() && c.depth() == 0)
        .or_else(|| candidates.first())
        .cloned();
    Ok((verb.into_iter().collect(), FocusStep::FallbackVerb))
}

/// Plans one sentence: topic, focus, and the remainder as ground.
pub fn plan_sentence(
    rep: &SemanticRep,
    prev_cf: Option<&CfList>,
    model: &DiscourseModel,
    kb: &KnowledgeBase,
) -> Result<InformationStructure, PlanError> {
    let constituents = realized_constituents(rep);
    let current = realized_concepts(&constituents);
    let cb = prev_cf.and_then(|prev| compute_cb(prev, &current));

    let (topic, topic_step) = select_topic(rep, prev_cf, model, kb)?;
    let (focus, focus_step) = select_focus(rep, &topic, model, kb)?;

    let ground: Vec<Constituent> = constituents
        .into_iter()
        .filter(|c| {
            c.entity.index != topic.entity.index
                && !focus.iter().any(|f| f.entity.index == c.entity.index)
        })
        .collect();

    let is = InformationStructure {
        topic,
        topic_step,
        focus,
        focus_step,
        ground,
        cb,
    };
    debug_assert!(is.is_partition_of(rep));
    Ok(is)
}
