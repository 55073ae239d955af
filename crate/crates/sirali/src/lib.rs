//! sirali (Turkish *sıralı*, "ordered") plans contextually appropriate word
//! orders for a free word order target language.
//!
//! Given a document of interlingua semantic representations, the library
//! incrementally builds a discourse model, determines each sentence's
//! information structure (one topic, a focus set, and the ground), and
//! linearizes the sentence Turkish-style: topic in sentence-initial position,
//! focus immediately before the verb, ground interposed, postposed, or
//! dropped.
//!
//! The processing pipeline is:
//!
//! 1. [`interlingua`] parses the document format into [`SemanticRep`] values.
//! 2. [`discourse`] tracks mentioned entities and centering state (Cf lists
//!    and the backward-looking center) across sentences.
//! 3. [`knowledge`] supplies semantic types and inferability links, and
//!    builds alternative sets for contrastive focus.
//! 4. [`planner`] runs the topic and focus algorithms and partitions the
//!    sentence into topic / focus / ground.
//! 5. [`linearizer`] maps the partition to an ordered surface form with a
//!    word-order label (e.g. `AdvSOV`, `OSV`, `O2S1[S2V2]V1`) and glosses.
//! 6. [`pipeline`] drives the whole thing sentence by sentence; the `sirali`
//!    binary is a thin CLI over it.
//!
//! [`stats`] is a small side module: Pearson chi-square over contingency
//! tables, with the corpus counts that motivated the topic/focus positional
//! assignments built in.

pub mod discourse;
pub mod interlingua;
pub mod knowledge;
pub mod linearizer;
pub mod pipeline;
pub mod planner;
pub mod stats;

pub use discourse::{build_cf, compute_cb, lookup_status, CfList, DiscourseModel, Status};
pub use interlingua::{parse_document, Constituent, EntityRef, SemanticRep};
pub use knowledge::{alternative_set, KnowledgeBase};
pub use linearizer::{linearize, Lexicon, LinearizedSentence, PlacementPolicy};
pub use pipeline::{run_pipeline, run_stats, RunConfig};
pub use planner::{plan_sentence, InformationStructure};
