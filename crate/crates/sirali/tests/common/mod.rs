//! Shared generators and oracles for the property and acceptance suites.
//!
//! Documents are generated as source text and pushed through the real
//! parser, so every property run also exercises the document grammar. The
//! accompanying knowledge base types every pool concept (randomly) and may
//! add a few inferability links.

use proptest::prelude::*;

pub const NOUNS: &[&str] = &[
    "pat", "chris", "sue", "tom", "book", "talk", "pen", "park", "gift", "dog",
];
pub const PREDS: &[&str] = &[
    "give", "meet", "see", "read", "like", "come", "exist", "think",
];
const ROLES: &[&str] = &[
    "agent",
    "experiencer",
    "goal",
    "comitative",
    "theme",
    "other",
];
const FORMS: &[&str] = &["name", "def", "indef", "pron", "zero"];
const TYPES: &[&str] = &["agent", "object", "event"];

#[derive(Debug, Clone)]
pub struct GenEntity {
    pub concept: usize,
    pub form: Option<&'static str>,
}

impl GenEntity {
    fn render(&self) -> String {
        match self.form {
            None => NOUNS[self.concept].to_string(),
            Some(form) => format!("(ent {} (form {form}))", NOUNS[self.concept]),
        }
    }
}

/// Argument position to replace, embedded predicate, and its arguments.
type GenEmbed = (usize, usize, Vec<(&'static str, GenEntity)>);

#[derive(Debug, Clone)]
pub struct GenClause {
    pub pred: usize,
    pub args: Vec<(&'static str, GenEntity)>,
    /// Replaces the argument at this position with an embedded clause.
    pub embed: Option<GenEmbed>,
    pub adjuncts: Vec<(GenEntity, bool)>,
    pub tense: Option<&'static str>,
    pub polarity: Option<&'static str>,
}

impl GenClause {
    fn render(&self) -> String {
        let mut out = format!("(sent (pred {}", PREDS[self.pred]);
        for (i, (role, entity)) in self.args.iter().enumerate() {
            match &self.embed {
                Some((pos, pred, sub_args)) if *pos == i && self.args.len() >= 2 => {
                    let mut clause = format!("(clause (pred {}", PREDS[*pred]);
                    for (sub_role, sub_entity) in sub_args {
                        clause.push_str(&format!(" (arg {sub_role} {})", sub_entity.render()));
                    }
                    clause.push_str("))");
                    out.push_str(&format!(" (arg {role} {clause})"));
                }
                _ => out.push_str(&format!(" (arg {role} {})", entity.render())),
            }
        }
        out.push(')');
        for (entity, setting) in &self.adjuncts {
            out.push_str(&format!(" (adv {}", entity.render()));
            if *setting {
                out.push_str(" (setting +)");
            }
            out.push(')');
        }
        if let Some(tense) = self.tense {
            out.push_str(&format!(" (feat tense {tense})"));
        }
        if let Some(polarity) = self.polarity {
            out.push_str(&format!(" (feat polarity {polarity})"));
        }
        out.push(')');
        out
    }
}

fn entity_strategy() -> impl Strategy<Value = GenEntity> {
    (
        0..NOUNS.len(),
        prop::option::of(prop::sample::select(FORMS)),
    )
        .prop_map(|(concept, form)| GenEntity { concept, form })
}

fn args_strategy(max: usize) -> impl Strategy<Value = Vec<(&'static str, GenEntity)>> {
    prop::sample::subsequence(ROLES.to_vec(), 1..=max).prop_flat_map(|roles| {
        let n = roles.len();
        (Just(roles), prop::collection::vec(entity_strategy(), n..=n))
            .prop_map(|(roles, entities)| roles.into_iter().zip(entities).collect())
    })
}

fn clause_strategy() -> impl Strategy<Value = GenClause> {
    let embed = prop::option::weighted(0.25, (0..4usize, 0..PREDS.len(), args_strategy(2)));
    (
        0..PREDS.len(),
        args_strategy(4),
        embed,
        prop::collection::vec((entity_strategy(), any::<bool>()), 0..=2),
        prop::option::of(prop::sample::select(&["fut", "past", "pres", "prog"][..])),
        prop::option::of(prop::sample::select(&["pos", "neg"][..])),
    )
        .prop_map(|(pred, args, embed, adjuncts, tense, polarity)| {
            // keep at least one matrix entity argument when embedding
            let embed = embed.and_then(|(pos, sub_pred, sub_args)| {
                if args.len() >= 2 {
                    Some((pos % args.len(), sub_pred, sub_args))
                } else {
                    None
                }
            });
            GenClause {
                pred,
                args,
                embed,
                adjuncts,
                tense,
                polarity,
            }
        })
}

fn kb_strategy() -> impl Strategy<Value = String> {
    let concept_count = NOUNS.len() + PREDS.len();
    (
        prop::collection::vec(prop::sample::select(TYPES), concept_count..=concept_count),
        prop::collection::vec((0..PREDS.len(), 0..NOUNS.len()), 0..=3),
    )
        .prop_map(|(types, links)| {
            let mut out = String::new();
            for (concept, ty) in NOUNS.iter().chain(PREDS.iter()).zip(types) {
                out.push_str(&format!("type {concept} {ty}\n"));
            }
            for (pred, noun) in links {
                out.push_str(&format!("infer {} {}\n", PREDS[pred], NOUNS[noun]));
            }
            out
        })
}

/// A random document (1..=max_sentences sentences, each with up to four
/// arguments, sometimes an embedded clause) plus a knowledge base typing
/// every concept in the pool.
pub fn doc_kb_strategy(max_sentences: usize) -> impl Strategy<Value = (String, String)> {
    (
        prop::collection::vec(clause_strategy(), 1..=max_sentences),
        kb_strategy(),
    )
        .prop_map(|(clauses, kb)| {
            let doc = clauses
                .iter()
                .map(|c| c.render())
                .collect::<Vec<_>>()
                .join("\n");
            (doc, kb)
        })
}

/// Brute-force Cb oracle: scan the previous list left to right and return
/// the first member of the intersection.
#[allow(dead_code)] // not every test target uses every helper
pub fn cb_oracle(prev: &[String], current: &std::collections::BTreeSet<String>) -> Option<String> {
    for c in prev {
        if current.contains(c) {
            return Some(c.clone());
        }
    }
    None
}
