//! Maps an information structure onto an ordered surface form.
//!
//! The positional contract is fixed: the topic goes to sentence-initial
//! position, focused material immediately before the verb, the verb after
//! it, and the ground in between, behind the verb, or nowhere at all:
//!
//! ```text
//! topic  [interposed ground]  [focus]  verb  [postposed ground]
//! ```
//!
//! A topic buried inside an embedded clause is extracted to the front,
//! leaving a gap marker behind (long-distance scrambling); the embedded
//! clause itself stays preverbal in the matrix. Embedded clauses never
//! postpose and their members never drop — reordering happens at the matrix
//! level only.
//!
//! Within a zone, constituents keep canonical order: arguments by the theta
//! hierarchy (embedded clauses in their argument position), then adjuncts.

use std::collections::BTreeMap;
use std::collections::BTreeSet;

use thiserror::Error;

use crate::interlingua::{collect_constituents, Constituent, ConstituentKind, Filler, SemanticRep};
use crate::planner::InformationStructure;

/// What to do with ground material.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GroundMode {
    /// Everything between topic and focus, unstressed. The default: fully
    /// deterministic and never loses material.
    #[default]
    Interpose,
    /// Everything behind the verb, as backgrounded information.
    Postpose,
    /// Drop what was mentioned in the immediately previous sentence (only
    /// very salient items drop), postpose the rest.
    Salience,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PlacementPolicy {
    pub ground_mode: GroundMode,
    /// Whether salience mode may actually drop; without it, salience
    /// postposes everything.
    pub drop_enabled: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Zone {
    Topic,
    GroundInterposed,
    Focus,
    Verb,
    Postposed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Slot {
    pub constituent: Constituent,
    pub zone: Zone,
}

/// One linearized sentence: surface slots in order, plus everything needed
/// to render the word-order label and the gloss.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearizedSentence {
    pub slots: Vec<Slot>,
    pub label: String,
    pub dropped: Vec<Constituent>,
    /// When the topic was extracted from an embedded clause, the gap marker
    /// is rendered before this slot index.
    pub gap_before: Option<usize>,
    /// True when the sentence-initial topic came out of an embedded clause.
    pub extracted_topic: bool,
    /// True when the matrix verb is part of the focus (verb focus is marked
    /// by stress, not by position).
    pub verb_focused: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinearizeError {
    #[error("information structure is not a partition of the sentence: {0}")]
    PartitionViolation(String),
    #[error("the clause event cannot fill the sentence-initial topic slot")]
    VerbTopic,
}

#[derive(Debug)]
struct SurfaceUnit {
    members: Vec<Constituent>,
    is_clause: bool,
}

/// Matrix-level surface units in canonical order, verb excluded: arguments
/// first (entity or whole embedded clause), then adjuncts.
fn matrix_units(rep: &SemanticRep) -> (Vec<SurfaceUnit>, Constituent) {
    let all = crate::interlingua::realized_constituents(rep);
    let mut units = Vec::new();
    for (i, arg) in rep.args.iter().enumerate() {
        match &arg.filler {
            Filler::Entity(e) => {
                let c = all
                    .iter()
                    .find(|c| c.depth() == 0 && c.entity.index == e.index)
                    .expect("matrix argument is a constituent");
                units.push(SurfaceUnit {
                    members: vec![c.clone()],
                    is_clause: false,
                });
            }
            Filler::Clause(sub) => {
                let mut members = Vec::new();
                collect_constituents(sub, &[i], &mut members);
                units.push(SurfaceUnit {
                    members,
                    is_clause: true,
                });
            }
        }
    }
    for c in &all {
        if matches!(c.kind, ConstituentKind::Adjunct { .. }) && c.depth() == 0 {
            units.push(SurfaceUnit {
                members: vec![c.clone()],
                is_clause: false,
            });
        }
    }
    let verb = all
        .iter()
        .find(|c| c.is_verb() && c.depth() == 0)
        .expect("every clause has an event")
        .clone();
    (units, verb)
}

/// Lays out one sentence according to its information structure.
///
/// `prev_realized` holds the concepts realized in the immediately previous
/// sentence; salience mode drops ground entities found there.
pub fn linearize(
    rep: &SemanticRep,
    is: &InformationStructure,
    policy: &PlacementPolicy,
    prev_realized: &BTreeSet<String>,
) -> Result<LinearizedSentence, LinearizeError> {
    if !is.is_partition_of(rep) {
        return Err(LinearizeError::PartitionViolation(format!(
            "topic={} focus={:?} ground={:?}",
            is.topic.concept(),
            is.focus.iter().map(|c| c.concept()).collect::<Vec<_>>(),
            is.ground.iter().map(|c| c.concept()).collect::<Vec<_>>(),
        )));
    }
    if is.topic.is_verb() {
        return Err(LinearizeError::VerbTopic);
    }

    let (mut units, matrix_verb) = matrix_units(rep);

    // pull the topic out of the unit list
    let topic_index = is.topic.entity.index;
    let mut extracted_topic = false;
    let mut gap_anchor: Option<usize> = None;
    let unit_pos = units
        .iter()
        .position(|u| u.members.iter().any(|m| m.entity.index == topic_index))
        .ok_or_else(|| {
            LinearizeError::PartitionViolation("topic not realized in sentence".into())
        })?;
    if units[unit_pos].is_clause {
        // long-distance scrambling: extract the topic, leave a gap at its
        // canonical position inside the clause
        let member_pos = units[unit_pos]
            .members
            .iter()
            .position(|m| m.entity.index == topic_index)
            .expect("member located above");
        units[unit_pos].members.remove(member_pos);
        gap_anchor = Some(units[unit_pos].members[member_pos].entity.index);
        extracted_topic = true;
    } else {
        units.remove(unit_pos);
    }

    // zone per remaining unit: focus wins over ground
    let mut interposed: Vec<&SurfaceUnit> = Vec::new();
    let mut focused: Vec<&SurfaceUnit> = Vec::new();
    let mut postposed: Vec<&SurfaceUnit> = Vec::new();
    let mut dropped: Vec<Constituent> = Vec::new();
    for unit in &units {
        if unit.members.is_empty() {
            continue;
        }
        let in_focus = unit.members.iter().any(|m| is.is_focused(m));
        if in_focus {
            focused.push(unit);
            continue;
        }
        match policy.ground_mode {
            GroundMode::Interpose => interposed.push(unit),
            GroundMode::Postpose => {
                if unit.is_clause {
                    interposed.push(unit);
                } else {
                    postposed.push(unit);
                }
            }
            GroundMode::Salience => {
                if unit.is_clause {
                    interposed.push(unit);
                } else if policy.drop_enabled
                    && unit
                        .members
                        .iter()
                        .all(|m| prev_realized.contains(m.concept()))
                {
                    dropped.extend(unit.members.iter().cloned());
                } else {
                    postposed.push(unit);
                }
            }
        }
    }

    let verb_focused = is.is_focused(&matrix_verb);

    let mut slots = Vec::new();
    slots.push(Slot {
        constituent: is.topic.clone(),
        zone: Zone::Topic,
    });
    for unit in interposed {
        for m in &unit.members {
            slots.push(Slot {
                constituent: m.clone(),
                zone: Zone::GroundInterposed,
            });
        }
    }
    for unit in focused {
        for m in &unit.members {
            slots.push(Slot {
                constituent: m.clone(),
                zone: Zone::Focus,
            });
        }
    }
    slots.push(Slot {
        constituent: matrix_verb,
        zone: Zone::Verb,
    });
    for unit in postposed {
        for m in &unit.members {
            slots.push(Slot {
                constituent: m.clone(),
                zone: Zone::Postposed,
            });
        }
    }

    let gap_before = gap_anchor.map(|anchor| {
        slots
            .iter()
            .position(|s| s.constituent.entity.index == anchor)
            .expect("gap anchor is a slot")
    });

    let mut sentence = LinearizedSentence {
        slots,
        label: String::new(),
        dropped,
        gap_before,
        extracted_topic,
        verb_focused,
    };
    sentence.label = order_label(&sentence);
    Ok(sentence)
}

fn letter(kind: ConstituentKind) -> &'static str {
    match kind {
        ConstituentKind::Subject => "S",
        ConstituentKind::Object => "O",
        ConstituentKind::Adjunct { .. } => "Adv",
        ConstituentKind::Verb => "V",
    }
}

fn common_prefix_len(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b.iter()).take_while(|(x, y)| x == y).count()
}

/// Renders the word-order label: one letter group per slot (S, O, Adv, V),
/// embedded clauses bracketed, and clause-depth subscripts as digits
/// whenever the sentence involves embedding. Dropped constituents do not
/// appear.
pub fn order_label(sentence: &LinearizedSentence) -> String {
    let has_embedding = sentence.slots.iter().any(|s| s.constituent.depth() > 0);
    let mut label = String::new();
    let mut open: &[usize] = &[];
    for (i, slot) in sentence.slots.iter().enumerate() {
        // an extracted topic stands alone at the front, outside its
        // clause's brackets
        let bracket_path: &[usize] = if i == 0 && sentence.extracted_topic {
            &[]
        } else {
            &slot.constituent.path
        };
        let common = common_prefix_len(open, bracket_path);
        for _ in common..open.len() {
            label.push(']');
        }
        for _ in common..bracket_path.len() {
            label.push('[');
        }
        label.push_str(letter(slot.constituent.kind));
        if has_embedding {
            label.push_str(&(slot.constituent.depth() + 1).to_string());
        }
        open = bracket_path;
    }
    for _ in 0..open.len() {
        label.push(']');
    }
    label
}

// ---------------------------------------------------------------------------
// Lexicon and glosses
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LexiconError {
    #[error("lexicon line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Inflected surface forms keyed by concept and case/feature key.
///
/// One entry per line: `lex <concept> <key> "<surface form>"`, where key is
/// a case key (`nom`, `acc`, `gen`, `com`, `loc`) or a verb feature string
/// (e.g. `prog`, `fut+neg`, or plain `verb` for a featureless clause).
/// Forms may contain spaces and any UTF-8. Later entries override earlier
/// ones.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    entries: BTreeMap<(String, String), String>,
}

impl Lexicon {
    pub fn empty() -> Lexicon {
        Lexicon::default()
    }

    pub fn parse(text: &str) -> Result<Lexicon, LexiconError> {
        let mut entries = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let decl = raw.trim();
            if decl.is_empty() || decl.starts_with('#') {
                continue;
            }
            let rest = decl
                .strip_prefix("lex ")
                .ok_or_else(|| LexiconError::Parse {
                    line,
                    msg: "expected `lex <concept> <key> \"<form>\"`".into(),
                })?;
            let mut words = rest.splitn(3, char::is_whitespace);
            let concept = words.next().unwrap_or("").to_string();
            let key = words.next().unwrap_or("").to_string();
            let form_part = words.next().unwrap_or("").trim();
            if concept.is_empty() || key.is_empty() {
                return Err(LexiconError::Parse {
                    line,
                    msg: "missing concept or key".into(),
                });
            }
            let form = form_part
                .strip_prefix('"')
                .and_then(|s| s.strip_suffix('"'))
                .ok_or_else(|| LexiconError::Parse {
                    line,
                    msg: "surface form must be double-quoted".into(),
                })?;
            entries.insert((concept, key), form.to_string());
        }
        Ok(Lexicon { entries })
    }

    pub fn get(&self, concept: &str, key: &str) -> Option<&str> {
        self.entries
            .get(&(concept.to_string(), key.to_string()))
            .map(|s| s.as_str())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Glosses every slot. Missing lexicon entries fall back to
/// `concept#key`, so the gloss is total under any lexicon. An extracted
/// topic is co-indexed `_i` and its gap rendered `e_i`. With `mark_stress`,
/// a focused matrix verb gets a trailing `*`.
pub fn realize_gloss(
    sentence: &LinearizedSentence,
    lexicon: &Lexicon,
    mark_stress: bool,
) -> Vec<String> {
    let mut tokens = Vec::new();
    for (i, slot) in sentence.slots.iter().enumerate() {
        if sentence.gap_before == Some(i) {
            tokens.push("e_i".to_string());
        }
        let c = &slot.constituent;
        let mut token = match lexicon.get(c.concept(), &c.lex_key) {
            Some(form) => form.to_string(),
            None => format!("{}#{}", c.concept(), c.lex_key),
        };
        if i == 0 && sentence.extracted_topic {
            token.push_str("_i");
        }
        if mark_stress && slot.zone == Zone::Verb && sentence.verb_focused {
            token.push('*');
        }
        tokens.push(token);
    }
    tokens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::discourse::{build_cf, CfList, DiscourseModel};
    use crate::interlingua::parse_document;
    use crate::knowledge::KnowledgeBase;
    use crate::planner::plan_sentence;

    const TALK_KB: &str = "type pat agent\ntype chris agent\ntype talk object\ntype today object\n\
                           type four object\ntype meet event\ntype exist event\ntype give event\n\
                           type come event\ninfer give talk\n";

    const TALK_DOC: &str = "\
(sent (pred meet (arg agent pat) (arg comitative chris)) (adv today (setting +)) (feat tense fut))
(sent (pred exist (arg theme talk)) (adv four (setting +)) (feat tense pres))
(sent (pred give (arg agent chris) (arg theme (ent talk (form def)))) (feat tense prog))
(sent (pred come (arg agent pat)) (feat tense fut) (feat polarity neg))
";

    const TALK_LEX: &str = "\
lex today loc \"Bugün\"
lex pat nom \"Pat\"
lex chris com \"Chris'le\"
lex meet fut \"buluşacak\"
lex four loc \"Dörtde\"
lex talk nom \"bir konuşma\"
lex exist pres \"var\"
lex talk acc \"Konuşmayı\"
lex chris nom \"Chris\"
lex give prog \"veriyor\"
lex come fut+neg \"gelemiyecek\"
";

    const LDS_DOC: &str = "\
(sent (pred exist (arg theme talk)) (adv four (setting +)) (feat tense pres))
(sent (pred think (arg agent (ent pat (form name))) (arg theme (clause (pred give (arg agent chris) (arg theme (ent talk (form def))))))) (feat tense prog))
";

    const LDS_KB: &str = "type pat agent\ntype chris agent\ntype talk object\ntype four object\n\
                          type exist event\ntype give event\ntype think event\n";

    fn run(doc: &str, kb: &str, policy: &PlacementPolicy) -> Vec<LinearizedSentence> {
        let reps = parse_document(doc).unwrap();
        let kb = KnowledgeBase::load(kb).unwrap();
        let mut model = DiscourseModel::new();
        let mut prev_cf: Option<CfList> = None;
        let mut prev_realized = BTreeSet::new();
        let mut out = Vec::new();
        for rep in &reps {
            let is = plan_sentence(rep, prev_cf.as_ref(), &model, &kb).unwrap();
            out.push(linearize(rep, &is, policy, &prev_realized).unwrap());
            prev_cf = Some(build_cf(rep));
            prev_realized = crate::interlingua::realized_entities(rep, true)
                .into_iter()
                .map(|e| e.concept)
                .collect();
            model.commit_sentence(rep);
        }
        out
    }

    #[test]
    fn talk_text_labels() {
        let sentences = run(TALK_DOC, TALK_KB, &PlacementPolicy::default());
        let labels: Vec<&str> = sentences.iter().map(|s| s.label.as_str()).collect();
        assert_eq!(labels, vec!["AdvSOV", "AdvSV", "OSV", "SV"]);
        // the infelicitous orders are never produced
        assert_ne!(labels[1], "SAdvV");
        assert_ne!(labels[2], "SOV");
        assert_ne!(labels[3], "VS");
    }

    #[test]
    fn talk_text_glosses() {
        let lexicon = Lexicon::parse(TALK_LEX).unwrap();
        let sentences = run(TALK_DOC, TALK_KB, &PlacementPolicy::default());
        let glosses: Vec<String> = sentences
            .iter()
            .map(|s| realize_gloss(s, &lexicon, false).join(" "))
            .collect();
        assert_eq!(
            glosses,
            vec![
                "Bugün Pat Chris'le buluşacak",
                "Dörtde bir konuşma var",
                "Konuşmayı Chris veriyor",
                "Pat gelemiyecek",
            ]
        );
    }

    #[test]
    fn gloss_tokens_for_third_sentence() {
        let lexicon = Lexicon::parse(TALK_LEX).unwrap();
        let sentences = run(TALK_DOC, TALK_KB, &PlacementPolicy::default());
        assert_eq!(
            realize_gloss(&sentences[2], &lexicon, false),
            vec!["Konuşmayı", "Chris", "veriyor"]
        );
        // fallback path: no lexicon at all
        assert_eq!(
            realize_gloss(&sentences[2], &Lexicon::empty(), false),
            vec!["talk#acc", "chris#nom", "give#prog"]
        );
    }

    #[test]
    fn long_distance_scrambling_label_and_gloss() {
        let sentences = run(LDS_DOC, LDS_KB, &PlacementPolicy::default());
        assert_eq!(sentences[0].label, "AdvSV");
        let lds = &sentences[1];
        assert_eq!(lds.label, "O2S1[S2V2]V1");
        assert!(lds.extracted_topic);

        let lexicon = Lexicon::parse(
            "lex four loc \"Dörtde\"\nlex talk nom \"bir konuşma\"\nlex exist pres \"var\"\n\
             lex talk acc \"Konuşmayı\"\nlex pat nom \"Pat\"\nlex chris gen \"Chris'in\"\n\
             lex give verb \"vereceğini\"\nlex think prog \"sanıyor\"\n",
        )
        .unwrap();
        assert_eq!(
            realize_gloss(lds, &lexicon, false),
            vec![
                "Konuşmayı_i",
                "Pat",
                "Chris'in",
                "e_i",
                "vereceğini",
                "sanıyor"
            ]
        );
    }

    #[test]
    fn positional_contract_on_talk_text() {
        for sentence in run(TALK_DOC, TALK_KB, &PlacementPolicy::default()) {
            assert_eq!(sentence.slots[0].zone, Zone::Topic);
            let verb_pos = sentence
                .slots
                .iter()
                .position(|s| s.zone == Zone::Verb)
                .unwrap();
            let focus_positions: Vec<usize> = sentence
                .slots
                .iter()
                .enumerate()
                .filter(|(_, s)| s.zone == Zone::Focus)
                .map(|(i, _)| i)
                .collect();
            if let (Some(&first), Some(&last)) = (focus_positions.first(), focus_positions.last()) {
                assert_eq!(last - first + 1, focus_positions.len(), "focus contiguous");
                assert_eq!(last + 1, verb_pos, "focus immediately preverbal");
            }
            for (i, slot) in sentence.slots.iter().enumerate() {
                if slot.zone == Zone::Postposed {
                    assert!(i > verb_pos);
                }
            }
        }
    }

    #[test]
    fn verb_only_focus_keeps_verb_final() {
        let sentences = run(TALK_DOC, TALK_KB, &PlacementPolicy::default());
        let last = &sentences[3];
        assert_eq!(last.label, "SV");
        assert!(last.verb_focused);
        let lexicon = Lexicon::parse(TALK_LEX).unwrap();
        assert_eq!(
            realize_gloss(last, &lexicon, true),
            vec!["Pat", "gelemiyecek*"]
        );
    }

    #[test]
    fn order_label_verb_only() {
        let sentence = LinearizedSentence {
            slots: vec![Slot {
                constituent: crate::interlingua::realized_constituents(
                    &parse_document("(sent (pred rain))").unwrap()[0],
                )
                .pop()
                .unwrap(),
                zone: Zone::Verb,
            }],
            label: String::new(),
            dropped: vec![],
            gap_before: None,
            extracted_topic: false,
            verb_focused: false,
        };
        assert_eq!(order_label(&sentence), "V");
    }

    #[test]
    fn label_has_one_letter_group_per_slot() {
        for sentence in run(LDS_DOC, LDS_KB, &PlacementPolicy::default()) {
            let stripped: String = sentence
                .label
                .chars()
                .filter(|c| !c.is_ascii_digit() && *c != '[' && *c != ']')
                .collect();
            let groups = stripped.replace("Adv", "A");
            assert_eq!(groups.chars().count(), sentence.slots.len());
        }
    }

    #[test]
    fn gloss_token_count_matches_slots_plus_gap() {
        for sentence in run(LDS_DOC, LDS_KB, &PlacementPolicy::default()) {
            let tokens = realize_gloss(&sentence, &Lexicon::empty(), false);
            let expected = sentence.slots.len() + usize::from(sentence.gap_before.is_some());
            assert_eq!(tokens.len(), expected);
        }
    }

    const TWO_STEP_DOC: &str = "\
(sent (pred see (arg agent pat) (arg theme book)))
(sent (pred read (arg agent pat) (arg theme book)))
";
    const TWO_STEP_KB: &str = "type pat agent\ntype book object\ntype see event\ntype read event\n";

    #[test]
    fn postpose_mode_moves_ground_behind_verb() {
        let policy = PlacementPolicy {
            ground_mode: GroundMode::Postpose,
            drop_enabled: false,
        };
        let sentences = run(TWO_STEP_DOC, TWO_STEP_KB, &policy);
        // second sentence: topic=pat (Cb), focus={read}, ground={book}
        let second = &sentences[1];
        assert_eq!(second.label, "SVO");
        assert_eq!(second.slots.last().unwrap().constituent.concept(), "book");
        assert_eq!(second.slots.last().unwrap().zone, Zone::Postposed);
    }

    #[test]
    fn verb_sole_focus_interposes_ground_before_verb() {
        let sentences = run(TWO_STEP_DOC, TWO_STEP_KB, &PlacementPolicy::default());
        // second sentence: topic=pat, focus={read} (the verb), ground={book};
        // with the verb as sole focus the order is topic + ground + verb
        let second = &sentences[1];
        assert_eq!(second.label, "SOV");
        assert_eq!(second.slots[1].zone, Zone::GroundInterposed);
        assert!(second.verb_focused);
    }

    #[test]
    fn embedded_ground_clause_never_postposes() {
        // second sentence repeats the first; with these types nothing is
        // contrastable except the matrix verb, so the embedded clause is
        // all ground and must stay preverbal even in postpose mode
        let doc = "\
(sent (pred think (arg agent pat) (arg theme (clause (pred sing (arg agent chris))))))
(sent (pred think (arg agent pat) (arg theme (clause (pred sing (arg agent chris))))))
";
        let kb = "type pat object\ntype chris agent\ntype sing event\ntype think object\n";
        let policy = PlacementPolicy {
            ground_mode: GroundMode::Postpose,
            drop_enabled: false,
        };
        let sentences = run(doc, kb, &policy);
        let second = &sentences[1];
        assert_eq!(second.label, "S1[S2V2]V1");
        let verb_pos = second
            .slots
            .iter()
            .position(|s| s.zone == Zone::Verb)
            .unwrap();
        for slot in &second.slots[..verb_pos] {
            assert_ne!(slot.zone, Zone::Postposed);
        }
        assert!(second
            .slots
            .iter()
            .all(|s| s.constituent.depth() == 0 || s.zone != Zone::Postposed));
    }

    #[test]
    fn salience_mode_drops_just_mentioned_ground() {
        let policy = PlacementPolicy {
            ground_mode: GroundMode::Salience,
            drop_enabled: true,
        };
        let sentences = run(TWO_STEP_DOC, TWO_STEP_KB, &policy);
        let second = &sentences[1];
        assert_eq!(second.label, "SV");
        assert_eq!(second.dropped.len(), 1);
        assert_eq!(second.dropped[0].concept(), "book");
        assert!(second
            .slots
            .iter()
            .all(|s| s.constituent.concept() != "book"));
    }

    #[test]
    fn salience_without_drop_postposes_instead() {
        let policy = PlacementPolicy {
            ground_mode: GroundMode::Salience,
            drop_enabled: false,
        };
        let sentences = run(TWO_STEP_DOC, TWO_STEP_KB, &policy);
        let second = &sentences[1];
        assert_eq!(second.label, "SVO");
        assert!(second.dropped.is_empty());
    }

    #[test]
    fn partition_violation_is_rejected() {
        let reps = parse_document("(sent (pred come (arg agent pat)))").unwrap();
        let kb = KnowledgeBase::load("type pat agent\ntype come event\n").unwrap();
        let mut is = plan_sentence(&reps[0], None, &DiscourseModel::new(), &kb).unwrap();
        is.ground.push(is.topic.clone()); // duplicate coverage
        let err = linearize(&reps[0], &is, &PlacementPolicy::default(), &BTreeSet::new());
        assert!(matches!(err, Err(LinearizeError::PartitionViolation(_))));
    }

    #[test]
    fn lexicon_parse_errors() {
        assert!(Lexicon::parse("lex pat nom Pat\n").is_err());
        assert!(Lexicon::parse("pat nom \"Pat\"\n").is_err());
        assert!(Lexicon::parse("# comment\n\nlex pat nom \"Pat\"\n").is_ok());
        let lexicon = Lexicon::parse("lex pat nom \"Pat\"\nlex pat nom \"Patricia\"\n").unwrap();
        assert_eq!(lexicon.get("pat", "nom"), Some("Patricia"));
    }
}
