//! Semantic representation data model and the document parser.
//!
//! A document is a sequence of `(sent ...)` records, one per sentence:
//!
//! ```text
//! doc     := record*
//! record  := "(sent" pred adjunct* feat* ")"
//! pred    := "(pred" SYMBOL arg* ")"
//! arg     := "(arg" ROLE filler ")"
//! filler  := entity | "(clause" pred ")"
//! entity  := SYMBOL | "(ent" SYMBOL ("(form" FORM ")")? ")"
//! adjunct := "(adv" entity ("(setting +)")? ")"
//! feat    := "(feat" SYMBOL SYMBOL ")"
//! ```
//!
//! `;` starts a comment that runs to the end of the line. FORM is one of
//! `name`, `def`, `indef`, `pron`, `zero`; when omitted it defaults to
//! `indef` (it is never inferred from capitalization or anything else).
//!
//! Concepts are atomic symbols: one concept maps onto at most one word, so
//! entity identity throughout the crate is simply the concept symbol.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// How an entity was realized in the source text.
///
/// Referential form matters for accommodation: an entity that has never been
/// mentioned but arrives as a definite NP, a name, or an overt pronoun is
/// being treated by the speaker as already known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SourceForm {
    Name,
    DefiniteNp,
    IndefiniteNp,
    OvertPronoun,
    Zero,
}

impl SourceForm {
    pub fn keyword(self) -> &'static str {
        match self {
            SourceForm::Name => "name",
            SourceForm::DefiniteNp => "def",
            SourceForm::IndefiniteNp => "indef",
            SourceForm::OvertPronoun => "pron",
            SourceForm::Zero => "zero",
        }
    }

    fn from_keyword(s: &str) -> Option<SourceForm> {
        Some(match s {
            "name" => SourceForm::Name,
            "def" => SourceForm::DefiniteNp,
            "indef" => SourceForm::IndefiniteNp,
            "pron" => SourceForm::OvertPronoun,
            "zero" => SourceForm::Zero,
            _ => return None,
        })
    }

    /// Forms that let a hearer accommodate an unmentioned entity as known.
    pub fn signals_hearer_old(self) -> bool {
        matches!(
            self,
            SourceForm::Name | SourceForm::DefiniteNp | SourceForm::OvertPronoun
        )
    }
}

/// One occurrence of a discourse entity in the document.
///
/// `index` is unique per occurrence across the whole document; `concept` is
/// the entity's identity and may repeat.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EntityRef {
    pub concept: String,
    pub form: SourceForm,
    pub index: usize,
}

/// Theta roles, declared in hierarchy order: subjects outrank objects, and
/// the rest of the ranking is fixed here (see [`RoleOrder`] to override it).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ThetaRole {
    Agent,
    Experiencer,
    Goal,
    Comitative,
    Theme,
    Other,
}

pub const ALL_ROLES: [ThetaRole; 6] = [
    ThetaRole::Agent,
    ThetaRole::Experiencer,
    ThetaRole::Goal,
    ThetaRole::Comitative,
    ThetaRole::Theme,
    ThetaRole::Other,
];

impl ThetaRole {
    pub fn keyword(self) -> &'static str {
        match self {
            ThetaRole::Agent => "agent",
            ThetaRole::Experiencer => "experiencer",
            ThetaRole::Goal => "goal",
            ThetaRole::Comitative => "comitative",
            ThetaRole::Theme => "theme",
            ThetaRole::Other => "other",
        }
    }

    fn from_keyword(s: &str) -> Option<ThetaRole> {
        ALL_ROLES.iter().copied().find(|r| r.keyword() == s)
    }
}

/// A theta-role hierarchy. The default is
/// agent > experiencer > goal > comitative > theme > other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoleOrder {
    order: Vec<ThetaRole>,
}

impl Default for RoleOrder {
    fn default() -> Self {
        RoleOrder {
            order: ALL_ROLES.to_vec(),
        }
    }
}

impl RoleOrder {
    pub fn rank(&self, role: ThetaRole) -> usize {
        self.order
            .iter()
            .position(|&r| r == role)
            .unwrap_or(usize::MAX)
    }

    /// Loads a hierarchy from a config file with a single significant line
    /// `hierarchy <role> <role> ...` naming all six roles once each.
    /// `#` comments and blank lines are ignored.
    pub fn parse_config(text: &str) -> Result<RoleOrder, ParseError> {
        let mut order = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let mut words = line.split_whitespace();
            if words.next() != Some("hierarchy") || order.is_some() {
                return Err(ParseError::Syntax {
                    line: lineno + 1,
                    col: 1,
                    msg: "expected a single `hierarchy <roles...>` line".into(),
                });
            }
            let roles: Vec<ThetaRole> = words
                .map(|w| {
                    ThetaRole::from_keyword(w).ok_or(ParseError::UnknownRole {
                        line: lineno + 1,
                        col: 1,
                        role: w.to_string(),
                    })
                })
                .collect::<Result<_, _>>()?;
            let mut seen = roles.clone();
            seen.sort();
            seen.dedup();
            if seen.len() != ALL_ROLES.len() {
                return Err(ParseError::Syntax {
                    line: lineno + 1,
                    col: 1,
                    msg: "hierarchy must list all six theta roles once".into(),
                });
            }
            order = Some(roles);
        }
        order
            .map(|order| RoleOrder { order })
            .ok_or(ParseError::Syntax {
                line: 1,
                col: 1,
                msg: "missing `hierarchy` line".into(),
            })
    }
}

/// An argument filler: either an entity or an embedded clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Filler {
    Entity(EntityRef),
    Clause(Box<SemanticRep>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Argument {
    pub role: ThetaRole,
    pub filler: Filler,
}

/// A predicate modifier. `setting` marks temporal/locative scene-setters
/// (today, at four, in the garden), which are eligible as discourse-new
/// topics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Adjunct {
    pub entity: EntityRef,
    pub setting: bool,
}

/// The interlingua representation of one clause.
///
/// `event` is the predicate concept itself, treated as a discourse entity in
/// its own right. `args` are kept sorted by the theta hierarchy, so
/// `args[0]` is the clause's subject.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemanticRep {
    pub event: EntityRef,
    pub args: Vec<Argument>,
    pub adjuncts: Vec<Adjunct>,
    pub features: BTreeMap<String, String>,
}

impl SemanticRep {
    /// The subject argument: the theta-highest argument of the clause.
    pub fn subject(&self) -> Option<&Argument> {
        self.args.first()
    }
}

// ---------------------------------------------------------------------------
// Constituents
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConstituentKind {
    /// The theta-highest argument of its clause.
    Subject,
    /// Any other argument.
    Object,
    Adjunct {
        setting: bool,
    },
    /// The clause's event, realized as the verb.
    Verb,
}

/// A realized constituent: one entity occurrence plus where it sits in the
/// clause tree.
///
/// `path` records the argument positions of the embedded clauses between the
/// matrix clause and this constituent; an empty path means matrix level. The
/// path is what lets a topic buried in a complement clause be extracted to
/// sentence-initial position (long-distance scrambling).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constituent {
    pub entity: EntityRef,
    pub path: Vec<usize>,
    pub kind: ConstituentKind,
    /// Lexicon lookup key: a case key for nominals (`nom`, `acc`, `gen`,
    /// `com`, `loc`), or the clause's feature string for verbs.
    pub lex_key: String,
}

impl Constituent {
    pub fn concept(&self) -> &str {
        &self.entity.concept
    }

    pub fn depth(&self) -> usize {
        self.path.len()
    }

    pub fn is_verb(&self) -> bool {
        self.kind == ConstituentKind::Verb
    }
}

fn case_key(kind: ConstituentKind, role: ThetaRole, depth: usize) -> String {
    match kind {
        // Embedded subjects surface with genitive marking in Turkish
        // nominalized clauses.
        ConstituentKind::Subject => if depth == 0 { "nom" } else { "gen" }.to_string(),
        ConstituentKind::Object => match role {
            ThetaRole::Comitative => "com".to_string(),
            _ => "acc".to_string(),
        },
        ConstituentKind::Adjunct { .. } => "loc".to_string(),
        ConstituentKind::Verb => unreachable!("verbs use verb_lex_key"),
    }
}

/// Lexicon key for a verb: the clause's feature values joined with `+`
/// (tense first, then polarity, then mood, then anything else), or `verb`
/// when the clause has no features.
pub fn verb_lex_key(features: &BTreeMap<String, String>) -> String {
    let mut values = Vec::new();
    for name in ["tense", "polarity", "mood"] {
        if let Some(v) = features.get(name) {
            values.push(v.clone());
        }
    }
    for (name, v) in features {
        if !matches!(name.as_str(), "tense" | "polarity" | "mood") {
            values.push(v.clone());
        }
    }
    if values.is_empty() {
        "verb".to_string()
    } else {
        values.join("+")
    }
}

pub(crate) fn collect_constituents(rep: &SemanticRep, path: &[usize], out: &mut Vec<Constituent>) {
    for (i, arg) in rep.args.iter().enumerate() {
        if let Filler::Entity(e) = &arg.filler {
            let kind = if i == 0 {
                ConstituentKind::Subject
            } else {
                ConstituentKind::Object
            };
            out.push(Constituent {
                entity: e.clone(),
                path: path.to_vec(),
                kind,
                lex_key: case_key(kind, arg.role, path.len()),
            });
        }
    }
    for adjunct in &rep.adjuncts {
        let kind = ConstituentKind::Adjunct {
            setting: adjunct.setting,
        };
        out.push(Constituent {
            entity: adjunct.entity.clone(),
            path: path.to_vec(),
            kind,
            lex_key: "loc".to_string(),
        });
    }
    for (i, arg) in rep.args.iter().enumerate() {
        if let Filler::Clause(sub) = &arg.filler {
            let mut sub_path = path.to_vec();
            sub_path.push(i);
            collect_constituents(sub, &sub_path, out);
        }
    }
    out.push(Constituent {
        entity: rep.event.clone(),
        path: path.to_vec(),
        kind: ConstituentKind::Verb,
        lex_key: verb_lex_key(&rep.features),
    });
}

/// Every realized constituent of the sentence in ranking order: arguments in
/// theta order, then adjuncts, then the contents of embedded clauses (same
/// scheme, recursively), with each clause's event after that clause's own
/// arguments and adjuncts.
pub fn realized_constituents(rep: &SemanticRep) -> Vec<Constituent> {
    let mut out = Vec::new();
    collect_constituents(rep, &[], &mut out);
    out
}

/// The entities realized in the sentence, in the same ranking order.
/// With `recurse` false, embedded-clause contents are left out.
pub fn realized_entities(rep: &SemanticRep, recurse: bool) -> Vec<EntityRef> {
    realized_constituents(rep)
        .into_iter()
        .filter(|c| recurse || c.depth() == 0)
        .map(|c| c.entity)
        .collect()
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{line}:{col}: {msg}")]
    Syntax {
        line: usize,
        col: usize,
        msg: String,
    },
    #[error("{line}:{col}: unknown theta role `{role}`")]
    UnknownRole {
        line: usize,
        col: usize,
        role: String,
    },
    #[error("{line}:{col}: duplicate role `{role}` within one clause")]
    DuplicateRole {
        line: usize,
        col: usize,
        role: String,
    },
    #[error("{line}:{col}: unknown source form `{form}`")]
    UnknownForm {
        line: usize,
        col: usize,
        form: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    LParen,
    RParen,
    Symbol(String),
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn tokenize(text: &str) -> Vec<Token> {
    let mut tokens = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            '\n' => {
                chars.next();
                line += 1;
                col = 1;
            }
            ';' => {
                while let Some(&c) = chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    chars.next();
                }
            }
            c if c.is_whitespace() => {
                chars.next();
                col += 1;
            }
            '(' => {
                tokens.push(Token {
                    tok: Tok::LParen,
                    line,
                    col,
                });
                chars.next();
                col += 1;
            }
            ')' => {
                tokens.push(Token {
                    tok: Tok::RParen,
                    line,
                    col,
                });
                chars.next();
                col += 1;
            }
            _ => {
                let start_col = col;
                let mut sym = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_whitespace() || c == '(' || c == ')' || c == ';' {
                        break;
                    }
                    sym.push(c);
                    chars.next();
                    col += 1;
                }
                tokens.push(Token {
                    tok: Tok::Symbol(sym),
                    line,
                    col: start_col,
                });
            }
        }
    }
    tokens
}

/// Parses documents, assigning each entity occurrence a fresh index.
#[derive(Default)]
pub struct DocumentParser {
    role_order: RoleOrder,
}

struct Cursor {
    tokens: Vec<Token>,
    pos: usize,
    next_index: usize,
}

impl Cursor {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn here(&self) -> (usize, usize) {
        self.tokens
            .get(self.pos.min(self.tokens.len().saturating_sub(1)))
            .map(|t| (t.line, t.col))
            .unwrap_or((1, 1))
    }

    fn syntax<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        let (line, col) = self.here();
        Err(ParseError::Syntax {
            line,
            col,
            msg: msg.into(),
        })
    }

    fn expect_lparen(&mut self) -> Result<(), ParseError> {
        match self.next() {
            Some(Token {
                tok: Tok::LParen, ..
            }) => Ok(()),
            Some(t) => Err(ParseError::Syntax {
                line: t.line,
                col: t.col,
                msg: "expected `(`".into(),
            }),
            None => self.syntax("unexpected end of input, expected `(`"),
        }
    }

    fn expect_rparen(&mut self) -> Result<(), ParseError> {
        match self.next() {
            Some(Token {
                tok: Tok::RParen, ..
            }) => Ok(()),
            Some(t) => Err(ParseError::Syntax {
                line: t.line,
                col: t.col,
                msg: "expected `)`".into(),
            }),
            None => self.syntax("unexpected end of input, expected `)`"),
        }
    }

    fn expect_symbol(&mut self, what: &str) -> Result<(String, usize, usize), ParseError> {
        match self.next() {
            Some(Token {
                tok: Tok::Symbol(s),
                line,
                col,
            }) => Ok((s, line, col)),
            Some(t) => Err(ParseError::Syntax {
                line: t.line,
                col: t.col,
                msg: format!("expected {what}"),
            }),
            None => self.syntax(format!("unexpected end of input, expected {what}")),
        }
    }

    fn expect_keyword(&mut self, kw: &str) -> Result<(), ParseError> {
        let (s, line, col) = self.expect_symbol(&format!("`{kw}`"))?;
        if s == kw {
            Ok(())
        } else {
            Err(ParseError::Syntax {
                line,
                col,
                msg: format!("expected `{kw}`, found `{s}`"),
            })
        }
    }

    /// True if the next two tokens are `(` followed by the given head symbol.
    fn at_form(&self, head: &str) -> bool {
        matches!(self.peek().map(|t| &t.tok), Some(Tok::LParen))
            && matches!(
                self.tokens.get(self.pos + 1).map(|t| &t.tok),
                Some(Tok::Symbol(s)) if s == head
            )
    }

    fn fresh_index(&mut self) -> usize {
        let i = self.next_index;
        self.next_index += 1;
        i
    }
}

impl DocumentParser {
    pub fn new(role_order: RoleOrder) -> Self {
        DocumentParser { role_order }
    }

    pub fn parse(&self, text: &str) -> Result<Vec<SemanticRep>, ParseError> {
        let mut cur = Cursor {
            tokens: tokenize(text),
            pos: 0,
            next_index: 0,
        };
        let mut reps = Vec::new();
        while cur.peek().is_some() {
            reps.push(self.parse_record(&mut cur)?);
        }
        Ok(reps)
    }

    fn parse_record(&self, cur: &mut Cursor) -> Result<SemanticRep, ParseError> {
        cur.expect_lparen()?;
        cur.expect_keyword("sent")?;
        let mut rep = self.parse_pred(cur)?;
        while cur.at_form("adv") {
            rep.adjuncts.push(self.parse_adjunct(cur)?);
        }
        while cur.at_form("feat") {
            cur.expect_lparen()?;
            cur.expect_keyword("feat")?;
            let (name, _, _) = cur.expect_symbol("a feature name")?;
            let (value, _, _) = cur.expect_symbol("a feature value")?;
            cur.expect_rparen()?;
            rep.features.insert(name, value);
        }
        cur.expect_rparen()?;
        Ok(rep)
    }

    fn parse_pred(&self, cur: &mut Cursor) -> Result<SemanticRep, ParseError> {
        cur.expect_lparen()?;
        cur.expect_keyword("pred")?;
        let (concept, _, _) = cur.expect_symbol("a predicate concept")?;
        let event = EntityRef {
            concept,
            form: SourceForm::IndefiniteNp,
            index: cur.fresh_index(),
        };
        let mut args: Vec<Argument> = Vec::new();
        while cur.at_form("arg") {
            cur.expect_lparen()?;
            cur.expect_keyword("arg")?;
            let (role_word, line, col) = cur.expect_symbol("a theta role")?;
            let role = ThetaRole::from_keyword(&role_word).ok_or(ParseError::UnknownRole {
                line,
                col,
                role: role_word.clone(),
            })?;
            if args.iter().any(|a| a.role == role) {
                return Err(ParseError::DuplicateRole {
                    line,
                    col,
                    role: role_word,
                });
            }
            let filler = self.parse_filler(cur)?;
            cur.expect_rparen()?;
            args.push(Argument { role, filler });
        }
        cur.expect_rparen()?;
        args.sort_by_key(|a| self.role_order.rank(a.role));
        Ok(SemanticRep {
            event,
            args,
            adjuncts: Vec::new(),
            features: BTreeMap::new(),
        })
    }

    fn parse_filler(&self, cur: &mut Cursor) -> Result<Filler, ParseError> {
        if cur.at_form("clause") {
            cur.expect_lparen()?;
            cur.expect_keyword("clause")?;
            let sub = self.parse_pred(cur)?;
            cur.expect_rparen()?;
            Ok(Filler::Clause(Box::new(sub)))
        } else {
            Ok(Filler::Entity(self.parse_entity(cur)?))
        }
    }

    fn parse_entity(&self, cur: &mut Cursor) -> Result<EntityRef, ParseError> {
        if cur.at_form("ent") {
            cur.expect_lparen()?;
            cur.expect_keyword("ent")?;
            let (concept, _, _) = cur.expect_symbol("an entity concept")?;
            let mut form = SourceForm::IndefiniteNp;
            if cur.at_form("form") {
                cur.expect_lparen()?;
                cur.expect_keyword("form")?;
                let (word, line, col) = cur.expect_symbol("a source form")?;
                form = SourceForm::from_keyword(&word).ok_or(ParseError::UnknownForm {
                    line,
                    col,
                    form: word,
                })?;
                cur.expect_rparen()?;
            }
            cur.expect_rparen()?;
            Ok(EntityRef {
                concept,
                form,
                index: cur.fresh_index(),
            })
        } else {
            let (concept, _, _) = cur.expect_symbol("an entity")?;
            Ok(EntityRef {
                concept,
                form: SourceForm::IndefiniteNp,
                index: cur.fresh_index(),
            })
        }
    }

    fn parse_adjunct(&self, cur: &mut Cursor) -> Result<Adjunct, ParseError> {
        cur.expect_lparen()?;
        cur.expect_keyword("adv")?;
        let entity = self.parse_entity(cur)?;
        let mut setting = false;
        if cur.at_form("setting") {
            cur.expect_lparen()?;
            cur.expect_keyword("setting")?;
            cur.expect_keyword("+")?;
            cur.expect_rparen()?;
            setting = true;
        }
        cur.expect_rparen()?;
        Ok(Adjunct { entity, setting })
    }
}

/// Parses a document with the default theta hierarchy.
pub fn parse_document(text: &str) -> Result<Vec<SemanticRep>, ParseError> {
    DocumentParser::default().parse(text)
}

// ---------------------------------------------------------------------------
// Pretty-printing
// ---------------------------------------------------------------------------

fn write_entity(out: &mut String, e: &EntityRef) {
    if e.form == SourceForm::IndefiniteNp {
        out.push_str(&e.concept);
    } else {
        out.push_str("(ent ");
        out.push_str(&e.concept);
        out.push_str(" (form ");
        out.push_str(e.form.keyword());
        out.push_str("))");
    }
}

fn write_pred(out: &mut String, rep: &SemanticRep) {
    out.push_str("(pred ");
    out.push_str(&rep.event.concept);
    for arg in &rep.args {
        out.push_str(" (arg ");
        out.push_str(arg.role.keyword());
        out.push(' ');
        match &arg.filler {
            Filler::Entity(e) => write_entity(out, e),
            Filler::Clause(sub) => {
                out.push_str("(clause ");
                write_pred(out, sub);
                out.push(')');
            }
        }
        out.push(')');
    }
    out.push(')');
}

impl fmt::Display for SemanticRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::from("(sent ");
        write_pred(&mut out, self);
        for adjunct in &self.adjuncts {
            out.push_str(" (adv ");
            write_entity(&mut out, &adjunct.entity);
            if adjunct.setting {
                out.push_str(" (setting +)");
            }
            out.push(')');
        }
        for (name, value) in &self.features {
            out.push_str(&format!(" (feat {name} {value})"));
        }
        out.push(')');
        f.write_str(&out)
    }
}

/// Pretty-prints a document, one record per line. `parse_document` of the
/// result reproduces the input data model exactly.
pub fn print_document(reps: &[SemanticRep]) -> String {
    let mut out = String::new();
    for rep in reps {
        out.push_str(&rep.to_string());
        out.push('\n');
    }
    out
}
