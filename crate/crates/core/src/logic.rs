//! LTL formulas over a finite atom alphabet, with evaluation on
//! ultimately periodic (lasso) words.
//!
//! The grammar understood by [`parse`] uses ASCII tokens: `true`,
//! identifiers, `!`, `&`, `|`, `X` (next), `U` (until), `F` (eventually),
//! `G` (always) and parentheses. Precedence, tightest to loosest:
//! unary operators, then `U` (right-associative), then `&`, then `|`.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LogicError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown atom `{name}` at byte {offset}")]
    UnknownAtom { offset: usize, name: String },
    #[error("invalid atom name `{0}`")]
    InvalidAtomName(String),
    #[error("at most 64 atoms are supported, got {0}")]
    TooManyAtoms(usize),
}

/// Ordered set of atomic proposition names.
///
/// The lexicographic order of the names fixes the bit layout of every
/// [`Symbol`] built over the set, and therefore the symbol encoding used
/// by automata, environments and network inputs alike.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomSet {
    names: Vec<String>,
}

fn valid_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl AtomSet {
    /// Builds an atom set from arbitrary names. Names are sorted and
    /// deduplicated; the sorted order is the symbol bit order.
    pub fn new<I, S>(names: I) -> Result<Self, LogicError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut names: Vec<String> = names.into_iter().map(Into::into).collect();
        for n in &names {
            if !valid_atom_name(n) {
                return Err(LogicError::InvalidAtomName(n.clone()));
            }
        }
        names.sort();
        names.dedup();
        if names.len() > 64 {
            return Err(LogicError::TooManyAtoms(names.len()));
        }
        Ok(AtomSet { names })
    }

    /// Parses a comma-separated list, as accepted by the `--atoms` flag.
    pub fn parse_list(list: &str) -> Result<Self, LogicError> {
        Self::new(list.split(',').map(str::trim).filter(|s| !s.is_empty()))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.names.binary_search_by(|n| n.as_str().cmp(name)).ok()
    }

    pub fn contains(&self, name: &str) -> bool {
        self.index(name).is_some()
    }

    /// The all-bits-clear symbol (no event).
    pub fn empty_symbol(&self) -> Symbol {
        Symbol { bits: 0, width: self.names.len() as u8 }
    }

    /// Builds a symbol from atom names; unknown names are an error.
    pub fn symbol<'a, I: IntoIterator<Item = &'a str>>(&self, atoms: I) -> Result<Symbol, LogicError> {
        let mut sym = self.empty_symbol();
        for name in atoms {
            match self.index(name) {
                Some(i) => sym.bits |= 1 << i,
                None => return Err(LogicError::UnknownAtom { offset: 0, name: name.to_string() }),
            }
        }
        Ok(sym)
    }

    pub fn symbol_from_bits(&self, bits: u64) -> Symbol {
        debug_assert!(self.names.len() == 64 || bits < (1u64 << self.names.len()));
        Symbol { bits, width: self.names.len() as u8 }
    }

    /// Iterates every element of the alphabet `2^Π` in bit order.
    pub fn all_symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        let width = self.names.len() as u8;
        (0u64..(1u64 << self.names.len())).map(move |bits| Symbol { bits, width })
    }

    pub fn format_symbol(&self, sym: Symbol) -> String {
        let mut parts = Vec::new();
        for (i, name) in self.names.iter().enumerate() {
            if sym.contains(i) {
                parts.push(name.as_str());
            }
        }
        format!("{{{}}}", parts.join(","))
    }
}

/// An element of `2^Π`: a bitset over an [`AtomSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol {
    bits: u64,
    width: u8,
}

impl Symbol {
    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn width(&self) -> u8 {
        self.width
    }

    pub fn contains(&self, atom: usize) -> bool {
        self.bits & (1 << atom) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    /// True when every atom set in `self` is also set in `other`.
    pub fn subset_of(&self, other: Symbol) -> bool {
        self.bits & !other.bits == 0
    }
}

/// LTL abstract syntax tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    True,
    Atom(String),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Next(Box<Formula>),
    Until(Box<Formula>, Box<Formula>),
    Eventually(Box<Formula>),
    Always(Box<Formula>),
}

impl Formula {
    pub fn atom(name: &str) -> Formula {
        Formula::Atom(name.to_string())
    }

    pub fn not(f: Formula) -> Formula {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn next(f: Formula) -> Formula {
        Formula::Next(Box::new(f))
    }

    pub fn until(a: Formula, b: Formula) -> Formula {
        Formula::Until(Box::new(a), Box::new(b))
    }

    pub fn eventually(f: Formula) -> Formula {
        Formula::Eventually(Box::new(f))
    }

    pub fn always(f: Formula) -> Formula {
        Formula::Always(Box::new(f))
    }

    /// Atom names occurring in the formula, sorted and deduplicated.
    pub fn atoms(&self) -> Vec<String> {
        fn walk(f: &Formula, out: &mut Vec<String>) {
            match f {
                Formula::True => {}
                Formula::Atom(n) => out.push(n.clone()),
                Formula::Not(a) | Formula::Next(a) | Formula::Eventually(a) | Formula::Always(a) => {
                    walk(a, out)
                }
                Formula::And(a, b) | Formula::Or(a, b) | Formula::Until(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out.sort();
        out.dedup();
        out
    }

    fn precedence(&self) -> u8 {
        match self {
            Formula::Or(..) => 1,
            Formula::And(..) => 2,
            Formula::Until(..) => 3,
            Formula::Not(..) | Formula::Next(..) | Formula::Eventually(..) | Formula::Always(..) => 4,
            Formula::True | Formula::Atom(..) => 5,
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // `left` marks the left operand of a right-associative `U`.
        fn go(node: &Formula, out: &mut fmt::Formatter<'_>, parent: u8, left_of_until: bool) -> fmt::Result {
            let prec = node.precedence();
            let needs_paren = prec < parent || (left_of_until && matches!(node, Formula::Until(..)));
            if needs_paren {
                write!(out, "(")?;
            }
            match node {
                Formula::True => write!(out, "true")?,
                Formula::Atom(n) => write!(out, "{n}")?,
                Formula::Not(a) => {
                    write!(out, "!")?;
                    go(a, out, 4, false)?;
                }
                Formula::Next(a) => {
                    write!(out, "X ")?;
                    go(a, out, 4, false)?;
                }
                Formula::Eventually(a) => {
                    write!(out, "F ")?;
                    go(a, out, 4, false)?;
                }
                Formula::Always(a) => {
                    write!(out, "G ")?;
                    go(a, out, 4, false)?;
                }
                Formula::And(a, b) => {
                    go(a, out, 2, false)?;
                    write!(out, " & ")?;
                    go(b, out, 3, false)?;
                }
                Formula::Or(a, b) => {
                    go(a, out, 1, false)?;
                    write!(out, " | ")?;
                    go(b, out, 2, false)?;
                }
                Formula::Until(a, b) => {
                    go(a, out, 3, true)?;
                    write!(out, " U ")?;
                    go(b, out, 3, false)?;
                }
            }
            if needs_paren {
                write!(out, ")")?;
            }
            Ok(())
        }
        go(self, f, 0, false)
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    True,
    Ident(String),
    Bang,
    Amp,
    Pipe,
    Next,
    Until,
    Eventually,
    Always,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(Token, usize)>, LogicError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let tok = match c {
            '!' => Some(Token::Bang),
            '&' => Some(Token::Amp),
            '|' => Some(Token::Pipe),
            '(' => Some(Token::LParen),
            ')' => Some(Token::RParen),
            _ => None,
        };
        if let Some(tok) = tok {
            tokens.push((tok, i));
            i += 1;
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && ((bytes[i] as char).is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let word = &text[start..i];
            let tok = match word {
                "true" => Token::True,
                "X" => Token::Next,
                "U" => Token::Until,
                "F" => Token::Eventually,
                "G" => Token::Always,
                _ => Token::Ident(word.to_string()),
            };
            tokens.push((tok, start));
            continue;
        }
        return Err(LogicError::Syntax { offset: i, message: format!("unexpected character `{c}`") });
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    atoms: &'a AtomSet,
    end: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map(|(_, o)| *o).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(t, _)| t.clone());
        self.pos += 1;
        t
    }

    fn parse_or(&mut self) -> Result<Formula, LogicError> {
        let mut lhs = self.parse_and()?;
        while self.peek() == Some(&Token::Pipe) {
            self.bump();
            let rhs = self.parse_and()?;
            lhs = Formula::or(lhs, rhs);
        }
        Ok(lhs)
    }

    fn parse_and(&mut self) -> Result<Formula, LogicError> {
        let mut lhs = self.parse_until()?;
        while self.peek() == Some(&Token::Amp) {
            self.bump();
            let rhs = self.parse_until()?;
            lhs = Formula::and(lhs, rhs);
        }
        Ok(lhs)
    }

    fn parse_until(&mut self) -> Result<Formula, LogicError> {
        let lhs = self.parse_unary()?;
        if self.peek() == Some(&Token::Until) {
            self.bump();
            let rhs = self.parse_until()?;
            return Ok(Formula::until(lhs, rhs));
        }
        Ok(lhs)
    }

    fn parse_unary(&mut self) -> Result<Formula, LogicError> {
        match self.peek() {
            Some(Token::Bang) => {
                self.bump();
                Ok(Formula::not(self.parse_unary()?))
            }
            Some(Token::Next) => {
                self.bump();
                Ok(Formula::next(self.parse_unary()?))
            }
            Some(Token::Eventually) => {
                self.bump();
                Ok(Formula::eventually(self.parse_unary()?))
            }
            Some(Token::Always) => {
                self.bump();
                Ok(Formula::always(self.parse_unary()?))
            }
            _ => self.parse_primary(),
        }
    }

    fn parse_primary(&mut self) -> Result<Formula, LogicError> {
        let offset = self.offset();
        match self.bump() {
            Some(Token::True) => Ok(Formula::True),
            Some(Token::Ident(name)) => {
                if self.atoms.contains(&name) {
                    Ok(Formula::Atom(name))
                } else {
                    Err(LogicError::UnknownAtom { offset, name })
                }
            }
            Some(Token::LParen) => {
                let inner = self.parse_or()?;
                match self.bump() {
                    Some(Token::RParen) => Ok(inner),
                    _ => Err(LogicError::Syntax { offset: self.offset(), message: "expected `)`".into() }),
                }
            }
            other => Err(LogicError::Syntax {
                offset,
                message: match other {
                    Some(t) => format!("unexpected token {t:?}"),
                    None => "unexpected end of input".into(),
                },
            }),
        }
    }
}

/// Parses `text` into a [`Formula`]; atom names must come from `atoms`.
pub fn parse(text: &str, atoms: &AtomSet) -> Result<Formula, LogicError> {
    let tokens = tokenize(text)?;
    let mut p = Parser { tokens, pos: 0, atoms, end: text.len() };
    let f = p.parse_or()?;
    if p.pos != p.tokens.len() {
        return Err(LogicError::Syntax { offset: p.offset(), message: "trailing input".into() });
    }
    Ok(f)
}

/// Rewrites `F` and `G` into the core connectives:
/// `F f == true U f` and `G f == !(true U !f)`.
pub fn expand_derived(f: &Formula) -> Formula {
    match f {
        Formula::True => Formula::True,
        Formula::Atom(n) => Formula::Atom(n.clone()),
        Formula::Not(a) => Formula::not(expand_derived(a)),
        Formula::And(a, b) => Formula::and(expand_derived(a), expand_derived(b)),
        Formula::Or(a, b) => Formula::or(expand_derived(a), expand_derived(b)),
        Formula::Next(a) => Formula::next(expand_derived(a)),
        Formula::Until(a, b) => Formula::until(expand_derived(a), expand_derived(b)),
        Formula::Eventually(a) => Formula::until(Formula::True, expand_derived(a)),
        Formula::Always(a) => Formula::not(Formula::until(Formula::True, Formula::not(expand_derived(a)))),
    }
}

/// An ultimately periodic infinite word `prefix · cycle^ω`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LassoWord {
    pub atoms: AtomSet,
    pub prefix: Vec<Symbol>,
    pub cycle: Vec<Symbol>,
}

impl LassoWord {
    pub fn new(atoms: AtomSet, prefix: Vec<Symbol>, cycle: Vec<Symbol>) -> LassoWord {
        assert!(!cycle.is_empty(), "lasso cycle must be non-empty");
        LassoWord { atoms, prefix, cycle }
    }

    /// Number of canonical positions, `|prefix| + |cycle|`.
    pub fn period_len(&self) -> usize {
        self.prefix.len() + self.cycle.len()
    }

    /// Maps an arbitrary position into `[0, |prefix| + |cycle|)`.
    pub fn canonical(&self, pos: usize) -> usize {
        if pos < self.prefix.len() {
            pos
        } else {
            self.prefix.len() + (pos - self.prefix.len()) % self.cycle.len()
        }
    }

    pub fn next_pos(&self, pos: usize) -> usize {
        self.canonical(pos + 1)
    }

    pub fn symbol_at(&self, pos: usize) -> Symbol {
        let p = self.canonical(pos);
        if p < self.prefix.len() {
            self.prefix[p]
        } else {
            self.cycle[p - self.prefix.len()]
        }
    }

    /// Rotates the cycle left by `r`, extending the prefix with the
    /// rotated-out symbols. Denotes the same infinite word.
    pub fn rotate_cycle(&self, r: usize) -> LassoWord {
        let r = r % self.cycle.len();
        let mut prefix = self.prefix.clone();
        prefix.extend_from_slice(&self.cycle[..r]);
        let mut cycle = self.cycle[r..].to_vec();
        cycle.extend_from_slice(&self.cycle[..r]);
        LassoWord { atoms: self.atoms.clone(), prefix, cycle }
    }
}

struct Evaluator<'a> {
    word: &'a LassoWord,
    ids: HashMap<*const Formula, usize>,
    memo: HashMap<(usize, usize), bool>,
}

impl<'a> Evaluator<'a> {
    fn new(f: &Formula, word: &'a LassoWord) -> Self {
        fn index(f: &Formula, ids: &mut HashMap<*const Formula, usize>) {
            let next = ids.len();
            ids.insert(f as *const Formula, next);
            match f {
                Formula::True | Formula::Atom(_) => {}
                Formula::Not(a) | Formula::Next(a) | Formula::Eventually(a) | Formula::Always(a) => {
                    index(a, ids)
                }
                Formula::And(a, b) | Formula::Or(a, b) | Formula::Until(a, b) => {
                    index(a, ids);
                    index(b, ids);
                }
            }
        }
        let mut ids = HashMap::new();
        index(f, &mut ids);
        Evaluator { word, ids, memo: HashMap::new() }
    }

    fn eval(&mut self, f: &Formula, pos: usize) -> bool {
        let pos = self.word.canonical(pos);
        let id = self.ids[&(f as *const Formula)];
        if let Some(&v) = self.memo.get(&(id, pos)) {
            return v;
        }
        let value = match f {
            Formula::True => true,
            Formula::Atom(name) => match self.word.atoms.index(name) {
                Some(i) => self.word.symbol_at(pos).contains(i),
                None => false,
            },
            Formula::Not(a) => !self.eval(a, pos),
            Formula::And(a, b) => self.eval(a, pos) && self.eval(b, pos),
            Formula::Or(a, b) => self.eval(a, pos) || self.eval(b, pos),
            Formula::Next(a) => {
                let next = self.word.next_pos(pos);
                self.eval(a, next)
            }
            Formula::Until(a, b) => self.scan_until(a, b, pos),
            Formula::Eventually(a) => self.scan_until(&Formula::True, a, pos),
            Formula::Always(a) => self.scan_always(a, pos),
        };
        self.memo.insert((id, pos), value);
        value
    }

    /// Walks forward until a canonical position repeats. Returns true as
    /// soon as `goal` holds, false when `hold` fails or the orbit closes.
    fn scan_until(&mut self, hold: &Formula, goal: &Formula, start: usize) -> bool {
        let mut seen = vec![false; self.word.period_len()];
        let mut cur = start;
        loop {
            if self.eval(goal, cur) {
                return true;
            }
            if !matches!(hold, Formula::True) && !self.eval(hold, cur) {
                return false;
            }
            if seen[cur] {
                return false;
            }
            seen[cur] = true;
            cur = self.word.next_pos(cur);
        }
    }

    fn scan_always(&mut self, body: &Formula, start: usize) -> bool {
        let mut seen = vec![false; self.word.period_len()];
        let mut cur = start;
        loop {
            if !self.eval(body, cur) {
                return false;
            }
            if seen[cur] {
                return true;
            }
            seen[cur] = true;
            cur = self.word.next_pos(cur);
        }
    }
}

/// Decides `prefix · cycle^ω ⊨ f`.
///
/// Positions are canonicalized into `[0, |prefix| + |cycle|)` and results
/// memoized per (subformula, position), so evaluation terminates on every
/// formula. Atoms outside the word's alphabet evaluate to false.
pub fn eval_lasso(f: &Formula, w: &LassoWord) -> bool {
    Evaluator::new(f, w).eval(f, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn atoms_abc() -> AtomSet {
        AtomSet::new(["a", "b", "c"]).unwrap()
    }

    fn sym(atoms: &AtomSet, names: &[&str]) -> Symbol {
        atoms.symbol(names.iter().copied()).unwrap()
    }

    /// Definitional bounded-enumeration oracle, independent of the
    /// memoized evaluator. Temporal operators scan one full cycle past
    /// the latest position they are asked about, which covers every
    /// canonical position of an ultimately periodic word.
    fn oracle_eval(f: &Formula, w: &LassoWord, pos: usize) -> bool {
        let horizon = |p: usize| p.max(w.prefix.len()) + 2 * w.cycle.len();
        match f {
            Formula::True => true,
            Formula::Atom(name) => match w.atoms.index(name) {
                Some(i) => w.symbol_at(pos).contains(i),
                None => false,
            },
            Formula::Not(a) => !oracle_eval(a, w, pos),
            Formula::And(a, b) => oracle_eval(a, w, pos) && oracle_eval(b, w, pos),
            Formula::Or(a, b) => oracle_eval(a, w, pos) || oracle_eval(b, w, pos),
            Formula::Next(a) => oracle_eval(a, w, pos + 1),
            Formula::Until(a, b) => {
                for t in pos..=horizon(pos) {
                    if oracle_eval(b, w, t) {
                        return (pos..t).all(|u| oracle_eval(a, w, u));
                    }
                }
                false
            }
            Formula::Eventually(a) => (pos..=horizon(pos)).any(|t| oracle_eval(a, w, t)),
            Formula::Always(a) => (pos..=horizon(pos)).all(|t| oracle_eval(a, w, t)),
        }
    }

    #[test]
    fn parses_grid_task_one() {
        let atoms = atoms_abc();
        let f = parse("(G F a | G F b) & G !c", &atoms).unwrap();
        let expected = Formula::and(
            Formula::or(
                Formula::always(Formula::eventually(Formula::atom("a"))),
                Formula::always(Formula::eventually(Formula::atom("b"))),
            ),
            Formula::always(Formula::not(Formula::atom("c"))),
        );
        assert_eq!(f, expected);
    }

    #[test]
    fn parses_grid_task_two() {
        let atoms = atoms_abc();
        let f = parse("G F (a & F b) & G !c", &atoms).unwrap();
        let expected = Formula::and(
            Formula::always(Formula::eventually(Formula::and(
                Formula::atom("a"),
                Formula::eventually(Formula::atom("b")),
            ))),
            Formula::always(Formula::not(Formula::atom("c"))),
        );
        assert_eq!(f, expected);
    }

    #[test]
    fn parses_true_literal() {
        let atoms = atoms_abc();
        assert_eq!(parse("true", &atoms).unwrap(), Formula::True);
    }

    #[test]
    fn until_is_right_associative() {
        let atoms = atoms_abc();
        let f = parse("a U b U c", &atoms).unwrap();
        let expected = Formula::until(
            Formula::atom("a"),
            Formula::until(Formula::atom("b"), Formula::atom("c")),
        );
        assert_eq!(f, expected);
    }

    #[test]
    fn syntax_error_carries_offset() {
        let atoms = atoms_abc();
        match parse("a U", &atoms) {
            Err(LogicError::Syntax { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn unknown_atom_rejected() {
        let atoms = atoms_abc();
        match parse("a & d", &atoms) {
            Err(LogicError::UnknownAtom { offset, name }) => {
                assert_eq!(offset, 4);
                assert_eq!(name, "d");
            }
            other => panic!("expected unknown atom, got {other:?}"),
        }
    }

    #[test]
    fn expand_derived_rewrites_eventually_and_always() {
        let atoms = atoms_abc();
        let f = parse("F a", &atoms).unwrap();
        assert_eq!(expand_derived(&f), Formula::until(Formula::True, Formula::atom("a")));

        let g = parse("G a", &atoms).unwrap();
        assert_eq!(
            expand_derived(&g),
            Formula::not(Formula::until(Formula::True, Formula::not(Formula::atom("a")))),
        );

        let a = Formula::atom("a");
        assert_eq!(expand_derived(&a), a);
    }

    #[test]
    fn eval_simple_cases() {
        let atoms = atoms_abc();
        let w = LassoWord::new(atoms.clone(), vec![atoms.empty_symbol()], vec![sym(&atoms, &["a"])]);
        assert!(eval_lasso(&parse("F a", &atoms).unwrap(), &w));

        let w2 = LassoWord::new(atoms.clone(), vec![sym(&atoms, &["c"])], vec![atoms.empty_symbol()]);
        assert!(!eval_lasso(&parse("G !c", &atoms).unwrap(), &w2));
    }

    #[test]
    fn eval_ordered_surveillance_cycle() {
        // Oracle-checked and frozen: the cycle a,∅,b,∅ satisfies
        // G F (a & F b) because both events recur.
        let atoms = atoms_abc();
        let f = parse("G F (a & F b)", &atoms).unwrap();
        let w = LassoWord::new(
            atoms.clone(),
            vec![],
            vec![sym(&atoms, &["a"]), atoms.empty_symbol(), sym(&atoms, &["b"]), atoms.empty_symbol()],
        );
        assert!(oracle_eval(&f, &w, 0));
        assert!(eval_lasso(&f, &w));
    }

    fn arb_formula(atoms: &'static [&'static str], depth: u32) -> impl Strategy<Value = Formula> {
        let leaf = prop_oneof![
            Just(Formula::True),
            proptest::sample::select(atoms).prop_map(Formula::atom),
        ];
        leaf.prop_recursive(depth, 32, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(Formula::not),
                inner.clone().prop_map(Formula::next),
                inner.clone().prop_map(Formula::eventually),
                inner.clone().prop_map(Formula::always),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
                (inner.clone(), inner).prop_map(|(a, b)| Formula::until(a, b)),
            ]
        })
    }

    fn arb_word() -> impl Strategy<Value = LassoWord> {
        (
            proptest::collection::vec(0u64..8, 0..6),
            proptest::collection::vec(0u64..8, 1..8),
        )
            .prop_map(|(prefix, cycle)| {
                let atoms = atoms_abc();
                let prefix = prefix.into_iter().map(|b| atoms.symbol_from_bits(b)).collect();
                let cycle = cycle.into_iter().map(|b| atoms.symbol_from_bits(b)).collect();
                LassoWord::new(atoms, prefix, cycle)
            })
    }

    proptest! {
        #[test]
        fn printer_parser_round_trip(f in arb_formula(&["a", "b", "c"], 5)) {
            let atoms = atoms_abc();
            let printed = f.to_string();
            let reparsed = parse(&printed, &atoms).unwrap();
            prop_assert_eq!(reparsed, f);
        }

        #[test]
        fn expand_derived_preserves_semantics(
            f in arb_formula(&["a", "b", "c"], 5),
            w in arb_word(),
        ) {
            prop_assert_eq!(eval_lasso(&expand_derived(&f), &w), eval_lasso(&f, &w));
        }

        #[test]
        fn eval_matches_bounded_oracle(
            f in arb_formula(&["a", "b", "c"], 4),
            w in arb_word(),
        ) {
            prop_assert_eq!(eval_lasso(&f, &w), oracle_eval(&f, &w, 0));
        }

        #[test]
        fn eval_invariant_under_cycle_rotation(
            f in arb_formula(&["a", "b", "c"], 4),
            w in arb_word(),
            r in 0usize..8,
        ) {
            prop_assert_eq!(eval_lasso(&f, &w.rotate_cycle(r)), eval_lasso(&f, &w));
        }

        #[test]
        fn until_matches_direct_definition(
            a in arb_formula(&["a", "b", "c"], 3),
            b in arb_formula(&["a", "b", "c"], 3),
            w in arb_word(),
        ) {
            let f = Formula::until(a.clone(), b.clone());
            let bound = w.prefix.len() + 2 * w.cycle.len();
            let direct = (0..=bound).any(|t| {
                eval_at(&b, &w, t) && (0..t).all(|u| eval_at(&a, &w, u))
            });
            prop_assert_eq!(eval_lasso(&f, &w), direct);
        }
    }

    /// Evaluates a formula at a shifted position by rotating the word.
    fn eval_at(f: &Formula, w: &LassoWord, t: usize) -> bool {
        let mut shifted = w.clone();
        for _ in 0..t {
            // drop the first symbol: advance prefix, or rotate cycle
            if shifted.prefix.is_empty() {
                shifted = LassoWord::new(shifted.atoms.clone(), vec![], {
                    let mut c = shifted.cycle[1..].to_vec();
                    c.push(shifted.cycle[0]);
                    c
                });
            } else {
                shifted = LassoWord::new(
                    shifted.atoms.clone(),
                    shifted.prefix[1..].to_vec(),
                    shifted.cycle.clone(),
                );
            }
        }
        eval_lasso(f, &shifted)
    }
}
