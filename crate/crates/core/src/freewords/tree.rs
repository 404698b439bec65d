//! Parsing trees of quasigroup words and their text form.
//!
//! Grammar (whitespace ignored):
//!
//! ```text
//! word := generator | "(" word op word ")"
//! op   := "*" | "/" | "\" | "@" | "//" | "\\"
//! generator := "a" digits | letter
//! ```
//!
//! `*`, `/` and `\` are the basic operations. `@`, `//` and `\\` are the
//! opposites of `*`, `/` and `\` and only occur in full words. Single letters
//! `a..z` denote generators 1..26; `a<i>` denotes generator `i`.

use std::fmt;
use std::sync::Arc;

use super::ops::OpSymbol;
use crate::error::{Error, Result};

/// A leaf-labeled, node-annotated binary tree.
///
/// Basic words use only the three basic operations; full words may use all
/// six. Both share this representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WordTree {
    /// Generator index, starting at 1.
    Leaf(u32),
    Node(OpSymbol, Arc<WordTree>, Arc<WordTree>),
}

/// A word over all six operations.
pub type FullWordTree = WordTree;

impl WordTree {
    pub fn leaf(generator: u32) -> Self {
        WordTree::Leaf(generator)
    }

    pub fn node(op: OpSymbol, left: WordTree, right: WordTree) -> Self {
        WordTree::Node(op, Arc::new(left), Arc::new(right))
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            WordTree::Leaf(_) => 1,
            WordTree::Node(_, l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    pub fn node_count(&self) -> usize {
        match self {
            WordTree::Leaf(_) => 0,
            WordTree::Node(_, l, r) => 1 + l.node_count() + r.node_count(),
        }
    }

    /// True when no node carries an opposite operation.
    pub fn is_basic(&self) -> bool {
        match self {
            WordTree::Leaf(_) => true,
            WordTree::Node(op, l, r) => op.is_basic() && l.is_basic() && r.is_basic(),
        }
    }

    fn max_generator(&self) -> u32 {
        match self {
            WordTree::Leaf(g) => *g,
            WordTree::Node(_, l, r) => l.max_generator().max(r.max_generator()),
        }
    }

    fn write_into(&self, out: &mut String, letters: bool) {
        match self {
            WordTree::Leaf(g) => {
                if letters {
                    out.push((b'a' + (*g - 1) as u8) as char);
                } else {
                    out.push('a');
                    out.push_str(&g.to_string());
                }
            }
            WordTree::Node(op, l, r) => {
                out.push('(');
                l.write_into(out, letters);
                out.push_str(op.token());
                r.write_into(out, letters);
                out.push(')');
            }
        }
    }
}

impl fmt::Display for WordTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_word(self))
    }
}

/// Canonical text: single letters when every generator is at most 26.
pub fn format_word(w: &WordTree) -> String {
    let mut out = String::new();
    w.write_into(&mut out, w.max_generator() <= 26);
    out
}

/// Parses a basic word over `s` generators.
pub fn parse_word(text: &str, s: u32) -> Result<WordTree> {
    let mut p = Parser::new(text, s, false);
    let w = p.word()?;
    p.finish()?;
    Ok(w)
}

/// Parses a full word (all six operations) over `s` generators.
pub fn parse_full_word(text: &str, s: u32) -> Result<FullWordTree> {
    let mut p = Parser::new(text, s, true);
    let w = p.word()?;
    p.finish()?;
    Ok(w)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    s: u32,
    full: bool,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, s: u32, full: bool) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
            s,
            full,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            position: self.pos,
            message: message.into(),
        }
    }

    fn describe_here(&mut self) -> String {
        match self.peek() {
            None => "end of input".to_string(),
            Some(c) => format!("`{}`", c as char),
        }
    }

    fn word(&mut self) -> Result<WordTree> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let left = self.word()?;
                let op = self.op()?;
                let right = self.word()?;
                if self.peek() != Some(b')') {
                    let found = self.describe_here();
                    return Err(self.error(format!("expected `)`, found {found}")));
                }
                self.pos += 1;
                Ok(WordTree::node(op, left, right))
            }
            Some(c) if c.is_ascii_lowercase() => self.generator(),
            _ => {
                let found = self.describe_here();
                Err(self.error(format!("expected a generator or `(`, found {found}")))
            }
        }
    }

    fn generator(&mut self) -> Result<WordTree> {
        let start = self.pos;
        let letter = self.src[self.pos];
        self.pos += 1;
        let digits_start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let name = String::from_utf8_lossy(&self.src[start..self.pos]).into_owned();
        let index = if self.pos > digits_start {
            if letter != b'a' {
                return Err(Error::UnknownGenerator {
                    name,
                    position: start,
                });
            }
            name[1..].parse::<u32>().unwrap_or(0)
        } else {
            (letter - b'a') as u32 + 1
        };
        if index == 0 || index > self.s {
            return Err(Error::UnknownGenerator {
                name,
                position: start,
            });
        }
        Ok(WordTree::Leaf(index))
    }

    fn op(&mut self) -> Result<OpSymbol> {
        let at = self.pos;
        let op = match self.peek() {
            Some(b'*') => {
                self.pos += 1;
                OpSymbol::Mul
            }
            Some(b'@') => {
                self.pos += 1;
                OpSymbol::OppMul
            }
            Some(c @ (b'/' | b'\\')) => {
                self.pos += 1;
                let doubled = self.src.get(self.pos) == Some(&c);
                if doubled {
                    self.pos += 1;
                }
                match (c, doubled) {
                    (b'/', false) => OpSymbol::RightDiv,
                    (b'/', true) => OpSymbol::OppRightDiv,
                    (_, false) => OpSymbol::LeftDiv,
                    (_, true) => OpSymbol::OppLeftDiv,
                }
            }
            _ => {
                let found = self.describe_here();
                return Err(self.error(format!("expected an operator, found {found}")));
            }
        };
        if !self.full && !op.is_basic() {
            return Err(Error::Syntax {
                position: at,
                message: format!("opposite operator `{}` in a basic word", op.token()),
            });
        }
        Ok(op)
    }

    fn finish(&mut self) -> Result<()> {
        if self.peek().is_some() {
            let found = self.describe_here();
            return Err(self.error(format!("unexpected trailing input {found}")));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn round_trip_text() {
        for text in ["((a*b)/c)", "a", "(a*(a\\b))", "((a/b)\\a)"] {
            assert_eq!(format_word(&parse_word(text, 3).unwrap()), text);
        }
        let full = "(c//(b@a))";
        assert_eq!(format_word(&parse_full_word(full, 3).unwrap()), full);
        assert_eq!(format_word(&parse_full_word("(a\\\\b)", 2).unwrap()), "(a\\\\b)");
    }

    #[test]
    fn indexed_generators() {
        let w = parse_word("(a1 * a30)", 30).unwrap();
        assert_eq!(w, WordTree::node(OpSymbol::Mul, WordTree::Leaf(1), WordTree::Leaf(30)));
        assert_eq!(format_word(&w), "(a1*a30)");
        assert_eq!(parse_word("(a1*a2)", 2).unwrap(), parse_word("(a*b)", 2).unwrap());
    }

    #[test]
    fn syntax_errors() {
        let err = parse_word("(a*b", 2).unwrap_err();
        match err {
            Error::Syntax { position, message } => {
                assert_eq!(position, 4);
                assert!(message.contains("end of input"), "{message}");
            }
            other => panic!("{other}"),
        }
        assert!(matches!(parse_word("a*b", 2), Err(Error::Syntax { position: 1, .. })));
        assert!(matches!(parse_word("(a b)", 2), Err(Error::Syntax { .. })));
        assert!(matches!(parse_word("", 2), Err(Error::Syntax { position: 0, .. })));
        assert!(matches!(parse_word("(a@b)", 2), Err(Error::Syntax { position: 2, .. })));
        assert!(matches!(
            parse_word("(a*c)", 2),
            Err(Error::UnknownGenerator { position: 3, .. })
        ));
        assert!(matches!(parse_word("a0", 2), Err(Error::UnknownGenerator { .. })));
        assert!(matches!(parse_word("b1", 2), Err(Error::UnknownGenerator { .. })));
    }

    pub(crate) fn arb_tree(s: u32, full: bool) -> impl Strategy<Value = WordTree> {
        let leaf = (1..=s).prop_map(WordTree::Leaf);
        let ops: Vec<OpSymbol> = if full {
            OpSymbol::ALL.to_vec()
        } else {
            OpSymbol::BASIC.to_vec()
        };
        leaf.prop_recursive(5, 24, 2, move |inner| {
            (prop::sample::select(ops.clone()), inner.clone(), inner)
                .prop_map(|(op, l, r)| WordTree::node(op, l, r))
        })
    }

    proptest! {
        #[test]
        fn parse_format_identity(w in arb_tree(30, true)) {
            let text = format_word(&w);
            prop_assert_eq!(parse_full_word(&text, 30).unwrap(), w.clone());
            prop_assert_eq!(w.node_count() + 1, w.leaf_count());
        }

        #[test]
        fn basic_words_parse_as_basic(w in arb_tree(4, false)) {
            prop_assert!(w.is_basic());
            prop_assert_eq!(parse_word(&format_word(&w), 4).unwrap(), w);
        }
    }
}
