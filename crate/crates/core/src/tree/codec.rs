//! Canonical text form of trees.
//!
//! ```text
//! tree  ::= label | "(" child+ ")" level?
//! fan   ::= "<" child+ ">" level?      (trunk-direction child first)
//! level ::= "@" k
//! ```
//! Children are separated by whitespace, `*` is the distinguished leaf.

use super::{AnyTree, BaseKind, Fan, LeveledTree, Node, PlanarTree, STAR};
use crate::error::{Error, Result};

enum Raw {
    Leaf { label: Option<u32>, pos: usize },
    Internal { children: Vec<Raw>, level: Option<u32> },
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse { pos: self.pos, msg: msg.into() })
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

    fn number(&mut self) -> Result<u32> {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a decimal number");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("digits are ascii");
        text.parse().or_else(|_| self.err(format!("number {text} is out of range")))
    }

    fn node(&mut self, is_root: bool) -> Result<(Raw, bool)> {
        let pos = self.pos;
        match self.peek() {
            Some(b'*') => {
                self.pos += 1;
                Ok((Raw::Leaf { label: None, pos }, false))
            }
            Some(c) if c.is_ascii_digit() => Ok((Raw::Leaf { label: Some(self.number()?), pos }, false)),
            Some(open @ (b'(' | b'<')) => {
                if open == b'<' && !is_root {
                    return self.err("'<' is only allowed at the root of a fan");
                }
                let close = if open == b'(' { b')' } else { b'>' };
                self.pos += 1;
                let mut children = Vec::new();
                loop {
                    match self.peek() {
                        Some(c) if c == close => {
                            self.pos += 1;
                            break;
                        }
                        None => return self.err(format!("unterminated '{}'", open as char)),
                        _ => children.push(self.node(false)?.0),
                    }
                }
                if children.is_empty() {
                    return self.err("empty vertex");
                }
                let level = if self.src.get(self.pos) == Some(&b'@') {
                    self.pos += 1;
                    Some(self.number()?)
                } else {
                    None
                };
                Ok((Raw::Internal { children, level }, open == b'<'))
            }
            Some(c) => self.err(format!("unexpected character '{}'", c as char)),
            None => self.err("unexpected end of input"),
        }
    }
}

fn leveled_flags(raw: &Raw, out: &mut Vec<bool>) {
    if let Raw::Internal { children, level, .. } = raw {
        out.push(level.is_some());
        children.iter().for_each(|c| leveled_flags(c, out));
    }
}

fn convert(raw: &Raw, fan: bool) -> Result<Node<u32>> {
    match raw {
        Raw::Leaf { label: None, pos } if !fan => {
            Err(Error::Parse { pos: *pos, msg: "'*' only appears in fans".into() })
        }
        Raw::Leaf { label: None, .. } => Ok(Node::Leaf(STAR)),
        Raw::Leaf { label: Some(0), pos } if fan => {
            Err(Error::Parse { pos: *pos, msg: "fan leaves are labelled *,1,..,n".into() })
        }
        Raw::Leaf { label: Some(l), .. } => Ok(Node::Leaf(*l)),
        Raw::Internal { children, level, .. } => Ok(Node::Internal(
            level.unwrap_or(0),
            children.iter().map(|c| convert(c, fan)).collect::<Result<_>>()?,
        )),
    }
}

/// Parse any tree species from its text form.
pub fn parse(text: &str) -> Result<AnyTree> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let (raw, fan) = p.node(true)?;
    if p.peek().is_some() {
        return p.err("trailing input");
    }
    if let Raw::Leaf { pos, .. } = raw {
        return Err(Error::Parse { pos, msg: "a tree must have an internal root".into() });
    }
    let mut flags = Vec::new();
    leveled_flags(&raw, &mut flags);
    let leveled = flags[0];
    if flags.iter().any(|&f| f != leveled) {
        return Err(Error::invariant("either every internal vertex carries a level or none does"));
    }
    let node = convert(&raw, fan)?;
    Ok(match (fan, leveled) {
        (false, false) => AnyTree::Psi(PlanarTree::new(node.strip())?),
        (true, false) => AnyTree::Fan(Fan::new(node.strip())?),
        (false, true) => AnyTree::Leveled(LeveledTree::new(BaseKind::Psi, node)?),
        (true, true) => AnyTree::Leveled(LeveledTree::new(BaseKind::Fan, node)?),
    })
}

pub(crate) fn format_node<A>(node: &Node<A>, fan: bool, level: &dyn Fn(&A) -> Option<u32>) -> String {
    fn go<A>(node: &Node<A>, fan: bool, root: bool, level: &dyn Fn(&A) -> Option<u32>, out: &mut String) {
        match node {
            Node::Leaf(l) if fan && *l == STAR => out.push('*'),
            Node::Leaf(l) => out.push_str(&l.to_string()),
            Node::Internal(a, c) => {
                let (open, close) = if fan && root { ('<', '>') } else { ('(', ')') };
                out.push(open);
                for (i, ch) in c.iter().enumerate() {
                    if i > 0 {
                        out.push(' ');
                    }
                    go(ch, fan, false, level, out);
                }
                out.push(close);
                if let Some(k) = level(a) {
                    out.push('@');
                    out.push_str(&k.to_string());
                }
            }
        }
    }
    let mut out = String::new();
    go(node, fan, true, level, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_examples() {
        let t = parse("((0 1) 2)").unwrap();
        assert!(matches!(t, AnyTree::Psi(_)));
        assert_eq!(t.to_string(), "((0 1) 2)");
        let f = parse("<* 1 2>").unwrap();
        assert!(matches!(f, AnyTree::Fan(_)));
        let l = parse("((0 1)@2 2)@1").unwrap();
        assert!(matches!(l, AnyTree::Leveled(ref t) if t.levels() == vec![1, 2]));
    }

    #[test]
    fn whitespace_is_canonicalised() {
        assert_eq!(parse("  ( (0   1)2 ) ").unwrap().to_string(), "((0 1) 2)");
    }

    #[test]
    fn rejections() {
        assert!(matches!(parse("((0 1)"), Err(Error::Parse { .. })));
        assert!(matches!(parse("((0) 1)"), Err(Error::Invariant(_))));
        assert!(matches!(parse("(1 0)"), Err(Error::Invariant(_))));
        assert!(matches!(parse("(0 * 1)"), Err(Error::Parse { .. })));
        assert!(matches!(parse("<1 *>"), Err(Error::Invariant(_))));
        assert!(matches!(parse("((0 1)@1 2)@1"), Err(Error::Invariant(_))));
        assert!(matches!(parse("((0 1)@2 2)"), Err(Error::Invariant(_))));
        assert!(matches!(parse("((0 1)@3 2)@1"), Err(Error::Invariant(_))));
        assert!(matches!(parse("(0 1) 2"), Err(Error::Parse { .. })));
    }
}
