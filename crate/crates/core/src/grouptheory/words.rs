//! Group words such as `s^6`, `(s*t)^5`, `[t, s^2]^2`.
//!
//! ```text
//! word := term ('*'? term)*
//! term := atom ('^' '-'? int)?
//! atom := letter | '(' word ')' | '[' word ',' word ']'
//! ```
//! `[a, b]` is `a⁻¹·b⁻¹·a·b`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::GroupElement;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Word {
    Letter(char),
    Product(Vec<Word>),
    Power(Box<Word>, i64),
    Commutator(Box<Word>, Box<Word>),
}

impl Word {
    pub fn letters(&self) -> Vec<char> {
        let mut out = Vec::new();
        self.collect_letters(&mut out);
        out.sort_unstable();
        out.dedup();
        out
    }

    fn collect_letters(&self, out: &mut Vec<char>) {
        match self {
            Word::Letter(c) => out.push(*c),
            Word::Product(ws) => ws.iter().for_each(|w| w.collect_letters(out)),
            Word::Power(w, _) => w.collect_letters(out),
            Word::Commutator(a, b) => {
                a.collect_letters(out);
                b.collect_letters(out);
            }
        }
    }

    /// Evaluates the word; `identity` is the value of the empty product.
    pub fn evaluate<G: GroupElement>(
        &self,
        assignment: &BTreeMap<char, G>,
        identity: &G,
    ) -> Result<G> {
        Ok(match self {
            Word::Letter(c) => assignment.get(c).cloned().ok_or(Error::UnknownLetter(*c))?,
            Word::Product(ws) => {
                let mut acc = identity.clone();
                for w in ws {
                    acc = acc.op(&w.evaluate(assignment, identity)?);
                }
                acc
            }
            Word::Power(w, e) => {
                let base = w.evaluate(assignment, identity)?;
                let base = if *e < 0 { base.inv() } else { base };
                let mut acc = identity.clone();
                for _ in 0..e.unsigned_abs() {
                    acc = acc.op(&base);
                }
                acc
            }
            Word::Commutator(a, b) => {
                let a = a.evaluate(assignment, identity)?;
                let b = b.evaluate(assignment, identity)?;
                a.commutator(&b)
            }
        })
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Letter(c) => write!(f, "{c}"),
            Word::Product(ws) => {
                let parts: Vec<String> = ws.iter().map(ToString::to_string).collect();
                write!(f, "({})", parts.join("*"))
            }
            Word::Power(w, e) => write!(f, "{w}^{e}"),
            Word::Commutator(a, b) => write!(f, "[{a}, {b}]"),
        }
    }
}

struct Parser<'a> {
    text: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, reason: &str) -> Error {
        Error::Parse {
            text: self.text.to_string(),
            reason: format!("{reason} at offset {}", self.pos),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected {c:?}")))
        }
    }

    fn word(&mut self) -> Result<Word> {
        let mut terms = vec![self.term()?];
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    terms.push(self.term()?);
                }
                Some(c) if c.is_ascii_alphabetic() || c == '(' || c == '[' => {
                    terms.push(self.term()?);
                }
                _ => break,
            }
        }
        Ok(if terms.len() == 1 {
            terms.pop().expect("one term")
        } else {
            Word::Product(terms)
        })
    }

    fn term(&mut self) -> Result<Word> {
        let atom = self.atom()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            if self.chars.get(self.pos) == Some(&'-') {
                self.pos += 1;
            }
            while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let digits: String = self.chars[start..self.pos].iter().collect();
            let e: i64 = digits.parse().map_err(|_| self.err("bad exponent"))?;
            return Ok(Word::Power(Box::new(atom), e));
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Word> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(')')?;
                Ok(w)
            }
            Some('[') => {
                self.pos += 1;
                let a = self.word()?;
                self.expect(',')?;
                let b = self.word()?;
                self.expect(']')?;
                Ok(Word::Commutator(Box::new(a), Box::new(b)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                self.pos += 1;
                Ok(Word::Letter(c))
            }
            _ => Err(self.err("expected a letter, '(' or '['")),
        }
    }
}

impl FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut parser = Parser {
            text: s,
            chars: s.chars().collect(),
            pos: 0,
        };
        let w = parser.word()?;
        if parser.peek().is_some() {
            return Err(parser.err("trailing input"));
        }
        Ok(w)
    }
}

/// True iff every word evaluates to the identity.
pub fn check_relations<G: GroupElement>(
    words: &[Word],
    assignment: &BTreeMap<char, G>,
    identity: &G,
) -> Result<bool> {
    for w in words {
        if !w.evaluate(assignment, identity)?.is_identity() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Relators of the Coxeter–Moser style presentation of S₆ on `s`, `t`.
pub const S6_RELATORS: [&str; 5] = ["s^6", "t^2", "(s*t)^5", "[t, s^2]^2", "[t, s^3]^2"];

pub fn s6_relators() -> Vec<Word> {
    S6_RELATORS
        .iter()
        .map(|r| r.parse().expect("static relator"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{parse_cycles, Permutation};

    fn p(s: &str) -> Permutation {
        parse_cycles(s, 6).unwrap()
    }

    fn assign(s: Permutation, t: Permutation) -> BTreeMap<char, Permutation> {
        BTreeMap::from([('s', s), ('t', t)])
    }

    #[test]
    fn parsing() {
        let w: Word = "[t, s^2]^2".parse().unwrap();
        assert_eq!(w.letters(), vec!['s', 't']);
        assert!("(s*t".parse::<Word>().is_err());
        assert!("s^".parse::<Word>().is_err());
        assert!("s t^-1".parse::<Word>().is_ok());
        assert!("s)".parse::<Word>().is_err());
    }

    #[test]
    fn s6_relations_hold_for_the_natural_generators() {
        let id = Permutation::identity(6);
        let a = assign(p("(1,2,3,4,5,6)"), p("(1,2)"));
        assert!(check_relations(&s6_relators(), &a, &id).unwrap());
        // the image under the outer automorphism also satisfies them
        let b = assign(p("(1,2,6)(3,5)"), p("(1,2)(3,6)(4,5)"));
        assert!(check_relations(&s6_relators(), &b, &id).unwrap());
    }

    #[test]
    fn trivial_and_failing_assignments() {
        let id = Permutation::identity(6);
        let a = assign(id.clone(), id.clone());
        assert!(check_relations(&s6_relators(), &a, &id).unwrap());
        let b = assign(id.clone(), p("(1,2,3)"));
        assert!(!check_relations(&["t^2".parse().unwrap()], &b, &id).unwrap());
    }

    #[test]
    fn unknown_letters_are_errors() {
        let id = Permutation::identity(6);
        let a = assign(id.clone(), id.clone());
        assert!(matches!(
            check_relations(&["u^2".parse().unwrap()], &a, &id),
            Err(Error::UnknownLetter('u'))
        ));
    }

    #[test]
    fn negative_powers_and_commutators() {
        let id = Permutation::identity(6);
        let a = assign(p("(1,2,3)"), p("(3,4)"));
        let w: Word = "s^-1 t^-1 s t".parse().unwrap();
        let c: Word = "[s, t]".parse().unwrap();
        assert_eq!(w.evaluate(&a, &id).unwrap(), c.evaluate(&a, &id).unwrap());
    }
}
