//! Freely reduced words in a free group on generators x1, x2, ...

use crate::error::{Error, Result};
use std::fmt;

/// A freely reduced word: letters (generator index, exponent +-1) with no
/// adjacent cancelling pairs.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<(u32, i8)>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(g: u32) -> Self {
        Word {
            letters: vec![(g, 1)],
        }
    }

    pub fn from_letters(letters: impl IntoIterator<Item = (u32, i8)>) -> Self {
        let mut w = Word::identity();
        for (g, e) in letters {
            debug_assert!(e == 1 || e == -1);
            w.push(g, e);
        }
        w
    }

    fn push(&mut self, g: u32, e: i8) {
        if let Some(&(lg, le)) = self.letters.last() {
            if lg == g && le == -e {
                self.letters.pop();
                return;
            }
        }
        self.letters.push((g, e));
    }

    pub fn letters(&self) -> &[(u32, i8)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|&(g, e)| (g, -e))
                .collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &(g, e) in &other.letters {
            w.push(g, e);
        }
        w
    }

    /// u v u^-1 v^-1
    pub fn commutator(u: &Word, v: &Word) -> Word {
        u.concat(v).concat(&u.inverse()).concat(&v.inverse())
    }

    /// Prefix of the first `n` letters (already freely reduced).
    pub fn prefix(&self, n: usize) -> Word {
        Word {
            letters: self.letters[..n].to_vec(),
        }
    }

    /// Replaces each generator by a word, extending homomorphically.
    pub fn substitute(&self, image: &impl Fn(u32) -> Word) -> Word {
        let mut out = Word::identity();
        for &(g, e) in &self.letters {
            let im = image(g);
            let piece = if e == 1 { im } else { im.inverse() };
            out = out.concat(&piece);
        }
        out
    }

    /// Exponent-sum vector over the first `n` generators.
    pub fn abelianization(&self, n: usize) -> Vec<i64> {
        let mut v = vec![0i64; n];
        for &(g, e) in &self.letters {
            v[g as usize] += e as i64;
        }
        v
    }

    /// Largest generator index used, if any.
    pub fn max_generator(&self) -> Option<u32> {
        self.letters.iter().map(|&(g, _)| g).max()
    }

    /// Parses the CLI word syntax: generators x1..xN, inverse suffix ^-1
    /// (or an integer power), commutator sugar \[u,v\], parentheses, and
    /// juxtaposition with optional '*'.
    pub fn parse(input: &str) -> Result<Word> {
        let mut p = Parser {
            src: input.as_bytes(),
            pos: 0,
        };
        let w = p.parse_word()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(Error::Domain(format!(
                "unexpected character at position {}",
                p.pos
            )));
        }
        Ok(w)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len()
            && (self.src[self.pos] as char).is_whitespace()
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn parse_word(&mut self) -> Result<Word> {
        let mut acc = Word::identity();
        loop {
            match self.peek() {
                Some(b'x') | Some(b'[') | Some(b'(') => {
                    let atom = self.parse_atom()?;
                    acc = acc.concat(&atom);
                }
                Some(b'*') => {
                    self.pos += 1;
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn parse_atom(&mut self) -> Result<Word> {
        let base = match self.peek() {
            Some(b'x') => {
                self.pos += 1;
                let start = self.pos;
                while self
                    .src
                    .get(self.pos)
                    .map_or(false, |c| (*c as char).is_ascii_digit())
                {
                    self.pos += 1;
                }
                if start == self.pos {
                    return Err(Error::Domain(format!(
                        "expected generator index at position {}",
                        self.pos
                    )));
                }
                let idx: u32 = std::str::from_utf8(&self.src[start..self.pos])
                    .unwrap()
                    .parse()
                    .map_err(|_| Error::Domain("generator index overflow".into()))?;
                if idx == 0 {
                    return Err(Error::Domain("generators are numbered from x1".into()));
                }
                Word::generator(idx - 1)
            }
            Some(b'[') => {
                self.pos += 1;
                let u = self.parse_word()?;
                if self.peek() != Some(b',') {
                    return Err(Error::Domain(format!(
                        "expected ',' in commutator at position {}",
                        self.pos
                    )));
                }
                self.pos += 1;
                let v = self.parse_word()?;
                if self.peek() != Some(b']') {
                    return Err(Error::Domain(format!(
                        "expected ']' at position {}",
                        self.pos
                    )));
                }
                self.pos += 1;
                Word::commutator(&u, &v)
            }
            Some(b'(') => {
                self.pos += 1;
                let w = self.parse_word()?;
                if self.peek() != Some(b')') {
                    return Err(Error::Domain(format!(
                        "expected ')' at position {}",
                        self.pos
                    )));
                }
                self.pos += 1;
                w
            }
            other => {
                return Err(Error::Domain(format!(
                    "unexpected token {:?} at position {}",
                    other.map(|c| c as char),
                    self.pos
                )))
            }
        };
        // optional ^<int>
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            if self.src.get(self.pos) == Some(&b'-') {
                self.pos += 1;
            }
            while self
                .src
                .get(self.pos)
                .map_or(false, |c| (*c as char).is_ascii_digit())
            {
                self.pos += 1;
            }
            let exp: i64 = std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| Error::Domain(format!("bad exponent at position {}", start)))?;
            let mut out = Word::identity();
            let piece = if exp >= 0 { base } else { base.inverse() };
            for _ in 0..exp.unsigned_abs() {
                out = out.concat(&piece);
            }
            return Ok(out);
        }
        Ok(base)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let mut first = true;
        for &(g, e) in &self.letters {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", g + 1)?;
            } else {
                write!(f, "x{}^-1", g + 1)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self)
    }
}
