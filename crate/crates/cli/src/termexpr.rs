//! Recursive-descent parser for the term grammar:
//! `Jn(n, <term>)`, `BD^k(<term>)`, `infect(<pattern>, <term>, ...)`,
//! `sum(<term>, <term>)`, `mirror(<term>)`, and catalog names.

use crate::catalog::CatalogFile;
use crate::error::{CliError, EXIT_PARSE};
use concord_core::infection::{build_bing, patterns, InfectionTerm};
use concord_core::seifert::SeifertMatrix;

/// A parsed expression; connected sums stay at this level because they are
/// evaluated componentwise.
#[derive(Clone, Debug)]
pub enum TermExpr {
    Base(InfectionTerm),
    Sum(Box<TermExpr>, Box<TermExpr>),
}

impl TermExpr {
    pub fn components(&self) -> Vec<&InfectionTerm> {
        match self {
            TermExpr::Base(t) => vec![t],
            TermExpr::Sum(a, b) => {
                let mut v = a.components();
                v.extend(b.components());
                v
            }
        }
    }

    pub fn is_knot(&self) -> bool {
        self.components().iter().all(|t| t.is_knot())
    }

    /// The single underlying infection term, when the expression is not a
    /// connected sum.
    pub fn single(&self) -> Option<&InfectionTerm> {
        match self {
            TermExpr::Base(t) => Some(t),
            TermExpr::Sum(..) => None,
        }
    }

    /// Seifert matrix of the denoted knot (block sum over components).
    pub fn seifert(&self) -> Result<SeifertMatrix, CliError> {
        let mut acc: Option<SeifertMatrix> = None;
        for c in self.components() {
            let v = c.seifert_of()?;
            acc = Some(match acc {
                None => v,
                Some(prev) => prev.connected_sum(&v),
            });
        }
        let v = acc.expect("expressions have at least one component");
        // the Arf count and exact signature evaluations grow fast in the
        // matrix size; sums beyond genus 10 are out of desk scale
        if v.size() > 20 {
            return Err(CliError::new(
                crate::error::EXIT_CAPABILITY,
                format!("summed Seifert matrix of size {} exceeds the size-20 bound", v.size()),
            ));
        }
        Ok(v)
    }

    pub fn display(&self) -> String {
        match self {
            TermExpr::Base(t) => format!("{}", t),
            TermExpr::Sum(a, b) => format!("sum({}, {})", a.display(), b.display()),
        }
    }
}

pub fn parse_term(input: &str, catalog: &CatalogFile) -> Result<TermExpr, CliError> {
    let mut p = Parser {
        src: input,
        pos: 0,
        catalog,
    };
    let t = p.expr()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.error("trailing input"));
    }
    Ok(t)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    catalog: &'a CatalogFile,
}

impl<'a> Parser<'a> {
    fn error(&self, msg: &str) -> CliError {
        CliError::new(
            EXIT_PARSE,
            format!("parse error at position {}: {}", self.pos, msg),
        )
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len()
            && self.src.as_bytes()[self.pos].is_ascii_whitespace()
        {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.as_bytes().get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> Result<(), CliError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn ident(&mut self) -> Result<&'a str, CliError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() {
            let c = self.src.as_bytes()[self.pos];
            if c.is_ascii_alphanumeric() || c == b'_' || c == b'-' || c == b'^' {
                self.pos += 1;
            } else {
                break;
            }
        }
        if start == self.pos {
            return Err(self.error("expected a name"));
        }
        Ok(&self.src[start..self.pos])
    }

    fn integer(&mut self) -> Result<u32, CliError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src.as_bytes()[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| self.error("integer out of range"))
    }

    fn expr(&mut self) -> Result<TermExpr, CliError> {
        let name = self.ident()?;
        match name {
            "Jn" | "J" => {
                self.eat(b'(')?;
                let n = self.integer()?;
                self.eat(b',')?;
                let inner = self.expr()?;
                self.eat(b')')?;
                let Some(child) = inner.single() else {
                    return Err(self.error("Jn needs a single knot term, not a sum"));
                };
                if !child.is_knot() {
                    return Err(self.error("Jn infects with a knot"));
                }
                Ok(TermExpr::Base(jn_over_term(n, child.clone())))
            }
            "infect" => {
                self.eat(b'(')?;
                let pname = self.ident()?.to_string();
                let pattern = self.catalog.pattern(&pname)?;
                let mut children = Vec::new();
                while self.peek() == Some(b',') {
                    self.pos += 1;
                    let sub = self.expr()?;
                    let Some(t) = sub.single() else {
                        return Err(self.error("infection children cannot be sums"));
                    };
                    children.push(t.clone());
                }
                self.eat(b')')?;
                let term = InfectionTerm::infect(pattern, children).map_err(CliError::from)?;
                Ok(TermExpr::Base(term))
            }
            "sum" => {
                self.eat(b'(')?;
                let a = self.expr()?;
                self.eat(b',')?;
                let b = self.expr()?;
                self.eat(b')')?;
                if !(a.is_knot() && b.is_knot()) {
                    return Err(self.error("connected sums are for knots"));
                }
                Ok(TermExpr::Sum(Box::new(a), Box::new(b)))
            }
            "mirror" => {
                self.eat(b'(')?;
                let a = self.expr()?;
                self.eat(b')')?;
                match a {
                    TermExpr::Base(t) => Ok(TermExpr::Base(mirror_term(&t))),
                    TermExpr::Sum(x, y) => Ok(TermExpr::Sum(
                        Box::new(mirror_expr(&x)),
                        Box::new(mirror_expr(&y)),
                    )),
                }
            }
            bd if bd == "BD" || bd.starts_with("BD^") => {
                let k: u32 = if bd == "BD" {
                    1
                } else {
                    bd[3..]
                        .parse()
                        .map_err(|_| self.error("bad Bing-doubling power"))?
                };
                self.eat(b'(')?;
                let inner = self.expr()?;
                self.eat(b')')?;
                let Some(child) = inner.single() else {
                    return Err(self.error("BD takes a single knot term"));
                };
                let term = build_bing(k, child.clone(), None).map_err(CliError::from)?;
                Ok(TermExpr::Base(term))
            }
            catalog_name => {
                let leaf = self.catalog.leaf(catalog_name)?;
                Ok(TermExpr::Base(InfectionTerm::leaf(leaf)))
            }
        }
    }
}

/// J_n over an arbitrary knot term (build_jn specialized to leaves).
fn jn_over_term(n: u32, child: InfectionTerm) -> InfectionTerm {
    let mut term = child;
    for _ in 0..n {
        term = InfectionTerm::infect(patterns::r1(), vec![term.clone(), term])
            .expect("two curves, two children");
    }
    term
}

fn mirror_expr(e: &TermExpr) -> TermExpr {
    match e {
        TermExpr::Base(t) => TermExpr::Base(mirror_term(t)),
        TermExpr::Sum(a, b) => TermExpr::Sum(Box::new(mirror_expr(a)), Box::new(mirror_expr(b))),
    }
}

/// Mirror of a term: mirror the pattern and all children; flags survive
/// except handedness-sensitive ones, which stay conservative.
fn mirror_term(t: &InfectionTerm) -> InfectionTerm {
    match t {
        InfectionTerm::Leaf(k) => {
            let mut leaf = k.clone();
            leaf.seifert = k.seifert.as_ref().map(|v| v.mirror());
            leaf.label = format!("mirror({})", k.label);
            InfectionTerm::Leaf(leaf)
        }
        InfectionTerm::Infect { pattern, children } => {
            let mut p = pattern.clone();
            p.seifert = pattern.seifert.as_ref().map(|v| v.mirror());
            p.id = format!("mirror({})", pattern.id);
            let kids = children.iter().map(mirror_term).collect();
            InfectionTerm::Infect {
                pattern: p,
                children: kids,
            }
        }
    }
}
