//! Fox free differential calculus in the rational group ring of a free
//! group (or of any group with hashable normal forms).

use super::word::Word;
use crate::Rational;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Sparse group-ring element: a finite rational combination of group
/// elements; no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct GroupRing<G: Ord + Clone> {
    terms: BTreeMap<G, Rational>,
}

impl<G: Ord + Clone> GroupRing<G> {
    pub fn zero() -> Self {
        GroupRing {
            terms: BTreeMap::new(),
        }
    }

    pub fn single(g: G) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(g, Rational::from_integer(1.into()));
        GroupRing { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&G, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, g: G, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&g) {
            None => {
                self.terms.insert(g, c);
            }
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(g, s);
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (g, c) in &rhs.terms {
            out.add_term(g.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        GroupRing {
            terms: self
                .terms
                .iter()
                .map(|(g, c)| (g.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        GroupRing {
            terms: self
                .terms
                .iter()
                .map(|(g, x)| (g.clone(), x * c))
                .collect(),
        }
    }

    /// Left translation by a group element, given the group law.
    pub fn translate(&self, g: &G, mul: &impl Fn(&G, &G) -> G) -> Self {
        let mut out = Self::zero();
        for (h, c) in &self.terms {
            out.add_term(mul(g, h), c.clone());
        }
        out
    }

    /// Pushforward along a map of groups.
    pub fn map_group<H: Ord + Clone>(&self, f: &impl Fn(&G) -> H) -> GroupRing<H> {
        let mut out = GroupRing::zero();
        for (g, c) in &self.terms {
            out.add_term(f(g), c.clone());
        }
        out
    }
}

impl GroupRing<Word> {
    /// Ring multiplication in Q\[F\], by word concatenation.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for (g, c) in &self.terms {
            for (h, d) in &rhs.terms {
                out.add_term(g.concat(h), c * d);
            }
        }
        out
    }
}

impl<G: Ord + Clone + fmt::Display> fmt::Display for GroupRing<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (g, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}*{}", c, g)?;
        }
        Ok(())
    }
}

impl<G: Ord + Clone + fmt::Display> fmt::Debug for GroupRing<G> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupRing({})", self)
    }
}

/// The Fox derivative d(w)/d(x_g) in Q\[F\]: d(x_g)/d(x_g) = 1,
/// d(x_h)/d(x_g) = 0 for h != g, d(x_g^-1)/d(x_g) = -x_g^-1, and the
/// product rule d(uv) = d(u) + u d(v).
pub fn fox_derivative(w: &Word, g: u32) -> GroupRing<Word> {
    let mut out = GroupRing::zero();
    let one = Rational::from_integer(1.into());
    for (i, &(h, e)) in w.letters().iter().enumerate() {
        if h != g {
            continue;
        }
        if e == 1 {
            // prefix before the letter
            out.add_term(w.prefix(i), one.clone());
        } else {
            // -prefix * x_g^-1 = -(prefix including the letter)
            out.add_term(w.prefix(i + 1), -one.clone());
        }
    }
    out
}

/// Sum over generators of d(w)/d(g) * (g - 1); equals w - 1 in Q\[F\].
pub fn fundamental_identity_lhs(w: &Word, num_gens: u32) -> GroupRing<Word> {
    let mut acc = GroupRing::zero();
    for g in 0..num_gens {
        let d = fox_derivative(w, g);
        let gen_minus_one =
            GroupRing::single(Word::generator(g)).sub(&GroupRing::single(Word::identity()));
        acc = acc.add(&d.mul(&gen_minus_one));
    }
    acc
}
