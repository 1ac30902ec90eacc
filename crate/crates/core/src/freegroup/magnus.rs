//! Exact word problem in the free solvable quotients F/F^(k) through the
//! Magnus embedding chain, driven by iterated Fox derivatives: an element
//! of F/F^(k) is represented by its Fox-derivative vector with coefficients
//! in the group ring of F/F^(k-1), plus its image in F/F^(k-1); level 0 is
//! the trivial group.
//!
//! A word lies in F^(k) exactly when its normal form at level k is the
//! identity, which happens exactly when all of its Fox derivatives vanish
//! in Q[F/F^(k-1)].

use super::fox::{fox_derivative, GroupRing};
use super::word::Word;
use crate::error::{Error, Result};

pub const MAX_DEPTH_LEVEL: u32 = 4;

/// Normal form of an element of F/F^(k) in the Magnus chain.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub enum MagnusElt {
    /// The unique element of F/F^(0).
    #[default]
    Trivial,
    Node {
        derivs: Vec<GroupRing<MagnusElt>>,
        base: Box<MagnusElt>,
    },
}

impl MagnusElt {
    pub fn is_identity(&self) -> bool {
        match self {
            MagnusElt::Trivial => true,
            MagnusElt::Node { derivs, base } => {
                derivs.iter().all(|d| d.is_zero()) && base.is_identity()
            }
        }
    }
}

impl std::fmt::Debug for MagnusElt {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MagnusElt::Trivial => write!(f, "1"),
            MagnusElt::Node { derivs, .. } => {
                write!(f, "<")?;
                for (i, d) in derivs.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{} terms", d.len())?;
                }
                write!(f, ">")
            }
        }
    }
}

/// Memoized normal-form computation for the prefixes of a fixed word.
struct NormalFormer<'a> {
    word: &'a Word,
    num_gens: u32,
    /// memo[level][prefix_len]
    memo: Vec<Vec<Option<MagnusElt>>>,
}

impl<'a> NormalFormer<'a> {
    fn new(word: &'a Word, num_gens: u32, max_level: u32) -> Self {
        let memo = vec![vec![None; word.len() + 1]; max_level as usize + 1];
        NormalFormer {
            word,
            num_gens,
            memo,
        }
    }

    /// Normal form in F/F^(level) of the prefix of the given length.
    /// Fox-derivative terms of a freely reduced prefix are again prefixes,
    /// so the recursion is closed over (level, prefix length).
    fn normal_form(&mut self, level: u32, len: usize) -> MagnusElt {
        if level == 0 {
            return MagnusElt::Trivial;
        }
        if let Some(cached) = &self.memo[level as usize][len] {
            return cached.clone();
        }
        let prefix = self.word.prefix(len);
        let mut derivs = Vec::with_capacity(self.num_gens as usize);
        for g in 0..self.num_gens {
            let d = fox_derivative(&prefix, g);
            let mut pushed: GroupRing<MagnusElt> = GroupRing::zero();
            for (term, coeff) in d.terms() {
                let nf = self.normal_form(level - 1, term.len());
                pushed.add_term(nf, coeff.clone());
            }
            derivs.push(pushed);
        }
        let base = self.normal_form(level - 1, len);
        let result = MagnusElt::Node {
            derivs,
            base: Box::new(base),
        };
        self.memo[level as usize][len] = Some(result.clone());
        result
    }
}

/// Whether w lies in the k-th derived subgroup F^(k) of the free group on
/// its generators; exact for k <= MAX_DEPTH_LEVEL.
pub fn in_derived_subgroup(w: &Word, k: u32) -> Result<bool> {
    if k == 0 {
        return Ok(true);
    }
    if k > MAX_DEPTH_LEVEL {
        return Err(Error::Capability(format!(
            "derived-series membership bounded at level {}, got {}",
            MAX_DEPTH_LEVEL, k
        )));
    }
    let num_gens = w.max_generator().map_or(1, |g| g + 1);
    let mut nf = NormalFormer::new(w, num_gens, k);
    Ok(nf.normal_form(k, w.len()).is_identity())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DepthReport {
    /// Largest k <= k_max with w in F^(k).
    pub depth: u32,
    /// True when non-membership in F^(depth+1) was also certified.
    pub exact: bool,
}

/// Derived-series depth of a nontrivial word, certified through the free
/// solvable quotients.
pub fn derived_depth(w: &Word, k_max: u32) -> Result<DepthReport> {
    if w.is_identity() {
        return Err(Error::TrivialWord);
    }
    if k_max > MAX_DEPTH_LEVEL {
        return Err(Error::Capability(format!(
            "k_max is bounded at {}, got {}",
            MAX_DEPTH_LEVEL, k_max
        )));
    }
    for k in 1..=k_max {
        if !in_derived_subgroup(w, k)? {
            return Ok(DepthReport {
                depth: k - 1,
                exact: true,
            });
        }
    }
    Ok(DepthReport {
        depth: k_max,
        exact: false,
    })
}
