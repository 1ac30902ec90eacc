//! Symbolic calculus of iterated infections: patterns with marked curves,
//! infection trees, the recursive families built from doubling operators,
//! clone/ghost bookkeeping, guaranteed solvable-filtration levels, and
//! Seifert data of winding-zero satellites.

use crate::blanchfield::{basis_element, ModuleElement};
use crate::error::{Error, Result};
use crate::freegroup::{bing_pattern_word, derived_depth, Word};
use crate::seifert::SeifertMatrix;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternKind {
    Knot,
    Link(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sliceness {
    Ribbon,
    Slice,
    NotKnownSlice,
}

impl Sliceness {
    pub fn is_slice(self) -> bool {
        matches!(self, Sliceness::Ribbon | Sliceness::Slice)
    }
}

/// A marked infection curve of a pattern: its derived-series depth and its
/// class, either in the rational Alexander module of a knot pattern or as a
/// free-group word for trivial-link patterns.
#[derive(Clone, Debug, PartialEq)]
pub struct Curve {
    pub id: String,
    pub depth: u32,
    pub class: CurveClass,
}

#[derive(Clone, Debug, PartialEq)]
pub enum CurveClass {
    Module(ModuleElement),
    Word(Word),
}

/// A catalog pattern: a knot or link with marked infection curves.
#[derive(Clone, Debug, PartialEq)]
pub struct Pattern {
    pub id: String,
    pub kind: PatternKind,
    pub seifert: Option<SeifertMatrix>,
    pub sliceness: Sliceness,
    pub curves: Vec<Curve>,
    pub amphichiral: bool,
    /// Generators of metabolizers that arise as kernels of ribbon disks;
    /// the base contribution of the corresponding coefficient systems is 0.
    pub ribbon_kernels: Vec<ModuleElement>,
}

impl Pattern {
    /// Consistency of the declared curve data. Word depths are certified up
    /// to level 3; depth-4 words are accepted structurally (the membership
    /// check at level 4 is documented as a capability bound).
    pub fn validate(&self) -> Result<()> {
        match &self.kind {
            PatternKind::Knot => {
                let Some(v) = &self.seifert else {
                    return Err(Error::UnsupportedTerm(format!(
                        "knot pattern '{}' without a Seifert matrix",
                        self.id
                    )));
                };
                for c in &self.curves {
                    if c.depth < 1 {
                        return Err(Error::Domain(format!(
                            "curve '{}' must have depth >= 1",
                            c.id
                        )));
                    }
                    match &c.class {
                        CurveClass::Module(m) => {
                            if m.len() != v.size() {
                                return Err(Error::RankMismatch {
                                    expected: v.size(),
                                    got: m.len(),
                                });
                            }
                        }
                        CurveClass::Word(_) => {
                            return Err(Error::Domain(format!(
                                "knot pattern curve '{}' must carry a module class",
                                c.id
                            )));
                        }
                    }
                }
                for k in &self.ribbon_kernels {
                    if k.len() != v.size() {
                        return Err(Error::RankMismatch {
                            expected: v.size(),
                            got: k.len(),
                        });
                    }
                }
            }
            PatternKind::Link(m) => {
                for c in &self.curves {
                    let CurveClass::Word(w) = &c.class else {
                        return Err(Error::Domain(format!(
                            "link pattern curve '{}' must carry a word",
                            c.id
                        )));
                    };
                    if let Some(max_gen) = w.max_generator() {
                        if max_gen as usize >= *m {
                            return Err(Error::Domain(format!(
                                "curve word of '{}' uses generator x{} beyond the {} meridians",
                                c.id,
                                max_gen + 1,
                                m
                            )));
                        }
                    }
                    if c.depth <= 3 {
                        let report = derived_depth(w, c.depth + 1)?;
                        if report.depth != c.depth {
                            return Err(Error::Domain(format!(
                                "curve '{}' declares depth {} but the word has depth {}",
                                c.id, c.depth, report.depth
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// A knot leaf of an infection tree; `seifert` is None for purely symbolic
/// knots (obstruction certificates still mention them by label).
#[derive(Clone, Debug, PartialEq)]
pub struct LeafKnot {
    pub label: String,
    pub seifert: Option<SeifertMatrix>,
    pub sliceness: Sliceness,
    pub amphichiral: bool,
}

impl LeafKnot {
    pub fn symbolic(label: impl Into<String>) -> Self {
        LeafKnot {
            label: label.into(),
            seifert: None,
            sliceness: Sliceness::NotKnownSlice,
            amphichiral: false,
        }
    }

    pub fn from_seifert(v: SeifertMatrix) -> Self {
        let label = v.label.clone().unwrap_or_else(|| "anonymous".into());
        let slice = if v.size() == 0 {
            Sliceness::Ribbon
        } else {
            Sliceness::NotKnownSlice
        };
        LeafKnot {
            label,
            seifert: Some(v),
            sliceness: slice,
            amphichiral: false,
        }
    }

    pub fn slice(mut self) -> Self {
        self.sliceness = Sliceness::Slice;
        self
    }

    pub fn ribbon(mut self) -> Self {
        self.sliceness = Sliceness::Ribbon;
        self
    }

    pub fn amphichiral(mut self) -> Self {
        self.amphichiral = true;
        self
    }
}

/// Tree of iterated infections: leaves are knots, internal nodes are
/// patterns with one child per marked curve.
#[derive(Clone, Debug, PartialEq)]
pub enum InfectionTerm {
    Leaf(LeafKnot),
    Infect {
        pattern: Pattern,
        children: Vec<InfectionTerm>,
    },
}

impl InfectionTerm {
    pub fn leaf(k: LeafKnot) -> Self {
        InfectionTerm::Leaf(k)
    }

    pub fn infect(pattern: Pattern, children: Vec<InfectionTerm>) -> Result<Self> {
        if children.len() != pattern.curves.len() {
            return Err(Error::UnsupportedTerm(format!(
                "pattern '{}' has {} curves but {} children were given",
                pattern.id,
                pattern.curves.len(),
                children.len()
            )));
        }
        for child in &children {
            if !child.is_knot() {
                return Err(Error::UnsupportedTerm(
                    "infection children must be knots".into(),
                ));
            }
        }
        Ok(InfectionTerm::Infect { pattern, children })
    }

    pub fn is_knot(&self) -> bool {
        match self {
            InfectionTerm::Leaf(_) => true,
            InfectionTerm::Infect { pattern, .. } => pattern.kind == PatternKind::Knot,
        }
    }

    pub fn component_count(&self) -> usize {
        match self {
            InfectionTerm::Leaf(_) => 1,
            InfectionTerm::Infect { pattern, .. } => match &pattern.kind {
                PatternKind::Knot => 1,
                PatternKind::Link(m) => *m,
            },
        }
    }

    pub fn leaves(&self) -> Vec<&LeafKnot> {
        match self {
            InfectionTerm::Leaf(k) => vec![k],
            InfectionTerm::Infect { children, .. } => {
                children.iter().flat_map(|c| c.leaves()).collect()
            }
        }
    }

    pub fn all_leaves_slice(&self) -> bool {
        self.leaves().iter().all(|k| k.sliceness.is_slice())
    }

    /// The Seifert matrix of the knot the term denotes: winding-zero
    /// infection (all curve depths >= 1) leaves the outermost pattern's
    /// Seifert matrix unchanged.
    pub fn seifert_of(&self) -> Result<SeifertMatrix> {
        match self {
            InfectionTerm::Leaf(k) => k
                .seifert
                .clone()
                .ok_or_else(|| Error::MissingLeafData(k.label.clone())),
            InfectionTerm::Infect { pattern, .. } => match &pattern.kind {
                PatternKind::Link(_) => Err(Error::UnsupportedTerm(
                    "links do not have Seifert matrices here".into(),
                )),
                PatternKind::Knot => pattern
                    .seifert
                    .clone()
                    .ok_or_else(|| Error::MissingLeafData(pattern.id.clone())),
            },
        }
    }
}

impl fmt::Display for InfectionTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InfectionTerm::Leaf(k) => write!(f, "{}", k.label),
            InfectionTerm::Infect { pattern, children } => {
                write!(f, "{}(", pattern.id)?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{}", c)?;
                }
                write!(f, ")")
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Builtin patterns.
// ---------------------------------------------------------------------------

pub mod patterns {
    use super::*;
    use crate::seifert::knots;

    /// The 9_46 ribbon pattern with its two band meridians; both Seifert
    /// metabolizers arise as ribbon-disk kernels.
    pub fn r1() -> Pattern {
        Pattern {
            id: "R1".into(),
            kind: PatternKind::Knot,
            seifert: Some(knots::nine_forty_six()),
            sliceness: Sliceness::Ribbon,
            curves: vec![
                Curve {
                    id: "eta+".into(),
                    depth: 1,
                    class: CurveClass::Module(basis_element(2, 0)),
                },
                Curve {
                    id: "eta-".into(),
                    depth: 1,
                    class: CurveClass::Module(basis_element(2, 1)),
                },
            ],
            amphichiral: false,
            ribbon_kernels: vec![basis_element(2, 0), basis_element(2, 1)],
        }
    }

    /// The figure-eight pattern with its two band meridians: amphichiral,
    /// not known slice, no ribbon kernels.
    pub fn figure_eight() -> Pattern {
        Pattern {
            id: "E8".into(),
            kind: PatternKind::Knot,
            seifert: Some(knots::figure_eight()),
            sliceness: Sliceness::NotKnownSlice,
            curves: vec![
                Curve {
                    id: "eta+".into(),
                    depth: 1,
                    class: CurveClass::Module(basis_element(2, 0)),
                },
                Curve {
                    id: "eta-".into(),
                    depth: 1,
                    class: CurveClass::Module(basis_element(2, 1)),
                },
            ],
            amphichiral: true,
            ribbon_kernels: Vec::new(),
        }
    }

    /// Trivial link of m components (no marked curves).
    pub fn trivial_link(m: usize) -> Pattern {
        Pattern {
            id: format!("T{}", m),
            kind: PatternKind::Link(m),
            seifert: None,
            sliceness: Sliceness::Ribbon,
            curves: Vec::new(),
            amphichiral: false,
            ribbon_kernels: Vec::new(),
        }
    }
}

// ---------------------------------------------------------------------------
// Family builders.
// ---------------------------------------------------------------------------

/// The recursive family: J_0 = K; J_n infects the R1 pattern along both
/// band meridians with two copies of J_(n-1).
pub fn build_jn(n: u32, k: LeafKnot) -> InfectionTerm {
    build_tower(&patterns::r1(), n, k)
}

/// Iterated doubling by a fixed knot pattern with identical children at
/// every level.
pub fn build_tower(pattern: &Pattern, n: u32, k: LeafKnot) -> InfectionTerm {
    let mut term = InfectionTerm::leaf(k);
    for _ in 0..n {
        let arity = pattern.curves.len();
        term = InfectionTerm::infect(pattern.clone(), vec![term; arity])
            .expect("arity matches by construction");
    }
    term
}

/// The k-fold iterated Bing double as a single infection of the trivial
/// 2^k-component link along the depth-k commutator word.
pub fn build_bing(
    k: u32,
    child: InfectionTerm,
    components: Option<usize>,
) -> Result<InfectionTerm> {
    if k < 1 {
        return Err(Error::Capability("Bing doubling requires k >= 1".into()));
    }
    if !child.is_knot() {
        return Err(Error::UnsupportedTerm(
            "Bing doubling infects with a knot".into(),
        ));
    }
    let word = bing_pattern_word(k)?;
    let needed = 1usize << k;
    let m = components.unwrap_or(needed);
    if m < needed {
        return Err(Error::Domain(format!(
            "the level-{} Bing word needs {} components, got {}",
            k, needed, m
        )));
    }
    let mut pattern = patterns::trivial_link(m);
    pattern.curves.push(Curve {
        id: "alpha".into(),
        depth: k,
        class: CurveClass::Word(word),
    });
    InfectionTerm::infect(pattern, vec![child])
}

// ---------------------------------------------------------------------------
// Clones and ghosts.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MarkedCurve {
    pub id: String,
    pub depth: u32,
}

/// Clone/ghost bookkeeping of a self-similar tower expanded at stage i.
#[derive(Clone, Debug)]
pub struct CloneSet {
    pub level: u32,
    /// The arity^i clones, each at depth i.
    pub clones: Vec<MarkedCurve>,
    /// For each j <= i, the ghosts of mu_j: arity^(i-j) curves at depth i-j.
    pub ghosts: Vec<GhostSet>,
    /// The infecting knot attached to every clone.
    pub residual: InfectionTerm,
}

#[derive(Clone, Debug)]
pub struct GhostSet {
    pub of_meridian_level: u32,
    pub curves: Vec<MarkedCurve>,
}

/// Alternative descriptions of a self-similar tower: the stage-i expansion
/// has arity^i clones of the base meridian, each carrying the residual
/// knot, together with the ghost sets of the intermediate meridians.
pub fn expand_clones(term: &InfectionTerm, i: u32) -> Result<CloneSet> {
    let (n, pattern, leaf) = tower_shape(term).ok_or_else(|| {
        Error::UnsupportedTerm("expand_clones requires a self-similar tower".into())
    })?;
    if i > n {
        return Err(Error::Domain(format!(
            "expansion stage {} exceeds tower height {}",
            i, n
        )));
    }
    let arity = pattern.as_ref().map_or(2, |p| p.curves.len().max(1)) as u32;
    let clones = sign_strings(arity, i)
        .iter()
        .map(|s| MarkedCurve {
            id: format!("eta^{}_{}", i, s),
            depth: i,
        })
        .collect();
    let mut ghosts = Vec::new();
    for j in 0..=i {
        let curves = sign_strings(arity, i - j)
            .iter()
            .map(|s| MarkedCurve {
                id: format!("(mu_{})_{}", j, s),
                depth: i - j,
            })
            .collect();
        ghosts.push(GhostSet {
            of_meridian_level: j,
            curves,
        });
    }
    let residual = match &pattern {
        Some(p) => build_tower(p, n - i, leaf.clone()),
        None => InfectionTerm::leaf(leaf.clone()),
    };
    Ok(CloneSet {
        level: i,
        clones,
        ghosts,
        residual,
    })
}

fn sign_strings(arity: u32, len: u32) -> Vec<String> {
    let symbols: Vec<char> = match arity {
        2 => vec!['+', '-'],
        _ => (0..arity)
            .map(|a| char::from_digit(a, 36).unwrap_or('?'))
            .collect(),
    };
    let mut out = vec![String::new()];
    for _ in 0..len {
        out = out
            .iter()
            .flat_map(|s| symbols.iter().map(move |c| format!("{}{}", s, c)))
            .collect();
    }
    out
}

/// (height, level pattern, leaf) of a self-similar tower: all levels share
/// one pattern and all children at each level are equal.
fn tower_shape(term: &InfectionTerm) -> Option<(u32, Option<Pattern>, LeafKnot)> {
    match term {
        InfectionTerm::Leaf(k) => Some((0, None, k.clone())),
        InfectionTerm::Infect { pattern, children } => {
            let first = children.first()?;
            if children.iter().any(|c| c != first) {
                return None;
            }
            let (n, sub_pattern, leaf) = tower_shape(first)?;
            if let Some(sp) = &sub_pattern {
                if sp != pattern {
                    return None;
                }
            }
            Some((n + 1, Some(pattern.clone()), leaf))
        }
    }
}

// ---------------------------------------------------------------------------
// Solvable-filtration bookkeeping.
// ---------------------------------------------------------------------------

/// Guaranteed membership in the solvable filtration; levels are lower
/// bounds, never claims of sharpness. Half-integer levels are
/// representable through `twice` but no current rule produces them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SolvableLevel {
    SliceByConstruction,
    Level {
        /// Twice the filtration level (so 2n for integer levels n).
        twice: u32,
        /// Membership guaranteed only in the rational filtration.
        rational_only: bool,
    },
}

impl SolvableLevel {
    pub fn integer(n: u32, rational_only: bool) -> Self {
        SolvableLevel::Level {
            twice: 2 * n,
            rational_only,
        }
    }

    pub fn level_string(&self) -> String {
        match self {
            SolvableLevel::SliceByConstruction => "slice".into(),
            SolvableLevel::Level { twice, .. } => {
                if twice % 2 == 0 {
                    format!("{}", twice / 2)
                } else {
                    format!("{}.5", twice / 2)
                }
            }
        }
    }
}

impl fmt::Display for SolvableLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SolvableLevel::SliceByConstruction => write!(f, "slice by construction"),
            SolvableLevel::Level {
                twice,
                rational_only,
            } => {
                if twice % 2 == 0 {
                    write!(f, "level {}", twice / 2)?;
                } else {
                    write!(f, "level {}.5", twice / 2)?;
                }
                if *rational_only {
                    write!(f, " (rational filtration only)")?;
                }
                Ok(())
            }
        }
    }
}

/// Guaranteed solvable-filtration level of an infection term.
///
/// A slice leaf is slice by construction; an Arf-0 leaf sits at level 0
/// and an Arf-1 leaf at level 0 of the rational filtration only. Infection
/// of a slice pattern along curves of minimal depth p with children at
/// level >= q lands in level p + q (slice children are concordance-inert),
/// and all-slice children of a slice pattern yield a slice knot. A
/// non-slice pattern contributes only its own Seifert-level floor.
pub fn solvable_level(term: &InfectionTerm) -> Result<SolvableLevel> {
    match term {
        InfectionTerm::Leaf(k) => {
            if k.sliceness.is_slice() {
                return Ok(SolvableLevel::SliceByConstruction);
            }
            let Some(v) = &k.seifert else {
                return Err(Error::MissingLeafData(k.label.clone()));
            };
            Ok(SolvableLevel::integer(0, v.arf() == 1))
        }
        InfectionTerm::Infect { pattern, children } => {
            let child_levels: Vec<SolvableLevel> = children
                .iter()
                .map(solvable_level)
                .collect::<Result<_>>()?;
            let all_slice = child_levels
                .iter()
                .all(|l| matches!(l, SolvableLevel::SliceByConstruction));
            if pattern.sliceness.is_slice() {
                if all_slice {
                    return Ok(SolvableLevel::SliceByConstruction);
                }
                let p = pattern.curves.iter().map(|c| c.depth).min().unwrap_or(0);
                let mut q = u32::MAX;
                let mut rational = false;
                for l in &child_levels {
                    if let SolvableLevel::Level {
                        twice,
                        rational_only,
                    } = l
                    {
                        q = q.min(*twice);
                        rational |= rational_only;
                    }
                }
                Ok(SolvableLevel::Level {
                    twice: 2 * p + q,
                    rational_only: rational,
                })
            } else {
                // no filtration gain through a non-slice pattern: fall back
                // to the Seifert-level floor of the resulting knot
                match (&pattern.kind, &pattern.seifert) {
                    (PatternKind::Knot, Some(v)) => Ok(SolvableLevel::integer(0, v.arf() == 1)),
                    _ => Ok(SolvableLevel::integer(0, true)),
                }
            }
        }
    }
}
