//! Formal rho-invariant calculus: additivity of rho under infection as a
//! rewriting rule on terms, first-order L2-signature sets indexed by
//! isotropic submodules, amphichiral vanishing, and the slice-obstruction
//! verdicts. Values are exact rationals plus opaque symbols; Cheeger-Gromov
//! constants are never estimated, so certificates are conditional
//! inequalities.

use crate::blanchfield::{check_doubling_hypothesis, enumerate_isotropic_submodules, AlexanderModule};
use crate::error::{Error, Result};
use crate::infection::{CurveClass, InfectionTerm, LeafKnot, Pattern, PatternKind};
use crate::signature::rho0;
use crate::Rational;
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// Atomic symbol of the calculus.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RhoAtom {
    /// rho_0 of a named knot (exact value attached by substitution when the
    /// Seifert matrix is known).
    Rho0(String),
    /// rho^1 of a named knot or pattern: the P = 0 first-order signature.
    Rho1(String),
    /// Cheeger-Gromov bound of a named zero-surgery manifold.
    CgBound(String),
}

impl fmt::Display for RhoAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RhoAtom::Rho0(k) => write!(f, "rho0({})", k),
            RhoAtom::Rho1(k) => write!(f, "rho1({})", k),
            RhoAtom::CgBound(m) => write!(f, "C({})", m),
        }
    }
}

/// Formal Q-linear combination of atoms plus an exact rational constant.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct RhoExpr {
    terms: BTreeMap<RhoAtom, Rational>,
    constant: Rational,
}

impl RhoExpr {
    pub fn zero() -> Self {
        RhoExpr::default()
    }

    pub fn constant(c: Rational) -> Self {
        RhoExpr {
            terms: BTreeMap::new(),
            constant: c,
        }
    }

    pub fn atom(a: RhoAtom) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(a, Rational::from_integer(1.into()));
        RhoExpr {
            terms,
            constant: Rational::zero(),
        }
    }

    pub fn add_atom(&mut self, a: RhoAtom, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&a) {
            None => {
                self.terms.insert(a, coeff);
            }
            Some(old) => {
                let s = old + coeff;
                if !s.is_zero() {
                    self.terms.insert(a, s);
                }
            }
        }
    }

    pub fn add(&self, rhs: &RhoExpr) -> RhoExpr {
        let mut out = self.clone();
        for (a, c) in &rhs.terms {
            out.add_atom(a.clone(), c.clone());
        }
        out.constant += &rhs.constant;
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&RhoAtom, &Rational)> {
        self.terms.iter()
    }

    pub fn constant_part(&self) -> &Rational {
        &self.constant
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.constant.is_zero()
    }

    /// The exact value when no symbols remain.
    pub fn exact_value(&self) -> Option<&Rational> {
        if self.terms.is_empty() {
            Some(&self.constant)
        } else {
            None
        }
    }

    /// Folds every atom with a known exact value into the constant.
    pub fn substitute(&self, values: &BTreeMap<RhoAtom, Rational>) -> RhoExpr {
        let mut out = RhoExpr::constant(self.constant.clone());
        for (a, c) in &self.terms {
            match values.get(a) {
                Some(v) => out.constant += c * v,
                None => out.add_atom(a.clone(), c.clone()),
            }
        }
        out
    }
}

impl fmt::Display for RhoExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (a, c) in &self.terms {
            if first {
                if c == &Rational::from_integer(1.into()) {
                    write!(f, "{}", a)?;
                } else if c == &Rational::from_integer((-1).into()) {
                    write!(f, "-{}", a)?;
                } else {
                    write!(f, "{}*{}", c, a)?;
                }
                first = false;
                continue;
            }
            if c == &Rational::from_integer(1.into()) {
                write!(f, " + {}", a)?;
            } else if c == &Rational::from_integer((-1).into()) {
                write!(f, " - {}", a)?;
            } else if c > &Rational::zero() {
                write!(f, " + {}*{}", c, a)?;
            } else {
                write!(f, " - {}*{}", -c.clone(), a)?;
            }
        }
        if !self.constant.is_zero() {
            if first {
                write!(f, "{}", self.constant)?;
            } else if self.constant > Rational::zero() {
                write!(f, " + {}", self.constant)?;
            } else {
                write!(f, " - {}", -self.constant.clone())?;
            }
        }
        Ok(())
    }
}

/// rho^1 of a catalog knot: exactly 0 for (+-)-amphichiral knots, a symbol
/// otherwise.
pub fn rho1_value(label: &str, amphichiral: bool) -> RhoExpr {
    if amphichiral {
        RhoExpr::zero()
    } else {
        RhoExpr::atom(RhoAtom::Rho1(label.to_string()))
    }
}

/// Base contribution of the outermost pattern's coefficient system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseContribution {
    /// The system extends over a slice-disk exterior: contributes 0.
    Zero,
    /// The metabelian P = 0 system: contributes the rho^1 symbol of the
    /// pattern (0 when amphichiral).
    Rho1,
}

/// A choice of which infection curves survive the coefficient system.
#[derive(Clone, Debug)]
pub struct Scenario {
    /// epsilon per curve id of the outermost pattern.
    pub eps: BTreeMap<String, bool>,
    pub base: BaseContribution,
}

/// Expands rho of an infection term under a scenario:
/// rho(term) = rho(base pattern) + sum eps_i * rho0(child_i).
/// Children must be leaves when their curve survives (their induced
/// systems then factor through the abelianization); curve depths >= 1
/// provide the structural factoring hypothesis.
pub fn additivity_expand(term: &InfectionTerm, scenario: &Scenario) -> Result<RhoExpr> {
    let InfectionTerm::Infect { pattern, children } = term else {
        return Err(Error::UnsupportedTerm(
            "additivity expansion needs an infection term".into(),
        ));
    };
    let curve_ids: BTreeSet<&str> = pattern.curves.iter().map(|c| c.id.as_str()).collect();
    let scenario_ids: BTreeSet<&str> = scenario.eps.keys().map(|s| s.as_str()).collect();
    if curve_ids != scenario_ids {
        return Err(Error::ScenarioMismatch(format!(
            "scenario curves {:?} do not match pattern curves {:?}",
            scenario_ids, curve_ids
        )));
    }
    let mut expr = match scenario.base {
        BaseContribution::Zero => RhoExpr::zero(),
        BaseContribution::Rho1 => rho1_value(&pattern.id, pattern.amphichiral),
    };
    for (curve, child) in pattern.curves.iter().zip(children) {
        if !scenario.eps[&curve.id] {
            continue;
        }
        match child {
            InfectionTerm::Leaf(k) => {
                expr.add_atom(
                    RhoAtom::Rho0(k.label.clone()),
                    Rational::from_integer(1.into()),
                );
            }
            InfectionTerm::Infect { .. } => {
                return Err(Error::UnsupportedTerm(format!(
                    "curve '{}' survives but its infecting knot is not a leaf; \
                     its contribution does not reduce to a rho0 atom",
                    curve.id
                )));
            }
        }
    }
    Ok(expr)
}

/// Exact rho0 values of the named leaves whose Seifert matrices are known.
pub fn known_rho0_values(term: &InfectionTerm) -> BTreeMap<RhoAtom, Rational> {
    let mut out = BTreeMap::new();
    for leaf in term.leaves() {
        if let Some(v) = &leaf.seifert {
            if let Some(exact) = rho0(v).exact {
                out.insert(RhoAtom::Rho0(leaf.label.clone()), exact);
            }
        }
    }
    out
}

/// Zero substitutions for the rho^1 symbols of amphichiral knots named in
/// the term (leaves and patterns).
pub fn amphichiral_zeros(term: &InfectionTerm) -> BTreeMap<RhoAtom, Rational> {
    let mut out = BTreeMap::new();
    fn walk(t: &InfectionTerm, out: &mut BTreeMap<RhoAtom, Rational>) {
        match t {
            InfectionTerm::Leaf(k) => {
                if k.amphichiral {
                    out.insert(RhoAtom::Rho1(k.label.clone()), Rational::zero());
                }
            }
            InfectionTerm::Infect { pattern, children } => {
                if pattern.amphichiral {
                    out.insert(RhoAtom::Rho1(pattern.id.clone()), Rational::zero());
                }
                for c in children {
                    walk(c, out);
                }
            }
        }
    }
    walk(term, &mut out);
    out
}

// ---------------------------------------------------------------------------
// First-order signatures.
// ---------------------------------------------------------------------------

/// One first-order signature: the isotropic submodule it comes from, the
/// scenario it induces, and the resulting expression.
#[derive(Clone, Debug)]
pub struct FirstOrderRow {
    pub submodule_order: String,
    pub eps: Vec<(String, bool)>,
    pub ribbon_kernel: bool,
    pub expr: RhoExpr,
}

#[derive(Clone, Debug)]
pub struct FirstOrderSignatures {
    pub rows: Vec<FirstOrderRow>,
    /// The signature set (rows can repeat an expression).
    pub set: BTreeSet<RhoExpr>,
    /// False when the isotropic-submodule enumeration was partial.
    pub complete: bool,
}

/// First-order L2-signatures of a genus-one knot given as an infection
/// term with leaf children, or as a bare Seifert matrix (no infections).
///
/// One expression per isotropic submodule P: eps_i = 0 exactly when the
/// curve's module class lies in P; the base contributes 0 when P is a
/// ribbon-disk kernel and the rho^1 symbol otherwise.
pub fn first_order_signatures(term: &InfectionTerm) -> Result<FirstOrderSignatures> {
    let (pattern, children): (Pattern, Vec<&LeafKnot>) = match term {
        InfectionTerm::Leaf(k) => {
            let Some(v) = &k.seifert else {
                return Err(Error::MissingLeafData(k.label.clone()));
            };
            let mut p = Pattern {
                id: k.label.clone(),
                kind: PatternKind::Knot,
                seifert: Some(v.clone()),
                sliceness: k.sliceness,
                curves: Vec::new(),
                amphichiral: k.amphichiral,
                ribbon_kernels: Vec::new(),
            };
            // a slice knot's disk kernel gives a zero base for the trivial
            // module (the only submodule in that case)
            if v.size() == 0 {
                p.ribbon_kernels.push(Vec::new());
            }
            (p, Vec::new())
        }
        InfectionTerm::Infect { pattern, children } => {
            if pattern.kind != PatternKind::Knot {
                return Err(Error::UnsupportedTerm(
                    "first-order signatures are defined for knots".into(),
                ));
            }
            let mut leaves = Vec::with_capacity(children.len());
            for c in children {
                match c {
                    InfectionTerm::Leaf(k) => leaves.push(k),
                    _ => {
                        return Err(Error::UnsupportedTerm(
                            "first-order signatures need leaf infections".into(),
                        ))
                    }
                }
            }
            (pattern.clone(), leaves)
        }
    };

    let v = pattern.seifert.as_ref().expect("knot pattern has a matrix");
    let enumeration = enumerate_isotropic_submodules(v)?;
    let module = AlexanderModule::new(v);

    let mut rows = Vec::new();
    let mut set = BTreeSet::new();
    for sub in &enumeration.submodules {
        let gens = std::slice::from_ref(&sub.generator);
        let ribbon_kernel = pattern.ribbon_kernels.iter().any(|k| {
            module.in_submodule(gens, k) && module.in_submodule(std::slice::from_ref(k), &sub.generator)
        }) || (v.size() == 0 && pattern.sliceness.is_slice());
        let mut expr = if ribbon_kernel {
            RhoExpr::zero()
        } else {
            RhoExpr::atom(RhoAtom::Rho1(pattern.id.clone()))
        };
        let mut eps = Vec::new();
        for (curve, leaf) in pattern.curves.iter().zip(&children) {
            let CurveClass::Module(class) = &curve.class else {
                return Err(Error::UnsupportedTerm(
                    "knot pattern curves must carry module classes".into(),
                ));
            };
            let inside = module.in_submodule(gens, class);
            eps.push((curve.id.clone(), !inside));
            if !inside {
                expr.add_atom(
                    RhoAtom::Rho0(leaf.label.clone()),
                    Rational::from_integer(1.into()),
                );
            }
        }
        set.insert(expr.clone());
        rows.push(FirstOrderRow {
            submodule_order: format!("{}", sub.order),
            eps,
            ribbon_kernel,
            expr,
        });
    }

    Ok(FirstOrderSignatures {
        rows,
        set,
        complete: enumeration.complete,
    })
}

// ---------------------------------------------------------------------------
// Slice-obstruction verdicts.
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    /// Iterated-doubling tower obstruction conditional on a Cheeger-Gromov
    /// bound of the unknot-filled tower.
    DoublingTower,
    /// Bing-double obstruction from all first-order signatures nonzero.
    BingFirstOrder,
}

#[derive(Clone, Debug)]
pub struct ScenarioRow {
    pub eps: Vec<(String, bool)>,
    pub expr: String,
}

/// A conditional obstruction certificate, shaped like the source theorems:
/// an inequality against an opaque Cheeger-Gromov symbol (towers) or a
/// list of signature expressions with their exceptional hyperplanes
/// (Bing doubles).
#[derive(Clone, Debug)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub statement: String,
    pub threshold: Option<RhoExpr>,
    pub members: Vec<String>,
    /// Exceptional hyperplanes: symbolic members are nonzero unless these
    /// equalities hold.
    pub conditions: Vec<String>,
    pub scenario_table: Vec<ScenarioRow>,
}

#[derive(Clone, Debug)]
pub enum Verdict {
    SliceByConstruction,
    Obstructed(Certificate),
    Inconclusive { reason: String },
}

impl Verdict {
    pub fn kind_str(&self) -> &'static str {
        match self {
            Verdict::SliceByConstruction => "slice-by-construction",
            Verdict::Obstructed(_) => "obstructed",
            Verdict::Inconclusive { .. } => "inconclusive",
        }
    }
}

/// Decision procedure, in order: all-slice leaves; doubling towers whose
/// levels all satisfy the Blanchfield nonvanishing hypothesis; Bing-type
/// single-infection links via first-order signatures; otherwise
/// inconclusive.
pub fn slice_obstruction(term: &InfectionTerm) -> Result<Verdict> {
    if term.all_leaves_slice() {
        return Ok(Verdict::SliceByConstruction);
    }

    if let Some(levels) = knot_tower_levels(term) {
        return tower_verdict(term, &levels);
    }

    if let InfectionTerm::Infect { pattern, children } = term {
        if let PatternKind::Link(_) = pattern.kind {
            if pattern.curves.len() == 1 && children.len() == 1 {
                return bing_verdict(term, pattern, &children[0]);
            }
        }
    }

    Ok(Verdict::Inconclusive {
        reason: "no obstruction rule applies to this term shape".into(),
    })
}

/// The per-level patterns of an iterated knot-doubling tower (outermost
/// first): every node is a knot pattern whose children are equal.
fn knot_tower_levels(term: &InfectionTerm) -> Option<Vec<Pattern>> {
    match term {
        InfectionTerm::Leaf(_) => None,
        InfectionTerm::Infect { pattern, children } => {
            if pattern.kind != PatternKind::Knot || pattern.seifert.is_none() {
                return None;
            }
            let first = children.first()?;
            if children.iter().any(|c| c != first) {
                return None;
            }
            let mut levels = vec![pattern.clone()];
            match first {
                InfectionTerm::Leaf(_) => Some(levels),
                _ => {
                    levels.extend(knot_tower_levels(first)?);
                    Some(levels)
                }
            }
        }
    }
}

fn module_curve_classes(pattern: &Pattern) -> Result<Vec<crate::blanchfield::ModuleElement>> {
    pattern
        .curves
        .iter()
        .map(|c| match &c.class {
            CurveClass::Module(m) => Ok(m.clone()),
            CurveClass::Word(_) => Err(Error::UnsupportedTerm(
                "knot pattern curves must carry module classes".into(),
            )),
        })
        .collect()
}

fn tower_ribbon_name(levels: &[Pattern]) -> String {
    let n = levels.len();
    if levels.iter().all(|p| p.id == "R1") {
        format!("M_R{}", n)
    } else {
        let ids: Vec<&str> = levels.iter().map(|p| p.id.as_str()).collect();
        format!("M_[{}](U)", ids.join("o"))
    }
}

fn tower_verdict(term: &InfectionTerm, levels: &[Pattern]) -> Result<Verdict> {
    for (depth, pattern) in levels.iter().enumerate() {
        if !pattern.sliceness.is_slice() {
            return Ok(Verdict::Inconclusive {
                reason: format!(
                    "tower level {} uses the non-slice pattern '{}'",
                    depth + 1,
                    pattern.id
                ),
            });
        }
        let v = pattern.seifert.as_ref().expect("knot tower level");
        let classes = module_curve_classes(pattern)?;
        let hyp = check_doubling_hypothesis(v, &classes)?;
        if !hyp.is_satisfied() {
            return Ok(Verdict::Inconclusive {
                reason: format!(
                    "doubling hypothesis fails at level {}: the curves generate an isotropic submodule of '{}'",
                    depth + 1,
                    pattern.id
                ),
            });
        }
    }

    let n = levels.len();
    let leaf = term.leaves()[0];
    let bound_name = tower_ribbon_name(levels);
    let threshold = RhoExpr::atom(RhoAtom::CgBound(bound_name.clone()));

    let known = known_rho0_values(term);
    let leaf_rho0 = known.get(&RhoAtom::Rho0(leaf.label.clone()));
    if leaf_rho0.map_or(false, |v| v.is_zero()) {
        // the conditional |rho0(K)| > C can never fire
        return Ok(Verdict::Inconclusive {
            reason: format!(
                "the tower obstruction is vacuous: rho0({}) = 0 exactly",
                leaf.label
            ),
        });
    }
    let rho0_note = match leaf_rho0 {
        Some(v) => format!(" (rho0({}) = {} exactly)", leaf.label, v),
        None => String::new(),
    };
    let arf_note = match leaf.seifert.as_ref().map(|v| v.arf()) {
        Some(0) => format!("; the term is ({})-solvable", n),
        Some(_) => format!("; the term is rationally ({})-solvable", n),
        None => String::new(),
    };
    let statement = format!(
        "if |rho0({})| > C({}) then no nonzero multiple of {} is rationally ({}.5)-solvable; in particular it is not slice and has infinite order in the concordance group{}{}",
        leaf.label, bound_name, term, n, rho0_note, arf_note
    );

    // scenario table over the outermost pattern's curves, constrained to
    // the at-least-one-survivor scenarios the nontriviality theorem allows
    let outer = &levels[0];
    let child_desc: Vec<String> = match term {
        InfectionTerm::Infect { children, .. } => {
            children.iter().map(|c| format!("{}", c)).collect()
        }
        _ => Vec::new(),
    };
    let base_name = format!(
        "rho(M_{}, phi)",
        if n >= 1 { &bound_name[2..] } else { "base" }
    );
    let mut scenario_table = Vec::new();
    let m = outer.curves.len();
    for mask in 1u32..(1 << m) {
        let eps: Vec<(String, bool)> = outer
            .curves
            .iter()
            .enumerate()
            .map(|(i, c)| (c.id.clone(), mask & (1 << i) != 0))
            .collect();
        let mut parts = vec![base_name.clone()];
        for (i, (_, on)) in eps.iter().enumerate() {
            if *on {
                parts.push(format!("rho(M[{}], phi_{})", child_desc[i], i + 1));
            }
        }
        scenario_table.push(ScenarioRow {
            eps,
            expr: parts.join(" + "),
        });
    }

    Ok(Verdict::Obstructed(Certificate {
        kind: CertificateKind::DoublingTower,
        statement,
        threshold: Some(threshold),
        members: Vec::new(),
        conditions: Vec::new(),
        scenario_table,
    }))
}

fn bing_verdict(
    term: &InfectionTerm,
    pattern: &Pattern,
    child: &InfectionTerm,
) -> Result<Verdict> {
    let k = pattern.curves[0].depth;
    let sigs = match first_order_signatures(child) {
        Ok(s) => s,
        Err(Error::UnsupportedTerm(msg)) => {
            return Ok(Verdict::Inconclusive {
                reason: format!("first-order signatures unavailable: {}", msg),
            })
        }
        Err(e) => return Err(e),
    };
    if !sigs.complete {
        return Ok(Verdict::Inconclusive {
            reason: "isotropic-submodule enumeration is partial for this module".into(),
        });
    }

    let mut values = known_rho0_values(child);
    values.append(&mut amphichiral_zeros(child));

    let mut members = Vec::new();
    let mut conditions = Vec::new();
    for expr in &sigs.set {
        let resolved = expr.substitute(&values);
        members.push(format!("{}", resolved));
        match resolved.exact_value() {
            Some(v) if v.is_zero() => {
                return Ok(Verdict::Inconclusive {
                    reason: format!(
                        "a first-order signature of {} is exactly 0 ({})",
                        child, expr
                    ),
                });
            }
            Some(_) => {}
            None => {
                if resolved.constant_part().is_zero() {
                    return Ok(Verdict::Inconclusive {
                        reason: format!(
                            "a first-order signature of {} is indeterminate: {}",
                            child, resolved
                        ),
                    });
                }
                // nonzero exact part plus symbols: nonzero off a hyperplane
                let symbols = RhoExpr {
                    terms: resolved.terms.clone(),
                    constant: Rational::zero(),
                };
                conditions.push(format!(
                    "{} is zero only if {} = {}",
                    resolved,
                    symbols,
                    -resolved.constant_part().clone()
                ));
            }
        }
    }

    let scenario_table = sigs
        .rows
        .iter()
        .map(|r| ScenarioRow {
            eps: r.eps.clone(),
            expr: format!("{}", r.expr),
        })
        .collect();

    let statement = format!(
        "every first-order signature of {} is nonzero (conditionally where listed); therefore {} is not topologically slice in a rational homology 4-ball, nor rationally ({}.5)-solvable",
        child,
        term,
        k + 1
    );

    Ok(Verdict::Obstructed(Certificate {
        kind: CertificateKind::BingFirstOrder,
        statement,
        threshold: None,
        members,
        conditions,
        scenario_table,
    }))
}
