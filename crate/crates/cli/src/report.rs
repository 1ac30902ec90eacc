//! Machine-readable reports (the --json surface) and their text renderers.
//! All numbers print as exact rationals `p/q` or certified `midpoint +-
//! radius` decimals; no bare floats.

use concord_core::algebra::interval::QInterval;
use concord_core::infection::SolvableLevel;
use concord_core::rho::{Certificate, Verdict};
use concord_core::seifert::{AlgebraicSliceness, MetabolizerKind, NonSliceCertificate};
use concord_core::signature::{decimal_string, Rho0Value, SignatureFunction};
use serde::Serialize;

pub fn rational_str(q: &concord_core::Rational) -> String {
    q.to_string()
}

#[derive(Serialize, Debug)]
pub struct Rho0Out {
    pub exact: Option<String>,
    pub midpoint: String,
    pub radius: String,
}

impl Rho0Out {
    pub fn from_value(v: &Rho0Value, digits: usize) -> Self {
        Rho0Out {
            exact: v.exact.as_ref().map(rational_str),
            midpoint: decimal_string(&v.interval.midpoint(), digits),
            radius: decimal_string(&v.interval.radius(), digits),
        }
    }

    pub fn text(&self) -> String {
        match &self.exact {
            Some(e) => format!("{} (exactly)", e),
            None => format!("{} +- {}", self.midpoint, self.radius),
        }
    }
}

#[derive(Serialize, Debug)]
pub struct SigRowOut {
    pub sigma: i64,
    pub theta_hi: String,
    pub theta_lo: String,
}

pub fn sig_rows(rows: &[(QInterval, QInterval, i64)], digits: usize) -> Vec<SigRowOut> {
    rows.iter()
        .map(|(lo, hi, sigma)| SigRowOut {
            sigma: *sigma,
            theta_hi: decimal_string(&hi.midpoint(), digits),
            theta_lo: decimal_string(&lo.midpoint(), digits),
        })
        .collect()
}

#[derive(Serialize, Debug)]
pub struct SignatureOut {
    pub at_minus_one: i64,
    pub jump_count: usize,
    pub rows: Vec<SigRowOut>,
}

impl SignatureOut {
    pub fn from_function(sf: &SignatureFunction, digits: usize) -> Self {
        SignatureOut {
            at_minus_one: sf.at_minus_one(),
            jump_count: sf.jumps().len(),
            rows: sig_rows(&sf.arc_rows_certified(digits), digits),
        }
    }
}

#[derive(Serialize, Debug)]
pub struct AlgSliceOut {
    pub certificate: Option<String>,
    pub verdict: String,
    pub witness: Option<Vec<Vec<i64>>>,
}

impl AlgSliceOut {
    pub fn from_decision(d: &AlgebraicSliceness) -> Self {
        match d {
            AlgebraicSliceness::Yes(w) => AlgSliceOut {
                certificate: None,
                verdict: "yes".into(),
                witness: Some(w.clone()),
            },
            AlgebraicSliceness::No(cert) => AlgSliceOut {
                certificate: Some(match cert {
                    NonSliceCertificate::SignatureNonzero { at, value } => {
                        format!("signature {} at x = {}", value, at)
                    }
                    NonSliceCertificate::FoxMilnorFails { factor } => {
                        format!("Fox-Milnor fails: self-reciprocal factor {} has odd multiplicity", factor)
                    }
                    NonSliceCertificate::NoIsotropicLine { discriminant } => {
                        format!("discriminant {} is not a square", discriminant)
                    }
                }),
                verdict: "no".into(),
                witness: None,
            },
            AlgebraicSliceness::Unknown => AlgSliceOut {
                certificate: None,
                verdict: "unknown".into(),
                witness: None,
            },
        }
    }
}

#[derive(Serialize, Debug)]
pub struct InvariantsReport {
    pub alexander: String,
    pub algebraically_slice: AlgSliceOut,
    pub arf: u8,
    pub expression: String,
    pub genus: usize,
    pub level: Option<String>,
    pub rho0: Rho0Out,
    pub signature: SignatureOut,
}

impl InvariantsReport {
    pub fn text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("knot:        {}\n", self.expression));
        out.push_str(&format!("Alexander:   {}\n", self.alexander));
        out.push_str(&format!("Arf:         {}\n", self.arf));
        out.push_str(&format!("genus:       {}\n", self.genus));
        out.push_str(&format!(
            "signature:   {} jump(s), sigma(-1) = {}\n",
            self.signature.jump_count, self.signature.at_minus_one
        ));
        for r in &self.signature.rows {
            out.push_str(&format!(
                "  theta in ({}, {}): sigma = {}\n",
                r.theta_lo, r.theta_hi, r.sigma
            ));
        }
        out.push_str(&format!("rho0:        {}\n", self.rho0.text()));
        out.push_str(&format!(
            "alg. slice:  {}{}\n",
            self.algebraically_slice.verdict,
            self.algebraically_slice
                .certificate
                .as_ref()
                .map(|c| format!(" ({})", c))
                .unwrap_or_default()
        ));
        if let Some(l) = &self.level {
            out.push_str(&format!("level:       {}\n", l));
        }
        out
    }
}

#[derive(Serialize, Debug)]
pub struct EpsOut {
    pub curve: String,
    pub survives: bool,
}

#[derive(Serialize, Debug)]
pub struct ScenarioRowOut {
    pub eps: Vec<EpsOut>,
    pub expr: String,
}

#[derive(Serialize, Debug)]
pub struct CertificateOut {
    pub conditions: Vec<String>,
    pub kind: String,
    pub members: Vec<String>,
    pub scenario_table: Vec<ScenarioRowOut>,
    pub statement: String,
    pub threshold: Option<String>,
}

impl CertificateOut {
    pub fn from_certificate(c: &Certificate) -> Self {
        CertificateOut {
            conditions: c.conditions.clone(),
            kind: match c.kind {
                concord_core::rho::CertificateKind::DoublingTower => "doubling-tower".into(),
                concord_core::rho::CertificateKind::BingFirstOrder => "bing-first-order".into(),
            },
            members: c.members.clone(),
            scenario_table: c
                .scenario_table
                .iter()
                .map(|r| ScenarioRowOut {
                    eps: r
                        .eps
                        .iter()
                        .map(|(curve, survives)| EpsOut {
                            curve: curve.clone(),
                            survives: *survives,
                        })
                        .collect(),
                    expr: r.expr.clone(),
                })
                .collect(),
            statement: c.statement.clone(),
            threshold: c.threshold.as_ref().map(|t| format!("{}", t)),
        }
    }
}

#[derive(Serialize, Debug)]
pub struct ObstructReport {
    pub certificate: Option<CertificateOut>,
    pub expression: String,
    pub reason: Option<String>,
    pub verdict: String,
}

impl ObstructReport {
    pub fn from_verdict(expression: String, v: &Verdict) -> Self {
        match v {
            Verdict::SliceByConstruction => ObstructReport {
                certificate: None,
                expression,
                reason: None,
                verdict: "slice-by-construction".into(),
            },
            Verdict::Obstructed(cert) => ObstructReport {
                certificate: Some(CertificateOut::from_certificate(cert)),
                expression,
                reason: None,
                verdict: "obstructed".into(),
            },
            Verdict::Inconclusive { reason } => ObstructReport {
                certificate: None,
                expression,
                reason: Some(reason.clone()),
                verdict: "inconclusive".into(),
            },
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!("term:    {}\nverdict: {}\n", self.expression, self.verdict);
        if let Some(r) = &self.reason {
            out.push_str(&format!("reason:  {}\n", r));
        }
        if let Some(c) = &self.certificate {
            out.push_str(&format!("certificate ({}):\n  {}\n", c.kind, c.statement));
            if let Some(t) = &c.threshold {
                out.push_str(&format!("  threshold: {}\n", t));
            }
            for m in &c.members {
                out.push_str(&format!("  member: {}\n", m));
            }
            for cond in &c.conditions {
                out.push_str(&format!("  condition: {}\n", cond));
            }
            for row in &c.scenario_table {
                let eps: Vec<String> = row
                    .eps
                    .iter()
                    .map(|e| format!("{}={}", e.curve, if e.survives { 1 } else { 0 }))
                    .collect();
                out.push_str(&format!("  scenario [{}]: {}\n", eps.join(", "), row.expr));
            }
        }
        out
    }
}

#[derive(Serialize, Debug)]
pub struct DepthReportOut {
    pub depth: u32,
    pub exact: bool,
    pub kmax: u32,
    pub word: String,
}

#[derive(Serialize, Debug)]
pub struct Genus1Out {
    pub kind: String,
    pub lines: Vec<[i64; 2]>,
}

#[derive(Serialize, Debug)]
pub struct SubmoduleOut {
    pub generator: Vec<String>,
    pub order: String,
}

#[derive(Serialize, Debug)]
pub struct IsotropyOut {
    pub complete: bool,
    pub submodules: Vec<SubmoduleOut>,
}

#[derive(Serialize, Debug)]
pub struct MetabolizersReport {
    pub expression: String,
    pub genus1: Option<Genus1Out>,
    pub isotropic: IsotropyOut,
}

impl MetabolizersReport {
    pub fn genus1_from(kind: &MetabolizerKind) -> Genus1Out {
        match kind {
            MetabolizerKind::None => Genus1Out {
                kind: "none".into(),
                lines: Vec::new(),
            },
            MetabolizerKind::All => Genus1Out {
                kind: "all".into(),
                lines: Vec::new(),
            },
            MetabolizerKind::Lines(lines) => Genus1Out {
                kind: "lines".into(),
                lines: lines.clone(),
            },
        }
    }
}

#[derive(Serialize, Debug)]
pub struct ModuleOut {
    pub cyclic: bool,
    pub order: String,
    pub smith_diagonal: Vec<String>,
}

#[derive(Serialize, Debug)]
pub struct PairingOut {
    pub value: String,
    pub x: Vec<String>,
    pub y: Vec<String>,
    pub zero: bool,
}

#[derive(Serialize, Debug)]
pub struct BlanchfieldReport {
    pub expression: String,
    pub module: ModuleOut,
    pub pairing: Option<PairingOut>,
}

#[derive(Serialize, Debug)]
pub struct CurveOut {
    pub depth: u32,
    pub id: String,
}

#[derive(Serialize, Debug)]
pub struct GhostOut {
    pub curves: Vec<CurveOut>,
    pub meridian_level: u32,
}

#[derive(Serialize, Debug)]
pub struct FamilyReport {
    pub clones: Vec<CurveOut>,
    pub expression: String,
    pub ghosts: Vec<GhostOut>,
    pub level: String,
    pub n: u32,
    pub residual: String,
    pub stage: u32,
}

#[derive(Serialize, Debug)]
pub struct Rho0Report {
    pub expression: String,
    pub rho0: Rho0Out,
}

#[derive(Serialize, Debug)]
pub struct SigfnReport {
    pub expression: String,
    pub rows: Vec<SigRowOut>,
}

#[derive(Serialize, Debug)]
pub struct CatalogListReport {
    pub names: Vec<String>,
}

#[derive(Serialize, Debug)]
pub struct CatalogAddReport {
    pub added: String,
    pub path: String,
}

pub fn level_string(level: &SolvableLevel) -> String {
    match level {
        SolvableLevel::SliceByConstruction => "slice-by-construction".into(),
        l @ SolvableLevel::Level { rational_only, .. } => {
            if *rational_only {
                format!("{} (rational)", l.level_string())
            } else {
                l.level_string()
            }
        }
    }
}
