//! JSON documents for instances, certificates and run reports.
//!
//! Numbers are rational strings (`"3"`, `"-1/3"`); plain JSON integers are
//! accepted on input. Index sets are 1-based on disk and 0-based in memory.
//! Syntax and number errors carry the line and column of the offending token.

use invlfp_linalg::{RatMatrix, RatVector, Rational};
use serde::{Deserialize, Serialize};

use crate::certificate::{Certificate, SupportPair};
use crate::error::{Error, Result, ValidationError};
use crate::model::{validate, Decision, Form, Instance, ParamPolyhedron, Scenario, TargetSet, Verdict};
use crate::oracle::{Backing, OracleCert, OracleTarget};

/// A parsed instance file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub instance: Instance,
    pub target: TargetSet,
    pub scenario: Option<Scenario>,
    /// For partial targets given with explicit positions: `permutation[new] = old`
    /// column index. The instance and target are stored in the permuted order.
    pub permutation: Option<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    form: Form,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    #[serde(rename = "A")]
    a: Vec<Vec<Rational>>,
    #[serde(rename = "B", default)]
    b_mat: Option<Vec<Vec<Rational>>>,
    b: Vec<Rational>,
    #[serde(rename = "C", default)]
    c_mat: Option<Vec<Vec<Rational>>>,
    c: Vec<Rational>,
    #[serde(rename = "X", default, skip_serializing_if = "Option::is_none")]
    x: Option<RawX>,
    target: RawTarget,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    scenario: Option<Scenario>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawX {
    #[serde(rename = "D")]
    d_mat: Vec<Vec<Rational>>,
    d: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
enum RawTarget {
    Singleton {
        ybar: Vec<Rational>,
    },
    Basis {
        basis: Vec<usize>,
    },
    Partial {
        ybar: Vec<Rational>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        positions: Option<Vec<usize>>,
    },
    Polyhedron {
        #[serde(rename = "S")]
        s: Vec<Vec<Rational>>,
        t: Vec<Rational>,
    },
    Oracle {
        backing: String,
        #[serde(rename = "R")]
        bound: Rational,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        delta: Option<Rational>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        lower: Option<Vec<Rational>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        upper: Option<Vec<Rational>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        center: Option<Vec<Rational>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        radius: Option<Rational>,
        #[serde(rename = "S", default, skip_serializing_if = "Option::is_none")]
        s: Option<Vec<Vec<Rational>>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        t: Option<Vec<Rational>>,
    },
}

fn json_err(e: serde_json::Error) -> Error {
    Error::Parse { message: e.to_string(), line: e.line(), column: e.column() }
}

fn mismatch(msg: impl Into<String>) -> Error {
    ValidationError::DimensionMismatch(msg.into()).into()
}

fn matrix(what: &str, rows: Vec<Vec<Rational>>, cols: usize) -> Result<RatMatrix> {
    if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != cols) {
        return Err(mismatch(format!("{what} row {} has {} entries, expected {cols}", i + 1, r.len())));
    }
    Ok(RatMatrix::from_rows(rows, cols))
}

fn to_zero_based(what: &str, idx: &[usize], bound: usize) -> Result<Vec<usize>> {
    idx.iter()
        .map(|&i| {
            if i == 0 || i > bound {
                Err(ValidationError::InvalidTarget(format!("{what} index {i} outside 1..={bound}")).into())
            } else {
                Ok(i - 1)
            }
        })
        .collect()
}

fn to_one_based(idx: &[usize]) -> Vec<usize> {
    idx.iter().map(|i| i + 1).collect()
}

pub fn parse_document(text: &str) -> Result<Document> {
    let raw: RawDocument = serde_json::from_str(text).map_err(json_err)?;
    let n = raw.c.len();
    let m = raw.b.len();
    let first_width = |rows: &Option<Vec<Vec<Rational>>>| rows.as_ref().and_then(|r| r.first()).map(Vec::len);
    let k = raw
        .k
        .or_else(|| first_width(&raw.b_mat))
        .or_else(|| first_width(&raw.c_mat))
        .or_else(|| raw.x.as_ref().and_then(|x| x.d_mat.first()).map(Vec::len))
        .unwrap_or(0);
    if raw.a.len() != m {
        return Err(mismatch(format!("A has {} rows but b has {m} entries", raw.a.len())));
    }
    let a = matrix("A", raw.a, n)?;
    let b_mat = match raw.b_mat {
        Some(rows) => {
            if rows.len() != m {
                return Err(mismatch(format!("B has {} rows, expected {m}", rows.len())));
            }
            matrix("B", rows, k)?
        }
        None => RatMatrix::zeros(m, k),
    };
    let c_mat = match raw.c_mat {
        Some(rows) => {
            if rows.len() != n {
                return Err(mismatch(format!("C has {} rows, expected {n}", rows.len())));
            }
            matrix("C", rows, k)?
        }
        None => RatMatrix::zeros(n, k),
    };
    let x_set = match raw.x {
        Some(x) => {
            if x.d_mat.len() != x.d.len() {
                return Err(mismatch("D and d disagree"));
            }
            ParamPolyhedron { d_mat: matrix("D", x.d_mat, k)?, d: RatVector(x.d) }
        }
        None => ParamPolyhedron::whole(k),
    };
    let mut instance = Instance { form: raw.form, a, b_mat, b: RatVector(raw.b), c_mat, c: RatVector(raw.c), x_set };
    let mut permutation = None;
    let target = match raw.target {
        RawTarget::Singleton { ybar } => TargetSet::Singleton { ybar: RatVector(ybar) },
        RawTarget::Basis { basis } => TargetSet::Basis { basis: to_zero_based("basis", &basis, n)? },
        RawTarget::Partial { ybar, positions } => {
            if let Some(pos) = positions {
                let pos = to_zero_based("position", &pos, n)?;
                if pos.len() != ybar.len() {
                    return Err(mismatch("partial target: positions and ybar differ in length"));
                }
                let mut order = pos.clone();
                order.extend((0..n).filter(|j| !pos.contains(j)));
                let mut seen = order.clone();
                seen.sort_unstable();
                seen.dedup();
                if seen.len() != n {
                    return Err(ValidationError::InvalidTarget("partial target positions repeat".into()).into());
                }
                instance = permute_columns(&instance, &order);
                permutation = Some(order);
            }
            TargetSet::PartialFix { ybar: RatVector(ybar) }
        }
        RawTarget::Polyhedron { s, t } => {
            if s.len() != t.len() {
                return Err(mismatch("S and t disagree"));
            }
            TargetSet::Polyhedron { s: matrix("S", s, n)?, t: RatVector(t) }
        }
        RawTarget::Oracle { backing, bound, delta, lower, upper, center, radius, s, t } => {
            let missing = |f: &str| Error::from(ValidationError::InvalidTarget(format!("{backing} oracle needs `{f}`")));
            let backing = match backing.as_str() {
                "box" => Backing::Box {
                    lower: RatVector(lower.ok_or_else(|| missing("lower"))?),
                    upper: RatVector(upper.ok_or_else(|| missing("upper"))?),
                },
                "ball" => Backing::Ball {
                    center: RatVector(center.ok_or_else(|| missing("center"))?),
                    radius: radius.ok_or_else(|| missing("radius"))?,
                },
                "polytope" => {
                    let s = s.ok_or_else(|| missing("S"))?;
                    let t = t.ok_or_else(|| missing("t"))?;
                    if s.len() != t.len() {
                        return Err(mismatch("oracle S and t disagree"));
                    }
                    Backing::Polytope { s: matrix("S", s, n)?, t: RatVector(t) }
                }
                other => {
                    return Err(ValidationError::InvalidTarget(format!("unknown oracle backing `{other}`")).into())
                }
            };
            let mut o = OracleTarget::new(backing, bound);
            if let Some(d) = delta {
                o.delta = d;
            }
            TargetSet::Oracle(o)
        }
    };
    validate(&instance, &target)?;
    Ok(Document { instance, target, scenario: raw.scenario, permutation })
}

fn permute_columns(inst: &Instance, order: &[usize]) -> Instance {
    Instance {
        a: inst.a.select_cols(order),
        c_mat: inst.c_mat.select_rows(order),
        c: inst.c.select(order),
        ..inst.clone()
    }
}

pub fn serialize_document(doc: &Document) -> String {
    let inst = &doc.instance;
    let target = match &doc.target {
        TargetSet::Singleton { ybar } => RawTarget::Singleton { ybar: ybar.0.clone() },
        TargetSet::Basis { basis } => RawTarget::Basis { basis: to_one_based(basis) },
        TargetSet::PartialFix { ybar } => RawTarget::Partial { ybar: ybar.0.clone(), positions: None },
        TargetSet::Polyhedron { s, t } => RawTarget::Polyhedron { s: s.to_rows(), t: t.0.clone() },
        TargetSet::Oracle(o) => {
            let mut raw = RawTarget::Oracle {
                backing: String::new(),
                bound: o.bound.clone(),
                delta: Some(o.delta.clone()),
                lower: None,
                upper: None,
                center: None,
                radius: None,
                s: None,
                t: None,
            };
            if let RawTarget::Oracle { backing, lower, upper, center, radius, s, t, .. } = &mut raw {
                match &o.backing {
                    Backing::Box { lower: l, upper: u } => {
                        *backing = "box".into();
                        *lower = Some(l.0.clone());
                        *upper = Some(u.0.clone());
                    }
                    Backing::Ball { center: c, radius: r } => {
                        *backing = "ball".into();
                        *center = Some(c.0.clone());
                        *radius = Some(r.clone());
                    }
                    Backing::Polytope { s: sm, t: tv } => {
                        *backing = "polytope".into();
                        *s = Some(sm.to_rows());
                        *t = Some(tv.0.clone());
                    }
                }
            }
            raw
        }
    };
    let raw = RawDocument {
        form: inst.form,
        k: Some(inst.k()),
        a: inst.a.to_rows(),
        b_mat: Some(inst.b_mat.to_rows()),
        b: inst.b.0.clone(),
        c_mat: Some(inst.c_mat.to_rows()),
        c: inst.c.0.clone(),
        x: Some(RawX { d_mat: inst.x_set.d_mat.to_rows(), d: inst.x_set.d.0.clone() }),
        target,
        scenario: doc.scenario,
    };
    serde_json::to_string_pretty(&raw).expect("documents serialize")
}

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
enum RawCertificate {
    ActiveSet { active: Vec<usize> },
    SupportFamily { active: Vec<usize>, supports: Vec<RawSupport> },
    BasisZeroSet { zero: Vec<usize> },
    Oracle { active: Vec<usize>, yhat: Vec<Rational> },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSupport {
    plus: Vec<usize>,
    minus: Vec<usize>,
}

fn cert_to_raw(c: &Certificate) -> RawCertificate {
    match c {
        Certificate::ActiveSet { active } => RawCertificate::ActiveSet { active: to_one_based(active) },
        Certificate::SupportFamily { active, supports } => RawCertificate::SupportFamily {
            active: to_one_based(active),
            supports: supports
                .iter()
                .map(|p| RawSupport { plus: to_one_based(&p.plus), minus: to_one_based(&p.minus) })
                .collect(),
        },
        Certificate::BasisZeroSet { zero } => RawCertificate::BasisZeroSet { zero: to_one_based(zero) },
        Certificate::Oracle(o) => RawCertificate::Oracle { active: to_one_based(&o.active), yhat: o.yhat.0.clone() },
    }
}

fn cert_from_raw(raw: RawCertificate) -> Result<Certificate> {
    // Indices are checked against the instance by the verifier; here only 0 is invalid.
    let zb = |v: Vec<usize>| -> Result<Vec<usize>> { to_zero_based("certificate", &v, usize::MAX) };
    Ok(match raw {
        RawCertificate::ActiveSet { active } => Certificate::ActiveSet { active: zb(active)? },
        RawCertificate::SupportFamily { active, supports } => Certificate::SupportFamily {
            active: zb(active)?,
            supports: supports
                .into_iter()
                .map(|p| Ok(SupportPair { plus: zb(p.plus)?, minus: zb(p.minus)? }))
                .collect::<Result<_>>()?,
        },
        RawCertificate::BasisZeroSet { zero } => Certificate::BasisZeroSet { zero: zb(zero)? },
        RawCertificate::Oracle { active, yhat } => {
            Certificate::Oracle(OracleCert { active: zb(active)?, yhat: RatVector(yhat) })
        }
    })
}

pub fn certificate_to_json(c: &Certificate) -> serde_json::Value {
    serde_json::to_value(cert_to_raw(c)).expect("certificates serialize")
}

pub fn serialize_certificate(c: &Certificate) -> String {
    serde_json::to_string_pretty(&cert_to_raw(c)).expect("certificates serialize")
}

/// Reads a certificate document, or the `certificate` field of a run report.
pub fn parse_certificate(text: &str) -> Result<Certificate> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(json_err)?;
    let inner = match value.get("certificate") {
        Some(serde_json::Value::Null) => {
            return Err(Error::Parse { message: "report carries no certificate".into(), line: 1, column: 1 })
        }
        Some(c) => c.clone(),
        None => value,
    };
    let raw: RawCertificate = serde_json::from_value(inner)
        .map_err(|e| Error::Parse { message: e.to_string(), line: 0, column: 0 })?;
    cert_from_raw(raw)
}

/// Machine-readable summary of one `decide` run.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub verdict: Verdict,
    pub scenario: Scenario,
    pub witness_x: Option<Vec<Rational>>,
    pub certificate: Option<serde_json::Value>,
    pub solver: String,
    pub systems_examined: u64,
    pub wall_time_ms: f64,
}

impl RunReport {
    pub fn new(d: &Decision, solver: &str, wall_time_ms: f64) -> Self {
        RunReport {
            verdict: d.verdict,
            scenario: d.scenario,
            witness_x: d.witness_x.as_ref().map(|x| x.0.clone()),
            certificate: d.certificate.as_ref().map(certificate_to_json),
            solver: solver.to_string(),
            systems_examined: d.systems_examined,
            wall_time_ms,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Parses a comma- or whitespace-separated list of rationals.
pub fn parse_rational_list(text: &str) -> Result<RatVector> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .enumerate()
        .map(|(i, s)| {
            s.parse::<Rational>().map_err(|e| Error::Parse { message: format!("entry {}: {e}", i + 1), line: 1, column: 0 })
        })
        .collect::<Result<Vec<_>>>()
        .map(RatVector)
}
