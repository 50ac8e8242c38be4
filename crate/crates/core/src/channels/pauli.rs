use serde::{Deserialize, Serialize};

use crate::error::{check_range, Error, Result};
use crate::qops::{check_dim, WeylIndex};

const SUM_TOL: f64 = 1e-9;

/// Probability table over Weyl indices defining a Pauli channel.
///
/// One-sided tables are indexed by `(m, n)`; joint two-sided tables by
/// `(m, n, m̃, ñ)`. JSON form: `{"d": 2, "q": [[...], ...]}` with row index `m`
/// and column `n`; joint tables nest four levels deep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "PauliSpecJson", into = "PauliSpecJson")]
pub struct PauliSpec {
    d: usize,
    table: PauliTable,
}

#[derive(Debug, Clone, PartialEq)]
pub enum PauliTable {
    /// `q[m·d + n]`
    OneSided(Vec<f64>),
    /// `q[(m·d + n)·d² + m̃·d + ñ]`
    Joint(Vec<f64>),
}

#[derive(Serialize, Deserialize)]
struct PauliSpecJson {
    d: usize,
    q: NestedTable,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum NestedTable {
    OneSided(Vec<Vec<f64>>),
    Joint(Vec<Vec<Vec<Vec<f64>>>>),
}

impl TryFrom<PauliSpecJson> for PauliSpec {
    type Error = Error;

    fn try_from(j: PauliSpecJson) -> Result<Self> {
        match j.q {
            NestedTable::OneSided(rows) => PauliSpec::one_sided_nested(j.d, &rows),
            NestedTable::Joint(t) => {
                let d = j.d;
                let bad = || Error::InvalidProbabilities(format!("joint table must be {d}×{d}×{d}×{d}"));
                if t.len() != d {
                    return Err(bad());
                }
                let mut flat = Vec::with_capacity(d.pow(4));
                for a in &t {
                    if a.len() != d {
                        return Err(bad());
                    }
                    for b in a {
                        if b.len() != d {
                            return Err(bad());
                        }
                        for c in b {
                            if c.len() != d {
                                return Err(bad());
                            }
                            flat.extend_from_slice(c);
                        }
                    }
                }
                PauliSpec::joint(d, flat)
            }
        }
    }
}

impl From<PauliSpec> for PauliSpecJson {
    fn from(s: PauliSpec) -> Self {
        let d = s.d;
        let q = match s.table {
            PauliTable::OneSided(q) => NestedTable::OneSided(q.chunks(d).map(<[f64]>::to_vec).collect()),
            PauliTable::Joint(q) => NestedTable::Joint(
                q.chunks(d * d * d)
                    .map(|a| {
                        a.chunks(d * d)
                            .map(|b| b.chunks(d).map(<[f64]>::to_vec).collect())
                            .collect()
                    })
                    .collect(),
            ),
        };
        PauliSpecJson { d, q }
    }
}

fn validate(q: &[f64]) -> Result<()> {
    if let Some(&bad) = q.iter().find(|&&x| x < 0.0 || !x.is_finite()) {
        return Err(Error::InvalidProbabilities(format!("entry {bad} is negative or not finite")));
    }
    let sum: f64 = q.iter().sum();
    if (sum - 1.0).abs() > SUM_TOL {
        return Err(Error::InvalidProbabilities(format!("entries sum to {sum}")));
    }
    Ok(())
}

impl PauliSpec {
    /// One-sided table from a flat list in `(m, n)` row-major order.
    pub fn one_sided(d: usize, q: Vec<f64>) -> Result<Self> {
        check_dim(d)?;
        if q.len() != d * d {
            return Err(Error::InvalidProbabilities(format!("expected {} entries, got {}", d * d, q.len())));
        }
        validate(&q)?;
        Ok(Self {
            d,
            table: PauliTable::OneSided(q),
        })
    }

    pub fn one_sided_nested(d: usize, rows: &[Vec<f64>]) -> Result<Self> {
        if rows.len() != d || rows.iter().any(|r| r.len() != d) {
            return Err(Error::InvalidProbabilities(format!("table must be {d}×{d}")));
        }
        Self::one_sided(d, rows.concat())
    }

    /// Joint two-sided table, flat in `(m, n, m̃, ñ)` row-major order.
    pub fn joint(d: usize, q: Vec<f64>) -> Result<Self> {
        check_dim(d)?;
        if q.len() != d.pow(4) {
            return Err(Error::InvalidProbabilities(format!("expected {} entries, got {}", d.pow(4), q.len())));
        }
        validate(&q)?;
        Ok(Self {
            d,
            table: PauliTable::Joint(q),
        })
    }

    /// Product table `q_a(m, n) · q_b(m̃, ñ)`.
    pub fn product(a: &PauliSpec, b: &PauliSpec) -> Result<Self> {
        let (qa, qb) = match (&a.table, &b.table) {
            (PauliTable::OneSided(x), PauliTable::OneSided(y)) if a.d == b.d => (x, y),
            _ => return Err(Error::InvalidArgument("product needs two one-sided tables of equal d".into())),
        };
        let q = qa.iter().flat_map(|&x| qb.iter().map(move |&y| x * y)).collect();
        Ok(Self {
            d: a.d,
            table: PauliTable::Joint(q),
        })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn table(&self) -> &PauliTable {
        &self.table
    }

    pub fn is_joint(&self) -> bool {
        matches!(self.table, PauliTable::Joint(_))
    }

    /// Flat probability list regardless of form.
    pub fn probabilities(&self) -> &[f64] {
        match &self.table {
            PauliTable::OneSided(q) | PauliTable::Joint(q) => q,
        }
    }

    /// `q_mn` of a one-sided table.
    pub fn q(&self, idx: WeylIndex) -> Option<f64> {
        match &self.table {
            PauliTable::OneSided(q) if idx.d() == self.d => Some(q[idx.flat()]),
            _ => None,
        }
    }

    /// `q_{mn m̃ñ}` of a joint table.
    pub fn q_joint(&self, a: WeylIndex, b: WeylIndex) -> Option<f64> {
        let d2 = self.d * self.d;
        match &self.table {
            PauliTable::Joint(q) if a.d() == self.d && b.d() == self.d => Some(q[a.flat() * d2 + b.flat()]),
            _ => None,
        }
    }

    /// Lifts a one-sided table to a joint one acting on side A (`q_{mn,00}`) or B (`q_{00,mn}`).
    pub(crate) fn embed_joint(&self, on_a: bool) -> Self {
        match &self.table {
            PauliTable::Joint(_) => self.clone(),
            PauliTable::OneSided(q) => {
                let d2 = self.d * self.d;
                let mut joint = vec![0.0; d2 * d2];
                for (i, &x) in q.iter().enumerate() {
                    let k = if on_a { i * d2 } else { i };
                    joint[k] = x;
                }
                Self {
                    d: self.d,
                    table: PauliTable::Joint(joint),
                }
            }
        }
    }

    /// Marginal one-sided table of side A (`first = true`) or B of a joint table.
    pub fn marginal(&self, first: bool) -> Self {
        match &self.table {
            PauliTable::OneSided(_) => self.clone(),
            PauliTable::Joint(q) => {
                let d2 = self.d * self.d;
                let mut m = vec![0.0; d2];
                for (k, &x) in q.iter().enumerate() {
                    let idx = if first { k / d2 } else { k % d2 };
                    m[idx] += x;
                }
                Self {
                    d: self.d,
                    table: PauliTable::OneSided(m),
                }
            }
        }
    }

    /// Table of the composition of two joint Pauli channels (group convolution).
    pub(crate) fn compose_joint(&self, other: &Self) -> Self {
        let d = self.d;
        let d2 = d * d;
        let (p, q) = (self.embed_joint(true), other.embed_joint(true));
        let (p, q) = (p.probabilities(), q.probabilities());
        let add = |x: usize, y: usize| {
            let (xm, xn) = (x / d, x % d);
            let (ym, yn) = (y / d, y % d);
            ((xm + ym) % d) * d + (xn + yn) % d
        };
        let mut out = vec![0.0; d2 * d2];
        for (i, &pi) in p.iter().enumerate() {
            if pi == 0.0 {
                continue;
            }
            for (j, &qj) in q.iter().enumerate() {
                if qj == 0.0 {
                    continue;
                }
                let a = add(i / d2, j / d2);
                let b = add(i % d2, j % d2);
                out[a * d2 + b] += pi * qj;
            }
        }
        Self {
            d,
            table: PauliTable::Joint(out),
        }
    }
}

/// Depolarizing table: `q_00 = 1 − p + p/d²`, every other entry `p/d²`.
pub fn depolarizing_spec(d: usize, p: f64) -> Result<PauliSpec> {
    check_dim(d)?;
    check_range("p", p, 0.0, 1.0)?;
    let d2 = (d * d) as f64;
    let mut q = vec![p / d2; d * d];
    q[0] = 1.0 - p + p / d2;
    PauliSpec::one_sided(d, q)
}
