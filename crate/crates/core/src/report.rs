//! Per-instance bound reports and their CSV / JSONL emission.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum LemmaId {
    L3a,
    L3b,
    #[serde(rename = "LCLASS")]
    Lclass,
    L1,
    #[serde(rename = "COR1")]
    Cor1,
    L4,
    #[serde(rename = "LCOVER")]
    Lcover,
    #[serde(rename = "THM_MAIN")]
    ThmMain,
}

impl LemmaId {
    pub const ALL: [LemmaId; 8] = [
        LemmaId::L3a,
        LemmaId::L3b,
        LemmaId::Lclass,
        LemmaId::L1,
        LemmaId::Cor1,
        LemmaId::L4,
        LemmaId::Lcover,
        LemmaId::ThmMain,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            LemmaId::L3a => "L3a",
            LemmaId::L3b => "L3b",
            LemmaId::Lclass => "LCLASS",
            LemmaId::L1 => "L1",
            LemmaId::Cor1 => "COR1",
            LemmaId::L4 => "L4",
            LemmaId::Lcover => "LCOVER",
            LemmaId::ThmMain => "THM_MAIN",
        }
    }

    pub fn parse(s: &str) -> Option<LemmaId> {
        LemmaId::ALL
            .iter()
            .copied()
            .find(|l| l.name().eq_ignore_ascii_case(s))
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A report side: exact integer, exact rational, a float, or a threshold so
/// large that only its logarithm (possibly iterated) is representable.
#[derive(Debug, Clone, Serialize)]
pub enum ReportValue {
    Integer(u128),
    Rational {
        num: u64,
        den: u64,
    },
    Real(f64),
    /// `log10` of the value; when even that overflows `f64`, `log10_log10`
    /// still pins it down.
    Huge {
        log10: f64,
        log10_log10: f64,
    },
}

impl ReportValue {
    pub fn rational(r: Rational) -> ReportValue {
        ReportValue::Rational {
            num: *r.numer(),
            den: *r.denom(),
        }
    }
}

impl fmt::Display for ReportValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReportValue::Integer(n) => write!(f, "{n}"),
            ReportValue::Rational { num, den } => write!(f, "{num}/{den}"),
            ReportValue::Real(x) => write!(f, "{x:.12e}"),
            ReportValue::Huge { log10, log10_log10 } => {
                if log10.is_finite() {
                    write!(f, "10^{log10:.6}")
                } else {
                    write!(f, "10^(10^{log10_log10:.6})")
                }
            }
        }
    }
}

/// One lemma checked on one instance.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub instance_id: String,
    pub lemma_id: LemmaId,
    pub lhs: ReportValue,
    pub rhs: ReportValue,
    pub holds: bool,
    /// Sorted key-value details: |G|, |Z(G)|, ε, c, α, … as applicable.
    pub context: BTreeMap<String, String>,
}

impl BoundReport {
    pub fn csv_header() -> &'static str {
        "instance_id,lemma_id,lhs,rhs,holds,context"
    }

    pub fn csv_line(&self) -> String {
        let context: Vec<String> = self
            .context
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        format!(
            "{},{},{},{},{},{}",
            self.instance_id,
            self.lemma_id,
            self.lhs,
            self.rhs,
            self.holds,
            context.join(";")
        )
    }

    pub fn jsonl_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
