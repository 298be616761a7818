//! Report payloads and their text rendering. Every JSON payload carries
//! `"schema": 1`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use ramify_core::frobenius::{FrobeniusConstraint, TupleStatus, TupleVerdict};
use ramify_core::rules::{Evidence, NumberFieldReport, NumberFieldVerdict, RuleKind};
use ramify_core::FiniteGroup;

pub const SCHEMA: u32 = 1;

pub const FF_EXCLUDED: &str = "EXCLUDED (proved not in π_A^t)";
pub const FF_INCONCLUSIVE: &str = "INCONCLUSIVE (necessary condition passes)";
pub const NF_EXCLUDED: &str = "EXCLUDED (proved not in π_A)";
pub const NF_INCONCLUSIVE: &str = "INCONCLUSIVE (necessary condition passes)";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub spec: String,
    pub order: usize,
    pub degree: usize,
}

impl GroupInfo {
    pub fn of(g: &FiniteGroup) -> Self {
        GroupInfo {
            spec: g.label(),
            order: g.order(),
            degree: g.degree(),
        }
    }
}

/// Witness entries in 1-based cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCycles {
    pub finite: Vec<String>,
    pub infinity: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FfReport {
    pub schema: u32,
    pub command: String,
    pub group: GroupInfo,
    pub constraint: FrobeniusConstraint,
    pub verdict: TupleVerdict,
    pub witness_cycles: Option<WitnessCycles>,
    pub summary: String,
}

impl FfReport {
    pub fn new(g: &FiniteGroup, constraint: FrobeniusConstraint, verdict: TupleVerdict) -> Self {
        let witness_cycles = verdict.witness.as_ref().map(|w| WitnessCycles {
            finite: w
                .finite_entries
                .iter()
                .map(|&x| g.element(x).to_string())
                .collect(),
            infinity: g.element(w.infinity_entry).to_string(),
        });
        let summary = match verdict.status {
            TupleStatus::Excluded => FF_EXCLUDED,
            TupleStatus::TuplesExist => FF_INCONCLUSIVE,
        }
        .to_string();
        FfReport {
            schema: SCHEMA,
            command: "check-ff".into(),
            group: GroupInfo::of(g),
            constraint,
            verdict,
            witness_cycles,
            summary,
        }
    }

    pub fn render_text(&self) -> String {
        let c = &self.constraint;
        let mut s = String::new();
        let _ = writeln!(s, "group: {} (order {})", self.group.spec, self.group.order);
        let _ = writeln!(
            s,
            "constraint: q = {}, degree of the ramified prime d = {}, infinity {}",
            c.q,
            c.d,
            if c.allow_infinity {
                "tamely ramified allowed"
            } else {
                "unramified"
            }
        );
        let _ = writeln!(s, "verdict: {}", self.summary);
        if let Some(w) = &self.witness_cycles {
            for (i, x) in w.finite.iter().enumerate() {
                let _ = writeln!(s, "  x{} = {x}", i + 1);
            }
            let _ = writeln!(s, "  x_inf = {}", w.infinity);
        }
        let _ = writeln!(
            s,
            "class vectors searched: {}, nodes visited: {}",
            self.verdict.classes_searched, self.verdict.nodes_visited
        );
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NfReport {
    pub schema: u32,
    pub command: String,
    pub group: GroupInfo,
    pub report: NumberFieldReport,
    pub summary: String,
}

pub fn describe_evidence(e: &Evidence) -> String {
    match e {
        Evidence::QuasiPQuotient {
            quasi_p_order,
            quotient_order,
            quotient_cyclic,
            p_minus_1,
        } => format!(
            "|p(G)| = {quasi_p_order}, G/p(G) {} of order {quotient_order}, p-1 = {p_minus_1}",
            if *quotient_cyclic { "cyclic" } else { "not cyclic" }
        ),
        Evidence::Discriminant {
            degree,
            valuation,
            upper_bound,
            lower_bound,
            ..
        } => format!(
            "root discriminant <= {upper_bound} (v_p(|G|) = {valuation}), lower bound {lower_bound} at degree {degree}"
        ),
        Evidence::Dihedral {
            dihedral_n,
            in_registry,
        } => match dihedral_n {
            Some(n) => format!(
                "dihedral of order {}, prime {} the registry",
                2 * n,
                if *in_registry { "in" } else { "not in" }
            ),
            None => "not dihedral".into(),
        },
        Evidence::NonsolvableSmall { order, solvable } => format!(
            "order {order}, {}",
            if *solvable { "solvable" } else { "nonsolvable" }
        ),
        Evidence::SolvablePrime3 { branch } => match branch {
            Some(b) => format!("branch {b:?}"),
            None => "not evaluated".into(),
        },
        Evidence::Citation { group, source } => format!("{group}: {source}"),
    }
}

impl NfReport {
    pub fn new(g: &FiniteGroup, report: NumberFieldReport) -> Self {
        let summary = match report.verdict {
            NumberFieldVerdict::Excluded => NF_EXCLUDED,
            NumberFieldVerdict::Inconclusive => NF_INCONCLUSIVE,
        }
        .to_string();
        NfReport {
            schema: SCHEMA,
            command: "check-nf".into(),
            group: GroupInfo::of(g),
            report,
            summary,
        }
    }

    pub fn render_text(&self) -> String {
        let r = &self.report;
        let mut s = String::new();
        let _ = writeln!(s, "group: {} (order {})", self.group.spec, self.group.order);
        let _ = writeln!(s, "prime: p = {}", r.prime);
        let _ = writeln!(s, "verdict: {}", self.summary);
        let _ = writeln!(s, "rules:");
        for o in &r.rules {
            let kind = match o.kind {
                RuleKind::Computed => "computed",
                RuleKind::Citation => "citation",
            };
            let _ = writeln!(
                s,
                "  [{}] {} ({kind}): {}",
                if o.fired { "fired" } else { "  -  " },
                o.rule,
                describe_evidence(&o.evidence)
            );
        }
        if let Some(c) = &r.ramification_constraint {
            let _ = writeln!(s, "ramification index at 3: {c}");
        }
        s
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepRow {
    pub parameter: u64,
    pub group: String,
    pub order: usize,
    pub verdict: String,
    pub detail: String,
    pub elapsed_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepReport {
    pub schema: u32,
    pub command: String,
    pub family: String,
    pub mode: String,
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "sweep: family {} ({})", self.family, self.mode);
        let _ = writeln!(
            s,
            "{:<16} {:>6}  {:<14} {:>10}  detail",
            "group", "order", "verdict", "ms"
        );
        for r in &self.rows {
            let _ = writeln!(
                s,
                "{:<16} {:>6}  {:<14} {:>10.3}  {}",
                r.group, r.order, r.verdict, r.elapsed_ms, r.detail
            );
        }
        s
    }

    pub fn render_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        for r in &self.rows {
            w.serialize(r)?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub section: String,
    pub name: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TablesReport {
    pub schema: u32,
    pub command: String,
    pub rows: Vec<TableRow>,
    pub passed: usize,
    pub failed: usize,
}

impl TablesReport {
    pub fn new(rows: Vec<TableRow>) -> Self {
        let passed = rows.iter().filter(|r| r.pass).count();
        TablesReport {
            schema: SCHEMA,
            command: "paper-tables".into(),
            failed: rows.len() - passed,
            passed,
            rows,
        }
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            let _ = write!(
                s,
                "{} [{}] {}: {}",
                if r.pass { "PASS" } else { "FAIL" },
                r.section,
                r.name,
                r.actual
            );
            if !r.pass {
                let _ = write!(s, " (expected {})", r.expected);
            }
            s.push('\n');
        }
        let _ = writeln!(s, "{} passed, {} failed", self.passed, self.failed);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ramify_core::families::{alternating, cyclic};
    use ramify_core::frobenius::search_tuple;
    use ramify_core::rules::{check_number_field, RulesConfig};

    #[test]
    fn ff_report_round_trips() {
        let g = cyclic(2).unwrap();
        let c = FrobeniusConstraint::new(3, 2, false).unwrap();
        let r = FfReport::new(&g, c, search_tuple(&g, &c).unwrap());
        assert_eq!(r.summary, FF_INCONCLUSIVE);
        let w = r.witness_cycles.as_ref().unwrap();
        assert_eq!(w.finite, vec!["(1 2)", "(1 2)"]);
        assert_eq!(w.infinity, "()");
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains("\"schema\":1"));
        assert_eq!(serde_json::from_str::<FfReport>(&json).unwrap(), r);
    }

    #[test]
    fn nf_report_round_trips() {
        let g = alternating(5).unwrap();
        let r = NfReport::new(
            &g,
            check_number_field(&g, 3, &RulesConfig::default()).unwrap(),
        );
        assert_eq!(r.summary, NF_EXCLUDED);
        let text = r.render_text();
        assert!(text.contains("root discriminant <= 9"));
        assert!(text.contains("9 | e"));
        let json = serde_json::to_string_pretty(&r).unwrap();
        assert_eq!(serde_json::from_str::<NfReport>(&json).unwrap(), r);
    }

    #[test]
    fn sweep_csv_has_header() {
        let report = SweepReport {
            schema: SCHEMA,
            command: "sweep".into(),
            family: "cyclic".into(),
            mode: "ff".into(),
            rows: vec![SweepRow {
                parameter: 2,
                group: "C(2)".into(),
                order: 2,
                verdict: "Excluded".into(),
                detail: "x, y".into(),
                elapsed_ms: 0.5,
            }],
        };
        let csv = report.render_csv().unwrap();
        assert_eq!(
            csv,
            "parameter,group,order,verdict,detail,elapsed_ms\n2,C(2),2,Excluded,\"x, y\",0.5\n"
        );
    }
}
