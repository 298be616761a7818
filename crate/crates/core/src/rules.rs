//! Exclusion rules for Galois groups over `Q` ramified at a single prime `p`.
//!
//! Each rule inspects a [`FiniteGroup`] and a prime and either fires (the
//! group cannot occur) or does not (no claim). Outcomes carry the numbers or
//! structural facts behind them so they can be replayed.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::RuleError;
use crate::group::FiniteGroup;

/// Root-discriminant lower bounds: a field of degree at least `min_degree` has
/// root discriminant at least `lower_bound`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OdlyzkoTable {
    thresholds: Vec<OdlyzkoThreshold>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct OdlyzkoThreshold {
    pub min_degree: u64,
    pub lower_bound: f64,
}

impl OdlyzkoTable {
    pub fn new(mut thresholds: Vec<OdlyzkoThreshold>) -> Result<Self, RuleError> {
        thresholds.sort_by_key(|t| t.min_degree);
        for w in thresholds.windows(2) {
            if w[0].min_degree == w[1].min_degree {
                return Err(RuleError::Config(format!(
                    "duplicate degree {} in discriminant table",
                    w[0].min_degree
                )));
            }
            if w[1].lower_bound < w[0].lower_bound {
                return Err(RuleError::Config(
                    "discriminant bounds must be nondecreasing in the degree".into(),
                ));
            }
        }
        if let Some(t) = thresholds
            .iter()
            .find(|t| !t.lower_bound.is_finite() || t.min_degree == 0)
        {
            return Err(RuleError::Config(format!("bad table entry {t:?}")));
        }
        Ok(OdlyzkoTable { thresholds })
    }

    pub fn thresholds(&self) -> &[OdlyzkoThreshold] {
        &self.thresholds
    }

    /// Bound at the largest threshold `≤ n`; `1.0` (no information) below the
    /// smallest one.
    pub fn lower_bound(&self, n: u64) -> f64 {
        self.thresholds
            .iter()
            .rev()
            .find(|t| t.min_degree <= n)
            .map_or(1.0, |t| t.lower_bound)
    }
}

impl Default for OdlyzkoTable {
    fn default() -> Self {
        let entries = [(60, 12.23), (120, 14.38), (160, 15.12)];
        OdlyzkoTable {
            thresholds: entries
                .iter()
                .map(|&(min_degree, lower_bound)| OdlyzkoThreshold {
                    min_degree,
                    lower_bound,
                })
                .collect(),
        }
    }
}

pub fn odlyzko_lower_bound(n: u64, table: &OdlyzkoTable) -> f64 {
    table.lower_bound(n)
}

/// Upper bound `p^(1 + v_p(e) − 1/e)` on the root discriminant of a Galois
/// extension ramified only at `p` with ramification index `e`.
pub fn neukirch_upper_bound(p: u64, e: u64) -> f64 {
    assert!(e >= 1, "ramification index must be positive");
    let v = arith::valuation(e, p) as f64;
    (p as f64).powf(1.0 + v - 1.0 / e as f64)
}

/// Primes `p ≡ 1 (mod 4)` that are regular with `Q(√p)` of class number 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularPrimeRegistry {
    primes: BTreeSet<u64>,
}

impl RegularPrimeRegistry {
    pub const DEFAULT_PRIMES: [u64; 10] = [5, 13, 17, 29, 41, 53, 61, 73, 89, 97];

    pub fn new(primes: impl IntoIterator<Item = u64>) -> Self {
        RegularPrimeRegistry {
            primes: primes.into_iter().collect(),
        }
    }

    pub fn contains(&self, p: u64) -> bool {
        self.primes.contains(&p)
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.primes.iter().copied()
    }
}

impl Default for RegularPrimeRegistry {
    fn default() -> Self {
        RegularPrimeRegistry::new(Self::DEFAULT_PRIMES)
    }
}

/// Groups recognized structurally for the citation registry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum KnownGroup {
    A5,
    S5,
    Sl32,
}

impl KnownGroup {
    pub fn identify(g: &FiniteGroup) -> Option<KnownGroup> {
        match g.order() {
            60 if !g.is_solvable() => Some(KnownGroup::A5),
            120 if !g.is_solvable()
                && g.center().is_trivial()
                && g.derived_subgroup(&g.whole()).order() == 60 =>
            {
                Some(KnownGroup::S5)
            }
            168 if !g.is_solvable() => Some(KnownGroup::Sl32),
            _ => None,
        }
    }
}

impl fmt::Display for KnownGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            KnownGroup::A5 => "A5",
            KnownGroup::S5 => "S5",
            KnownGroup::Sl32 => "SL(3,2)",
        })
    }
}

/// An exclusion taken from the literature rather than computed here.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CitedExclusion {
    pub group: KnownGroup,
    pub prime: u64,
    pub source: String,
}

pub fn default_citations() -> Vec<CitedExclusion> {
    let cite = |group, prime, source: &str| CitedExclusion {
        group,
        prime,
        source: source.to_string(),
    };
    vec![
        cite(KnownGroup::A5, 2, "Harbater, Example 2.21(a)"),
        cite(KnownGroup::S5, 2, "Harbater, Example 2.21(a)"),
        cite(KnownGroup::Sl32, 2, "Harbater, Example 2.21(c)"),
        cite(KnownGroup::A5, 5, "Jones, tables of number fields"),
        cite(KnownGroup::S5, 5, "Jones, tables of number fields"),
        cite(KnownGroup::Sl32, 7, "Brueggeman, Theorem 4.1"),
    ]
}

#[derive(Clone, Debug, PartialEq)]
pub struct RulesConfig {
    pub odlyzko: OdlyzkoTable,
    pub regular_primes: RegularPrimeRegistry,
    /// Exclusion needs `upper < lower − tolerance`.
    pub tolerance: f64,
    pub citations: Vec<CitedExclusion>,
}

impl Default for RulesConfig {
    fn default() -> Self {
        RulesConfig {
            odlyzko: OdlyzkoTable::default(),
            regular_primes: RegularPrimeRegistry::default(),
            tolerance: 1e-9,
            citations: default_citations(),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    tolerance: Option<f64>,
    regular_primes: Option<Vec<u64>>,
    #[serde(default)]
    odlyzko: Vec<OdlyzkoThreshold>,
}

impl RulesConfig {
    /// Reads a TOML key-value file:
    ///
    /// ```toml
    /// tolerance = 1e-9
    /// regular_primes = [5, 13, 17]
    ///
    /// [[odlyzko]]
    /// min_degree = 240
    /// lower_bound = 16.0
    /// ```
    ///
    /// `odlyzko` entries are merged into the default table, replacing any entry
    /// with the same degree. `regular_primes` replaces the registry.
    pub fn from_toml_str(text: &str) -> Result<Self, RuleError> {
        let file: ConfigFile =
            toml::from_str(text).map_err(|e| RuleError::Config(e.to_string()))?;
        let mut cfg = RulesConfig::default();
        if let Some(t) = file.tolerance {
            if !(t >= 0.0 && t.is_finite()) {
                return Err(RuleError::Config(format!("bad tolerance {t}")));
            }
            cfg.tolerance = t;
        }
        if let Some(primes) = file.regular_primes {
            if let Some(&bad) = primes.iter().find(|&&p| !arith::is_prime(p)) {
                return Err(RuleError::NotPrime(bad));
            }
            cfg.regular_primes = RegularPrimeRegistry::new(primes);
        }
        if !file.odlyzko.is_empty() {
            let mut merged: BTreeMap<u64, f64> = cfg
                .odlyzko
                .thresholds()
                .iter()
                .map(|t| (t.min_degree, t.lower_bound))
                .collect();
            for t in file.odlyzko {
                merged.insert(t.min_degree, t.lower_bound);
            }
            cfg.odlyzko = OdlyzkoTable::new(
                merged
                    .into_iter()
                    .map(|(min_degree, lower_bound)| OdlyzkoThreshold {
                        min_degree,
                        lower_bound,
                    })
                    .collect(),
            )?;
        }
        Ok(cfg)
    }

    pub fn from_path(path: &Path) -> Result<Self, RuleError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| RuleError::Config(format!("{}: {e}", path.display())))?;
        Self::from_toml_str(&text)
    }
}

// ---- outcomes -------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleName {
    QuasiPQuotient,
    Discriminant,
    DihedralRegularPrime,
    NonsolvableSmall,
    SolvablePrime3,
    CitedExclusion,
}

impl fmt::Display for RuleName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RuleName::QuasiPQuotient => "quasi_p_quotient",
            RuleName::Discriminant => "discriminant",
            RuleName::DihedralRegularPrime => "dihedral_regular_prime",
            RuleName::NonsolvableSmall => "nonsolvable_small",
            RuleName::SolvablePrime3 => "solvable_prime_3",
            RuleName::CitedExclusion => "cited_exclusion",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleKind {
    Computed,
    Citation,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Evidence {
    QuasiPQuotient {
        quasi_p_order: usize,
        quotient_order: usize,
        quotient_cyclic: bool,
        p_minus_1: u64,
    },
    Discriminant {
        degree: u64,
        valuation: u32,
        upper_bound: f64,
        lower_bound: f64,
        tolerance: f64,
    },
    Dihedral {
        /// `n` when the group is dihedral of order `2n`, `n ≥ 3`.
        dihedral_n: Option<u64>,
        in_registry: bool,
    },
    NonsolvableSmall {
        order: usize,
        solvable: bool,
    },
    SolvablePrime3 {
        branch: Option<Prime3Class>,
    },
    Citation {
        group: KnownGroup,
        source: String,
    },
}

impl Evidence {
    /// Recomputes the firing condition from the recorded data alone.
    pub fn replay(&self) -> bool {
        match self {
            Evidence::QuasiPQuotient {
                quotient_order,
                quotient_cyclic,
                p_minus_1,
                ..
            } => !(*quotient_cyclic && p_minus_1 % *quotient_order as u64 == 0),
            Evidence::Discriminant {
                upper_bound,
                lower_bound,
                tolerance,
                ..
            } => *upper_bound < lower_bound - tolerance,
            Evidence::Dihedral {
                dihedral_n,
                in_registry,
            } => dihedral_n.is_some() && *in_registry,
            Evidence::NonsolvableSmall { order, solvable } => !solvable && *order <= 300,
            Evidence::SolvablePrime3 { branch } => *branch == Some(Prime3Class::Excluded),
            Evidence::Citation { .. } => true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RuleOutcome {
    pub rule: RuleName,
    pub kind: RuleKind,
    pub fired: bool,
    pub evidence: Evidence,
}

impl RuleOutcome {
    fn computed(rule: RuleName, evidence: Evidence) -> Self {
        RuleOutcome {
            rule,
            kind: RuleKind::Computed,
            fired: evidence.replay(),
            evidence,
        }
    }
}

fn require_small_prime(p: u64) -> Result<(), RuleError> {
    if !arith::is_prime(p) {
        return Err(RuleError::NotPrime(p));
    }
    if p >= 23 {
        return Err(RuleError::PrimeOutOfRange(p));
    }
    Ok(())
}

// ---- rules ----------------------------------------------------------------

/// For `p < 23`, `G/p(G)` must be cyclic of order dividing `p − 1`. In
/// particular a nonabelian group of order prime to `p` is excluded.
pub fn quasi_p_quotient_rule(g: &FiniteGroup, p: u64) -> Result<RuleOutcome, RuleError> {
    require_small_prime(p)?;
    let qp = g.quasi_p_part(p);
    Ok(RuleOutcome::computed(
        RuleName::QuasiPQuotient,
        Evidence::QuasiPQuotient {
            quasi_p_order: qp.order(),
            quotient_order: g.order() / qp.order(),
            quotient_cyclic: g.quotient_is_cyclic(&qp),
            p_minus_1: p - 1,
        },
    ))
}

/// Squeezes the root discriminant between the table's lower bound at degree
/// `|G|` and `p^(1 + v_p(|G|))`, which dominates the upper bound for every
/// admissible ramification index.
pub fn discriminant_exclusion(
    g: &FiniteGroup,
    p: u64,
    table: &OdlyzkoTable,
    tolerance: f64,
) -> RuleOutcome {
    let degree = g.order() as u64;
    let valuation = arith::valuation(degree, p);
    RuleOutcome::computed(
        RuleName::Discriminant,
        Evidence::Discriminant {
            degree,
            valuation,
            upper_bound: (p as f64).powi(1 + valuation as i32),
            lower_bound: table.lower_bound(degree),
            tolerance,
        },
    )
}

/// `n` if `g` is dihedral of order `2n` with `n ≥ 3`: a cyclic subgroup of index
/// two inverted by an involution outside it.
pub fn dihedral_n(g: &FiniteGroup) -> Option<u64> {
    let order = g.order() as u64;
    if order < 6 || !order.is_multiple_of(2) {
        return None;
    }
    let n = order / 2;
    (0..g.order())
        .filter(|&r| g.element_order(r) == n)
        .find_map(|r| {
            let rotations = g.subgroup(&[r]);
            let r_inv = g.inverse(r);
            (0..g.order())
                .any(|s| {
                    g.element_order(s) == 2 && !rotations.contains(s) && g.conjugate(r, s) == r_inv
                })
                .then_some(n)
        })
}

/// Nonabelian dihedral groups do not occur for registry primes.
pub fn dihedral_regular_prime_rule(
    g: &FiniteGroup,
    p: u64,
    registry: &RegularPrimeRegistry,
) -> RuleOutcome {
    RuleOutcome::computed(
        RuleName::DihedralRegularPrime,
        Evidence::Dihedral {
            dihedral_n: dihedral_n(g),
            in_registry: registry.contains(p),
        },
    )
}

/// For `p < 23`, groups of order at most 300 that occur are solvable.
pub fn nonsolvable_small_rule(g: &FiniteGroup, p: u64) -> Result<RuleOutcome, RuleError> {
    require_small_prime(p)?;
    Ok(RuleOutcome::computed(
        RuleName::NonsolvableSmall,
        Evidence::NonsolvableSmall {
            order: g.order(),
            solvable: g.is_solvable(),
        },
    ))
}

/// Classification of solvable groups ramified only at 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Prime3Class {
    /// A cyclic 3-group.
    Cyclic,
    /// `G` has a cyclic quotient of order 27.
    CyclicQuotient27,
    /// `G/p(G) ≅ Z/2`.
    QuotientZ2,
    Excluded,
}

/// First matching branch of: cyclic 3-group, cyclic quotient of order 27,
/// `G/p(G) ≅ Z/2`; `Excluded` if none holds.
pub fn classify_solvable_p3(g: &FiniteGroup) -> Result<Prime3Class, RuleError> {
    if !g.is_solvable() {
        return Err(RuleError::NotSolvable);
    }
    let three_group = crate::group::is_power_of(g.order() as u64, 3);
    Ok(if g.is_cyclic() && three_group {
        Prime3Class::Cyclic
    } else if g.has_cyclic_quotient(27) {
        Prime3Class::CyclicQuotient27
    } else if g.order() / g.quasi_p_part(3).order() == 2 {
        Prime3Class::QuotientZ2
    } else {
        Prime3Class::Excluded
    })
}

/// What can be said about the ramification index `e` at 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RamificationConstraint {
    /// `G ≅ Z/3`: `e = 3` is allowed.
    ThreePermitted,
    /// Cyclic `G` is totally ramified, so `e = |G|`.
    EqualsOrder { order: u64 },
    /// `G/p(G) ≅ Z/2`: no divisibility by 9 is forced.
    NoNineDivisibility,
    /// `9 | e`.
    NineDivides,
}

impl fmt::Display for RamificationConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RamificationConstraint::ThreePermitted => f.write_str("e = 3 permitted"),
            RamificationConstraint::EqualsOrder { order } if order % 9 == 0 => {
                write!(f, "e = {order} (so 9 | e)")
            }
            RamificationConstraint::EqualsOrder { order } => write!(f, "e = {order}"),
            RamificationConstraint::NoNineDivisibility => f.write_str("no 9-divisibility forced"),
            RamificationConstraint::NineDivides => f.write_str("9 | e"),
        }
    }
}

pub fn ramification_constraint(g: &FiniteGroup) -> Result<RamificationConstraint, RuleError> {
    let n = g.order() as u64;
    if n == 1 {
        return Err(RuleError::TrivialGroup);
    }
    Ok(if n == 3 {
        RamificationConstraint::ThreePermitted
    } else if g.is_cyclic() {
        RamificationConstraint::EqualsOrder { order: n }
    } else if g.order() / g.quasi_p_part(3).order() == 2 {
        RamificationConstraint::NoNineDivisibility
    } else {
        RamificationConstraint::NineDivides
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum NumberFieldVerdict {
    Excluded,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NumberFieldReport {
    pub group_label: String,
    pub group_order: usize,
    pub prime: u64,
    pub verdict: NumberFieldVerdict,
    /// Every rule evaluated, fired or not.
    pub rules: Vec<RuleOutcome>,
    /// Present when `p = 3` and the group is nontrivial.
    pub ramification_constraint: Option<RamificationConstraint>,
}

impl NumberFieldReport {
    pub fn rules_fired(&self) -> impl Iterator<Item = &RuleOutcome> {
        self.rules.iter().filter(|r| r.fired)
    }

    pub fn fired(&self, rule: RuleName) -> Option<&RuleOutcome> {
        self.rules_fired().find(|r| r.rule == rule)
    }
}

/// Runs every applicable rule. The verdict is `Excluded` when any rule fires.
pub fn check_number_field(
    g: &FiniteGroup,
    p: u64,
    cfg: &RulesConfig,
) -> Result<NumberFieldReport, RuleError> {
    if !arith::is_prime(p) {
        return Err(RuleError::NotPrime(p));
    }
    let mut rules = Vec::new();
    if p < 23 {
        rules.push(quasi_p_quotient_rule(g, p)?);
    }
    rules.push(discriminant_exclusion(g, p, &cfg.odlyzko, cfg.tolerance));
    rules.push(dihedral_regular_prime_rule(g, p, &cfg.regular_primes));
    if p < 23 {
        rules.push(nonsolvable_small_rule(g, p)?);
    }
    if p == 3 && g.is_solvable() {
        let branch = classify_solvable_p3(g)?;
        rules.push(RuleOutcome::computed(
            RuleName::SolvablePrime3,
            Evidence::SolvablePrime3 {
                branch: Some(branch),
            },
        ));
    }
    if let Some(known) = KnownGroup::identify(g) {
        for c in cfg
            .citations
            .iter()
            .filter(|c| c.group == known && c.prime == p)
        {
            rules.push(RuleOutcome {
                rule: RuleName::CitedExclusion,
                kind: RuleKind::Citation,
                fired: true,
                evidence: Evidence::Citation {
                    group: known,
                    source: c.source.clone(),
                },
            });
        }
    }
    let ramification_constraint = if p == 3 && g.order() > 1 {
        Some(ramification_constraint(g)?)
    } else {
        None
    };
    let verdict = if rules.iter().any(|r| r.fired) {
        NumberFieldVerdict::Excluded
    } else {
        NumberFieldVerdict::Inconclusive
    };
    Ok(NumberFieldReport {
        group_label: g.label(),
        group_order: g.order(),
        prime: p,
        verdict,
        rules,
        ramification_constraint,
    })
}
