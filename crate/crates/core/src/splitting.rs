//! Machine check of the abelian splitting criterion for `P ⋊ Z/(l₁l₂)`.
//!
//! Let `G = P ⋊ Z/(l₁l₂)` with `P` a `p`-group of order `p^m`, `p` and `l₂`
//! distinct primes, `p ∤ l₁`, and `l₂^s ∥ l₁`. If `G` has a normal subgroup
//! `N ≅ Z/l₂^{s+1}` with `G/N ≅ Z/(l₁ l₂^{-s} p^m)`, then
//! `G ≅ Z/p^m × Z/(l₁l₂)`.
//!
//! [`abelian_splitting_check`] verifies every hypothesis on a concrete group
//! and then reports whether the conclusion holds.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::abelian::InvariantFactors;
use crate::arith;
use crate::group::FiniteGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplittingParams {
    pub p: u64,
    pub m: u32,
    pub l1: u64,
    pub l2: u64,
    /// Exponent with `l₂^s ∥ l₁`.
    pub s: u32,
}

impl SplittingParams {
    /// Parameters with `s` derived from `l₁` and `l₂`.
    pub fn new(p: u64, m: u32, l1: u64, l2: u64) -> Self {
        let s = if l2 > 1 && l1 > 0 {
            arith::valuation(l1, l2)
        } else {
            0
        };
        SplittingParams { p, m, l1, l2, s }
    }

    pub fn group_order(&self) -> u64 {
        self.p.pow(self.m) * self.l1 * self.l2
    }

    /// Invariant factors of `Z/p^m × Z/(l₁l₂)`.
    pub fn expected_factors(&self) -> InvariantFactors {
        InvariantFactors::from_cyclic_orders(&[self.p.pow(self.m), self.l1 * self.l2])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("hypothesis not met: {0}")]
pub struct HypothesisNotMet(pub String);

fn require(cond: bool, what: impl Into<String>) -> Result<(), HypothesisNotMet> {
    if cond {
        Ok(())
    } else {
        Err(HypothesisNotMet(what.into()))
    }
}

/// Checks the hypotheses on `g`; on success returns whether `g` is abelian
/// with the invariant factors of `Z/p^m × Z/(l₁l₂)`.
pub fn abelian_splitting_check(
    g: &FiniteGroup,
    params: &SplittingParams,
) -> Result<bool, HypothesisNotMet> {
    let SplittingParams { p, m, l1, l2, s } = *params;
    require(arith::is_prime(p), format!("p = {p} is not prime"))?;
    require(arith::is_prime(l2), format!("l2 = {l2} is not prime"))?;
    require(p != l2, "p and l2 must be distinct")?;
    require(l1 >= 1 && l1 % p != 0, format!("p = {p} divides l1 = {l1}"))?;
    require(
        arith::valuation(l1, l2) == s,
        format!("l2^s does not exactly divide l1 for s = {s}"),
    )?;
    require(
        g.order() as u64 == params.group_order(),
        format!(
            "|G| = {} but p^m·l1·l2 = {}",
            g.order(),
            params.group_order()
        ),
    )?;

    // semidirect shape: normal Sylow p-subgroup with a cyclic complement
    let pm = p.pow(m);
    require(
        g.quasi_p_part(p).order() as u64 == pm,
        "no normal subgroup of order p^m",
    )?;
    require(
        (0..g.order()).any(|x| g.element_order(x) == l1 * l2),
        "no cyclic complement of order l1·l2",
    )?;

    // N ≅ Z/l2^(s+1), normal, with cyclic quotient
    let n_order = l2.pow(s + 1);
    let found = (0..g.order())
        .filter(|&x| g.element_order(x) == n_order)
        .any(|x| {
            let n = g.subgroup(&[x]);
            g.is_normal(&n) && g.quotient_is_cyclic(&n)
        });
    require(
        found,
        format!("no normal cyclic subgroup of order {n_order} with cyclic quotient"),
    )?;

    Ok(g.is_abelian() && g.abelianization() == params.expected_factors())
}
