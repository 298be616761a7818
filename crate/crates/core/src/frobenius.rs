//! Search for tame Frobenius-compatible generating tuples.
//!
//! A tame geometric cover of the line over `F_q` with group `G`, branched only
//! at a prime `f` of degree `d` (and possibly at infinity), yields elements
//! `x₁, …, x_d, x_∞` of `G` with
//!
//! * `x₁ ⋯ x_d · x_∞ = 1` and `⟨x₁, …, x_d, x_∞⟩ = G`,
//! * `x_i^q ∼ x_{i+1}` cyclically (`x_d^q ∼ x₁`) and `x_∞^q ∼ x_∞`,
//! * every entry of order prime to the characteristic,
//! * `x_∞ = 1` when the cover is unramified at infinity.
//!
//! [`search_tuple`] decides exhaustively whether such a tuple exists. When
//! none does, `G` cannot occur; when one does, the result says nothing more,
//! since the condition is only necessary.

use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::SearchError;
use crate::group::{FiniteGroup, Subgroup, IDENTITY};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusConstraint {
    /// Size of the constant field.
    pub q: u64,
    /// Characteristic of `F_q`.
    pub p: u64,
    /// Degree of the ramified prime (not the number of primes).
    pub d: usize,
    /// Whether tame ramification at infinity is permitted.
    pub allow_infinity: bool,
}

impl FrobeniusConstraint {
    pub fn new(q: u64, d: usize, allow_infinity: bool) -> Result<Self, SearchError> {
        let (p, _) = arith::prime_power(q).ok_or(SearchError::NotPrimePower(q))?;
        if d == 0 {
            return Err(SearchError::ZeroDegree);
        }
        Ok(FrobeniusConstraint {
            q,
            p,
            d,
            allow_infinity,
        })
    }

    fn is_tame(&self, order: u64) -> bool {
        arith::gcd(order, self.p) == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FrobeniusTuple {
    /// `x₁, …, x_d` as element indices.
    pub finite_entries: Vec<usize>,
    /// `x_∞` as an element index.
    pub infinity_entry: usize,
}

impl FrobeniusTuple {
    fn entries(&self) -> impl Iterator<Item = usize> + '_ {
        self.finite_entries
            .iter()
            .copied()
            .chain(std::iter::once(self.infinity_entry))
    }

    /// Entry-wise conjugate `g⁻¹·x·g`.
    pub fn conjugated(&self, group: &FiniteGroup, g: usize) -> FrobeniusTuple {
        FrobeniusTuple {
            finite_entries: self
                .finite_entries
                .iter()
                .map(|&x| group.conjugate(x, g))
                .collect(),
            infinity_entry: group.conjugate(self.infinity_entry, g),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TupleStatus {
    /// No tuple exists: the group is proved not to occur.
    Excluded,
    /// A tuple exists; the necessary condition passes.
    TuplesExist,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TupleVerdict {
    pub status: TupleStatus,
    pub witness: Option<FrobeniusTuple>,
    /// Number of admissible class vectors searched.
    pub classes_searched: usize,
    pub nodes_visited: u64,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub node_budget: u64,
    /// Largest prime degree `d` accepted.
    pub max_degree: usize,
    /// Search class vectors on the rayon pool.
    pub parallel: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            node_budget: 100_000_000,
            max_degree: 12,
            parallel: true,
        }
    }
}

/// Classes admissible for `x_∞`: tame and fixed by the `q`-power map. Only the
/// identity class when infinity is unramified.
pub fn infinity_classes(g: &FiniteGroup, c: &FrobeniusConstraint) -> Vec<usize> {
    if !c.allow_infinity {
        return vec![g.class_of(IDENTITY)];
    }
    (0..g.conjugacy_classes().len())
        .filter(|&k| {
            c.is_tame(g.conjugacy_classes()[k].element_order) && g.class_power(k, c.q) == k
        })
        .collect()
}

/// All class chains `(C₁, …, C_d)` with `C_{i+1} = C_i^q` and `C_d^q = C₁`, made
/// of tame classes, whose members together with the admissible infinity
/// classes generate `G`.
pub fn admissible_class_vectors(g: &FiniteGroup, c: &FrobeniusConstraint) -> Vec<Vec<usize>> {
    let classes = g.conjugacy_classes();
    let inf = infinity_classes(g, c);
    let inf_members: Vec<usize> = inf
        .iter()
        .flat_map(|&k| classes[k].members.iter().copied())
        .collect();
    let inf_span = g.subgroup(&inf_members);
    let mut out = Vec::new();
    for first in 0..classes.len() {
        if !c.is_tame(classes[first].element_order) {
            continue;
        }
        let mut chain = vec![first];
        for _ in 1..c.d {
            chain.push(g.class_power(*chain.last().unwrap(), c.q));
        }
        if g.class_power(*chain.last().unwrap(), c.q) != first {
            continue;
        }
        let members: Vec<usize> = chain
            .iter()
            .flat_map(|&k| classes[k].members.iter().copied())
            .collect();
        if g.extend_subgroup(&inf_span, &members).order() == g.order() {
            out.push(chain);
        }
    }
    out
}

/// Rechecks every tuple condition from scratch.
pub fn verify_tuple(g: &FiniteGroup, c: &FrobeniusConstraint, t: &FrobeniusTuple) -> bool {
    let d = c.d;
    if t.finite_entries.len() != d || t.entries().any(|x| x >= g.order()) {
        return false;
    }
    if !c.allow_infinity && t.infinity_entry != IDENTITY {
        return false;
    }
    if g.product(&t.finite_entries) != g.inverse(t.infinity_entry) {
        return false;
    }
    if !t.entries().all(|x| c.is_tame(g.element_order(x))) {
        return false;
    }
    let first_order = g.element_order(t.finite_entries[0]);
    if t.finite_entries
        .iter()
        .any(|&x| g.element_order(x) != first_order)
    {
        return false;
    }
    for i in 0..d {
        let here = g.class_of(t.finite_entries[i]);
        let next = g.class_of(t.finite_entries[(i + 1) % d]);
        if g.class_power(here, c.q) != next {
            return false;
        }
    }
    let inf = g.class_of(t.infinity_entry);
    if g.class_power(inf, c.q) != inf {
        return false;
    }
    let gens: Vec<usize> = t.entries().collect();
    g.subgroup(&gens).order() == g.order()
}

pub fn search_tuple(g: &FiniteGroup, c: &FrobeniusConstraint) -> Result<TupleVerdict, SearchError> {
    search_tuple_with(g, c, &SearchOptions::default())
}

pub fn search_tuple_with(
    g: &FiniteGroup,
    c: &FrobeniusConstraint,
    opts: &SearchOptions,
) -> Result<TupleVerdict, SearchError> {
    if c.d > opts.max_degree {
        return Err(SearchError::DegreeLimit {
            degree: c.d,
            limit: opts.max_degree,
        });
    }
    let vectors = admissible_class_vectors(g, c);
    let inf = infinity_classes(g, c);
    let counter = AtomicU64::new(0);
    let run =
        |chain: &Vec<usize>| VectorSearch::new(g, c, chain, &inf, &counter, opts.node_budget).run();
    let results: Vec<Result<Option<FrobeniusTuple>, SearchError>> = if opts.parallel {
        vectors.par_iter().map(run).collect()
    } else {
        vectors.iter().map(run).collect()
    };
    let nodes_visited = counter.load(Ordering::Relaxed);
    let mut failure = None;
    for r in results {
        match r {
            Ok(Some(t)) => {
                debug_assert!(verify_tuple(g, c, &t));
                return Ok(TupleVerdict {
                    status: TupleStatus::TuplesExist,
                    witness: Some(t),
                    classes_searched: vectors.len(),
                    nodes_visited,
                });
            }
            Ok(None) => {}
            Err(e) => failure = Some(e),
        }
    }
    // an exclusion is only claimed after every branch completed
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(TupleVerdict {
        status: TupleStatus::Excluded,
        witness: None,
        classes_searched: vectors.len(),
        nodes_visited,
    })
}

/// Depth-first search over one class vector. `x₁` is pinned to the class
/// representative; the last finite entry (or `x_∞`) is forced by the product.
struct VectorSearch<'a> {
    g: &'a FiniteGroup,
    c: &'a FrobeniusConstraint,
    chain: &'a [usize],
    inf_allowed: Vec<bool>,
    /// `suffix[j]`: span of the classes of entries `j..d` and of `x_∞`.
    suffix: Vec<Subgroup>,
    counter: &'a AtomicU64,
    budget: u64,
}

impl<'a> VectorSearch<'a> {
    fn new(
        g: &'a FiniteGroup,
        c: &'a FrobeniusConstraint,
        chain: &'a [usize],
        inf: &[usize],
        counter: &'a AtomicU64,
        budget: u64,
    ) -> Self {
        let classes = g.conjugacy_classes();
        let mut inf_allowed = vec![false; classes.len()];
        let mut span_members = Vec::new();
        for &k in inf {
            inf_allowed[k] = true;
            span_members.extend_from_slice(&classes[k].members);
        }
        let mut suffix = vec![g.subgroup(&span_members)];
        for &k in chain.iter().rev() {
            let next = g.extend_subgroup(suffix.last().unwrap(), &classes[k].members);
            suffix.push(next);
        }
        suffix.reverse();
        VectorSearch {
            g,
            c,
            chain,
            inf_allowed,
            suffix,
            counter,
            budget,
        }
    }

    fn tick(&self) -> Result<(), SearchError> {
        if self.counter.fetch_add(1, Ordering::Relaxed) >= self.budget {
            Err(SearchError::SearchBudgetExceeded {
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }

    fn run(&self) -> Result<Option<FrobeniusTuple>, SearchError> {
        let d = self.c.d;
        if d == 1 && !self.c.allow_infinity {
            // x₁ = 1 is forced
            self.tick()?;
            let ok = self.g.class_of(IDENTITY) == self.chain[0] && self.g.order() == 1;
            return Ok(ok.then(|| FrobeniusTuple {
                finite_entries: vec![IDENTITY],
                infinity_entry: IDENTITY,
            }));
        }
        let rep = self.g.conjugacy_classes()[self.chain[0]].representative;
        let mut chosen = vec![rep];
        self.tick()?;
        if !self.can_generate(&chosen) {
            return Ok(None);
        }
        self.extend(rep, &mut chosen)
    }

    /// Whether the chosen entries plus every remaining class can still generate.
    fn can_generate(&self, chosen: &[usize]) -> bool {
        let rest = &self.suffix[chosen.len()];
        rest.order() == self.g.order()
            || self.g.extend_subgroup(rest, chosen).order() == self.g.order()
    }

    fn extend(
        &self,
        acc: usize,
        chosen: &mut Vec<usize>,
    ) -> Result<Option<FrobeniusTuple>, SearchError> {
        let g = self.g;
        let d = self.c.d;
        let pos = chosen.len();
        let free_until = if self.c.allow_infinity { d } else { d - 1 };
        if pos == free_until {
            return Ok(self.close(acc, chosen));
        }
        for &x in &g.conjugacy_classes()[self.chain[pos]].members {
            self.tick()?;
            chosen.push(x);
            if self.can_generate(chosen) {
                if let Some(t) = self.extend(g.mul(acc, x), chosen)? {
                    return Ok(Some(t));
                }
            }
            chosen.pop();
        }
        Ok(None)
    }

    /// Fill the forced entry from the running product and check it.
    fn close(&self, acc: usize, chosen: &[usize]) -> Option<FrobeniusTuple> {
        let g = self.g;
        let forced = g.inverse(acc);
        let (finite, infinity) = if self.c.allow_infinity {
            if !self.inf_allowed[g.class_of(forced)] {
                return None;
            }
            (chosen.to_vec(), forced)
        } else {
            if g.class_of(forced) != self.chain[self.c.d - 1] {
                return None;
            }
            let mut all = chosen.to_vec();
            all.push(forced);
            (all, IDENTITY)
        };
        let mut gens = finite.clone();
        gens.push(infinity);
        (g.subgroup(&gens).order() == g.order()).then_some(FrobeniusTuple {
            finite_entries: finite,
            infinity_entry: infinity,
        })
    }
}

/// Outcome of the field-action shortcut.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldActionOutcome {
    Excluded,
    NotApplicable,
}

/// Constant-time exclusion for `F_{qⁿ} ⋊ F*_{qⁿ}` (see
/// [`crate::families::field_semidirect`]) over a prime of degree `d`,
/// unramified at infinity: excluded whenever `n ∤ d`.
///
/// Valid when `q` is a power of an odd prime or `q ∈ {2, 4}`.
pub fn field_action_rule(q: u64, n: u32, d: usize) -> Result<FieldActionOutcome, SearchError> {
    let (p, _) = arith::prime_power(q).ok_or(SearchError::NotPrimePower(q))?;
    if p == 2 && q != 2 && q != 4 {
        return Err(SearchError::HypothesisViolated(q));
    }
    if d == 0 || n == 0 {
        return Err(SearchError::ZeroDegree);
    }
    Ok(if !d.is_multiple_of(n as usize) {
        FieldActionOutcome::Excluded
    } else {
        FieldActionOutcome::NotApplicable
    })
}
