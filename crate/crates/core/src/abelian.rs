use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith;

/// Invariant factors `d₁ | d₂ | … | d_k` of a finite abelian group, each `> 1`.
/// The trivial group has no factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantFactors(Vec<u64>);

impl InvariantFactors {
    /// Invariant factors of `Z/n₁ × Z/n₂ × …`.
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        // collect prime-power parts per prime, largest first
        let mut by_prime: std::collections::BTreeMap<u64, Vec<u64>> = Default::default();
        for &n in orders {
            for (p, e) in arith::factorize(n) {
                by_prime.entry(p).or_default().push(p.pow(e));
            }
        }
        let width = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![1u64; width];
        for parts in by_prime.values_mut() {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            for (i, &q) in parts.iter().enumerate() {
                factors[width - 1 - i] *= q;
            }
        }
        InvariantFactors(factors)
    }

    pub fn factors(&self) -> &[u64] {
        &self.0
    }

    pub fn order(&self) -> u64 {
        self.0.iter().product()
    }

    pub fn is_cyclic(&self) -> bool {
        self.0.len() <= 1
    }

    /// Factors of the direct product.
    pub fn merge(&self, other: &InvariantFactors) -> InvariantFactors {
        let all: Vec<u64> = self.0.iter().chain(other.0.iter()).copied().collect();
        InvariantFactors::from_cyclic_orders(&all)
    }
}

impl fmt::Display for InvariantFactors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn merges() {
        let a = InvariantFactors::from_cyclic_orders(&[3]);
        let b = InvariantFactors::from_cyclic_orders(&[10]);
        assert_eq!(a.merge(&b).factors(), &[30]);
        assert_eq!(
            InvariantFactors::from_cyclic_orders(&[2, 2]).factors(),
            &[2, 2]
        );
        assert_eq!(
            InvariantFactors::from_cyclic_orders(&[4, 6]).factors(),
            &[2, 12]
        );
        assert_eq!(
            InvariantFactors::from_cyclic_orders(&[1]).factors(),
            &[] as &[u64]
        );
        assert_eq!(
            InvariantFactors::from_cyclic_orders(&[9, 2, 5]).factors(),
            &[90]
        );
    }

    proptest! {
        #[test]
        fn chain_and_order(orders in proptest::collection::vec(1u64..40, 0..5)) {
            let f = InvariantFactors::from_cyclic_orders(&orders);
            prop_assert_eq!(f.order(), orders.iter().product::<u64>());
            for w in f.factors().windows(2) {
                prop_assert_eq!(w[1] % w[0], 0);
            }
            prop_assert!(f.factors().iter().all(|&d| d > 1));
        }
    }
}
