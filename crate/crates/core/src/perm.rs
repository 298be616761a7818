use std::fmt;

use crate::error::GroupError;

/// Largest supported permutation degree.
pub const MAX_DEGREE: usize = u16::MAX as usize;

/// A bijection of `{0, .., n-1}` stored as its image array.
///
/// Products are read left to right: `a.then(&b)` applies `a` first and `b`
/// second, the usual convention for cycle notation in computational group
/// theory.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        assert!(degree <= MAX_DEGREE, "degree {degree} too large");
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    pub fn from_images(images: &[usize]) -> Result<Self, GroupError> {
        let n = images.len();
        if n > MAX_DEGREE {
            return Err(GroupError::DegreeTooLarge { degree: n });
        }
        let mut seen = vec![false; n];
        for &x in images {
            if x >= n || seen[x] {
                return Err(GroupError::NotABijection);
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.iter().map(|&x| x as u16).collect(),
        })
    }

    /// Builds a permutation of `degree` points from 0-based cycles, multiplied
    /// left to right. Cycles need not be disjoint, but a point may not repeat
    /// inside a single cycle.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, GroupError> {
        let mut acc = Permutation::identity(degree);
        for cycle in cycles {
            let mut images: Vec<usize> = (0..degree).collect();
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(GroupError::PointOutOfRange { point: x, degree });
                }
                if cycle[..i].contains(&x) {
                    return Err(GroupError::RepeatedPoint { point: x });
                }
                images[x] = cycle[(i + 1) % cycle.len()];
            }
            acc = acc.then(&Permutation::from_images(&images)?);
        }
        Ok(acc)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    /// Apply `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Permutation {
            images: inv.into_boxed_slice(),
        }
    }

    pub fn pow(&self, k: u64) -> Permutation {
        let mut acc = Permutation::identity(self.degree());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            k >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    /// Nontrivial cycles in order of their smallest point, each starting there.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.image(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.image(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1, |acc, c| crate::arith::lcm(acc, c.len() as u64))
    }

    /// Sign as `true` for even permutations.
    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    /// Extends to a larger domain, shifting every point by `offset`.
    pub fn embed(&self, offset: usize, degree: usize) -> Permutation {
        assert!(offset + self.degree() <= degree);
        let mut images: Vec<u16> = (0..degree as u16).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = x + offset as u16;
        }
        Permutation {
            images: images.into_boxed_slice(),
        }
    }
}

/// 1-based cycle notation, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}; {}]", self.degree(), self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(&v).unwrap())
    }

    #[test]
    fn cycles_compose_left_to_right() {
        // (1 2)(1 3) on 1-based points: 1 -> 2, 2 -> 1 -> 3, 3 -> 1.
        let p = Permutation::from_cycles(3, &[vec![0, 1], vec![0, 2]]).unwrap();
        assert_eq!(p.images(), vec![1, 2, 0]);
        assert_eq!(p.to_string(), "(1 2 3)");
        assert_eq!(p.order(), 3);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            Permutation::from_images(&[0, 0]),
            Err(GroupError::NotABijection)
        );
        assert_eq!(
            Permutation::from_cycles(3, &[vec![1, 1]]),
            Err(GroupError::RepeatedPoint { point: 1 })
        );
        assert!(Permutation::from_cycles(2, &[vec![0, 2]]).is_err());
    }

    #[test]
    fn identity_display() {
        assert_eq!(Permutation::identity(4).to_string(), "()");
        assert!(Permutation::identity(0).is_identity());
    }

    proptest! {
        #[test]
        fn inverse_and_associativity(a in perm_strategy(7), b in perm_strategy(7), c in perm_strategy(7)) {
            prop_assert!(a.then(&a.inverse()).is_identity());
            prop_assert!(a.inverse().then(&a).is_identity());
            prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
            prop_assert!(a.pow(a.order()).is_identity());
            let rebuilt = Permutation::from_cycles(7, &a.cycles()).unwrap();
            prop_assert_eq!(rebuilt, a);
        }
    }
}
