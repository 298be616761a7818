//! Shared fixtures for integration tests: a small group catalogue and a
//! brute-force tuple oracle that only uses raw permutation arithmetic.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use ramify_core::arith::is_prime;
use ramify_core::families::*;
use ramify_core::{FiniteGroup, Permutation};

/// Every catalogue group of order at most `max_order`, labelled.
pub fn catalogue(max_order: usize) -> Vec<FiniteGroup> {
    let mut out: Vec<FiniteGroup> = Vec::new();
    let mut push = |g: Result<FiniteGroup, ramify_core::GroupError>| {
        let g = g.expect("catalogue group");
        if g.order() <= max_order {
            out.push(g);
        }
    };
    for n in 1..=max_order {
        push(cyclic(n));
    }
    for two_n in (2..=max_order).step_by(2) {
        push(dihedral(two_n));
    }
    for n in 3..=5 {
        if (1..=n).product::<usize>() <= max_order {
            push(symmetric(n));
        }
        if (1..=n).product::<usize>() / 2 <= max_order {
            push(alternating(n));
        }
    }
    for (q, n) in [
        (2, 1),
        (3, 1),
        (4, 1),
        (5, 1),
        (2, 2),
        (7, 1),
        (8, 1),
        (9, 1),
        (3, 2),
    ] {
        let qn = (q as usize).pow(n);
        if qn * (qn - 1) <= max_order {
            push(field_semidirect(q, n));
        }
    }
    for (k, m, u) in [
        (3, 4, 2),
        (5, 4, 2),
        (7, 3, 2),
        (3, 8, 2),
        (5, 4, 4),
        (9, 2, 8),
    ] {
        if k * m <= max_order {
            push(cyclic_semidirect(k, m, u));
        }
    }
    let small = [(2, 2), (2, 4), (3, 3), (2, 6), (2, 8), (4, 4)];
    for (a, b) in small {
        if a * b <= max_order {
            push(direct_product(&cyclic(a).unwrap(), &cyclic(b).unwrap()));
        }
    }
    if 12 <= max_order {
        push(direct_product(&cyclic(2).unwrap(), &symmetric(3).unwrap()));
        push(direct_product(&cyclic(2).unwrap(), &dihedral(8).unwrap()));
    }
    if 18 <= max_order {
        push(direct_product(&cyclic(3).unwrap(), &symmetric(3).unwrap()));
    }
    if 24 <= max_order {
        push(direct_product(
            &cyclic(2).unwrap(),
            &alternating(4).unwrap(),
        ));
        push(direct_product(&cyclic(4).unwrap(), &symmetric(3).unwrap()));
    }
    out
}

fn perm_order(x: &Permutation) -> u64 {
    let id = Permutation::identity(x.degree());
    let mut y = x.clone();
    let mut k = 1;
    while y != id {
        y = y.then(x);
        k += 1;
    }
    k
}

fn perm_pow(x: &Permutation, k: u64) -> Permutation {
    let mut y = Permutation::identity(x.degree());
    for _ in 0..k {
        y = y.then(x);
    }
    y
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Size of the group generated by `gens`, by breadth-first closure.
pub fn span_size(gens: &[Permutation], degree: usize) -> usize {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.then(g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.len()
}

/// Conjugacy, orders and powers recomputed from the element list alone.
pub struct Oracle {
    pub perms: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    class_id: Vec<usize>,
    orders: Vec<u64>,
    degree: usize,
}

impl Oracle {
    pub fn new(g: &FiniteGroup) -> Self {
        let perms: Vec<Permutation> = g.elements().to_vec();
        let index: HashMap<Permutation, usize> = perms
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let n = perms.len();
        let mut class_id = vec![usize::MAX; n];
        let mut next = 0;
        for i in 0..n {
            if class_id[i] != usize::MAX {
                continue;
            }
            for h in &perms {
                let c = h.inverse().then(&perms[i]).then(h);
                class_id[index[&c]] = next;
            }
            next += 1;
        }
        let orders = perms.iter().map(perm_order).collect();
        Oracle {
            perms,
            index,
            class_id,
            orders,
            degree: g.degree(),
        }
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn class_count(&self) -> usize {
        self.class_id.iter().max().map_or(0, |m| m + 1)
    }

    pub fn same_class(&self, a: usize, b: usize) -> bool {
        self.class_id[a] == self.class_id[b]
    }

    pub fn element_order(&self, a: usize) -> u64 {
        self.orders[a]
    }

    pub fn power(&self, a: usize, k: u64) -> usize {
        self.index[&perm_pow(&self.perms[a], k)]
    }

    pub fn generates(&self, entries: &[usize]) -> bool {
        let gens: Vec<Permutation> = entries.iter().map(|&i| self.perms[i].clone()).collect();
        span_size(&gens, self.degree) == self.order()
    }

    /// Whether some tuple over all `|G|^d` choices of `x₁..x_d` meets every
    /// condition; `x_∞` is the inverse of their product.
    pub fn tuple_exists(&self, q: u64, p: u64, d: usize, allow_infinity: bool) -> bool {
        let n = self.order();
        let id = self.index[&Permutation::identity(self.degree)];
        let tame = |x: usize| gcd(self.orders[x], p) == 1;
        let qpow: Vec<usize> = (0..n).map(|x| self.power(x, q)).collect();
        let mut tuple = vec![0usize; d];
        let total = n.pow(d as u32);
        for code in 0..total {
            let mut c = code;
            for slot in tuple.iter_mut() {
                *slot = c % n;
                c /= n;
            }
            if !tuple.iter().all(|&x| tame(x)) {
                continue;
            }
            let chain_ok = (0..d).all(|i| self.same_class(qpow[tuple[i]], tuple[(i + 1) % d]));
            if !chain_ok {
                continue;
            }
            let mut prod = Permutation::identity(self.degree);
            for &x in &tuple {
                prod = prod.then(&self.perms[x]);
            }
            let x_inf = self.index[&prod.inverse()];
            if !allow_infinity && x_inf != id {
                continue;
            }
            if !tame(x_inf) || !self.same_class(qpow[x_inf], x_inf) {
                continue;
            }
            let mut all = tuple.clone();
            all.push(x_inf);
            if self.generates(&all) {
                return true;
            }
        }
        false
    }
}

pub fn prime_of(q: u64) -> u64 {
    (2..=q).find(|k| q.is_multiple_of(*k)).unwrap()
}

/// Nonsolvable groups of order at most 300 built from the families.
pub fn nonsolvable_catalogue() -> Vec<FiniteGroup> {
    let a5 = alternating(5).unwrap();
    let s5 = symmetric(5).unwrap();
    let mut out = vec![a5.clone(), s5.clone(), sl32().unwrap()];
    for n in 2..=5 {
        out.push(direct_product(&a5, &cyclic(n).unwrap()).unwrap());
    }
    out.push(direct_product(&s5, &cyclic(2).unwrap()).unwrap());
    out.push(
        direct_product(
            &a5,
            &direct_product(&cyclic(2).unwrap(), &cyclic(2).unwrap()).unwrap(),
        )
        .unwrap(),
    );
    out
}

/// Parameter choices `(l1, l2)` with `l2` prime, `l2 ≠ p`, `p ∤ l1`, `l1·l2 ≤ 20`.
pub fn parameter_choices(p: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for l2 in (2..=20).filter(|&l| is_prime(l) && l != p) {
        for l1 in (1..=20 / l2).filter(|l1| l1 % p != 0) {
            out.push((l1, l2));
        }
    }
    out
}

/// Every `P ⋊ Z/(l1·l2)` for the given kernel, one group per admissible
/// assignment of generator images.
pub fn semidirects(kernel: &FiniteGroup, m: usize) -> Vec<FiniteGroup> {
    let gens = kernel.generator_indices().len();
    let n = kernel.order();
    let mut out = Vec::new();
    for code in 0..n.pow(gens as u32) {
        let action: Vec<usize> = (0..gens).map(|j| code / n.pow(j as u32) % n).collect();
        let spec = SemidirectSpec {
            kernel: kernel.clone(),
            complement_order: m,
            action,
        };
        if spec.automorphism().is_ok() {
            out.push(semidirect(&spec).unwrap());
        }
    }
    out
}
