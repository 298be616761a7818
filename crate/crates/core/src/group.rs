//! Fully enumerated permutation groups.
//!
//! Every element of a [`FiniteGroup`] is stored and addressed by its index in
//! a canonical breadth-first order, so subgroups, cosets, and conjugacy
//! classes are plain index sets.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::sync::OnceLock;

use crate::abelian::InvariantFactors;
use crate::arith;
use crate::error::GroupError;
use crate::perm::Permutation;

pub const DEFAULT_CAP: usize = 20_000;

/// Groups up to this order get a full multiplication table.
const TABLE_LIMIT: usize = 2048;

/// Index of the identity in every group.
pub const IDENTITY: usize = 0;

#[derive(Clone)]
pub struct FiniteGroup {
    degree: usize,
    label: Option<String>,
    generators: Vec<Permutation>,
    generator_indices: Vec<usize>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    table: Option<Vec<u32>>,
    inverses: Vec<usize>,
    orders: Vec<u64>,
    classes: OnceLock<ClassTable>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: usize,
    /// Sorted element indices.
    pub members: Vec<usize>,
    pub element_order: u64,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

#[derive(Clone, Debug)]
pub struct ClassTable {
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
}

impl ClassTable {
    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

/// A subgroup of a parent [`FiniteGroup`], kept as a set of parent indices.
#[derive(Clone, Debug)]
pub struct Subgroup {
    mask: Vec<u64>,
    members: Vec<usize>,
    generators: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    fn trivial(parent_order: usize) -> Self {
        let mut mask = vec![0u64; parent_order.div_ceil(64)];
        mask[0] |= 1;
        Subgroup {
            mask,
            members: vec![IDENTITY],
            generators: Vec::new(),
        }
    }

    #[inline]
    pub fn contains(&self, element: usize) -> bool {
        self.mask[element / 64] >> (element % 64) & 1 == 1
    }

    fn insert(&mut self, element: usize) -> bool {
        let (w, b) = (element / 64, element % 64);
        if self.mask[w] >> b & 1 == 1 {
            false
        } else {
            self.mask[w] |= 1 << b;
            self.members.push(element);
            true
        }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    /// Sorted member indices.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }
}

impl FiniteGroup {
    /// Enumerates `⟨generators⟩` breadth-first from the identity, right-multiplying by
    /// the generators in the order given.
    pub fn closure(generators: &[Permutation], cap: usize) -> Result<Self, GroupError> {
        let first = generators.first().ok_or(GroupError::EmptyGenerators)?;
        let degree = first.degree();
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch {
                expected: degree,
                found: g.degree(),
            });
        }
        let cap = cap.max(1);
        let ngens = generators.len();
        let mut elements = vec![Permutation::identity(degree)];
        let mut index = HashMap::new();
        index.insert(elements[0].clone(), 0usize);
        // parent[i] * generators[via[i]] == elements[i]
        let mut parent = vec![usize::MAX];
        let mut via = vec![usize::MAX];
        let mut right: Vec<u32> = Vec::new();
        let mut i = 0;
        while i < elements.len() {
            for (j, g) in generators.iter().enumerate() {
                let y = elements[i].then(g);
                let idx = match index.get(&y) {
                    Some(&k) => k,
                    None => {
                        let k = elements.len();
                        if k >= cap {
                            return Err(GroupError::CapExceeded { cap });
                        }
                        index.insert(y.clone(), k);
                        elements.push(y);
                        parent.push(i);
                        via.push(j);
                        k
                    }
                };
                right.push(idx as u32);
            }
            i += 1;
        }
        let n = elements.len();
        let generator_indices = generators.iter().map(|g| index[g]).collect();
        let inverses = elements.iter().map(|x| index[&x.inverse()]).collect();
        let orders = elements.iter().map(Permutation::order).collect();
        let table = (n <= TABLE_LIMIT).then(|| {
            let mut t = vec![0u32; n * n];
            for a in 0..n {
                t[a * n] = a as u32;
                for b in 1..n {
                    let pa = t[a * n + parent[b]] as usize;
                    t[a * n + b] = right[pa * ngens + via[b]];
                }
            }
            t
        });
        Ok(FiniteGroup {
            degree,
            label: None,
            generators: generators.to_vec(),
            generator_indices,
            elements,
            index,
            table,
            inverses,
            orders,
            classes: OnceLock::new(),
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> String {
        self.label
            .clone()
            .unwrap_or_else(|| format!("group of order {}", self.order()))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.generator_indices
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Index of `a·b` (apply `a`, then `b`).
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&self.elements[a].then(&self.elements[b])],
        }
    }

    #[inline]
    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    #[inline]
    pub fn element_order(&self, a: usize) -> u64 {
        self.orders[a]
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let mut k = k % self.orders[a];
        let mut acc = IDENTITY;
        let mut base = a;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `g⁻¹·x·g`
    #[inline]
    pub fn conjugate(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inverses[g], x), g)
    }

    /// `a⁻¹·b⁻¹·a·b`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inverses[ba], ab)
    }

    pub fn product(&self, entries: &[usize]) -> usize {
        entries.iter().fold(IDENTITY, |acc, &x| self.mul(acc, x))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.generator_indices;
        gens.iter().enumerate().all(|(i, &a)| {
            gens[i + 1..]
                .iter()
                .all(|&b| self.mul(a, b) == self.mul(b, a))
        })
    }

    pub fn is_cyclic(&self) -> bool {
        let n = self.order() as u64;
        self.orders.contains(&n)
    }

    /// Multiset of element orders as `order -> count`.
    pub fn element_orders(&self) -> BTreeMap<u64, usize> {
        let mut out = BTreeMap::new();
        for &o in &self.orders {
            *out.entry(o).or_insert(0) += 1;
        }
        out
    }

    // ---- subgroups -------------------------------------------------------

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::trivial(self.order())
    }

    pub fn whole(&self) -> Subgroup {
        self.subgroup(&self.generator_indices)
    }

    /// The subgroup generated by `gens`, as parent indices.
    pub fn subgroup(&self, gens: &[usize]) -> Subgroup {
        self.extend_subgroup(&self.trivial_subgroup(), gens)
    }

    /// `⟨base, extra⟩`.
    pub fn extend_subgroup(&self, base: &Subgroup, extra: &[usize]) -> Subgroup {
        let mut h = base.clone();
        for &g in extra {
            if h.contains(g) {
                continue;
            }
            h.generators.push(g);
            let old = h.members.len();
            let mut queue: VecDeque<usize> = VecDeque::new();
            for i in 0..old {
                let y = self.mul(h.members[i], g);
                if h.insert(y) {
                    queue.push_back(y);
                }
            }
            while let Some(x) = queue.pop_front() {
                for k in 0..h.generators.len() {
                    let y = self.mul(x, h.generators[k]);
                    if h.insert(y) {
                        queue.push_back(y);
                    }
                }
            }
        }
        h.members.sort_unstable();
        h
    }

    /// `⟨elems⟩` as a standalone group on the same points.
    pub fn generated_subgroup(&self, elems: &[usize]) -> Result<FiniteGroup, GroupError> {
        if let Some(&bad) = elems.iter().find(|&&e| e >= self.order()) {
            return Err(GroupError::InvalidIndex(bad));
        }
        let h = self.subgroup(elems);
        self.subgroup_group(&h)
    }

    pub fn subgroup_group(&self, h: &Subgroup) -> Result<FiniteGroup, GroupError> {
        let gens: Vec<Permutation> = if h.generators.is_empty() {
            vec![Permutation::identity(self.degree)]
        } else {
            h.generators
                .iter()
                .map(|&g| self.elements[g].clone())
                .collect()
        };
        FiniteGroup::closure(&gens, h.order())
    }

    /// A subgroup from an arbitrary index set; `None` unless the set is closed.
    pub fn subgroup_from_members(&self, members: &[usize]) -> Option<Subgroup> {
        let h = self.subgroup(members);
        (h.order() == {
            let mut m = members.to_vec();
            m.sort_unstable();
            m.dedup();
            m.len()
        })
        .then_some(h)
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.generator_indices.iter().all(|&g| {
            h.generators
                .iter()
                .all(|&x| h.contains(self.conjugate(x, g)))
        })
    }

    /// Smallest normal subgroup of `within` containing `gens`, normalized by
    /// conjugation with `conjugators`.
    fn normal_closure_by(&self, gens: &[usize], conjugators: &[usize]) -> Subgroup {
        let mut h = self.subgroup(gens);
        loop {
            let missing = h.generators.iter().find_map(|&x| {
                conjugators
                    .iter()
                    .map(|&g| self.conjugate(x, g))
                    .find(|&c| !h.contains(c))
            });
            match missing {
                Some(c) => h = self.extend_subgroup(&h, &[c]),
                None => return h,
            }
        }
    }

    pub fn normal_closure(&self, gens: &[usize]) -> Subgroup {
        self.normal_closure_by(gens, &self.generator_indices)
    }

    /// `[H, H]`, the normal closure in `H` of commutators of `H`'s generators.
    pub fn derived_subgroup(&self, h: &Subgroup) -> Subgroup {
        let g = &h.generators;
        let mut comms = Vec::new();
        for i in 0..g.len() {
            for j in i + 1..g.len() {
                let c = self.commutator(g[i], g[j]);
                if c != IDENTITY {
                    comms.push(c);
                }
            }
        }
        self.normal_closure_by(&comms, g)
    }

    pub fn derived_series(&self) -> Vec<Subgroup> {
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().unwrap();
            let next = self.derived_subgroup(last);
            if next.order() == last.order() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().is_trivial()
    }

    pub fn center(&self) -> Subgroup {
        let members: Vec<usize> = (0..self.order())
            .filter(|&x| {
                self.generator_indices
                    .iter()
                    .all(|&g| self.mul(x, g) == self.mul(g, x))
            })
            .collect();
        self.subgroup(&members)
    }

    /// `p(G)`: the subgroup generated by all elements of `p`-power order.
    pub fn quasi_p_part(&self, p: u64) -> Subgroup {
        let gens: Vec<usize> = (1..self.order())
            .filter(|&x| is_power_of(self.orders[x], p))
            .collect();
        self.subgroup(&gens)
    }

    // ---- cosets and quotients ---------------------------------------------

    /// Right coset labels `N·x` for every element, plus one representative
    /// per coset (the smallest index).
    pub fn coset_labels(&self, n: &Subgroup) -> (Vec<usize>, Vec<usize>) {
        let mut label = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for x in 0..self.order() {
            if label[x] != usize::MAX {
                continue;
            }
            let id = reps.len();
            reps.push(x);
            for &m in &n.members {
                label[self.mul(m, x)] = id;
            }
        }
        (label, reps)
    }

    /// `G/N` acting on the cosets of `N` by right multiplication, together
    /// with the image index of every element of `G`.
    pub fn quotient_map(&self, n: &Subgroup) -> Result<(FiniteGroup, Vec<usize>), GroupError> {
        if !self.is_normal(n) {
            return Err(GroupError::NotNormal);
        }
        let (label, reps) = self.coset_labels(n);
        let action = |x: usize| -> Result<Permutation, GroupError> {
            let images: Vec<usize> = reps.iter().map(|&r| label[self.mul(r, x)]).collect();
            Permutation::from_images(&images)
        };
        let gens = self
            .generator_indices
            .iter()
            .map(|&g| action(g))
            .collect::<Result<Vec<_>, _>>()?;
        let q = FiniteGroup::closure(&gens, reps.len())?;
        // The image of x only depends on its coset.
        let mut coset_image = vec![usize::MAX; reps.len()];
        for (c, &r) in reps.iter().enumerate() {
            let p = action(r)?;
            coset_image[c] = q.index_of(&p).ok_or(GroupError::NotNormal)?;
        }
        let map = label.iter().map(|&c| coset_image[c]).collect();
        Ok((q, map))
    }

    pub fn quotient(&self, n: &Subgroup) -> Result<FiniteGroup, GroupError> {
        self.quotient_map(n).map(|(q, _)| q)
    }

    /// Whether `G/N` is cyclic, without building the quotient. `N` must be normal.
    pub fn quotient_is_cyclic(&self, n: &Subgroup) -> bool {
        let index = (self.order() / n.order()) as u64;
        index == 1 || (0..self.order()).any(|x| self.coset_order(x, n) == index)
    }

    /// Order of `xN` in `G/N`.
    pub fn coset_order(&self, x: usize, n: &Subgroup) -> u64 {
        let mut y = x;
        let mut k = 1;
        while !n.contains(y) {
            y = self.mul(y, x);
            k += 1;
        }
        k
    }

    /// Invariant factors of `G/[G,G]`.
    pub fn abelianization(&self) -> InvariantFactors {
        let d = self.derived_subgroup(&self.whole());
        self.abelian_quotient_factors(&d)
    }

    /// Invariant factors of `G/N` for a normal `N` with abelian quotient.
    pub fn abelian_quotient_factors(&self, n: &Subgroup) -> InvariantFactors {
        let index = (self.order() / n.order()) as u64;
        let mut primary = Vec::new();
        for (r, a) in arith::factorize(index) {
            // c_k = log_r #{x in G/N : x^(r^k) = 1}
            let mut c_prev = 0u32;
            let mut k = 0u32;
            let mut at_least = Vec::new();
            while c_prev < a {
                k += 1;
                let e = r.pow(k);
                let count = (0..self.order())
                    .filter(|&x| n.contains(self.pow(x, e)))
                    .count()
                    / n.order();
                let c_k = arith::valuation(count as u64, r);
                at_least.push(c_k - c_prev);
                c_prev = c_k;
            }
            // at_least[k-1] = number of cyclic r-factors of exponent >= k
            let parts = at_least[0] as usize;
            let mut exps = vec![0u32; parts];
            for (k, &cnt) in at_least.iter().enumerate() {
                for e in exps.iter_mut().take(cnt as usize) {
                    *e = k as u32 + 1;
                }
            }
            for e in exps {
                primary.push(r.pow(e));
            }
        }
        InvariantFactors::from_cyclic_orders(&primary)
    }

    pub fn has_cyclic_quotient(&self, m: u64) -> bool {
        m == 1
            || self
                .abelianization()
                .factors()
                .last()
                .is_some_and(|&f| f % m == 0)
    }

    // ---- conjugacy ---------------------------------------------------------

    pub fn class_table(&self) -> &ClassTable {
        self.classes.get_or_init(|| self.compute_classes())
    }

    pub fn conjugacy_classes(&self) -> &[ConjugacyClass] {
        self.class_table().classes()
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_table().class_of(element)
    }

    /// The class containing `rep^k` for any representative of class `class`.
    pub fn class_power(&self, class: usize, k: u64) -> usize {
        let rep = self.conjugacy_classes()[class].representative;
        self.class_of(self.pow(rep, k))
    }

    fn compute_classes(&self) -> ClassTable {
        let n = self.order();
        let mut raw = vec![usize::MAX; n];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if raw[x] != usize::MAX {
                continue;
            }
            let id = orbits.len();
            raw[x] = id;
            let mut orbit = vec![x];
            let mut i = 0;
            while i < orbit.len() {
                let y = orbit[i];
                for &g in &self.generator_indices {
                    let z = self.conjugate(y, g);
                    if raw[z] == usize::MAX {
                        raw[z] = id;
                        orbit.push(z);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
        let mut classes: Vec<ConjugacyClass> = orbits
            .into_iter()
            .map(|members| ConjugacyClass {
                representative: members[0],
                element_order: self.orders[members[0]],
                members,
            })
            .collect();
        classes.sort_by_key(|c| (c.element_order, c.members.len(), c.representative));
        let mut class_of = vec![0; n];
        for (i, c) in classes.iter().enumerate() {
            for &m in &c.members {
                class_of[m] = i;
            }
        }
        ClassTable { classes, class_of }
    }
}

pub(crate) fn is_power_of(mut n: u64, p: u64) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("label", &self.label)
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(n: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(n, &cycles).unwrap()
    }

    fn s3() -> FiniteGroup {
        FiniteGroup::closure(&[perm(3, &[&[0, 1]]), perm(3, &[&[0, 1, 2]])], DEFAULT_CAP).unwrap()
    }

    fn cyclic(n: usize) -> FiniteGroup {
        let c: Vec<usize> = (0..n).collect();
        FiniteGroup::closure(&[perm(n, &[&c])], DEFAULT_CAP).unwrap()
    }

    fn d8() -> FiniteGroup {
        FiniteGroup::closure(
            &[perm(4, &[&[0, 1, 2, 3]]), perm(4, &[&[1, 3]])],
            DEFAULT_CAP,
        )
        .unwrap()
    }

    #[test]
    fn closure_examples() {
        let g = FiniteGroup::closure(&[perm(2, &[&[0, 1]])], 10).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(s3().order(), 6);
        let t = FiniteGroup::closure(&[Permutation::identity(3)], 10).unwrap();
        assert_eq!(t.order(), 1);
        assert_eq!(
            FiniteGroup::closure(&[], 10).unwrap_err(),
            GroupError::EmptyGenerators
        );
        assert_eq!(
            FiniteGroup::closure(&[perm(3, &[&[0, 1]]), perm(3, &[&[0, 1, 2]])], 5).unwrap_err(),
            GroupError::CapExceeded { cap: 5 }
        );
        assert!(matches!(
            FiniteGroup::closure(&[perm(2, &[&[0, 1]]), perm(3, &[&[0, 1]])], 5),
            Err(GroupError::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn canonical_order_is_breadth_first() {
        let g = s3();
        assert!(g.element(IDENTITY).is_identity());
        assert_eq!(g.element(1), &perm(3, &[&[0, 1]]));
        assert_eq!(g.element(2), &perm(3, &[&[0, 1, 2]]));
        assert_eq!(g.generator_indices(), &[1, 2]);
    }

    #[test]
    fn table_agrees_with_composition() {
        let g = d8();
        for a in 0..g.order() {
            for b in 0..g.order() {
                let ab = g.element(a).then(g.element(b));
                assert_eq!(g.element(g.mul(a, b)), &ab);
            }
        }
    }

    #[test]
    fn class_counts() {
        let sizes: Vec<usize> = cyclic(4)
            .conjugacy_classes()
            .iter()
            .map(|c| c.size())
            .collect();
        assert_eq!(sizes, vec![1, 1, 1, 1]);
        let sizes: Vec<usize> = s3().conjugacy_classes().iter().map(|c| c.size()).collect();
        // sorted by element order: identity, transpositions, 3-cycles
        assert_eq!(sizes, vec![1, 3, 2]);
        assert_eq!(d8().conjugacy_classes().len(), 5);
    }

    #[test]
    fn class_power_examples() {
        let g = s3();
        let transpositions = 1;
        assert_eq!(g.class_power(transpositions, 1), transpositions);
        assert_eq!(g.class_power(transpositions, 2), g.class_of(IDENTITY));
        let s4 =
            FiniteGroup::closure(&[perm(4, &[&[0, 1]]), perm(4, &[&[0, 1, 2, 3]])], 100).unwrap();
        let four = s4.class_of(s4.index_of(&perm(4, &[&[0, 1, 2, 3]])).unwrap());
        assert_eq!(s4.class_power(four, 3), four);
        for &m in &s4.conjugacy_classes()[four].members {
            assert_eq!(s4.class_of(s4.pow(m, 3)), four);
        }
    }

    #[test]
    fn generated_subgroups() {
        let g = s3();
        assert_eq!(g.generated_subgroup(&[IDENTITY]).unwrap().order(), 1);
        assert_eq!(g.generated_subgroup(&[1, 2]).unwrap().order(), 6);
        let d = d8();
        let r = d.index_of(&perm(4, &[&[0, 1, 2, 3]])).unwrap();
        assert_eq!(d.generated_subgroup(&[r]).unwrap().order(), 4);
        assert_eq!(
            d.generated_subgroup(&[99]).unwrap_err(),
            GroupError::InvalidIndex(99)
        );
    }

    #[test]
    fn quotients() {
        let g = s3();
        let a3 = g.subgroup(&[2]);
        assert!(g.is_normal(&a3));
        assert_eq!(g.quotient(&a3).unwrap().order(), 2);
        let t = g.trivial_subgroup();
        let q = g.quotient(&t).unwrap();
        assert_eq!(q.order(), 6);
        assert!(!q.is_abelian());
        let not_normal = g.subgroup(&[1]);
        assert!(!g.is_normal(&not_normal));
        assert_eq!(g.quotient(&not_normal).unwrap_err(), GroupError::NotNormal);
        let z6 = cyclic(6);
        let two = z6.subgroup(&[z6.pow(1, 3)]);
        let q = z6.quotient(&two).unwrap();
        assert_eq!(q.order(), 3);
        assert!(q.is_cyclic());
    }

    #[test]
    fn solvability_and_quasi_p() {
        let s4 =
            FiniteGroup::closure(&[perm(4, &[&[0, 1]]), perm(4, &[&[0, 1, 2, 3]])], 100).unwrap();
        let orders: Vec<usize> = s4.derived_series().iter().map(|h| h.order()).collect();
        assert_eq!(orders, vec![24, 12, 4, 1]);
        assert!(s4.is_solvable());
        let a5 = FiniteGroup::closure(&[perm(5, &[&[0, 1, 2]]), perm(5, &[&[0, 1, 2, 3, 4]])], 100)
            .unwrap();
        assert_eq!(a5.order(), 60);
        assert!(!a5.is_solvable());
        assert_eq!(a5.quasi_p_part(5).order(), 60);
        assert_eq!(s3().quasi_p_part(3).order(), 3);
        assert_eq!(cyclic(6).quasi_p_part(2).order(), 2);
        assert!(cyclic(6).is_solvable());
    }

    #[test]
    fn abelianization_examples() {
        assert_eq!(s3().abelianization().factors(), &[2]);
        assert_eq!(cyclic(27).abelianization().factors(), &[27]);
        assert_eq!(d8().abelianization().factors(), &[2, 2]);
        assert!(cyclic(27).has_cyclic_quotient(27));
        assert!(!s3().has_cyclic_quotient(3));
        assert!(cyclic(54).has_cyclic_quotient(27));
        assert!(cyclic(4).is_cyclic());
        assert!(!d8().is_cyclic());
    }

    #[test]
    fn element_order_multiset() {
        let orders = d8().element_orders();
        assert_eq!(orders.get(&1), Some(&1));
        assert_eq!(orders.get(&2), Some(&5));
        assert_eq!(orders.get(&4), Some(&2));
    }
}
