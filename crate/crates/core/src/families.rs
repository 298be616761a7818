//! Constructors for the named group families.
//!
//! Every constructor returns a fully enumerated [`FiniteGroup`] labelled with
//! the group-spec syntax that produces it (`C(4)`, `D(8)`, `FSD(2,2)`, ...).

use crate::arith;
use crate::error::GroupError;
use crate::field::FiniteField;
use crate::group::{FiniteGroup, DEFAULT_CAP};
use crate::perm::Permutation;

fn check_order(order: Option<u64>, cap: usize) -> Result<(), GroupError> {
    match order {
        Some(o) if o <= cap as u64 => Ok(()),
        _ => Err(GroupError::CapExceeded { cap }),
    }
}

fn cycle(degree: usize, points: impl IntoIterator<Item = usize>) -> Permutation {
    let c: Vec<usize> = points.into_iter().collect();
    Permutation::from_cycles(degree, &[c]).expect("valid cycle")
}

fn positive(name: &str, n: usize) -> Result<(), GroupError> {
    if n == 0 {
        Err(GroupError::InvalidParameter(format!(
            "{name} must be positive"
        )))
    } else {
        Ok(())
    }
}

/// `Z/n` acting regularly on `n` points.
pub fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    positive("n", n)?;
    check_order(Some(n as u64), DEFAULT_CAP)?;
    Ok(FiniteGroup::closure(&[cycle(n, 0..n)], DEFAULT_CAP)?.with_label(format!("C({n})")))
}

/// The dihedral group of order `two_n`, `⟨r, s | rⁿ = s² = 1, rs = sr⁻¹⟩`.
///
/// For `n ≥ 3` it acts on the `n` vertices of a polygon. `D(2)` is `Z/2` and
/// `D(4)` is the Klein four-group on 4 points.
pub fn dihedral(two_n: usize) -> Result<FiniteGroup, GroupError> {
    if two_n < 2 || !two_n.is_multiple_of(2) {
        return Err(GroupError::InvalidParameter(format!(
            "dihedral order must be even and at least 2, got {two_n}"
        )));
    }
    check_order(Some(two_n as u64), DEFAULT_CAP)?;
    let n = two_n / 2;
    let gens = match n {
        1 => vec![cycle(2, [0, 1])],
        2 => vec![
            Permutation::from_cycles(4, &[vec![0, 1], vec![2, 3]])?,
            Permutation::from_cycles(4, &[vec![0, 2], vec![1, 3]])?,
        ],
        _ => {
            let reflection: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
            vec![cycle(n, 0..n), Permutation::from_images(&reflection)?]
        }
    };
    Ok(FiniteGroup::closure(&gens, DEFAULT_CAP)?.with_label(format!("D({two_n})")))
}

fn factorial(n: usize) -> Option<u64> {
    (1..=n as u64).try_fold(1u64, |acc, k| acc.checked_mul(k))
}

pub fn symmetric(n: usize) -> Result<FiniteGroup, GroupError> {
    positive("n", n)?;
    check_order(factorial(n), DEFAULT_CAP)?;
    let gens = match n {
        1 => vec![Permutation::identity(1)],
        2 => vec![cycle(2, [0, 1])],
        _ => vec![cycle(n, [0, 1]), cycle(n, 0..n)],
    };
    Ok(FiniteGroup::closure(&gens, DEFAULT_CAP)?.with_label(format!("S({n})")))
}

pub fn alternating(n: usize) -> Result<FiniteGroup, GroupError> {
    positive("n", n)?;
    check_order(factorial(n).map(|f| (f / 2).max(1)), DEFAULT_CAP)?;
    let gens = if n < 3 {
        vec![Permutation::identity(n)]
    } else if n % 2 == 1 {
        vec![cycle(n, [0, 1, 2]), cycle(n, 0..n)]
    } else {
        vec![cycle(n, [0, 1, 2]), cycle(n, 1..n)]
    };
    Ok(FiniteGroup::closure(&gens, DEFAULT_CAP)?.with_label(format!("A({n})")))
}

/// `SL(3,2)` acting on the 7 nonzero vectors of `F₂³`.
///
/// Vector `(x, y, z)` is the bit pattern `x + 2y + 4z`, point `v - 1`.
pub fn sl32() -> Result<FiniteGroup, GroupError> {
    let linear = |f: fn(usize) -> usize| -> Result<Permutation, GroupError> {
        let images: Vec<usize> = (1..8).map(|v| f(v) - 1).collect();
        Permutation::from_images(&images)
    };
    // transvection x += y, and the coordinate cycle (x, y, z) -> (y, z, x)
    let transvection = linear(|v| v ^ ((v >> 1) & 1))?;
    let rotation = linear(|v| ((v >> 1) & 1) | ((v >> 2) & 1) << 1 | (v & 1) << 2)?;
    Ok(FiniteGroup::closure(&[transvection, rotation], DEFAULT_CAP)?.with_label("SL32"))
}

/// `F_{qⁿ} ⋊ F*_{qⁿ}`: the affine maps `x ↦ a·x + b` of the field with `qⁿ`
/// elements, acting on those elements.
pub fn field_semidirect(q: u64, n: u32) -> Result<FiniteGroup, GroupError> {
    arith::prime_power(q).ok_or(GroupError::NotPrimePower(q))?;
    if n == 0 {
        return Err(GroupError::InvalidParameter("n must be positive".into()));
    }
    let size = q
        .checked_pow(n)
        .ok_or(GroupError::CapExceeded { cap: DEFAULT_CAP })?;
    check_order(size.checked_mul(size - 1), DEFAULT_CAP)?;
    let field = FiniteField::new(size)?;
    let g = field.primitive_element();
    let translate: Vec<usize> = (0..size).map(|x| field.add(x, 1) as usize).collect();
    let scale: Vec<usize> = (0..size).map(|x| field.mul(g, x) as usize).collect();
    let gens = [
        Permutation::from_images(&translate)?,
        Permutation::from_images(&scale)?,
    ];
    Ok(FiniteGroup::closure(&gens, DEFAULT_CAP)?.with_label(format!("FSD({q},{n})")))
}

/// `A × B` acting on disjoint point sets.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    check_order(
        (a.order() as u64).checked_mul(b.order() as u64),
        DEFAULT_CAP,
    )?;
    let degree = a.degree() + b.degree();
    let gens: Vec<Permutation> = a
        .generators()
        .iter()
        .map(|g| g.embed(0, degree))
        .chain(b.generators().iter().map(|g| g.embed(a.degree(), degree)))
        .collect();
    Ok(
        FiniteGroup::closure(&gens, DEFAULT_CAP)?.with_label(format!(
            "prod({},{})",
            a.label(),
            b.label()
        )),
    )
}

/// `K ⋊ Z/m` where the complement generator acts on `K` by the automorphism
/// sending `K`'s generators to `action`.
#[derive(Clone, Debug)]
pub struct SemidirectSpec {
    pub kernel: FiniteGroup,
    pub complement_order: usize,
    /// Images of the kernel's generators, as kernel element indices.
    pub action: Vec<usize>,
}

impl SemidirectSpec {
    /// Extends the generator images to a full automorphism table, verifying that
    /// it is well defined, bijective, and of order dividing `complement_order`.
    pub fn automorphism(&self) -> Result<Vec<usize>, GroupError> {
        let k = &self.kernel;
        let gens = k.generator_indices();
        if self.action.len() != gens.len() {
            return Err(GroupError::InvalidAction(format!(
                "expected {} generator images, got {}",
                gens.len(),
                self.action.len()
            )));
        }
        if let Some(&bad) = self.action.iter().find(|&&a| a >= k.order()) {
            return Err(GroupError::InvalidIndex(bad));
        }
        let mut phi = vec![usize::MAX; k.order()];
        phi[0] = 0;
        // breadth-first: every element is some earlier element times a generator
        for x in 0..k.order() {
            if phi[x] == usize::MAX {
                return Err(GroupError::InvalidAction("kernel not reached".into()));
            }
            for (j, &g) in gens.iter().enumerate() {
                let y = k.mul(x, g);
                let image = k.mul(phi[x], self.action[j]);
                if phi[y] == usize::MAX {
                    phi[y] = image;
                } else if phi[y] != image {
                    return Err(GroupError::InvalidAction(
                        "generator images do not respect the kernel relations".into(),
                    ));
                }
            }
        }
        let mut seen = vec![false; k.order()];
        for &y in &phi {
            if std::mem::replace(&mut seen[y], true) {
                return Err(GroupError::InvalidAction("map is not bijective".into()));
            }
        }
        let mut power: Vec<usize> = (0..k.order()).collect();
        for _ in 0..self.complement_order {
            power = power.iter().map(|&x| phi[x]).collect();
        }
        if power.iter().enumerate().any(|(i, &x)| i != x) {
            return Err(GroupError::InvalidAction(format!(
                "automorphism order does not divide {}",
                self.complement_order
            )));
        }
        Ok(phi)
    }
}

/// Realized on `|K| + m` points: `K` acts on itself by left multiplication and
/// the complement generator applies the automorphism while cycling `m` extra
/// points, which makes the action faithful.
pub fn semidirect(spec: &SemidirectSpec) -> Result<FiniteGroup, GroupError> {
    let m = spec.complement_order;
    positive("complement order", m)?;
    let phi = spec.automorphism()?;
    let k = &spec.kernel;
    check_order((k.order() as u64).checked_mul(m as u64), DEFAULT_CAP)?;
    let degree = k.order() + m;
    let mut gens = Vec::new();
    for &g in k.generator_indices() {
        let mut images: Vec<usize> = (0..degree).collect();
        for (x, img) in images.iter_mut().enumerate().take(k.order()) {
            *img = k.mul(g, x);
        }
        gens.push(Permutation::from_images(&images)?);
    }
    let mut images: Vec<usize> = phi.clone();
    images.extend((0..m).map(|i| k.order() + (i + 1) % m));
    gens.push(Permutation::from_images(&images)?);
    Ok(FiniteGroup::closure(&gens, DEFAULT_CAP)?.with_label(format!("SDP({}, {m})", k.label())))
}

/// `Z/k ⋊ Z/m`, the complement generator acting by `x ↦ x^u`.
pub fn cyclic_semidirect(k: usize, m: usize, u: u64) -> Result<FiniteGroup, GroupError> {
    positive("k", k)?;
    let kernel = cyclic(k)?;
    let gen = kernel.generator_indices()[0];
    let image = kernel.pow(gen, u);
    let spec = SemidirectSpec {
        kernel,
        complement_order: m,
        action: vec![image],
    };
    Ok(semidirect(&spec)?.with_label(format!("SDP({k},{m},{u})")))
}

/// Units `u` modulo `k` with `u^m ≡ 1`, i.e. the admissible actions of `Z/m`
/// on `Z/k`, ascending.
pub fn cyclic_actions(k: u64, m: u64) -> Vec<u64> {
    if k == 1 {
        return vec![1];
    }
    (1..k)
        .filter(|&u| arith::gcd(u, k) == 1 && arith::pow_mod(u, m, k) == 1)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_orders() {
        assert_eq!(cyclic(1).unwrap().order(), 1);
        assert_eq!(cyclic(12).unwrap().order(), 12);
        for two_n in (2..=30).step_by(2) {
            let d = dihedral(two_n).unwrap();
            assert_eq!(d.order(), two_n);
            assert_eq!(d.is_abelian(), two_n <= 4);
        }
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert_eq!(symmetric(1).unwrap().order(), 1);
        assert_eq!(alternating(4).unwrap().order(), 12);
        assert_eq!(alternating(6).unwrap().order(), 360);
        assert_eq!(alternating(2).unwrap().order(), 1);
        assert!(dihedral(7).is_err());
        assert!(cyclic(0).is_err());
        assert_eq!(
            symmetric(8).unwrap_err(),
            GroupError::CapExceeded { cap: DEFAULT_CAP }
        );
    }

    #[test]
    fn d6_matches_s3() {
        let d = dihedral(6).unwrap();
        let s = symmetric(3).unwrap();
        assert_eq!(d.order(), s.order());
        assert!(!d.is_abelian() && !s.is_abelian());
    }

    #[test]
    fn a5_is_nonsolvable() {
        let a5 = alternating(5).unwrap();
        assert_eq!(a5.order(), 60);
        assert!(!a5.is_solvable());
    }

    #[test]
    fn dihedral_reflections() {
        for n in 3..=12 {
            let d = dihedral(2 * n).unwrap();
            let rotations = d.subgroup(&[d.generator_indices()[0]]);
            assert_eq!(rotations.order(), n);
            let reflections = (0..d.order())
                .filter(|&x| d.element_order(x) == 2 && !rotations.contains(x))
                .count();
            assert_eq!(reflections, n);
        }
    }

    #[test]
    fn sl32_structure() {
        let g = sl32().unwrap();
        assert_eq!(g.order(), 168);
        assert_eq!(g.degree(), 7);
        assert!(!g.is_solvable());
        assert_eq!(g.quasi_p_part(7).order(), 168);
        // simple: the normal closure of any nonidentity element is everything
        for c in g.conjugacy_classes().iter().skip(1) {
            assert_eq!(g.normal_closure(&[c.representative]).order(), 168);
        }
    }

    #[test]
    fn field_semidirect_examples() {
        let a4 = field_semidirect(2, 2).unwrap();
        assert_eq!(a4.order(), 12);
        assert!(a4.is_solvable());
        assert_eq!(a4.abelianization().factors(), &[3]);
        assert_eq!(a4.derived_subgroup(&a4.whole()).order(), 4);
        let s3 = field_semidirect(3, 1).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(field_semidirect(2, 1).unwrap().order(), 2);
        assert_eq!(
            field_semidirect(6, 1).unwrap_err(),
            GroupError::NotPrimePower(6)
        );
        assert!(matches!(
            field_semidirect(2, 8),
            Err(GroupError::CapExceeded { .. })
        ));
    }

    #[test]
    fn field_semidirect_kernel_and_fixed_point() {
        for (q, n) in [
            (2, 1),
            (2, 2),
            (3, 1),
            (2, 3),
            (3, 2),
            (4, 1),
            (5, 1),
            (7, 1),
            (8, 1),
            (4, 2),
        ] {
            let g = field_semidirect(q, n).unwrap();
            let size = q.pow(n) as usize;
            let p = arith::prime_power(q).unwrap().0;
            // translations: the fixed-point-free elements plus identity
            let kernel: Vec<usize> = (0..g.order())
                .filter(|&x| x == 0 || (0..size).all(|pt| g.element(x).image(pt) != pt))
                .collect();
            assert_eq!(kernel.len(), size);
            let k = g
                .subgroup_from_members(&kernel)
                .expect("translations form a subgroup");
            assert!(g.is_normal(&k));
            assert!(kernel[1..].iter().all(|&x| g.element_order(x) == p));
            // the multiplicative group fixes exactly the point 0
            let scale = g.generator_indices()[1];
            let fixed = (0..size)
                .filter(|&pt| g.element(scale).image(pt) == pt)
                .count();
            assert_eq!(fixed, if size == 2 { 2 } else { 1 });
        }
    }

    #[test]
    fn semidirect_products() {
        let trivial = cyclic_semidirect(3, 10, 1).unwrap();
        assert_eq!(trivial.order(), 30);
        assert!(trivial.is_abelian());
        let g = cyclic_semidirect(9, 6, 8).unwrap();
        assert_eq!(g.order(), 54);
        let noncommuting = g.generator_indices().iter().any(|&a| {
            g.generator_indices()
                .iter()
                .any(|&b| g.mul(a, b) != g.mul(b, a))
        });
        assert!(noncommuting);
        // 2 has order 6 mod 9, so it cannot be the action of Z/4
        assert!(matches!(
            cyclic_semidirect(9, 4, 2),
            Err(GroupError::InvalidAction(_))
        ));
        // 3 is not a unit mod 9
        assert!(matches!(
            cyclic_semidirect(9, 6, 3),
            Err(GroupError::InvalidAction(_))
        ));
    }

    #[test]
    fn direct_products() {
        let g = direct_product(&cyclic(3).unwrap(), &cyclic(10).unwrap()).unwrap();
        assert_eq!(g.order(), 30);
        assert_eq!(g.abelianization().factors(), &[30]);
        assert_eq!(g.label(), "prod(C(3),C(10))");
        let big = direct_product(&symmetric(7).unwrap(), &cyclic(5).unwrap());
        assert!(matches!(big, Err(GroupError::CapExceeded { .. })));
    }

    #[test]
    fn action_enumeration() {
        assert_eq!(cyclic_actions(9, 2), vec![1, 8]);
        assert_eq!(cyclic_actions(9, 6), vec![1, 2, 4, 5, 7, 8]);
        assert_eq!(cyclic_actions(5, 3), vec![1]);
    }
}
