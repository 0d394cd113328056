//! Whether the hull-kernel operator restricted to a class of ideals is a closure operator.

use std::collections::BTreeSet;

use super::{TopologyError, EXHAUSTIVE_PAIR_LIMIT};
use crate::ideal::{Ideal, IdealLattice};

/// Outcome of [`closure_class_check`].
///
/// Two absorption conditions are evaluated. `absorption` quantifies over all
/// pairs of ideals of the monoid; `kernel_absorption` only over intersections
/// of members of the class, which are the ideals the restricted operator can
/// actually see.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureClassCheck {
    pub class: Vec<Ideal>,
    /// The restricted operator satisfies all four closure axioms.
    pub is_kuratowski: bool,
    /// First failing pair of subsets `(X, X')` of the class.
    pub kuratowski_witness: Option<(Vec<Ideal>, Vec<Ideal>)>,
    /// `A ∩ B ⊆ I ⟹ A ⊆ I or B ⊆ I` for all ideals `A, B` and `I` in the class.
    pub absorption: bool,
    /// `(A, B, I)` refuting `absorption`.
    pub absorption_witness: Option<(Ideal, Ideal, Ideal)>,
    /// The same condition with `A, B` ranging over intersections of class members.
    pub kernel_absorption: bool,
    pub kernel_absorption_witness: Option<(Ideal, Ideal, Ideal)>,
    /// `false` when the axioms were checked through kernels instead of all subsets.
    pub direct_subsets: bool,
}

impl ClosureClassCheck {
    /// The closure axioms hold exactly when the lattice-wide absorption does.
    pub fn agrees(&self) -> bool {
        self.is_kuratowski == self.absorption
    }

    pub fn agrees_on_kernels(&self) -> bool {
        self.is_kuratowski == self.kernel_absorption
    }
}

pub fn closure_class_check(
    lattice: &IdealLattice,
    class: &[Ideal],
) -> Result<ClosureClassCheck, TopologyError> {
    let mut class: Vec<Ideal> = class.to_vec();
    class.sort();
    class.dedup();
    if let Some(bad) = class
        .iter()
        .find(|i| i.is_whole() || lattice.position(i).is_none())
    {
        return Err(TopologyError::NotAProperIdeal(*bad));
    }

    let kernels = intersection_closure(&class);
    let direct_subsets = class.len() <= EXHAUSTIVE_PAIR_LIMIT;
    let kuratowski_witness = if direct_subsets {
        direct_axiom_failure(&class)
    } else {
        kernel_axiom_failure(&class, &kernels)
    };

    let absorption_witness = absorption_failure(&class, lattice.ideals());
    let kernel_list: Vec<Ideal> = kernels.into_iter().collect();
    let kernel_absorption_witness = absorption_failure(&class, &kernel_list);

    Ok(ClosureClassCheck {
        is_kuratowski: kuratowski_witness.is_none(),
        kuratowski_witness,
        absorption: absorption_witness.is_none(),
        absorption_witness,
        kernel_absorption: kernel_absorption_witness.is_none(),
        kernel_absorption_witness,
        direct_subsets,
        class,
    })
}

/// Members of the class containing `a`, as a bitmask over class positions.
fn hull_in(class: &[Ideal], a: &Ideal) -> u32 {
    class
        .iter()
        .enumerate()
        .filter(|(_, i)| a.is_subset(i))
        .fold(0, |acc, (k, _)| acc | 1 << k)
}

fn members(class: &[Ideal], mask: u32) -> Vec<Ideal> {
    (0..class.len())
        .filter(|k| mask & (1 << k) != 0)
        .map(|k| class[k])
        .collect()
}

fn direct_axiom_failure(class: &[Ideal]) -> Option<(Vec<Ideal>, Vec<Ideal>)> {
    let count = 1u32 << class.len();
    let closure: Vec<u32> = (0..count)
        .map(|mask| {
            let kernel = (0..class.len())
                .filter(|k| mask & (1 << k) != 0)
                .map(|k| class[k])
                .reduce(|a, b| a.intersection(&b));
            kernel.map_or(0, |k| hull_in(class, &k))
        })
        .collect();
    let fail = |x: u32, y: u32| Some((members(class, x), members(class, y)));
    if closure[0] != 0 {
        return fail(0, 0);
    }
    for x in 0..count {
        let cx = closure[x as usize];
        if x & !cx != 0 || closure[cx as usize] != cx {
            return fail(x, 0);
        }
    }
    for x in 0..count {
        for y in 0..count {
            if closure[(x | y) as usize] != closure[x as usize] | closure[y as usize] {
                return fail(x, y);
            }
        }
    }
    None
}

/// Axioms checked through the distinct kernels; `hull(A)` realizes kernel `A` as a subset.
fn kernel_axiom_failure(
    class: &[Ideal],
    kernels: &BTreeSet<Ideal>,
) -> Option<(Vec<Ideal>, Vec<Ideal>)> {
    let hulls: Vec<(Ideal, u32)> = kernels.iter().map(|a| (*a, hull_in(class, a))).collect();
    for (a, ha) in &hulls {
        let back = members(class, *ha)
            .into_iter()
            .reduce(|p, q| p.intersection(&q));
        if back.map(|k| hull_in(class, &k)) != Some(*ha) {
            return Some((members(class, *ha), Vec::new()));
        }
        debug_assert_eq!(back, Some(*a));
    }
    for (a, ha) in &hulls {
        for (b, hb) in &hulls {
            if hull_in(class, &a.intersection(b)) != ha | hb {
                return Some((members(class, *ha), members(class, *hb)));
            }
        }
    }
    None
}

fn intersection_closure(class: &[Ideal]) -> BTreeSet<Ideal> {
    let mut all: BTreeSet<Ideal> = class.iter().copied().collect();
    let mut frontier: Vec<Ideal> = class.to_vec();
    while let Some(a) = frontier.pop() {
        for b in class {
            let c = a.intersection(b);
            if all.insert(c) {
                frontier.push(c);
            }
        }
    }
    all
}

fn absorption_failure(class: &[Ideal], pool: &[Ideal]) -> Option<(Ideal, Ideal, Ideal)> {
    class.iter().find_map(|i| {
        pool.iter().enumerate().find_map(|(k, a)| {
            pool[k..]
                .iter()
                .find(|b| a.intersection(b).is_subset(i) && !a.is_subset(i) && !b.is_subset(i))
                .map(|b| (*a, *b, *i))
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::{classify_all, enumerate_ideals};
    use crate::monoid::tests::z_mod;

    fn proper(l: &IdealLattice) -> Vec<Ideal> {
        l.ideals()
            .iter()
            .copied()
            .filter(Ideal::is_proper)
            .collect()
    }

    #[test]
    fn terminal_points_form_a_closure_class() {
        let m = z_mod(6);
        let l = enumerate_ideals(&m);
        let si: Vec<Ideal> = classify_all(&m, &l)
            .into_iter()
            .filter(|c| c.strongly_irreducible)
            .map(|c| c.ideal)
            .collect();
        let r = closure_class_check(&l, &si).unwrap();
        assert!(r.is_kuratowski && r.absorption && r.agrees());
    }

    #[test]
    fn all_proper_ideals_of_z6_fail() {
        let m = z_mod(6);
        let l = enumerate_ideals(&m);
        let r = closure_class_check(&l, &proper(&l)).unwrap();
        assert!(!r.is_kuratowski && !r.absorption && r.agrees());
        let (a, b, i) = r.absorption_witness.unwrap();
        assert_eq!(a.members().to_vec(), vec![0, 3]);
        assert_eq!(b.members().to_vec(), vec![0, 2, 4]);
        assert_eq!(i.members().to_vec(), vec![0]);
    }

    #[test]
    fn primes_of_z6_form_a_closure_class() {
        let m = z_mod(6);
        let l = enumerate_ideals(&m);
        let primes: Vec<Ideal> = classify_all(&m, &l)
            .into_iter()
            .filter(|c| c.prime)
            .map(|c| c.ideal)
            .collect();
        assert_eq!(primes.len(), 3);
        let r = closure_class_check(&l, &primes).unwrap();
        assert!(r.is_kuratowski && r.absorption);
    }

    #[test]
    fn singleton_class_separates_the_two_absorption_readings() {
        let m = z_mod(6);
        let l = enumerate_ideals(&m);
        let zero = *l.get(0);
        let r = closure_class_check(&l, &[zero]).unwrap();
        // on a one-point class every operator with HK(∅) = ∅ and X ⊆ HK(X) is additive
        assert!(r.is_kuratowski);
        assert!(!r.absorption);
        assert!(r.kernel_absorption);
        assert!(!r.agrees() && r.agrees_on_kernels());
    }

    #[test]
    fn whole_monoid_is_rejected() {
        let m = z_mod(4);
        let l = enumerate_ideals(&m);
        assert!(closure_class_check(&l, &[Ideal::whole(&m)]).is_err());
    }

    #[test]
    fn kernel_reduction_matches_direct_subsets() {
        let m = z_mod(6);
        let l = enumerate_ideals(&m);
        let class = proper(&l);
        let kernels = intersection_closure(&class);
        assert_eq!(
            kernel_axiom_failure(&class, &kernels).is_some(),
            direct_axiom_failure(&class).is_some()
        );
    }
}
