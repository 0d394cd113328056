use super::{closed_from_members, hull, ClosedSet, PointSet, TerminalSpace, TopologyError};
use crate::ideal::Ideal;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibleAnalysis {
    /// No two closed sets split it (checked against every closed pair).
    pub irreducible_topological: bool,
    /// Closed sets `(C1, C2)` with `C ⊆ C1 ∪ C2` but `C ⊄ C1`, `C ⊄ C2`.
    pub reducing_pair: Option<(PointSet, PointSet)>,
    pub kernel: Ideal,
    pub kernel_strongly_irreducible: bool,
    /// The kernel itself, when it is a point of the set.
    pub generic_point: Option<usize>,
    /// Every point whose closure is the whole set.
    pub generic_points: Vec<usize>,
    pub unique: bool,
}

pub fn irreducible_closed_analysis(
    space: &TerminalSpace,
    closed: &[ClosedSet],
    c: &ClosedSet,
) -> Result<IrreducibleAnalysis, TopologyError> {
    let kernel = *c.kernel_ideal().ok_or(TopologyError::EmptyClosedSet)?;
    let target = c.members();
    let reducing_pair = closed.iter().enumerate().find_map(|(k, c1)| {
        closed[k..]
            .iter()
            .find(|c2| {
                target.is_subset(c1.members().union(c2.members()))
                    && !target.is_subset(c1.members())
                    && !target.is_subset(c2.members())
            })
            .map(|c2| (c1.members(), c2.members()))
    });
    let generic_points: Vec<usize> = target
        .iter()
        .filter(|&k| space.up_set(k) == target)
        .collect();
    let generic_point = space.point_index(&kernel).filter(|&k| target.contains(k));
    Ok(IrreducibleAnalysis {
        irreducible_topological: reducing_pair.is_none(),
        reducing_pair,
        kernel_strongly_irreducible: space.is_strongly_irreducible(&kernel),
        kernel,
        generic_point,
        unique: generic_points.len() == 1,
        generic_points,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Components {
    /// Maximal irreducible closed sets, in closed-set order.
    pub components: Vec<ClosedSet>,
    /// Inclusion-minimal points.
    pub minimal_points: Vec<usize>,
    /// `(point, component)` pairs from `I ↦ hull(I)`.
    pub pairing: Vec<(usize, usize)>,
    pub is_bijection: bool,
}

pub fn irreducible_components(space: &TerminalSpace, closed: &[ClosedSet]) -> Components {
    let irreducible: Vec<ClosedSet> = closed
        .iter()
        .filter(|c| !c.is_empty())
        .filter(|c| {
            irreducible_closed_analysis(space, closed, c)
                .map(|a| a.irreducible_topological)
                .unwrap_or(false)
        })
        .copied()
        .collect();
    let components: Vec<ClosedSet> = irreducible
        .iter()
        .filter(|c| {
            !irreducible
                .iter()
                .any(|d| c.members().is_proper_subset(d.members()))
        })
        .copied()
        .collect();
    let minimal_points: Vec<usize> = (0..space.len())
        .filter(|&k| {
            !(0..space.len()).any(|j| {
                space
                    .point(j)
                    .members()
                    .is_proper_subset(space.point(k).members())
            })
        })
        .collect();
    let pairing: Vec<(usize, usize)> = minimal_points
        .iter()
        .filter_map(|&k| {
            let h = hull(space, space.point(k));
            components.iter().position(|c| *c == h).map(|j| (k, j))
        })
        .collect();
    let mut images: Vec<usize> = pairing.iter().map(|&(_, j)| j).collect();
    images.sort_unstable();
    images.dedup();
    let is_bijection = pairing.len() == minimal_points.len()
        && images.len() == pairing.len()
        && images.len() == components.len();
    Components {
        components,
        minimal_points,
        pairing,
        is_bijection,
    }
}

/// The closure of a single point, wrapped as a closed set.
pub fn point_closure(space: &TerminalSpace, k: usize) -> ClosedSet {
    closed_from_members(space, space.up_set(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::tests::z_mod;
    use crate::topology::enumerate_closed_sets;
    use crate::topology::tests::{pts, space_of};

    #[test]
    fn whole_z6_space_is_reducible() {
        let s = space_of(&z_mod(6));
        let closed = enumerate_closed_sets(&s);
        let whole = *closed.last().unwrap();
        let a = irreducible_closed_analysis(&s, &closed, &whole).unwrap();
        assert!(!a.irreducible_topological && !a.kernel_strongly_irreducible);
        assert_eq!(a.kernel.members().to_vec(), vec![0]);
        assert_eq!(a.generic_point, None);
        assert!(a.generic_points.is_empty());
        let (c1, c2) = a.reducing_pair.unwrap();
        assert_eq!(c1, pts(&s, &[&[0, 3], &[0, 2, 3, 4]]));
        assert_eq!(c2, pts(&s, &[&[0, 2, 4], &[0, 2, 3, 4]]));
    }

    #[test]
    fn hull_of_0_3_has_a_unique_generic_point() {
        let s = space_of(&z_mod(6));
        let closed = enumerate_closed_sets(&s);
        let c = point_closure(&s, 0);
        let a = irreducible_closed_analysis(&s, &closed, &c).unwrap();
        assert!(a.irreducible_topological && a.kernel_strongly_irreducible && a.unique);
        assert_eq!(a.generic_point, Some(0));
        assert_eq!(a.generic_points, vec![0]);
    }

    #[test]
    fn singleton_closed_set() {
        let s = space_of(&z_mod(6));
        let closed = enumerate_closed_sets(&s);
        let a = irreducible_closed_analysis(&s, &closed, &point_closure(&s, 2)).unwrap();
        assert!(a.irreducible_topological);
        assert_eq!(a.generic_point, Some(2));
    }

    #[test]
    fn empty_closed_set_is_rejected() {
        let s = space_of(&z_mod(6));
        let closed = enumerate_closed_sets(&s);
        assert_eq!(
            irreducible_closed_analysis(&s, &closed, &ClosedSet::empty(&s)),
            Err(TopologyError::EmptyClosedSet)
        );
    }

    #[test]
    fn components() {
        let s = space_of(&z_mod(6));
        let c = irreducible_components(&s, &enumerate_closed_sets(&s));
        assert_eq!(c.components.len(), 2);
        assert_eq!(c.minimal_points, vec![0, 1]);
        assert!(c.is_bijection);

        let s = space_of(&z_mod(4));
        let c = irreducible_components(&s, &enumerate_closed_sets(&s));
        assert_eq!(c.components.len(), 1);
        assert_eq!(c.components[0].members(), s.whole_space());
        assert_eq!(c.minimal_points, vec![0]);

        let s = space_of(&z_mod(1));
        let c = irreducible_components(&s, &enumerate_closed_sets(&s));
        assert!(c.components.is_empty() && c.minimal_points.is_empty() && c.is_bijection);
    }
}
