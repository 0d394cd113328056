//! Radicals of the monoid, density of the maximal and prime subspaces,
//! the unit criterion, and chain conditions on closed sets.

use super::{hk_closure, hull_points, ClosedSet, PointSet, TerminalSpace, TopologyError};
use crate::ideal::{intersect_all, principal_ideal, Ideal, IdealClassification};
use crate::monoid::FiniteMonoid;

/// Intersection of a family of ideals; the empty family gives the whole monoid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RadicalValue {
    WholeMonoid,
    Ideal(Ideal),
}

impl RadicalValue {
    fn of<'a, I: IntoIterator<Item = &'a Ideal>>(family: I) -> Self {
        intersect_all(family).map_or(RadicalValue::WholeMonoid, RadicalValue::Ideal)
    }

    pub fn is_subset(&self, other: &RadicalValue) -> bool {
        match (self, other) {
            (_, RadicalValue::WholeMonoid) => true,
            (RadicalValue::WholeMonoid, RadicalValue::Ideal(_)) => false,
            (RadicalValue::Ideal(a), RadicalValue::Ideal(b)) => a.is_subset(b),
        }
    }

    pub fn ideal(&self) -> Option<&Ideal> {
        match self {
            RadicalValue::WholeMonoid => None,
            RadicalValue::Ideal(i) => Some(i),
        }
    }
}

/// Intersections of all maximal, all prime, and all strongly irreducible ideals.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RadicalTriple {
    pub m_radical: RadicalValue,
    pub p_radical: RadicalValue,
    pub s_radical: RadicalValue,
}

impl RadicalTriple {
    /// `s ⊆ p ⊆ m`.
    pub fn chain_holds(&self) -> bool {
        self.s_radical.is_subset(&self.p_radical) && self.p_radical.is_subset(&self.m_radical)
    }
}

pub fn radicals(classes: &[IdealClassification]) -> RadicalTriple {
    let family = |pick: fn(&IdealClassification) -> bool| {
        RadicalValue::of(classes.iter().filter(|c| pick(c)).map(|c| &c.ideal))
    };
    RadicalTriple {
        m_radical: family(|c| c.maximal),
        p_radical: family(|c| c.prime),
        s_radical: family(|c| c.strongly_irreducible),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Density {
    /// Maximal ideals as points of the space.
    pub max_points: PointSet,
    /// Prime ideals as points of the space.
    pub spec_points: PointSet,
    /// `Max ⊆ Spec ⊆ S`, with every maximal and prime ideal found among the points.
    pub subspaces_nested: bool,
    pub spec_dense: bool,
    pub max_dense: bool,
    pub p_eq_s: bool,
    pub m_eq_s: bool,
    /// `spec_dense ⇔ p_eq_s` and `max_dense ⇔ m_eq_s`.
    pub corrected_pairing_holds: bool,
    /// `max_dense ⇔ p_eq_s` and `spec_dense ⇔ m_eq_s`.
    pub literal_pairing_holds: bool,
}

pub fn density_check(
    space: &TerminalSpace,
    classes: &[IdealClassification],
    radicals: &RadicalTriple,
) -> Density {
    let n = space.len();
    let select = |pick: fn(&IdealClassification) -> bool| {
        let family: Vec<&Ideal> = classes
            .iter()
            .filter(|c| pick(c))
            .map(|c| &c.ideal)
            .collect();
        let found = PointSet::from_indices(n, family.iter().filter_map(|i| space.point_index(i)));
        (found, found.len() == family.len())
    };
    let (max_points, max_found) = select(|c| c.maximal);
    let (spec_points, spec_found) = select(|c| c.prime);
    let subspaces_nested = max_found && spec_found && max_points.is_subset(spec_points);

    let whole = space.whole_space();
    let spec_dense = hk_closure(space, spec_points).members() == whole;
    let max_dense = hk_closure(space, max_points).members() == whole;
    let p_eq_s = radicals.p_radical == radicals.s_radical;
    let m_eq_s = radicals.m_radical == radicals.s_radical;
    Density {
        max_points,
        spec_points,
        subspaces_nested,
        spec_dense,
        max_dense,
        p_eq_s,
        m_eq_s,
        corrected_pairing_holds: spec_dense == p_eq_s && max_dense == m_eq_s,
        literal_pairing_holds: max_dense == p_eq_s && spec_dense == m_eq_s,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Invertibility {
    pub element: usize,
    /// No point contains the principal ideal of the element.
    pub criterion_holds: bool,
    pub is_unit: bool,
}

impl Invertibility {
    pub fn agrees(&self) -> bool {
        self.criterion_holds == self.is_unit
    }
}

pub fn invertibility_check(
    m: &FiniteMonoid,
    space: &TerminalSpace,
    element: usize,
) -> Result<Invertibility, TopologyError> {
    if element >= m.order() {
        return Err(TopologyError::ElementOutOfRange(element));
    }
    let generated = principal_ideal(m, element);
    let open = space
        .whole_space()
        .difference(hull_points(space, &generated));
    Ok(Invertibility {
        element,
        criterion_holds: open == space.whole_space(),
        is_unit: m.is_unit(element),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Noetherian {
    /// Every strictly descending chain of closed sets is finite.
    pub dcc_closed_sets: bool,
    /// Number of sets in a longest strictly descending chain.
    pub longest_chain: usize,
}

/// Always satisfied for a finite space; reports the longest chain.
pub fn noetherian_check(closed: &[ClosedSet]) -> Noetherian {
    // closed sets come sorted by size, so every proper subset appears earlier
    let mut depth = vec![1usize; closed.len()];
    for k in 0..closed.len() {
        for j in 0..k {
            if closed[j].members().is_proper_subset(closed[k].members()) {
                depth[k] = depth[k].max(depth[j] + 1);
            }
        }
    }
    Noetherian {
        dcc_closed_sets: true,
        longest_chain: depth.into_iter().max().unwrap_or(0),
    }
}
