//! The terminal space: strongly irreducible ideals under the hull-kernel topology.
//!
//! A set of points `X` has closure `hull(kernel(X))`, where the kernel is the
//! intersection of the ideals in `X` and the hull of an ideal `A` is the set
//! of points containing `A`. The empty set is closed and is its own closure.

mod closure_class;
mod irreducible;
mod kuratowski;
mod point_set;
mod radicals;
mod separation;
mod subsets;

pub use closure_class::{closure_class_check, ClosureClassCheck};
pub use irreducible::{
    irreducible_closed_analysis, irreducible_components, point_closure, Components,
    IrreducibleAnalysis,
};
pub use kuratowski::{verify_kuratowski, KuratowskiReport, SubsetWitness};
pub use point_set::PointSet;
pub use radicals::{
    density_check, invertibility_check, noetherian_check, radicals, Density, Invertibility,
    Noetherian, RadicalTriple, RadicalValue,
};
pub use separation::{compactness_witness, separation_check, Separation};
pub use subsets::{SubsetMode, EXHAUSTIVE_PAIR_LIMIT};

use thiserror::Error;

use crate::ideal::{intersect_all, Ideal, IdealClassification, IdealLattice};

/// Hard cap on the number of points.
pub const MAX_POINTS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("terminal space has {points} points, limit is {limit}")]
    TooManyPoints { points: usize, limit: usize },
    #[error("{points} points exceed the exhaustive pair limit of {limit}; enable sampled subsets")]
    ExhaustiveLimit { points: usize, limit: usize },
    #[error("the kernel of the empty point set is undefined")]
    EmptyPointSet,
    #[error("closed set is empty")]
    EmptyClosedSet,
    #[error("open sets do not cover point {point}")]
    NotACover { point: usize },
    #[error("class member {0} is not a proper ideal of the lattice")]
    NotAProperIdeal(Ideal),
    #[error("element {0} out of range")]
    ElementOutOfRange(usize),
}

/// Points of the terminal space together with their specialization order.
#[derive(Debug, Clone)]
pub struct TerminalSpace {
    order: usize,
    points: Vec<Ideal>,
    lattice_index: Vec<usize>,
    ideals: Vec<Ideal>,
    up_sets: Vec<PointSet>,
}

/// Collects the strongly irreducible ideals, refusing more than `max_points`.
pub fn build_terminal_space(
    lattice: &IdealLattice,
    classes: &[IdealClassification],
    max_points: usize,
) -> Result<TerminalSpace, TopologyError> {
    let limit = max_points.min(MAX_POINTS);
    let lattice_index: Vec<usize> = classes
        .iter()
        .enumerate()
        .filter(|(_, c)| c.strongly_irreducible)
        .map(|(k, _)| k)
        .collect();
    if lattice_index.len() > limit {
        return Err(TopologyError::TooManyPoints {
            points: lattice_index.len(),
            limit,
        });
    }
    let points: Vec<Ideal> = lattice_index.iter().map(|&k| *lattice.get(k)).collect();
    let n = points.len();
    let up_sets = points
        .iter()
        .map(|p| PointSet::from_indices(n, (0..n).filter(|&j| p.is_subset(&points[j]))))
        .collect();
    Ok(TerminalSpace {
        order: lattice.order(),
        points,
        lattice_index,
        ideals: lattice.ideals().to_vec(),
        up_sets,
    })
}

impl TerminalSpace {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Order of the underlying monoid.
    pub fn monoid_order(&self) -> usize {
        self.order
    }

    pub fn points(&self) -> &[Ideal] {
        &self.points
    }

    pub fn point(&self, k: usize) -> &Ideal {
        &self.points[k]
    }

    /// Position of point `k` in the ideal lattice.
    pub fn lattice_index(&self, k: usize) -> usize {
        self.lattice_index[k]
    }

    pub fn point_index(&self, ideal: &Ideal) -> Option<usize> {
        self.points.iter().position(|p| p == ideal)
    }

    /// All ideals of the monoid, in lattice order.
    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn whole_space(&self) -> PointSet {
        PointSet::full(self.len())
    }

    pub fn empty_set(&self) -> PointSet {
        PointSet::empty(self.len())
    }

    /// Points `j` with `points[k] ⊆ points[j]`, i.e. the closure of `{k}`.
    pub fn up_set(&self, k: usize) -> PointSet {
        self.up_sets[k]
    }

    /// `(a, b)` with `points[a] ⊂ points[b]` and nothing strictly between.
    pub fn specialization_edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in self.up_sets[a].iter().filter(|&b| b != a) {
                let between = self.up_sets[a]
                    .iter()
                    .any(|c| c != a && c != b && self.up_sets[c].contains(b));
                if !between {
                    edges.push((a, b));
                }
            }
        }
        edges
    }

    pub fn is_strongly_irreducible(&self, ideal: &Ideal) -> bool {
        self.absorption_refutation(ideal).is_none()
    }

    /// A pair of ideals `A, B` with `A ∩ B ⊆ I`, `A ⊄ I`, `B ⊄ I`; proper ideals only.
    pub(crate) fn absorption_refutation(&self, ideal: &Ideal) -> Option<(Ideal, Ideal)> {
        if ideal.is_whole() {
            return Some((*ideal, *ideal));
        }
        let ideals = &self.ideals;
        ideals.iter().enumerate().find_map(|(k, a)| {
            ideals[k..]
                .iter()
                .find(|b| {
                    a.intersection(b).is_subset(ideal) && !a.is_subset(ideal) && !b.is_subset(ideal)
                })
                .map(|b| (*a, *b))
        })
    }
}

/// A closed subset of the terminal space, carrying the kernel of its members.
#[derive(Debug, Clone, Copy)]
pub struct ClosedSet {
    members: PointSet,
    kernel: Option<Ideal>,
}

impl ClosedSet {
    pub fn empty(space: &TerminalSpace) -> Self {
        ClosedSet {
            members: space.empty_set(),
            kernel: None,
        }
    }

    pub fn members(&self) -> PointSet {
        self.members
    }

    /// The kernel ideal `A` with `members = hull(A)`; `None` for the empty set.
    pub fn kernel_ideal(&self) -> Option<&Ideal> {
        self.kernel.as_ref()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }
}

impl PartialEq for ClosedSet {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for ClosedSet {}

impl PartialOrd for ClosedSet {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ClosedSet {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.members.cmp(&other.members)
    }
}

/// Intersection of the points in a nonempty set.
pub fn kernel(space: &TerminalSpace, x: PointSet) -> Result<Ideal, TopologyError> {
    intersect_all(x.iter().map(|k| space.point(k))).ok_or(TopologyError::EmptyPointSet)
}

/// Points containing `a`.
pub fn hull_points(space: &TerminalSpace, a: &Ideal) -> PointSet {
    PointSet::from_indices(
        space.len(),
        (0..space.len()).filter(|&k| a.is_subset(space.point(k))),
    )
}

pub fn hull(space: &TerminalSpace, a: &Ideal) -> ClosedSet {
    let members = hull_points(space, a);
    closed_from_members(space, members)
}

/// `hull(kernel(X))`, or the empty set when `X` is empty.
pub fn hk_closure(space: &TerminalSpace, x: PointSet) -> ClosedSet {
    match kernel(space, x) {
        Ok(k) => hull(space, &k),
        Err(_) => ClosedSet::empty(space),
    }
}

/// Wraps a known closed member set with its canonical kernel.
pub(crate) fn closed_from_members(space: &TerminalSpace, members: PointSet) -> ClosedSet {
    ClosedSet {
        members,
        kernel: kernel(space, members).ok(),
    }
}

/// The empty set together with the hull of every ideal, deduplicated and sorted.
pub fn enumerate_closed_sets(space: &TerminalSpace) -> Vec<ClosedSet> {
    let mut sets: Vec<ClosedSet> = std::iter::once(ClosedSet::empty(space))
        .chain(space.ideals().iter().map(|a| hull(space, a)))
        .collect();
    sets.sort();
    sets.dedup();
    sets
}

/// First pair of closed sets whose union or intersection is not closed.
pub fn closed_sets_lattice_violation(closed: &[ClosedSet]) -> Option<(PointSet, PointSet)> {
    let is_closed = |s: PointSet| closed.iter().any(|c| c.members() == s);
    closed.iter().enumerate().find_map(|(k, a)| {
        closed[k..]
            .iter()
            .find(|b| {
                !is_closed(a.members().union(b.members()))
                    || !is_closed(a.members().intersection(b.members()))
            })
            .map(|b| (a.members(), b.members()))
    })
}

/// Intersection of every closed set containing `x`.
pub fn topological_closure(space: &TerminalSpace, closed: &[ClosedSet], x: PointSet) -> PointSet {
    closed
        .iter()
        .map(ClosedSet::members)
        .filter(|c| x.is_subset(*c))
        .fold(space.whole_space(), |acc, c| acc.intersection(c))
}
