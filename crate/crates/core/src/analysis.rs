//! Everything computed from one monoid, bundled for reports and exports.

use crate::ideal::{classify_all, enumerate_ideals, Ideal, IdealClassification, IdealLattice};
use crate::monoid::FiniteMonoid;
use crate::topology::{
    build_terminal_space, enumerate_closed_sets, ClosedSet, PointSet, TerminalSpace, TopologyError,
};

#[derive(Debug, Clone)]
pub struct Analysis {
    pub monoid: FiniteMonoid,
    pub lattice: IdealLattice,
    pub classes: Vec<IdealClassification>,
    pub space: TerminalSpace,
    pub closed: Vec<ClosedSet>,
}

impl Analysis {
    pub fn new(monoid: FiniteMonoid, max_points: usize) -> Result<Self, TopologyError> {
        let lattice = enumerate_ideals(&monoid);
        let classes = classify_all(&monoid, &lattice);
        let space = build_terminal_space(&lattice, &classes, max_points)?;
        let closed = enumerate_closed_sets(&space);
        Ok(Analysis {
            monoid,
            lattice,
            classes,
            space,
            closed,
        })
    }

    /// Ideals with the given flag, in lattice order.
    pub fn select(&self, pick: impl Fn(&IdealClassification) -> bool) -> Vec<Ideal> {
        self.classes
            .iter()
            .filter(|c| pick(c))
            .map(|c| c.ideal)
            .collect()
    }

    /// `{a,b}` using element names.
    pub fn show_ideal(&self, i: &Ideal) -> String {
        show_members(&self.monoid, i)
    }

    /// `[{..}, {..}]`, one entry per point.
    pub fn show_points(&self, s: PointSet) -> String {
        let parts: Vec<String> = s
            .iter()
            .map(|k| self.show_ideal(self.space.point(k)))
            .collect();
        format!("[{}]", parts.join(", "))
    }
}

pub fn show_members(m: &FiniteMonoid, i: &Ideal) -> String {
    let names: Vec<&str> = i.members().iter().map(|x| m.name(x)).collect();
    format!("{{{}}}", names.join(","))
}
