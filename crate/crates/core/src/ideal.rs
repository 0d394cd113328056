//! Ideals of a finite commutative monoid, their lattice, and their classification.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::element_set::ElementSet;
use crate::monoid::FiniteMonoid;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("the empty set is not an ideal")]
    Empty,
    #[error("not closed: {element}*{multiplier} = {product} lies outside the set")]
    NotClosed {
        element: usize,
        multiplier: usize,
        product: usize,
    },
    #[error("cannot generate an ideal from the empty set")]
    EmptyGeneratorSet,
    #[error("ideal {0} is not in the lattice")]
    NotInLattice(ElementSet),
    #[error("set belongs to a monoid of order {found}, expected {expected}")]
    MismatchedOwner { expected: usize, found: usize },
}

/// A nonempty subset `I` with `I*M ⊆ I`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal(ElementSet);

impl Ideal {
    /// Checks closure and nonemptiness.
    pub fn new(m: &FiniteMonoid, members: ElementSet) -> Result<Self, IdealError> {
        match is_ideal(m, &members) {
            IdealCheck::Ideal => Ok(Ideal(members)),
            IdealCheck::Empty => Err(IdealError::Empty),
            IdealCheck::NotClosed {
                element,
                multiplier,
            } => Err(IdealError::NotClosed {
                element,
                multiplier,
                product: m.mul(element, multiplier),
            }),
            IdealCheck::WrongOwner => Err(IdealError::MismatchedOwner {
                expected: m.order(),
                found: members.order(),
            }),
        }
    }

    /// The whole monoid as an ideal.
    pub fn whole(m: &FiniteMonoid) -> Self {
        Ideal(m.full_set())
    }

    pub fn members(&self) -> &ElementSet {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_whole(&self) -> bool {
        self.0.is_full()
    }

    pub fn is_proper(&self) -> bool {
        !self.is_whole()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.0.contains(x)
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.0.is_subset(&other.0)
    }

    /// Intersections of ideals are nonempty (`i*j` lies in both).
    pub fn intersection(&self, other: &Ideal) -> Ideal {
        Ideal(self.0.intersection(&other.0))
    }

    pub fn union(&self, other: &Ideal) -> Ideal {
        Ideal(self.0.union(&other.0))
    }

    pub fn permuted(&self, perm: &[usize]) -> Ideal {
        Ideal(self.0.permuted(perm))
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{}", self.0)
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Outcome of [`is_ideal`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealCheck {
    Ideal,
    Empty,
    /// `element` is in the set, `element*multiplier` is not.
    NotClosed {
        element: usize,
        multiplier: usize,
    },
    WrongOwner,
}

impl IdealCheck {
    pub fn holds(&self) -> bool {
        matches!(self, IdealCheck::Ideal)
    }
}

pub fn is_ideal(m: &FiniteMonoid, s: &ElementSet) -> IdealCheck {
    if s.order() != m.order() {
        return IdealCheck::WrongOwner;
    }
    if s.is_empty() {
        return IdealCheck::Empty;
    }
    for element in s.iter() {
        for multiplier in 0..m.order() {
            if !s.contains(m.mul(element, multiplier)) {
                return IdealCheck::NotClosed {
                    element,
                    multiplier,
                };
            }
        }
    }
    IdealCheck::Ideal
}

/// `sM`, the least ideal containing `s`.
pub fn principal_ideal(m: &FiniteMonoid, s: usize) -> Ideal {
    Ideal(ElementSet::from_members(
        m.order(),
        (0..m.order()).map(|x| m.mul(s, x)),
    ))
}

/// `S*M`, which is the least ideal containing `S` because `M` has an identity.
pub fn generated_ideal(m: &FiniteMonoid, s: &ElementSet) -> Result<Ideal, IdealError> {
    if s.order() != m.order() {
        return Err(IdealError::MismatchedOwner {
            expected: m.order(),
            found: s.order(),
        });
    }
    if s.is_empty() {
        return Err(IdealError::EmptyGeneratorSet);
    }
    let product = m
        .set_product(s, &m.full_set())
        .expect("owner checked above");
    Ok(Ideal(product))
}

/// `IJ = {i*j}`.
pub fn product_ideal(m: &FiniteMonoid, i: &Ideal, j: &Ideal) -> Ideal {
    let p = m
        .set_product(i.members(), j.members())
        .expect("ideals of the same monoid");
    debug_assert!(is_ideal(m, &p).holds());
    Ideal(p)
}

/// `{x | x^k ∈ I for some k >= 1}`.
pub fn radical(m: &FiniteMonoid, i: &Ideal) -> Ideal {
    let members = (0..m.order()).filter(|&x| !m.powers(x).intersection(i.members()).is_empty());
    let r = ElementSet::from_members(m.order(), members);
    debug_assert!(is_ideal(m, &r).holds());
    Ideal(r)
}

/// Smallest exponent `k` with `x^k ∈ I`, if any.
fn radical_exponent(m: &FiniteMonoid, x: usize, i: &Ideal) -> Option<usize> {
    let mut y = x;
    for k in 1..=m.order() {
        if i.contains(y) {
            return Some(k);
        }
        y = m.mul(y, x);
    }
    None
}

/// All ideals of a monoid ordered by inclusion.
#[derive(Debug, Clone)]
pub struct IdealLattice {
    order: usize,
    ideals: Vec<Ideal>,
    position: HashMap<Ideal, usize>,
    leq: Vec<Vec<bool>>,
}

/// Builds the lattice as the union-closure of the principal ideals.
pub fn enumerate_ideals(m: &FiniteMonoid) -> IdealLattice {
    let principals: BTreeSet<Ideal> = (0..m.order()).map(|a| principal_ideal(m, a)).collect();
    let mut all = principals.clone();
    let mut frontier: Vec<Ideal> = principals.iter().copied().collect();
    while let Some(i) = frontier.pop() {
        for p in &principals {
            let u = i.union(p);
            if all.insert(u) {
                frontier.push(u);
            }
        }
    }
    IdealLattice::from_ideals(m.order(), all.into_iter().collect())
}

impl IdealLattice {
    fn from_ideals(order: usize, mut ideals: Vec<Ideal>) -> Self {
        ideals.sort();
        ideals.dedup();
        let position = ideals.iter().enumerate().map(|(k, i)| (*i, k)).collect();
        let leq = ideals
            .iter()
            .map(|a| ideals.iter().map(|b| a.is_subset(b)).collect())
            .collect();
        IdealLattice {
            order,
            ideals,
            position,
            leq,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn get(&self, k: usize) -> &Ideal {
        &self.ideals[k]
    }

    pub fn position(&self, i: &Ideal) -> Option<usize> {
        self.position.get(i).copied()
    }

    /// `ideals[a] ⊆ ideals[b]`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    /// Index of `M`, always the last entry.
    pub fn whole_index(&self) -> usize {
        self.ideals.len() - 1
    }

    /// Index of the least ideal, always the first entry.
    pub fn least_index(&self) -> usize {
        0
    }

    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        self.position(&self.ideals[a].intersection(&self.ideals[b]))
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.position(&self.ideals[a].union(&self.ideals[b]))
    }

    /// First pair whose intersection or union falls outside the lattice.
    pub fn ring_of_sets_violation(&self) -> Option<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|a| (a..n).map(move |b| (a, b)))
            .find(|&(a, b)| self.meet(a, b).is_none() || self.join(a, b).is_none())
    }

    /// Ideals strictly containing `ideals[k]`, excluding nothing else.
    pub fn strictly_above(&self, k: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&j| j != k && self.leq[k][j])
    }

    /// Covering pairs `(a, b)`: `a ⊂ b` with nothing strictly between.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut edges = Vec::new();
        for a in 0..n {
            for b in self.strictly_above(a) {
                let covered = (0..n).any(|c| c != a && c != b && self.leq[a][c] && self.leq[c][b]);
                if !covered {
                    edges.push((a, b));
                }
            }
        }
        edges
    }
}

/// Evidence that an ideal lacks a property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Refutation {
    /// The property is only defined for proper ideals.
    NotProper,
    /// `a*b` lies in the ideal while neither factor does.
    ElementPair { a: usize, b: usize },
    /// A proper ideal strictly above.
    StrictlyAbove(Ideal),
    /// For irreducibility: `I = A ∩ B` with `A ≠ I ≠ B`.
    /// For strong irreducibility: `A ∩ B ⊆ I` with `A ⊄ I`, `B ⊄ I`.
    IdealPair(Ideal, Ideal),
    /// `x ∉ I` but `x^exponent ∈ I`.
    RadicalElement { element: usize, exponent: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealClassification {
    pub ideal: Ideal,
    pub proper: bool,
    pub prime: bool,
    pub maximal: bool,
    pub irreducible: bool,
    pub strongly_irreducible: bool,
    pub semiprime: bool,
    pub prime_witness: Option<Refutation>,
    pub maximal_witness: Option<Refutation>,
    pub irreducible_witness: Option<Refutation>,
    pub strongly_irreducible_witness: Option<Refutation>,
    pub semiprime_witness: Option<Refutation>,
}

pub fn classify_ideal(
    m: &FiniteMonoid,
    ideal: &Ideal,
    lattice: &IdealLattice,
) -> Result<IdealClassification, IdealError> {
    let k = lattice
        .position(ideal)
        .ok_or(IdealError::NotInLattice(*ideal.members()))?;
    if ideal.is_whole() {
        let not = Some(Refutation::NotProper);
        return Ok(IdealClassification {
            ideal: *ideal,
            proper: false,
            prime: false,
            maximal: false,
            irreducible: false,
            strongly_irreducible: false,
            semiprime: false,
            prime_witness: not.clone(),
            maximal_witness: not.clone(),
            irreducible_witness: not.clone(),
            strongly_irreducible_witness: not.clone(),
            semiprime_witness: not,
        });
    }

    let prime_witness = prime_refutation(m, ideal);
    let maximal_witness = lattice
        .strictly_above(k)
        .map(|j| *lattice.get(j))
        .find(Ideal::is_proper)
        .map(Refutation::StrictlyAbove);
    let irreducible_witness = irreducible_refutation(ideal, lattice);
    let strongly_irreducible_witness = strongly_irreducible_refutation(ideal, lattice);
    let semiprime_witness = (0..m.order())
        .filter(|&x| !ideal.contains(x))
        .find_map(|x| {
            radical_exponent(m, x, ideal).map(|exponent| Refutation::RadicalElement {
                element: x,
                exponent,
            })
        });

    Ok(IdealClassification {
        ideal: *ideal,
        proper: true,
        prime: prime_witness.is_none(),
        maximal: maximal_witness.is_none(),
        irreducible: irreducible_witness.is_none(),
        strongly_irreducible: strongly_irreducible_witness.is_none(),
        semiprime: semiprime_witness.is_none(),
        prime_witness,
        maximal_witness,
        irreducible_witness,
        strongly_irreducible_witness,
        semiprime_witness,
    })
}

/// Classifies every ideal, in lattice order.
pub fn classify_all(m: &FiniteMonoid, lattice: &IdealLattice) -> Vec<IdealClassification> {
    lattice
        .ideals()
        .iter()
        .map(|i| classify_ideal(m, i, lattice).expect("ideal taken from the lattice"))
        .collect()
}

fn prime_refutation(m: &FiniteMonoid, ideal: &Ideal) -> Option<Refutation> {
    let n = m.order();
    (0..n)
        .flat_map(|a| (a..n).map(move |b| (a, b)))
        .find(|&(a, b)| ideal.contains(m.mul(a, b)) && !ideal.contains(a) && !ideal.contains(b))
        .map(|(a, b)| Refutation::ElementPair { a, b })
}

fn irreducible_refutation(ideal: &Ideal, lattice: &IdealLattice) -> Option<Refutation> {
    let ideals = lattice.ideals();
    ideals.iter().enumerate().find_map(|(ka, a)| {
        ideals[ka..]
            .iter()
            .find(|b| a != ideal && *b != ideal && a.intersection(b) == *ideal)
            .map(|b| Refutation::IdealPair(*a, *b))
    })
}

fn strongly_irreducible_refutation(ideal: &Ideal, lattice: &IdealLattice) -> Option<Refutation> {
    let ideals = lattice.ideals();
    ideals.iter().enumerate().find_map(|(ka, a)| {
        ideals[ka..]
            .iter()
            .find(|b| {
                a.intersection(b).is_subset(ideal) && !a.is_subset(ideal) && !b.is_subset(ideal)
            })
            .map(|b| Refutation::IdealPair(*a, *b))
    })
}

/// Outcome of the distributive-law scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distributivity {
    pub is_distributive: bool,
    /// Lattice indices `(a, b, c)` with `a ∧ (b ∨ c) ≠ (a ∧ b) ∨ (a ∧ c)`.
    pub counterexample: Option<(usize, usize, usize)>,
}

pub fn lattice_analysis(lattice: &IdealLattice) -> Distributivity {
    let ideals = lattice.ideals();
    let n = ideals.len();
    let counterexample = (0..n)
        .flat_map(|a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
        .find(|&(a, b, c)| {
            let (a, b, c) = (&ideals[a], &ideals[b], &ideals[c]);
            a.intersection(&b.union(c)) != a.intersection(b).union(&a.intersection(c))
        });
    Distributivity {
        is_distributive: counterexample.is_none(),
        counterexample,
    }
}

/// Intersection of a family of ideals; `None` for the empty family, which stands for `M`.
pub fn intersect_all<'a, I: IntoIterator<Item = &'a Ideal>>(family: I) -> Option<Ideal> {
    family
        .into_iter()
        .copied()
        .reduce(|a, b| a.intersection(&b))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArithmeticCheck {
    /// The ideal lattice is distributive.
    pub side_a: bool,
    /// Every ideal is the intersection of the strongly irreducible ideals above it.
    pub side_b: bool,
    pub agree: bool,
    pub witness: Option<Ideal>,
}

pub fn arithmetic_check(
    m: &FiniteMonoid,
    lattice: &IdealLattice,
    classes: &[IdealClassification],
) -> ArithmeticCheck {
    let side_a = lattice_analysis(lattice).is_distributive;
    let strongly_irreducible: Vec<&Ideal> = classes
        .iter()
        .filter(|c| c.strongly_irreducible)
        .map(|c| &c.ideal)
        .collect();
    let witness = lattice.ideals().iter().copied().find(|i| {
        let above = strongly_irreducible
            .iter()
            .copied()
            .filter(|j| i.is_subset(j));
        let meet = intersect_all(above).unwrap_or_else(|| Ideal::whole(m));
        meet != *i
    });
    let side_b = witness.is_none();
    ArithmeticCheck {
        side_a,
        side_b,
        agree: side_a == side_b,
        witness,
    }
}
