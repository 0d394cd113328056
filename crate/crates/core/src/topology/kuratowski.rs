//! Exhaustive checks of the closure axioms and the elementary hull/kernel identities.

use super::{
    hk_closure, hull_points, topological_closure, ClosedSet, PointSet, SubsetMode, TerminalSpace,
    TopologyError,
};
use crate::ideal::{radical, Ideal};
use crate::monoid::FiniteMonoid;

/// The subsets (or ideals) at which an identity fails.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubsetWitness {
    Single(PointSet),
    Pair(PointSet, PointSet),
    IdealPair(Ideal, Ideal),
    Ideal(Ideal),
}

/// Each field is `None` when the identity holds everywhere, otherwise the first failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KuratowskiReport {
    /// `HK(∅) = ∅`.
    pub empty_closure: Option<SubsetWitness>,
    /// `X ⊆ HK(X)`.
    pub extensive: Option<SubsetWitness>,
    /// `HK(HK(X)) = HK(X)`.
    pub idempotent: Option<SubsetWitness>,
    /// `HK(X ∪ X') = HK(X) ∪ HK(X')`.
    pub additive: Option<SubsetWitness>,
    /// `hull(M) = ∅`.
    pub hull_of_whole_empty: Option<SubsetWitness>,
    /// `HK(X)` is the least closed set containing `X`.
    pub closure_is_topological: Option<SubsetWitness>,
    /// `hull(K(X) ∩ K(X')) = HK(X) ∪ HK(X')` for nonempty `X, X'`.
    pub union_kernel_form: Option<SubsetWitness>,
    /// `HK(X) ∩ HK(X') = hull(K(X) ∪ K(X'))`, and `hull(A) ∩ hull(B) = hull(A ∪ B)` for ideals.
    pub intersection_join_form: Option<SubsetWitness>,
    /// `HK(X) ⊇ hull(⟨∪X⟩) ⊇ hull(√⟨∪X⟩)` for nonempty `X`.
    pub generated_radical_chain: Option<SubsetWitness>,
    /// `HK(X) ∪ HK(X') = HK(X ∩ X')`, read at the level of point sets.
    pub union_literal: Option<SubsetWitness>,
    /// `HK(X) ∩ HK(X') = HK(X ∩ X')`, read at the level of point sets.
    pub intersection_literal: Option<SubsetWitness>,
    /// `HK(X) ⊆ hull(⟨∪X⟩) ⊆ hull(√⟨∪X⟩)`.
    pub chain_literal: Option<SubsetWitness>,
    /// `hull(A) = hull(√A)` for every ideal `A`.
    pub hull_radical_invariance: Option<SubsetWitness>,
    pub subsets_checked: u64,
    pub pairs_checked: u64,
    pub sampled: bool,
}

impl KuratowskiReport {
    /// The four closure axioms.
    pub fn axioms_hold(&self) -> bool {
        self.empty_closure.is_none()
            && self.extensive.is_none()
            && self.idempotent.is_none()
            && self.additive.is_none()
    }
}

/// Kernel and closure of every subset of points, indexed by bitmask.
struct ClosureTable {
    kernels: Vec<Option<Ideal>>,
    closures: Vec<PointSet>,
    len: usize,
}

impl ClosureTable {
    fn new(space: &TerminalSpace) -> Self {
        let len = space.len();
        let count = 1usize << len;
        let mut kernels: Vec<Option<Ideal>> = Vec::with_capacity(count);
        let mut closures = Vec::with_capacity(count);
        kernels.push(None);
        closures.push(space.empty_set());
        for mask in 1..count {
            let low = mask.trailing_zeros() as usize;
            let point = space.point(low);
            let k = match kernels[mask & (mask - 1)] {
                Some(rest) => rest.intersection(point),
                None => *point,
            };
            closures.push(hull_points(space, &k));
            kernels.push(Some(k));
        }
        ClosureTable {
            kernels,
            closures,
            len,
        }
    }

    fn set(&self, mask: u32) -> PointSet {
        PointSet::from_bits(self.len, mask)
    }

    fn closure(&self, mask: u32) -> PointSet {
        self.closures[mask as usize]
    }

    fn kernel(&self, mask: u32) -> Option<Ideal> {
        self.kernels[mask as usize]
    }
}

pub fn verify_kuratowski(
    m: &FiniteMonoid,
    space: &TerminalSpace,
    closed: &[ClosedSet],
    mode: &SubsetMode,
) -> Result<KuratowskiReport, TopologyError> {
    let plan = mode.plan(space.len())?;
    let t = ClosureTable::new(space);
    let whole = Ideal::whole(m);
    let single = |mask: u32| SubsetWitness::Single(t.set(mask));
    let pair = |(a, b): (u32, u32)| SubsetWitness::Pair(t.set(a), t.set(b));

    let empty_closure = (!hk_closure(space, space.empty_set()).is_empty())
        .then(|| SubsetWitness::Single(space.empty_set()));
    let extensive = plan
        .singles()
        .find(|&x| !t.set(x).is_subset(t.closure(x)))
        .map(single);
    let idempotent = plan
        .singles()
        .find(|&x| t.closure(t.closure(x).bits()) != t.closure(x))
        .map(single);
    let hull_of_whole = hull_points(space, &whole);
    let hull_of_whole_empty =
        (!hull_of_whole.is_empty()).then_some(SubsetWitness::Single(hull_of_whole));
    let closure_is_topological = plan
        .singles()
        .find(|&x| topological_closure(space, closed, t.set(x)) != t.closure(x))
        .map(single);

    let generated = |x: u32| -> Ideal {
        t.set(x)
            .iter()
            .map(|k| *space.point(k))
            .reduce(|a, b| a.union(&b))
            .expect("nonempty subset")
    };
    let generated_radical_chain = plan
        .singles()
        .skip(1)
        .find(|&x| {
            let g = generated(x);
            let hg = hull_points(space, &g);
            let hr = hull_points(space, &radical(m, &g));
            !(hg.is_subset(t.closure(x)) && hr.is_subset(hg))
        })
        .map(single);
    let chain_literal = plan
        .singles()
        .skip(1)
        .find(|&x| {
            let g = generated(x);
            let hg = hull_points(space, &g);
            let hr = hull_points(space, &radical(m, &g));
            !(t.closure(x).is_subset(hg) && hg.is_subset(hr))
        })
        .map(single);

    let mut additive = None;
    let mut union_kernel_form = None;
    let mut intersection_join_form = None;
    let mut union_literal = None;
    let mut intersection_literal = None;
    let mut pairs_checked = 0u64;
    for (x, y) in plan.pairs() {
        pairs_checked += 1;
        let (cx, cy) = (t.closure(x), t.closure(y));
        if additive.is_none() && t.closure(x | y) != cx.union(cy) {
            additive = Some(pair((x, y)));
        }
        if x == 0 || y == 0 {
            continue;
        }
        let (kx, ky) = (t.kernel(x).unwrap(), t.kernel(y).unwrap());
        if union_kernel_form.is_none() && hull_points(space, &kx.intersection(&ky)) != cx.union(cy)
        {
            union_kernel_form = Some(pair((x, y)));
        }
        if intersection_join_form.is_none()
            && hull_points(space, &kx.union(&ky)) != cx.intersection(cy)
        {
            intersection_join_form = Some(pair((x, y)));
        }
        if union_literal.is_none() && cx.union(cy) != t.closure(x & y) {
            union_literal = Some(pair((x, y)));
        }
        if intersection_literal.is_none() && cx.intersection(cy) != t.closure(x & y) {
            intersection_literal = Some(pair((x, y)));
        }
    }

    let ideals = space.ideals();
    if intersection_join_form.is_none() {
        intersection_join_form = ideals
            .iter()
            .flat_map(|a| ideals.iter().map(move |b| (*a, *b)))
            .find(|(a, b)| {
                hull_points(space, a).intersection(hull_points(space, b))
                    != hull_points(space, &a.union(b))
            })
            .map(|(a, b)| SubsetWitness::IdealPair(a, b));
    }
    if intersection_join_form.is_none() {
        // the whole family at once: the join of every ideal is M
        let all = ideals.iter().fold(space.whole_space(), |acc, a| {
            acc.intersection(hull_points(space, a))
        });
        if !all.is_empty() {
            intersection_join_form = Some(SubsetWitness::Single(all));
        }
    }
    let hull_radical_invariance = ideals
        .iter()
        .find(|a| hull_points(space, a) != hull_points(space, &radical(m, a)))
        .map(|a| SubsetWitness::Ideal(*a));

    Ok(KuratowskiReport {
        empty_closure,
        extensive,
        idempotent,
        additive,
        hull_of_whole_empty,
        closure_is_topological,
        union_kernel_form,
        intersection_join_form,
        generated_radical_chain,
        union_literal,
        intersection_literal,
        chain_literal,
        hull_radical_invariance,
        subsets_checked: 1u64 << space.len(),
        pairs_checked,
        sampled: plan.is_sampled(),
    })
}
