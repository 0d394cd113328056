use super::{hk_closure, kernel, PointSet, TerminalSpace, TopologyError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separation {
    /// Distinct points have distinct closures.
    pub t0: bool,
    /// Every singleton is closed.
    pub t1: bool,
    /// No point strictly contains another.
    pub antichain: bool,
    /// Points `(a, b)` with `points[a] ⊂ points[b]`, refuting `t1`/`antichain`.
    pub witness: Option<(usize, usize)>,
    /// Points `(a, b)` with equal closures, refuting `t0`.
    pub t0_witness: Option<(usize, usize)>,
}

pub fn separation_check(space: &TerminalSpace) -> Separation {
    let n = space.len();
    let closures: Vec<PointSet> = (0..n)
        .map(|k| hk_closure(space, PointSet::singleton(n, k)).members())
        .collect();
    let t0_witness = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .find(|&(a, b)| closures[a] == closures[b]);
    let t1 = (0..n).all(|k| closures[k] == PointSet::singleton(n, k));
    let witness = (0..n)
        .flat_map(|a| (0..n).map(move |b| (a, b)))
        .find(|&(a, b)| {
            space
                .point(a)
                .members()
                .is_proper_subset(space.point(b).members())
        });
    Separation {
        t0: t0_witness.is_none(),
        t1,
        antichain: witness.is_none(),
        witness,
        t0_witness,
    }
}

/// Extracts a subcover from open sets covering the space.
///
/// Greedy: among sets still adding coverage, prefer the one whose closed
/// complement has the largest kernel ideal (the whole space, whose
/// complement is empty, counts as largest). Redundant picks are dropped
/// afterwards. Returned indices are sorted.
pub fn compactness_witness(
    space: &TerminalSpace,
    cover: &[PointSet],
) -> Result<Vec<usize>, TopologyError> {
    let whole = space.whole_space();
    let union = cover.iter().fold(space.empty_set(), |acc, u| acc.union(*u));
    if let Some(point) = whole.difference(union).iter().next() {
        return Err(TopologyError::NotACover { point });
    }
    let weight = |u: &PointSet| -> usize {
        let complement = whole.difference(*u);
        kernel(space, complement).map_or(space.monoid_order() + 1, |k| k.len())
    };

    let mut chosen: Vec<usize> = Vec::new();
    let mut covered = space.empty_set();
    while covered != whole {
        let best = (0..cover.len())
            .filter(|&k| !cover[k].is_subset(covered))
            .max_by(|&a, &b| {
                weight(&cover[a])
                    .cmp(&weight(&cover[b]))
                    .then(
                        cover[a]
                            .difference(covered)
                            .len()
                            .cmp(&cover[b].difference(covered).len()),
                    )
                    .then(b.cmp(&a))
            })
            .expect("union covers the space");
        chosen.push(best);
        covered = covered.union(cover[best]);
    }
    let mut k = 0;
    while k < chosen.len() {
        let rest = chosen
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != k)
            .fold(space.empty_set(), |acc, (_, &c)| acc.union(cover[c]));
        if rest == whole {
            chosen.remove(k);
        } else {
            k += 1;
        }
    }
    chosen.sort_unstable();
    Ok(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::tests::z_mod;
    use crate::monoid::FiniteMonoid;
    use crate::topology::tests::{pts, space_of};

    #[test]
    fn z4_is_t0_but_not_t1() {
        let s = space_of(&z_mod(4));
        let r = separation_check(&s);
        assert!(r.t0 && !r.t1 && !r.antichain);
        assert_eq!(r.witness, Some((0, 1)));
        assert_eq!(s.point(0).members().to_vec(), vec![0]);
    }

    #[test]
    fn z6_is_not_t1() {
        let s = space_of(&z_mod(6));
        let r = separation_check(&s);
        assert!(r.t0 && !r.t1);
        let (a, b) = r.witness.unwrap();
        assert_eq!(s.point(a).members().to_vec(), vec![0, 3]);
        assert_eq!(s.point(b).members().to_vec(), vec![0, 2, 3, 4]);
    }

    #[test]
    fn one_point_space_is_t1() {
        let boolean = FiniteMonoid::with_index_names(vec![vec![0, 0], vec![0, 1]], 1).unwrap();
        let r = separation_check(&space_of(&boolean));
        assert!(r.t0 && r.t1 && r.antichain);
    }

    #[test]
    fn z6_subcover_is_the_whole_space() {
        let s = space_of(&z_mod(6));
        let cover = vec![
            pts(&s, &[&[0, 3]]),
            pts(&s, &[&[0, 2, 4]]),
            pts(&s, &[&[0, 3], &[0, 2, 4]]),
            s.whole_space(),
        ];
        assert_eq!(compactness_witness(&s, &cover).unwrap(), vec![3]);
        assert_eq!(
            compactness_witness(&s, &cover[..3]),
            Err(TopologyError::NotACover { point: 2 })
        );
    }

    #[test]
    fn trivial_covers() {
        let empty = space_of(&z_mod(1));
        assert_eq!(
            compactness_witness(&empty, &[]).unwrap(),
            Vec::<usize>::new()
        );
        let s = space_of(&z_mod(4));
        assert_eq!(
            compactness_witness(&s, &[s.whole_space()]).unwrap(),
            vec![0]
        );
    }
}
