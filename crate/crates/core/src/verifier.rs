//! The full theorem suite for one monoid.
//!
//! Every check in [`CHECK_IDS`] is run in registry order and reported exactly
//! once. A `fail` status means a claimed identity was violated and always
//! carries a witness. Properties that may legitimately be false for a given
//! monoid (T1, density, the literal readings of some identities) are not
//! checks; they are recorded as [`Observation`]s.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::analysis::Analysis;
use crate::ideal::{
    arithmetic_check, classify_all, enumerate_ideals, lattice_analysis, radical, Ideal,
};
use crate::iso::is_isomorphic;
use crate::monoid::FiniteMonoid;
use crate::topology::{
    closed_sets_lattice_violation, closure_class_check, compactness_witness, density_check,
    invertibility_check, irreducible_closed_analysis, irreducible_components, noetherian_check,
    radicals, separation_check, verify_kuratowski, ClosureClassCheck, PointSet, SubsetMode,
    SubsetWitness, TopologyError, MAX_POINTS,
};

/// Check identifiers, in the order they are run and reported.
pub const CHECK_IDS: [&str; 31] = [
    "lattice.ring_of_sets",
    "lattice.closed_sets_lattice",
    "lattice.nonunits_unique_maximal",
    "classify.implications",
    "classify.radical_laws",
    "classify.irreducible_eq_strongly_irreducible",
    "kuratowski.empty",
    "kuratowski.extensive",
    "kuratowski.idempotent",
    "kuratowski.additive",
    "lemma.hull_of_monoid_empty",
    "lemma.closure_is_topological",
    "lemma.union_kernel_form",
    "lemma.intersection_join_form",
    "lemma.generated_radical_chain",
    "closure_class.terminal",
    "closure_class.spec",
    "closure_class.proper",
    "separation.t0",
    "separation.t1_iff_antichain",
    "compactness.finite_subcover",
    "irreducible.kernel_equivalence",
    "irreducible.unique_generic_point",
    "components.bijection",
    "invertibility.criterion",
    "noetherian.dcc",
    "arithmetic.agreement",
    "radicals.chain",
    "density.subspaces_nested",
    "density.corrected_pairing",
    "invariance.permuted_copy",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Nothing to quantify over (for example an empty space).
    Vacuous,
    /// Holds for a trivial reason at finite scale.
    Degenerate,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Vacuous => "vacuous",
            Status::Degenerate => "degenerate",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub witness: Option<String>,
    pub elapsed_us: Option<u64>,
}

/// A property computed for this monoid that is not claimed to hold in general.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Observation {
    pub id: String,
    pub holds: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidDescriptor {
    pub name: String,
    pub order: usize,
    /// SHA-256 of the table, see [`table_hash`].
    pub table_hash: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub degenerate: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub monoid: MonoidDescriptor,
    pub checks: Vec<Check>,
    pub observations: Vec<Observation>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn observation(&self, id: &str) -> Option<&Observation> {
        self.observations.iter().find(|o| o.id == id)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn has_failures(&self) -> bool {
        self.summary.fail > 0
    }

    /// Drops elapsed times so that reports of equal inputs compare equal.
    pub fn without_timings(mut self) -> Self {
        for c in &mut self.checks {
            c.elapsed_us = None;
        }
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub name: String,
    pub max_points: usize,
    pub subsets: SubsetMode,
    pub timings: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            name: "monoid".to_string(),
            max_points: MAX_POINTS,
            subsets: SubsetMode::Exhaustive,
            timings: false,
        }
    }
}

/// SHA-256 over the order, identity and row-major table, each as little-endian `u32`.
pub fn table_hash(m: &FiniteMonoid) -> String {
    let mut hasher = Sha256::new();
    hasher.update((m.order() as u32).to_le_bytes());
    hasher.update((m.identity() as u32).to_le_bytes());
    for &x in m.flat_table() {
        hasher.update((x as u32).to_le_bytes());
    }
    hex::encode(hasher.finalize())
}

pub fn run_all(
    m: &FiniteMonoid,
    options: &VerifyOptions,
) -> Result<VerificationReport, TopologyError> {
    let analysis = Analysis::new(m.clone(), options.max_points)?;
    verify_analysis(&analysis, options)
}

type Outcome = (Status, Option<String>);

fn pass_or(witness: Option<String>) -> Outcome {
    match witness {
        None => (Status::Pass, None),
        Some(w) => (Status::Fail, Some(w)),
    }
}

struct Recorder {
    timings: bool,
    checks: Vec<Check>,
    observations: Vec<Observation>,
}

impl Recorder {
    fn run(&mut self, id: &str, f: impl FnOnce() -> Outcome) {
        debug_assert_eq!(CHECK_IDS[self.checks.len()], id);
        let start = Instant::now();
        let (status, witness) = f();
        let elapsed = start.elapsed().as_micros() as u64;
        debug_assert!(status != Status::Fail || witness.as_ref().is_some_and(|w| !w.is_empty()));
        self.checks.push(Check {
            id: id.to_string(),
            status,
            witness,
            elapsed_us: self.timings.then_some(elapsed),
        });
    }

    fn observe(&mut self, id: &str, holds: bool, detail: Option<String>) {
        self.observations.push(Observation {
            id: id.to_string(),
            holds,
            detail,
        });
    }
}

/// Runs the suite on an already computed analysis.
pub fn verify_analysis(
    a: &Analysis,
    options: &VerifyOptions,
) -> Result<VerificationReport, TopologyError> {
    let m = &a.monoid;
    let space = &a.space;
    let empty_space = space.is_empty();
    let kuratowski = verify_kuratowski(m, space, &a.closed, &options.subsets)?;
    let mut r = Recorder {
        timings: options.timings,
        checks: Vec::with_capacity(CHECK_IDS.len()),
        observations: Vec::new(),
    };
    let show = |i: &Ideal| a.show_ideal(i);
    let pts = |s: PointSet| a.show_points(s);
    let subset = |w: &SubsetWitness| match *w {
        SubsetWitness::Single(x) => format!("X = {}", pts(x)),
        SubsetWitness::Pair(x, y) => format!("X = {}, X' = {}", pts(x), pts(y)),
        SubsetWitness::IdealPair(p, q) => format!("A = {}, B = {}", show(&p), show(&q)),
        SubsetWitness::Ideal(p) => format!("A = {}", show(&p)),
    };
    let on_space = |w: &Option<SubsetWitness>| -> Outcome {
        match w {
            Some(w) => (Status::Fail, Some(subset(w))),
            None if empty_space => (Status::Vacuous, None),
            None => (Status::Pass, None),
        }
    };

    r.run("lattice.ring_of_sets", || {
        pass_or(
            a.lattice
                .ring_of_sets_violation()
                .map(|(x, y)| format!("{} and {}", show(a.lattice.get(x)), show(a.lattice.get(y)))),
        )
    });
    r.run("lattice.closed_sets_lattice", || {
        pass_or(
            closed_sets_lattice_violation(&a.closed)
                .map(|(x, y)| format!("{} and {}", pts(x), pts(y))),
        )
    });
    r.run("lattice.nonunits_unique_maximal", || {
        let maximal = a.select(|c| c.maximal);
        let nonunits = m.nonunits();
        if nonunits.is_empty() {
            return match maximal.first() {
                None => (Status::Vacuous, None),
                Some(i) => (
                    Status::Fail,
                    Some(format!("group with maximal ideal {}", show(i))),
                ),
            };
        }
        let ok = maximal.len() == 1 && *maximal[0].members() == nonunits;
        let listed: Vec<String> = maximal.iter().map(show).collect();
        pass_or((!ok).then(|| format!("maximal ideals [{}]", listed.join(", "))))
    });
    r.run("classify.implications", || {
        pass_or(a.classes.iter().find_map(|c| {
            let broken = if c.strongly_irreducible && !c.irreducible {
                "strongly irreducible but not irreducible"
            } else if c.prime && !c.strongly_irreducible {
                "prime but not strongly irreducible"
            } else if c.maximal && !c.prime {
                "maximal but not prime"
            } else {
                return None;
            };
            Some(format!("{} is {broken}", show(&c.ideal)))
        }))
    });
    r.run("classify.radical_laws", || {
        pass_or(a.classes.iter().find_map(|c| {
            let root = radical(m, &c.ideal);
            let broken = if !c.ideal.is_subset(&root) {
                "not contained in its radical"
            } else if radical(m, &root) != root {
                "radical is not idempotent"
            } else if c.proper && c.semiprime != (root == c.ideal) {
                "semiprime flag disagrees with the radical"
            } else if c.prime && !c.semiprime {
                "prime but not semiprime"
            } else {
                return None;
            };
            Some(format!("{}: {broken}", show(&c.ideal)))
        }))
    });
    let distributive = lattice_analysis(&a.lattice);
    r.run("classify.irreducible_eq_strongly_irreducible", || {
        if !distributive.is_distributive {
            return (Status::Vacuous, None);
        }
        pass_or(
            a.classes
                .iter()
                .find(|c| c.irreducible != c.strongly_irreducible)
                .map(|c| format!("{} differs", show(&c.ideal))),
        )
    });

    r.run("kuratowski.empty", || on_space(&kuratowski.empty_closure));
    r.run("kuratowski.extensive", || on_space(&kuratowski.extensive));
    r.run("kuratowski.idempotent", || on_space(&kuratowski.idempotent));
    r.run("kuratowski.additive", || on_space(&kuratowski.additive));
    r.run("lemma.hull_of_monoid_empty", || {
        on_space(&kuratowski.hull_of_whole_empty)
    });
    r.run("lemma.closure_is_topological", || {
        on_space(&kuratowski.closure_is_topological)
    });
    r.run("lemma.union_kernel_form", || {
        on_space(&kuratowski.union_kernel_form)
    });
    r.run("lemma.intersection_join_form", || {
        on_space(&kuratowski.intersection_join_form)
    });
    r.run("lemma.generated_radical_chain", || {
        on_space(&kuratowski.generated_radical_chain)
    });

    let class_outcome = |class: &[Ideal], must_hold: bool| -> Outcome {
        if class.is_empty() {
            return (Status::Vacuous, None);
        }
        let check = match closure_class_check(&a.lattice, class) {
            Ok(c) => c,
            Err(e) => return (Status::Fail, Some(e.to_string())),
        };
        let describe = |c: &ClosureClassCheck| {
            let absorption = c
                .absorption_witness
                .map(|(p, q, i)| format!("A = {}, B = {}, I = {}", show(&p), show(&q), show(&i)))
                .unwrap_or_else(|| "absorption holds".to_string());
            format!(
                "closure axioms {}; {absorption}",
                if c.is_kuratowski { "hold" } else { "fail" }
            )
        };
        if !check.agrees() || (must_hold && !check.is_kuratowski) {
            (Status::Fail, Some(describe(&check)))
        } else {
            (Status::Pass, None)
        }
    };
    let terminal = a.select(|c| c.strongly_irreducible);
    let spec = a.select(|c| c.prime);
    let proper = a.select(|c| c.proper);
    r.run("closure_class.terminal", || class_outcome(&terminal, true));
    r.run("closure_class.spec", || class_outcome(&spec, true));
    r.run("closure_class.proper", || class_outcome(&proper, false));

    let separation = separation_check(space);
    r.run("separation.t0", || match separation.t0_witness {
        Some((x, y)) => (
            Status::Fail,
            Some(format!(
                "{} and {} have equal closures",
                show(space.point(x)),
                show(space.point(y))
            )),
        ),
        None if space.len() < 2 => (Status::Vacuous, None),
        None => (Status::Pass, None),
    });
    r.run("separation.t1_iff_antichain", || {
        if empty_space {
            return (Status::Vacuous, None);
        }
        pass_or((separation.t1 != separation.antichain).then(|| {
            format!(
                "t1 = {}, antichain = {}",
                separation.t1, separation.antichain
            )
        }))
    });

    r.run("compactness.finite_subcover", || {
        // every open set; only the whole space contains the point of nonunits
        let whole = space.whole_space();
        let cover: Vec<PointSet> = a
            .closed
            .iter()
            .map(|c| whole.difference(c.members()))
            .collect();
        let sub = match compactness_witness(space, &cover) {
            Ok(s) => s,
            Err(e) => return (Status::Fail, Some(e.to_string())),
        };
        let union = sub
            .iter()
            .fold(space.empty_set(), |acc, &k| acc.union(cover[k]));
        if union != whole {
            return (
                Status::Fail,
                Some(format!("subcover misses {}", pts(whole.difference(union)))),
            );
        }
        if empty_space {
            (Status::Vacuous, None)
        } else {
            (Status::Pass, None)
        }
    });

    let nonempty: Vec<_> = a.closed.iter().filter(|c| !c.is_empty()).collect();
    let irreducibility: Vec<_> = nonempty
        .iter()
        .map(|c| irreducible_closed_analysis(space, &a.closed, c).map(|x| (c.members(), x)))
        .collect::<Result<_, _>>()?;
    r.run("irreducible.kernel_equivalence", || {
        if irreducibility.is_empty() {
            return (Status::Vacuous, None);
        }
        pass_or(irreducibility.iter().find_map(|(c, x)| {
            let generic_ok =
                !x.irreducible_topological || x.generic_point.is_some_and(|g| c.contains(g));
            (x.irreducible_topological != x.kernel_strongly_irreducible || !generic_ok).then(|| {
                format!(
                    "C = {}: irreducible = {}, kernel {} strongly irreducible = {}",
                    pts(*c),
                    x.irreducible_topological,
                    show(&x.kernel),
                    x.kernel_strongly_irreducible
                )
            })
        }))
    });
    r.run("irreducible.unique_generic_point", || {
        if irreducibility.is_empty() {
            return (Status::Vacuous, None);
        }
        pass_or(irreducibility.iter().find_map(|(c, x)| {
            let expected: Vec<usize> = if x.irreducible_topological {
                x.generic_point.into_iter().collect()
            } else {
                Vec::new()
            };
            (x.generic_points != expected)
                .then(|| format!("C = {}: generic points {:?}", pts(*c), x.generic_points))
        }))
    });

    let components = irreducible_components(space, &a.closed);
    r.run("components.bijection", || {
        if empty_space {
            return (Status::Vacuous, None);
        }
        pass_or((!components.is_bijection).then(|| {
            let listed: Vec<String> = components
                .components
                .iter()
                .map(|c| pts(c.members()))
                .collect();
            format!(
                "minimal points {}, components [{}]",
                pts(PointSet::from_indices(
                    space.len(),
                    components.minimal_points.iter().copied()
                )),
                listed.join(", ")
            )
        }))
    });

    r.run("invertibility.criterion", || {
        pass_or(
            (0..m.order()).find_map(|x| match invertibility_check(m, space, x) {
                Ok(v) if v.agrees() => None,
                Ok(v) => Some(format!(
                    "element {}: criterion {}, unit {}",
                    m.name(x),
                    v.criterion_holds,
                    v.is_unit
                )),
                Err(e) => Some(e.to_string()),
            }),
        )
    });

    let noetherian = noetherian_check(&a.closed);
    r.run("noetherian.dcc", || {
        if noetherian.dcc_closed_sets {
            (
                Status::Degenerate,
                Some(format!(
                    "finite space, longest chain {}",
                    noetherian.longest_chain
                )),
            )
        } else {
            (
                Status::Fail,
                Some("descending chain condition fails".to_string()),
            )
        }
    });

    let arithmetic = arithmetic_check(m, &a.lattice, &a.classes);
    r.run("arithmetic.agreement", || {
        if !arithmetic.agree {
            let w = arithmetic.witness.map(|i| show(&i)).unwrap_or_default();
            return (
                Status::Fail,
                Some(format!(
                    "distributive = {}, meets of strongly irreducible ideals = {}; {w}",
                    arithmetic.side_a, arithmetic.side_b
                )),
            );
        }
        if arithmetic.side_a {
            (Status::Degenerate, Some("both sides hold".to_string()))
        } else {
            (Status::Pass, None)
        }
    });

    let triple = radicals(&a.classes);
    let show_radical = |v: &crate::topology::RadicalValue| match v.ideal() {
        Some(i) => show(i),
        None => "M".to_string(),
    };
    r.run("radicals.chain", || {
        pass_or((!triple.chain_holds()).then(|| {
            format!(
                "s = {}, p = {}, m = {}",
                show_radical(&triple.s_radical),
                show_radical(&triple.p_radical),
                show_radical(&triple.m_radical)
            )
        }))
    });
    let density = density_check(space, &a.classes, &triple);
    r.run("density.subspaces_nested", || {
        pass_or((!density.subspaces_nested).then(|| {
            format!(
                "Max = {}, Spec = {}",
                pts(density.max_points),
                pts(density.spec_points)
            )
        }))
    });
    r.run("density.corrected_pairing", || {
        if empty_space {
            return (Status::Vacuous, None);
        }
        pass_or((!density.corrected_pairing_holds).then(|| {
            format!(
                "spec dense = {}, p = s: {}, max dense = {}, m = s: {}",
                density.spec_dense, density.p_eq_s, density.max_dense, density.m_eq_s
            )
        }))
    });
    r.run("invariance.permuted_copy", || {
        pass_or(permuted_copy_refutation(a))
    });

    r.observe("lattice.distributive", distributive.is_distributive, None);
    r.observe(
        "separation.t1",
        separation.t1,
        separation
            .witness
            .map(|(x, y)| format!("{} ⊂ {}", show(space.point(x)), show(space.point(y)))),
    );
    let literal = |w: &Option<SubsetWitness>| w.as_ref().map(subset);
    r.observe(
        "lemma.union_literal",
        kuratowski.union_literal.is_none(),
        literal(&kuratowski.union_literal),
    );
    r.observe(
        "lemma.intersection_literal",
        kuratowski.intersection_literal.is_none(),
        literal(&kuratowski.intersection_literal),
    );
    r.observe(
        "lemma.chain_literal",
        kuratowski.chain_literal.is_none(),
        literal(&kuratowski.chain_literal),
    );
    r.observe(
        "lemma.hull_radical_invariance",
        kuratowski.hull_radical_invariance.is_none(),
        literal(&kuratowski.hull_radical_invariance),
    );
    r.observe("density.spec_dense", density.spec_dense, None);
    r.observe("density.max_dense", density.max_dense, None);
    r.observe("density.p_radical_eq_s_radical", density.p_eq_s, None);
    r.observe("density.m_radical_eq_s_radical", density.m_eq_s, None);
    r.observe(
        "density.literal_pairing",
        density.literal_pairing_holds,
        (!density.literal_pairing_holds).then(|| {
            format!(
                "max dense = {} but p = s is {}; spec dense = {} but m = s is {}",
                density.max_dense, density.p_eq_s, density.spec_dense, density.m_eq_s
            )
        }),
    );
    let maximal_count = a.classes.iter().filter(|c| c.maximal).count();
    r.observe(
        "max.singleton",
        maximal_count == 1,
        Some(format!("{maximal_count} maximal ideal(s)")),
    );
    if kuratowski.sampled {
        r.observe(
            "subsets.sampled",
            true,
            Some(format!("{} sampled pairs", kuratowski.pairs_checked)),
        );
    }

    let mut summary = Summary::default();
    for c in &r.checks {
        match c.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Vacuous => summary.vacuous += 1,
            Status::Degenerate => summary.degenerate += 1,
        }
    }
    Ok(VerificationReport {
        monoid: MonoidDescriptor {
            name: options.name.clone(),
            order: m.order(),
            table_hash: table_hash(m),
        },
        checks: r.checks,
        observations: r.observations,
        summary,
    })
}

/// Relabels by `x ↦ x+1 mod n` and compares the classification of corresponding ideals.
fn permuted_copy_refutation(a: &Analysis) -> Option<String> {
    let m = &a.monoid;
    let n = m.order();
    let perm: Vec<usize> = (0..n).map(|x| (x + 1) % n).collect();
    let copy = m.permuted(&perm);
    if is_isomorphic(m, &copy).is_none() {
        return Some("no isomorphism to the relabeled copy found".to_string());
    }
    let lattice = enumerate_ideals(&copy);
    if lattice.len() != a.lattice.len() {
        return Some(format!(
            "{} ideals after relabeling, {} before",
            lattice.len(),
            a.lattice.len()
        ));
    }
    let classes = classify_all(&copy, &lattice);
    a.classes.iter().find_map(|c| {
        let image = c.ideal.permuted(&perm);
        let flags = |x: &crate::ideal::IdealClassification| {
            (
                x.prime,
                x.maximal,
                x.irreducible,
                x.strongly_irreducible,
                x.semiprime,
            )
        };
        match lattice.position(&image) {
            Some(k) if flags(&classes[k]) == flags(c) => None,
            _ => Some(format!("{} changes classification", a.show_ideal(&c.ideal))),
        }
    })
}
