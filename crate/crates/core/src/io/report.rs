//! The structured report document and its text rendering.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::analysis::Analysis;
use crate::ideal::{lattice_analysis, Ideal};
use crate::topology::{
    density_check, irreducible_components, noetherian_check, radicals, separation_check,
    RadicalValue,
};
use crate::verifier::{table_hash, VerificationReport};

/// Identifies the schema of [`ReportDocument`].
pub const REPORT_FORMAT: &str = "termspace-report/1";

/// Element names throughout; points, closed sets and components refer to
/// points by their index in `space.points`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub format: String,
    pub monoid: MonoidSection,
    pub lattice: LatticeSection,
    pub topology: Option<TopologySection>,
    pub verification: Option<VerificationReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidSection {
    pub name: String,
    pub order: usize,
    pub elements: Vec<String>,
    pub identity: String,
    pub units: Vec<String>,
    pub table_hash: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeSection {
    pub ideals: Vec<IdealEntry>,
    /// Covering pairs `[smaller, larger]` of ideal indices.
    pub hasse_edges: Vec<[usize; 2]>,
    pub distributive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealEntry {
    pub members: Vec<String>,
    pub proper: bool,
    pub prime: bool,
    pub maximal: bool,
    pub irreducible: bool,
    pub strongly_irreducible: bool,
    pub semiprime: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TopologySection {
    pub points: Vec<Vec<String>>,
    /// Covering pairs `[a, b]` with `points[a] ⊂ points[b]`.
    pub specialization: Vec<[usize; 2]>,
    pub closed_sets: Vec<Vec<usize>>,
    pub t0: bool,
    pub t1: bool,
    pub components: Vec<Vec<usize>>,
    pub minimal_points: Vec<usize>,
    pub longest_closed_chain: usize,
    pub radicals: RadicalsSection,
    pub density: DensitySection,
}

/// Each radical as a member list; an empty defining family yields every element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalsSection {
    pub m_radical: Vec<String>,
    pub p_radical: Vec<String>,
    pub s_radical: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensitySection {
    pub max_points: Vec<usize>,
    pub spec_points: Vec<usize>,
    pub spec_dense: bool,
    pub max_dense: bool,
    pub p_radical_eq_s_radical: bool,
    pub m_radical_eq_s_radical: bool,
    pub corrected_pairing: bool,
    pub literal_pairing: bool,
}

fn names(a: &Analysis, i: &Ideal) -> Vec<String> {
    i.members()
        .iter()
        .map(|x| a.monoid.name(x).to_string())
        .collect()
}

impl ReportDocument {
    /// Monoid and lattice sections only.
    pub fn lattice_only(a: &Analysis, name: &str) -> Self {
        let m = &a.monoid;
        let ideals = a
            .classes
            .iter()
            .map(|c| IdealEntry {
                members: names(a, &c.ideal),
                proper: c.proper,
                prime: c.prime,
                maximal: c.maximal,
                irreducible: c.irreducible,
                strongly_irreducible: c.strongly_irreducible,
                semiprime: c.semiprime,
            })
            .collect();
        ReportDocument {
            format: REPORT_FORMAT.to_string(),
            monoid: MonoidSection {
                name: name.to_string(),
                order: m.order(),
                elements: m.names().to_vec(),
                identity: m.name(m.identity()).to_string(),
                units: m.units().iter().map(|x| m.name(x).to_string()).collect(),
                table_hash: table_hash(m),
            },
            lattice: LatticeSection {
                ideals,
                hasse_edges: a
                    .lattice
                    .hasse_edges()
                    .into_iter()
                    .map(|(x, y)| [x, y])
                    .collect(),
                distributive: lattice_analysis(&a.lattice).is_distributive,
            },
            topology: None,
            verification: None,
        }
    }

    /// Adds the topology section.
    pub fn with_topology(mut self, a: &Analysis) -> Self {
        let space = &a.space;
        let separation = separation_check(space);
        let components = irreducible_components(space, &a.closed);
        let triple = radicals(&a.classes);
        let density = density_check(space, &a.classes, &triple);
        let radical = |v: &RadicalValue| match v.ideal() {
            Some(i) => names(a, i),
            None => a.monoid.names().to_vec(),
        };
        self.topology = Some(TopologySection {
            points: space.points().iter().map(|p| names(a, p)).collect(),
            specialization: space
                .specialization_edges()
                .into_iter()
                .map(|(x, y)| [x, y])
                .collect(),
            closed_sets: a.closed.iter().map(|c| c.members().to_vec()).collect(),
            t0: separation.t0,
            t1: separation.t1,
            components: components
                .components
                .iter()
                .map(|c| c.members().to_vec())
                .collect(),
            minimal_points: components.minimal_points,
            longest_closed_chain: noetherian_check(&a.closed).longest_chain,
            radicals: RadicalsSection {
                m_radical: radical(&triple.m_radical),
                p_radical: radical(&triple.p_radical),
                s_radical: radical(&triple.s_radical),
            },
            density: DensitySection {
                max_points: density.max_points.to_vec(),
                spec_points: density.spec_points.to_vec(),
                spec_dense: density.spec_dense,
                max_dense: density.max_dense,
                p_radical_eq_s_radical: density.p_eq_s,
                m_radical_eq_s_radical: density.m_eq_s,
                corrected_pairing: density.corrected_pairing_holds,
                literal_pairing: density.literal_pairing_holds,
            },
        });
        self
    }

    pub fn with_verification(mut self, report: VerificationReport) -> Self {
        self.verification = Some(report);
        self
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report documents serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        render_text(self)
    }
}

fn set(members: &[String]) -> String {
    format!("{{{}}}", members.join(","))
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn render_text(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let m = &doc.monoid;
    let _ = writeln!(
        out,
        "monoid {} (order {}, identity {})",
        m.name, m.order, m.identity
    );
    let _ = writeln!(out, "units: {}", set(&m.units));
    let _ = writeln!(out);

    let l = &doc.lattice;
    let _ = writeln!(out, "ideals: {}", l.ideals.len());
    for (k, i) in l.ideals.iter().enumerate() {
        let mut flags = Vec::new();
        if !i.proper {
            flags.push("whole");
        }
        for (on, label) in [
            (i.prime, "prime"),
            (i.maximal, "maximal"),
            (i.irreducible, "irreducible"),
            (i.strongly_irreducible, "strongly-irreducible"),
            (i.semiprime, "semiprime"),
        ] {
            if on {
                flags.push(label);
            }
        }
        let _ = writeln!(out, "  [{k}] {} {}", set(&i.members), flags.join(" "));
    }
    let _ = writeln!(out, "distributive: {}", yes(l.distributive));

    if let Some(t) = &doc.topology {
        let point = |k: usize| set(&t.points[k]);
        let points = |ks: &[usize]| {
            let parts: Vec<String> = ks.iter().map(|&k| point(k)).collect();
            format!("[{}]", parts.join(", "))
        };
        let _ = writeln!(out);
        let _ = writeln!(out, "points: {}", t.points.len());
        for k in 0..t.points.len() {
            let _ = writeln!(out, "  ({k}) {}", point(k));
        }
        let _ = writeln!(out, "closed sets: {}", t.closed_sets.len());
        for c in &t.closed_sets {
            let _ = writeln!(out, "  {}", points(c));
        }
        let _ = writeln!(out, "T0: {}  T1: {}", yes(t.t0), yes(t.t1));
        let _ = writeln!(out, "components: {}", t.components.len());
        for c in &t.components {
            let _ = writeln!(out, "  {}", points(c));
        }
        let _ = writeln!(out, "minimal points: {}", points(&t.minimal_points));
        let _ = writeln!(out, "longest closed chain: {}", t.longest_closed_chain);
        let r = &t.radicals;
        let _ = writeln!(
            out,
            "radicals: m = {}, p = {}, s = {}",
            set(&r.m_radical),
            set(&r.p_radical),
            set(&r.s_radical)
        );
        let d = &t.density;
        let _ = writeln!(
            out,
            "Spec dense: {}  Max dense: {}  p = s: {}  m = s: {}",
            yes(d.spec_dense),
            yes(d.max_dense),
            yes(d.p_radical_eq_s_radical),
            yes(d.m_radical_eq_s_radical)
        );
        let _ = writeln!(
            out,
            "density pairing: corrected {}, literal {}",
            if d.corrected_pairing {
                "holds"
            } else {
                "VIOLATED"
            },
            if d.literal_pairing {
                "holds"
            } else {
                "VIOLATED"
            }
        );
    }

    if let Some(v) = &doc.verification {
        let _ = writeln!(out);
        let _ = writeln!(out, "checks:");
        for c in &v.checks {
            let _ = write!(out, "  {:<10} {}", c.status.as_str().to_uppercase(), c.id);
            if let Some(w) = &c.witness {
                let _ = write!(out, "  ({w})");
            }
            if let Some(t) = c.elapsed_us {
                let _ = write!(out, "  [{t} us]");
            }
            let _ = writeln!(out);
        }
        let _ = writeln!(out, "observations:");
        for o in &v.observations {
            let _ = write!(
                out,
                "  {:<10} {}",
                if o.holds { "true" } else { "false" },
                o.id
            );
            if let Some(d) = &o.detail {
                let _ = write!(out, "  ({d})");
            }
            let _ = writeln!(out);
        }
        let s = &v.summary;
        let _ = writeln!(
            out,
            "summary: {} pass, {} fail, {} vacuous, {} degenerate",
            s.pass, s.fail, s.vacuous, s.degenerate
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::tests::z_mod;
    use crate::topology::MAX_POINTS;
    use crate::verifier::{verify_analysis, VerifyOptions};

    fn full(n: usize) -> ReportDocument {
        let a = Analysis::new(z_mod(n), MAX_POINTS).unwrap();
        let v = verify_analysis(&a, &VerifyOptions::default()).unwrap();
        ReportDocument::lattice_only(&a, &format!("z{n}"))
            .with_topology(&a)
            .with_verification(v)
    }

    #[test]
    fn json_round_trip() {
        for n in [1, 4, 6] {
            let doc = full(n);
            let json = doc.to_json();
            let back = ReportDocument::from_json(&json).unwrap();
            assert_eq!(back, doc);
            assert_eq!(back.to_json(), json);
        }
    }

    #[test]
    fn key_order_is_stable() {
        let json = full(4).to_json();
        let pos = |k: &str| json.find(&format!("\"{k}\"")).unwrap();
        assert!(pos("format") < pos("monoid"));
        assert!(pos("monoid") < pos("lattice"));
        assert!(pos("lattice") < pos("topology"));
        assert!(pos("topology") < pos("verification"));
    }

    #[test]
    fn z6_sections() {
        let doc = full(6);
        let t = doc.topology.as_ref().unwrap();
        assert_eq!(
            t.points,
            vec![
                vec!["0", "3"],
                vec!["0", "2", "4"],
                vec!["0", "2", "3", "4"]
            ]
        );
        assert_eq!(t.components.len(), 2);
        assert_eq!(t.radicals.m_radical, vec!["0", "2", "3", "4"]);
        assert!(t.density.corrected_pairing && !t.density.literal_pairing);
        assert_eq!(doc.lattice.hasse_edges.len(), 5);
        let text = doc.to_text();
        assert!(text.contains("density pairing: corrected holds, literal VIOLATED"));
    }
}
