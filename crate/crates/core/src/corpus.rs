//! Named monoid families and the census of small commutative monoids.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::iso::{fingerprint, is_isomorphic};
use crate::monoid::{FiniteMonoid, MonoidError};

/// Largest census order without an override.
pub const DEFAULT_MAX_CENSUS_ORDER: usize = 5;
/// Largest census order with the override.
pub const HARD_MAX_CENSUS_ORDER: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("invalid family parameters: {0}")]
    InvalidParameters(String),
    #[error("cannot parse family `{0}`")]
    Syntax(String),
    #[error("census order {order} exceeds {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error(transparent)]
    Monoid(#[from] MonoidError),
}

/// A named monoid family with its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// `{0..n-1}` under multiplication mod `n`.
    ZMult {
        n: usize,
    },
    /// `⟨a | a^(index+period) = a^index⟩`.
    Cyclic {
        index: usize,
        period: usize,
    },
    /// Same table as `ZMult { n: 2 }`.
    Boolean,
    /// A chain of length `k` under `min`, top element as identity.
    ChainSemilattice {
        k: usize,
    },
    DirectProduct(Box<FamilySpec>, Box<FamilySpec>),
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::ZMult { n } => write!(f, "z_mult({n})"),
            FamilySpec::Cyclic { index, period } => write!(f, "cyclic({index},{period})"),
            FamilySpec::Boolean => write!(f, "boolean"),
            FamilySpec::ChainSemilattice { k } => write!(f, "chain_semilattice({k})"),
            FamilySpec::DirectProduct(a, b) => write!(f, "direct_product({a},{b})"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = CorpusError;

    /// Parses expressions such as `z_mult(6)` or `direct_product(boolean,cyclic(1,2))`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let syntax = || CorpusError::Syntax(s.clone());
        let (id, args) = match s.find('(') {
            Some(open) => {
                if !s.ends_with(')') {
                    return Err(syntax());
                }
                (
                    &s[..open],
                    split_args(&s[open + 1..s.len() - 1]).ok_or_else(syntax)?,
                )
            }
            None => (s.as_str(), Vec::new()),
        };
        let ints = || -> Result<Vec<usize>, CorpusError> {
            args.iter()
                .map(|a| a.parse::<usize>().map_err(|_| syntax()))
                .collect()
        };
        let arity = |want: usize, got: usize| {
            if want == got {
                Ok(())
            } else {
                Err(CorpusError::InvalidParameters(format!(
                    "{id} takes {want} parameter(s), got {got}"
                )))
            }
        };
        match id {
            "z_mult" => {
                let v = ints()?;
                arity(1, v.len())?;
                Ok(FamilySpec::ZMult { n: v[0] })
            }
            "cyclic" => {
                let v = ints()?;
                arity(2, v.len())?;
                Ok(FamilySpec::Cyclic {
                    index: v[0],
                    period: v[1],
                })
            }
            "boolean" => {
                arity(0, args.len())?;
                Ok(FamilySpec::Boolean)
            }
            "chain_semilattice" => {
                let v = ints()?;
                arity(1, v.len())?;
                Ok(FamilySpec::ChainSemilattice { k: v[0] })
            }
            "direct_product" => {
                arity(2, args.len())?;
                Ok(FamilySpec::DirectProduct(
                    Box::new(args[0].parse()?),
                    Box::new(args[1].parse()?),
                ))
            }
            _ => Err(syntax()),
        }
    }
}

/// Splits on top-level commas.
fn split_args(s: &str) -> Option<Vec<String>> {
    if s.is_empty() {
        return Some(Vec::new());
    }
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (k, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return None;
                }
            }
            ',' if depth == 0 => {
                out.push(s[start..k].to_string());
                start = k + 1;
            }
            _ => {}
        }
    }
    (depth == 0).then(|| {
        out.push(s[start..].to_string());
        out
    })
}

pub fn make_family(spec: &FamilySpec) -> Result<FiniteMonoid, CorpusError> {
    let invalid = |msg: &str| Err(CorpusError::InvalidParameters(msg.to_string()));
    match spec {
        FamilySpec::ZMult { n } => {
            if *n < 1 {
                return invalid("z_mult needs n >= 1");
            }
            let table = (0..*n)
                .map(|a| (0..*n).map(|b| a * b % n).collect())
                .collect();
            Ok(FiniteMonoid::with_index_names(table, 1 % n)?)
        }
        FamilySpec::Boolean => make_family(&FamilySpec::ZMult { n: 2 }),
        FamilySpec::Cyclic { index, period } => {
            if *index < 1 || *period < 1 {
                return invalid("cyclic needs index >= 1 and period >= 1");
            }
            let size = index + period;
            // element k is a^k, element 0 is the identity
            let reduce = |e: usize| {
                if e < size {
                    e
                } else {
                    index + (e - index) % period
                }
            };
            let table = (0..size)
                .map(|j| (0..size).map(|k| reduce(j + k)).collect())
                .collect();
            let names = (0..size)
                .map(|k| match k {
                    0 => "1".to_string(),
                    1 => "a".to_string(),
                    _ => format!("a{k}"),
                })
                .collect();
            Ok(FiniteMonoid::from_table(names, table, 0)?)
        }
        FamilySpec::ChainSemilattice { k } => {
            if *k < 1 {
                return invalid("chain_semilattice needs k >= 1");
            }
            let table = (0..*k)
                .map(|a| (0..*k).map(|b| a.min(b)).collect())
                .collect();
            Ok(FiniteMonoid::with_index_names(table, k - 1)?)
        }
        FamilySpec::DirectProduct(a, b) => {
            let (ma, mb) = (make_family(a)?, make_family(b)?);
            let (na, nb) = (ma.order(), mb.order());
            let idx = |x: usize, y: usize| x * nb + y;
            let mut table = vec![vec![0; na * nb]; na * nb];
            let mut names = Vec::with_capacity(na * nb);
            for x in 0..na {
                for y in 0..nb {
                    names.push(format!("{}_{}", ma.name(x), mb.name(y)));
                    for u in 0..na {
                        for v in 0..nb {
                            table[idx(x, y)][idx(u, v)] = idx(ma.mul(x, u), mb.mul(y, v));
                        }
                    }
                }
            }
            Ok(FiniteMonoid::from_table(
                names,
                table,
                idx(ma.identity(), mb.identity()),
            )?)
        }
    }
}

/// Element names used for census output: the identity is `1`, then `a`, `b`, ...
pub fn census_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|k| match k {
            0 => "1".to_string(),
            _ => ((b'a' + (k as u8 - 1)) as char).to_string(),
        })
        .collect()
}

/// Every commutative monoid of order `n` with identity at index 0, optionally
/// one lexicographically least table per isomorphism class, sorted by flattened table.
pub fn enumerate_commutative_monoids(
    n: usize,
    up_to_iso: bool,
    allow_order_six: bool,
) -> Result<Vec<FiniteMonoid>, CorpusError> {
    let max = if allow_order_six {
        HARD_MAX_CENSUS_ORDER
    } else {
        DEFAULT_MAX_CENSUS_ORDER
    };
    if n > max {
        return Err(CorpusError::OrderTooLarge { order: n, max });
    }
    if n == 0 {
        return Err(CorpusError::InvalidParameters(
            "order must be at least 1".into(),
        ));
    }
    let mut tables = Vec::new();
    let mut search = TableSearch::new(n);
    search.run(0, &mut tables);
    tables.sort();
    let names = census_names(n);
    let monoids = tables.into_iter().map(|flat| {
        let rows = flat.chunks(n).map(|r| r.to_vec()).collect();
        FiniteMonoid::from_table(names.clone(), rows, 0).expect("search yields valid monoids")
    });
    if !up_to_iso {
        return Ok(monoids.collect());
    }
    let mut buckets: HashMap<_, Vec<usize>> = HashMap::new();
    let mut reps: Vec<FiniteMonoid> = Vec::new();
    for m in monoids {
        let bucket = buckets.entry(fingerprint(&m)).or_default();
        if bucket
            .iter()
            .all(|&k| is_isomorphic(&reps[k], &m).is_none())
        {
            bucket.push(reps.len());
            reps.push(m);
        }
    }
    Ok(reps)
}

const UNSET: usize = usize::MAX;

/// Backtracking over the upper triangle of a commutative table, pruning on associativity.
struct TableSearch {
    n: usize,
    table: Vec<usize>,
    cells: Vec<(usize, usize)>,
}

impl TableSearch {
    fn new(n: usize) -> Self {
        let mut table = vec![UNSET; n * n];
        for a in 0..n {
            table[a] = a;
            table[a * n] = a;
        }
        let cells = (1..n).flat_map(|a| (a..n).map(move |b| (a, b))).collect();
        TableSearch { n, table, cells }
    }

    fn get(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    fn set(&mut self, a: usize, b: usize, v: usize) {
        self.table[a * self.n + b] = v;
        self.table[b * self.n + a] = v;
    }

    fn run(&mut self, depth: usize, out: &mut Vec<Vec<usize>>) {
        if depth == self.cells.len() {
            out.push(self.table.clone());
            return;
        }
        let (a, b) = self.cells[depth];
        for v in 0..self.n {
            self.set(a, b, v);
            if self.associative_so_far() {
                self.run(depth + 1, out);
            }
        }
        self.set(a, b, UNSET);
    }

    /// Every triple whose four products are already assigned associates.
    fn associative_so_far(&self) -> bool {
        let n = self.n;
        for x in 1..n {
            for y in 1..n {
                let xy = self.get(x, y);
                if xy == UNSET {
                    continue;
                }
                for z in 1..n {
                    let yz = self.get(y, z);
                    if yz == UNSET {
                        continue;
                    }
                    let left = self.get(xy, z);
                    let right = self.get(x, yz);
                    if left != UNSET && right != UNSET && left != right {
                        return false;
                    }
                }
            }
        }
        true
    }
}
