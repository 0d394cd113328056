//! Finite commutative monoids given by their Cayley tables.

use crate::element_set::{ElementSet, MAX_ORDER};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MonoidError {
    #[error("a monoid needs at least one element")]
    Empty,
    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("table must be {expected}x{expected}, row {row} has {found} entries")]
    BadDimensions {
        expected: usize,
        row: usize,
        found: usize,
    },
    #[error("element name `{0}` is not of the form [A-Za-z0-9_*+-]+")]
    InvalidName(String),
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("unknown identity element `{0}`")]
    UnknownIdentityName(String),
    #[error("table entry at ({row}, {col}) is {value}, outside 0..{order}")]
    OutOfRangeEntry {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("not commutative: {a}*{b} != {b}*{a}")]
    NotCommutative { a: usize, b: usize },
    #[error("identity law fails at element {a}")]
    IdentityLawFails { a: usize },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("exponent must be at least 1")]
    ZeroExponent,
    #[error("operands belong to monoids of order {left} and {right}")]
    MismatchedOwner { left: usize, right: usize },
}

/// A validated finite commutative monoid.
///
/// Elements are the dense indices `0..order()`; names only matter for I/O.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteMonoid {
    names: Vec<String>,
    table: Vec<usize>,
    identity: usize,
}

pub fn is_valid_name(name: &str) -> bool {
    !name.is_empty()
        && name
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '*' | '+' | '-'))
}

/// Validates a Cayley table whose identity is given by name.
pub fn validate_monoid(
    names: Vec<String>,
    table: Vec<Vec<usize>>,
    identity: &str,
) -> Result<FiniteMonoid, MonoidError> {
    let identity = names
        .iter()
        .position(|n| n == identity)
        .ok_or_else(|| MonoidError::UnknownIdentityName(identity.to_string()));
    check_shape(&names, &table)?;
    FiniteMonoid::from_table(names, table, identity?)
}

fn check_shape(names: &[String], table: &[Vec<usize>]) -> Result<(), MonoidError> {
    let n = names.len();
    if n == 0 {
        return Err(MonoidError::Empty);
    }
    if n > MAX_ORDER {
        return Err(MonoidError::OrderTooLarge {
            order: n,
            max: MAX_ORDER,
        });
    }
    if table.len() != n {
        return Err(MonoidError::BadDimensions {
            expected: n,
            row: table.len().min(n),
            found: 0,
        });
    }
    if let Some((row, r)) = table.iter().enumerate().find(|(_, r)| r.len() != n) {
        return Err(MonoidError::BadDimensions {
            expected: n,
            row,
            found: r.len(),
        });
    }
    for (i, name) in names.iter().enumerate() {
        if !is_valid_name(name) {
            return Err(MonoidError::InvalidName(name.clone()));
        }
        if names[..i].contains(name) {
            return Err(MonoidError::DuplicateName(name.clone()));
        }
    }
    Ok(())
}

impl FiniteMonoid {
    /// Validates a table whose identity is given by index. Every axiom is
    /// checked exhaustively; the first failure is reported with a witness.
    pub fn from_table(
        names: Vec<String>,
        table: Vec<Vec<usize>>,
        identity: usize,
    ) -> Result<Self, MonoidError> {
        check_shape(&names, &table)?;
        let n = names.len();
        if identity >= n {
            return Err(MonoidError::IndexOutOfRange {
                index: identity,
                order: n,
            });
        }
        for (row, r) in table.iter().enumerate() {
            for (col, &value) in r.iter().enumerate() {
                if value >= n {
                    return Err(MonoidError::OutOfRangeEntry {
                        row,
                        col,
                        value,
                        order: n,
                    });
                }
            }
        }
        let asymmetric = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .find(|&(a, b)| table[a][b] != table[b][a]);
        if let Some((a, b)) = asymmetric {
            return Err(MonoidError::NotCommutative { a, b });
        }
        if let Some(a) = (0..n).find(|&a| table[identity][a] != a) {
            return Err(MonoidError::IdentityLawFails { a });
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(MonoidError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(FiniteMonoid {
            names,
            table: table.into_iter().flatten().collect(),
            identity,
        })
    }

    /// Same as [`FiniteMonoid::from_table`] with names `0..n`.
    pub fn with_index_names(table: Vec<Vec<usize>>, identity: usize) -> Result<Self, MonoidError> {
        let names = (0..table.len()).map(|i| i.to_string()).collect();
        Self::from_table(names, table, identity)
    }

    pub fn order(&self) -> usize {
        self.names.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Row-major flattened table.
    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.table.chunks(self.order())
    }

    /// Unchecked product; panics on out-of-range indices.
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b]
    }

    pub fn evaluate(&self, a: usize, b: usize) -> Result<usize, MonoidError> {
        self.check_index(a)?;
        self.check_index(b)?;
        Ok(self.mul(a, b))
    }

    /// `a^k` for `k >= 1`.
    pub fn power(&self, a: usize, k: usize) -> Result<usize, MonoidError> {
        self.check_index(a)?;
        if k == 0 {
            return Err(MonoidError::ZeroExponent);
        }
        // a^k is eventually periodic; once the sequence revisits a value we can skip ahead.
        let mut seen: Vec<usize> = Vec::with_capacity(self.order());
        let mut x = a;
        for step in 1..=k {
            if step == k {
                return Ok(x);
            }
            if let Some(first) = seen.iter().position(|&y| y == x) {
                let period = seen.len() - first;
                let offset = (k - 1 - first) % period;
                return Ok(seen[first + offset]);
            }
            seen.push(x);
            x = self.mul(x, a);
        }
        unreachable!()
    }

    /// The distinct values of `a, a^2, a^3, ...`.
    pub fn powers(&self, a: usize) -> ElementSet {
        let mut s = ElementSet::empty(self.order());
        let mut x = a;
        while !s.contains(x) {
            s.insert(x);
            x = self.mul(x, a);
        }
        s
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    pub fn is_unit(&self, a: usize) -> bool {
        (0..self.order()).any(|b| self.mul(a, b) == self.identity)
    }

    pub fn units(&self) -> ElementSet {
        ElementSet::from_members(self.order(), (0..self.order()).filter(|&a| self.is_unit(a)))
    }

    pub fn nonunits(&self) -> ElementSet {
        self.units().complement()
    }

    pub fn set_product(&self, s: &ElementSet, t: &ElementSet) -> Result<ElementSet, MonoidError> {
        for x in [s, t] {
            if x.order() != self.order() {
                return Err(MonoidError::MismatchedOwner {
                    left: self.order(),
                    right: x.order(),
                });
            }
        }
        let mut out = ElementSet::empty(self.order());
        for a in s.iter() {
            for b in t.iter() {
                out.insert(self.mul(a, b));
            }
        }
        Ok(out)
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.order())
    }

    /// Relabels elements: old element `x` becomes `perm[x]`.
    pub fn permuted(&self, perm: &[usize]) -> FiniteMonoid {
        let n = self.order();
        assert_eq!(perm.len(), n);
        let mut names = vec![String::new(); n];
        let mut table = vec![0; n * n];
        for a in 0..n {
            names[perm[a]] = self.names[a].clone();
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        FiniteMonoid {
            names,
            table,
            identity: perm[self.identity],
        }
    }

    /// Same table with different names; names must be valid and distinct.
    pub fn renamed(&self, names: Vec<String>) -> Result<FiniteMonoid, MonoidError> {
        let table = self.rows().map(|r| r.to_vec()).collect::<Vec<_>>();
        check_shape(&names, &table)?;
        Ok(FiniteMonoid {
            names,
            table: self.table.clone(),
            identity: self.identity,
        })
    }

    fn check_index(&self, a: usize) -> Result<(), MonoidError> {
        if a < self.order() {
            Ok(())
        } else {
            Err(MonoidError::IndexOutOfRange {
                index: a,
                order: self.order(),
            })
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn z_mod(n: usize) -> FiniteMonoid {
        let table = (0..n)
            .map(|a| (0..n).map(|b| a * b % n).collect())
            .collect();
        FiniteMonoid::with_index_names(table, 1 % n).unwrap()
    }

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn boolean_table_is_valid() {
        let m = validate_monoid(names(&["0", "1"]), vec![vec![0, 0], vec![0, 1]], "1").unwrap();
        assert_eq!(m.identity(), 1);
        assert_eq!(m.order(), 2);
    }

    #[test]
    fn z4_is_valid() {
        let table = (0..4)
            .map(|a| (0..4).map(|b| a * b % 4).collect())
            .collect();
        assert!(validate_monoid(names(&["0", "1", "2", "3"]), table, "1").is_ok());
    }

    #[test]
    fn broken_identity_is_reported() {
        // e*a = e, a*a = a: associative, but e is not an identity.
        let err =
            validate_monoid(names(&["e", "a"]), vec![vec![0, 0], vec![0, 1]], "e").unwrap_err();
        assert_eq!(err, MonoidError::IdentityLawFails { a: 1 });
    }

    #[test]
    fn each_axiom_failure_has_a_witness() {
        let n = names(&["1", "a"]);
        assert_eq!(
            validate_monoid(n.clone(), vec![vec![0, 1], vec![0, 1]], "1").unwrap_err(),
            MonoidError::NotCommutative { a: 0, b: 1 }
        );
        assert!(matches!(
            validate_monoid(n.clone(), vec![vec![0, 2], vec![2, 1]], "1").unwrap_err(),
            MonoidError::OutOfRangeEntry {
                row: 0,
                col: 1,
                value: 2,
                ..
            }
        ));
        assert_eq!(
            validate_monoid(n.clone(), vec![vec![0, 1], vec![1, 0]], "x").unwrap_err(),
            MonoidError::UnknownIdentityName("x".into())
        );
        assert_eq!(
            validate_monoid(names(&["a", "a"]), vec![vec![0, 1], vec![1, 0]], "a").unwrap_err(),
            MonoidError::DuplicateName("a".into())
        );
        // 1 identity, a*a = b, a*b = b, b*b = a: (a*a)*b = b*b = a but a*(a*b) = a*b = b.
        let err = validate_monoid(
            names(&["1", "a", "b"]),
            vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 1]],
            "1",
        )
        .unwrap_err();
        assert!(matches!(err, MonoidError::NotAssociative { .. }));
        if let MonoidError::NotAssociative { a, b, c } = err {
            let t = [[0, 1, 2], [1, 2, 2], [2, 2, 1]];
            assert_ne!(t[t[a][b]][c], t[a][t[b][c]]);
        }
    }

    #[test]
    fn evaluate_and_power() {
        let z4 = z_mod(4);
        assert_eq!(z4.evaluate(2, 2).unwrap(), 0);
        assert_eq!(z4.evaluate(1, 3).unwrap(), 3);
        assert_eq!(z4.power(3, 2).unwrap(), 1);
        assert_eq!(z4.power(3, 7).unwrap(), 3);
        assert_eq!(z4.power(2, 1).unwrap(), 2);
        assert_eq!(z4.power(2, 5).unwrap(), 0);
        assert!(z4.evaluate(4, 0).is_err());
        assert_eq!(z4.power(1, 0), Err(MonoidError::ZeroExponent));
    }

    #[test]
    fn power_matches_iterated_multiplication() {
        let z6 = z_mod(6);
        for a in 0..6 {
            let mut x = a;
            for k in 1..20 {
                assert_eq!(z6.power(a, k).unwrap(), x, "a={a} k={k}");
                x = z6.mul(x, a);
            }
        }
    }

    #[test]
    fn units_by_pair_scan() {
        assert_eq!(z_mod(4).units().to_vec(), vec![1, 3]);
        assert_eq!(z_mod(6).units().to_vec(), vec![1, 5]);
        assert_eq!(z_mod(1).units().to_vec(), vec![0]);
    }

    #[test]
    fn set_products() {
        let z4 = z_mod(4);
        let two = ElementSet::singleton(4, 2);
        assert_eq!(z4.set_product(&two, &two).unwrap().to_vec(), vec![0]);
        let s = ElementSet::from_members(4, [2, 3]);
        let one = ElementSet::singleton(4, 1);
        assert_eq!(z4.set_product(&s, &one).unwrap(), s);
        assert!(z4
            .set_product(&ElementSet::empty(4), &s)
            .unwrap()
            .is_empty());
        assert!(z4.set_product(&ElementSet::empty(3), &s).is_err());
    }

    #[test]
    fn permuted_table_is_still_valid() {
        let z6 = z_mod(6);
        let perm = [3, 0, 5, 1, 4, 2];
        let p = z6.permuted(&perm);
        let rows = p.rows().map(|r| r.to_vec()).collect();
        let again = FiniteMonoid::from_table(p.names().to_vec(), rows, p.identity()).unwrap();
        assert_eq!(again, p);
        assert_eq!(p.identity(), 0);
        assert_eq!(p.mul(perm[2], perm[3]), perm[0]);
    }
}
