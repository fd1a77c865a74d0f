//! Finite groups stored as full Cayley tables.
//!
//! Elements are indices `0..n` and the identity is always index 0. Every
//! structural query (orders, commutators, conjugation, cosets) reduces to
//! table lookups.

mod construct;
mod permutation;
mod subgroup;

use std::ops::Range;

use num_integer::Integer;

use crate::error::{Error, Result};

pub use construct::{
    cyclic_group, cyclic_group_with_cap, direct_product, perm_group, semidirect_product, ActionSpec,
};
pub use permutation::Permutation;
pub use subgroup::SubgroupSet;

/// Default ceiling on the number of elements any constructor will materialize.
pub const DEFAULT_CAP: usize = 20_000;

/// Imported tables up to this order get the full O(n³) associativity check.
pub const ASSOCIATIVITY_CHECK_LIMIT: usize = 256;

/// Index of the identity element in every group.
pub const IDENTITY: usize = 0;

/// A finite group given by its multiplication table. Immutable once built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
}

impl FiniteGroup {
    /// Wraps a table produced by one of the constructors. Such tables are
    /// associative with identity 0 by construction; only inverses are derived.
    pub(crate) fn from_trusted_table(
        name: impl Into<String>,
        order: usize,
        table: Vec<u32>,
    ) -> Self {
        debug_assert_eq!(table.len(), order * order);
        let mut inverse = vec![0u32; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            let b = row
                .iter()
                .position(|&x| x == 0)
                .expect("constructor produced a row without the identity");
            inverse[a] = b as u32;
        }
        Self {
            name: name.into(),
            order,
            table,
            inverse,
        }
    }

    /// Imports a raw Cayley table.
    ///
    /// Always checks shape, the Latin-square property, that index 0 is the
    /// identity, and two-sided inverses. Associativity is checked when the
    /// order is at most [`ASSOCIATIVITY_CHECK_LIMIT`] or `force_associativity`
    /// is set.
    pub fn from_table(
        name: impl Into<String>,
        rows: &[Vec<usize>],
        force_associativity: bool,
    ) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        if n > u32::MAX as usize {
            return Err(Error::TooLarge {
                size: n,
                cap: u32::MAX as usize,
            });
        }
        let mut table = Vec::with_capacity(n * n);
        for (a, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!(
                    "row {a} has {} entries, expected {n}",
                    row.len()
                )));
            }
            let mut seen = vec![false; n];
            for (b, &x) in row.iter().enumerate() {
                if x >= n {
                    return Err(Error::InvalidTable(format!(
                        "entry ({a}, {b}) = {x} is out of range"
                    )));
                }
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidTable(format!("row {a} repeats {x}")));
                }
                table.push(x as u32);
            }
        }
        for b in 0..n {
            let mut seen = vec![false; n];
            for a in 0..n {
                let x = table[a * n + b] as usize;
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidTable(format!("column {b} repeats {x}")));
                }
            }
        }
        for a in 0..n {
            if table[a] as usize != a || table[a * n] as usize != a {
                return Err(Error::InvalidTable(
                    "element 0 is not a two-sided identity".into(),
                ));
            }
        }
        let group = Self::from_trusted_table(name, n, table);
        for a in 0..n {
            if group.mul(group.inv(a), a) != IDENTITY {
                return Err(Error::InvalidTable(format!(
                    "element {a} has no two-sided inverse"
                )));
            }
        }
        if force_associativity || n <= ASSOCIATIVITY_CHECK_LIMIT {
            group.check_associativity()?;
        }
        Ok(group)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// Row `a` of the table: the products `a·b` for every `b`.
    pub fn row(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.table[a * self.order..(a + 1) * self.order]
            .iter()
            .map(|&x| x as usize)
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.elements().map(|a| self.row(a).collect()).collect()
    }

    pub fn pow(&self, a: usize, mut e: u64) -> usize {
        let (mut acc, mut base) = (IDENTITY, a);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `g⁻¹·a·g`
    pub fn conjugate(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), a), g)
    }

    /// `[a, b] = a⁻¹·b⁻¹·a·b`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inv(ba), ab)
    }

    pub(crate) fn check_index(&self, a: usize) -> Result<()> {
        if a < self.order {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: a,
                order: self.order,
            })
        }
    }

    /// Smallest `m ≥ 1` with `a^m` the identity.
    pub fn element_order(&self, a: usize) -> Result<usize> {
        self.check_index(a)?;
        let mut m = 1;
        let mut x = a;
        while x != IDENTITY {
            x = self.mul(x, a);
            m += 1;
        }
        Ok(m)
    }

    /// Orders of all elements, indexed by element.
    ///
    /// Walks each cyclic subgroup once: if `a` has order `m`, then `a^j` has
    /// order `m / gcd(j, m)`.
    pub fn element_orders(&self) -> Vec<usize> {
        let mut orders = vec![0usize; self.order];
        let mut powers = Vec::new();
        for a in self.elements() {
            if orders[a] != 0 {
                continue;
            }
            powers.clear();
            powers.push(IDENTITY);
            let mut x = a;
            while x != IDENTITY {
                powers.push(x);
                x = self.mul(x, a);
            }
            let m = powers.len();
            orders[IDENTITY] = 1;
            for (j, &p) in powers.iter().enumerate().skip(1) {
                if orders[p] == 0 {
                    orders[p] = m / j.gcd(&m);
                }
            }
        }
        orders
    }

    pub fn max_element_order(&self) -> usize {
        self.element_orders().into_iter().max().unwrap_or(1)
    }

    pub fn is_cyclic(&self) -> bool {
        self.max_element_order() == self.order
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn check_associativity(&self) -> Result<()> {
        for a in self.elements() {
            for b in self.elements() {
                let ab = self.mul(a, b);
                for c in self.elements() {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::InvalidTable(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn klein_rows() -> Vec<Vec<usize>> {
        vec![
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ]
    }

    #[test]
    fn imports_valid_table() {
        let g = FiniteGroup::from_table("V4", &klein_rows(), false).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.is_abelian());
        assert!(!g.is_cyclic());
        assert_eq!(g.element_orders(), vec![1, 2, 2, 2]);
        assert_eq!(g.rows(), klein_rows());
    }

    #[test]
    fn rejects_broken_tables() {
        let mut rows = klein_rows();
        rows[1][1] = 1;
        assert!(matches!(
            FiniteGroup::from_table("bad", &rows, false),
            Err(Error::InvalidTable(_))
        ));

        // identity not at index 0
        let rows = vec![vec![1, 0], vec![0, 1]];
        assert!(FiniteGroup::from_table("bad", &rows, false).is_err());

        let rows = vec![vec![0, 1], vec![1]];
        assert!(FiniteGroup::from_table("bad", &rows, false).is_err());

        assert!(FiniteGroup::from_table("bad", &[], false).is_err());
    }

    #[test]
    fn rejects_non_associative_latin_square() {
        // Loop of order 5 with identity 0 that is not a group.
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table("loop", &rows, false).unwrap_err();
        assert!(err.to_string().contains("associativity"), "{err}");
    }

    #[test]
    fn element_order_bounds() {
        let g = cyclic_group(6).unwrap();
        assert_eq!(g.element_order(IDENTITY).unwrap(), 1);
        assert_eq!(g.element_order(4).unwrap(), 3);
        assert!(matches!(
            g.element_order(6),
            Err(Error::IndexOutOfRange { index: 6, order: 6 })
        ));
        let direct: Vec<usize> = g.elements().map(|a| g.element_order(a).unwrap()).collect();
        assert_eq!(g.element_orders(), direct);
    }

    #[test]
    fn pow_and_commutator() {
        let g = cyclic_group(7).unwrap();
        assert_eq!(g.pow(3, 0), IDENTITY);
        assert_eq!(g.pow(3, 5), 15 % 7);
        assert_eq!(g.commutator(2, 5), IDENTITY);
    }
}
