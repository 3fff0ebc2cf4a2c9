//! Finite groups as validated Cayley tables, with subgroups, homomorphisms,
//! cosets, products and pullbacks.
//!
//! Elements are indices `0..n`; index 0 is always the identity. Everywhere a
//! representative has to be chosen (cosets, double cosets, quotient groups) the
//! minimal element index is used, so every derived object is deterministic.

mod cosets;
mod hom;
mod perm;
mod product;
mod subgroup;

use std::fmt;
use std::sync::Arc;

pub use cosets::{
    double_cosets, left_coset_transversal, quotient_group, DoubleCosetDecomposition, LeftCosets,
    QuotientGroup,
};
pub(crate) use hom::same_group;
pub use hom::{conjugate_hom, factorize, restrict_hom_to, GroupHom};
pub use perm::{compose_permutations, format_cycles, group_from_permutations, parse_cycles};
pub use product::{direct_product, pullback, DirectProduct, Pullback};
pub use subgroup::{all_subgroups, is_internal_direct_product, subgroup_generated, Subgroup};

use crate::error::{Error, Result};

/// Shared handle to an immutable group.
pub type GroupRef = Arc<FiniteGroup>;

#[derive(Clone)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverse: Vec<usize>,
    generators: Vec<usize>,
    labels: Option<Vec<String>>,
}

/// Groups compare by their multiplication tables; generators and labels are metadata.
impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl Eq for FiniteGroup {}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.order)
            .field("generators", &self.generators)
            .finish_non_exhaustive()
    }
}

/// Builds a group from a Cayley table, validating every axiom exhaustively.
pub fn group_from_cayley(table: &[Vec<usize>]) -> Result<GroupRef> {
    FiniteGroup::from_table(
        table.concat(),
        table.len(),
        table.iter().map(Vec::len).collect(),
    )
    .map(Arc::new)
}

impl FiniteGroup {
    fn from_table(flat: Vec<usize>, n: usize, row_lengths: Vec<usize>) -> Result<FiniteGroup> {
        if n == 0 {
            return Err(Error::GroupAxiom("a group has at least one element".into()));
        }
        if let Some((i, len)) = row_lengths.iter().enumerate().find(|(_, &l)| l != n) {
            return Err(Error::GroupAxiom(format!(
                "row {i} has {len} entries, expected {n}"
            )));
        }
        if let Some(pos) = flat.iter().position(|&x| x >= n) {
            return Err(Error::GroupAxiom(format!(
                "entry {}*{} = {} is out of range",
                pos / n,
                pos % n,
                flat[pos]
            )));
        }
        let g = FiniteGroup::new_unchecked(flat, n);
        g.validate()?;
        Ok(g)
    }

    /// Assembles a group from a table known to be valid (internal constructions).
    pub(crate) fn new_unchecked(table: Vec<usize>, n: usize) -> FiniteGroup {
        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            if let Some(b) = (0..n).find(|&b| table[a * n + b] == 0) {
                inverse[a] = b;
            }
        }
        let mut g = FiniteGroup {
            order: n,
            table,
            inverse,
            generators: Vec::new(),
            labels: None,
        };
        g.generators = g.greedy_generators();
        g
    }

    fn validate(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return Err(Error::GroupAxiom(format!(
                    "element 0 is not an identity: fails at {a}"
                )));
            }
        }
        for a in 0..n {
            let b = self.inverse[a];
            if b == usize::MAX || self.mul(b, a) != 0 {
                return Err(Error::GroupAxiom(format!(
                    "element {a} has no two-sided inverse"
                )));
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::GroupAxiom(format!(
                            "associativity fails for ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![false; self.order];
        span[0] = true;
        for g in 1..self.order {
            if !span[g] {
                gens.push(g);
                for x in subgroup::closure(self, &gens) {
                    span[x] = true;
                }
            }
        }
        gens
    }

    pub(crate) fn with_generators(mut self, generators: Vec<usize>) -> FiniteGroup {
        self.generators = generators;
        self
    }

    pub(crate) fn with_labels(mut self, labels: Vec<String>) -> FiniteGroup {
        assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
        self
    }

    /// Replaces the recorded generating set after checking it generates the group.
    pub fn set_generators(&mut self, generators: Vec<usize>) -> Result<()> {
        if generators.iter().any(|&g| g >= self.order) {
            return Err(Error::InvalidSubgroup(
                "generator index out of range".into(),
            ));
        }
        if subgroup::closure(self, &generators).len() != self.order {
            return Err(Error::InvalidSubgroup(
                "listed generators do not generate the group".into(),
            ));
        }
        self.generators = generators;
        Ok(())
    }

    pub fn trivial() -> GroupRef {
        Arc::new(FiniteGroup::new_unchecked(vec![0], 1))
    }

    /// The cyclic group `Z/n` with element `k` the class of `k`.
    pub fn cyclic(n: usize) -> GroupRef {
        assert!(n > 0);
        let table = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        let g = FiniteGroup::new_unchecked(table, n);
        let gens = if n > 1 { vec![1] } else { Vec::new() };
        Arc::new(g.with_generators(gens))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `x a x⁻¹`.
    pub fn conjugate(&self, x: usize, a: usize) -> usize {
        self.mul(self.mul(x, a), self.inv(x))
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn cayley_table(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(<[usize]>::to_vec)
            .collect()
    }

    pub fn label(&self, g: usize) -> String {
        match &self.labels {
            Some(l) => l[g].clone(),
            None => g.to_string(),
        }
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        self.elements()
            .map(|g| self.element_order(g))
            .fold(1, num_integer::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Each element as `parent * generators[gen]`, in breadth-first discovery
    /// order starting from the identity. Fails if `generators` does not generate.
    pub fn word_tree(&self, generators: &[usize]) -> Result<Vec<(usize, usize, usize)>> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut order = vec![0usize];
        let mut tree = Vec::with_capacity(self.order.saturating_sub(1));
        let mut head = 0;
        while head < order.len() {
            let g = order[head];
            head += 1;
            for (i, &s) in generators.iter().enumerate() {
                let h = self.mul(g, s);
                if !seen[h] {
                    seen[h] = true;
                    order.push(h);
                    tree.push((h, g, i));
                }
            }
        }
        if order.len() != self.order {
            return Err(Error::InvalidMap(format!(
                "generators {generators:?} generate only {} of {} elements",
                order.len(),
                self.order
            )));
        }
        Ok(tree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_c2() {
        let t = group_from_cayley(&[vec![0]]).unwrap();
        assert_eq!(t.order(), 1);
        let c2 = group_from_cayley(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(c2.order(), 2);
        assert_eq!(c2.inv(1), 1);
        assert_eq!(*c2, *FiniteGroup::cyclic(2));
    }

    #[test]
    fn rejects_bad_tables() {
        // Latin square with identity 0 that is not associative (order 5).
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = group_from_cayley(&t).unwrap_err();
        assert!(
            matches!(err, Error::GroupAxiom(ref m) if m.contains("associativity")),
            "{err}"
        );
        assert!(group_from_cayley(&[vec![0, 1], vec![1, 1]]).is_err());
        assert!(group_from_cayley(&[vec![0, 2], vec![1, 0]]).is_err());
        assert!(group_from_cayley(&[vec![0, 1]]).is_err());
        assert!(group_from_cayley(&[]).is_err());
        assert!(group_from_cayley(&[vec![1, 0], vec![0, 1]]).is_err());
    }

    #[test]
    fn cyclic_properties() {
        let c6 = FiniteGroup::cyclic(6);
        assert_eq!(c6.element_order(1), 6);
        assert_eq!(c6.element_order(2), 3);
        assert_eq!(c6.exponent(), 6);
        assert!(c6.is_abelian());
        assert_eq!(c6.word_tree(&[1]).unwrap().len(), 5);
        assert!(c6.word_tree(&[2]).is_err());
    }
}
