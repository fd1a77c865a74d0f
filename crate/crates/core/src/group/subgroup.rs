use super::{FiniteGroup, IDENTITY};
use crate::error::{Error, Result};
use crate::psi::is_prime;

/// A subgroup of a parent group, as a strictly sorted list of element indices.
#[derive(Clone, Debug)]
pub struct SubgroupSet<'g> {
    group: &'g FiniteGroup,
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl PartialEq for SubgroupSet<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.group, other.group) && self.members == other.members
    }
}

impl Eq for SubgroupSet<'_> {}

impl<'g> SubgroupSet<'g> {
    fn from_mask(group: &'g FiniteGroup, mask: Vec<bool>) -> Self {
        let members: Vec<usize> = mask
            .iter()
            .enumerate()
            .filter_map(|(i, &m)| m.then_some(i))
            .collect();
        assert_eq!(
            group.order() % members.len(),
            0,
            "subgroup order must divide the group order"
        );
        Self {
            group,
            members,
            mask,
        }
    }

    pub fn parent(&self) -> &'g FiniteGroup {
        self.group
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.mask.get(a).copied().unwrap_or(false)
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order() == self.group.order()
    }

    pub fn is_subset_of(&self, other: &SubgroupSet<'_>) -> bool {
        self.members.iter().all(|&a| other.contains(a))
    }
}

/// Grows a subgroup one generator at a time, keeping it closed under right
/// multiplication by every generator seen so far.
struct Closure<'g> {
    group: &'g FiniteGroup,
    gens: Vec<usize>,
    mask: Vec<bool>,
    elements: Vec<usize>,
}

impl<'g> Closure<'g> {
    fn new(group: &'g FiniteGroup) -> Self {
        let mut mask = vec![false; group.order()];
        mask[IDENTITY] = true;
        Self {
            group,
            gens: Vec::new(),
            mask,
            elements: vec![IDENTITY],
        }
    }

    fn add(&mut self, g: usize) {
        if self.mask[g] {
            return;
        }
        self.gens.push(g);
        let mut frontier = Vec::new();
        for &x in &self.elements {
            let y = self.group.mul(x, g);
            if !self.mask[y] {
                self.mask[y] = true;
                frontier.push(y);
            }
        }
        while let Some(x) = frontier.pop() {
            self.elements.push(x);
            for &s in &self.gens {
                let y = self.group.mul(x, s);
                if !self.mask[y] {
                    self.mask[y] = true;
                    frontier.push(y);
                }
            }
        }
    }

    fn finish(self) -> SubgroupSet<'g> {
        SubgroupSet::from_mask(self.group, self.mask)
    }
}

impl FiniteGroup {
    pub fn whole(&self) -> SubgroupSet<'_> {
        SubgroupSet::from_mask(self, vec![true; self.order()])
    }

    pub fn trivial_subgroup(&self) -> SubgroupSet<'_> {
        Closure::new(self).finish()
    }

    /// Smallest subgroup containing `gens`.
    pub fn subgroup_generated(&self, gens: &[usize]) -> Result<SubgroupSet<'_>> {
        let mut closure = Closure::new(self);
        for &g in gens {
            self.check_index(g)?;
            closure.add(g);
        }
        Ok(closure.finish())
    }

    /// Subgroup generated by all commutators `[a, b]` with `a, b ∈ h`.
    pub fn commutator_subgroup(&self, h: &SubgroupSet<'_>) -> SubgroupSet<'_> {
        let mut closure = Closure::new(self);
        for (i, &a) in h.members().iter().enumerate() {
            for &b in &h.members()[i + 1..] {
                closure.add(self.commutator(a, b));
            }
        }
        closure.finish()
    }

    /// `G ⊇ G' ⊇ G'' ⊇ …`, ending at the first term equal to its own
    /// commutator subgroup.
    pub fn derived_series(&self) -> Vec<SubgroupSet<'_>> {
        let mut series = vec![self.whole()];
        loop {
            let last = series.last().expect("series starts non-empty");
            let next = self.commutator_subgroup(last);
            if next.order() == last.order() {
                return series;
            }
            series.push(next);
        }
    }

    /// Ground truth: the derived series reaches the trivial group.
    pub fn is_solvable(&self) -> bool {
        self.derived_series()
            .last()
            .is_some_and(SubgroupSet::is_trivial)
    }

    pub fn center(&self) -> SubgroupSet<'_> {
        let mask = self
            .elements()
            .map(|z| self.elements().all(|a| self.mul(z, a) == self.mul(a, z)))
            .collect();
        SubgroupSet::from_mask(self, mask)
    }

    pub fn is_normal(&self, h: &SubgroupSet<'_>) -> bool {
        self.elements().all(|g| {
            h.members()
                .iter()
                .all(|&x| h.contains(self.conjugate(x, g)))
        })
    }

    /// The Sylow `p`-subgroup, provided it is cyclic and normal.
    ///
    /// A cyclic normal Sylow subgroup is unique, so the first element whose
    /// order is the full `p`-part of `|G|` decides the question.
    pub fn cyclic_normal_sylow(&self, p: u64) -> Result<Option<SubgroupSet<'_>>> {
        let n = self.order() as u64;
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if !n.is_multiple_of(p) {
            return Err(Error::NotADivisor { p, n });
        }
        let mut p_part = 1u64;
        while n.is_multiple_of(p_part * p) {
            p_part *= p;
        }
        let orders = self.element_orders();
        let Some(witness) = orders.iter().position(|&o| o as u64 == p_part) else {
            return Ok(None);
        };
        let candidate = self.subgroup_generated(&[witness])?;
        Ok(self.is_normal(&candidate).then_some(candidate))
    }

    /// `G / N` on left cosets. Coset `i` is represented by its smallest
    /// element; cosets are numbered in order of their representatives, so the
    /// identity coset is 0.
    pub fn quotient(&self, normal: &SubgroupSet<'_>) -> Result<FiniteGroup> {
        if !std::ptr::eq(normal.parent(), self) && normal.parent() != self {
            return Err(Error::InvalidTable(
                "subgroup belongs to a different group".into(),
            ));
        }
        if !self.is_normal(normal) {
            return Err(Error::NotNormal);
        }
        let mut label = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for g in self.elements() {
            if label[g] != usize::MAX {
                continue;
            }
            for &x in normal.members() {
                label[self.mul(g, x)] = reps.len();
            }
            reps.push(g);
        }
        let m = reps.len();
        let mut table = Vec::with_capacity(m * m);
        for &a in &reps {
            table.extend(reps.iter().map(|&b| label[self.mul(a, b)] as u32));
        }
        Ok(FiniteGroup::from_trusted_table(
            format!("{}/[{}]", self.name(), normal.order()),
            m,
            table,
        ))
    }
}
