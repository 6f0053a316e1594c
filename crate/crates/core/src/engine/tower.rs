use std::collections::BTreeMap;

use indexmap::IndexMap;

use crate::arith::divisors;
use crate::chartab::CharacterTable;
use crate::error::{Error, Result};

/// Partial augmentations `eps_x(u)` of a torsion unit `u` of a given order,
/// stored densely over the classes of the table they refer to.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialAugmentationTuple {
    order: u64,
    entries: Vec<i64>,
}

impl PartialAugmentationTuple {
    pub fn new(order: u64, entries: Vec<i64>) -> Self {
        Self { order, entries }
    }

    /// The tuple of the group element class `class` itself.
    pub fn basis(table: &CharacterTable, class: usize) -> Self {
        let mut entries = vec![0; table.classes.len()];
        entries[class] = 1;
        Self {
            order: table.element_order(class),
            entries,
        }
    }

    /// Scatters `values` (indexed like `classes`) into a dense tuple.
    pub fn from_assignment(order: u64, class_count: usize, classes: &[usize], values: &[i64]) -> Self {
        let mut entries = vec![0; class_count];
        for (&c, &v) in classes.iter().zip(values) {
            entries[c] = v;
        }
        Self { order, entries }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn entry(&self, class: usize) -> i64 {
        self.entries[class]
    }

    /// Nonzero entries as `(class, eps)`.
    pub fn support(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.entries.iter().copied().enumerate().filter(|&(_, e)| e != 0)
    }

    pub fn augmentation(&self) -> i64 {
        self.entries.iter().sum()
    }

    /// The class `x` when this tuple is exactly the basis vector at `x`.
    pub fn basis_class(&self) -> Option<usize> {
        let mut support = self.support();
        match (support.next(), support.next()) {
            (Some((x, 1)), None) => Some(x),
            _ => None,
        }
    }

    /// Nonzero entries keyed by class id, in table order.
    pub fn named(&self, table: &CharacterTable) -> IndexMap<String, i64> {
        self.support()
            .map(|(x, e)| (table.class_id(x).to_string(), e))
            .collect()
    }
}

/// Partial augmentations of every power of one hypothetical unit `u` of
/// order `n`: the tuple stored under `m` (for each divisor `m > 1` of `n`)
/// describes `u^(n/m)`, a unit of order `m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tower {
    order: u64,
    tuples: BTreeMap<u64, PartialAugmentationTuple>,
}

impl Tower {
    pub fn new(order: u64, tuples: BTreeMap<u64, PartialAugmentationTuple>) -> Result<Self> {
        for d in divisors(order).into_iter().skip(1) {
            match tuples.get(&d) {
                None => return Err(Error::IncompleteTower { order, missing: d }),
                Some(t) if t.order != d => {
                    return Err(Error::InvalidOrder {
                        order: t.order,
                        reason: format!("stored under {d} in a tower of order {order}"),
                    })
                }
                Some(_) => {}
            }
        }
        if tuples.keys().any(|&k| k == 1 || !order.is_multiple_of(k)) {
            return Err(Error::InvalidOrder {
                order,
                reason: "tower keys must be divisors greater than one".into(),
            });
        }
        Ok(Self { order, tuples })
    }

    /// The tower of a group element: every power is again a group element.
    pub fn group_element(table: &CharacterTable, class: usize) -> Result<Self> {
        let n = table.element_order(class);
        let mut tuples = BTreeMap::new();
        for m in divisors(n).into_iter().skip(1) {
            let x = table.class_of_power(class, n / m)?;
            tuples.insert(m, PartialAugmentationTuple::basis(table, x));
        }
        Self::new(n, tuples)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn top(&self) -> &PartialAugmentationTuple {
        &self.tuples[&self.order]
    }

    /// Tuple of the power of order `m`, i.e. of `u^(n/m)`.
    pub fn tuple(&self, m: u64) -> Option<&PartialAugmentationTuple> {
        self.tuples.get(&m)
    }

    pub fn tuples(&self) -> &BTreeMap<u64, PartialAugmentationTuple> {
        &self.tuples
    }

    /// The tower of `u^(n/m)`.
    pub fn restrict(&self, m: u64) -> Option<Tower> {
        if m <= 1 || !self.order.is_multiple_of(m) {
            return None;
        }
        let tuples = self
            .tuples
            .iter()
            .filter(|(&k, _)| m.is_multiple_of(k))
            .map(|(&k, t)| (k, t.clone()))
            .collect();
        Some(Tower { order: m, tuples })
    }

    /// Whether every tuple is a basis vector; such units are rationally
    /// conjugate to group elements.
    pub fn is_trivial(&self) -> bool {
        self.tuples.values().all(|t| t.basis_class().is_some())
    }
}

/// True when the lower towers agree on every power they share.
pub(crate) fn consistent(
    a: &BTreeMap<u64, PartialAugmentationTuple>,
    b: &BTreeMap<u64, PartialAugmentationTuple>,
) -> bool {
    b.iter().all(|(k, t)| a.get(k).is_none_or(|s| s == t))
}
