use std::collections::{BTreeMap, BTreeSet};

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::arith::{divisors, prime_divisors, prime_power};
use crate::chartab::CharacterTable;
use crate::engine::system::{allowed_classes, usable_brauer_primes, ConstraintSystem, SystemBuilder};
use crate::engine::tower::{consistent, PartialAugmentationTuple, Tower};
use crate::error::{Error, Result};
use crate::solver::{solve, variable_bounds};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Use every Brauer table whose prime does not divide the order.
    pub use_brauer: bool,
    /// Orders to scan; all divisors `> 1` of the exponent when `None`.
    pub orders: Option<Vec<u64>>,
    /// Solve the systems of one order concurrently. Ignored without the
    /// `parallel` feature.
    pub parallel: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            use_brauer: true,
            orders: None,
            parallel: cfg!(feature = "parallel"),
        }
    }
}

type Lower = BTreeMap<u64, PartialAugmentationTuple>;

/// Admissible towers per order, computed bottom-up over the divisor lattice.
pub struct Enumerator<'t> {
    table: &'t CharacterTable,
    builder: SystemBuilder<'t>,
    use_brauer: bool,
    parallel: bool,
    cache: BTreeMap<u64, Vec<Tower>>,
}

impl<'t> Enumerator<'t> {
    pub fn new(table: &'t CharacterTable, use_brauer: bool, parallel: bool) -> Self {
        Self {
            table,
            builder: SystemBuilder::new(table),
            use_brauer,
            parallel,
            cache: BTreeMap::new(),
        }
    }

    fn brauer_primes(&self, n: u64) -> BTreeSet<u64> {
        if self.use_brauer {
            usable_brauer_primes(self.table, n)
        } else {
            BTreeSet::new()
        }
    }

    /// All consistent choices of towers for the maximal proper divisors of `n`.
    fn lower_families(&mut self, n: u64) -> Result<Vec<Lower>> {
        let mut families = vec![Lower::new()];
        for r in prime_divisors(n) {
            let m = n / r;
            if m == 1 {
                continue;
            }
            let towers = self.admissible(m)?.to_vec();
            let mut next = Vec::new();
            for family in &families {
                for t in &towers {
                    if consistent(family, t.tuples()) {
                        let mut merged = family.clone();
                        merged.extend(t.tuples().iter().map(|(&k, v)| (k, v.clone())));
                        next.push(merged);
                    }
                }
            }
            families = next;
        }
        Ok(families)
    }

    /// The system for a unit of order `n` with the given powers.
    pub fn system(&mut self, n: u64, lower: &Lower, variables: &[usize]) -> Result<ConstraintSystem> {
        self.builder.prepare(n)?;
        self.builder.build(n, lower, variables, &self.brauer_primes(n))
    }

    /// Admissible towers of order `n`, sorted.
    pub fn admissible(&mut self, n: u64) -> Result<&[Tower]> {
        if n <= 1 {
            return Err(Error::InvalidOrder {
                order: n,
                reason: "unit orders start at 2".into(),
            });
        }
        if !self.cache.contains_key(&n) {
            let towers = if !self.table.exponent.is_multiple_of(n) {
                // torsion units have orders dividing the exponent
                Vec::new()
            } else {
                let families = self.lower_families(n)?;
                self.builder.prepare(n)?;
                let variables = allowed_classes(self.table, n);
                self.solve_families(n, &families, &variables)?
            };
            self.cache.insert(n, towers);
        }
        Ok(&self.cache[&n])
    }

    fn solve_families(&self, n: u64, families: &[Lower], variables: &[usize]) -> Result<Vec<Tower>> {
        let brauer = self.brauer_primes(n);
        let one = |lower: &Lower| -> Result<Vec<Tower>> {
            let system = self.builder.build(n, lower, variables, &brauer)?;
            let bounds = variable_bounds(self.table, &system);
            let mut out = Vec::new();
            for point in solve(&system, &bounds) {
                let top = PartialAugmentationTuple::from_assignment(n, self.table.classes.len(), variables, &point);
                if !central_ok(self.table, &top) {
                    continue;
                }
                let mut tuples = lower.clone();
                tuples.insert(n, top);
                out.push(Tower::new(n, tuples)?);
            }
            Ok(out)
        };
        #[cfg(feature = "parallel")]
        let results: Vec<Result<Vec<Tower>>> = if self.parallel {
            families.par_iter().map(one).collect()
        } else {
            families.iter().map(one).collect()
        };
        #[cfg(not(feature = "parallel"))]
        let results: Vec<Result<Vec<Tower>>> = {
            let _ = self.parallel;
            families.iter().map(one).collect()
        };

        let mut towers = Vec::new();
        for r in results {
            towers.extend(r?);
        }
        towers.sort();
        towers.dedup();
        Ok(towers)
    }
}

/// A nonzero partial augmentation at a central class forces the unit to be
/// that central element.
fn central_ok(table: &CharacterTable, tuple: &PartialAugmentationTuple) -> bool {
    tuple.basis_class().is_some() || tuple.support().all(|(x, _)| !table.is_central(x))
}

/// `enumerate_admissible` with a fresh cache.
pub fn enumerate_admissible(table: &CharacterTable, n: u64, use_brauer: bool) -> Result<Vec<Tower>> {
    let mut e = Enumerator::new(table, use_brauer, cfg!(feature = "parallel"));
    Ok(e.admissible(n)?.to_vec())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderStatus {
    Infeasible,
    TrivialOnly,
    Undecided,
}

impl OrderStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            OrderStatus::Infeasible => "infeasible",
            OrderStatus::TrivialOnly => "trivial_only",
            OrderStatus::Undecided => "undecided",
        }
    }
}

/// Tuples of one tower keyed by the order of the power, each as
/// class id to nonzero partial augmentation.
pub type TowerDoc = BTreeMap<u64, IndexMap<String, i64>>;

pub fn tower_doc(table: &CharacterTable, tower: &Tower) -> TowerDoc {
    tower.tuples().iter().map(|(&m, t)| (m, t.named(table))).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderReport {
    pub n: u64,
    pub status: OrderStatus,
    pub towers: Vec<TowerDoc>,
    pub trivial_count: usize,
}

pub const VERIFIED: &str = "ZC verified";
pub const UNDECIDED: &str = "undecided";
pub const INCONSISTENT: &str = "inconsistent";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub group: String,
    pub orders: Vec<OrderReport>,
    pub verdict: String,
}

impl Report {
    pub fn order(&self, n: u64) -> Option<&OrderReport> {
        self.orders.iter().find(|o| o.n == n)
    }

    pub fn is_verified(&self) -> bool {
        self.verdict == VERIFIED
    }
}

pub fn order_report(table: &CharacterTable, n: u64, towers: &[Tower]) -> OrderReport {
    let trivial_count = towers.iter().filter(|t| t.is_trivial()).count();
    let status = if towers.is_empty() {
        OrderStatus::Infeasible
    } else if trivial_count == towers.len() {
        OrderStatus::TrivialOnly
    } else {
        OrderStatus::Undecided
    };
    OrderReport {
        n,
        status,
        towers: towers.iter().map(|t| tower_doc(table, t)).collect(),
        trivial_count,
    }
}

/// Scans the requested orders and decides whether every torsion unit of
/// those orders is rationally conjugate to a group element.
///
/// The verdict is [`VERIFIED`] only when all divisors of the exponent were
/// scanned, each is infeasible or trivial-only, and each element tower of
/// the group shows up as admissible. A group element that is rejected means
/// the table itself is wrong: the verdict is then [`INCONSISTENT`].
pub fn verify_group(table: &CharacterTable, options: &VerifyOptions) -> Result<Report> {
    let all: Vec<u64> = divisors(table.exponent).into_iter().skip(1).collect();
    let orders = match &options.orders {
        Some(o) => {
            let mut o = o.clone();
            o.sort_unstable();
            o.dedup();
            for &n in &o {
                if n <= 1 || !table.exponent.is_multiple_of(n) {
                    return Err(Error::InvalidOrder {
                        order: n,
                        reason: format!("not a divisor > 1 of the exponent {}", table.exponent),
                    });
                }
            }
            o
        }
        None => all.clone(),
    };
    let mut e = Enumerator::new(table, options.use_brauer, options.parallel);
    let mut reports = Vec::new();
    let mut consistent = true;
    for &n in &orders {
        let towers = e.admissible(n)?.to_vec();
        for x in (0..table.classes.len()).filter(|&x| table.element_order(x) == n) {
            let g = Tower::group_element(table, x)?;
            if towers.binary_search(&g).is_err() {
                consistent = false;
            }
        }
        reports.push(order_report(table, n, &towers));
    }
    let decided = reports.iter().all(|r| r.status != OrderStatus::Undecided);
    let verdict = if !consistent {
        INCONSISTENT
    } else if decided && orders == all {
        VERIFIED
    } else {
        UNDECIDED
    };
    Ok(Report {
        group: table.name.clone(),
        orders: reports,
        verdict: verdict.to_string(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BovdiViolation {
    pub order: u64,
    /// order of the power whose tuple fails
    pub power_order: u64,
    /// element order of the level whose sum is nonzero
    pub level: u64,
    pub sum: i64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BovdiReport {
    pub checked: usize,
    pub violations: Vec<BovdiViolation>,
}

/// For towers of prime power order `r^k`: every tuple of order `r^j` sums
/// to exactly zero over the classes of order `r^i`, for each `i < j`.
pub fn check_bovdi(table: &CharacterTable, towers: &[Tower]) -> Result<BovdiReport> {
    let mut report = BovdiReport::default();
    for tower in towers {
        let (r, _) = prime_power(tower.order()).ok_or(Error::InvalidOrder {
            order: tower.order(),
            reason: "not a prime power".into(),
        })?;
        for (&m, tuple) in tower.tuples() {
            let (_, j) = prime_power(m).expect("divisor of a prime power");
            for i in 0..j {
                let level = r.pow(i);
                let sum: i64 = tuple
                    .support()
                    .filter(|&(x, _)| table.element_order(x) == level)
                    .map(|(_, e)| e)
                    .sum();
                report.checked += 1;
                if sum != 0 {
                    report.violations.push(BovdiViolation {
                        order: tower.order(),
                        power_order: m,
                        level,
                        sum,
                    });
                }
            }
        }
    }
    Ok(report)
}
