//! Constraint rows on the partial augmentations of a unit of order `n`.
//!
//! For a character `psi`, a unit `u` of order `n` and `xi = zeta_n^t`, the
//! eigenvalue multiplicity splits as
//!
//! ```text
//! mu(xi, u, psi) = a(xi, u, psi) + sum_x eps_x(u) * b(xi, x, psi)
//! ```
//!
//! where `b` only depends on the table and `a` on the partial augmentations
//! of the proper powers of `u`, which the tower supplies. Every row is
//! scaled by `n` so all coefficients are integers.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{divisors, prime_divisors, prime_power};
use crate::chartab::{Character, CharacterTable};
use crate::cyclo::CyclotomicNumber;
use crate::engine::tower::{PartialAugmentationTuple, Tower};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RowKind {
    /// `0 <= mu(zeta_n^residue, u, character) <= degree`, integral.
    Multiplicity {
        character: String,
        brauer_prime: Option<u64>,
        residue: u64,
        degree: u64,
    },
    Augmentation,
    Congruence {
        modulus: u64,
    },
}

/// `lower <= constant + sum coeffs[i] * x[i] <= upper`, and the same value
/// is `0 mod modulus`; absent bounds are unconstrained.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Row {
    pub coeffs: Vec<i64>,
    pub constant: i64,
    pub lower: Option<i64>,
    pub upper: Option<i64>,
    pub modulus: Option<i64>,
    pub kind: RowKind,
}

impl Row {
    pub fn value(&self, point: &[i64]) -> i128 {
        self.coeffs
            .iter()
            .zip(point)
            .map(|(&c, &x)| c as i128 * x as i128)
            .sum::<i128>()
            + self.constant as i128
    }

    pub fn is_satisfied(&self, point: &[i64]) -> bool {
        let v = self.value(point);
        self.lower.is_none_or(|l| v >= l as i128)
            && self.upper.is_none_or(|u| v <= u as i128)
            && self.modulus.is_none_or(|m| v.rem_euclid(m as i128) == 0)
    }

    fn key(&self) -> RowKey {
        (self.coeffs.clone(), self.constant, self.lower, self.upper, self.modulus)
    }
}

/// A row without its label, for comparing systems.
pub type RowKey = (Vec<i64>, i64, Option<i64>, Option<i64>, Option<i64>);

/// Integer rows over the partial augmentations of the allowed classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstraintSystem {
    pub order: u64,
    /// class indices, in table order
    pub variables: Vec<usize>,
    pub variable_ids: Vec<String>,
    pub rows: Vec<Row>,
}

impl ConstraintSystem {
    pub fn is_satisfied(&self, point: &[i64]) -> bool {
        self.rows.iter().all(|r| r.is_satisfied(point))
    }

    /// Row lookup ignoring the bookkeeping label.
    pub fn row_set(&self) -> HashSet<RowKey> {
        self.rows.iter().map(Row::key).collect()
    }
}

/// Classes on which a unit of order `n` may have nonzero partial
/// augmentation: element order dividing `n`, and no central class unless it
/// has order exactly `n`.
pub fn allowed_classes(table: &CharacterTable, n: u64) -> Vec<usize> {
    (0..table.classes.len())
        .filter(|&x| {
            let o = table.element_order(x);
            n.is_multiple_of(o) && (!table.is_central(x) || o == n)
        })
        .collect()
}

/// Congruences on sums of partial augmentations over element-order levels.
///
/// For `n = r^k` every level `r^m` with `0 < m < k` sums to `0 mod r`. For
/// any other `n` and each prime `r | n`, the classes of order `r` sum to
/// `0 mod r`.
pub fn congruence_rows(table: &CharacterTable, n: u64, variables: &[usize]) -> Vec<Row> {
    let level_row = |order: u64, r: u64| -> Option<Row> {
        let coeffs: Vec<i64> = variables
            .iter()
            .map(|&x| i64::from(table.element_order(x) == order))
            .collect();
        coeffs.iter().any(|&c| c != 0).then_some(Row {
            coeffs,
            constant: 0,
            lower: None,
            upper: None,
            modulus: Some(r as i64),
            kind: RowKind::Congruence { modulus: r },
        })
    };
    match prime_power(n) {
        Some((r, k)) => (1..k).filter_map(|m| level_row(r.pow(m), r)).collect(),
        None => prime_divisors(n).into_iter().filter_map(|r| level_row(r, r)).collect(),
    }
}

/// `Tr_{Q(zeta_m)/Q}(psi(y) * zeta_m^(-s))` for one character and class, all `s`.
#[derive(Clone, Debug)]
struct TraceTable {
    /// `[character][class]`, present when `psi(y)` is defined and `o(y) | m`
    values: Vec<Vec<Option<Vec<i64>>>>,
}

fn to_i64(r: &BigRational, what: impl FnOnce() -> String) -> Result<i64> {
    if !r.is_integer() {
        return Err(Error::Schema(format!(
            "{} is not an algebraic integer trace ({r})",
            what()
        )));
    }
    r.to_integer()
        .to_i64()
        .ok_or_else(|| Error::Schema(format!("{} overflows 64 bits", what())))
}

impl TraceTable {
    fn compute(table: &CharacterTable, characters: &[&Character], m: u64) -> Result<Self> {
        let mut values = Vec::with_capacity(characters.len());
        for psi in characters {
            let mut row = Vec::with_capacity(table.classes.len());
            for y in 0..table.classes.len() {
                let entry = match psi.value(y) {
                    Some(v) if m.is_multiple_of(v.conductor()) || v.lies_in_subfield(m) => Some(
                        v.twisted_traces(m)
                            .iter()
                            .map(|t| to_i64(t, || format!("trace of {}({})", psi.name, table.class_id(y))))
                            .collect::<Result<Vec<_>>>()?,
                    ),
                    _ => None,
                };
                row.push(entry);
            }
            values.push(row);
        }
        Ok(Self { values })
    }
}

/// Builds constraint systems for one table, caching the trace tables.
pub struct SystemBuilder<'t> {
    table: &'t CharacterTable,
    characters: Vec<&'t Character>,
    traces: BTreeMap<u64, TraceTable>,
}

impl<'t> SystemBuilder<'t> {
    pub fn new(table: &'t CharacterTable) -> Self {
        let characters = table
            .ordinary
            .iter()
            .chain(table.brauer.iter().flat_map(|b| b.characters.iter()))
            .collect();
        Self {
            table,
            characters,
            traces: BTreeMap::new(),
        }
    }

    pub fn table(&self) -> &'t CharacterTable {
        self.table
    }

    /// Computes the trace tables needed for units of order `n`.
    pub fn prepare(&mut self, n: u64) -> Result<()> {
        for m in divisors(n).into_iter().skip(1) {
            if !self.traces.contains_key(&m) {
                let t = TraceTable::compute(self.table, &self.characters, m)?;
                self.traces.insert(m, t);
            }
        }
        Ok(())
    }

    fn trace(&self, ci: usize, y: usize, m: u64, s: u64) -> Result<i64> {
        let table = self.traces.get(&m).ok_or(Error::InvalidOrder {
            order: m,
            reason: "trace table not prepared".into(),
        })?;
        let psi = self.characters[ci];
        table.values[ci][y]
            .as_ref()
            .map(|v| v[s as usize])
            .ok_or_else(|| match (psi.brauer_prime(), psi.value(y)) {
                (Some(prime), None) => Error::SingularSupport {
                    character: psi.name.clone(),
                    prime,
                    class: self.table.class_id(y).to_string(),
                },
                _ => Error::InvalidOrder {
                    order: m,
                    reason: format!("{}({}) does not lie in Q(zeta_{m})", psi.name, self.table.class_id(y)),
                },
            })
    }

    /// Rows for a unit of order `n` whose proper powers have the partial
    /// augmentations in `lower` (keyed by the order of the power).
    ///
    /// `prepare(n)` must have been called.
    pub fn build(
        &self,
        n: u64,
        lower: &BTreeMap<u64, PartialAugmentationTuple>,
        variables: &[usize],
        brauer: &BTreeSet<u64>,
    ) -> Result<ConstraintSystem> {
        for &p in brauer {
            if n.is_multiple_of(p) {
                return Err(Error::PrimeDividesOrder { prime: p, order: n });
            }
            if self.table.brauer_block(p).is_none() {
                return Err(Error::MissingBrauerBlock(p));
            }
        }
        let proper: Vec<u64> = divisors(n).into_iter().filter(|&m| m > 1 && m < n).collect();
        for &m in &proper {
            if !lower.contains_key(&m) {
                return Err(Error::IncompleteTower { order: n, missing: m });
            }
        }

        let mut rows = Vec::new();
        let mut seen = HashSet::new();
        for (ci, psi) in self.characters.iter().enumerate() {
            if let Some(p) = psi.brauer_prime() {
                if !brauer.contains(&p) {
                    continue;
                }
            }
            let degree = psi.degree() as i64;
            for t in 0..n {
                let mut constant = degree;
                for &m in &proper {
                    for (y, eps) in lower[&m].support() {
                        constant += eps * self.trace(ci, y, m, t % m)?;
                    }
                }
                let coeffs = variables
                    .iter()
                    .map(|&x| self.trace(ci, x, n, t))
                    .collect::<Result<Vec<_>>>()?;
                let row = Row {
                    coeffs,
                    constant,
                    lower: Some(0),
                    upper: Some(degree * n as i64),
                    modulus: Some(n as i64),
                    kind: RowKind::Multiplicity {
                        character: psi.name.clone(),
                        brauer_prime: psi.brauer_prime(),
                        residue: t,
                        degree: psi.degree(),
                    },
                };
                if seen.insert(row.key()) {
                    rows.push(row);
                }
            }
        }
        rows.push(Row {
            coeffs: vec![1; variables.len()],
            constant: -1,
            lower: Some(0),
            upper: Some(0),
            modulus: None,
            kind: RowKind::Augmentation,
        });
        rows.extend(congruence_rows(self.table, n, variables));

        Ok(ConstraintSystem {
            order: n,
            variables: variables.to_vec(),
            variable_ids: variables.iter().map(|&x| self.table.class_id(x).to_string()).collect(),
            rows,
        })
    }
}

/// The system for the top tuple of `tower`, given all of its proper powers.
pub fn build_system(table: &CharacterTable, tower: &Tower, brauer: &BTreeSet<u64>) -> Result<ConstraintSystem> {
    let n = tower.order();
    let mut builder = SystemBuilder::new(table);
    builder.prepare(n)?;
    let lower = tower
        .tuples()
        .iter()
        .filter(|(&m, _)| m != n)
        .map(|(&m, t)| (m, t.clone()))
        .collect();
    builder.build(n, &lower, &allowed_classes(table, n), brauer)
}

fn check_brauer_order(psi: &Character, n: u64) -> Result<()> {
    match psi.brauer_prime() {
        Some(p) if n.is_multiple_of(p) => Err(Error::PrimeDividesOrder { prime: p, order: n }),
        _ => Ok(()),
    }
}

/// `Tr_{Q(zeta_m)/Q}(value * zeta_m^(-s))`, requiring `value` in `Q(zeta_m)`.
fn twisted_trace(value: &CyclotomicNumber, m: u64, s: u64) -> Result<BigRational> {
    let c = value.conductor();
    if !m.is_multiple_of(c) && !value.lies_in_subfield(m) {
        return Err(Error::InvalidOrder {
            order: m,
            reason: format!("value {value} does not lie in Q(zeta_{m})"),
        });
    }
    Ok(value.twisted_trace(m, s as i64))
}

/// `b(zeta_n^t, x, psi) = (1/n) Tr_{Q(zeta_n)/Q}(psi(x) zeta_n^(-t))`.
pub fn coeff_b(table: &CharacterTable, psi: &Character, x: usize, n: u64, t: u64) -> Result<BigRational> {
    check_brauer_order(psi, n)?;
    let v = psi.value(x).ok_or_else(|| Error::SingularSupport {
        character: psi.name.clone(),
        prime: psi.brauer_prime().unwrap_or(0),
        class: table.class_id(x).to_string(),
    })?;
    Ok(twisted_trace(v, n, t % n)? / BigRational::from_integer(BigInt::from(n)))
}

/// `a(zeta_n^t, u, psi) = (1/n) sum_{d | n, d > 1} Tr_{Q(zeta^d)/Q}(psi(u^d) zeta^(-td))`.
pub fn coeff_a(table: &CharacterTable, psi: &Character, tower: &Tower, t: u64) -> Result<BigRational> {
    let n = tower.order();
    check_brauer_order(psi, n)?;
    let mut sum = BigRational::zero();
    for d in divisors(n).into_iter().skip(1) {
        let m = n / d;
        let value = if m == 1 {
            CyclotomicNumber::from_integer(psi.degree() as i64)
        } else {
            let tuple = tower.tuple(m).ok_or(Error::IncompleteTower { order: n, missing: m })?;
            table.character_value_of_tuple(psi, tuple)?
        };
        sum += twisted_trace(&value, m, t % m)?;
    }
    Ok(sum / BigRational::from_integer(BigInt::from(n)))
}

/// `mu(zeta_n^t, u, psi)` for the top of `tower`.
pub fn multiplicity(table: &CharacterTable, psi: &Character, tower: &Tower, t: u64) -> Result<BigRational> {
    let mut mu = coeff_a(table, psi, tower, t)?;
    for (x, eps) in tower.top().support() {
        mu += coeff_b(table, psi, x, tower.order(), t)? * BigRational::from_integer(eps.into());
    }
    Ok(mu)
}

/// Which Brauer tables may be used for units of order `n`.
pub fn usable_brauer_primes(table: &CharacterTable, n: u64) -> BTreeSet<u64> {
    table
        .brauer
        .iter()
        .map(|b| b.prime)
        .filter(|p| !n.is_multiple_of(*p))
        .collect()
}
