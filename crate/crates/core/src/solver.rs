//! Exact enumeration of the integer points of a [`ConstraintSystem`].

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::chartab::CharacterTable;
use crate::engine::{ConstraintSystem, Row};

/// Inclusive integer bounds per variable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariableBox {
    pub lower: Vec<i64>,
    pub upper: Vec<i64>,
}

impl VariableBox {
    pub fn new(lower: Vec<i64>, upper: Vec<i64>) -> Self {
        assert_eq!(lower.len(), upper.len());
        Self { lower, upper }
    }

    /// `[-b, b]` in every coordinate.
    pub fn symmetric(bounds: &[i64]) -> Self {
        Self {
            lower: bounds.iter().map(|b| -b).collect(),
            upper: bounds.to_vec(),
        }
    }

    pub fn len(&self) -> usize {
        self.lower.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lower.is_empty()
    }

    pub fn contains(&self, point: &[i64]) -> bool {
        point.len() == self.len()
            && point
                .iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(x, (l, u))| l <= x && x <= u)
    }

    /// Number of lattice points, `None` on overflow.
    pub fn volume(&self) -> Option<u128> {
        self.lower.iter().zip(&self.upper).try_fold(1u128, |acc, (l, u)| {
            let w = if u < l { 0 } else { (u - l + 1) as u128 };
            acc.checked_mul(w)
        })
    }
}

/// `|eps_x| <= |x^G|` for every variable of `system`.
///
/// With second orthogonality `eps_x = (1/|C(x)|) sum_chi chi(u) conj(chi(x))`
/// and `|chi(u)| <= chi(1)`, the bound is `(1/|C(x)|) sum_chi chi(1) |chi(x)|
/// <= |G|/|C(x)|` by Cauchy-Schwarz.
pub fn variable_bounds(table: &CharacterTable, system: &ConstraintSystem) -> VariableBox {
    let b: Vec<i64> = system.variables.iter().map(|&x| table.class_size(x) as i64).collect();
    VariableBox::symmetric(&b)
}

#[derive(Clone)]
struct State {
    lo: Vec<i64>,
    hi: Vec<i64>,
}

fn div_floor(a: i128, b: i128) -> i128 {
    Integer::div_floor(&a, &b)
}

fn div_ceil(a: i128, b: i128) -> i128 {
    -Integer::div_floor(&-a, &b)
}

/// Smallest `x >= lo` with `x = r mod m`.
fn next_congruent(lo: i128, r: i128, m: i128) -> i128 {
    lo + (r - lo).rem_euclid(m)
}

/// Largest `x <= hi` with `x = r mod m`.
fn prev_congruent(hi: i128, r: i128, m: i128) -> i128 {
    hi - (hi - r).rem_euclid(m)
}

impl State {
    fn fixed(&self, i: usize) -> bool {
        self.lo[i] == self.hi[i]
    }

    /// Tightens with one row; `false` when the row cannot be met.
    fn tighten(&mut self, row: &Row, changed: &mut bool) -> bool {
        let mut min = row.constant as i128;
        let mut max = row.constant as i128;
        let mut free = None;
        let mut n_free = 0;
        for (i, &c) in row.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let (a, b) = (c as i128 * self.lo[i] as i128, c as i128 * self.hi[i] as i128);
            min += a.min(b);
            max += a.max(b);
            if !self.fixed(i) {
                n_free += 1;
                free = Some(i);
            }
        }
        let lower = row.lower.map(i128::from);
        let upper = row.upper.map(i128::from);
        if lower.is_some_and(|l| max < l) || upper.is_some_and(|u| min > u) {
            return false;
        }
        if n_free == 0 {
            return row.modulus.is_none_or(|m| min.rem_euclid(m as i128) == 0);
        }

        for (i, &c) in row.coeffs.iter().enumerate() {
            if c == 0 || self.fixed(i) {
                continue;
            }
            let c = c as i128;
            let (a, b) = (c * self.lo[i] as i128, c * self.hi[i] as i128);
            let rest_min = min - a.min(b);
            let rest_max = max - a.max(b);
            // c * x in [lower - rest_max, upper - rest_min]
            let mut lo = self.lo[i] as i128;
            let mut hi = self.hi[i] as i128;
            if let Some(l) = lower {
                let t = l - rest_max;
                if c > 0 {
                    lo = lo.max(div_ceil(t, c));
                } else {
                    hi = hi.min(div_floor(t, c));
                }
            }
            if let Some(u) = upper {
                let t = u - rest_min;
                if c > 0 {
                    hi = hi.min(div_floor(t, c));
                } else {
                    lo = lo.max(div_ceil(t, c));
                }
            }
            if lo > hi {
                return false;
            }
            if lo != self.lo[i] as i128 || hi != self.hi[i] as i128 {
                self.lo[i] = lo as i64;
                self.hi[i] = hi as i64;
                *changed = true;
            }
        }

        if let (Some(m), 1, Some(i)) = (row.modulus, n_free, free) {
            // c x + rest = 0 mod m with everything else fixed
            let m = m as i128;
            let c = row.coeffs[i] as i128;
            let rest: i128 = row.constant as i128
                + row
                    .coeffs
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(j, &a)| a as i128 * self.lo[j] as i128)
                    .sum::<i128>();
            let g = c.gcd(&m);
            let rhs = (-rest).rem_euclid(m);
            if rhs % g != 0 {
                return false;
            }
            let m2 = m / g;
            let r = if m2 == 1 {
                0
            } else {
                let inv = crate::arith::inv_mod(((c / g).rem_euclid(m2)) as i64, m2 as u64)
                    .expect("reduced coefficient is a unit") as i128;
                (rhs / g * inv).rem_euclid(m2)
            };
            let lo = next_congruent(self.lo[i] as i128, r, m2);
            let hi = prev_congruent(self.hi[i] as i128, r, m2);
            if lo > hi {
                return false;
            }
            if lo != self.lo[i] as i128 || hi != self.hi[i] as i128 {
                self.lo[i] = lo as i64;
                self.hi[i] = hi as i64;
                *changed = true;
            }
        }
        true
    }

    fn propagate(&mut self, rows: &[Row]) -> bool {
        loop {
            let mut changed = false;
            for row in rows {
                if !self.tighten(row, &mut changed) {
                    return false;
                }
            }
            if !changed {
                return true;
            }
        }
    }
}

fn search(state: State, rows: &[Row], order: &[usize], out: &mut Vec<Vec<i64>>) {
    let mut state = state;
    if !state.propagate(rows) {
        return;
    }
    let Some(&i) = order.iter().find(|&&i| !state.fixed(i)) else {
        if rows.iter().all(|r| r.is_satisfied(&state.lo)) {
            out.push(state.lo);
        }
        return;
    };
    for v in state.lo[i]..=state.hi[i] {
        let mut next = state.clone();
        next.lo[i] = v;
        next.hi[i] = v;
        search(next, rows, order, out);
    }
}

/// Every integer point of `bounds` that satisfies all rows, sorted
/// lexicographically.
pub fn solve(system: &ConstraintSystem, bounds: &VariableBox) -> Vec<Vec<i64>> {
    let n = system.variables.len();
    assert_eq!(bounds.len(), n, "box does not match the system");
    if bounds.lower.iter().zip(&bounds.upper).any(|(l, u)| l > u) {
        return Vec::new();
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| (bounds.upper[i] - bounds.lower[i], system.variable_ids[i].clone()));
    let mut out = Vec::new();
    let state = State {
        lo: bounds.lower.clone(),
        hi: bounds.upper.clone(),
    };
    search(state, &system.rows, &order, &mut out);
    out.sort();
    out.dedup();
    out
}
