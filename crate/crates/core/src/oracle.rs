//! Slow reference implementations used to cross-check the fast paths.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::arith::{euler_phi, lcm, units_mod};
use crate::chartab::{Character, CharacterTable};
use crate::cyclo::CyclotomicNumber;
use crate::engine::{ConstraintSystem, Tower};
use crate::error::{Error, Result};
use crate::solver::VariableBox;

/// `Tr_{Q(zeta_c)/Q}(a)` as the literal sum of Galois conjugates, `c` the
/// stored conductor of `a`.
pub fn trace_bruteforce(a: &CyclotomicNumber) -> BigRational {
    let c = a.conductor();
    let mut sum = CyclotomicNumber::zero(c);
    for k in units_mod(c) {
        sum = &sum + &a.galois(k as i64).expect("unit");
    }
    sum.to_rational().expect("a full trace is rational")
}

/// `Tr_{Q(zeta_m)/Q}(a)` for `a` in `Q(zeta_m)`, by brute force over
/// `Q(zeta_l)`, `l = lcm(m, conductor)`, divided by the degree `[Q(zeta_l):Q(zeta_m)]`.
pub fn trace_over_bruteforce(a: &CyclotomicNumber, m: u64) -> Result<BigRational> {
    let l = lcm(m, a.conductor());
    let full = trace_bruteforce(&a.embed(l)?);
    Ok(full * BigRational::new(euler_phi(m).into(), euler_phi(l).into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditFailure {
    pub character: String,
    pub class: String,
    pub detail: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    /// (character, class) pairs examined
    pub checked: usize,
    pub failures: Vec<AuditFailure>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Eigenvalue multiplicities of `psi` at group element `g`, by the discrete
/// Fourier transform over all powers `g^j` read off the power maps.
fn multiplicities_by_dft(table: &CharacterTable, psi: &Character, g: usize) -> Result<Option<Vec<BigRational>>> {
    let n = table.element_order(g);
    let mut values = Vec::with_capacity(n as usize);
    for j in 0..n {
        let x = if j == 0 {
            table.identity_class()
        } else {
            table.class_of_power(g, j)?
        };
        match psi.value(x) {
            Some(v) => values.push(v.clone()),
            None => return Ok(None),
        }
    }
    let l = values.iter().fold(n, |acc, v| lcm(acc, v.conductor()));
    let dense: Vec<Vec<(BigRational, usize)>> = values
        .iter()
        .map(|v| {
            v.embed(l)
                .map(|e| e.terms().into_iter().map(|(c, i)| (c, i as usize)).collect())
        })
        .collect::<Result<_>>()?;
    let l = l as usize;
    let mut mus = Vec::with_capacity(n as usize);
    for t in 0..n as usize {
        let mut poly = vec![BigRational::zero(); l];
        for (j, terms) in dense.iter().enumerate() {
            // zeta_n^(-tj) is zeta_l^shift
            let shift = (l - (t * j) % n as usize * (l / n as usize)) % l;
            for (c, i) in terms {
                poly[(i + shift) % l] += c;
            }
        }
        let sum = CyclotomicNumber::from_terms(l as u64, poly.into_iter().enumerate().map(|(i, c)| (c, i as i64)));
        let r = sum.to_rational().ok_or_else(|| {
            Error::Schema(format!(
                "multiplicity of {} at {} is irrational",
                psi.name,
                table.class_id(g)
            ))
        })?;
        mus.push(r / BigRational::from_integer(BigInt::from(n)));
    }
    Ok(Some(mus))
}

/// Checks every group element against every character of the table.
///
/// For each class `g` and character `psi` (Brauer characters only at
/// `p`-regular `g`):
/// * `psi(g^k) = sigma_k(psi(g))` for `k` prime to `o(g)`,
/// * the multiplicities from the divisor-trace formula are nonnegative
///   integers summing to `psi(1)`,
/// * and they agree with a direct Fourier transform over the powers of `g`.
pub fn mu_group_element_audit(table: &CharacterTable) -> Result<AuditReport> {
    let mut report = AuditReport::default();
    let characters: Vec<&Character> = table
        .ordinary
        .iter()
        .chain(table.brauer.iter().flat_map(|b| b.characters.iter()))
        .collect();
    for g in 0..table.classes.len() {
        let n = table.element_order(g);
        if n == 1 {
            continue;
        }
        let tower = Tower::group_element(table, g)?;
        for psi in &characters {
            if psi.brauer_prime().is_some_and(|p| n.is_multiple_of(p)) {
                continue;
            }
            report.checked += 1;
            let mut fail = |detail: String| {
                report.failures.push(AuditFailure {
                    character: psi.name.clone(),
                    class: table.class_id(g).to_string(),
                    detail,
                })
            };
            let value = psi.value(g).expect("regular class has a value");
            for k in units_mod(n) {
                let x = table.class_of_power(g, k)?;
                let expected = value.galois(k as i64)?;
                match psi.value(x) {
                    Some(v) if *v == expected => {}
                    other => fail(format!(
                        "value at power {k} ({}) is {:?}, galois image is {expected}",
                        table.class_id(x),
                        other
                    )),
                }
            }
            let mut total = BigRational::zero();
            let mut mus = Vec::with_capacity(n as usize);
            for t in 0..n {
                let mu = crate::engine::multiplicity(table, psi, &tower, t)?;
                if !mu.is_integer() || mu.is_negative() {
                    fail(format!("mu at zeta_{n}^{t} is {mu}"));
                }
                total += &mu;
                mus.push(mu);
            }
            if total != BigRational::from_integer(psi.degree().into()) {
                fail(format!("multiplicities sum to {total}, degree {}", psi.degree()));
            }
            if let Some(direct) = multiplicities_by_dft(table, psi, g)? {
                if direct != mus {
                    fail(format!(
                        "trace formula gives {:?}, direct transform gives {:?}",
                        mus.iter().map(ToString::to_string).collect::<Vec<_>>(),
                        direct.iter().map(ToString::to_string).collect::<Vec<_>>()
                    ));
                }
            }
        }
    }
    Ok(report)
}

/// Every point of `bounds` satisfying all rows of `system`.
///
/// When the system carries the augmentation row the last coordinate is
/// solved from it; every row is still checked at every candidate. Fails
/// when the scanned volume exceeds `cap`.
pub fn box_scan(system: &ConstraintSystem, bounds: &VariableBox, cap: u128) -> Result<Vec<Vec<i64>>> {
    let n = bounds.len();
    let has_augmentation = system
        .rows
        .iter()
        .any(|r| r.coeffs.iter().all(|&c| c == 1) && r.lower == Some(0) && r.upper == Some(0) && r.constant == -1);
    let free = if has_augmentation && n > 0 { n - 1 } else { n };
    let scanned = VariableBox::new(bounds.lower[..free].to_vec(), bounds.upper[..free].to_vec());
    let volume = scanned.volume().unwrap_or(u128::MAX);
    if volume > cap {
        return Err(Error::BoxTooLarge { volume, cap });
    }
    let mut out = Vec::new();
    if bounds.lower.iter().zip(&bounds.upper).any(|(l, u)| l > u) {
        return Ok(out);
    }
    let mut point = bounds.lower.clone();
    loop {
        if free < n {
            point[n - 1] = 1 - point[..free].iter().sum::<i64>();
        }
        if bounds.contains(&point) && system.is_satisfied(&point) {
            out.push(point.clone());
        }
        // odometer over the free coordinates
        let mut i = 0;
        loop {
            if i == free {
                out.sort();
                return Ok(out);
            }
            if point[i] < bounds.upper[i] {
                point[i] += 1;
                break;
            }
            point[i] = bounds.lower[i];
            i += 1;
        }
    }
}
