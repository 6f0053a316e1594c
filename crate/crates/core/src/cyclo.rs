//! Exact arithmetic in cyclotomic fields `Q(zeta_n)`.
//!
//! An element is stored in the power basis `1, z, ..., z^(phi(n)-1)` of
//! `Q[z]/(Phi_n(z))`. Conductors are never reduced automatically; two
//! elements are compared after embedding both into the field of the least
//! common multiple of their conductors.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{euler_phi, gcd, lcm, ramanujan_sum, units_mod};
use crate::error::{Error, Result};

fn phi_cache() -> &'static RwLock<HashMap<u64, Arc<Vec<BigInt>>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Vec<BigInt>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The `n`-th cyclotomic polynomial, lowest degree coefficient first.
///
/// Computed by exact division of `x^n - 1` by `Phi_d` for every proper
/// divisor `d` of `n`.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    cyclotomic_polynomial_shared(n).as_ref().clone()
}

fn cyclotomic_polynomial_shared(n: u64) -> Arc<Vec<BigInt>> {
    assert!(n >= 1, "cyclotomic polynomial of order zero");
    if let Some(p) = phi_cache().read().unwrap().get(&n) {
        return p.clone();
    }
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in crate::arith::divisors(n) {
        if d == n {
            continue;
        }
        let div = cyclotomic_polynomial_shared(d);
        num = divide_monic(&num, &div);
    }
    let poly = Arc::new(num);
    phi_cache().write().unwrap().insert(n, poly.clone());
    poly
}

/// Exact quotient of `num` by the monic polynomial `den` (remainder must vanish).
fn divide_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dn = den.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![BigInt::zero(); num.len() - dn];
    for k in (dn..num.len()).rev() {
        let c = rem[k].clone();
        if c.is_zero() {
            continue;
        }
        quot[k - dn] = c.clone();
        for (j, dj) in den.iter().enumerate() {
            rem[k - dn + j] -= &c * dj;
        }
    }
    debug_assert!(rem.iter().all(Zero::is_zero));
    quot
}

/// Reduces a polynomial in `z` modulo `Phi_n`, returning exactly `phi(n)` coefficients.
fn reduce(n: u64, mut poly: Vec<BigRational>) -> Vec<BigRational> {
    let phi_poly = cyclotomic_polynomial_shared(n);
    let deg = phi_poly.len() - 1;
    if poly.len() > deg {
        for k in (deg..poly.len()).rev() {
            if poly[k].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut poly[k]);
            for (j, pj) in phi_poly[..deg].iter().enumerate() {
                match pj.to_i64() {
                    Some(0) => {}
                    Some(1) => poly[k - deg + j] -= &c,
                    Some(-1) => poly[k - deg + j] += &c,
                    _ => poly[k - deg + j] -= &c * BigRational::from_integer(pj.clone()),
                }
            }
        }
    }
    poly.resize(deg, BigRational::zero());
    poly
}

/// An exact element of `Q(zeta_n)`.
#[derive(Clone)]
pub struct CyclotomicNumber {
    conductor: u64,
    coeffs: Vec<BigRational>,
}

impl CyclotomicNumber {
    pub fn zero(conductor: u64) -> Self {
        assert!(conductor >= 1);
        Self {
            conductor,
            coeffs: vec![BigRational::zero(); euler_phi(conductor) as usize],
        }
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_integer(k: i64) -> Self {
        Self::from_rational(BigRational::from_integer(k.into()))
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// `zeta_n^k` for any integer `k`.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        let e = k.rem_euclid(n as i64) as usize;
        let mut poly = vec![BigRational::zero(); e + 1];
        poly[e] = BigRational::one();
        Self {
            conductor: n,
            coeffs: reduce(n, poly),
        }
    }

    /// Builds `sum c * zeta_n^e` from arbitrary exponents.
    pub fn from_terms<I>(n: u64, terms: I) -> Self
    where
        I: IntoIterator<Item = (BigRational, i64)>,
    {
        let mut poly = vec![BigRational::zero(); n as usize];
        for (c, e) in terms {
            poly[e.rem_euclid(n as i64) as usize] += c;
        }
        Self {
            conductor: n,
            coeffs: reduce(n, poly),
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Power-basis coefficients, length `phi(conductor)`.
    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Nonzero power-basis terms as `(coefficient, exponent)`.
    pub fn terms(&self) -> Vec<(BigRational, u64)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.clone(), i as u64))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(Zero::is_zero)
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    /// Image in `Q(zeta_n)` under `zeta_m -> zeta_n^(n/m)`.
    pub fn embed(&self, n: u64) -> Result<Self> {
        if !n.is_multiple_of(self.conductor) {
            return Err(Error::NotDivisible {
                from: self.conductor,
                to: n,
            });
        }
        if n == self.conductor {
            return Ok(self.clone());
        }
        let step = (n / self.conductor) as usize;
        let mut poly = vec![BigRational::zero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            poly[i * step] = c.clone();
        }
        Ok(Self {
            conductor: n,
            coeffs: reduce(n, poly),
        })
    }

    fn embed_unchecked(&self, n: u64) -> Self {
        self.embed(n).expect("conductor divides target")
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let n = lcm(self.conductor, other.conductor);
        (self.embed_unchecked(n), other.embed_unchecked(n))
    }

    /// Applies the automorphism `zeta -> zeta^k`.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let n = self.conductor;
        let kk = k.rem_euclid(n as i64) as u64;
        if gcd(kk, n) != 1 && n != 1 {
            return Err(Error::NotCoprime { k, conductor: n });
        }
        if n <= 2 {
            return Ok(self.clone());
        }
        let mut poly = vec![BigRational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                poly[(i as u64 * kk % n) as usize] += c;
            }
        }
        Ok(Self {
            conductor: n,
            coeffs: reduce(n, poly),
        })
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is a unit")
    }

    /// Absolute trace `Tr_{Q(zeta_n)/Q}`, evaluated termwise with Ramanujan sums.
    pub fn trace_to_q(&self) -> BigRational {
        let n = self.conductor;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| c * BigRational::from_integer(ramanujan_sum(n, i as i64).into()))
            .fold(BigRational::zero(), |a, b| a + b)
    }

    /// `Tr_{Q(zeta_m)/Q}` of an element known to lie in `Q(zeta_m)`.
    pub fn trace_over(&self, m: u64) -> BigRational {
        let full = self.trace_to_q();
        full * BigRational::new(euler_phi(m).into(), euler_phi(self.conductor).into())
    }

    /// `Tr_{Q(zeta_m)/Q}(self * zeta_m^(-s))` for every `s` in `0..m`.
    ///
    /// `self` must lie in `Q(zeta_m)`; it may be stored at any conductor.
    pub fn twisted_traces(&self, m: u64) -> Vec<BigRational> {
        let l = lcm(self.conductor, m);
        let step = (l / self.conductor) as i64;
        let shift = (l / m) as i64;
        let ram: Vec<i64> = (0..l as i64).map(|e| ramanujan_sum(l, e)).collect();
        let scale = BigRational::new(euler_phi(m).into(), euler_phi(l).into());
        let terms = self.terms();
        (0..m as i64)
            .map(|s| {
                let sum = terms
                    .iter()
                    .map(|(c, i)| {
                        let e = (*i as i64 * step - s * shift).rem_euclid(l as i64);
                        c * BigRational::from_integer(ram[e as usize].into())
                    })
                    .fold(BigRational::zero(), |a, b| a + b);
                sum * &scale
            })
            .collect()
    }

    /// `Tr_{Q(zeta_m)/Q}(self * zeta_m^(-s))`; `self` must lie in `Q(zeta_m)`.
    pub fn twisted_trace(&self, m: u64, s: i64) -> BigRational {
        let l = lcm(self.conductor, m);
        let step = (l / self.conductor) as i64;
        let shift = (l / m) as i64;
        let sum = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| c * BigRational::from_integer(ramanujan_sum(l, i as i64 * step - s * shift).into()))
            .fold(BigRational::zero(), |a, b| a + b);
        sum * BigRational::new(euler_phi(m).into(), euler_phi(l).into())
    }

    /// `self * zeta_n^k`.
    pub fn mul_root(&self, n: u64, k: i64) -> Self {
        let l = lcm(self.conductor, n);
        let a = self.embed_unchecked(l);
        let shift = (k.rem_euclid(n as i64) as u64 * (l / n)) as usize;
        if shift == 0 {
            return a;
        }
        let mut poly = vec![BigRational::zero(); l as usize];
        for (i, c) in a.coeffs.into_iter().enumerate() {
            if !c.is_zero() {
                poly[(i + shift) % l as usize] = c;
            }
        }
        Self {
            conductor: l,
            coeffs: reduce(l, poly),
        }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        Self {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Whether the value lies in `Q(zeta_d)`, i.e. is fixed by every
    /// `zeta -> zeta^k` with `k = 1 mod gcd(d, conductor)`.
    pub fn lies_in_subfield(&self, d: u64) -> bool {
        let n = self.conductor;
        let d = gcd(d, n);
        if n <= 2 || d == n {
            return true;
        }
        // fixed by a generating set of the subgroup is enough
        let mut reached = std::collections::BTreeSet::from([1u64]);
        let mut gens = Vec::new();
        for k in units_mod(n).into_iter().filter(|k| k % d == 1 % d) {
            if reached.contains(&k) {
                continue;
            }
            if !matches!(self.galois(k as i64), Ok(g) if &g == self) {
                return false;
            }
            gens.push(k);
            let mut frontier: Vec<u64> = reached.iter().copied().collect();
            while let Some(x) = frontier.pop() {
                for g in &gens {
                    let y = x * g % n;
                    if reached.insert(y) {
                        frontier.push(y);
                    }
                }
            }
        }
        true
    }
}

impl PartialEq for CyclotomicNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = self.common(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.to_rational() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (c, e) in self.terms() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let base = if e == 0 {
                String::from("1")
            } else if e == 1 {
                format!("E({})", self.conductor)
            } else {
                format!("E({})^{}", self.conductor, e)
            };
            if abs.is_one() {
                write!(f, "{base}")?;
            } else if e == 0 {
                write!(f, "{abs}")?;
            } else {
                write!(f, "{abs}*{base}")?;
            }
        }
        Ok(())
    }
}

impl From<i64> for CyclotomicNumber {
    fn from(k: i64) -> Self {
        Self::from_integer(k)
    }
}

impl<'a> Add<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn add(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        let (a, b) = self.common(rhs);
        CyclotomicNumber {
            conductor: a.conductor,
            coeffs: a.coeffs.into_iter().zip(b.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

impl<'a> Sub<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn sub(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        self + &(-rhs)
    }
}

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a CyclotomicNumber> for &'a CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn mul(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
        if self.conductor == 1 {
            return rhs.scale(&self.coeffs[0]);
        }
        if rhs.conductor == 1 {
            return self.scale(&rhs.coeffs[0]);
        }
        let (a, b) = self.common(rhs);
        let len = a.coeffs.len() + b.coeffs.len() - 1;
        let mut poly = vec![BigRational::zero(); len];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    poly[i + j] += x * y;
                }
            }
        }
        CyclotomicNumber {
            conductor: a.conductor,
            coeffs: reduce(a.conductor, poly),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $m(self, rhs: &'a CyclotomicNumber) -> CyclotomicNumber {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -&self
    }
}

impl std::iter::Sum for CyclotomicNumber {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(CyclotomicNumber::zero(1), |a, b| &a + &b)
    }
}

/// Sums many elements whose conductors divide a fixed `n` with a single
/// reduction at the end.
pub struct Accumulator {
    conductor: u64,
    dense: Vec<BigRational>,
}

impl Accumulator {
    pub fn new(conductor: u64) -> Self {
        Self {
            conductor,
            dense: vec![BigRational::zero(); conductor as usize],
        }
    }

    /// Adds `scale * x`; the conductor of `x` must divide the accumulator's.
    pub fn add_scaled(&mut self, x: &CyclotomicNumber, scale: &BigRational) -> Result<()> {
        if !self.conductor.is_multiple_of(x.conductor) {
            return Err(Error::NotDivisible {
                from: x.conductor,
                to: self.conductor,
            });
        }
        let step = self.conductor / x.conductor;
        for (i, c) in x.coeffs.iter().enumerate() {
            if !c.is_zero() {
                self.dense[(i as u64 * step) as usize] += c * scale;
            }
        }
        Ok(())
    }

    pub fn finish(self) -> CyclotomicNumber {
        CyclotomicNumber {
            conductor: self.conductor,
            coeffs: reduce(self.conductor, self.dense),
        }
    }
}

/// Serialized form shared with the table format: `sum (num/den) * zeta_n^exp`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(untagged)]
pub enum CyclotomicDoc {
    Integer(i64),
    Terms {
        conductor: u64,
        terms: Vec<(i64, i64, i64)>,
    },
}

impl CyclotomicDoc {
    pub fn to_number(&self) -> Result<CyclotomicNumber> {
        match self {
            CyclotomicDoc::Integer(k) => Ok(CyclotomicNumber::from_integer(*k)),
            CyclotomicDoc::Terms { conductor, terms } => {
                if *conductor == 0 {
                    return Err(Error::Schema("conductor must be positive".into()));
                }
                let mut parsed = Vec::with_capacity(terms.len());
                for &(num, den, exp) in terms {
                    if den == 0 {
                        return Err(Error::Schema("zero denominator in cyclotomic term".into()));
                    }
                    parsed.push((BigRational::new(num.into(), den.into()), exp));
                }
                Ok(CyclotomicNumber::from_terms(*conductor, parsed))
            }
        }
    }

    pub fn from_number(x: &CyclotomicNumber) -> Result<Self> {
        if let Some(k) = x.to_integer().and_then(|k| k.to_i64()) {
            return Ok(CyclotomicDoc::Integer(k));
        }
        let too_big = || Error::Schema(format!("coefficient of {x} does not fit in 64 bits"));
        let terms = x
            .terms()
            .into_iter()
            .map(|(c, e)| {
                let num = c.numer().to_i64().ok_or_else(too_big)?;
                let den = c.denom().to_i64().ok_or_else(too_big)?;
                Ok((num, den, e as i64))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CyclotomicDoc::Terms {
            conductor: x.conductor(),
            terms,
        })
    }
}
