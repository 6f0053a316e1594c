//! Small integer number theory used throughout the crate.

pub use num_integer::{gcd, lcm};

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n > 0, "divisors of zero");
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Prime factorisation as `(prime, exponent)` pairs, ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Distinct prime divisors of `n`, ascending.
pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == [(n, 1)]
}

/// Returns `(r, k)` when `n = r^k` for a prime `r` and `k >= 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [(r, k)] => Some((*r, *k)),
        _ => None,
    }
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n).into_iter().fold(n, |acc, (p, _)| acc / p * (p - 1))
}

pub fn mobius(n: u64) -> i64 {
    let f = factorize(n);
    if f.iter().any(|&(_, k)| k > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Ramanujan's sum: the trace from `Q(zeta_n)` to `Q` of `zeta_n^k`.
pub fn ramanujan_sum(n: u64, k: i64) -> i64 {
    let k = k.rem_euclid(n as i64) as u64;
    let g = gcd(k, n);
    let m = n / g;
    mobius(m) * (euler_phi(n) / euler_phi(m)) as i64
}

/// Units of `Z/nZ` as representatives in `0..n` (`{0}` for `n = 1`).
pub fn units_mod(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![0];
    }
    (1..n).filter(|&k| gcd(k, n) == 1).collect()
}

/// Legendre symbol `(a / p)` for an odd prime `p`.
pub fn legendre(a: i64, p: u64) -> i64 {
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return 0;
    }
    let e = pow_mod(a, (p - 1) / 2, p);
    if e == 1 {
        1
    } else {
        -1
    }
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut b = base as u128 % m128;
    let mut acc = 1u128 % m128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn inv_mod(a: i64, m: u64) -> Option<u64> {
    let m = m as i64;
    let (mut r0, mut r1) = (a.rem_euclid(m), m);
    let (mut s0, mut s1) = (1i64, 0i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    (r0 == 1).then(|| s0.rem_euclid(m) as u64)
}
