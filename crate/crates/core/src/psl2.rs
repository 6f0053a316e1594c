//! Character tables of `PSL(2,q)` for odd `q = p^f >= 5`.
//!
//! Classes: the identity `1a`, the two classes `pc`, `pd` of elements of
//! order `p`, and the powers `a^l`, `b^m` of generators of the cyclic
//! subgroups of orders `(q-1)/2` and `(q+1)/2` (labels `a<l>`, `b<m>`),
//! each identified with its inverse.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;

use crate::arith::{gcd, is_prime, lcm, legendre, prime_divisors};
use crate::chartab::{BrauerBlock, Character, CharacterKind, CharacterTable, ConjugacyClass};
use crate::cyclo::CyclotomicNumber;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Psl2Parameters {
    pub p: u64,
    pub f: u32,
    pub q: u64,
    /// `q = epsilon mod 4`
    pub epsilon: i64,
}

impl Psl2Parameters {
    pub fn new(p: u64, f: u32) -> Result<Self> {
        if !is_prime(p) || p == 2 {
            return Err(Error::Psl2(format!("{p} is not an odd prime")));
        }
        if f == 0 {
            return Err(Error::Psl2("exponent f must be positive".into()));
        }
        let q = p
            .checked_pow(f)
            .filter(|&q| q < 1 << 20)
            .ok_or_else(|| Error::Psl2(format!("{p}^{f} is too large")))?;
        if q < 5 {
            return Err(Error::Psl2(format!("q = {q} is smaller than 5")));
        }
        let epsilon = if q % 4 == 1 { 1 } else { -1 };
        Ok(Self { p, f, q, epsilon })
    }

    /// From `q` itself, which must be an odd prime power.
    pub fn from_q(q: u64) -> Result<Self> {
        let ps = prime_divisors(q);
        if ps.len() != 1 {
            return Err(Error::Psl2(format!("{q} is not a prime power")));
        }
        let p = ps[0];
        let mut f = 0;
        let mut r = q;
        while r > 1 {
            r /= p;
            f += 1;
        }
        Self::new(p, f)
    }

    pub fn order_a(&self) -> u64 {
        (self.q - 1) / 2
    }

    pub fn order_b(&self) -> u64 {
        self.q.div_ceil(2)
    }

    pub fn group_order(&self) -> u64 {
        self.q * (self.q * self.q - 1) / 2
    }

    pub fn exponent(&self) -> u64 {
        lcm(self.p, lcm(self.order_a(), self.order_b()))
    }

    /// Index range of the `chi_i`.
    pub fn i_range(&self) -> std::ops::RangeInclusive<u64> {
        if self.epsilon == 1 {
            1..=(self.q - 5) / 4
        } else {
            1..=(self.q - 3) / 4
        }
    }

    /// Index range of the `theta_j`.
    pub fn j_range(&self) -> std::ops::RangeInclusive<u64> {
        if self.epsilon == 1 {
            1..=(self.q - 1) / 4
        } else {
            1..=(self.q - 3) / 4
        }
    }

    /// Exponents `l` of the classes `a^l`.
    pub fn l_range(&self) -> std::ops::RangeInclusive<u64> {
        self.j_range()
    }

    /// Exponents `m` of the classes `b^m`.
    pub fn m_range(&self) -> std::ops::RangeInclusive<u64> {
        if self.epsilon == 1 {
            1..=(self.q - 1) / 4
        } else {
            1..=(self.q + 1) / 4
        }
    }

    fn name(&self) -> String {
        format!("PSL(2,{})", self.q)
    }
}

/// `zeta_o^(k*l)` stored at the conductor `o / gcd(o, l)`.
fn power_root(o: u64, l: u64, k: i64) -> CyclotomicNumber {
    let g = gcd(o, l);
    CyclotomicNumber::root_of_unity(o / g, k * (l / g) as i64)
}

/// `x + x^-1` for `x = zeta_o^(k*l)`.
fn two_cos(o: u64, l: u64, k: i64) -> CyclotomicNumber {
    &power_root(o, l, k) + &power_root(o, l, -k)
}

/// `sqrt(epsilon q)` as a cyclotomic integer.
fn sqrt_eps_q(par: &Psl2Parameters) -> CyclotomicNumber {
    let p = par.p;
    if par.f.is_multiple_of(2) {
        CyclotomicNumber::from_integer(p.pow(par.f / 2) as i64)
    } else {
        let gauss = CyclotomicNumber::from_terms(
            p,
            (1..p).map(|a| (BigRational::from_integer(legendre(a as i64, p).into()), a as i64)),
        );
        gauss.scale(&BigRational::from_integer(BigInt::from(p.pow((par.f - 1) / 2))))
    }
}

struct Layout {
    classes: Vec<(String, u64)>,
    /// class index of `a^l` for `l` in `l_range`
    a: Vec<usize>,
    b: Vec<usize>,
}

const C: usize = 1;
const D: usize = 2;

fn layout(par: &Psl2Parameters) -> Layout {
    let (oa, ob) = (par.order_a(), par.order_b());
    let mut classes = vec![
        ("1a".to_string(), 1),
        ("pc".to_string(), par.p),
        ("pd".to_string(), par.p),
    ];
    let mut a = Vec::new();
    for l in par.l_range() {
        a.push(classes.len());
        classes.push((format!("a{l}"), oa / gcd(oa, l)));
    }
    let mut b = Vec::new();
    for m in par.m_range() {
        b.push(classes.len());
        classes.push((format!("b{m}"), ob / gcd(ob, m)));
    }
    Layout { classes, a, b }
}

/// Class of `g^r` for `g` in the cyclic group of order `o`, stored as
/// `labels[e-1]` for the canonical exponent `e <= o/2`.
fn cyclic_power(o: u64, e: u64, r: u64, labels: &[usize]) -> usize {
    let k = (e * r) % o;
    if k == 0 {
        0
    } else {
        labels[(k.min(o - k) - 1) as usize]
    }
}

fn power_maps(par: &Psl2Parameters, lay: &Layout) -> BTreeMap<u64, Vec<usize>> {
    let (oa, ob) = (par.order_a(), par.order_b());
    let mut maps = BTreeMap::new();
    for r in prime_divisors(par.exponent()) {
        let mut img = vec![0; lay.classes.len()];
        if r != par.p {
            // c^r is conjugate to c iff r is a square in F_q
            let square = par.f.is_multiple_of(2) || legendre(r as i64, par.p) == 1;
            img[C] = if square { C } else { D };
            img[D] = if square { D } else { C };
        }
        for (k, l) in par.l_range().enumerate() {
            img[lay.a[k]] = cyclic_power(oa, l, r, &lay.a);
        }
        for (k, m) in par.m_range().enumerate() {
            img[lay.b[k]] = cyclic_power(ob, m, r, &lay.b);
        }
        maps.insert(r, img);
    }
    maps
}

fn ordinary_characters(par: &Psl2Parameters, lay: &Layout) -> Result<Vec<Character>> {
    let q = par.q as i64;
    let eps = par.epsilon;
    let (oa, ob) = (par.order_a(), par.order_b());
    let n = lay.classes.len();
    let int = |k: i64| Some(CyclotomicNumber::from_integer(k));
    let build = |name: String, mut f: Box<dyn FnMut(usize) -> Option<CyclotomicNumber> + '_>| {
        let values = (0..n).map(&mut f).collect();
        Character::new(name, CharacterKind::Ordinary, values, 0)
    };
    let class_kind = |x: usize| -> (char, u64) {
        if x == 0 {
            ('1', 0)
        } else if x == C || x == D {
            ('p', 0)
        } else if let Some(k) = lay.a.iter().position(|&y| y == x) {
            ('a', k as u64 + 1)
        } else {
            ('b', lay.b.iter().position(|&y| y == x).unwrap() as u64 + 1)
        }
    };

    let mut out = vec![build("1".into(), Box::new(|_| int(1)))?];
    out.push(build(
        "psi".into(),
        Box::new(|x| match class_kind(x) {
            ('1', _) => int(q),
            ('p', _) => int(0),
            ('a', _) => int(1),
            _ => int(-1),
        }),
    )?);
    for i in par.i_range() {
        out.push(build(
            format!("chi{i}"),
            Box::new(move |x| match class_kind(x) {
                ('1', _) => int(q + 1),
                ('p', _) => int(1),
                ('a', l) => Some(two_cos(oa, l, i as i64)),
                _ => int(0),
            }),
        )?);
    }
    for j in par.j_range() {
        out.push(build(
            format!("theta{j}"),
            Box::new(move |x| match class_kind(x) {
                ('1', _) => int(q - 1),
                ('p', _) => int(-1),
                ('a', _) => int(0),
                (_, m) => Some(-two_cos(ob, m, j as i64)),
            }),
        )?);
    }
    let root = sqrt_eps_q(par);
    let half = BigRational::new(1.into(), 2.into());
    let plus = (&CyclotomicNumber::from_integer(eps) + &root).scale(&half);
    let minus = (&CyclotomicNumber::from_integer(eps) - &root).scale(&half);
    for (name, at_c, at_d) in [("eta1", &plus, &minus), ("eta2", &minus, &plus)] {
        out.push(build(
            name.into(),
            Box::new(|x| {
                let sign = |k: u64| if k.is_multiple_of(2) { 1 } else { -1 };
                match class_kind(x) {
                    ('1', _) => int((q + eps) / 2),
                    ('p', _) if x == C => Some(at_c.clone()),
                    ('p', _) => Some(at_d.clone()),
                    ('a', l) => int(if eps == 1 { sign(l) } else { 0 }),
                    // for q = 3 mod 4 the sign is (-1)^(m+1); (-1)^m is not orthogonal to 1
                    (_, m) => int(if eps == -1 { -sign(m) } else { 0 }),
                }
            }),
        )?);
    }
    Ok(out)
}

/// `|C(x)| = sum_chi |chi(x)|^2`.
fn centralizers(chars: &[Character], n: usize) -> Result<Vec<u64>> {
    (0..n)
        .map(|x| {
            let s: CyclotomicNumber = chars
                .iter()
                .map(|c| {
                    let v = c.value(x).expect("ordinary values are total");
                    v * &v.conj()
                })
                .sum();
            s.to_integer()
                .and_then(|k| k.to_u64())
                .ok_or_else(|| Error::Psl2(format!("column {x} has norm {s}")))
        })
        .collect()
}

/// The ordinary table of `PSL(2,q)`.
pub fn generate_ordinary(par: &Psl2Parameters) -> Result<CharacterTable> {
    build(par, false)
}

/// The Brauer characters in the defining characteristic for `f = 1`: the
/// symmetric powers `phi_{2l+1}` of the natural module, `l = 0..=(p-1)/2`.
pub fn generate_brauer_defining(par: &Psl2Parameters) -> Result<BrauerBlock> {
    let lay = layout(par);
    brauer_block(par, &lay)
}

fn brauer_block(par: &Psl2Parameters, lay: &Layout) -> Result<BrauerBlock> {
    if par.f != 1 {
        return Err(Error::Psl2(format!(
            "defining-characteristic brauer characters are only generated for q prime (q = {}^{})",
            par.p, par.f
        )));
    }
    symmetric_powers(par, lay)
}

/// `phi_1, phi_3, ..., phi_p` for any `f`. These are irreducible Brauer
/// characters in characteristic `p`; for `f = 1` they are all of them, for
/// `f >= 2` the block is partial and carries no decomposition matrix.
pub fn generate_symmetric_powers(par: &Psl2Parameters) -> Result<BrauerBlock> {
    symmetric_powers(par, &layout(par))
}

fn symmetric_powers(par: &Psl2Parameters, lay: &Layout) -> Result<BrauerBlock> {
    let (oa, ob) = (par.order_a(), par.order_b());
    let regular: Vec<usize> = (0..lay.classes.len()).filter(|&x| x != C && x != D).collect();
    let mut characters = Vec::new();
    for l in 0..=(par.p as i64 - 1) / 2 {
        let sum = |o: u64, e: u64| -> CyclotomicNumber { (-l..=l).map(|j| power_root(o, e, j)).sum() };
        let mut values = vec![None; lay.classes.len()];
        values[0] = Some(CyclotomicNumber::from_integer(2 * l + 1));
        for (k, e) in par.l_range().enumerate() {
            values[lay.a[k]] = Some(sum(oa, e));
        }
        for (k, e) in par.m_range().enumerate() {
            values[lay.b[k]] = Some(sum(ob, e));
        }
        characters.push(Character::new(
            format!("phi{}", 2 * l + 1),
            CharacterKind::Brauer { prime: par.p },
            values,
            0,
        )?);
    }
    Ok(BrauerBlock {
        prime: par.p,
        regular,
        characters,
        decomposition: None,
    })
}

/// The ordinary table, plus the defining-characteristic Brauer block when
/// `with_brauer` is set.
pub fn build(par: &Psl2Parameters, with_brauer: bool) -> Result<CharacterTable> {
    let block = if with_brauer {
        Some(generate_brauer_defining(par)?)
    } else {
        None
    };
    build_with_block(par, block)
}

/// The ordinary table together with a given Brauer block.
pub fn build_with_block(par: &Psl2Parameters, block: Option<BrauerBlock>) -> Result<CharacterTable> {
    let lay = layout(par);
    let ordinary = ordinary_characters(par, &lay)?;
    let cent = centralizers(&ordinary, lay.classes.len())?;
    let classes = lay
        .classes
        .iter()
        .zip(&cent)
        .map(|((id, o), &c)| ConjugacyClass {
            id: id.clone(),
            element_order: *o,
            centralizer_order: c,
        })
        .collect();
    let brauer = block.into_iter().collect();
    CharacterTable::new(
        par.name(),
        par.group_order(),
        par.exponent(),
        classes,
        power_maps(par, &lay),
        ordinary,
        brauer,
    )
}
