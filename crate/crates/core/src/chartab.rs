//! Ordinary character tables with optional Brauer tables and power maps.

use std::collections::{BTreeMap, HashMap, HashSet};

use indexmap::IndexMap;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::arith::{factorize, gcd, is_prime, prime_divisors};
use crate::cyclo::{Accumulator, CyclotomicDoc, CyclotomicNumber};
use crate::engine::PartialAugmentationTuple;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub id: String,
    pub element_order: u64,
    pub centralizer_order: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CharacterKind {
    Ordinary,
    Brauer { prime: u64 },
}

/// A class function given by its values on (some of) the classes.
///
/// Ordinary characters carry a value on every class; Brauer characters only
/// on the p-regular ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub name: String,
    pub kind: CharacterKind,
    values: Vec<Option<CyclotomicNumber>>,
    degree: u64,
}

impl Character {
    pub fn new(
        name: impl Into<String>,
        kind: CharacterKind,
        values: Vec<Option<CyclotomicNumber>>,
        identity: usize,
    ) -> Result<Self> {
        let name = name.into();
        let degree = values
            .get(identity)
            .and_then(|v| v.as_ref())
            .and_then(|v| v.to_integer())
            .filter(|d| d.is_positive())
            .and_then(|d| d.to_u64())
            .ok_or_else(|| Error::Schema(format!("character {name}: degree is not a positive integer")))?;
        Ok(Self {
            name,
            kind,
            values,
            degree,
        })
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn value(&self, class: usize) -> Option<&CyclotomicNumber> {
        self.values.get(class).and_then(Option::as_ref)
    }

    pub fn values(&self) -> &[Option<CyclotomicNumber>] {
        &self.values
    }

    pub fn brauer_prime(&self) -> Option<u64> {
        match self.kind {
            CharacterKind::Brauer { prime } => Some(prime),
            CharacterKind::Ordinary => None,
        }
    }

    /// Same character with every value twisted by `zeta -> zeta^k`.
    pub fn galois_twist(&self, k: i64) -> Result<Self> {
        let values = self
            .values
            .iter()
            .map(|v| v.as_ref().map(|x| x.galois(k)).transpose())
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            name: format!("{}^{k}", self.name),
            kind: self.kind,
            values,
            degree: self.degree,
        })
    }
}

/// The irreducible Brauer characters of a table for one prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerBlock {
    pub prime: u64,
    pub regular: Vec<usize>,
    pub characters: Vec<Character>,
    pub decomposition: Option<Vec<Vec<i64>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    pub name: String,
    pub order: u64,
    pub exponent: u64,
    pub classes: Vec<ConjugacyClass>,
    /// prime -> image class index for every class
    pub power_maps: BTreeMap<u64, Vec<usize>>,
    pub ordinary: Vec<Character>,
    pub brauer: Vec<BrauerBlock>,
    identity: usize,
    index: HashMap<String, usize>,
}

/// One failed entry of `chi_i(x) = sum_j d_ij phi_j(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionFailure {
    pub character: String,
    pub class: String,
    pub expected: CyclotomicNumber,
    pub actual: CyclotomicNumber,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionReport {
    pub prime: u64,
    pub checked: usize,
    pub failures: Vec<DecompositionFailure>,
}

impl DecompositionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl CharacterTable {
    /// Assembles and eagerly validates a table.
    pub fn new(
        name: impl Into<String>,
        order: u64,
        exponent: u64,
        classes: Vec<ConjugacyClass>,
        power_maps: BTreeMap<u64, Vec<usize>>,
        ordinary: Vec<Character>,
        brauer: Vec<BrauerBlock>,
    ) -> Result<Self> {
        let name = name.into();
        if order == 0 || exponent == 0 {
            return Err(Error::Schema("order and exponent must be positive".into()));
        }
        if !order.is_multiple_of(exponent) {
            return Err(Error::Schema(format!(
                "exponent {exponent} does not divide order {order}"
            )));
        }
        let mut index = HashMap::new();
        for (i, c) in classes.iter().enumerate() {
            if index.insert(c.id.clone(), i).is_some() {
                return Err(Error::Schema(format!("duplicate class id {}", c.id)));
            }
        }
        let identities: Vec<usize> = (0..classes.len()).filter(|&i| classes[i].element_order == 1).collect();
        let identity = match identities.as_slice() {
            [i] => *i,
            _ => {
                return Err(Error::Schema(format!(
                    "expected exactly one class of element order 1, found {}",
                    identities.len()
                )))
            }
        };
        let table = Self {
            name,
            order,
            exponent,
            classes,
            power_maps,
            ordinary,
            brauer,
            identity,
            index,
        };
        table.validate()?;
        Ok(table)
    }

    fn validate(&self) -> Result<()> {
        self.validate_classes()?;
        self.validate_power_maps()?;
        self.validate_characters()?;
        self.validate_orthogonality()?;
        self.validate_brauer()?;
        Ok(())
    }

    fn validate_classes(&self) -> Result<()> {
        let mut total = 0u64;
        for c in &self.classes {
            if c.element_order == 0 || !self.exponent.is_multiple_of(c.element_order) {
                return Err(Error::Schema(format!(
                    "class {}: element order {} does not divide exponent {}",
                    c.id, c.element_order, self.exponent
                )));
            }
            if c.centralizer_order == 0 || !self.order.is_multiple_of(c.centralizer_order) {
                return Err(Error::Schema(format!(
                    "class {}: centralizer order {} does not divide group order {}",
                    c.id, c.centralizer_order, self.order
                )));
            }
            if c.centralizer_order % c.element_order != 0 {
                return Err(Error::Schema(format!(
                    "class {}: element order {} does not divide centralizer order {}",
                    c.id, c.element_order, c.centralizer_order
                )));
            }
            total += self.order / c.centralizer_order;
        }
        if total != self.order {
            return Err(Error::Schema(format!(
                "class sizes sum to {total}, not the group order {}",
                self.order
            )));
        }
        Ok(())
    }

    fn validate_power_maps(&self) -> Result<()> {
        for p in prime_divisors(self.exponent) {
            if !self.power_maps.contains_key(&p) {
                return Err(Error::MissingPowerMap(p));
            }
        }
        for (&p, map) in &self.power_maps {
            if !is_prime(p) {
                return Err(Error::Schema(format!("power map key {p} is not prime")));
            }
            if map.len() != self.classes.len() {
                return Err(Error::Schema(format!("power map for {p} does not cover every class")));
            }
            for (i, &j) in map.iter().enumerate() {
                let from = &self.classes[i];
                let to = self
                    .classes
                    .get(j)
                    .ok_or_else(|| Error::Schema(format!("power map for {p}: bad image index {j}")))?;
                let want = from.element_order / gcd(from.element_order, p);
                if to.element_order != want {
                    return Err(Error::PowerMap {
                        prime: p,
                        from: from.id.clone(),
                        from_order: from.element_order,
                        to: to.id.clone(),
                        to_order: to.element_order,
                    });
                }
            }
        }
        Ok(())
    }

    fn check_values(&self, chi: &Character, support: &[usize]) -> Result<()> {
        let allowed: HashSet<usize> = support.iter().copied().collect();
        for (i, v) in chi.values.iter().enumerate() {
            let class = &self.classes[i];
            match v {
                None if allowed.contains(&i) => {
                    return Err(Error::Schema(format!(
                        "character {}: no value on class {}",
                        chi.name, class.id
                    )))
                }
                Some(_) if !allowed.contains(&i) => {
                    return Err(Error::Schema(format!(
                        "character {}: value on p-singular class {}",
                        chi.name, class.id
                    )))
                }
                Some(x) => {
                    if !self.exponent.is_multiple_of(x.conductor()) {
                        return Err(Error::Schema(format!(
                            "character {}: conductor {} at class {} does not divide exponent {}",
                            chi.name,
                            x.conductor(),
                            class.id,
                            self.exponent
                        )));
                    }
                    if !class.element_order.is_multiple_of(x.conductor()) && !x.lies_in_subfield(class.element_order) {
                        return Err(Error::Schema(format!(
                            "character {}: value at class {} is not in Q(zeta_{})",
                            chi.name, class.id, class.element_order
                        )));
                    }
                }
                None => {}
            }
        }
        if chi.values.len() != self.classes.len() {
            return Err(Error::Schema(format!("character {}: wrong number of values", chi.name)));
        }
        Ok(())
    }

    fn validate_characters(&self) -> Result<()> {
        if self.ordinary.len() != self.classes.len() {
            return Err(Error::Schema(format!(
                "{} ordinary characters for {} classes",
                self.ordinary.len(),
                self.classes.len()
            )));
        }
        let all: Vec<usize> = (0..self.classes.len()).collect();
        for chi in &self.ordinary {
            if chi.kind != CharacterKind::Ordinary {
                return Err(Error::Schema(format!("character {} is not ordinary", chi.name)));
            }
            self.check_values(chi, &all)?;
        }
        Ok(())
    }

    fn validate_orthogonality(&self) -> Result<()> {
        let conj: Vec<Vec<CyclotomicNumber>> = self
            .ordinary
            .iter()
            .map(|chi| chi.values.iter().map(|v| v.as_ref().unwrap().conj()).collect())
            .collect();
        let weights: Vec<BigRational> = self
            .classes
            .iter()
            .map(|c| BigRational::new(BigInt::one(), c.centralizer_order.into()))
            .collect();
        for (i, chi) in self.ordinary.iter().enumerate() {
            for (j, other) in self.ordinary.iter().enumerate().skip(i) {
                let mut acc = Accumulator::new(self.exponent);
                for (x, w) in weights.iter().enumerate() {
                    let term = chi.values[x].as_ref().unwrap() * &conj[j][x];
                    acc.add_scaled(&term, w)?;
                }
                let ip = acc.finish();
                let want = CyclotomicNumber::from_integer(i64::from(i == j));
                if ip != want {
                    return Err(Error::Orthogonality {
                        first: chi.name.clone(),
                        second: other.name.clone(),
                        value: ip.to_string(),
                    });
                }
            }
        }
        Ok(())
    }

    fn validate_brauer(&self) -> Result<()> {
        let mut seen = HashSet::new();
        for block in &self.brauer {
            let p = block.prime;
            if !is_prime(p) || !self.order.is_multiple_of(p) {
                return Err(Error::Schema(format!(
                    "brauer prime {p} is not a prime divisor of the order"
                )));
            }
            if !seen.insert(p) {
                return Err(Error::Schema(format!("duplicate brauer table for p = {p}")));
            }
            let mut regular = block.regular.clone();
            regular.sort_unstable();
            let want: Vec<usize> = (0..self.classes.len())
                .filter(|&i| !self.classes[i].element_order.is_multiple_of(p))
                .collect();
            if regular != want {
                return Err(Error::Schema(format!(
                    "brauer table for p = {p}: regular classes must be exactly the classes of order prime to {p}"
                )));
            }
            for phi in &block.characters {
                if phi.kind != (CharacterKind::Brauer { prime: p }) {
                    return Err(Error::Schema(format!(
                        "character {} is not a {p}-brauer character",
                        phi.name
                    )));
                }
                self.check_values(phi, &block.regular)?;
            }
        }
        Ok(())
    }

    pub fn identity_class(&self) -> usize {
        self.identity
    }

    pub fn class_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn class_id(&self, class: usize) -> &str {
        &self.classes[class].id
    }

    pub fn class_size(&self, class: usize) -> u64 {
        self.order / self.classes[class].centralizer_order
    }

    pub fn is_central(&self, class: usize) -> bool {
        self.class_size(class) == 1
    }

    pub fn element_order(&self, class: usize) -> u64 {
        self.classes[class].element_order
    }

    /// Distinct element orders, ascending.
    pub fn element_orders(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self.classes.iter().map(|c| c.element_order).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn brauer_block(&self, prime: u64) -> Option<&BrauerBlock> {
        self.brauer.iter().find(|b| b.prime == prime)
    }

    /// Ordinary character by name, then Brauer characters in block order.
    pub fn character(&self, name: &str, kind: CharacterKind) -> Option<&Character> {
        match kind {
            CharacterKind::Ordinary => self.ordinary.iter().find(|c| c.name == name),
            CharacterKind::Brauer { prime } => self.brauer_block(prime)?.characters.iter().find(|c| c.name == name),
        }
    }

    /// Class of `x^d`, composing the stored prime power maps.
    pub fn class_of_power(&self, class: usize, d: u64) -> Result<usize> {
        if d == 0 {
            return Err(Error::InvalidOrder {
                order: 0,
                reason: "power exponent must be positive".into(),
            });
        }
        let n = self.element_order(class);
        let d = d % n;
        if d == 0 {
            return Ok(self.identity);
        }
        // x^d = x^(d + t n): pick a representative whose primes all have maps
        let usable = |k: u64| factorize(k).iter().all(|(p, _)| self.power_maps.contains_key(p));
        let Some(k) = (0..1000u64).map(|t| d + t * n).find(|&k| usable(k)) else {
            return self.galois_power(class, d);
        };
        let mut x = class;
        for (p, e) in factorize(k) {
            let map = &self.power_maps[&p];
            for _ in 0..e {
                x = map[x];
            }
        }
        Ok(x)
    }

    /// Class of `x^k` for `k` prime to `o(x)`, read off the Galois action:
    /// the unique column equal to `sigma_k` of the column of `x`.
    fn galois_power(&self, class: usize, k: u64) -> Result<usize> {
        let n = self.element_order(class);
        let g = gcd(k, n);
        let missing = || {
            let p = factorize(k)
                .into_iter()
                .map(|(p, _)| p)
                .find(|p| !self.power_maps.contains_key(p));
            Error::MissingPowerMap(p.unwrap_or(k))
        };
        if g != 1 {
            return Err(missing());
        }
        let column = self
            .ordinary
            .iter()
            .map(|chi| chi.values[class].as_ref().unwrap().galois(k as i64))
            .collect::<Result<Vec<_>>>()?;
        let mut hits = (0..self.classes.len()).filter(|&y| {
            self.element_order(y) == n
                && self
                    .ordinary
                    .iter()
                    .zip(&column)
                    .all(|(chi, v)| chi.values[y].as_ref() == Some(v))
        });
        match (hits.next(), hits.next()) {
            (Some(y), None) => Ok(y),
            _ => Err(missing()),
        }
    }

    /// `sum_x eps_x * psi(x)` for a tuple of partial augmentations.
    pub fn character_value_of_tuple(
        &self,
        psi: &Character,
        tuple: &PartialAugmentationTuple,
    ) -> Result<CyclotomicNumber> {
        let mut acc = Accumulator::new(self.exponent);
        for (x, eps) in tuple.support() {
            let v = psi.value(x).ok_or_else(|| Error::SingularSupport {
                character: psi.name.clone(),
                prime: psi.brauer_prime().unwrap_or(0),
                class: self.class_id(x).to_string(),
            })?;
            acc.add_scaled(v, &BigRational::from_integer(eps.into()))?;
        }
        Ok(acc.finish())
    }

    /// Checks `chi_i(x) = sum_j d_ij phi_j(x)` on every p-regular class.
    pub fn validate_decomposition(&self, block: &BrauerBlock) -> Result<DecompositionReport> {
        let d = block
            .decomposition
            .as_ref()
            .ok_or(Error::MissingDecomposition(block.prime))?;
        let (want_rows, want_cols) = (self.ordinary.len(), block.characters.len());
        let cols = d.first().map_or(0, Vec::len);
        if d.len() != want_rows || d.iter().any(|row| row.len() != want_cols) {
            return Err(Error::DecompositionShape {
                rows: d.len(),
                cols,
                want_rows,
                want_cols,
            });
        }
        let mut failures = Vec::new();
        let mut checked = 0;
        for (chi, row) in self.ordinary.iter().zip(d) {
            for &x in &block.regular {
                let mut acc = Accumulator::new(self.exponent);
                for (phi, &dij) in block.characters.iter().zip(row) {
                    if dij != 0 {
                        acc.add_scaled(phi.value(x).unwrap(), &BigRational::from_integer(dij.into()))?;
                    }
                }
                let actual = acc.finish();
                let expected = chi.value(x).unwrap().clone();
                checked += 1;
                if actual != expected {
                    failures.push(DecompositionFailure {
                        character: chi.name.clone(),
                        class: self.class_id(x).to_string(),
                        expected,
                        actual,
                    });
                }
            }
        }
        Ok(DecompositionReport {
            prime: block.prime,
            checked,
            failures,
        })
    }

    /// Second orthogonality: `sum_chi chi(x) conj(chi(y)) = delta_xy |C(x)|`.
    pub fn column_orthogonality_holds(&self) -> bool {
        let n = self.classes.len();
        for x in 0..n {
            for y in x..n {
                let mut acc = Accumulator::new(self.exponent);
                for chi in &self.ordinary {
                    let t = chi.value(x).unwrap() * &chi.value(y).unwrap().conj();
                    acc.add_scaled(&t, &BigRational::one()).unwrap();
                }
                let want = if x == y {
                    self.classes[x].centralizer_order as i64
                } else {
                    0
                };
                if acc.finish() != CyclotomicNumber::from_integer(want) {
                    return false;
                }
            }
        }
        true
    }

    pub fn to_document(&self) -> Result<TableDocument> {
        let ids: Vec<String> = self.classes.iter().map(|c| c.id.clone()).collect();
        let char_doc = |chi: &Character| -> Result<CharacterDoc> {
            let mut values = IndexMap::new();
            for (i, v) in chi.values.iter().enumerate() {
                if let Some(v) = v {
                    values.insert(ids[i].clone(), CyclotomicDoc::from_number(v)?);
                }
            }
            Ok(CharacterDoc {
                name: chi.name.clone(),
                values,
            })
        };
        Ok(TableDocument {
            name: self.name.clone(),
            order: self.order,
            exponent: self.exponent,
            classes: self
                .classes
                .iter()
                .map(|c| ClassDoc {
                    id: c.id.clone(),
                    element_order: c.element_order,
                    centralizer_order: c.centralizer_order,
                })
                .collect(),
            power_maps: self
                .power_maps
                .iter()
                .map(|(p, map)| {
                    let m = map
                        .iter()
                        .enumerate()
                        .map(|(i, &j)| (ids[i].clone(), ids[j].clone()))
                        .collect();
                    (p.to_string(), m)
                })
                .collect(),
            ordinary: self.ordinary.iter().map(char_doc).collect::<Result<_>>()?,
            brauer: self
                .brauer
                .iter()
                .map(|b| {
                    Ok(BrauerDoc {
                        prime: b.prime,
                        regular_classes: b.regular.iter().map(|&i| ids[i].clone()).collect(),
                        characters: b.characters.iter().map(char_doc).collect::<Result<_>>()?,
                        decomposition: b.decomposition.clone(),
                    })
                })
                .collect::<Result<_>>()?,
        })
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(&self.to_document()?)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassDoc {
    pub id: String,
    pub element_order: u64,
    pub centralizer_order: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterDoc {
    pub name: String,
    pub values: IndexMap<String, CyclotomicDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BrauerDoc {
    pub prime: u64,
    pub regular_classes: Vec<String>,
    pub characters: Vec<CharacterDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<Vec<Vec<i64>>>,
}

/// On-disk JSON layout of a character table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableDocument {
    pub name: String,
    pub order: u64,
    pub exponent: u64,
    pub classes: Vec<ClassDoc>,
    pub power_maps: IndexMap<String, IndexMap<String, String>>,
    pub ordinary: Vec<CharacterDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub brauer: Vec<BrauerDoc>,
}

impl TableDocument {
    pub fn into_table(self) -> Result<CharacterTable> {
        let classes: Vec<ConjugacyClass> = self
            .classes
            .iter()
            .map(|c| ConjugacyClass {
                id: c.id.clone(),
                element_order: c.element_order,
                centralizer_order: c.centralizer_order,
            })
            .collect();
        let index: HashMap<&str, usize> = classes.iter().enumerate().map(|(i, c)| (c.id.as_str(), i)).collect();
        let lookup = |id: &str| {
            index
                .get(id)
                .copied()
                .ok_or_else(|| Error::UnknownClass(id.to_string()))
        };
        let identity = classes
            .iter()
            .position(|c| c.element_order == 1)
            .ok_or_else(|| Error::Schema("no identity class".into()))?;

        let mut power_maps = BTreeMap::new();
        for (key, map) in &self.power_maps {
            let p: u64 = key
                .parse()
                .map_err(|_| Error::Schema(format!("power map key {key:?} is not an integer")))?;
            let mut images = vec![usize::MAX; classes.len()];
            for (from, to) in map {
                images[lookup(from)?] = lookup(to)?;
            }
            if let Some(i) = images.iter().position(|&j| j == usize::MAX) {
                return Err(Error::Schema(format!(
                    "power map for {p} has no image for class {}",
                    classes[i].id
                )));
            }
            power_maps.insert(p, images);
        }

        let read_char = |doc: &CharacterDoc, kind: CharacterKind| -> Result<Character> {
            let mut values = vec![None; classes.len()];
            for (id, v) in &doc.values {
                let i = lookup(id)?;
                if values[i].is_some() {
                    return Err(Error::Schema(format!("character {}: class {id} given twice", doc.name)));
                }
                values[i] = Some(v.to_number()?);
            }
            Character::new(doc.name.clone(), kind, values, identity)
        };

        let ordinary = self
            .ordinary
            .iter()
            .map(|c| read_char(c, CharacterKind::Ordinary))
            .collect::<Result<Vec<_>>>()?;
        let brauer = self
            .brauer
            .iter()
            .map(|b| {
                let kind = CharacterKind::Brauer { prime: b.prime };
                Ok(BrauerBlock {
                    prime: b.prime,
                    regular: b.regular_classes.iter().map(|id| lookup(id)).collect::<Result<_>>()?,
                    characters: b.characters.iter().map(|c| read_char(c, kind)).collect::<Result<_>>()?,
                    decomposition: b.decomposition.clone(),
                })
            })
            .collect::<Result<Vec<_>>>()?;

        CharacterTable::new(
            self.name,
            self.order,
            self.exponent,
            classes,
            power_maps,
            ordinary,
            brauer,
        )
    }
}

/// Parses and validates a table from its JSON text.
pub fn parse_table(text: &str) -> Result<CharacterTable> {
    let doc: TableDocument = serde_json::from_str(text)?;
    doc.into_table()
}

/// Bundled tables.
pub mod fixtures {
    use super::*;

    pub const S5_JSON: &str = include_str!("../fixtures/s5.json");

    /// The symmetric group of degree 5 with its mod-5 Brauer table.
    pub fn s5() -> CharacterTable {
        parse_table(S5_JSON).expect("bundled S5 table is valid")
    }

    pub fn by_name(name: &str) -> Option<CharacterTable> {
        match name.to_ascii_lowercase().as_str() {
            "s5" => Some(s5()),
            _ => None,
        }
    }

    pub const NAMES: &[&str] = &["s5"];
}
