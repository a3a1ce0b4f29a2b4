//! Finite linear combinations of partitions with polynomial coefficients.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::partition::Partition;
use crate::poly::{Int, Monomial, Poly, RingRef};

#[derive(Clone, PartialEq, Eq)]
pub struct ModuleElement {
    ring: RingRef,
    terms: BTreeMap<Partition, Poly>,
}

impl ModuleElement {
    pub fn zero(ring: &RingRef) -> Self {
        ModuleElement {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// The basis vector of `lam` with coefficient 1.
    pub fn basis(ring: &RingRef, lam: Partition) -> Self {
        let mut v = Self::zero(ring);
        v.add_term(lam, Poly::one(ring));
        v
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Poly)> {
        self.terms.iter()
    }

    /// The pairing `⟨self, lam⟩`.
    pub fn coefficient(&self, lam: &Partition) -> Poly {
        self.terms
            .get(lam)
            .cloned()
            .unwrap_or_else(|| Poly::zero(&self.ring))
    }

    pub fn max_column(&self) -> usize {
        self.terms.keys().map(|p| p.first_part()).max().unwrap_or(0)
    }

    pub fn add_term(&mut self, lam: Partition, p: Poly) {
        if p.is_zero() {
            return;
        }
        match self.terms.entry(lam) {
            Entry::Vacant(e) => {
                e.insert(p);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &p;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &ModuleElement) {
        for (lam, p) in &other.terms {
            self.add_term(lam.clone(), p.clone());
        }
    }

    pub fn add_owned(&mut self, other: ModuleElement) {
        for (lam, p) in other.terms {
            self.add_term(lam, p);
        }
    }

    pub fn sub(&self, other: &ModuleElement) -> ModuleElement {
        let mut out = self.clone();
        for (lam, p) in &other.terms {
            out.add_term(lam.clone(), -p);
        }
        out
    }

    pub fn scale_poly(&self, c: &Poly) -> ModuleElement {
        let mut out = ModuleElement::zero(&self.ring);
        for (lam, p) in &self.terms {
            out.add_term(lam.clone(), p * c);
        }
        out
    }

    pub fn mul_monomial(&self, m: Monomial, c: &Int) -> ModuleElement {
        let mut out = ModuleElement::zero(&self.ring);
        for (lam, p) in &self.terms {
            out.add_term(lam.clone(), p.mul_monomial(m, c));
        }
        out
    }

    pub fn into_terms(self) -> BTreeMap<Partition, Poly> {
        self.terms
    }

    pub fn from_terms(ring: &RingRef, terms: impl IntoIterator<Item = (Partition, Poly)>) -> Self {
        let mut v = Self::zero(ring);
        for (lam, p) in terms {
            v.add_term(lam, p);
        }
        v
    }

    /// First partition where the two elements differ, with both coefficients.
    pub fn first_difference(&self, other: &ModuleElement) -> Option<(Partition, Poly, Poly)> {
        let keys: std::collections::BTreeSet<&Partition> =
            self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().find_map(|lam| {
            let a = self.coefficient(lam);
            let b = other.coefficient(lam);
            (a != b).then(|| (lam.clone(), a, b))
        })
    }

    pub fn to_json(&self) -> Vec<ModuleTermJson> {
        self.terms
            .iter()
            .map(|(lam, p)| ModuleTermJson {
                partition: lam.to_string(),
                polynomial: p.to_string(),
            })
            .collect()
    }

    pub fn from_json(ring: &RingRef, j: &[ModuleTermJson]) -> Result<Self> {
        let mut v = Self::zero(ring);
        for t in j {
            v.add_term(t.partition.parse()?, Poly::parse(ring, &t.polynomial)?);
        }
        Ok(v)
    }
}

impl fmt::Display for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(lam, p)| format!("({p})·[{lam}]"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for ModuleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// JSON form: one entry per partition, coefficient in canonical text.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleTermJson {
    pub partition: String,
    pub polynomial: String,
}
