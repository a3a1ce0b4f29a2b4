use std::sync::Arc;

use crate::error::{Error, Result};

/// Maximum number of variables in a ring; exponents are packed one byte each
/// into a `u128`.
pub const MAX_VARS: usize = 16;

/// Hard ceiling on any total degree, imposed by the byte packing.
pub const PACKED_DEGREE_LIMIT: u32 = 255;

/// Degree cap of an alphabet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Cap {
    Finite(u32),
    /// No truncation. Products exceeding the packing limit panic instead of
    /// being dropped.
    Unbounded,
}

impl Cap {
    pub fn finite(self) -> Option<u32> {
        match self {
            Cap::Finite(d) => Some(d),
            Cap::Unbounded => None,
        }
    }

    fn limit(self) -> u32 {
        match self {
            Cap::Finite(d) => d.min(PACKED_DEGREE_LIMIT),
            Cap::Unbounded => PACKED_DEGREE_LIMIT,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    pub name: String,
    pub size: usize,
    pub cap: Cap,
    /// Scalars print as `b`, indexed alphabets as `x1`, `x2`, ...
    pub indexed: bool,
    pub(crate) offset: usize,
    pub(crate) mask: u128,
}

impl Alphabet {
    pub fn offset(&self) -> usize {
        self.offset
    }

    pub(crate) fn limit(&self) -> u32 {
        self.cap.limit()
    }
}

/// A variable: position in the packed exponent vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Var {
    pub(crate) index: u8,
    pub(crate) alphabet: u8,
}

impl Var {
    pub fn index(self) -> usize {
        self.index as usize
    }

    pub fn alphabet(self) -> usize {
        self.alphabet as usize
    }

    pub(crate) fn unit(self) -> u128 {
        1u128 << (8 * self.index as u32)
    }
}

/// The variable layout and truncation caps shared by a family of polynomials.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    alphabets: Vec<Alphabet>,
    nvars: usize,
}

pub type RingRef = Arc<Ring>;

const ONES: u128 = 0x0101_0101_0101_0101_0101_0101_0101_0101;

impl Ring {
    pub fn builder() -> RingBuilder {
        RingBuilder::default()
    }

    pub fn alphabets(&self) -> &[Alphabet] {
        &self.alphabets
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn alphabet_index(&self, name: &str) -> Result<usize> {
        self.alphabets
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::UnknownAlphabet(name.to_string()))
    }

    pub fn alphabet(&self, name: &str) -> Result<&Alphabet> {
        Ok(&self.alphabets[self.alphabet_index(name)?])
    }

    pub fn has_alphabet(&self, name: &str) -> bool {
        self.alphabets.iter().any(|a| a.name == name)
    }

    /// The `i`-th (1-indexed) variable of alphabet `name`.
    pub fn var(&self, name: &str, i: usize) -> Result<Var> {
        let ai = self.alphabet_index(name)?;
        let a = &self.alphabets[ai];
        if i == 0 || i > a.size {
            return Err(Error::InvalidSpec(format!(
                "alphabet `{name}` has {} variables, asked for number {i}",
                a.size
            )));
        }
        Ok(Var {
            index: (a.offset + i - 1) as u8,
            alphabet: ai as u8,
        })
    }

    /// The single variable of a scalar alphabet.
    pub fn scalar(&self, name: &str) -> Result<Var> {
        self.var(name, 1)
    }

    /// All variables of alphabet `name`, in order.
    pub fn vars(&self, name: &str) -> Result<Vec<Var>> {
        let a = self.alphabet(name)?;
        (1..=a.size).map(|i| self.var(name, i)).collect()
    }

    pub fn var_at(&self, index: usize) -> Var {
        let ai = self
            .alphabets
            .iter()
            .position(|a| index >= a.offset && index < a.offset + a.size)
            .expect("variable index out of range");
        Var {
            index: index as u8,
            alphabet: ai as u8,
        }
    }

    pub fn var_name(&self, v: Var) -> String {
        let a = &self.alphabets[v.alphabet()];
        if a.indexed {
            format!("{}{}", a.name, v.index() - a.offset + 1)
        } else {
            a.name.clone()
        }
    }

    pub fn var_names(&self) -> Vec<String> {
        (0..self.nvars).map(|i| self.var_name(self.var_at(i))).collect()
    }

    /// Total degree of the packed monomial in alphabet `ai`.
    #[inline]
    pub(crate) fn degree_in(&self, ai: usize, m: u128) -> u32 {
        // byte-sum via multiplication; exact because every alphabet degree
        // stays below 256
        ((m & self.alphabets[ai].mask).wrapping_mul(ONES) >> 120) as u32
    }

    #[inline]
    pub(crate) fn degrees(&self, m: u128) -> [u32; MAX_VARS] {
        let mut out = [0u32; MAX_VARS];
        for (ai, d) in out.iter_mut().enumerate().take(self.alphabets.len()) {
            *d = self.degree_in(ai, m);
        }
        out
    }

    /// Whether `a·b` survives truncation; panics when an unbounded alphabet
    /// would overflow the packing.
    #[inline]
    pub(crate) fn product_fits(&self, da: &[u32; MAX_VARS], db: &[u32; MAX_VARS]) -> bool {
        for (ai, a) in self.alphabets.iter().enumerate() {
            let d = da[ai] + db[ai];
            if d > a.limit() {
                if a.cap == Cap::Unbounded {
                    panic!("degree in unbounded alphabet `{}` exceeds {PACKED_DEGREE_LIMIT}", a.name);
                }
                return false;
            }
        }
        true
    }

    #[inline]
    pub(crate) fn fits(&self, m: u128) -> bool {
        let zero = [0u32; MAX_VARS];
        self.product_fits(&self.degrees(m), &zero)
    }

    pub(crate) fn exponents(&self, m: u128) -> Vec<u32> {
        (0..self.nvars).map(|i| ((m >> (8 * i)) & 0xff) as u32).collect()
    }

    pub(crate) fn pack(&self, exps: &[u32]) -> Option<u128> {
        if exps.len() != self.nvars || exps.iter().any(|&e| e > PACKED_DEGREE_LIMIT) {
            return None;
        }
        let mut m = 0u128;
        for (i, &e) in exps.iter().enumerate() {
            m |= (e as u128) << (8 * i);
        }
        // every alphabet degree must fit a byte for the SWAR degree sum
        for a in &self.alphabets {
            let d: u32 = exps[a.offset..a.offset + a.size].iter().sum();
            if d > PACKED_DEGREE_LIMIT {
                return None;
            }
        }
        Some(m)
    }

    /// Same layout, different caps.
    pub fn with_caps(&self, caps: &[(&str, Cap)]) -> Result<RingRef> {
        let mut b = RingBuilder::default();
        for a in &self.alphabets {
            let cap = caps
                .iter()
                .find(|(n, _)| *n == a.name)
                .map(|&(_, c)| c)
                .unwrap_or(a.cap);
            b = if a.indexed {
                b.indexed(&a.name, a.size, cap)
            } else {
                b.scalar(&a.name, cap)
            };
        }
        b.build()
    }
}

#[derive(Default)]
pub struct RingBuilder {
    alphabets: Vec<(String, usize, Cap, bool)>,
}

impl RingBuilder {
    /// A one-variable alphabet printed without index (β as `b`, `q`, ϰ as `k`).
    pub fn scalar(mut self, name: &str, cap: Cap) -> Self {
        self.alphabets.push((name.to_string(), 1, cap, false));
        self
    }

    pub fn indexed(mut self, name: &str, size: usize, cap: Cap) -> Self {
        self.alphabets.push((name.to_string(), size, cap, true));
        self
    }

    pub fn build(self) -> Result<RingRef> {
        let total: usize = self.alphabets.iter().map(|a| a.1).sum();
        if total > MAX_VARS {
            return Err(Error::TooManyVariables(total));
        }
        let mut alphabets = Vec::new();
        let mut offset = 0;
        for (name, size, cap, indexed) in self.alphabets {
            if alphabets.iter().any(|a: &Alphabet| a.name == name) {
                return Err(Error::DuplicateAlphabet(name));
            }
            let mut mask = 0u128;
            for i in offset..offset + size {
                mask |= 0xffu128 << (8 * i);
            }
            alphabets.push(Alphabet {
                name,
                size,
                cap,
                indexed,
                offset,
                mask,
            });
            offset += size;
        }
        Ok(Arc::new(Ring {
            alphabets,
            nvars: total,
        }))
    }
}
