use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linalg::Field;
use crate::poset::{ChainBasis, Poset};

/// A finite linear combination of strict chains `s_0 > ... > s_n` of `Σ`.
#[derive(Clone, Debug)]
pub struct ChainValue<F: Field> {
    terms: BTreeMap<Vec<usize>, F::Elem>,
}

impl<F: Field> PartialEq for ChainValue<F> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<F: Field> Default for ChainValue<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> ChainValue<F> {
    pub fn zero() -> Self {
        ChainValue { terms: BTreeMap::new() }
    }

    pub fn single(chain: Vec<usize>, coefficient: F::Elem) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(chain, coefficient);
        ChainValue { terms }
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &F::Elem)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, f: &F, chain: &[usize]) -> F::Elem {
        self.terms.get(chain).cloned().unwrap_or_else(|| f.zero())
    }

    pub fn add_term(&mut self, f: &F, chain: Vec<usize>, c: &F::Elem) {
        if f.is_zero(c) {
            return;
        }
        let sum = match self.terms.get(&chain) {
            Some(old) => f.add(old, c),
            None => c.clone(),
        };
        if f.is_zero(&sum) {
            self.terms.remove(&chain);
        } else {
            self.terms.insert(chain, sum);
        }
    }

    /// `self += s * other`.
    pub fn add_scaled(&mut self, f: &F, other: &Self, s: &F::Elem) {
        for (chain, c) in &other.terms {
            self.add_term(f, chain.clone(), &f.mul(s, c));
        }
    }

    /// Appends `last` to every chain; each chain must end strictly above it.
    pub fn extended(&self, p: &Poset, last: usize) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (chain, c) in &self.terms {
            let end = *chain.last().expect("chains are nonempty");
            if !p.greater(end, last) {
                return Err(Error::Verification(format!(
                    "cannot extend a chain ending at {} by {}",
                    p.name(end),
                    p.name(last)
                )));
            }
            let mut longer = chain.clone();
            longer.push(last);
            terms.insert(longer, c.clone());
        }
        Ok(ChainValue { terms })
    }

    /// `δ(s_0 > ... > s_n) = Σ (-1)^i (s_0 > ... ŝ_i ... > s_n)`; chains of
    /// length one have zero boundary.
    pub fn boundary(&self, f: &F) -> Self {
        let mut out = Self::zero();
        for (chain, c) in &self.terms {
            if chain.len() < 2 {
                continue;
            }
            for omit in 0..chain.len() {
                let face: Vec<usize> = chain
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != omit)
                    .map(|(_, &s)| s)
                    .collect();
                let coef = if omit % 2 == 0 { c.clone() } else { f.neg(c) };
                out.add_term(f, face, &coef);
            }
        }
        out
    }

    /// Coordinates in `basis`; every chain must belong to it.
    pub fn to_vector(&self, f: &F, basis: &ChainBasis) -> Result<Vec<F::Elem>> {
        let mut v = vec![f.zero(); basis.len()];
        for (chain, c) in &self.terms {
            let i = basis
                .index_of(chain)
                .ok_or_else(|| Error::Verification(format!("chain {chain:?} outside the basis")))?;
            v[i] = c.clone();
        }
        Ok(v)
    }

    /// `Σ c · f(chain)` for a cochain given by its coordinates in `basis`.
    pub fn evaluate(&self, f: &F, cochain: &[F::Elem], basis: &ChainBasis) -> Result<F::Elem> {
        let mut acc = f.zero();
        for (chain, c) in &self.terms {
            let i = basis
                .index_of(chain)
                .ok_or_else(|| Error::Verification(format!("chain {chain:?} outside the basis")))?;
            acc = f.add_scaled(&acc, c, &cochain[i]);
        }
        Ok(acc)
    }

    pub fn format(&self, p: &Poset) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (chain, c)) in self.terms.iter().enumerate() {
            let body: Vec<String> = chain.iter().map(|&s| format!("[{}]", p.name(s))).collect();
            let coef = c.to_string();
            let (sign, magnitude) = match coef.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", coef),
            };
            if k == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if magnitude != "1" {
                out.push_str(&format!("{magnitude} "));
            }
            out.push_str(&body.join(">"));
        }
        out
    }
}

/// Outcome of an exhaustive identity check: how many instances were tested
/// and the first one that failed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Check {
    pub checked: usize,
    pub failure: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    pub(crate) fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }
}
