use num_rational::BigRational;
use num_traits::Zero;

use super::{Path, Quiver};
use crate::error::{Error, Result};

/// A linear combination of pairwise distinct parallel paths with nonzero
/// rational coefficients, sorted by the path order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinComb {
    terms: Vec<(BigRational, Path)>,
}

impl LinComb {
    /// Merges equal paths, drops zero terms and sorts. Fails if the
    /// surviving terms are not parallel.
    pub fn new(mut terms: Vec<(BigRational, Path)>) -> Result<Self> {
        terms.sort_by(|a, b| a.1.cmp(&b.1));
        let mut merged: Vec<(BigRational, Path)> = Vec::with_capacity(terms.len());
        for (c, p) in terms {
            match merged.last_mut() {
                Some((lc, lp)) if *lp == p => *lc += c,
                _ => merged.push((c, p)),
            }
        }
        merged.retain(|(c, _)| !c.is_zero());
        if let Some((_, first)) = merged.first() {
            let (s, t) = (first.source(), first.target());
            if merged.iter().any(|(_, p)| p.source() != s || p.target() != t) {
                return Err(Error::InvalidPresentation("terms not parallel".into()));
            }
        }
        Ok(LinComb { terms: merged })
    }

    pub fn single(path: Path) -> Self {
        LinComb {
            terms: vec![(BigRational::from_integer(1.into()), path)],
        }
    }

    pub fn terms(&self) -> &[(BigRational, Path)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Shared `(source, target)` of the terms, `None` for the zero combination.
    pub fn endpoints(&self) -> Option<(super::VertexId, super::VertexId)> {
        self.terms.first().map(|(_, p)| (p.source(), p.target()))
    }
}

/// A bound quiver presentation: quiver, relation generators and the
/// asserted nilpotency bound `m` with `F^m ⊆ I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    quiver: Quiver,
    relations: Vec<LinComb>,
    bound: usize,
}

impl Presentation {
    pub fn new(quiver: Quiver, relations: Vec<LinComb>, bound: usize) -> Result<Self> {
        if bound < 2 {
            return Err(Error::InvalidPresentation(format!("bound {bound} is below 2")));
        }
        for rel in &relations {
            if rel.is_zero() {
                return Err(Error::InvalidPresentation("relation is zero".into()));
            }
            for (_, p) in rel.terms() {
                if p.len() < 2 || p.len() >= bound {
                    return Err(Error::InvalidPresentation(format!(
                        "term {} has length {} outside [2, {}]",
                        quiver.path_name(p),
                        p.len(),
                        bound - 1
                    )));
                }
            }
        }
        Ok(Presentation {
            quiver,
            relations,
            bound,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[LinComb] {
        &self.relations
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn is_monomial(&self) -> bool {
        self.relations.iter().all(|r| r.terms().len() == 1)
    }
}
