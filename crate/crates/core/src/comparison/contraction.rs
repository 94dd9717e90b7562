//! The maps `G^n: SC_n(Σ) -> SC_{n+1}(Σ)` built from a right compatible
//! family, and the homotopy `S_{n+1}(f) = f ∘ G^n` on `Ker Φ`.

use super::{sign, ChainValue, Check, Comparison};
use crate::error::{Error, Result};
use crate::hochschild::{HochschildComplex, TensorBasis};
use crate::linalg::{Field, Matrix};
use crate::quiver::Path;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionReport {
    /// `δG + Gδ` on every chain, in the three cases of its formula.
    pub homotopy_formula: Check,
    /// `G^n T_n = 0` on basis tuples.
    pub g_kills_t: Check,
    /// `S B + B S = id` on a basis of `Ker Φ^n`.
    pub contraction: Check,
    /// `dim H^n(Ker Φ)` for each degree; all zero when the subcomplex is exact.
    pub kernel_cohomology: Vec<usize>,
}

impl ContractionReport {
    pub fn passed(&self) -> bool {
        self.homotopy_formula.passed()
            && self.g_kills_t.passed()
            && self.contraction.passed()
            && self.kernel_cohomology.iter().all(|&d| d == 0)
    }
}

impl<F: Field> Comparison<F> {
    fn family_path(&self, s: usize, s2: usize) -> Result<&Path> {
        self.family.as_ref().ok_or(Error::MissingFamily)?.get(s, s2).ok_or_else(|| {
            Error::Verification(format!(
                "family has no path for [{}] > [{}]",
                self.sigma.name(s),
                self.sigma.name(s2)
            ))
        })
    }

    /// The sequence `u_i = u(s_{i-1}, s_i)` of a chain.
    pub fn associated_sequence(&self, chain: &[usize]) -> Result<Vec<Path>> {
        chain.windows(2).map(|w| self.family_path(w[0], w[1]).cloned()).collect()
    }

    /// `G^n(s_0 > ... > s_n)`. Requires a right compatible family.
    pub fn g_map(&self, chain: &[usize]) -> Result<ChainValue<F>> {
        let f = self.field();
        if self.family.is_none() {
            return Err(Error::MissingFamily);
        }
        if let Some(v) = self.g_memo.lock().unwrap().get(chain) {
            return Ok(v.clone());
        }
        let n = chain.len() - 1;
        let value = if n == 0 {
            let w = chain[0];
            let rep = self.sigma.representative(w);
            if rep.is_trivial() {
                ChainValue::zero()
            } else {
                ChainValue::single(vec![self.vertex_element(rep, true), w], f.one())
            }
        } else {
            let u = self.associated_sequence(chain)?;
            let mut value = self.g_map(&chain[..n])?;
            if !self.first_case(&u, chain[n])? {
                value.add_scaled(f, &self.t_map(&u)?, &sign(f, n));
            }
            value.extended(self.poset(), chain[n])?
        };
        self.g_memo.lock().unwrap().insert(chain.to_vec(), value.clone());
        Ok(value)
    }

    /// Some `u_i` is trivial, or `[u_1⋯u_n]` is the last element.
    fn first_case(&self, u: &[Path], last: usize) -> Result<bool> {
        if u.iter().any(|p| p.is_trivial()) {
            return Ok(true);
        }
        Ok(self.sigma.element_of(&self.product(u)?) == Some(last))
    }

    fn g_linear(&self, v: &ChainValue<F>) -> Result<ChainValue<F>> {
        let f = self.field();
        let mut out = ChainValue::zero();
        for (chain, c) in v.terms() {
            out.add_scaled(f, &self.g_map(chain)?, c);
        }
        Ok(out)
    }

    /// `(δG + Gδ)(c)` for a chain of degree `n >= 1`, or `δG(c)` in degree 0.
    fn homotopy_image(&self, chain: &[usize]) -> Result<ChainValue<F>> {
        let f = self.field();
        let mut lhs = self.g_map(chain)?.boundary(f);
        if chain.len() > 1 {
            let down = ChainValue::single(chain.to_vec(), f.one()).boundary(f);
            lhs.add_scaled(f, &self.g_linear(&down)?, &f.one());
        }
        Ok(lhs)
    }

    /// Checks the homotopy formula, `G T = 0`, the contraction of `Ker Φ^n`
    /// and its exactness for `0 <= n <= max_degree`.
    pub fn verify_contraction(&self, max_degree: usize) -> Result<ContractionReport> {
        let f = self.field();
        let p = self.poset();
        let one = f.one();
        let mut homotopy_formula = Check::default();
        let mut g_kills_t = Check::default();
        for n in 0..=max_degree {
            for chain in p.chains(n).chains() {
                let lhs = self.homotopy_image(chain)?;
                let mut rhs = ChainValue::single(chain.clone(), one.clone());
                if n == 0 {
                    let rep = self.sigma.representative(chain[0]);
                    rhs.add_term(f, vec![self.vertex_element(rep, true)], &f.neg(&one));
                } else {
                    let u = self.associated_sequence(chain)?;
                    if !u.iter().any(|q| q.is_trivial()) {
                        rhs.add_scaled(f, &self.t_map(&u)?, &f.neg(&one));
                    }
                }
                homotopy_formula.record(lhs == rhs, || format!("homotopy formula fails on {}", self.chain_name(chain)));
            }
            if n > 0 {
                for tuple in TensorBasis::new(&self.algebra, n).tuples() {
                    let t = self.t_basis(tuple)?;
                    let ok = self.g_linear(&t)?.is_zero();
                    g_kills_t.record(ok, || format!("G does not kill T on tuple {tuple:?}"));
                }
            }
        }

        let complex = HochschildComplex::build(&self.algebra, max_degree);
        let mut contraction = Check::default();
        let mut kernels: Vec<Vec<Vec<F::Elem>>> = Vec::new();
        for n in 0..=max_degree {
            let phi = self.phi_matrix(complex.space(n))?;
            let basis = p.chains(n);
            let kernel = phi.kernel_basis();
            for k in &kernel {
                let mut ok = true;
                for (i, chain) in basis.chains().iter().enumerate() {
                    if self.homotopy_image(chain)?.evaluate(f, k, &basis)? != k[i] {
                        ok = false;
                        break;
                    }
                }
                contraction.record(ok, || format!("SB + BS differs from the identity on Ker Φ^{n}"));
            }
            kernels.push(kernel);
        }

        let mut ranks = Vec::new();
        for n in 0..=max_degree {
            let next_rows = p.chains(n + 1).len();
            let images: Vec<Vec<F::Elem>> = kernels[n]
                .iter()
                .map(|k| self.coboundary(n).mul_vec(k))
                .collect::<std::result::Result<_, _>>()?;
            ranks.push(Matrix::from_columns(f, next_rows, &images)?.rank());
        }
        let kernel_cohomology = (0..=max_degree)
            .map(|n| kernels[n].len() - ranks[n] - if n == 0 { 0 } else { ranks[n - 1] })
            .collect();

        Ok(ContractionReport {
            homotopy_formula,
            g_kills_t,
            contraction,
            kernel_cohomology,
        })
    }

    pub fn chain_name(&self, chain: &[usize]) -> String {
        let names: Vec<String> = chain.iter().map(|&s| format!("[{}]", self.sigma.name(s))).collect();
        names.join(">")
    }
}
