//! The comparison morphism `Φ: Hom(SC_*(Σ), k) -> C^*(A)` between simplicial
//! cochains of the associated poset and the reduced Hochschild complex, its
//! homotopy data, and the induced maps on cohomology.

mod chain;
mod contraction;
mod epsilon;

pub use chain::{ChainValue, Check};
pub use contraction::ContractionReport;
pub use epsilon::{epsilon_check, EpsilonReport};

use std::collections::HashMap;
use std::sync::Mutex;

use rayon::prelude::*;

use crate::algebra::BoundAlgebra;
use crate::error::{Error, Result};
use crate::hochschild::{CochainSpace, HochschildComplex, TensorBasis};
use crate::homotopy::{find_compatible_family, AssociatedPoset, CompatibleFamily, PathClasses, Side};
use crate::linalg::{Field, Matrix};
use crate::poset::Poset;
use crate::quiver::Path;

/// Everything needed to evaluate `T`, `Φ` and `G` for one algebra.
pub struct Comparison<F: Field> {
    algebra: BoundAlgebra<F>,
    classes: PathClasses,
    sigma: AssociatedPoset,
    family: Option<CompatibleFamily>,
    t_memo: Mutex<HashMap<Vec<Path>, ChainValue<F>>>,
    g_memo: Mutex<HashMap<Vec<usize>, ChainValue<F>>>,
}

/// One degree of [`Comparison::compare`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeComparison {
    pub degree: usize,
    /// `|SC_n(Σ)|`.
    pub chains: usize,
    /// `dim C^n(A)`.
    pub cochains: usize,
    pub phi_rank: usize,
    pub phi_surjective: bool,
    pub sh_dim: usize,
    pub hh_dim: usize,
    /// Rank of the induced map `SH^n(Σ) -> HH^n(A)`.
    pub image_rank: usize,
    pub injective: bool,
    pub surjective: bool,
    /// `Φ^{n-1}` is surjective (vacuous in degree 0).
    pub previous_surjective: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparisonReport {
    pub degrees: Vec<DegreeComparison>,
    pub chain_map: Check,
    pub has_right_family: bool,
    pub local_algebras_trivial: bool,
}

impl ComparisonReport {
    /// With a right compatible family, a surjective `Φ^{n-1}` must give an
    /// injective map in degree `n`. Lists the degrees where that fails.
    pub fn injectivity_violations(&self) -> Vec<usize> {
        if !self.has_right_family {
            return Vec::new();
        }
        self.degrees
            .iter()
            .filter(|d| d.previous_surjective && !d.injective)
            .map(|d| d.degree)
            .collect()
    }
}

fn sign<F: Field>(f: &F, n: usize) -> F::Elem {
    if n.is_multiple_of(2) {
        f.one()
    } else {
        f.neg(&f.one())
    }
}

impl<F: Field> Comparison<F> {
    /// Fails with [`Error::NotCoherent`] when `Σ` is not defined.
    pub fn new(algebra: BoundAlgebra<F>) -> Result<Self> {
        let classes = PathClasses::compute(&algebra, &algebra.minimal_relation_blocks())?;
        let sigma = AssociatedPoset::build(&classes)?;
        let family = find_compatible_family(&classes, &sigma, Side::Right);
        Ok(Comparison {
            algebra,
            classes,
            sigma,
            family,
            t_memo: Mutex::new(HashMap::new()),
            g_memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn algebra(&self) -> &BoundAlgebra<F> {
        &self.algebra
    }

    pub fn classes(&self) -> &PathClasses {
        &self.classes
    }

    pub fn sigma(&self) -> &AssociatedPoset {
        &self.sigma
    }

    pub fn poset(&self) -> &Poset {
        self.sigma.poset()
    }

    /// The right compatible family, if one exists.
    pub fn family(&self) -> Option<&CompatibleFamily> {
        self.family.as_ref()
    }

    fn field(&self) -> &F {
        self.algebra.field()
    }

    fn product(&self, tuple: &[Path]) -> Result<Path> {
        let q = self.algebra.quiver();
        let mut acc = tuple[0].clone();
        for p in &tuple[1..] {
            acc = q.compose(&acc, p)?;
        }
        Ok(acc)
    }

    fn vertex_element(&self, p: &Path, at_target: bool) -> usize {
        let v = if at_target { p.target() } else { p.source() };
        self.sigma
            .element_of(&Path::trivial(v))
            .expect("vertex classes are clean")
    }

    /// `T_n(w_1, ..., w_n)` for nontrivial composable paths, and
    /// `T_0(e_x) = [e_x]` for a single trivial path. Zero when the class of
    /// `w_1⋯w_n` is not in `Σ`.
    pub fn t_map(&self, tuple: &[Path]) -> Result<ChainValue<F>> {
        let f = self.field();
        match tuple {
            [] => return Err(Error::Verification("T needs at least one path".into())),
            [e] if e.is_trivial() => return Ok(ChainValue::single(vec![self.vertex_element(e, false)], f.one())),
            _ => {}
        }
        if tuple.iter().any(|p| p.is_trivial()) {
            return Err(Error::Verification("T takes nontrivial paths in positive degree".into()));
        }
        if let Some(v) = self.t_memo.lock().unwrap().get(tuple) {
            return Ok(v.clone());
        }
        let product = self.product(tuple)?;
        let value = match self.sigma.element_of(&product) {
            None => ChainValue::zero(),
            Some(top) => {
                let n = tuple.len();
                let (head, tail) = if n == 1 {
                    (
                        self.t_map(&[Path::trivial(product.source())])?,
                        self.t_map(&[Path::trivial(product.target())])?,
                    )
                } else {
                    (self.t_map(&tuple[..n - 1])?, self.t_map(&tuple[1..])?)
                };
                let mut sum = head;
                sum.add_scaled(f, &tail, &sign(f, n));
                sum.extended(self.poset(), top)?
            }
        };
        self.t_memo.lock().unwrap().insert(tuple.to_vec(), value.clone());
        Ok(value)
    }

    /// `T_n` on a tuple of basis indices.
    pub fn t_basis(&self, tuple: &[usize]) -> Result<ChainValue<F>> {
        let paths: Vec<Path> = tuple.iter().map(|&i| self.algebra.basis_path(i).clone()).collect();
        self.t_map(&paths)
    }

    /// Bar boundary `∂_{n+1}(w_0, ..., w_n)` as signed tuples of paths;
    /// `∂_1(w) = e_t - e_s`.
    pub fn partial_boundary(&self, tuple: &[Path]) -> Result<Vec<(F::Elem, Vec<Path>)>> {
        let f = self.field();
        let one = f.one();
        let minus = f.neg(&one);
        match tuple {
            [] => Err(Error::Verification("empty tuple".into())),
            [w] => Ok(vec![
                (one, vec![Path::trivial(w.target())]),
                (minus, vec![Path::trivial(w.source())]),
            ]),
            _ => {
                let n = tuple.len() - 1;
                let mut out = vec![(one, tuple[1..].to_vec())];
                for i in 1..=n {
                    let merged = self.product(&tuple[i - 1..=i])?;
                    let mut t = tuple[..i - 1].to_vec();
                    t.push(merged);
                    t.extend_from_slice(&tuple[i + 1..]);
                    out.push((sign(f, i), t));
                }
                out.push((sign(f, n + 1), tuple[..n].to_vec()));
                Ok(out)
            }
        }
    }

    /// `T_n ∂_{n+1} = δ_{n+1} T_{n+1}` on every basis tuple of degree `n + 1`
    /// whose product lies outside `I`, for `n < max_degree`.
    pub fn verify_boundary_compatibility(&self, max_degree: usize) -> Result<Check> {
        let f = self.field();
        let mut check = Check::default();
        for n in 0..max_degree {
            let tensors = TensorBasis::new(&self.algebra, n + 1);
            for tuple in tensors.tuples() {
                let paths: Vec<Path> = tuple.iter().map(|&i| self.algebra.basis_path(i).clone()).collect();
                if self.algebra.is_path_in_ideal(&self.product(&paths)?) {
                    continue;
                }
                let mut lhs = ChainValue::zero();
                for (c, face) in self.partial_boundary(&paths)? {
                    lhs.add_scaled(f, &self.t_map(&face)?, &c);
                }
                let rhs = self.t_map(&paths)?.boundary(f);
                check.record(lhs == rhs, || format!("boundary compatibility fails on {}", self.tuple_name(&paths)));
            }
        }
        Ok(check)
    }

    /// Replacing any entry of a basis tuple by an equivalent path leaves `T_n` unchanged.
    pub fn verify_t_invariance(&self, max_degree: usize) -> Result<Check> {
        let mut check = Check::default();
        for n in 1..=max_degree {
            let tensors = TensorBasis::new(&self.algebra, n);
            for tuple in tensors.tuples() {
                let paths: Vec<Path> = tuple.iter().map(|&i| self.algebra.basis_path(i).clone()).collect();
                let base = self.t_map(&paths)?;
                for i in 0..n {
                    let Some(class) = self.classes.class_of(&paths[i]) else {
                        continue;
                    };
                    for mate in self.classes.members(class) {
                        if *mate == paths[i] {
                            continue;
                        }
                        let mut other = paths.clone();
                        other[i] = mate.clone();
                        let ok = self.t_map(&other)? == base;
                        check.record(ok, || {
                            format!(
                                "T changes when {} is replaced by {}",
                                self.tuple_name(&paths),
                                self.tuple_name(&other)
                            )
                        });
                    }
                }
            }
        }
        Ok(check)
    }

    pub fn tuple_name(&self, tuple: &[Path]) -> String {
        let q = self.algebra.quiver();
        let names: Vec<String> = tuple.iter().map(|p| q.path_name(p)).collect();
        format!("({})", names.join(", "))
    }

    /// Matrix of `Φ^n: Hom(SC_n(Σ), k) -> C^n(A)`; rows follow the
    /// coordinates of `space`, columns the chains of degree `n`.
    /// `Φ^n(f)(w_1, ..., w_n) = f(T_n(w)) · w_1⋯w_n`.
    pub fn phi_matrix(&self, space: &CochainSpace) -> Result<Matrix<F>> {
        let f = self.field();
        let a = &self.algebra;
        let tensors = space.tensors();
        let chains = self.poset().chains(tensors.degree());
        let entries: Vec<Vec<(usize, usize, F::Elem)>> = (0..tensors.len())
            .into_par_iter()
            .map(|i| -> Result<Vec<(usize, usize, F::Elem)>> {
                let tuple = tensors.get(i);
                let paths: Vec<Path> = tuple.iter().map(|&b| a.basis_path(b).clone()).collect();
                let t = self.t_map(&paths)?;
                let nf = a.normal_form(&self.product(&paths)?);
                let mut out = Vec::new();
                for (chain, c) in t.terms() {
                    let col = chains.index_of(chain).expect("T yields chains of Σ");
                    for (b, lambda) in &nf {
                        out.push((space.coordinate(a, i, *b), col, f.mul(c, lambda)));
                    }
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        let mut m = Matrix::zeros(f, space.dim(), chains.len());
        for (r, c, v) in entries.into_iter().flatten() {
            m.add_to(r, c, &v);
        }
        Ok(m)
    }

    /// Matrix of the simplicial coboundary `B^n: Hom(SC_n) -> Hom(SC_{n+1})`.
    pub fn coboundary(&self, n: usize) -> Matrix<F> {
        self.poset().simplicial_boundary(self.field(), n).transpose()
    }

    /// `Φ^{n+1} B^n = b^n Φ^n` for `n <= complex.max_degree()`.
    pub fn verify_chain_map(&self, complex: &HochschildComplex<F>) -> Result<Check> {
        let mut check = Check::default();
        let phis = self.phi_matrices(complex, complex.max_degree() + 1)?;
        for n in 0..=complex.max_degree() {
            let lhs = phis[n + 1].mul(&self.coboundary(n))?;
            let rhs = complex.differential(n).mul(&phis[n])?;
            check.record(lhs == rhs, || format!("Φ does not commute with the differentials in degree {n}"));
        }
        Ok(check)
    }

    fn phi_matrices(&self, complex: &HochschildComplex<F>, top: usize) -> Result<Vec<Matrix<F>>> {
        (0..=top).map(|n| self.phi_matrix(complex.space(n))).collect()
    }

    /// Ranks, surjectivity and the induced maps `SH^n(Σ) -> HH^n(A)` for
    /// `0 <= n <= max_degree`.
    pub fn compare(&self, max_degree: usize) -> Result<ComparisonReport> {
        let f = self.field();
        let complex = HochschildComplex::build(&self.algebra, max_degree);
        let phis = self.phi_matrices(&complex, max_degree)?;
        let coboundaries: Vec<Matrix<F>> = (0..=max_degree).map(|n| self.coboundary(n)).collect();
        let coboundary_ranks: Vec<usize> = coboundaries.iter().map(|m| m.rank()).collect();
        let mut degrees: Vec<DegreeComparison> = Vec::new();
        for n in 0..=max_degree {
            let space = complex.space(n);
            let phi_rank = phis[n].rank();
            let cocycles = coboundaries[n].kernel_basis();
            let sh_dim = cocycles.len() - if n == 0 { 0 } else { coboundary_ranks[n - 1] };
            let images: Vec<Vec<F::Elem>> = cocycles
                .iter()
                .map(|z| phis[n].mul_vec(z))
                .collect::<std::result::Result<_, _>>()?;
            let images = Matrix::from_columns(f, space.dim(), &images)?;
            let image_rank = if n == 0 {
                images.rank()
            } else {
                images.hstack(complex.differential(n - 1))?.rank() - complex.rank(n - 1)
            };
            let hh_dim = complex.cohomology_dim(n);
            degrees.push(DegreeComparison {
                degree: n,
                chains: phis[n].cols(),
                cochains: space.dim(),
                phi_rank,
                phi_surjective: phi_rank == space.dim(),
                sh_dim,
                hh_dim,
                image_rank,
                injective: image_rank == sh_dim,
                surjective: image_rank == hh_dim,
                previous_surjective: n == 0 || degrees[n - 1].phi_surjective,
            });
        }
        Ok(ComparisonReport {
            degrees,
            chain_map: self.verify_chain_map(&complex)?,
            has_right_family: self.family.is_some(),
            local_algebras_trivial: self.algebra.local_algebras_trivial(),
        })
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::algebra::tests::{algebra, EJEMPLO};
    use crate::homotopy::tests::EJEMPLO_NO;
    use crate::linalg::Rationals;
    use crate::poset::{incidence_presentation, tests as posets};

    pub(crate) fn comparison(text: &str) -> Comparison<Rationals> {
        Comparison::new(algebra(text)).unwrap()
    }

    pub(crate) fn i1() -> Comparison<Rationals> {
        comparison(&format!("{EJEMPLO}rel alpha.gamma\n"))
    }

    pub(crate) fn i2() -> Comparison<Rationals> {
        comparison(&format!("{EJEMPLO}rel alpha.gamma - beta.gamma\n"))
    }

    pub(crate) fn kronecker(n: usize) -> Comparison<Rationals> {
        let arrows: String = (1..=n).map(|i| format!("arrow a{i} 1 2\n")).collect();
        comparison(&format!("vertex 1\nvertex 2\n{arrows}bound 2\n"))
    }

    fn paths(c: &Comparison<Rationals>, names: &[&str]) -> Vec<Path> {
        names.iter().map(|n| c.algebra().quiver().path_from_names(n).unwrap()).collect()
    }

    #[test]
    fn t1_is_a_difference_of_edges() {
        let c = i1();
        let t = c.t_map(&paths(&c, &["alpha"])).unwrap();
        assert_eq!(t.format(c.poset()), "[e_1]>[alpha] - [e_2]>[alpha]");
    }

    #[test]
    fn t2_on_the_binomial_presentation() {
        let c = i2();
        let t = c.t_map(&paths(&c, &["alpha", "gamma"])).unwrap();
        assert_eq!(
            t.format(c.poset()),
            "[e_1]>[alpha]>[beta.gamma] - [e_2]>[alpha]>[beta.gamma] + [e_2]>[gamma]>[beta.gamma] - [e_3]>[gamma]>[beta.gamma]"
        );
        // in the monomial presentation alpha.gamma lies in I
        let c = i1();
        assert!(c.t_map(&paths(&c, &["alpha", "gamma"])).unwrap().is_zero());
    }

    #[test]
    fn t_respects_boundaries() {
        for c in [i1(), i2(), kronecker(3), comparison(EJEMPLO_NO)] {
            let check = c.verify_boundary_compatibility(3).unwrap();
            assert!(check.passed(), "{:?}", check.failure);
        }
    }

    #[test]
    fn t_is_well_defined_on_classes() {
        let c = i2();
        let check = c.verify_t_invariance(3).unwrap();
        assert!(check.passed());
        assert!(check.checked > 0);
    }

    #[test]
    fn phi_is_a_chain_map() {
        for c in [i1(), i2(), kronecker(2), comparison(EJEMPLO_NO)] {
            let complex = HochschildComplex::build(c.algebra(), 3);
            assert!(c.verify_chain_map(&complex).unwrap().passed());
        }
    }

    #[test]
    fn phi_zero_matches_units() {
        let c = i1();
        let space = CochainSpace::new(c.algebra(), 0);
        let m = c.phi_matrix(&space).unwrap();
        // one column per element of Σ, but only the vertex classes are hit
        assert_eq!((m.rows(), m.cols()), (3, 7));
        for x in 0..3 {
            for col in 0..7 {
                let expected = if col == x { 1 } else { 0 };
                assert_eq!(*m.get(x, col), Rationals.from_i64(expected));
            }
        }
    }

    #[test]
    fn monomial_example_degree_one() {
        let r = i1().compare(2).unwrap();
        let d1 = &r.degrees[1];
        assert!(d1.injective);
        assert_eq!((d1.image_rank, d1.sh_dim, d1.hh_dim), (1, 1, 2));
        assert!(r.chain_map.passed());
        assert!(r.injectivity_violations().is_empty());
    }

    #[test]
    fn kronecker_image_rank() {
        for n in 2..=4 {
            let r = kronecker(n).compare(2).unwrap();
            let d1 = &r.degrees[1];
            assert_eq!(d1.image_rank, n - 1);
            assert_eq!(d1.sh_dim, n - 1);
            assert_eq!(d1.hh_dim, n * n - 1);
        }
    }

    #[test]
    fn incidence_algebras_compare_isomorphically() {
        for text in [posets::CROWN, posets::SIGMA1, posets::SIGMA2] {
            let pr = incidence_presentation(&posets::poset(text)).unwrap();
            let c = Comparison::new(BoundAlgebra::build(&Rationals, &pr).unwrap()).unwrap();
            let r = c.compare(3).unwrap();
            for d in &r.degrees {
                assert!(d.phi_surjective, "degree {}", d.degree);
                assert!(d.injective && d.surjective, "degree {}", d.degree);
            }
        }
    }
}
