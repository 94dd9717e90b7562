use std::collections::HashSet;

use num_rational::BigRational;
use num_traits::One;

use super::Poset;
use crate::error::{Error, Result};
use crate::quiver::{LinComb, Path, Presentation, Quiver, VertexId};

fn sanitize(name: &str) -> String {
    name.chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '_' || c == '\'' { c } else { '_' })
        .collect()
}

fn unique(base: String, taken: &mut HashSet<String>) -> String {
    let mut name = base.clone();
    let mut k = 2;
    while !taken.insert(name.clone()) {
        name = format!("{base}_{k}");
        k += 1;
    }
    name
}

/// The incidence algebra of `p` as a bound quiver: the Hasse diagram (an
/// arrow `a_<upper>_<lower>` per cover) modulo all differences of parallel
/// paths, with bound one more than the longest chain (at least 2).
pub fn incidence_presentation(p: &Poset) -> Result<Presentation> {
    if p.is_empty() {
        return Err(Error::InvalidPoset("empty poset".into()));
    }
    let mut taken = HashSet::new();
    let vertices: Vec<String> = p.names().iter().map(|n| unique(sanitize(n), &mut taken)).collect();
    let mut arrow_names = HashSet::new();
    let arrows: Vec<(String, String, String)> = p
        .covers()
        .into_iter()
        .map(|(a, b)| {
            let name = unique(format!("a_{}_{}", vertices[a], vertices[b]), &mut arrow_names);
            (name, vertices[a].clone(), vertices[b].clone())
        })
        .collect();
    let quiver = Quiver::new(vertices, arrows)?;
    let bound = (p.height() + 1).max(2);
    let paths = quiver.enumerate_paths(bound - 1, None, None)?;

    let mut relations = Vec::new();
    for a in 0..p.len() {
        for b in 0..p.len() {
            if !p.greater(a, b) {
                continue;
            }
            let parallel: Vec<&Path> = paths
                .iter()
                .filter(|w| w.source() == VertexId(a) && w.target() == VertexId(b))
                .collect();
            for (i, x) in parallel.iter().enumerate() {
                for y in &parallel[i + 1..] {
                    relations.push(LinComb::new(vec![
                        (BigRational::one(), (*x).clone()),
                        (-BigRational::one(), (*y).clone()),
                    ])?);
                }
            }
        }
    }
    Presentation::new(quiver, relations, bound)
}

#[cfg(test)]
mod tests {
    use super::super::tests::{poset, SIGMA2};
    use super::*;
    use crate::algebra::BoundAlgebra;
    use crate::linalg::Rationals;
    use crate::quiver::format::format_lincomb;
    use crate::quiver::{parse_presentation, write_presentation};

    #[test]
    fn chain_has_no_relations() {
        let pr = incidence_presentation(&poset("element a\nelement b\ncover a b\n")).unwrap();
        assert!(pr.relations().is_empty());
        assert_eq!(pr.bound(), 2);
        assert_eq!(pr.quiver().arrows()[0].name, "a_a_b");
    }

    #[test]
    fn diamond_has_one_relation() {
        let d = poset("element a\nelement b\nelement c\nelement d\ncover a b\ncover a c\ncover b d\ncover c d\n");
        let pr = incidence_presentation(&d).unwrap();
        assert_eq!(pr.relations().len(), 1);
        assert_eq!(format_lincomb(pr.quiver(), &pr.relations()[0]), "a_a_b.a_b_d - a_a_c.a_c_d");
        assert_eq!(pr.bound(), 3);
    }

    #[test]
    fn three_chain_algebra_has_dimension_six() {
        let pr = incidence_presentation(&poset("element a\nelement b\nelement c\ncover a b\ncover b c\n")).unwrap();
        assert_eq!(BoundAlgebra::build(&Rationals, &pr).unwrap().dim(), 6);
    }

    #[test]
    fn sigma_two_parallel_paths() {
        let pr = incidence_presentation(&poset(SIGMA2)).unwrap();
        assert_eq!(pr.quiver().vertex_count(), 7);
        let q = pr.quiver();
        let from_e2: Vec<String> = pr
            .relations()
            .iter()
            .filter(|r| q.vertex_name(r.endpoints().unwrap().0) == "e2")
            .map(|r| format_lincomb(q, r))
            .collect();
        assert_eq!(from_e2.len(), 3);
        let a = BoundAlgebra::build(&Rationals, &pr).unwrap();
        assert!(a.is_schurian());
        // the written form parses back to the same presentation
        assert_eq!(parse_presentation(&write_presentation(&pr)).unwrap(), pr);
    }

    #[test]
    fn names_are_sanitized() {
        let p = poset("element e_1\nelement beta.gamma\ncover e_1 beta.gamma\n");
        let pr = incidence_presentation(&p).unwrap();
        assert_eq!(pr.quiver().vertex_name(VertexId(1)), "beta_gamma");
        assert_eq!(pr.quiver().arrows()[0].name, "a_e_1_beta_gamma");
    }
}
