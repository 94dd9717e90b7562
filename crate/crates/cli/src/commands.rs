use quiverhh::algebra::{AdmissibilityReport, BoundAlgebra};
use quiverhh::comparison::{Check, Comparison};
use quiverhh::hochschild::{oracle_bar_dims, HochschildComplex, ORACLE_MAX_DEGREE};
use quiverhh::homotopy::{find_compatible_family, AssociatedPoset, PathClasses, Side};
use quiverhh::linalg::Field;
use quiverhh::poset::{incidence_presentation, Poset};
use quiverhh::quiver::{write_presentation, Presentation};
use quiverhh::Result;

use crate::report::Report;

pub enum Input {
    Presentation(Presentation),
    Poset(Poset),
}

impl Input {
    /// The presentation itself, or the incidence presentation of a poset.
    pub fn presentation(&self) -> Result<Presentation> {
        match self {
            Input::Presentation(p) => Ok(p.clone()),
            Input::Poset(p) => incidence_presentation(p),
        }
    }

    /// The poset itself, or `Σ` of a presentation.
    fn poset<F: Field>(&self, field: &F) -> Result<Poset> {
        match self {
            Input::Poset(p) => Ok(p.clone()),
            Input::Presentation(pr) => {
                let a = BoundAlgebra::build(field, pr)?;
                let classes = PathClasses::compute(&a, &a.minimal_relation_blocks())?;
                Ok(AssociatedPoset::build(&classes)?.poset().clone())
            }
        }
    }
}

pub fn check<F: Field>(field: &F, input: &Input) -> Result<Report> {
    let pr = input.presentation()?;
    let a = BoundAlgebra::build(field, &pr)?;
    let q = a.quiver();
    let mut r = Report::new("check", field.name());
    r.push("vertices", q.vertex_count());
    r.push("arrows", q.arrows().len());
    r.push("relations", pr.relations().len());
    r.push("bound", pr.bound());
    r.push("dim A", a.dim());
    let adm = a.check_admissibility()?;
    r.flag("relations in F^2", adm.syntactic);
    r.flag("admissible (necessary check)", adm.necessary);
    r.push("admissibility note", AdmissibilityReport::CAVEAT);
    for p in &adm.failing_paths {
        r.push("path of length m outside I", p);
    }
    let classes = PathClasses::compute(&a, &a.minimal_relation_blocks())?;
    let coherence = classes.check_coherent();
    r.flag("homotopy coherent", coherence.coherent);
    if let Some(w) = classes.describe_witness(&coherence) {
        r.push("coherence witness", w);
    }
    match AssociatedPoset::build(&classes) {
        Ok(sigma) => {
            r.flag("right compatible", find_compatible_family(&classes, &sigma, Side::Right).is_some());
            r.flag("left compatible", find_compatible_family(&classes, &sigma, Side::Left).is_some());
        }
        Err(_) => {
            r.push("right compatible", "n/a");
            r.push("left compatible", "n/a");
        }
    }
    r.flag("schurian", a.is_schurian());
    r.flag("dim A(x,x) = 1", a.local_algebras_trivial());
    Ok(r)
}

pub fn poset<F: Field>(field: &F, input: &Input) -> Result<Report> {
    let pr = input.presentation()?;
    let a = BoundAlgebra::build(field, &pr)?;
    let classes = PathClasses::compute(&a, &a.minimal_relation_blocks())?;
    let sigma = AssociatedPoset::build(&classes)?;
    let q = a.quiver();
    let mut r = Report::new("poset", field.name());
    r.push("elements", sigma.len());
    for e in 0..sigma.len() {
        let members: Vec<String> = sigma.members(e).iter().map(|p| q.path_name(p)).collect();
        r.push(format!("element [{}]", sigma.name(e)), members.join(", "));
    }
    let hasse = sigma.hasse();
    r.push("hasse edges", hasse.len());
    for (upper, lower) in hasse {
        r.push("edge", format!("[{}] > [{}]", sigma.name(upper), sigma.name(lower)));
    }
    Ok(r)
}

pub fn hh<F: Field>(field: &F, input: &Input, max_degree: usize) -> Result<Report> {
    let a = BoundAlgebra::build(field, &input.presentation()?)?;
    let mut r = Report::new("hh", field.name());
    for (n, d) in HochschildComplex::build(&a, max_degree).cohomology_dims().into_iter().enumerate() {
        r.push(format!("HH^{n}"), d);
    }
    Ok(r)
}

pub fn oracle_hh<F: Field>(field: &F, input: &Input, max_degree: Option<usize>) -> Result<Report> {
    let a = BoundAlgebra::build(field, &input.presentation()?)?;
    let mut r = Report::new("oracle-hh", field.name());
    let dims = oracle_bar_dims(&a, max_degree.unwrap_or(ORACLE_MAX_DEGREE))?;
    for (n, d) in dims.into_iter().enumerate() {
        r.push(format!("HH^{n}"), d);
    }
    Ok(r)
}

pub fn sh<F: Field>(field: &F, input: &Input, max_degree: usize) -> Result<Report> {
    let p = input.poset(field)?;
    let mut r = Report::new("sh", field.name());
    for (n, d) in p.simplicial_cohomology_dims(field, max_degree).into_iter().enumerate() {
        r.push(format!("SH^{n}"), d);
    }
    Ok(r)
}

pub fn reduce<F: Field>(field: &F, input: &Input) -> Result<Report> {
    let mut r = Report::new("reduce", field.name());
    r.document = Some(input.poset(field)?.iz_reduce().to_text());
    Ok(r)
}

pub fn incidence<F: Field>(field: &F, input: &Input) -> Result<Report> {
    let mut r = Report::new("incidence", field.name());
    r.document = Some(write_presentation(&input.presentation()?));
    Ok(r)
}

fn check_line(r: &mut Report, key: &str, c: &Check) {
    match &c.failure {
        None => r.push(key, format!("passed ({} checks)", c.checked)),
        Some(msg) => {
            r.push(key, format!("failed: {msg}"));
            r.failed = true;
        }
    }
}

pub fn compare<F: Field>(field: &F, input: &Input, max_degree: usize) -> Result<Report> {
    let c = Comparison::new(BoundAlgebra::build(field, &input.presentation()?)?)?;
    let report = c.compare(max_degree)?;
    let mut r = Report::new("compare", field.name());
    r.push("sigma elements", c.sigma().len());
    r.flag("right compatible", report.has_right_family);
    r.flag("dim A(x,x) = 1", report.local_algebras_trivial);
    check_line(&mut r, "chain map", &report.chain_map);
    check_line(&mut r, "T invariance", &c.verify_t_invariance(max_degree)?);
    if report.has_right_family {
        let h = c.verify_contraction(max_degree)?;
        check_line(&mut r, "homotopy formula", &h.homotopy_formula);
        check_line(&mut r, "G T = 0", &h.g_kills_t);
        check_line(&mut r, "contraction", &h.contraction);
        let exact = h.kernel_cohomology.iter().all(|&d| d == 0);
        r.flag("Ker phi exact", exact);
        r.failed |= !exact;
    } else {
        r.push("contraction", "skipped (no right compatible family)");
    }
    for d in &report.degrees {
        let n = d.degree;
        r.push(format!("phi^{n} columns"), d.chains);
        r.push(format!("phi^{n} rows"), d.cochains);
        r.push(format!("phi^{n} rank"), d.phi_rank);
        r.flag(format!("phi^{n} surjective"), d.phi_surjective);
        r.push(format!("SH^{n}"), d.sh_dim);
        r.push(format!("HH^{n}"), d.hh_dim);
        r.push(format!("HH(phi^{n}) rank"), d.image_rank);
        let verdict = match (d.injective, d.surjective) {
            (true, true) => "isomorphism",
            (true, false) => "injective",
            (false, true) => "surjective",
            (false, false) => "neither",
        };
        r.push(format!("HH(phi^{n})"), verdict);
    }
    let violations = report.injectivity_violations();
    if report.has_right_family {
        let value = if violations.is_empty() {
            "consistent".to_string()
        } else {
            r.failed = true;
            let list: Vec<String> = violations.iter().map(|n| n.to_string()).collect();
            format!("violated in degrees {}", list.join(", "))
        };
        r.push("injectivity criterion", value);
    }
    Ok(r)
}
