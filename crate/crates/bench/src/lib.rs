//! Inputs shared by the benchmarks.

use quiverhh::algebra::BoundAlgebra;
use quiverhh::linalg::Rationals;
use quiverhh::poset::{incidence_presentation, Poset};
use quiverhh::quiver::parse_presentation;

const CORPUS: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../cli/corpus/");

pub fn read(name: &str) -> String {
    std::fs::read_to_string(format!("{CORPUS}{name}")).unwrap()
}

pub fn algebra(name: &str) -> BoundAlgebra<Rationals> {
    BoundAlgebra::build(&Rationals, &parse_presentation(&read(name)).unwrap()).unwrap()
}

pub fn poset(name: &str) -> Poset {
    Poset::parse(&read(name)).unwrap()
}

pub fn incidence_algebra(name: &str) -> BoundAlgebra<Rationals> {
    BoundAlgebra::build(&Rationals, &incidence_presentation(&poset(name)).unwrap()).unwrap()
}
