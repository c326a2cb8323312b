//! End-to-end [n, k, d] checks for the fixtures and the small members of
//! every generated family, each verified by both independent searches.

use hypercode_core::css::{CssCode, DEFAULT_BUDGET};
use hypercode_core::families::{
    fixture, gen_grid_hypermap, gen_honeycomb_hypermap, gen_planar, gen_toric, Fixture,
    FixtureValue, HoleSpec,
};
use hypercode_core::homology::{hypermap_code, SpecialBasis};

fn assert_params(code: &CssCode, n: usize, k: usize, d: usize) {
    assert_eq!(code.n(), n);
    assert_eq!(code.k(), k);
    let search = code.min_distance(DEFAULT_BUDGET).unwrap();
    assert!(search.exhaustive, "search must be exhaustive at this size");
    assert_eq!(search.weight, Some(d));
    assert_eq!(code.min_distance_oracle(1 << 24).unwrap(), d);
}

fn hypermap_fixture_code(which: Fixture) -> CssCode {
    let FixtureValue::Map(map) = fixture(which) else {
        panic!("expected a hypermap fixture");
    };
    let basis = SpecialBasis::default_for(&map);
    hypermap_code(&map, &basis)
}

#[test]
fn steane_is_7_1_3() {
    let FixtureValue::Code(code) = fixture(Fixture::Steane) else {
        panic!("expected a code fixture");
    };
    assert_params(&code, 7, 1, 3);
}

#[test]
fn torus8_code_is_6_2_2() {
    assert_params(&hypermap_fixture_code(Fixture::Torus8), 6, 2, 2);
}

#[test]
fn octagon_square_code_is_16_2_2() {
    assert_params(&hypermap_fixture_code(Fixture::OctagonSquare), 16, 2, 2);
}

#[test]
fn dlcube_code_is_20_2_3() {
    assert_params(&hypermap_fixture_code(Fixture::DlCube), 20, 2, 3);
}

#[test]
fn toric_small_members() {
    assert_params(&gen_toric(2).unwrap(), 8, 2, 2);
    assert_params(&gen_toric(3).unwrap(), 18, 2, 3);
}

#[test]
fn grid_hypermap_m2_is_6_2_2() {
    let (map, basis) = gen_grid_hypermap(2).unwrap();
    assert_params(&hypermap_code(&map, &basis), 6, 2, 2);
}

#[test]
fn honeycomb_2x2_is_8_2_2() {
    let (map, basis) = gen_honeycomb_hypermap(2, 2).unwrap();
    assert_params(&hypermap_code(&map, &basis), 8, 2, 2);
}

#[test]
fn planar_examples() {
    // one 1x1 hole in a 5x5 grid: hole boundary 4, ladder path to the
    // boundary 2, so d = 2
    let hole = HoleSpec {
        row: 2,
        col: 2,
        height: 1,
        width: 1,
    };
    let code = gen_planar(5, 5, &[hole]).unwrap();
    assert_params(&code, 40, 1, 2);

    let trivial = gen_planar(3, 3, &[]).unwrap();
    assert_eq!(trivial.k(), 0);

    // two 1x1 holes 4 apart on a 9x9 grid; the second hole sits 2 from the
    // right boundary, so d = 2
    let holes = [
        HoleSpec { row: 3, col: 3, height: 1, width: 1 },
        HoleSpec { row: 3, col: 7, height: 1, width: 1 },
    ];
    let code = gen_planar(9, 9, &holes).unwrap();
    assert_eq!((code.n(), code.k()), (144, 2));
    assert_eq!(code.min_distance_oracle(1 << 24).unwrap(), 2);
}

#[test]
fn distance_witnesses_are_logical_operators() {
    for code in [
        hypermap_fixture_code(Fixture::OctagonSquare),
        gen_toric(2).unwrap(),
    ] {
        code.min_distance(DEFAULT_BUDGET).unwrap();
        let witness = code.distance_witness().unwrap();
        assert!(code.is_logical(&witness.vector));
    }
}
