use krk::cartan::{AffineType, CartanDatum, Family, WeightH};
use krk::hw::{bootstrap_build, decomposition_check, extract_level2};
use krk::kr::build_b11;

fn a2even(l: usize) -> (CartanDatum, krk::kr::KrCrystal) {
    let t = AffineType::new(Family::A2Even, l).unwrap();
    (CartanDatum::build(t), build_b11(t))
}

#[test]
fn a2even_rank2_splits_lambda1() {
    let (cd, kr) = a2even(2);
    let n = cd.n();
    let b0 = bootstrap_build(&cd, &kr, 0, 12).unwrap();
    let two = WeightH::fundamental(n, 0).add(&WeightH::fundamental(n, 0));
    let b00 = extract_level2(&b0, &b0, &two, 12).unwrap();
    let b1 = extract_level2(&b0, &b0, &WeightH::fundamental(n, 1), 12).unwrap();
    let b2 = extract_level2(&b0, &b0, &WeightH::fundamental(n, 2), 12).unwrap();
    let rep = decomposition_check(
        &kr,
        &b1.crystal,
        &[("B(2Λ0)".into(), &b00.crystal), ("B(Λ2)".into(), &b2.crystal)],
        5,
    );
    assert!(rep.passed(), "{rep:?}");
    assert!(rep.depth >= 5);
}

#[test]
fn a2even_rank3_splits_lambda2() {
    let (cd, kr) = a2even(3);
    let n = cd.n();
    let b0 = bootstrap_build(&cd, &kr, 0, 12).unwrap();
    let ex = |j: usize| extract_level2(&b0, &b0, &WeightH::fundamental(n, j), 12).unwrap();
    let (b1, b2, b3) = (ex(1), ex(2), ex(3));
    let rep = decomposition_check(
        &kr,
        &b2.crystal,
        &[("B(Λ1)".into(), &b1.crystal), ("B(Λ3)".into(), &b3.crystal)],
        5,
    );
    assert!(rep.passed(), "{rep:?}");
    assert!(rep.depth >= 5);
}
