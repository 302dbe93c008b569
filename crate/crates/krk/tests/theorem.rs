use krk::cartan::{AffineType, CartanDatum, Family, RootVec};
use krk::categorify::{build_psi_for, d_class};
use krk::crystal::Arrow;
use krk::kr::build_b11;
use krk::paths::{forbidden, is_cyclotomic, realize, Path};

fn sweep(f: Family, l: usize, depth: usize) {
    let ty = AffineType::new(f, l).unwrap();
    let cd = CartanDatum::build(ty);
    let kr = build_b11(ty);
    for top in cd.level_one() {
        if forbidden(ty).contains(&top) {
            continue;
        }
        let psi = build_psi_for(&cd, &kr, top, depth).unwrap();
        assert!(psi.strictness_violations().is_empty());
        let rep = psi.sweep();
        assert!(rep.passed(), "{} top {top}: {:?}", f.tag(), rep.first_failures);
    }
}

#[test]
fn theorem_a1() { sweep(Family::A1, 2, 7) }
#[test]
fn theorem_c1() { sweep(Family::C1, 2, 7) }
#[test]
fn theorem_a2even() { sweep(Family::A2Even, 2, 7) }
#[test]
fn theorem_a2dag() { sweep(Family::A2Dag, 2, 7) }
#[test]
fn theorem_d2() { sweep(Family::D2, 2, 7) }
#[test]
fn theorem_d1() { sweep(Family::D1, 5, 7) }
#[test]
fn theorem_b1() { sweep(Family::B1, 3, 7) }
#[test]
fn theorem_a2odd() { sweep(Family::A2Odd, 3, 7) }

/// ν bookkeeping, walk shape and canonical choice for every decomposed node.
fn bookkeeping(f: Family, l: usize, depth: usize) {
    let ty = AffineType::new(f, l).unwrap();
    let cd = CartanDatum::build(ty);
    let kr = build_b11(ty);
    for top in cd.level_one().into_iter().filter(|t| !forbidden(ty).contains(t)) {
        let psi = build_psi_for(&cd, &kr, top, depth).unwrap();
        for a in psi.domain().collect::<Vec<_>>() {
            let d = psi.decompose(a).unwrap();
            assert_eq!(psi.decompose(a).unwrap(), d);
            let content = RootVec::content(cd.n(), &d.word);
            assert_eq!(content.0, d.gamma);
            assert_eq!(psi.source().nu(a).0, psi.target().nu(d.remainder).add(&content).0);
            assert_eq!(d.k, d.word.len());
            assert_eq!(d.walk.len(), d.k + 1);
            assert_eq!(d.walk.last(), Some(&d.b));
            for (t, &c) in d.word.iter().enumerate() {
                assert_eq!(kr.graph().f(d.walk[t], c), Arrow::To(d.walk[t + 1]));
            }
            if d.k == 0 {
                continue;
            }
            let p = Path { word: d.word.clone(), walks: vec![d.walk.clone()] };
            assert!(is_cyclotomic(&kr, psi.classes(), &p, psi.base(), psi.top()));
            let key = |w: &Vec<usize>| w.iter().map(|&c| (c != top, c)).collect::<Vec<_>>();
            for w in d_class(psi.classes(), &d.word).into_iter().filter(|w| key(w) < key(&d.word)) {
                let Ok(q) = realize(&kr, &w) else { continue };
                for walk in q.walks.iter().filter(|x| x.last() == Some(&d.b)) {
                    let q = Path { word: w.clone(), walks: vec![walk.clone()] };
                    assert!(!is_cyclotomic(&kr, psi.classes(), &q, psi.base(), top), "{ty} {}", psi.label(a));
                }
            }
        }
    }
}

#[test]
fn bookkeeping_c1() { bookkeeping(Family::C1, 3, 6) }
#[test]
fn bookkeeping_d1() { bookkeeping(Family::D1, 5, 6) }
#[test]
fn bookkeeping_a2odd() { bookkeeping(Family::A2Odd, 3, 6) }
