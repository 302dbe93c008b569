//! Randomised invariants across types, crystals, characters and modules.

use proptest::prelude::*;

use krk::cartan::{AffineType, CartanDatum, Family};
use krk::categorify::d_class;
use krk::crystal::{axiom_check, components, rooted_iso, tensor, Arrow};
use krk::hw::{bootstrap_build, bootstrap_rounds};
use krk::klr::{eps, eps_vee, jump, qshuffle, serre_clean, GradedChar};
use krk::kr::{build_b11, KrCrystal};
use krk::paths::{class_table, realize};
use krk::tmod::{verify_relations, TrivModule};

fn affine(max_rank: usize) -> impl Strategy<Value = AffineType> {
    (0..Family::ALL.len(), 1..=max_rank).prop_map(|(f, r)| {
        let f = Family::ALL[f];
        AffineType::new(f, r.max(f.min_rank())).expect("rank clamped")
    })
}

/// Colour word of a walk in `kr` steered by `choices`.
fn walk_word(kr: &KrCrystal, start: usize, choices: &[usize]) -> Vec<usize> {
    let mut v = start % kr.len();
    let mut word = vec![];
    for &c in choices {
        let out = kr.out_colours(v);
        if out.is_empty() {
            break;
        }
        let i = out[c % out.len()];
        word.push(i);
        v = match kr.graph().f(v, i) {
            Arrow::To(w) => w,
            _ => unreachable!("out colour without target"),
        };
    }
    word
}

/// Shuffles of `u` and `v` by position subsets, with the degree of each
/// minimal coset representative summed over its crossings.
fn shuffle_oracle(cd: &CartanDatum, u: &[usize], v: &[usize]) -> GradedChar {
    let len = u.len() + v.len();
    let mut out = GradedChar::zero(cd.n());
    for mask in 0u32..(1 << len) {
        if mask.count_ones() as usize != u.len() {
            continue;
        }
        let (mut w, mut from_u) = (vec![], vec![]);
        let (mut a, mut b) = (0, 0);
        for pos in 0..len {
            if mask >> pos & 1 == 1 {
                w.push(u[a]);
                from_u.push(Some(a));
                a += 1;
            } else {
                w.push(v[b]);
                from_u.push(None);
                b += 1;
            }
        }
        let mut deg = 0;
        for p in 0..len {
            for q in p + 1..len {
                if from_u[p].is_none() && from_u[q].is_some() {
                    deg -= cd.bilinear(w[q], w[p]);
                }
            }
        }
        out.add_word(w, &krk::LaurentPoly::monomial(1, deg));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn cartan_null_vector_and_symmetrizer(ty in affine(8)) {
        let cd = CartanDatum::build(ty);
        let n = cd.n();
        for j in 0..n {
            let s: i64 = (0..n).map(|i| cd.central()[i] * cd.a(i, j)).sum();
            prop_assert_eq!(s, 0);
        }
        for i in 0..n {
            prop_assert_eq!(cd.a(i, i), 2);
            for j in 0..n {
                prop_assert_eq!(cd.d(i) * cd.a(i, j), cd.d(j) * cd.a(j, i));
            }
        }
    }

    #[test]
    fn kr_crystals_are_well_formed(ty in affine(8)) {
        let cd = CartanDatum::build(ty);
        let kr = build_b11(ty);
        prop_assert!(axiom_check(&cd, kr.graph()).passed());
        prop_assert!(kr.structural_violations().is_empty());
        prop_assert!(kr.level_zero_violations(&cd).is_empty());
    }

    #[test]
    fn tensor_is_associative_and_seminormal(ty in affine(3)) {
        let cd = CartanDatum::build(ty);
        let g = build_b11(ty).graph().clone();
        let left = tensor(&tensor(&g, &g), &g);
        let right = tensor(&g, &tensor(&g, &g));
        prop_assert_eq!(left.len(), right.len());
        // both sides index x ⊗ y ⊗ z as (x·m + y)·m + z
        for v in 0..left.len() {
            let (a, b) = (left.node(v), right.node(v));
            prop_assert_eq!(&a.wt, &b.wt);
            prop_assert_eq!(&a.eps, &b.eps);
            prop_assert_eq!(&a.phi, &b.phi);
            prop_assert_eq!(&a.f, &b.f);
        }
        prop_assert!(axiom_check(&cd, &left).passed());
        // affine KR products are usually connected through 0-arrows with no
        // highest-weight node; check the ones that exist
        let sq = tensor(&g, &g);
        for c in components(&sq) {
            for h in c.highest {
                let nd = sq.node(h).clone();
                prop_assert!(nd.eps.iter().all(|&e| e == 0));
                prop_assert_eq!(nd.wt.0, nd.phi);
            }
        }
    }

    #[test]
    fn shuffle_matches_coset_enumeration(
        ty in affine(4),
        u in prop::collection::vec(0usize..16, 0..5),
        v in prop::collection::vec(0usize..16, 0..5),
    ) {
        let cd = CartanDatum::build(ty);
        let n = cd.n();
        let u: Vec<usize> = u.into_iter().map(|x| x % n).collect();
        let v: Vec<usize> = v.into_iter().map(|x| x % n).collect();
        let got = qshuffle(&cd, &GradedChar::word(n, &u), &GradedChar::word(n, &v));
        let want = shuffle_oracle(&cd, &u, &v);
        prop_assert_eq!(&got, &want);
        let total: i64 = got.terms().map(|(_, p)| p.at_one()).sum();
        let binom = (1..=v.len() as i64).fold(1i64, |acc, k| acc * (u.len() as i64 + k) / k);
        prop_assert_eq!(total, binom);
    }

    #[test]
    fn t_modules_along_random_walks(
        ty in affine(5),
        start in 0usize..64,
        choices in prop::collection::vec(0usize..8, 1..9),
    ) {
        let cd = CartanDatum::build(ty);
        let kr = build_b11(ty);
        let word = walk_word(&kr, start, &choices);
        prop_assume!(!word.is_empty());
        let m = TrivModule::build(&cd, &kr, &word).expect("walk is realisable");
        prop_assert!(verify_relations(&cd, &m).is_ok());
        let c = m.character();
        prop_assert!(serre_clean(&cd, &c).unwrap());
        for j in 0..cd.n() {
            prop_assert!(jump(&cd, &c, j).unwrap() >= 0);
            prop_assert!((0..=2).contains(&eps(&c, j).unwrap()));
            prop_assert!((0..=2).contains(&eps_vee(&c, j).unwrap()));
        }
        let classes = class_table(ty);
        for w in d_class(&classes, &word) {
            if realize(&kr, &w).is_ok() {
                let other = TrivModule::build(&cd, &kr, &w).unwrap().character();
                prop_assert!(other.eq_up_to_shift(&c), "{:?} vs {:?}", word, w);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 16, ..ProptestConfig::default() })]

    #[test]
    fn bootstrap_builds_are_stable(ty in affine(3), pick in 0usize..8) {
        let cd = CartanDatum::build(ty);
        let kr = build_b11(ty);
        let tops = cd.level_one();
        let top = tops[pick % tops.len()];
        let depth = 4;
        let h = bootstrap_build(&cd, &kr, top, depth).unwrap();
        prop_assert!(h.invariant_violations(&cd).is_empty());
        prop_assert!(axiom_check(&cd, h.graph()).passed());
        let more = bootstrap_rounds(&cd, &kr, top, depth, depth + 6).unwrap();
        prop_assert!(rooted_iso(h.graph(), h.root(), more.graph(), more.root(), depth).is_ok());
    }
}
