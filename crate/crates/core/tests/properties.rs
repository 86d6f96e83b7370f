mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use permclass::class::{
    basis, class_e_basis, classify_simple, count_words, decode_word, encode_d, is_member,
    members_by_length, simple_members_by_length, Letter,
};
use permclass::genfunc::{named, truncated_product, truncated_substitution};
use permclass::grid::{CellType, GriddingMatrix};
use permclass::perm::{perm, Permutation, Symmetry};
use permclass::{GfName, SimpleType, Word};

fn permutation(max_len: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_len)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn symmetry() -> impl Strategy<Value = Symmetry> {
    (any::<bool>(), any::<bool>(), any::<bool>()).prop_map(|(i, r, c)| Symmetry::new(i, r, c))
}

fn word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::sample::select(Letter::ALL.to_vec()), 1..=max_len).prop_map(Word)
}

fn matrix() -> impl Strategy<Value = GriddingMatrix> {
    let cell = prop::sample::select(vec![
        CellType::Empty,
        CellType::Increasing,
        CellType::Decreasing,
        CellType::SinglePoint,
    ]);
    (1..=3usize, 1..=3usize)
        .prop_flat_map(move |(r, c)| {
            prop::collection::vec(prop::collection::vec(cell.clone(), c), r)
        })
        .prop_filter_map("all cells empty", |cells| GriddingMatrix::new(cells).ok())
}

proptest! {
    #[test]
    fn containment_is_downward_closed(p in permutation(9), q in permutation(4), i in any::<prop::sample::Index>()) {
        let j = i.index(p.len());
        if let Some(smaller) = p.delete(j) {
            if smaller.contains(&q) {
                prop_assert!(p.contains(&q));
            }
        }
        if p.contains(&q) {
            if let Some(q_smaller) = q.delete(i.index(q.len())) {
                prop_assert!(p.contains(&q_smaller));
            }
        }
    }

    #[test]
    fn containment_is_symmetry_equivariant(p in permutation(9), q in permutation(4), s in symmetry()) {
        prop_assert_eq!(p.contains(&q), p.apply(s).contains(&q.apply(s)));
    }

    #[test]
    fn symmetries_compose(p in permutation(10), a in symmetry(), b in symmetry()) {
        prop_assert_eq!(p.apply(a).apply(b), p.apply(a.then(b)));
    }

    #[test]
    fn membership_is_closed_under_inverse_and_reverse_complement(p in permutation(9)) {
        prop_assert_eq!(is_member(&p), is_member(&p.inverse()));
        prop_assert_eq!(is_member(&p), is_member(&p.reverse_complement()));
    }

    #[test]
    fn decomposition_round_trips(p in permutation(12)) {
        let d = p.decompose();
        prop_assert_eq!(d.inflate(), p.clone());
        prop_assert!(d.skeleton.is_simple());
        prop_assert_eq!(d.skeleton.len(), d.blocks.len());
        if p.len() > 1 {
            prop_assert!(d.skeleton.len() >= 2);
        }
    }

    #[test]
    fn inflation_of_simple_decomposes_uniquely(
        sigma in permutation(7).prop_filter("simple of length >= 4", |s| s.len() >= 4 && s.is_simple()),
        seed in any::<u64>(),
    ) {
        use rand::seq::SliceRandom;
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let blocks: Vec<Permutation> = (0..sigma.len())
            .map(|_| {
                let k = rng.gen_range(1..=3);
                let mut v: Vec<usize> = (1..=k).collect();
                v.shuffle(&mut rng);
                Permutation::new(v).unwrap()
            })
            .collect();
        let d = sigma.inflate(&blocks).unwrap().decompose();
        prop_assert_eq!(d.skeleton, sigma);
        prop_assert_eq!(d.blocks, blocks);
    }

    #[test]
    fn grid_classes_are_downward_closed(m in matrix(), n in 1..=10usize, seed in any::<u64>(), i in any::<prop::sample::Index>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = common::random_gridded(&m, n, &mut rng);
        let g = m.find_gridding(&p);
        prop_assert!(g.is_some(), "{} rejects generated {}", m, p);
        prop_assert!(m.validate(&p, &g.unwrap()));
        if let Some(smaller) = p.delete(i.index(p.len())) {
            prop_assert!(m.contains(&smaller));
        }
    }

    #[test]
    fn words_decode_into_d_and_round_trip(w in word(12)) {
        let p = decode_word(&w).unwrap();
        prop_assert!(GriddingMatrix::class_d().contains(&p));
        prop_assert!(is_member(&p));
        let canonical = encode_d(&p).unwrap();
        prop_assert_eq!(decode_word(&canonical).unwrap(), p);
    }
}

#[test]
fn frontier_enumeration_matches_filtering() {
    for b in [
        basis().to_vec(),
        class_e_basis().to_vec(),
        vec![perm("321")],
    ] {
        let levels = members_by_length(&b, 8);
        for (k, level) in levels.iter().enumerate() {
            let mut got = level.clone();
            got.sort_unstable();
            assert_eq!(got, common::naive_members(&b, k + 1), "length {}", k + 1);
        }
    }
}

#[test]
fn enumeration_order_ignores_thread_count() {
    let with = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| members_by_length(&basis(), 8))
    };
    assert_eq!(with(1), with(4));
}

#[test]
fn classification_is_total_and_symmetry_coherent() {
    for level in simple_members_by_length(9) {
        for p in &level {
            let kind = classify_simple(p).unwrap_or_else(|e| panic!("{p}: {e}"));
            assert_eq!(
                classify_simple(&p.inverse()).unwrap(),
                kind.inverse(),
                "{p}"
            );
            assert_eq!(
                classify_simple(&p.reverse_complement()).unwrap(),
                kind.reverse_complement(),
                "{p}"
            );
        }
    }
}

#[test]
fn type_tallies_match_word_counts() {
    for (k, level) in simple_members_by_length(11).iter().enumerate() {
        let n = k + 4;
        for kind in [
            SimpleType::Type1,
            SimpleType::Type2,
            SimpleType::Type3,
            SimpleType::Type4,
        ] {
            let expected = count_words(kind, n).unwrap();
            for t in [kind, kind.inverse()] {
                let found = level
                    .iter()
                    .filter(|p| classify_simple(p).unwrap() == t)
                    .count();
                assert_eq!(
                    num_bigint::BigUint::from(found),
                    expected,
                    "{t} at length {n}"
                );
            }
        }
    }
}

#[test]
fn series_arithmetic_is_coherent() {
    const N: usize = 30;
    let names = [
        GfName::D,
        GfName::E,
        GfName::ENotSkew,
        GfName::FSkew,
        GfName::S1,
        GfName::S2,
        GfName::S4,
        GfName::F1,
        GfName::F4,
        GfName::Sporadic,
        GfName::S,
        GfName::F,
    ];
    for name in names {
        let g = named(name);
        let series = g.series(N).unwrap();
        // series · denominator = numerator, up to degree N
        let back = truncated_product(&series, g.denominator().coeffs(), N);
        let num: Vec<BigInt> = (0..=N).map(|k| g.numerator().coeff(k)).collect();
        assert_eq!(back, num, "{name}");
    }
    let d = named(GfName::D).series(N).unwrap();
    let e = named(GfName::E).series(N).unwrap();
    let product = (&named(GfName::ENotSkew) * &named(GfName::E))
        .series(N)
        .unwrap();
    assert_eq!(
        product,
        truncated_product(&named(GfName::ENotSkew).series(N).unwrap(), &e, N)
    );
    for s in [GfName::S1, GfName::S2, GfName::S4] {
        let composed = named(s)
            .compose(&named(GfName::D))
            .unwrap()
            .series(N)
            .unwrap();
        let direct = truncated_substitution(&named(s).series(N).unwrap(), &d, N);
        assert_eq!(composed, direct, "{s}(d)");
    }
}
