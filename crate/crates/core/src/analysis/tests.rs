use super::*;
use crate::funceq::func_equal;
use crate::quiver::{enum_paths, QAElem};
use crate::variety::{check_identity, ut_mul, ADJAN};
use proptest::prelude::*;

fn sr(s: &str) -> Semiring {
    s.parse().unwrap()
}

#[test]
fn torsion_pairs() {
    let cases = [("boolean", (1, 2)), ("zmod:2", (1, 2)), ("zmod:3", (1, 3)), ("zmod:4", (2, 4)), ("zmod:5", (1, 5))];
    for (s, pair) in cases {
        assert_eq!(torsion_search(&sr(s), DEFAULT_TORSION_BOUND).unwrap().pair(), Some(pair), "{s}");
    }
}

#[test]
fn interval_falsified_by_reciprocal() {
    let w = torsion_search(&Semiring::Interval, 10).unwrap();
    let TorsionStatus::NoneUpTo { bound, falsifiers } = w.status else {
        panic!("interval has no torsion");
    };
    assert_eq!(bound, 10);
    assert_eq!(falsifiers.len(), 45);
    for (i, j, a) in falsifiers {
        assert_eq!(a, Elem::interval(1, j as i64), "({i},{j})");
    }
}

#[test]
fn infinite_semirings_have_no_torsion() {
    for s in ["tropical", "nat", "freeidpt:2"] {
        let s = sr(s);
        let w = torsion_search(&s, 10).unwrap();
        let TorsionStatus::NoneUpTo { falsifiers, .. } = &w.status else {
            panic!("{}", s.name());
        };
        for (i, j, a) in falsifiers {
            assert_ne!(s.pow(a, *i as u64).unwrap(), s.pow(a, *j as u64).unwrap());
        }
    }
    let w = torsion_search(&Semiring::Tropical, 10).unwrap();
    let TorsionStatus::NoneUpTo { falsifiers, .. } = w.status else { unreachable!() };
    assert!(falsifiers.iter().all(|(_, _, a)| *a == Elem::trop(1)));
}

#[test]
fn reports() {
    let r = local_finiteness_report(&Semiring::Boolean, 2, DEFAULT_TORSION_BOUND).unwrap();
    assert_eq!(r.verdict, Finiteness::LocallyFinite);
    assert_eq!(r.torsion.pair(), Some((1, 2)));
    assert!(r.certified.starts_with("(iii)"));

    let r = local_finiteness_report(&sr("zmod:2"), 3, DEFAULT_TORSION_BOUND).unwrap();
    assert_eq!(r.verdict, Finiteness::LocallyFinite);
    assert_eq!(r.torsion.pair(), Some((1, 2)));

    for s in ["tropical", "nat", "interval", "freeidpt:1"] {
        let r = local_finiteness_report(&sr(s), 2, DEFAULT_TORSION_BOUND).unwrap();
        assert_eq!(r.verdict, Finiteness::NotLocallyFinite, "{s}");
        assert_eq!(r.rank_one_distinct, Some(21), "{s}");
        assert_eq!(r.to_json()["verdict"], "not_locally_finite");
    }
}

/// Distinct elements among ρ(a^0..a^64), compared pairwise as functions.
fn dedup_powers(n: u32, s: &Semiring) -> usize {
    let mut reps: Vec<QAElem> = Vec::new();
    for m in 0..=64 {
        let e = QAElem::rho(&Word::from("a").pow(m), n, &['a'], s).unwrap();
        let mut seen = false;
        for r in &reps {
            if r.func_eq(&e).unwrap() {
                seen = true;
                break;
            }
        }
        if !seen {
            reps.push(e);
        }
    }
    reps.len()
}

#[test]
fn rank_one_free_monoids() {
    let t = enumerate_free(1, &Semiring::Boolean, 1, FreeMode::Monoid, 100).unwrap();
    assert_eq!(t.size(), 2);
    assert_eq!(t.words, vec![Word::empty(), Word::from("a")]);
    assert_eq!(t.table, vec![vec![1], vec![1]]);

    for s in [Semiring::Boolean, sr("zmod:2"), sr("zmod:3")] {
        for n in 1..=3 {
            let t = enumerate_free(n, &s, 1, FreeMode::Monoid, 10_000).unwrap();
            assert_eq!(t.size(), dedup_powers(n, &s), "{} n={n}", s.name());
        }
    }
}

#[test]
fn cayley_tables_are_closed() {
    for s in [Semiring::Boolean, sr("zmod:2")] {
        for n in 1..=2 {
            for mode in [FreeMode::Monoid, FreeMode::Semigroup] {
                let t = enumerate_free(n, &s, 2, mode, 100_000).unwrap();
                assert_eq!(t.table.len(), t.size());
                for (x, row) in t.table.iter().enumerate() {
                    for (g, &y) in row.iter().enumerate() {
                        assert!(y < t.size());
                        // the word of y and the word of x times g name the same element
                        let mut w = t.words[x].clone();
                        w.push(t.generators[g]);
                        let e = free_elem(&w, n, &t.generators, &s).unwrap();
                        assert!(free_eq(&e, &t.elements[y]).unwrap());
                    }
                }
                let csv = t.to_csv();
                assert_eq!(csv.lines().count(), t.size() + 1);
                assert!(csv.starts_with("index,word,a,b\n"));
                assert_eq!(t.to_json()["size"], t.size());
            }
        }
    }
}

#[test]
fn enumeration_limit() {
    let err = enumerate_free(2, &Semiring::Tropical, 1, FreeMode::Monoid, 30).unwrap_err();
    assert_eq!(err, Error::LimitExceeded(30));
    let err = enumerate_free(2, &Semiring::Interval, 1, FreeMode::Monoid, 30).unwrap_err();
    assert!(matches!(err, Error::Unsupported { .. }));
}

#[test]
fn quiver_algebra_closure_is_finite() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    for s in [Semiring::Boolean, sr("zmod:2")] {
        let paths = enum_paths(2, &['a', 'b'], 2);
        for _ in 0..5 {
            let gens: Vec<QAElem> = (0..2)
                .map(|_| {
                    let terms = (0..3).map(|_| {
                        let p = paths[rng.random_range(0..paths.len())].clone();
                        let v = Var::new(['a', 'b'][rng.random_range(0..2)], rng.random_range(1..=2));
                        let c = FormalPoly::var(&s, v).pow(rng.random_range(0..3));
                        (p, c)
                    });
                    QAElem::from_terms(2, &['a', 'b'], &s, terms).unwrap()
                })
                .collect();
            let closure = semigroup_closure(&gens, 100_000).unwrap();
            assert!(!closure.is_empty());
        }
    }
}

fn rewrite(w: &str) -> (u64, u64) {
    let mut w = w.to_string();
    while let Some(k) = w.find("pq") {
        w.replace_range(k..k + 2, "");
    }
    let q = w.chars().take_while(|&c| c == 'q').count();
    assert!(w[q..].chars().all(|c| c == 'p'));
    (q as u64, (w.len() - q) as u64)
}

fn normal(i: u64, j: u64) -> String {
    "q".repeat(i as usize) + &"p".repeat(j as usize)
}

#[test]
fn bicyclic_products() {
    let b = BicyclicElem::new;
    assert_eq!(bicyclic_mul(b(0, 1), b(1, 0)), b(0, 0));
    assert_eq!(bicyclic_mul(b(1, 0), b(0, 1)), b(1, 1));
    assert_eq!(bicyclic_mul(b(2, 1), b(3, 4)), b(4, 4));
    assert_eq!(rewrite(&(normal(2, 1) + &normal(3, 4))), (4, 4));
    for i in 0..6 {
        for j in 0..6 {
            for k in 0..6 {
                for l in 0..6 {
                    let got = bicyclic_mul(b(i, j), b(k, l));
                    assert_eq!((got.i, got.j), rewrite(&(normal(i, j) + &normal(k, l))));
                }
            }
        }
    }
    assert_eq!("qqp".parse::<BicyclicElem>().unwrap(), b(2, 1));
    assert_eq!("(3, 4)".parse::<BicyclicElem>().unwrap(), b(3, 4));
    assert_eq!(b(3, 4).to_string(), "(3,4)");
    assert_eq!(BicyclicElem::from_word(&b(3, 4).to_word()).unwrap(), b(3, 4));
}

#[test]
fn bicyclic_embedding() {
    let e = bicyclic_embed(BicyclicElem::IDENTITY);
    assert_eq!(e.to_string(), "[[0, 0], [-inf, 0]]");
    assert_eq!(verify_bicyclic_embedding(20), Ok(21u64.pow(4)));
    let p = bicyclic_embed(BicyclicElem::new(0, 1));
    let q = bicyclic_embed(BicyclicElem::new(1, 0));
    assert_eq!(ut_mul(&p, &q).unwrap(), e);
    assert_ne!(ut_mul(&q, &p).unwrap(), e);
}

#[test]
fn bicyclic_satisfies_adjan() {
    let adjan: Identity = ADJAN.parse().unwrap();
    assert_eq!(bicyclic_satisfies(&adjan, 10_000, 1, 12), None);
    let comm: Identity = "xy = yx".parse().unwrap();
    assert!(bicyclic_satisfies(&comm, 1_000, 1, 12).is_some());
}

#[test]
fn prefix_images() {
    let img = |w: &str| prefix_abelianization_embed(&Word::from(w)).unwrap();
    assert_eq!(img("ab").to_string(), "({a, ab}, ab)");
    assert_eq!(img("ba").to_string(), "({ab, b}, ab)");
    assert_ne!(img("ab"), img("ba"));
    assert_eq!(img("aa").to_string(), "({a, aa}, aa)");
    assert!(prefix_abelianization_embed(&Word::empty()).is_err());
    // injective on short words
    let words = Word::all_up_to(&['a', 'b'], 1, 6);
    let images: std::collections::HashSet<HElem> = words.iter().map(|w| img(&w.to_string())).collect();
    assert_eq!(images.len(), words.len());
}

#[test]
fn nat_contains_free_subsemigroup() {
    let words = Word::all_up_to(&['a', 'b'], 1, 6);
    let keys: std::collections::HashSet<_> = words
        .iter()
        .map(|w| free_elem(w, 2, &['a', 'b'], &Semiring::Nat).unwrap().key().cloned().unwrap())
        .collect();
    assert_eq!(keys.len(), words.len());
}

#[test]
fn identities_give_torsion() {
    let words = Word::all_up_to(&['a', 'b'], 0, 4);
    for s in [Semiring::Boolean, sr("zmod:2"), sr("zmod:3")] {
        let mut exercised = 0;
        for (k, u) in words.iter().enumerate() {
            for v in &words[k + 1..] {
                let id = Identity::new(u.clone(), v.clone());
                let Some((i, j)) = torsion_from_identity(&id) else { continue };
                if !check_identity(&id, 1, &s).unwrap().holds {
                    continue;
                }
                let x = FormalPoly::var(&s, Var::new('x', 1));
                assert!(func_equal(&x.pow(i), &x.pow(j)).unwrap().0, "{id} over {}", s.name());
                exercised += 1;
            }
        }
        assert!(exercised > 0);
    }
    assert_eq!(torsion_from_identity(&"ab = ba".parse().unwrap()), None);
    assert_eq!(torsion_from_identity(&"aa = a".parse().unwrap()), Some((1, 2)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn h_is_a_morphism(u in "[ab]{1,6}", v in "[ab]{1,6}") {
        let f = |w: &str| prefix_abelianization_embed(&Word::from(w)).unwrap();
        prop_assert_eq!(h_mul(&f(&u), &f(&v)), f(&(u.clone() + &v)));
    }

    #[test]
    fn bicyclic_associative(a in 0u64..30, b in 0u64..30, c in 0u64..30, d in 0u64..30, e in 0u64..30, f in 0u64..30) {
        let (x, y, z) = (BicyclicElem::new(a, b), BicyclicElem::new(c, d), BicyclicElem::new(e, f));
        prop_assert_eq!(bicyclic_mul(bicyclic_mul(x, y), z), bicyclic_mul(x, bicyclic_mul(y, z)));
    }
}
