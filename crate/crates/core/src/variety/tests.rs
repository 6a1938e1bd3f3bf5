use super::*;
use crate::semiring::Elem;
use proptest::prelude::*;

fn id(s: &str) -> Identity {
    s.parse().unwrap()
}

fn sr(s: &str) -> Semiring {
    s.parse().unwrap()
}

fn trop_rows(rows: &[&[&str]]) -> UTMatrix {
    let s = Semiring::Tropical;
    let rows = rows
        .iter()
        .map(|r| r.iter().map(|e| s.parse_elem(e).unwrap()).collect())
        .collect();
    UTMatrix::from_rows(&s, rows).unwrap()
}

/// Every word over {a, b} of length at most 4, including the empty word.
fn short_words() -> Vec<Word> {
    Word::all_up_to(&['a', 'b'], 0, 4)
}

#[test]
fn tropical_square() {
    let x = trop_rows(&[&["0", "0"], &["-inf", "1"]]);
    let want = trop_rows(&[&["0", "1"], &["-inf", "2"]]);
    assert_eq!(ut_mul(&x, &x).unwrap(), want);
    // entry (1,2) by hand: max(0 + 0, 0 + 1)
    let s = Semiring::Tropical;
    let e01 = s.add(&s.mul(x.get(0, 0), x.get(0, 1)).unwrap(), &s.mul(x.get(0, 1), x.get(1, 1)).unwrap());
    assert_eq!(&e01.unwrap(), want.get(0, 1));
    assert_eq!(x.to_string(), "[[0, 0], [-inf, 1]]");
}

#[test]
fn identity_is_neutral_and_eval_multiplies() {
    let s = Semiring::Tropical;
    let x = trop_rows(&[&["1", "-2"], &["-inf", "3"]]);
    let y = trop_rows(&[&["0", "5"], &["-inf", "-inf"]]);
    let e = UTMatrix::identity(&s, 2);
    assert_eq!(ut_mul(&e, &x).unwrap(), x);
    assert_eq!(ut_mul(&x, &e).unwrap(), x);
    let a: BTreeMap<_, _> = [('a', x.clone()), ('b', y.clone())].into();
    let ab = ut_eval(&Word::from("ab"), &a, &s, 2).unwrap();
    assert_eq!(ab, ut_mul(&x, &y).unwrap());
    assert_eq!(ut_eval(&Word::empty(), &a, &s, 2).unwrap(), e);
}

#[test]
fn lower_entries_rejected() {
    let s = Semiring::Boolean;
    let rows = vec![vec![Elem::Bool(true), Elem::Bool(false)], vec![Elem::Bool(true), Elem::Bool(true)]];
    assert!(UTMatrix::from_rows(&s, rows).is_err());
}

#[test]
fn identity_syntax() {
    let i = id("xyyxxyxyyx = xyyxyxxyyx");
    assert_eq!(i.to_string(), ADJAN);
    assert_eq!(i.kind(), IdentityKind::Semigroup);
    assert_eq!(i.alphabet(), vec!['x', 'y']);
    assert_eq!(id("xx=1").kind(), IdentityKind::Monoid);
    assert!("xx".parse::<Identity>().is_err());
    assert!("x=y=z".parse::<Identity>().is_err());
}

#[test]
fn commutativity_in_dimension_one() {
    for s in ["tropical", "boolean", "nat", "interval", "zmod:3", "freeidpt:2"] {
        let v = check_identity(&id("ab = ba"), 1, &sr(s)).unwrap();
        assert!(v.holds, "{s}");
        let o = oracle_check(&id("ab = ba"), 1, &sr(s), &OracleBudget::default()).unwrap();
        assert!(o.holds, "{s}");
    }
}

#[test]
fn adjan_pair() {
    let adjan = id(ADJAN);
    let v = check_identity(&adjan, 2, &Semiring::Tropical).unwrap();
    assert!(v.holds);
    // the sampling oracle agrees
    let o = oracle_check(&adjan, 2, &Semiring::Tropical, &OracleBudget::default()).unwrap();
    assert!(o.holds);

    let v = check_identity(&adjan, 2, &Semiring::Nat).unwrap();
    assert!(!v.holds);
    assert!(v.witness_path.is_some());
    let a = v.witness_assignment.as_ref().expect("nat witness lifts to matrices");
    assert_ne!(
        ut_eval(&adjan.lhs, a, &Semiring::Nat, 2).unwrap(),
        ut_eval(&adjan.rhs, a, &Semiring::Nat, 2).unwrap()
    );
    assert!(v.recheck().unwrap());
}

#[test]
fn adjan_fails_in_dimension_three() {
    let v = check_identity(&id(ADJAN), 3, &Semiring::Tropical).unwrap();
    assert!(!v.holds);
    assert!(v.recheck().unwrap());
}

#[test]
fn boolean_square_cube() {
    let i = id("xx = xxx");
    assert!(check_identity(&i, 2, &Semiring::Boolean).unwrap().holds);
    let o = oracle_check(&i, 2, &Semiring::Boolean, &OracleBudget::default()).unwrap();
    assert!(o.holds);
    assert_eq!(o.method, Method::Exhaustive);
    assert_eq!(o.substitutions, Some(8));
}

#[test]
fn boolean_noncommuting_pair() {
    let i = id("ab = ba");
    let o = oracle_check(&i, 2, &Semiring::Boolean, &OracleBudget::default()).unwrap();
    assert!(!o.holds);
    assert_eq!(o.substitutions, Some(64));
    let a = o.witness_assignment.as_ref().unwrap();
    assert_ne!(ut_mul(&a[&'a'], &a[&'b']).unwrap(), ut_mul(&a[&'b'], &a[&'a']).unwrap());
    let v = check_identity(&i, 2, &Semiring::Boolean).unwrap();
    assert!(!v.holds);
    assert!(v.recheck().unwrap());
}

#[test]
fn exhaustive_budget_is_reported() {
    let tight = OracleBudget {
        exhaustive: 10,
        ..OracleBudget::default()
    };
    let err = oracle_check(&id("ab = ba"), 2, &Semiring::Boolean, &tight).unwrap_err();
    assert_eq!(err, Error::BudgetExceeded { needed: 64, budget: 10 });
}

#[test]
fn checker_agrees_with_exhaustive_oracle() {
    let words = short_words();
    for s in [Semiring::Boolean, sr("zmod:2")] {
        for n in 1..=3 {
            for (i, u) in words.iter().enumerate() {
                for v in &words[i + 1..] {
                    let ident = Identity::new(u.clone(), v.clone());
                    let c = check_identity(&ident, n, &s).unwrap();
                    let o = oracle_check(&ident, n, &s, &OracleBudget::default()).unwrap();
                    assert_eq!(c.holds, o.holds, "{ident} over {} at n={n}", s.name());
                    if !c.holds {
                        assert!(c.recheck().unwrap(), "{ident}");
                    }
                }
            }
        }
    }
}

#[test]
fn monotone_in_dimension() {
    let words = short_words();
    for s in [Semiring::Boolean, Semiring::Tropical] {
        for (i, u) in words.iter().enumerate() {
            for v in &words[i + 1..] {
                let ident = Identity::new(u.clone(), v.clone());
                let mut prev = true;
                for n in 1..=3 {
                    let h = check_identity(&ident, n, &s).unwrap().holds;
                    assert!(prev || !h, "{ident} fails at n={} but holds at n={n}", n - 1);
                    prev = h;
                }
            }
        }
    }
}

#[test]
fn monoid_identities_use_the_algebra_identity() {
    // x = 1 fails in UT_1(boolean) since x may be 0; xx = x holds there
    assert!(!check_identity(&id("x = 1"), 1, &Semiring::Boolean).unwrap().holds);
    assert!(check_identity(&id("xx = x"), 1, &Semiring::Boolean).unwrap().holds);
    // over zmod:2 in dimension one, x^2 = x but 1 = 1 only for the empty word
    let z = sr("zmod:2");
    for n in 1..=2 {
        let i = id("1 = 1");
        assert!(check_identity(&i, n, &z).unwrap().holds);
        let e = free_identity(n, &['x'], &z).unwrap();
        let one = free_elem(&Word::empty(), n, &['x'], &z).unwrap();
        assert!(free_eq(&e, &one).unwrap());
    }
    for s in [Semiring::Boolean, z] {
        let words = short_words();
        for u in &words {
            let ident = Identity::new(u.clone(), Word::empty());
            let c = check_identity(&ident, 2, &s).unwrap();
            let o = oracle_check(&ident, 2, &s, &OracleBudget::default()).unwrap();
            assert_eq!(c.holds, o.holds, "{ident}");
        }
    }
}

#[test]
fn verdict_json_round_trip() {
    let cases = [
        (ADJAN, 2, "nat"),
        (ADJAN, 2, "tropical"),
        ("ab = ba", 2, "boolean"),
        ("xx = xxx", 2, "boolean"),
        ("xyx = yxy", 2, "interval"),
    ];
    for (text, n, s) in cases {
        let s = sr(s);
        let v = check_identity(&id(text), n, &s).unwrap();
        let j = v.to_json();
        for k in ["holds", "witness_path", "witness_assignment", "seed"] {
            assert!(j.get(k).is_some(), "{k}");
        }
        let back = Verdict::from_json(&j, &s).unwrap();
        assert_eq!(back, v);
        assert!(back.recheck().unwrap(), "{text}");
        let o = oracle_check(&id(text), n, &s, &OracleBudget { samples: 50, ..OracleBudget::default() }).unwrap();
        let back = Verdict::from_json(&o.to_json(), &s).unwrap();
        assert_eq!(back, o);
        assert!(back.recheck().unwrap());
    }
}

#[test]
fn tropical_witness_lifts() {
    let i = id("xy = yx");
    let v = check_identity(&i, 2, &Semiring::Tropical).unwrap();
    assert!(!v.holds);
    assert!(v.witness_assignment.is_some());
    assert!(v.recheck().unwrap());
}

#[test]
fn free_examples() {
    let t = Semiring::Tropical;
    let ab = free_elem(&Word::from("ab"), 1, &['a', 'b'], &t).unwrap();
    let ba = free_elem(&Word::from("ba"), 1, &['a', 'b'], &t).unwrap();
    assert!(free_eq(&ab, &ba).unwrap());

    let b = Semiring::Boolean;
    let x2 = free_elem(&Word::from("xx"), 2, &['x'], &b).unwrap();
    let x3 = free_elem(&Word::from("xxx"), 2, &['x'], &b).unwrap();
    assert!(free_eq(&x2, &x3).unwrap());
    assert_eq!(x2.key(), x3.key());

    for s in [t, b, Semiring::Nat, sr("zmod:2")] {
        let a = free_elem(&Word::from("a"), 3, &['a', 'b'], &s).unwrap();
        let bb = free_elem(&Word::from("b"), 3, &['a', 'b'], &s).unwrap();
        let ab = free_elem(&Word::from("ab"), 3, &['a', 'b'], &s).unwrap();
        assert!(free_eq(&free_mul(&a, &bb).unwrap(), &ab).unwrap());
        assert_eq!(free_mul(&a, &bb).unwrap().key(), ab.key());
    }
}

#[test]
fn free_equality_matches_checker() {
    let words = short_words();
    for s in [Semiring::Boolean, Semiring::Tropical, sr("zmod:2")] {
        let elems: Vec<FreeElem> = words
            .iter()
            .map(|w| free_elem(w, 2, &['a', 'b'], &s).unwrap())
            .collect();
        for i in 0..words.len() {
            for j in i + 1..words.len() {
                let ident = Identity::new(words[i].clone(), words[j].clone());
                let c = check_identity(&ident, 2, &s).unwrap().holds;
                assert_eq!(free_eq(&elems[i], &elems[j]).unwrap(), c, "{ident}");
            }
        }
    }
}

#[test]
fn interval_free_elements_compare_functionally() {
    let s = Semiring::Interval;
    let x = free_elem(&Word::from("ab"), 2, &['a', 'b'], &s).unwrap();
    assert!(x.key().is_none());
    let y = free_elem(&Word::from("ab"), 2, &['a', 'b'], &s).unwrap();
    assert!(free_eq(&x, &y).unwrap());
}

fn word(max: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(prop_oneof![Just('a'), Just('b')], 0..=max).prop_map(Word::new)
}

fn semiring() -> impl Strategy<Value = Semiring> {
    prop_oneof![
        Just(Semiring::Boolean),
        Just(Semiring::Tropical),
        Just(Semiring::Nat),
        Just(sr("zmod:2")),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn free_mul_associative(s in semiring(), x in word(5), y in word(5), z in word(5)) {
        let f = |w: &Word| free_elem(w, 2, &['a', 'b'], &s).unwrap();
        let (fx, fy, fz) = (f(&x), f(&y), f(&z));
        let l = free_mul(&free_mul(&fx, &fy).unwrap(), &fz).unwrap();
        let r = free_mul(&fx, &free_mul(&fy, &fz).unwrap()).unwrap();
        prop_assert!(free_eq(&l, &r).unwrap());
        prop_assert_eq!(l.key(), r.key());
        prop_assert!(free_eq(&l, &f(&x.concat(&y).concat(&z))).unwrap());
    }

    #[test]
    fn free_eq_is_a_congruence(s in semiring(), x in word(5), y in word(5), z in word(5)) {
        let f = |w: &Word| free_elem(w, 2, &['a', 'b'], &s).unwrap();
        if free_eq(&f(&x), &f(&y)).unwrap() {
            prop_assert!(free_eq(&f(&x.concat(&z)), &f(&y.concat(&z))).unwrap());
            prop_assert!(free_eq(&f(&z.concat(&x)), &f(&z.concat(&y))).unwrap());
        }
    }

    #[test]
    fn oracle_counterexamples_are_sound(
        s in prop_oneof![Just(Semiring::Tropical), Just(Semiring::Nat), Just(Semiring::Interval)],
        u in word(4),
        v in word(4),
        seed in any::<u64>(),
    ) {
        let ident = Identity::new(u, v);
        let budget = OracleBudget { samples: 40, seed, ..OracleBudget::default() };
        let o = oracle_check(&ident, 2, &s, &budget).unwrap();
        if !o.holds {
            prop_assert!(o.recheck().unwrap());
            prop_assert!(!check_identity(&ident, 2, &s).unwrap().holds);
        }
    }
}
