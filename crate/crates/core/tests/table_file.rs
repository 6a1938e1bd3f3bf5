use std::io::Write;

use utvar::analysis::{enumerate_free, local_finiteness_report, torsion_search, Finiteness, FreeMode};
use utvar::variety::{check_identity, oracle_check, OracleBudget};
use utvar::{Identity, Semiring, Word};

/// The three-element chain 0 < h < 1 with max as addition and min as
/// multiplication.
const CHAIN: &str = r#"{
  "elements": ["0", "h", "1"],
  "zero": "0",
  "one": "1",
  "add": [["0", "h", "1"], ["h", "h", "1"], ["1", "1", "1"]],
  "mul": [["0", "0", "0"], ["0", "h", "h"], ["0", "h", "1"]]
}"#;

fn chain() -> (tempfile::NamedTempFile, Semiring) {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(CHAIN.as_bytes()).unwrap();
    let s = Semiring::parse(&format!("table:{}", f.path().display())).unwrap();
    (f, s)
}

#[test]
fn loads_and_prints_elements() {
    let (_f, s) = chain();
    assert!(s.is_finite());
    assert_eq!(s.elements().unwrap().len(), 3);
    let h = s.parse_elem("h").unwrap();
    assert_eq!(s.fmt_elem(&s.mul(&h, &h).unwrap()), "h");
}

#[test]
fn chain_is_locally_finite() {
    let (_f, s) = chain();
    assert_eq!(torsion_search(&s, 12).unwrap().pair(), Some((1, 2)));
    let r = local_finiteness_report(&s, 2, 12).unwrap();
    assert_eq!(r.verdict, Finiteness::LocallyFinite);
    let t = enumerate_free(2, &s, 1, FreeMode::Monoid, 1000).unwrap();
    assert_eq!(Some(t.size()), r.rank_one_size);
}

#[test]
fn checker_matches_oracle_on_a_file_semiring() {
    let (_f, s) = chain();
    let words = Word::all_up_to(&['a', 'b'], 1, 3);
    for (i, u) in words.iter().enumerate() {
        for v in &words[i + 1..] {
            let id = Identity::new(u.clone(), v.clone());
            for n in 1..=2 {
                let c = check_identity(&id, n, &s).unwrap();
                let o = oracle_check(&id, n, &s, &OracleBudget::default()).unwrap();
                assert_eq!(c.holds, o.holds, "{id} at n={n}");
            }
        }
    }
}

#[test]
fn malformed_tables_are_rejected() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    // addition without an identity element
    f.write_all(br#"{"elements":["0","1"],"zero":"0","one":"1","add":[["1","1"],["1","1"]],"mul":[["0","0"],["0","1"]]}"#)
        .unwrap();
    assert!(Semiring::parse(&format!("table:{}", f.path().display())).is_err());
    assert!(Semiring::parse("table:/nonexistent/table.json").is_err());
}
