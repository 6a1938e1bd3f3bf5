use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use utvar::analysis::{enumerate_free, FreeMode};
use utvar::variety::{check_identity, oracle_check, OracleBudget, ADJAN};
use utvar::{func_equal, FormalPoly, Identity, QAElem, Semiring, Word};

fn checker(c: &mut Criterion) {
    let adjan: Identity = ADJAN.parse().unwrap();
    c.bench_function("check adjan UT_2(tropical)", |b| {
        b.iter(|| check_identity(black_box(&adjan), 2, &Semiring::Tropical).unwrap())
    });
    c.bench_function("check adjan UT_3(tropical)", |b| {
        b.iter(|| check_identity(black_box(&adjan), 3, &Semiring::Tropical).unwrap())
    });
    let sq: Identity = "xxyy = yyxx".parse().unwrap();
    c.bench_function("oracle xxyy=yyxx UT_2(boolean)", |b| {
        b.iter(|| oracle_check(black_box(&sq), 2, &Semiring::Boolean, &OracleBudget::default()).unwrap())
    });
}

fn polynomials(c: &mut Criterion) {
    let s = Semiring::Tropical;
    let f = FormalPoly::parse(&s, "x_1^2 + x_2^2 + (3)*x_1*x_2*x_3 + x_3^4").unwrap();
    let g = FormalPoly::parse(&s, "x_1^2 + x_2^2 + x_3^4 + (1)*x_1*x_2").unwrap();
    c.bench_function("tropical func_equal 3 vars", |b| {
        b.iter(|| func_equal(black_box(&f), black_box(&g)).unwrap())
    });
    let w = Word::from("abbaabab");
    c.bench_function("rho abbaabab n=4", |b| {
        b.iter(|| QAElem::rho(black_box(&w), 4, &['a', 'b'], &Semiring::Nat).unwrap())
    });
}

fn enumeration(c: &mut Criterion) {
    c.bench_function("free monoid rank 2 UT_2(boolean)", |b| {
        b.iter(|| enumerate_free(2, &Semiring::Boolean, 2, FreeMode::Monoid, 100_000).unwrap())
    });
}

criterion_group!(benches, checker, polynomials, enumeration);
criterion_main!(benches);
