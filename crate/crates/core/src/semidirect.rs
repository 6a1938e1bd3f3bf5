//! The n = 2 representation inside the semidirect product G = B^Σ ⋊ A,
//! where A is the monoid of monomial functions over Σ and B is the additive
//! monoid of polynomial functions. Variables σ_1 are identified with σ.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::funceq::func_equal;
use crate::poly::{FormalPoly, Monomial};
use crate::quiver::{Path, QAElem};
use crate::semiring::Semiring;
use crate::word::{Letter, Word};

fn same_function(f: &FormalPoly, g: &FormalPoly) -> bool {
    func_equal(f, g).map(|r| r.0).unwrap_or(false)
}

fn at_vertex_one(f: &FormalPoly) -> bool {
    f.variables().iter().all(|v| v.vertex == 1)
}

/// A monomial function in the letters, under multiplication.
#[derive(Clone, Debug)]
pub struct AElem {
    semiring: Semiring,
    mono: Monomial,
}

impl AElem {
    pub fn one(s: &Semiring) -> Self {
        AElem {
            semiring: s.clone(),
            mono: Monomial::one(),
        }
    }

    pub fn new(s: &Semiring, mono: Monomial) -> Result<Self> {
        if mono.vars().any(|v| v.vertex != 1) {
            return Err(Error::ShapeMismatch(format!("{mono} has variables off vertex 1")));
        }
        Ok(AElem {
            semiring: s.clone(),
            mono,
        })
    }

    /// The abelianisation of `w`.
    pub fn of_word(s: &Semiring, w: &Word) -> Self {
        AElem {
            semiring: s.clone(),
            mono: crate::poly::abelianize(w, 1),
        }
    }

    pub fn monomial(&self) -> &Monomial {
        &self.mono
    }

    pub fn as_poly(&self) -> FormalPoly {
        FormalPoly::monomial(&self.semiring, self.mono.clone(), self.semiring.one())
            .expect("one is in every semiring")
    }

    pub fn mul(&self, other: &AElem) -> AElem {
        AElem {
            semiring: self.semiring.clone(),
            mono: self.mono.mul(&other.mono),
        }
    }
}

impl PartialEq for AElem {
    /// Equality of monomial functions, so over the Boolean semiring a² = a.
    fn eq(&self, other: &Self) -> bool {
        self.semiring == other.semiring && same_function(&self.as_poly(), &other.as_poly())
    }
}

/// A map Σ → polynomial functions, added pointwise.
#[derive(Clone, Debug)]
pub struct BVec {
    coords: BTreeMap<Letter, FormalPoly>,
}

impl BVec {
    pub fn zero(sigma: &[Letter], s: &Semiring) -> Self {
        BVec {
            coords: sigma.iter().map(|&l| (l, FormalPoly::zero(s))).collect(),
        }
    }

    pub fn new(coords: BTreeMap<Letter, FormalPoly>) -> Self {
        BVec { coords }
    }

    pub fn get(&self, l: Letter) -> &FormalPoly {
        &self.coords[&l]
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.coords.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Letter, &FormalPoly)> {
        self.coords.iter()
    }

    pub fn add(&self, other: &BVec) -> BVec {
        BVec {
            coords: self
                .coords
                .iter()
                .map(|(&l, f)| (l, f.add_unchecked(&other.coords[&l])))
                .collect(),
        }
    }

    /// The action of A: multiply every coordinate by the monomial.
    pub fn act(&self, a: &AElem) -> BVec {
        BVec {
            coords: self.coords.iter().map(|(&l, f)| (l, f.scale(&a.mono))).collect(),
        }
    }
}

impl PartialEq for BVec {
    fn eq(&self, other: &Self) -> bool {
        self.coords.len() == other.coords.len()
            && self.coords.iter().all(|(l, f)| {
                other.coords.get(l).is_some_and(|g| same_function(f, g))
            })
    }
}

/// An element `(b, a)` of G with `(f,b)(g,c) = (f + b·g, bc)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GElem {
    pub b: BVec,
    pub a: AElem,
}

impl GElem {
    /// `(0, 1)`.
    pub fn identity(sigma: &[Letter], s: &Semiring) -> Self {
        GElem {
            b: BVec::zero(sigma, s),
            a: AElem::one(s),
        }
    }

    pub fn semiring(&self) -> &Semiring {
        &self.a.semiring
    }

    pub fn sigma(&self) -> Vec<Letter> {
        self.b.letters().collect()
    }

    /// The image of a word under the generators α(λ(ρ(σ))).
    pub fn of_word(w: &Word, sigma: &[Letter], s: &Semiring) -> Result<Self> {
        alpha(&QAElem::rho(w, 2, sigma, s)?.lambda_reduce()?)
    }
}

pub fn g_mul(x: &GElem, y: &GElem) -> Result<GElem> {
    if x.semiring() != y.semiring() {
        return Err(Error::SemiringMismatch {
            left: x.semiring().name(),
            right: y.semiring().name(),
        });
    }
    if x.sigma() != y.sigma() {
        return Err(Error::ShapeMismatch(format!(
            "alphabets differ: {:?} vs {:?}",
            x.sigma(),
            y.sigma()
        )));
    }
    Ok(GElem {
        b: x.b.add(&y.b.act(&x.a)),
        a: x.a.mul(&y.a),
    })
}

/// The free generators α(λ(ρ(σ))), one per letter.
pub fn generators(sigma: &[Letter], s: &Semiring) -> Result<Vec<GElem>> {
    sigma
        .iter()
        .map(|&l| GElem::of_word(&Word::new(vec![l]), sigma, s))
        .collect()
}

/// `α(p) = (b_p, a_p)` with `b_p(σ)` the coefficient of ⟨1 -σ-> 2⟩ and
/// `a_p` the coefficient of ⟨1⟩. Only defined on the image of λ∘ρ: a
/// non-monomial ⟨1⟩ coefficient or a variable at vertex 2 is rejected.
pub fn alpha(p: &QAElem) -> Result<GElem> {
    if p.n() != 2 {
        return Err(Error::ShapeMismatch(format!("α needs n = 2, got {}", p.n())));
    }
    let s = p.semiring();
    let head = p.coefficient(&Path::empty(1));
    let mono = match head.as_monomial() {
        Some((m, c)) if s.is_one(c) && m.vars().all(|v| v.vertex == 1) => m.clone(),
        _ => {
            return Err(Error::NotInImage(format!(
                "the coefficient of <1> is {head}, not a monomial"
            )))
        }
    };
    let mut coords = BTreeMap::new();
    for &l in p.sigma() {
        let f = p.coefficient(&Path::edge(1, l, 2));
        if !at_vertex_one(&f) {
            return Err(Error::NotInImage(format!("{f} has variables at vertex 2")));
        }
        coords.insert(l, f);
    }
    Ok(GElem {
        b: BVec::new(coords),
        a: AElem::new(s, mono)?,
    })
}

/// The unique preimage in λ(ρ(Σ*)): ⟨1 -σ-> 2⟩ ↦ b(σ), ⟨1⟩ ↦ a, ⟨2⟩ ↦ 1.
pub fn alpha_recover(g: &GElem) -> Result<QAElem> {
    let s = g.semiring();
    let sigma = g.sigma();
    let mut terms = vec![
        (Path::empty(1), g.a.as_poly()),
        (Path::empty(2), FormalPoly::one(s)),
    ];
    for (&l, f) in g.b.iter() {
        terms.push((Path::edge(1, l, 2), f.clone()));
    }
    QAElem::from_terms(2, &sigma, s, terms)
}

/// `aab` for a²b, `1` for the empty monomial.
fn letters_of(m: &Monomial) -> String {
    if m.is_one() {
        return "1".into();
    }
    m.iter()
        .map(|(v, &e)| v.letter.to_string().repeat(e as usize))
        .collect()
}

/// Terms by descending degree, joined by `+`.
fn fmt_b(f: &FormalPoly) -> String {
    f.render_with(
        |terms| terms.sort_by(|x, y| y.0.degree().cmp(&x.0.degree()).then(x.0.cmp(y.0))),
        letters_of,
        "+",
    )
}

impl fmt::Display for GElem {
    /// `((a -> a+1, b -> 0), aa)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let coords: Vec<String> = self
            .b
            .iter()
            .map(|(l, p)| format!("{l} -> {}", fmt_b(p)))
            .collect();
        write!(f, "(({}), {})", coords.join(", "), letters_of(&self.a.mono))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const AB: [char; 2] = ['a', 'b'];

    fn g(word: &str) -> GElem {
        GElem::of_word(&Word::from(word), &AB, &Semiring::Nat).unwrap()
    }

    #[test]
    fn generator_images() {
        assert_eq!(g("a").to_string(), "((a -> 1, b -> 0), a)");
        assert_eq!(g("b").to_string(), "((a -> 0, b -> 1), b)");
        assert_eq!(g("ab").to_string(), "((a -> 1, b -> a), ab)");
        assert_eq!(g("aa").to_string(), "((a -> a+1, b -> 0), aa)");
        assert_eq!(g("").to_string(), "((a -> 0, b -> 0), 1)");
        assert_eq!(g(""), GElem::identity(&AB, &Semiring::Nat));
    }

    #[test]
    fn products() {
        assert_eq!(g_mul(&g("a"), &g("b")).unwrap(), g("ab"));
        assert_eq!(g_mul(&g("a"), &g("a")).unwrap(), g("aa"));
        let id = GElem::identity(&AB, &Semiring::Nat);
        assert_eq!(g_mul(&id, &g("abba")).unwrap(), g("abba"));
        let other = GElem::identity(&AB, &Semiring::Boolean);
        assert!(g_mul(&id, &other).is_err());
    }

    #[test]
    fn recovery() {
        let nat = Semiring::Nat;
        for w in ["a", "", "ab", "abbab"] {
            let p = QAElem::rho(&Word::from(w), 2, &AB, &nat).unwrap().lambda_reduce().unwrap();
            assert_eq!(alpha_recover(&alpha(&p).unwrap()).unwrap(), p, "{w}");
        }
        assert_eq!(
            alpha_recover(&GElem::identity(&AB, &nat)).unwrap(),
            QAElem::identity(2, &AB, &nat)
        );
    }

    #[test]
    fn off_image_is_rejected() {
        let nat = Semiring::Nat;
        let p = QAElem::parse("(a_1 + b_1) <1> + <2>", 2, &AB, &nat).unwrap();
        assert!(matches!(alpha(&p), Err(Error::NotInImage(_))));
        let p = QAElem::parse("a_1 <1> + <2> + a_2 <1 -a-> 2>", 2, &AB, &nat).unwrap();
        assert!(matches!(alpha(&p), Err(Error::NotInImage(_))));
        assert!(alpha(&QAElem::identity(3, &AB, &nat)).is_err());
    }

    #[test]
    fn boolean_monomials_compare_as_functions() {
        let b = Semiring::Boolean;
        let x = GElem::of_word(&Word::from("aa"), &AB, &b).unwrap();
        let y = GElem::of_word(&Word::from("a"), &AB, &b).unwrap();
        assert_eq!(x.a, y.a);
        // a ∨ 1 = 1, so the b coordinates agree too
        assert_eq!(x.b, y.b);
    }

    fn word(max: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec(prop_oneof![Just('a'), Just('b')], 0..=max).prop_map(Word::new)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn alpha_is_a_morphism(u in word(4), v in word(4)) {
            let nat = Semiring::Nat;
            let lhs = GElem::of_word(&u.concat(&v), &AB, &nat).unwrap();
            let rhs = g_mul(&GElem::of_word(&u, &AB, &nat).unwrap(), &GElem::of_word(&v, &AB, &nat).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn g_is_associative(x in word(3), y in word(3), z in word(3), which in 0usize..3) {
            let s = [Semiring::Nat, Semiring::Tropical, Semiring::Boolean][which].clone();
            let (x, y, z) = (
                GElem::of_word(&x, &AB, &s).unwrap(),
                GElem::of_word(&y, &AB, &s).unwrap(),
                GElem::of_word(&z, &AB, &s).unwrap(),
            );
            let l = g_mul(&g_mul(&x, &y).unwrap(), &z).unwrap();
            let r = g_mul(&x, &g_mul(&y, &z).unwrap()).unwrap();
            prop_assert_eq!(l, r);
        }

        #[test]
        fn idempotent_b_coordinates(u in word(6)) {
            let b = Semiring::Boolean;
            let x = GElem::of_word(&u, &AB, &b).unwrap();
            prop_assert_eq!(x.b.add(&x.b), x.b);
        }
    }
}
