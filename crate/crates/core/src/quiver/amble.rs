use super::Path;
use crate::poly::{CountPoly, Monomial, Var};
use crate::word::Word;

/// The paths of Γ⁰ labelled `w` whose loop removal is `pi`, one per
/// occurrence of the label of `pi` as a scattered subword of `w`.
pub fn enum_ambles(pi: &Path, w: &Word) -> Vec<Path> {
    let mut out = Vec::new();
    let mut positions = Vec::with_capacity(pi.len());
    occurrences(pi.labels(), w.letters(), 0, &mut positions, &mut |pos| {
        out.push(amble_at(pi, w, pos));
    });
    out
}

fn occurrences(
    pattern: &[char],
    text: &[char],
    from: usize,
    chosen: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if chosen.len() == pattern.len() {
        emit(chosen);
        return;
    }
    let need = pattern[chosen.len()];
    let remaining = pattern.len() - chosen.len();
    if text.len() < from + remaining {
        return;
    }
    for i in from..=text.len() - remaining {
        if text[i] == need {
            chosen.push(i);
            occurrences(pattern, text, i + 1, chosen, emit);
            chosen.pop();
        }
    }
}

/// The amble reading `w`, taking the edges of `pi` at the given positions
/// and looping everywhere else.
fn amble_at(pi: &Path, w: &Word, positions: &[usize]) -> Path {
    let mut vertices = vec![pi.start()];
    let mut consumed = 0;
    for (i, _) in w.letters().iter().enumerate() {
        if positions.get(consumed) == Some(&i) {
            consumed += 1;
        }
        vertices.push(pi.vertices()[consumed]);
    }
    Path::new(vertices, w.letters().to_vec()).expect("ambles are well formed")
}

/// The product of `σ_v` over the loops of `tau` (loop at v labelled σ).
pub fn amble_monomial(tau: &Path) -> Monomial {
    Monomial::from_exponents(
        tau.edges()
            .filter(|(i, _, j)| i == j)
            .map(|(v, l, _)| (Var::new(l, v), 1)),
    )
}

/// `f_π^w`: the sum of the monomials of all π-w-ambles, with multiplicity.
///
/// Dynamic programming over (prefix of `w`, edges of `pi` consumed). A
/// state with `t` edges consumed sits at vertex `v_t`; the next letter is
/// either a loop there or, if it matches, the next edge of `pi`.
pub fn f_pi_w(pi: &Path, w: &Word) -> CountPoly {
    let k = pi.len();
    let mut dp = vec![CountPoly::zero(); k + 1];
    dp[0] = CountPoly::one();
    for &c in w.letters() {
        let mut next = vec![CountPoly::zero(); k + 1];
        for t in 0..=k {
            if dp[t].is_zero() {
                continue;
            }
            let v = pi.vertices()[t];
            next[t] = next[t].add(&dp[t].scale(&Monomial::var(Var::new(c, v))));
            if t < k && pi.labels()[t] == c {
                next[t + 1] = next[t + 1].add(&dp[t]);
            }
        }
        dp = next;
    }
    dp.pop().expect("k + 1 states")
}

/// Number of occurrences of `pattern` as a scattered subword of `text`.
pub fn subword_occurrences(pattern: &Word, text: &Word) -> u128 {
    let p = pattern.letters();
    // ways[t]: occurrences of p[..t] in the prefix read so far
    let mut ways = vec![0u128; p.len() + 1];
    ways[0] = 1;
    for &c in text.letters() {
        for t in (0..p.len()).rev() {
            if p[t] == c {
                ways[t + 1] += ways[t];
            }
        }
    }
    ways[p.len()]
}

/// A permutation η of `1..=n` taking the k-th vertex of `pi` to the k-th
/// vertex of `phi`, as a table with `eta[v - 1] = η(v)`. Vertices off `pi`
/// are sent, in increasing order, to the unused targets in increasing order.
/// `None` when the labels differ.
pub fn relabel_permutation(pi: &Path, phi: &Path, n: u32) -> Option<Vec<u32>> {
    if pi.labels() != phi.labels() {
        return None;
    }
    let mut eta = vec![0u32; n as usize];
    for (&a, &b) in pi.vertices().iter().zip(phi.vertices()) {
        eta[a as usize - 1] = b;
    }
    let mut free_targets = (1..=n).filter(|t| !phi.vertices().contains(t));
    for slot in eta.iter_mut().filter(|s| **s == 0) {
        *slot = free_targets.next()?;
    }
    Some(eta)
}
