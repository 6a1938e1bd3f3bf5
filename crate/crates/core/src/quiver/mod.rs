//! The quivers Γ⁰ (with loops) and Γ (without) on vertices `1..=n`, their
//! paths, ambles, and the quiver algebra over polynomial functions.

mod algebra;
mod amble;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use algebra::QAElem;
pub use amble::{amble_monomial, enum_ambles, f_pi_w, relabel_permutation, subword_occurrences};

use crate::error::{Error, Result};
use crate::poly::{FormalPoly, Var};
use crate::word::{Letter, Word};

/// Γ⁰ when `loops` is set, Γ otherwise. Edges are `(i, σ, j)` with `i ≤ j`
/// (respectively `i < j`) for every letter σ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub n: u32,
    pub sigma: Vec<Letter>,
    pub loops: bool,
}

impl Quiver {
    pub fn new(n: u32, sigma: Vec<Letter>, loops: bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::ShapeMismatch("a quiver needs at least one vertex".into()));
        }
        Ok(Quiver { n, sigma, loops })
    }

    pub fn has_edge(&self, i: u32, sigma: Letter, j: u32) -> bool {
        let order_ok = if self.loops { i <= j } else { i < j };
        order_ok && (1..=self.n).contains(&i) && j <= self.n && self.sigma.contains(&sigma)
    }

    pub fn edges(&self) -> Vec<(u32, Letter, u32)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in i..=self.n {
                if i == j && !self.loops {
                    continue;
                }
                out.extend(self.sigma.iter().map(|&s| (i, s, j)));
            }
        }
        out
    }

    pub fn contains(&self, p: &Path) -> bool {
        p.vertices.iter().all(|v| (1..=self.n).contains(v))
            && p.edges().all(|(i, s, j)| self.has_edge(i, s, j))
    }

    /// Loop-free paths of length at most `max_len`, in path order.
    pub fn paths(&self, max_len: usize) -> Vec<Path> {
        enum_paths(self.n, &self.sigma, max_len)
    }
}

/// A path `⟨v_0 -l_1-> v_1 ... -l_k-> v_k⟩`. Vertices are nondecreasing;
/// paths of Γ have strictly increasing vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Path {
    vertices: Vec<u32>,
    labels: Vec<Letter>,
}

impl Path {
    pub fn new(vertices: Vec<u32>, labels: Vec<Letter>) -> Result<Self> {
        if vertices.is_empty() || labels.len() + 1 != vertices.len() {
            return Err(Error::ShapeMismatch(format!(
                "a path with {} labels needs {} vertices, got {}",
                labels.len(),
                labels.len() + 1,
                vertices.len()
            )));
        }
        if vertices.contains(&0) {
            return Err(Error::ShapeMismatch("vertices are numbered from 1".into()));
        }
        if vertices.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::ShapeMismatch("path vertices must be nondecreasing".into()));
        }
        Ok(Path { vertices, labels })
    }

    pub fn empty(v: u32) -> Self {
        Path {
            vertices: vec![v],
            labels: Vec::new(),
        }
    }

    pub fn edge(i: u32, sigma: Letter, j: u32) -> Self {
        Path {
            vertices: vec![i, j],
            labels: vec![sigma],
        }
    }

    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn labels(&self) -> &[Letter] {
        &self.labels
    }

    pub fn label(&self) -> Word {
        Word::new(self.labels.clone())
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn start(&self) -> u32 {
        self.vertices[0]
    }

    pub fn end(&self) -> u32 {
        *self.vertices.last().expect("paths have a vertex")
    }

    pub fn is_loop_free(&self) -> bool {
        self.vertices.windows(2).all(|w| w[0] < w[1])
    }

    pub fn edges(&self) -> impl Iterator<Item = (u32, Letter, u32)> + '_ {
        self.labels
            .iter()
            .enumerate()
            .map(|(k, &l)| (self.vertices[k], l, self.vertices[k + 1]))
    }

    /// `self` followed by `other`, when the end of one is the start of the other.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.end() != other.start() {
            return None;
        }
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(&other.vertices[1..]);
        let mut labels = self.labels.clone();
        labels.extend_from_slice(&other.labels);
        Some(Path { vertices, labels })
    }

    /// All ways of writing the path as `α β`.
    pub fn factorizations(&self) -> Vec<(Path, Path)> {
        (0..=self.len())
            .map(|k| {
                let a = Path {
                    vertices: self.vertices[..=k].to_vec(),
                    labels: self.labels[..k].to_vec(),
                };
                let b = Path {
                    vertices: self.vertices[k..].to_vec(),
                    labels: self.labels[k..].to_vec(),
                };
                (a, b)
            })
            .collect()
    }

    /// The path with its loop edges removed.
    pub fn remove_loops(&self) -> Path {
        let mut vertices = vec![self.start()];
        let mut labels = Vec::new();
        for (i, l, j) in self.edges() {
            if i != j {
                vertices.push(j);
                labels.push(l);
            }
        }
        Path { vertices, labels }
    }
}

impl Ord for Path {
    /// By length, then vertex sequence, then label.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.len(), &self.vertices, &self.labels).cmp(&(
            other.len(),
            &other.vertices,
            &other.labels,
        ))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Path {
    /// `<1 -a-> 2 -b-> 3>`; the empty path at 2 is `<2>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}", self.vertices[0])?;
        for (_, l, j) in self.edges() {
            write!(f, " -{l}-> {j}")?;
        }
        f.write_str(">")
    }
}

impl FromStr for Path {
    type Err = Error;

    fn from_str(s: &str) -> Result<Path> {
        let bad = || Error::Parse(format!("`{s}` is not a path like <1 -a-> 2>"));
        let body = s
            .trim()
            .strip_prefix('<')
            .and_then(|b| b.strip_suffix('>'))
            .ok_or_else(bad)?;
        let mut vertices = Vec::new();
        let mut labels = Vec::new();
        let mut rest = body.trim();
        loop {
            let (head, tail) = match rest.split_once('-') {
                Some((h, t)) => (h, Some(t)),
                None => (rest, None),
            };
            vertices.push(head.trim().parse::<u32>().map_err(|_| bad())?);
            let Some(tail) = tail else { break };
            let (label, after) = tail.split_once("->").ok_or_else(bad)?;
            let mut chars = label.trim().chars();
            let l = chars.next().filter(|c| c.is_ascii_alphabetic()).ok_or_else(bad)?;
            if chars.next().is_some() {
                return Err(bad());
            }
            labels.push(l);
            rest = after;
        }
        Path::new(vertices, labels)
    }
}

/// Every loop-free path of Γ_{n,Σ} with at most `max_len` edges, ordered by
/// length, then vertex sequence, then label.
pub fn enum_paths(n: u32, sigma: &[Letter], max_len: usize) -> Vec<Path> {
    let mut sigma = sigma.to_vec();
    sigma.sort_unstable();
    sigma.dedup();
    let mut out = Vec::new();
    let top = max_len.min(n.saturating_sub(1) as usize);
    for len in 0..=top {
        for vertices in increasing_sequences(n, len + 1) {
            for labels in label_words(&sigma, len) {
                out.push(Path {
                    vertices: vertices.clone(),
                    labels,
                });
            }
        }
    }
    out
}

/// Strictly increasing sequences of `k` vertices in `1..=n`, lexicographic.
fn increasing_sequences(n: u32, k: usize) -> Vec<Vec<u32>> {
    fn go(next: u32, n: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in next..=n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

fn label_words(sigma: &[Letter], len: usize) -> Vec<Vec<Letter>> {
    (0..len).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|w| {
                sigma.iter().map(move |&s| {
                    let mut w = w.clone();
                    w.push(s);
                    w
                })
            })
            .collect()
    })
}

/// Applies the vertex permutation `eta` (`eta[v - 1]` is the image of `v`)
/// to every variable of `f`.
pub fn relabel_poly(f: &FormalPoly, eta: &[u32]) -> FormalPoly {
    f.map_vars(|v| Var::new(v.letter, eta[v.vertex as usize - 1]))
}
