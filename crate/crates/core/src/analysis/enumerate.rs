use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use serde_json::json;

use crate::error::{Error, Result};
use crate::funceq::CanonicalKey;
use crate::quiver::{Path, QAElem};
use crate::semiring::Semiring;
use crate::variety::{free_elem, free_identity, free_mul, FreeElem};
use crate::word::{Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FreeMode {
    Semigroup,
    Monoid,
}

/// The right Cayley graph of a free object: `table[x][g]` is the index of
/// element x times generator g.
#[derive(Clone, Debug)]
pub struct CayleyTable {
    pub n: u32,
    pub semiring: Semiring,
    pub mode: FreeMode,
    pub generators: Vec<Letter>,
    /// Shortlex least word for each element.
    pub words: Vec<Word>,
    pub elements: Vec<FreeElem>,
    pub table: Vec<Vec<usize>>,
}

impl CayleyTable {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,word");
        for g in &self.generators {
            out.push(',');
            out.push(*g);
        }
        out.push('\n');
        for (i, (w, row)) in self.words.iter().zip(&self.table).enumerate() {
            out.push_str(&format!("{i},{w}"));
            for t in row {
                out.push_str(&format!(",{t}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "semiring": self.semiring.name(),
            "mode": match self.mode { FreeMode::Semigroup => "semigroup", FreeMode::Monoid => "monoid" },
            "generators": self.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "size": self.size(),
            "elements": self.words.iter().zip(&self.elements).enumerate().map(|(i, (w, e))| json!({
                "index": i,
                "word": w.to_string(),
                "form": e.to_string(),
            })).collect::<Vec<_>>(),
            "table": self.table,
        })
    }
}

type Key = BTreeMap<Path, CanonicalKey>;

/// Words, elements and the right multiplication table.
type Closure = (Vec<Word>, Vec<FreeElem>, Vec<Vec<usize>>);

fn key_of(e: &FreeElem) -> Result<Key> {
    e.key().cloned().ok_or_else(|| Error::Unsupported {
        semiring: e.semiring().name(),
        what: "canonical keys for enumeration".into(),
    })
}

/// Breadth-first closure under right multiplication by `gens`, deduplicated
/// by canonical key. Each level is multiplied out in parallel and merged in
/// order, so the numbering does not depend on scheduling.
fn closure(
    seeds: Vec<(Word, FreeElem)>,
    gens: &[FreeElem],
    letters: &[Letter],
    limit: usize,
) -> Result<Closure> {
    let mut index: HashMap<Key, usize> = HashMap::new();
    let mut words = Vec::new();
    let mut elems = Vec::new();
    for (w, e) in seeds {
        if let std::collections::hash_map::Entry::Vacant(slot) = index.entry(key_of(&e)?) {
            slot.insert(elems.len());
            words.push(w);
            elems.push(e);
        }
    }
    if elems.len() > limit {
        return Err(Error::LimitExceeded(limit));
    }
    let mut table: Vec<Vec<usize>> = Vec::new();
    let mut done = 0;
    while done < elems.len() {
        let level = done..elems.len();
        let products: Vec<Result<(FreeElem, Key)>> = level
            .clone()
            .into_par_iter()
            .flat_map_iter(|x| (0..gens.len()).map(move |g| (x, g)))
            .map(|(x, g)| {
                let p = free_mul(&elems[x], &gens[g])?;
                let k = key_of(&p)?;
                Ok((p, k))
            })
            .collect();
        let mut products = products.into_iter();
        for x in level {
            let mut row = Vec::with_capacity(gens.len());
            for letter in letters.iter().take(gens.len()) {
                let (p, k) = products.next().expect("one product per pair")?;
                let idx = match index.get(&k) {
                    Some(&i) => i,
                    None => {
                        let i = elems.len();
                        if i >= limit {
                            return Err(Error::LimitExceeded(limit));
                        }
                        let mut w = words[x].clone();
                        w.push(*letter);
                        index.insert(k, i);
                        words.push(w);
                        elems.push(p);
                        i
                    }
                };
                row.push(idx);
            }
            table.push(row);
            done += 1;
        }
    }
    Ok((words, elems, table))
}

/// The free semigroup or monoid of the given rank in the variety generated
/// by UT_n(S), with generators `a, b, c, ...`. Fails with
/// [`Error::LimitExceeded`] once more than `limit` elements appear.
pub fn enumerate_free(
    n: u32,
    s: &Semiring,
    rank: usize,
    mode: FreeMode,
    limit: usize,
) -> Result<CayleyTable> {
    if rank == 0 || rank > 26 {
        return Err(Error::ShapeMismatch(format!("rank {rank} is not in 1..=26")));
    }
    let letters: Vec<Letter> = (b'a'..).take(rank).map(char::from).collect();
    let gens = letters
        .iter()
        .map(|&c| free_elem(&Word::new(vec![c]), n, &letters, s))
        .collect::<Result<Vec<_>>>()?;
    let seeds = match mode {
        FreeMode::Monoid => vec![(Word::empty(), free_identity(n, &letters, s)?)],
        FreeMode::Semigroup => letters
            .iter()
            .zip(&gens)
            .map(|(&c, g)| (Word::new(vec![c]), g.clone()))
            .collect(),
    };
    let (words, elements, table) = closure(seeds, &gens, &letters, limit)?;
    Ok(CayleyTable {
        n,
        semiring: s.clone(),
        mode,
        generators: letters,
        words,
        elements,
        table,
    })
}

/// The multiplicative subsemigroup generated by `gens` in the quiver
/// algebra over polynomial functions, as canonical elements.
pub fn semigroup_closure(gens: &[QAElem], limit: usize) -> Result<Vec<FreeElem>> {
    let canon = gens
        .iter()
        .map(|g| FreeElem::from_qa(g.clone()))
        .collect::<Result<Vec<_>>>()?;
    // words here only index generators
    let letters: Vec<Letter> = (0..canon.len() as u32)
        .map(|i| char::from_u32('a' as u32 + i).unwrap_or('?'))
        .collect();
    let seeds = letters
        .iter()
        .zip(&canon)
        .map(|(&c, g)| (Word::new(vec![c]), g.clone()))
        .collect();
    let (_, elems, _) = closure(seeds, &canon, &letters, limit)?;
    Ok(elems)
}
