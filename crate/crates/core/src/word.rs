//! Words over an alphabet of single-character letters.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Letter = char;

/// A finite word over `char` letters. The empty word is the monoid identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn count(&self, letter: Letter) -> usize {
        self.0.iter().filter(|&&c| c == letter).count()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    /// Sorted distinct letters of the word.
    pub fn alphabet(&self) -> Vec<Letter> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn pow(&self, k: usize) -> Word {
        Word(self.0.repeat(k))
    }

    /// True when `self` occurs in `w` as a scattered subword.
    pub fn is_scattered_subword_of(&self, w: &Word) -> bool {
        let mut it = w.0.iter();
        self.0.iter().all(|c| it.any(|d| d == c))
    }

    /// All words over `alphabet` of length exactly `len`, in lexicographic order.
    pub fn all_of_length(alphabet: &[Letter], len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|w| {
                    alphabet.iter().map(move |&c| {
                        let mut w = w.clone();
                        w.push(c);
                        w
                    })
                })
                .collect();
        }
        out
    }

    /// All words of length `min..=max`, shortest first.
    pub fn all_up_to(alphabet: &[Letter], min: usize, max: usize) -> Vec<Word> {
        (min..=max)
            .flat_map(|l| Word::all_of_length(alphabet, l))
            .collect()
    }
}

impl From<&str> for Word {
    /// Panics on non-letter characters; use `parse` for untrusted input.
    fn from(s: &str) -> Self {
        s.parse().expect("invalid word literal")
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Letters are ASCII alphabetic characters. `1`, `ε` and the empty
    /// string denote the empty word.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" || s == "ε" {
            return Ok(Word::empty());
        }
        if let Some(c) = s.chars().find(|c| !c.is_ascii_alphabetic()) {
            return Err(Error::Parse(format!("`{c}` is not a letter in word `{s}`")));
        }
        Ok(Word(s.chars().collect()))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for c in &self.0 {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Parses `a,b,c` (or `abc`) into a sorted, deduplicated alphabet.
pub fn parse_alphabet(s: &str) -> Result<Vec<Letter>> {
    let mut out: Vec<Letter> = s
        .chars()
        .filter(|c| *c != ',' && !c.is_whitespace())
        .collect();
    if let Some(c) = out.iter().find(|c| !c.is_ascii_alphabetic()) {
        return Err(Error::Parse(format!("`{c}` is not a letter")));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scattered_subwords() {
        assert!(Word::from("ab").is_scattered_subword_of(&Word::from("abba")));
        assert!(!Word::from("ab").is_scattered_subword_of(&Word::from("ba")));
        assert!(Word::empty().is_scattered_subword_of(&Word::empty()));
    }

    #[test]
    fn parse_words() {
        assert_eq!("".parse::<Word>().unwrap(), Word::empty());
        assert_eq!("1".parse::<Word>().unwrap(), Word::empty());
        assert!("a1".parse::<Word>().is_err());
        assert_eq!(Word::from("xy").to_string(), "xy");
        assert_eq!(parse_alphabet("b,a,b").unwrap(), vec!['a', 'b']);
    }

    #[test]
    fn enumerate_words() {
        assert_eq!(Word::all_up_to(&['a', 'b'], 1, 6).len(), 126);
        assert_eq!(Word::all_of_length(&['a', 'b'], 0), vec![Word::empty()]);
    }
}
