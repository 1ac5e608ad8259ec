//! Reduced words in the free group on the puncture loops `x_1, …, x_n`.

use std::fmt;

use crate::error::{Error, Result};

/// A freely reduced word in `x_1, …, x_n`.
///
/// Letters are signed puncture indices: `+i` is `x_i`, `-i` is `x_i⁻¹`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

impl FreeWord {
    pub fn identity(rank: usize) -> Self {
        FreeWord { rank, letters: Vec::new() }
    }

    pub fn generator(rank: usize, i: usize) -> Self {
        debug_assert!(i >= 1 && i <= rank);
        FreeWord { rank, letters: vec![i as i32] }
    }

    /// Builds a word from raw letters, reducing it freely.
    pub fn new(rank: usize, letters: &[i32]) -> Result<Self> {
        for &l in letters {
            if l == 0 || l.unsigned_abs() as usize > rank {
                return Err(Error::LetterOutOfRange { letter: l, bound: rank });
            }
        }
        Ok(Self::from_letters_unchecked(rank, letters.iter().copied()))
    }

    pub(crate) fn from_letters_unchecked(rank: usize, letters: impl IntoIterator<Item = i32>) -> Self {
        let mut out: Vec<i32> = Vec::new();
        for l in letters {
            push_reduced(&mut out, l);
        }
        FreeWord { rank, letters: out }
    }

    /// The boundary loop `x_1 x_2 ⋯ x_n`.
    pub fn boundary(rank: usize) -> Self {
        FreeWord { rank, letters: (1..=rank as i32).collect() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn last(&self) -> Option<i32> {
        self.letters.last().copied()
    }

    pub fn mul(&self, other: &FreeWord) -> FreeWord {
        debug_assert_eq!(self.rank, other.rank);
        let mut out = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut out, l);
        }
        FreeWord { rank: self.rank, letters: out }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord { rank: self.rank, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    /// `self^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = FreeWord::identity(self.rank);
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    /// `c · self · c⁻¹`.
    pub fn conjugate_by(&self, c: &FreeWord) -> FreeWord {
        c.mul(self).mul(&c.inverse())
    }

    /// Splits `self = c · core · c⁻¹` with `core` cyclically reduced.
    pub fn cyclic_core(&self) -> (FreeWord, FreeWord) {
        let l = &self.letters;
        let mut k = 0;
        while 2 * k + 1 < l.len() && l[k] == -l[l.len() - 1 - k] {
            k += 1;
        }
        let c = FreeWord { rank: self.rank, letters: l[..k].to_vec() };
        let core = FreeWord { rank: self.rank, letters: l[k..l.len() - k].to_vec() };
        (c, core)
    }

    /// If `self` is conjugate to `x_i^{±1}`, returns `(c, ±i)` with `self = c x_i^{±1} c⁻¹`.
    pub fn as_conjugate_of_generator(&self) -> Option<(FreeWord, i32)> {
        let (c, core) = self.cyclic_core();
        match core.letters.as_slice() {
            [l] => Some((c, *l)),
            _ => None,
        }
    }

    /// Exponent sum of each generator, indexed `0..rank`.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0i64; self.rank];
        for &l in &self.letters {
            sums[l.unsigned_abs() as usize - 1] += l.signum() as i64;
        }
        sums
    }

    /// Whether every letter lies in the given generator set.
    pub fn uses_only(&self, gens: &[usize]) -> bool {
        self.letters.iter().all(|l| gens.contains(&(l.unsigned_abs() as usize)))
    }

    /// Replaces each generator `x_i` by `x_{map(i)}` in a word of the given rank.
    pub fn reindex(&self, rank: usize, map: impl Fn(usize) -> usize) -> FreeWord {
        FreeWord::from_letters_unchecked(
            rank,
            self.letters.iter().map(|&l| l.signum() * map(l.unsigned_abs() as usize) as i32),
        )
    }

    /// Parses `x1X2x3` style text (capital = inverse). Whitespace is ignored;
    /// an empty string or `e` denotes the identity.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() || t == "e" {
            return Ok(FreeWord::identity(rank));
        }
        let mut letters = Vec::new();
        let mut chars = t.chars().peekable();
        while let Some(c) = chars.next() {
            let sign = match c {
                'x' => 1,
                'X' => -1,
                _ => return Err(Error::Parse(format!("unexpected character {c:?} in word {text:?}"))),
            };
            let mut digits = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(*d);
                chars.next();
            }
            let idx: i32 =
                digits.parse().map_err(|_| Error::Parse(format!("missing generator index in word {text:?}")))?;
            letters.push(sign * idx);
        }
        FreeWord::new(rank, &letters)
    }
}

fn push_reduced(out: &mut Vec<i32>, l: i32) {
    if out.last() == Some(&-l) {
        out.pop();
    } else {
        out.push(l);
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in &self.letters {
            if l > 0 {
                write!(f, "x{l}")?;
            } else {
                write!(f, "X{}", -l)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            write!(f, "ε")
        } else {
            write!(f, "{self}")
        }
    }
}
