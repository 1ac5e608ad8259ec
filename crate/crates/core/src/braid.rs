//! Braid words, their action on the free group, and the handle-reduction sign.
//!
//! Composition convention: in `a.compose(&b)` the braid `b` acts first, so
//! `artin_image(a·b, w) = artin_image(a, artin_image(b, w))`. With this
//! convention word concatenation is left multiplication in every ordering.

use std::fmt;

use crate::error::{Error, Result};
use crate::free::FreeWord;

/// A word in the Artin generators `σ_1, …, σ_{n-1}` of `B_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::BadRange(format!("braid groups need n >= 2, got {strands}")));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::LetterOutOfRange { letter: l, bound: strands - 1 });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// `σ_i^{±1}` as a one-letter word.
    pub fn generator(strands: usize, letter: i32) -> Result<Self> {
        Self::new(strands, vec![letter])
    }

    pub fn strands(&self) -> usize {
        self.strands
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

    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    pub fn pow(&self, k: i64) -> BraidWord {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Image of `w` under the automorphism of `π_1(D_n)` induced by this braid.
    pub fn artin_image(&self, w: &FreeWord) -> Result<FreeWord> {
        if w.rank() != self.strands {
            return Err(Error::StrandMismatch(self.strands, w.rank()));
        }
        let mut cur = w.clone();
        for &l in self.letters.iter().rev() {
            cur = apply_generator(l, &cur);
        }
        Ok(cur)
    }

    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for &l in self.letters.iter().rev() {
            let i = l.unsigned_abs() as usize;
            p = Permutation::transposition(self.strands, i, i + 1).after(&p);
        }
        p
    }

    /// True iff the braid acts trivially on every generator of the free group.
    pub fn is_trivial(&self) -> bool {
        (1..=self.strands).all(|i| {
            let x = FreeWord::generator(self.strands, i);
            self.artin_image(&x).map(|y| y == x).unwrap_or(false)
        })
    }

    pub fn dehornoy_sign(&self) -> Sign {
        crate::handle::dehornoy_sign(self)
    }

    /// Parses the braid text format: an optional `n=<int>;` header followed by
    /// whitespace-separated signed integers. A header, when present, must agree
    /// with `n`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let body = match text.trim_start().strip_prefix("n=") {
            Some(rest) => {
                let (num, tail) = rest
                    .split_once(';')
                    .ok_or_else(|| Error::Parse("braid header `n=<int>` must end with ';'".into()))?;
                let header: usize =
                    num.trim().parse().map_err(|_| Error::Parse(format!("bad strand count {num:?}")))?;
                if header != n {
                    return Err(Error::StrandMismatch(header, n));
                }
                tail
            }
            None => text,
        };
        let letters = body
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<i32>().map_err(|_| Error::Parse(format!("malformed braid letter {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(n, letters)
    }
}

/// Parses braid text against `n` strands.
pub fn parse_braid(text: &str, n: usize) -> Result<BraidWord> {
    BraidWord::parse(text, n)
}

fn apply_generator(letter: i32, w: &FreeWord) -> FreeWord {
    let i = letter.unsigned_abs() as i32;
    let rank = w.rank();
    let mut out = Vec::with_capacity(w.len() + 4);
    for &l in w.letters() {
        let g = l.abs();
        let image: &[i32] = match (letter > 0, g == i, g == i + 1) {
            (true, true, _) => &[i, i + 1, -i],
            (true, _, true) => &[i],
            (false, true, _) => &[i + 1],
            (false, _, true) => &[-(i + 1), i, i + 1],
            _ => {
                out.push(l);
                continue;
            }
        };
        if l > 0 {
            out.extend_from_slice(image);
        } else {
            out.extend(image.iter().rev().map(|x| -x));
        }
    }
    FreeWord::from_letters_unchecked(rank, out)
}

/// `(σ_i σ_{i+1} ⋯ σ_{j-1})^{j-i+1}`: the positive Dehn twist along the round
/// curve enclosing punctures `i..=j`.
pub fn round_twist(i: usize, j: usize, n: usize) -> Result<BraidWord> {
    if !(1 <= i && i < j && j <= n) {
        return Err(Error::BadRange(format!("round twist needs 1 <= i < j <= n, got ({i}, {j}, {n})")));
    }
    let cycle: Vec<i32> = (i as i32..j as i32).collect();
    Ok(BraidWord::new(n, cycle)?.pow((j - i + 1) as i64))
}

/// The full twist `Δ²`, central in `B_n`.
pub fn full_twist(n: usize) -> Result<BraidWord> {
    round_twist(1, n, n)
}

/// Sign of a braid in the σ-ordering, or the trichotomy of any left ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn negate(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

/// A permutation of `{1, …, n}`; `images[k-1]` is the image of `k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a - 1, b - 1);
        p
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::Parse(format!("not a permutation: {images:?}")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn after(&self, other: &Permutation) -> Permutation {
        Permutation { images: other.images.iter().map(|&k| self.apply(k)).collect() }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};{}", self.strands, self)
    }
}
