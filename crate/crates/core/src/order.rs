//! The left ordering of `B_n` induced by a curve diagram: braids are compared
//! by the endpoints of their images of the arcs, first arc first.

use std::cmp::Ordering;

use crate::boundary::{act_point, compare_points, BoundaryPoint};
use crate::braid::BraidWord;
use crate::classification::{realize, DiagramClass};
use crate::diagram::CurveDiagram;
use crate::error::{Error, Result};

/// The chain of arcs `∂ → p_1 → ⋯ → p_n`, boundary anchored.
pub fn dehornoy_diagram(n: usize) -> Result<CurveDiagram> {
    realize(&DiagramClass::dehornoy(n)?)
}

/// A diagram's ordering with its endpoints precomputed.
#[derive(Clone, Debug)]
pub struct DiagramOrder {
    n: usize,
    endpoints: Vec<BoundaryPoint>,
}

impl DiagramOrder {
    pub fn new(d: &CurveDiagram) -> Result<Self> {
        Ok(DiagramOrder { n: d.n(), endpoints: d.pull_tight().endpoints()? })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn compare(&self, b1: &BraidWord, b2: &BraidWord) -> Result<Ordering> {
        for b in [b1, b2] {
            if b.strands() != self.n {
                return Err(Error::StrandMismatch(b.strands(), self.n));
            }
        }
        for e in &self.endpoints {
            let v = compare_points(&act_point(b1, e)?, &act_point(b2, e)?)?;
            if v != Ordering::Equal {
                return Ok(v);
            }
        }
        Ok(Ordering::Equal)
    }

    pub fn sign(&self, b: &BraidWord) -> Result<Ordering> {
        if b.strands() != self.n {
            return Err(Error::StrandMismatch(b.strands(), self.n));
        }
        for e in &self.endpoints {
            let v = compare_points(&act_point(b, e)?, e)?;
            if v != Ordering::Equal {
                return Ok(v);
            }
        }
        Ok(Ordering::Equal)
    }
}

pub fn compare(b1: &BraidWord, b2: &BraidWord, d: &CurveDiagram) -> Result<Ordering> {
    DiagramOrder::new(d)?.compare(b1, b2)
}

/// `compare(b, 1, d)`.
pub fn sign(b: &BraidWord, d: &CurveDiagram) -> Result<Ordering> {
    DiagramOrder::new(d)?.sign(b)
}

/// Freely reduced braid words of exactly `len` letters in scan order: by
/// letter value `-(n-1) < ⋯ < -1 < 1 < ⋯ < n-1`, lexicographically.
pub fn words_of_length(n: usize, len: usize) -> Vec<BraidWord> {
    let alphabet: Vec<i32> = (1..n as i32).map(|i| -i).rev().chain(1..n as i32).collect();
    let mut level: Vec<Vec<i32>> = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(level.len() * alphabet.len());
        for w in &level {
            for &l in &alphabet {
                if w.last() != Some(&-l) {
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
        }
        level = next;
    }
    level.into_iter().map(|l| BraidWord::new(n, l).expect("letters in range")).collect()
}

/// A pair of ordering indices and the braid separating them, if found.
pub type Witness = ((usize, usize), Option<BraidWord>);

/// For each pair `(i, j)`, `i < j`, the first braid in scan order of length
/// at most `max_len` that is positive for one ordering and negative for the
/// other; `None` where the search is exhausted.
pub fn distinguishing_witnesses(orders: &[DiagramOrder], max_len: usize) -> Result<Vec<Witness>> {
    let Some(n) = orders.first().map(DiagramOrder::n) else {
        return Ok(Vec::new());
    };
    let mut found: Vec<Witness> =
        (0..orders.len()).flat_map(|i| (i + 1..orders.len()).map(move |j| ((i, j), None))).collect();
    let mut open = found.len();
    for len in 1..=max_len {
        if open == 0 {
            break;
        }
        for b in words_of_length(n, len) {
            let signs = orders.iter().map(|o| o.sign(&b)).collect::<Result<Vec<_>>>()?;
            for ((i, j), slot) in found.iter_mut().filter(|(_, s)| s.is_none()) {
                if signs[*i] != Ordering::Equal && signs[*i] == signs[*j].reverse() {
                    *slot = Some(b.clone());
                    open -= 1;
                }
            }
            if open == 0 {
                break;
            }
        }
    }
    Ok(found)
}
