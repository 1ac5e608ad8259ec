//! Points of the ordered circle at infinity of the punctured disk's universal
//! cover, with the base boundary lift removed.
//!
//! The disk deformation retracts onto a spine: a base vertex on the boundary,
//! one stem `s_i` to a loop vertex `v_i` per puncture, and a loop `ℓ_i` around
//! puncture `i`, so that `x_i = s_i ℓ_i s_i⁻¹`. A point is a reduced edge path
//! in the universal cover of the spine, ending in a terminal symbol:
//!
//! * a cusp sits in the angular gap between the two loop directions at a lift
//!   of `v_i` (the puncture face);
//! * a boundary gap sits in the outside angular gap at a lift of the base
//!   vertex (a boundary lift other than the base one).
//!
//! Counterclockwise ribbon order at a base vertex is `[gap, s_1, …, s_n]`, and
//! at a loop vertex `[stem, ℓ-out, cusp, ℓ-in]`. At a divergence vertex the
//! cyclic order is cut at the incoming direction; at the root it is cut at the
//! base boundary lift. Points diverging earlier in that linear order are
//! larger.

use std::cmp::Ordering;
use std::fmt;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::free::FreeWord;

/// Trichotomy verdict of a comparison.
pub type OrderVerdict = Ordering;

/// Orientation constant: whether a direction encountered earlier in the
/// counterclockwise linear order at a divergence vertex is the larger one.
/// Fixed by requiring `σ_1 > 1` in the Dehornoy diagram ordering.
pub const EARLIER_IS_GREATER: bool = true;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PointKind {
    /// Falls into puncture `i`.
    Cusp(usize),
    /// Ends on a non-base lift of the disk boundary.
    Gap,
}

impl PointKind {
    pub fn puncture(self) -> Option<usize> {
        match self {
            PointKind::Cusp(i) => Some(i),
            PointKind::Gap => None,
        }
    }
}

/// A normalized boundary point: for a cusp, `access` does not end in
/// `x_i^{±1}`; for a gap, `access` is the shortest (then lexicographically
/// least) word of its `⟨∂⟩`-coset and is not in `⟨∂⟩`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoundaryPoint {
    kind: PointKind,
    access: FreeWord,
}

impl BoundaryPoint {
    pub fn kind(&self) -> PointKind {
        self.kind
    }

    pub fn access(&self) -> &FreeWord {
        &self.access
    }

    pub fn rank(&self) -> usize {
        self.access.rank()
    }

    pub fn is_cusp(&self) -> bool {
        matches!(self.kind, PointKind::Cusp(_))
    }

    /// Parses `cusp(<word>;<i>)` or `gap(<word>)`.
    pub fn parse(text: &str, rank: usize) -> Result<Self> {
        let t = text.trim();
        if let Some(body) = t.strip_prefix("cusp(").and_then(|r| r.strip_suffix(')')) {
            let (word, idx) =
                body.split_once(';').ok_or_else(|| Error::Parse(format!("cusp needs `word;index`: {t:?}")))?;
            let i: usize = idx.trim().parse().map_err(|_| Error::Parse(format!("bad puncture index {idx:?}")))?;
            cusp_point(&FreeWord::parse(word, rank)?, i)
        } else if let Some(body) = t.strip_prefix("gap(").and_then(|r| r.strip_suffix(')')) {
            gap_point(&FreeWord::parse(body, rank)?)
        } else {
            Err(Error::Parse(format!("expected cusp(..) or gap(..), got {t:?}")))
        }
    }
}

impl fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            PointKind::Cusp(i) => write!(f, "cusp({};{i})", self.access),
            PointKind::Gap => write!(f, "gap({})", self.access),
        }
    }
}

impl fmt::Debug for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// The endpoint of an arc reaching puncture `i` along access path `w`.
pub fn cusp_point(w: &FreeWord, i: usize) -> Result<BoundaryPoint> {
    if i == 0 || i > w.rank() {
        return Err(Error::LetterOutOfRange { letter: i as i32, bound: w.rank() });
    }
    let letters = w.letters();
    let keep = letters.iter().rposition(|l| l.unsigned_abs() as usize != i).map_or(0, |p| p + 1);
    let access = FreeWord::from_letters_unchecked(w.rank(), letters[..keep].iter().copied());
    Ok(BoundaryPoint { kind: PointKind::Cusp(i), access })
}

/// The boundary lift `w·Π`, i.e. the coset `w⟨∂⟩`.
pub fn gap_point(w: &FreeWord) -> Result<BoundaryPoint> {
    let access = canonical_gap_representative(w);
    if access.is_empty() {
        return Err(Error::BaseCoset(w.to_string()));
    }
    Ok(BoundaryPoint { kind: PointKind::Gap, access })
}

/// Shortest word in `w⟨∂⟩`, ties broken lexicographically on letters.
pub fn canonical_gap_representative(w: &FreeWord) -> FreeWord {
    let n = w.rank();
    let d = FreeWord::boundary(n);
    // |w ∂^k| >= n|k| - |w|, so a representative no longer than w has |k| <= 2|w|/n.
    let bound = (2 * w.len() / n.max(1) + 1) as i64;
    (-bound..=bound)
        .map(|k| w.mul(&d.pow(k)))
        .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.letters().cmp(b.letters())))
        .expect("nonempty range")
}

const BASE_GAP: u8 = 0;
const STEM: u8 = 0;
const OUT: u8 = 1;
const CUSP: u8 = 2;
const IN: u8 = 3;

/// One step of a decorated path: the direction taken at a vertex, recorded as
/// its rank in the vertex's linear order (cyclic order cut at the incoming
/// direction).
fn rank(incoming: u8, choice: u8, cycle: u8) -> u8 {
    (choice + cycle - incoming) % cycle
}

fn decorated_path(p: &BoundaryPoint) -> Vec<u8> {
    let base_cycle = p.rank() as u8 + 1;
    let mut steps = Vec::with_capacity(3 * p.access.len() + 2);
    let mut base_in = BASE_GAP;
    let letters = p.access.letters();
    let mut pos = 0;
    while pos < letters.len() {
        let g = letters[pos].unsigned_abs() as u8;
        let positive = letters[pos] > 0;
        let mut k = 0;
        while pos < letters.len() && letters[pos].unsigned_abs() as u8 == g {
            k += 1;
            pos += 1;
        }
        steps.push(rank(base_in, g, base_cycle));
        let (go, arrive) = if positive { (OUT, IN) } else { (IN, OUT) };
        let mut loop_in = STEM;
        for _ in 0..k {
            steps.push(rank(loop_in, go, 4));
            loop_in = arrive;
        }
        steps.push(rank(loop_in, STEM, 4));
        base_in = g;
    }
    match p.kind {
        PointKind::Cusp(i) => {
            steps.push(rank(base_in, i as u8, base_cycle));
            steps.push(rank(STEM, CUSP, 4));
        }
        PointKind::Gap => steps.push(rank(base_in, BASE_GAP, base_cycle)),
    }
    steps
}

/// Total order on boundary points of equal rank.
pub fn compare_points(p: &BoundaryPoint, q: &BoundaryPoint) -> Result<OrderVerdict> {
    if p.rank() != q.rank() {
        return Err(Error::StrandMismatch(p.rank(), q.rank()));
    }
    if p == q {
        return Ok(Ordering::Equal);
    }
    let (a, b) = (decorated_path(p), decorated_path(q));
    let (ra, rb) = a
        .iter()
        .zip(&b)
        .find(|(x, y)| x != y)
        .map(|(x, y)| (*x, *y))
        .expect("distinct normal forms diverge before either terminates");
    let earlier = ra.cmp(&rb);
    Ok(if EARLIER_IS_GREATER { earlier.reverse() } else { earlier })
}

/// Image of a point under the canonical lift of a braid.
pub fn act_point(b: &BraidWord, p: &BoundaryPoint) -> Result<BoundaryPoint> {
    match p.kind {
        PointKind::Cusp(i) => {
            let loop_elt = FreeWord::generator(p.rank(), i).conjugate_by(&p.access);
            let image = b.artin_image(&loop_elt)?;
            let (c, g) = image.as_conjugate_of_generator().expect("automorphisms preserve meridian classes");
            debug_assert!(g > 0);
            cusp_point(&c, g as usize)
        }
        PointKind::Gap => gap_point(&b.artin_image(&p.access)?),
    }
}
