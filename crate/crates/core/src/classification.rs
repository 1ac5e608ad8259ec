//! Conjugacy classes of finite-type orderings: canonical class trees, their
//! count, enumeration, standard realization and read-off from diagrams.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{CheckedAdd, CheckedMul, One, Zero};

use crate::boundary::{cusp_point, gap_point, BoundaryPoint};
use crate::braid::BraidWord;
use crate::diagram::{components_side_sets, Anchor, Arc, CurveDiagram, Provenance};
use crate::error::{Error, Result};
use crate::free::FreeWord;

/// Canonical form of a `B_n`-orbit of loose-isotopy classes of total curve
/// diagrams.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiagramClass {
    /// Two punctures, one arc.
    Base2,
    /// First arc ends in a puncture; the rest is a class on one fewer puncture.
    Tail(Box<DiagramClass>),
    /// First arc separates `k` punctures (on its left) from the other `n - k`.
    /// `left_labels` are the labels among `2..=n-1` of the arcs on the left.
    Split { k: usize, left_labels: Vec<usize>, left: Box<DiagramClass>, right: Box<DiagramClass> },
}

impl DiagramClass {
    pub fn punctures(&self) -> usize {
        match self {
            DiagramClass::Base2 => 2,
            DiagramClass::Tail(sub) => sub.punctures() + 1,
            DiagramClass::Split { left, right, .. } => left.punctures() + right.punctures(),
        }
    }

    /// The chain class of the Dehornoy diagram.
    pub fn dehornoy(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadRange(format!("classes need n >= 2, got {n}")));
        }
        let mut c = DiagramClass::Base2;
        for _ in 2..n {
            c = DiagramClass::Tail(Box::new(c));
        }
        Ok(c)
    }

    /// Checks the structural invariants of every `Split` node.
    pub fn check(&self) -> Result<()> {
        match self {
            DiagramClass::Base2 => Ok(()),
            DiagramClass::Tail(sub) => sub.check(),
            DiagramClass::Split { k, left_labels, left, right } => {
                let n = self.punctures();
                if *k != left.punctures() || *k < 2 || *k + 2 > n {
                    return Err(Error::InvalidClass(format!("split size k={k} invalid for n={n}")));
                }
                let sorted = left_labels.windows(2).all(|w| w[0] < w[1]);
                let in_range = left_labels.iter().all(|&l| (2..n).contains(&l));
                if left_labels.len() != k - 1 || !sorted || !in_range {
                    return Err(Error::InvalidClass(format!(
                        "left labels {left_labels:?} must be {} increasing labels from 2..={}",
                        k - 1,
                        n - 1
                    )));
                }
                left.check()?;
                right.check()
            }
        }
    }

    /// Parses `B`, `T(<class>)` or `S(k=<int>;L={<labels>};<class>;<class>)`.
    pub fn parse(text: &str) -> Result<Self> {
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let c = parse_class(&t)?;
        c.check()?;
        Ok(c)
    }
}

fn parse_class(t: &str) -> Result<DiagramClass> {
    let bad = || Error::Parse(format!("malformed class expression {t:?}"));
    if t == "B" {
        return Ok(DiagramClass::Base2);
    }
    if let Some(inner) = t.strip_prefix("T(").and_then(|r| r.strip_suffix(')')) {
        return Ok(DiagramClass::Tail(Box::new(parse_class(inner)?)));
    }
    let inner = t.strip_prefix("S(").and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
    let parts = split_top_level(inner);
    let [k, labels, left, right] = parts.as_slice() else {
        return Err(bad());
    };
    let k: usize = k.strip_prefix("k=").and_then(|v| v.parse().ok()).ok_or_else(bad)?;
    let labels = labels.strip_prefix("L={").and_then(|v| v.strip_suffix('}')).ok_or_else(bad)?;
    let left_labels = labels
        .split(',')
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|_| bad()))
        .collect::<Result<Vec<_>>>()?;
    Ok(DiagramClass::Split { k, left_labels, left: Box::new(parse_class(left)?), right: Box::new(parse_class(right)?) })
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in s.char_indices() {
        match c {
            '(' | '{' => depth += 1,
            ')' | '}' => depth -= 1,
            ';' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

impl fmt::Display for DiagramClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramClass::Base2 => write!(f, "B"),
            DiagramClass::Tail(sub) => write!(f, "T({sub})"),
            DiagramClass::Split { k, left_labels, left, right } => {
                let labels: Vec<String> = left_labels.iter().map(|l| l.to_string()).collect();
                write!(f, "S(k={k};L={{{}}};{left};{right})", labels.join(","))
            }
        }
    }
}

impl fmt::Debug for DiagramClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Integer types the class count can be computed in.
pub trait CountScalar: Clone + Zero + One + CheckedAdd + CheckedMul {}
impl<T: Clone + Zero + One + CheckedAdd + CheckedMul> CountScalar for T {}

/// `N_n` from `N_2 = 1`, `N_n = N_{n-1} + Σ_{k=2}^{n-2} C(n-2, k-1) N_k N_{n-k}`.
/// Fails with [`Error::Overflow`] if `T` cannot hold an intermediate value.
pub fn count_classes_in<T: CountScalar>(n: usize) -> Result<T> {
    if n < 2 {
        return Err(Error::BadRange(format!("N_n is defined for n >= 2, got {n}")));
    }
    let overflow = || Error::Overflow(n);
    // binom[r] holds row n-2 of Pascal's triangle once the loop reaches n.
    let mut counts: Vec<T> = vec![T::zero(), T::zero(), T::one()];
    let mut binom: Vec<T> = vec![T::one()];
    for m in 3..=n {
        let mut next = vec![T::one(); m - 1];
        for r in 1..m - 2 {
            next[r] = binom[r - 1].checked_add(&binom[r]).ok_or_else(overflow)?;
        }
        binom = next;
        let mut total = counts[m - 1].clone();
        for k in 2..=m.saturating_sub(2) {
            let term = binom[k - 1]
                .checked_mul(&counts[k])
                .and_then(|t| t.checked_mul(&counts[m - k]))
                .ok_or_else(overflow)?;
            total = total.checked_add(&term).ok_or_else(overflow)?;
        }
        counts.push(total);
    }
    Ok(counts[n].clone())
}

/// `N_n` in exact arithmetic.
pub fn count_classes(n: usize) -> Result<crate::ExactCount> {
    count_classes_in(n)
}

/// All canonical classes on `n` punctures: `Tail` classes first, then `Split`
/// by ascending `k`, label subsets in lexicographic order, then sub-classes.
pub fn enumerate_classes(n: usize) -> Result<Vec<DiagramClass>> {
    if n < 2 {
        return Err(Error::BadRange(format!("classes need n >= 2, got {n}")));
    }
    let mut table: Vec<Vec<DiagramClass>> = vec![Vec::new(), Vec::new(), vec![DiagramClass::Base2]];
    for m in 3..=n {
        let mut here: Vec<DiagramClass> =
            table[m - 1].iter().map(|c| DiagramClass::Tail(Box::new(c.clone()))).collect();
        for k in 2..=m.saturating_sub(2) {
            for left_labels in combinations(2, m - 1, k - 1) {
                for l in &table[k] {
                    for r in &table[m - k] {
                        here.push(DiagramClass::Split {
                            k,
                            left_labels: left_labels.clone(),
                            left: Box::new(l.clone()),
                            right: Box::new(r.clone()),
                        });
                    }
                }
            }
        }
        table.push(here);
    }
    Ok(table.swap_remove(n))
}

/// Size-`size` subsets of `lo..=hi`, increasing, in lexicographic order.
fn combinations(lo: usize, hi: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(next: usize, hi: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for v in next..=hi {
            if hi + 1 - v < size - cur.len() {
                break;
            }
            cur.push(v);
            go(v + 1, hi, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(lo, hi, size, &mut Vec::new(), &mut out);
    out
}

/// The arc a class node places first, in the disk's standard positions:
/// punctures `gens` (contiguous, increasing).
pub(crate) fn standard_first_endpoint(c: &DiagramClass, gens: &[usize], n: usize) -> BoundaryPoint {
    match c {
        DiagramClass::Base2 | DiagramClass::Tail(_) => {
            cusp_point(&FreeWord::identity(n), gens[0]).expect("generator in range")
        }
        DiagramClass::Split { k, .. } => {
            let g = FreeWord::from_letters_unchecked(n, gens[..*k].iter().map(|&i| i as i32));
            gap_point(&g).expect("proper separating loop")
        }
    }
}

/// Children of a class node together with their puncture ranges and labels.
pub(crate) fn children<'a>(
    c: &'a DiagramClass,
    gens: &[usize],
    labels: &[usize],
) -> Vec<(&'a DiagramClass, Vec<usize>, Vec<usize>)> {
    match c {
        DiagramClass::Base2 => Vec::new(),
        DiagramClass::Tail(sub) => vec![(sub.as_ref(), gens[1..].to_vec(), labels[1..].to_vec())],
        DiagramClass::Split { k, left_labels, left, right } => {
            let left_global: Vec<usize> = left_labels.iter().map(|&l| labels[l - 1]).collect();
            let right_global: Vec<usize> = labels[1..].iter().copied().filter(|l| !left_global.contains(l)).collect();
            vec![(left.as_ref(), gens[..*k].to_vec(), left_global), (right.as_ref(), gens[*k..].to_vec(), right_global)]
        }
    }
}

/// A validated total diagram in standard position, with provenance `c`.
///
/// `Tail` puts its arc from the boundary to the leftmost puncture of its
/// region; `Split` puts a boundary-to-boundary arc whose loop is the product
/// of the first `k` region generators. Sub-classes are placed recursively in
/// their sub-disks by order-preserving generator and label maps. The arc with
/// label `ℓ` of `m` starts at slot `m + 1 - ℓ`, so later arcs start between
/// the basepoint and earlier ones.
pub fn realize(c: &DiagramClass) -> Result<CurveDiagram> {
    c.check()?;
    let n = c.punctures();
    let m = n - 1;
    let mut placed: Vec<(usize, BoundaryPoint)> = Vec::with_capacity(m);
    let mut stack = vec![(c, (1..=n).collect::<Vec<_>>(), (1..=m).collect::<Vec<_>>())];
    while let Some((node, gens, labels)) = stack.pop() {
        placed.push((labels[0], standard_first_endpoint(node, &gens, n)));
        stack.extend(children(node, &gens, &labels));
    }
    placed.sort_by_key(|(l, _)| *l);
    let arcs = placed.into_iter().map(|(label, p)| Arc::from_endpoint(label, (m + 1 - label) as i64, &p)).collect();
    Ok(CurveDiagram::with_provenance(n, arcs, Provenance { class: c.clone(), braid: BraidWord::identity(n) }))
}

/// Arc data needed for class read-off.
#[derive(Clone, Debug)]
enum ArcShape {
    Puncture(usize),
    Chord(BTreeSet<usize>),
}

/// Canonical class of a total diagram's orbit, read off from the arcs: the
/// first arc's kind, the split size and label distribution, recursively.
pub fn class_of(d: &CurveDiagram) -> Result<DiagramClass> {
    let d = d.pull_tight();
    let n = d.n();
    if d.arcs().len() != n - 1 {
        return Err(Error::Unsupported(format!(
            "class_of needs a total diagram ({} arcs on {n} punctures)",
            d.arcs().len()
        )));
    }
    let sides = components_side_sets(&d)?;
    let shapes: Vec<(usize, ArcShape)> = d
        .arcs()
        .iter()
        .zip(sides)
        .map(|(a, side)| {
            let shape = match (a.anchor(), side) {
                (Anchor::Puncture(i), _) => ArcShape::Puncture(*i),
                (_, Some(left)) => ArcShape::Chord(left),
                _ => unreachable!("pulled tight"),
            };
            (a.label(), shape)
        })
        .collect();
    read_off(&(1..=n).collect(), &shapes)
}

fn read_off(region: &BTreeSet<usize>, arcs: &[(usize, ArcShape)]) -> Result<DiagramClass> {
    let invalid = |msg: String| Error::InvalidDiagram(vec![msg]);
    if arcs.len() + 1 != region.len() {
        return Err(invalid(format!("region {region:?} holds {} arcs", arcs.len())));
    }
    let (label, first) = &arcs[0];
    let rest = &arcs[1..];
    let cut = match first {
        ArcShape::Puncture(p) if region.contains(p) => Some(*p),
        ArcShape::Puncture(p) => return Err(invalid(format!("arc {label} ends at puncture {p} outside its region"))),
        ArcShape::Chord(side) => {
            let left: BTreeSet<usize> = region.intersection(side).copied().collect();
            let right: BTreeSet<usize> = region.difference(side).copied().collect();
            match (left.len(), right.len()) {
                (0, _) | (_, 0) => return Err(invalid(format!("arc {label} does not cut its region"))),
                (1, _) => left.first().copied(),
                (_, 1) => right.first().copied(),
                (k, _) => {
                    let mut left_arcs = Vec::new();
                    let mut right_arcs = Vec::new();
                    let mut left_labels = Vec::new();
                    for (pos, (l, shape)) in rest.iter().enumerate() {
                        let on_left = match shape {
                            ArcShape::Puncture(p) => left.contains(p),
                            ArcShape::Chord(s) => {
                                let r = right.intersection(s).count();
                                r == 0 || r == right.len()
                            }
                        };
                        if on_left {
                            left_arcs.push((*l, shape.clone()));
                            left_labels.push(pos + 2);
                        } else {
                            right_arcs.push((*l, shape.clone()));
                        }
                    }
                    if left_arcs.is_empty() || right_arcs.is_empty() {
                        return Err(invalid(format!("arcs after {label} do not fill both sides")));
                    }
                    return Ok(DiagramClass::Split {
                        k,
                        left_labels,
                        left: Box::new(read_off(&left, &left_arcs)?),
                        right: Box::new(read_off(&right, &right_arcs)?),
                    });
                }
            }
        }
    };
    let p = cut.expect("every non-split branch cuts one puncture");
    if region.len() == 2 {
        return Ok(DiagramClass::Base2);
    }
    let mut sub = region.clone();
    sub.remove(&p);
    Ok(DiagramClass::Tail(Box::new(read_off(&sub, rest)?)))
}

/// `σ_a` where `{a, a+1}` is the twice-punctured region left by deleting the
/// arc of maximal label from the standard realization: the least positive
/// element of the ordering.
pub fn min_positive(c: &DiagramClass) -> Result<BraidWord> {
    c.check()?;
    let n = c.punctures();
    let last = n - 1;
    let mut stack = vec![(c, (1..=n).collect::<Vec<_>>(), (1..=last).collect::<Vec<_>>())];
    while let Some((node, gens, labels)) = stack.pop() {
        if matches!(node, DiagramClass::Base2) && labels[0] == last {
            return BraidWord::generator(n, gens[0] as i32);
        }
        stack.extend(children(node, &gens, &labels));
    }
    unreachable!("the maximal label always sits in a two-puncture region")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boundary::PointKind;
    use num_bigint::BigUint;

    #[test]
    fn counts_match_table() {
        let expected = [1u64, 1, 3, 9, 39, 189, 1107];
        for (n, e) in (2..=8).zip(expected) {
            assert_eq!(count_classes_in::<u64>(n).unwrap(), e);
            assert_eq!(count_classes(n).unwrap(), BigUint::from(e));
        }
        assert!(count_classes(1).is_err());
    }

    #[test]
    fn narrow_types_report_overflow() {
        assert_eq!(count_classes_in::<u8>(5).unwrap(), 9);
        assert!(matches!(count_classes_in::<u8>(8), Err(Error::Overflow(8))));
    }

    #[test]
    fn small_enumerations() {
        let c3: Vec<String> = enumerate_classes(3).unwrap().iter().map(|c| c.to_string()).collect();
        assert_eq!(c3, ["T(B)"]);
        let c4: Vec<String> = enumerate_classes(4).unwrap().iter().map(|c| c.to_string()).collect();
        assert_eq!(c4, ["T(T(B))", "S(k=2;L={2};B;B)", "S(k=2;L={3};B;B)"]);
        assert_eq!(enumerate_classes(6).unwrap().len(), 39);
    }

    #[test]
    fn class_text_round_trip() {
        for c in enumerate_classes(6).unwrap() {
            assert_eq!(DiagramClass::parse(&c.to_string()).unwrap(), c);
        }
        assert!(DiagramClass::parse("S(k=1;L={};B;T(B))").is_err());
        assert!(DiagramClass::parse("S(k=2;L={3,2};B;B)").is_err());
        assert!(DiagramClass::parse("Q").is_err());
    }

    #[test]
    fn realize_base_is_dehornoy_two() {
        let d = realize(&DiagramClass::Base2).unwrap();
        let e = d.endpoints().unwrap();
        assert_eq!(e, vec![cusp_point(&FreeWord::identity(2), 1).unwrap()]);
    }

    #[test]
    fn realize_split_places_separating_arc_first() {
        let c = DiagramClass::parse("S(k=2;L={2};B;B)").unwrap();
        let e = realize(&c).unwrap().endpoints().unwrap();
        assert_eq!(e[0].kind(), PointKind::Gap);
        assert_eq!(e[1].kind().puncture(), Some(1));
        assert_eq!(e[2].kind().puncture(), Some(3));
    }

    #[test]
    fn read_off_round_trip_small() {
        for n in 2..=6 {
            for c in enumerate_classes(n).unwrap() {
                assert_eq!(class_of(&realize(&c).unwrap()).unwrap(), c);
            }
        }
    }

    #[test]
    fn min_positive_examples() {
        assert_eq!(min_positive(&DiagramClass::dehornoy(3).unwrap()).unwrap().letters(), &[2]);
        assert_eq!(min_positive(&DiagramClass::Base2).unwrap().letters(), &[1]);
        let split = DiagramClass::parse("S(k=2;L={2};B;B)").unwrap();
        assert_eq!(min_positive(&split).unwrap().letters(), &[3]);
    }
}
