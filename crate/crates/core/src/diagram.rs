//! Curve diagrams: labelled systems of arcs in the punctured disk, encoded by
//! based words in the free group on the puncture loops.
//!
//! Every arc starts on the boundary at a distinct slot. It ends in a puncture
//! (`word` is the access path, in cusp normal form), on the boundary (`word`
//! is the loop element closing the arc along the boundary), or, for ingested
//! input only, back on its own interior (`word` is the tail, the anchor holds
//! the loop element of the closed part).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::boundary::{act_point, canonical_gap_representative, cusp_point, gap_point, BoundaryPoint, PointKind};
use crate::braid::BraidWord;
use crate::classification::{realize, DiagramClass};
use crate::error::{Error, Result};
use crate::free::FreeWord;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Anchor {
    Puncture(usize),
    /// Canonical representative of the boundary coset the arc ends on.
    Boundary(FreeWord),
    /// Loop element of an arc ending on its own interior.
    SelfLoop(FreeWord),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Arc {
    label: usize,
    slot: i64,
    word: FreeWord,
    anchor: Anchor,
}

impl Arc {
    pub fn new(label: usize, slot: i64, word: FreeWord, anchor: Anchor) -> Self {
        Arc { label, slot, word, anchor }
    }

    /// The boundary-anchored arc with the given endpoint.
    pub fn from_endpoint(label: usize, slot: i64, p: &BoundaryPoint) -> Self {
        let anchor = match p.kind() {
            PointKind::Cusp(i) => Anchor::Puncture(i),
            PointKind::Gap => Anchor::Boundary(p.access().clone()),
        };
        Arc { label, slot, word: p.access().clone(), anchor }
    }

    pub fn label(&self) -> usize {
        self.label
    }

    pub fn slot(&self) -> i64 {
        self.slot
    }

    pub fn word(&self) -> &FreeWord {
        &self.word
    }

    pub fn anchor(&self) -> &Anchor {
        &self.anchor
    }

    /// The arc's point on the circle at infinity.
    pub fn endpoint(&self) -> Result<BoundaryPoint> {
        match &self.anchor {
            Anchor::Puncture(i) => cusp_point(&self.word, *i),
            Anchor::Boundary(_) => gap_point(&self.word),
            Anchor::SelfLoop(_) => {
                Err(Error::Unsupported(format!("arc {} ends on itself; pull the diagram tight first", self.label)))
            }
        }
    }

    fn act(&self, b: &BraidWord) -> Result<Arc> {
        let (word, anchor) = match &self.anchor {
            Anchor::Puncture(i) => {
                let p = act_point(b, &cusp_point(&self.word, *i)?)?;
                let i = p.kind().puncture().expect("cusps map to cusps");
                (p.access().clone(), Anchor::Puncture(i))
            }
            Anchor::Boundary(_) => {
                let g = b.artin_image(&self.word)?;
                let rep = canonical_gap_representative(&g);
                (g, Anchor::Boundary(rep))
            }
            Anchor::SelfLoop(l) => (b.artin_image(&self.word)?, Anchor::SelfLoop(b.artin_image(l)?)),
        };
        Ok(Arc { label: self.label, slot: self.slot, word, anchor })
    }

    fn pull_tight(&self) -> Arc {
        let loop_elt = match &self.anchor {
            Anchor::SelfLoop(l) => l,
            Anchor::Boundary(_) => &self.word,
            Anchor::Puncture(_) => return self.clone(),
        };
        match loop_elt.as_conjugate_of_generator() {
            Some((c, g)) => {
                let p = cusp_point(&c, g.unsigned_abs() as usize).expect("generator in range");
                Arc::from_endpoint(self.label, self.slot, &p)
            }
            None if matches!(self.anchor, Anchor::Boundary(_)) => self.clone(),
            None => Arc {
                label: self.label,
                slot: self.slot,
                word: loop_elt.clone(),
                anchor: Anchor::Boundary(canonical_gap_representative(loop_elt)),
            },
        }
    }
}

/// Where a diagram came from: `braid · realize(class)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Provenance {
    pub class: DiagramClass,
    pub braid: BraidWord,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CurveDiagram {
    n: usize,
    arcs: Vec<Arc>,
    provenance: Option<Provenance>,
}

/// Outcome of a successful validation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Validation {
    pub total: bool,
    pub components: Vec<Vec<usize>>,
    /// Whether embeddability was confirmed against the provenance.
    pub geometry_checked: bool,
}

impl CurveDiagram {
    pub fn new(n: usize, arcs: Vec<Arc>) -> Self {
        CurveDiagram { n, arcs, provenance: None }
    }

    pub fn with_provenance(n: usize, arcs: Vec<Arc>, provenance: Provenance) -> Self {
        CurveDiagram { n, arcs, provenance: Some(provenance) }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn provenance(&self) -> Option<&Provenance> {
        self.provenance.as_ref()
    }

    pub fn without_provenance(&self) -> CurveDiagram {
        CurveDiagram { provenance: None, ..self.clone() }
    }

    /// The first `m` arcs.
    pub fn truncate(&self, m: usize) -> CurveDiagram {
        CurveDiagram { n: self.n, arcs: self.arcs[..m.min(self.arcs.len())].to_vec(), provenance: None }
    }

    pub fn is_total(&self) -> bool {
        self.arcs.len() + 1 == self.n
    }

    /// Image of the diagram under `b`; slots are unchanged.
    pub fn act(&self, b: &BraidWord) -> Result<CurveDiagram> {
        if b.strands() != self.n {
            return Err(Error::StrandMismatch(b.strands(), self.n));
        }
        let arcs = self.arcs.iter().map(|a| a.act(b)).collect::<Result<Vec<_>>>()?;
        let provenance = match &self.provenance {
            Some(p) => Some(Provenance { class: p.class.clone(), braid: b.compose(&p.braid)? }),
            None => None,
        };
        Ok(CurveDiagram { n: self.n, arcs, provenance })
    }

    /// Pulls loops around single punctures tight and slides other self-loops
    /// back to the boundary. Idempotent.
    pub fn pull_tight(&self) -> CurveDiagram {
        CurveDiagram {
            n: self.n,
            arcs: self.arcs.iter().map(Arc::pull_tight).collect(),
            provenance: self.provenance.clone(),
        }
    }

    /// Endpoints in label order. Requires a pulled-tight diagram.
    pub fn endpoints(&self) -> Result<Vec<BoundaryPoint>> {
        self.arcs.iter().map(Arc::endpoint).collect()
    }

    /// Partition of the punctures into complement components, sorted by least
    /// element.
    pub fn components(&self) -> Result<Vec<Vec<usize>>> {
        let d = self.pull_tight();
        let sides = components_side_sets(&d)?;
        let mut ended: BTreeSet<usize> = BTreeSet::new();
        for a in &d.arcs {
            if let Anchor::Puncture(i) = a.anchor {
                if !ended.insert(i) {
                    return Err(Error::InvalidDiagram(vec![format!("two arcs end at puncture {i}")]));
                }
            }
        }
        let chords: Vec<BTreeSet<usize>> = sides.into_iter().flatten().collect();
        let mut free: BTreeMap<Vec<bool>, Vec<usize>> = BTreeMap::new();
        for p in (1..=d.n).filter(|p| !ended.contains(p)) {
            free.entry(chords.iter().map(|s| s.contains(&p)).collect()).or_default().push(p);
        }
        if free.len() != chords.len() + 1 {
            return Err(Error::InvalidDiagram(vec![format!(
                "{} separating arcs cut out {} punctured components, expected {}",
                chords.len(),
                free.len(),
                chords.len() + 1
            )]));
        }
        let mut blocks: Vec<Vec<usize>> = ended.into_iter().map(|p| vec![p]).chain(free.into_values()).collect();
        blocks.sort();
        Ok(blocks)
    }

    /// Checks labels, slots, anchor normal forms, the component-count law and
    /// that every component is punctured. All violations are reported.
    pub fn validate(&self) -> Result<Validation> {
        let n = self.n;
        let mut errs = Vec::new();
        let m = self.arcs.len();
        if n < 2 {
            errs.push(format!("need at least 2 punctures, got {n}"));
        }
        if m == 0 || m + 1 > n {
            errs.push(format!("{m} arcs on {n} punctures (need 1..={})", n.saturating_sub(1)));
        }
        let mut labels = BTreeSet::new();
        let mut slots = BTreeSet::new();
        for (pos, a) in self.arcs.iter().enumerate() {
            if !labels.insert(a.label) {
                errs.push(format!("label {} used twice", a.label));
            } else if a.label != pos + 1 {
                errs.push(format!("arc at position {} has label {}", pos + 1, a.label));
            }
            if !slots.insert(a.slot) {
                errs.push(format!("slot {} used twice", a.slot));
            }
            if a.word.rank() != n {
                errs.push(format!("arc {} word has rank {}", a.label, a.word.rank()));
                continue;
            }
            match &a.anchor {
                Anchor::Puncture(i) if *i == 0 || *i > n => errs.push(format!("arc {} ends at puncture {i}", a.label)),
                Anchor::Puncture(i) => {
                    if a.word.last().is_some_and(|l| l.unsigned_abs() as usize == *i) {
                        errs.push(format!("arc {} access {} is not in cusp normal form", a.label, a.word));
                    }
                }
                Anchor::Boundary(g) => {
                    let rep = canonical_gap_representative(&a.word);
                    if rep.is_empty() {
                        errs.push(format!("arc {} loop {} is a power of the boundary", a.label, a.word));
                    } else if &rep != g {
                        errs.push(format!("arc {} boundary anchor {g} is not the coset of {}", a.label, a.word));
                    }
                }
                Anchor::SelfLoop(l) => {
                    if canonical_gap_representative(l).is_empty() {
                        errs.push(format!("arc {} self-loop {l} bounds no puncture", a.label));
                    }
                }
            }
        }
        if !errs.is_empty() {
            return Err(Error::InvalidDiagram(errs));
        }
        let components = match self.components() {
            Ok(c) => c,
            Err(Error::InvalidDiagram(v)) => return Err(Error::InvalidDiagram(v)),
            Err(e) => return Err(Error::InvalidDiagram(vec![e.to_string()])),
        };
        let geometry_checked = match &self.provenance {
            Some(p) => {
                let expected = realize(&p.class)?.act(&p.braid)?.endpoints()?;
                if expected != self.pull_tight().endpoints()? {
                    return Err(Error::InvalidDiagram(vec![format!(
                        "arcs disagree with provenance {} acted on by {}",
                        p.class, p.braid
                    )]));
                }
                true
            }
            None => false,
        };
        Ok(Validation { total: components.iter().all(|c| c.len() == 1), components, geometry_checked })
    }

    /// Parses the line-oriented diagram format.
    pub fn parse(text: &str) -> Result<CurveDiagram> {
        let mut n: Option<usize> = None;
        let mut arcs = Vec::new();
        let mut provenance = None;
        for raw in text.lines() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(v) = line.strip_prefix("n=") {
                n = Some(v.trim().parse().map_err(|_| Error::Parse(format!("bad header {line:?}")))?);
                continue;
            }
            let rank = n.ok_or_else(|| Error::Parse("diagram must start with `n=<int>`".into()))?;
            if let Some(rest) = line.strip_prefix("provenance:") {
                provenance = Some(parse_provenance(rest, rank)?);
            } else if let Some(rest) = line.strip_prefix("arc") {
                arcs.push(parse_arc(rest, rank)?);
            } else {
                return Err(Error::Parse(format!("unrecognized line {line:?}")));
            }
        }
        let n = n.ok_or_else(|| Error::Parse("missing `n=<int>` header".into()))?;
        Ok(CurveDiagram { n, arcs, provenance })
    }
}

fn word_text(w: &FreeWord) -> String {
    if w.is_empty() {
        "e".into()
    } else {
        w.to_string()
    }
}

fn fields(line: &str) -> BTreeMap<&str, &str> {
    line.split_whitespace().filter_map(|t| t.split_once('=')).collect()
}

fn parse_provenance(rest: &str, n: usize) -> Result<Provenance> {
    let f = fields(rest);
    let class = DiagramClass::parse(f.get("class").ok_or_else(|| Error::Parse("provenance needs class=".into()))?)?;
    if class.punctures() != n {
        return Err(Error::StrandMismatch(class.punctures(), n));
    }
    let braid = BraidWord::parse(f.get("braid").copied().unwrap_or(""), n)?;
    Ok(Provenance { class, braid })
}

fn parse_arc(rest: &str, n: usize) -> Result<Arc> {
    let bad = |what: &str| Error::Parse(format!("arc line {rest:?}: {what}"));
    let (label, body) = rest.split_once(':').ok_or_else(|| bad("expected `arc <label>:`"))?;
    let label: usize = label.trim().parse().map_err(|_| bad("bad label"))?;
    let f = fields(body);
    let slot: i64 = f.get("slot").ok_or_else(|| bad("missing slot"))?.parse().map_err(|_| bad("bad slot"))?;
    let word = FreeWord::parse(f.get("word").copied().unwrap_or(""), n)?;
    let end = f.get("end").ok_or_else(|| bad("missing end"))?;
    let (kind, value) = end.split_once(':').ok_or_else(|| bad("end must be kind:value"))?;
    let anchor = match kind {
        "puncture" => Anchor::Puncture(value.parse().map_err(|_| bad("bad puncture index"))?),
        "boundary" => Anchor::Boundary(FreeWord::parse(value, n)?),
        "self" => Anchor::SelfLoop(FreeWord::parse(value, n)?),
        _ => return Err(bad("unknown end kind")),
    };
    Ok(Arc { label, slot, word, anchor })
}

impl fmt::Display for CurveDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n={}", self.n)?;
        if let Some(p) = &self.provenance {
            let letters: Vec<String> = p.braid.letters().iter().map(|l| l.to_string()).collect();
            writeln!(f, "provenance: class={} braid={}", p.class, letters.join(","))?;
        }
        for a in &self.arcs {
            let end = match &a.anchor {
                Anchor::Puncture(i) => format!("puncture:{i}"),
                Anchor::Boundary(g) => format!("boundary:{}", word_text(g)),
                Anchor::SelfLoop(l) => format!("self:{}", word_text(l)),
            };
            writeln!(f, "arc {}: slot={} word={} end={end}", a.label, a.slot, word_text(&a.word))?;
        }
        Ok(())
    }
}

/// For each arc of a pulled-tight diagram: `None` if it ends in a puncture,
/// otherwise the punctures on its left. The loop of a simple separating arc
/// has exponent sum one more on its left side than on its right.
pub(crate) fn components_side_sets(d: &CurveDiagram) -> Result<Vec<Option<BTreeSet<usize>>>> {
    d.arcs
        .iter()
        .map(|a| match &a.anchor {
            Anchor::Puncture(_) => Ok(None),
            Anchor::Boundary(_) => {
                let e = a.word.exponent_sums();
                let (lo, hi) = (*e.iter().min().unwrap_or(&0), *e.iter().max().unwrap_or(&0));
                if hi != lo + 1 {
                    return Err(Error::InvalidDiagram(vec![format!(
                        "arc {} loop {} is not a simple separating loop",
                        a.label, a.word
                    )]));
                }
                Ok(Some((1..=d.n).filter(|&p| e[p - 1] == hi).collect()))
            }
            Anchor::SelfLoop(_) => Err(Error::Unsupported("side sets need a pulled-tight diagram".into())),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classification::enumerate_classes;

    fn w(n: usize, l: &[i32]) -> FreeWord {
        FreeWord::new(n, l).unwrap()
    }

    fn dehornoy(n: usize) -> CurveDiagram {
        realize(&DiagramClass::dehornoy(n).unwrap()).unwrap()
    }

    #[test]
    fn dehornoy_three_is_total() {
        let v = dehornoy(3).validate().unwrap();
        assert!(v.total && v.geometry_checked);
        assert_eq!(v.components, vec![vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn truncated_dehornoy_is_partial() {
        let v = dehornoy(4).truncate(2).validate().unwrap();
        assert!(!v.total);
        assert_eq!(v.components, vec![vec![1], vec![2], vec![3, 4]]);
    }

    #[test]
    fn duplicate_label_is_rejected() {
        let arcs = vec![Arc::new(1, 1, w(3, &[]), Anchor::Puncture(1)), Arc::new(1, 2, w(3, &[]), Anchor::Puncture(2))];
        let Err(Error::InvalidDiagram(v)) = CurveDiagram::new(3, arcs).validate() else {
            panic!("expected violations");
        };
        assert!(v.iter().any(|m| m.contains("label 1 used twice")));
    }

    #[test]
    fn unpunctured_component_is_rejected() {
        let arcs = vec![Arc::new(1, 2, w(3, &[]), Anchor::Puncture(1)), Arc::new(2, 1, w(3, &[]), Anchor::Puncture(1))];
        assert!(CurveDiagram::new(3, arcs).validate().is_err());
    }

    #[test]
    fn split_first_arc_components() {
        let c = DiagramClass::parse("S(k=2;L={2};B;B)").unwrap();
        let d = realize(&c).unwrap().truncate(1);
        assert_eq!(d.components().unwrap(), vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(d.components().unwrap()[0].len(), 2);
    }

    #[test]
    fn action_examples() {
        let d = CurveDiagram::new(3, vec![Arc::new(1, 1, w(3, &[]), Anchor::Puncture(2))]);
        assert_eq!(d.act(&BraidWord::identity(3)).unwrap(), d);
        let s1 = BraidWord::generator(3, 1).unwrap();
        assert_eq!(d.act(&s1).unwrap().arcs()[0].anchor(), &Anchor::Puncture(1));
        let a = BraidWord::new(3, vec![1, -2]).unwrap();
        let b = BraidWord::new(3, vec![2, 2, 1]).unwrap();
        let d3 = dehornoy(3);
        assert_eq!(d3.act(&a.compose(&b).unwrap()).unwrap(), d3.act(&b).unwrap().act(&a).unwrap());
    }

    #[test]
    fn components_follow_permutation() {
        let d = realize(&DiagramClass::parse("S(k=2;L={2};B;B)").unwrap()).unwrap().truncate(1);
        let moved = d.act(&BraidWord::generator(4, 2).unwrap()).unwrap();
        assert_eq!(moved.components().unwrap(), vec![vec![1, 3], vec![2, 4]]);
    }

    #[test]
    fn pull_tight_examples() {
        let meridian = CurveDiagram::new(3, vec![Arc::new(1, 1, w(3, &[]), Anchor::SelfLoop(w(3, &[1, 2, -1])))]);
        let tight = meridian.pull_tight();
        assert_eq!(tight.arcs()[0].anchor(), &Anchor::Puncture(2));
        assert_eq!(tight.arcs()[0].word(), &w(3, &[1]));
        let sep = CurveDiagram::new(4, vec![Arc::new(1, 1, w(4, &[]), Anchor::SelfLoop(w(4, &[1, 2])))]);
        let tight = sep.pull_tight();
        assert_eq!(tight.endpoints().unwrap(), vec![gap_point(&w(4, &[1, 2])).unwrap()]);
        assert_eq!(tight.pull_tight(), tight);
    }

    #[test]
    fn naturality_of_endpoints() {
        let b = BraidWord::new(4, vec![2, -1, 3, 3, -2]).unwrap();
        for c in enumerate_classes(4).unwrap() {
            let d = realize(&c).unwrap();
            let moved: Vec<_> = d.endpoints().unwrap().iter().map(|p| act_point(&b, p).unwrap()).collect();
            assert_eq!(d.act(&b).unwrap().endpoints().unwrap(), moved);
        }
    }

    #[test]
    fn text_round_trip() {
        let b = BraidWord::new(4, vec![1, -3, 2]).unwrap();
        for c in enumerate_classes(4).unwrap() {
            let d = realize(&c).unwrap().act(&b).unwrap();
            let back = CurveDiagram::parse(&d.to_string()).unwrap();
            assert_eq!(back, d);
            assert!(back.validate().unwrap().geometry_checked);
            let bare = CurveDiagram::parse(&d.without_provenance().to_string()).unwrap();
            assert!(!bare.validate().unwrap().geometry_checked);
        }
    }

    #[test]
    fn realized_classes_validate() {
        for n in 2..=7 {
            for c in enumerate_classes(n).unwrap() {
                let v = realize(&c).unwrap().validate().unwrap();
                assert!(v.total, "{c}");
            }
        }
    }
}
