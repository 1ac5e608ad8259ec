//! Loose-isotopy decision for total curve diagrams.
//!
//! One diagram is brought into standard frame (`β · realize(c)`, known from
//! its provenance or recognized directly); the other is pulled back by `β⁻¹`
//! and compared with `realize(c)` node by node. At a node owning the round
//! region `R`, sliding the node's first arc around the region boundary is the
//! action of the round twist `Δ_R²`, which fixes every earlier arc; the arc
//! must match the standard one after some power of that twist. Two-puncture
//! regions allow any power of the half twist.

use crate::boundary::{act_point, BoundaryPoint};
use crate::braid::{round_twist, BraidWord};
use crate::classification::{children, class_of, realize, standard_first_endpoint, DiagramClass};
use crate::diagram::CurveDiagram;
use crate::error::{Error, Result};

/// Class and braid with `d = braid · realize(class)` up to loose isotopy.
pub fn standard_frame(d: &CurveDiagram) -> Result<(DiagramClass, BraidWord)> {
    let tight = d.pull_tight();
    if let Some(p) = tight.provenance() {
        return Ok((p.class.clone(), p.braid.clone()));
    }
    let c = class_of(&tight)?;
    if realize(&c)?.endpoints()? == tight.endpoints()? {
        return Ok((c, BraidWord::identity(d.n())));
    }
    Err(Error::Unsupported("diagram has no provenance and is not in standard position; cannot fix a frame".into()))
}

/// Whether two total diagrams are loosely isotopic.
pub fn loose_isotopic(d1: &CurveDiagram, d2: &CurveDiagram) -> Result<bool> {
    if d1.n() != d2.n() {
        return Err(Error::StrandMismatch(d1.n(), d2.n()));
    }
    for d in [d1, d2] {
        if !d.validate()?.total {
            return Err(Error::Unsupported("loose isotopy is decided for total diagrams only".into()));
        }
    }
    let (frame, other) = match standard_frame(d1) {
        Ok(f) => (f, d2),
        Err(Error::Unsupported(_)) => (standard_frame(d2)?, d1),
        Err(e) => return Err(e),
    };
    let (class, braid) = frame;
    if class_of(other)? != class {
        return Ok(false);
    }
    let mut points = other.pull_tight().act(&braid.invert())?.endpoints()?;
    let n = d1.n();
    align(&class, &(1..=n).collect::<Vec<_>>(), &(1..n).collect::<Vec<_>>(), &mut points, n)
}

fn align(
    node: &DiagramClass,
    gens: &[usize],
    labels: &[usize],
    points: &mut [BoundaryPoint],
    n: usize,
) -> Result<bool> {
    let target = standard_first_endpoint(node, gens, n);
    let first = labels[0] - 1;
    let twist = if gens.len() == 2 {
        BraidWord::generator(n, gens[0] as i32)?
    } else {
        round_twist(gens[0], gens[gens.len() - 1], n)?
    };
    let Some(power) = twist_power(&twist, &points[first], &target)? else {
        return Ok(false);
    };
    if power != 0 {
        let t = twist.pow(power);
        for p in points.iter_mut() {
            *p = act_point(&t, p)?;
        }
    }
    for (child, g, l) in children(node, gens, labels) {
        if !align(child, &g, &l, points, n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Smallest `|t|` (positive first) with `twist^t(p) = target`. The access
/// length grows with every twist power, so `|t|` is bounded by it.
fn twist_power(twist: &BraidWord, p: &BoundaryPoint, target: &BoundaryPoint) -> Result<Option<i64>> {
    if p == target {
        return Ok(Some(0));
    }
    let bound = (p.access().len() + target.access().len() + 2) as i64;
    let inverse = twist.invert();
    let (mut up, mut down) = (p.clone(), p.clone());
    for t in 1..=bound {
        up = act_point(twist, &up)?;
        if &up == target {
            return Ok(Some(t));
        }
        down = act_point(&inverse, &down)?;
        if &down == target {
            return Ok(Some(-t));
        }
    }
    Ok(None)
}
