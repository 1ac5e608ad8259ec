//! Seeded property suites over random braids, points and diagrams.

use std::cmp::Ordering;
use std::collections::hash_map::Entry;
use std::collections::HashMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::boundary::{act_point, compare_points, cusp_point, gap_point, BoundaryPoint};
use crate::braid::{full_twist, round_twist, BraidWord, Sign};
use crate::classification::{class_of, enumerate_classes, min_positive, realize, DiagramClass};
use crate::diagram::CurveDiagram;
use crate::error::{Error, Result};
use crate::free::FreeWord;
use crate::isotopy::loose_isotopic;
use crate::order::{dehornoy_diagram, distinguishing_witnesses, words_of_length, DiagramOrder};

pub const SUITES: &[&str] = &[
    "oracle",
    "left-invariance",
    "subword",
    "twist",
    "preservation",
    "orbit",
    "central-twist",
    "discreteness",
    "distinguish",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    pub first_failure: Option<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport { name: name.to_string(), passed: 0, failed: 0, first_failure: None }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_braid(rng: &mut impl Rng, n: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let i = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                i
            } else {
                -i
            }
        })
        .collect();
    BraidWord::new(n, letters).expect("letters in range")
}

/// A cusp or gap point with a random access word of at most `max_len` letters.
pub fn random_point(rng: &mut impl Rng, n: usize, max_len: usize) -> BoundaryPoint {
    loop {
        let len = rng.gen_range(0..=max_len);
        let letters: Vec<i32> = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..=n as i32);
                if rng.gen_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect();
        let w = FreeWord::new(n, &letters).expect("letters in range");
        let i = rng.gen_range(0..=n);
        let p = if i == 0 { gap_point(&w) } else { cusp_point(&w, i) };
        if let Ok(p) = p {
            return p;
        }
    }
}

fn ordering_of(s: Sign) -> Ordering {
    match s {
        Sign::Negative => Ordering::Less,
        Sign::Zero => Ordering::Equal,
        Sign::Positive => Ordering::Greater,
    }
}

/// Realized classes with their orderings for `2 <= n <= max_n`.
pub fn class_orders(max_n: usize) -> Result<Vec<(DiagramClass, CurveDiagram, DiagramOrder)>> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for c in enumerate_classes(n)? {
            let d = realize(&c)?;
            let o = DiagramOrder::new(&d)?;
            out.push((c, d, o));
        }
    }
    Ok(out)
}

/// Diagram ordering of the arc chain agrees with handle reduction.
pub fn oracle(seed: u64, cases: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("oracle");
    let mut rng = rng(seed);
    let mut orders: HashMap<usize, DiagramOrder> = HashMap::new();
    for _ in 0..cases {
        let n = rng.gen_range(2..=6);
        let b = random_braid(&mut rng, n, 24);
        let o = match orders.entry(n) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => e.insert(DiagramOrder::new(&dehornoy_diagram(n)?)?),
        };
        let got = o.sign(&b)?;
        let want = ordering_of(b.dehornoy_sign());
        r.record(got == want, || format!("{b:?}: diagram {got:?}, handle reduction {want:?}"));
    }
    Ok(r)
}

pub fn left_invariance(seed: u64, cases: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("left-invariance");
    let mut rng = rng(seed);
    let all = class_orders(5)?;
    for _ in 0..cases {
        let (c, _, o) = &all[rng.gen_range(0..all.len())];
        let n = o.n();
        let (a, b1, b2) = (random_braid(&mut rng, n, 10), random_braid(&mut rng, n, 10), random_braid(&mut rng, n, 10));
        let plain = o.compare(&b1, &b2)?;
        let shifted = o.compare(&a.compose(&b1)?, &a.compose(&b2)?)?;
        r.record(plain == shifted, || format!("{c}: a={a:?} b1={b1:?} b2={b2:?}"));
    }
    Ok(r)
}

/// `σ_i b > b` in every total ordering.
pub fn subword(seed: u64, cases: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("subword");
    let mut rng = rng(seed);
    let all = class_orders(5)?;
    for _ in 0..cases {
        let (c, _, o) = &all[rng.gen_range(0..all.len())];
        let n = o.n();
        let i = rng.gen_range(1..n as i32);
        let b = random_braid(&mut rng, n, 12);
        let s = BraidWord::generator(n, i)?;
        let v = o.compare(&s.compose(&b)?, &b)?;
        r.record(v == Ordering::Greater, || format!("{c}: σ{i}·{b:?} vs {b:?} gave {v:?}"));
    }
    Ok(r)
}

/// Every round twist on `n <= 5` punctures never decreases a sampled point.
pub fn twist(seed: u64, cases: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("twist");
    let mut rng = rng(seed);
    for _ in 0..cases {
        let n = rng.gen_range(2..=5);
        let p = random_point(&mut rng, n, 8);
        let mut ok = true;
        let mut bad = String::new();
        for i in 1..n {
            for j in i + 1..=n {
                let t = round_twist(i, j, n)?;
                if compare_points(&act_point(&t, &p)?, &p)? == Ordering::Less {
                    ok = false;
                    bad = format!("T({i},{j}) decreased {p:?}");
                }
            }
        }
        r.record(ok, || bad);
    }
    Ok(r)
}

pub fn preservation(seed: u64, cases: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("preservation");
    let mut rng = rng(seed);
    for _ in 0..cases {
        let n = rng.gen_range(2..=6);
        let b = random_braid(&mut rng, n, 12);
        let (p, q) = (random_point(&mut rng, n, 8), random_point(&mut rng, n, 8));
        let before = compare_points(&p, &q)?;
        let after = compare_points(&act_point(&b, &p)?, &act_point(&b, &q)?)?;
        r.record(before == after, || format!("{b:?} on {p:?}, {q:?}: {before:?} became {after:?}"));
    }
    Ok(r)
}

/// `class_of(b · realize(c)) = c` for each class with `n <= 6`, `per_class`
/// random braids each. Provenance is dropped so the read-off uses the arcs.
pub fn orbit(seed: u64, per_class: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("orbit");
    let mut rng = rng(seed);
    for n in 2..=6 {
        for c in enumerate_classes(n)? {
            let d = realize(&c)?;
            for _ in 0..per_class {
                let b = random_braid(&mut rng, n, 10);
                let got = class_of(&d.act(&b)?.without_provenance())?;
                r.record(got == c, || format!("{c} moved by {b:?} read off as {got}"));
            }
        }
    }
    Ok(r)
}

/// `Δ² · realize(c)` is loosely isotopic to `realize(c)` for all `n <= 5`.
pub fn central_twist() -> Result<SuiteReport> {
    let mut r = SuiteReport::new("central-twist");
    for n in 2..=5 {
        let t = full_twist(n)?;
        for c in enumerate_classes(n)? {
            let d = realize(&c)?;
            let ok = loose_isotopic(&d.act(&t)?, &d)?;
            r.record(ok, || format!("{c}: full twist changed the loose-isotopy class"));
        }
    }
    Ok(r)
}

/// No braid word of length `<= max_len` lies strictly between `1` and
/// `min_positive(c)`, for every class with `n <= max_n`.
pub fn discreteness(max_n: usize, max_len: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("discreteness");
    for (c, _, o) in class_orders(max_n)? {
        let n = o.n();
        let h = min_positive(&c)?;
        let positive = o.sign(&h)? == Ordering::Greater;
        r.record(positive, || format!("{c}: min_positive {h:?} is not positive"));
        let mut between = None;
        'ball: for len in 1..=max_len {
            for b in words_of_length(n, len) {
                if o.sign(&b)? == Ordering::Greater && o.compare(&b, &h)? == Ordering::Less {
                    between = Some(b);
                    break 'ball;
                }
            }
        }
        r.record(between.is_none(), || format!("{c}: {between:?} lies strictly between 1 and {h:?}"));
    }
    Ok(r)
}

/// For `3 <= n <= max_n`, realized distinct classes are pairwise not loosely
/// isotopic and separated by a witness braid of length `<= max_len`.
pub fn distinguish(max_n: usize, max_len: usize) -> Result<SuiteReport> {
    let mut r = SuiteReport::new("distinguish");
    for n in 3..=max_n {
        let classes = enumerate_classes(n)?;
        let diagrams = classes.iter().map(realize).collect::<Result<Vec<_>>>()?;
        let orders = diagrams.iter().map(DiagramOrder::new).collect::<Result<Vec<_>>>()?;
        for ((i, j), witness) in distinguishing_witnesses(&orders, max_len)? {
            let iso = loose_isotopic(&diagrams[i], &diagrams[j])?;
            r.record(!iso, || format!("{} and {} reported loosely isotopic", classes[i], classes[j]));
            r.record(witness.is_some(), || format!("no witness separates {} and {}", classes[i], classes[j]));
        }
    }
    Ok(r)
}

/// Runs a suite by name with its default size.
pub fn run_suite(name: &str, seed: u64) -> Result<SuiteReport> {
    match name {
        "oracle" => oracle(seed, 2000),
        "left-invariance" => left_invariance(seed, 1000),
        "subword" => subword(seed, 1000),
        "twist" => twist(seed, 200),
        "preservation" => preservation(seed, 1000),
        "orbit" => orbit(seed, 50),
        "central-twist" => central_twist(),
        "discreteness" => discreteness(4, 6),
        "distinguish" => distinguish(5, 8),
        _ => Err(Error::BadRange(format!("unknown suite {name:?}; known: {}", SUITES.join(", ")))),
    }
}
