//! Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use braid_orders::suites::{self, SuiteReport};
use braid_orders::{count_classes, enumerate_classes, loose_isotopic, realize, DiagramOrder};

const SEED: u64 = 20_240_601;
const TABLE: [(usize, u64); 7] = [(2, 1), (3, 1), (4, 3), (5, 9), (6, 39), (7, 189), (8, 1197)];

struct Gate {
    failed: Vec<u32>,
}

impl Gate {
    fn line(&mut self, id: u32, ok: bool, what: &str, detail: String) {
        println!("[{}] {id:>2}. {what}: {detail}", if ok { "PASS" } else { "FAIL" });
        if !ok {
            self.failed.push(id);
        }
    }

    fn suite(
        &mut self,
        id: u32,
        what: &str,
        r: braid_orders::Result<SuiteReport>,
        min_cases: usize,
        limit: Option<Duration>,
        took: Duration,
    ) {
        match r {
            Ok(r) => {
                let total = r.passed + r.failed;
                let in_time = limit.is_none_or(|l| took <= l);
                let mut detail = format!("{}/{total} passed in {:.2?}", r.passed, took);
                if let Some(f) = &r.first_failure {
                    detail.push_str(&format!("; first failure: {f}"));
                }
                if total < min_cases {
                    detail.push_str(&format!("; only {total} cases, need {min_cases}"));
                }
                if let (false, Some(l)) = (in_time, limit) {
                    detail.push_str(&format!("; over the {l:?} limit"));
                }
                self.line(id, r.ok() && total >= min_cases && in_time, what, detail);
            }
            Err(e) => self.line(id, false, what, format!("error: {e}")),
        }
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let v = f();
    (v, start.elapsed())
}

fn counting(g: &mut Gate) {
    let (values, took) = timed(|| TABLE.map(|(n, _)| count_classes(n).map(|c| c.to_string())));
    let mismatches: Vec<String> = TABLE
        .iter()
        .zip(&values)
        .filter(|((_, want), got)| got.as_deref().ok() != Some(want.to_string().as_str()))
        .map(|((n, want), got)| format!("n={n}: got {}, table {want}", got.as_deref().unwrap_or("error")))
        .collect();
    let ok = mismatches.is_empty() && took < Duration::from_secs(1);
    let detail = if mismatches.is_empty() {
        format!("table reproduced in {took:.2?}")
    } else {
        format!("{} in {took:.2?}", mismatches.join("; "))
    };
    g.line(1, ok, "class counts for n = 2..8", detail);
}

fn enumeration(g: &mut Gate) {
    let mut problems = Vec::new();
    for n in 2..=8 {
        let listed = enumerate_classes(n).map(|v| v.len().to_string());
        let counted = count_classes(n).map(|c| c.to_string());
        if listed.as_ref().ok() != counted.as_ref().ok() || listed.is_err() {
            problems.push(format!(
                "n={n}: {} listed vs {} counted",
                listed.unwrap_or_default(),
                counted.unwrap_or_default()
            ));
        }
    }
    let (pairs, took) = timed(|| -> braid_orders::Result<(usize, Vec<String>)> {
        let mut checked = 0;
        let mut bad = Vec::new();
        for n in 3..=5 {
            let classes = enumerate_classes(n)?;
            let diagrams = classes.iter().map(realize).collect::<braid_orders::Result<Vec<_>>>()?;
            let orders = diagrams.iter().map(DiagramOrder::new).collect::<braid_orders::Result<Vec<_>>>()?;
            for ((i, j), w) in braid_orders::distinguishing_witnesses(&orders, 8)? {
                checked += 1;
                if loose_isotopic(&diagrams[i], &diagrams[j])? {
                    bad.push(format!("{} ~ {}", classes[i], classes[j]));
                }
                let separated = w.as_ref().is_some_and(|w| {
                    let (a, b) = (orders[i].sign(w), orders[j].sign(w));
                    w.len() <= 8 && matches!((a, b), (Ok(x), Ok(y)) if x != Ordering::Equal && x == y.reverse())
                });
                if !separated {
                    bad.push(format!("no valid witness for {} / {}", classes[i], classes[j]));
                }
            }
        }
        Ok((checked, bad))
    });
    match pairs {
        Ok((checked, bad)) => {
            problems.extend(bad.into_iter().chain((checked == 0).then(|| "no pairs checked".to_string())))
        }
        Err(e) => problems.push(format!("error: {e}")),
    }
    if took > Duration::from_secs(120) {
        problems.push(format!("witness search took {took:.2?}"));
    }
    let detail = if problems.is_empty() {
        format!(
            "sizes match for n = 2..8; all pairs for n = 3..5 non-isotopic with witnesses of length <= 8 ({took:.2?})"
        )
    } else {
        problems.join("; ")
    };
    g.line(2, problems.is_empty(), "enumeration consistency", detail);
}

fn oracle(g: &mut Gate) {
    let (r, took) = timed(|| suites::oracle(SEED, 2000));
    g.suite(3, "agreement with handle reduction (2000 braids, n = 2..6, length <= 24)", r, 2000, None, took);
}

fn main() {
    let mut g = Gate { failed: Vec::new() };
    counting(&mut g);
    enumeration(&mut g);
    oracle(&mut g);

    let (r, t) = timed(|| suites::left_invariance(SEED + 4, 1000));
    g.suite(4, "left invariance over all orderings with n <= 5", r, 1000, None, t);
    let (r, t) = timed(|| suites::subword(SEED + 5, 1000));
    g.suite(5, "subword property", r, 1000, None, t);
    let (r, t) = timed(|| suites::twist(SEED + 6, 200));
    g.suite(6, "round twists never decrease a point (n <= 5)", r, 200, None, t);
    let (r, t) = timed(|| suites::preservation(SEED + 7, 1000));
    g.suite(7, "braids preserve the circle order", r, 1000, None, t);
    let (r, t) = timed(|| suites::discreteness(4, 6));
    g.suite(
        8,
        "least positive element, exhaustive ball of length <= 6 (n <= 4)",
        r,
        10,
        Some(Duration::from_secs(300)),
        t,
    );
    let (r, t) = timed(|| suites::orbit(SEED + 9, 50));
    let per_class: usize = (2..=6).map(|n| enumerate_classes(n).map_or(0, |v| v.len())).sum::<usize>() * 50;
    g.suite(9, "class read-off is constant on orbits (n <= 6, 50 braids per class)", r, per_class, None, t);
    let (r, t) = timed(suites::central_twist);
    g.suite(10, "full twist preserves the loose-isotopy class (n <= 5)", r, 14, None, t);

    if g.failed.is_empty() {
        println!("all 10 criteria passed");
    } else {
        println!("failed criteria: {:?}", g.failed);
        std::process::exit(1);
    }
}
