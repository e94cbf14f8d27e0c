//! End-to-end acceptance criteria. Each criterion prints one PASS/FAIL line
//! (written straight to stderr so it shows even when output is captured);
//! the test fails if any criterion fails.

use std::collections::BTreeSet;
use std::io::Write;
use std::time::{Duration, Instant};

use cyclic_hull::cli::{self, classify_records, FactorOutput};
use cyclic_hull::oracle::{generator_matrix, Oracle};
use cyclic_hull::verify::{self, SuiteReport};
use cyclic_hull::{CodeSpace, TraceRepr};

const LENGTHS: [(u64, usize); 8] = [
    (2, 7),
    (2, 9),
    (2, 15),
    (3, 8),
    (3, 10),
    (4, 3),
    (4, 15),
    (5, 4),
];
const TOWERS: [(u64, u32); 4] = [(2, 3), (2, 4), (3, 2), (4, 2)];

struct Verdict {
    pass: bool,
    detail: String,
}

fn criterion(
    id: u32,
    title: &str,
    limit: Option<Duration>,
    body: impl FnOnce() -> Verdict,
) -> bool {
    let start = Instant::now();
    let mut v = body();
    let elapsed = start.elapsed();
    if let Some(limit) = limit {
        if elapsed >= limit {
            v.pass = false;
            v.detail.push_str(&format!("; runtime exceeded {limit:?}"));
        }
    }
    let line = format!(
        "{} criterion {id:>2} {title}: {} ({:.3}s)\n",
        if v.pass { "PASS" } else { "FAIL" },
        v.detail,
        elapsed.as_secs_f64()
    );
    let _ = std::io::stderr().write_all(line.as_bytes());
    v.pass
}

fn suites(reports: Vec<SuiteReport>) -> Verdict {
    let failures: usize = reports.iter().map(|r| r.failures).sum();
    let checked: usize = reports.iter().map(|r| r.checked).sum();
    let first = reports.iter().find_map(|r| r.counterexample.clone());
    Verdict {
        pass: failures == 0 && checked > 0,
        detail: match first {
            Some(c) => format!("{failures} mismatches of {checked}; first: {c}"),
            None => format!("{checked} checks, 0 mismatches"),
        },
    }
}

fn factor_set(q: &str, n: &str) -> (BTreeSet<String>, bool) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = cli::run(
        [
            "cyclic-hull",
            "factor",
            "--q",
            q,
            "--n",
            n,
            "--format",
            "json",
        ],
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0, "{}", String::from_utf8_lossy(&err));
    let parsed: FactorOutput = serde_json::from_slice(&out).unwrap();
    let all_self_reciprocal = parsed.factors.iter().all(|f| f.self_reciprocal);
    (
        parsed.factors.into_iter().map(|f| f.polynomial).collect(),
        all_self_reciprocal,
    )
}

fn c1() -> Verdict {
    let expect9: BTreeSet<String> = ["x + 1", "x^2 + x + 1", "x^6 + x^3 + 1"]
        .map(String::from)
        .into();
    let expect10: BTreeSet<String> = [
        "x + 1",
        "x + 2",
        "x^4 + x^3 + x^2 + x + 1",
        "x^4 + 2x^3 + x^2 + 2x + 1",
    ]
    .map(String::from)
    .into();
    let (got9, sr9) = factor_set("2", "9");
    let (got10, sr10) = factor_set("3", "10");
    Verdict {
        pass: got9 == expect9 && got10 == expect10 && sr9 && sr10,
        detail: format!(
            "F2 n=9 {got9:?}; F3 n=10 {got10:?}; all self-reciprocal {}",
            sr9 && sr10
        ),
    }
}

fn c2() -> Verdict {
    let mut pass = true;
    let mut parts = Vec::new();
    for (q, n, expected) in [(2u64, 9usize, 8usize), (3, 10, 16)] {
        let space = CodeSpace::new(q, n).unwrap();
        let records = classify_records(&space).unwrap();
        let oracle = Oracle::new(space.field());
        let lcd = records.iter().filter(|r| r.lcd && r.hull_dim == 0).count();
        let confirmed = space
            .all_codes()
            .unwrap()
            .filter(|c| oracle.hull_dim(&generator_matrix(c)) == 0)
            .count();
        pass &= records.len() == expected && lcd == expected && confirmed == expected;
        parts.push(format!(
            "q={q} n={n}: {lcd}/{} LCD, oracle {confirmed}",
            records.len()
        ));
    }
    Verdict {
        pass,
        detail: parts.join("; "),
    }
}

fn c3() -> Verdict {
    let mut reports = Vec::new();
    let mut found = 0;
    let mut codes = 0;
    for (q, m) in [(2u64, 2u32), (2, 3), (2, 4), (3, 2), (3, 3)] {
        let space = CodeSpace::new(q, (q.pow(m) - 1) as usize).unwrap();
        let r = verify::one_dim_hull_census(&space).unwrap();
        found += r.counts["one_dim_hull"];
        codes += r.counts["codes"];
        reports.push(r);
    }
    let mut v = suites(reports);
    v.pass &= found == 0;
    v.detail = format!("{found} one-dim hulls among {codes} codes; {}", v.detail);
    v
}

fn c4() -> Verdict {
    let mut reports = Vec::new();
    let mut complete = true;
    for (q, n) in LENGTHS {
        let space = CodeSpace::new(q, n).unwrap();
        let r = verify::hull_vs_oracle(&space).unwrap();
        complete &= r.checked as u64 == space.code_count().unwrap();
        reports.push(r);
    }
    let mut v = suites(reports);
    v.pass &= complete;
    v
}

fn c5() -> Verdict {
    let mut reports = Vec::new();
    let mut lcp = 0;
    for (q, n) in [(2u64, 7usize), (4, 3)] {
        let space = CodeSpace::new(q, n).unwrap();
        let r = verify::lcp_exhaustive(&space).unwrap();
        lcp += r.counts["lcp_pairs"];
        reports.push(r);
    }
    let mut v = suites(reports);
    v.pass &= lcp > 0;
    v.detail = format!("{lcp} LCP pairs; {}", v.detail);
    v
}

fn c6() -> Verdict {
    suites(
        LENGTHS
            .iter()
            .map(|&(q, n)| {
                let space = CodeSpace::new(q, n).unwrap();
                verify::intersection_vs_oracle(&space, 500, 0xC0DE + n as u64).unwrap()
            })
            .collect(),
    )
}

fn c7() -> Verdict {
    let mut reports = Vec::new();
    let mut complete = true;
    for (q, m) in TOWERS {
        let trace = TraceRepr::for_qm(q, m).unwrap();
        let r = verify::trace_vs_generator(&trace).unwrap();
        complete &= r.checked as u64 == trace.space().code_count().unwrap();
        reports.push(r);
    }
    let mut v = suites(reports);
    v.pass &= complete;
    v
}

fn c8() -> Verdict {
    let mut reports = Vec::new();
    let mut enough = true;
    for (q, m) in TOWERS {
        let trace = TraceRepr::for_qm(q, m).unwrap();
        let r = verify::vanishing_criterion(&trace, 1000, 7 + q * 10 + m as u64).unwrap();
        enough &= r.counts["multi_term_specs"] >= 1000 && r.counts["single_term_specs"] > 0;
        reports.push(r);
    }
    let mut v = suites(reports);
    v.pass &= enough;
    v
}

fn c9() -> Verdict {
    suites(
        TOWERS
            .iter()
            .map(|&(q, m)| verify::normal_independence(&TraceRepr::for_qm(q, m).unwrap()).unwrap())
            .collect(),
    )
}

fn c10() -> Verdict {
    suites(
        LENGTHS
            .iter()
            .map(|&(q, n)| verify::lemma1_bridge(&CodeSpace::new(q, n).unwrap()).unwrap())
            .collect(),
    )
}

#[test]
fn acceptance() {
    let secs = Duration::from_secs;
    let results = [
        criterion(
            1,
            "factorization of x^n - 1 (q=2 n=9, q=3 n=10)",
            Some(secs(1)),
            c1,
        ),
        criterion(2, "all codes LCD for (2,9) and (3,10)", Some(secs(1)), c2),
        criterion(
            3,
            "no one-dimensional hulls for q in {2,3} primitive lengths",
            Some(secs(30)),
            c3,
        ),
        criterion(4, "hull dimension formula vs oracle", Some(secs(60)), c4),
        criterion(5, "LCP test vs oracle, exhaustive pairs", None, c5),
        criterion(
            6,
            "intersection dimension vs oracle, 500 pairs each",
            None,
            c6,
        ),
        criterion(7, "trace code equals generator code", Some(secs(60)), c7),
        criterion(
            8,
            "trace vanishing criterion vs direct evaluation",
            None,
            c8,
        ),
        criterion(9, "normal element independence", None, c9),
        criterion(10, "self-reciprocal iff self-paired", None, c10),
    ];
    let passed = results.iter().filter(|&&p| p).count();
    let _ = std::io::stderr()
        .write_all(format!("acceptance: {passed}/{} criteria passed\n", results.len()).as_bytes());
    assert!(
        results.iter().all(|&p| p),
        "{} criteria failed",
        results.len() - passed
    );
}
