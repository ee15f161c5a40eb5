//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Every criterion is exact (zero violations, zero indeterminate verdicts)
//! and carries a wall-clock limit. Criteria listed in `KNOWN_RED` fail for
//! mathematical reasons; they print FAIL with the reason, and the run only
//! errors if one of them unexpectedly passes or any other criterion fails.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use hyperfect::canon::{canonical_form, is_isomorphic};
use hyperfect::classify::{is_h_alpha_perfect, is_h_omega_perfect, is_h_perfect};
use hyperfect::cocycle::{co, is_pure, link_graph_plus, seidel_switch};
use hyperfect::coloring::{Budget, Checker};
use hyperfect::enumerate::{graphs, iso_classes_up_to, labeled};
use hyperfect::extremal::{
    complete_tripartite, extremal_search, intersecting_example, is_complete_free, is_intersecting,
    tripartite_max_edges, turan_construction, IntersectingKind, Predicate,
};
use hyperfect::graph_perfect::{is_graph_perfect, PerfectnessMethod};
use hyperfect::ramsey::{brute_force, mono_free_coloring};
use hyperfect::verify::{verify, CheckId, VerifyReport};
use hyperfect::{families, Graph, KHypergraph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Criteria that cannot hold; see the notes printed with them.
const KNOWN_RED: &[usize] = &[6, 9];

const TRIALS: usize = 10_000;
const SEED: u64 = 0x5eed_c0c1;

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Outcome {
            ok,
            detail: detail.into(),
        }
    }
}

struct Criterion {
    id: usize,
    name: &'static str,
    limit: Duration,
    run: fn(Budget) -> Outcome,
}

fn mins(m: u64) -> Duration {
    Duration::from_secs(60 * m)
}

fn summary(r: &VerifyReport) -> String {
    let mut s = format!(
        "{} n<={}: {} checked, {} indeterminate, {} counterexamples",
        r.check,
        r.bound,
        r.checked,
        r.indeterminate,
        r.counterexamples.len()
    );
    for f in &r.findings {
        s.push_str("; ");
        s.push_str(f);
    }
    if let Some(c) = r.counterexamples.first() {
        s.push_str(&format!("; first counterexample {}: {}", c.id, c.reason));
    }
    s
}

fn checks(budget: Budget, list: &[(CheckId, usize)]) -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for &(c, n) in list {
        match verify(c, n, budget) {
            Ok(r) => {
                ok &= r.passed();
                parts.push(summary(&r));
            }
            Err(e) => {
                ok = false;
                parts.push(format!("{c}: error {e}"));
            }
        }
    }
    Outcome::new(ok, parts.join(" | "))
}

fn k2_collapse(budget: Budget) -> Outcome {
    let counts: Vec<usize> = (0..=7).map(|n| graphs(n).map_or(0, |g| g.len())).collect();
    let counts_ok = counts == [1, 1, 2, 4, 11, 34, 156, 1044];
    let mut o = checks(budget, &[(CheckId::Gasp, 7)]);
    o.ok &= counts_ok;
    o.detail = format!("graph classes by n {counts:?}; {}", o.detail);
    o
}

fn berge_and_h_omega(budget: Budget) -> Outcome {
    let checker = Checker::new(budget);
    let start = Instant::now();
    let mut bad = 0;
    let mut unknown = 0;
    let mut seen = 0;
    for g in labeled(3, 5, 10).expect("10 slots") {
        seen += 1;
        let b = checker.is_berge(&g).verdict.as_bool();
        let c = checker.is_c_omega_perfect(&g).verdict.as_bool();
        match (b, c) {
            (Some(b), Some(c)) => {
                if b != c || (is_h_omega_perfect(&g).is_true() && !c) {
                    bad += 1;
                }
            }
            _ => unknown += 1,
        }
    }
    let labeled_time = start.elapsed();
    let mut o = checks(budget, &[(CheckId::BergeEquiv, 6), (CheckId::HwImpliesCw, 6)]);
    o.ok &= seen == 1024 && bad == 0 && unknown == 0 && labeled_time < mins(1);
    o.detail = format!(
        "labeled n=5: {seen} instances, {bad} violations, {unknown} indeterminate in {:.1}s; {}",
        labeled_time.as_secs_f64(),
        o.detail
    );
    o
}

fn clique_facts(budget: Budget) -> Outcome {
    checks(
        budget,
        &[
            (CheckId::Tetra, 6),
            (CheckId::SmallerClique, 6),
            (CheckId::FriendlyCliques, 6),
        ],
    )
}

fn pure_cocycles(budget: Budget) -> Outcome {
    let classes = graphs(7).expect("n = 7");
    let labeled_classes: HashSet<_> = labeled(2, 7, 21)
        .expect("21 slots")
        .map(|g| canonical_form(&g))
        .collect();
    let mut disagree = 0;
    for g in &classes {
        let structural = is_pure(g).map(|c| c.is_true());
        let plus = (0..g.n()).all(|v| {
            let p = link_graph_plus(g, v).expect("v in range");
            is_graph_perfect(&p, PerfectnessMethod::HoleScan).is_true()
        });
        let hp = is_h_perfect(&co(g)).is_true();
        if structural != Ok(plus) || plus != hp {
            disagree += 1;
        }
    }
    let mut o = checks(budget, &[(CheckId::PerfectCocycle, 7)]);
    o.ok &= classes.len() == 1044 && labeled_classes.len() == 1044 && disagree == 0;
    o.detail = format!(
        "{} classes, {} by dedupe of 2^21 labeled graphs, {disagree} disagreements between structural purity, G+(v) perfectness and H-perfectness; {}",
        classes.len(),
        labeled_classes.len(),
        o.detail
    );
    o
}

fn doubly(budget: Budget) -> Outcome {
    checks(budget, &[(CheckId::DoublyPerfect, 6)])
}

fn doubly_not_h(budget: Budget) -> Outcome {
    // co(G) is invariant under switching at N(v), which isolates v, so every
    // 8-vertex G whose link at v is C_7 has co(G) = co(C_7 + K_1).
    let c7k1 =
        families::graph_union(&[&families::cycle(7).expect("C_7"), &Graph::empty(1).expect("K_1")]).expect("union");
    let h = co(&c7k1);
    let checker = Checker::new(budget);
    let cw = checker.is_c_omega_perfect(&h).verdict.as_bool();
    let ca = checker.is_c_alpha_perfect(&h).verdict.as_bool();
    let o = checks(budget, &[(CheckId::DoublyNotHSearch, 8)]);
    Outcome::new(
        o.ok,
        format!(
            "co(C_7 + K_1): C_omega-perfect {cw:?}, C_alpha-perfect {ca:?} (alpha = 4, complement link at v is the complement of C_7 with chromatic number 4 > 3); {}",
            o.detail
        ),
    )
}

fn ramsey(_: Budget) -> Outcome {
    // independent oracle: pair {a < b} has colex rank b(b-1)/2 + a
    let rank = |a: usize, b: usize| b * (b - 1) / 2 + a;
    let mono_free = |c: &[u8], n: usize| {
        (0..n).all(|a| {
            (a + 1..n).all(|b| (b + 1..n).all(|d| !(c[rank(a, b)] == c[rank(a, d)] && c[rank(a, b)] == c[rank(b, d)])))
        })
    };
    let k5 = mono_free_coloring(2, 3, 5);
    let k5_ok = k5.as_deref().is_some_and(|c| c.len() == 10 && mono_free(c, 5));
    let k6_lib = mono_free_coloring(2, 3, 6).is_none();
    let k6_oracle = (0u32..1 << 15).all(|m| {
        let c: Vec<u8> = (0..15).map(|i| (m >> i & 1) as u8).collect();
        !mono_free(&c, 6)
    });
    let r13 = brute_force(1, 3, 5);
    let graphs_ok: Vec<bool> = (1..=6).map(|s| brute_force(s, 2, s + 2) == Some(s + 1)).collect();
    Outcome::new(
        k5_ok && k6_lib && k6_oracle && r13 == Some(3) && graphs_ok.iter().all(|&b| b),
        format!(
            "K_5 witness {k5:?} confirmed {k5_ok}; K_6 exhausted by search {k6_lib} and by oracle {k6_oracle}; R_1(3) = {r13:?}; R_s(2) = s+1 for s = 1..6: {graphs_ok:?}"
        ),
    )
}

fn pc_ramsey(budget: Budget) -> Outcome {
    checks(budget, &[(CheckId::PerfectR, 6)])
}

fn turan_extremal(_: Budget) -> Outcome {
    let mut ok = true;
    let mut parts = Vec::new();
    for n in [5, 6] {
        match extremal_search(n, &[Predicate::HOmega, Predicate::CompleteFree]) {
            Ok(res) => {
                let tri = complete_tripartite(n).expect("n >= 3");
                let value = res.max_edges == tripartite_max_edges(n);
                let among = res.extremal.iter().any(|g| is_isomorphic(g, &tri));
                ok &= value && among;
                let witness = res
                    .extremal
                    .iter()
                    .find(|g| !is_isomorphic(g, &tri))
                    .map(|g| format!(" e.g. {:?}", g.edges()))
                    .unwrap_or_default();
                parts.push(format!(
                    "n = {n}: max {} vs tripartite {}, complete tripartite extremal {among}, {} extremal classes{witness}",
                    res.max_edges,
                    tripartite_max_edges(n),
                    res.extremal.len()
                ));
            }
            Err(e) => {
                ok = false;
                parts.push(format!("n = {n}: error {e}"));
            }
        }
    }
    // the n = 5 excess: co(C_5) is H_omega-perfect and K_4^3-free with 5 edges
    let c5 = co(&families::cycle(5).expect("C_5"));
    let five = extremal_search(5, &[Predicate::HOmega, Predicate::CompleteFree]).map(|r| r.extremal);
    parts.push(format!(
        "co(C_5): {} edges, H_omega-perfect {}, K_4^3-free {}, the n = 5 extremal class {}",
        c5.edge_count(),
        is_h_omega_perfect(&c5).is_true(),
        is_complete_free(&c5),
        five.is_ok_and(|e| e.len() == 1 && is_isomorphic(&e[0], &c5))
    ));
    Outcome::new(ok, parts.join("; "))
}

fn constructions(_: Budget) -> Outcome {
    let mut bad = Vec::new();
    for n in 3..=12 {
        let t = turan_construction(n).expect("n >= 3");
        let one_edge = t.vertices().subsets_of_size(4).any(|s| t.edges_within(s) == 1);
        if !is_complete_free(&t) || !is_h_perfect(&t).is_true() || !is_h_alpha_perfect(&t).is_true() || one_edge {
            bad.push(format!("turan n = {n}"));
        }
    }
    let t6 = turan_construction(6).expect("n = 6").edge_count();
    if t6 != 14 {
        bad.push(format!("turan n = 6 has {t6} edges"));
    }
    for kind in [
        IntersectingKind::B,
        IntersectingKind::LinkTriangle,
        IntersectingKind::LinkStar,
        IntersectingKind::C,
    ] {
        for n in kind.min_vertices().max(6)..=11 {
            let g = intersecting_example(kind, n).expect("n in range");
            let expected = if kind == IntersectingKind::C {
                (n - 1) * (n - 1) / 4
            } else {
                3 * n - 8
            };
            if g.edge_count() != expected || !is_intersecting(&g) {
                bad.push(format!("{kind} n = {n}: {} edges, expected {expected}", g.edge_count()));
            }
        }
    }
    let b11 = intersecting_example(IntersectingKind::B, 11)
        .map(|g| g.edge_count())
        .ok();
    let c11 = intersecting_example(IntersectingKind::C, 11)
        .map(|g| g.edge_count())
        .ok();
    let b10 = intersecting_example(IntersectingKind::B, 10)
        .map(|g| g.edge_count())
        .ok();
    let c10 = intersecting_example(IntersectingKind::C, 10)
        .map(|g| g.edge_count())
        .ok();
    let crossover = b11 == Some(25) && c11 == Some(25) && b10 > c10;
    if !crossover {
        bad.push(format!(
            "crossover: b(10) {b10:?} c(10) {c10:?} b(11) {b11:?} c(11) {c11:?}"
        ));
    }
    Outcome::new(
        bad.is_empty(),
        format!(
            "turan n = 3..12 checked, 14 edges at n = 6: {}; b and c both 25 at n = 11; violations {bad:?}",
            t6 == 14
        ),
    )
}

fn chi_bound(budget: Budget) -> Outcome {
    checks(budget, &[(CheckId::ChiBound, 7)])
}

fn switching(budget: Budget) -> Outcome {
    checks(budget, &[(CheckId::SwitchingCounterexample, 23)])
}

fn random_subset(rng: &mut ChaCha8Rng, n: usize) -> VertexSet {
    (0..n).filter(|_| rng.random_bool(0.5)).collect()
}

fn co_identities(_: Budget) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut fails = [0usize; 3];
    for _ in 0..TRIALS {
        let n = rng.random_range(3..=12);
        let p = rng.random_range(0.0..1.0);
        let g = families::random_graph(n, p, &mut rng).expect("n <= 64");
        let h = co(&g);
        fails[0] += usize::from(h.complement() != co(&g.complement()));
        let x = random_subset(&mut rng, n);
        fails[1] += usize::from(h.induced(x).ok() != g.induced(x).ok().map(|s| co(&s)));
        let a = random_subset(&mut rng, n);
        fails[2] += usize::from(seidel_switch(&g, a).map(|s| co(&s)).ok() != Some(h));
    }
    Outcome::new(
        fails == [0; 3],
        format!(
            "{TRIALS} trials each (seed {SEED:#x}); violations complement {}, induced {}, switching {}",
            fails[0], fails[1], fails[2]
        ),
    )
}

fn four_uniform_doubly(budget: Budget) -> Outcome {
    let checker = Checker::new(budget);
    let corpus: Vec<KHypergraph> = iso_classes_up_to(4, 6).expect("small corpus");
    let mut doubly = 0;
    let mut bad = 0;
    let mut unknown = 0;
    for g in &corpus {
        match checker
            .is_c_omega_perfect(g)
            .verdict
            .and(checker.is_c_alpha_perfect(g).verdict)
            .as_bool()
        {
            Some(true) => {
                doubly += 1;
                bad += usize::from(!(g.is_complete() || g.is_edgeless()));
            }
            Some(false) => {}
            None => unknown += 1,
        }
    }
    Outcome::new(
        bad == 0 && unknown == 0,
        format!(
            "{} 4-uniform classes with n <= 6, {doubly} doubly perfect, {bad} neither complete nor empty, {unknown} indeterminate",
            corpus.len()
        ),
    )
}

fn main() -> ExitCode {
    let budget = Budget::from_env();
    let criteria = [
        Criterion {
            id: 1,
            name: "graph collapse at k = 2",
            limit: mins(5),
            run: k2_collapse,
        },
        Criterion {
            id: 2,
            name: "Berge, C_omega and H_omega",
            limit: mins(60),
            run: berge_and_h_omega,
        },
        Criterion {
            id: 3,
            name: "clique friendliness and link cliques",
            limit: mins(10),
            run: clique_facts,
        },
        Criterion {
            id: 4,
            name: "pure graphs and H-perfect cocycles",
            limit: mins(10),
            run: pure_cocycles,
        },
        Criterion {
            id: 5,
            name: "H-perfect cocycles are doubly perfect",
            limit: mins(10),
            run: doubly,
        },
        Criterion {
            id: 6,
            name: "doubly perfect cocycle that is not H-perfect",
            limit: mins(15),
            run: doubly_not_h,
        },
        Criterion {
            id: 7,
            name: "Ramsey ground truth",
            limit: mins(1),
            run: ramsey,
        },
        Criterion {
            id: 8,
            name: "[PC] implies the Ramsey bound",
            limit: mins(10),
            run: pc_ramsey,
        },
        Criterion {
            id: 9,
            name: "tripartite extremal bound",
            limit: mins(60),
            run: turan_extremal,
        },
        Criterion {
            id: 10,
            name: "Turan and intersecting constructions",
            limit: mins(5),
            run: constructions,
        },
        Criterion {
            id: 11,
            name: "cover by omega - 1 independent sets",
            limit: mins(10),
            run: chi_bound,
        },
        Criterion {
            id: 12,
            name: "switching counterexample on 23 vertices",
            limit: mins(30),
            run: switching,
        },
        Criterion {
            id: 13,
            name: "cocycle identities",
            limit: mins(1),
            run: co_identities,
        },
        Criterion {
            id: 14,
            name: "doubly perfect 4-uniform is trivial",
            limit: mins(10),
            run: four_uniform_doubly,
        },
    ];
    let mut unexpected = Vec::new();
    let mut passed = 0;
    for c in &criteria {
        let start = Instant::now();
        let o = (c.run)(budget);
        let elapsed = start.elapsed();
        let ok = o.ok && elapsed <= c.limit;
        let red = KNOWN_RED.contains(&c.id);
        let status = if ok { "PASS" } else { "FAIL" };
        let tag = if red { " [known red]" } else { "" };
        println!(
            "{status} {:>2} {}{tag} ({:.1}s, limit {}s): {}",
            c.id,
            c.name,
            elapsed.as_secs_f64(),
            c.limit.as_secs(),
            o.detail
        );
        passed += usize::from(ok);
        if ok == red {
            unexpected.push(c.id);
        }
    }
    println!(
        "acceptance: {passed}/{} passed, known red {KNOWN_RED:?}, unexpected {unexpected:?}",
        criteria.len()
    );
    if unexpected.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
