//! Acceptance suite: nine criteria, one PASS/FAIL line each, zero tolerance.
//! Runs without the libtest harness so the lines always reach stdout.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::Adj;
use stable_cutset::cutset::{has_3edge_matching_cut, has_k4_minus, has_p3_cutset, is_3_connected};
use stable_cutset::gsc::{extend_stable_set, random_gsc, random_gsc_through};
use stable_cutset::recognize::recognize_via_theorem;
use stable_cutset::verify::{verify_corollary3, verify_theorem1, verify_theorem5, VerifyOptions, VertexSelector};
use stable_cutset::{to_graph6, GeneratingSequence, Recognizer, Verdict, VertexSet};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn options(corpus: &str) -> VerifyOptions {
    VerifyOptions { corpus: corpus.to_string(), parallelism: 8, ..VerifyOptions::default() }
}

fn theorem1() -> Outcome {
    let mut checked = 0;
    for n in 3..=8 {
        let r = verify_theorem1(common::corpus(n), &options(&format!("n{n}")));
        if !r.is_success() {
            return Err(format!("n={n}: {}", r.summary()));
        }
        checked += r.processed;
    }
    Ok(format!("{checked} connected graphs with m <= 2n-4, 0 failures"))
}

fn theorem5() -> Outcome {
    let (mut checked, mut extremal, mut members) = (0, 0, 0);
    for n in 3..=8 {
        let r = verify_theorem5(common::corpus(n), &options(&format!("n{n}")));
        if !r.is_success() {
            return Err(format!("n={n}: {}", r.summary()));
        }
        checked += r.processed;
        extremal += r.breakdown.get("extremal_checked").copied().unwrap_or(0);
        members += r.breakdown.get("via_member").copied().unwrap_or(0);
    }
    if extremal == 0 || members == 0 {
        return Err("no extremal graphs reached".into());
    }
    Ok(format!("{checked} graphs with m <= 2n-3, {extremal} at m = 2n-3 ({members} members), branches exclusive"))
}

fn corollary3() -> Outcome {
    let mut pairs = 0;
    for n in 1..=6 {
        let r = verify_corollary3(common::corpus(n), VertexSelector::Admissible, &options(&format!("n{n}")));
        if !r.is_success() {
            return Err(format!("n={n}: {}", r.summary()));
        }
        pairs += r.processed;
    }
    Ok(format!("{pairs} admissible (graph, x) pairs, 0 failures"))
}

fn recognizer_agreement() -> Outcome {
    let recognizer = Recognizer::new();
    let (mut checked, mut members) = (0, 0);
    for n in 3..=8 {
        for (line, g) in common::corpus_graphs(n) {
            if !g.is_connected() || g.edge_count() + 3 != 2 * n {
                continue;
            }
            checked += 1;
            let result = recognizer.recognize(&g).map_err(|e| format!("{line}: {e}"))?;
            let by_theorem = recognize_via_theorem(&g).map_err(|e| format!("{line}: {e}"))?;
            let by_oracle = common::is_member(&Adj::of(&g));
            if result.verdict != by_theorem || (result.verdict == Verdict::Member) != by_oracle {
                return Err(format!(
                    "{line}: recognize {:?}, theorem {:?}, oracle {by_oracle}",
                    result.verdict, by_theorem
                ));
            }
            if let Some(cert) = &result.certificate {
                members += 1;
                if cert.build().as_ref() != Ok(&g) {
                    return Err(format!("{line}: certificate does not rebuild the input"));
                }
            } else if result.verdict == Verdict::Member {
                return Err(format!("{line}: member without certificate"));
            }
        }
    }
    Ok(format!("{checked} graphs with m = 2n-3, {members} members, certificates rebuild exactly"))
}

fn generator_closure() -> Outcome {
    let recognizer = Recognizer::new();
    let mut brute = 0;
    for seed in 0..10_000u64 {
        let pieces = (seed % 8 + 1) as usize;
        let s = random_gsc(pieces, seed).map_err(|e| format!("seed {seed}: {e}"))?;
        let g = s.build().map_err(|e| format!("seed {seed}: {e}"))?;
        if g.edge_count() + 3 != 2 * g.n() {
            return Err(format!("seed {seed}: n={} m={}", g.n(), g.edge_count()));
        }
        if g.n() <= 14 {
            brute += 1;
            if common::has_stable_cutset(&Adj::of(&g), 0) {
                return Err(format!("seed {seed}: brute force found a stable cutset"));
            }
        }
        let r = recognizer.recognize(&g).map_err(|e| format!("seed {seed}: {e}"))?;
        if r.verdict != Verdict::Member {
            return Err(format!("seed {seed}: recognized as non-member"));
        }
    }
    Ok(format!("10000 sequences, {brute} brute-forced (n <= 14), all members with m = 2n-3"))
}

fn reroot_property() -> Outcome {
    let mut reroots = 0;
    for seed in 0..1_000u64 {
        let s = random_gsc((seed % 8 + 1) as usize, seed).map_err(|e| e.to_string())?;
        let g = s.build().map_err(|e| e.to_string())?;
        for i in 1..=s.len() {
            let r = s.reroot(i).map_err(|e| format!("seed {seed} index {i}: {e}"))?;
            if r.validate().is_err() {
                return Err(format!("seed {seed} index {i}: invalid result"));
            }
            let want = s.pieces()[i - 1].layout().expect("valid");
            let got = r.pieces()[0].layout().expect("valid");
            if r.pieces()[0].attach != stable_cutset::gsc::Attachment::Root
                || want.kind() != got.kind()
                || sorted_edges(&want) != sorted_edges(&got)
            {
                return Err(format!("seed {seed} index {i}: first piece differs"));
            }
            if r.build().as_ref() != Ok(&g) {
                return Err(format!("seed {seed} index {i}: rebuilt graph differs"));
            }
            reroots += 1;
        }
    }
    Ok(format!("1000 sequences, {reroots} re-rootings, all valid and equal"))
}

fn sorted_edges(l: &stable_cutset::gsc::Layout) -> Vec<(usize, usize)> {
    let mut e: Vec<_> = l.edges().into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
    e.sort_unstable();
    e
}

fn random_stable_subset(rng: &mut ChaCha8Rng, s: &GeneratingSequence, k: usize, v: usize) -> VertexSet {
    let g = s.build_prefix(k).expect("valid");
    let mut pool: Vec<usize> = s.vertices_upto(k).iter().filter(|&u| u != v).collect();
    let mut out = VertexSet::EMPTY;
    while !pool.is_empty() {
        let u = pool.swap_remove(rng.gen_range(0..pool.len()));
        if rng.gen_bool(0.5) && g.is_stable(out.with(u)) {
            out.insert(u);
        }
    }
    out
}

fn extend_property() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for seed in 0..1_000u64 {
        let v = rng.gen_range(0..3);
        let raw = random_gsc_through((seed % 8 + 1) as usize, seed, v).map_err(|e| e.to_string())?;
        let s = raw.normalize().map_err(|e| e.to_string())?;
        let k = rng.gen_range(1..=s.len());
        let seed_set = random_stable_subset(&mut rng, &s, k, v);
        let out = extend_stable_set(&s, k, seed_set, v).map_err(|e| format!("seed {seed}: {e}"))?;
        let g = s.build().expect("valid");
        let a = Adj::of(&g);
        if !a.is_stable(out.bits()) || !seed_set.is_subset(out) || out.contains(v) {
            return Err(format!("seed {seed}: X={seed_set:?} v={v} gave {out:?}"));
        }
    }
    Ok("1000 trials, outputs stable, contain X, exclude v".into())
}

fn predicate_oracles() -> Outcome {
    let mut checked = 0;
    for n in 1..=7 {
        for (line, g) in common::corpus_graphs(n) {
            let a = Adj::of(&g);
            if has_k4_minus(&g).is_some() != common::has_k4_minus(&a) {
                return Err(format!("{line}: has_k4_minus"));
            }
            if is_3_connected(&g) != common::is_3_connected(&a) {
                return Err(format!("{line}: is_3_connected"));
            }
            if g.is_connected() {
                let mc = has_3edge_matching_cut(&g).expect("connected");
                if mc.is_some() != common::has_3edge_matching_cut(&a) {
                    return Err(format!("{line}: has_3edge_matching_cut"));
                }
                let p3 = has_p3_cutset(&g).expect("connected");
                if p3.is_some() != common::has_p3_cutset(&a) {
                    return Err(format!("{line}: has_p3_cutset"));
                }
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} graphs, 0 disagreements"))
}

fn graph6_round_trip() -> Outcome {
    let mut checked = 0;
    for n in 1..=7 {
        for (line, g) in common::corpus_graphs(n) {
            let back = to_graph6(&g).map_err(|e| format!("{line}: {e}"))?;
            if back != line || stable_cutset::from_graph6(&back).as_ref() != Ok(&g) {
                return Err(format!("{line}: re-encoded as {back}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} graphs, 0 mismatches"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("theorem 1 exhaustive, 3 <= n <= 8", theorem1),
        ("theorem 5 exhaustive with exclusive branches, 3 <= n <= 8", theorem5),
        ("corollary 3 exhaustive, n <= 6", corollary3),
        ("recognizer agrees with theorem and oracle, n <= 8", recognizer_agreement),
        ("generator closure, 10000 sequences", generator_closure),
        ("re-rooting at every index, 1000 sequences", reroot_property),
        ("stable-set extension, 1000 trials", extend_property),
        ("predicate oracles, n <= 7", predicate_oracles),
        ("graph6 round trip, n <= 7", graph6_round_trip),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("acceptance {}: PASS {name}: {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                failures += 1;
                println!("acceptance {}: FAIL {name}: {detail} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
