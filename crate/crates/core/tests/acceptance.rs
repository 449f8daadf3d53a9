//! One PASS/FAIL line per acceptance criterion. Set `SOCKSORT_FULL=1` to run
//! the brute-force count bridge up to length 12 instead of 8.

use std::collections::HashMap;
use std::time::Instant;

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use socksort::enumeration::{count_sortable, count_sortable_refined, patterns_of_length};
use socksort::series::{
    counts, estimate_k, p_closed_form, p_functional_eq, pq_closed_form, pq_functional_eq,
    quartic_root_closed_form, quartic_smallest_root, refined_counts,
};
use socksort::sorter::{
    aba, classify_sigma, clumped_socks, iterate, sort_depth, sort_pass, sort_pass_aba,
    sort_pass_consecutive, tightness_witness, unsortable_witness, verify_recursive_action,
    SigmaClass, Terminator,
};
use socksort::{Sock, SockMultiset, SockPattern, SockSequence};

type Check = std::result::Result<(), String>;

fn seq(s: &str) -> SockSequence {
    s.parse().unwrap()
}

fn pat(s: &str) -> SockPattern {
    s.parse().unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Renames `q` by the map that standardizes `p`.
fn rename_like(p: &SockSequence, q: &SockSequence) -> SockSequence {
    let mut map = HashMap::new();
    for s in p.iter() {
        let next = map.len() as u32;
        map.entry(*s).or_insert(next);
    }
    q.iter().map(|s| Sock(map[s])).collect()
}

fn expect_pass(sigma: &str, input: &str, want: &str) -> Check {
    let got = sort_pass(&pat(sigma), &seq(input))
        .map_err(|e| e.to_string())?
        .0;
    ensure(got.to_string() == want, || {
        format!("phi_{sigma}({input}) = {got}, want {want}")
    })
}

fn golden_passes() -> Check {
    expect_pass("aba", "abcab", "cbbaa")?;
    expect_pass("aba", "abcabc", "cbcbaa")?;
    expect_pass("aba", "babcabc", "aaccbbb")?;
    expect_pass("ab", "abcabc", "abcabc")?;
    expect_pass("aa", "abcabc", "cbacba")?;
    for (input, want) in [("abcabc", "cbacba"), ("cbacba", "abcabc")] {
        let got = sort_pass_consecutive(&aba(), &seq(input)).map_err(|e| e.to_string())?;
        ensure(got.to_string() == want, || {
            format!("consecutive({input}) = {got}")
        })?;
    }
    for n in 3..=5 {
        for sigma in patterns_of_length(n).filter(|s| *s != aba()) {
            let got = sort_pass(&sigma, &seq("aba")).map_err(|e| e.to_string())?.0;
            ensure(got == seq("aba"), || format!("phi_{sigma}(aba) = {got}"))?;
        }
    }
    Ok(())
}

fn depth_bound() -> Check {
    for n in 0..=9 {
        for p in patterns_of_length(n) {
            let d = sort_depth(&aba(), &p, n).map_err(|e| e.to_string())?;
            ensure(d.is_some(), || format!("{p} not sorted within {n} passes"))?;
            let d = d.unwrap();
            ensure(d <= p.distinct_count(), || format!("{p} needs {d} passes"))?;
        }
    }
    Ok(())
}

fn tightness() -> Check {
    for n in 1..=8 {
        let w = tightness_witness(n).map_err(|e| e.to_string())?;
        let want = match n {
            1 => 0,
            2 => 1,
            _ => n,
        };
        let got = sort_depth(&aba(), &w, 2 * n).map_err(|e| e.to_string())?;
        ensure(got == Some(want), || {
            format!("depth({w}) = {got:?}, want {want}")
        })?;
    }
    Ok(())
}

fn count_bridge(max_n: usize) -> Check {
    let closed = counts(&p_closed_form(max_n).map_err(|e| e.to_string())?);
    let functional = counts(&p_functional_eq(max_n).map_err(|e| e.to_string())?);
    for n in 1..=max_n {
        let brute = BigInt::from(count_sortable(n, 1));
        ensure(brute == closed[n] && brute == functional[n], || {
            format!(
                "s({n}): brute {brute}, closed {}, functional {}",
                closed[n], functional[n]
            )
        })?;
    }
    Ok(())
}

fn refined_bridge() -> Check {
    let closed = pq_closed_form(10).map_err(|e| e.to_string())?;
    let functional = pq_functional_eq(10).map_err(|e| e.to_string())?;
    for n in 1..=10 {
        let brute = count_sortable_refined(n, 1);
        let a = refined_counts(&closed, n);
        let b = refined_counts(&functional, n);
        let width = a.len().max(b.len()).max(n + 1);
        for r in 0..width {
            let want = BigInt::from(brute.get(&r).copied().unwrap_or(0));
            let get = |v: &[BigInt]| v.get(r).cloned().unwrap_or_default();
            ensure(get(&a) == want && get(&b) == want, || {
                format!(
                    "s({n},{r}): brute {want}, closed {}, functional {}",
                    get(&a),
                    get(&b)
                )
            })?;
        }
    }
    Ok(())
}

fn numerics() -> Check {
    let x0 = quartic_smallest_root(12).map_err(|e| e.to_string())?;
    let closed = quartic_root_closed_form(12);
    ensure(x0 == closed, || {
        format!("bisection {x0} vs closed form {closed}")
    })?;
    let c = x0.recip().to_f64();
    ensure((c - 4.5464).abs() <= 5e-4, || format!("c = {c}"))?;
    let est = estimate_k(1000).map_err(|e| e.to_string())?;
    ensure((est.k_estimate - 0.34313).abs() <= 0.01, || {
        format!("K estimate {}", est.k_estimate)
    })
}

fn recursive_action() -> Check {
    for n in 1..=8 {
        for p in patterns_of_length(n) {
            ensure(verify_recursive_action(&p).unwrap(), || {
                format!("fails on {p}")
            })?;
        }
    }
    let mut rng = StdRng::seed_from_u64(0x50c5);
    for _ in 0..100_000 {
        let len = rng.gen_range(1..=30);
        let socks = rng.gen_range(1..=10u32);
        let p = SockSequence::from_ids((0..len).map(|_| rng.gen_range(0..socks)));
        ensure(verify_recursive_action(&p).unwrap(), || {
            format!("fails on {p}")
        })?;
    }
    Ok(())
}

fn unsortable_witnesses() -> Check {
    let multisets: Vec<SockMultiset> = ["a:2,b:2", "a:2,b:1,c:1", "a:3,b:2"]
        .iter()
        .map(|m| m.parse().unwrap())
        .collect();
    let mut checked = 0;
    for n in 2..=5 {
        for sigma in patterns_of_length(n) {
            if matches!(
                classify_sigma(&sigma),
                SigmaClass::Sorted | SigmaClass::AbaFamily
            ) {
                continue;
            }
            for m in &multisets {
                let w = unsortable_witness(&sigma, m).map_err(|e| format!("{sigma} {m}: {e}"))?;
                ensure(w.avoids(&sigma) && w.avoids(&sigma.reversed()), || {
                    format!("{w} meets {sigma} or its reverse")
                })?;
                ensure(!w.is_sorted(), || format!("{w} is sorted"))?;
                let t = iterate(&sigma, &w, 20).map_err(|e| e.to_string())?;
                let ok = matches!(t.terminator, Terminator::Cycle { period, .. } if period <= 2);
                ensure(ok, || {
                    format!("{sigma} {m}: {w} ends in {:?}", t.terminator)
                })?;
                checked += 1;
            }
        }
    }
    ensure(checked > 0, || "no patterns checked".into())
}

fn non_closure() -> Check {
    let d1 = sort_depth(&aba(), &seq("abcabc"), 10).map_err(|e| e.to_string())?;
    let d2 = sort_depth(&aba(), &seq("babcabc"), 10).map_err(|e| e.to_string())?;
    ensure(d1.is_some_and(|d| d > 1), || {
        format!("depth(abcabc) = {d1:?}")
    })?;
    ensure(d2 == Some(1), || format!("depth(babcabc) = {d2:?}"))?;
    ensure(
        seq("babcabc").contains(&seq("abcabc").standardize()),
        || "babcabc should contain abcabc".into(),
    )
}

fn property_suites() -> Check {
    let sigmas: Vec<SockPattern> = (2..=4).flat_map(patterns_of_length).collect();
    let check = |sigma: &SockPattern, p: &SockSequence| -> Check {
        let (out, trace) = sort_pass(sigma, p).map_err(|e| e.to_string())?;
        let mut a = p.ids();
        let mut b = out.ids();
        a.sort_unstable();
        b.sort_unstable();
        ensure(a == b, || format!("multiset changed: {sigma} {p}"))?;
        let std_out = sort_pass(sigma, &p.standardize().into_sequence())
            .unwrap()
            .0;
        ensure(std_out == rename_like(p, &out), || {
            format!("equivariance: {sigma} {p}")
        })?;
        for r in trace.replay().map_err(|e| e.to_string())? {
            ensure(r.avoids(sigma), || format!("stack {r} contains {sigma}"))?;
        }
        if p.avoids(&sigma.reversed()) {
            ensure(out == p.reverse(), || format!("reversal: {sigma} {p}"))?;
        }
        Ok(())
    };
    let clumps = |p: &SockSequence| -> Check {
        let before = clumped_socks(p);
        let after = clumped_socks(&sort_pass_aba(p));
        let grew = p.is_sorted() || before.len() < after.len();
        ensure(before.is_subset(&after) && grew, || {
            format!("clump monotonicity: {p}")
        })
    };
    for n in 0..=7 {
        for p in patterns_of_length(n) {
            for sigma in &sigmas {
                check(sigma, &p)?;
            }
            clumps(&p)?;
        }
    }
    let mut rng = StdRng::seed_from_u64(0xaba);
    for _ in 0..10_000 {
        let len = rng.gen_range(8..=16);
        let socks = rng.gen_range(2..=7u32);
        let p = SockSequence::from_ids((0..len).map(|_| rng.gen_range(0..socks)));
        let sigma = &sigmas[rng.gen_range(0..sigmas.len())];
        check(sigma, &p)?;
        clumps(&p)?;
    }
    Ok(())
}

fn main() {
    let full = std::env::var("SOCKSORT_FULL").is_ok_and(|v| v == "1");
    let bridge_n = if full { 12 } else { 8 };
    let criteria: Vec<(String, Box<dyn Fn() -> Check>)> = vec![
        ("golden sorting examples".into(), Box::new(golden_passes)),
        (
            "depth bound over all patterns of length <= 9".into(),
            Box::new(depth_bound),
        ),
        ("tightness of the depth bound".into(), Box::new(tightness)),
        (
            format!("brute-force s(n) matches both expansions, n <= {bridge_n}"),
            Box::new(move || count_bridge(bridge_n)),
        ),
        (
            "brute-force s(n,r) matches both bivariate expansions".into(),
            Box::new(refined_bridge),
        ),
        (
            "root, growth constant and K estimate".into(),
            Box::new(numerics),
        ),
        (
            "recursive action of the foot-sorting map".into(),
            Box::new(recursive_action),
        ),
        (
            "unsortable witnesses cycle forever".into(),
            Box::new(unsortable_witnesses),
        ),
        ("non-closure counterexample".into(), Box::new(non_closure)),
        ("property suites".into(), Box::new(property_suites)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
