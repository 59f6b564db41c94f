//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::collections::BTreeMap;
use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use prefembed::geometry::{
    circle_intersections, dist, min_enclosing_disk, sample_in_disk, Circle, Disk,
};
use prefembed::{
    batch_run, count_canonical, embed_three_alternatives, embed_two_voters, enumerate_canonical,
    greedy_embed, verify, BatchOptions, HeuristicConfig, Point, PreferenceOrder, Profile,
};
use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// All permutations of `0..m` by Heap's algorithm; independent of the crate's enumerator.
fn all_orders(m: usize) -> Vec<Vec<usize>> {
    fn heap(k: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            let j = if k % 2 == 0 { i } else { 0 };
            a.swap(j, k - 1);
        }
    }
    let mut out = Vec::new();
    heap(m, &mut (0..m).collect(), &mut out);
    out.sort();
    out.dedup();
    out
}

fn binomial2(n: u64) -> u64 {
    if n < 2 {
        0
    } else {
        n * (n - 1) / 2
    }
}

fn enumeration_count() -> Check {
    let count = count_canonical(7).map_err(|e| e.to_string())?;
    ensure(count == 12_693_241, || format!("count_canonical(7) = {count}"))?;
    let start = Instant::now();
    let streamed = enumerate_canonical(7).map_err(|e| e.to_string())?.fold(0u64, |n, p| {
        debug_assert_eq!(p.num_voters(), 3);
        n + 1
    });
    let elapsed = start.elapsed();
    ensure(streamed == 12_693_241, || format!("stream yielded {streamed}"))?;
    ensure(elapsed < Duration::from_secs(600), || format!("took {elapsed:.1?}"))?;
    Ok(format!("12693241 counted and streamed in {elapsed:.1?}"))
}

fn closed_form_agreement() -> Check {
    let expected = [0u64, 0, 10, 253];
    let mut seen = Vec::new();
    for m in 1..=4usize {
        let factorial: u64 = (1..=m as u64).product();
        let oracle = binomial2(factorial - 1);
        let closed = count_canonical(m).map_err(|e| e.to_string())?;
        let streamed = enumerate_canonical(m).map_err(|e| e.to_string())?.count() as u64;
        // Independent enumeration: pairs of distinct non-identity orders.
        let others = all_orders(m).into_iter().filter(|o| *o != (0..m).collect::<Vec<_>>()).count() as u64;
        ensure(
            closed == oracle && streamed == oracle && binomial2(others) == oracle && oracle == expected[m - 1],
            || format!("m = {m}: closed {closed}, streamed {streamed}, oracle {oracle}"),
        )?;
        seen.push(closed);
    }
    Ok(format!("m = 1..4 -> {seen:?}"))
}

fn theorem_two_voters() -> Check {
    let start = Instant::now();
    let mut checked = 0;
    for m in 2..=5usize {
        let orders = all_orders(m);
        for i in 0..orders.len() {
            for j in i + 1..orders.len() {
                let p = Profile::from_rankings(m, [orders[i].clone(), orders[j].clone()]).unwrap();
                let e = embed_two_voters(&p).map_err(|e| e.to_string())?;
                let r = verify(&p, &e, 0.0).map_err(|e| e.to_string())?;
                ensure(r.ok, || format!("verify failed for {p:?}"))?;
                let base = (m * m) as f64;
                for v in 0..2 {
                    for a in 0..m {
                        let rk = p.rank(v, a).unwrap().value() as f64;
                        let d = dist(e.voters[v], e.alternatives[a]);
                        ensure(base + rk <= d && d < base + rk + 1.0, || {
                            format!("band violated: m {m}, voter {v}, alt {a}, d {d}")
                        })?;
                    }
                }
                checked += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(checked == 1 + 15 + 276 + 7140, || format!("checked {checked} profiles"))?;
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:.1?}"))?;
    Ok(format!("{checked} two-voter profiles verified with band in {elapsed:.1?}"))
}

fn theorem_three_alternatives() -> Check {
    let start = Instant::now();
    let orders = all_orders(3);
    for mask in 1u32..64 {
        let voters: Vec<Vec<usize>> = (0..6).filter(|i| mask & (1 << i) != 0).map(|i| orders[i].clone()).collect();
        let p = Profile::from_rankings(3, voters).unwrap();
        let e = embed_three_alternatives(&p).map_err(|e| e.to_string())?;
        let r = verify(&p, &e, 0.0).map_err(|e| e.to_string())?;
        ensure(r.ok, || format!("subset {mask:06b} failed"))?;
    }
    let single = Profile::from_rankings(3, [vec![0, 1, 2]]).unwrap();
    let e = embed_three_alternatives(&single).unwrap();
    let row = &e.distance_matrix()[0];
    ensure(*row == vec![2.0, 3.0, 5.0], || format!("distances {row:?}"))?;
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:.1?}"))?;
    Ok(format!("63 subsets verified, a>b>c distances {row:?}, {elapsed:.1?}"))
}

fn sampled_three_by_seven() -> Check {
    const SAMPLE: usize = 5000;
    let cursor = enumerate_canonical(7).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_607);
    let mut picked = index::sample(&mut rng, cursor.total() as usize, SAMPLE).into_vec();
    picked.sort_unstable();
    let stream = picked.into_iter().map(|i| (i as u64, cursor.get(i as u64).unwrap()));
    let cfg = HeuristicConfig::default();
    let opts = BatchOptions {
        workers: rayon::current_num_threads(),
        out_dir: None,
    };
    let s = batch_run(stream, &cfg, &opts).map_err(|e| e.to_string())?;
    let max_restarts = s.restart_histogram.keys().max().copied().unwrap_or(0);
    let buckets = [1usize, 10, 100, 1000, 10_000, 100_000];
    let mut coarse = BTreeMap::new();
    for (&k, &v) in &s.restart_histogram {
        let b = buckets.iter().copied().find(|&b| k <= b).unwrap_or(usize::MAX);
        *coarse.entry(b).or_insert(0u64) += v;
    }
    println!("    restart histogram (<= bucket: profiles): {coarse:?}");
    ensure(s.total == SAMPLE as u64 && s.successes == s.total, || {
        format!("{} of {} succeeded; exhausted indices {:?}", s.successes, s.total,
            s.exhausted_profiles.iter().map(|(i, _)| i).collect::<Vec<_>>())
    })?;
    ensure(s.elapsed < Duration::from_secs(1800), || format!("took {:.1?}", s.elapsed))?;
    Ok(format!("{}/{} succeeded, most restarts {max_restarts}, {:.1?}", s.successes, s.total, s.elapsed))
}

fn random_profile<R: Rng>(rng: &mut R, n: usize, m: usize) -> Profile {
    let mut orders: Vec<PreferenceOrder> = Vec::with_capacity(n);
    let distinct_possible: usize = (1..=m).product();
    while orders.len() < n.min(distinct_possible) {
        let mut r: Vec<usize> = (0..m).collect();
        r.shuffle(rng);
        let o = PreferenceOrder::new(r).unwrap();
        if !orders.contains(&o) {
            orders.push(o);
        }
    }
    Profile::new(m, orders).unwrap()
}

fn heuristic_soundness() -> Check {
    const TRIALS: usize = 100_000;
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut successes, mut exhausted) = (0usize, 0usize);
    for _ in 0..TRIALS {
        let n = rng.gen_range(1..=3);
        let m = rng.gen_range(1..=7);
        let p = random_profile(&mut rng, n, m);
        let cfg = HeuristicConfig {
            seed: rng.gen(),
            max_restarts: 50,
            ..Default::default()
        };
        let out = std::panic::catch_unwind(|| greedy_embed(&p, &cfg))
            .map_err(|_| format!("panic on {p:?}"))?
            .map_err(|e| format!("error on {p:?}: {e}"))?;
        match (&out.embedding, &out.report) {
            (Some(e), Some(report)) => {
                ensure(report.ok, || "success without ok report".into())?;
                let again = verify(&p, e, cfg.verify_margin).map_err(|e| e.to_string())?;
                ensure(again.ok, || format!("success failed re-verification: {p:?}"))?;
                successes += 1;
            }
            (None, None) => exhausted += 1,
            _ => return Err("inconsistent outcome".into()),
        }
    }
    Ok(format!("{TRIALS} trials: {successes} successes re-verified, {exhausted} exhausted, no errors"))
}

/// Smallest disk over all pair-diameter and triple-circumcircle candidates.
fn brute_force_disk(pts: &[Point]) -> Disk {
    let covers = |c: Point, r: f64| pts.iter().all(|&p| dist(c, p) <= r + 1e-10);
    let mut best: Option<Disk> = None;
    let mut consider = |c: Point, r: f64| {
        if covers(c, r) && best.map_or(true, |b| r < b.radius) {
            best = Some(Disk::new(c, r));
        }
    };
    if pts.len() == 1 {
        consider(pts[0], 0.0);
    }
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let c = Point::new((pts[i].x + pts[j].x) / 2.0, (pts[i].y + pts[j].y) / 2.0);
            consider(c, dist(c, pts[i]));
            for k in j + 1..pts.len() {
                let (a, b, cc) = (pts[i], pts[j], pts[k]);
                let d = 2.0 * (a.x * (b.y - cc.y) + b.x * (cc.y - a.y) + cc.x * (a.y - b.y));
                if d.abs() < 1e-12 {
                    continue;
                }
                let a2 = a.x * a.x + a.y * a.y;
                let b2 = b.x * b.x + b.y * b.y;
                let c2 = cc.x * cc.x + cc.y * cc.y;
                let ux = (a2 * (b.y - cc.y) + b2 * (cc.y - a.y) + c2 * (a.y - b.y)) / d;
                let uy = (a2 * (cc.x - b.x) + b2 * (a.x - cc.x) + c2 * (b.x - a.x)) / d;
                let center = Point::new(ux, uy);
                consider(center, dist(center, a).max(dist(center, b)).max(dist(center, cc)));
            }
        }
    }
    best.expect("some candidate covers every point")
}

fn geometry_oracles() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst_on_circle = 0.0f64;
    let mut with_points = 0;
    for _ in 0..10_000 {
        let c1 = Circle::new(Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)), rng.gen_range(0.0..1.5)).unwrap();
        let c2 = Circle::new(Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)), rng.gen_range(0.0..1.5)).unwrap();
        let pts = circle_intersections(&c1, &c2).map_err(|e| e.to_string())?;
        with_points += usize::from(!pts.is_empty());
        for p in pts {
            for c in [&c1, &c2] {
                worst_on_circle = worst_on_circle.max((dist(p, c.center) - c.radius).abs());
            }
        }
    }
    ensure(worst_on_circle <= 1e-9, || format!("intersection residual {worst_on_circle:e}"))?;

    let mut worst_disk = 0.0f64;
    for _ in 0..1_000 {
        let k = rng.gen_range(1..=10);
        let pts: Vec<Point> = (0..k).map(|_| Point::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).collect();
        let got = min_enclosing_disk(&pts).map_err(|e| e.to_string())?;
        let want = brute_force_disk(&pts);
        worst_disk = worst_disk.max(dist(got.center, want.center)).max((got.radius - want.radius).abs());
        ensure(pts.iter().all(|&p| got.contains(p, 1e-9)), || "disk misses a point".into())?;
    }
    ensure(worst_disk <= 1e-9, || format!("enclosing disk deviates by {worst_disk:e}"))?;

    let disk = Disk::new(Point::new(0.3, -0.2), 2.0);
    let n = 100_000;
    let inner = (0..n)
        .filter(|_| dist(sample_in_disk(&disk, &mut rng), disk.center) < disk.radius / 2f64.sqrt())
        .count();
    let frac = inner as f64 / n as f64;
    ensure((frac - 0.5).abs() <= 0.01, || format!("inner-disk fraction {frac}"))?;
    Ok(format!(
        "intersection residual {worst_on_circle:.1e} over {with_points} meeting pairs, disk deviation {worst_disk:.1e}, inner fraction {frac:.4}"
    ))
}

fn run_bin(args: &[&str]) -> Result<(i32, Vec<u8>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_prefembed"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

fn dir_snapshot(dir: &Path) -> Result<BTreeMap<String, Vec<u8>>, String> {
    let mut files = BTreeMap::new();
    for entry in std::fs::read_dir(dir).map_err(|e| e.to_string())? {
        let entry = entry.map_err(|e| e.to_string())?;
        let bytes = std::fs::read(entry.path()).map_err(|e| e.to_string())?;
        files.insert(entry.file_name().to_string_lossy().into_owned(), bytes);
    }
    Ok(files)
}

fn determinism() -> Check {
    let tmp = tempfile::tempdir().map_err(|e| e.to_string())?;
    let profile = tmp.path().join("p.txt");
    std::fs::write(&profile, "7 3\n1 2 3 4 5 6 7\n2 5 7 1 6 3 4\n7 3 2 4 1 5 6\n").map_err(|e| e.to_string())?;
    let p = profile.to_str().unwrap();
    let a = run_bin(&["search", p, "--seed", "314"])?;
    let b = run_bin(&["search", p, "--seed", "314"])?;
    ensure(a.0 == 0 && a == b, || format!("search exit {} / {}, equal stdout {}", a.0, b.0, a.1 == b.1))?;

    let mut snapshots = Vec::new();
    let mut outputs = Vec::new();
    for (i, workers) in ["1", "8", "1"].iter().enumerate() {
        let out = tmp.path().join(format!("run{i}"));
        let r = run_bin(&[
            "batch", "--m", "7", "--range", "1000..1300", "--seed", "9", "--workers", workers,
            "--out", out.to_str().unwrap(),
        ])?;
        ensure(r.0 == 0, || format!("batch exit {}", r.0))?;
        outputs.push(r.1);
        snapshots.push(dir_snapshot(&out)?);
    }
    ensure(outputs.windows(2).all(|w| w[0] == w[1]), || "batch summaries differ".into())?;
    ensure(snapshots.windows(2).all(|w| w[0] == w[1]), || "batch documents differ".into())?;
    ensure(snapshots[0].len() == 301, || format!("{} files written", snapshots[0].len()))?;
    Ok("search and batch (workers 1/8/1) byte-identical, 300 documents".into())
}

fn monotonicity() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let cursor = enumerate_canonical(7).map_err(|e| e.to_string())?;
    let mut restrictions = 0;
    for t in 0..1_000u64 {
        let p = cursor.get(rng.gen_range(0..cursor.total())).unwrap();
        let cfg = HeuristicConfig::with_seed(t);
        let out = greedy_embed(&p, &cfg).map_err(|e| e.to_string())?;
        let e = out.embedding.ok_or_else(|| format!("could not embed {p:?}"))?;
        for mask in 1u32..(1 << 7) {
            let keep: Vec<usize> = (0..7).filter(|a| mask & (1 << a) != 0).collect();
            let rp = p.restrict(&keep).map_err(|e| e.to_string())?;
            let re = e.restrict(&keep).map_err(|e| e.to_string())?;
            let r = verify(&rp, &re, cfg.verify_margin).map_err(|e| e.to_string())?;
            ensure(r.ok, || format!("restriction {keep:?} of {p:?} fails"))?;
            restrictions += 1;
        }
    }
    Ok(format!("1000 embedded profiles, {restrictions} restrictions all verify"))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("1 enumeration count", enumeration_count),
        ("2 closed-form agreement", closed_form_agreement),
        ("3 two-voter construction", theorem_two_voters),
        ("4 three-alternative construction", theorem_three_alternatives),
        ("5 sampled 3x7 heuristic run", sampled_three_by_seven),
        ("6 heuristic soundness", heuristic_soundness),
        ("7 geometry oracles", geometry_oracles),
        ("8 determinism", determinism),
        ("9 monotonicity", monotonicity),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}: {detail}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
