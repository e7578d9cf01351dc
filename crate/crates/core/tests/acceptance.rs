//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! gating failure.

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use equicorr::class::{binary_members, check_palindrome_corollaries, classify, CorollaryVerdict};
use equicorr::cli::{self, KnownTable};
use equicorr::compose::{compose, lift_equivocal_pair, stacked_triviality, nontrivially_equicorrelational};
use equicorr::search::{
    brute_force_classes, contains_generalized_palindrome, divisor_monotonicity_violations,
    enumerate_canonical, search, AutocorrKey, NontrivialClass, SearchOptions, VolumeDistribution,
};
use equicorr::{equicorrelational, factor, BinarySeq, IntLaurentSeq, PalindromeKind};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Gate {
    failures: usize,
}

impl Gate {
    fn check(&mut self, name: &str, budget: Option<Duration>, body: impl FnOnce() -> Result<String, String>) {
        let start = Instant::now();
        let outcome = body();
        let took = start.elapsed();
        let over = budget.is_some_and(|b| took > b);
        match outcome {
            Ok(detail) if !over => println!("PASS  {name}  ({took:.1?})  {detail}"),
            Ok(detail) => {
                self.failures += 1;
                println!("FAIL  {name}  ({took:.1?}, budget {:?})  {detail}", budget.unwrap());
            }
            Err(why) => {
                self.failures += 1;
                println!("FAIL  {name}  ({took:.1?})  {why}");
            }
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn verify_lengths(
    table: &KnownTable,
    lengths: impl Iterator<Item = usize>,
    computed: &mut BTreeMap<usize, Vec<NontrivialClass>>,
) -> Result<String, String> {
    let mut rows = Vec::new();
    for n in lengths {
        let out = search(n, &SearchOptions { force: true, ..Default::default() }).map_err(|e| e.to_string())?;
        let got = out.distribution();
        let want = table.expected(n).ok_or(format!("no row {n}"))?;
        ensure(got == want, || format!("length {n}: computed {got}, published {want}"))?;
        rows.push(format!("{n}:{got}"));
        computed.insert(n, out.classes);
    }
    Ok(rows.join(" "))
}

fn random_seq(rng: &mut ChaCha8Rng, max_len: usize, max_coeff: i64) -> IntLaurentSeq {
    let len = rng.gen_range(1..=max_len);
    let mut coeffs: Vec<i64> = (0..len).map(|_| rng.gen_range(-max_coeff..=max_coeff)).collect();
    while coeffs[0] == 0 {
        coeffs[0] = rng.gen_range(-max_coeff..=max_coeff);
    }
    while coeffs[len - 1] == 0 {
        coeffs[len - 1] = rng.gen_range(-max_coeff..=max_coeff);
    }
    IntLaurentSeq::from_i64s(rng.gen_range(-5..=5), &coeffs)
}

fn all_binary(n: usize) -> Vec<IntLaurentSeq> {
    (0..1u64 << n).map(|b| BinarySeq::new(b, n).unwrap().to_seq()).collect()
}

fn main() {
    let table = KnownTable::published();
    let mut gate = Gate { failures: 0 };
    let mut computed: BTreeMap<usize, Vec<NontrivialClass>> = BTreeMap::new();

    gate.check("table lengths 1..21", Some(Duration::from_secs(60)), || {
        verify_lengths(&table, 1..=21, &mut computed)
    });
    gate.check("table lengths 22..25", Some(Duration::from_secs(600)), || {
        verify_lengths(&table, 22..=25, &mut computed)
    });

    gate.check("divisor monotonicity over computed lengths", None, || {
        let equivocal: BTreeMap<usize, bool> = computed.iter().map(|(n, c)| (*n, !c.is_empty())).collect();
        ensure(equivocal.len() == 25, || format!("only {} lengths computed", equivocal.len()))?;
        let bad = divisor_monotonicity_violations(&equivocal);
        ensure(bad.is_empty(), || format!("equivocal m with unequivocal multiple: {bad:?}"))?;
        let pairs: usize = equivocal
            .iter()
            .filter(|(_, e)| **e)
            .map(|(m, _)| equivocal.keys().filter(|n| **n > *m && **n % *m == 0).count())
            .sum();
        Ok(format!("{pairs} (m, n) pairs checked"))
    });

    let mut reports = Vec::new();
    gate.check("class pipeline matches autocorrelation bucketing, n <= 12", Some(Duration::from_secs(300)), || {
        let mut checked = 0;
        for n in 1..=12 {
            let mut buckets: BTreeMap<AutocorrKey, BTreeSet<BinarySeq>> = BTreeMap::new();
            let all: Vec<BinarySeq> = enumerate_canonical(n).unwrap().collect();
            for f in &all {
                buckets.entry(AutocorrKey::of(f)).or_default().insert(*f);
            }
            for f in &all {
                let report = classify(&f.to_seq()).map_err(|e| e.to_string())?;
                let members: BTreeSet<BinarySeq> = binary_members(&report)
                    .iter()
                    .map(|m| BinarySeq::from_seq(m).expect("binary member"))
                    .collect();
                let want = &buckets[&AutocorrKey::of(f)];
                ensure(&members == want, || {
                    format!("{f}: pipeline {members:?}, bucketing {want:?}")
                })?;
                reports.push(report);
                checked += 1;
            }
            let sharded = &computed[&n];
            let brute = brute_force_classes(n).map_err(|e| e.to_string())?;
            ensure(sharded == &brute, || format!("sharded search differs from bucketing at {n}"))?;
        }
        Ok(format!("{checked} sequences"))
    });

    gate.check("factorization round trips", None, || {
        let mut rng = ChaCha8Rng::seed_from_u64(0xFAC7);
        for case in 0..1000 {
            let mut product = IntLaurentSeq::one();
            let target = rng.gen_range(1..=24usize);
            let mut deg = 0;
            while deg < target {
                let piece_len = rng.gen_range(2..=(target - deg + 1).min(9));
                let piece = random_seq(&mut rng, piece_len, 9);
                deg += piece.len() - 1;
                product = &product * &piece;
            }
            if rng.gen_bool(0.3) {
                let c = rng.gen_range(1i64..=9) * if rng.gen_bool(0.5) { 1 } else { -1 };
                product = product.scale(&BigInt::from(c));
            }
            let fact = factor(&product).map_err(|e| format!("case {case}: {e}"))?;
            ensure(fact.reconstruct() == product, || format!("case {case}: reconstruction differs"))?;
            let total: i64 = fact.factors.iter().map(|(g, m)| (g.len() as i64 - 1) * *m as i64).sum();
            ensure(total == product.len() as i64 - 1, || format!("case {case}: degree sum {total}"))?;
            ensure(fact.shift + total == product.top_exponent(), || format!("case {case}: shift"))?;
        }
        Ok("1000 cases".into())
    });

    gate.check("algebraic laws", None, || {
        let mut rng = ChaCha8Rng::seed_from_u64(0x1A75);
        let runs = 10_000;
        for _ in 0..runs {
            let f = random_seq(&mut rng, 12, 9);
            let g = random_seq(&mut rng, 12, 9);
            ensure((&f * &g).len() == f.len() + g.len() - 1, || format!("product length {f} {g}"))?;
            let m = rng.gen_range(1..=5i64) * if rng.gen_bool(0.5) { 1 } else { -1 };
            let fm = f.substitute(m).unwrap();
            ensure(fm.len() == (f.len() - 1) * m.unsigned_abs() as usize + 1, || format!("substitution {f} {m}"))?;
            ensure(f.conjugate().len() == f.len(), || format!("conjugate {f}"))?;
            let a = f.autocorrelation();
            ensure(a.as_seq().conjugate() == *a.as_seq(), || format!("asymmetric autocorrelation {f}"))?;
            let k = rng.gen_range(-7..=7);
            for t in [-&f, f.shift(k), f.conjugate(), -&f.conjugate().shift(k)] {
                ensure(t.autocorrelation() == a, || format!("trivial image of {f} changes autocorrelation"))?;
            }
        }
        Ok(format!("{runs} inputs per law"))
    });

    gate.check("palindrome corollaries", None, || {
        let mut pairs = 0u64;
        let mut gps: Vec<IntLaurentSeq> = Vec::new();
        for n in 1..=12 {
            gps.extend(all_binary(n).into_iter().filter(|f| f.palindrome_kind().is_generalized_palindrome()));
        }
        for f in &gps {
            for g in &gps {
                if let CorollaryVerdict::Violation(msg) = check_palindrome_corollaries(f, g) {
                    return Err(msg);
                }
                pairs += 1;
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0xC0);
        for _ in 0..10_000 {
            let len = rng.gen_range(1..=12usize);
            let half: Vec<i64> = (0..len).map(|_| rng.gen_range(-3..=3)).collect();
            let make = |anti: bool, h: &[i64]| {
                let mut c = h.to_vec();
                for j in 0..len / 2 {
                    c[len - 1 - j] = if anti { -c[j] } else { c[j] };
                }
                if anti && len % 2 == 1 {
                    c[len / 2] = 0;
                }
                IntLaurentSeq::from_i64s(0, &c)
            };
            let p = make(false, &half);
            let q = make(rng.gen_bool(0.5), &(0..len).map(|_| rng.gen_range(-3..=3)).collect::<Vec<_>>());
            let scaled = p.scale(&BigInt::from(rng.gen_range(1..=3))).shift(rng.gen_range(-3..=3));
            for (x, y) in [(&p, &q), (&p, &scaled), (&q, &p)] {
                if let CorollaryVerdict::Violation(msg) = check_palindrome_corollaries(x, y) {
                    return Err(msg);
                }
            }
            ensure(!equicorrelational(&p, &IntLaurentSeq::zero()) || p.is_zero(), || "zero".into())?;
        }
        ensure(equicorrelational(&IntLaurentSeq::zero(), &IntLaurentSeq::zero()), || "0 ~ 0".into())?;
        for r in &reports {
            let gp: Vec<_> = r
                .trivial_reps
                .iter()
                .filter(|s| s.palindrome_kind().is_generalized_palindrome())
                .collect();
            for x in &gp {
                for y in &gp {
                    ensure(x.is_associate_of(y), || format!("class of {} holds {x} and {y}", r.input))?;
                }
            }
        }
        for classes in computed.values() {
            for c in classes {
                let gp: Vec<_> = c
                    .members
                    .iter()
                    .map(|m| m.to_seq())
                    .filter(|s| s.palindrome_kind() != PalindromeKind::None)
                    .collect();
                ensure(gp.len() <= 1, || format!("class {:?} holds several generalized palindromes", c.members))?;
            }
        }
        Ok(format!("{pairs} binary pairs, 10000 random integer cases"))
    });

    gate.check("composition triviality and lifts", Some(Duration::from_secs(120)), || {
        let mut cases = 0u64;
        let equi_pairs = |len: usize| {
            let all = all_binary(len);
            let mut out = Vec::new();
            for x in &all {
                for y in &all {
                    if equicorrelational(x, y) {
                        out.push((x.clone(), y.clone()));
                    }
                }
            }
            out
        };
        let by_len: Vec<_> = (0..=4).map(|l| if l == 0 { Vec::new() } else { equi_pairs(l) }).collect();
        for l in 1..=4 {
            for m in 1..=4 {
                for (a, c) in &by_len[l] {
                    for (b, d) in &by_len[m] {
                        let closed = stacked_triviality(a, b, c, d, m).map_err(|e| e.to_string())?;
                        let f = compose(a, b, m).unwrap();
                        let g = compose(c, d, m).unwrap();
                        ensure(equicorrelational(&f, &g), || format!("{a} {b} {c} {d}: composites differ"))?;
                        let direct = f.canonical_trivial() == g.canonical_trivial();
                        ensure(closed == direct, || format!("{a} {b} {c} {d}: closed {closed}, direct {direct}"))?;
                        cases += 1;
                    }
                }
            }
        }
        let nine = &computed[&9][0];
        let (b, d) = (nine.members[0].to_seq(), nine.members[1].to_seq());
        for pairs in &by_len[1..=3] {
            for (a, c) in pairs {
                for (x, y) in [(&b, &d), (&b, &b), (&d, &b.conjugate())] {
                    let closed = stacked_triviality(a, x, c, y, 9).map_err(|e| e.to_string())?;
                    let f = compose(a, x, 9).unwrap();
                    let g = compose(c, y, 9).unwrap();
                    let direct = f.canonical_trivial() == g.canonical_trivial();
                    ensure(closed == direct, || format!("lifted {a} {x} {c} {y}: closed {closed}, direct {direct}"))?;
                    cases += 1;
                }
            }
        }
        for n in [18, 27] {
            let (f, g) = lift_equivocal_pair(&b, &d, n).map_err(|e| e.to_string())?;
            let (fb, gb) = (BinarySeq::from_seq(&f).unwrap(), BinarySeq::from_seq(&g).unwrap());
            ensure(fb.len() == n && AutocorrKey::of(&fb) == AutocorrKey::of(&gb), || format!("lift to {n}: keys differ"))?;
            ensure(fb.canonical() != gb.canonical(), || format!("lift to {n} is trivial"))?;
            ensure(nontrivially_equicorrelational(&f, &g), || format!("lift to {n} not nontrivial"))?;
            if let Some(classes) = computed.get(&n) {
                let (cf, cg) = (fb.canonical(), gb.canonical());
                ensure(
                    classes.iter().any(|c| c.members.contains(&cf) && c.members.contains(&cg)),
                    || format!("lift to {n} absent from search results"),
                )?;
            }
        }
        Ok(format!("{cases} quadruples, lifts to 18 and 27"))
    });

    gate.check("determinism across workers and resumption", None, || {
        let doc = |threads: usize| {
            let mut out = Vec::new();
            let mut err = Vec::new();
            let t = threads.to_string();
            let code = cli::run(["equicorr", "search", "18", "--json", "--members", "--threads", &t], &mut out, &mut err);
            (code, out)
        };
        let (c1, d1) = doc(1);
        let (c2, d2) = doc(2);
        let (c8, d8) = doc(8);
        ensure(c1 == 0 && c2 == 0 && c8 == 0, || "search failed".into())?;
        ensure(d1 == d2 && d1 == d8, || "result documents differ between worker counts".into())?;

        let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
        let cut = SearchOptions {
            checkpoint_dir: Some(dir.path().to_path_buf()),
            max_new_shards: Some(150),
            threads: Some(4),
            ..Default::default()
        };
        let partial = search(21, &cut).map_err(|e| e.to_string())?;
        ensure(!partial.is_complete(), || "cut run completed".into())?;
        // a writer interrupted mid-file leaves only a temporary name behind
        std::fs::write(dir.path().join("shard-00999.tmp"), "equicorr-shard 1\nn 2").map_err(|e| e.to_string())?;
        let resumed = search(21, &SearchOptions { max_new_shards: None, threads: Some(2), ..cut })
            .map_err(|e| e.to_string())?;
        let fresh = search(21, &SearchOptions::default()).map_err(|e| e.to_string())?;
        ensure(resumed.is_complete(), || "resumed run incomplete".into())?;
        ensure(resumed == fresh, || "resumed run differs from uninterrupted run".into())?;
        Ok(format!("{} bytes per document, resumed after {}/{} shards", d1.len(), partial.shards_done, partial.shards))
    });

    gate.check("no odd volumes or palindromes in nontrivial classes", None, || {
        let mut classes = 0;
        for (n, cs) in &computed {
            for c in cs {
                ensure(c.volume() % 2 == 0, || format!("length {n}: odd volume {:?}", c.members))?;
                ensure(!contains_generalized_palindrome(c), || format!("length {n}: palindrome in {:?}", c.members))?;
                classes += 1;
            }
        }
        Ok(format!("{classes} classes over lengths 1..{}", computed.keys().max().unwrap_or(&0)))
    });

    // Not gating.
    let start = Instant::now();
    for n in [26, 27] {
        let got = search(n, &SearchOptions::default()).map(|o| o.distribution());
        let want: VolumeDistribution = table.expected(n).unwrap();
        match got {
            Ok(d) if d == want => println!("PASS  stretch length {n} ({:.1?})  {d}", start.elapsed()),
            Ok(d) => println!("MISS  stretch length {n}  computed {d}, published {want}"),
            Err(e) => println!("MISS  stretch length {n}  {e}"),
        }
    }

    if gate.failures > 0 {
        println!("{} criteria failed", gate.failures);
        std::process::exit(1);
    }
    println!("all criteria passed");
}
