//! Acceptance criteria, one pass/fail line each. Runs without the libtest
//! harness so the lines always reach the output.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use indomatic::critical::{characterization_holds, is_strong_in_domatic_critical, Characterization};
use indomatic::families::{
    complete_digraph, critical_composition_family, directed_cycle, labeled_digraphs,
    order_value_family, pair_critical_family, random_strong_digraph,
};
use indomatic::iso::are_isomorphic;
use indomatic::laws::{check_all, Status};
use indomatic::solver::{
    brute_force_oracle, enumerate_partitions_into_k, lambda_number, strong_in_domatic_number,
    Invariant,
};
use indomatic::transforms::{
    cartesian_product, composition, composition_partition, line_digraph, lift_middle_partition,
    lift_product_partition, lift_total_partition, middle, root, subdivision, total, CompositionSpec,
};
use indomatic::{Digraph, VertexPartition};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Collects failures for one criterion.
#[derive(Default)]
struct Check {
    failures: Vec<String>,
}

impl Check {
    fn expect(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

fn strong_upto_4() -> Vec<Digraph> {
    (1..=4)
        .flat_map(|n| labeled_digraphs(n).unwrap())
        .filter(|d| d.is_strong().unwrap())
        .collect()
}

fn value(d: &Digraph) -> usize {
    strong_in_domatic_number(d).unwrap().value
}

fn valid(d: &Digraph, p: &VertexPartition) -> bool {
    indomatic::domination::is_strong_in_domatic_partition(d, p).unwrap().is_valid()
}

fn oracle_equivalence() -> Check {
    let mut c = Check::default();
    let started = Instant::now();
    let mut strong = 0;
    for n in [3, 4] {
        for d in labeled_digraphs(n).unwrap() {
            if !d.is_strong().unwrap() {
                continue;
            }
            strong += 1;
            let solved = value(&d);
            let oracle = brute_force_oracle(&d, Invariant::StrongInDomatic).unwrap();
            c.expect(oracle == Some(solved), || format!("{d:?}: solver {solved}, oracle {oracle:?}"));
        }
    }
    c.expect(strong == 18 + 1606, || format!("{strong} strong digraphs, expected 1624"));
    let elapsed = started.elapsed();
    c.expect(elapsed < Duration::from_secs(300), || format!("took {elapsed:?}"));
    c
}

fn known_values() -> Check {
    let mut c = Check::default();
    for n in 1..=5 {
        let v = value(&complete_digraph(n).unwrap());
        c.expect(v == n, || format!("complete order {n}: {v}"));
    }
    for n in [3, 4] {
        let d = pair_critical_family(n).unwrap().digraph;
        let v = value(&d);
        let critical = is_strong_in_domatic_critical(&d).unwrap();
        c.expect(d.order() == 2 * n && v == n && critical, || {
            format!("pair-critical {n}: order {}, value {v}, critical {critical}", d.order())
        });
    }
    for (p, m) in [(6, 2), (7, 3), (9, 4)] {
        let d = order_value_family(p, m).unwrap().digraph;
        let v = value(&d);
        c.expect(d.order() == p && v == m, || format!("order-value ({p},{m}): value {v}"));
    }
    for (p, n) in [(6, 2), (6, 3), (8, 2)] {
        let d = critical_composition_family(p, n).unwrap().digraph;
        let v = value(&d);
        let critical = is_strong_in_domatic_critical(&d).unwrap();
        c.expect(d.order() == p && v == n && critical, || {
            format!("critical-composition ({p},{n}): value {v}, critical {critical}")
        });
    }
    for d in [directed_cycle(3).unwrap(), complete_digraph(3).unwrap(), complete_digraph(4).unwrap()] {
        let s = value(&subdivision(&d).unwrap().digraph);
        let r = value(&root(&d).unwrap().digraph);
        c.expect(s == 1 && r == 1, || format!("{d:?}: S {s}, R {r}"));
    }
    c
}

fn line_identity() -> Check {
    let mut c = Check::default();
    let mut tested = 0;
    for n in [3, 4] {
        for d in labeled_digraphs(n).unwrap() {
            if d.arc_count() > 10 || !d.is_strong().unwrap() {
                continue;
            }
            tested += 1;
            let line = value(&line_digraph(&d).unwrap().digraph);
            let lambda = lambda_number(&d).unwrap().value;
            c.expect(line == lambda, || format!("{d:?}: d_s⁻(L) {line}, Λ {lambda}"));
        }
    }
    c.expect(tested > 1000, || format!("only {tested} digraphs tested"));
    let k2 = complete_digraph(2).unwrap();
    let line = value(&line_digraph(&k2).unwrap().digraph);
    let lambda = lambda_number(&k2).unwrap().value;
    c.expect(line == 2 && lambda == 1, || format!("K2: d_s⁻(L) {line}, Λ {lambda}"));
    c
}

fn law_suite() -> Check {
    let mut c = Check::default();
    let mut corpus = strong_upto_4();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..200 {
        let n = rng.gen_range(5..=6);
        let p = rng.gen_range(0.3..0.7);
        corpus.push(random_strong_digraph(&mut rng, n, p).unwrap());
    }
    let mut held = [0usize; 16];
    for d in &corpus {
        let report = check_all(d).unwrap();
        for e in report.violations() {
            c.failures.push(format!("{} violated on {d:?}: {:?}", e.id, e.details));
        }
        for (i, e) in report.entries.iter().enumerate() {
            held[i] += usize::from(e.status == Status::Holds);
        }
    }
    for (i, &count) in held.iter().enumerate() {
        c.expect(count > 0, || format!("L{} never applicable", i + 1));
    }
    c
}

fn criticality_equivalence() -> Check {
    let mut c = Check::default();
    let mut in_scope = 0;
    for d in strong_upto_4() {
        match characterization_holds(&d).unwrap() {
            Characterization::NotApplicable { .. } => continue,
            verdict => {
                in_scope += 1;
                let holds = matches!(verdict, Characterization::Holds { .. });
                let critical = is_strong_in_domatic_critical(&d).unwrap();
                c.expect(holds == critical, || format!("{d:?}: critical {critical}, characterization {verdict:?}"));
            }
        }
    }
    c.expect(in_scope > 0, || "no digraph satisfies the hypotheses".into());
    c
}

fn random_partition(rng: &mut ChaCha8Rng, d: &Digraph) -> VertexPartition {
    let k = rng.gen_range(1..=value(d));
    enumerate_partitions_into_k(d, k).unwrap().choose(rng).unwrap().clone()
}

fn random_digraph(rng: &mut ChaCha8Rng, n: usize) -> Digraph {
    let arcs = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).filter(|&(u, v)| u != v);
    let arcs: Vec<_> = arcs.filter(|_| rng.gen_bool(0.5)).collect();
    Digraph::new(n, arcs).unwrap()
}

fn constructive_lifts() -> Check {
    let mut c = Check::default();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for _ in 0..50 {
        let n = rng.gen_range(2..=4);
        let d = random_strong_digraph(&mut rng, n, 0.5).unwrap();
        let m = rng.gen_range(1..=3);
        let h = random_strong_digraph(&mut rng, m, 0.5).unwrap();
        let p = random_partition(&mut rng, &d);
        let lifted = lift_product_partition(&p, &d, &h).unwrap();
        let product = cartesian_product(&d, &h).unwrap().digraph;
        c.expect(valid(&product, &lifted) && lifted.block_count() == p.block_count(), || {
            format!("product lift {d:?} x {h:?} with {p:?}")
        });
    }
    for _ in 0..50 {
        let n = rng.gen_range(2..=4);
        let host = random_strong_digraph(&mut rng, n, 0.5).unwrap();
        let parts: Vec<_> = (0..n).map(|_| {
            let order = rng.gen_range(1..=3);
            random_digraph(&mut rng, order)
        }).collect();
        let min = parts.iter().map(Digraph::order).min().unwrap();
        let spec = CompositionSpec::new(host, parts).unwrap();
        let p = composition_partition(&spec).unwrap();
        let composed = composition(&spec).unwrap().digraph;
        c.expect(valid(&composed, &p) && p.block_count() == min, || format!("composition {spec:?}"));
    }
    for lift in ["middle", "total"] {
        for _ in 0..50 {
            let n = rng.gen_range(3..=4);
            let d = loop {
                let d = random_strong_digraph(&mut rng, n, 0.5).unwrap();
                if d.arc_count() <= 8 {
                    break d;
                }
            };
            let p = random_partition(&mut rng, &line_digraph(&d).unwrap().digraph);
            let (target, lifted, extra) = if lift == "middle" {
                (middle(&d).unwrap().digraph, lift_middle_partition(&p, &d).unwrap(), 0)
            } else {
                (total(&d).unwrap().digraph, lift_total_partition(&p, &d).unwrap(), 1)
            };
            c.expect(valid(&target, &lifted) && lifted.block_count() == p.block_count() + extra, || {
                format!("{lift} lift of {p:?} on {d:?}")
            });
        }
    }
    c
}

type Golden<'a> = Vec<(&'a str, Vec<&'a str>, i32, Box<dyn Fn(&Run) -> bool + 'a>)>;
type Criterion = (&'static str, fn() -> Check);

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cli(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_indomatic")).args(args).output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn write_file(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn cli_contract() -> Check {
    use indomatic::cli::formats::{parse_digraph, write_digraph};
    let mut c = Check::default();
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();

    // Round trip on canonical files.
    let mut samples = vec![complete_digraph(4).unwrap(), directed_cycle(5).unwrap(), pair_critical_family(3).unwrap().digraph];
    samples.extend(labeled_digraphs(3).unwrap().step_by(7));
    for g in &samples {
        let text = write_digraph(g);
        let again = write_digraph(&parse_digraph(&text).unwrap());
        c.expect(text == again, || format!("round trip changed {text:?}"));
        let path = write_file(d, "rt", &text);
        let out = d.join("rt.out");
        let r = cli(&["transform", "--in", &path, "--op", "converse", "--out", out.to_str().unwrap()]);
        let twice = d.join("rt.out2");
        cli(&["transform", "--in", out.to_str().unwrap(), "--op", "converse", "--out", twice.to_str().unwrap()]);
        c.expect(r.code == 0 && std::fs::read_to_string(&twice).unwrap() == text, || {
            format!("converse twice differs for {text:?}")
        });
    }

    // Emitted witnesses re-verify.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..10 {
        let n = rng.gen_range(2..=6);
        let g = random_strong_digraph(&mut rng, n, 0.5).unwrap();
        let path = write_file(d, &format!("w{i}"), &write_digraph(&g));
        for (what, mode) in [("dsminus", "in"), ("dsplus", "out")] {
            let wit = d.join(format!("w{i}.{what}"));
            let r = cli(&["compute", "--in", &path, "--what", what, "--witness", wit.to_str().unwrap()]);
            let v = cli(&["verify", "--in", &path, "--partition", wit.to_str().unwrap(), "--mode", mode]);
            c.expect(r.code == 0 && v.code == 0, || format!("witness {what} of {g:?} failed: {}", v.stdout));
        }
    }

    // Golden scenarios.
    let k4 = write_file(d, "k4", &write_digraph(&complete_digraph(4).unwrap()));
    let c5 = write_file(d, "c5", &write_digraph(&directed_cycle(5).unwrap()));
    let c4 = write_file(d, "c4", &write_digraph(&directed_cycle(4).unwrap()));
    let c3 = write_file(d, "c3", &write_digraph(&directed_cycle(3).unwrap()));
    let k2 = write_file(d, "k2", &write_digraph(&complete_digraph(2).unwrap()));
    let path = write_file(d, "path", "n 3\n0 1\n1 2\n");
    let broken = write_file(d, "broken", "n 3\n0 1\n1 7\n");
    let singletons = write_file(d, "single.part", "0\n1\n2\n3\n");
    let pairs = write_file(d, "pairs.part", "0 2\n1 3\n");
    let whole = write_file(d, "whole.part", "0 1 2\n");
    let line_out = d.join("line").to_str().unwrap().to_string();
    let prod_out = d.join("prod").to_str().unwrap().to_string();
    let gen_out = d.join("pc3").to_str().unwrap().to_string();
    let gen_bad = d.join("ov").to_str().unwrap().to_string();

    let golden: Golden = vec![
        ("compute K4", vec!["compute", "--in", &k4, "--what", "dsminus"], 0,
            Box::new(|r| r.stdout == "4\n# witness\n0\n1\n2\n3\n")),
        ("compute C5", vec!["compute", "--in", &c5, "--what", "dsminus"], 0,
            Box::new(|r| r.stdout.starts_with("1\n"))),
        ("compute path", vec!["compute", "--in", &path, "--what", "dsminus"], 3,
            Box::new(|r| r.stderr.contains("if and only if the digraph is strong"))),
        ("verify K4", vec!["verify", "--in", &k4, "--partition", &singletons], 0,
            Box::new(|r| r.stdout == "valid\n")),
        ("verify C4", vec!["verify", "--in", &c4, "--partition", &pairs], 1,
            Box::new(|r| r.stdout.contains("block 0 not strong"))),
        ("verify C3", vec!["verify", "--in", &c3, "--partition", &whole], 0,
            Box::new(|r| r.stdout == "valid\n")),
        ("line C3", vec!["transform", "--in", &c3, "--op", "line", "--out", &line_out], 0,
            Box::new(|_| are_isomorphic(
                &parse_digraph(&std::fs::read_to_string(&line_out).unwrap()).unwrap(),
                &directed_cycle(3).unwrap()))),
        ("product K2", vec!["transform", "--in", &k2, "--op", "product", "--with", &k2, "--out", &prod_out], 0,
            Box::new(|_| {
                let p = parse_digraph(&std::fs::read_to_string(&prod_out).unwrap()).unwrap();
                p.order() == 4 && p.arc_count() == 8
            })),
        ("generate pair-critical", vec!["generate", "--family", "pair-critical", "--params", "n=3", "--out", &gen_out], 0,
            Box::new(|_| {
                let claims: serde_json::Value = serde_json::from_str(
                    &std::fs::read_to_string(format!("{gen_out}.claims.json")).unwrap()).unwrap();
                let g = parse_digraph(&std::fs::read_to_string(&gen_out).unwrap()).unwrap();
                claims["value"] == 3 && claims["critical"] == true && g.order() == 6
                    && Path::new(&format!("{gen_out}.part")).exists()
            })),
        ("generate order-value", vec!["generate", "--family", "order-value", "--params", "p=6", "m=4", "--out", &gen_bad], 3,
            Box::new(|r| r.stderr.contains("m <= p/2"))),
        ("parse error", vec!["compute", "--in", &broken, "--what", "dsminus"], 2,
            Box::new(|r| r.stderr.contains("line 3"))),
        ("critical C4", vec!["critical", "--in", &c4], 0,
            Box::new(|r| r.stdout.contains("critical: no (arc (0,1) deletion destroys strongness)"))),
        ("laws K4", vec!["laws", "--in", &k4], 0,
            Box::new(|r| r.stdout.contains("violations: 0"))),
    ];
    for (name, args, code, check) in &golden {
        let r = cli(args);
        c.expect(r.code == *code && check(&r), || {
            format!("{name}: exit {} (expected {code}), stdout {:?}, stderr {:?}", r.code, r.stdout, r.stderr)
        });
    }
    c
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("oracle equivalence on all labeled digraphs of order 3 and 4", oracle_equivalence),
        ("known values of complete, extremal and derived digraphs", known_values),
        ("line digraph value equals the strong-cover number", line_identity),
        ("law suite has no violations", law_suite),
        ("criticality equals its structural characterization", criticality_equivalence),
        ("constructive lifts yield valid partitions", constructive_lifts),
        ("command-line contract", cli_contract),
    ];
    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let started = Instant::now();
        let check = run();
        let status = if check.failures.is_empty() { "PASS" } else { "FAIL" };
        println!("criterion {}: {status}: {name} ({:.1?})", i + 1, started.elapsed());
        for f in check.failures.iter().take(5) {
            println!("    {f}");
        }
        if !check.failures.is_empty() {
            failed.push(i + 1);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
