//! Acceptance criteria, one line per criterion. Runs without the libtest
//! harness so the verdict lines always reach the terminal.

mod common;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use endosimplex::strata::find_violation;
use endosimplex::typemap::{self, BlockLabel, TypeSignature};
use endosimplex::verify::{self, Suite};
use endosimplex::{Endo, Execution, Law, Simplex};

type Outcome = Result<String, String>;

struct Criterion {
    id: &'static str,
    title: &'static str,
    bound: Duration,
    run: fn() -> Outcome,
}

const CRITERIA: [Criterion; 8] = [
    Criterion { id: "AC1", title: "worked example", bound: Duration::from_secs(1), run: worked_example },
    Criterion {
        id: "AC2",
        title: "Catalan nilpotent counts, 2 <= n <= 8",
        bound: Duration::from_secs(30),
        run: nilpotent_counts,
    },
    Criterion {
        id: "AC3",
        title: "idempotent census, 3 <= n <= 7",
        bound: Duration::from_secs(30),
        run: idempotent_census,
    },
    Criterion {
        id: "AC4",
        title: "right and left identities, n <= 7",
        bound: Duration::from_secs(60),
        run: identities,
    },
    Criterion {
        id: "AC5",
        title: "structure sweep, n <= 6 (doubly internal at n = 7)",
        bound: Duration::from_secs(300),
        run: structure,
    },
    Criterion { id: "AC6", title: "lifting, n <= 5", bound: Duration::from_secs(120), run: lifting },
    Criterion { id: "AC7", title: "partition integrity, n <= 6", bound: Duration::from_secs(120), run: partitions },
    Criterion {
        id: "AC8",
        title: "middle-face counterexample, 3 <= n <= 7",
        bound: Duration::from_secs(5),
        run: middle_faces,
    },
];

fn main() -> ExitCode {
    let mut failed = 0;
    for c in &CRITERIA {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(detail) if elapsed < c.bound => (true, detail),
            Ok(detail) => (false, format!("{detail}; too slow")),
            Err(reason) => (false, reason),
        };
        let mark = if ok { "PASS" } else { "FAIL" };
        println!("[{mark}] {} {}: {detail} ({elapsed:.2?}, bound {:?})", c.id, c.title, c.bound);
        failed += usize::from(!ok);
    }
    println!("acceptance: {} passed, {failed} failed", CRITERIA.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn parse(text: &str) -> Map {
    Endo::parse(text, 10).unwrap().values().to_vec()
}

fn worked_example() -> Outcome {
    let s = Simplex::new(10, vec![0, 2, 3, 5, 8]).unwrap();
    let alpha = Endo::parse("0_4 2_2 8_4", 10).unwrap();
    let beta = Endo::parse("0_3 2_2 3_3 8_2", 10).unwrap();
    let products = [
        ("alpha^2", alpha.power(2).unwrap(), power(&parse("0_4 2_2 8_4"), 2), "0_6 8_4"),
        ("beta^2", beta.power(2).unwrap(), power(&parse("0_3 2_2 3_3 8_2"), 2), "0_5 2_3 8_2"),
        ("beta^3", beta.power(3).unwrap(), power(&parse("0_3 2_2 3_3 8_2"), 3), "0_8 8_2"),
        ("alpha*beta", alpha.compose(&beta).unwrap(), mul(alpha.values(), beta.values()), "0_6 8_4"),
        ("beta*alpha", beta.compose(&alpha).unwrap(), mul(beta.values(), alpha.values()), "0_8 8_2"),
    ];
    for (name, got, oracle, expected) in &products {
        ensure(got.to_string() == *expected && got.values() == oracle.as_slice(), || {
            format!("{name} = {got}, expected {expected}")
        })?;
    }
    let types = [(&alpha, vec![0, 0, 0, 1, 4]), (&beta, vec![0, 0, 1, 2, 4])];
    for (e, expected) in &types {
        let got = typemap::type_of(&s, e).unwrap();
        ensure(got.values() == expected.as_slice() && type_of(e.values(), s.vertices()) == *expected, || {
            format!("type of {e} = {got}")
        })?;
    }
    let iota = TypeSignature::new(vec![0, 0, 0, 0, 4]).unwrap();
    for e in [&alpha, &beta] {
        let label = typemap::classify(&s, e).unwrap();
        ensure(label == BlockLabel::IdempotentClosure(iota.clone()), || format!("{e} lands in {label}"))?;
    }
    let roots = all_maps(5).into_iter().filter(|p| idempotent_power(p).0 == iota.values()).count();
    let library_roots = verify::root_semiring(&iota).unwrap().len();
    ensure(roots == 5 && library_roots == 5, || format!("root semiring has {roots} / {library_roots} elements"))?;
    Ok("5 products, 2 types, shared block IC[0,0,0,0,4], root semiring of order 5".into())
}

fn nilpotent_counts() -> Outcome {
    let mut cases = 0;
    for n in 2..=8u32 {
        let mut seen = vec![0u128; n as usize];
        for a in all_maps(n) {
            if let Some(p) = (1..=n as usize).map(|m| power(&a, m)).find(|p| is_constant(p)) {
                seen[p[0] as usize] += 1;
            }
        }
        for a in 0..n {
            let expected = catalan(a) * catalan(n - a - 1);
            let library = typemap::nilpotent_count(n, a).unwrap();
            ensure(seen[a as usize] == expected && library == expected, || {
                format!("n={n}, a={a}: counted {}, formula {expected}, library {library}", seen[a as usize])
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (n, a) pairs"))
}

fn idempotent_census() -> Outcome {
    let mut cases = 0;
    for n in 3..=7u32 {
        let mut census: BTreeMap<Vec<u32>, u128> = BTreeMap::new();
        for a in all_maps(n).into_iter().filter(|a| is_idempotent(a)) {
            *census.entry(fixed_points(&a)).or_default() += 1;
        }
        for fixed in vertex_sets(n).into_iter().filter(|f| f.len() < n as usize) {
            let expected: u128 = fixed.windows(2).map(|w| (w[1] - w[0]) as u128).product();
            let seen = census.get(&fixed).copied().unwrap_or(0);
            let library = typemap::idempotent_count(n, &fixed).unwrap();
            ensure(seen == expected && library == expected, || {
                format!("n={n}, fixed {fixed:?}: counted {seen}, formula {expected}, library {library}")
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} fixed-point sets"))
}

fn identities() -> Outcome {
    let (mut simplices, mut proper) = (0, 0);
    for n in 1..=7u32 {
        for vertices in vertex_sets(n) {
            let members = monotone_maps(n, &vertices);
            let right: Vec<&Map> = members.iter().filter(|a| members.iter().all(|b| mul(b, a) == *b)).collect();
            let interior_idempotents: Vec<&Map> =
                members.iter().filter(|a| is_idempotent(a) && vertices.iter().all(|v| a.contains(v))).collect();
            let gaps: usize = vertices.windows(2).map(|w| (w[1] - w[0]) as usize).product();
            let s = Simplex::new(n, vertices.clone()).unwrap();
            let library: Vec<Map> =
                typemap::right_identities(&s).unwrap().iter().map(|e| e.values().to_vec()).collect();
            let right_owned: Vec<Map> = right.iter().map(|a| a.to_vec()).collect();
            ensure(
                !right.is_empty() && right == interior_idempotents && right.len() == gaps && library == right_owned,
                || {
                    format!(
                        "{s}: {} right identities, {} interior idempotents, product {gaps}",
                        right.len(),
                        interior_idempotents.len()
                    )
                },
            )?;
            simplices += 1;
            let left = members.iter().find(|a| members.iter().all(|b| mul(a, b) == *b));
            if vertices.len() >= 2 && vertices.len() < n as usize {
                ensure(left.is_none(), || format!("{s}: left identity {left:?}"))?;
                let witness = typemap::left_identity(&s).unwrap();
                ensure(witness.holds_in(&s.enumerate().unwrap()), || format!("{s}: {witness}"))?;
                proper += 1;
            } else if vertices.len() == n as usize && n >= 2 {
                let id: Map = (0..n).collect();
                ensure(left == Some(&id), || format!("full simplex n={n}: identity is not two-sided"))?;
            }
        }
    }
    Ok(format!("{simplices} simplices, {proper} proper with k >= 2 have no left identity; full simplices have a two-sided identity"))
}

fn failing(report: &verify::VerificationReport) -> Vec<String> {
    report
        .entries
        .iter()
        .filter(|e| !e.passed)
        .map(|e| format!("{}: {}", e.id, e.counterexample.as_deref().unwrap_or("")))
        .collect()
}

fn structure() -> Outcome {
    let mut claims = 0;
    for suite in [Suite::Simplex, Suite::Strata] {
        let report = verify::run(suite, 6, 0).unwrap();
        let bad = failing(&report);
        ensure(bad.is_empty(), || bad.join("; "))?;
        claims += report.entries.len();
    }
    // independent recheck of the headline statements on smaller chains
    for n in 1..=5u32 {
        for vertices in vertex_sets(n) {
            let amb = monotone_maps(n, &vertices);
            let s = format!("n={n} {vertices:?}");
            let v = verdicts(&amb, &amb);
            ensure(v[0] && v[1], || format!("{s}: not a subsemiring"))?;
            for face in vertex_sets(vertices.len() as u32) {
                let face: Vec<u32> = face.iter().map(|&i| vertices[i as usize]).collect();
                let v = verdicts(&monotone_maps(n, &face), &amb);
                ensure(v[0] && v[1] && v[2], || format!("{s}: face {face:?} {v:?}"))?;
                ensure(face.len() == vertices.len() || !v[3], || format!("{s}: face {face:?} is a right ideal"))?;
            }
            let internal = vertices[0] != 0 && *vertices.last().unwrap() != n - 1;
            for t in 1..=2u32.min(n) {
                let floor = (n - t) as usize;
                let union: Vec<Map> = amb
                    .iter()
                    .filter(|a| vertices.iter().any(|&v| a.iter().filter(|&&x| x == v).count() >= floor))
                    .cloned()
                    .collect();
                let v = verdicts(&union, &amb);
                if t == 1 {
                    ensure(v[3] && (!internal || v[2]), || format!("{s}: J {v:?}"))?;
                } else if internal {
                    ensure(v[3], || format!("{s}: I {v:?}"))?;
                }
            }
        }
    }
    Ok(format!("{claims} swept claims, oracle recheck for n <= 5"))
}

fn lifting() -> Outcome {
    let report = verify::run(Suite::Typemap, 5, 0).unwrap();
    let lift = report.entry("typemap.lift").ok_or("lift claim missing")?;
    ensure(lift.passed, || lift.counterexample.clone().unwrap_or_default())?;
    let mut cases = 0;
    for n in 1..=4u32 {
        for vertices in vertex_sets(n) {
            let amb = monotone_maps(n, &vertices);
            let k = vertices.len() as u32;
            let coord = all_maps(k);
            let s = Simplex::new(n, vertices.clone()).unwrap();
            for face in vertex_sets(k) {
                let r = monotone_maps(k, &face);
                let lifted: Vec<Map> = amb.iter().filter(|a| r.contains(&type_of(a, &vertices))).cloned().collect();
                let sigs: Vec<TypeSignature> = r.iter().map(|t| TypeSignature::new(t.clone()).unwrap()).collect();
                let library: Vec<Map> = typemap::lift(&s, &sigs).unwrap().iter().map(|e| e.values().to_vec()).collect();
                ensure(library == lifted, || format!("{s}: lift of face {face:?} differs"))?;
                ensure(verdicts(&r, &coord) == verdicts(&lifted, &amb), || format!("{s}: verdicts of face {face:?}"))?;
                cases += 1;
            }
        }
    }
    Ok(format!("{} lifted sets swept, {cases} faces rechecked by oracle", lift.checked))
}

fn label_oracle(a: &Map, vertices: &[u32]) -> String {
    let t = type_of(a, vertices);
    let (iota, m) = idempotent_power(&t);
    let tuple = |x: &Map| x.iter().map(u32::to_string).collect::<Vec<_>>().join(",");
    if is_constant(&iota) {
        format!("N[{}]", vertices[iota[0] as usize])
    } else if t.iter().enumerate().all(|(i, &x)| x == i as u32) {
        "RI".into()
    } else if m == 1 {
        format!("I[{}]", tuple(&t))
    } else {
        format!("IC[{}]", tuple(&iota))
    }
}

fn partitions() -> Outcome {
    let mut simplices = 0;
    for n in 1..=6u32 {
        for vertices in vertex_sets(n) {
            let s = Simplex::new(n, vertices.clone()).unwrap();
            let report = typemap::partition(&s).unwrap();
            ensure(report.checks_pass(), || format!("{s}: {:?}", report.first_failure().map(|(l, _)| l.key())))?;
            let mut expected: BTreeMap<String, Vec<Map>> = BTreeMap::new();
            for a in monotone_maps(n, &vertices) {
                expected.entry(label_oracle(&a, &vertices)).or_default().push(a);
            }
            let got: BTreeMap<String, Vec<Map>> = report
                .blocks
                .iter()
                .map(|(label, set)| (label.key(), set.iter().map(|e| e.values().to_vec()).collect()))
                .collect();
            ensure(got == expected, || format!("{s}: blocks differ from the oracle"))?;
            simplices += 1;
        }
    }
    Ok(format!("{simplices} simplices"))
}

fn middle_faces() -> Outcome {
    let mut cases = 0;
    for n in 3..=7u32 {
        let amb = all_maps(n);
        for k in 1..n - 1 {
            let rest: Vec<&Map> = amb.iter().filter(|a| a.contains(&k)).collect();
            let first =
                rest.iter().flat_map(|a| rest.iter().map(move |b| (*a, *b))).find(|(a, b)| !mul(a, b).contains(&k));
            let mut alpha = vec![0; n as usize];
            alpha[n as usize - 1] = k;
            ensure(first == Some((&alpha, &alpha)) && mul(&alpha, &alpha) == vec![0; n as usize], || {
                format!("n={n}, k={k}: first witness {first:?}")
            })?;
            let whole = Simplex::full(n).unwrap();
            let members = whole.enumerate().unwrap();
            let face = whole.face((0..n).filter(|&v| v != k).collect()).unwrap();
            let complement = members.difference(&face.enumerate().unwrap());
            let w = find_violation(Law::Mul, &complement, &members, Execution::default()).ok_or("complement closed")?;
            ensure(w.left.values() == alpha.as_slice() && w.right == w.left && w.result.is_constant(), || {
                format!("n={n}, k={k}: library witness {w}")
            })?;
            cases += 1;
        }
    }
    Ok(format!("{cases} middle faces, witness (0,...,0,k) squared = 0 each time"))
}
