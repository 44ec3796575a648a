//! Exhaustive verification of the structural claims.
//!
//! Each claim is swept over every simplex (every nonempty vertex subset of
//! `C_n`) up to a chain length bound and reports the first counterexample
//! it meets. Reports are deterministic for a fixed suite, bound and seed.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::chain::{Endo, NotationStyle};
use crate::combinatorics::binomial;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::simplex::{EndoSet, Simplex};
use crate::strata::{self, closure_check_in, find_violation, ClosureReport, Law};
use crate::typemap::{self, TypeSignature};

/// Largest chain length accepted by [`run`].
pub const MAX_N: u32 = 7;
/// Chain length bound for claims quantified over triples of endomorphisms.
pub const TRIPLE_MAX_N: u32 = 4;
/// Chain length bound for claims quantified over pairs of endomorphisms.
pub const PAIR_MAX_N: u32 = 5;
/// Chain length bound for the lifting sweep.
pub const LIFT_MAX_N: u32 = 5;
/// Random closed subsets of each coordinate simplex in the lifting sweep.
pub const RANDOM_SUBSETS: usize = 100;
/// Chain length at which two-sidedness of `I` is checked in addition to the bound.
pub const DOUBLY_INTERNAL_N: u32 = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Axioms,
    Simplex,
    Strata,
    Typemap,
    Counts,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["axioms", "simplex", "strata", "typemap", "counts", "all"];

    fn parts(self) -> &'static [Suite] {
        match self {
            Suite::All => &[Suite::Axioms, Suite::Simplex, Suite::Strata, Suite::Typemap, Suite::Counts],
            Suite::Axioms => &[Suite::Axioms],
            Suite::Simplex => &[Suite::Simplex],
            Suite::Strata => &[Suite::Strata],
            Suite::Typemap => &[Suite::Typemap],
            Suite::Counts => &[Suite::Counts],
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "axioms" => Ok(Suite::Axioms),
            "simplex" => Ok(Suite::Simplex),
            "strata" => Ok(Suite::Strata),
            "typemap" => Ok(Suite::Typemap),
            "counts" => Ok(Suite::Counts),
            "all" => Ok(Suite::All),
            other => Err(Error::UnknownSuite(other.to_string())),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = [Suite::Axioms, Suite::Simplex, Suite::Strata, Suite::Typemap, Suite::Counts, Suite::All]
            .iter()
            .position(|s| s == self)
            .unwrap();
        f.write_str(Suite::NAMES[i])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimResult {
    pub id: String,
    pub statement: String,
    pub range: String,
    /// Number of individual instances checked.
    pub checked: u64,
    pub passed: bool,
    pub counterexample: Option<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub max_n: u32,
    pub seed: u64,
    pub entries: Vec<ClaimResult>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn entry(&self, id: &str) -> Option<&ClaimResult> {
        self.entries.iter().find(|e| e.id == id)
    }
}

pub fn run(suite: Suite, max_n: u32, seed: u64) -> Result<VerificationReport> {
    run_with(suite, max_n, seed, Execution::default())
}

pub fn run_with(suite: Suite, max_n: u32, seed: u64, exec: Execution) -> Result<VerificationReport> {
    if max_n == 0 || max_n > MAX_N {
        return Err(Error::ParameterRange { what: "max-n", value: max_n as u64, min: 1, max: MAX_N as u64 });
    }
    let ctx = Ctx { max_n, seed, exec };
    let mut entries = Vec::new();
    for part in suite.parts() {
        match part {
            Suite::Axioms => axioms(&ctx, &mut entries)?,
            Suite::Simplex => simplex_claims(&ctx, &mut entries)?,
            Suite::Strata => strata_claims(&ctx, &mut entries)?,
            Suite::Typemap => typemap_claims(&ctx, &mut entries)?,
            Suite::Counts => counts(&ctx, &mut entries)?,
            Suite::All => unreachable!(),
        }
    }
    let passed = entries.iter().filter(|e| e.passed).count();
    let summary = Summary { total: entries.len(), passed, failed: entries.len() - passed };
    Ok(VerificationReport { suite, max_n, seed, entries, summary })
}

struct Ctx {
    max_n: u32,
    seed: u64,
    exec: Execution,
}

/// Running tally for one claim.
#[derive(Default)]
struct Tally {
    checked: u64,
    failure: Option<String>,
}

impl Tally {
    /// Records one instance; only the first failure is kept.
    fn check(&mut self, ok: bool, context: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(context());
        }
    }
}

fn claim(
    out: &mut Vec<ClaimResult>,
    id: &str,
    statement: &str,
    range: String,
    body: impl FnOnce(&mut Tally) -> Result<()>,
) -> Result<()> {
    let start = Instant::now();
    let mut tally = Tally::default();
    body(&mut tally)?;
    out.push(ClaimResult {
        id: id.to_string(),
        statement: statement.to_string(),
        range,
        checked: tally.checked,
        passed: tally.failure.is_none(),
        counterexample: tally.failure,
        elapsed: start.elapsed(),
    });
    Ok(())
}

/// Every simplex of every chain length in `lo..=hi`.
fn simplices(lo: u32, hi: u32) -> Result<Vec<Simplex>> {
    let mut out = Vec::new();
    for n in lo.max(1)..=hi {
        out.extend(Simplex::all(n)?);
    }
    Ok(out)
}

fn full(n: u32) -> Result<EndoSet> {
    Simplex::full(n)?.enumerate()
}

fn upto(n: u32) -> String {
    format!("n <= {n}")
}

fn report_failure(s: &Simplex, what: &str, report: &ClosureReport, laws: &[Law]) -> String {
    let w = laws.iter().find_map(|&l| report.witness(l));
    match w {
        Some(w) => format!("{s}, {what}: {w}"),
        None => format!("{s}, {what}"),
    }
}

/// `report` holds every law in `laws`.
fn holds(report: &ClosureReport, laws: &[Law]) -> bool {
    laws.iter().all(|&l| report.witness(l).is_none())
}

const SUBSEMIRING: &[Law] = &[Law::Add, Law::Mul];

fn axioms(ctx: &Ctx, out: &mut Vec<ClaimResult>) -> Result<()> {
    let pair_n = ctx.max_n.min(PAIR_MAX_N);
    let triple_n = ctx.max_n.min(TRIPLE_MAX_N);

    claim(out, "axioms.operations-closed", "sum and product of endomorphisms are endomorphisms", upto(pair_n), |t| {
        for n in 1..=pair_n {
            let all = full(n)?;
            for a in &all {
                for b in &all {
                    let sum = Endo::new(n, a.join(b).values().to_vec());
                    let product = Endo::new(n, a.then(b).values().to_vec());
                    t.check(sum.is_ok() && product.is_ok(), || format!("{a:?}, {b:?}"));
                }
            }
        }
        Ok(())
    })?;

    claim(
        out,
        "axioms.semiring",
        "addition is commutative, associative and idempotent; multiplication is associative; both distributive laws hold",
        upto(triple_n),
        |t| {
            for n in 1..=triple_n {
                let all = full(n)?;
                for a in &all {
                    for b in &all {
                        t.check(a.join(b) == b.join(a) && a.join(a) == *a, || format!("{a:?}, {b:?}"));
                        for c in &all {
                            let ok = a.join(b).join(c) == a.join(&b.join(c))
                                && a.then(b).then(c) == a.then(&b.then(c))
                                && a.then(&b.join(c)) == a.then(b).join(&a.then(c))
                                && a.join(b).then(c) == a.then(c).join(&b.then(c));
                            t.check(ok, || format!("{a:?}, {b:?}, {c:?}"));
                        }
                    }
                }
            }
            Ok(())
        },
    )?;

    claim(out, "axioms.composition-order", "(a * b)(x) = b(a(x))", upto(pair_n), |t| {
        let ex = |text: &str| Endo::parse(text, 10);
        let (alpha, beta) = (ex("0_4 2_2 8_4")?, ex("0_3 2_2 3_3 8_2")?);
        for (lhs, rhs) in [
            (alpha.power(2)?, "0_6 8_4"),
            (beta.power(2)?, "0_5 2_3 8_2"),
            (beta.power(3)?, "0_8 8_2"),
            (alpha.compose(&beta)?, "0_6 8_4"),
            (beta.compose(&alpha)?, "0_8 8_2"),
        ] {
            t.check(lhs == ex(rhs)?, || format!("{lhs} should be {rhs}"));
        }
        for n in 1..=pair_n {
            let all = full(n)?;
            for a in &all {
                for b in &all {
                    let product = a.compose(b)?;
                    t.check((0..n).all(|x| product.apply(x) == b.apply(a.apply(x))), || format!("{a:?}, {b:?}"));
                }
            }
        }
        Ok(())
    })?;

    claim(
        out,
        "axioms.power-stabilization",
        "some power a^m with m <= n is idempotent and a^(2m) = a^m",
        upto(pair_n),
        |t| {
            for n in 1..=pair_n {
                for a in &full(n)? {
                    let mut ok = false;
                    for m in 1..=n as usize {
                        let p = a.power(m)?;
                        if p.is_idempotent() && a.power(2 * m)? == p {
                            ok = true;
                            break;
                        }
                    }
                    let (iota, m) = a.eventual_idempotent();
                    ok &= iota.is_idempotent() && a.power(m)? == iota && m <= n as usize;
                    t.check(ok, || format!("{a:?}"));
                }
            }
            Ok(())
        },
    )?;

    claim(
        out,
        "axioms.nilpotency",
        "a power of a is constant exactly when its eventual idempotent is constant",
        upto(pair_n),
        |t| {
            for n in 1..=pair_n {
                for a in &full(n)? {
                    let brute = (1..=n as usize).find_map(|m| a.power(m).ok().and_then(|p| p.constant_value()));
                    let nil = a.nilpotency().map(|z| z.value);
                    t.check(brute == nil && nil == a.eventual_idempotent().0.constant_value(), || format!("{a:?}"));
                }
            }
            Ok(())
        },
    )?;

    claim(out, "axioms.notation-roundtrip", "parsing a formatted endomorphism returns it", upto(pair_n), |t| {
        for n in 1..=pair_n {
            for a in &full(n)? {
                for style in [NotationStyle::Tuple, NotationStyle::RunLength] {
                    let back = Endo::parse(&a.to_notation(style), n);
                    t.check(back.as_ref() == Ok(a), || format!("{a:?} in {style}"));
                }
            }
        }
        Ok(())
    })?;

    claim(out, "axioms.endo-count", "C_n has binom(2n-1, n) endomorphisms", upto(ctx.max_n), |t| {
        for n in 1..=ctx.max_n {
            let count = full(n)?.len() as u128;
            let expected = binomial(2 * n as u64 - 1, n as u64);
            t.check(count == expected, || format!("n={n}: {count} != {expected}"));
        }
        Ok(())
    })
}

fn simplex_claims(ctx: &Ctx, out: &mut Vec<ClaimResult>) -> Result<()> {
    let max_n = ctx.max_n;
    let exec = ctx.exec;
    let all_simplices = simplices(1, max_n)?;

    claim(out, "simplex.cardinality", "a simplex on k vertices has binom(n+k-1, n) members", upto(max_n), |t| {
        for s in &all_simplices {
            let len = s.enumerate()?.len() as u128;
            t.check(len == s.cardinality(), || format!("{s}: {len} != {}", s.cardinality()));
            t.check(s.enumerate()?.members().windows(2).all(|w| w[0] < w[1]), || format!("{s}: order"));
        }
        Ok(())
    })?;

    claim(out, "simplex.subsemiring", "every simplex is a subsemiring", upto(max_n), |t| {
        for n in 1..=max_n {
            let ambient = full(n)?;
            for s in Simplex::all(n)? {
                let report = closure_check_in(&s.enumerate()?, &ambient, exec)?;
                t.check(report.is_subsemiring(), || report_failure(&s, "simplex", &report, SUBSEMIRING));
            }
        }
        Ok(())
    })?;

    claim(
        out,
        "simplex.faces-left-ideal",
        "every face is a subsemiring and a left ideal of its simplex",
        upto(max_n),
        |t| {
            for s in &all_simplices {
                let ambient = s.enumerate()?;
                for face in s.faces(None)? {
                    let report = closure_check_in(&face.enumerate()?, &ambient, exec)?;
                    let laws = [Law::Add, Law::Mul, Law::LeftIdeal];
                    t.check(holds(&report, &laws), || report_failure(s, &format!("face {face}"), &report, &laws));
                }
            }
            Ok(())
        },
    )?;

    claim(
        out,
        "simplex.faces-not-right-ideal",
        "a proper face is not a right ideal: some vertex product escapes it",
        upto(max_n),
        |t| {
            for s in all_simplices.iter().filter(|s| s.dimension() >= 2) {
                let ambient = s.enumerate()?;
                for face in s.proper_faces() {
                    let set = face.enumerate()?;
                    let witness = find_violation(Law::RightIdeal, &set, &ambient, exec);
                    let ok = witness.as_ref().is_some_and(|w| w.reproduces(&set, &ambient));
                    // the vertex witness: a face constant times a missing vertex constant
                    let missing = s.vertices().iter().find(|v| !face.vertices().contains(v)).copied();
                    let vertex_witness = missing.is_some_and(|m| {
                        let b = Endo::from_raw(vec![face.vertices()[0]; s.n() as usize]);
                        let am = Endo::from_raw(vec![m; s.n() as usize]);
                        b.then(&am) == am && !set.contains(&am)
                    });
                    t.check(ok && vertex_witness, || format!("{s}, face {face}: no right-ideal witness"));
                }
            }
            Ok(())
        },
    )?;

    claim(out, "simplex.interior-additive", "the interior is closed under addition", upto(max_n), |t| {
        for s in &all_simplices {
            let report = closure_check_in(&s.interior()?, &s.enumerate()?, exec)?;
            t.check(report.add_closed(), || report_failure(s, "interior", &report, &[Law::Add]));
        }
        Ok(())
    })?;

    claim(out, "simplex.boundary-multiplicative", "the boundary is closed under multiplication", upto(max_n), |t| {
        for s in &all_simplices {
            let report = closure_check_in(&s.boundary()?, &s.enumerate()?, exec)?;
            t.check(report.mul_closed(), || report_failure(s, "boundary", &report, &[Law::Mul]));
        }
        Ok(())
    })?;

    claim(
        out,
        "simplex.extreme-face-complements",
        "removing the biggest (least) face of the full simplex leaves the maps fixing 0 (n-1), a subsemiring",
        format!("2 <= {}", upto(max_n)),
        |t| {
            for n in 2..=max_n {
                let whole = Simplex::full(n)?;
                let ambient = whole.enumerate()?;
                for (face, fixed) in [(whole.biggest_face()?, 0), (whole.least_face()?, n - 1)] {
                    let rest = ambient.difference(&face.enumerate()?);
                    let report = closure_check_in(&rest, &ambient, exec)?;
                    let ok = rest == whole.fixed_subsemiring(fixed)? && report.is_subsemiring();
                    t.check(ok, || report_failure(&whole, &format!("complement of {face}"), &report, SUBSEMIRING));
                }
            }
            Ok(())
        },
    )?;

    claim(
        out,
        "simplex.middle-face-complement",
        "removing a middle face of the full simplex breaks multiplication, witnessed by (0,...,0,k) squared = 0",
        format!("3 <= {}", upto(max_n)),
        |t| middle_faces(3, max_n, exec, t),
    )
}

/// Checks the lexicographically least multiplicative witness for every middle face.
fn middle_faces(lo: u32, hi: u32, exec: Execution, t: &mut Tally) -> Result<()> {
    for n in lo..=hi {
        let whole = Simplex::full(n)?;
        let ambient = whole.enumerate()?;
        for k in 1..n - 1 {
            let face = whole.face((0..n).filter(|&v| v != k).collect())?;
            let rest = ambient.difference(&face.enumerate()?);
            let mut values = vec![0; n as usize];
            values[n as usize - 1] = k;
            let alpha = Endo::from_raw(values);
            let w = find_violation(Law::Mul, &rest, &ambient, exec);
            let ok = w.as_ref().is_some_and(|w| {
                w.left == alpha && w.right == alpha && w.result == Endo::from_raw(vec![0; n as usize])
            });
            t.check(ok, || match &w {
                Some(w) => format!("n={n}, middle vertex {k}: {w}"),
                None => format!("n={n}, middle vertex {k}: complement is closed"),
            });
        }
    }
    Ok(())
}

/// `(a_0, a_{k-1}) = (>= 2, <= n-3)`.
fn doubly_internal(s: &Simplex) -> bool {
    s.n() >= 5 && s.vertices()[0] >= 2 && *s.vertices().last().unwrap() <= s.n() - 3
}

fn strata_claims(ctx: &Ctx, out: &mut Vec<ClaimResult>) -> Result<()> {
    let max_n = ctx.max_n;
    let exec = ctx.exec;
    let all_simplices = simplices(1, max_n)?;
    let mut witnesses: Vec<(EndoSet, EndoSet, ClosureReport)> = Vec::new();

    claim(
        out,
        "strata.layers",
        "the layers of a vertex partition the simplex and each is closed under addition",
        upto(max_n),
        |t| {
            for s in &all_simplices {
                let ambient = s.enumerate()?;
                for m in 0..s.dimension() {
                    let mut seen = 0;
                    for count in 0..=s.n() {
                        let layer = strata::layer(s, m, count)?;
                        seen += layer.len();
                        let report = closure_check_in(&layer, &ambient, exec)?;
                        let what = format!("layer {count} of vertex {}", s.vertices()[m]);
                        t.check(report.add_closed(), || report_failure(s, &what, &report, &[Law::Add]));
                    }
                    t.check(seen == ambient.len(), || format!("{s}: layers of vertex index {m} miss members"));
                }
            }
            Ok(())
        },
    )?;

    let mut dn = Vec::new();
    for s in &all_simplices {
        for m in 0..s.dimension() {
            dn.push((s.clone(), strata::dn_properties_with(s, m, exec)?));
        }
    }

    claim(out, "strata.DN1-subsemiring", "every DN^1_m is a subsemiring", upto(max_n), |t| {
        for (s, p) in &dn {
            let what = format!("DN^1 of vertex {}", p.vertex);
            t.check(p.dn1.is_subsemiring(), || report_failure(s, &what, &p.dn1.closure, SUBSEMIRING));
        }
        Ok(())
    })?;

    claim(
        out,
        "strata.DN2-subsemiring",
        "for internal simplices every DN^2_m is a subsemiring",
        format!("{}, internal", upto(max_n)),
        |t| {
            for (s, p) in dn.iter().filter(|(s, _)| s.is_internal()) {
                let what = format!("DN^2 of vertex {}", p.vertex);
                let ok = p.dn2.as_ref().is_some_and(|r| r.is_subsemiring());
                t.check(ok, || match &p.dn2 {
                    Some(r) => report_failure(s, &what, &r.closure, SUBSEMIRING),
                    None => format!("{s}, {what}: missing"),
                });
            }
            Ok(())
        },
    )?;

    claim(
        out,
        "strata.DN1-commutative-nilpotent",
        "for internal simplices DN^1_m is commutative and all its members are a_m-nilpotent",
        format!("{}, internal", upto(max_n)),
        |t| {
            for (s, p) in dn.iter().filter(|(s, _)| s.is_internal()) {
                t.check(p.dn1.is_commutative() && p.dn1.all_nilpotent(), || {
                    format!(
                        "{s}, DN^1 of vertex {}: noncommuting {:?}, not nilpotent {:?}",
                        p.vertex, p.dn1.noncommuting, p.dn1.not_nilpotent
                    )
                });
                t.check(p.expected_structure_holds(), || format!("{s}, vertex {}", p.vertex));
            }
            Ok(())
        },
    )?;

    let mut unions = Vec::new();
    for s in &all_simplices {
        let ambient = s.enumerate()?;
        let j = strata::union_neighborhoods(s, 1)?;
        let j_report = closure_check_in(&j, &ambient, exec)?;
        let i_report = if s.is_internal() && s.n() >= 2 {
            let i = strata::union_neighborhoods(s, 2)?;
            let r = closure_check_in(&i, &ambient, exec)?;
            witnesses.push((i, ambient.clone(), r.clone()));
            Some(r)
        } else {
            None
        };
        witnesses.push((j, ambient, j_report.clone()));
        unions.push((s.clone(), j_report, i_report));
    }

    claim(out, "strata.J-right-ideal", "J, the union of the DN^1_m, is a right ideal", upto(max_n), |t| {
        for (s, j, _) in &unions {
            t.check(j.right_ideal(), || report_failure(s, "J", j, &[Law::RightIdeal]));
        }
        Ok(())
    })?;

    claim(
        out,
        "strata.I-right-ideal",
        "for internal simplices I, the union of the DN^2_m, is a right ideal",
        format!("{}, internal", upto(max_n)),
        |t| {
            for (s, _, i) in unions.iter().filter(|(s, ..)| s.is_internal()) {
                let ok = i.as_ref().is_some_and(ClosureReport::right_ideal);
                t.check(ok, || match i {
                    Some(i) => report_failure(s, "I", i, &[Law::RightIdeal]),
                    None => format!("{s}: I not computed"),
                });
            }
            Ok(())
        },
    )?;

    claim(
        out,
        "strata.J-ideal",
        "for internal simplices J is a two-sided ideal",
        format!("{}, internal", upto(max_n)),
        |t| {
            for (s, j, _) in unions.iter().filter(|(s, ..)| s.is_internal()) {
                t.check(j.ideal(), || report_failure(s, "J", j, &[Law::LeftIdeal, Law::RightIdeal]));
            }
            Ok(())
        },
    )?;

    let top = max_n.max(DOUBLY_INTERNAL_N);
    claim(
        out,
        "strata.I-ideal",
        "when a_0 >= 2 and a_{k-1} <= n-3, I is a two-sided ideal",
        format!("{}, a_0 >= 2, a_(k-1) <= n-3", upto(top)),
        |t| {
            for s in simplices(5, top)?.iter().filter(|s| doubly_internal(s)) {
                let ambient = s.enumerate()?;
                let i = strata::union_neighborhoods(s, 2)?;
                let report = closure_check_in(&i, &ambient, exec)?;
                t.check(report.ideal(), || report_failure(s, "I", &report, &[Law::LeftIdeal, Law::RightIdeal]));
                witnesses.push((i, ambient, report));
            }
            Ok(())
        },
    )?;

    claim(
        out,
        "strata.fixed-point-neighborhoods",
        "DN^(n-a_0-1) of the least vertex is the set of members fixing a_0; DN^(a_(k-1)) of the top vertex is the set fixing a_(k-1)",
        format!("{}, positive radius", upto(max_n)),
        |t| {
            for s in &all_simplices {
                let (n, k) = (s.n(), s.dimension());
                let (low, high) = (s.vertices()[0], s.vertices()[k - 1]);
                if n - low > 1 {
                    let dn = strata::neighborhood(s, 0, n - low - 1)?;
                    t.check(dn == s.fixed_subsemiring(low)?, || format!("{s}: least vertex"));
                }
                if high >= 1 {
                    let dn = strata::neighborhood(s, k - 1, high)?;
                    t.check(dn == s.fixed_subsemiring(high)?, || format!("{s}: top vertex"));
                }
            }
            Ok(())
        },
    )?;

    claim(
        out,
        "strata.witness-soundness",
        "every reported counterexample re-evaluates to a genuine violation",
        upto(max_n),
        |t| {
            for (candidate, ambient, report) in &witnesses {
                for w in report.witnesses() {
                    t.check(w.reproduces(candidate, ambient), || format!("{w}"));
                }
            }
            for s in &all_simplices {
                let ambient = s.enumerate()?;
                for m in 0..s.dimension() {
                    for radius in 1..=s.n().min(2) {
                        let set = strata::neighborhood(s, m, radius)?;
                        let report = closure_check_in(&set, &ambient, exec)?;
                        for w in report.witnesses() {
                            t.check(w.reproduces(&set, &ambient), || format!("{s}: {w}"));
                        }
                    }
                }
            }
            Ok(())
        },
    )
}

fn typemap_claims(ctx: &Ctx, out: &mut Vec<ClaimResult>) -> Result<()> {
    let max_n = ctx.max_n;
    let exec = ctx.exec;
    let all_simplices = simplices(1, max_n)?;

    claim(
        out,
        "typemap.example",
        "in sigma^(10){0,2,3,5,8} the example maps have the stated types, share the block IC[0,0,0,0,4], and that idempotent has 5 elements with its roots",
        "n = 10".to_string(),
        |t| {
            let ex = Simplex::new(10, vec![0, 2, 3, 5, 8])?;
            let alpha = Endo::parse("0_4 2_2 8_4", 10)?;
            let beta = Endo::parse("0_3 2_2 3_3 8_2", 10)?;
            let sig = |v: &[u32]| TypeSignature::new(v.to_vec());
            t.check(typemap::type_of(&ex, &alpha)? == sig(&[0, 0, 0, 1, 4])?, || "type of alpha".into());
            t.check(typemap::type_of(&ex, &beta)? == sig(&[0, 0, 1, 2, 4])?, || "type of beta".into());
            let iota = sig(&[0, 0, 0, 0, 4])?;
            let target = typemap::BlockLabel::IdempotentClosure(iota.clone());
            for e in [&alpha, &beta] {
                t.check(typemap::classify(&ex, e)? == target, || format!("block of {e}"));
            }
            let roots = root_semiring(&iota)?;
            t.check(roots.len() == 5, || format!("{} elements in the root semiring", roots.len()));
            Ok(())
        },
    )?;

    claim(
        out,
        "typemap.homomorphism",
        "type(a + b) = type(a) + type(b) and type(a * b) = type(a) * type(b)",
        upto(max_n.min(6)),
        |t| {
            for s in simplices(1, max_n.min(6))? {
                let members = s.enumerate()?;
                let types: Vec<Endo> = members.iter().map(|e| typemap::type_unchecked(&s, e).into_endo()).collect();
                let m = members.members();
                let bad = exec.find_first_pair(m.len(), m.len(), |i, j| {
                    typemap::type_unchecked(&s, &m[i].join(&m[j])).as_endo() != &types[i].join(&types[j])
                        || typemap::type_unchecked(&s, &m[i].then(&m[j])).as_endo() != &types[i].then(&types[j])
                });
                t.check(bad.is_none(), || {
                    let (i, j) = bad.unwrap();
                    format!("{s}: {} and {}", m[i], m[j])
                });
            }
            Ok(())
        },
    )?;

    let lift_n = max_n.min(LIFT_MAX_N);
    claim(
        out,
        "typemap.lift",
        "lifting a face, a DN^1 union or a random closed subset of the coordinate simplex preserves each closure and ideal verdict",
        format!("{}, all faces, DN^1 unions, {RANDOM_SUBSETS} seeded random closed subsets", upto(lift_n)),
        |t| {
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
            for s in simplices(1, lift_n)? {
                let ambient = s.enumerate()?;
                let coordinate = typemap::coordinate_simplex(&s);
                let coord_all = coordinate.enumerate()?;
                let mut candidates: Vec<(String, EndoSet)> = Vec::new();
                for face in coordinate.faces(None)? {
                    candidates.push((format!("face {face}"), face.enumerate()?));
                }
                for radius in 1..=coordinate.n().min(2) {
                    candidates.push((format!("DN^{radius} union"), strata::union_neighborhoods(&coordinate, radius)?));
                }
                for i in 0..RANDOM_SUBSETS {
                    candidates.push((format!("random subset {i}"), random_closed(&coord_all, &mut rng)));
                }
                for (what, r) in &candidates {
                    let base = closure_check_in(r, &coord_all, exec)?;
                    let lifted = typemap::lift_set(&s, r)?;
                    let top = closure_check_in(&lifted, &ambient, exec)?;
                    let verdicts = |c: &ClosureReport| [c.add_closed(), c.mul_closed(), c.left_ideal(), c.right_ideal()];
                    t.check(verdicts(&base) == verdicts(&top), || {
                        format!("{s}, lift of {what}: {:?} vs {:?}", verdicts(&base), verdicts(&top))
                    });
                }
            }
            Ok(())
        },
    )?;

    claim(
        out,
        "typemap.constant-type-ideal",
        "the members of constant type form a two-sided ideal; those of one constant type form a left ideal",
        upto(max_n.min(6)),
        |t| {
            let all_laws = [Law::Add, Law::Mul, Law::LeftIdeal, Law::RightIdeal];
            let left_laws = [Law::Add, Law::Mul, Law::LeftIdeal];
            for s in simplices(1, max_n.min(6))? {
                let ambient = s.enumerate()?;
                let k = s.dimension();
                let constants: Vec<TypeSignature> =
                    (0..k).map(|l| TypeSignature::from_endo(Endo::from_raw(vec![l as u32; k]))).collect();
                let set = typemap::lift(&s, &constants)?;
                let report = closure_check_in(&set, &ambient, exec)?;
                t.check(holds(&report, &all_laws), || report_failure(&s, "constant types", &report, &all_laws));
                for (l, sig) in constants.into_iter().enumerate() {
                    let set = typemap::lift(&s, &[sig])?;
                    let report = closure_check_in(&set, &ambient, exec)?;
                    let what = format!("type of constant {l}");
                    t.check(holds(&report, &left_laws), || report_failure(&s, &what, &report, &left_laws));
                }
            }
            Ok(())
        },
    )?;

    claim(
        out,
        "typemap.lifted-J-right-ideal",
        "the lift of the DN^1 union of the coordinate simplex is a right ideal",
        upto(max_n.min(6)),
        |t| {
            for s in simplices(1, max_n.min(6))? {
                let coordinate = typemap::coordinate_simplex(&s);
                let set = typemap::lift_set(&s, &strata::union_neighborhoods(&coordinate, 1)?)?;
                let report = closure_check_in(&set, &s.enumerate()?, exec)?;
                t.check(report.right_ideal(), || report_failure(&s, "lifted J", &report, &[Law::RightIdeal]));
            }
            Ok(())
        },
    )?;

    claim(
        out,
        "typemap.partition",
        "partition blocks are disjoint, cover the simplex and meet their closure contracts",
        upto(max_n.min(6)),
        |t| {
            for s in simplices(1, max_n.min(6))? {
                let report = typemap::partition_with(&s, exec)?;
                t.check(report.checks_pass(), || match report.first_failure() {
                    Some((label, check)) => format!("{s}, block {label}: {:?}", check.closure),
                    None => format!("{s}: disjoint={}, covers={}", report.disjoint, report.covers),
                });
            }
            Ok(())
        },
    )?;

    claim(
        out,
        "typemap.no-roots-of-identity",
        "no endomorphism other than the identity has a power equal to the identity",
        upto(max_n),
        |t| {
            for n in 1..=max_n {
                for phi in &full(n)? {
                    let root = !phi.is_identity() && phi.eventual_idempotent().0.is_identity();
                    t.check(!root, || format!("{phi:?}"));
                }
            }
            Ok(())
        },
    )?;

    claim(
        out,
        "typemap.RI-set",
        "the right identities are exactly the interior idempotents, and there is at least one",
        upto(max_n),
        |t| {
            for s in &all_simplices {
                let members = s.enumerate()?;
                let brute = members.filter(|e| typemap::is_right_identity(e, &members));
                let interior_idempotents = s.interior()?.filter(Endo::is_idempotent);
                let ok = !brute.is_empty() && brute == interior_idempotents && brute == typemap::right_identities(s)?;
                t.check(ok, || format!("{s}: {} right identities by direct check", brute.len()));
            }
            Ok(())
        },
    )?;

    claim(out, "typemap.RI-order", "a simplex has prod (a_(i+1) - a_i) right identities", upto(max_n), |t| {
        for s in &all_simplices {
            let len = typemap::right_identities(s)?.len() as u128;
            let expected = typemap::right_identity_count(s);
            t.check(len == expected, || format!("{s}: {len} != {expected}"));
        }
        Ok(())
    })?;

    claim(
        out,
        "typemap.no-left-identity",
        "a simplex with k >= 2 other than the full one has no left identity",
        format!("{}, 2 <= k < n", upto(max_n)),
        |t| {
            for s in all_simplices.iter().filter(|s| s.dimension() >= 2 && !s.is_full()) {
                let members = s.enumerate()?;
                let witness = typemap::left_identity(s)?;
                let none = !members.iter().any(|e| typemap::is_left_identity(e, &members));
                t.check(none && witness.holds_in(&members), || format!("{s}: {witness}"));
            }
            Ok(())
        },
    )?;

    claim(
        out,
        "typemap.full-simplex-identity",
        "in the full simplex with n >= 2 the identity is a two-sided identity",
        format!("2 <= {}", upto(max_n)),
        |t| {
            for n in 2..=max_n {
                let members = full(n)?;
                let id = Endo::identity(n)?;
                let ok = typemap::is_left_identity(&id, &members)
                    && typemap::is_right_identity(&id, &members)
                    && typemap::left_identity(&Simplex::full(n)?).is_err();
                t.check(ok, || format!("n={n}"));
            }
            Ok(())
        },
    )
}

fn counts(ctx: &Ctx, out: &mut Vec<ClaimResult>) -> Result<()> {
    let max_n = ctx.max_n;

    claim(
        out,
        "counts.nilpotent",
        "C_n has C_a * C_(n-a-1) endomorphisms with a power equal to the constant a",
        format!("2 <= {}", upto(max_n)),
        |t| {
            for n in 2..=max_n {
                let all = full(n)?;
                let mut seen = vec![0u128; n as usize];
                for e in &all {
                    if let Some(z) = e.nilpotency() {
                        seen[z.value as usize] += 1;
                    }
                }
                for a in 0..n {
                    let expected = typemap::nilpotent_count(n, a)?;
                    t.check(seen[a as usize] == expected, || {
                        format!("n={n}, a={a}: {} != {expected}", seen[a as usize])
                    });
                }
            }
            Ok(())
        },
    )?;

    claim(
        out,
        "counts.idempotent",
        "C_n has prod (k_(m+1) - k_m) idempotents with fixed points exactly k_1 < ... < k_s",
        format!("3 <= {}, 1 <= s <= n-1", upto(max_n)),
        |t| {
            for n in 3..=max_n {
                let all = full(n)?;
                let mut census = std::collections::BTreeMap::<Vec<u32>, u128>::new();
                for e in all.iter().filter(|e| e.is_idempotent()) {
                    *census.entry(e.fixed_points()).or_default() += 1;
                }
                for mask in 1u32..(1 << n) - 1 {
                    let fixed: Vec<u32> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
                    let seen = census.get(&fixed).copied().unwrap_or(0);
                    let expected = typemap::idempotent_count(n, &fixed)?;
                    t.check(seen == expected, || format!("n={n}, fixed {fixed:?}: {seen} != {expected}"));
                }
            }
            Ok(())
        },
    )?;

    claim(
        out,
        "counts.right-identity",
        "the right identities of a simplex number prod (a_(i+1) - a_i), matching the idempotents with those fixed points",
        upto(max_n),
        |t| {
            for s in simplices(1, max_n)? {
                let members = s.enumerate()?;
                let brute = members.iter().filter(|e| typemap::is_right_identity(e, &members)).count() as u128;
                t.check(brute == typemap::right_identity_count(&s), || format!("{s}: {brute}"));
                if s.n() >= 3 && !s.is_full() {
                    t.check(typemap::idempotent_count(s.n(), s.vertices())? == brute, || format!("{s}: idempotents"));
                }
            }
            Ok(())
        },
    )?;

    claim(out, "counts.catalan", "C_i = binom(2i, i) / (i + 1) starts 1, 1, 2, 5, 14, 42", "i <= 5".into(), |t| {
        for (i, c) in [1u128, 1, 2, 5, 14, 42].into_iter().enumerate() {
            t.check(typemap::catalan(i as u64) == c, || format!("C_{i}"));
        }
        Ok(())
    })
}

/// `iota` together with its roots, as a subset of the coordinate simplex.
pub fn root_semiring(iota: &TypeSignature) -> Result<EndoSet> {
    let k = iota.k() as u32;
    Ok(full(k)?.filter(|phi| phi.eventual_idempotent().0 == *iota.as_endo()))
}

/// Subsemiring, left ideal or right ideal generated by one to three random
/// members of `ambient`.
fn random_closed(ambient: &EndoSet, rng: &mut ChaCha8Rng) -> EndoSet {
    let m = ambient.members();
    let generators = rng.gen_range(1..=3);
    let mut set: BTreeSet<Endo> = (0..generators).map(|_| m[rng.gen_range(0..m.len())].clone()).collect();
    let kind = rng.gen_range(0..3);
    loop {
        let current: Vec<Endo> = set.iter().cloned().collect();
        let mut fresh = Vec::new();
        for a in &current {
            for b in &current {
                fresh.push(a.join(b));
                fresh.push(a.then(b));
            }
            for phi in m {
                match kind {
                    1 => fresh.push(phi.then(a)),
                    2 => fresh.push(a.then(phi)),
                    _ => {}
                }
            }
        }
        let before = set.len();
        set.extend(fresh);
        if set.len() == before {
            break;
        }
    }
    EndoSet::from_sorted(ambient.simplex().clone(), set.into_iter().collect())
}
