//! End-to-end acceptance checks, one line per criterion.
//!
//! Run with `cargo test -p hitbox --test acceptance -- --nocapture` to see
//! the report. Expected values come from the worked examples; every
//! classification is compared with an oracle computed here, not with the
//! harness's own bookkeeping.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use hitbox::fixture;
use hitbox_core::arith::{int, rat, rationals_up_to_height};
use hitbox_core::curves::{
    ec_add, ec_torsion_lutz_nagell, pullback_fiber, transform_scaled_model, verify_case_identities,
    verify_parametrization, CurvePoint, EllipticCurve, PlaneCurve, RationalMap, UniRatFn,
};
use hitbox_core::factor::{factor_over_q, factorization_type, rational_roots};
use hitbox_core::galois::{Match, TransitiveTables};
use hitbox_core::hit::{compute_exclusion_set, GroupRef, Harness};
use hitbox_core::local::{conic_solvable_local, hilbert_symbol, Place};
use hitbox_core::perm::Partition;
use hitbox_core::poly::parse::{parse_bipoly, parse_ratfn};
use hitbox_core::{BiPoly, Rational, UniPoly};
use num_traits::Zero;
use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

const A4_P: &str = "3*X^4 - 4*X^3 + 1 + 3*T^2";
const A4_S: [&str; 2] = [
    "X^4 + 4*X^3 + 81*T^2 + 27",
    "X^3 + 48*X^2 + (336 - 1296*T^2)*X - 10368*T^2 + 640",
];
const X6_P: &str = "X^6 + T^6 - 1";
const X6_S: [&str; 4] = [
    "X^2 - 62208*(T^6 - 1)^3",
    "X^2 + 1728*(T^6 - 1)^2",
    "X^2 + 12*X + 27 + 9*T^6",
    "X^3 + 12*X^2 + 48*X + 72 - 8*T^6",
];

enum Outcome {
    Pass(String),
    Fail(String),
    Declared(String),
}

type Criterion = (u8, &'static str, fn() -> Outcome);

fn bp(s: &str) -> BiPoly {
    parse_bipoly(s).unwrap()
}

fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

/// `count` values drawn from `s` with a fixed seed.
fn draw<S: Strategy>(s: S, count: usize) -> Vec<S::Value> {
    let mut r = runner(1);
    (0..count).map(|_| s.new_tree(&mut r).unwrap().current()).collect()
}

fn check(ok: bool, detail: String) -> Outcome {
    if ok {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail)
    }
}

fn fmt_set(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(|q| q.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

fn criterion_1() -> Outcome {
    let mut details = Vec::new();
    let mut ok = true;
    for (p, s, want) in [
        (A4_P, &A4_S[..], vec![int(0)]),
        (X6_P, &X6_S[..], vec![int(-1), int(1)]),
    ] {
        let s: Vec<BiPoly> = s.iter().map(|f| bp(f)).collect();
        let start = Instant::now();
        let d = compute_exclusion_set(&bp(p), &s).unwrap();
        let took = start.elapsed();
        ok &= d == want && took < Duration::from_secs(10);
        details.push(format!("{} in {:.1?}", fmt_set(&d), took));
    }
    check(ok, details.join(", "))
}

fn criterion_2() -> Outcome {
    let p = bp(X6_P);
    let mut reducible = Vec::new();
    let ts = rationals_up_to_height(60);
    for t in &ts {
        let ft = factorization_type(&p.specialize(t)).unwrap();
        if ft != Partition::new(vec![6]) {
            reducible.push(t.clone());
        }
    }
    check(
        reducible == [int(-1), int(0), int(1)],
        format!("{} values of height <= 60, reducible at {}", ts.len(), fmt_set(&reducible)),
    )
}

/// `t` is a first coordinate of the parametrization iff
/// `v^3 + 9 t v^2 - 9 v - 9 t` has a rational root (`v = +-1` never is one).
fn in_psi_image(t: &Rational) -> bool {
    let nine = int(9);
    let cubic = UniPoly::new(vec![-&nine * t, -nine.clone(), &nine * t, int(1)]);
    !rational_roots(&cubic).unwrap().is_empty()
}

fn a4_harness() -> Harness {
    let tables = TransitiveTables::load().unwrap();
    let f = fixture::load("serre-a4", &tables).unwrap();
    let reference = GroupRef {
        order: 12,
        label: Some("4T4".into()),
        derived: false,
    };
    Harness::new(f.data, reference, Partition::new(vec![4]), tables)
}

fn criterion_3() -> Outcome {
    let h = a4_harness();
    let s: Vec<BiPoly> = A4_S.iter().map(|f| bp(f)).collect();
    let (mut image, mut generic, mut bad) = (0, 0, Vec::new());
    for t in rationals_up_to_height(30) {
        if t.is_zero() {
            continue;
        }
        let r = h.record(&t).unwrap();
        let id = r.galois.as_ref().unwrap();
        if in_psi_image(&t) {
            image += 1;
            if !(id.is_definitive() && id.label() != Some("4T4") && r.reference_match == Some(Match::No)) {
                bad.push(t);
            }
        } else if s.iter().all(|f| rational_roots(&f.specialize(&t)).unwrap().is_empty()) {
            generic += 1;
            if !(id.is_definitive() && id.label() == Some("4T4") && r.reference_match == Some(Match::Yes)) {
                bad.push(t);
            }
        } else {
            bad.push(t);
        }
    }
    check(
        bad.is_empty() && image > 0,
        format!("{image} parametrized values not A4, {generic} root-free values A4, {} mismatches", bad.len()),
    )
}

fn run_cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hitbox")).args(args).output().unwrap();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

fn criterion_4() -> Outcome {
    let mut ok = true;
    let mut details = Vec::new();
    for (name, must_be_determinate) in [("examples/serre-a4", true), ("examples/fermat-x6", false)] {
        let (code, out) = run_cli(&["hit", "verify", "--fixture", name, "--height", "30", "--format", "json"]);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let s = &v["summary"];
        let determinacy = s["determinacy"].as_f64().unwrap();
        ok &= code == 0 && s["violations"] == 0;
        if must_be_determinate {
            ok &= determinacy == 1.0 && s["indeterminate"] == 0;
        }
        details.push(format!(
            "{name}: exit {code}, {} records, {} indeterminate, determinacy {:.2}%",
            s["records"],
            s["indeterminate"],
            100.0 * determinacy
        ));
    }
    check(ok, details.join("; "))
}

fn criterion_5() -> Outcome {
    let two = Place::prime(2).unwrap();
    let unsolvable = !conic_solvable_local(&int(-1), &int(2), &int(-3), two).unwrap();
    let f1 = bp(A4_S[0]);
    let ts = draw(
        (-1000i64..=1000, 1i64..=1000)
            .prop_filter("nonzero", |(a, _)| *a != 0)
            .prop_map(|(a, b)| rat(a, b)),
        200,
    );
    let with_root: Vec<Rational> = ts
        .iter()
        .filter(|t| !rational_roots(&f1.specialize(t)).unwrap().is_empty())
        .cloned()
        .collect();
    check(
        unsolvable && with_root.is_empty(),
        format!(
            "conic (-1, 2, -3) at 2: {}; F1 roots at {} of {} sampled t",
            if unsolvable { "not solvable" } else { "solvable" },
            with_root.len(),
            ts.len()
        ),
    )
}

fn criterion_6() -> Outcome {
    let curve = PlaneCurve::new(bp(A4_S[1])).unwrap();
    let t = UniRatFn::new(UniPoly::from_ints(&[0, -9, 0, 1]), UniPoly::from_ints(&[9, 0, -9])).unwrap();
    let x = UniRatFn::new(UniPoly::from_ints(&[-40, 0, 8]), UniPoly::from_ints(&[1, 0, -1])).unwrap();
    let psi = RationalMap::new(vec![t, x]).unwrap();
    let phi = parse_ratfn("(X^2 - 1296*T^2 + 44*X + 160)/(144*T)", "T", "X").unwrap();
    let holds = verify_parametrization(&curve, &psi, &phi);

    // the bundled fixture must carry the same maps
    let tables = TransitiveTables::load().unwrap();
    let fx = fixture::load("serre-a4", &tables).unwrap().parametrization.unwrap();
    let fixture_holds = verify_parametrization(&curve, &fx.psi, &fx.phi)
        && (-20..=20).filter(|v| v * v != 1).all(|v| {
            let v = int(v);
            hitbox_core::curves::eval_map(&psi, &v) == hitbox_core::curves::eval_map(&fx.psi, &v)
        });

    let mut fibre = BTreeSet::new();
    for value in [int(1), int(-1)] {
        fibre.extend(pullback_fiber(&phi, &value, &curve, 200).unwrap());
    }
    let want: BTreeSet<CurvePoint> = [
        CurvePoint::affine(int(0), int(-40)),
        CurvePoint::affine(int(0), int(-4)),
    ]
    .into_iter()
    .collect();
    let shown: Vec<String> = fibre.iter().map(|p| p.to_string()).collect();
    check(
        holds && fixture_holds && fibre == want,
        format!(
            "parametrization {}, fixture maps {}, pullback of +-1 at height 200 = {{{}}}",
            if holds { "verified" } else { "FAILED" },
            if fixture_holds { "agree" } else { "DIFFER" },
            shown.join(", ")
        ),
    )
}

fn criterion_7() -> Outcome {
    let e = EllipticCurve::short(int(0), int(1)).unwrap();
    let torsion: BTreeSet<CurvePoint> = ec_torsion_lutz_nagell(&e).unwrap().into_iter().collect();

    // y^2 = 2 (x^3 + 12 x^2 + 48 x + 72) has rank 0; every affine point
    // has small height, found by this search
    let cubic = UniPoly::from_ints(&[72, 48, 12, 1]);
    let (target, tr) = transform_scaled_model(&int(2), &cubic).unwrap();
    let mut source = vec![CurvePoint::Infinity];
    for xn in -300i64..=300 {
        for xd in 1i64..=6 {
            let x = rat(xn, xd);
            let rhs = int(2) * cubic.eval(&x);
            if let Some(y) = hitbox_core::arith::rational_sqrt(&rhs) {
                source.push(CurvePoint::affine(x.clone(), y.clone()));
                if !y.is_zero() {
                    source.push(CurvePoint::affine(x, -y));
                }
            }
        }
    }
    source.sort();
    source.dedup();
    let images: BTreeSet<CurvePoint> = source.iter().map(|p| tr.forward(p)).collect();
    let round_trip = source.iter().all(|p| tr.source_contains(p) && tr.backward(&tr.forward(p)) == *p);
    let ok = torsion.len() == 6
        && target == e
        && images.len() == source.len()
        && images == torsion
        && round_trip;
    check(
        ok,
        format!(
            "torsion of y^2 = x^3 + 1 has order {}; {} source points map onto it {}",
            torsion.len(),
            source.len(),
            if images == torsion && images.len() == source.len() { "bijectively" } else { "NOT bijectively" }
        ),
    )
}

fn criterion_8() -> Outcome {
    let r = verify_case_identities();
    let cases: Vec<String> = r.iter().map(|(c, ok)| format!("{c}:{}", if *ok { "ok" } else { "FAIL" })).collect();
    check(r.len() == 4 && r.iter().all(|(_, ok)| *ok), format!("cases {}", cases.join(" ")))
}

fn int_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = UniPoly> {
    proptest::collection::vec(-bound..=bound, 1..=max_deg + 1)
        .prop_map(|c| UniPoly::from_ints(&c))
        .prop_filter("positive degree", |f| f.degree().unwrap_or(0) >= 1)
}

fn criterion_9() -> Outcome {
    let mut parts = Vec::new();
    let mut ok = true;

    let reconstruct = runner(200).run(
        &proptest::prop_oneof![
            int_poly(8, 20),
            (int_poly(4, 6), int_poly(4, 6)).prop_map(|(a, b)| &a * &b),
        ],
        |f| {
            proptest::prop_assert_eq!(factor_over_q(&f).unwrap().expand(), f);
            Ok(())
        },
    );
    ok &= reconstruct.is_ok();
    parts.push(format!("reconstruction x200 {}", if reconstruct.is_ok() { "ok" } else { "FAIL" }));

    let nonzero = || {
        (-500i64..=500, 1i64..=50)
            .prop_filter("nonzero", |(a, _)| *a != 0)
            .prop_map(|(a, b)| rat(a, b))
    };
    let product = runner(100).run(&(nonzero(), nonzero()), |(a, b)| {
        let mut primes: Vec<u64> = vec![2];
        for q in [&a, &b] {
            for n in [q.numer(), q.denom()] {
                primes.extend(hitbox_core::arith::prime_divisors(n).unwrap());
            }
        }
        primes.sort_unstable();
        primes.dedup();
        let mut prod = hilbert_symbol(&a, &b, Place::Real).unwrap();
        for p in primes {
            prod *= hilbert_symbol(&a, &b, Place::prime(p).unwrap()).unwrap();
        }
        proptest::prop_assert_eq!(prod, 1);
        Ok(())
    });
    ok &= product.is_ok();
    parts.push(format!("product formula x100 {}", if product.is_ok() { "ok" } else { "FAIL" }));

    let disc = runner(50).run(&(int_poly(4, 9), int_poly(4, 9)), |(f, g)| {
        let r = f.resultant(&g).unwrap();
        let lhs = (&f * &g).discriminant().unwrap();
        proptest::prop_assert_eq!(lhs, f.discriminant().unwrap() * g.discriminant().unwrap() * &r * &r);
        Ok(())
    });
    ok &= disc.is_ok();
    parts.push(format!("disc multiplicativity x50 {}", if disc.is_ok() { "ok" } else { "FAIL" }));

    let tables = TransitiveTables::load().unwrap();
    let indices = tables.by_label("4T4").unwrap().group.maximal_indices().unwrap();
    let mut degrees: Vec<usize> = A4_S.iter().map(|f| bp(f).x_degree().unwrap()).collect();
    degrees.sort_unstable();
    let max_ok = indices == [3, 4] && degrees == indices;
    ok &= max_ok;
    parts.push(format!("A4 maximal indices {indices:?} vs degrees {degrees:?}"));

    let e = EllipticCurve::short(int(0), int(1)).unwrap();
    let t = ec_torsion_lutz_nagell(&e).unwrap();
    let mut assoc = true;
    for p in &t {
        for q in &t {
            for r in &t {
                let l = ec_add(&e, &ec_add(&e, p, q).unwrap(), r).unwrap();
                let rr = ec_add(&e, p, &ec_add(&e, q, r).unwrap()).unwrap();
                assoc &= l == rr;
            }
        }
    }
    ok &= assoc;
    parts.push(format!("associativity on {} torsion points {}", t.len(), if assoc { "ok" } else { "FAIL" }));

    check(ok, parts.join(", "))
}

fn criterion_10() -> Outcome {
    Outcome::Declared(
        "rank-0 proofs, Chabauty bounds and generic Galois group / maximal subgroup / fixed field \
         computation over Q(T) are out of scope; fixtures supply S and the reference group"
            .into(),
    )
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        (1, "exclusion sets", criterion_1),
        (2, "sextic fibre reducibility", criterion_2),
        (3, "A4 classification against the parametrization", criterion_3),
        (4, "hit verify on both fixtures", criterion_4),
        (5, "local obstruction and root-free quartic fibres", criterion_5),
        (6, "parametrization and pullback", criterion_6),
        (7, "torsion and scaled model", criterion_7),
        (8, "case identities", criterion_8),
        (9, "property suites", criterion_9),
        (10, "out of scope at desk scale", criterion_10),
    ];
    let mut failed = Vec::new();
    for (n, name, f) in criteria {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        let (tag, detail) = match &outcome {
            Outcome::Pass(d) => ("PASS", d),
            Outcome::Fail(d) => {
                failed.push(n);
                ("FAIL", d)
            }
            Outcome::Declared(d) => ("DECLARED", d),
        };
        println!("criterion {n:>2} [{tag}] {name}: {detail} ({took:.1?})");
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
