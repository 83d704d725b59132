//! The eight acceptance criteria, each reported on one PASS/FAIL line.
//!
//! Runs without the libtest harness; exits non-zero if any criterion fails.

use std::process::ExitCode;

use a3b_tiling::existence::{alpha_roots, nonexistence_margin, quartic_case, sporadic_rows};
use a3b_tiling::family::{emt_quad, FamilyParams, FlipCase};
use a3b_tiling::generator::{
    apply_flips, build_emt, count_flip_tilings, enumerate_flip_tilings, flip_quad, q1, q_table, sporadic, SporadicId,
};
use a3b_tiling::geometry::{emt_coordinates, realize, realize_by_propagation, default_seed};
use a3b_tiling::tiling::{validate, vertex_census, Corner, Corruption, Tiling, VertexVector};
use a3b_tiling::trig::{check_quad, Quadrilateral};
use a3b_tiling::vertex::{coplanarity_check, enumerate_vertex_types, solve_multiplicities, AngleAssignment};
use a3b_tiling::Error;
use rand::{rngs::StdRng, Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok { Ok(()) } else { Err(msg()) }
}

/// Printed `(alpha, a, b)` to four decimals, in row order.
const PRINTED: [(f64, f64, f64); 5] = [
    (0.7902, 0.3367, 0.2495),
    (0.7898, 0.3362, 0.1052),
    (0.5664, 0.3292, 0.1158),
    (0.5906, 0.25, 0.3488),
    (0.4322, 0.2011, 0.2988),
];

fn table_1() -> Outcome {
    let mut misses = Vec::new();
    let mut truncated = true;
    for (row, &(pal, pa, pb)) in sporadic_rows().iter().zip(&PRINTED) {
        let roots = alpha_roots(&row.family, 1e-13).map_err(|e| format!("{}: {e}", row.name))?;
        let best = roots
            .iter()
            .map(|r| (r.alpha - row.alpha).abs())
            .fold(f64::INFINITY, f64::min);
        ensure(best < 1e-10, || format!("{}: nearest alpha root off by {best:e}", row.name))?;
        for (got, printed) in [(row.alpha, pal), (row.a, pa), (row.b, pb)] {
            truncated &= printed <= got + 1e-15 && got < printed + 1e-4;
        }
        for (what, got, printed) in [("a", row.a, pa), ("b", row.b, pb)] {
            if (got - printed).abs() >= 5e-5 {
                misses.push(format!("{} {what}={got:.6} vs {printed}", row.name));
            }
        }
    }
    ensure(row_exact_values(), || "exact a or b relations broken".into())?;
    if misses.is_empty() {
        Ok("alpha to 1e-10, (a, b) within 5e-5 on all five rows".into())
    } else {
        let note = if truncated {
            "every printed decimal is a truncation of the closed form"
        } else {
            "printed decimals are not truncations either"
        };
        Err(format!("alpha to 1e-10 on all rows, but {} ({note})", misses.join("; ")))
    }
}

fn row_exact_values() -> bool {
    let rows = sporadic_rows();
    (rows[3].a - 0.25).abs() < 1e-15 && (rows[4].a + rows[4].b - 0.5).abs() < 1e-15
}

fn table_2() -> Outcome {
    let mut n = 0;
    for f in [6u32, 8, 10, 16, 50] {
        let (lo, hi) = FamilyParams::beta_interval(f);
        let mut j = 0;
        let mut taken = 0;
        while taken < 25 {
            j += 1;
            ensure(j < 200, || format!("f={f}: too few usable beta samples"))?;
            let beta = lo + (hi - lo) * j as f64 / 200.0;
            let q = match emt_quad(f, beta) {
                Ok(q) => q,
                Err(Error::RhombusReduction { .. } | Error::DegenerateBeta { .. }) => continue,
                Err(e) => return Err(format!("f={f} beta={beta}: {e}")),
            };
            taken += 1;
            let r = check_quad(&q, 1e-9);
            ensure(r.angle_sum.abs() < 1e-12, || format!("f={f} beta={beta}: angle sum {:e}", r.angle_sum))?;
            ensure(r.min_coolsaet() < 1e-9 && r.max_trig() < 1e-9, || {
                format!("f={f} beta={beta}: trig residual {:e}", r.max_trig())
            })?;
            if f >= 8 {
                let (a, b) = (q.edges.a, q.edges.b);
                ensure((1.0 / 3.0 - 1e-12..0.5).contains(&a) && b < 0.5 + 4.0 / f as f64, || {
                    format!("f={f} beta={beta}: a={a} b={b} out of range")
                })?;
            }
            n += 1;
        }
    }
    let q = emt_quad(10_000, 1.0).map_err(|e| e.to_string())?;
    let gap = (q.edges.b - q.edges.a).abs();
    ensure(gap < 1e-3, || format!("f=10000: |b - a| = {gap:e}"))?;
    Ok(format!("{n} samples; |b - a| = {gap:.2e} at f = 10000"))
}

fn counting() -> Outcome {
    // Column formulas of the counting table: (f, Q1, Q2).
    let mut columns: Vec<(u32, u32, u32)> = vec![(8, 1, 0), (18, 3, 1)];
    for k in 1..=8u32 {
        let c = |f: u32, q1: u32, q2: u32| (f, q1, q2);
        if k >= 2 {
            columns.push(c(24 * k - 16, 6 * k - 5, 2));
            columns.push(c(24 * k - 6, 6 * k - 3, 0));
        }
        columns.extend([
            c(24 * k - 14, 6 * k - 5, 1),
            c(24 * k - 12, 6 * k - 3, 1),
            c(24 * k - 10, 6 * k - 3, 1),
            c(24 * k - 8, 6 * k - 3, 2),
            c(24 * k - 4, 6 * k - 1, 2),
            c(24 * k - 2, 6 * k - 1, 1),
            c(24 * k, 6 * k - 1, 1),
            c(24 * k + 2, 6 * k - 1, 1),
            c(24 * k + 4, 6 * k + 1, 2),
            c(24 * k + 6, 6 * k + 1, 0),
        ]);
    }
    for &(f, e1, e2) in &columns {
        let got = q_table(f).map_err(|e| e.to_string())?;
        ensure(q1(f).ok() == Some(e1) && got == (e1, e2, e1 - e2), || {
            format!("f={f}: got {got:?}, table ({e1}, {e2}, {})", e1 - e2)
        })?;
    }
    for (f, expected) in [(8, (1, 0, 1)), (16, (3, 2, 1)), (18, (3, 1, 2)), (20, (5, 2, 3)), (28, (7, 2, 5))] {
        let got = q_table(f).map_err(|e| e.to_string())?;
        ensure(got == expected, || format!("f={f}: {got:?} != {expected:?}"))?;
    }
    Ok(format!("{} table columns and f in {{8, 16, 18, 20, 28}}", columns.len()))
}

fn partitions_brute(g: u32, n: u32) -> u64 {
    fn rec(rest: u32, parts: u32, max: u32) -> u64 {
        if parts == 0 {
            return (rest == 0) as u64;
        }
        (0..=rest.min(max)).map(|x| rec(rest - x, parts - 1, x)).sum()
    }
    rec(g, n, g)
}

fn flips() -> Outcome {
    let four = enumerate_flip_tilings(14, 5).map_err(|e| e.to_string())?;
    ensure(four.len() == 4, || format!("f=14 m=5: {} specs", four.len()))?;
    let mut pairs = 0;
    for f in (8..=60).step_by(2) {
        for m in 1..f / 2 {
            let Ok(case) = FlipCase::new(f, m) else { continue };
            pairs += 1;
            let specs = enumerate_flip_tilings(f, m).map_err(|e| e.to_string())?;
            for n in 1..=case.max_flips() {
                let got = specs.iter().filter(|s| s.n() == n as usize).count() as u64;
                let closed = count_flip_tilings(f, m, n).map_err(|e| e.to_string())?;
                let brute = case.gap_total(n).map_or(0, |g| partitions_brute(g, n));
                ensure(got == closed && closed == brute, || {
                    format!("f={f} m={m} n={n}: enumerated {got}, closed form {closed}, brute force {brute}")
                })?;
            }
        }
    }
    Ok(format!("4 specs for (14, 5); {pairs} admissible (f, m) pairs agree"))
}

fn generated() -> Result<Vec<(String, Tiling, Quadrilateral)>, String> {
    let mut out = Vec::new();
    for f in (6..=40).step_by(2) {
        let beta = if f == 6 { 0.9 } else { 1.0 - 1.0 / (f as f64 + 0.37) };
        let q = emt_quad(f, beta).map_err(|e| e.to_string())?;
        out.push((format!("emt f={f}"), build_emt(f).map_err(|e| e.to_string())?, q));
    }
    for f in (8..=24).step_by(2) {
        for m in 1..f / 2 {
            if FlipCase::new(f, m).is_err() {
                continue;
            }
            let q = flip_quad(f, m).map_err(|e| e.to_string())?;
            for spec in enumerate_flip_tilings(f, m).map_err(|e| e.to_string())? {
                let t = apply_flips(f, m, &spec.gaps).map_err(|e| e.to_string())?;
                out.push((format!("flip f={f} m={m} {:?}", spec.gaps), t, q));
            }
        }
    }
    for id in SporadicId::ALL {
        let (q, ts) = sporadic(id).map_err(|e| e.to_string())?;
        out.extend(ts.into_iter().map(|t| (id.to_string(), t, q)));
    }
    Ok(out)
}

fn corruption(t: &Tiling, rng: &mut StdRng) -> Corruption {
    let tile = rng.gen_range(0..t.f());
    match rng.gen_range(0..4) {
        0 => Corruption::FlipSideLabel { tile, side: rng.gen_range(0..4) },
        1 => Corruption::FlipChirality { tile },
        2 => {
            let corner = Corner::from_index(rng.gen_range(0..4));
            let old = t.tiles()[tile].corners[corner.index()];
            let vertex = (old + rng.gen_range(1..t.vertices().len())) % t.vertices().len();
            Corruption::MoveCorner { tile, corner, vertex }
        }
        _ => Corruption::BumpVertexVector {
            vertex: rng.gen_range(0..t.vertices().len()),
            corner: Corner::from_index(rng.gen_range(0..4)),
            delta: 1,
        },
    }
}

fn validator() -> Outcome {
    let cases = generated()?;
    for (name, t, q) in &cases {
        let report = validate(t, q, 1e-9);
        ensure(report.passed(), || format!("{name} fails {:?}", report.failed()))?;
    }
    let mut rng = StdRng::seed_from_u64(5);
    let mut caught = 0;
    while caught < 20 {
        let (name, t, q) = &cases[rng.gen_range(0..cases.len())];
        let c = corruption(t, &mut rng);
        let bad = t.corrupted(c);
        ensure(bad != *t, || format!("{name}: {c:?} changed nothing"))?;
        ensure(!validate(&bad, q, 1e-9).failed().is_empty(), || format!("{name}: {c:?} not caught"))?;
        caught += 1;
    }
    Ok(format!("{} generated tilings pass; 20 of 20 corruptions caught", cases.len()))
}

fn geometry() -> Outcome {
    let q = emt_quad(8, 0.9).map_err(|e| e.to_string())?;
    let mesh = emt_coordinates(8, 0.9).map_err(|e| e.to_string())?;
    let lens = [q.edges.a, q.edges.a, q.edges.a, q.edges.b];
    let mut worst: f64 = 0.0;
    for p in &mesh.placements {
        for (x, y) in p.arcs().iter().zip(lens).chain(p.angles().iter().zip(q.angles.as_array())) {
            worst = worst.max((x - y).abs());
        }
    }
    ensure(worst < 1e-9, || format!("emt_coordinates(8, 0.9) off by {worst:e}"))?;
    ensure((mesh.total_excess() - 4.0).abs() < 1e-8, || "emt_coordinates excess".into())?;

    let (oq, ot) = sporadic(SporadicId::Octa24B3).map_err(|e| e.to_string())?;
    let seed = default_seed(&ot[0], &oq).map_err(|e| e.to_string())?;
    let octa = realize_by_propagation(&ot[0], &oq, &seed).map_err(|e| e.to_string())?;
    ensure(octa.discrepancy < 1e-8, || format!("octa24_b3 discrepancy {:e}", octa.discrepancy))?;

    let cases = generated()?;
    let mut excess: f64 = 0.0;
    for (name, t, q) in &cases {
        let m = realize(t, q).map_err(|e| format!("{name}: {e}"))?;
        excess = excess.max((m.total_excess() - 4.0).abs());
    }
    ensure(excess < 1e-8, || format!("total excess off by {excess:e}"))?;
    Ok(format!(
        "arcs/angles to {worst:.1e}; octa24 discrepancy {:.1e}; excess within {excess:.1e} on {} meshes",
        octa.discrepancy,
        cases.len() + 1
    ))
}

fn det3_int(m: [[i64; 3]; 3]) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// `det [1 1 1 1; l; m; n] == 0`, by cofactor expansion along the first row.
fn coplanar_oracle(l: VertexVector, m: VertexVector, n: VertexVector) -> bool {
    let rows = [l, m, n].map(|v| v.0.map(i64::from));
    let det: i64 = (0..4)
        .map(|skip| {
            let cols: Vec<usize> = (0..4).filter(|&c| c != skip).collect();
            let minor = det3_int(rows.map(|r| [r[cols[0]], r[cols[1]], r[cols[2]]]));
            if skip % 2 == 0 { minor } else { -minor }
        })
        .sum();
    det == 0
}

fn vertices() -> Outcome {
    let rows = sporadic_rows();
    let theta = rows[2].family.angles(rows[2].alpha).as_array();
    let assign = AngleAssignment::new(theta, 16).map_err(|e| e.to_string())?;
    let mut got = enumerate_vertex_types(&assign, 1e-9, Some(8));
    got.sort();
    let mut oracle = Vec::new();
    for n in 0..9u32.pow(4) {
        let v = VertexVector::new(n % 9, n / 9 % 9, n / 81 % 9, n / 729);
        let sum: f64 = (0..4).map(|i| v.0[i] as f64 * theta[i]).sum();
        if (3..=8).contains(&v.degree()) && (v.0[0] + v.0[3]).is_multiple_of(2) && (sum - 2.0).abs() < 1e-9 {
            oracle.push(v);
        }
    }
    oracle.sort();
    let mut expected = vec![VertexVector::new(0, 1, 0, 2), VertexVector::new(2, 0, 2, 0), VertexVector::new(0, 4, 0, 0)];
    expected.sort();
    ensure(got == expected && oracle == expected, || format!("row 3 types {got:?}, oracle {oracle:?}"))?;

    let mut censuses = Vec::new();
    for id in SporadicId::ALL {
        let (q, ts) = sporadic(id).map_err(|e| e.to_string())?;
        let census = vertex_census(&ts[0]);
        let avc: Vec<VertexVector> = census.iter().map(|(v, _)| *v).collect();
        let sols = solve_multiplicities(&avc, q.f);
        let expected: Vec<u32> = census.iter().map(|(_, n)| *n as u32).collect();
        ensure(sols == vec![expected.clone()], || format!("{id}: solutions {sols:?}"))?;
        censuses.push(format!("{expected:?}"));
    }

    let mut rng = StdRng::seed_from_u64(1000);
    let mut checked = 0;
    while checked < 1000 {
        let mut draw = || VertexVector(std::array::from_fn(|_| rng.gen_range(0..5)));
        let (l, m, n) = (draw(), draw(), draw());
        match coplanarity_check(l, m, n) {
            Ok(c) => {
                ensure(c == coplanar_oracle(l, m, n), || format!("coplanarity of {l} {m} {n}"))?;
                checked += 1;
            }
            Err(Error::Precondition(_)) => {}
            Err(e) => return Err(e.to_string()),
        }
    }
    Ok(format!("row 3 types match; unique censuses {}; 1000 triples agree", censuses.join(" ")))
}

fn quartic() -> Outcome {
    let alphas = |k| -> Result<Vec<(f64, usize)>, String> { Ok(quartic_case(k).map_err(|e| e.to_string())?.alphas()) };
    let close = |got: &[(f64, usize)], want: &[(f64, usize)]| {
        got.len() == want.len() && got.iter().zip(want).all(|(g, w)| (g.0 - w.0).abs() < 1e-9 && g.1 == w.1)
    };
    let four = alphas(4)?;
    ensure(close(&four, &[(0.25, 2), (0.75, 2)]), || format!("k=4: {four:?}"))?;
    let five = alphas(5)?;
    ensure(close(&five, &[(0.2, 1), (0.4, 1), (0.6, 1), (0.8, 1)]), || format!("k=5: {five:?}"))?;
    let mut min = f64::INFINITY;
    for k in 6..=100 {
        let m = nonexistence_margin(k).map_err(|e| e.to_string())?;
        ensure(m > 0.0, || format!("k={k}: margin {m}"))?;
        min = min.min(m);
    }
    Ok(format!("double roots 1/4, 3/4; simple roots j/5; smallest margin {min:.3e}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 sporadic rows", table_1),
        ("2 family residuals", table_2),
        ("3 flip quadrilateral counts", counting),
        ("4 flip enumeration", flips),
        ("5 validator soundness", validator),
        ("6 geometry", geometry),
        ("7 vertex machinery", vertices),
        ("8 quartic case", quartic),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS criterion {name}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail}");
            }
        }
    }
    println!("{} of 8 criteria pass", 8 - failed);
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
