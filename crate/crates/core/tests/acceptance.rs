//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod support;

use std::time::{Duration, Instant};

use gmspectral::bkn::classify;
use gmspectral::cohomology::CohomologyBasis;
use gmspectral::decide::{decide_all, witness_satisfies, DecideOptions, Property, PropertyReport, Verdict};
use gmspectral::exactla::{inertia, is_supersingular, is_weakly_singular, Inertia, RatMatrix, SymRatMatrix};
use gmspectral::operators::{admissible_s_functions, build_a_lambda, build_a_plus, build_h, sign_components};
use gmspectral::rational::{int, ratio};
use gmspectral::{Cocycle, Edge, LabeledGraph, Rational, Sign};
use num_traits::Zero;
use rand::Rng;
use support::*;

type Check = Result<(), String>;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn ensure_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Check {
    ensure(got == want, || format!("{what}: got {got:?}, want {want:?}"))
}

fn q(rows: &[&[(i64, i64)]]) -> SymRatMatrix {
    sym(rows
        .iter()
        .map(|r| r.iter().map(|&(p, d)| ratio(p, d)).collect())
        .collect())
}

fn z(rows_: &[&[i64]]) -> SymRatMatrix {
    sym(rows(rows_))
}

fn report(g: &LabeledGraph) -> Result<PropertyReport, String> {
    decide_all(g, &DecideOptions::default()).map_err(|e| e.to_string())
}

fn verdicts(r: &PropertyReport, want: &[(Property, Verdict)]) -> Check {
    for &(p, v) in want {
        ensure_eq(&format!("verdict {p}"), r.verdict(p), v)?;
    }
    ensure(r.is_consistent(), || format!("violations {:?}", r.violations))
}

/// H for the canonical admissible s of the oriented graph.
fn h_of(g: &LabeledGraph) -> Result<SymRatMatrix, String> {
    let (norm, _) = g.normalize_orientation();
    let s = admissible_s_functions(&sign_components(&norm));
    build_h(&norm, &s[0]).map_err(|e| e.to_string())
}

fn single_class(g: &LabeledGraph) -> Result<SymRatMatrix, String> {
    let basis = CohomologyBasis::new(g).map_err(|e| e.to_string())?;
    ensure_eq("class count", basis.class_count().unwrap(), 1)?;
    build_a_lambda(g, &basis.representative(0).unwrap()).map_err(|e| e.to_string())
}

use Property::*;
use Verdict::{No, Yes};

fn criterion_1() -> Check {
    let g = malpha([1, 1, 4, 3]);
    let a = build_a_plus(&g).map_err(|e| e.to_string())?;
    ensure_eq("A+", &a, &z(&[&[1, -1, 0], &[-1, 3, -1], &[0, -1, 1]]))?;
    ensure_eq("inertia", inertia(&a), Inertia::new(3, 0, 0))?;
    let r = report(&g)?;
    verdicts(&r, &Property::ALL.map(|p| (p, No)))
}

fn criterion_2() -> Check {
    let g = malpha([-1, 1, 2, -1]);
    let a = build_a_plus(&g).map_err(|e| e.to_string())?;
    ensure_eq("A+", &a, &z(&[&[1, -1, 0], &[-1, 1, -1], &[0, -1, 1]]))?;
    ensure_eq("n_neg", inertia(&a).negative, 1)?;
    ensure_eq("H", h_of(&g)?, SymRatMatrix::identity(3))?;
    verdicts(
        &report(&g)?,
        &[(I, Yes), (HI, Yes), (VE, No), (E, No), (F, No), (VF, No), (NPC, No)],
    )
}

fn criterion_3() -> Check {
    let g = malpha([-3, 2, -1, 1]);
    let h = h_of(&g)?;
    let want = q(&[
        &[(1, 1), (-1, 1), (0, 1)],
        &[(-1, 1), (1, 2), (-1, 2)],
        &[(0, 1), (-1, 2), (3, 2)],
    ]);
    ensure_eq("H", &h, &want)?;
    ensure_eq("det H", h.determinant(), int(-1))?;
    ensure(inertia(&h).negative >= 1, || "no negative eigenvalue".into())?;
    let a = single_class(&g)?;
    ensure_eq("A_lambda weakly singular", is_weakly_singular(&a, 24).unwrap(), None)?;
    verdicts(&report(&g)?, &[(VE, Yes), (E, No), (I, Yes), (HI, Yes)])
}

fn criterion_4() -> Check {
    let g = malpha([0, 1, 1, 2]);
    let h = h_of(&g)?;
    ensure_eq("H", &h, &z(&[&[1, -1, 0], &[-1, 2, 0], &[0, 0, 0]]))?;
    let i = inertia(&h);
    ensure(i.is_singular() && i.is_positive_semidefinite(), || format!("inertia {i:?}"))?;
    ensure_eq("supersingular", is_supersingular(&h), None)?;
    verdicts(&report(&g)?, &[(VE, Yes), (VF, No), (F, No), (NPC, No)])
}

fn criterion_5() -> Check {
    let g = malpha([0, 1, 1, 1]);
    let a = single_class(&g)?;
    ensure_eq("A_lambda", &a, &z(&[&[1, -1, 0], &[-1, 1, -1], &[0, -1, 0]]))?;
    let x = is_weakly_singular(&a, 24).unwrap().ok_or("A_lambda not weakly singular")?;
    ensure_eq("witness", x.clone(), vec![int(1), int(1), int(0)])?;
    ensure_eq("A_lambda x", a.mul_vec(&x).unwrap(), vec![int(0), int(0), int(-1)])?;
    let h = h_of(&g)?;
    ensure_eq("H", &h, &z(&[&[1, -1, 0], &[-1, 1, 0], &[0, 0, 0]]))?;
    ensure(inertia(&h).is_positive_semidefinite(), || "H not PSD".into())?;
    ensure(is_supersingular(&h).is_some(), || "H not supersingular".into())?;
    let rho = g.rho().ok_or("no rho")?;
    ensure_eq("det A_rho", build_a_lambda(&g, rho).unwrap().determinant(), int(-1))?;
    let r = report(&g)?;
    verdicts(
        &r,
        &[(E, Yes), (VF, Yes), (F, No), (NPC, No), (I, Yes), (HI, Yes), (VE, Yes)],
    )?;
    let w = r.witness(E).ok_or("E without witness")?;
    ensure_eq("E witness vector", w.vector.clone(), Some(x))?;
    ensure(witness_satisfies(&g, E, w).unwrap(), || "E witness does not verify".into())
}

fn criterion_6() -> Check {
    for b in 1..=3u64 {
        let g = LabeledGraph::new(vec![ratio(2, b as i64)], vec![Edge::new(0, 0, b)], None)
            .map_err(|e| e.to_string())?;
        let (norm, _) = g.normalize_orientation();
        let s = admissible_s_functions(&sign_components(&norm));
        ensure(!s.is_empty() && s.iter().all(|s| !s.is_zero()), || format!("s functions {s:?}"))?;
        for s in &s {
            ensure_eq("H", build_h(&norm, s).unwrap(), SymRatMatrix::zeros(1))?;
        }
        ensure_eq(&format!("NPC, |b| = {b}"), report(&g)?.verdict(NPC), No)?;
    }
    Ok(())
}

fn criterion_7() -> Check {
    let start = Instant::now();
    let mut r = rng(2024);
    let opts = DecideOptions::default();
    let (mut witnesses, mut approximate, mut weak_checked) = (0, 0, 0);
    for case in 0..1000 {
        let g = random_graph(&mut r, 6);
        let ctx = |what: &str| format!("case {case}: {what}");
        let rep = decide_all(&g, &opts).map_err(|e| ctx(&e.to_string()))?;
        // (a)
        ensure(rep.is_consistent(), || ctx(&format!("{:?}", rep.violations)))?;
        let (norm, _) = g.normalize_orientation();
        let a_plus = inertia(&build_a_plus(&norm).unwrap());
        for p in Property::ALL {
            let Some(w) = rep.witness(p) else { continue };
            // (b)
            witnesses += 1;
            if !w.is_exact() {
                approximate += 1;
            }
            ensure(witness_satisfies(&g, p, w).unwrap(), || ctx(&format!("{p} witness")))?;
            // (c) nonpositive eigenvalue of A+ under a compatible solution
            if classify(&g, &w.solution).unwrap().compatible {
                ensure(a_plus.has_nonpositive(), || ctx("compatible but A+ positive"))?;
            }
        }
        // (c) coboundary invariance
        let basis = CohomologyBasis::new(&norm).unwrap();
        let lambda = basis.representative(r.gen_range(0..basis.class_count().unwrap())).unwrap();
        let eps: Vec<Sign> = (0..g.n_vertices())
            .map(|_| if r.gen_bool(0.5) { Sign::Plus } else { Sign::Minus })
            .collect();
        let moved = lambda.times(&Cocycle::coboundary(&norm, &eps));
        let a = build_a_lambda(&norm, &lambda).unwrap();
        let b = build_a_lambda(&norm, &moved).unwrap();
        let d = RatMatrix::from_fn(eps.len(), eps.len(), |i, j| {
            if i == j { eps[i].to_rational() } else { Rational::zero() }
        });
        ensure(a.congruent(&d).unwrap() == b, || ctx("A_lambda not congruent under coboundary"))?;
        ensure(inertia(&a) == inertia(&b), || ctx("inertia changed under coboundary"))?;
        // (d)
        let m = a.to_rows();
        let fast = is_weakly_singular(&a, 24).unwrap();
        ensure(fast.is_some() == brute_weakly_singular(&m), || ctx("weak singularity"))?;
        if let Some(x) = fast {
            ensure(is_weak_witness(&m, &x), || ctx("weak witness"))?;
        }
        weak_checked += 1;
    }
    let elapsed = start.elapsed();
    println!(
        "    {witnesses} witnesses ({approximate} approximate), {weak_checked} brute-force checks, {:.1}s",
        elapsed.as_secs_f64()
    );
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))
}

fn criterion_8() -> Check {
    let mut r = rng(8);
    let mut dims = [0usize; 9];
    for case in 0..200 {
        let m = random_symmetric(&mut r, 8);
        dims[m.len()] += 1;
        let i = inertia(&sym(m.clone()));
        ensure_eq(
            &format!("case {case} (n = {})", m.len()),
            (i.positive, i.zero, i.negative),
            sturm_inertia(&m),
        )?;
    }
    ensure(dims[8] > 0, || "no 8x8 matrix drawn".into())
}

fn main() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("1 no-property example: A+ and all seven verdicts", criterion_1),
        ("2 immersed-only example: A+ indefinite, H = I", criterion_2),
        ("3 virtually embedded example: H, det, A_lambda", criterion_3),
        ("4 singular H example: PSD, not supersingular", criterion_4),
        ("5 virtually fibered example: weak witness (1,1,0)", criterion_5),
        ("6 Dehn twist loops: H = 0, NPC no", criterion_6),
        ("7 random graph property suite", criterion_7),
        ("8 inertia against Sturm root counting", criterion_8),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        match check() {
            Ok(()) => println!("PASS criterion {name} ({:.2}s)", start.elapsed().as_secs_f64()),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {name}: {e}");
            }
        }
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
