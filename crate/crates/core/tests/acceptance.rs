//! Acceptance criteria, one printed line each. Exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use trilie::algebra::ThreeLieAlgebra;
use trilie::cochain::{ClassicalComplex, Cochain};
use trilie::corpus::{self, CorpusEntry, Expectation, Payload};
use trilie::extension::{check_extension, mc_defect, ExtensionData};
use trilie::gencohom::GenComplex;
use trilie::rep::{
    check_genrep_canonical, check_genrep_eqs, generalized_semidirect, semidirect, trivial_rho_nu_solutions,
    GeneralizedRepresentation, Representation,
};
use trilie::sampling::{sample_assignments, Sampler};
use trilie::{Exec, ParameterAssignment, Scalar};

const SEED: u64 = 20_240_601;

/// `Ok(details)` on success, `Err(reason)` on failure.
type Outcome = Result<String, String>;

fn ensure(cond: bool, reason: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(reason())
    }
}

fn timed(budget: Duration, what: &str, f: impl FnOnce() -> bool) -> Result<bool, String> {
    let start = Instant::now();
    let verdict = f();
    let spent = start.elapsed();
    ensure(spent < budget, || format!("{what} took {spent:?}, budget {budget:?}"))?;
    Ok(verdict)
}

fn genrep_entries(expected: bool) -> Vec<CorpusEntry> {
    corpus::entries()
        .into_iter()
        .filter(|e| {
            matches!(e.payload, Payload::GenRep { .. }) && e.expectations.contains(&Expectation::GenRep(expected))
        })
        .collect()
}

fn points_of(
    alg: &ThreeLieAlgebra,
    gr: &GeneralizedRepresentation,
    count: usize,
    seed: u64,
) -> Vec<ParameterAssignment> {
    let mut params = alg.parameters();
    params.extend(gr.parameters());
    sample_assignments(&params, count, seed, |v| gr.instantiate(v).map(|_| ())).expect("sampling succeeds")
}

fn criterion_1() -> Outcome {
    let budget = Duration::from_secs(1);
    let mut valid: Vec<(String, ThreeLieAlgebra)> = vec![
        ("g3".into(), corpus::g3()),
        ("simple4".into(), corpus::simple4()),
        ("alg4-a".into(), corpus::alg4a()),
        ("alg4-b".into(), corpus::alg4b()),
    ];
    for alg in [corpus::g3(), corpus::simple4()] {
        let ad = alg.adjoint_rep().map_err(|e| e.to_string())?;
        valid.push((
            format!("semidirect ad({}-dim)", alg.dim()),
            semidirect(&alg, &ad).map_err(|e| e.to_string())?,
        ));
    }
    for e in genrep_entries(true) {
        let Payload::GenRep { algebra, genrep } = &e.payload else {
            continue;
        };
        let v = points_of(algebra, genrep, 1, SEED)[0].clone();
        let gr = genrep.instantiate(&v).map_err(|e| e.to_string())?;
        let alg = algebra.instantiate(&v).map_err(|e| e.to_string())?;
        valid.push((
            format!("semidirect {}", e.id),
            generalized_semidirect(&alg, &gr).map_err(|e| e.to_string())?,
        ));
    }
    let ext = corpus::extension_example()
        .instantiate(&corpus::standard_point())
        .map_err(|e| e.to_string())?;
    valid.push(("ext-g3 bracket".into(), ext.bracket().map_err(|e| e.to_string())?));
    for (name, alg) in &valid {
        let ok = timed(budget, name, || alg.check_fi(Exec::default()).holds())?;
        ensure(ok, || format!("{name} fails the Fundamental Identity"))?;
    }
    let broken = corpus::broken4();
    let report = broken.check_fi(Exec::default());
    let witness = report.witness.ok_or("broken4 passes the Fundamental Identity")?;
    Ok(format!(
        "{} algebras pass; broken4: {}",
        valid.len(),
        broken.describe_witness(&witness)
    ))
}

fn criterion_2() -> Outcome {
    let mut checked = 0;
    for alg in [corpus::g3(), corpus::simple4()] {
        let ad = alg.adjoint_rep().map_err(|e| e.to_string())?;
        let cx = ClassicalComplex::new(&alg, &ad).map_err(|e| e.to_string())?;
        let pi = alg.structure().to_cochain();
        for p in 0..=2 {
            let len = Cochain::zeros(p, alg.dim(), alg.dim()).coordinates().len();
            for k in 0..len {
                let alpha = Cochain::unit(p, alg.dim(), alg.dim(), k);
                let lhs = pi.graded_bracket(&alpha, Exec::default()).map_err(|e| e.to_string())?;
                let rhs = cx.delta(&alpha, Exec::default()).map_err(|e| e.to_string())?;
                ensure(lhs == rhs, || {
                    format!(
                        "bracket and coboundary differ on unit {k} of degree {p}, dim {}",
                        alg.dim()
                    )
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!(
        "bracket with the structure equals the coboundary on {checked} unit cochains"
    ))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let exec = Exec::default();
    let mut families = 0;
    let mut points = 0;
    for e in genrep_entries(true) {
        let Payload::GenRep { algebra, genrep } = &e.payload else {
            continue;
        };
        let symbolic = check_genrep_eqs(algebra, genrep).map_err(|err| err.to_string())?;
        ensure(symbolic.holds(), || {
            format!("{} fails symbolically: {}", e.id, symbolic.failures[0])
        })?;
        for v in points_of(algebra, genrep, 5, SEED) {
            let (a, g) = (algebra.instantiate(&v).unwrap(), genrep.instantiate(&v).unwrap());
            let eqs = check_genrep_eqs(&a, &g).map_err(|err| err.to_string())?.holds();
            let canonical = check_genrep_canonical(&a, &g, exec).map_err(|err| err.to_string())?;
            ensure(eqs && canonical, || {
                format!("{} fails at a sampled point (eqs {eqs}, canonical {canonical})", e.id)
            })?;
            points += 1;
        }
        families += 1;
    }
    let printed = genrep_entries(false);
    for e in &printed {
        let Payload::GenRep { algebra, genrep } = &e.payload else {
            continue;
        };
        ensure(!check_genrep_eqs(algebra, genrep).unwrap().holds(), || {
            format!("{} unexpectedly passes", e.id)
        })?;
    }
    let mut s = Sampler::new(SEED);
    let g3 = corpus::g3();
    let mut both = [0usize; 2];
    for k in 0..100 {
        let gr = if k % 2 == 0 {
            let ext = corpus::extension_example().without_omega();
            let v = s
                .assignment(&ext.parameters(), |v| ext.instantiate(v).map(|_| ()))
                .unwrap();
            let mut gr = ext.instantiate(&v).unwrap().genrep();
            // r1 = r2 = 0 makes the pair a generalized representation
            if k % 4 == 0 {
                gr = GeneralizedRepresentation::new(zero_r1_r2_rho(&v), gr.nu).unwrap();
            }
            gr
        } else {
            GeneralizedRepresentation::new(s.representation(3, 2, 0.3), s.nu_map(3, 2, 0.3)).unwrap()
        };
        let eqs = check_genrep_eqs(&g3, &gr).unwrap().holds();
        let canonical = check_genrep_canonical(&g3, &gr, exec).unwrap();
        ensure(eqs == canonical, || {
            format!("random pair {k}: identities {eqs}, canonical {canonical}")
        })?;
        both[eqs as usize] += 1;
    }
    let spent = start.elapsed();
    ensure(spent < Duration::from_secs(30), || format!("took {spent:?}"))?;
    Ok(format!(
        "{families} families symbolically and at {points} points; {} printed variants fail as expected; 100 random pairs agree ({} valid, {} invalid); {spent:.1?}",
        printed.len(),
        both[1],
        both[0]
    ))
}

/// `rho` of the worked extension with `r1 = r2 = 0`, at the other values of `v`.
fn zero_r1_r2_rho(v: &ParameterAssignment) -> Representation {
    let mut rho = Representation::zero(3, 2);
    let s = |k: &str| Scalar::from_rational(v[k].clone());
    let r3 = s("r3");
    rho.set_entry(1, 2, 0, 1, r3.clone()).unwrap();
    rho.set_entry(1, 2, 1, 1, (&r3 * &s("s2")).checked_div(&s("s1")).unwrap())
        .unwrap();
    rho
}

fn criterion_4() -> Outcome {
    let alg = corpus::g3();
    let at = corpus::assignment(&[("s1", 1), ("s2", 2), ("s3", 3)]);
    let mut s = Sampler::new(SEED);
    let mut checked = 0;
    for gr in [corpus::cocycle_first_genrep(), corpus::cocycle_second_genrep()] {
        let gr = gr.instantiate(&at).map_err(|e| e.to_string())?;
        let cx = GenComplex::new(&alg, &gr, Exec::default()).map_err(|e| e.to_string())?;
        for k in 0..20 {
            let alpha = s.mixed_cochain(k % 2, 3, 2, 0.5);
            ensure(cx.check_d_squared(&alpha).map_err(|e| e.to_string())?, || {
                format!("d^2 != 0 on sample {k}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("d^2 = 0 on {checked} random cochains of degree 0 and 1"))
}

fn criterion_5() -> Outcome {
    let alg = corpus::g3();
    let mut details = Vec::new();
    let mut excess = Vec::new();
    for (name, stated, gr, family, params) in [
        (
            "first",
            2,
            corpus::cocycle_first_genrep(),
            corpus::cocycle_first_family(),
            2,
        ),
        (
            "second",
            4,
            corpus::cocycle_second_genrep(),
            corpus::cocycle_second_family(),
            4,
        ),
    ] {
        let at = corpus::assignment(&[("s1", 1), ("s2", 2), ("s3", 3)]);
        let gr = gr.instantiate(&at).map_err(|e| e.to_string())?;
        let cx = GenComplex::new(&alg, &gr, Exec::default()).map_err(|e| e.to_string())?;
        for k in 1..=params {
            let mut v = at.clone();
            for l in 1..=params {
                v.insert(
                    format!("p{l}"),
                    Scalar::int((k == l) as i64).as_rational().unwrap().clone(),
                );
            }
            let t = family.instantiate(&v).map_err(|e| e.to_string())?;
            let image = cx.d(&t.to_mixed()).map_err(|e| e.to_string())?;
            ensure(image.is_zero(), || {
                format!("{name} example: member p{k} = 1 is not in ker d")
            })?;
        }
        let dim = cx.solve_two_cocycles().map_err(|e| e.to_string())?.len();
        details.push(format!(
            "{name} example: family in ker d, dimension {dim} (stated {stated})"
        ));
        if dim != stated {
            excess.push(format!(
                "{name} example: computed dimension {dim} exceeds the stated {stated}"
            ));
        }
    }
    if excess.is_empty() {
        Ok(details.join("; "))
    } else {
        Err(format!(
            "{}; the listed families are not exhaustive (see README, cocycle dimensions)",
            excess.join("; ")
        ))
    }
}

fn criterion_6() -> Outcome {
    let exec = Exec::default();
    let alg = corpus::g3();
    let all_three = |ext: &ExtensionData| -> Result<[bool; 3], String> {
        Ok([
            check_extension(ext, exec).map_err(|e| e.to_string())?.holds(),
            ext.bracket().map_err(|e| e.to_string())?.is_three_lie(),
            mc_defect(ext, exec).map_err(|e| e.to_string())?.is_zero(),
        ])
    };
    let worked = corpus::extension_example();
    let ext = worked
        .instantiate(&corpus::standard_point())
        .map_err(|e| e.to_string())?;
    ensure(all_three(&ext)? == [true; 3], || {
        "worked extension fails at the standard point".into()
    })?;
    let mut s = Sampler::new(SEED);
    for _ in 0..5 {
        let v = s
            .assignment(&worked.parameters(), |v| worked.instantiate(v).map(|_| ()))
            .unwrap();
        let zeroed = worked.instantiate(&v).unwrap().without_omega();
        ensure(all_three(&zeroed)? == [false; 3], || {
            "zeroing omega leaves a check passing".into()
        })?;
    }
    let symbolic = check_genrep_eqs(&alg, &worked.genrep()).map_err(|e| e.to_string())?;
    ensure(!symbolic.holds(), || {
        "the parametric pair passes for generic r1, r2".into()
    })?;
    let mut reduced_rho = Representation::zero(3, 2);
    let p = |t: &str| Scalar::parse(t).unwrap();
    reduced_rho.set_entry(1, 2, 0, 1, p("r3")).unwrap();
    reduced_rho.set_entry(1, 2, 1, 1, p("s2*r3/s1")).unwrap();
    let reduced = GeneralizedRepresentation::new(reduced_rho, worked.nu.clone()).unwrap();
    let at_zero = check_genrep_eqs(&alg, &reduced).map_err(|e| e.to_string())?;
    ensure(at_zero.holds(), || {
        format!("r1 = r2 = 0 fails: {}", at_zero.failures[0])
    })?;
    // the r1/r2 entries of rho(x2, x3) need r2 != 0
    for (r1, r2) in [(0, 1), (0, -2), (2, -3)] {
        let mut v = corpus::standard_point();
        v.insert("r1".into(), Scalar::int(r1).as_rational().unwrap().clone());
        v.insert("r2".into(), Scalar::int(r2).as_rational().unwrap().clone());
        let gr = worked.instantiate(&v).unwrap().genrep();
        ensure(!check_genrep_eqs(&alg, &gr).unwrap().holds(), || {
            format!("({r1}, {r2}) passes")
        })?;
    }
    Ok(format!(
        "standard point passes all three; omega = 0 fails all three; generic pair fails with {}; r1 = r2 = 0 passes",
        symbolic.failures[0]
    ))
}

fn criterion_7() -> Outcome {
    let exec = Exec::default();
    let mut s = Sampler::new(SEED ^ 7);
    let worked = corpus::extension_example();
    let mut counts = [0usize; 2];
    for k in 0..100 {
        let ext = match k % 3 {
            0 => {
                let v = s
                    .assignment(&worked.parameters(), |v| worked.instantiate(v).map(|_| ()))
                    .unwrap();
                worked.instantiate(&v).unwrap()
            }
            1 => {
                let v = s
                    .assignment(&worked.parameters(), |v| worked.instantiate(v).map(|_| ()))
                    .unwrap();
                let base = worked.instantiate(&v).unwrap();
                let omega = base.omega.add(&s.skew_triple(3, 2, 0.3)).unwrap();
                ExtensionData::new(base.algebra, base.rho, base.nu, omega).unwrap()
            }
            _ => ExtensionData::new(
                corpus::g3(),
                s.representation(3, 2, 0.3),
                s.nu_map(3, 2, 0.3),
                s.skew_triple(3, 2, 0.5),
            )
            .unwrap(),
        };
        let identities = check_extension(&ext, exec).map_err(|e| e.to_string())?.holds();
        let fi = ext.bracket().map_err(|e| e.to_string())?.is_three_lie();
        let mc = mc_defect(&ext, exec).map_err(|e| e.to_string())?.is_zero();
        ensure(identities == fi && fi == mc, || {
            format!("sample {k}: identities {identities}, FI {fi}, MC {mc}")
        })?;
        counts[identities as usize] += 1;
    }
    ensure(counts[0] > 0 && counts[1] > 0, || {
        "samples exercise only one verdict".into()
    })?;
    Ok(format!(
        "100 samples agree three ways ({} extensions, {} not)",
        counts[1], counts[0]
    ))
}

fn criterion_8() -> Outcome {
    let alg = corpus::simple4();
    ensure(alg.is_perfect().map_err(|e| e.to_string())?, || {
        "simple4 is not perfect".into()
    })?;
    for m in [2, 3] {
        let dim = trivial_rho_nu_solutions(&alg, m).map_err(|e| e.to_string())?.len();
        ensure(dim == 0, || format!("dim V = {m}: nullspace dimension {dim}"))?;
    }
    Ok("nullspace dimension 0 for dim V = 2 and 3".into())
}

fn criterion_9() -> Outcome {
    let mut s = Sampler::new(SEED ^ 9);
    let exec = Exec::default();
    let mut checked = 0;
    for dim in 2..=3 {
        for k in 0..16 {
            let degrees = [k % 2, (k / 2) % 2, (k / 4) % 2];
            let [a, b, c] = degrees.map(|p| {
                let len = Cochain::zeros(p, dim, dim).coordinates().len();
                Cochain::from_coordinates(p, dim, dim, s.vector(len, 0.5)).unwrap()
            });
            let [p, q, r] = degrees;
            let sign = |x: usize, y: usize| Scalar::int(if (x * y).is_multiple_of(2) { 1 } else { -1 });
            let br = |x: &Cochain, y: &Cochain| x.graded_bracket(y, exec).unwrap();
            ensure(br(&a, &b) == br(&b, &a).scale(&sign(p, q)).neg(), || {
                format!("antisymmetry fails, dim {dim}, sample {k}")
            })?;
            let jacobi = br(&a, &br(&b, &c))
                .scale(&sign(p, r))
                .add(&br(&b, &br(&c, &a)).scale(&sign(q, p)))
                .unwrap()
                .add(&br(&c, &br(&a, &b)).scale(&sign(r, q)))
                .unwrap();
            ensure(jacobi.is_zero(), || format!("Jacobi fails, dim {dim}, sample {k}"))?;
            checked += 1;
        }
    }
    Ok(format!("antisymmetry and Jacobi hold on {checked} random triples"))
}

fn main() -> ExitCode {
    let start = Instant::now();
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("FI suite", criterion_1),
        ("sign lock", criterion_2),
        ("generalized representations", criterion_3),
        ("d^2 = 0", criterion_4),
        ("2-cocycle reproduction", criterion_5),
        ("extension suite", criterion_6),
        ("equivalence oracles", criterion_7),
        ("perfectness", criterion_8),
        ("graded Lie laws", criterion_9),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = run();
        let verdict = if outcome.is_ok() { "PASS" } else { "FAIL" };
        let text = outcome.unwrap_or_else(|e| e);
        println!("criterion {:>2} {verdict} {name} ({:.2?}): {text}", k + 1, t.elapsed());
        failed += usize::from(verdict == "FAIL");
    }
    let total = start.elapsed();
    let within = total < Duration::from_secs(300);
    println!(
        "criterion 10 {} total runtime ({total:.2?} against a 5 minute budget)",
        if within { "PASS" } else { "FAIL" }
    );
    failed += usize::from(!within);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} of 10 criteria failed");
        ExitCode::FAILURE
    }
}
