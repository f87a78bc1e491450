//! Acceptance gate: one line per criterion, nonzero exit if any fails.

use std::process::{Command, ExitCode};

use cayley_core::algebra::{check_identities, CayleyAlgebra};
use cayley_core::construct::*;
use cayley_core::derivation::{derivation_algebra, graded_component_0, DerivationSpaces, MapKind, MapSpace};
use cayley_core::field::FieldSpec;
use cayley_core::linalg::{scale, Subspace, Vector};
use cayley_core::sample::SampleSpec;
use cayley_core::suite::*;

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn split_fields() -> Vec<FieldSpec> {
    let mut v = vec![FieldSpec::Rational];
    v.extend([2, 3, 5, 7].map(|p| FieldSpec::prime(p).unwrap()));
    v
}

fn all_algebras() -> Vec<(String, CayleyAlgebra)> {
    let mut v: Vec<_> = split_fields().into_iter().map(|f| (format!("split/{f}"), split_cayley(f))).collect();
    v.push(("cd(-1,-1,-1)/q".into(), division_octonions_q()));
    v
}

fn span(spec: FieldSpec, gens: &[&[(usize, i64)]]) -> Subspace {
    let vs: Vec<Vector> = gens.iter().map(|g| combination(spec, 8, g)).collect();
    Subspace::span(spec, 8, &vs).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn dimension_table() -> Verdict {
    for (name, c) in all_algebras() {
        let s = DerivationSpaces::compute(&c);
        let got = (s.der.dim(), s.skew.dim(), s.locder.dim(), s.so_c0.dim());
        ensure(got == (14, 28, 21, 21), || format!("{name}: (der, so, locder, so_c0) = {got:?}"))?;
    }
    Ok("6 algebras: der=14 so=28 locder=21 so_c0=21".into())
}

fn orbit_complements() -> Verdict {
    let samples = SampleSpec::default();
    let mut total = 0;
    for (name, c) in all_algebras() {
        let spec = c.spec();
        let der = derivation_algebra(c.alg());
        let points: Vec<Vector> = samples.vectors(spec, 8).into_iter().filter(|x| !c.is_scalar(x)).collect();
        ensure(points.len() >= 200, || format!("{name}: only {} non-scalar points", points.len()))?;
        for x in &points {
            let orbit = der.eval_subspace(x).unwrap();
            let perp = Subspace::span(spec, 8, &[c.unit().clone(), x.clone()])
                .unwrap()
                .orth_complement(c.form().polar_gram())
                .unwrap();
            ensure(orbit == perp && orbit.dim() == 6, || format!("{name}: mismatch at x = {x:?}"))?;
        }
        total += points.len();
    }
    Ok(format!("{total} points, Der(C)x = (F1 + Fx)^perp of dimension 6"))
}

fn split_skeleton() -> Verdict {
    for spec in split_fields() {
        let c = split_cayley(spec);
        let s = DerivationSpaces::compute(&c);
        let p = graded_skew_block(&c, &s.skew).unwrap();
        let der0 = graded_component_0(&c).unwrap();
        let phi = phi_map(spec);
        let fphi = MapSpace::span(MapKind::Custom, spec, 8, std::slice::from_ref(&phi)).unwrap();
        ensure(p.dim() == 9 && der0.dim() == 8, || format!("{spec}: dim P = {}, dim Der_0 = {}", p.dim(), der0.dim()))?;
        ensure(p.equal(&der0.sum(&fphi).unwrap()).unwrap() && der0.intersect(&fphi).unwrap().dim() == 0, || {
            format!("{spec}: P != Der_0 + F phi")
        })?;
        let a = combination(spec, 8, &[(U1, 1), (V1, -1)]);
        let b = combination(spec, 8, &[(U2, 1), (V3, 1)]);
        let verdict = pair_interpolate(&s.der, &phi, &a, &b).unwrap();
        ensure(!verdict.solvable, || format!("{spec}: phi interpolates at (u1 - v1, u2 + v3)"))?;
        let phi_b = phi.mul_vec(&b).unwrap();
        let minus_v3 = combination(spec, 8, &[(V3, -1)]);
        ensure(phi_b == minus_v3, || format!("{spec}: phi(u2 + v3) = {}", format_canonical(&phi_b)))?;
        let prod = c.mul(&a, &minus_v3);
        ensure(prod == combination(spec, 8, &[(U2, -1)]), || {
            format!("{spec}: (u1 - v1)(-v3) = {}", format_canonical(&prod))
        })?;
    }
    Ok("5 fields: dim P = 9 = Der_0 + F phi, (u1 - v1, u2 + v3) not solvable, phi(b) = -v3, a(-v3) = -u2".into())
}

fn stabilizer_orbits() -> Verdict {
    let mut problems = Vec::new();
    for spec in split_fields() {
        let c = split_cayley(spec);
        let der = derivation_algebra(c.alg());
        let v = |t: &[(usize, i64)]| combination(spec, 8, t);
        let l = der.stabilizer(&[c.basis_vector(E1), c.basis_vector(E2)]).unwrap();
        let lp = der.stabilizer(&[v(&[(U1, 1), (V1, 1)])]).unwrap();

        let got = l.eval_subspace(&v(&[(U1, 1), (V1, 1)])).unwrap();
        let printed = span(spec, &[&[(U1, 1), (V1, -1)], &[(U2, 1)], &[(U3, 1)], &[(V2, 1)], &[(V3, 1)]]);
        if got != printed || got.dim() != 5 {
            problems.push(format!("{spec}: L(u1 + v1)"));
        }

        let printed = span(spec, &[&[(E1, 1), (E2, -1)], &[(U2, 1)], &[(U3, 1)], &[(V2, 1)], &[(V3, 1)]]);
        for mu in mu_test_set(spec) {
            let x = cayley_core::linalg::add(&c.basis_vector(U1), &scale(&mu, &c.basis_vector(V1)));
            let got = lp.eval_subspace(&x).unwrap();
            if got != printed || got.dim() != 5 {
                problems.push(format!("{spec}: L'(u1 + {mu} v1)"));
            }
        }

        let got = lp.eval_subspace(&v(&[(U2, 1), (V2, 1)])).unwrap();
        let printed = span(
            spec,
            &[&[(E1, 1), (E2, -1)], &[(U1, 1), (V1, 1)], &[(U2, 1), (V2, -1)], &[(U3, 1)], &[(V3, 1)]],
        );
        if got != printed || got.dim() != 5 {
            let contains = got.contains(&v(&[(U1, 1), (V1, 1)])).unwrap();
            let basis: Vec<String> = got.basis_vectors().iter().map(|b| format_canonical(b)).collect();
            problems.push(format!(
                "{spec}: L'(u2 + v2) has dim {} with basis [{}], contains u1 + v1: {contains}",
                got.dim(),
                basis.join(", ")
            ));
        }
    }
    if problems.is_empty() {
        Ok("5 fields: all three orbits equal the stated spans, dimension 5".into())
    } else {
        // Every d in L' is skew and kills u1 + v1, so L'(u2 + v2) is orthogonal to
        // u1 + v1; since n(u1 + v1, u1 + v1) = 2, the stated span containing
        // u1 + v1 is impossible outside characteristic 2. The computed orbit is
        // span(e1 - e2, u1 - v1, u2 - v2, u3, v3).
        Err(format!(
            "{}; stated span for L'(u2 + v2) contains u1 + v1, which is not orthogonal to itself when char != 2",
            problems.join("; ")
        ))
    }
}

fn division_two_local() -> Verdict {
    let c = division_octonions_q();
    let subject = Subject::new(c.clone());
    let samples = SampleSpec::default();
    let mut checks = run_suite(Suite::DivisionTwoLocal, &subject, &samples).map_err(|e| e.to_string())?;
    checks.extend(run_suite(Suite::DivisionStabilizers, &subject, &samples).map_err(|e| e.to_string())?);
    for o in &checks {
        ensure(o.passed(), || format!("{o}"))?;
    }
    let dims = |id: &str, key: &str| checks.iter().find(|o| o.id == id).and_then(|o| o.dims.get(key).copied()).unwrap_or(0);
    ensure(dims("thm45.interpolation", "maps") == 21, || "interpolation did not cover 21 maps".into())?;
    let systems = dims("thm45.interpolation", "systems");
    ensure(systems >= 21 * 200, || format!("only {systems} interpolation systems"))?;
    let pairs = dims("cor44.stabilizer_orbits", "pairs");
    ensure(pairs >= 200, || format!("only {pairs} stabilizer pairs"))?;

    let s = &subject.spaces;
    let delta = s.locder.basis_maps().into_iter().find(|m| !s.der.contains(m).unwrap());
    let delta = delta.ok_or("LocDer = Der")?;
    Ok(format!(
        "{systems} systems solvable, {pairs} pairs with Sy = (F1 + Fx + Fy)^perp, Delta = {} not in Der",
        format_matrix(&delta)
    ))
}

fn malcev_jordan() -> Verdict {
    let triples = SampleSpec::new(42, 500);
    let mut jacobi_witness = false;
    for spec in split_fields().into_iter().filter(|f| f.characteristic() != 2) {
        let c = split_cayley(spec);
        let minus = minus_algebra(&c).unwrap();
        let pool = triples.triples(spec, 7);
        ensure(pool.len() >= 500, || format!("{spec}: only {} triples", pool.len()))?;
        for [x, y, z] in &pool {
            let zero = |v: &Vector| v.iter().all(|a| a.is_zero());
            ensure(zero(&malcev_defect(&minus, x, y, z)), || format!("{spec}: Malcev fails at {x:?}, {y:?}, {z:?}"))?;
            let jacobi = zero(&jacobi_defect(&minus, x, y, z));
            if spec.characteristic() == 3 {
                ensure(jacobi, || format!("{spec}: Jacobi fails at {x:?}, {y:?}, {z:?}"))?;
            } else if spec == FieldSpec::Rational && !jacobi {
                jacobi_witness = true;
            }
        }
        let s = DerivationSpaces::compute(&c);
        let der_minus = derivation_algebra(&minus);
        let images: Vec<_> = s.der.basis_maps().iter().map(|d| s.frame.restrict(d).unwrap().unwrap()).collect();
        let image = MapSpace::span(MapKind::Custom, spec, 7, &images).unwrap();
        ensure(der_minus.dim() == 14 && image.dim() == 14 && image.equal(&der_minus).unwrap(), || {
            format!("{spec}: dim Der(C0^-) = {}, image of restriction = {}", der_minus.dim(), image.dim())
        })?;
        let der_plus = derivation_algebra(&plus_algebra(&c).unwrap());
        ensure(der_plus.dim() == 21, || format!("{spec}: dim Der(C^+) = {}", der_plus.dim()))?;
    }
    ensure(jacobi_witness, || "no Jacobi failure found over q".into())?;
    Ok("q, gf:3, gf:5, gf:7: Malcev on >= 500 triples, Der(C0^-) = 14 by restriction, Der(C^+) = 21, Jacobi fails over q and holds over gf:3".into())
}

fn axioms_and_mutation() -> Verdict {
    let samples = SampleSpec::default();
    let mut algebras = all_algebras();
    for p in [3, 5, 7] {
        let f = FieldSpec::prime(p).unwrap();
        algebras.push((format!("cd(-1,-1,-1)/{f}"), cd_octonions(f, std::array::from_fn(|_| f.from_i64(-1))).unwrap()));
    }
    let mut pairs_checked = 0;
    for (name, c) in &algebras {
        let pairs = samples.pairs(c.spec(), 8);
        let report = check_identities(c, &pairs);
        ensure(report.passed(), || format!("{name}: {:?}", report.failure))?;
        pairs_checked += report.pairs_checked;

        let replacement = if c.alg().product(2, 3)[6].is_zero() { 6 } else { 5 };
        let corrupted = c.with_product(2, 3, c.basis_vector(replacement)).map_err(|e| e.to_string())?;
        let report = check_identities(&corrupted, &pairs);
        ensure(report.failure.is_some(), || format!("{name}: corrupted table accepted"))?;
    }
    Ok(format!("{} algebras, {pairs_checked} pairs, every corrupted table rejected with a witness", algebras.len()))
}

fn determinism() -> Verdict {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_cayley"))
            .args(["verify", "--suite", "all", "--seed", "42", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(a.status.success(), || format!("verify exited with {:?}", a.status.code()))?;
    ensure(a.stdout == b.stdout && !a.stdout.is_empty(), || "reports differ".into())?;
    Ok(format!("two runs, {} identical bytes", a.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("dimension table", dimension_table),
        ("orbits Der(C)x", orbit_complements),
        ("split 2-local skeleton", split_skeleton),
        ("stabilizer orbit spans", stabilizer_orbits),
        ("division 2-local", division_two_local),
        ("Malcev and Jordan algebras", malcev_jordan),
        ("axioms and mutation", axioms_and_mutation),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(msg) => println!("criterion {} PASS {name}: {msg}", k + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {} FAIL {name}: {msg}", k + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
