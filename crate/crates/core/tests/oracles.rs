//! Frozen values checked against independent computations.

use cayley_core::algebra::derive_form;
use cayley_core::construct::*;
use cayley_core::derivation::{derivation_algebra, graded_component_0, DerivationSpaces, MapKind, MapSpace, TraceZeroFrame};
use cayley_core::field::FieldSpec;
use cayley_core::linalg::{nullspace, vector_from_i64, Matrix, Subspace};
use cayley_core::suite::{minus_algebra, plus_algebra};

fn fields() -> Vec<FieldSpec> {
    let mut v = vec![FieldSpec::Rational];
    v.extend([2, 3, 5, 7].map(|p| FieldSpec::prime(p).unwrap()));
    v
}

/// Hand-written derivation matrix on the canonical basis (column j holds
/// d(b_j)), fourteen parameters: six off-diagonal ones coupling K with U
/// and V, and a traceless 3x3 block on U mirrored on V.
fn parametrized(p: [i64; 14]) -> Vec<Vec<i64>> {
    let [al, be, ga, alp, bep, gap, a11, a12, a13, a21, a22, a23, a31, a32] = p;
    let a33 = -a11 - a22;
    vec![
        vec![0, 0, alp, bep, gap, -al, -be, -ga],
        vec![0, 0, -alp, -bep, -gap, al, be, ga],
        vec![-al, al, a11, a12, a13, 0, gap, -bep],
        vec![-be, be, a21, a22, a23, -gap, 0, alp],
        vec![-ga, ga, a31, a32, a33, bep, -alp, 0],
        vec![alp, -alp, 0, ga, -be, -a11, -a21, -a31],
        vec![bep, -bep, -ga, 0, al, -a12, -a22, -a32],
        vec![gap, -gap, be, -al, 0, -a13, -a23, -a33],
    ]
}

fn param_maps(spec: FieldSpec) -> Vec<Matrix> {
    (0..14)
        .map(|k| {
            let mut p = [0i64; 14];
            p[k] = 1;
            let rows = parametrized(p);
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            Matrix::from_i64(spec, &refs)
        })
        .collect()
}

#[test]
fn parametrized_matrices_span_der() {
    for spec in fields() {
        let c = split_cayley(spec);
        let der = derivation_algebra(c.alg());
        let maps = param_maps(spec);
        for m in &maps {
            assert!(der.contains(m).unwrap(), "{spec}");
        }
        assert!(MapSpace::span(MapKind::Custom, spec, 8, &maps).unwrap().equal(&der).unwrap());
        // with the six K-coupling parameters zero only the traceless block survives
        let block = MapSpace::span(MapKind::Custom, spec, 8, &maps[6..]).unwrap();
        assert_eq!(block.dim(), 8);
        assert!(block.equal(&graded_component_0(&c).unwrap()).unwrap());
        let l = der.stabilizer(&[c.basis_vector(E1), c.basis_vector(E2)]).unwrap();
        assert!(l.equal(&block).unwrap());
    }
}

#[test]
fn split_table_entries() {
    for spec in fields() {
        let c = split_cayley(spec);
        let b = |i| c.basis_vector(i);
        let v = |t: &[(usize, i64)]| combination(spec, 8, t);
        assert_eq!(c.mul(&b(U1), &b(U2)), v(&[(V3, 1)]));
        assert_eq!(c.mul(&b(U1), &b(V1)), v(&[(E1, -1)]));
        assert_eq!(c.mul(&b(V1), &b(V2)), v(&[(U3, 1)]));
        assert_eq!(c.mul(&b(U3), &b(V1)), v(&[]));
        assert_eq!(c.mul(&b(V3), &b(V1)), v(&[(U2, 1)]));
        assert_eq!(c.mul(c.unit(), &b(V2)), b(V2));
    }
}

#[test]
fn split_gram_invariants() {
    for spec in fields() {
        let c = split_cayley(spec);
        let f = c.form();
        let pairs = [(E1, E2), (U1, V1), (U2, V2), (U3, V3)];
        for i in 0..8 {
            assert!(f.basis_norms()[i].is_zero());
            for j in 0..8 {
                let hyp = pairs.iter().any(|&(a, b)| (a, b) == (i, j) || (b, a) == (i, j));
                assert_eq!(f.polar_gram().get(i, j).is_one(), hyp);
                assert_eq!(f.polar_gram().get(i, j).is_zero(), !hyp);
            }
        }
        assert_eq!(c.polar(&c.basis_vector(U1), &c.basis_vector(V1)).unwrap(), spec.one());
        assert_eq!(c.norm(&c.basis_vector(U1)).unwrap(), spec.zero());
        assert_eq!(c.trace(&c.basis_vector(E1)).unwrap(), spec.one());
        assert_eq!(c.trace(c.unit()).unwrap(), spec.from_i64(2));
    }
}

#[test]
fn trace_zero_contains_unit_only_in_characteristic_two() {
    for spec in fields() {
        let c = split_cayley(spec);
        let c0 = c.trace_zero_subspace();
        assert_eq!(c0.dim(), 7);
        assert_eq!(c0.contains(c.unit()).unwrap(), spec.characteristic() == 2);
        assert!(c0.contains(&combination(spec, 8, &[(E1, 1), (E2, -1)])).unwrap());
    }
}

#[test]
fn complement_of_one_and_u1() {
    // the 2 x 8 system n(1, v) = n(u1, v) = 0 written out by hand:
    // n(1, v) = v_e1 + v_e2 and n(u1, v) = v_v1
    for spec in fields() {
        let c = split_cayley(spec);
        let mut row1 = [0i64; 8];
        row1[E1] = 1;
        row1[E2] = 1;
        let mut row2 = [0i64; 8];
        row2[V1] = 1;
        let direct = nullspace(&Matrix::from_i64(spec, &[&row1, &row2]));
        let s = Subspace::span(spec, 8, &[c.unit().clone(), c.basis_vector(U1)]).unwrap();
        let perp = s.orth_complement(c.form().polar_gram()).unwrap();
        assert_eq!(perp.dim(), 6);
        assert_eq!(perp, direct);
    }
}

#[test]
fn division_octonions_are_sums_of_squares() {
    let c = division_octonions_q();
    let q = FieldSpec::Rational;
    let x = vector_from_i64(q, &[1, -2, 3, 0, 5, -1, 2, 4]);
    assert_eq!(c.norm(&x).unwrap(), q.from_i64(1 + 4 + 9 + 25 + 1 + 4 + 16));
    assert_eq!(c.norm(&vector_from_i64(q, &[1; 8])).unwrap(), q.from_i64(8));
    for i in 1..8 {
        let b = c.basis_vector(i);
        assert_eq!(c.mul(&b, &b), vector_from_i64(q, &[-1, 0, 0, 0, 0, 0, 0, 0]));
    }
    assert_eq!(classify_isotropy(&c), Isotropy::Division);
}

#[test]
fn table_derived_norm_matches_doubling_norm() {
    let q = FieldSpec::Rational;
    for mus in [[-1, -1, -1], [-1, -2, -3], [2, -1, 3]] {
        let c = cd_octonions(q, mus.map(|m| q.from_i64(m))).unwrap();
        assert_eq!(&derive_form(c.alg()).unwrap(), c.form());
    }
}

#[test]
fn doubling_over_gf5_is_split() {
    let f5 = FieldSpec::prime(5).unwrap();
    let h = cd_tower(f5, &[f5.one(), f5.one()]).unwrap();
    assert_eq!(h.dim(), 4);
    // exhaustive search over GF(5)^4 for a nonzero isotropic vector
    let found = (1..625i64).find(|&k| {
        let v = vector_from_i64(f5, &[k % 5, k / 5 % 5, k / 25 % 5, k / 125]);
        h.norm(&v).unwrap().is_zero()
    });
    assert!(found.is_some());
    assert!(matches!(classify_isotropy(&h), Isotropy::Split(_)));
    let o = cd_octonions(f5, std::array::from_fn(|_| f5.from_i64(-1))).unwrap();
    match classify_isotropy(&o) {
        Isotropy::Split(w) => assert!(o.norm(&w).unwrap().is_zero()),
        other => panic!("expected split, got {}", other.name()),
    }
}

#[test]
fn minus_and_plus_products() {
    let q = FieldSpec::Rational;
    let c = split_cayley(q);
    let frame = TraceZeroFrame::new(&c);
    let minus = minus_algebra(&c).unwrap();
    let u1 = frame.coordinates(&c.basis_vector(U1)).unwrap().unwrap();
    let v1 = frame.coordinates(&c.basis_vector(V1)).unwrap().unwrap();
    let bracket = frame.embed(&minus.mul(&u1, &v1));
    let half = q.fraction(1, 2).unwrap();
    let mut expect = vec![q.zero(); 8];
    expect[E1] = -&half;
    expect[E2] = half.clone();
    assert_eq!(bracket, expect);
    for i in 0..7 {
        let b = frame.coordinates(&frame.basis[i]).unwrap().unwrap();
        assert!(minus.mul(&b, &b).iter().all(|x| x.is_zero()));
    }

    let plus = plus_algebra(&c).unwrap();
    let jordan = plus.mul(&c.basis_vector(U1), &c.basis_vector(V1));
    assert_eq!(jordan, cayley_core::linalg::scale(&-&half, c.unit()));
}

#[test]
fn orbit_examples() {
    for spec in fields() {
        let c = split_cayley(spec);
        let s = DerivationSpaces::compute(&c);
        assert_eq!(s.der.eval_subspace(c.unit()).unwrap().dim(), 0);
        let expect = Subspace::span(
            spec,
            8,
            &[
                combination(spec, 8, &[(E1, 1), (E2, -1)]),
                c.basis_vector(U1),
                c.basis_vector(U2),
                c.basis_vector(U3),
                c.basis_vector(V2),
                c.basis_vector(V3),
            ],
        )
        .unwrap();
        assert_eq!(s.der.eval_subspace(&c.basis_vector(U1)).unwrap(), expect);
        assert!(s.der.stabilizer(&[c.unit().clone()]).unwrap().equal(&s.der).unwrap());
    }
}
