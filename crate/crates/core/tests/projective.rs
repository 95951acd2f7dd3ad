mod common;

use common::*;
use curvact::algebra::GaussianRational as G;
use curvact::linalg::Matrix;
use curvact::projective::{
    apply, classify_transform, combinations, fixed_points, span, wedge_power, Elliptic, Order, PnPoint,
    ProjSubspace, ProjTransform,
};
use curvact::Error;

fn diag(entries: &[G]) -> ProjTransform {
    ProjTransform::diagonal(entries).unwrap()
}

fn ints(v: &[i64]) -> Vec<G> {
    v.iter().map(|&x| int(x)).collect()
}

fn j2() -> ProjTransform {
    ProjTransform::from_int_rows(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]]).unwrap()
}

fn is_scalar_power(t: &ProjTransform, k: u64) -> bool {
    let mut acc = Matrix::identity(t.n() + 1);
    for _ in 0..k {
        acc = mat_mul(&acc, t.matrix());
    }
    acc.is_scalar()
}

#[test]
fn apply_examples() {
    let x = PnPoint::from_ints(&[3, -1, 2]).unwrap();
    assert_eq!(apply(&ProjTransform::identity(2), &x).unwrap(), x);
    let y = apply(&diag(&ints(&[4, 2, 1])), &PnPoint::from_ints(&[1, 1, 1]).unwrap()).unwrap();
    assert_eq!(y.coords(), &[int(1), G::from_fracs(1, 2, 0, 1), G::from_fracs(1, 4, 0, 1)]);
    let e = apply(&j2(), &PnPoint::from_ints(&[1, 0, 0]).unwrap()).unwrap();
    assert_eq!(e, PnPoint::from_ints(&[0, 0, 1]).unwrap());
}

#[test]
fn apply_dimension_mismatch() {
    let x = PnPoint::from_ints(&[1, 2]).unwrap();
    assert!(matches!(apply(&j2(), &x), Err(Error::DimensionMismatch { .. })));
}

#[test]
fn span_examples() {
    let p = |c: &[i64]| PnPoint::from_ints(c).unwrap();
    assert_eq!(span(&[p(&[1, 0, 0])]).unwrap().dim(), 0);
    let line = span(&[p(&[1, 0, 0]), p(&[0, 1, 0]), p(&[1, 1, 0])]).unwrap();
    assert_eq!(line.dim(), 1);
    assert!(line.contains(&p(&[5, -3, 0])));
    assert!(!line.contains(&p(&[0, 0, 1])));
    let all: Vec<PnPoint> = (0..4).map(|i| PnPoint::basis(3, i)).collect();
    assert_eq!(span(&all).unwrap(), ProjSubspace::whole(3));
}

#[test]
fn wedge_power_examples() {
    assert!(wedge_power(&ProjTransform::identity(3), 1).unwrap().is_identity());
    assert!(wedge_power(&ProjTransform::identity(3), 2).unwrap().is_identity());
    let (a, b, c) = (int(2), G::from_ints(1, 3), G::from_fracs(-1, 5, 0, 1));
    let w = wedge_power(&diag(&[a.clone(), b.clone(), c.clone()]), 1).unwrap();
    assert_eq!(w, diag(&[&a * &b, &a * &c, &b * &c]));
    assert!(matches!(wedge_power(&j2(), 2), Err(Error::OutOfRange(_))));
}

/// Wedge power from (k+1)-minors computed by cofactor expansion.
fn wedge_oracle(m: &Matrix, k: usize) -> ProjTransform {
    let sets = combinations(m.rows(), k + 1);
    let rows = sets
        .iter()
        .map(|r| {
            sets.iter()
                .map(|c| det_g(&r.iter().map(|&i| c.iter().map(|&j| m[(i, j)].clone()).collect()).collect::<Vec<_>>()))
                .collect()
        })
        .collect();
    ProjTransform::from_rows(rows).unwrap()
}

#[test]
fn wedge_power_is_multiplicative() {
    let mut r = rng(21);
    for _ in 0..20 {
        let a = rand_transform(&mut r, 2, 4);
        let b = rand_transform(&mut r, 2, 4);
        let product = mat_mul(a.matrix(), b.matrix());
        let lhs = wedge_power(&a.compose(&b), 1).unwrap();
        assert_eq!(lhs, wedge_oracle(&product, 1));
        let rhs = wedge_power(&a, 1).unwrap().compose(&wedge_power(&b, 1).unwrap());
        assert_eq!(lhs, rhs);
    }
    // P³ with k = 1 gives a 6×6 wedge
    let a = rand_transform(&mut r, 3, 3);
    let b = rand_transform(&mut r, 3, 3);
    let lhs = wedge_power(&a.compose(&b), 1).unwrap();
    assert_eq!(lhs, wedge_oracle(&mat_mul(a.matrix(), b.matrix()), 1));
}

#[test]
fn classify_examples() {
    let t = diag(&[int(1), G::i(), int(-1)]);
    let c = classify_transform(&t, 360);
    assert_eq!(c.order, Order::Finite(4));
    assert_eq!(c.elliptic, Elliptic::Yes);
    assert!(is_scalar_power(&t, 4) && !is_scalar_power(&t, 2));

    let t = diag(&ints(&[2, 1, 1]));
    let c = classify_transform(&t, 360);
    assert_eq!((c.order, c.elliptic), (Order::Infinite, Elliptic::No));
    assert!((1..=20).all(|k| !is_scalar_power(&t, k)));

    let t = diag(&[G::from_fracs(3, 5, 4, 5), int(1), int(1)]);
    let c = classify_transform(&t, 360);
    assert_eq!((c.order, c.elliptic), (Order::Infinite, Elliptic::Yes));
    assert!((1..=20).all(|k| !is_scalar_power(&t, k)));
}

#[test]
fn non_diagonalizable_has_infinite_order() {
    let t = ProjTransform::from_int_rows(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
    let c = classify_transform(&t, 360);
    assert_eq!((c.order, c.elliptic), (Order::Infinite, Elliptic::No));
}

#[test]
fn non_split_spectrum_uses_the_power_bound() {
    // order 3 rotation: eigenvalues are primitive cube roots of unity
    let t = ProjTransform::from_int_rows(&[&[0, -1], &[1, -1]]).unwrap();
    assert_eq!(classify_transform(&t, 360).order, Order::Finite(3));
    // x² − x + 2 has non-unit roots outside Q(i)
    let t = ProjTransform::from_int_rows(&[&[0, -2], &[1, 1]]).unwrap();
    let c = classify_transform(&t, 30);
    assert_eq!((c.order, c.elliptic), (Order::Undecided(30), Elliptic::Undecided));
}

#[test]
fn classification_is_conjugation_invariant() {
    let mut r = rng(22);
    let samples = [
        diag(&[int(1), G::i(), int(-1)]),
        diag(&ints(&[4, 2, 1])),
        diag(&[G::from_fracs(3, 5, 4, 5), int(1), int(1)]),
        diag(&ints(&[1, -1, 1])),
        ProjTransform::from_int_rows(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap(),
    ];
    for t in &samples {
        for _ in 0..4 {
            let h = rand_transform(&mut r, 2, 3);
            assert_eq!(classify_transform(t, 360), classify_transform(&t.conjugate_by(&h), 360));
        }
    }
}

#[test]
fn fixed_point_examples() {
    let fp = fixed_points(&ProjTransform::identity(2));
    assert_eq!(fp.eigen.len(), 1);
    assert_eq!(fp.eigen[0].value, int(1));
    assert_eq!(fp.eigen[0].eigenspace, ProjSubspace::whole(2));

    // the stored lift is canonically scaled: diag(1, 1/2, 1/4)
    let t = diag(&ints(&[4, 2, 1]));
    let fp = fixed_points(&t);
    assert!(fp.splits());
    assert_eq!(fp.eigen.len(), 3);
    for e in &fp.eigen {
        let p = &e.eigenspace.basis()[0];
        assert_eq!(e.eigenspace.dim(), 0);
        let axis = [4, 2, 1].iter().position(|&v| &e.value * &int(4) == int(v)).unwrap();
        assert_eq!(*p, PnPoint::basis(2, axis));
    }

    let rot = ProjTransform::from_int_rows(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 1]]).unwrap();
    let fp = fixed_points(&rot);
    assert!(fp.splits());
    // undo the canonical scaling of the stored lift
    let unscale = &int(-1) / &rot.matrix()[(0, 1)];
    let mut values: Vec<G> = fp.eigen.iter().map(|e| &e.value * &unscale).collect();
    values.sort_by_key(|v| format!("{v:?}"));
    let mut want = vec![G::i(), -&G::i(), int(1)];
    want.sort_by_key(|v| format!("{v:?}"));
    assert_eq!(values, want);
    for e in &fp.eigen {
        assert_eq!(e.eigenspace.dim(), 0);
        let p = &e.eigenspace.basis()[0];
        // fixed as a point, scaled by the eigenvalue as a vector
        assert_eq!(rot.apply(p).unwrap(), *p);
        let image = rot.apply_vec(p.coords());
        let scaled: Vec<G> = p.coords().iter().map(|c| c * &e.value).collect();
        assert_eq!(image, scaled);
    }
}

#[test]
fn finite_order_powers_fix_points() {
    let mut r = rng(23);
    let base = [
        diag(&[int(1), G::i(), int(-1)]),
        diag(&ints(&[1, -1, -1, 1])),
        ProjTransform::from_int_rows(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 1]]).unwrap(),
    ];
    for t in &base {
        let h = rand_transform(&mut r, t.n(), 3);
        let t = t.conjugate_by(&h);
        let Order::Finite(n) = classify_transform(&t, 360).order else { panic!("finite order expected") };
        let tn = t.pow(n);
        for _ in 0..10 {
            let x = PnPoint::new((0..=t.n()).map(|_| rand_nonzero(&mut r, 5)).collect()).unwrap();
            assert_eq!(tn.apply(&x).unwrap(), x);
        }
    }
}

#[test]
fn apply_respects_composition() {
    let mut r = rng(24);
    for i in 0..200 {
        let n = 1 + i % 3;
        let a = rand_transform(&mut r, n, 3);
        let b = rand_transform(&mut r, n, 3);
        let x = PnPoint::new((0..=n).map(|_| rand_g(&mut r, 4)).collect::<Vec<_>>());
        let Ok(x) = x else { continue };
        assert_eq!(apply(&a.compose(&b), &x).unwrap(), apply(&a, &apply(&b, &x).unwrap()).unwrap());
    }
}

#[test]
fn matrix_json_has_dim() {
    let t = diag(&[G::from_fracs(1, 2, 0, 1), G::i(), int(1)]);
    let text = curvact::json::to_document(&t).unwrap();
    assert!(text.contains("\"dim\""));
    let back: ProjTransform = curvact::json::from_document(&text, "test").unwrap();
    assert_eq!(back, t);
}
