mod common;

use common::*;
use curvact::algebra::{GaussianRational as G, HomogPoly, P1Point};
use curvact::invariants::{
    associated_curve, curve_invariants, plucker_genus, ramification_profile, singular_parameters, CurveMap,
};
use curvact::monomial::{make_monomial_curve, ExponentTuple};
use curvact::projective::PnPoint;
use curvact::Error;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn hp(d: u32, terms: &[(u32, i64)]) -> HomogPoly {
    HomogPoly::from_terms(d, terms.iter().map(|&(ez, c)| (ez, d - ez, int(c)))).unwrap()
}

fn pt(z: i64, w: i64) -> P1Point {
    P1Point::new(int(z), int(w)).unwrap()
}

fn xi(k: &[u32], n: usize) -> CurveMap {
    make_monomial_curve(&ExponentTuple::new(k.to_vec(), n).unwrap())
}

/// A curve with prescribed exponents at `[0,1]`, moved by a random projective
/// transform and reparametrization. Returns the curve and the special parameter.
fn planted(r: &mut ChaCha8Rng, n: usize, d: u32) -> (CurveMap, P1Point) {
    loop {
        let mut exps: Vec<u32> = (1..=d).collect();
        while exps.len() > n {
            exps.remove(r.gen_range(0..exps.len()));
        }
        exps.insert(0, 0);
        let coords = exps
            .iter()
            .map(|&a| {
                let mut tail = rand_homog(r, d - a, 3);
                tail = &tail + &HomogPoly::monomial(int(1), 0, d - a);
                &HomogPoly::monomial(int(1), a, 0) * &tail
            })
            .collect();
        let Ok(psi) = CurveMap::new(coords) else { continue };
        if !psi.is_nondegenerate() {
            continue;
        }
        let h = rand_transform(r, n, 3);
        let m = rand_mobius(r, 3);
        let moved = psi.transform(&h).unwrap().reparametrize(&m);
        return (moved, m.inverse().apply(&P1Point::zero_one()));
    }
}

#[test]
fn associated_curve_examples() {
    let conic = xi(&[2, 1], 2);
    assert_eq!(associated_curve(&conic, 0).unwrap(), conic);
    let dual = associated_curve(&conic, 1).unwrap();
    assert_eq!(dual.degree(), 2);
    // minors of [[z², z, 1], [2z, 1, 0]] are −z², −2z, −1
    let want = CurveMap::new(vec![hp(2, &[(2, 1)]), hp(2, &[(1, 2)]), hp(2, &[(0, 1)])]).unwrap();
    assert!(dual.same_map(&want));

    let flat = CurveMap::new(vec![hp(2, &[(2, 1)]), hp(2, &[(0, 1)]), HomogPoly::zero(2)]).unwrap();
    match associated_curve(&flat, 1) {
        Err(Error::Degenerate { span }) => {
            assert_eq!(span.dim(), 1);
            assert!(span.contains(&PnPoint::from_ints(&[1, 0, 0]).unwrap()));
            assert!(span.contains(&PnPoint::from_ints(&[0, 1, 0]).unwrap()));
        }
        other => panic!("expected a degeneracy error, got {other:?}"),
    }
    assert!(matches!(associated_curve(&conic, 2), Err(Error::OutOfRange(_))));
}

#[test]
fn common_factor_is_rejected() {
    let e = CurveMap::new(vec![hp(2, &[(2, 1)]), hp(2, &[(1, 1)]), HomogPoly::zero(2)]);
    assert!(matches!(e, Err(Error::DegenerateInput(_))));
}

#[test]
fn associated_curves_match_minors() {
    let mut r = rng(41);
    for _ in 0..10 {
        let n = r.gen_range(2..=3);
        let d = r.gen_range(n as u32..=5);
        let psi = rand_curve(&mut r, n, d, 3);
        for j in 0..n {
            let ours = associated_curve(&psi, j).unwrap();
            assert!(maps_agree(&wedge_minors(&psi, j), ours.coords()));
        }
    }
}

#[test]
fn ramification_examples() {
    let rnc = xi(&[3, 2, 1], 3);
    for t in [pt(1, 0), pt(0, 1), pt(2, -1), P1Point::new(G::i(), int(1)).unwrap()] {
        assert_eq!(ramification_profile(&rnc, &t).unwrap().s, vec![0, 0, 0]);
    }
    let cusp = xi(&[3, 1], 2);
    let at_inf = ramification_profile(&cusp, &pt(1, 0)).unwrap();
    assert_eq!((at_inf.alpha, at_inf.s), (vec![0, 2, 3], vec![1, 0]));
    let at_zero = ramification_profile(&cusp, &pt(0, 1)).unwrap();
    assert_eq!((at_zero.alpha, at_zero.s), (vec![0, 1, 3], vec![0, 1]));
}

#[test]
fn ramification_closed_forms_at_zero() {
    for k in [vec![5u32, 4, 1], vec![7, 3, 2], vec![4, 2, 1], vec![9, 5, 4, 1], vec![6, 5, 3, 2, 1]] {
        let n = k.len();
        let prof = ramification_profile(&xi(&k, n), &pt(0, 1)).unwrap();
        // s₀ = k_n − 1, s_j = k_{n−j} − k_{n−j+1} − 1 (1-based k)
        let kk = |i: usize| k[i - 1];
        let mut want = vec![kk(n) - 1];
        for j in 1..n {
            want.push(kk(n - j) - kk(n - j + 1) - 1);
        }
        assert_eq!(prof.s, want, "{k:?}");
        let mut sorted: Vec<u32> = k.iter().copied().chain([0]).collect();
        sorted.sort_unstable();
        assert_eq!(prof.alpha, sorted);
    }
}

#[test]
fn valuation_method_matches_definition() {
    let mut r = rng(42);
    for i in 0..20 {
        let n = 2 + i % 2;
        let (psi, special) = planted(&mut r, n, n as u32 + 2);
        let points = [special, pt(1, 0), pt(0, 1), rand_point(&mut r, 4)];
        for t in &points {
            let ours = ramification_profile(&psi, t).unwrap();
            let want = alpha_definitional(&psi, t);
            assert_eq!(ours.alpha, want, "curve {i} at {t:?}");
            assert_eq!(ours.s, gaps_of(&want));
        }
        for p in curve_invariants(&psi).unwrap().profiles {
            assert_eq!(p.alpha, alpha_definitional(&psi, &p.parameter));
        }
    }
}

#[test]
fn curve_invariant_examples() {
    let inv = curve_invariants(&xi(&[3, 2, 1], 3)).unwrap();
    assert_eq!((inv.r.clone(), inv.s_totals.clone(), inv.genus), (vec![3, 4, 3], vec![0, 0, 0], 0));
    assert!(inv.wpoints.is_empty());
    // each second difference is −2
    let padded = [0, 3, 4, 3, 0];
    assert!(padded.windows(3).all(|w| w[0] - 2 * w[1] + w[2] == -2));

    let inv = curve_invariants(&xi(&[3, 1], 2)).unwrap();
    assert_eq!((inv.r.clone(), inv.s_totals.clone(), inv.genus), (vec![3, 3], vec![1, 1], 0));
    assert_eq!(inv.wpoints, vec![pt(0, 1), pt(1, 0)]);
    assert_eq!(wedge_degree(&xi(&[3, 1], 2), 1), 3);

    let inv = curve_invariants(&xi(&[2, 1], 2)).unwrap();
    assert_eq!((inv.r.clone(), inv.genus), (vec![2, 2], 0));
}

#[test]
fn degrees_match_direct_wedges() {
    let mut r = rng(43);
    for i in 0..12 {
        let psi = if i % 2 == 0 {
            let n = r.gen_range(2..=3);
            let d = r.gen_range(n as u32..=5);
            rand_curve(&mut r, n, d, 3)
        } else {
            planted(&mut r, 3, 5).0
        };
        let inv = curve_invariants(&psi).unwrap();
        let want: Vec<u32> = (0..psi.n()).map(|j| wedge_degree(&psi, j)).collect();
        assert_eq!(inv.r, want);
        assert_eq!(plucker_genus(&inv.r, &inv.s_totals).unwrap(), 0);
    }
}

#[test]
fn monomial_wpoint_loci() {
    assert!(curve_invariants(&xi(&[4, 3, 2, 1], 4)).unwrap().wpoints.is_empty());
    for k in [vec![3u32, 1], vec![5, 2], vec![4, 2, 1], vec![5, 4, 1], vec![7, 3, 2, 1]] {
        let n = k.len();
        let inv = curve_invariants(&xi(&k, n)).unwrap();
        assert_eq!(inv.wpoints, vec![pt(0, 1), pt(1, 0)], "{k:?}");
    }
}

#[test]
fn sum_rule_for_split_loci() {
    let mut r = rng(44);
    let mut checked = 0;
    let mut curves: Vec<CurveMap> = [vec![3u32, 1], vec![5, 4, 1], vec![7, 3, 2], vec![4, 3, 2, 1]]
        .iter()
        .map(|k| xi(k, k.len()))
        .collect();
    curves.extend((0..8).map(|_| planted(&mut r, 3, 4).0));
    for psi in &curves {
        let inv = curve_invariants(psi).unwrap();
        if !inv.wlocus_splits() {
            continue;
        }
        let n = psi.n() as u32;
        assert_eq!(inv.s_totals.iter().sum::<u32>() + 2 * n, inv.r[0] + inv.r[n as usize - 1]);
        checked += 1;
    }
    assert!(checked >= 4);
}

#[test]
fn reparametrization_invariance() {
    let mut r = rng(45);
    for k in [vec![3u32, 1], vec![5, 4, 1], vec![4, 2, 1]] {
        let psi = xi(&k, k.len());
        let base = curve_invariants(&psi).unwrap();
        for _ in 0..3 {
            let m = rand_mobius(&mut r, 3);
            let inv = curve_invariants(&psi.reparametrize(&m)).unwrap();
            assert_eq!((&inv.r, &inv.s_totals, inv.genus), (&base.r, &base.s_totals, base.genus));
            let mut moved: Vec<P1Point> = base.wpoints.iter().map(|t| m.inverse().apply(t)).collect();
            moved.sort();
            assert_eq!(inv.wpoints, moved);
        }
    }
}

#[test]
fn projective_invariance() {
    let mut r = rng(46);
    for i in 0..8 {
        let psi = if i < 4 { xi(&[5, 3, 1], 3) } else { planted(&mut r, 3, 4).0 };
        let base = curve_invariants(&psi).unwrap();
        let h = rand_transform(&mut r, 3, 3);
        let inv = curve_invariants(&psi.transform(&h).unwrap()).unwrap();
        assert_eq!(inv.r, base.r);
        assert_eq!(inv.s_totals, base.s_totals);
        assert_eq!(inv.genus, base.genus);
        assert_eq!(inv.wpoints, base.wpoints);
    }
}

#[test]
fn singular_examples() {
    assert!(singular_parameters(&xi(&[3, 2, 1], 3)).unwrap().is_empty());
    assert!(singular_parameters(&xi(&[2, 1], 2)).unwrap().is_empty());

    // (1, w², w³) at [1,0] is a cusp; (z³, z, 1) at [0,1] is a flex
    let sp = singular_parameters(&xi(&[3, 1], 2)).unwrap();
    assert_eq!(sp.cusps, vec![pt(1, 0)]);
    assert_eq!(ramification_profile(&xi(&[3, 1], 2), &pt(0, 1)).unwrap().s[0], 0);
    assert_eq!(sp.nodes(), 0);

    // y² = x²(x + 1) via x = t² − 1, y = t(t² − 1): the node sits at t = ±1
    let nodal = CurveMap::new(vec![hp(3, &[(2, 1), (0, -1)]), hp(3, &[(3, 1), (1, -1)]), hp(3, &[(0, 1)])]).unwrap();
    let sp = singular_parameters(&nodal).unwrap();
    assert!(sp.cusps.is_empty());
    assert_eq!(sp.multiple_points, vec![vec![pt(1, -1), pt(1, 1)]]);
    assert!(sp.birational);
    assert_eq!(nodal.eval(&pt(1, 1)), nodal.eval(&pt(1, -1)));
}

#[test]
fn nodal_cubic_by_brute_elimination() {
    // for fixed s, the double-point equations in t have a common root
    // exactly when s is a node parameter
    let nodal = CurveMap::new(vec![hp(3, &[(2, 1), (0, -1)]), hp(3, &[(3, 1), (1, -1)]), hp(3, &[(0, 1)])]).unwrap();
    let f = affine_coords(&nodal);
    let mut hits = Vec::new();
    for a in -4..=4 {
        for den in 1..=3 {
            let s = G::from_fracs(a, den, 0, 1);
            let t_minus_s: P = vec![-&s, int(1)];
            let mut g: P = Vec::new();
            for i in 0..3 {
                for j in i + 1..3 {
                    let eq = sub(&f[j].iter().map(|c| c * &eval(&f[i], &s)).collect(), &f[i].iter().map(|c| c * &eval(&f[j], &s)).collect());
                    // strip the diagonal factor t − s
                    let mut q = eq;
                    while !q.is_empty() && eval(&q, &s).is_zero() {
                        q = div_linear(&q, &s);
                    }
                    let _ = &t_minus_s;
                    g = gcd(&g, &q);
                }
            }
            if deg(&g).unwrap_or(0) > 0 && !hits.contains(&s) {
                hits.push(s);
            }
        }
    }
    hits.sort_by_key(|g| format!("{g:?}"));
    assert_eq!(hits, vec![int(-1), int(1)]);
}

/// Quotient by `t − s` of a polynomial vanishing at `s`.
fn div_linear(p: &P, s: &G) -> P {
    let mut q = vec![G::zero(); p.len() - 1];
    let mut carry = G::zero();
    for k in (1..p.len()).rev() {
        carry = &p[k] + &(&carry * s);
        q[k - 1] = carry.clone();
    }
    trim(q)
}
