use nalgebra::DMatrix;

use confined_hydrogen::numerics::{gauss_lobatto, kummer_1f1, spherical_bessel_j, sym_eig, CollocationGrid};

/// Eigenvalues of `h` below `x`, from the signs of the LDL^T pivots of `h - x I`.
fn count_below(h: &DMatrix<f64>, x: f64) -> usize {
    let n = h.nrows();
    let mut a = h.clone();
    for i in 0..n {
        a[(i, i)] -= x;
    }
    let mut negative = 0;
    for k in 0..n {
        let pivot = a[(k, k)];
        if pivot < 0.0 {
            negative += 1;
        }
        for i in k + 1..n {
            let f = a[(i, k)] / pivot;
            for j in k + 1..n {
                a[(i, j)] -= f * a[(k, j)];
            }
        }
    }
    negative
}

fn bisect_eigenvalue(h: &DMatrix<f64>, index: usize) -> f64 {
    let bound = h.row_iter().map(|r| r.iter().map(|v| v.abs()).sum::<f64>()).fold(0.0, f64::max);
    let (mut lo, mut hi) = (-bound, bound);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if count_below(h, mid) > index {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

#[test]
fn hilbert_eigenvalues_by_inertia() {
    let h = DMatrix::from_fn(8, 8, |i, j| 1.0 / (i + j + 1) as f64);
    let eig = sym_eig(&h).unwrap();
    for k in 0..8 {
        let oracle = bisect_eigenvalue(&h, k);
        assert!((eig.values[k] - oracle).abs() < 1e-9, "k={k}: {} vs {oracle}", eig.values[k]);
    }
    // extreme eigenvalues at 40 digits: 1.6959389969219494521, 1.1115389663724424271e-10
    assert!((eig.values[7] - 1.695938996921949).abs() < 1e-12);
    assert!((eig.values[0] - 1.111_538_966_372_442_4e-10).abs() < 1e-18);
}

#[test]
fn kummer_special_cases() {
    assert_eq!(kummer_1f1(0.7, 1.5, 0.0).unwrap(), 1.0);
    assert!((kummer_1f1(1.0, 1.0, 1.0).unwrap() - std::f64::consts::E).abs() < 1e-15);
    assert_eq!(kummer_1f1(-1.0, 2.0, 2.0).unwrap(), 0.0);
    assert!(kummer_1f1(1.0, -2.0, 1.0).is_err());
    assert!(kummer_1f1(1.0, 0.0, 1.0).is_err());
}

#[test]
fn bessel_limits() {
    assert!(spherical_bessel_j(0, std::f64::consts::PI).abs() < 1e-16);
    assert_eq!(spherical_bessel_j(1, 0.0), 0.0);
}

#[test]
fn collocation_grid_invariants() {
    let g = CollocationGrid::lobatto(40, 3.0).unwrap();
    assert_eq!(g.nodes[0], 0.0);
    assert!((g.nodes[39] - 3.0).abs() < 1e-15);
    assert!(g.nodes.windows(2).all(|w| w[0] < w[1]));
    assert!(g.weights.iter().all(|w| *w > 0.0));
    for k in 1..20 {
        let f: Vec<f64> = g.nodes.iter().map(|r| r.powi(k)).collect();
        let d = g.derivative(&f);
        let scale = k as f64 * 3f64.powi(k - 1);
        for (i, r) in g.nodes.iter().enumerate().skip(1).take(38) {
            let want = k as f64 * r.powi(k - 1);
            assert!((d[i] - want).abs() <= 1e-12 * scale, "k={k} r={r}");
        }
    }
    assert!(gauss_lobatto(2).is_err());
}
