//! Direct transcription: discretize first, then optimize.
//!
//! For quadratic costs Σ q_i (x_i² + u_i²) under the linear constraint
//! (A x)_i = a·x_i + u_i for i ≥ 1, x_0 = x_a (and optionally x_{n-1} = x_b), the
//! discrete optimum is the solution of a linear KKT system. This never touches the
//! sweep, the costate equation or the right operator.

use nalgebra::{DMatrix, DVector};

pub struct Direct {
    pub x: Vec<f64>,
    pub u: Vec<f64>,
    pub cost: f64,
}

pub fn quadratic_direct(a_left: &DMatrix<f64>, q: &[f64], a: f64, x_a: f64, x_b: Option<f64>) -> Direct {
    let n = a_left.nrows();
    let m = n - 1;
    let mut mm = a_left.view((1, 1), (m, m)).clone_owned();
    for i in 0..m {
        mm[(i, i)] -= a;
    }
    let b0 = a_left.view((1, 0), (m, 1)).column(0) * x_a;
    // x_r = G u_r - c
    let g = mm.solve_lower_triangular(&DMatrix::identity(m, m)).expect("diagonal is nonzero");
    let c = &g * &b0;
    let qr = DVector::from_iterator(m, q[1..].iter().copied());
    let qg = DMatrix::from_fn(m, m, |i, j| qr[i] * g[(i, j)]);
    let mut h = g.transpose() * &qg;
    for i in 0..m {
        h[(i, i)] += qr[i];
    }
    let rhs = g.transpose() * qr.component_mul(&c);

    let u_r = match x_b {
        None => h.lu().solve(&rhs).expect("positive definite"),
        Some(xb) => {
            let mut kkt = DMatrix::zeros(m + 1, m + 1);
            kkt.view_mut((0, 0), (m, m)).copy_from(&h);
            for j in 0..m {
                kkt[(m, j)] = g[(m - 1, j)];
                kkt[(j, m)] = g[(m - 1, j)];
            }
            let mut r = DVector::zeros(m + 1);
            r.rows_mut(0, m).copy_from(&rhs);
            r[m] = xb + c[m - 1];
            let sol = kkt.lu().solve(&r).expect("KKT system is nonsingular");
            sol.rows(0, m).clone_owned()
        }
    };
    let x_r = &g * &u_r - &c;
    let mut x = vec![x_a];
    x.extend(x_r.iter());
    let mut u = vec![0.0];
    u.extend(u_r.iter());
    let cost = (0..n).map(|i| q[i] * (x[i] * x[i] + u[i] * u[i])).sum();
    Direct { x, u, cost }
}
