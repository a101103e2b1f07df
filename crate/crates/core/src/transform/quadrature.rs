use std::f64::consts::{PI, TAU};

/// Gauss-Legendre nodes and weights on `[-1, 1]`, nodes ascending.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        // Tricomi's initial guess, then Newton on P_n.
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (p, d) = legendre_with_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() <= 1e-16 * x.abs().max(1.0) {
                break;
            }
        }
        let (_, d) = legendre_with_derivative(n, x);
        dp = if d != 0.0 { d } else { dp };
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    (nodes, weights)
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let nf = n as f64;
    (p1, nf * (x * p1 - p0) / (x * x - 1.0))
}

/// Product rule on the unit disk: Gauss-Legendre in `t = r^2` times a uniform
/// angular grid. Exact for `conj(W_{u',v'}) W_{u,v}` whenever both modes have
/// degree at most `bandwidth`.
#[derive(Debug, Clone, PartialEq)]
pub struct DiskQuadrature {
    bandwidth: usize,
    radii: Vec<f64>,
    /// Radial weights for `int_0^1 g(r) r dr`; they sum to 1/2.
    weights: Vec<f64>,
    n_phi: usize,
}

impl DiskQuadrature {
    pub fn bandwidth(&self) -> usize {
        self.bandwidth
    }

    pub fn radii(&self) -> &[f64] {
        &self.radii
    }

    pub fn radial_weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn n_r(&self) -> usize {
        self.radii.len()
    }

    pub fn n_phi(&self) -> usize {
        self.n_phi
    }

    pub fn angle(&self, k: usize) -> f64 {
        TAU * k as f64 / self.n_phi as f64
    }

    pub fn angles(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n_phi).map(|k| self.angle(k))
    }

    pub fn angular_weight(&self) -> f64 {
        TAU / self.n_phi as f64
    }

    /// `(r, phi)` of every node in row-major (radius-major) order.
    pub fn nodes(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.radii
            .iter()
            .flat_map(move |&r| self.angles().map(move |phi| (r, phi)))
    }
}

pub fn build_quadrature(bandwidth: usize) -> DiskQuadrature {
    let (t, w) = gauss_legendre(bandwidth + 1);
    // t in [-1,1] -> s = (t+1)/2 in [0,1], r = sqrt(s); r dr = ds/2.
    let radii = t.iter().map(|x| ((x + 1.0) / 2.0).sqrt()).collect();
    let weights = w.iter().map(|x| x / 4.0).collect();
    DiskQuadrature {
        bandwidth,
        radii,
        weights,
        n_phi: (2 * bandwidth + 2).max(4),
    }
}
