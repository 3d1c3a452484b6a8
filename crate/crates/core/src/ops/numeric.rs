use crate::fock::{FockSpace, FockState};

use super::SafeSubspace;

/// Dense real matrix in the orthonormal basis at a fixed `q`.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericOperator {
    space: FockSpace,
    q: f64,
    dim: usize,
    /// Row-major `data[dst * dim + src]`.
    data: Vec<f64>,
}

impl NumericOperator {
    pub fn zeros(space: FockSpace, q: f64) -> Self {
        let space = FockSpace::full(space.cutoff);
        let dim = space.full_dim();
        Self { space, q, dim, data: vec![0.0; dim * dim] }
    }

    pub fn identity(space: FockSpace, q: f64) -> Self {
        let mut m = Self::zeros(space, q);
        for i in 0..m.dim {
            m.data[i * m.dim + i] = 1.0;
        }
        m
    }

    pub fn diagonal<F: FnMut(FockState) -> f64>(space: FockSpace, q: f64, mut f: F) -> Self {
        let mut m = Self::zeros(space, q);
        for i in 0..m.dim {
            m.data[i * m.dim + i] = f(FockState::from_index(i));
        }
        m
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub(crate) fn set(&mut self, dst: usize, src: usize, v: f64) {
        self.data[dst * self.dim + src] = v;
    }

    pub fn get(&self, dst: FockState, src: FockState) -> f64 {
        if dst.nu() > self.space.cutoff || src.nu() > self.space.cutoff {
            return 0.0;
        }
        self.data[dst.index() * self.dim + src.index()]
    }

    pub fn matmul(&self, rhs: &NumericOperator) -> NumericOperator {
        let n = self.dim;
        let mut out = NumericOperator::zeros(self.space, self.q);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == 0.0 {
                    continue;
                }
                let row = &rhs.data[k * n..(k + 1) * n];
                let orow = &mut out.data[i * n..(i + 1) * n];
                for (o, b) in orow.iter_mut().zip(row) {
                    *o += a * b;
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &NumericOperator) -> NumericOperator {
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        NumericOperator { data, ..self.clone_meta() }
    }

    pub fn scale(&self, c: f64) -> NumericOperator {
        NumericOperator { data: self.data.iter().map(|a| a * c).collect(), ..self.clone_meta() }
    }

    fn clone_meta(&self) -> NumericOperator {
        NumericOperator { space: self.space, q: self.q, dim: self.dim, data: Vec::new() }
    }

    pub fn transpose(&self) -> NumericOperator {
        let n = self.dim;
        let mut out = NumericOperator::zeros(self.space, self.q);
        for i in 0..n {
            for j in 0..n {
                out.data[j * n + i] = self.data[i * n + j];
            }
        }
        out
    }

    /// Largest `|entry|` over columns whose source lies in `sub`, with the
    /// position of the maximum.
    pub fn max_abs_on(&self, sub: &SafeSubspace) -> (f64, Option<(FockState, FockState)>) {
        let n = self.dim;
        let mut best = (0.0, None);
        for j in 0..n {
            let src = FockState::from_index(j);
            if !sub.contains(src) {
                continue;
            }
            for i in 0..n {
                let v = self.data[i * n + j].abs();
                if v > best.0 {
                    best = (v, Some((src, FockState::from_index(i))));
                }
            }
        }
        best
    }

    /// Acts on a vector given in the orthonormal basis.
    pub fn apply_vec(&self, v: &[f64]) -> Vec<f64> {
        let n = self.dim;
        (0..n).map(|i| (0..n).map(|k| self.data[i * n + k] * v[k]).sum()).collect()
    }
}
