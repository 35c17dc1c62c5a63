//! Dense multivariate polynomials over exact integers.
//!
//! Coefficients are arbitrary-precision and exponents are capped per
//! variable, which is enough for reading off one target coefficient of
//! (x_1 + ... + x_h)^K · ∏_{i<j}(x_i + x_j): every factor only raises
//! exponents, so states above the target cap can never contribute and are
//! dropped.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub struct DensePoly {
    nvars: usize,
    /// Inclusive per-variable exponent cap.
    cap: usize,
    coeffs: Vec<BigInt>,
}

impl DensePoly {
    pub fn one(nvars: usize, cap: usize) -> Self {
        let size = (cap + 1).pow(nvars as u32);
        let mut coeffs = vec![BigInt::zero(); size];
        coeffs[0] = BigInt::one();
        DensePoly { nvars, cap, coeffs }
    }

    fn stride(&self, var: usize) -> usize {
        (self.cap + 1).pow((self.nvars - 1 - var) as u32)
    }

    /// Multiply by x_i + x_j in place.
    pub fn mul_pair(&mut self, i: usize, j: usize) {
        let mut next = vec![BigInt::zero(); self.coeffs.len()];
        let si = self.stride(i);
        let sj = self.stride(j);
        for (idx, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let ei = idx / si % (self.cap + 1);
            let ej = idx / sj % (self.cap + 1);
            if ei < self.cap {
                next[idx + si] += c;
            }
            if ej < self.cap {
                next[idx + sj] += c;
            }
        }
        self.coeffs = next;
    }

    /// Multiply by x_1 + ... + x_nvars in place.
    pub fn mul_linear_sum(&mut self) {
        let mut next = vec![BigInt::zero(); self.coeffs.len()];
        let strides: Vec<usize> = (0..self.nvars).map(|v| self.stride(v)).collect();
        for (idx, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &s in &strides {
                let e = idx / s % (self.cap + 1);
                if e < self.cap {
                    next[idx + s] += c;
                }
            }
        }
        self.coeffs = next;
    }

    /// Coefficient of ∏ x_v^{exps[v]}.
    pub fn coefficient(&self, exps: &[usize]) -> BigInt {
        assert_eq!(exps.len(), self.nvars);
        let mut idx = 0usize;
        for (v, &e) in exps.iter().enumerate() {
            assert!(e <= self.cap);
            idx += e * self.stride(v);
        }
        self.coeffs[idx].clone()
    }
}
