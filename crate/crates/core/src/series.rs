use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// A truncated power series `c_0 + c_1 z + ... + c_N z^N`.
///
/// The stored length is always `N + 1`; trailing zeros are kept so that two
/// series can be padded to a common degree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComplexSeries {
    coeffs: Vec<Complex64>,
}

impl ComplexSeries {
    /// Builds a series from its coefficients, index 0 being the constant term.
    /// An empty list is treated as the zero series of degree 0.
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        if coeffs.is_empty() {
            return Self::zero(0);
        }
        Self { coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        Self {
            coeffs: vec![Complex64::new(0.0, 0.0); degree + 1],
        }
    }

    /// Series with real coefficients.
    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient `c_n`, zero beyond the stored degree.
    pub fn coeff(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or_default()
    }

    /// Zero-pads the series up to `degree`. Never truncates.
    pub fn padded(&self, degree: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < degree + 1 {
            coeffs.resize(degree + 1, Complex64::new(0.0, 0.0));
        }
        Self { coeffs }
    }

    pub fn scaled(&self, factor: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Coefficients of `z -> p(rho z)`.
    pub fn dilated(&self, rho: f64) -> Self {
        let mut w = 1.0;
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let out = c * w;
                w *= rho;
                out
            })
            .collect();
        Self { coeffs }
    }

    /// Horner evaluation.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// Horner evaluation of the derivative `sum n c_n z^(n-1)`.
    pub fn eval_derivative(&self, z: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .enumerate()
            .skip(1)
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, (n, &c)| acc * z + c * n as f64)
    }

    /// Value and derivative in one pass.
    pub fn eval_with_derivative(&self, z: Complex64) -> (Complex64, Complex64) {
        let zero = Complex64::new(0.0, 0.0);
        let mut value = zero;
        let mut deriv = zero;
        for &c in self.coeffs.iter().rev() {
            deriv = deriv * z + value;
            value = value * z + c;
        }
        (value, deriv)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(coeffs: &[Complex64], z: Complex64) -> Complex64 {
        coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c * z.powu(n as u32))
            .sum()
    }

    #[test]
    fn horner_matches_power_sum() {
        let s = ComplexSeries::new(vec![
            Complex64::new(0.5, -0.25),
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.3),
            Complex64::new(-0.2, 0.1),
        ]);
        let z = Complex64::new(0.3, -0.7);
        assert!((s.eval(z) - naive(s.coeffs(), z)).norm() < 1e-15);
        let (v, d) = s.eval_with_derivative(z);
        assert!((v - s.eval(z)).norm() < 1e-15);
        assert!((d - s.eval_derivative(z)).norm() < 1e-15);
    }

    #[test]
    fn empty_is_zero_series() {
        let s = ComplexSeries::new(vec![]);
        assert_eq!(s.degree(), 0);
        assert_eq!(s.eval(Complex64::new(0.4, 0.1)), Complex64::new(0.0, 0.0));
    }

    #[test]
    fn padding_keeps_values() {
        let s = ComplexSeries::from_real(&[0.0, 1.0]);
        let p = s.padded(5);
        assert_eq!(p.degree(), 5);
        assert_eq!(p.coeff(1), Complex64::new(1.0, 0.0));
        assert_eq!(p.coeff(9), Complex64::new(0.0, 0.0));
    }
}
