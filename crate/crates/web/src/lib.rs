//! wasm-bindgen bindings for the browser demo in `www/`.
//!
//! Coefficient arrays cross the boundary interleaved as `[re0, im0, re1, im1, ...]`.

use harmap_core::area::class_constants_on;
use harmap_core::landau::landau_radii;
use harmap_core::lipschitz::convex_polygon;
use harmap_core::{Complex64, ComplexSeries, DiskGrid, HarmonicMap, Result};
use serde_json::json;
use wasm_bindgen::prelude::*;

fn series(interleaved: &[f64]) -> ComplexSeries {
    ComplexSeries::new(
        interleaved
            .chunks(2)
            .map(|c| Complex64::new(c[0], c.get(1).copied().unwrap_or(0.0)))
            .collect(),
    )
}

fn js(e: harmap_core::Error) -> JsError {
    JsError::new(&e.to_string())
}

#[wasm_bindgen]
pub struct Probe {
    map: HarmonicMap,
}

#[wasm_bindgen]
impl Probe {
    #[wasm_bindgen(constructor)]
    pub fn new(h: &[f64], g: &[f64]) -> Probe {
        Probe {
            map: HarmonicMap::new(series(h), series(g), "demo"),
        }
    }

    /// Images of `|z| = r` for each radius, `n` points each, flattened to x, y pairs.
    pub fn curves(&self, radii: &[f64], n: usize) -> Vec<f64> {
        let mut out = Vec::with_capacity(radii.len() * n * 2);
        for &r in radii {
            for p in self.curve(r, n) {
                out.push(p.re);
                out.push(p.im);
            }
        }
        out
    }

    /// Per radius: 1 convex, 0 not convex, 2 inconclusive.
    pub fn convexity(&self, radii: &[f64], n: usize) -> Vec<u8> {
        radii
            .iter()
            .map(|&r| {
                let c = convex_polygon(&self.curve(r, n.max(64)));
                if c.inconclusive {
                    2
                } else {
                    u8::from(c.convex)
                }
            })
            .collect()
    }

    /// `(1 - |z|^2) Lambda_f(z)` on a `size x size` raster of `[-1, 1]^2`,
    /// row-major from the top, NaN outside the disk.
    pub fn bloch_density(&self, size: usize) -> Vec<f64> {
        self.density(size)
    }

    /// Class constants as a JSON object.
    pub fn summary(&self) -> std::result::Result<String, JsError> {
        self.summary_json().map_err(js)
    }
}

impl Probe {
    fn curve(&self, r: f64, n: usize) -> Vec<Complex64> {
        (0..n)
            .map(|k| {
                let t = std::f64::consts::TAU * k as f64 / n as f64;
                self.map.value_at(Complex64::from_polar(r, t))
            })
            .collect()
    }

    fn density(&self, size: usize) -> Vec<f64> {
        let mut out = Vec::with_capacity(size * size);
        let step = 2.0 / size as f64;
        for i in 0..size {
            let y = 1.0 - (i as f64 + 0.5) * step;
            for j in 0..size {
                let z = Complex64::new(-1.0 + (j as f64 + 0.5) * step, y);
                out.push(if z.norm() < 1.0 {
                    (1.0 - z.norm_sqr()) * self.map.lambda_big_at(z)
                } else {
                    f64::NAN
                });
            }
        }
        out
    }

    fn summary_json(&self) -> Result<String> {
        let c = class_constants_on(&self.map, 1.0, &DiskGrid::FAST)?;
        Ok(json!({
            "in_h": c.in_h,
            "sense_preserving": c.sense_preserving,
            "C": c.c,
            "alpha": c.alpha,
            "K": if c.k_estimate.is_finite() { Some(c.k_estimate) } else { None },
        })
        .to_string())
    }
}

/// Landau radii for the given constants as a JSON object.
#[wasm_bindgen]
pub fn landau(c: f64, alpha: f64) -> std::result::Result<String, JsError> {
    landau_json(c, alpha).map_err(js)
}

fn landau_json(c: f64, alpha: f64) -> Result<String> {
    Ok(serde_json::to_string(&landau_radii(c, alpha)?).expect("plain struct"))
}
