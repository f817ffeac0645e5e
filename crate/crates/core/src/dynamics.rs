//! Capital dynamics, represented by their linearization `v` and its inverse.
//!
//! A linearization turns a capital change from endowment `w` to payoff `x`
//! over duration `dt` into an additive growth rate `(v(x) - v(w)) / dt`.

use std::fmt;
use std::sync::Arc;

use crate::error::{GameError, Result};

type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// Dynamics given directly by a strictly increasing linearization and its
/// inverse on an open interval of capital values.
#[derive(Clone)]
pub struct CustomDynamics {
    name: String,
    v: ScalarFn,
    v_inverse: ScalarFn,
    domain: (f64, f64),
    image: (f64, f64),
}

impl fmt::Debug for CustomDynamics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CustomDynamics")
            .field("name", &self.name)
            .field("domain", &self.domain)
            .finish()
    }
}

impl PartialEq for CustomDynamics {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.domain == other.domain
    }
}

/// Round-trip tolerance for `v_inverse(v(x))`, relative to `max(1, |x|)`.
const INVERSE_TOL: f64 = 1e-9;

fn sample_points(lo: f64, hi: f64) -> Vec<f64> {
    const N: usize = 64;
    match (lo.is_finite(), hi.is_finite()) {
        (true, true) => (1..N)
            .map(|k| lo + (hi - lo) * k as f64 / N as f64)
            .collect(),
        (true, false) => (0..N)
            .map(|k| lo + 10f64.powf(-6.0 + 12.0 * k as f64 / (N - 1) as f64))
            .collect(),
        (false, true) => (0..N)
            .rev()
            .map(|k| hi - 10f64.powf(-6.0 + 12.0 * k as f64 / (N - 1) as f64))
            .collect(),
        (false, false) => (0..N)
            .map(|k| -1e6 + 2e6 * k as f64 / (N - 1) as f64)
            .collect(),
    }
}

fn bound_image(v: &ScalarFn, bound: f64, fallback: f64) -> f64 {
    let y = v(bound);
    if y.is_nan() {
        fallback
    } else {
        y
    }
}

impl CustomDynamics {
    /// Builds a custom dynamics spec after checking on sampled domain points
    /// that `v` is strictly increasing and `v_inverse` undoes it.
    pub fn new<V, W>(name: impl Into<String>, v: V, v_inverse: W, domain: (f64, f64)) -> Result<Self>
    where
        V: Fn(f64) -> f64 + Send + Sync + 'static,
        W: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        let name = name.into();
        let (lo, hi) = domain;
        if lo.is_nan() || hi.is_nan() || lo >= hi {
            return Err(GameError::InvalidDynamics(format!(
                "{name}: domain ({lo}, {hi}) is not an open interval"
            )));
        }
        let v: ScalarFn = Arc::new(v);
        let v_inverse: ScalarFn = Arc::new(v_inverse);

        let points = sample_points(lo, hi);
        let mut prev = f64::NEG_INFINITY;
        for &x in &points {
            let y = v(x);
            if !y.is_finite() {
                return Err(GameError::InvalidDynamics(format!(
                    "{name}: v({x}) is not finite"
                )));
            }
            if y <= prev {
                return Err(GameError::InvalidDynamics(format!(
                    "{name}: v is not strictly increasing near {x}"
                )));
            }
            prev = y;
            let back = v_inverse(y);
            if (back - x).abs() > INVERSE_TOL * x.abs().max(1.0) {
                return Err(GameError::InvalidDynamics(format!(
                    "{name}: v_inverse(v({x})) = {back}"
                )));
            }
        }
        let image = (
            bound_image(&v, lo, f64::NEG_INFINITY),
            bound_image(&v, hi, f64::INFINITY),
        );
        Ok(CustomDynamics {
            name,
            v,
            v_inverse,
            domain,
            image,
        })
    }

    /// `v(x) = sqrt(x)` on `(0, inf)`.
    pub fn sqrt() -> Self {
        CustomDynamics::new("sqrt", f64::sqrt, |y| y * y, (0.0, f64::INFINITY))
            .expect("sqrt is a valid linearization")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }
}

/// A player's capital dynamics.
#[derive(Debug, Clone, PartialEq)]
pub enum Dynamics {
    /// `f(x, w) = x - w`, linearized by `v(x) = x`.
    Additive,
    /// `f(x, w) = x / w`, linearized by `v(x) = ln x`; capital must be positive.
    Multiplicative,
    Custom(CustomDynamics),
}

impl Dynamics {
    /// Names accepted by [`Dynamics::from_name`].
    pub const REGISTRY: &'static [&'static str] = &["additive", "multiplicative", "sqrt"];

    /// Looks up a built-in dynamics spec by name.
    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "additive" => Some(Dynamics::Additive),
            "multiplicative" => Some(Dynamics::Multiplicative),
            "sqrt" => Some(Dynamics::Custom(CustomDynamics::sqrt())),
            _ => None,
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Dynamics::Additive => "additive",
            Dynamics::Multiplicative => "multiplicative",
            Dynamics::Custom(c) => c.name(),
        }
    }

    pub fn in_domain(&self, x: f64) -> bool {
        if !x.is_finite() {
            return false;
        }
        match self {
            Dynamics::Additive => true,
            Dynamics::Multiplicative => x > 0.0,
            Dynamics::Custom(c) => x > c.domain.0 && x < c.domain.1,
        }
    }

    /// Whether `y` is a linearized value of some in-domain capital.
    pub fn in_image(&self, y: f64) -> bool {
        match self {
            Dynamics::Additive => y.is_finite(),
            // every finite log corresponds to a positive capital
            Dynamics::Multiplicative => y.is_finite(),
            Dynamics::Custom(c) => y.is_finite() && y > c.image.0 && y < c.image.1,
        }
    }

    fn out_of_domain(&self, value: f64) -> GameError {
        GameError::OutOfDomain {
            value,
            dynamics: self.name().to_string(),
        }
    }

    /// The linearization `v(x)`.
    pub fn linearize(&self, x: f64) -> Result<f64> {
        if !self.in_domain(x) {
            return Err(self.out_of_domain(x));
        }
        Ok(self.linearize_unchecked(x))
    }

    pub(crate) fn linearize_unchecked(&self, x: f64) -> f64 {
        match self {
            Dynamics::Additive => x,
            Dynamics::Multiplicative => x.ln(),
            Dynamics::Custom(c) => (c.v)(x),
        }
    }

    /// The inverse linearization `v^{-1}(y)`.
    pub fn delinearize(&self, y: f64) -> Result<f64> {
        if !self.in_image(y) {
            return Err(self.out_of_domain(y));
        }
        Ok(self.delinearize_unchecked(y))
    }

    pub(crate) fn delinearize_unchecked(&self, y: f64) -> f64 {
        match self {
            Dynamics::Additive => y,
            Dynamics::Multiplicative => y.exp(),
            Dynamics::Custom(c) => (c.v_inverse)(y),
        }
    }
}

/// Growth rate `(v(x) - v(w)) / dt` of a capital change from `w` to `x`.
pub fn growth_rate(dynamics: &Dynamics, x: f64, w: f64, dt: f64) -> Result<f64> {
    if !(dt > 0.0 && dt.is_finite()) {
        return Err(GameError::InvalidGame(format!(
            "duration must be positive, got {dt}"
        )));
    }
    Ok((dynamics.linearize(x)? - dynamics.linearize(w)?) / dt)
}
