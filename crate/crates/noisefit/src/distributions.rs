//! Closed-form densities, CDFs, and the stable characteristic function for
//! the three noise families.
//!
//! | family | density |
//! |---|---|
//! | Gaussian | (2πσ²)^(-1/2) exp(-(x-μ)²/(2σ²)) |
//! | alpha-stable | no closed density in general; defined through its characteristic function |
//! | one-sided Lévy | √(c/2π) exp(-c/(2(x-μ))) / (x-μ)^(3/2) on x > μ |
//! | stretched Gaussian | β / (2^(1+1/β) Γ(1/β) σ) exp(-|(x-a)/σ|^β / 2) |
//!
//! The one-sided Lévy law is the totally skewed α = 1/2 stable member; its
//! CDF is erfc(√(c/(2(x-μ)))). The stretched Gaussian (exponential power)
//! CDF follows from the substitution |X-a| = σ(2G)^(1/β) with G gamma
//! distributed, giving a regularized incomplete gamma form. At β = 2 the
//! stretched Gaussian coincides with the Gaussian of the same location and
//! scale.
//!
//! All functions here are pure; they carry no state and may be called from
//! any number of threads.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::special::{erfc, gamma, gamma_p};
use crate::{Error, Result};

/// Location/scale parameters of a Gaussian distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianParams {
    pub mu: f64,
    pub sigma: f64,
}

impl GaussianParams {
    /// Requires `sigma > 0`.
    pub fn new(mu: f64, sigma: f64) -> Result<Self> {
        if !sigma.is_finite() || sigma <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "sigma",
                value: sigma,
                constraint: "sigma > 0",
            });
        }
        if !mu.is_finite() {
            return Err(Error::InvalidParameter {
                name: "mu",
                value: mu,
                constraint: "finite location",
            });
        }
        Ok(Self { mu, sigma })
    }

    pub fn pdf(&self, x: f64) -> f64 {
        let z = (x - self.mu) / self.sigma;
        (-0.5 * z * z).exp() / (self.sigma * (2.0 * PI).sqrt())
    }

    pub fn cdf(&self, x: f64) -> f64 {
        0.5 * erfc(-(x - self.mu) / (self.sigma * std::f64::consts::SQRT_2))
    }
}

/// Parameters of an alpha-stable distribution: stability index `alpha`,
/// skewness `beta`, location `mu`, scale `sigma`.
///
/// `sigma = 0` is accepted here so that configurations quoting a degenerate
/// scale can still be represented; samplers reject it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StableParams {
    pub alpha: f64,
    pub beta: f64,
    pub mu: f64,
    pub sigma: f64,
}

impl StableParams {
    /// Requires `0 < alpha <= 2`, `-1 <= beta <= 1`, `sigma >= 0`.
    pub fn new(alpha: f64, beta: f64, mu: f64, sigma: f64) -> Result<Self> {
        if !alpha.is_finite() || alpha <= 0.0 || alpha > 2.0 {
            return Err(Error::InvalidParameter {
                name: "alpha",
                value: alpha,
                constraint: "0 < alpha <= 2",
            });
        }
        if !beta.is_finite() || !(-1.0..=1.0).contains(&beta) {
            return Err(Error::InvalidParameter {
                name: "beta",
                value: beta,
                constraint: "-1 <= beta <= 1",
            });
        }
        if !sigma.is_finite() || sigma < 0.0 {
            return Err(Error::InvalidParameter {
                name: "sigma",
                value: sigma,
                constraint: "sigma >= 0",
            });
        }
        if !mu.is_finite() {
            return Err(Error::InvalidParameter {
                name: "mu",
                value: mu,
                constraint: "finite location",
            });
        }
        Ok(Self {
            alpha,
            beta,
            mu,
            sigma,
        })
    }

    /// Characteristic function
    /// φ(k) = exp[iμk − σ^α |k|^α (1 − iβ sign(k) ω(k, α))]
    /// with ω = tan(πα/2) for α ≠ 1 and ω = −(2/π) ln|k| for α = 1.
    ///
    /// φ(0) = 1 exactly and |φ(k)| <= 1 everywhere.
    pub fn charfn(&self, k: f64) -> Complex64 {
        if k == 0.0 {
            return Complex64::new(1.0, 0.0);
        }
        let omega = if self.alpha == 1.0 {
            -(2.0 / PI) * k.abs().ln()
        } else {
            (PI * self.alpha / 2.0).tan()
        };
        let amplitude = self.sigma.powf(self.alpha) * k.abs().powf(self.alpha);
        let exponent = Complex64::new(0.0, self.mu * k)
            - amplitude * Complex64::new(1.0, -self.beta * k.signum() * omega);
        exponent.exp()
    }
}

/// Parameters of the one-sided Lévy distribution: location `mu`, scale `c`.
/// The density lives on `x > mu`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OneSidedLevyParams {
    pub mu: f64,
    pub c: f64,
}

impl OneSidedLevyParams {
    /// Requires `c > 0`.
    pub fn new(mu: f64, c: f64) -> Result<Self> {
        if !c.is_finite() || c <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "c",
                value: c,
                constraint: "c > 0",
            });
        }
        if !mu.is_finite() {
            return Err(Error::InvalidParameter {
                name: "mu",
                value: mu,
                constraint: "finite location",
            });
        }
        Ok(Self { mu, c })
    }

    /// Density √(c/2π) exp(−c/(2(x−μ))) / (x−μ)^(3/2) for x > μ, else 0.
    /// Unimodal with mode at μ + c/3.
    pub fn pdf(&self, x: f64) -> f64 {
        let t = x - self.mu;
        if t <= 0.0 {
            return 0.0;
        }
        (self.c / (2.0 * PI)).sqrt() * (-self.c / (2.0 * t)).exp() / t.powf(1.5)
    }

    /// CDF erfc(√(c/(2(x−μ)))) for x > μ, else 0.
    pub fn cdf(&self, x: f64) -> f64 {
        let t = x - self.mu;
        if t <= 0.0 {
            return 0.0;
        }
        erfc((self.c / (2.0 * t)).sqrt())
    }
}

/// Parameters of the stretched Gaussian (exponential power) distribution:
/// stretched exponent `beta`, location `a`, scale `sigma`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StretchedGaussianParams {
    pub beta: f64,
    pub a: f64,
    pub sigma: f64,
}

impl StretchedGaussianParams {
    /// Requires `beta > 0` and `sigma > 0`.
    pub fn new(beta: f64, a: f64, sigma: f64) -> Result<Self> {
        if !beta.is_finite() || beta <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "beta",
                value: beta,
                constraint: "beta > 0",
            });
        }
        if !sigma.is_finite() || sigma <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "sigma",
                value: sigma,
                constraint: "sigma > 0",
            });
        }
        if !a.is_finite() {
            return Err(Error::InvalidParameter {
                name: "a",
                value: a,
                constraint: "finite location",
            });
        }
        Ok(Self { beta, a, sigma })
    }

    /// Normalization constant β / (2^(1+1/β) Γ(1/β) σ); also the mode value.
    pub fn mode_density(&self) -> f64 {
        self.beta / (2f64.powf(1.0 + 1.0 / self.beta) * gamma(1.0 / self.beta) * self.sigma)
    }

    /// Density β / (2^(1+1/β) Γ(1/β) σ) exp(−|(x−a)/σ|^β / 2).
    pub fn pdf(&self, x: f64) -> f64 {
        let z = ((x - self.a) / self.sigma).abs();
        self.mode_density() * (-0.5 * z.powf(self.beta)).exp()
    }

    /// CDF via the regularized incomplete gamma:
    /// F(x) = 1/2 (1 + sign(x−a) P(1/β, |(x−a)/σ|^β / 2)).
    pub fn cdf(&self, x: f64) -> f64 {
        let z = (x - self.a) / self.sigma;
        if z == 0.0 {
            return 0.5;
        }
        let p = gamma_p(1.0 / self.beta, 0.5 * z.abs().powf(self.beta));
        0.5 * (1.0 + z.signum() * p)
    }

    /// Variance σ² 2^(2/β) Γ(3/β) / Γ(1/β).
    pub fn variance(&self) -> f64 {
        self.sigma * self.sigma * 2f64.powf(2.0 / self.beta) * gamma(3.0 / self.beta)
            / gamma(1.0 / self.beta)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn gaussian_pdf_reference_points() {
        let std = GaussianParams::new(0.0, 1.0).unwrap();
        // Mode of the standard normal is 1/sqrt(2*pi).
        assert_relative_eq!(std.pdf(0.0), 0.398_942_280_401_432_7, max_relative = 1e-14);
        // Mode value is 1/(sigma*sqrt(2*pi)) for any sigma.
        for &s in &[0.25, 0.5, 2.0, 7.5] {
            let p = GaussianParams::new(3.0, s).unwrap();
            assert_relative_eq!(p.pdf(3.0), 1.0 / (s * (2.0 * PI).sqrt()), max_relative = 1e-14);
        }
        // High-precision reference for x=5.5, mu=5, sigma=0.5.
        let p = GaussianParams::new(5.0, 0.5).unwrap();
        assert_relative_eq!(p.pdf(5.5), 0.483_941_449_038_286_7, max_relative = 1e-13);
        // Symmetry about mu.
        assert_relative_eq!(p.pdf(5.3), p.pdf(4.7), max_relative = 1e-14);
    }

    #[test]
    fn gaussian_rejects_bad_sigma() {
        assert!(GaussianParams::new(0.0, 0.0).is_err());
        assert!(GaussianParams::new(0.0, -1.0).is_err());
        assert!(GaussianParams::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn stable_charfn_origin_and_gaussian_case() {
        let p = StableParams::new(1.3, 0.7, -2.0, 1.7).unwrap();
        let at0 = p.charfn(0.0);
        assert_eq!(at0, Complex64::new(1.0, 0.0));

        // alpha=2, beta=0 is the Gaussian special case: exp(-sigma^2 k^2) at mu=0.
        let g = StableParams::new(2.0, 0.0, 0.0, 1.0).unwrap();
        let v = g.charfn(1.0);
        assert_relative_eq!(v.re, (-1.0f64).exp(), max_relative = 1e-14);
        assert!(v.im.abs() < 1e-15);
    }

    #[test]
    fn stable_charfn_alpha_one_branch() {
        // alpha=1, beta=0.5, mu=0, sigma=1, k=2; frozen from a 30-digit
        // evaluation of exp(-|k|(1 - i beta sign(k) omega)), omega = -(2/pi) ln|k|.
        let p = StableParams::new(1.0, 0.5, 0.0, 1.0).unwrap();
        let v = p.charfn(2.0);
        assert_relative_eq!(v.re, 0.122_371_445_806_439_54, max_relative = 1e-13);
        assert_relative_eq!(v.im, -0.057_800_243_424_883_705, max_relative = 1e-13);
    }

    #[test]
    fn stable_charfn_modulus_bounded() {
        let p = StableParams::new(1.8, 0.3, 0.5, 2.0).unwrap();
        for &k in &[-7.0, -2.0, -0.1, 0.1, 1.0, 3.0, 11.0] {
            assert!(p.charfn(k).norm() <= 1.0 + 1e-15);
        }
    }

    #[test]
    fn stable_rejects_out_of_range() {
        assert!(StableParams::new(0.0, 0.0, 0.0, 1.0).is_err());
        assert!(StableParams::new(2.1, 0.0, 0.0, 1.0).is_err());
        assert!(StableParams::new(1.5, 1.5, 0.0, 1.0).is_err());
        assert!(StableParams::new(1.5, 0.0, 0.0, -1.0).is_err());
        // sigma = 0 is representable (degenerate configs are parse-time legal).
        assert!(StableParams::new(1.8, 0.0, 1.0, 0.0).is_ok());
    }

    #[test]
    fn levy_pdf_support_and_mode() {
        let p = OneSidedLevyParams::new(0.0, 1.0).unwrap();
        assert_eq!(p.pdf(0.0), 0.0);
        assert_eq!(p.pdf(-3.0), 0.0);
        // Mode at c/3; value frozen from a 30-digit evaluation.
        assert_relative_eq!(p.pdf(1.0 / 3.0), 0.462_540_989_411_307_8, max_relative = 1e-13);
        // Nonnegative on its support.
        for i in 1..100 {
            assert!(p.pdf(i as f64 * 0.1) >= 0.0);
        }
        // Shifted location moves the support.
        let q = OneSidedLevyParams::new(2.0, 1.0).unwrap();
        assert_eq!(q.pdf(2.0), 0.0);
        assert_relative_eq!(q.pdf(2.0 + 1.0 / 3.0), p.pdf(1.0 / 3.0), max_relative = 1e-14);
    }

    #[test]
    fn levy_cdf_limits_and_reference() {
        let p = OneSidedLevyParams::new(0.0, 1.0).unwrap();
        assert_eq!(p.cdf(0.0), 0.0);
        assert_eq!(p.cdf(1e-12), erfc((0.5e12f64).sqrt()));
        assert!(p.cdf(1e-12) < 1e-30);
        // erfc(0.5) at x = 2.
        assert_relative_eq!(p.cdf(2.0), 0.479_500_122_186_953_46, max_relative = 1e-13);
        assert!(p.cdf(1e12) > 1.0 - 1e-5);
        assert!(OneSidedLevyParams::new(0.0, 0.0).is_err());
        assert!(OneSidedLevyParams::new(0.0, -2.0).is_err());
    }

    #[test]
    fn stretched_gaussian_degenerates_to_gaussian_at_beta_two() {
        let sg = StretchedGaussianParams::new(2.0, 0.0, 1.0).unwrap();
        let g = GaussianParams::new(0.0, 1.0).unwrap();
        assert_relative_eq!(sg.pdf(0.0), g.pdf(0.0), max_relative = 1e-14);
        for i in -40..=40 {
            let x = i as f64 * 0.1;
            assert_relative_eq!(sg.pdf(x), g.pdf(x), max_relative = 1e-12);
        }
    }

    #[test]
    fn stretched_gaussian_mode_value() {
        // beta=2.5, a=1, sigma=3; frozen from a 30-digit evaluation of
        // beta / (2^(1+1/beta) Gamma(1/beta) sigma).
        let p = StretchedGaussianParams::new(2.5, 1.0, 3.0).unwrap();
        assert_relative_eq!(p.pdf(1.0), 0.142_358_689_021_406_77, max_relative = 1e-13);
        // Symmetry about a.
        assert_relative_eq!(p.pdf(2.3), p.pdf(-0.3), max_relative = 1e-14);
    }

    #[test]
    fn stretched_gaussian_cdf_midpoint_and_normal_case() {
        let p = StretchedGaussianParams::new(2.5, 1.0, 3.0).unwrap();
        assert_eq!(p.cdf(1.0), 0.5);
        assert!(p.cdf(-40.0) < 1e-9);
        assert!(p.cdf(40.0) > 1.0 - 1e-9);

        // beta=2 reduces to the standard normal CDF.
        let n = StretchedGaussianParams::new(2.0, 0.0, 1.0).unwrap();
        assert_relative_eq!(n.cdf(1.96), 0.975_002_104_851_779_6, max_relative = 1e-12);
    }

    #[test]
    fn stretched_gaussian_variance_reference() {
        let p = StretchedGaussianParams::new(2.5, 1.0, 3.0).unwrap();
        // 9 * 2^(2/2.5) Gamma(1.2) / Gamma(0.4), 30-digit reference.
        assert_relative_eq!(p.variance(), 9.0 * 0.720_698_669_440_995_3, max_relative = 1e-12);
    }

    #[test]
    fn stretched_gaussian_rejects_bad_params() {
        assert!(StretchedGaussianParams::new(0.0, 0.0, 1.0).is_err());
        assert!(StretchedGaussianParams::new(-1.0, 0.0, 1.0).is_err());
        assert!(StretchedGaussianParams::new(2.0, 0.0, 0.0).is_err());
    }
}
