//! Constrained Gaussian process (CGP) distributions on a finite evaluation grid.
//!
//! A CGP reweights a Gaussian prior `N(u, K)` by a probit likelihood of linear
//! functionals: `f(g) ∝ φ(g; u, K) · Φ(A g + b)` with `Φ` applied row-wise.
//! The normalizing constant, moment generating function, mean, covariance,
//! posterior updates for regression and probit classification, and exact
//! samplers all reduce to multivariate normal CDF and truncated-normal moment
//! computations, which this crate provides.
//!
//! The crate is `no_std`-compatible (requires `alloc`); the default `std`
//! feature is only needed for `std::error::Error` integration of dependencies.
//!
//! Modules:
//! - [`math`] — univariate normal primitives (CDF, log-CDF, quantile, truncated draws)
//! - [`linalg`] — Cholesky with escalating-jitter repair
//! - [`kernels`] — kernel functions and Gram matrices
//! - [`constraints`] — linear inequality systems `{g | A g + b ≥ 0}`
//! - [`mvn`] — MVN log-density, QMC CDF, truncated-MVN moments and samplers
//! - [`cgp`] — the CGP distribution itself
//! - [`inference`] — regression and classification posteriors/predictives
//! - [`diagnostics`] — calibration loss, recalibration, excess-risk reports
//! - [`theory`] — RKHS norms, ball probabilities, shifted-ball checks

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod error;
pub(crate) mod fmath;
pub mod math;
pub mod linalg;
pub mod kernels;
pub mod constraints;
pub mod mvn;
pub mod cgp;
pub mod inference;
pub mod diagnostics;
pub mod theory;

pub use error::{Error, Result};
