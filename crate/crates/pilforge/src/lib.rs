//! Differentiable image-based-lighting toolkit.
//!
//! The crate renders spheres under environment lighting three ways — brute
//! force Monte-Carlo integration, pre-integrated split-sum shading, and a
//! learned pre-integrated-illumination network — and solves the inverse
//! problem of recovering illumination (and BRDF textures) from renderings.
//!
//! Module map:
//!
//! * [`math`] — directions, equirectangular mappings, GGX sampling, RNG streams
//! * [`envmap`] — HDR environment maps, Radiance/PFM/PNG I/O, tone mapping
//! * [`brdf`] — Cook-Torrance/GGX evaluation and importance sampling
//! * [`mc`] — Monte-Carlo reference renderer, prefiltering, B0/B1 LUT, split-sum shading
//! * [`sg`] — 24-lobe spherical-Gaussian illumination baseline
//! * [`tensor`] — reverse-mode autodiff tape, layer primitives, Adam
//! * [`pil`] — the neural pre-integrated-illumination network and its training
//! * [`smae`] — smooth manifold autoencoder prior over BRDF parameters
//! * [`recover`] — illumination fitting, joint BRDF/illumination decomposition, reports
//! * [`config`] — key=value run configuration shared by the CLI

pub mod brdf;
pub mod config;
pub mod envmap;
pub mod error;
pub mod math;
pub mod mc;
pub mod pil;
pub mod recover;
pub mod sg;
pub mod smae;
pub mod tensor;

pub use error::{Error, Result};
