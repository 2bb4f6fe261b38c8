//! Non-nested multilevel smoothed Schwarz preconditioning on 2D unstructured
//! triangular meshes.
//!
//! The library builds every ingredient of the solver stack:
//!
//! * [`mesh`] — triangular meshes, `.node`/`.ele` I/O, degree-of-freedom
//!   enumeration, domain partitioning with overlap, and vertex graphs;
//! * [`coarsen`] — geometry-preserving coarsening that removes a maximal
//!   independent set of interior vertices per round and retriangulates the
//!   resulting cavities;
//! * [`transfer`] — field-split moving-least-squares transfer operators
//!   between non-nested meshes over the same domain;
//! * [`linalg`] — CSR matrices, dense LU, ILU(k), and restarted GMRES with
//!   right preconditioning;
//! * [`schwarz`] — the restricted additive Schwarz smoother and the V-cycle
//!   multilevel preconditioner assembled from the pieces above;
//! * [`disc`] — finite-volume convection-diffusion and Taylor-Hood Stokes
//!   assembly, the two benchmark problems;
//! * [`cli`] — the command-line driver (`coarsen`, `solve`, `verify`).
//!
//! Subdomain work runs on a shared-memory worker pool (see [`parallel`]); all
//! kernels use fixed reduction orders so results are identical to a serial
//! run for a given seed.

pub mod cli;
pub mod coarsen;
pub mod disc;
pub mod fixtures;
pub mod linalg;
pub mod mesh;
pub mod parallel;
pub mod schwarz;
pub mod transfer;
