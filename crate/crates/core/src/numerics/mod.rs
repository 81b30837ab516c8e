//! Quadrature, collocation and special-function kernels.

mod bessel;
mod collocation;
mod eigen;
mod kummer;
mod legendre;
mod quadrature;

pub use bessel::{spherical_bessel_j, spherical_bessel_j_all};
pub use collocation::CollocationGrid;
pub use eigen::{sym_eig, SymEig};
pub use kummer::kummer_1f1;
pub use legendre::{assoc_legendre_density, NormalizedLegendre};
pub use quadrature::{gauss_legendre, gauss_lobatto, legendre_p, QuadratureRule};
