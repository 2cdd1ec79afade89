//! Local finite-element ingredients: degrees of freedom, the quadratic shape
//! basis, closed-form coefficient ledgers for the two enrichment families,
//! nodal bases dual to each family's degrees of freedom, and unisolvence
//! diagnostics.

mod af3;
mod basis;
mod coefficients;
mod dofs;
mod family;
mod unisolvence;

pub use af3::{af3_bubble, af3_bubble_bary, af3_phi, af3_phi_bary, LinOnTri, QuadOnTri};
pub use basis::{basis_c_alpha, basis_cr, basis_e_beta, EnrichedBasis};
pub use coefficients::{CAlphaCoefficients, EBetaCoefficients};
pub use dofs::{dof_cr, dof_f_enr, dof_g_enr, dof_vertex};
pub use family::FamilyParameter;
pub use unisolvence::{unisolvence_determinant, unisolvence_matrix};
