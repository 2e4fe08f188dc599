//! Spectral decomposition, coaxial/orthogonal splitting and Voigt mapping of
//! symmetric tensors.
//!
//! ```text
//! cargo run --example tensor_algebra
//! ```

use neohookean::tensor3::{self, SymTensor3, VoigtKind};

fn main() {
    // A tensor with a repeated eigenvalue: eigenvalues 1, 3, 3.
    let s = SymTensor3::new(3.0, 2.0, 2.0, 1.0, 0.0, 0.0);
    let decomp = tensor3::spectral(&s, 1e-10);
    println!("eigenindex m = {}", decomp.m);
    for ((value, mult), proj) in decomp.values.iter().zip(&decomp.multiplicities).zip(&decomp.projections) {
        println!("  eigenvalue {value:.6} (multiplicity {mult}), tr P = {:.6}", proj.trace());
    }
    println!("reconstruction error {:.2e}", (decomp.reconstruct() - s).norm());

    // Split a rate into the part coaxial with `s` and the remainder.
    let h = SymTensor3::new(0.4, -0.1, 0.2, 0.3, 0.5, -0.2);
    let (coaxial, orthogonal) = tensor3::coaxial_orthogonal_split(&s, &h);
    println!("coaxial : orthogonal = {:.2e}", coaxial.ddot(&orthogonal));
    println!("|h|^2 = {:.6}, |coaxial|^2 + |orthogonal|^2 = {:.6}", h.ddot(&h), coaxial.ddot(&coaxial) + orthogonal.ddot(&orthogonal));

    // A fourth-order tensor and its 6x6 Voigt matrix.
    let x = tensor3::sym_outer(&s, &SymTensor3::identity());
    println!("symmetry defect of sym_outer(s, I): {:.1e}", x.symmetry_defect());
    let (direct, voigt) = tensor3::voigt_roundtrip(&x, &h);
    println!("h : X : h directly {direct:.12}, through Voigt {voigt:.12}");
    println!("strain-like Voigt vector of h: {:?}", tensor3::voigt_vector(&h, VoigtKind::Strain).as_slice());
    println!("Voigt matrix of X:\n{:.4}", tensor3::voigt_matrix(&x));
}
