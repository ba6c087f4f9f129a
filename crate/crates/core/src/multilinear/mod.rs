//! Tensor, exterior, symmetric and divided-square functors, and Koszul
//! complexes `Kos(M, k)`.

pub mod divided;
pub mod koszul;
pub mod powers;

pub use divided::{divided_square_f2, DividedSquare};
pub use koszul::{koszul_complex, koszul_homotopy_check, purity_probe, HomotopyReport, KoszulComplex, PurityReport};
pub use powers::{
    exterior_power, lambda_to_tensor_map, symmetric_power, tensor, tensor_vec, wedge_product, LambdaToTensor, Power,
    TupleBasis,
};
