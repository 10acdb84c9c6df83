//! Regular sequences among the entries of a product of two generic matrices.

pub mod algebra;
pub mod grobner;
pub mod regseq;
pub mod xypattern;
