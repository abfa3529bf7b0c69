pub mod cli;
pub mod curves;
pub mod homology;
pub mod ideal;
pub mod linalg;
pub mod poly;
