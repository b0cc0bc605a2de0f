pub mod cli;
pub mod error;
pub mod poly;
pub mod ring;
pub mod sheaf;
pub mod spectrum;
