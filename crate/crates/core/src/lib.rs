pub mod completion;
pub mod error;
pub mod field;
pub mod majorization;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod ratfunc;
pub mod structure;
