#![allow(clippy::needless_range_loop, clippy::neg_cmp_op_on_partial_ord)]

pub mod axb;
pub mod error;
pub mod exactla;
pub mod exactnum;
pub mod fixtures;
pub mod io;
pub mod latticetest;
pub mod nilrep;
pub mod oracle;
pub mod regularity;
pub mod report;

pub use error::{Error, Result};
