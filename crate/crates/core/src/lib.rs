pub mod cli;
pub mod error;
pub mod extrat;
pub mod hull;
pub mod parmet;
pub mod diagonal;
pub mod qcat;
pub mod qrel;
pub mod quantale;

pub use error::{Error, Result};
pub use extrat::{rat, ExtRat};
