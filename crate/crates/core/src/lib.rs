pub mod census;
pub mod cli;
pub mod cycle;
pub mod dynamics;
pub mod error;
pub mod factor;
pub mod field;
pub mod format;
pub mod oracle;
pub mod poly;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use field::{Elem, Field, FieldElement};
pub use poly::{Discriminant, Poly};
