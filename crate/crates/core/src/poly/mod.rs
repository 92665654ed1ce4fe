//! Boolean-coefficient polynomial arithmetic.

mod monomial;
mod polynomial;
mod ring;

pub use monomial::{Exponent, Monomial, MonomialOrder};
pub use polynomial::Polynomial;
pub use ring::{Display, Ring};
