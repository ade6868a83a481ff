//! Twisted tensor algebras over seminormed algebras with an automorphism,
//! their Ore and Laurent quotients, and the seminorms relating them.

pub mod base;
pub mod error;
pub mod free;
pub mod oracles;
pub mod ore;
pub mod poly;
pub mod quotient;
pub mod roots;
pub mod scalar;
pub mod text;
pub mod twisted;
pub mod word;

pub use base::{
    BaseAlgebra, EntireAlgebra, EntireAut, Exactness, FreeAlgebra, FreeAut, IntervalAlgebra, IntervalAut,
    OperatorBound, TwistedValue,
};
pub use error::{Error, Result};
pub use free::{FreePoly, GenWord};
pub use ore::{Derivation, LaurentOrePoly, OreAlgebra};
pub use poly::{EntirePoly, IntervalPoly, Poly};
pub use scalar::Scalar;
pub use twisted::{Caps, Generator, TwistedAlgebra, TwistedSeries};
pub use word::{Interval, TwistRange, Word};
