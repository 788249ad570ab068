//! Algebraic-geometry codes on Miura-Kamiya plane curves, with a unique
//! decoder that corrects errors up to half the order bound.
//!
//! ```
//! use plane_ag::{Code, Fe, FieldSpec};
//!
//! let f9 = FieldSpec::new(3, 2, &[2, 2, 1]).unwrap();
//! let code = Code::hermitian(f9, 3, 16).unwrap();
//! assert_eq!((code.n(), code.k(), code.du()), (27, 14, 11));
//!
//! let msg: Vec<Fe> = (0..14).map(|i| Fe(i % 9)).collect();
//! let mut v = code.encode(&msg).unwrap();
//! v[3] = Fe(1);
//! v[20] = Fe(7);
//! assert_eq!(code.decode(&v).unwrap().message, msg);
//! ```

pub mod bounds;
pub mod config;
pub mod curve;
pub mod decoder;
pub mod error;
pub mod field;
pub mod ideal;
pub mod poly;
pub mod sim;

pub use curve::{MonomialKey, PairElem, PlaneCurve, Point, RingElem};
pub use decoder::{Code, Decoded, DecoderState, StepRecord};
pub use error::{Error, Result};
pub use field::{Fe, FieldSpec};
pub use poly::UPoly;
