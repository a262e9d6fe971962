//! Certified re-derivation of numeric claims about Margulis numbers,
//! trace fields and finite quotients of SL(2).

pub mod hypgeom;
pub mod numfield;
pub mod report;
pub mod rigor;
pub mod sl2fq;
pub mod sphere;
