//! Combinatorial kit for round fold maps of closed `n`-manifolds into
//! `R^(n-1)`, `n >= 4`.
//!
//! A round fold map in standard form is determined by its page: a Morse
//! function on a compact surface, encoded here as a [`reeb::Page`]. From a
//! page we build the source manifold ([`roundfold`]), decide
//! A-equivalence ([`classify`]) and enumerate small cases ([`census`]).

pub mod census;
pub mod classify;
pub mod gf2;
pub mod io;
pub mod manifolds;
pub mod reeb;
pub mod roundfold;
