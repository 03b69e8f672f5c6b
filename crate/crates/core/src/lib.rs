//! Crystal bases B(∞) of type G₂ in three concrete realizations: extended
//! Nakajima monomials, marginally large tableaux and a tensor-product model,
//! with isomorphisms between them and crystal-graph tooling.
//!
//! ```
//! use g2crystal::{bfs, iso_check, Index, MInfElement, MLTableau, Params};
//!
//! let t = MLTableau::highest().f_t(Index::Two);
//! assert_eq!(t.to_string(), "[1][1][1]\n[2][3]");
//!
//! let g = bfs(MInfElement::highest(Params::default()), 6);
//! let h = bfs(MLTableau::highest(), 6);
//! assert!(iso_check(&g, &h));
//! ```

pub mod cartan;
pub mod cliff;
pub mod crystal;
pub mod error;
pub mod graph;
pub mod iso;
pub mod letter;
pub mod minf;
pub mod monomial;
pub mod signature;
pub mod tableau;
pub mod verify;

pub use cartan::{ExtPair, ExtWeight, Index, Weight};
pub use cliff::CliffElement;
pub use crystal::Crystal;
pub use error::{Error, Result};
pub use graph::{bfs, iso_check, kostant_oracle, weight_census, CrystalGraph, Format};
pub use letter::Letter;
pub use minf::{MInfElement, Params};
pub use monomial::{m_infinity, ExtMonomial};
pub use tableau::MLTableau;
