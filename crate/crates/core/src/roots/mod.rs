//! Finite irreducible root systems over exact rationals.
//!
//! Roots are stored as integer coefficient vectors over the simple roots. The
//! inner form is the Gram matrix of the simple roots, normalised so that long
//! roots have squared length 2. Short roots have squared length 1 in types
//! B, C, F and 2/3 in type G.
//!
//! Node numbering follows the usual diagram conventions with the highest-root
//! marks `A: 1..1`, `B: 1,2..2`, `C: 2..2,1`, `D: 1,2..2,1,1`,
//! `E6: 1,2,3,2,1,2`, `E7: 1,2,3,4,3,2,2`, `E8: 2,3,4,5,6,4,2,3`,
//! `F4: 2,3,4,2`, `G2: 2,3`. In G2 node 1 is long and node 2 short, which is
//! the reverse of Bourbaki.

mod lie_type;
mod system;

pub use lie_type::{Family, LieType};
pub use system::{LengthClass, Root, RootSystem};
