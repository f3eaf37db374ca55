use serde::Serialize;

use super::presentation::{pi1_minimal, Pi1Minimal};
use crate::error::Result;
use crate::roots::{Root, RootSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    NotNullHomotopic,
    NullHomotopic,
    Undetermined,
}

/// Homotopy class of the orbit `G(alpha) . b` in one minimal flag manifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HomotopyVerdict {
    pub node: usize,
    /// `omega_node(H_alpha^vee)`.
    pub pairing: i64,
    pub parity: Parity,
    pub pi1: Pi1Minimal,
    pub verdict: Verdict,
}

/// Decides whether the orbit of the root subgroup `G(alpha)` through the
/// origin of the minimal flag manifold `F_{Sigma \ {node}}` is null homotopic.
///
/// The loop lifts to the spherical orbit, a double cover, with monodromy
/// `(-1)^pairing`. Odd parity means the lift is open, so the loop is
/// nontrivial. Even parity settles the question only when the double cover
/// is universal, i.e. when pi_1 is Z2; with pi_1 = Z it is left open.
pub fn orbit_verdict(sys: &RootSystem, alpha: &Root, node: usize) -> Result<HomotopyVerdict> {
    let pairing = sys.weight_pairing(node, alpha)?;
    let pi1 = pi1_minimal(sys, node)?;
    let parity = if pairing.rem_euclid(2) == 0 {
        Parity::Even
    } else {
        Parity::Odd
    };
    let verdict = match (parity, pi1) {
        (Parity::Odd, _) => Verdict::NotNullHomotopic,
        (Parity::Even, Pi1Minimal::CyclicTwo) => Verdict::NullHomotopic,
        (Parity::Even, Pi1Minimal::CyclicInfinite) => Verdict::Undetermined,
    };
    Ok(HomotopyVerdict {
        node,
        pairing,
        parity,
        pi1,
        verdict,
    })
}
