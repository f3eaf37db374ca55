use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::snf::invariant_factors;
use crate::error::Result;
use crate::roots::{Family, RootSystem};

/// A flag manifold `F_theta`, given by the subset `theta` of simple nodes
/// spanning its parabolic subalgebra.
#[derive(Debug, Clone)]
pub struct FlagSpec<'a> {
    system: &'a RootSystem,
    theta: BTreeSet<usize>,
}

impl<'a> FlagSpec<'a> {
    pub fn new(system: &'a RootSystem, theta: impl IntoIterator<Item = usize>) -> Result<Self> {
        let theta: BTreeSet<usize> = theta.into_iter().collect();
        for &node in &theta {
            system.check_node(node)?;
        }
        Ok(Self { system, theta })
    }

    /// The minimal flag manifold obtained by removing the single node `beta`.
    pub fn minimal(system: &'a RootSystem, beta: usize) -> Result<Self> {
        system.check_node(beta)?;
        Self::new(system, (1..=system.rank()).filter(|&i| i != beta))
    }

    pub fn system(&self) -> &RootSystem {
        self.system
    }

    pub fn theta(&self) -> &BTreeSet<usize> {
        &self.theta
    }

    /// Nodes outside `theta`, whose loops generate the fundamental group.
    pub fn free_nodes(&self) -> Vec<usize> {
        (1..=self.system.rank())
            .filter(|i| !self.theta.contains(i))
            .collect()
    }
}

/// A defining relation of the fundamental group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Relation {
    /// `c_node = 1`.
    Kill { node: usize },
    /// `c_i c_j c_i^-1 c_j^-sign = 1`.
    Twist { i: usize, j: usize, sign: i8 },
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Relation::Kill { node } => write!(f, "c{node} = 1"),
            Relation::Twist { i, j, sign } => {
                let tail = if sign > 0 { "^-1" } else { "" };
                write!(f, "c{i} c{j} c{i}^-1 c{j}{tail} = 1")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Pi1Presentation {
    /// Generator labels `c_1 .. c_l`, one per simple node.
    pub generators: Vec<usize>,
    pub relations: Vec<Relation>,
}

/// Fundamental group of a minimal flag manifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Pi1Minimal {
    CyclicInfinite,
    CyclicTwo,
}

impl Pi1Minimal {
    pub fn symbol(self) -> &'static str {
        match self {
            Pi1Minimal::CyclicInfinite => "Z",
            Pi1Minimal::CyclicTwo => "Z2",
        }
    }

    /// The invariant-factor list of the group (`[0]` for Z, `[2]` for Z2).
    pub fn invariant_factors(self) -> Vec<i64> {
        match self {
            Pi1Minimal::CyclicInfinite => vec![0],
            Pi1Minimal::CyclicTwo => vec![2],
        }
    }
}

/// `(-1)^<alpha_i^vee, alpha_j>`, where `<alpha_i^vee, alpha_j> = 2<alpha_i, alpha_j>/<alpha_i, alpha_i>`.
pub fn epsilon(sys: &RootSystem, i: usize, j: usize) -> Result<i8> {
    let alpha_i = sys.simple_root(i)?;
    let alpha_j = sys.simple_root(j)?;
    let k = sys.killing_number(alpha_j, alpha_i)?;
    Ok(if k.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// Generators `c_j` for every simple node and the relations: `Kill(j)` for
/// `j` in theta and `Twist(i, j, eps(i, j))` for every ordered pair `i != j`.
pub fn pi1_presentation(flag: &FlagSpec<'_>) -> Result<Pi1Presentation> {
    let sys = flag.system();
    let l = sys.rank();
    let mut relations: Vec<Relation> = flag
        .theta()
        .iter()
        .map(|&node| Relation::Kill { node })
        .collect();
    for i in 1..=l {
        for j in 1..=l {
            if i != j {
                relations.push(Relation::Twist {
                    i,
                    j,
                    sign: epsilon(sys, i, j)?,
                });
            }
        }
    }
    Ok(Pi1Presentation {
        generators: (1..=l).collect(),
        relations,
    })
}

/// Invariant factors of the abelianised fundamental group, over the free
/// abelian group on the generators outside theta.
///
/// Abelianising `c_i c_j c_i^-1 c_j^-eps = 1` leaves `(1 - eps) c_j = 0`,
/// and `Kill` relations remove their generator.
pub fn pi1_abelianized(flag: &FlagSpec<'_>) -> Result<Vec<i64>> {
    let presentation = pi1_presentation(flag)?;
    let free = flag.free_nodes();
    let column = |node: usize| free.iter().position(|&n| n == node);

    let mut rows = Vec::new();
    for relation in &presentation.relations {
        let mut row = vec![0i64; free.len()];
        match *relation {
            Relation::Kill { node } => {
                if let Some(c) = column(node) {
                    row[c] = 1;
                }
            }
            Relation::Twist { j, sign, .. } => {
                if let Some(c) = column(j) {
                    row[c] = 1 - i64::from(sign);
                }
            }
        }
        if row.iter().any(|&x| x != 0) {
            rows.push(row);
        }
    }
    Ok(invariant_factors(&rows, free.len()))
}

/// Fundamental group of the minimal flag manifold with node `beta` removed.
///
/// It is Z2 except on the circle (A1) and at the long end node of the
/// `C_l` diagram, where it is Z. The B2 diagram is the C2 diagram, so its long
/// node 1 is that exception as well.
pub fn pi1_minimal(sys: &RootSystem, beta: usize) -> Result<Pi1Minimal> {
    sys.check_node(beta)?;
    let t = sys.lie_type();
    let infinite = match t.family() {
        Family::A => t.rank() == 1,
        Family::C => beta == t.rank(),
        Family::B => t.rank() == 2 && beta == 1,
        _ => false,
    };
    Ok(if infinite {
        Pi1Minimal::CyclicInfinite
    } else {
        Pi1Minimal::CyclicTwo
    })
}
