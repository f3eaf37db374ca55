use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{q, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    /// Human-readable description of the admissible ranks.
    pub fn admissible_ranks(self) -> &'static str {
        match self {
            Family::A => "l >= 1",
            Family::B => "l >= 2",
            Family::C => "l >= 3",
            Family::D => "l >= 4",
            Family::E => "l in {6, 7, 8}",
            Family::F => "l = 4",
            Family::G => "l = 2",
        }
    }

    pub fn admits(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self, Family::A | Family::D | Family::E)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

/// A simple Lie type such as `B3` or `E8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if family.admits(rank) {
            Ok(Self { family, rank })
        } else {
            Err(Error::InadmissibleRank {
                family: family.letter(),
                rank,
                allowed: family.admissible_ranks(),
            })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Every admissible type with rank at most `max_rank`, in family order.
    pub fn all_up_to(max_rank: usize) -> Vec<LieType> {
        Family::ALL
            .iter()
            .flat_map(|&family| {
                (1..=max_rank).filter_map(move |rank| LieType::new(family, rank).ok())
            })
            .collect()
    }

    /// Squared lengths of the simple roots and the edges of the Dynkin
    /// diagram (0-based node pairs).
    pub(crate) fn diagram(&self) -> (Vec<Q>, Vec<(usize, usize)>) {
        let l = self.rank;
        let long = q(2);
        let short = q(1);
        let chain = |n: usize| (1..n).map(|i| (i - 1, i)).collect::<Vec<_>>();
        match self.family {
            Family::A => (vec![long; l], chain(l)),
            Family::B => {
                let mut lengths = vec![long; l];
                lengths[l - 1] = short;
                (lengths, chain(l))
            }
            Family::C => {
                let mut lengths = vec![short; l];
                lengths[l - 1] = long;
                (lengths, chain(l))
            }
            Family::D => {
                let mut edges = chain(l - 1);
                edges.push((l - 3, l - 1));
                (vec![long; l], edges)
            }
            Family::E => {
                // Chain of l-1 nodes, the last node hangs off the chain at
                // position 3 (E6), 4 (E7) or 5 (E8), counting from 1.
                let mut edges = chain(l - 1);
                edges.push((l - 4, l - 1));
                (vec![long; l], edges)
            }
            Family::F => (vec![long, long, short, short], chain(4)),
            Family::G => (vec![long, Q::new(2, 3)], chain(2)),
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    /// Parses strings like `"B3"` or `"e8"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family: Family = chars
            .next()
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))?
            .to_string()
            .parse()?;
        let rank = chars
            .as_str()
            .parse::<usize>()
            .map_err(|_| Error::UnknownFamily(s.to_string()))?;
        LieType::new(family, rank)
    }
}
