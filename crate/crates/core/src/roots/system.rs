use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use super::lie_type::LieType;
use crate::error::{Error, Result};
use crate::rational::{as_integer, q, solve, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum LengthClass {
    Long,
    Short,
}

/// A root written as `n_1 alpha_1 + ... + n_l alpha_l`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Root {
    coeffs: Vec<i64>,
    length: LengthClass,
}

impl Root {
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn length(&self) -> LengthClass {
        self.length
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().all(|&n| n >= 0)
    }

    /// Simple nodes (1-based) carrying a nonzero coefficient.
    pub fn support(&self) -> BTreeSet<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &n)| n != 0)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn negated(&self) -> Root {
        Root {
            coeffs: self.coeffs.iter().map(|n| -n).collect(),
            length: self.length,
        }
    }

    /// Renders the root as `a1 + 2a2 + a3`.
    pub fn label(&self) -> String {
        let mut out = String::new();
        for (i, &n) in self.coeffs.iter().enumerate().filter(|(_, &n)| n != 0) {
            let node = i + 1;
            if out.is_empty() {
                if n < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if n < 0 { " - " } else { " + " });
            }
            if n.abs() != 1 {
                out.push_str(&n.abs().to_string());
            }
            out.push_str(&format!("a{node}"));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// All roots of a simple type together with the exact inner form.
#[derive(Debug, Clone)]
pub struct RootSystem {
    lie_type: LieType,
    gram: Vec<Vec<Q>>,
    simple: Vec<Root>,
    roots: Vec<Root>,
    lookup: BTreeMap<Vec<i64>, LengthClass>,
    /// Row `j` holds the coordinates of the fundamental weight `omega_{j+1}`
    /// in the basis of simple roots.
    weights: Vec<Vec<Q>>,
    /// Entry `(i, j)` is `<omega_{i+1}, alpha_{j+1}>`.
    weight_pairings: Vec<Vec<Q>>,
    highest: Root,
    dominant_short: Option<Root>,
}

const CLOSURE_LIMIT: usize = 10_000;

impl RootSystem {
    /// Builds the root system by closing the simple roots under the simple
    /// reflections, then checks the result against the structural invariants.
    pub fn build(lie_type: LieType) -> Result<RootSystem> {
        let l = lie_type.rank();
        let (lengths, edges) = lie_type.diagram();

        let mut gram = vec![vec![q(0); l]; l];
        for i in 0..l {
            gram[i][i] = lengths[i];
        }
        for &(i, j) in &edges {
            let entry = -lengths[i].max(lengths[j]) / q(2);
            gram[i][j] = entry;
            gram[j][i] = entry;
        }

        let long_length = lengths.iter().copied().max().expect("rank >= 1");
        let inner = |a: &[i64], b: &[i64]| bilinear(&gram, a, b);

        let unit = |i: usize| {
            let mut v = vec![0i64; l];
            v[i] = 1;
            v
        };

        let mut seen: BTreeSet<Vec<i64>> = (0..l).map(unit).collect();
        let mut queue: VecDeque<Vec<i64>> = seen.iter().cloned().collect();
        while let Some(beta) = queue.pop_front() {
            for i in 0..l {
                let alpha = unit(i);
                let k = q(2) * inner(&beta, &alpha) / inner(&alpha, &alpha);
                let k = as_integer(&k).ok_or_else(|| {
                    Error::Consistency(format!("non-integral Killing number for {beta:?}"))
                })?;
                let mut image = beta.clone();
                image[i] -= k;
                if seen.insert(image.clone()) {
                    if seen.len() > CLOSURE_LIMIT {
                        return Err(Error::Consistency(
                            "reflection closure does not terminate".into(),
                        ));
                    }
                    queue.push_back(image);
                }
            }
        }

        let mut lookup = BTreeMap::new();
        let mut roots = Vec::with_capacity(seen.len());
        for coeffs in seen {
            let sign_ok = coeffs.iter().all(|&n| n >= 0) || coeffs.iter().all(|&n| n <= 0);
            if !sign_ok {
                return Err(Error::Consistency(format!("mixed-sign root {coeffs:?}")));
            }
            let norm = inner(&coeffs, &coeffs);
            let length = if norm == long_length {
                LengthClass::Long
            } else if lengths.contains(&norm) {
                LengthClass::Short
            } else {
                return Err(Error::Consistency(format!(
                    "root {coeffs:?} has unexpected squared length {norm}"
                )));
            };
            lookup.insert(coeffs.clone(), length);
            roots.push(Root { coeffs, length });
        }
        roots.sort_by(|a, b| {
            a.height()
                .cmp(&b.height())
                .then_with(|| b.coeffs.cmp(&a.coeffs))
        });

        let simple: Vec<Root> = (0..l)
            .map(|i| Root {
                coeffs: unit(i),
                length: lookup[&unit(i)],
            })
            .collect();

        // <alpha_i, omega_j> = delta_ij <alpha_i, alpha_i> / 2, so omega_j
        // solves gram * c = (|alpha_j|^2 / 2) e_j.
        let mut weights = Vec::with_capacity(l);
        for j in 0..l {
            let mut rhs = vec![q(0); l];
            rhs[j] = lengths[j] / q(2);
            let c = solve(&gram, &rhs)
                .ok_or_else(|| Error::Consistency("Gram matrix is singular".into()))?;
            weights.push(c);
        }
        let weight_pairings: Vec<Vec<Q>> = weights
            .iter()
            .map(|w| {
                (0..l)
                    .map(|j| (0..l).map(|k| w[k] * gram[k][j]).sum())
                    .collect()
            })
            .collect();

        let mut sys = RootSystem {
            lie_type,
            gram,
            simple,
            roots,
            lookup,
            weights,
            weight_pairings,
            highest: Root {
                coeffs: vec![],
                length: LengthClass::Long,
            },
            dominant_short: None,
        };
        sys.highest = sys.find_highest_root()?;
        sys.dominant_short = sys.scan_dominant_short_root()?;
        Ok(sys)
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn gram(&self) -> &[Vec<Q>] {
        &self.gram
    }

    pub fn simple_roots(&self) -> &[Root] {
        &self.simple
    }

    pub fn simple_root(&self, node: usize) -> Result<&Root> {
        self.check_node(node)?;
        Ok(&self.simple[node - 1])
    }

    /// Every root, sorted by height (negative roots first).
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Root> {
        self.roots.iter().filter(|r| r.is_positive())
    }

    pub fn contains(&self, coeffs: &[i64]) -> bool {
        self.lookup.contains_key(coeffs)
    }

    /// Looks up a root by its coefficient vector.
    pub fn root(&self, coeffs: &[i64]) -> Result<Root> {
        self.lookup
            .get(coeffs)
            .map(|&length| Root {
                coeffs: coeffs.to_vec(),
                length,
            })
            .ok_or_else(|| Error::NotARoot(coeffs.to_vec()))
    }

    /// Row `node - 1`: coordinates of the fundamental weight in the simple-root basis.
    pub fn fundamental_weight(&self, node: usize) -> Result<&[Q]> {
        self.check_node(node)?;
        Ok(&self.weights[node - 1])
    }

    /// Matrix of `<omega_i, alpha_j>`.
    pub fn weight_pairings(&self) -> &[Vec<Q>] {
        &self.weight_pairings
    }

    pub fn inner(&self, a: &[i64], b: &[i64]) -> Q {
        bilinear(&self.gram, a, b)
    }

    pub fn check_node(&self, node: usize) -> Result<()> {
        if (1..=self.rank()).contains(&node) {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange {
                node,
                rank: self.rank(),
            })
        }
    }

    fn check_member(&self, root: &Root) -> Result<()> {
        if self.contains(&root.coeffs) {
            Ok(())
        } else {
            Err(Error::NotARoot(root.coeffs.clone()))
        }
    }

    /// `2<alpha, beta> / <beta, beta>`, the pairing of `alpha` with the coroot of `beta`.
    pub fn killing_number(&self, alpha: &Root, beta: &Root) -> Result<i64> {
        self.check_member(alpha)?;
        self.check_member(beta)?;
        let k =
            q(2) * self.inner(&alpha.coeffs, &beta.coeffs) / self.inner(&beta.coeffs, &beta.coeffs);
        as_integer(&k).ok_or_else(|| {
            Error::Consistency(format!(
                "Killing number of {} against {} is {k}",
                alpha.label(),
                beta.label()
            ))
        })
    }

    /// `omega_j(H_alpha^vee)` from the coefficient shortcut
    /// `n_j <alpha_j, alpha_j> / <alpha, alpha>`.
    pub fn weight_pairing(&self, node: usize, alpha: &Root) -> Result<i64> {
        self.check_node(node)?;
        self.check_member(alpha)?;
        let j = node - 1;
        let value = q(alpha.coeffs[j]) * self.gram[j][j] / self.inner(&alpha.coeffs, &alpha.coeffs);
        as_integer(&value).ok_or_else(|| {
            Error::Consistency(format!(
                "weight pairing omega_{node}({}) = {value} is not integral",
                alpha.label()
            ))
        })
    }

    /// Same quantity as [`weight_pairing`](Self::weight_pairing), evaluated as
    /// `2<omega_j, alpha> / <alpha, alpha>` through the solved weight coordinates.
    pub fn weight_pairing_via_weights(&self, node: usize, alpha: &Root) -> Result<i64> {
        self.check_node(node)?;
        self.check_member(alpha)?;
        let omega = &self.weights[node - 1];
        let pairing: Q = omega
            .iter()
            .zip(&self.gram)
            .map(|(w, row)| *w * self.inner_row(row, &alpha.coeffs))
            .sum();
        let value = q(2) * pairing / self.inner(&alpha.coeffs, &alpha.coeffs);
        as_integer(&value).ok_or_else(|| {
            Error::Consistency(format!(
                "weight pairing omega_{node}({}) = {value} is not integral",
                alpha.label()
            ))
        })
    }

    /// The unique positive root `mu` for which `mu + alpha_i` is never a root.
    pub fn highest_root(&self) -> &Root {
        &self.highest
    }

    /// The dominant short root, absent in simply laced types.
    pub fn dominant_short_root(&self) -> Option<&Root> {
        self.dominant_short.as_ref()
    }

    /// `<alpha, alpha_i> >= 0` for every simple root.
    pub fn is_chamber_closure(&self, alpha: &Root) -> bool {
        (0..self.rank()).all(|i| self.inner_with_simple(&alpha.coeffs, i) >= q(0))
    }

    /// Number of Weyl-group orbits on the roots (one per length class present).
    pub fn weyl_orbit_count(&self) -> usize {
        let classes: BTreeSet<LengthClass> = self.roots.iter().map(|r| r.length).collect();
        classes.len()
    }

    /// Image of `alpha` under the simple reflection at `node`.
    pub fn reflect(&self, alpha: &Root, node: usize) -> Result<Root> {
        let simple = self.simple_root(node)?.clone();
        let k = self.killing_number(alpha, &simple)?;
        let mut coeffs = alpha.coeffs.clone();
        coeffs[node - 1] -= k;
        self.root(&coeffs)
    }

    /// Moves `alpha` into the closed fundamental chamber by simple
    /// reflections. Returns the dominant root and the nodes used, in order.
    pub fn dominant_representative(&self, alpha: &Root) -> Result<(Root, Vec<usize>)> {
        self.check_member(alpha)?;
        let mut current = alpha.clone();
        let mut word = Vec::new();
        // Each step raises the height strictly, so this terminates.
        while let Some(i) =
            (0..self.rank()).find(|&i| self.inner_with_simple(&current.coeffs, i) < q(0))
        {
            current = self.reflect(&current, i + 1)?;
            word.push(i + 1);
            if word.len() > CLOSURE_LIMIT {
                return Err(Error::Consistency(
                    "dominantization does not terminate".into(),
                ));
            }
        }
        Ok((current, word))
    }

    fn inner_row(&self, row: &[Q], coeffs: &[i64]) -> Q {
        row.iter().zip(coeffs).map(|(g, &n)| *g * q(n)).sum()
    }

    fn inner_with_simple(&self, a: &[i64], i: usize) -> Q {
        (0..self.rank()).map(|k| q(a[k]) * self.gram[k][i]).sum()
    }

    fn find_highest_root(&self) -> Result<Root> {
        let l = self.rank();
        let maximal: Vec<&Root> = self
            .positive_roots()
            .filter(|r| {
                (0..l).all(|i| {
                    let mut up = r.coeffs.clone();
                    up[i] += 1;
                    !self.contains(&up)
                })
            })
            .collect();
        match maximal.as_slice() {
            [mu] => Ok((*mu).clone()),
            other => Err(Error::Consistency(format!(
                "expected one highest root, found {}",
                other.len()
            ))),
        }
    }

    fn scan_dominant_short_root(&self) -> Result<Option<Root>> {
        if self.weyl_orbit_count() == 1 {
            return Ok(None);
        }
        let candidates: Vec<&Root> = self
            .roots
            .iter()
            .filter(|r| r.length == LengthClass::Short && self.is_chamber_closure(r))
            .collect();
        match candidates.as_slice() {
            [mu] => Ok(Some((*mu).clone())),
            other => Err(Error::Consistency(format!(
                "expected one dominant short root, found {}",
                other.len()
            ))),
        }
    }
}

fn bilinear(gram: &[Vec<Q>], a: &[i64], b: &[i64]) -> Q {
    let mut acc = q(0);
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            if bj != 0 {
                acc += q(ai * bj) * gram[i][j];
            }
        }
    }
    acc
}
