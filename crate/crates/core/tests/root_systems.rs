use liegen_core::{Family, LengthClass, LieType, Root, RootSystem};
use num_rational::Ratio;
use proptest::prelude::*;

fn all_types() -> Vec<LieType> {
    LieType::all_up_to(8)
}

fn build(t: LieType) -> RootSystem {
    RootSystem::build(t).unwrap()
}

/// Number of positive roots, from the classification tables.
fn positive_count(t: LieType) -> usize {
    let l = t.rank();
    match (t.family(), l) {
        (Family::A, _) => l * (l + 1) / 2,
        (Family::B | Family::C, _) => l * l,
        (Family::D, _) => l * (l - 1),
        (Family::E, 6) => 36,
        (Family::E, 7) => 63,
        (Family::E, 8) => 120,
        (Family::F, 4) => 24,
        (Family::G, 2) => 6,
        _ => unreachable!(),
    }
}

/// Number of short roots (positive and negative).
fn short_count(t: LieType) -> usize {
    let l = t.rank();
    match t.family() {
        Family::B => 2 * l,
        Family::C => 2 * l * (l - 1),
        Family::F => 24,
        Family::G => 6,
        _ => 0,
    }
}

/// Coxeter number; the highest root has height `h - 1`.
fn coxeter_number(t: LieType) -> i64 {
    let l = t.rank() as i64;
    match (t.family(), l) {
        (Family::A, _) => l + 1,
        (Family::B | Family::C, _) => 2 * l,
        (Family::D, _) => 2 * l - 2,
        (Family::E, 6) => 12,
        (Family::E, 7) => 18,
        (Family::E, 8) => 30,
        (Family::F, 4) => 12,
        (Family::G, 2) => 6,
        _ => unreachable!(),
    }
}

#[test]
fn thirty_one_types_up_to_rank_eight() {
    assert_eq!(all_types().len(), 31);
}

#[test]
fn root_counts_match_tables() {
    for t in all_types() {
        let sys = build(t);
        assert_eq!(sys.roots().len(), 2 * positive_count(t), "{t}");
        assert_eq!(sys.positive_roots().count(), positive_count(t), "{t}");
        let shorts = sys
            .roots()
            .iter()
            .filter(|r| r.length() == LengthClass::Short)
            .count();
        assert_eq!(shorts, short_count(t), "{t}");
    }
}

#[test]
fn root_set_is_closed_under_reflections_and_negation() {
    for t in all_types() {
        let sys = build(t);
        for r in sys.roots() {
            assert!(sys.contains(r.negated().coeffs()), "{t}");
            for node in 1..=t.rank() {
                let image = sys.reflect(r, node).unwrap();
                assert_eq!(image.length(), r.length(), "{t}");
            }
        }
    }
}

#[test]
fn highest_root_height_is_coxeter_number_minus_one() {
    for t in all_types() {
        let sys = build(t);
        let max_height = sys.roots().iter().map(Root::height).max().unwrap();
        assert_eq!(sys.highest_root().height(), coxeter_number(t) - 1, "{t}");
        assert_eq!(max_height, coxeter_number(t) - 1, "{t}");
        assert!(sys.is_chamber_closure(sys.highest_root()), "{t}");
    }
}

#[test]
fn dominant_roots_are_exactly_the_chamber_roots() {
    for t in all_types() {
        let sys = build(t);
        let dominant: Vec<&Root> = sys
            .positive_roots()
            .filter(|r| sys.is_chamber_closure(r))
            .collect();
        let expected = usize::from(!t.family().is_simply_laced()) + 1;
        assert_eq!(dominant.len(), expected, "{t}");
        assert_eq!(sys.weyl_orbit_count(), expected, "{t}");
        assert!(dominant.contains(&sys.highest_root()));
        if let Some(s) = sys.dominant_short_root() {
            assert!(dominant.contains(&s));
            assert_eq!(s.length(), LengthClass::Short);
        }
    }
}

#[test]
fn pairing_routes_agree_everywhere() {
    for t in all_types() {
        let sys = build(t);
        for r in sys.roots() {
            for node in 1..=t.rank() {
                assert_eq!(
                    sys.weight_pairing(node, r).unwrap(),
                    sys.weight_pairing_via_weights(node, r).unwrap(),
                    "{t} {r:?} node {node}"
                );
            }
        }
    }
}

fn type_and_root() -> impl Strategy<Value = (LieType, usize, usize)> {
    (
        0..31usize,
        any::<prop::sample::Index>(),
        any::<prop::sample::Index>(),
    )
        .prop_map(|(ti, ri, ni)| {
            let t = all_types()[ti];
            let count = 2 * positive_count(t);
            (t, ri.index(count), ni.index(t.rank()) + 1)
        })
}

proptest! {
    #[test]
    fn reflection_is_an_involution((t, ri, node) in type_and_root()) {
        let sys = build(t);
        let r = &sys.roots()[ri];
        let back = sys.reflect(&sys.reflect(r, node).unwrap(), node).unwrap();
        prop_assert_eq!(&back, r);
    }

    #[test]
    fn killing_numbers_are_bounded((t, ri, node) in type_and_root()) {
        let sys = build(t);
        let r = &sys.roots()[ri];
        let simple = sys.simple_root(node).unwrap();
        let k = sys.killing_number(r, simple).unwrap();
        prop_assert!((-3..=3).contains(&k));
        // Cauchy-Schwarz: the product of the two Killing numbers is 4cos^2 <= 4.
        let k2 = sys.killing_number(simple, r).unwrap();
        prop_assert!(k * k2 <= 4 && k * k2 >= 0);
    }

    #[test]
    fn dominant_word_replays((t, ri, _node) in type_and_root()) {
        let sys = build(t);
        let r = &sys.roots()[ri];
        let (dominant, word) = sys.dominant_representative(r).unwrap();
        prop_assert!(sys.is_chamber_closure(&dominant));
        prop_assert_eq!(dominant.length(), r.length());
        let mut current = r.clone();
        for &i in &word {
            current = sys.reflect(&current, i).unwrap();
        }
        prop_assert_eq!(current, dominant);
    }
}

/// Determinant by exact rational elimination.
#[allow(clippy::needless_range_loop)]
fn det(mut m: Vec<Vec<Ratio<i64>>>) -> Ratio<i64> {
    let n = m.len();
    let mut d = Ratio::from_integer(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| m[r][c] != Ratio::from_integer(0)) else {
            return Ratio::from_integer(0);
        };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= m[c][c];
        for r in c + 1..n {
            let f = m[r][c] / m[c][c];
            for k in c..n {
                let delta = f * m[c][k];
                m[r][k] -= delta;
            }
        }
    }
    d
}

/// Determinant of the Cartan matrix, from the classification tables.
fn cartan_determinant(t: LieType) -> i64 {
    match t.family() {
        Family::A => t.rank() as i64 + 1,
        Family::B | Family::C => 2,
        Family::D => 4,
        Family::E => 9 - t.rank() as i64,
        Family::F | Family::G => 1,
    }
}

#[test]
fn cartan_matrix_has_tabulated_determinant() {
    for t in all_types() {
        let sys = build(t);
        let g = sys.gram();
        let l = t.rank();
        let cartan: Vec<Vec<Ratio<i64>>> = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| Ratio::from_integer(2) * g[i][j] / g[i][i])
                    .collect()
            })
            .collect();
        for (i, row) in cartan.iter().enumerate() {
            assert_eq!(row[i], Ratio::from_integer(2));
            assert!(row.iter().all(|c| c.is_integer() && *c.numer() >= -3));
        }
        assert_eq!(
            det(cartan),
            Ratio::from_integer(cartan_determinant(t)),
            "{t}"
        );
    }
}

#[test]
fn inner_form_is_positive_definite() {
    for t in all_types() {
        let g = build(t).gram().to_vec();
        for k in 1..=t.rank() {
            let minor: Vec<Vec<_>> = g[..k].iter().map(|row| row[..k].to_vec()).collect();
            assert!(det(minor) > Ratio::from_integer(0), "{t} minor {k}");
        }
    }
}

#[test]
#[allow(clippy::needless_range_loop)]
fn fundamental_weights_are_dual_to_coroots() {
    for t in all_types() {
        let sys = build(t);
        let g = sys.gram();
        let l = t.rank();
        for j in 1..=l {
            let omega = sys.fundamental_weight(j).unwrap();
            for i in 0..l {
                let inner: Ratio<i64> = (0..l).map(|a| omega[a] * g[a][i]).sum();
                let expected = Ratio::from_integer(i64::from(i + 1 == j));
                assert_eq!(Ratio::from_integer(2) * inner / g[i][i], expected, "{t}");
            }
        }
    }
}
