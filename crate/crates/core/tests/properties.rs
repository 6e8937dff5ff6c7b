use nilclass::catalog::{reproduce_table, FamilyPoint, Manifest, TableId, ALGEBRAS};
use nilclass::complex::{ascending_j_series, realify, standard_map};
use nilclass::invariants::{casimir_count_seeded, fingerprint};
use nilclass::kernel::rational::int;
use nilclass::kernel::{Gauss, Rational, DEFAULT_TRIALS};
use nilclass::lie::LieAlgebra;
use nilclass::parse::{parse_algebra, parse_eqs, parse_real, print_algebra, Env};
use proptest::prelude::*;

/// Strictly triangular tables: `[e_i, e_j]` only involves `e_k` with `k > j`, so nilpotent.
fn triangular(max_dim: usize) -> impl Strategy<Value = LieAlgebra<Rational>> {
    (2..=max_dim).prop_flat_map(|n| {
        let slots: Vec<(usize, usize, usize)> = (0..n)
            .flat_map(|k| (0..k).flat_map(move |j| (0..j).map(move |i| (i, j, k))))
            .collect();
        let len = slots.len();
        proptest::collection::vec(prop_oneof![3 => Just(0i64), 1 => -3i64..=3], len).prop_map(move |cs| {
            let mut g = LieAlgebra::abelian(n);
            for ((i, j, k), c) in slots.iter().zip(cs) {
                if c != 0 {
                    g.set(*i, *j, *k, int(c)).unwrap();
                }
            }
            g
        })
    })
}

fn family_points() -> Vec<FamilyPoint> {
    let m = Manifest::builtin();
    let mut out: Vec<FamilyPoint> = Vec::new();
    for r in &m.family_i {
        out.extend(r.points.iter().map(|s| FamilyPoint::I(s.point().unwrap())));
    }
    for r in &m.family_ii {
        out.extend(r.points.iter().map(|s| FamilyPoint::II(s.point().unwrap())));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, ..ProptestConfig::default() })]

    #[test]
    fn bracket_and_d2_jacobi_agree(g in triangular(6)) {
        let r = g.jacobi_check();
        prop_assert!(r.consistent());
        prop_assert!(g.is_nilpotent());
    }

    #[test]
    fn printed_tables_parse_back(g in triangular(6)) {
        let back = parse_algebra::<Rational>(&print_algebra(&g), &Env::new(None)).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn series_are_nested(g in triangular(6)) {
        let asc = g.ascending_series().terms;
        for w in asc.windows(2) {
            prop_assert!(w[0].is_subspace_of(&w[1]));
        }
        let desc = g.descending_series().terms;
        for w in desc.windows(2) {
            prop_assert!(w[1].is_subspace_of(&w[0]));
        }
    }

    #[test]
    fn casimir_parity_and_seed_stability(g in triangular(6), seed in any::<u64>()) {
        prop_assume!(g.jacobi_check().passes());
        let a = casimir_count_seeded(&g, DEFAULT_TRIALS, seed).unwrap();
        let b = casimir_count_seeded(&g, DEFAULT_TRIALS, seed ^ 0x5555).unwrap();
        prop_assert_eq!(a, b);
        prop_assert_eq!((g.dim() - a) % 2, 0);
    }
}

#[test]
fn j_series_sits_in_ascending_series_and_is_j_stable() {
    for p in family_points() {
        let eqs = p.eqs::<Gauss>().unwrap();
        let r = realify(&eqs, &standard_map::<Gauss>(4)).unwrap();
        let asc = r.algebra.ascending_series().terms;
        for (k, a) in ascending_j_series(&r.algebra, &r.j).iter().enumerate() {
            assert!(a.is_subspace_of(&asc[k.min(asc.len() - 1)]), "{} a_{k}", p.label());
            for v in a.basis() {
                assert!(a.contains(&r.j.mul_vec(v).unwrap()), "{} a_{k} not J-stable", p.label());
            }
        }
    }
}

#[test]
fn catalog_round_trips() {
    for s in ALGEBRAS.iter() {
        let ast = parse_real(s.notation).unwrap();
        assert_eq!(parse_real(&ast.print()).unwrap(), ast, "{}", s.name);
    }
    for c in &Manifest::builtin().algebras {
        for (label, g) in c.instances().unwrap() {
            let back = parse_algebra::<Rational>(&print_algebra(&g), &Env::new(None)).unwrap();
            assert_eq!(back, g, "{label}");
        }
    }
    for p in family_points() {
        let eqs = p.eqs::<Gauss>().unwrap();
        assert_eq!(parse_eqs::<Gauss>(&eqs.render(), &Env::new(None)).unwrap(), eqs, "{}", p.label());
    }
}

#[test]
fn reports_are_deterministic() {
    let m = Manifest::builtin();
    for id in [TableId::T3, TableId::T4, TableId::T9, TableId::B] {
        let a = serde_json::to_string(&reproduce_table(id, &m, 7).unwrap()).unwrap();
        let b = serde_json::to_string(&reproduce_table(id, &m, 7).unwrap()).unwrap();
        assert_eq!(a, b, "{id}");
    }
    for c in &m.algebras {
        for (label, g) in c.instances().unwrap() {
            assert_eq!(fingerprint(&g).unwrap(), fingerprint(&g).unwrap(), "{label}");
        }
    }
}
