//! Acceptance suite: one line per criterion.
//!
//! Runs without the libtest harness so the verdict lines are always printed. Criteria that
//! cannot be met as stated are listed in `KNOWN_UNATTAINABLE`; they print FAIL with the
//! reason and only break the run if they unexpectedly start passing.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use nilclass::catalog::appendix::row as appendix_row;
use nilclass::catalog::certificates::{certificates, mutant, verify, Ring};
use nilclass::catalog::families::{family_i_symbolic, family_ii_symbolic, FAMILY_I_TEMPLATE, FAMILY_II_TEMPLATE};
use nilclass::catalog::{
    catalog_dump, check_row, real_algebra, reproduce_table, FamilyIIParams, FamilyIParams, FamilyPoint, Manifest,
    TableId, TableReport, ALGEBRAS,
};
use nilclass::complex::generic::{condition_polys, jacobi_conditions_general, symbolic_env};
use nilclass::complex::{ascending_j_series, classify_j_type, realify, standard_map, ComplexStructEqs};
use nilclass::exterior::Form;
use nilclass::invariants::{betti_all, casimir_count_seeded, casimir_matrix, ce_differential, independent_classes, minors_of_order};
use nilclass::kernel::complex::gauss;
use nilclass::kernel::rational::{int, rat};
use nilclass::kernel::{pow, Complex, Gauss, Matrix, Poly, QuadExt, Rational, Scalar, DEFAULT_SEED, DEFAULT_TRIALS};
use nilclass::lie::LieAlgebra;
use nilclass::parse::{eval_str, parse_algebra, parse_eqs, parse_real, print_algebra, Env};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

type Outcome = Result<String, String>;

/// Criteria that cannot hold as written, with the reason.
const KNOWN_UNATTAINABLE: &[(usize, &str)] = &[(
    3,
    "five rows are finite sets with only two admissible points, both sampled",
)];

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn table(id: TableId) -> Result<TableReport, String> {
    reproduce_table(id, &Manifest::builtin(), DEFAULT_SEED).map_err(|e| format!("{id}: {e}"))
}

fn failing_rows(r: &TableReport) -> String {
    r.rows
        .iter()
        .filter(|row| !row.pass)
        .map(|row| format!("{} {}", row.row, row.sample))
        .collect::<Vec<_>>()
        .join(", ")
}

fn table_passes(r: &TableReport) -> Result<(), String> {
    ensure(r.pass && !r.rows.is_empty(), || format!("{} failing rows: {}", r.table, failing_rows(r)))
}

fn class_instances(class: &str) -> Vec<(String, LieAlgebra<Rational>)> {
    Manifest::builtin()
        .algebras
        .iter()
        .find(|c| c.class == class)
        .unwrap_or_else(|| panic!("manifest lacks {class}"))
        .instances()
        .unwrap()
}

fn all_instances() -> Vec<(String, LieAlgebra<Rational>)> {
    Manifest::builtin()
        .algebras
        .iter()
        .flat_map(|c| c.instances().unwrap())
        .collect()
}

fn tuple(v: &[usize]) -> String {
    format!("({})", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

// 1

fn c1_symbolic_integrability() -> Outcome {
    let mut bad = Vec::new();
    let mut n = 0;
    for e in 0..2u8 {
        for nu in 0..2u8 {
            for d in [1i8, -1] {
                let eqs = family_i_symbolic(e, nu, d).map_err(|x| x.to_string())?;
                n += 1;
                if !eqs.validate().is_empty() {
                    bad.push(format!("I(eps={e},nu={nu},delta={d})"));
                }
            }
        }
    }
    // Family II is defined with mu*nu = 0 and (eps, mu) != (0, 0); the first is forced by d^2 = 0
    let mut excluded = Vec::new();
    for e in 0..2u8 {
        for m in 0..2u8 {
            for nu in 0..2u8 {
                let zero = family_ii_symbolic(e, m, nu).map_err(|x| x.to_string())?.validate().is_empty();
                let admissible = m * nu == 0 && (e, m) != (0, 0);
                if admissible {
                    n += 1;
                    if !zero {
                        bad.push(format!("II(eps={e},mu={m},nu={nu})"));
                    }
                } else {
                    excluded.push(format!("({e},{m},{nu}):{}", if zero { "d2=0" } else { "d2!=0" }));
                    if m * nu != 0 && zero {
                        bad.push(format!("II(eps={e},mu={m},nu={nu}) integrable although mu*nu = 1"));
                    }
                }
            }
        }
    }
    ensure(bad.is_empty(), || format!("nonzero d^2: {}", bad.join(", ")))?;
    Ok(format!(
        "{n} admissible flag combinations (8 + 4), a and b symbolic, d^2 = 0 exactly; outside Family II {}",
        excluded.join(" ")
    ))
}

// 2

/// The Jacobi system as printed, one entry per condition.
const JACOBI_SYSTEM: [&str; 16] = [
    "A*H - B*G + conj(B)*D",
    "A*K",
    "B*K",
    "t*H",
    "t*K",
    "t*C",
    "K*conj(N) - P*conj(C) - conj(P)*G",
    "H*(L + conj(L))",
    "t*D",
    "t*G",
    "i*s*A - F*conj(P) - N*conj(C) + conj(N)*D",
    "P*conj(H) + conj(P)*H",
    "i*t*E + B*P",
    "i*s*B - E*conj(P) - N*conj(H)",
    "M*conj(B) + N*conj(E) + conj(M)*B + conj(N)*E",
    "i*t*F + A*P",
];

fn proportional(p: &Poly, q: &Poly) -> bool {
    match (p.leading(), q.leading()) {
        (Some((mp, cp)), Some((mq, cq))) if mp == mq => q.scale(&(cp.clone() / cq.clone())) == *p,
        _ => false,
    }
}

fn c2_jacobi_system() -> Outcome {
    let env = symbolic_env();
    let lib = condition_polys();
    let mut used = BTreeSet::new();
    for src in JACOBI_SYSTEM {
        let p = eval_str::<Poly>(src, &env).map_err(|e| e.to_string())?;
        let hit = lib
            .iter()
            .enumerate()
            .find(|(i, (_, q))| !used.contains(i) && proportional(&p, q))
            .map(|(i, _)| i);
        match hit {
            Some(i) => {
                used.insert(i);
            }
            None => return Err(format!("`{src}` has no counterpart in the library system")),
        }
    }
    ensure(used.len() == lib.len(), || "library system has extra conditions".into())?;
    let r = jacobi_conditions_general();
    ensure(r.unmatched_conditions.is_empty(), || format!("unwitnessed: {:?}", r.unmatched_conditions))?;
    ensure(r.equivalent(), || {
        format!("residual span {} joint {} condition {}", r.residual_span, r.joint_span, r.condition_span)
    })?;
    let singles: BTreeSet<&str> = r
        .slots
        .iter()
        .filter(|s| s.witnesses.len() == 1)
        .map(|s| s.witnesses[0].condition.as_str())
        .collect();
    // a slot mixing one new condition with directly reproduced ones reproduces it modulo those
    let mut modulo = Vec::new();
    for s in r.slots.iter().filter(|s| s.witnesses.len() > 1) {
        let fresh: Vec<&str> = s
            .witnesses
            .iter()
            .map(|w| w.condition.as_str())
            .filter(|c| !singles.contains(c))
            .collect();
        if let [c] = fresh[..] {
            let rest: Vec<&str> = s.witnesses.iter().map(|w| w.condition.as_str()).filter(|x| *x != c).collect();
            modulo.push((c, rest.join(", ")));
        }
    }
    let missing: Vec<&str> = lib
        .iter()
        .map(|(n, _)| *n)
        .filter(|n| !singles.contains(n) && !modulo.iter().any(|(c, _)| c == n))
        .collect();
    ensure(missing.is_empty(), || format!("not reproduced: {missing:?}"))?;
    let via: Vec<String> = modulo.iter().map(|(c, r)| format!("{c} modulo {r}")).collect();
    Ok(format!(
        "{} printed conditions matched; {} of {} nonzero d^2 slots are multiples of one condition; {}",
        JACOBI_SYSTEM.len(),
        r.single_matches(),
        r.slots.len(),
        if via.is_empty() { "no combined slots".to_string() } else { via.join("; ") }
    ))
}

// 3

/// Rows whose admissible set is finite, with its size.
fn finite_row_size(row: &str) -> Option<usize> {
    match row {
        "(0,0,1,0)" | "(0,0,1,1)" | "(1,1,0,2δ)" | "(0,0,0,1)" | "(0,1,0,a∈{0,1},0)" => Some(2),
        "(0,1,0,±1)" => Some(4),
        _ => None,
    }
}

fn c3_family_tables() -> Outcome {
    let m = Manifest::builtin();
    let t1 = table(TableId::T1)?;
    let t2 = table(TableId::T2)?;
    table_passes(&t1)?;
    table_passes(&t2)?;
    for r in t1.rows.iter().chain(&t2.rows) {
        for col in ["ascending", "center", "J-type"] {
            ensure(r.cells.iter().any(|c| c.column == col && c.pass), || {
                format!("{} {} lacks a passing {col} cell", r.row, r.sample)
            })?;
        }
    }
    // independent of the report: realify each sample and read the invariants off directly
    let mut checked = 0;
    let mut counts: Vec<(String, usize)> = Vec::new();
    for rs in &m.family_i {
        for s in &rs.points {
            let p = s.point().map_err(|e| e.to_string())?;
            let expected = p.table_row().ok_or("sample outside table")?.ascending_type;
            direct_check(&FamilyPoint::I(p), expected)?;
            checked += 1;
        }
        counts.push((rs.row.clone(), rs.points.len()));
    }
    for rs in &m.family_ii {
        for s in &rs.points {
            let p = s.point().map_err(|e| e.to_string())?;
            let expected = p.table_row().ok_or("sample outside table")?.ascending_type;
            direct_check(&FamilyPoint::II(p), expected)?;
            checked += 1;
        }
        counts.push((rs.row.clone(), rs.points.len()));
    }
    let thin: Vec<String> = counts
        .iter()
        .filter(|(_, n)| *n < 3)
        .map(|(r, n)| format!("{r}:{n}"))
        .collect();
    let uncovered: Vec<&String> = counts
        .iter()
        .filter(|(r, n)| *n < 3 && finite_row_size(r) != Some(*n))
        .map(|(r, _)| r)
        .collect();
    ensure(uncovered.is_empty(), || format!("rows under-sampled: {uncovered:?}"))?;
    let summary = format!("{checked} samples over {} rows exact (type, center 1, SnN)", counts.len());
    ensure(thin.is_empty(), || format!("{summary}; fewer than 3 points in {}", thin.join(" ")))?;
    Ok(summary)
}

fn direct_check(p: &FamilyPoint, expected: &[usize]) -> Result<(), String> {
    let eqs = p.eqs::<Gauss>().map_err(|e| e.to_string())?;
    let r = realify(&eqs, &standard_map::<Gauss>(4)).map_err(|e| e.to_string())?;
    let asc = r.algebra.ascending_type();
    ensure(asc == expected, || format!("{}: {} vs {}", p.label(), tuple(&asc), tuple(expected)))?;
    ensure(r.algebra.center().dim() == 1, || format!("{}: center", p.label()))?;
    ensure(classify_j_type(&r.algebra, &r.j).label() == "SnN", || format!("{}: J type", p.label()))
}

// 4

fn c4_algebra_tables() -> Outcome {
    let t3 = table(TableId::T3)?;
    let t8 = table(TableId::T8)?;
    table_passes(&t3)?;
    table_passes(&t8)?;
    let expected: &[(&str, &[usize])] = &[
        ("n1^0", &[1, 3, 8]),
        ("n1^1", &[1, 3, 8]),
        ("n2^0", &[1, 3, 6, 8]),
        ("n2^alpha", &[1, 3, 6, 8]),
        ("n3^0", &[1, 3, 6, 8]),
        ("n3^1", &[1, 3, 6, 8]),
        ("n4^{eta,1}", &[1, 3, 6, 8]),
        ("n4^{eta,theta}", &[1, 3, 6, 8]),
        ("n4^{eta,0}", &[1, 3, 6, 8]),
        ("n5", &[1, 4, 8]),
        ("n6", &[1, 4, 6, 8]),
        ("n7", &[1, 5, 8]),
        ("n8", &[1, 5, 6, 8]),
        ("m1^gamma", &[1, 3, 5, 8]),
        ("m2^0", &[1, 3, 5, 8]),
        ("m2^1", &[1, 3, 5, 8]),
        ("m3^{alpha,beta}", &[1, 3, 5, 8]),
        ("m4^gamma", &[1, 3, 5, 6, 8]),
    ];
    let mut n = 0;
    for (class, t) in expected {
        for (label, g) in class_instances(class) {
            let got = g.ascending_type();
            ensure(got == *t, || format!("{label}: {} vs {}", tuple(&got), tuple(t)))?;
            n += 1;
        }
    }
    Ok(format!("{n} sampled algebras in {} classes exact", expected.len()))
}

// 5

fn n1(gamma: Poly) -> LieAlgebra<Poly> {
    real_algebra::<Poly>("n1", &[("gamma", gamma)]).unwrap()
}

fn x(k: u32) -> Poly {
    Poly::var(&format!("x{k}"))
}

fn mono(c: i64, parts: &[(Poly, u32)]) -> Poly {
    parts
        .iter()
        .fold(Poly::from_int(c), |acc, (v, e)| acc * pow(v, *e))
}

fn c5_casimir() -> Outcome {
    let seed = DEFAULT_SEED;
    let nc = |g: &LieAlgebra<Rational>| casimir_count_seeded(g, DEFAULT_TRIALS, seed).unwrap();
    let n10 = nc(&real_algebra::<Rational>("n1", &[("gamma", int(0))]).unwrap());
    let n11 = nc(&real_algebra::<Rational>("n1", &[("gamma", int(1))]).unwrap());
    ensure((n10, n11) == (4, 2), || format!("n1^0, n1^1 give {n10}, {n11}"))?;

    let cols: &[(&[&str], usize, usize)] = &[
        (&["n2^0"], 4, 0),
        (&["n2^alpha"], 2, 0),
        (&["n3^0", "n3^1"], 4, 0),
        (&["n4^{eta,1}", "n4^{eta,theta}", "n4^{eta,0}"], 2, 0),
        (&["m1^gamma"], 2, 1),
        (&["m2^0"], 4, 1),
        (&["m2^1"], 4, 1),
        (&["m3^{alpha,beta}"], 2, 1),
    ];
    let mut got = [Vec::new(), Vec::new()];
    for (classes, want, t) in cols {
        let mut vals = BTreeSet::new();
        for c in *classes {
            for (_, g) in class_instances(c) {
                vals.insert(nc(&g));
            }
        }
        ensure(vals.len() == 1 && vals.contains(want), || format!("{classes:?}: {vals:?} vs {want}"))?;
        got[*t].push(want.to_string());
    }

    let odd: Vec<String> = all_instances()
        .into_iter()
        .filter(|(_, g)| (nc(g) + g.dim()) % 2 != 0)
        .map(|(l, _)| l)
        .collect();
    ensure(odd.is_empty(), || format!("parity broken: {odd:?}"))?;

    // symbolic minors of the coadjoint matrix
    let g = Poly::var("gamma");
    let c = casimir_matrix(&n1(g.clone()));
    ensure(minors_of_order(&c, 8).is_empty() && minors_of_order(&c, 7).is_empty(), || {
        "nonzero minor of order 7 or 8".into()
    })?;
    let g2 = (g.clone(), 2);
    let expected = [
        mono(1, &[g2.clone(), (x(7), 2), (x(8), 4)]),
        mono(-1, &[g2.clone(), (x(6), 1), (x(7), 1), (x(8), 4)]),
        mono(-1, &[g2.clone(), (x(7), 1), (x(8), 5)]),
        mono(1, &[g2.clone(), (x(6), 2), (x(8), 4)]),
        mono(1, &[g2.clone(), (x(6), 1), (x(8), 5)]),
        mono(1, &[g2, (x(8), 6)]),
    ];
    let m6 = minors_of_order(&c, 6);
    let up_to_sign = |p: &Poly, q: &Poly| p == q || *p == -q.clone();
    let stray: Vec<String> = m6
        .iter()
        .filter(|(_, p)| !expected.iter().any(|q| up_to_sign(p, q)))
        .map(|(_, p)| p.render())
        .collect();
    ensure(stray.is_empty(), || format!("unexpected order-6 minors: {stray:?}"))?;
    let absent: Vec<String> = expected
        .iter()
        .filter(|q| !m6.iter().any(|(_, p)| up_to_sign(p, q)))
        .map(|q| q.render())
        .collect();
    ensure(absent.is_empty(), || format!("missing order-6 minors: {absent:?}"))?;
    // at gamma = 0 the rank drops to 4
    let c0 = casimir_matrix(&n1(Poly::from_int(0)));
    ensure(minors_of_order(&c0, 5).is_empty() && !minors_of_order(&c0, 4).is_empty(), || {
        "n1^0 coadjoint matrix does not have rank 4".into()
    })?;

    Ok(format!(
        "n1: 4, 2; Table 4 ({}); Table 9 ({}); parity on {} algebras; {} order-6 minors, 6 distinct up to sign",
        got[0].join(","),
        got[1].join(","),
        all_instances().len(),
        m6.len()
    ))
}

// 6

fn two(terms: &[(usize, usize, i64)]) -> Form<Rational> {
    terms
        .iter()
        .fold(Form::zero(), |acc, (i, j, c)| acc.add(&Form::pair(i - 1, j - 1, int(*c))))
}

fn c6_betti() -> Outcome {
    let cols: &[(&str, usize)] = &[("m1^gamma", 6), ("m2^0", 6), ("m2^1", 5), ("m3^{alpha,beta}", 4)];
    for (class, want) in cols {
        for (label, g) in class_instances(class) {
            let b = betti_all(&g);
            ensure(b[2] == *want, || format!("{label}: b2 = {} vs {want}", b[2]))?;
        }
    }

    let m20 = real_algebra::<Rational>("m2", &[("gamma", int(0))]).unwrap();
    let m21 = real_algebra::<Rational>("m2", &[("gamma", int(1))]).unwrap();
    let common = vec![
        two(&[(1, 2, 1)]),
        two(&[(2, 5, 1)]),
        two(&[(3, 4, 1)]),
        two(&[(3, 5, 1)]),
        two(&[(1, 7, 1), (2, 6, 1)]),
    ];
    let mut full = common.clone();
    full.push(two(&[(3, 8, 1), (4, 6, -1), (5, 7, -1)]));
    for w in &full {
        ensure(ce_differential(&m20, w).is_zero(), || format!("{} not closed", w.render_real()))?;
        ensure(independent_classes(&m20, 2, std::slice::from_ref(w)), || {
            format!("{} is exact", w.render_real())
        })?;
    }
    ensure(independent_classes(&m20, 2, &full), || "m2^0 witnesses dependent".into())?;
    ensure(independent_classes(&m21, 2, &common), || "m2^1 witnesses dependent".into())?;

    let mut n = 0;
    for (label, g) in all_instances() {
        let b = betti_all(&g);
        let d = g.dim();
        ensure((0..=d).all(|k| b[k] == b[d - k]), || format!("{label}: duality fails {b:?}"))?;
        let chi: i64 = b.iter().enumerate().map(|(k, x)| if k % 2 == 0 { *x as i64 } else { -(*x as i64) }).sum();
        ensure(chi == 0, || format!("{label}: chi = {chi}"))?;
        n += 1;
    }
    Ok(format!(
        "b2 column (6,6,5,4); six m2^0 witnesses closed, non-exact, independent; duality and chi = 0 on {n} algebras"
    ))
}

// 7

fn c7_descending() -> Outcome {
    let expected: &[(&str, &[usize])] = &[
        ("n2^0", &[4, 3, 1, 0]),
        ("n2^alpha", &[4, 3, 1, 0]),
        ("n3^0", &[4, 3, 1, 0]),
        ("n3^1", &[4, 2, 1, 0]),
        ("n4^{eta,1}", &[4, 2, 1, 0]),
        ("n4^{eta,theta}", &[4, 3, 1, 0]),
        ("n4^{eta,0}", &[4, 3, 1, 0]),
    ];
    let mut n = 0;
    for (class, t) in expected {
        for (label, g) in class_instances(class) {
            let got = g.descending_type();
            ensure(got == *t, || format!("{label}: {} vs {}", tuple(&got), tuple(t)))?;
            n += 1;
        }
    }
    table_passes(&table(TableId::T4)?)?;
    Ok(format!("{n} samples exact"))
}

// 8

fn fi(e: u8, n: u8, d: i8, a: Rational, b: Rational) -> FamilyPoint {
    FamilyPoint::I(FamilyIParams::numeric(e, n, d, a, b).unwrap())
}

fn c8_appendix() -> Outcome {
    let ta = table(TableId::A)?;
    let tb = table(TableId::B)?;
    table_passes(&ta)?;
    table_passes(&tb)?;
    let symbolic = ta
        .rows
        .iter()
        .chain(&tb.rows)
        .filter(|r| r.sample.contains("=a") || r.sample.contains("=b"))
        .count();
    ensure(symbolic > 0, || "no symbolic dictionary samples".into())?;

    // starred rows and the radical certificates at their named points
    let named = [
        ("A3", fi(1, 1, 1, int(1), int(0))),
        ("A3", fi(1, 1, -1, int(1), int(0))),
        ("A5", fi(1, 1, 1, int(4), int(0))),
        ("A7", fi(1, 1, 1, int(1), int(3))),
        ("A7", fi(1, 1, -1, int(1), int(3))),
        ("A7", fi(1, 0, 1, int(1), int(3))),
    ];
    for (id, p) in &named {
        let row = appendix_row(id).map_err(|e| e.to_string())?;
        let c = check_row::<Complex<QuadExt>>(row, p, true).map_err(|e| format!("{id}: {e}"))?;
        ensure(c.passes() && c.fingerprint_match == Some(true), || format!("{id} at {}: {c:?}", p.label()))?;
    }
    let radical: Vec<_> = certificates().into_iter().filter(|c| c.ring == Ring::Radical).collect();
    let g3 = radical
        .iter()
        .find(|c| c.id == "iso-g3-small")
        .ok_or("missing iso-g3-small")?;
    ensure(g3.params.iter().any(|(k, v)| k == "gamma" && v == "3/5"), || "iso-g3-small not at 3/5".into())?;
    for c in &radical {
        let v = verify(c).map_err(|e| format!("{}: {e}", c.id))?;
        ensure(v.passed, || format!("{}: {v:?}", c.id))?;
    }
    Ok(format!(
        "{} dictionary samples ({symbolic} symbolic); starred rows at their points; {} radical certificates",
        ta.rows.len() + tb.rows.len(),
        radical.len()
    ))
}

// 9

fn c9_certificates() -> Outcome {
    let all = certificates();
    let required = [
        "reduce-t",
        "reduce-p",
        "reduce-family-i",
        "reduce-to-family-i",
        "equiv-i-eps1",
        "equiv-i-eps0",
        "equiv-ii-100",
        "equiv-ii-010",
        "iso-g3-small",
        "iso-g3-large",
        "iso-tilde-g4",
        "realify-tilde",
        "realify-m1",
        "realify-m2",
        "realify-m2-b0",
    ];
    let ids: BTreeSet<&str> = all.iter().map(|c| c.id.as_str()).collect();
    let missing: Vec<&&str> = required.iter().filter(|r| !ids.contains(**r)).collect();
    ensure(missing.is_empty(), || format!("missing certificates {missing:?}"))?;
    for c in &all {
        let v = verify(c).map_err(|e| format!("{}: {e}", c.id))?;
        ensure(v.passed && v.residuals.is_empty(), || format!("{}: {v:?}", c.id))?;
        let m = verify(&mutant(c)).map_err(|e| format!("mutant of {}: {e}", c.id))?;
        ensure(!m.passed && !(m.residuals.is_empty() && m.shape_errors.is_empty()), || {
            format!("mutant of {} is not caught: {m:?}", c.id)
        })?;
    }
    Ok(format!("{} certificates verify; all mutants fail with a residual", all.len()))
}

// 10

fn g(re: Rational, im: Rational) -> Gauss {
    gauss(re, im)
}

fn gi(n: i64) -> Gauss {
    g(int(n), int(0))
}

fn fam1(e: u8, n: u8, d: i8, a: &Gauss, b: &Gauss) -> ComplexStructEqs<Gauss> {
    let env = Env::new(None)
        .with("e", gi(e as i64))
        .with("n", gi(n as i64))
        .with("d", gi(d as i64))
        .with("a", a.clone())
        .with("b", b.clone());
    parse_eqs(FAMILY_I_TEMPLATE, &env).unwrap()
}

fn fam2(e: u8, m: u8, n: u8, a: &Gauss, b: &Gauss) -> ComplexStructEqs<Gauss> {
    let env = Env::new(None)
        .with("e", gi(e as i64))
        .with("m", gi(m as i64))
        .with("n", gi(n as i64))
        .with("a", a.clone())
        .with("b", b.clone());
    parse_eqs(FAMILY_II_TEMPLATE, &env).unwrap()
}

fn zero_residual(primed: &ComplexStructEqs<Gauss>, src: &ComplexStructEqs<Gauss>, l: &Matrix<Gauss>) -> bool {
    primed
        .equivalence_residuals(src, l)
        .unwrap()
        .iter()
        .all(|f| f.is_zero())
}

fn c10_equivalence_action() -> Outcome {
    let rotations = [gi(1), gi(-1), g(int(0), int(1)), g(int(0), int(-1))];
    let lambdas = [int(1), int(2), rat(-1, 3)];
    let l22s = [int(1), int(3), rat(-2, 5)];
    let ab = [(int(1), int(2)), (rat(2, 3), int(-1)), (int(0), int(1)), (int(3), int(0))];
    let mut n1 = 0;
    for e in 0..2u8 {
        for nu in 0..2u8 {
            for d in [1i8, -1] {
                for c in &rotations {
                    for lam in &lambdas {
                        for l22 in &l22s {
                            if (nu == 1 && *lam != int(1)) || (e == 1 && *l22 != int(1)) {
                                continue;
                            }
                            let lam_g = g(lam.clone(), int(0));
                            let l22_g = g(l22.clone(), int(0));
                            let c2 = c.clone() * c.clone();
                            // e^{-2i theta} = conj(c)^2 = 1 / c^2 for |c| = 1
                            let rot = gi(1) / c2;
                            let mut l = Matrix::<Gauss>::zeros(4, 4);
                            l[(0, 0)] = c.clone();
                            l[(1, 1)] = l22_g.clone();
                            l[(2, 2)] = lam_g.clone() * c.clone();
                            l[(3, 3)] = lam_g.clone();
                            for (a, b) in &ab {
                                let (a, b) = (g(a.clone(), int(0)), g(b.clone(), int(0)));
                                let a2 = a.clone() * lam_g.clone() / (l22_g.clone() * rot.clone());
                                let b2 = b.clone() * lam_g.clone() / (l22_g.clone() * l22_g.clone());
                                let src = fam1(e, nu, d, &a, &b);
                                ensure(zero_residual(&fam1(e, nu, d, &a2, &b2), &src, &l), || {
                                    format!("I({e},{nu},{d}) a={a} b={b} c={c} lam={lam} l22={l22}")
                                })?;
                                let off = fam1(e, nu, d, &(a2.clone() + gi(1)), &b2);
                                ensure(!zero_residual(&off, &src, &l), || "perturbed a' accepted".into())?;
                                let off = fam1(e, nu, d, &a2, &(b2.clone() + gi(1)));
                                ensure(!zero_residual(&off, &src, &l), || "perturbed b' accepted".into())?;
                                n1 += 1;
                            }
                        }
                    }
                }
            }
        }
    }

    let mut n2 = 0;
    let mut check2 = |e: u8, m: u8, nu: u8, a: Rational, b: Rational, l: Matrix<Gauss>, a2: Rational, b2: Rational| {
        let src = fam2(e, m, nu, &g(a.clone(), int(0)), &g(b.clone(), int(0)));
        let dst = fam2(e, m, nu, &g(a2.clone(), int(0)), &g(b2.clone(), int(0)));
        ensure(zero_residual(&dst, &src, &l), || format!("II({e},{m},{nu}) ({a},{b}) -> ({a2},{b2})"))?;
        let p = FamilyIIParams::numeric(e, m, nu, a2.clone(), b2.clone()).map_err(|x| x.to_string())?;
        ensure(p.table_row().is_some(), || format!("({e},{m},{nu},{a2},{b2}) is not canonical"))?;
        n2 += 1;
        Ok::<(), String>(())
    };
    // lower-triangular change with the diagonal and sub-diagonal constraints of the family
    let tri = |k: Gauss, lam: Rational, l21: Gauss, l31: Gauss, m: u8| {
        let lam = g(lam, int(0));
        let mut l = Matrix::<Gauss>::zeros(4, 4);
        l[(0, 0)] = k.clone();
        l[(1, 0)] = l21.clone();
        l[(1, 1)] = lam.clone() * k.clone();
        l[(2, 0)] = l31;
        l[(2, 1)] = g(int(0), int(m as i64)) * lam.clone() * l21;
        l[(2, 2)] = lam.clone() / nilclass::kernel::Conjugate::conj(&k);
        l[(3, 3)] = lam;
        l
    };
    // (1,0,0): lambda = 1/a normalizes a to 1; b is untouched
    for (a, b) in [(int(3), int(2)), (rat(-1, 2), int(0)), (int(0), int(5))] {
        let lam = if a == int(0) { int(7) } else { int(1) / a.clone() };
        let l = tri(gi(1), lam, gi(4), gi(-1), 0);
        let a2 = if a == int(0) { int(0) } else { int(1) };
        check2(1, 0, 0, a, b.clone(), l, a2, b)?;
    }
    // (0,1,0): kappa^5 = a gives a' = 1, Im l21 = -b/(2 kappa) gives b' = 0
    for (kappa, b) in [(int(2), int(3)), (int(-1), rat(1, 2)), (rat(1, 2), int(-4)), (int(1), int(0))] {
        let a = pow(&kappa, 5);
        let y = -b.clone() / (int(2) * kappa.clone());
        let l21 = g(int(1), y.clone());
        let norm = int(1) + y.clone() * y.clone();
        let im31 = (norm / int(2) - b.clone() / kappa.clone() * y.clone() - int(2) * y.clone() * y.clone()) / kappa.clone();
        let l31 = g(int(2), im31);
        let lam = int(1) / (kappa.clone() * kappa.clone());
        let l = tri(g(kappa, int(0)), lam, l21, l31, 1);
        check2(0, 1, 0, a, b, l, int(1), int(0))?;
    }
    // (0,1,0) with a = 0 lands on (0,1,0,0,0)
    {
        let (kappa, b) = (int(3), int(2));
        let y = -b.clone() / (int(2) * kappa.clone());
        let norm = y.clone() * y.clone();
        let im31 = (norm / int(2) - b.clone() / kappa.clone() * y.clone() - int(2) * y.clone() * y.clone()) / kappa.clone();
        let l = tri(g(kappa.clone(), int(0)), int(1) / (kappa.clone() * kappa.clone()), g(int(0), y), g(int(0), im31), 1);
        check2(0, 1, 0, int(0), b, l, int(0), int(0))?;
    }
    // (1,1,0) and (1,0,1): only real l21 is allowed and (a, b) is fixed
    for (a, b) in [(int(2), int(-3)), (int(0), int(1)), (rat(1, 3), int(0))] {
        let l21 = int(5);
        let l = tri(gi(1), int(1), g(l21.clone(), int(0)), g(int(1), l21.clone() * l21 / int(2)), 1);
        check2(1, 1, 0, a.clone(), b.clone(), l, a.clone(), b.clone())?;
        let l = tri(gi(1), int(1), gi(-2), gi(3), 0);
        check2(1, 0, 1, a.clone(), b.clone(), l, a, b)?;
    }
    // the general (0,1,0) transformation law for an arbitrary l21
    for (kappa, a, b, l21) in [(int(2), int(1), int(1), g(int(1), int(3))), (int(-3), int(2), rat(1, 2), g(int(0), int(-1)))] {
        let (x, y) = (l21.re.clone(), l21.im.clone());
        let im31 = ((x.clone() * x + y.clone() * y.clone()) / int(2) - b.clone() / kappa.clone() * y.clone()
            - int(2) * y.clone() * y.clone())
            / kappa.clone();
        let l = tri(g(kappa.clone(), int(0)), int(1) / (kappa.clone() * kappa.clone()), l21, g(int(0), im31), 1);
        let a2 = a.clone() / pow(&kappa, 5);
        let b2 = (b.clone() + int(2) * kappa.clone() * y) / (kappa.clone() * kappa);
        let src = fam2(0, 1, 0, &g(a, int(0)), &g(b, int(0)));
        ensure(zero_residual(&fam2(0, 1, 0, &g(a2, int(0)), &g(b2, int(0))), &src, &l), || {
            "general (0,1,0) law fails".into()
        })?;
    }
    Ok(format!("Family I: {n1} (theta, lambda, lambda22, a, b) samples exact with perturbations rejected; Family II: {n2} normalizations canonical"))
}

// 11

fn random_table() -> impl Strategy<Value = LieAlgebra<Rational>> {
    (2usize..=6).prop_flat_map(|n| {
        let slots: Vec<(usize, usize, usize)> = (0..n)
            .flat_map(|k| (0..k).flat_map(move |j| (0..j).map(move |i| (i, j, k))))
            .collect();
        let len = slots.len();
        proptest::collection::vec(prop_oneof![3 => Just(0i64), 1 => -2i64..=2], len).prop_map(move |cs| {
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

fn c11_properties() -> Outcome {
    let mut runner = TestRunner::new_with_rng(
        Config {
            cases: 100,
            failure_persistence: None,
            ..Config::default()
        },
        TestRng::deterministic_rng(RngAlgorithm::ChaCha),
    );
    let lie = std::cell::Cell::new(0usize);
    runner
        .run(&random_table(), |g| {
            let r = g.jacobi_check();
            prop_assert!(r.consistent(), "{}", print_algebra(&g));
            prop_assert!(g.is_nilpotent());
            if r.passes() {
                lie.set(lie.get() + 1);
            }
            Ok(())
        })
        .map_err(|e| e.to_string())?;

    let m = Manifest::builtin();
    let mut points: Vec<FamilyPoint> = Vec::new();
    for rs in &m.family_i {
        points.extend(rs.points.iter().map(|s| FamilyPoint::I(s.point().unwrap())));
    }
    for rs in &m.family_ii {
        points.extend(rs.points.iter().map(|s| FamilyPoint::II(s.point().unwrap())));
    }
    for p in &points {
        let eqs = p.eqs::<Gauss>().unwrap();
        let r = realify(&eqs, &standard_map::<Gauss>(4)).unwrap();
        let asc = r.algebra.ascending_series().terms;
        for (k, a) in ascending_j_series(&r.algebra, &r.j).iter().enumerate() {
            let gk = &asc[k.min(asc.len() - 1)];
            ensure(a.is_subspace_of(gk), || format!("{}: a_{k} not in g_{k}", p.label()))?;
            for v in a.basis() {
                ensure(a.contains(&r.j.mul_vec(v).unwrap()), || format!("{}: a_{k} not J-stable", p.label()))?;
            }
        }
        let back = parse_eqs::<Gauss>(&eqs.render(), &Env::new(None)).map_err(|e| e.to_string())?;
        ensure(back == eqs, || format!("{}: complex equations do not round-trip", p.label()))?;
    }

    let mut trips = 0;
    for s in ALGEBRAS.iter() {
        let ast = parse_real(s.notation).map_err(|e| e.to_string())?;
        ensure(parse_real(&ast.print()).map_err(|e| e.to_string())? == ast, || format!("{}: notation", s.name))?;
        trips += 1;
    }
    for (label, g) in all_instances() {
        let back = parse_algebra::<Rational>(&print_algebra(&g), &Env::new(None)).map_err(|e| e.to_string())?;
        ensure(back == g, || format!("{label}: print/parse"))?;
        trips += 1;
    }

    let m = Manifest::builtin();
    for id in TableId::ALL {
        let a = serde_json::to_string(&reproduce_table(id, &m, DEFAULT_SEED).unwrap()).unwrap();
        let b = serde_json::to_string(&reproduce_table(id, &m, DEFAULT_SEED).unwrap()).unwrap();
        ensure(a == b, || format!("{id} report differs between runs"))?;
    }
    let d1 = serde_json::to_string(&catalog_dump()).unwrap();
    ensure(d1 == serde_json::to_string(&catalog_dump()).unwrap(), || "catalog dump differs".into())?;

    Ok(format!(
        "100 random tables ({} Lie) agree; a_k(J) on {} structures; {trips} round-trips; reports stable",
        lie.get(),
        points.len()
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("symbolic integrability", c1_symbolic_integrability),
        ("Jacobi system", c2_jacobi_system),
        ("Table 1/2 ascending types", c3_family_tables),
        ("Table 3/8 ascending types", c4_algebra_tables),
        ("Casimir counts", c5_casimir),
        ("Betti numbers", c6_betti),
        ("descending types", c7_descending),
        ("family-to-algebra dictionaries", c8_appendix),
        ("certificate suite", c9_certificates),
        ("equivalence action", c10_equivalence_action),
        ("property suite", c11_properties),
    ];
    let expected_fail: BTreeMap<usize, &str> = KNOWN_UNATTAINABLE.iter().copied().collect();
    let mut broken = Vec::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let n = i + 1;
        let t = Instant::now();
        let out = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into());
            Err(format!("panicked: {msg}"))
        });
        let secs = t.elapsed().as_secs_f64();
        match (&out, expected_fail.get(&n)) {
            (Ok(d), None) => println!("criterion {n:>2} PASS {name}: {d} [{secs:.1}s]"),
            (Err(e), None) => {
                println!("criterion {n:>2} FAIL {name}: {e} [{secs:.1}s]");
                broken.push(n);
            }
            (Err(e), Some(why)) => println!("criterion {n:>2} FAIL {name}: {e}; unattainable: {why} [{secs:.1}s]"),
            (Ok(d), Some(_)) => {
                println!("criterion {n:>2} PASS {name}: {d} (listed as unattainable; update the list) [{secs:.1}s]");
                broken.push(n);
            }
        }
    }
    if !broken.is_empty() {
        eprintln!("unexpected results for criteria {broken:?}");
        std::process::exit(1);
    }
}
