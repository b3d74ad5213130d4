mod common;

use std::collections::HashMap;

use common::*;
use qbos::explorer::{write_scan_csv, SimplexLattice};
use qbos::{
    find_resolving_states, scan_simplex, verify_equilibria_grid, Corner, GamePayoffs, InitialState, ScanRecord,
};

fn scan_map(n: u32, g: &GamePayoffs) -> HashMap<[u32; 4], ScanRecord> {
    scan_simplex(g, n).unwrap().map(|r| (r.lattice, r)).collect()
}

#[test]
fn record_counts_match_the_lattice_size() {
    let g = default_payoffs();
    for n in 1..=20u32 {
        let count = scan_simplex(&g, n).unwrap().count() as u64;
        let nn = n as u64;
        assert_eq!(count, (nn + 3) * (nn + 2) * (nn + 1) / 6);
        assert_eq!(count, SimplexLattice::point_count(n));
    }
}

#[test]
fn sixteen_grid_contains_both_reference_points() {
    let records = scan_map(16, &default_payoffs());
    assert_eq!(records.len(), 969);
    let reference = &records[&[5, 5, 1, 5]];
    assert!(reference.resolved);
    assert_eq!(reference.selected_corner, Some(Corner::OneOne));
    let dual = &records[&[5, 1, 5, 5]];
    assert!(dual.resolved);
    assert_eq!(dual.selected_corner, Some(Corner::ZeroZero));
    let entangled = &records[&[8, 0, 0, 8]];
    assert!(!entangled.resolved && entangled.equal_corner_payoffs);
}

#[test]
fn resolving_states_at_sixteen() {
    // Frozen from an exact rational enumeration of the 969 lattice points.
    let found = find_resolving_states(&default_payoffs(), 16).unwrap();
    assert_eq!(found.one_one.len(), 6);
    assert_eq!(found.zero_zero.len(), 6);
    let lattice: Vec<[u32; 4]> = found.iter().map(|r| r.lattice).collect();
    assert!(lattice.contains(&[5, 5, 1, 5]) && lattice.contains(&[5, 1, 5, 5]));
    assert!(!lattice.contains(&[8, 0, 0, 8]));
    for part in [&found.one_one, &found.zero_zero] {
        assert!(part.windows(2).all(|w| w[0].lattice < w[1].lattice));
    }
    let expected_one_one = [[5, 4, 2, 5], [5, 5, 1, 5], [5, 6, 0, 5], [6, 3, 1, 6], [6, 4, 0, 6], [7, 2, 0, 7]];
    let got: Vec<_> = found.one_one.iter().map(|r| r.lattice).collect();
    assert_eq!(got, expected_one_one);
}

/// Corner payoffs by relabelling basis states; no bilinear coefficients.
fn brute_force_corners(moduli: [f64; 4], g: &GamePayoffs) -> HashMap<Corner, (f64, f64)> {
    let alice = [g.alpha(), g.gamma(), g.gamma(), g.beta()];
    let bob = [g.beta(), g.gamma(), g.gamma(), g.alpha()];
    Corner::ALL
        .into_iter()
        .map(|c| {
            let (flip_a, flip_b) = ((c.p() == 0.0) as usize, (c.q() == 0.0) as usize);
            let mut pa = 0.0;
            let mut pb = 0.0;
            for (k, &w) in moduli.iter().enumerate() {
                let target = (((k >> 1) ^ flip_a) << 1) | ((k & 1) ^ flip_b);
                pa += w * alice[target];
                pb += w * bob[target];
            }
            (c, (pa, pb))
        })
        .collect()
}

#[test]
fn two_grid_agrees_with_brute_force() {
    let tol = 1e-9;
    for g in [default_payoffs(), GamePayoffs::new(3.0, 2.0, 1.0).unwrap(), GamePayoffs::new(10.0, 0.5, -4.0).unwrap()] {
        let records: Vec<_> = scan_simplex(&g, 2).unwrap().collect();
        assert_eq!(records.len(), 10);
        for r in records {
            let m = brute_force_corners(r.moduli_squared, &g);
            let (a11, b11) = m[&Corner::OneOne];
            let (a10, b10) = m[&Corner::OneZero];
            let (a01, b01) = m[&Corner::ZeroOne];
            let (a00, b00) = m[&Corner::ZeroZero];
            let ne11 = a11 >= a01 - tol && b11 >= b10 - tol;
            let ne00 = a00 >= a10 - tol && b00 >= b01 - tol;
            let equal = (a11 - a00).abs() <= tol && (b11 - b00).abs() <= tol;
            let alice = (a11.min(a10), a01.min(a00));
            let bob = (b11.min(b01), b10.min(b00));
            let pick = |(one, zero): (f64, f64)| {
                if one > zero + tol {
                    Some(1)
                } else if zero > one + tol {
                    Some(0)
                } else {
                    None
                }
            };
            let selected = match (pick(alice), pick(bob)) {
                (Some(1), Some(1)) => Some(Corner::OneOne),
                (Some(0), Some(0)) => Some(Corner::ZeroZero),
                _ => None,
            };
            let resolved = ne11 && ne00 && equal && selected.is_some();
            assert_eq!(r.ne_corner_11, ne11, "{:?}", r.lattice);
            assert_eq!(r.ne_corner_00, ne00, "{:?}", r.lattice);
            assert_eq!(r.equal_corner_payoffs, equal, "{:?}", r.lattice);
            assert_eq!(r.resolved, resolved, "{:?}", r.lattice);
            assert_eq!(r.selected_corner, if resolved { selected } else { None });
            let expected = [a11, b11, a10, b10, a01, b01];
            for (got, want) in r.corner_payoffs.iter().zip(expected) {
                assert!((got - want).abs() <= 1e-12);
            }
        }
    }
}

#[test]
fn slot_swap_duality() {
    // |b|² <-> |c|² maps $X(p, q) to $X(q, p): the selected corner flips.
    let g = default_payoffs();
    let records = scan_map(16, &g);
    for (point, r) in &records {
        let [i, j, k, l] = *point;
        let image = &records[&[i, k, j, l]];
        assert_eq!(image.resolved, r.resolved);
        let flipped = r.selected_corner.map(|c| match c {
            Corner::OneOne => Corner::ZeroZero,
            Corner::ZeroZero => Corner::OneOne,
            other => other,
        });
        assert_eq!(image.selected_corner, flipped);
        let [a11, b11, a10, b10, a01, b01] = r.corner_payoffs;
        let expected = [a11, b11, a01, b01, a10, b10];
        for (got, want) in image.corner_payoffs.iter().zip(expected) {
            assert!((got - want).abs() <= 1e-12);
        }
    }
}

#[test]
fn outcome_relabel_duality() {
    // |a|² <-> |d|² maps $X(p, q) to $X(1 - q, 1 - p): the selection is kept.
    let g = default_payoffs();
    let records = scan_map(16, &g);
    for (point, r) in &records {
        let [i, j, k, l] = *point;
        let image = &records[&[l, j, k, i]];
        assert_eq!(image.resolved, r.resolved);
        assert_eq!(image.selected_corner, r.selected_corner);
        let [_, _, a10, b10, a01, b01] = r.corner_payoffs;
        let [_, _, ia10, ib10, ia01, ib01] = image.corner_payoffs;
        for (got, want) in [(ia10, a10), (ib10, b10), (ia01, a01), (ib01, b01)] {
            assert!((got - want).abs() <= 1e-12);
        }
    }
}

#[test]
fn scan_output_is_deterministic() {
    let g = default_payoffs();
    let run = || {
        let mut buf = Vec::new();
        let summary = write_scan_csv(scan_simplex(&g, 16).unwrap(), &mut buf).unwrap();
        (buf, summary)
    };
    let (first, summary) = run();
    let (second, _) = run();
    assert_eq!(first, second);
    assert_eq!(summary.total, 969);
    assert_eq!((summary.resolved, summary.resolved_11, summary.resolved_00), (12, 6, 6));
    let text = String::from_utf8(first).unwrap();
    assert_eq!(text.lines().count(), 970);
    assert!(text.ends_with('\n') && !text.contains('\r'));
}

#[test]
fn resolved_records_pass_the_grid_oracle() {
    for g in [default_payoffs(), GamePayoffs::new(3.0, 2.0, 1.0).unwrap()] {
        for r in find_resolving_states(&g, 24).unwrap().iter() {
            let state = InitialState::from_moduli_squared(r.moduli_squared).unwrap();
            assert!(verify_equilibria_grid(&state, &g, 50).unwrap(), "{:?}", r.lattice);
        }
    }
}

#[test]
fn resolved_implies_both_equilibria_with_equal_payoffs() {
    for r in scan_simplex(&default_payoffs(), 30).unwrap() {
        if r.resolved {
            assert!(r.ne_corner_00 && r.ne_corner_11 && r.equal_corner_payoffs);
            assert!(r.selected_corner.is_some());
        } else {
            assert!(r.selected_corner.is_none());
        }
        assert!((r.moduli_squared.iter().sum::<f64>() - 1.0).abs() <= 1e-9);
    }
}
