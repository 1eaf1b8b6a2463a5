//! Expansions of the kernel Ω(x, y; t) truncated to degree ≤ 3.

mod common;

use common::kernel::*;
use rsymbols::algebra::MultiRatFunc;
use rsymbols::hall_littlewood::{multi_parameter, one_parameter};
use rsymbols::lusztig_shoji::build_table;
use rsymbols::symbols::{symplectic_defects, Defect, SymbolConfig, TieBreak};

#[test]
fn q_against_m_multi() {
    for r in 1..=2 {
        for n in 0..=3 {
            check_q_m(n, &multi_parameter(r));
        }
    }
    for n in 0..=2 {
        check_q_m(n, &multi_parameter(3));
    }
}

#[test]
fn q_against_m_one_parameter() {
    for r in 1..=3 {
        for n in 0..=3 {
            check_q_m(n, &one_parameter(r));
        }
    }
}

#[test]
fn power_sum_expansion_multi() {
    for r in 1..=2 {
        for n in 0..=3 {
            check_power_sums(n, &multi_parameter(r));
        }
    }
    for n in 0..=2 {
        check_power_sums(n, &multi_parameter(3));
    }
}

#[test]
fn power_sum_expansion_one_parameter() {
    for r in 1..=3 {
        for n in 0..=3 {
            check_power_sums(n, &one_parameter(r));
        }
    }
}

#[test]
fn diagonal_power_sums_at_equal_parameters() {
    for r in 1..=3 {
        for n in 0..=3 {
            check_diagonal_power_sums(n, r);
        }
    }
}

#[test]
fn schur_cauchy_at_zero() {
    for r in 1..=3 {
        for n in 0..=3 {
            check_schur_cauchy(n, r);
        }
    }
}

#[test]
fn hall_littlewood_kernel() {
    for n in 0..=3 {
        let (c, ds) = symplectic_defects(n, false);
        check_hl_kernel(&build_table(n, &c, &ds, TieBreak::Default).unwrap(), &one_parameter(2));
    }
    for n in 0..=2 {
        let (c, ds) = symplectic_defects(n, false);
        check_hl_kernel::<MultiRatFunc>(&build_table(n, &c, &ds, TieBreak::Default).unwrap(), &multi_parameter(2));
    }
    for n in 0..=3 {
        let t = build_table(n, &SymbolConfig::classical(), &[Defect::zero(1)], TieBreak::Default).unwrap();
        check_hl_kernel(&t, &one_parameter(1));
    }
    let c3 = SymbolConfig::new(3, 1, vec![0, 0, 0], 1).unwrap();
    let ds = vec![Defect(vec![1, 0, 0]), Defect(vec![3, 0, 1]), Defect(vec![3, 1, 0])];
    for n in 0..=2 {
        check_hl_kernel(&build_table(n, &c3, &ds, TieBreak::Default).unwrap(), &one_parameter(3));
    }
}
