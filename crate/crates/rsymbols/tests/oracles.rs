mod common;

use common::*;
use num_bigint::BigInt;
use num_rational::BigRational;
use rsymbols::algebra::{Cyclotomic, Field, RatFunc, UniPoly};
use rsymbols::green::green_gl;
use rsymbols::hall_littlewood::{construct_hl, one_parameter};
use rsymbols::lusztig_shoji::{build_table, kostka_one_param_table, Guards};
use rsymbols::symbols::{symplectic_defects, Defect, SymbolConfig, TieBreak};
use rsymbols::wreath::{character_table, class_data};

#[test]
fn charge_oracle_small_cases() {
    assert_eq!(kostka_charge(&[2], &[1, 1]), UniPoly::from_ints(1, &[0, 1]));
    assert_eq!(kostka_charge(&[2, 1], &[1, 1, 1]), UniPoly::from_ints(1, &[0, 1, 1]));
    assert_eq!(kostka_charge(&[3], &[1, 1, 1]), UniPoly::from_ints(1, &[0, 0, 0, 1]));
}

#[test]
fn classical_kostka_matches_charge() {
    for n in 0..=6 {
        let t = build_table(n, &SymbolConfig::classical(), &[Defect::zero(1)], TieBreak::Default).unwrap();
        let k = kostka_one_param_table(&t, &Guards::default()).unwrap();
        let (kp, km) = k.unmodified();
        for (i, si) in t.symbols.iter().enumerate() {
            for (j, sj) in t.symbols.iter().enumerate() {
                let want = RatFunc::from_poly(kostka_charge(si.source.comp(0).parts(), sj.source.comp(0).parts()));
                assert_eq!(*kp.get(i, j), want, "n={n} K+ {} {}", si.source, sj.source);
                assert_eq!(*km.get(i, j), want, "n={n} K- {} {}", si.source, sj.source);
            }
        }
    }
}

#[test]
fn green_gl_matches_charge() {
    for n in 1..=4 {
        let g = green_gl(n).unwrap();
        let ct = character_table(n, 1);
        for (mu, cl) in ct.classes.iter().enumerate() {
            for nu in &g.labels {
                let mut want = RatFunc::zero(&1);
                for (lam, label) in ct.labels.iter().enumerate() {
                    let chi = RatFunc::constant(ct.values[lam][mu].clone());
                    want = want.add(&chi.mul(&modified_kostka_charge(label.comp(0).parts(), nu.comp(0).parts())));
                }
                assert_eq!(*g.get(&cl.ty, nu).unwrap(), want, "n={n}");
            }
        }
    }
}

#[test]
fn green_gl_identity_class_at_one() {
    // Q_{(1^n),ν}(1) = Σ_λ f^λ K_{λν}(1)
    for n in 1..=4u32 {
        let g = green_gl(n).unwrap();
        let ident = mp(vec![vec![1; n as usize]]);
        let one = BigRational::from_integer(1.into());
        for nu in &g.labels {
            let got = g.get(&ident, nu).unwrap().eval_rational(&one).unwrap();
            let mut want = BigInt::from(0);
            for lam in partitions(n) {
                let f = ssyt(&lam, &vec![1; n as usize]).len();
                want += BigInt::from(f) * BigInt::from(ssyt(&lam, nu.comp(0).parts()).len());
            }
            assert_eq!(got, BigRational::from_integer(want), "n={n} nu={nu}");
        }
    }
}

#[test]
fn character_tables_match_murnaghan_nakayama() {
    for (n, r) in [(1u32, 2usize), (2, 2), (3, 2), (1, 3), (2, 3), (4, 1), (2, 4)] {
        let ct = character_table(n, r);
        for (a, mu) in ct.labels.iter().enumerate() {
            for (l, cl) in ct.classes.iter().enumerate() {
                let want = mn_character(&components(mu), &cycles_of(&cl.ty), r as u32);
                assert_eq!(ct.values[a][l], want, "n={n} r={r} chi={mu} class={}", cl.ty);
            }
        }
    }
}

#[test]
fn class_sizes_match_enumeration() {
    for (n, r) in [(1u32, 2usize), (2, 2), (3, 2), (1, 3), (2, 3)] {
        let counted = enumerate_classes(n as usize, r);
        let data = class_data(n, r);
        assert_eq!(counted.len(), data.len());
        for c in &data {
            assert_eq!(counted[&c.ty], c.size, "n={n} r={r} {}", c.ty);
        }
    }
}

#[test]
fn orthogonality_over_group_elements() {
    for (n, r) in [(1u32, 2usize), (2, 2), (3, 2), (1, 3), (2, 3)] {
        let counted = enumerate_classes(n as usize, r);
        let ct = character_table(n, r);
        let ro = r as u32;
        let order: BigInt = counted.values().sum();
        for a in 0..ct.labels.len() {
            for b in 0..ct.labels.len() {
                let mut s = Cyclotomic::zero(ro);
                for (l, cl) in ct.classes.iter().enumerate() {
                    let w = Cyclotomic::from_rational(ro, BigRational::from_integer(counted[&cl.ty].clone()));
                    s = s.add(&ct.values[a][l].mul(&ct.values[b][l].conjugate()).mul(&w));
                }
                let want = if a == b { order.clone() } else { BigInt::from(0) };
                assert_eq!(s, Cyclotomic::from_rational(ro, BigRational::from_integer(want)));
            }
        }
    }
}

#[test]
fn classical_hall_littlewood_inverts_charge_kostka() {
    // s_λ = Σ_μ K_{λμ}(t) P_μ
    for n in 0..=5 {
        let t = build_table(n, &SymbolConfig::classical(), &[Defect::zero(1)], TieBreak::Default).unwrap();
        let hl = construct_hl(&t, &one_parameter(1)).unwrap();
        let parts: Vec<Vec<u32>> = t.symbols.iter().map(|s| s.source.comp(0).parts().to_vec()).collect();
        for (l, lam) in parts.iter().enumerate() {
            for nu in 0..t.len() {
                let mut acc = RatFunc::zero(&1);
                for (m, mu) in parts.iter().enumerate() {
                    acc = acc.add(&RatFunc::from_poly(kostka_charge(lam, mu)).mul(hl.u_plus.get(m, nu)));
                }
                let want = if l == nu { RatFunc::one(&1) } else { RatFunc::zero(&1) };
                assert_eq!(acc, want, "n={n} lam={lam:?} nu={}", t.symbols[nu].source);
            }
        }
    }
}

#[test]
fn hall_littlewood_coefficients_pole_free_at_zero() {
    let mut tables = Vec::new();
    for n in 0..=3 {
        let (c, ds) = symplectic_defects(n, false);
        tables.push((build_table(n, &c, &ds, TieBreak::Default).unwrap(), 2));
    }
    for n in 0..=4 {
        tables.push((build_table(n, &SymbolConfig::classical(), &[Defect::zero(1)], TieBreak::Default).unwrap(), 1));
    }
    for (t, r) in tables {
        let hl = construct_hl(&t, &one_parameter(r)).unwrap();
        for e in hl.u_plus.entries().chain(hl.u_minus.entries()) {
            assert!(e.at_zero().is_ok(), "n={} entry {}", t.n, e.render());
        }
    }
}
