//! Structural invariants over seeded random instances.

use std::collections::HashSet;

use proptest::prelude::*;
use quif5::algebra::{AlgebraElement, BasicAlgebra, Mono};
use quif5::buchberger::{buchberger_stdbasis, has_property_t};
use quif5::f5::{check_witnesses, f5_stdbasis, F5Options, F5Result};
use quif5::loewy::{layer_elements, loewy_layers, minimal_generators, radical_basis};
use quif5::module::{act, act_mono, ModMon, ModuleElement};
use quif5::oracle::{module_echelon, radical_filtration, verify_standard_basis, ModuleEchelon, DEFAULT_DIM_CAP};
use quif5::ordering::DegreeMode;
use quif5::problem::{parse_problem, Instance};
use quif5::random::{random_element, random_instance, random_problem, rng, RandomParams};
use rand::seq::IndexedRandom;
use rand::Rng;

fn instance(seed: u64, mode: DegreeMode) -> Instance {
    let params = RandomParams { mode: Some(mode), ..RandomParams::default() };
    random_instance(&mut rng(seed), &params).1
}

fn mode() -> impl Strategy<Value = DegreeMode> {
    prop_oneof![Just(DegreeMode::NegativeDegree), Just(DegreeMode::PositiveDegree)]
}

fn monos(alg: &BasicAlgebra) -> Vec<Mono> {
    alg.standard_monomials().collect()
}

fn run_f5(inst: &Instance) -> F5Result {
    f5_stdbasis(&inst.algebra, &inst.generators, F5Options { track_witnesses: true }).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn algebra_products(seed in any::<u64>(), mode in mode()) {
        let alg = instance(seed, mode).algebra;
        let ms = monos(&alg);
        prop_assert_eq!(ms.len(), alg.dim());
        let el = AlgebraElement::monomial;
        for &b in &ms {
            let v = alg.trivial(alg.start(b));
            prop_assert_eq!(alg.multiply(&el(v), &el(b)), el(b));
            for &c in &ms {
                let bc = alg.mul_monomials(b, c);
                prop_assert!(bc.terms().all(|(m, _)| m.idx() < alg.dim()));
                if alg.is_small_cofactor(b, c) {
                    // the leading monomial of b * c is the concatenated path
                    prop_assert_eq!(bc.lm(), alg.concat_std(b, c));
                    for &d in &ms {
                        let Some(bcm) = alg.concat_std(b, c) else { continue };
                        let lhs = alg.is_small_cofactor(bcm, d);
                        let cd = alg.concat_std(c, d);
                        prop_assert_eq!(lhs, cd.is_some_and(|cd| alg.is_small_cofactor(b, cd)));
                    }
                }
            }
        }
        let mut r = rng(seed ^ 1);
        for _ in 0..30 {
            let (a, b, c) = (*ms.choose(&mut r).unwrap(), *ms.choose(&mut r).unwrap(), *ms.choose(&mut r).unwrap());
            let left = alg.multiply(&alg.multiply(&el(a), &el(b)), &el(c));
            let right = alg.multiply(&el(a), &alg.multiply(&el(b), &el(c)));
            prop_assert_eq!(left, right);
        }
    }

    #[test]
    fn ordering_compatibility(seed in any::<u64>(), mode in mode()) {
        let inst = instance(seed, mode);
        let alg = &inst.algebra;
        let mons = inst.module.monomials(alg);
        for (k, &m1) in mons.iter().enumerate() {
            for &m2 in &mons[..k] {
                prop_assert!(m1 > m2);
                for c in alg.small_cofactors(m1.mono) {
                    let lhs = ModMon::new(m1.gen(), alg.concat_std(m1.mono, c).unwrap());
                    if let Some(l) = alg.mul_monomials(m2.mono, c).lm() {
                        prop_assert!(lhs > ModMon::new(m2.gen(), l));
                    }
                }
            }
        }
    }

    #[test]
    fn module_action(seed in any::<u64>(), mode in mode()) {
        let inst = instance(seed, mode);
        let (alg, fm) = (&inst.algebra, &inst.module);
        let mut r = rng(seed ^ 2);
        for _ in 0..20 {
            let f = random_element(&mut r, alg, fm, 4);
            let Some(lm) = f.lm() else { continue };
            for c in alg.small_cofactors(lm.mono) {
                let want = ModMon::new(lm.gen(), alg.concat_std(lm.mono, c).unwrap());
                prop_assert_eq!(act_mono(alg, &f, c).lm(), Some(want));
            }
            let ms = monos(alg);
            let (a, b) = (*ms.choose(&mut r).unwrap(), *ms.choose(&mut r).unwrap());
            let (a, b) = (AlgebraElement::monomial(a), AlgebraElement::monomial(b));
            prop_assert_eq!(act(alg, &act(alg, &f, &a), &b), act(alg, &f, &alg.multiply(&a, &b)));
        }
    }

    #[test]
    fn standard_bases(seed in any::<u64>(), mode in mode()) {
        let inst = instance(seed, mode);
        let (alg, fm, gens) = (&inst.algebra, &inst.module, &inst.generators);
        let (bb, _) = buchberger_stdbasis(alg, gens);
        prop_assert!(has_property_t(alg, &bb));
        prop_assert!(verify_standard_basis(alg, fm, gens, &bb).unwrap());

        let res = run_f5(&inst);
        check_witnesses(alg, gens, &res).map_err(TestCaseError::fail)?;
        let polys: Vec<ModuleElement> = res.basis.iter().map(|g| g.poly.clone()).collect();
        prop_assert!(verify_standard_basis(alg, fm, gens, &polys).unwrap());
        let sigs: HashSet<_> = res.basis.iter().map(|g| g.sig.clone()).collect();
        prop_assert_eq!(sigs.len(), res.basis.len());
        if mode == DegreeMode::NegativeDegree {
            let seen: HashSet<_> = res.processed.iter().collect();
            prop_assert_eq!(seen.len(), res.processed.len());
        }
    }

    #[test]
    fn pivots_ignore_generator_order(seed in any::<u64>()) {
        let inst = instance(seed, DegreeMode::NegativeDegree);
        let (alg, fm) = (&inst.algebra, &inst.module);
        let mut gens = inst.generators.clone();
        gens.reverse();
        let a = module_echelon(alg, fm, &inst.generators).unwrap().pivots();
        let b = module_echelon(alg, fm, &gens).unwrap().pivots();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn leading_monomials_of_layer_products_are_distinct(seed in any::<u64>()) {
        let inst = instance(seed, DegreeMode::NegativeDegree);
        let res = run_f5(&inst);
        let elems = layer_elements(&inst.algebra, &res.basis).unwrap();
        let lms: HashSet<ModMon> = elems.iter().map(|e| e.lm).collect();
        prop_assert_eq!(lms.len(), elems.len());
    }

    #[test]
    fn loewy_layers_match_radical_powers(seed in any::<u64>()) {
        let inst = instance(seed, DegreeMode::NegativeDegree);
        let (alg, fm, gens) = (&inst.algebra, &inst.module, &inst.generators);
        let res = run_f5(&inst);
        let rad = radical_filtration(alg, fm, gens).unwrap();
        for (d, &dim) in rad.iter().enumerate() {
            prop_assert_eq!(radical_basis(alg, &res.basis, d).unwrap().len(), dim);
        }
        for d in 1..rad.len() {
            let inner: HashSet<_> = radical_basis(alg, &res.basis, d).unwrap().into_iter().map(|f| f.lm()).collect();
            let outer: HashSet<_> = radical_basis(alg, &res.basis, d - 1).unwrap().into_iter().map(|f| f.lm()).collect();
            prop_assert!(inner.is_subset(&outer));
        }
        let layers = loewy_layers(alg, &res.basis).unwrap();
        prop_assert_eq!(layers.iter().map(|l| l.dim()).sum::<usize>(), rad[0]);
        // layer d is independent modulo Rad^d(M), spanned by M * Rad^d(A)
        for layer in &layers {
            let mut e = ModuleEchelon::new(alg, fm, DEFAULT_DIM_CAP).unwrap();
            for g in gens {
                for b in alg.standard_monomials().filter(|&b| alg.degree(b) >= layer.degree) {
                    e.insert(&act_mono(alg, g, b));
                }
            }
            prop_assert_eq!(e.dim(), rad[layer.degree]);
            for r in &layer.representatives {
                prop_assert!(e.insert(r));
            }
        }
        let mingens = minimal_generators(alg, &res.basis).unwrap();
        let regenerated = module_echelon(alg, fm, &mingens).unwrap();
        let original = module_echelon(alg, fm, gens).unwrap();
        prop_assert_eq!(regenerated.pivots(), original.pivots());
    }

    #[test]
    fn random_files_round_trip(seed in any::<u64>()) {
        let mut r = rng(seed);
        let params = RandomParams { mode: if r.random_bool(0.5) { None } else { Some(DegreeMode::PositiveDegree) }, ..RandomParams::default() };
        let file = random_problem(&mut r, &params);
        prop_assert_eq!(parse_problem(&file.to_string()).unwrap(), file);
    }
}
