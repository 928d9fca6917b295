//! Brute-force ground truth by dense linear algebra.
//!
//! Nothing here calls the reduction, Buchberger or F5 code: products are
//! taken with the algebra multiplication only, and submodules are row
//! reduced over all monomials of the free module.

use std::collections::HashMap;

use thiserror::Error;

use crate::algebra::{AlgebraElement, BasicAlgebra};
use crate::field::Fe;
use crate::linalg::Echelon;
use crate::module::{FreeModule, ModMon, ModuleElement, Signature, SignedElement};

pub const DEFAULT_DIM_CAP: usize = 512;

/// Largest number of monomials of `E` enumerated by the exhaustive check.
pub const EXHAUSTIVE_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("free module of dimension {0} exceeds the oracle cap {1}")]
    TooLarge(usize, usize),
    #[error("exhaustive check needs characteristic 2")]
    NeedsF2,
    #[error("exhaustive check over {0} signature monomials exceeds the cap")]
    TooManySignatures(usize),
}

/// `f * a`, from the algebra product of each component.
fn times(alg: &BasicAlgebra, fm: &FreeModule, f: &ModuleElement, a: &AlgebraElement) -> ModuleElement {
    let field = alg.field();
    let mut out = ModuleElement::zero();
    for i in 0..fm.rank() {
        let prod = alg.multiply(&f.component(field, i), a);
        for (m, c) in prod.terms() {
            out.add_term(field, ModMon::new(i, m), c);
        }
    }
    out
}

/// A subspace of `F` in reduced echelon form over all module monomials,
/// greatest monomial first.
#[derive(Debug, Clone)]
pub struct ModuleEchelon {
    columns: Vec<ModMon>,
    col_of: HashMap<ModMon, usize>,
    echelon: Echelon,
}

impl ModuleEchelon {
    pub fn new(alg: &BasicAlgebra, fm: &FreeModule, cap: usize) -> Result<Self, OracleError> {
        let mut columns = fm.monomials(alg);
        if columns.len() > cap {
            return Err(OracleError::TooLarge(columns.len(), cap));
        }
        columns.reverse();
        let col_of = columns.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let echelon = Echelon::new(alg.field(), columns.len());
        Ok(Self { columns, col_of, echelon })
    }

    fn vector(&self, f: &ModuleElement) -> Vec<Fe> {
        let mut v = vec![Fe::ZERO; self.columns.len()];
        for (m, c) in f.terms() {
            v[self.col_of[&m]] = c;
        }
        v
    }

    fn element(&self, alg: &BasicAlgebra, v: &[Fe]) -> ModuleElement {
        ModuleElement::from_terms(
            alg.field(),
            v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (self.columns[i], *c)),
        )
    }

    pub fn insert(&mut self, f: &ModuleElement) -> bool {
        let v = self.vector(f);
        self.echelon.insert(v).is_some()
    }

    pub fn contains(&self, f: &ModuleElement) -> bool {
        self.echelon.contains(&self.vector(f))
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    /// Leading monomials of the nonzero elements of the subspace, greatest first.
    pub fn pivots(&self) -> Vec<ModMon> {
        self.echelon.pivots().into_iter().map(|c| self.columns[c]).collect()
    }

    pub fn basis(&self, alg: &BasicAlgebra) -> Vec<ModuleElement> {
        self.echelon.rows().map(|r| self.element(alg, r)).collect()
    }
}

/// The submodule generated by `gens`, as the span of all `g * b`.
pub fn module_echelon(alg: &BasicAlgebra, fm: &FreeModule, gens: &[ModuleElement]) -> Result<ModuleEchelon, OracleError> {
    let mut e = ModuleEchelon::new(alg, fm, DEFAULT_DIM_CAP)?;
    for g in gens {
        for b in alg.standard_monomials() {
            e.insert(&times(alg, fm, g, &AlgebraElement::monomial(b)));
        }
    }
    Ok(e)
}

/// `[dim Rad^0 M, dim Rad^1 M, ...]`, ending with the first zero.
pub fn radical_filtration(alg: &BasicAlgebra, fm: &FreeModule, gens: &[ModuleElement]) -> Result<Vec<usize>, OracleError> {
    let mut cur = module_echelon(alg, fm, gens)?;
    let mut dims = vec![cur.dim()];
    while cur.dim() > 0 {
        let mut next = ModuleEchelon::new(alg, fm, DEFAULT_DIM_CAP)?;
        for r in cur.basis(alg) {
            for a in alg.quiver().arrow_ids() {
                next.insert(&times(alg, fm, &r, &AlgebraElement::monomial(alg.arrow_mono(a))));
            }
        }
        dims.push(next.dim());
        cur = next;
    }
    Ok(dims)
}

/// Why `basis` fails to be a standard basis of the submodule generated by
/// `gens`, or `None` when it is one.
pub fn standard_basis_defect(
    alg: &BasicAlgebra,
    fm: &FreeModule,
    gens: &[ModuleElement],
    basis: &[ModuleElement],
) -> Result<Option<String>, OracleError> {
    let m = module_echelon(alg, fm, gens)?;
    let pivots = m.pivots();
    for b in basis {
        if b.is_zero() {
            return Ok(Some("zero element in the basis".into()));
        }
        if !m.contains(b) {
            return Ok(Some(format!("{} is not in the submodule", fm.display(alg, b))));
        }
    }
    for &p in &pivots {
        let covered = basis.iter().any(|b| {
            let lm = b.lm().unwrap();
            lm.gen == p.gen && alg.strict_quotient(lm.mono, p.mono).is_some()
        });
        if !covered {
            return Ok(Some(format!("leading monomial {} is not strictly divisible", fm.display_monomial(alg, p))));
        }
    }
    // membership already forces every leading monomial to be a pivot
    Ok(None)
}

pub fn verify_standard_basis(
    alg: &BasicAlgebra,
    fm: &FreeModule,
    gens: &[ModuleElement],
    basis: &[ModuleElement],
) -> Result<bool, OracleError> {
    Ok(standard_basis_defect(alg, fm, gens, basis)?.is_none())
}

/// Leading monomials of `basis` that are minimal under strict division.
pub fn minimal_leading_monomials(alg: &BasicAlgebra, basis: &[ModuleElement]) -> Vec<ModMon> {
    let mut lms: Vec<ModMon> = basis.iter().filter_map(|b| b.lm()).collect();
    lms.sort();
    lms.dedup();
    let keep: Vec<ModMon> = lms
        .iter()
        .copied()
        .filter(|&m| {
            !lms.iter().any(|&d| d != m && d.gen == m.gen && alg.strict_quotient(d.mono, m.mono).is_some())
        })
        .collect();
    keep
}

/// Outcome of the exhaustive signed check.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExhaustiveReport {
    /// Nonzero elements of `E` enumerated.
    pub enumerated: usize,
    /// Distinct signed elements `(LM(f), sig)` that are irreducible below
    /// their signature with respect to the whole submodule.
    pub irreducible: usize,
    /// Those not weakly reducible by the basis.
    pub failures: Vec<String>,
}

/// Checks the definition of a signed standard basis literally over `F_2`:
/// every signed element `(f, s)` of `M`, with `s` the leading monomial of
/// some element of `E` of path degree below the nilpotency bound, that is
/// not `s`-reducible by `M` must be weakly `s`-reducible by `basis`.
///
/// Needs a negative degree ordering, so that longer paths of `E` evaluate
/// to zero and never lead.
pub fn exhaustive_signed_check(
    alg: &BasicAlgebra,
    fm: &FreeModule,
    gens: &[ModuleElement],
    sig_vertices: &[Option<crate::quiver::VertexId>],
    basis: &[SignedElement],
) -> Result<ExhaustiveReport, OracleError> {
    if alg.field().characteristic() != 2 {
        return Err(OracleError::NeedsF2);
    }
    let order = alg.order();
    let q = alg.quiver();
    let fmons = fm.monomials(alg);
    if fmons.len() > 64 {
        return Err(OracleError::TooLarge(fmons.len(), 64));
    }
    let fbit: HashMap<ModMon, usize> = fmons.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let bits = |f: &ModuleElement| f.terms().fold(0u64, |acc, (m, _)| acc | (1 << fbit[&m]));

    let mut emons: Vec<Signature> = Vec::new();
    for (i, v) in sig_vertices.iter().enumerate() {
        let Some(v) = v else { continue };
        for d in 0..alg.nilpotency() {
            for p in q.paths_of_degree_from(*v, d) {
                emons.push(Signature::new(i, p));
            }
        }
    }
    if emons.len() > EXHAUSTIVE_CAP {
        return Err(OracleError::TooManySignatures(emons.len()));
    }
    emons.sort_by(|a, b| a.cmp(order, b));
    let evs: Vec<u64> = emons
        .iter()
        .map(|s| bits(&times(alg, fm, &gens[s.gen()], &alg.psi(&s.path))))
        .collect();

    // signed elements as (top E-bit, evaluated bits)
    let k = emons.len();
    let mut elements: Vec<(usize, u64)> = Vec::new();
    let mut ev = 0u64;
    for mask in 1u64..(1u64 << k) {
        // Gray code: flip one bit per step
        let gray = mask ^ (mask >> 1);
        let prev = (mask - 1) ^ ((mask - 1) >> 1);
        ev ^= evs[(gray ^ prev).trailing_zeros() as usize];
        if ev != 0 {
            elements.push((63 - gray.leading_zeros() as usize, ev));
        }
    }
    let mut report = ExhaustiveReport { enumerated: (1usize << k) - 1, ..Default::default() };

    let lm_bit = |e: u64| 63 - e.leading_zeros() as usize;
    // smallest signature of an element with a given leading monomial and
    // signature end vertex
    let mut minsig: HashMap<(usize, u32), usize> = HashMap::new();
    for &(s, e) in &elements {
        let key = (lm_bit(e), emons[s].path.end().0);
        minsig.entry(key).and_modify(|x| *x = (*x).min(s)).or_insert(s);
    }

    let mut seen = std::collections::HashSet::new();
    for &(s, e) in &elements {
        let m = fmons[lm_bit(e)];
        if !seen.insert((s, m)) {
            continue;
        }
        let sig = &emons[s];
        let reducible_by_m = alg.splits(m.mono).iter().any(|&(p, c)| {
            let pm = ModMon { mono: p, gen: m.gen };
            minsig
                .get(&(fbit[&pm], alg.start(c).0))
                .and_then(|&t| emons[t].times(alg.path(c)))
                .is_some_and(|t| t.lt(order, sig))
        });
        if reducible_by_m {
            continue;
        }
        report.irreducible += 1;
        let weakly = basis.iter().any(|g| {
            let glm = g.poly.lm().unwrap();
            glm.gen == m.gen
                && alg.strict_quotient(glm.mono, m.mono).is_some_and(|c| {
                    g.sig.times(alg.path(c)).is_some_and(|t| t.cmp(order, sig) != std::cmp::Ordering::Greater)
                })
        });
        if !weakly {
            report.failures.push(format!("({}, {})", fm.display_monomial(alg, m), sig.display(alg)));
        }
    }
    Ok(report)
}
