//! The free right module `F` over a basic algebra, and the signature module
//! `E` over the path algebra.
//!
//! Each generator of `F` is tagged with a vertex `v`, so `F` is a direct sum
//! of projectives `1_v A`. A full copy of `A` is one generator per vertex.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{add_term, AlgebraElement, BasicAlgebra, Mono};
use crate::field::{Fe, PrimeField};
use crate::ordering::OrderSpec;
use crate::quiver::{Path, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuleError {
    #[error("the zero element has no leading data")]
    ZeroElement,
    #[error("generator {gen} sits at vertex {expected}, but a term starts at {found}")]
    VertexMismatch { gen: String, expected: String, found: String },
    #[error("generator index {0} out of range")]
    UnknownGenerator(usize),
}

/// The monomial `v_gen * mono`.
///
/// Ordered by the path of `mono` first; on equal paths the smaller
/// generator index is greater.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ModMon {
    pub mono: Mono,
    pub gen: u32,
}

impl ModMon {
    pub fn new(gen: usize, mono: Mono) -> Self {
        Self { mono, gen: gen as u32 }
    }

    pub fn gen(self) -> usize {
        self.gen as usize
    }
}

impl Ord for ModMon {
    fn cmp(&self, other: &Self) -> Ordering {
        self.mono.cmp(&other.mono).then_with(|| other.gen.cmp(&self.gen))
    }
}

impl PartialOrd for ModMon {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse element of `F`; the leading monomial is the last key.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ModuleElement {
    terms: BTreeMap<ModMon, Fe>,
}

impl ModuleElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(m: ModMon, c: Fe) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn from_terms(field: PrimeField, terms: impl IntoIterator<Item = (ModMon, Fe)>) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(field, m, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (ModMon, Fe)> + '_ {
        self.terms.iter().map(|(m, c)| (*m, *c))
    }

    pub fn coeff(&self, m: ModMon) -> Fe {
        self.terms.get(&m).copied().unwrap_or(Fe::ZERO)
    }

    pub fn lm(&self) -> Option<ModMon> {
        self.terms.keys().next_back().copied()
    }

    pub fn lc(&self) -> Option<Fe> {
        self.terms.values().next_back().copied()
    }

    pub fn leading_data(&self) -> Result<(ModMon, Fe, ModuleElement), ModuleError> {
        let (m, c) = self.terms.iter().next_back().ok_or(ModuleError::ZeroElement)?;
        let mut tail = self.clone();
        tail.terms.remove(m);
        Ok((*m, *c, tail))
    }

    pub fn add_term(&mut self, field: PrimeField, m: ModMon, c: Fe) {
        add_term(&mut self.terms, field, m, c);
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, field: PrimeField, c: Fe, other: &ModuleElement) {
        if c.is_zero() {
            return;
        }
        for (m, v) in other.terms() {
            self.add_term(field, m, field.mul(c, v));
        }
    }

    pub fn scale(&self, field: PrimeField, c: Fe) -> ModuleElement {
        let mut out = Self::zero();
        out.add_scaled(field, c, self);
        out
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self, field: PrimeField) -> ModuleElement {
        match self.lc() {
            Some(c) => self.scale(field, field.inv(c).expect("nonzero leading coefficient")),
            None => Self::zero(),
        }
    }

    /// The coefficient vector of generator `gen`, as an algebra element.
    pub fn component(&self, field: PrimeField, gen: usize) -> AlgebraElement {
        AlgebraElement::from_terms(field, self.terms().filter(|(m, _)| m.gen() == gen).map(|(m, c)| (m.mono, c)))
    }
}

/// `f * c` for a standard monomial `c`.
pub fn act_mono(alg: &BasicAlgebra, f: &ModuleElement, c: Mono) -> ModuleElement {
    let field = alg.field();
    let mut out = ModuleElement::zero();
    for (m, x) in f.terms() {
        for (b, y) in alg.mul_monomials(m.mono, c).terms() {
            out.add_term(field, ModMon { mono: b, gen: m.gen }, field.mul(x, y));
        }
    }
    out
}

/// The right action `f * a`, componentwise.
pub fn act(alg: &BasicAlgebra, f: &ModuleElement, a: &AlgebraElement) -> ModuleElement {
    let field = alg.field();
    let mut out = ModuleElement::zero();
    for (c, y) in a.terms() {
        out.add_scaled(field, y, &act_mono(alg, f, c));
    }
    out
}

/// `f * psi(p)` for an arbitrary path of the quiver.
pub fn act_path(alg: &BasicAlgebra, f: &ModuleElement, p: &Path) -> ModuleElement {
    let field = alg.field();
    let mut out = ModuleElement::zero();
    for (m, x) in f.terms() {
        let prod = alg.right_multiply_path(&AlgebraElement::monomial(m.mono), p);
        for (b, y) in prod.terms() {
            out.add_term(field, ModMon { mono: b, gen: m.gen }, field.mul(x, y));
        }
    }
    out
}

/// The cofactor `c` with `m1 * c = m2` when `m1` strictly divides `m2`.
pub fn strict_divides(alg: &BasicAlgebra, m1: ModMon, m2: ModMon) -> Option<Mono> {
    if m1.gen != m2.gen {
        return None;
    }
    alg.strict_quotient(m1.mono, m2.mono)
}

/// Generators of a free module, each attached to a vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModule {
    gens: Vec<(String, VertexId)>,
}

impl FreeModule {
    pub fn new(gens: Vec<(String, VertexId)>) -> Self {
        Self { gens }
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn name(&self, gen: usize) -> &str {
        &self.gens[gen].0
    }

    pub fn vertex(&self, gen: usize) -> VertexId {
        self.gens[gen].1
    }

    pub fn generators(&self) -> &[(String, VertexId)] {
        &self.gens
    }

    pub fn dim(&self, alg: &BasicAlgebra) -> usize {
        self.gens.iter().map(|(_, v)| alg.monos_from(*v).count()).sum()
    }

    /// All monomials of `F`, in increasing order.
    pub fn monomials(&self, alg: &BasicAlgebra) -> Vec<ModMon> {
        let mut out: Vec<ModMon> = (0..self.rank())
            .flat_map(|i| alg.monos_from(self.vertex(i)).map(move |b| ModMon::new(i, b)))
            .collect();
        out.sort();
        out
    }

    pub fn check(&self, alg: &BasicAlgebra, f: &ModuleElement) -> Result<(), ModuleError> {
        for (m, _) in f.terms() {
            let (name, v) = self.gens.get(m.gen()).ok_or(ModuleError::UnknownGenerator(m.gen()))?;
            if alg.start(m.mono) != *v {
                return Err(ModuleError::VertexMismatch {
                    gen: name.clone(),
                    expected: alg.quiver().vertex_name(*v).to_string(),
                    found: alg.quiver().vertex_name(alg.start(m.mono)).to_string(),
                });
            }
        }
        Ok(())
    }

    pub fn display_monomial(&self, alg: &BasicAlgebra, m: ModMon) -> String {
        let name = self.name(m.gen());
        if alg.degree(m.mono) == 0 {
            name.to_string()
        } else {
            format!("{name}*{}", alg.display(m.mono))
        }
    }

    /// Leading term first, in the input syntax of module polynomials.
    pub fn display(&self, alg: &BasicAlgebra, f: &ModuleElement) -> String {
        if f.is_zero() {
            return "0".into();
        }
        f.terms()
            .rev()
            .map(|(m, c)| {
                let mon = self.display_monomial(alg, m);
                if c == Fe::ONE {
                    mon
                } else {
                    format!("{c}*{mon}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// A monomial `e_gen * path` of the signature module `E`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    pub gen: u32,
    pub path: Path,
}

impl Signature {
    pub fn new(gen: usize, path: Path) -> Self {
        Self { gen: gen as u32, path }
    }

    pub fn gen(&self) -> usize {
        self.gen as usize
    }

    pub fn cmp(&self, order: &OrderSpec, other: &Signature) -> Ordering {
        order.compare_signatures((self.gen(), &self.path), (other.gen(), &other.path))
    }

    pub fn lt(&self, order: &OrderSpec, other: &Signature) -> bool {
        self.cmp(order, other) == Ordering::Less
    }

    /// `self * p`, or `None` when the paths do not compose.
    pub fn times(&self, p: &Path) -> Option<Signature> {
        self.path.compose(p).map(|path| Signature { gen: self.gen, path })
    }

    pub fn degree(&self) -> usize {
        self.path.degree()
    }

    pub fn display(&self, alg: &BasicAlgebra) -> String {
        if self.path.is_trivial() {
            format!("e{}", self.gen + 1)
        } else {
            format!("e{}*{}", self.gen + 1, alg.quiver().display_path(&self.path))
        }
    }
}

/// A module element together with the leading monomial of one of its
/// preimages in `E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedElement {
    pub poly: ModuleElement,
    pub sig: Signature,
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::algebra::tests::{a1, a1_with, a2};
    use crate::ordering::DegreeMode;
    use crate::quiver::VertexId;
    use proptest::prelude::*;

    pub fn v0() -> VertexId {
        VertexId(0)
    }

    pub fn free(rank: usize) -> FreeModule {
        FreeModule::new((0..rank).map(|i| (format!("m{}", i + 1), v0())).collect())
    }

    /// Monomial of `A1` by degree.
    pub fn xm(alg: &BasicAlgebra, deg: usize) -> Mono {
        alg.standard_monomials().find(|&m| alg.degree(m) == deg).unwrap()
    }

    pub fn el(alg: &BasicAlgebra, terms: &[(usize, usize)]) -> ModuleElement {
        ModuleElement::from_terms(alg.field(), terms.iter().map(|&(g, d)| (ModMon::new(g, xm(alg, d)), Fe::ONE)))
    }

    #[test]
    fn action_examples() {
        let alg = a1();
        let x = AlgebraElement::monomial(xm(&alg, 1));
        assert_eq!(act(&alg, &el(&alg, &[(0, 1)]), &x), el(&alg, &[(0, 2)]));
        assert!(act(&alg, &el(&alg, &[(0, 2)]), &x).is_zero());
        assert_eq!(act(&alg, &el(&alg, &[(0, 1), (1, 0)]), &x), el(&alg, &[(0, 2), (1, 1)]));
    }

    #[test]
    fn leading_data_examples() {
        let alg = a1();
        let f = el(&alg, &[(0, 1), (0, 2)]);
        assert_eq!(f.lm(), Some(ModMon::new(0, xm(&alg, 1))));
        let pos = a1_with(DegreeMode::PositiveDegree);
        let f = el(&pos, &[(0, 1), (0, 2)]);
        assert_eq!(f.lm(), Some(ModMon::new(0, xm(&pos, 2))));
        let (lm, lc, tail) = f.leading_data().unwrap();
        assert_eq!((lm, lc), (ModMon::new(0, xm(&pos, 2)), Fe::ONE));
        assert_eq!(tail, el(&pos, &[(0, 1)]));
        let g = el(&alg, &[(1, 1), (0, 1)]);
        assert_eq!(g.lm(), Some(ModMon::new(0, xm(&alg, 1))));
        assert_eq!(ModuleElement::zero().leading_data(), Err(ModuleError::ZeroElement));
    }

    #[test]
    fn strict_division_examples() {
        let alg = a1();
        let m = |g, d| ModMon::new(g, xm(&alg, d));
        assert_eq!(strict_divides(&alg, m(0, 1), m(0, 2)), Some(xm(&alg, 1)));
        assert_eq!(strict_divides(&alg, m(0, 1), m(1, 2)), None);
        assert_eq!(strict_divides(&alg, m(0, 2), m(0, 1)), None);
    }

    #[test]
    fn vertex_tags_are_checked() {
        let alg = a2();
        let q = alg.quiver();
        let u = q.vertex("u").unwrap();
        let v = q.vertex("v").unwrap();
        let f = FreeModule::new(vec![("m1".into(), u)]);
        let a = alg.lookup(&q.arrow_path(q.arrow_id("a").unwrap())).unwrap();
        let b = alg.lookup(&q.arrow_path(q.arrow_id("b").unwrap())).unwrap();
        assert!(f.check(&alg, &ModuleElement::term(ModMon::new(0, a), Fe::ONE)).is_ok());
        assert!(f.check(&alg, &ModuleElement::term(ModMon::new(0, b), Fe::ONE)).is_err());
        assert_eq!(f.dim(&alg), 2);
        let full = FreeModule::new(vec![("p".into(), u), ("q".into(), v)]);
        assert_eq!(full.dim(&alg), alg.dim());
    }

    #[test]
    fn display_in_input_syntax() {
        let alg = a1();
        let f = free(2);
        let e = ModuleElement::from_terms(
            alg.field(),
            [(ModMon::new(0, xm(&alg, 2)), Fe::ONE), (ModMon::new(1, xm(&alg, 0)), Fe::ONE)],
        );
        assert_eq!(f.display(&alg, &e), "m2 + m1*x*x");
    }

    fn elem_strategy() -> impl Strategy<Value = Vec<(usize, usize, bool)>> {
        prop::collection::vec((0usize..2, 0usize..3, any::<bool>()), 0..6)
    }

    fn build(alg: &BasicAlgebra, t: &[(usize, usize, bool)]) -> ModuleElement {
        ModuleElement::from_terms(
            alg.field(),
            t.iter().filter(|t| t.2).map(|&(g, d, _)| (ModMon::new(g, xm(alg, d)), Fe::ONE)),
        )
    }

    proptest! {
        /// `(f*a)*a' = f*(a*a')` and the leading monomial of `f*c` is
        /// `LM(f)*c` for small cofactors `c`.
        #[test]
        fn action_laws(t in elem_strategy(), d1 in 0usize..3, d2 in 0usize..3) {
            let alg = a1();
            let f = build(&alg, &t);
            let a = AlgebraElement::monomial(xm(&alg, d1));
            let b = AlgebraElement::monomial(xm(&alg, d2));
            prop_assert_eq!(act(&alg, &act(&alg, &f, &a), &b), act(&alg, &f, &alg.multiply(&a, &b)));
            if let Some(lm) = f.lm() {
                let c = xm(&alg, d1);
                if alg.is_small_cofactor(lm.mono, c) {
                    let prod = act_mono(&alg, &f, c);
                    prop_assert_eq!(prod.lm(), Some(ModMon { mono: alg.concat_std(lm.mono, c).unwrap(), gen: lm.gen }));
                }
            }
        }
    }
}
