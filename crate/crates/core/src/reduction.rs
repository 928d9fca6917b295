//! Head reduction: the unsigned normal form and the signed normal form
//! bounded by a signature. Both record the standard representation of
//! `f - nf` they produce.

use std::collections::HashMap;

use crate::algebra::{BasicAlgebra, Mono};
use crate::field::Fe;
use crate::module::{act_mono, ModMon, ModuleElement, Signature, SignedElement};

/// One term `coeff * G[index] * cofactor` of a standard representation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RepStep {
    pub coeff: Fe,
    pub index: usize,
    pub cofactor: Mono,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct StandardRepresentation {
    pub steps: Vec<RepStep>,
}

impl StandardRepresentation {
    /// `sum coeff_i * basis[index_i] * cofactor_i`.
    pub fn replay<'a>(&self, alg: &BasicAlgebra, basis: impl Fn(usize) -> &'a ModuleElement) -> ModuleElement {
        let field = alg.field();
        let mut out = ModuleElement::zero();
        for s in &self.steps {
            out.add_scaled(field, s.coeff, &act_mono(alg, basis(s.index), s.cofactor));
        }
        out
    }
}

/// Basis elements grouped by leading monomial, in list order.
#[derive(Debug, Clone, Default)]
pub struct LmIndex {
    by_lm: HashMap<ModMon, Vec<usize>>,
}

impl LmIndex {
    pub fn new<'a>(elements: impl IntoIterator<Item = &'a ModuleElement>) -> Self {
        let mut by_lm: HashMap<ModMon, Vec<usize>> = HashMap::new();
        for (i, g) in elements.into_iter().enumerate() {
            if let Some(lm) = g.lm() {
                by_lm.entry(lm).or_default().push(i);
            }
        }
        Self { by_lm }
    }

    /// Elements whose leading monomial strictly divides `m`, with cofactors.
    /// Divisors come by increasing prefix length.
    pub fn divisors<'a>(&'a self, alg: &'a BasicAlgebra, m: ModMon) -> impl Iterator<Item = (usize, Mono)> + 'a {
        alg.splits(m.mono).iter().flat_map(move |&(p, c)| {
            self.by_lm
                .get(&ModMon { mono: p, gen: m.gen })
                .into_iter()
                .flatten()
                .map(move |&i| (i, c))
        })
    }
}

/// The admissible reducer with the greatest leading monomial, earliest in
/// the list on ties.
fn choose_reducer(
    alg: &BasicAlgebra,
    index: &LmIndex,
    lm: ModMon,
    lm_of: impl Fn(usize) -> ModMon,
    mut admissible: impl FnMut(usize, Mono) -> bool,
) -> Option<(usize, Mono)> {
    let mut best: Option<(ModMon, usize, Mono)> = None;
    for (i, c) in index.divisors(alg, lm) {
        if !admissible(i, c) {
            continue;
        }
        let key = lm_of(i);
        let better = match best {
            None => true,
            Some((bk, bi, _)) => key > bk || (key == bk && i < bi),
        };
        if better {
            best = Some((key, i, c));
        }
    }
    best.map(|(_, i, c)| (i, c))
}

fn reduce_loop(
    alg: &BasicAlgebra,
    f: &ModuleElement,
    poly: impl Fn(usize) -> ModuleElement,
    index: &LmIndex,
    lm_of: impl Fn(usize) -> ModMon + Copy,
    mut admissible: impl FnMut(usize, Mono) -> bool,
) -> (ModuleElement, StandardRepresentation) {
    let field = alg.field();
    let mut r = f.clone();
    let mut rep = StandardRepresentation::default();
    while let Some(lm) = r.lm() {
        let Some((i, c)) = choose_reducer(alg, index, lm, lm_of, &mut admissible) else {
            break;
        };
        let g = poly(i);
        let alpha = field.div(r.lc().expect("nonzero"), g.lc().expect("basis elements are nonzero"));
        r.add_scaled(field, field.neg(alpha), &act_mono(alg, &g, c));
        assert!(r.lm().is_none_or(|m| m < lm), "reduction step must lower the leading monomial");
        rep.steps.push(RepStep { coeff: alpha, index: i, cofactor: c });
    }
    (r, rep)
}

/// Head normal form of `f` with respect to `basis`.
pub fn normal_form(alg: &BasicAlgebra, f: &ModuleElement, basis: &[ModuleElement]) -> (ModuleElement, StandardRepresentation) {
    let index = LmIndex::new(basis);
    normal_form_indexed(alg, f, basis, &index)
}

/// As [`normal_form`], with a prebuilt index over `basis`.
pub fn normal_form_indexed(
    alg: &BasicAlgebra,
    f: &ModuleElement,
    basis: &[ModuleElement],
    index: &LmIndex,
) -> (ModuleElement, StandardRepresentation) {
    reduce_loop(alg, f, |i| basis[i].clone(), index, |i| basis[i].lm().unwrap(), |_, _| true)
}

/// Whether the reducer `g * c` is allowed below the bound `s`.
pub fn signature_admits(alg: &BasicAlgebra, g: &SignedElement, c: Mono, s: &Signature) -> bool {
    g.sig.times(alg.path(c)).is_some_and(|t| t.lt(alg.order(), s))
}

/// Head normal form of `f` using only reducers `g * c` with
/// `sig(g) * c < s`.
pub fn signed_normal_form(
    alg: &BasicAlgebra,
    f: &ModuleElement,
    basis: &[SignedElement],
    s: &Signature,
) -> (ModuleElement, StandardRepresentation) {
    let index = LmIndex::new(basis.iter().map(|g| &g.poly));
    signed_normal_form_indexed(alg, f, basis, &index, s)
}

pub fn signed_normal_form_indexed(
    alg: &BasicAlgebra,
    f: &ModuleElement,
    basis: &[SignedElement],
    index: &LmIndex,
    s: &Signature,
) -> (ModuleElement, StandardRepresentation) {
    signed_normal_form_except(alg, f, basis, index, s, None)
}

/// As [`signed_normal_form_indexed`], never using `basis[skip]`.
pub fn signed_normal_form_except(
    alg: &BasicAlgebra,
    f: &ModuleElement,
    basis: &[SignedElement],
    index: &LmIndex,
    s: &Signature,
    skip: Option<usize>,
) -> (ModuleElement, StandardRepresentation) {
    reduce_loop(
        alg,
        f,
        |i| basis[i].poly.clone(),
        index,
        |i| basis[i].poly.lm().unwrap(),
        |i, c| Some(i) != skip && signature_admits(alg, &basis[i], c, s),
    )
}

/// No basis element's leading monomial strictly divides `LM(f)`.
pub fn is_irreducible(alg: &BasicAlgebra, f: &ModuleElement, basis: &[ModuleElement]) -> bool {
    let Some(lm) = f.lm() else { return true };
    !basis.iter().any(|g| g.lm().is_some_and(|glm| crate::module::strict_divides(alg, glm, lm).is_some()))
}

/// `f` is not reducible by any `g * c` with `sig(g) * c < s`.
pub fn is_s_irreducible(alg: &BasicAlgebra, f: &ModuleElement, basis: &[SignedElement], s: &Signature) -> bool {
    let Some(lm) = f.lm() else { return true };
    !basis.iter().any(|g| {
        g.poly
            .lm()
            .and_then(|glm| crate::module::strict_divides(alg, glm, lm))
            .is_some_and(|c| signature_admits(alg, g, c, s))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::a1;
    use crate::module::tests::{el, xm};
    use crate::quiver::Path;
    use crate::quiver::VertexId;

    fn sig(alg: &BasicAlgebra, gen: usize, deg: usize) -> Signature {
        Signature::new(gen, alg.path(xm(alg, deg)).clone())
    }

    #[test]
    fn unsigned_examples() {
        let alg = a1();
        let g = vec![el(&alg, &[(0, 1)])];
        let (nf, rep) = normal_form(&alg, &el(&alg, &[(0, 2)]), &g);
        assert!(nf.is_zero());
        assert_eq!(rep.steps, vec![RepStep { coeff: Fe::ONE, index: 0, cofactor: xm(&alg, 1) }]);
        assert_eq!(rep.replay(&alg, |i| &g[i]), el(&alg, &[(0, 2)]));

        let (nf, rep) = normal_form(&alg, &ModuleElement::zero(), &g);
        assert!(nf.is_zero() && rep.steps.is_empty());

        let one = el(&alg, &[(0, 0)]);
        let (nf, _) = normal_form(&alg, &one, &g);
        assert_eq!(nf, one);
    }

    #[test]
    fn signed_examples() {
        let alg = a1();
        let g = vec![SignedElement { poly: el(&alg, &[(0, 1)]), sig: Signature::new(0, Path::trivial(VertexId(0))) }];
        let f = el(&alg, &[(0, 2)]);
        let (nf, rep) = signed_normal_form(&alg, &f, &g, &sig(&alg, 0, 2));
        assert_eq!(nf, f);
        assert!(rep.steps.is_empty());

        let (nf, rep) = signed_normal_form(&alg, &f, &g, &sig(&alg, 0, 0));
        assert!(nf.is_zero());
        assert_eq!(rep.steps, vec![RepStep { coeff: Fe::ONE, index: 0, cofactor: xm(&alg, 1) }]);

        let (nf, _) = signed_normal_form(&alg, &ModuleElement::zero(), &g, &sig(&alg, 0, 0));
        assert!(nf.is_zero());
    }

    #[test]
    fn greatest_leading_monomial_wins() {
        let alg = a1();
        // both x^2 and x divide x^2 in rank 1; under negdeglex x is greater
        let g = vec![el(&alg, &[(0, 2)]), el(&alg, &[(0, 1)])];
        let (_, rep) = normal_form(&alg, &el(&alg, &[(0, 2)]), &g);
        assert_eq!(rep.steps[0].index, 1);
        // equal leading monomials: the earlier one
        let g = vec![el(&alg, &[(0, 1), (0, 2)]), el(&alg, &[(0, 1)])];
        let (_, rep) = normal_form(&alg, &el(&alg, &[(0, 1)]), &g);
        assert_eq!(rep.steps[0].index, 0);
    }
}
