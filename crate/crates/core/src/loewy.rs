//! Loewy layers and minimal generators read off an interreduced signed
//! standard basis under a negative degree ordering.
//!
//! The products `g * c`, with `c` a small cofactor of `LM(g)` and `g * c`
//! irreducible below its signature `sig(g) * c`, form a basis of `M`; those
//! of signature degree at least `d` form a basis of `Rad^d(M)`.

use std::cmp::Ordering;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{BasicAlgebra, Mono};
use crate::module::{act_mono, ModMon, ModuleElement, Signature, SignedElement};
use crate::reduction::{signature_admits, LmIndex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LoewyError {
    #[error("Loewy layers need a negative degree ordering (negdeglex)")]
    WrongOrdering,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LoewyLayer {
    /// Layer `d` is `Rad^(d-1)(M) / Rad^d(M)`, starting at 1.
    pub degree: usize,
    #[serde(skip)]
    pub representatives: Vec<ModuleElement>,
}

impl LoewyLayer {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }
}

/// A product `g * c` of the layer basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerElement {
    pub element: usize,
    pub cofactor: Mono,
    pub sig: Signature,
    pub lm: ModMon,
}

fn require_negative(alg: &BasicAlgebra) -> Result<(), LoewyError> {
    if alg.order().is_negative() {
        Ok(())
    } else {
        Err(LoewyError::WrongOrdering)
    }
}

/// All products `g * c` with `c` small for `LM(g)` that are irreducible
/// below their signature, in basis order then cofactor order.
pub fn layer_elements(alg: &BasicAlgebra, basis: &[SignedElement]) -> Result<Vec<LayerElement>, LoewyError> {
    require_negative(alg)?;
    let index = LmIndex::new(basis.iter().map(|g| &g.poly));
    let mut out = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lm = g.poly.lm().expect("basis elements are nonzero");
        for c in alg.small_cofactors(lm.mono) {
            let Some(sig) = g.sig.times(alg.path(c)) else { continue };
            let m = ModMon { mono: alg.concat_std(lm.mono, c).expect("small cofactor"), gen: lm.gen };
            if index.divisors(alg, m).any(|(h, d)| signature_admits(alg, &basis[h], d, &sig)) {
                continue;
            }
            out.push(LayerElement { element: i, cofactor: c, sig, lm: m });
        }
    }
    Ok(out)
}

/// The basis `B_tau` of the elements of `M` with a preimage leading below
/// or at `tau`.
pub fn layer_basis(alg: &BasicAlgebra, basis: &[SignedElement], tau: &Signature) -> Result<Vec<ModuleElement>, LoewyError> {
    let order = alg.order();
    Ok(layer_elements(alg, basis)?
        .into_iter()
        .filter(|e| e.sig.cmp(order, tau) != Ordering::Greater)
        .map(|e| act_mono(alg, &basis[e.element].poly, e.cofactor))
        .collect())
}

/// Basis of `Rad^d(M)`: the layer basis for the greatest signature of degree `d`.
pub fn radical_basis(alg: &BasicAlgebra, basis: &[SignedElement], d: usize) -> Result<Vec<ModuleElement>, LoewyError> {
    Ok(layer_elements(alg, basis)?
        .into_iter()
        .filter(|e| e.sig.degree() >= d)
        .map(|e| act_mono(alg, &basis[e.element].poly, e.cofactor))
        .collect())
}

/// Layers `1, 2, ...` up to the last nonzero one.
pub fn loewy_layers(alg: &BasicAlgebra, basis: &[SignedElement]) -> Result<Vec<LoewyLayer>, LoewyError> {
    let elems = layer_elements(alg, basis)?;
    let top = elems.iter().map(|e| e.sig.degree() + 1).max().unwrap_or(0);
    let mut layers: Vec<LoewyLayer> =
        (1..=top).map(|degree| LoewyLayer { degree, representatives: Vec::new() }).collect();
    for e in elems {
        layers[e.sig.degree()].representatives.push(act_mono(alg, &basis[e.element].poly, e.cofactor));
    }
    Ok(layers)
}

pub fn loewy_dims(alg: &BasicAlgebra, basis: &[SignedElement]) -> Result<Vec<usize>, LoewyError> {
    Ok(loewy_layers(alg, basis)?.iter().map(LoewyLayer::dim).collect())
}

/// Elements of signature degree zero; they generate `M` minimally.
pub fn minimal_generators(alg: &BasicAlgebra, basis: &[SignedElement]) -> Result<Vec<ModuleElement>, LoewyError> {
    require_negative(alg)?;
    Ok(basis.iter().filter(|g| g.sig.degree() == 0).map(|g| g.poly.clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::tests::{a1, a1_with, a2};
    use crate::f5::{f5_stdbasis, F5Options};
    use crate::module::tests::{el, xm};
    use crate::ordering::DegreeMode;
    use crate::quiver::Path;
    use crate::field::Fe;

    fn basis_of(alg: &BasicAlgebra, gens: &[ModuleElement]) -> Vec<SignedElement> {
        f5_stdbasis(alg, gens, F5Options::default()).unwrap().basis
    }

    #[test]
    fn layer_basis_examples() {
        let alg = a1();
        let g = basis_of(&alg, &[el(&alg, &[(0, 1)])]);
        let v = alg.start(xm(&alg, 0));
        let tau0 = Signature::new(0, Path::trivial(v));
        assert_eq!(layer_basis(&alg, &g, &tau0).unwrap(), vec![el(&alg, &[(0, 1)]), el(&alg, &[(0, 2)])]);
        let tau1 = Signature::new(0, alg.path(xm(&alg, 1)).clone());
        assert_eq!(layer_basis(&alg, &g, &tau1).unwrap(), vec![el(&alg, &[(0, 2)])]);
        let tau3 = Signature::new(0, alg.path(xm(&alg, 2)).compose(alg.path(xm(&alg, 1))).unwrap());
        assert!(layer_basis(&alg, &g, &tau3).unwrap().is_empty());
    }

    #[test]
    fn loewy_examples() {
        let alg = a1();
        let g = basis_of(&alg, &[el(&alg, &[(0, 1)])]);
        assert_eq!(loewy_dims(&alg, &g).unwrap(), vec![1, 1]);
        assert_eq!(minimal_generators(&alg, &g).unwrap(), vec![el(&alg, &[(0, 1)])]);

        let g = basis_of(&alg, &[el(&alg, &[(0, 0)])]);
        assert_eq!(loewy_dims(&alg, &g).unwrap(), vec![1, 1, 1]);

        let alg2 = a2();
        let a = alg2.arrow_mono(alg2.quiver().arrow_id("a").unwrap());
        let gen = ModuleElement::term(ModMon::new(0, a), Fe::ONE);
        let g = basis_of(&alg2, &[gen]);
        assert_eq!(loewy_dims(&alg2, &g).unwrap(), vec![1]);
    }

    #[test]
    fn minimal_generator_examples() {
        let alg = a1();
        let g = basis_of(&alg, &[el(&alg, &[(0, 1), (1, 1)]), el(&alg, &[(1, 1)])]);
        assert_eq!(minimal_generators(&alg, &g).unwrap().len(), 2);
        assert_eq!(loewy_dims(&alg, &g).unwrap(), vec![2, 2]);
        let g = basis_of(&alg, &[el(&alg, &[(0, 1)]), el(&alg, &[(0, 2)])]);
        assert_eq!(minimal_generators(&alg, &g).unwrap().len(), 1);
    }

    #[test]
    fn positive_ordering_is_rejected() {
        let alg = a1_with(DegreeMode::PositiveDegree);
        let g = basis_of(&alg, &[el(&alg, &[(0, 1)])]);
        assert_eq!(loewy_layers(&alg, &g), Err(LoewyError::WrongOrdering));
        assert_eq!(minimal_generators(&alg, &g), Err(LoewyError::WrongOrdering));
    }
}
