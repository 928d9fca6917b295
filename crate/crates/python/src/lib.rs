//! Python bindings: load a problem file, compute signed standard bases,
//! Loewy layers and minimal generators, and cross-check against the oracle.

use pyo3::create_exception;
use pyo3::exceptions::{PyOSError, PyValueError};
use pyo3::prelude::*;

use quif5::algebra::DEFAULT_DEGREE_CAP;
use quif5::buchberger::buchberger_stdbasis;
use quif5::f5::{f5_stdbasis, verify_f5_criterion, F5Options, F5Result};
use quif5::loewy::{loewy_layers, minimal_generators};
use quif5::module::ModuleElement;
use quif5::oracle::{radical_filtration, standard_basis_defect};
use quif5::problem::{load_problem, Instance, ProblemError};

create_exception!(quif5py, ParseError, PyValueError);
create_exception!(quif5py, SemanticError, PyValueError);
create_exception!(quif5py, ComputationError, PyValueError);

fn problem_err(e: ProblemError) -> PyErr {
    match e {
        ProblemError::Parse(e) => ParseError::new_err(e.to_string()),
        ProblemError::Semantic(e) => SemanticError::new_err(e.to_string()),
        ProblemError::Algebra(e) => ComputationError::new_err(e.to_string()),
    }
}

fn computation(e: impl std::fmt::Display) -> PyErr {
    ComputationError::new_err(e.to_string())
}

/// A resolved problem: algebra, free module and generators of `M`.
#[pyclass(frozen)]
struct Problem {
    inst: Instance,
}

impl Problem {
    fn show(&self, elems: &[ModuleElement]) -> Vec<String> {
        elems.iter().map(|g| self.inst.module.display(&self.inst.algebra, g)).collect()
    }

    fn run_f5(&self) -> PyResult<F5Result> {
        f5_stdbasis(&self.inst.algebra, &self.inst.generators, F5Options::default()).map_err(computation)
    }
}

#[pymethods]
impl Problem {
    #[new]
    #[pyo3(signature = (text, degree_cap = DEFAULT_DEGREE_CAP))]
    fn new(text: &str, degree_cap: usize) -> PyResult<Self> {
        load_problem(text, degree_cap).map(|inst| Problem { inst }).map_err(problem_err)
    }

    #[staticmethod]
    #[pyo3(signature = (path, degree_cap = DEFAULT_DEGREE_CAP))]
    fn load(path: std::path::PathBuf, degree_cap: usize) -> PyResult<Self> {
        let text = std::fs::read_to_string(&path).map_err(|e| PyOSError::new_err(format!("{}: {e}", path.display())))?;
        Self::new(&text, degree_cap)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inst.algebra.dim()
    }

    #[getter]
    fn nilpotency(&self) -> usize {
        self.inst.algebra.nilpotency()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inst.module.rank()
    }

    #[getter]
    fn warnings(&self) -> Vec<String> {
        self.inst.warnings.iter().map(|w| w.to_string()).collect()
    }

    #[getter]
    fn generators(&self) -> Vec<(String, String)> {
        self.inst.generator_names.iter().cloned().zip(self.show(&self.inst.generators)).collect()
    }

    /// Standard monomials of the algebra in ascending order.
    fn standard_monomials(&self) -> Vec<String> {
        let alg = &self.inst.algebra;
        alg.standard_monomials().map(|m| alg.display(m)).collect()
    }

    /// Unsigned standard basis by Buchberger.
    fn stdbasis(&self) -> Vec<String> {
        self.show(&buchberger_stdbasis(&self.inst.algebra, &self.inst.generators).0)
    }

    /// Signed standard basis: `(basis, syzygies, stats)`, where basis holds
    /// `(signature, element)` pairs.
    #[allow(clippy::type_complexity)]
    fn f5(&self) -> PyResult<(Vec<(String, String)>, Vec<String>, Vec<(&'static str, usize)>)> {
        let alg = &self.inst.algebra;
        let res = self.run_f5()?;
        let basis = res.basis.iter().map(|g| (g.sig.display(alg), self.inst.module.display(alg, &g.poly))).collect();
        let syz = res.syzygies.iter().map(|s| s.display(alg)).collect();
        let s = res.stats;
        let stats = vec![
            ("pairs_generated", s.pairs_generated),
            ("skipped_by_l", s.skipped_by_l),
            ("skipped_rewritten", s.skipped_rewritten),
            ("stale", s.stale),
            ("processed", s.processed),
            ("zero_reductions", s.zero_reductions),
            ("interreduction_zeros", s.interreduction_zeros),
            ("resweeps", s.resweeps),
            ("duplicate_signatures", s.duplicate_signatures),
            ("basis_size", s.basis_size),
        ];
        Ok((basis, syz, stats))
    }

    /// Loewy layers as `(degree, representatives)`; needs negdeglex.
    fn loewy_layers(&self) -> PyResult<Vec<(usize, Vec<String>)>> {
        let res = self.run_f5()?;
        let layers = loewy_layers(&self.inst.algebra, &res.basis).map_err(computation)?;
        Ok(layers.iter().map(|l| (l.degree, self.show(&l.representatives))).collect())
    }

    fn loewy_dims(&self) -> PyResult<Vec<usize>> {
        Ok(self.loewy_layers()?.iter().map(|(_, r)| r.len()).collect())
    }

    fn minimal_generators(&self) -> PyResult<Vec<String>> {
        let res = self.run_f5()?;
        let gens = minimal_generators(&self.inst.algebra, &res.basis).map_err(computation)?;
        Ok(self.show(&gens))
    }

    /// `dim Rad^d(M)` for `d = 0, 1, ...` by dense linear algebra.
    fn radical_dims(&self) -> PyResult<Vec<usize>> {
        radical_filtration(&self.inst.algebra, &self.inst.module, &self.inst.generators).map_err(computation)
    }

    /// Checks the signed basis against the oracle; `None` means it passed.
    fn verify(&self) -> PyResult<Option<String>> {
        let (alg, fm, gens) = (&self.inst.algebra, &self.inst.module, &self.inst.generators);
        let res = self.run_f5()?;
        let polys: Vec<ModuleElement> = res.basis.iter().map(|g| g.poly.clone()).collect();
        if let Some(d) = standard_basis_defect(alg, fm, gens, &polys).map_err(computation)? {
            return Ok(Some(d));
        }
        let missing = verify_f5_criterion(alg, &res.basis, &res.syzygies);
        Ok((!missing.is_empty()).then(|| format!("{} critical pairs lack an F5 reducer", missing.len())))
    }
}

#[pymodule]
fn quif5py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    register(m)
}

/// Adds the classes and exceptions to `m`.
pub fn register(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Problem>()?;
    m.add("ParseError", m.py().get_type::<ParseError>())?;
    m.add("SemanticError", m.py().get_type::<SemanticError>())?;
    m.add("ComputationError", m.py().get_type::<ComputationError>())?;
    Ok(())
}
