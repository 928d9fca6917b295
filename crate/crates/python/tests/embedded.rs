use pyo3::prelude::*;
use pyo3::types::PyModule;

const A1: &str = include_str!("../../core/tests/fixtures/a1.qv");

#[test]
fn module_runs_in_embedded_interpreter() {
    Python::initialize();
    Python::attach(|py| {
        let m = PyModule::new(py, "quif5py").unwrap();
        quif5py::register(&m).unwrap();
        let p = m.getattr("Problem").unwrap().call1((A1,)).unwrap();
        let dims: Vec<usize> = p.call_method0("loewy_dims").unwrap().extract().unwrap();
        assert_eq!(dims, [1, 1]);
        let verdict: Option<String> = p.call_method0("verify").unwrap().extract().unwrap();
        assert_eq!(verdict, None);
        let err = m.getattr("Problem").unwrap().call1(("quiver { vertex v }",)).unwrap_err();
        assert!(err.is_instance(py, &py.get_type::<quif5py::ParseError>()));
    });
}
