//! Python bindings: exact cyclotomic numbers, permutation groups, character
//! tables with their Galois actions, commuting-pair orbits and the two
//! covering models, plus the full CLI behind `run_command`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyModule;

use galtab::braid;
use galtab::chartab;
use galtab::cli;
use galtab::cyclo;
use galtab::galois;
use galtab::permgrp;
use galtab::profinite;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An exact element of a cyclotomic field Q[z_n].
#[pyclass(name = "CycNumber", frozen, from_py_object)]
#[derive(Clone)]
struct PyCycNumber {
    inner: cyclo::CycNumber,
}

#[pymethods]
impl PyCycNumber {
    /// z_n^k
    #[staticmethod]
    fn root_of_unity(n: u64, k: i64) -> PyResult<Self> {
        Ok(Self { inner: cyclo::CycNumber::root_of_unity(n, k).map_err(value_err)? })
    }

    #[staticmethod]
    fn integer(n: u64, value: i64) -> PyResult<Self> {
        Ok(Self { inner: cyclo::CycNumber::from_integer(n, value).map_err(value_err)? })
    }

    /// Parses the textual grammar, e.g. "1 - 1*z^2 @5".
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        Ok(Self { inner: text.parse().map_err(value_err)? })
    }

    fn order(&self) -> u64 {
        self.inner.order()
    }

    fn __add__(&self, rhs: &Self) -> PyResult<Self> {
        Ok(Self { inner: self.inner.checked_add(&rhs.inner).map_err(value_err)? })
    }

    fn __sub__(&self, rhs: &Self) -> PyResult<Self> {
        Ok(Self { inner: self.inner.checked_sub(&rhs.inner).map_err(value_err)? })
    }

    fn __mul__(&self, rhs: &Self) -> PyResult<Self> {
        Ok(Self { inner: self.inner.checked_mul(&rhs.inner).map_err(value_err)? })
    }

    fn __neg__(&self) -> Self {
        Self { inner: -&self.inner }
    }

    fn __eq__(&self, rhs: &Self) -> bool {
        self.inner == rhs.inner
    }

    fn galois(&self, ell: i64) -> PyResult<Self> {
        let aut = cyclo::GaloisAut::new(self.inner.order(), ell).map_err(value_err)?;
        Ok(Self { inner: aut.apply(&self.inner).map_err(value_err)? })
    }

    fn embed(&self, m: u64) -> PyResult<Self> {
        Ok(Self { inner: self.inner.embed(m).map_err(value_err)? })
    }

    fn conjugate(&self) -> Self {
        Self { inner: self.inner.conjugate() }
    }

    fn inverse(&self) -> Option<Self> {
        self.inner.inverse().map(|inner| Self { inner })
    }

    /// "rational_integer" | "rational" | "cyclotomic_integer" | "general"
    fn classify(&self) -> String {
        self.inner.classify().to_string()
    }

    /// Double-precision (re, im) cross-check value.
    fn to_complex(&self) -> (f64, f64) {
        let c = self.inner.to_complex();
        (c.re, c.im)
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!("CycNumber('{}')", self.inner)
    }
}

/// A finite permutation group with deterministic element ordering.
#[pyclass(name = "Group", frozen)]
struct PyGroup {
    inner: permgrp::FiniteGroup,
}

impl PyGroup {
    fn element_index(&self, cycles: &str) -> PyResult<usize> {
        let perm = permgrp::parse_permutation(cycles, self.inner.degree()).map_err(value_err)?;
        self.inner
            .index_of(&perm)
            .ok_or_else(|| value_err(format!("'{cycles}' is not an element of the group")))
    }
}

#[pymethods]
impl PyGroup {
    /// Builtin families: S<k>, A<k>, Z<k>, D<k>, Q8.
    #[staticmethod]
    fn builtin(name: &str) -> PyResult<Self> {
        Ok(Self { inner: permgrp::builtin(name).map_err(value_err)? })
    }

    /// From 1-based cycle-notation generators at the stated degree.
    #[staticmethod]
    fn from_generators(degree: usize, generators: Vec<String>) -> PyResult<Self> {
        let gens = generators
            .iter()
            .map(|s| permgrp::parse_permutation(s, degree))
            .collect::<Result<Vec<_>, _>>()
            .map_err(value_err)?;
        Ok(Self {
            inner: permgrp::FiniteGroup::generate(degree, gens, permgrp::DEFAULT_ELEMENT_CAP)
                .map_err(value_err)?,
        })
    }

    fn order(&self) -> usize {
        self.inner.order()
    }

    fn degree(&self) -> usize {
        self.inner.degree()
    }

    fn exponent(&self) -> u64 {
        self.inner.exponent()
    }

    fn elements(&self) -> Vec<String> {
        self.inner.elements().iter().map(|p| p.to_string()).collect()
    }

    fn class_sizes(&self) -> Vec<usize> {
        self.inner.conjugacy_classes().sizes()
    }

    fn class_representatives(&self) -> Vec<String> {
        let classes = self.inner.conjugacy_classes();
        classes
            .classes()
            .iter()
            .map(|c| self.inner.element(c.rep).to_string())
            .collect()
    }

    fn element_order(&self, cycles: &str) -> PyResult<u64> {
        Ok(self.inner.element_order(self.element_index(cycles)?))
    }

    fn centralizer_order(&self, cycles: &str) -> PyResult<usize> {
        let perm = permgrp::parse_permutation(cycles, self.inner.degree()).map_err(value_err)?;
        Ok(self.inner.centralizer(&perm).map_err(value_err)?.order())
    }

    /// Class-index map induced by g -> g^ell.
    fn power_map_on_classes(&self, ell: i64) -> Vec<usize> {
        let classes = self.inner.conjugacy_classes();
        permgrp::power_map_on_classes(&self.inner, &classes, ell)
    }

    fn character_table(&self) -> PyResult<PyCharacterTable> {
        Ok(PyCharacterTable {
            inner: chartab::compute_character_table(&self.inner).map_err(value_err)?,
        })
    }

    fn pair_class_count(&self) -> PyResult<usize> {
        Ok(braid::pair_classes(&self.inner, braid::DEFAULT_PAIR_CAP)
            .map_err(value_err)?
            .len())
    }

    fn pair_class_count_oracle(&self) -> usize {
        braid::pair_class_count_oracle(&self.inner)
    }

    fn sl2_orbit_count(&self) -> PyResult<usize> {
        let pairs = braid::pair_classes(&self.inner, braid::DEFAULT_PAIR_CAP).map_err(value_err)?;
        Ok(braid::sl2_orbits(&self.inner, &pairs).orbits.len())
    }

    fn center_acts_trivially(&self) -> PyResult<bool> {
        let pairs = braid::pair_classes(&self.inner, braid::DEFAULT_PAIR_CAP).map_err(value_err)?;
        Ok(braid::center_acts_trivially(&self.inner, &pairs))
    }

    /// Applies a braid word ("s1 s2' ...") to a pair of elements given in
    /// cycle notation; returns the resulting pair in cycle notation.
    fn braid_pair(&self, word: &str, first: &str, second: &str) -> PyResult<(String, String)> {
        let word = braid::parse_braid_word(word).map_err(value_err)?;
        let pair = (self.element_index(first)?, self.element_index(second)?);
        let out = braid::braid_act_pair(&self.inner, &word, pair);
        Ok((
            self.inner.element(out.0).to_string(),
            self.inner.element(out.1).to_string(),
        ))
    }

    fn collapse(&self, first: &str, second: &str, third: &str) -> PyResult<(String, String)> {
        let t = (
            self.element_index(first)?,
            self.element_index(second)?,
            self.element_index(third)?,
        );
        let out = braid::collapse(&self.inner, t);
        Ok((
            self.inner.element(out.0).to_string(),
            self.inner.element(out.1).to_string(),
        ))
    }

    fn tuple_classes(&self, n: usize) -> PyResult<usize> {
        braid::tuple_classes(&self.inner, n, 1 << 22).map_err(value_err)
    }

    /// g -> g^residue for a profinite unit truncated at `modulus`.
    fn profinite_power(&self, modulus: u64, residue: i64, cycles: &str) -> PyResult<String> {
        let unit = profinite::ProfiniteUnit::new(modulus, residue).map_err(value_err)?;
        let g = self.element_index(cycles)?;
        let image =
            profinite::profinite_act_on_group(&unit, &self.inner, g).map_err(value_err)?;
        Ok(self.inner.element(image).to_string())
    }

    /// Coordinatewise Galois action on a tuple generating a cyclic subgroup.
    fn tuple_galois_action(
        &self,
        modulus: u64,
        residue: i64,
        tuple: Vec<String>,
    ) -> PyResult<Vec<String>> {
        let unit = profinite::ProfiniteUnit::new(modulus, residue).map_err(value_err)?;
        let indices = tuple
            .iter()
            .map(|s| self.element_index(s))
            .collect::<PyResult<Vec<_>>>()?;
        let out = profinite::tuple_galois_action(&unit, &self.inner, &indices)
            .map_err(value_err)?;
        Ok(out.into_iter().map(|i| self.inner.element(i).to_string()).collect())
    }

    fn __repr__(&self) -> String {
        format!("Group(order={}, degree={})", self.inner.order(), self.inner.degree())
    }
}

/// An exact character table with its Galois actions.
#[pyclass(name = "CharacterTable", frozen)]
struct PyCharacterTable {
    inner: chartab::CharacterTable,
}

#[pymethods]
impl PyCharacterTable {
    fn field_order(&self) -> u64 {
        self.inner.field_order()
    }

    fn degrees(&self) -> Vec<u64> {
        self.inner.degrees().to_vec()
    }

    fn row_labels(&self) -> Vec<String> {
        self.inner.row_labels().to_vec()
    }

    fn class_labels(&self) -> Vec<String> {
        self.inner.class_labels()
    }

    /// Entries as grammar strings without the order suffix.
    fn rows(&self) -> Vec<Vec<String>> {
        self.inner
            .rows()
            .iter()
            .map(|row| row.iter().map(|e| e.terms_string()).collect())
            .collect()
    }

    fn entry(&self, row: usize, class: usize) -> PyResult<PyCycNumber> {
        if row >= self.inner.rows().len() || class >= self.inner.class_count() {
            return Err(value_err("entry index out of range"));
        }
        Ok(PyCycNumber { inner: self.inner.entry(row, class).clone() })
    }

    /// Verification report as (check, passed, witness) triples.
    fn verify(&self) -> Vec<(String, bool, Option<String>)> {
        chartab::verify_table(&self.inner)
            .checks
            .into_iter()
            .map(|c| (c.name.to_string(), c.pass, c.witness))
            .collect()
    }

    fn spans_class_functions(&self) -> bool {
        chartab::class_function_space_check(&self.inner)
    }

    fn row_action(&self, ell: i64) -> PyResult<Vec<usize>> {
        galois::row_action(&self.inner, ell).map_err(value_err)
    }

    fn column_action(&self, ell: i64) -> PyResult<Vec<usize>> {
        galois::column_action(&self.inner, ell).map_err(value_err)
    }

    /// (compatible, row_perm, col_perm) for one ell.
    fn verify_compatibility(&self, ell: i64) -> PyResult<(bool, Vec<usize>, Vec<usize>)> {
        let rep = galois::verify_compatibility(&self.inner, ell).map_err(value_err)?;
        Ok((rep.compatible, rep.row_perm, rep.col_perm))
    }

    /// (row_orbits, col_orbits, row_field_degrees)
    fn galois_orbits(&self) -> (Vec<Vec<usize>>, Vec<Vec<usize>>, Vec<u64>) {
        let o = galois::galois_orbits(&self.inner);
        (o.row_orbits, o.col_orbits, o.row_field_degrees)
    }

    /// Row symmetries from degree-1 rows and column symmetries from
    /// central classes: ((row, perm) list, (class, perm) list).
    #[allow(clippy::type_complexity)]
    fn symmetries(&self) -> PyResult<(Vec<(usize, Vec<usize>)>, Vec<(usize, Vec<usize>)>)> {
        let s = chartab::table_symmetries(&self.inner).map_err(value_err)?;
        Ok((
            s.row_symmetries.into_iter().map(|r| (r.row, r.perm)).collect(),
            s.column_symmetries.into_iter().map(|c| (c.class, c.perm)).collect(),
        ))
    }

    fn __repr__(&self) -> String {
        format!(
            "CharacterTable(classes={}, field_order={})",
            self.inner.class_count(),
            self.inner.field_order()
        )
    }
}

/// The cyclic covering model x1^n x2 = 1.
#[pyclass(name = "CyclicCover", frozen)]
struct PyCyclicCover {
    inner: profinite::CyclicCover,
}

#[pymethods]
impl PyCyclicCover {
    #[new]
    fn new(n: u64) -> PyResult<Self> {
        Ok(Self { inner: profinite::CyclicCover::new(n).map_err(value_err)? })
    }

    fn fiber(&self) -> Vec<String> {
        self.inner.fiber().iter().map(|p| p.to_string()).collect()
    }

    /// Conjugates deck map k by sigma_ell; returns the deck index ell*k mod n.
    fn galois_on_deck(&self, ell: i64, k: u64) -> PyResult<u64> {
        match self.inner.galois_on_deck(ell, k).map_err(value_err)? {
            profinite::DeckTransformation::Cyclic { k, .. } => Ok(k),
            profinite::DeckTransformation::Dihedral { .. } => unreachable!("cyclic cover"),
        }
    }
}

/// The dihedral covering model f(x) = (2 - x^n - x^(-n))/4.
#[pyclass(name = "DihedralCover", frozen)]
struct PyDihedralCover {
    inner: profinite::DihedralCover,
}

#[pymethods]
impl PyDihedralCover {
    #[new]
    fn new(n: u64) -> PyResult<Self> {
        Ok(Self { inner: profinite::DihedralCover::new(n).map_err(value_err)? })
    }

    fn fiber(&self) -> Vec<String> {
        self.inner.fiber().iter().map(|p| p.to_string()).collect()
    }

    fn galois_on_deck(&self, ell: i64, eps: i8, k: u64) -> PyResult<(i8, u64)> {
        match self.inner.galois_on_deck(ell, eps, k).map_err(value_err)? {
            profinite::DeckTransformation::Dihedral { eps, k, .. } => Ok((eps, k)),
            profinite::DeckTransformation::Cyclic { .. } => unreachable!("dihedral cover"),
        }
    }

    /// Rows ((eps, k), covering_image, power_image, differs).
    #[allow(clippy::type_complexity)]
    fn compare_actions(
        &self,
        ell: i64,
    ) -> PyResult<Vec<((i8, u64), (i8, u64), (i8, u64), bool)>> {
        let rows = profinite::compare_actions_on_dihedral(&self.inner, ell).map_err(value_err)?;
        Ok(rows
            .into_iter()
            .map(|r| (r.deck, r.covering_image, r.power_image, r.differs))
            .collect())
    }
}

/// Number of continuous homomorphisms Zhat -> G (equals |G|).
#[pyfunction]
fn hom_count(group: &PyGroup) -> usize {
    profinite::hom_count(&group.inner).count
}

/// Runs one CLI command line (without the program name); returns
/// (exit_code, stdout, stderr).
#[pyfunction]
fn run_command(args: Vec<String>) -> (i32, String, String) {
    let mut argv = vec!["galtab".to_string()];
    argv.extend(args);
    let out = cli::run_command(argv);
    (out.code, out.stdout, out.stderr)
}

#[pymodule]
fn pygaltab(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCycNumber>()?;
    m.add_class::<PyGroup>()?;
    m.add_class::<PyCharacterTable>()?;
    m.add_class::<PyCyclicCover>()?;
    m.add_class::<PyDihedralCover>()?;
    m.add_function(wrap_pyfunction!(hom_count, m)?)?;
    m.add_function(wrap_pyfunction!(run_command, m)?)?;
    Ok(())
}
