use std::collections::BTreeMap;

use super::SemanticsError;
use crate::syntax::{Signature, EXISTENCE};
use crate::values::{Degree, Logic, Truth};

/// The interpretation of one predicate as a dense table over `domain^arity`,
/// indexed lexicographically (first argument most significant).
#[derive(Debug, Clone, PartialEq)]
pub struct PredicateTable<D> {
    name: String,
    arity: usize,
    values: Vec<Truth<D>>,
}

impl<D: Degree> PredicateTable<D> {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn values(&self) -> &[Truth<D>] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [Truth<D>] {
        &mut self.values
    }
}

/// A finite model: domain, constant denotations, and predicate tables.
///
/// Domain elements are referred to by their position; the order of
/// `domain` is the canonical order used by every fold.
#[derive(Debug, Clone, PartialEq)]
pub struct Model<D> {
    domain: Vec<String>,
    signature: Signature,
    constant_names: Vec<String>,
    constants: Vec<usize>,
    predicates: Vec<PredicateTable<D>>,
}

pub type FourModel = Model<bool>;
pub type FuzzyModel = Model<f64>;

/// Index of `tuple` in a table over a domain of size `n`.
#[inline]
pub fn tuple_index(tuple: &[usize], n: usize) -> usize {
    tuple.iter().fold(0, |acc, &e| acc * n + e)
}

/// The tuple stored at `index` in a table of the given arity.
pub fn tuple_at(mut index: usize, arity: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; arity];
    for slot in out.iter_mut().rev() {
        *slot = index % n;
        index /= n;
    }
    out
}

impl<D: Degree> Model<D> {
    /// A model over `domain` where every constant denotes the first element
    /// and every predicate holds `fill` everywhere.
    pub fn new(
        domain: Vec<String>,
        signature: Signature,
        fill: Truth<D>,
    ) -> Result<Self, SemanticsError> {
        if domain.is_empty() {
            return Err(SemanticsError::EmptyDomain);
        }
        for (i, e) in domain.iter().enumerate() {
            if domain[..i].contains(e) {
                return Err(SemanticsError::DuplicateElement(e.clone()));
            }
        }
        let n = domain.len();
        let constant_names: Vec<String> = signature.constants().map(str::to_string).collect();
        let constants = vec![0; constant_names.len()];
        let mut predicates = Vec::new();
        for (name, arity) in signature.predicates() {
            let size = n
                .checked_pow(arity as u32)
                .ok_or(SemanticsError::TooLarge(name.to_string()))?;
            predicates.push(PredicateTable {
                name: name.to_string(),
                arity,
                values: vec![fill; size],
            });
        }
        Ok(Self {
            domain,
            signature,
            constant_names,
            constants,
            predicates,
        })
    }

    /// A model over `e1, ..., en`.
    pub fn with_size(
        n: usize,
        signature: Signature,
        fill: Truth<D>,
    ) -> Result<Self, SemanticsError> {
        Self::new((1..=n).map(|i| format!("e{i}")).collect(), signature, fill)
    }

    pub fn logic(&self) -> Logic {
        D::LOGIC
    }

    pub fn domain(&self) -> &[String] {
        &self.domain
    }

    pub fn size(&self) -> usize {
        self.domain.len()
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn element(&self, name: &str) -> Option<usize> {
        self.domain.iter().position(|e| e == name)
    }

    fn element_checked(&self, name: &str) -> Result<usize, SemanticsError> {
        self.element(name)
            .ok_or_else(|| SemanticsError::UnknownElement(name.to_string()))
    }

    pub fn constant_index(&self, name: &str) -> Option<usize> {
        self.constant_names.iter().position(|c| c == name)
    }

    pub fn predicate_index(&self, name: &str) -> Option<usize> {
        self.predicates.iter().position(|p| p.name == name)
    }

    pub fn constant_names(&self) -> &[String] {
        &self.constant_names
    }

    /// Denotations, aligned with [`Model::constant_names`].
    pub fn constant_values(&self) -> &[usize] {
        &self.constants
    }

    pub fn constant_values_mut(&mut self) -> &mut [usize] {
        &mut self.constants
    }

    pub fn denotation(&self, constant: &str) -> Option<usize> {
        self.constant_index(constant).map(|i| self.constants[i])
    }

    pub fn set_constant(&mut self, constant: &str, element: &str) -> Result<(), SemanticsError> {
        let c = self
            .constant_index(constant)
            .ok_or_else(|| SemanticsError::UnknownConstant(constant.to_string()))?;
        self.constants[c] = self.element_checked(element)?;
        Ok(())
    }

    pub fn tables(&self) -> &[PredicateTable<D>] {
        &self.predicates
    }

    pub fn tables_mut(&mut self) -> &mut [PredicateTable<D>] {
        &mut self.predicates
    }

    pub fn table(&self, pred: &str) -> Option<&PredicateTable<D>> {
        self.predicates.iter().find(|p| p.name == pred)
    }

    #[inline]
    pub(crate) fn lookup(&self, pred: usize, tuple_idx: usize) -> Truth<D> {
        self.predicates[pred].values[tuple_idx]
    }

    /// Value of `pred` at a tuple of element indices.
    pub fn value(&self, pred: &str, tuple: &[usize]) -> Result<Truth<D>, SemanticsError> {
        let t = self
            .table(pred)
            .ok_or_else(|| SemanticsError::UnknownPredicate(pred.to_string()))?;
        self.check_tuple(t, tuple)?;
        Ok(t.values[tuple_index(tuple, self.size())])
    }

    fn check_tuple(&self, t: &PredicateTable<D>, tuple: &[usize]) -> Result<(), SemanticsError> {
        if tuple.len() != t.arity {
            return Err(SemanticsError::ArityMismatch {
                name: t.name.clone(),
                expected: t.arity,
                found: tuple.len(),
            });
        }
        if let Some(&bad) = tuple.iter().find(|&&e| e >= self.size()) {
            return Err(SemanticsError::UnknownElement(format!("#{bad}")));
        }
        Ok(())
    }

    pub fn set_value(
        &mut self,
        pred: &str,
        tuple: &[usize],
        value: Truth<D>,
    ) -> Result<(), SemanticsError> {
        let p = self
            .predicate_index(pred)
            .ok_or_else(|| SemanticsError::UnknownPredicate(pred.to_string()))?;
        self.check_tuple(&self.predicates[p], tuple)?;
        let idx = tuple_index(tuple, self.size());
        self.predicates[p].values[idx] = value;
        Ok(())
    }

    /// [`Model::set_value`] with element names.
    pub fn set(
        &mut self,
        pred: &str,
        tuple: &[&str],
        value: Truth<D>,
    ) -> Result<(), SemanticsError> {
        let idx: Vec<usize> = tuple
            .iter()
            .map(|e| self.element_checked(e))
            .collect::<Result<_, _>>()?;
        self.set_value(pred, &idx, value)
    }

    pub fn has_existence(&self) -> bool {
        self.signature.has_existence()
    }

    /// The inner domain: elements whose `E!` value has positive component 1.
    pub fn inner_domain(&self) -> Result<Vec<usize>, SemanticsError> {
        let t = self
            .table(EXISTENCE)
            .ok_or(SemanticsError::NoExistencePredicate)?;
        Ok((0..self.size())
            .filter(|&a| t.values[a].pos.is_full())
            .collect())
    }

    pub fn element_names(&self, tuple: &[usize]) -> Vec<String> {
        tuple.iter().map(|&e| self.domain[e].clone()).collect()
    }

    /// Applies `f` to every value, producing a model over another carrier.
    pub fn map_values<E: Degree>(&self, f: impl Fn(Truth<D>) -> Truth<E>) -> Model<E> {
        Model {
            domain: self.domain.clone(),
            signature: self.signature.clone(),
            constant_names: self.constant_names.clone(),
            constants: self.constants.clone(),
            predicates: self
                .predicates
                .iter()
                .map(|t| PredicateTable {
                    name: t.name.clone(),
                    arity: t.arity,
                    values: t.values.iter().map(|&v| f(v)).collect(),
                })
                .collect(),
        }
    }
}

/// An evaluation of variables: variable name to element index.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Environment(BTreeMap<String, usize>);

impl Environment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn bind(mut self, var: &str, element: usize) -> Self {
        self.0.insert(var.to_string(), element);
        self
    }

    pub fn insert(&mut self, var: &str, element: usize) {
        self.0.insert(var.to_string(), element);
    }

    pub fn get(&self, var: &str) -> Option<usize> {
        self.0.get(var).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, usize)> + '_ {
        self.0.iter().map(|(k, &v)| (k.as_str(), v))
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Builds an environment from element names, checking each against `model`.
    pub fn from_names<D: Degree>(
        model: &Model<D>,
        names: &BTreeMap<String, String>,
    ) -> Result<Self, SemanticsError> {
        let mut env = Environment::new();
        for (var, el) in names {
            env.insert(var, model.element_checked(el)?);
        }
        Ok(env)
    }

    pub fn to_names<D: Degree>(&self, model: &Model<D>) -> BTreeMap<String, String> {
        self.0
            .iter()
            .map(|(k, &v)| (k.clone(), model.domain()[v].clone()))
            .collect()
    }
}
