use super::SearchError;
use crate::grid::GridDegree;
use crate::semantics::Model;
use crate::syntax::{Signature, EXISTENCE};
use crate::values::{Degree, FourValue, GridValue, Truth};

#[derive(Debug, Clone, Copy)]
enum Slot {
    Constant(usize),
    Cell {
        table: usize,
        tuple: usize,
        bivalent: bool,
    },
}

/// All models of one signature over the domain `e1, ..., en`, in canonical
/// order.
///
/// A model is a point of a mixed-radix odometer whose digits are, in order,
/// the denotation of each constant (constants sorted by name) and then the
/// value of every predicate tuple (predicates sorted by name, tuples in
/// lexicographic order). The last digit varies fastest. Predicate values run
/// through the carrier's value list; in free-logic mode `E!` only takes
/// `T` and then `F`.
#[derive(Debug, Clone)]
pub struct ModelSpace<D: Degree> {
    signature: Signature,
    size: usize,
    values: Vec<Truth<D>>,
    bivalent: [Truth<D>; 2],
    slots: Vec<Slot>,
    count: Option<u128>,
}

impl ModelSpace<bool> {
    /// Four-valued models; values run `T, B, N, F`.
    pub fn four_valued(
        sig: &Signature,
        size: usize,
        free_logic: bool,
    ) -> Result<Self, SearchError> {
        Self::new(
            sig,
            size,
            FourValue::all().to_vec(),
            [FourValue::T, FourValue::F],
            free_logic,
        )
    }
}

impl ModelSpace<GridDegree> {
    /// Models with values on the grid of denominator `g`, positive degree
    /// descending and then negative degree ascending (at `g = 1` this is
    /// `T, B, N, F`).
    pub fn on_grid(
        sig: &Signature,
        size: usize,
        g: u32,
        free_logic: bool,
    ) -> Result<Self, SearchError> {
        if g == 0 {
            return Err(SearchError::InvalidBound("grid denominator"));
        }
        let t = GridValue::from_corner(crate::values::Corner::T, g);
        let f = GridValue::from_corner(crate::values::Corner::F, g);
        Self::new(sig, size, GridValue::all_on_grid(g), [t, f], free_logic)
    }
}

impl<D: Degree> ModelSpace<D> {
    fn new(
        sig: &Signature,
        size: usize,
        values: Vec<Truth<D>>,
        bivalent: [Truth<D>; 2],
        free_logic: bool,
    ) -> Result<Self, SearchError> {
        if size == 0 {
            return Err(SearchError::InvalidBound("domain size"));
        }
        let mut slots: Vec<Slot> = (0..sig.constants().count()).map(Slot::Constant).collect();
        let mut count = Some(1u128);
        let mul = |c: &mut Option<u128>, r: usize| *c = c.and_then(|c| c.checked_mul(r as u128));
        for _ in 0..slots.len() {
            mul(&mut count, size);
        }
        for (table, (name, arity)) in sig.predicates().enumerate() {
            let bivalent = free_logic && name == EXISTENCE;
            let radix = if bivalent { 2 } else { values.len() };
            let tuples = u32::try_from(arity).ok().and_then(|a| size.checked_pow(a));
            match tuples {
                Some(tuples) if count.is_some() => {
                    for tuple in 0..tuples {
                        mul(&mut count, radix);
                        if count.is_none() {
                            break;
                        }
                        slots.push(Slot::Cell {
                            table,
                            tuple,
                            bivalent,
                        });
                    }
                }
                _ => count = None,
            }
        }
        Ok(Self {
            signature: sig.clone(),
            size,
            values,
            bivalent,
            slots,
            count,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    /// Number of models, or `None` if it exceeds `u128`.
    pub fn count(&self) -> Option<u128> {
        self.count
    }

    /// Number of models as a `u64`, failing if it exceeds `budget`.
    pub fn checked_count(&self, budget: u64) -> Result<u64, SearchError> {
        match self.count {
            Some(c) if c <= budget as u128 => Ok(c as u64),
            required => Err(SearchError::Budget { required, budget }),
        }
    }

    /// A model of the right shape, to be filled by [`ModelSpace::fill`].
    pub fn blank(&self) -> Model<D> {
        Model::with_size(self.size, self.signature.clone(), self.bivalent[1])
            .expect("sizes were checked when the space was built")
    }

    /// Overwrites `m` (from [`ModelSpace::blank`]) with the `index`-th model.
    pub fn fill(&self, mut index: u64, m: &mut Model<D>) {
        let n = self.size as u64;
        let k = self.values.len() as u64;
        for slot in self.slots.iter().rev() {
            match *slot {
                Slot::Constant(c) => {
                    m.constant_values_mut()[c] = (index % n) as usize;
                    index /= n;
                }
                Slot::Cell {
                    table,
                    tuple,
                    bivalent,
                } => {
                    let v = if bivalent {
                        let v = self.bivalent[(index % 2) as usize];
                        index /= 2;
                        v
                    } else {
                        let v = self.values[(index % k) as usize];
                        index /= k;
                        v
                    };
                    m.tables_mut()[table].values_mut()[tuple] = v;
                }
            }
        }
    }

    pub fn model_at(&self, index: u64) -> Model<D> {
        let mut m = self.blank();
        self.fill(index, &mut m);
        m
    }

    /// Iterates the whole space, refusing if it exceeds `budget`.
    pub fn iter(&self, budget: u64) -> Result<impl Iterator<Item = Model<D>> + '_, SearchError> {
        let count = self.checked_count(budget)?;
        Ok((0..count).map(|i| self.model_at(i)))
    }
}

/// Four-valued models of `sig` over `n` elements, in canonical order.
pub fn enumerate_models(
    sig: &Signature,
    n: usize,
    free_logic: bool,
    budget: u64,
) -> Result<Vec<Model<bool>>, SearchError> {
    let space = ModelSpace::four_valued(sig, n, free_logic)?;
    let models = space.iter(budget)?.collect();
    Ok(models)
}
