use std::fmt;
use std::sync::Arc;

use super::PolyError;

/// The four variable banks used throughout: `x` (Schur variables), `y`
/// (family variables), `t` (power-determinant variables) and `z` (the
/// generating-function variable).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bank {
    X,
    Y,
    T,
    Z,
}

impl Bank {
    pub fn letter(self) -> char {
        match self {
            Bank::X => 'x',
            Bank::Y => 'y',
            Bank::T => 't',
            Bank::Z => 'z',
        }
    }
}

/// A single variable. `index == None` denotes an unindexed singleton such as
/// `z` or a repeated `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Var {
    pub bank: Bank,
    pub index: Option<u32>,
}

impl Var {
    pub fn indexed(bank: Bank, index: u32) -> Self {
        Var {
            bank,
            index: Some(index),
        }
    }

    pub fn single(bank: Bank) -> Self {
        Var { bank, index: None }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            Some(i) => write!(f, "{}{}", self.bank.letter(), i),
            None => write!(f, "{}", self.bank.letter()),
        }
    }
}

/// Ordered list of variables. The position of a variable in this list is its
/// slot in every exponent vector, and the order drives the graded-lex
/// monomial order (earlier variables are larger).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarContext {
    vars: Vec<Var>,
    names: Vec<String>,
}

impl VarContext {
    pub fn new(vars: Vec<Var>) -> Result<Arc<Self>, PolyError> {
        let names: Vec<String> = vars.iter().map(ToString::to_string).collect();
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(PolyError::DuplicateVariable(name.clone()));
            }
        }
        Ok(Arc::new(VarContext { vars, names }))
    }

    pub fn builder() -> ContextBuilder {
        ContextBuilder::default()
    }

    /// Context holding only `x1..xn`.
    pub fn x_only(n: usize) -> Arc<Self> {
        Self::builder().indexed(Bank::X, n).build()
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn name(&self, slot: usize) -> &str {
        &self.names[slot]
    }

    pub fn slot_of(&self, var: Var) -> Option<usize> {
        self.vars.iter().position(|&v| v == var)
    }

    pub fn slot_by_name(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Slots of every variable in `bank`, in context order.
    pub fn bank_slots(&self, bank: Bank) -> Vec<usize> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(_, v)| v.bank == bank)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn bank_len(&self, bank: Bank) -> usize {
        self.vars.iter().filter(|v| v.bank == bank).count()
    }

    /// Slot of the `k`-th (1-based) indexed variable of `bank`.
    pub fn indexed_slot(&self, bank: Bank, k: u32) -> Result<usize, PolyError> {
        self.slot_of(Var::indexed(bank, k))
            .ok_or_else(|| PolyError::UnknownVariable(Var::indexed(bank, k).to_string()))
    }

    pub fn single_slot(&self, bank: Bank) -> Result<usize, PolyError> {
        self.slot_of(Var::single(bank))
            .ok_or_else(|| PolyError::UnknownVariable(Var::single(bank).to_string()))
    }
}

pub(crate) fn same_context(a: &Arc<VarContext>, b: &Arc<VarContext>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

#[derive(Default)]
pub struct ContextBuilder {
    vars: Vec<Var>,
}

impl ContextBuilder {
    /// Appends `bank1..bankN`.
    pub fn indexed(mut self, bank: Bank, count: usize) -> Self {
        self.vars
            .extend((1..=count as u32).map(|i| Var::indexed(bank, i)));
        self
    }

    pub fn single(mut self, bank: Bank) -> Self {
        self.vars.push(Var::single(bank));
        self
    }

    /// Panics only if the same bank/index pair was added twice.
    pub fn build(self) -> Arc<VarContext> {
        VarContext::new(self.vars).expect("duplicate variable in context builder")
    }

    pub fn try_build(self) -> Result<Arc<VarContext>, PolyError> {
        VarContext::new(self.vars)
    }
}
