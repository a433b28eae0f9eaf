use super::model::{Environment, Model};
use super::SemanticsError;
use crate::syntax::{desugar, BinaryOp, Formula, Mode, Quantifier, Signature, Term, UnaryOp};
use crate::values::{Degree, Logic, Truth};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    /// Position on the variable stack.
    Var(usize),
    /// Index into the model's constant denotations.
    Const(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Node {
    Atom { pred: usize, args: Vec<Slot> },
    Neg(Box<Node>),
    BdDelta(Box<Node>),
    BaazDelta(Box<Node>),
    WeakAnd(Box<Node>, Box<Node>),
    WeakOr(Box<Node>, Box<Node>),
    StrongAnd(Box<Node>, Box<Node>),
    StrongOr(Box<Node>, Box<Node>),
    Forall(Box<Node>),
    Exists(Box<Node>),
}

/// A desugared formula resolved against a signature, ready to be evaluated
/// in any model of that signature.
///
/// Free variables occupy the first stack slots in sorted order; each
/// quantifier pushes one more slot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompiledFormula {
    root: Node,
    free_vars: Vec<String>,
    logic: Logic,
}

impl CompiledFormula {
    pub fn compile(f: &Formula, sig: &Signature, logic: Logic) -> Result<Self, SemanticsError> {
        if logic == Logic::Bd4 && f.uses_fuzzy_only() {
            return Err(SemanticsError::FuzzyInFourValued);
        }
        let mode = Mode::new(logic, sig.has_existence());
        let primitive = desugar(f, mode)?;
        let free_vars: Vec<String> = primitive.free_vars().into_iter().collect();
        let pred_names: Vec<(&str, usize)> = sig.predicates().collect();
        let const_names: Vec<&str> = sig.constants().collect();
        let mut scope = free_vars.clone();
        let root = lower(&primitive, &pred_names, &const_names, &mut scope)?;
        Ok(Self {
            root,
            free_vars,
            logic,
        })
    }

    pub fn free_vars(&self) -> &[String] {
        &self.free_vars
    }

    pub fn logic(&self) -> Logic {
        self.logic
    }

    /// Evaluates with the free variables bound to `assignment`, which is
    /// aligned with [`CompiledFormula::free_vars`].
    ///
    /// The model must have the signature the formula was compiled against.
    pub fn eval_slots<D: Degree>(&self, model: &Model<D>, assignment: &[usize]) -> Truth<D> {
        debug_assert_eq!(assignment.len(), self.free_vars.len());
        let mut stack = assignment.to_vec();
        eval_node(&self.root, model, &mut stack)
    }

    pub fn eval<D: Degree>(
        &self,
        model: &Model<D>,
        env: &Environment,
    ) -> Result<Truth<D>, SemanticsError> {
        self.check_logic::<D>()?;
        let slots = self.assignment(model, env)?;
        Ok(self.eval_slots(model, &slots))
    }

    pub(crate) fn check_logic<D: Degree>(&self) -> Result<(), SemanticsError> {
        if D::LOGIC != self.logic {
            return Err(SemanticsError::LogicMismatch {
                formula: self.logic,
                model: D::LOGIC,
            });
        }
        Ok(())
    }

    fn assignment<D: Degree>(
        &self,
        model: &Model<D>,
        env: &Environment,
    ) -> Result<Vec<usize>, SemanticsError> {
        self.free_vars
            .iter()
            .map(|v| match env.get(v) {
                Some(e) if e < model.size() => Ok(e),
                Some(e) => Err(SemanticsError::UnknownElement(format!("#{e}"))),
                None => Err(SemanticsError::UnassignedVariable(v.clone())),
            })
            .collect()
    }

    /// Number of environments over the free variables in a domain of size `n`.
    pub fn environment_count(&self, n: usize) -> usize {
        n.pow(self.free_vars.len() as u32)
    }

    /// The `index`-th assignment of the free variables, in lexicographic order.
    pub fn assignment_at(&self, index: usize, n: usize) -> Vec<usize> {
        super::model::tuple_at(index, self.free_vars.len(), n)
    }

    pub fn environment_from_slots(&self, slots: &[usize]) -> Environment {
        let mut env = Environment::new();
        for (v, &e) in self.free_vars.iter().zip(slots) {
            env.insert(v, e);
        }
        env
    }
}

fn lower(
    f: &Formula,
    preds: &[(&str, usize)],
    consts: &[&str],
    scope: &mut Vec<String>,
) -> Result<Node, SemanticsError> {
    let rec = |g: &Formula, scope: &mut Vec<String>| lower(g, preds, consts, scope).map(Box::new);
    Ok(match f {
        Formula::Atom { pred, args } => {
            let p = preds
                .iter()
                .position(|(name, _)| name == pred)
                .ok_or_else(|| SemanticsError::UnknownPredicate(pred.clone()))?;
            if preds[p].1 != args.len() {
                return Err(SemanticsError::ArityMismatch {
                    name: pred.clone(),
                    expected: preds[p].1,
                    found: args.len(),
                });
            }
            let args = args
                .iter()
                .map(|t| match t {
                    Term::Var(v) => scope
                        .iter()
                        .rposition(|s| s == v)
                        .map(Slot::Var)
                        .ok_or_else(|| SemanticsError::UnassignedVariable(v.clone())),
                    Term::Const(c) => consts
                        .iter()
                        .position(|k| k == c)
                        .map(Slot::Const)
                        .ok_or_else(|| SemanticsError::UnknownConstant(c.clone())),
                })
                .collect::<Result<_, _>>()?;
            Node::Atom { pred: p, args }
        }
        Formula::Unary(op, g) => {
            let inner = rec(g, scope)?;
            match op {
                UnaryOp::Neg => Node::Neg(inner),
                UnaryOp::BdDelta => Node::BdDelta(inner),
                UnaryOp::BaazDelta => Node::BaazDelta(inner),
                UnaryOp::BivalentNeg | UnaryOp::Circ => unreachable!("desugared"),
            }
        }
        Formula::Binary(op, l, r) => {
            let l = rec(l, scope)?;
            let r = rec(r, scope)?;
            match op {
                BinaryOp::WeakAnd => Node::WeakAnd(l, r),
                BinaryOp::WeakOr => Node::WeakOr(l, r),
                BinaryOp::StrongAnd => Node::StrongAnd(l, r),
                BinaryOp::StrongOr => Node::StrongOr(l, r),
                BinaryOp::Implies => unreachable!("desugared"),
            }
        }
        Formula::Quant(q, v, body) => {
            scope.push(v.clone());
            let body = rec(body, scope);
            scope.pop();
            match q {
                Quantifier::OuterForall => Node::Forall(body?),
                Quantifier::OuterExists => Node::Exists(body?),
                _ => unreachable!("desugared"),
            }
        }
    })
}

fn eval_node<D: Degree>(node: &Node, m: &Model<D>, stack: &mut Vec<usize>) -> Truth<D> {
    match node {
        Node::Atom { pred, args } => {
            let n = m.size();
            let consts = m.constant_values();
            let idx = args.iter().fold(0, |acc, s| {
                let e = match *s {
                    Slot::Var(i) => stack[i],
                    Slot::Const(c) => consts[c],
                };
                acc * n + e
            });
            m.lookup(*pred, idx)
        }
        Node::Neg(f) => eval_node(f, m, stack).bd_neg(),
        Node::BdDelta(f) => eval_node(f, m, stack).bd_delta(),
        Node::BaazDelta(f) => eval_node(f, m, stack).baaz_delta(),
        Node::WeakAnd(l, r) => eval_node(l, m, stack).weak_and(eval_node(r, m, stack)),
        Node::WeakOr(l, r) => eval_node(l, m, stack).weak_or(eval_node(r, m, stack)),
        Node::StrongAnd(l, r) => eval_node(l, m, stack).strong_and(eval_node(r, m, stack)),
        Node::StrongOr(l, r) => eval_node(l, m, stack).strong_or(eval_node(r, m, stack)),
        // inf of positives / sup of negatives is the iterated lattice meet
        Node::Forall(body) => fold_domain(body, m, stack, Truth::weak_and),
        Node::Exists(body) => fold_domain(body, m, stack, Truth::weak_or),
    }
}

fn fold_domain<D: Degree>(
    body: &Node,
    m: &Model<D>,
    stack: &mut Vec<usize>,
    combine: fn(Truth<D>, Truth<D>) -> Truth<D>,
) -> Truth<D> {
    stack.push(0);
    let top = stack.len() - 1;
    let mut acc = eval_node(body, m, stack);
    for a in 1..m.size() {
        stack[top] = a;
        acc = combine(acc, eval_node(body, m, stack));
    }
    stack.pop();
    acc
}

/// Evaluates `f` in `model` under `env`. Sugar is expanded according to the
/// model's logic; inner quantifiers require `E!` in the model's signature.
pub fn eval<D: Degree>(
    model: &Model<D>,
    env: &Environment,
    f: &Formula,
) -> Result<Truth<D>, SemanticsError> {
    CompiledFormula::compile(f, model.signature(), D::LOGIC)?.eval(model, env)
}

/// The value of `f` under every assignment of its free variables, in
/// lexicographic order of assignments. A sentence yields one entry.
pub fn eval_all_environments<D: Degree>(
    model: &Model<D>,
    f: &Formula,
) -> Result<Vec<(Environment, Truth<D>)>, SemanticsError> {
    let c = CompiledFormula::compile(f, model.signature(), D::LOGIC)?;
    let n = model.size();
    Ok((0..c.environment_count(n))
        .map(|i| {
            let slots = c.assignment_at(i, n);
            (
                c.environment_from_slots(&slots),
                c.eval_slots(model, &slots),
            )
        })
        .collect())
}
