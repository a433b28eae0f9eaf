use std::collections::BTreeSet;
use std::fmt;

/// Name of the existence predicate.
pub const EXISTENCE: &str = "E!";

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Term {
    Var(String),
    Const(String),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Self {
        Term::Var(name.into())
    }

    pub fn constant(name: impl Into<String>) -> Self {
        Term::Const(name.into())
    }

    pub fn name(&self) -> &str {
        match self {
            Term::Var(n) | Term::Const(n) => n,
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnaryOp {
    /// `~`, swaps truth and falsity.
    Neg,
    /// `#` / `▲`, indicator of designated values.
    BdDelta,
    /// `@` / `Δ`, fuzzy only.
    BaazDelta,
    /// `!` / `¬`, sugar for `~#`.
    BivalentNeg,
    /// `%` / `∘`, sugar for the normality indicator.
    Circ,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BinaryOp {
    /// `&&` / `⊗`, fuzzy only.
    StrongAnd,
    /// `&` / `∧`
    WeakAnd,
    /// `||` / `⊕`, fuzzy only.
    StrongOr,
    /// `|` / `∨`
    WeakOr,
    /// `=>` / `→`, sugar.
    Implies,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Quantifier {
    /// `Pi x.`, ranges over the whole domain.
    OuterForall,
    /// `Sigma x.`, ranges over the whole domain.
    OuterExists,
    /// `forall x.`, sugar relativized to `E!`.
    InnerForall,
    /// `exists x.`, sugar relativized to `E!`.
    InnerExists,
}

impl UnaryOp {
    pub fn symbol(self) -> &'static str {
        match self {
            UnaryOp::Neg => "~",
            UnaryOp::BdDelta => "#",
            UnaryOp::BaazDelta => "@",
            UnaryOp::BivalentNeg => "!",
            UnaryOp::Circ => "%",
        }
    }

    pub fn is_sugar(self) -> bool {
        matches!(self, UnaryOp::BivalentNeg | UnaryOp::Circ)
    }

    pub fn is_fuzzy_only(self) -> bool {
        self == UnaryOp::BaazDelta
    }

    fn node_name(self) -> &'static str {
        match self {
            UnaryOp::Neg => "Neg",
            UnaryOp::BdDelta => "BdDelta",
            UnaryOp::BaazDelta => "BaazDelta",
            UnaryOp::BivalentNeg => "BivalentNeg",
            UnaryOp::Circ => "Circ",
        }
    }
}

impl BinaryOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinaryOp::StrongAnd => "&&",
            BinaryOp::WeakAnd => "&",
            BinaryOp::StrongOr => "||",
            BinaryOp::WeakOr => "|",
            BinaryOp::Implies => "=>",
        }
    }

    /// Binding strength; higher binds tighter.
    pub fn precedence(self) -> u8 {
        match self {
            BinaryOp::StrongAnd => 5,
            BinaryOp::WeakAnd => 4,
            BinaryOp::StrongOr => 3,
            BinaryOp::WeakOr => 2,
            BinaryOp::Implies => 1,
        }
    }

    pub fn is_right_assoc(self) -> bool {
        self == BinaryOp::Implies
    }

    pub fn is_sugar(self) -> bool {
        self == BinaryOp::Implies
    }

    pub fn is_fuzzy_only(self) -> bool {
        matches!(self, BinaryOp::StrongAnd | BinaryOp::StrongOr)
    }

    fn node_name(self) -> &'static str {
        match self {
            BinaryOp::StrongAnd => "StrongAnd",
            BinaryOp::WeakAnd => "WeakAnd",
            BinaryOp::StrongOr => "StrongOr",
            BinaryOp::WeakOr => "WeakOr",
            BinaryOp::Implies => "Implies",
        }
    }
}

impl Quantifier {
    pub fn keyword(self) -> &'static str {
        match self {
            Quantifier::OuterForall => "Pi",
            Quantifier::OuterExists => "Sigma",
            Quantifier::InnerForall => "forall",
            Quantifier::InnerExists => "exists",
        }
    }

    pub fn is_inner(self) -> bool {
        matches!(self, Quantifier::InnerForall | Quantifier::InnerExists)
    }

    fn node_name(self) -> &'static str {
        match self {
            Quantifier::OuterForall => "OuterForall",
            Quantifier::OuterExists => "OuterExists",
            Quantifier::InnerForall => "InnerForall",
            Quantifier::InnerExists => "InnerExists",
        }
    }
}

/// A formula of the first-order language, sugar included.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Atom { pred: String, args: Vec<Term> },
    Unary(UnaryOp, Box<Formula>),
    Binary(BinaryOp, Box<Formula>, Box<Formula>),
    Quant(Quantifier, String, Box<Formula>),
}

impl Formula {
    pub fn atom(pred: impl Into<String>, args: Vec<Term>) -> Self {
        Formula::Atom {
            pred: pred.into(),
            args,
        }
    }

    /// A zero-ary atom.
    pub fn prop(name: impl Into<String>) -> Self {
        Formula::atom(name, Vec::new())
    }

    pub fn exists_pred(term: Term) -> Self {
        Formula::atom(EXISTENCE, vec![term])
    }

    pub fn unary(op: UnaryOp, f: Formula) -> Self {
        Formula::Unary(op, Box::new(f))
    }

    pub fn binary(op: BinaryOp, l: Formula, r: Formula) -> Self {
        Formula::Binary(op, Box::new(l), Box::new(r))
    }

    pub fn quant(q: Quantifier, var: impl Into<String>, body: Formula) -> Self {
        Formula::Quant(q, var.into(), Box::new(body))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn neg(f: Formula) -> Self {
        Formula::unary(UnaryOp::Neg, f)
    }

    pub fn bd_delta(f: Formula) -> Self {
        Formula::unary(UnaryOp::BdDelta, f)
    }

    pub fn bivalent_neg(f: Formula) -> Self {
        Formula::unary(UnaryOp::BivalentNeg, f)
    }

    pub fn circ(f: Formula) -> Self {
        Formula::unary(UnaryOp::Circ, f)
    }

    pub fn and(l: Formula, r: Formula) -> Self {
        Formula::binary(BinaryOp::WeakAnd, l, r)
    }

    pub fn or(l: Formula, r: Formula) -> Self {
        Formula::binary(BinaryOp::WeakOr, l, r)
    }

    pub fn implies(l: Formula, r: Formula) -> Self {
        Formula::binary(BinaryOp::Implies, l, r)
    }

    /// Variables occurring free.
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        let mut bound = Vec::new();
        self.collect_free(&mut bound, &mut out);
        out
    }

    fn collect_free(&self, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
        match self {
            Formula::Atom { args, .. } => {
                for t in args {
                    if let Term::Var(v) = t {
                        if !bound.contains(v) {
                            out.insert(v.clone());
                        }
                    }
                }
            }
            Formula::Unary(_, f) => f.collect_free(bound, out),
            Formula::Binary(_, l, r) => {
                l.collect_free(bound, out);
                r.collect_free(bound, out);
            }
            Formula::Quant(_, v, body) => {
                bound.push(v.clone());
                body.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    pub fn is_sentence(&self) -> bool {
        self.free_vars().is_empty()
    }

    /// True if the formula uses no sugar nodes.
    pub fn is_primitive(&self) -> bool {
        self.all_nodes(&|f| match f {
            Formula::Atom { .. } => true,
            Formula::Unary(op, _) => !op.is_sugar(),
            Formula::Binary(op, _, _) => !op.is_sugar(),
            Formula::Quant(q, _, _) => !q.is_inner(),
        })
    }

    /// True if the formula uses `&&`, `||` or `@`.
    pub fn uses_fuzzy_only(&self) -> bool {
        !self.all_nodes(&|f| match f {
            Formula::Unary(op, _) => !op.is_fuzzy_only(),
            Formula::Binary(op, _, _) => !op.is_fuzzy_only(),
            _ => true,
        })
    }

    pub fn has_quantifier(&self) -> bool {
        !self.all_nodes(&|f| !matches!(f, Formula::Quant(..)))
    }

    pub fn has_inner_quantifier(&self) -> bool {
        !self.all_nodes(&|f| !matches!(f, Formula::Quant(q, _, _) if q.is_inner()))
    }

    fn all_nodes(&self, pred: &dyn Fn(&Formula) -> bool) -> bool {
        if !pred(self) {
            return false;
        }
        match self {
            Formula::Atom { .. } => true,
            Formula::Unary(_, f) | Formula::Quant(_, _, f) => f.all_nodes(pred),
            Formula::Binary(_, l, r) => l.all_nodes(pred) && r.all_nodes(pred),
        }
    }

    /// Zero-ary atoms in order of first occurrence.
    pub fn propositional_atoms(&self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        self.visit_atoms(&mut |pred, args| {
            if args.is_empty() && !out.iter().any(|p| p == pred) {
                out.push(pred.to_string());
            }
        });
        out
    }

    pub(crate) fn visit_atoms(&self, visit: &mut impl FnMut(&str, &[Term])) {
        match self {
            Formula::Atom { pred, args } => visit(pred, args),
            Formula::Unary(_, f) | Formula::Quant(_, _, f) => f.visit_atoms(visit),
            Formula::Binary(_, l, r) => {
                l.visit_atoms(visit);
                r.visit_atoms(visit);
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Atom { .. } => 0,
            Formula::Unary(_, f) | Formula::Quant(_, _, f) => 1 + f.depth(),
            Formula::Binary(_, l, r) => 1 + l.depth().max(r.depth()),
        }
    }

    /// Renders the tree structure, e.g. `WeakAnd(Atom(P, [c]), Neg(Atom(Q, [c])))`.
    pub fn ast_dump(&self) -> String {
        match self {
            Formula::Atom { pred, args } => {
                let args: Vec<String> = args
                    .iter()
                    .map(|t| match t {
                        Term::Var(v) => format!("Var({v})"),
                        Term::Const(c) => format!("Const({c})"),
                    })
                    .collect();
                format!("Atom({pred}, [{}])", args.join(", "))
            }
            Formula::Unary(op, f) => format!("{}({})", op.node_name(), f.ast_dump()),
            Formula::Binary(op, l, r) => {
                format!("{}({}, {})", op.node_name(), l.ast_dump(), r.ast_dump())
            }
            Formula::Quant(q, v, f) => format!("{}({v}, {})", q.node_name(), f.ast_dump()),
        }
    }
}
