use std::collections::BTreeSet;
use std::fmt;

/// Binary connectives of the language.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinOp {
    /// Product `A ⊗ B`, written `A * B`.
    Tensor,
    /// Left residual `A ⊸ B`, written `A \ B`.
    Under,
    /// Right residual `A ⟜ B`, written `A / B`.
    Over,
    /// Conjunction, written `&`.
    And,
    /// Disjunction, written `|`.
    Or,
}

impl BinOp {
    pub fn symbol(self) -> &'static str {
        match self {
            BinOp::Tensor => "*",
            BinOp::Under => "\\",
            BinOp::Over => "/",
            BinOp::And => "&",
            BinOp::Or => "|",
        }
    }

    /// Binding strength, higher binds tighter.
    pub(crate) fn precedence(self) -> u8 {
        match self {
            BinOp::Tensor => 4,
            BinOp::Under | BinOp::Over => 3,
            BinOp::And => 2,
            BinOp::Or => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(String),
    One,
    Top,
    Bot,
    Not(Box<Formula>),
    Bin(BinOp, Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn var(name: impl Into<String>) -> Formula {
        Formula::Var(name.into())
    }

    pub fn not(a: Formula) -> Formula {
        Formula::Not(Box::new(a))
    }

    pub fn bin(op: BinOp, a: Formula, b: Formula) -> Formula {
        Formula::Bin(op, Box::new(a), Box::new(b))
    }

    pub fn tensor(a: Formula, b: Formula) -> Formula {
        Formula::bin(BinOp::Tensor, a, b)
    }

    pub fn under(a: Formula, b: Formula) -> Formula {
        Formula::bin(BinOp::Under, a, b)
    }

    pub fn over(a: Formula, b: Formula) -> Formula {
        Formula::bin(BinOp::Over, a, b)
    }

    pub fn and(a: Formula, b: Formula) -> Formula {
        Formula::bin(BinOp::And, a, b)
    }

    pub fn or(a: Formula, b: Formula) -> Formula {
        Formula::bin(BinOp::Or, a, b)
    }

    /// Number of symbols, counting every leaf, connective and negation once.
    pub fn size(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::One | Formula::Top | Formula::Bot => 1,
            Formula::Not(a) => a.size() + 1,
            Formula::Bin(_, a, b) => a.size() + b.size() + 1,
        }
    }

    /// All subtrees, including `self`.
    pub fn subformulas(&self) -> BTreeSet<Formula> {
        let mut out = BTreeSet::new();
        self.collect_subformulas(&mut out);
        out
    }

    pub(crate) fn collect_subformulas(&self, out: &mut BTreeSet<Formula>) {
        if out.contains(self) {
            return;
        }
        match self {
            Formula::Not(a) => a.collect_subformulas(out),
            Formula::Bin(_, a, b) => {
                a.collect_subformulas(out);
                b.collect_subformulas(out);
            }
            _ => {}
        }
        out.insert(self.clone());
    }

    pub fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Var(v) => {
                out.insert(v.clone());
            }
            Formula::Not(a) => a.collect_vars(out),
            Formula::Bin(_, a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            _ => {}
        }
    }

    fn is_atomic(&self) -> bool {
        !matches!(self, Formula::Bin(..))
    }

    fn fmt_operand(&self, parent: BinOp, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            // same-level nesting is always parenthesized so that the
            // grouping of nonassociative connectives stays visible
            Formula::Bin(op, ..) if op.precedence() <= parent.precedence() => {
                write!(f, "({self})")
            }
            _ => write!(f, "{self}"),
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Var(v) => write!(f, "{v}"),
            Formula::One => write!(f, "1"),
            Formula::Top => write!(f, "T"),
            Formula::Bot => write!(f, "F"),
            Formula::Not(a) if a.is_atomic() => write!(f, "~{a}"),
            Formula::Not(a) => write!(f, "~({a})"),
            Formula::Bin(op, a, b) => {
                a.fmt_operand(*op, f)?;
                write!(f, " {} ", op.symbol())?;
                b.fmt_operand(*op, f)
            }
        }
    }
}
