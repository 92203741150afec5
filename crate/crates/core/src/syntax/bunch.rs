use std::collections::BTreeSet;
use std::fmt;

use super::formula::Formula;

/// Structural connective of a bunch node.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sep {
    /// `,`: the structural counterpart of `⊗`, unit `ε`.
    Comma,
    /// `;`: the structural counterpart of `∧`, unit `δ`.
    Semi,
}

impl Sep {
    pub fn symbol(self) -> &'static str {
        match self {
            Sep::Comma => ",",
            Sep::Semi => ";",
        }
    }
}

/// Antecedent structure: a binary tree over formulas and the two units.
///
/// The tree is kept exactly as written. Identification modulo the unit
/// laws `(ε, X) = X = (X, ε)` and `(δ; X) = X = (X; δ)` is done explicitly
/// with [`Bunch::normalize_units`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Bunch {
    Leaf(Formula),
    Eps,
    Del,
    Node(Sep, Box<Bunch>, Box<Bunch>),
}

/// Address of a sub-bunch: the sequence of child indices (0 = left,
/// 1 = right) from the root.
pub type Path = Vec<u8>;

impl Bunch {
    pub fn leaf(f: Formula) -> Bunch {
        Bunch::Leaf(f)
    }

    pub fn comma(a: Bunch, b: Bunch) -> Bunch {
        Bunch::Node(Sep::Comma, Box::new(a), Box::new(b))
    }

    pub fn semi(a: Bunch, b: Bunch) -> Bunch {
        Bunch::Node(Sep::Semi, Box::new(a), Box::new(b))
    }

    pub fn node(sep: Sep, a: Bunch, b: Bunch) -> Bunch {
        Bunch::Node(sep, Box::new(a), Box::new(b))
    }

    pub fn as_formula(&self) -> Option<&Formula> {
        match self {
            Bunch::Leaf(f) => Some(f),
            _ => None,
        }
    }

    /// Number of tree nodes (leaves and structural nodes).
    pub fn node_count(&self) -> usize {
        match self {
            Bunch::Node(_, a, b) => 1 + a.node_count() + b.node_count(),
            _ => 1,
        }
    }

    /// Replace every `,` by `⊗`, every `;` by `∧`, `ε` by `1` and `δ` by `⊤`.
    pub fn to_formula(&self) -> Formula {
        match self {
            Bunch::Leaf(f) => f.clone(),
            Bunch::Eps => Formula::One,
            Bunch::Del => Formula::Top,
            Bunch::Node(Sep::Comma, a, b) => Formula::tensor(a.to_formula(), b.to_formula()),
            Bunch::Node(Sep::Semi, a, b) => Formula::and(a.to_formula(), b.to_formula()),
        }
    }

    /// Apply the unit laws bottom-up so that no `ε` sits under a comma
    /// and no `δ` under a semicolon.
    pub fn normalize_units(&self) -> Bunch {
        match self {
            Bunch::Node(sep, a, b) => {
                let a = a.normalize_units();
                let b = b.normalize_units();
                let unit = match sep {
                    Sep::Comma => Bunch::Eps,
                    Sep::Semi => Bunch::Del,
                };
                if a == unit {
                    b
                } else if b == unit {
                    a
                } else {
                    Bunch::node(*sep, a, b)
                }
            }
            other => other.clone(),
        }
    }

    pub fn is_unit_normal(&self) -> bool {
        match self {
            Bunch::Node(Sep::Comma, a, b) => {
                **a != Bunch::Eps && **b != Bunch::Eps && a.is_unit_normal() && b.is_unit_normal()
            }
            Bunch::Node(Sep::Semi, a, b) => {
                **a != Bunch::Del && **b != Bunch::Del && a.is_unit_normal() && b.is_unit_normal()
            }
            _ => true,
        }
    }

    pub fn get(&self, path: &[u8]) -> Option<&Bunch> {
        let mut cur = self;
        for &step in path {
            match cur {
                Bunch::Node(_, a, b) => cur = if step == 0 { a } else { b },
                _ => return None,
            }
        }
        Some(cur)
    }

    /// Split into the context around `path` and the sub-bunch at `path`.
    pub fn split_at(&self, path: &[u8]) -> Option<(Context, Bunch)> {
        let mut frames = Vec::with_capacity(path.len());
        let mut cur = self;
        for &step in path {
            match cur {
                Bunch::Node(sep, a, b) => {
                    if step == 0 {
                        frames.push(Frame::Left { sep: *sep, right: (**b).clone() });
                        cur = a;
                    } else {
                        frames.push(Frame::Right { sep: *sep, left: (**a).clone() });
                        cur = b;
                    }
                }
                _ => return None,
            }
        }
        Some((Context { frames }, cur.clone()))
    }

    /// Replace the sub-bunch at `path` by `with`.
    pub fn replace_at(&self, path: &[u8], with: Bunch) -> Option<Bunch> {
        let (ctx, _) = self.split_at(path)?;
        Some(ctx.fill(with))
    }

    /// Pre-order enumeration of all positions.
    pub fn positions(&self) -> Vec<Path> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        self.collect_positions(&mut path, &mut out);
        out
    }

    fn collect_positions(&self, path: &mut Path, out: &mut Vec<Path>) {
        out.push(path.clone());
        if let Bunch::Node(_, a, b) = self {
            path.push(0);
            a.collect_positions(path, out);
            path.pop();
            path.push(1);
            b.collect_positions(path, out);
            path.pop();
        }
    }

    pub fn collect_formulas<'a>(&'a self, out: &mut Vec<&'a Formula>) {
        match self {
            Bunch::Leaf(f) => out.push(f),
            Bunch::Node(_, a, b) => {
                a.collect_formulas(out);
                b.collect_formulas(out);
            }
            _ => {}
        }
    }

    pub fn collect_vars(&self, out: &mut BTreeSet<String>) {
        let mut fs = Vec::new();
        self.collect_formulas(&mut fs);
        for f in fs {
            f.collect_vars(out);
        }
    }
}

impl fmt::Display for Bunch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bunch::Leaf(a) => write!(f, "{a}"),
            Bunch::Eps => write!(f, "eps"),
            Bunch::Del => write!(f, "del"),
            Bunch::Node(sep, a, b) => write!(f, "({a} {} {b})", sep.symbol()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Frame {
    Left { sep: Sep, right: Bunch },
    Right { sep: Sep, left: Bunch },
}

/// A bunch with a single hole, stored as the chain of nodes from the
/// root down to the hole.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Context {
    frames: Vec<Frame>,
}

impl Context {
    /// The identity context `_`.
    pub fn hole() -> Context {
        Context::default()
    }

    /// Extend the context by one level: the hole moves into the given
    /// child of a new `sep` node whose other child is `sibling`.
    pub fn descend(mut self, sep: Sep, hole_on_left: bool, sibling: Bunch) -> Context {
        self.frames.push(if hole_on_left {
            Frame::Left { sep, right: sibling }
        } else {
            Frame::Right { sep, left: sibling }
        });
        self
    }

    pub fn path(&self) -> Path {
        self.frames
            .iter()
            .map(|fr| match fr {
                Frame::Left { .. } => 0,
                Frame::Right { .. } => 1,
            })
            .collect()
    }

    /// `Γ[Δ]`: plug `d` into the hole.
    pub fn fill(&self, d: Bunch) -> Bunch {
        self.frames.iter().rev().fold(d, |acc, fr| match fr {
            Frame::Left { sep, right } => Bunch::node(*sep, acc, right.clone()),
            Frame::Right { sep, left } => Bunch::node(*sep, left.clone(), acc),
        })
    }
}

impl fmt::Display for Context {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // render with a placeholder leaf, then swap it for `_`
        let marker = Bunch::Leaf(Formula::Var("\u{0}".into()));
        let text = self.fill(marker).to_string();
        write!(f, "{}", text.replace('\u{0}', "_"))
    }
}

/// `substitute(Γ[_], Δ) = Γ[Δ]`.
pub fn substitute(c: &Context, d: Bunch) -> Bunch {
    c.fill(d)
}
