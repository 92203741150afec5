//! Canonical antecedents: units removed, every semicolon cluster
//! right-nested with its members in sorted order. Also produces the
//! single-step associativity and exchange moves that reach the canonical
//! form, so that proofs can be stated on exact shapes.

use crate::syntax::{Bunch, Path, Sep, Sequent};

use super::Rule;

/// One structural move: `rule` applied at `position` of the previous
/// shape yields `result`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub rule: Rule,
    pub position: Path,
    pub result: Bunch,
}

pub fn canonical(b: &Bunch) -> Bunch {
    canon_normal(&b.normalize_units())
}

pub fn canonical_sequent(s: &Sequent) -> Sequent {
    Sequent::new(canonical(&s.antecedent), s.succedent.clone())
}

fn canon_normal(b: &Bunch) -> Bunch {
    match b {
        Bunch::Node(Sep::Comma, l, r) => Bunch::comma(canon_normal(l), canon_normal(r)),
        Bunch::Node(Sep::Semi, ..) => {
            let mut members = Vec::new();
            cluster_members(b, &mut members);
            let mut members: Vec<Bunch> = members.into_iter().map(canon_normal).collect();
            members.sort();
            right_nest(members)
        }
        other => other.clone(),
    }
}

/// The maximal semicolon subtree's non-semicolon members, left to right.
pub fn cluster_members<'a>(b: &'a Bunch, out: &mut Vec<&'a Bunch>) {
    match b {
        Bunch::Node(Sep::Semi, l, r) => {
            cluster_members(l, out);
            cluster_members(r, out);
        }
        other => out.push(other),
    }
}

/// `m1 ; (m2 ; (… ; mn))`; `δ` for no members.
pub fn right_nest(members: Vec<Bunch>) -> Bunch {
    let mut it = members.into_iter().rev();
    match it.next() {
        None => Bunch::Del,
        Some(last) => it.fold(last, |acc, m| Bunch::semi(m, acc)),
    }
}

fn at<'a>(b: &'a Bunch, path: &[u8]) -> &'a Bunch {
    b.get(path).expect("valid position")
}

fn with(p: &[u8], step: u8) -> Path {
    let mut q = p.to_vec();
    q.push(step);
    q
}

struct Recorder {
    cur: Bunch,
    steps: Vec<Step>,
}

impl Recorder {
    fn apply(&mut self, rule: Rule, path: &[u8], new_node: Bunch) {
        self.cur = self.cur.replace_at(path, new_node).expect("valid position");
        self.steps.push(Step { rule, position: path.to_vec(), result: self.cur.clone() });
    }

    /// `(a ; b) ; c` to `a ; (b ; c)`.
    fn rotate_right(&mut self, path: &[u8]) {
        let Bunch::Node(Sep::Semi, l, c) = at(&self.cur, path).clone() else { unreachable!() };
        let Bunch::Node(Sep::Semi, a, b) = *l else { unreachable!() };
        self.apply(Rule::AndAss, path, Bunch::semi(*a, Bunch::semi(*b, *c)));
    }

    /// `a ; (b ; c)` to `(a ; b) ; c`.
    fn rotate_left(&mut self, path: &[u8]) {
        let Bunch::Node(Sep::Semi, a, r) = at(&self.cur, path).clone() else { unreachable!() };
        let Bunch::Node(Sep::Semi, b, c) = *r else { unreachable!() };
        self.apply(Rule::AndAss, path, Bunch::semi(Bunch::semi(*a, *b), *c));
    }

    fn exchange(&mut self, path: &[u8]) {
        let Bunch::Node(Sep::Semi, a, b) = at(&self.cur, path).clone() else { unreachable!() };
        self.apply(Rule::AndEx, path, Bunch::semi(*b, *a));
    }

    fn canonize(&mut self, path: &[u8]) {
        match at(&self.cur, path) {
            Bunch::Node(Sep::Comma, ..) => {
                self.canonize(&with(path, 0));
                self.canonize(&with(path, 1));
            }
            Bunch::Node(Sep::Semi, ..) => self.canonize_cluster(path),
            _ => {}
        }
    }

    fn canonize_cluster(&mut self, path: &[u8]) {
        // right-nest
        let mut p = path.to_vec();
        let mut n = 1;
        loop {
            while let Bunch::Node(Sep::Semi, l, _) = at(&self.cur, &p) {
                if matches!(**l, Bunch::Node(Sep::Semi, ..)) {
                    self.rotate_right(&p);
                } else {
                    break;
                }
            }
            p.push(1);
            n += 1;
            if !matches!(at(&self.cur, &p), Bunch::Node(Sep::Semi, ..)) {
                break;
            }
        }
        let member_path = |i: usize| {
            let mut q = path.to_vec();
            q.extend(std::iter::repeat_n(1, i));
            if i + 1 < n {
                q.push(0);
            }
            q
        };
        for i in 0..n {
            self.canonize(&member_path(i));
        }
        // bubble sort by adjacent swaps
        for pass in 0..n {
            for i in 0..n - 1 - pass {
                if at(&self.cur, &member_path(i)) > at(&self.cur, &member_path(i + 1)) {
                    let mut q = path.to_vec();
                    q.extend(std::iter::repeat_n(1, i));
                    if i + 2 == n {
                        self.exchange(&q);
                    } else {
                        self.rotate_left(&q);
                        self.exchange(&with(&q, 0));
                        self.rotate_right(&q);
                    }
                }
            }
        }
    }
}

/// Moves from the unit-normal form of `b` to [`canonical`]`(b)`.
pub fn steps_to_canonical(b: &Bunch) -> Vec<Step> {
    let mut r = Recorder { cur: b.normalize_units(), steps: Vec::new() };
    r.canonize(&[]);
    r.steps
}

/// Moves from `from` to `to`, two bunches with the same canonical form.
/// The result lists the intermediate shapes after `from`, ending at the
/// unit-normal form of `to`.
pub fn ac_chain(from: &Bunch, to: &Bunch) -> Vec<Step> {
    let mut out = steps_to_canonical(from);
    let back = steps_to_canonical(to);
    let to_norm = to.normalize_units();
    // walking `back` in reverse: each step's inverse is the same rule at the
    // same position, landing on the shape before it
    for (i, s) in back.iter().enumerate().rev() {
        let before = if i == 0 { to_norm.clone() } else { back[i - 1].result.clone() };
        out.push(Step { rule: s.rule, position: s.position.clone(), result: before });
    }
    out
}
