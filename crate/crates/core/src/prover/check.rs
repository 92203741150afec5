use thiserror::Error;

use crate::syntax::{BinOp, Bunch, Formula, Sep, Sequent};

use super::{ProofTree, Rule};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("invalid {rule} step concluding `{sequent}`: {reason}")]
pub struct ProofError {
    pub sequent: String,
    pub rule: Rule,
    pub reason: String,
}

/// Verify every node of `tree` as an instance of its rule, comparing
/// antecedents modulo the unit laws. Assumption leaves must match a
/// member of `assumptions`.
pub fn check_proof(tree: &ProofTree, assumptions: &[Sequent]) -> Result<(), ProofError> {
    let phi: Vec<Sequent> = assumptions.iter().map(Sequent::normalize_units).collect();
    let mut stack = vec![tree];
    while let Some(t) = stack.pop() {
        check_node(t, &phi).map_err(|reason| ProofError { sequent: t.sequent.to_string(), rule: t.rule, reason })?;
        stack.extend(t.premises.iter());
    }
    Ok(())
}

fn norm(b: Bunch) -> Bunch {
    b.normalize_units()
}

fn seq(b: Bunch, c: &Formula) -> Sequent {
    Sequent::new(norm(b), c.clone())
}

fn expect(ok: bool, reason: &str) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(reason.to_string())
    }
}

fn check_node(t: &ProofTree, phi: &[Sequent]) -> Result<(), String> {
    let concl = t.sequent.normalize_units();
    let g = &concl.antecedent;
    let c = &concl.succedent;
    let prem: Vec<Sequent> = t.premises.iter().map(|p| p.sequent.normalize_units()).collect();
    let arity = |n: usize| expect(prem.len() == n, &format!("expected {n} premises, found {}", prem.len()));
    let pos = t.position.as_deref();
    let node = || -> Result<&Bunch, String> {
        let p = pos.ok_or("missing position")?;
        g.get(p).ok_or_else(|| "position outside the antecedent".to_string())
    };
    let replaced = |with: Bunch| -> Result<Bunch, String> {
        let p = pos.ok_or("missing position")?;
        g.replace_at(p, with).map(norm).ok_or_else(|| "position outside the antecedent".to_string())
    };
    let leaf = || -> Result<&Formula, String> {
        node()?.as_formula().ok_or_else(|| "position is not a formula".to_string())
    };
    let right_bin = |op: BinOp| -> Result<(&Formula, &Formula), String> {
        match c {
            Formula::Bin(o, a, b) if *o == op => Ok((a, b)),
            _ => Err(format!("succedent is not a {} formula", op.symbol())),
        }
    };
    let left_bin = |op: BinOp| -> Result<(&Formula, &Formula), String> {
        match leaf()? {
            Formula::Bin(o, a, b) if *o == op => Ok((a, b)),
            _ => Err(format!("formula at position is not a {} formula", op.symbol())),
        }
    };

    match t.rule {
        Rule::Id => {
            arity(0)?;
            expect(*g == Bunch::Leaf(c.clone()), "antecedent differs from succedent")
        }
        Rule::TopRight => {
            arity(0)?;
            expect(*c == Formula::Top, "succedent is not top")
        }
        Rule::BotLeft => {
            arity(0)?;
            expect(*leaf()? == Formula::Bot, "formula at position is not bottom")
        }
        Rule::OneRight => {
            arity(0)?;
            expect(*g == Bunch::Eps && *c == Formula::One, "not eps => 1")
        }
        Rule::NegLeft => {
            arity(0)?;
            let ok = matches!(g, Bunch::Leaf(Formula::Bin(BinOp::And, a, na)) if **na == Formula::not((**a).clone()));
            expect(ok && *c == Formula::Bot, "not of the form A & ~A => F")
        }
        Rule::NegRight => {
            arity(0)?;
            let ok = matches!(c, Formula::Bin(BinOp::Or, a, na) if **na == Formula::not((**a).clone()));
            expect(ok && *g == Bunch::Leaf(Formula::Top), "not of the form T => A | ~A")
        }
        Rule::Assumption => {
            arity(0)?;
            expect(phi.contains(&concl), "sequent is not an assumption")
        }
        Rule::OtimesLeft | Rule::AndLeft => {
            arity(1)?;
            let (op, sep) = if t.rule == Rule::OtimesLeft { (BinOp::Tensor, Sep::Comma) } else { (BinOp::And, Sep::Semi) };
            let (a, b) = left_bin(op)?;
            let want = seq(replaced(Bunch::node(sep, Bunch::Leaf(a.clone()), Bunch::Leaf(b.clone())))?, c);
            expect(prem[0] == want, "premise does not unfold the formula")
        }
        Rule::OrLeft => {
            arity(2)?;
            let (a, b) = left_bin(BinOp::Or)?;
            expect(
                prem[0] == seq(replaced(Bunch::Leaf(a.clone()))?, c) && prem[1] == seq(replaced(Bunch::Leaf(b.clone()))?, c),
                "premises are not the two disjunct cases",
            )
        }
        Rule::TopLeft | Rule::OneLeft => {
            arity(1)?;
            let (k, unit) = if t.rule == Rule::TopLeft { (Formula::Top, Bunch::Del) } else { (Formula::One, Bunch::Eps) };
            expect(*leaf()? == k, "formula at position is not the constant")?;
            expect(prem[0] == seq(replaced(unit)?, c), "premise does not drop the constant")
        }
        Rule::LolLeft | Rule::LolinvLeft => {
            arity(2)?;
            let under = t.rule == Rule::LolLeft;
            let op = if under { BinOp::Under } else { BinOp::Over };
            let is_op = |b: &Bunch| matches!(b, Bunch::Leaf(Formula::Bin(o, ..)) if *o == op);
            let (imp, theta) = match node()? {
                Bunch::Node(Sep::Comma, l, r) if under && is_op(r) => (&**r, (**l).clone()),
                Bunch::Node(Sep::Comma, l, r) if !under && is_op(l) => (&**l, (**r).clone()),
                b if is_op(b) => (b, Bunch::Eps),
                _ => return Err("position holds no residual in the required place".into()),
            };
            let Bunch::Leaf(Formula::Bin(_, a, b)) = imp else { unreachable!() };
            // A ⊸ B: premises Γ[B] and Θ ⇒ A;  A ⟜ B: premises Γ[A] and Θ ⇒ B
            let (keep, need) = if under { (b, a) } else { (a, b) };
            expect(prem[0] == seq(replaced(Bunch::Leaf((**keep).clone()))?, c), "left premise is wrong")?;
            expect(prem[1] == seq(theta, need), "right premise is wrong")
        }
        Rule::OtimesRight => {
            arity(2)?;
            let (a, b) = right_bin(BinOp::Tensor)?;
            expect(prem[0].succedent == *a && prem[1].succedent == *b, "premise succedents are not the factors")?;
            expect(
                norm(Bunch::comma(prem[0].antecedent.clone(), prem[1].antecedent.clone())) == *g,
                "premise antecedents do not compose the conclusion",
            )
        }
        Rule::LolRight => {
            arity(1)?;
            let (a, b) = right_bin(BinOp::Under)?;
            expect(prem[0] == seq(Bunch::comma(Bunch::Leaf(a.clone()), g.clone()), b), "premise is not A , G => B")
        }
        Rule::LolinvRight => {
            arity(1)?;
            let (a, b) = right_bin(BinOp::Over)?;
            expect(prem[0] == seq(Bunch::comma(g.clone(), Bunch::Leaf(b.clone())), a), "premise is not G , B => A")
        }
        Rule::AndRight => {
            arity(2)?;
            let (a, b) = right_bin(BinOp::And)?;
            expect(prem[0] == seq(g.clone(), a) && prem[1] == seq(g.clone(), b), "premises are not the conjuncts")
        }
        Rule::OrRight => {
            arity(1)?;
            let (a, b) = right_bin(BinOp::Or)?;
            expect(prem[0] == seq(g.clone(), a) || prem[0] == seq(g.clone(), b), "premise is not a disjunct")
        }
        Rule::Cut => {
            arity(2)?;
            let a = &prem[0].succedent;
            expect(*node()? == prem[0].antecedent, "left premise antecedent is not the cut sub-bunch")?;
            expect(prem[1] == seq(replaced(Bunch::Leaf(a.clone()))?, c), "right premise is not the context with the cut formula")
        }
        Rule::AndAss => {
            arity(1)?;
            let n = node()?;
            let mut ok = false;
            if let Bunch::Node(Sep::Semi, l, r) = n {
                if let Bunch::Node(Sep::Semi, a, b) = &**l {
                    ok |= prem[0] == seq(replaced(Bunch::semi((**a).clone(), Bunch::semi((**b).clone(), (**r).clone())))?, c);
                }
                if let Bunch::Node(Sep::Semi, b, d) = &**r {
                    ok |= prem[0] == seq(replaced(Bunch::semi(Bunch::semi((**l).clone(), (**b).clone()), (**d).clone()))?, c);
                }
            }
            expect(ok, "premise is not a reassociation at the position")
        }
        Rule::AndEx => {
            arity(1)?;
            let Bunch::Node(Sep::Semi, l, r) = node()? else {
                return Err("position is not a semicolon".into());
            };
            expect(prem[0] == seq(replaced(Bunch::semi((**r).clone(), (**l).clone()))?, c), "premise is not the swap")
        }
        Rule::AndWeak => {
            arity(1)?;
            let n = node()?;
            let mut ok = prem[0] == seq(replaced(Bunch::Del)?, c);
            if let Bunch::Node(Sep::Semi, l, _) = n {
                ok |= prem[0] == seq(replaced((**l).clone())?, c);
            }
            expect(ok, "premise does not drop the right part of a semicolon")
        }
        Rule::AndCont => {
            arity(1)?;
            let n = node()?.clone();
            expect(prem[0] == seq(replaced(Bunch::semi(n.clone(), n))?, c), "premise does not double the sub-bunch")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Sequent {
        text.parse().unwrap()
    }

    #[test]
    fn misplaced_implication_is_rejected() {
        // A , G => B concludes G => A \ B, not G , A => B
        let good = ProofTree {
            sequent: s("q => p \\ (p * q)"),
            rule: Rule::LolRight,
            position: None,
            premises: vec![ProofTree {
                sequent: s("p , q => p * q"),
                rule: Rule::OtimesRight,
                position: None,
                premises: vec![ProofTree::leaf(s("p => p"), Rule::Id), ProofTree::leaf(s("q => q"), Rule::Id)],
            }],
        };
        assert_eq!(check_proof(&good, &[]), Ok(()));
        let mut bad = good.clone();
        bad.premises[0].sequent = s("q , p => p * q");
        assert!(check_proof(&bad, &[]).is_err());
    }

    #[test]
    fn assumption_leaves_must_be_listed() {
        let t = ProofTree::leaf(s("p => q"), Rule::Assumption);
        assert!(check_proof(&t, &[]).is_err());
        assert_eq!(check_proof(&t, &[s("p => q")]), Ok(()));
    }

    #[test]
    fn units_are_identified() {
        let t = ProofTree {
            sequent: s("(1 , p) => p"),
            rule: Rule::OneLeft,
            position: Some(vec![0]),
            premises: vec![ProofTree::leaf(s("p => p"), Rule::Id)],
        };
        assert_eq!(check_proof(&t, &[]), Ok(()));
    }
}
