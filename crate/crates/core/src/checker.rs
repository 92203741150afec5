//! Recognizer for partial residuated Boolean algebras: table checks, then a
//! shrinking family of prime filters, then separation.

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{
    check_complement, check_poset_bounds_lattice, check_unit_laws, Elem, PartialAlgebra, Side, Violation,
};
use crate::bitset::BitSet64;
use crate::filters::{enumerate_prime_filters, FilterSet};
use crate::frames::{
    associated_frame, check_frame, iota, relation_rb, verify_embedding, ComplexAlgebra, EmbeddingViolation, Frame,
    FrameViolation,
};

/// The relation on a fixed list of prime filters, precomputed once.
pub struct FamilyRelation<'a> {
    alg: &'a PartialAlgebra,
    family: Vec<FilterSet>,
    rel: Vec<bool>,
}

/// The first entry of a condition that has no witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "condition", rename_all = "snake_case")]
pub enum ConditionFailure {
    /// `a ⊗ b ∈ H` with no `F ∋ a`, `G ∋ b` related to `H`.
    Tensor { a: Elem, b: Elem },
    /// `a ⊸ b ∉ G` with no `F ∋ a`, `H ∌ b` related through `G`.
    Under { a: Elem, b: Elem },
    /// `c ⟜ d ∉ F` with no `G ∋ d`, `H ∌ c` related from `F`.
    Over { c: Elem, d: Elem },
    /// No unit filter on the given side.
    Unit { side: Side },
}

impl<'a> FamilyRelation<'a> {
    pub fn new(alg: &'a PartialAlgebra, family: Vec<FilterSet>) -> FamilyRelation<'a> {
        let n = family.len();
        let mut rel = vec![false; n * n * n];
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    rel[(x * n + y) * n + z] = relation_rb(alg, family[x], family[y], family[z]);
                }
            }
        }
        FamilyRelation { alg, family, rel }
    }

    pub fn family(&self) -> &[FilterSet] {
        &self.family
    }

    #[inline]
    pub fn related(&self, x: usize, y: usize, z: usize) -> bool {
        let n = self.family.len();
        self.rel[(x * n + y) * n + z]
    }

    fn holding<'b>(&'b self, alive: &'b [usize], e: Elem) -> impl Iterator<Item = usize> + 'b {
        alive.iter().copied().filter(move |&i| self.family[i].contains(e))
    }

    fn lacking<'b>(&'b self, alive: &'b [usize], e: Elem) -> impl Iterator<Item = usize> + 'b {
        alive.iter().copied().filter(move |&i| !self.family[i].contains(e))
    }

    /// Product condition at `H = family[h]`, witnesses drawn from `alive`.
    pub fn tensor_condition(&self, h: usize, alive: &[usize]) -> Result<(), ConditionFailure> {
        for (a, b, c) in self.alg.otimes.defined() {
            if self.family[h].contains(c)
                && !self.holding(alive, a).any(|f| self.holding(alive, b).any(|g| self.related(f, g, h)))
            {
                return Err(ConditionFailure::Tensor { a, b });
            }
        }
        Ok(())
    }

    /// Left-residual condition at `G = family[g]`.
    pub fn under_condition(&self, g: usize, alive: &[usize]) -> Result<(), ConditionFailure> {
        for (a, b, c) in self.alg.lol.defined() {
            if !self.family[g].contains(c)
                && !self.holding(alive, a).any(|f| self.lacking(alive, b).any(|h| self.related(f, g, h)))
            {
                return Err(ConditionFailure::Under { a, b });
            }
        }
        Ok(())
    }

    /// Right-residual condition at `F = family[f]`.
    pub fn over_condition(&self, f: usize, alive: &[usize]) -> Result<(), ConditionFailure> {
        for (c, d, v) in self.alg.lolinv.defined() {
            if !self.family[f].contains(v)
                && !self.holding(alive, d).any(|g| self.lacking(alive, c).any(|h| self.related(f, g, h)))
            {
                return Err(ConditionFailure::Over { c, d });
            }
        }
        Ok(())
    }

    /// Unit condition at `F = family[f]`, units being the alive members
    /// that contain `1`.
    pub fn unit_condition(&self, f: usize, alive: &[usize]) -> Result<(), ConditionFailure> {
        let one = self.alg.one;
        if !self.holding(alive, one).any(|g| self.related(f, g, f)) {
            return Err(ConditionFailure::Unit { side: Side::Right });
        }
        if !self.holding(alive, one).any(|g| self.related(g, f, f)) {
            return Err(ConditionFailure::Unit { side: Side::Left });
        }
        Ok(())
    }

    /// All four conditions for one member, in order.
    pub fn member_conditions(&self, i: usize, alive: &[usize]) -> Result<(), ConditionFailure> {
        self.tensor_condition(i, alive)?;
        self.under_condition(i, alive)?;
        self.over_condition(i, alive)?;
        self.unit_condition(i, alive)
    }
}

/// Every `a ≰ b` is separated by a family member: `a ∈ F`, `b ∉ F`.
pub fn condition_s(alg: &PartialAlgebra, family: &[FilterSet]) -> Result<(), (Elem, Elem)> {
    for a in alg.elements() {
        for b in alg.elements() {
            if !alg.le(a, b) && !family.iter().any(|f| f.contains(a) && !f.contains(b)) {
                return Err((a, b));
            }
        }
    }
    Ok(())
}

pub fn condition_motimes(alg: &PartialAlgebra, h: FilterSet, family: &[FilterSet]) -> Result<(), ConditionFailure> {
    with_member(alg, h, family, |r, i, alive| r.tensor_condition(i, alive))
}

pub fn condition_mlol(alg: &PartialAlgebra, g: FilterSet, family: &[FilterSet]) -> Result<(), ConditionFailure> {
    with_member(alg, g, family, |r, i, alive| r.under_condition(i, alive))
}

pub fn condition_mlolinv(alg: &PartialAlgebra, f: FilterSet, family: &[FilterSet]) -> Result<(), ConditionFailure> {
    with_member(alg, f, family, |r, i, alive| r.over_condition(i, alive))
}

/// Unit condition with the unit subfamily taken as the members holding `1`.
pub fn condition_m1(alg: &PartialAlgebra, f: FilterSet, family: &[FilterSet]) -> Result<(), ConditionFailure> {
    with_member(alg, f, family, |r, i, alive| r.unit_condition(i, alive))
}

fn with_member(
    alg: &PartialAlgebra,
    member: FilterSet,
    family: &[FilterSet],
    check: impl Fn(&FamilyRelation, usize, &[usize]) -> Result<(), ConditionFailure>,
) -> Result<(), ConditionFailure> {
    let mut all = family.to_vec();
    let i = match all.iter().position(|&f| f == member) {
        Some(i) => i,
        None => {
            all.push(member);
            all.len() - 1
        }
    };
    let alive: Vec<usize> = (0..family.len()).collect();
    check(&FamilyRelation::new(alg, all), i, &alive)
}

/// Why a structure was rejected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A table axiom from steps 1 to 3.
    Axiom { violation: Violation },
    /// Every filter was eventually dropped; the failures of the last
    /// round's members, in family order.
    EmptyFamily { last_round: Vec<(FilterSet, ConditionFailure)> },
    /// `a ≰ b` but no surviving filter separates them.
    Separation { a: Elem, b: Elem },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckerVerdict {
    pub accepted: bool,
    pub failing_step: Option<u8>,
    pub witness: Option<Witness>,
    pub initial_family: Vec<FilterSet>,
    pub final_family: Vec<FilterSet>,
    pub unit_family: Vec<FilterSet>,
    pub iterations: usize,
}

impl CheckerVerdict {
    fn reject(step: u8, witness: Witness) -> CheckerVerdict {
        CheckerVerdict {
            accepted: false,
            failing_step: Some(step),
            witness: Some(witness),
            initial_family: Vec::new(),
            final_family: Vec::new(),
            unit_family: Vec::new(),
            iterations: 0,
        }
    }
}

/// How surviving filters are recomputed within one round.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sweep {
    /// Every member is tested against the previous round's family.
    Jacobi,
    /// Members are dropped immediately and later tests see the smaller family.
    GaussSeidel,
}

pub fn check_partial_rba(alg: &PartialAlgebra) -> CheckerVerdict {
    check_partial_rba_with(alg, Sweep::Jacobi)
}

pub fn check_partial_rba_with(alg: &PartialAlgebra, sweep: Sweep) -> CheckerVerdict {
    if let Err(violation) = check_poset_bounds_lattice(alg) {
        return CheckerVerdict::reject(1, Witness::Axiom { violation });
    }
    if let Err(violation) = check_unit_laws(alg) {
        return CheckerVerdict::reject(2, Witness::Axiom { violation });
    }
    if let Err(violation) = check_complement(alg) {
        return CheckerVerdict::reject(3, Witness::Axiom { violation });
    }

    let initial = enumerate_prime_filters(alg);
    let rel = FamilyRelation::new(alg, initial.clone());
    let mut alive: Vec<usize> = (0..initial.len()).collect();
    let mut iterations = 0;
    loop {
        iterations += 1;
        let mut failures = Vec::new();
        let next: Vec<usize> = match sweep {
            Sweep::Jacobi => alive
                .iter()
                .copied()
                .filter(|&i| match rel.member_conditions(i, &alive) {
                    Ok(()) => true,
                    Err(e) => {
                        failures.push((initial[i], e));
                        false
                    }
                })
                .collect(),
            Sweep::GaussSeidel => {
                let mut cur = alive.clone();
                for &i in &alive {
                    if let Err(e) = rel.member_conditions(i, &cur) {
                        failures.push((initial[i], e));
                        cur.retain(|&j| j != i);
                    }
                }
                cur
            }
        };
        if next.is_empty() {
            let mut v = CheckerVerdict::reject(4, Witness::EmptyFamily { last_round: failures });
            v.initial_family = initial;
            v.iterations = iterations;
            return v;
        }
        if next == alive {
            break;
        }
        alive = next;
    }

    let family: Vec<FilterSet> = alive.iter().map(|&i| initial[i]).collect();
    let unit_family: Vec<FilterSet> = family.iter().copied().filter(|f| f.contains(alg.one)).collect();
    if let Err((a, b)) = condition_s(alg, &family) {
        return CheckerVerdict {
            accepted: false,
            failing_step: Some(5),
            witness: Some(Witness::Separation { a, b }),
            initial_family: initial,
            final_family: family,
            unit_family,
            iterations,
        };
    }
    CheckerVerdict {
        accepted: true,
        failing_step: None,
        witness: None,
        initial_family: initial,
        final_family: family,
        unit_family,
        iterations,
    }
}

/// The frame over the accepted family and the map sending each element to
/// the members containing it.
#[derive(Clone, Debug, Serialize)]
pub struct AcceptanceCertificate {
    pub family: Vec<FilterSet>,
    pub unit_family: Vec<FilterSet>,
    pub frame: Frame,
    pub iota: Vec<BitSet64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("verdict is a rejection")]
    NotAccepted,
    #[error("frame over the accepted family is not residuated: {0}")]
    Frame(FrameViolation),
    #[error("map into the complex algebra is not an embedding: {0}")]
    Embedding(EmbeddingViolation),
}

pub fn certify_acceptance(alg: &PartialAlgebra, verdict: &CheckerVerdict) -> Result<AcceptanceCertificate, CertifyError> {
    if !verdict.accepted {
        return Err(CertifyError::NotAccepted);
    }
    let family = verdict.final_family.clone();
    let frame = associated_frame(alg, &family);
    check_frame(&frame).map_err(CertifyError::Frame)?;
    let map = iota(alg, &family);
    verify_embedding(alg, &ComplexAlgebra::new(frame.clone()), &map).map_err(CertifyError::Embedding)?;
    Ok(AcceptanceCertificate { family, unit_family: verdict.unit_family.clone(), frame, iota: map })
}
