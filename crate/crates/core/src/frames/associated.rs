use crate::algebra::PartialAlgebra;
use crate::bitset::BitSet64;
use crate::filters::FilterSet;

use super::Frame;

/// The ternary relation on prime filters:
/// products of `F`,`G` members land in `H`, and both residuals applied to
/// members of one argument filter land in `H`. Undefined entries impose
/// nothing.
pub fn relation_rb(alg: &PartialAlgebra, f: FilterSet, g: FilterSet, h: FilterSet) -> bool {
    for a in f.iter() {
        for b in g.iter() {
            if let Some(ab) = alg.otimes.get(a, b) {
                if !h.contains(ab) {
                    return false;
                }
            }
        }
    }
    for a in f.iter() {
        for b in alg.elements() {
            if !h.contains(b) && alg.lol.get(a, b).is_some_and(|v| g.contains(v)) {
                return false;
            }
        }
    }
    for a in g.iter() {
        for b in alg.elements() {
            if !h.contains(b) && alg.lolinv.get(b, a).is_some_and(|v| f.contains(v)) {
                return false;
            }
        }
    }
    true
}

/// Points are the family members in order; units are the members holding 1.
pub fn associated_frame(alg: &PartialAlgebra, family: &[FilterSet]) -> Frame {
    let unit = BitSet64::from_indices((0..family.len()).filter(|&i| family[i].contains(alg.one)));
    let mut frame = Frame::new(family.len(), unit, []);
    for (x, &f) in family.iter().enumerate() {
        for (y, &g) in family.iter().enumerate() {
            for (z, &h) in family.iter().enumerate() {
                if relation_rb(alg, f, g, h) {
                    frame.insert(x, y, z);
                }
            }
        }
    }
    frame
}

/// `ι(a)`: the family members containing `a`, as a set of frame points.
pub fn iota(alg: &PartialAlgebra, family: &[FilterSet]) -> Vec<BitSet64> {
    alg.elements()
        .map(|a| BitSet64::from_indices((0..family.len()).filter(|&i| family[i].contains(a))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Table;
    use crate::filters::{enumerate_prime_filters, principal_upset};

    #[test]
    fn relation_examples() {
        let c = PartialAlgebra::two_chain();
        let top = BitSet64::singleton(1);
        assert!(relation_rb(&c, top, top, top));

        let b = PartialAlgebra::boolean(2);
        let (x, nx) = (principal_upset(&b, 1), principal_upset(&b, 2));
        assert!(!relation_rb(&b, x, x, nx));
        assert!(relation_rb(&b, x, x, x));

        let mut u = b.clone();
        u.otimes = Table::undefined(4);
        u.lol = Table::undefined(4);
        u.lolinv = Table::undefined(4);
        assert!(relation_rb(&u, x, x, nx));
    }

    #[test]
    fn associated_frame_examples() {
        let c = PartialAlgebra::two_chain();
        let fam = enumerate_prime_filters(&c);
        let f = associated_frame(&c, &fam);
        assert_eq!(f, Frame::new(1, BitSet64::singleton(0), [(0, 0, 0)]));
        assert_eq!(iota(&c, &fam), vec![BitSet64::EMPTY, BitSet64::singleton(0)]);

        let b = PartialAlgebra::boolean(2);
        let fam = enumerate_prime_filters(&b);
        let f = associated_frame(&b, &fam);
        assert_eq!(f.points(), 2);
        assert!(f.contains(0, 0, 0) && f.contains(1, 1, 1));
        let i = iota(&b, &fam);
        assert_eq!(i[3], BitSet64::full(2));
        assert_eq!(i[0], BitSet64::EMPTY);
        assert_eq!(i[1], BitSet64::singleton(0));

        assert_eq!(associated_frame(&b, &[]).points(), 0);
    }
}
