use super::Frame;

/// Frames of a fixed size in canonical `(unit mask, relation mask)` order.
pub struct FrameStream {
    inner: Box<dyn Iterator<Item = Frame> + Send>,
}

impl Iterator for FrameStream {
    type Item = Frame;

    fn next(&mut self) -> Option<Frame> {
        self.inner.next()
    }
}

/// Submasks of `allowed` in increasing order, starting with 0.
fn submasks(allowed: u128) -> impl Iterator<Item = u128> {
    let mut next = Some(0u128);
    std::iter::from_fn(move || {
        let cur = next?;
        let succ = ((cur | !allowed).wrapping_add(1)) & allowed;
        next = if succ == 0 { None } else { Some(succ) };
        Some(cur)
    })
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == k {
            out.push(prefix.clone());
            return;
        }
        for i in 0..k {
            if !prefix.contains(&i) {
                prefix.push(i);
                go(prefix, k, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), k, &mut out);
    out
}

/// Bit maps for relabelling `(unit, rel)` keys under each non-identity
/// permutation.
#[derive(Clone)]
struct Relabel {
    perms: Vec<(Vec<usize>, Vec<usize>)>,
}

impl Relabel {
    fn new(k: usize) -> Relabel {
        let bit = |x: usize, y: usize, z: usize| (x * k + y) * k + z;
        let perms = permutations(k)
            .into_iter()
            .filter(|p| p.iter().enumerate().any(|(i, &j)| i != j))
            .map(|p| {
                let mut rel = vec![0; k * k * k];
                for x in 0..k {
                    for y in 0..k {
                        for z in 0..k {
                            rel[bit(x, y, z)] = bit(p[x], p[y], p[z]);
                        }
                    }
                }
                (p, rel)
            })
            .collect();
        Relabel { perms }
    }

    fn is_minimal(&self, unit: u64, rel: u128) -> bool {
        self.perms.iter().all(|(p, map)| {
            let mut u = 0u64;
            for (i, &j) in p.iter().enumerate() {
                if (unit >> i) & 1 == 1 {
                    u |= 1 << j;
                }
            }
            let mut r = 0u128;
            let mut bits = rel;
            while bits != 0 {
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                r |= 1u128 << map[b];
            }
            (unit, rel) <= (u, r)
        })
    }
}

/// All frames on `k` points in canonical order.
///
/// With `unital` these are the frames passing the unit conditions, with a
/// nonempty unit set; without it, the unit set is empty and every relation
/// is listed. With `prune`, only the key-minimal member of each
/// isomorphism class is kept. Requires `k ≤ 5`; sizes past 3 are large.
pub fn enumerate_frames(k: usize, unital: bool, prune: bool) -> FrameStream {
    assert!((1..=5).contains(&k), "frame enumeration supports 1..=5 points, got {k}");
    let bit = move |x: usize, y: usize, z: usize| 1u128 << ((x * k + y) * k + z);
    let relabel = std::sync::Arc::new(prune.then(|| Relabel::new(k)));
    let keep = move |unit: u64, rel: u128| Option::as_ref(&relabel).is_none_or(|r| r.is_minimal(unit, rel));

    if !unital {
        let all = if k * k * k == 128 { u128::MAX } else { (1u128 << (k * k * k)) - 1 };
        let inner = submasks(all).filter(move |&r| keep(0, r)).map(move |r| Frame::from_key(k, 0, r));
        return FrameStream { inner: Box::new(inner) };
    }

    let inner = (1u64..1 << k).flat_map(move |unit| {
        let in_unit = move |x: usize| (unit >> x) & 1 == 1;
        let mut allowed = 0u128;
        let mut right_units = vec![0u128; k];
        let mut left_units = vec![0u128; k];
        for x in 0..k {
            for y in 0..k {
                match (in_unit(x), in_unit(y)) {
                    (false, false) => {
                        for z in 0..k {
                            allowed |= bit(x, y, z);
                        }
                    }
                    (false, true) => allowed |= bit(x, y, x),
                    (true, false) => allowed |= bit(x, y, y),
                    (true, true) if x == y => allowed |= bit(x, x, x),
                    (true, true) => {}
                }
                if in_unit(y) {
                    right_units[x] |= bit(x, y, x);
                }
                if in_unit(x) {
                    left_units[y] |= bit(x, y, y);
                }
            }
        }
        let keep = keep.clone();
        submasks(allowed)
            .filter(move |&r| (0..k).all(|x| r & right_units[x] != 0 && r & left_units[x] != 0))
            .filter(move |&r| keep(unit, r))
            .map(move |r| Frame::from_key(k, unit, r))
    });
    FrameStream { inner: Box::new(inner) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitset::BitSet64;
    use crate::frames::check_frame;

    #[test]
    fn submask_order() {
        assert_eq!(submasks(0b1010).collect::<Vec<_>>(), vec![0, 0b10, 0b1000, 0b1010]);
        assert_eq!(submasks(0).count(), 1);
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_frames(1, true, false).count(), 1);
        assert_eq!(enumerate_frames(1, false, false).count(), 2);
        assert_eq!(enumerate_frames(2, true, false).count(), 9);
    }

    #[test]
    fn two_points_match_brute_force() {
        let mut brute = Vec::new();
        for unit in 0u64..4 {
            for rel in 0u128..256 {
                let f = Frame::from_key(2, unit, rel);
                if check_frame(&f).is_ok() {
                    brute.push(f.key());
                }
            }
        }
        let keys: Vec<_> = enumerate_frames(2, true, false).map(|f| f.key()).collect();
        assert_eq!(keys, brute);
    }

    #[test]
    fn enumerated_three_point_frames_are_valid_and_sorted() {
        let keys: Vec<_> = enumerate_frames(3, true, false)
            .inspect(|f| assert_eq!(check_frame(f), Ok(())))
            .map(|f| f.key())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(keys.len(), 12505);
    }

    #[test]
    fn pruning_keeps_one_per_class() {
        let all: Vec<Frame> = enumerate_frames(2, true, false).collect();
        let pruned: Vec<Frame> = enumerate_frames(2, true, true).collect();
        assert!(pruned.len() < all.len());
        for f in &all {
            let class_rep = [vec![0, 1], vec![1, 0]].iter().map(|p| f.permute(p).key()).min().unwrap();
            assert!(pruned.iter().any(|g| g.key() == class_rep));
        }
        assert!(pruned.iter().all(|f| f.unit() != BitSet64::EMPTY));
    }
}
