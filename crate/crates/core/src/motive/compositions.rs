//! Weak compositions: ordered tuples of nonnegative integers with a fixed
//! sum, in ascending lexicographic order.

/// One weak composition (n_1, ..., n_r) of n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The twist exponent sum of (i - 1) * n_i, with parts indexed from 1.
    pub fn lefschetz_exponent(&self) -> u32 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u32 * p)
            .sum()
    }

    /// All weak compositions of `total` into `parts` parts, ascending
    /// lexicographic.
    pub fn all(total: u32, parts: u32) -> Vec<Composition> {
        let mut out = Vec::new();
        if parts == 0 {
            if total == 0 {
                out.push(Composition { parts: Vec::new() });
            }
            return out;
        }
        let mut current = vec![0u32; parts as usize];
        descend(&mut current, 0, total, &mut out);
        out
    }
}

fn descend(current: &mut Vec<u32>, slot: usize, remaining: u32, out: &mut Vec<Composition>) {
    if slot + 1 == current.len() {
        current[slot] = remaining;
        out.push(Composition {
            parts: current.clone(),
        });
        return;
    }
    for v in 0..=remaining {
        current[slot] = v;
        descend(current, slot + 1, remaining - v, out);
    }
}

/// All tuples in N^slots with entry sum at most `max_total`, ascending by
/// total then lexicographic. Indexes the strata cut out by finitely many
/// marked points, where a tuple records the length concentrated at each.
pub fn bounded_tuples(max_total: u32, slots: u32) -> Vec<Composition> {
    let mut out = Vec::new();
    for total in 0..=max_total {
        out.extend(Composition::all(total, slots));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compositions_of_two_into_two() {
        let all = Composition::all(2, 2);
        let parts: Vec<&[u32]> = all.iter().map(|c| c.parts()).collect();
        assert_eq!(parts, vec![&[0, 2][..], &[1, 1], &[2, 0]]);
        let exps: Vec<u32> = all.iter().map(|c| c.lefschetz_exponent()).collect();
        assert_eq!(exps, vec![2, 1, 0]);
    }

    #[test]
    fn composition_counts_are_binomials() {
        // C(n + r - 1, r - 1)
        assert_eq!(Composition::all(4, 3).len(), 15);
        assert_eq!(Composition::all(0, 5).len(), 1);
        assert_eq!(Composition::all(3, 1).len(), 1);
        assert_eq!(Composition::all(3, 0).len(), 0);
        assert_eq!(Composition::all(0, 0).len(), 1);
    }

    #[test]
    fn bounded_tuples_up_to_two() {
        let tuples = bounded_tuples(2, 2);
        let parts: Vec<&[u32]> = tuples.iter().map(|c| c.parts()).collect();
        assert_eq!(
            parts,
            vec![&[0, 0][..], &[0, 1], &[1, 0], &[0, 2], &[1, 1], &[2, 0]]
        );
        assert_eq!(bounded_tuples(3, 0).len(), 1);
    }
}
