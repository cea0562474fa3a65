use num_traits::{One, Zero};

use crate::{Int, Rat};

/// The first `count` points of `2, 5/2, 3, 7/3, 4, 9/4, ...` accepted by
/// `admissible`.
pub fn admissible_points(count: usize, admissible: impl Fn(&Rat) -> bool) -> Vec<Rat> {
    (2i64..)
        .flat_map(|m| [Rat::from_integer(Int::from(m)), Rat::new(Int::from(2 * m + 1), Int::from(m))])
        .filter(|x| admissible(x))
        .take(count)
        .collect()
}

/// Outside `{0, 1, -1}`, the exclusions shared by every rational identity here.
pub(crate) fn generic_point(q0: &Rat) -> bool {
    !q0.is_zero() && !q0.is_one() && *q0 != -Rat::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequence_and_filter() {
        let pts = admissible_points(4, |_| true);
        let want: Vec<Rat> =
            [(2, 1), (5, 2), (3, 1), (7, 3)].iter().map(|&(a, b)| Rat::new(Int::from(a), Int::from(b))).collect();
        assert_eq!(pts, want);
        let skip_two = admissible_points(2, |x| *x != Rat::from_integer(Int::from(2)));
        assert_eq!(skip_two[0], Rat::new(Int::from(5), Int::from(2)));
        assert!(!generic_point(&-Rat::one()));
    }
}
