use alloc::vec::Vec;
use core::cmp::Ordering;

use super::Monomial;

/// A monomial order on exponent vectors. Variable index 0 is the largest
/// variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    /// Total degree first, ties broken lexicographically. Used for the
    /// canonical text format.
    DegLex,
    GrevLex,
    /// Elimination order: graded reverse lex on the variables flagged in
    /// `elim`, ties broken by graded reverse lex on the remaining ones.
    Block {
        elim: Vec<bool>,
    },
}

impl MonomialOrder {
    /// Block order eliminating the given variable indices out of `nvars`.
    pub fn elimination(nvars: usize, elim_vars: &[usize]) -> Self {
        let mut elim = alloc::vec![false; nvars];
        for &i in elim_vars {
            elim[i] = true;
        }
        MonomialOrder::Block { elim }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::DegLex => a.degree.cmp(&b.degree).then_with(|| a.exps.cmp(&b.exps)),
            MonomialOrder::GrevLex => grevlex(&a.exps, &b.exps, |_| true),
            MonomialOrder::Block { elim } => {
                grevlex(&a.exps, &b.exps, |i| elim[i]).then_with(|| grevlex(&a.exps, &b.exps, |i| !elim[i]))
            }
        }
    }
}

fn grevlex(a: &[u32], b: &[u32], include: impl Fn(usize) -> bool) -> Ordering {
    let mut da = 0u64;
    let mut db = 0u64;
    for i in 0..a.len() {
        if include(i) {
            da += a[i] as u64;
            db += b[i] as u64;
        }
    }
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.len()).rev() {
        if include(i) && a[i] != b[i] {
            // smaller exponent in the last differing variable wins
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::GrevLex;
        // x^2 > xy > y^2 > xz > yz > z^2 in grevlex on x > y > z
        let seq = [
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[0, 2, 0]),
            m(&[1, 0, 1]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        for w in seq.windows(2) {
            assert_eq!(o.cmp(&w[0], &w[1]), Ordering::Greater, "{:?} vs {:?}", w[0], w[1]);
        }
    }

    #[test]
    fn deglex_matches_canonical_print_order() {
        let o = MonomialOrder::DegLex;
        // U*B4 before B1^2 (U, B1, B2, B3, B4)
        assert_eq!(o.cmp(&m(&[1, 0, 0, 0, 1]), &m(&[0, 2, 0, 0, 0])), Ordering::Greater);
        assert_eq!(
            MonomialOrder::GrevLex.cmp(&m(&[1, 0, 0, 0, 1]), &m(&[0, 2, 0, 0, 0])),
            Ordering::Less
        );
    }

    #[test]
    fn block_order_eliminates() {
        // x eliminated; any monomial containing x beats every x-free monomial
        let o = MonomialOrder::elimination(3, &[0]);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 5, 7])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 2, 0]), &m(&[0, 0, 1])), Ordering::Greater);
    }
}
