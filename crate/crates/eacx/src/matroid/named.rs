use super::Matroid;
use crate::bits;

/// The seven lines of the Fano plane in the fixture labeling.
pub fn fano_lines() -> [[usize; 3]; 7] {
    [[2, 3, 6], [2, 4, 5], [3, 4, 7], [1, 2, 7], [1, 3, 5], [1, 4, 6], [5, 6, 7]]
}

fn three_sets_avoiding(lines: &[[usize; 3]]) -> Vec<u32> {
    let lines: Vec<u32> = lines.iter().map(|l| bits::set(l)).collect();
    bits::k_subsets(7, 3).into_iter().filter(|s| !lines.contains(s)).collect()
}

/// Fano matroid: 3-subsets of `[7]` that are not lines.
pub fn fano() -> Matroid {
    Matroid::from_bases(7, &three_sets_avoiding(&fano_lines())).expect("Fano fixture")
}

/// Non-Fano matroid: the Fano plane with `{5,6,7}` made a basis.
pub fn nonfano() -> Matroid {
    Matroid::from_bases(7, &three_sets_avoiding(&fano_lines()[..6])).expect("non-Fano fixture")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_counts() {
        assert_eq!(fano().bases().len(), 28);
        assert_eq!(nonfano().bases().len(), 29);
        assert!(nonfano().is_basis(bits::set(&[5, 6, 7])));
        assert!(!fano().is_basis(bits::set(&[5, 6, 7])));
    }

    #[test]
    fn fano_circuits_by_brute_force() {
        // independent oracle: a set is dependent iff it has more than 3
        // elements or is a line
        let lines: Vec<u32> = fano_lines().iter().map(|l| bits::set(l)).collect();
        let dependent = |s: u32| bits::size(s) > 3 || lines.contains(&s);
        let minimal: Vec<u32> = (1u32..128)
            .filter(|&s| dependent(s) && bits::iter(s).all(|e| !dependent(s & !(1 << (e - 1)))))
            .collect();
        let mut got = fano().circuits();
        got.sort_unstable();
        let mut want = minimal;
        want.sort_unstable();
        assert_eq!(got, want);
        assert_eq!(got.len(), 14);
    }
}
