//! Built-in codes.

use crate::code::LinearCode;
use crate::gf3::{Gf3Matrix, Gf3Vector};

/// Circulant right half of the systematic generator of the unique ternary
/// `[10,5,5]` code.
pub fn circulant_a() -> Gf3Matrix {
    let rows = ["12210", "01221", "10122", "21012", "22101"]
        .iter()
        .map(|r| r.parse::<Gf3Vector>().expect("valid literal"))
        .collect();
    Gf3Matrix::from_rows(rows, 5).expect("5x5")
}

/// The ternary `[10,5,5]` code, generator `(I_5 | A)` with `A` circulant.
pub fn code_10_5_5() -> LinearCode {
    LinearCode::systematic(&circulant_a()).expect("full rank")
}

/// Refined weight enumerators of the seven SZ-classes of `[12,5]` codes
/// satisfying (C1)-(C3): three of minimum weight 6, then four of minimum
/// weight 4.
pub const REFINED_ENUMERATORS: [&str; 7] = [
    "1 + 72x5yz + 60x6 + 90x8yz + 20x9",
    "1 + 9x4z2 + 9x4y2 + 18x5yz + 24x6 + 36x6z + 36x6y + 18x7z2 + 18x7y2 + 36x8yz + 2x9 + 18x9z + 18x9y",
    "1 + 15x4z2 + 15x4y2 + 60x6 + 60x7z2 + 60x7y2 + 20x9 + 6x10z2 + 6x10y2",
    "1 + 2x3z + 2x3y + 4x4z2 + 4x4y2 + 24x5yz + 18x6 + 38x6z + 38x6y + 22x7z2 + 22x7y2 + 30x8yz + 8x9 + 14x9z + 14x9y + x10z2 + x10y2",
    "1 + 3x3z + 3x3y + 3x4z2 + 3x4y2 + 18x5yz + 24x6 + 39x6z + 39x6y + 21x7z2 + 21x7y2 + 36x8yz + 2x9 + 12x9z + 12x9y + 3x10z2 + 3x10y2",
    "1 + 4x3z + 4x3y + 5x4z2 + 5x4y2 + 24x5yz + 18x6 + 34x6z + 34x6y + 20x7z2 + 20x7y2 + 30x8yz + 8x9 + 16x9z + 16x9y + 2x10z2 + 2x10y2",
    "1 + 6x3z + 6x3y + 9x4z2 + 9x4y2 + 36x5yz + 24x6 + 42x6z + 42x6y + 18x7z2 + 18x7y2 + 18x8yz + 2x9 + 6x9z + 6x9y",
];

pub fn refined_enumerators() -> Vec<crate::analysis::RefinedWeightEnumerator> {
    REFINED_ENUMERATORS
        .iter()
        .map(|s| s.parse().expect("valid literal"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerator_literals_are_consistent() {
        for (i, w) in refined_enumerators().iter().enumerate() {
            assert_eq!(w.total(), 243, "enumerator {}", i + 1);
            assert_eq!(w.get(0, 0, 0), 1);
            assert!(w.satisfies_c1_congruence(), "enumerator {}", i + 1);
            let full = w.full_weights();
            let d = full.iter().skip(1).position(|&c| c > 0).unwrap() + 1;
            assert_eq!(d, if i < 3 { 6 } else { 4 });
        }
    }
}
