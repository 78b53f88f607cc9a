//! Matrices and sequences printed alongside the results, kept verbatim so
//! that the verifiers can compare computed values against them.

use crate::path::Family;

pub const M1_MATRIX: [&[u64]; 9] = [
    &[1],
    &[1, 1],
    &[2, 2, 1],
    &[5, 5, 3, 1],
    &[13, 14, 9, 4, 1],
    &[36, 40, 28, 14, 5, 1],
    &[105, 118, 87, 48, 20, 6, 1],
    &[317, 359, 273, 161, 75, 27, 7, 1],
    &[982, 1118, 869, 536, 270, 110, 35, 8, 1],
];

pub const M1R_MATRIX: [&[u64]; 9] = [
    &[1, 0, 0, 0, 0, 0, 0],
    &[1, 1, 1, 1, 1, 1, 1],
    &[2, 3, 3, 3, 3, 3, 3],
    &[5, 8, 10, 12, 14, 16, 18],
    &[13, 23, 33, 43, 53, 63, 73],
    &[36, 69, 107, 149, 195, 245, 299],
    &[105, 212, 348, 512, 704, 924, 1172],
    &[317, 665, 1141, 1753, 2509, 3417, 4485],
    &[982, 2123, 3771, 5999, 8879, 12483, 16883],
];

pub const M2_MATRIX: [&[u64]; 9] = [
    &[1],
    &[1, 1],
    &[1, 2, 1],
    &[2, 3, 3, 1],
    &[4, 6, 6, 4, 1],
    &[9, 13, 13, 10, 5, 1],
    &[21, 30, 30, 24, 15, 6, 1],
    &[51, 72, 72, 59, 40, 21, 7, 1],
    &[127, 178, 178, 148, 105, 62, 28, 8, 1],
];

pub const M2R_MATRIX: [&[u64]; 9] = [
    &[1, 0, 0, 0, 0, 0, 0, 0],
    &[1, 1, 1, 1, 1, 1, 1, 1],
    &[1, 1, 1, 1, 1, 1, 1, 1],
    &[2, 3, 4, 5, 6, 7, 8, 9],
    &[4, 6, 8, 10, 12, 14, 16, 18],
    &[9, 15, 22, 30, 39, 49, 60, 72],
    &[21, 36, 54, 75, 99, 126, 156, 189],
    &[51, 91, 142, 205, 281, 371, 476, 597],
    &[127, 232, 370, 545, 761, 1022, 1332, 1695],
];

/// Printed matrix of a family as `(rows, cols, data)`; lower-triangular
/// displays are padded with zeros above the diagonal.
pub fn printed_matrix(family: Family) -> (usize, usize, Vec<Vec<u64>>) {
    let (src, cols): (&[&[u64]], usize) = match family {
        Family::M1 => (&M1_MATRIX, 9),
        Family::M1R => (&M1R_MATRIX, 7),
        Family::M2 => (&M2_MATRIX, 9),
        Family::M2R => (&M2R_MATRIX, 8),
    };
    let data = src
        .iter()
        .map(|row| {
            let mut r = row.to_vec();
            r.resize(cols, 0);
            r
        })
        .collect();
    (src.len(), cols, data)
}

/// Almost Riordan factor `A` of the M1R decomposition, rows 0..=5.
pub const M1R_A: [[u64; 4]; 6] =
    [[1, 0, 0, 0], [1, 1, 0, 0], [2, 3, 0, 0], [5, 8, 2, 0], [13, 23, 10, 0], [36, 69, 38, 4]];

/// Almost stretched factor `A` of the M2R decomposition, rows 0..=5.
pub const M2R_A: [[u64; 4]; 6] =
    [[1, 0, 0, 0], [1, 1, 0, 0], [1, 1, 0, 0], [2, 3, 1, 0], [4, 6, 2, 0], [9, 15, 7, 1]];

/// Displayed product rows of the two decompositions.
pub const M1R_PRODUCT_ROW3: [u64; 6] = [5, 8, 10, 12, 14, 16];
pub const M2R_PRODUCT_ROW5: [u64; 6] = [9, 15, 22, 30, 39, 49];

/// Rectified M1R block.
pub const M1R_RECTIFIED: [[u64; 5]; 5] =
    [[1, 1, 1, 1, 1], [3, 3, 3, 3, 3], [8, 10, 12, 14, 16], [23, 33, 43, 53, 63], [69, 107, 149, 195, 245]];

/// Matrix displayed as the rectification of `(M, zR)`.
pub const MOTZKIN_RIORDAN_RECTIFIED_DISPLAY: [[u64; 5]; 6] = [
    [1, 1, 1, 1, 1],
    [1, 1, 1, 1, 1],
    [3, 4, 5, 6, 7],
    [6, 8, 10, 12, 14],
    [15, 22, 30, 39, 49],
    [36, 54, 75, 99, 126],
];

/// Row sums of M1 (total count by length).
pub const M1_ROW_SUMS: [u64; 10] = [1, 2, 5, 14, 41, 124, 385, 1220, 3929, 12822];
/// Column 0 of M1 (paths ending on the x-axis).
pub const M1_COLUMN0: [u64; 10] = [1, 1, 2, 5, 13, 36, 105, 317, 982, 3105];
/// Anti-diagonal sums of M1R.
pub const M1R_ANTIDIAGONAL: [u64; 10] = [1, 1, 3, 9, 25, 73, 223, 697, 2217, 7161];
/// Row sums of M2.
pub const M2_ROW_SUMS: [u64; 10] = [1, 2, 4, 9, 21, 51, 127, 323, 835, 2188];
/// Column 0 of M2.
pub const M2_COLUMN0: [u64; 10] = [1, 1, 1, 2, 4, 9, 21, 51, 127, 323];
/// Anti-diagonal sums of M2R (Motzkin numbers).
pub const M2R_ANTIDIAGONAL: [u64; 5] = [1, 1, 2, 4, 9];
/// Coefficients of `C(Z)`, `Z = z(1 - z + z^2)/(1 - z^2)^2`.
pub const U_SEQUENCE: [u64; 12] = [1, 1, 1, 4, 11, 31, 92, 281, 877, 2788, 8999, 29415];
/// Column 0 of M1 to twelve terms.
pub const A114465_PREFIX: [u64; 12] = [1, 1, 2, 5, 13, 36, 105, 317, 982, 3105, 9981, 32520];
/// First column of the shifted part of the M1R almost array.
pub const V_SEQUENCE: [u64; 5] = [1, 3, 8, 23, 69];
/// Quotient `g / g0` of the M1R almost array.
pub const AUXILIARY_PREFIX: [u64; 5] = [1, 2, 4, 10, 28];
/// Motzkin numbers.
pub const MOTZKIN_PREFIX: [u64; 10] = [1, 1, 2, 4, 9, 21, 51, 127, 323, 835];
/// End-height distribution of the nine M2 paths of length 3.
pub const M2_LENGTH3_BY_HEIGHT: [u64; 4] = [2, 3, 3, 1];
