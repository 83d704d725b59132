//! Incidence data of the sporadic tilings: chirality and the vertex ids at
//! the alpha, beta, gamma, delta corners of each tile.

pub(super) type Row = (char, [usize; 4]);

pub(super) const EMT12_A2B_C3: [Row; 12] = [
    ('+', [0, 1, 2, 3]),
    ('+', [1, 0, 4, 5]),
    ('-', [1, 2, 6, 5]),
    ('-', [0, 4, 7, 3]),
    ('+', [8, 9, 5, 4]),
    ('-', [9, 5, 6, 10]),
    ('-', [8, 11, 7, 4]),
    ('+', [9, 8, 11, 10]),
    ('-', [12, 3, 7, 11]),
    ('+', [12, 13, 10, 11]),
    ('+', [13, 12, 3, 2]),
    ('-', [13, 10, 6, 2]),
];

pub(super) const EMT16_A2B_BCD2: [Row; 16] = [
    ('+', [0, 1, 2, 3]),
    ('+', [1, 0, 4, 5]),
    ('-', [1, 2, 6, 5]),
    ('-', [0, 4, 7, 3]),
    ('-', [8, 5, 6, 9]),
    ('+', [10, 8, 5, 4]),
    ('-', [10, 11, 7, 4]),
    ('+', [8, 10, 11, 9]),
    ('-', [12, 9, 6, 13]),
    ('+', [14, 12, 9, 11]),
    ('-', [15, 13, 6, 2]),
    ('-', [14, 16, 7, 11]),
    ('+', [12, 14, 16, 13]),
    ('+', [17, 15, 13, 16]),
    ('-', [17, 3, 7, 16]),
    ('+', [15, 17, 3, 2]),
];

pub(super) const EMT16_BD2_A2C2: [Row; 16] = [
    ('+', [0, 1, 2, 3]),
    ('-', [0, 4, 5, 3]),
    ('-', [2, 3, 5, 6]),
    ('-', [7, 8, 0, 1]),
    ('-', [9, 4, 0, 8]),
    ('+', [9, 10, 7, 8]),
    ('+', [7, 11, 2, 1]),
    ('+', [12, 11, 7, 10]),
    ('+', [2, 11, 13, 6]),
    ('+', [13, 11, 12, 14]),
    ('+', [5, 6, 13, 15]),
    ('-', [13, 15, 16, 14]),
    ('+', [16, 14, 12, 17]),
    ('-', [12, 17, 9, 10]),
    ('-', [16, 4, 9, 17]),
    ('-', [5, 4, 16, 15]),
];

pub(super) const F16_BC2_A2D2: [Row; 16] = [
    ('+', [0, 1, 2, 3]),
    ('+', [3, 2, 4, 5]),
    ('+', [6, 4, 2, 1]),
    ('-', [7, 6, 4, 5]),
    ('+', [7, 6, 8, 9]),
    ('+', [1, 10, 8, 6]),
    ('+', [9, 8, 10, 11]),
    ('-', [0, 1, 10, 11]),
    ('-', [5, 12, 13, 7]),
    ('+', [9, 14, 13, 7]),
    ('+', [11, 15, 14, 9]),
    ('+', [12, 13, 14, 15]),
    ('-', [11, 15, 16, 0]),
    ('+', [3, 17, 16, 0]),
    ('+', [5, 12, 17, 3]),
    ('+', [15, 16, 17, 12]),
];

pub(super) const OCTA24_B3: [Row; 24] = [
    ('+', [0, 1, 2, 3]),
    ('+', [2, 1, 4, 5]),
    ('+', [4, 1, 0, 6]),
    ('-', [7, 8, 4, 5]),
    ('-', [4, 8, 9, 6]),
    ('-', [9, 8, 7, 10]),
    ('+', [9, 11, 12, 10]),
    ('+', [13, 11, 9, 6]),
    ('-', [13, 14, 0, 6]),
    ('-', [0, 14, 15, 3]),
    ('-', [15, 14, 13, 16]),
    ('+', [12, 11, 13, 16]),
    ('-', [12, 17, 18, 16]),
    ('+', [15, 19, 18, 16]),
    ('+', [20, 19, 15, 3]),
    ('-', [20, 21, 2, 3]),
    ('-', [2, 21, 22, 5]),
    ('+', [7, 23, 22, 5]),
    ('-', [24, 17, 12, 10]),
    ('+', [24, 23, 7, 10]),
    ('+', [22, 23, 24, 25]),
    ('-', [22, 21, 20, 25]),
    ('-', [18, 17, 24, 25]),
    ('+', [18, 19, 20, 25]),
];
