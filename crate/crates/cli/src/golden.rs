//! Published reference values used by `reproduce`.

/// `f_{0,0}(n, k)` for `k = 1..=8` (rows) and `n = 0, 3, ..., 27` (columns).
pub const ORIGIN_COUNTS: [[u64; 10]; 8] = [
    [1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    [1, 1, 5, 21, 89, 377, 1597, 6765, 28657, 121393],
    [1, 1, 5, 42, 341, 2731, 21846, 174763, 1398101, 11184810],
    [1, 1, 5, 42, 462, 5278, 60181, 683962, 7763097, 88079511],
    [1, 1, 5, 42, 462, 6006, 83028, 1166677, 16440171, 231612211],
    [1, 1, 5, 42, 462, 6006, 87516, 1357569, 21669957, 349920000],
    [1, 1, 5, 42, 462, 6006, 87516, 1385670, 23193775, 401389561],
    [1, 1, 5, 42, 462, 6006, 87516, 1385670, 23371634, 413180625],
];

/// `det F_k` for `k = 1..=8`.
pub const DETERMINANTS: [&str; 8] = [
    "1 - 1*t^3",
    "1 - 4*t^3 - 1*t^6",
    "1 - 9*t^3 + 9*t^6 - 8*t^9",
    "1 - 16*t^3 + 59*t^6 - 67*t^9 - 37*t^12 + 8*t^15",
    "1 - 25*t^3 + 191*t^6 - 559*t^9 + 531*t^12 - 507*t^15 + 341*t^18 + 27*t^21",
    "1 - 36*t^3 + 459*t^6 - 2655*t^9 + 7290*t^12 - 9801*t^15 + 3429*t^18 + 6075*t^21 \
     - 1458*t^24 + 729*t^27",
    "1 - 49*t^3 + 929*t^6 - 8865*t^9 + 46315*t^12 - 136058*t^15 + 219202*t^18 \
     - 198802*t^21 + 189535*t^24 - 152085*t^27 + 62341*t^30 + 20851*t^33 - 1331*t^36",
    "1 - 64*t^3 + 1679*t^6 - 23699*t^9 + 198636*t^12 - 1031272*t^15 + 3360456*t^18 \
     - 6855112*t^21 + 8542281*t^24 - 5062167*t^27 - 1959023*t^30 + 4912958*t^33 \
     - 1335971*t^36 + 1092507*t^39 - 375746*t^42 - 12167*t^45",
];

/// `(k, (i, j), numerator, denominator)` of closed-form generating functions.
pub const GENERATING_FUNCTIONS: [(u32, (u32, u32), &str, &str); 11] = [
    (1, (0, 0), "1", "1 - t^3"),
    (1, (0, 1), "t", "1 - t^3"),
    (1, (1, 0), "t^2", "1 - t^3"),
    (2, (0, 0), "1 - 3*t^3", "1 - 4*t^3 - t^6"),
    (2, (0, 1), "t - t^4", "1 - 4*t^3 - t^6"),
    (2, (0, 2), "t^2 - t^5", "1 - 4*t^3 - t^6"),
    // the displayed t(1 + t^3) has no walk of length 1 to (1,0); this is the
    // entry t*z of the published inverse matrix
    (2, (1, 0), "t^2 + t^5", "1 - 4*t^3 - t^6"),
    (2, (1, 1), "2*t^3", "1 - 4*t^3 - t^6"),
    (2, (2, 0), "2*t^4", "1 - 4*t^3 - t^6"),
    (3, (0, 0), "1 - 8*t^3 + 5*t^6 - 2*t^9", "1 - 9*t^3 + 9*t^6 - 8*t^9"),
    (
        4,
        (0, 0),
        "1 - 15*t^3 + 48*t^6 - 46*t^9 - 19*t^12",
        "1 - 16*t^3 + 59*t^6 - 67*t^9 - 37*t^12 + 8*t^15",
    ),
];
