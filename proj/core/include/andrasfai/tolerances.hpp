#pragma once

namespace andrasfai {

// Absolute tolerances. Adequate for n up to ~10^4: closed-form rounding sits near 1e-15 and the
// smallest eigenvalue gap of And(k), k <= 200, is about 3.7e-5.
struct Tolerances {
    double sym = 1e-9;      // palindrome |x_l - x_{n-l}|, imaginary residue, witness values
    double cluster = 1e-8;  // equality of eigenvalues when grouping into classes
    double match = 1e-8;    // closed form vs. oracle
};

}  // namespace andrasfai
