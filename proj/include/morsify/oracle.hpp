#pragma once

#include "morsify/morse.hpp"

namespace morsify {

struct OracleSample {
    long j = 0;
    Rational x0;
    std::vector<Rational> points;  // xi_i(x0), in the real order of the roots
    std::vector<Rational> values;  // F(xi_i)(x0)
    bool valid = false;            // no ties among points or values
};

struct OracleResult {
    Snake snake;
    Rational x0_used;
    long j_used = 0;
    int stabilization_count = 0;
    std::vector<OracleSample> samples;
};

struct OracleOptions {
    int consecutive = 3;
    int max_samples = 64;
};

// Independent recovery of the snake by exact evaluation: samples
// x0 = 2^(-jD) for j = 1, 2, ..., with D the lcm of the exponent
// denominators of the roots and their critical value series, sorts the
// exact critical points and values, and accepts once the observed snake
// has held for `consecutive` samples in a row and x0 is small enough that
// no critical-point or critical-value difference can change sign any
// more. Samples with ties are treated as "x0 not small enough". Never
// consults trees, integrated exponents, initial coefficients or
// integration tables. Throws no_stabilization_error after max_samples.
OracleResult numeric_snake(const BivarPoly& F, const RootSystem& rs,
                           const OracleOptions& options = {});

// True iff both permutations coincide.
bool cross_check(const Snake& theorem_a, const OracleResult& oracle);

}  // namespace morsify
