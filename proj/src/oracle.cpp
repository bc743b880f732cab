#include "morsify/oracle.hpp"

#include <algorithm>

namespace morsify {

namespace {

// Smallest j >= 1 such that at every x0 = 2^(-j'D), j' >= j, the sign of
// the difference series equals the sign of its initial term. Writing the
// series in u = x^(1/D) gives integer exponents m_0 < m_1 < ...; at
// u = 2^-j the k-th tail term is outweighed by a 1/K share of the initial
// term once j * (m_k - m_0) covers the coefficient ratio, measured in
// bits with a one-bit safety margin. Sign changes and ties are then
// impossible, so the observed snake is the asymptotic one.
long certified_sample(const PuiseuxPoly& diff, long d_lcm) {
    auto it = diff.terms().begin();
    const Rational initial_exp = it->first;
    const Rational initial = it->second.rational_value().abs();
    const long tail_terms = static_cast<long>(diff.terms().size()) - 1;
    if (tail_terms == 0) return 1;

    long j = 1;
    for (++it; it != diff.terms().end(); ++it) {
        Rational gap_r = (it->first - initial_exp) * Rational(d_lcm);
        mpz_class gap = gap_r.numerator();  // exact integer by choice of D
        Rational coeff = it->second.rational_value().abs();
        // need 2^(j*gap) > K * |c_k| / |c_0|
        mpz_class num = tail_terms * coeff.numerator() * initial.denominator();
        mpz_class den = initial.numerator() * coeff.denominator();
        long bits = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
                    static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) + 1;
        if (bits <= 0) continue;
        mpz_class needed = (mpz_class(bits) + gap - 1) / gap;
        if (!needed.fits_slong_p()) throw error("certification bound overflows");
        j = std::max(j, needed.get_si());
    }
    return j;
}

Snake snake_from_sample(const std::vector<Rational>& points, const std::vector<Rational>& values) {
    const int n = static_cast<int>(points.size());
    std::vector<int> by_point(n);
    for (int i = 0; i < n; ++i) by_point[i] = i;
    std::sort(by_point.begin(), by_point.end(),
              [&](int a, int b) { return points[a] < points[b]; });
    Snake snake;
    snake.target_ranks.assign(n, 0);
    for (int s = 0; s < n; ++s) {
        int root = by_point[s];
        int rank = 1;
        for (int k = 0; k < n; ++k)
            if (values[k] < values[root]) ++rank;
        snake.target_ranks[s] = rank;
    }
    return snake;
}

bool has_tie(std::vector<Rational> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) != v.end();
}

}  // namespace

OracleResult numeric_snake(const BivarPoly& F, const RootSystem& rs, const OracleOptions& options) {
    const auto& roots = rs.real_roots();
    const int n = static_cast<int>(roots.size());
    if (n < 2) throw error("the oracle needs at least two real roots");

    std::vector<PuiseuxPoly> deltas;
    deltas.reserve(n);
    for (const auto& xi : roots) deltas.push_back(F.compose(xi));

    mpz_class d_lcm(1);
    for (const auto& p : roots) {
        mpz_class pd = p.exponent_denominator_lcm();
        mpz_lcm(d_lcm.get_mpz_t(), d_lcm.get_mpz_t(), pd.get_mpz_t());
    }
    for (const auto& p : deltas) {
        mpz_class pd = p.exponent_denominator_lcm();
        mpz_lcm(d_lcm.get_mpz_t(), d_lcm.get_mpz_t(), pd.get_mpz_t());
    }
    if (!d_lcm.fits_slong_p()) throw error("exponent denominators too large to sample");
    const long D = d_lcm.get_si();

    // Below this sample index no point or value difference can change
    // sign or vanish, so the observed snake is the asymptotic one.
    long certified = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            PuiseuxPoly dv = deltas[j] - deltas[i];
            if (dv.is_zero())
                throw equal_discriminant_roots_error(
                    "critical value series " + std::to_string(i + 1) + " and " +
                    std::to_string(j + 1) + " coincide; no Morse data to recover");
            certified = std::max(certified, certified_sample(dv, D));
            certified = std::max(certified, certified_sample(roots[j] - roots[i], D));
        }

    OracleResult result;
    std::optional<Snake> previous;
    int consecutive = 0;
    for (long j = 1; j <= options.max_samples; ++j) {
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 2, static_cast<unsigned long>(j * D));
        Rational x0{mpq_class(mpz_class(1), den)};

        OracleSample sample;
        sample.j = j;
        sample.x0 = x0;
        for (int i = 0; i < n; ++i) {
            sample.points.push_back(roots[i].eval_exact(x0));
            sample.values.push_back(deltas[i].eval_exact(x0));
        }
        sample.valid = !has_tie(sample.points) && !has_tie(sample.values);

        if (!sample.valid) {
            consecutive = 0;
            previous.reset();
            result.samples.push_back(std::move(sample));
            continue;
        }
        Snake snake = snake_from_sample(sample.points, sample.values);
        consecutive = (previous && snake == *previous) ? consecutive + 1 : 1;
        previous = snake;
        result.samples.push_back(std::move(sample));

        if (consecutive >= options.consecutive && j >= certified) {
            result.snake = std::move(snake);
            result.x0_used = x0;
            result.j_used = j;
            result.stabilization_count = consecutive;
            return result;
        }
    }
    throw no_stabilization_error("no certified stable snake after " +
                                 std::to_string(options.max_samples) + " samples");
}

bool cross_check(const Snake& theorem_a, const OracleResult& oracle) {
    return theorem_a == oracle.snake;
}

}  // namespace morsify
