#include "partmult/analysis.hpp"

#include <omp.h>

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace partmult {

namespace {

using u128 = unsigned __int128;

// beyond this x the table alone (>= x^2 entries) dwarfs any sane ceiling
constexpr i64 kMaxSearchX = i64{2} << 30;

mpz_class pow_i64(i64 base, i64 exp) {
    assert(base >= 0 && exp >= 0);
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                  static_cast<unsigned long>(exp));
    return r;
}

struct ArgMax {
    i64 n = 0;
    mpz_class value;
};

// least maximizer of p on [0, hi]
ArgMax argmax_prefix(const CountTable& t, i64 hi) {
    ArgMax best{0, t.at(0)};
    for (i64 n = 1; n <= hi; ++n)
        if (t.at(n) > best.value) best = {n, t.at(n)};
    return best;
}

mpz_class prefix_sum(const CountTable& t, i64 hi) {
    mpz_class s = 0;
    for (i64 n = 0; n <= hi; ++n) s += t.at(n);
    return s;
}

}  // namespace

double log_mpz(const mpz_class& z) {
    assert(z > 0);
    signed long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, z.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exponent) * M_LN2;
}

GrowthReport growth_exponents(const CountTable& t) {
    if (t.limit < 2)
        throw std::invalid_argument("growth_exponents: table must reach n >= 2");
    const i64 n_max = t.limit;
    constexpr double kUnset = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> raw(static_cast<size_t>(n_max) + 1, kUnset);

#pragma omp parallel for schedule(static) if (n_max >= 4096 && omp_get_max_threads() > 1)
    for (i64 n = 2; n <= n_max; ++n)
        if (t.at(n) > 0)
            raw[static_cast<size_t>(n)] = log_mpz(t.at(n)) / std::log(static_cast<double>(n));

    GrowthReport report;
    double sup = -std::numeric_limits<double>::infinity();
    double inf = std::numeric_limits<double>::infinity();
    for (i64 n = 2; n <= n_max; ++n) {
        const double r = raw[static_cast<size_t>(n)];
        if (std::isnan(r)) {
            report.zero_count_indices.push_back(n);
            continue;
        }
        sup = std::max(sup, r);
        inf = std::min(inf, r);
        report.exponents.push_back({n, r});
        report.running_sup.push_back(sup);
        report.running_inf.push_back(inf);
    }
    return report;
}

std::vector<i64> superpoly_witnesses(const CountTable& t, i64 k) {
    if (k < 1) throw std::invalid_argument("superpoly_witnesses: k must be >= 1");
    std::vector<i64> out;
    mpz_class nk;
    for (i64 n = 2; n <= t.limit; ++n) {
        mpz_ui_pow_ui(nk.get_mpz_t(), static_cast<unsigned long>(n),
                      static_cast<unsigned long>(k));
        if (t.at(n) > nk) out.push_back(n);
    }
    return out;
}

BoundsReport bounds_report(const SetDescriptor& parts_set, const SetDescriptor& mults_set,
                           i64 x, const EngineOptions& opts) {
    if (x < 1) throw std::invalid_argument("bounds_report: x must be >= 1");
    BoundsReport rep;
    rep.x = x;
    rep.a_count = parts_set.count_up_to(x);
    rep.m_count = mults_set.count_up_to(x);

    const u128 range = static_cast<u128>(x) * static_cast<u128>(x) *
                       static_cast<u128>(rep.a_count);
    if (range > static_cast<u128>(std::numeric_limits<i64>::max()))
        throw BudgetError("bounds_report: x^2 A(x) overflows the index range");
    rep.lower_range = static_cast<i64>(range);

    const CountTable t =
        count_auto(parts_set, mults_set, std::max(x, rep.lower_range), opts);
    rep.upper_lhs = prefix_sum(t, x);
    rep.upper_rhs = pow_i64(rep.m_count + 1, rep.a_count);
    rep.lower_lhs = prefix_sum(t, rep.lower_range);
    const ArgMax am = argmax_prefix(t, rep.lower_range);
    rep.argmax_n = am.n;
    rep.argmax_value = am.value;
    return rep;
}

namespace {

// least x >= 1 with x^{3k} strictly above the threshold, by doubling then
// bisection; the predicate is monotone in x
i64 minimal_x_exceeding(const mpz_class& threshold, i64 three_k) {
    const auto exceeds = [&](i64 x) { return pow_i64(x, three_k) > threshold; };
    i64 hi = 1;
    while (!exceeds(hi)) {
        if (hi > kMaxSearchX) return hi;  // caller's feasibility guard reports
        hi *= 2;
    }
    i64 lo = hi / 2;  // hi passes; lo (or 0) fails
    while (lo + 1 < hi) {
        const i64 mid = lo + (hi - lo) / 2;
        (exceeds(mid) ? hi : lo) = mid;
    }
    return hi;
}

}  // namespace

IteratedSearchResult iterated_witness_search(const SetDescriptor& parts_set,
                                             const SetDescriptor& mults_set, i64 k,
                                             i64 rounds, const EngineOptions& opts) {
    if (k < 1) throw std::invalid_argument("iterated_witness_search: k must be >= 1");
    if (rounds < 1)
        throw std::invalid_argument("iterated_witness_search: rounds must be >= 1");

    IteratedSearchResult result;
    mpz_class threshold = 0;  // max of previous rounds' bounds
    mpz_class n_pow_k;

    for (i64 round = 0; round < rounds; ++round) {
        i64 x = minimal_x_exceeding(threshold, 3 * k);
        for (;;) {
            if (x > kMaxSearchX) {
                result.truncated = true;
                result.stop_reason = "x escalated beyond any feasible table size";
                return result;
            }
            const u128 range =
                static_cast<u128>(x) * static_cast<u128>(x) *
                static_cast<u128>(parts_set.count_up_to(x));
            if (range > static_cast<u128>(std::numeric_limits<i64>::max())) {
                result.truncated = true;
                result.stop_reason = "x^2 A(x) overflows the index range";
                return result;
            }
            const i64 table_limit = std::max<i64>(1, static_cast<i64>(range));
            CountTable t{{}, parts_set, mults_set, 0, EnginePath::generic};
            try {
                t = count_auto(parts_set, mults_set, table_limit, opts);
            } catch (const BudgetError& e) {
                result.truncated = true;
                result.stop_reason = e.what();
                return result;
            }
            const ArgMax am = argmax_prefix(t, table_limit);
            bool valid = am.n >= 1;
            if (valid) {
                mpz_ui_pow_ui(n_pow_k.get_mpz_t(), static_cast<unsigned long>(am.n),
                              static_cast<unsigned long>(k));
                valid = am.value > n_pow_k;
            }
            if (valid && !result.rounds.empty())
                valid = am.value > result.rounds.back().count;
            if (valid) {
                result.rounds.push_back({x, am.n, am.value});
                const mpz_class bound = pow_i64(mults_set.count_up_to(table_limit) + 1,
                                                parts_set.count_up_to(table_limit));
                threshold = std::max(threshold, bound);
                break;
            }
            x *= 2;
        }
    }
    return result;
}

std::vector<SchurPoint> schur_ratio(const CountTable& t, const std::vector<i64>& a_list) {
    if (a_list.size() < 2)
        throw std::invalid_argument("schur_ratio: need at least two parts");
    if (!(t.parts == SetDescriptor::finite(a_list)))
        throw std::invalid_argument("schur_ratio: table parts do not match a_list");
    if (!(t.mults == SetDescriptor::naturals()))
        throw std::invalid_argument("schur_ratio: table multiplicities must be naturals");
    i64 g = 0;
    for (i64 a : a_list) g = std::gcd(g, a);
    if (g != 1)
        throw std::invalid_argument("schur_ratio: parts must be relatively prime");

    const i64 k = static_cast<i64>(a_list.size());
    mpz_class factor = 1;
    for (i64 i = 2; i < k; ++i) factor *= i;  // (k-1)!
    for (i64 a : a_list) factor *= a;

    std::vector<SchurPoint> out;
    out.reserve(static_cast<size_t>(t.limit));
    for (i64 n = 1; n <= t.limit; ++n) {
        mpq_class ratio(t.at(n) * factor, pow_i64(n, k - 1));
        ratio.canonicalize();
        out.push_back({n, std::move(ratio)});
    }
    return out;
}

BeReport be_condition(const SetDescriptor& parts_set, i64 bound) {
    const std::vector<i64> elems = parts_set.enumerate_up_to(bound);
    if (elems.size() < 2)
        throw std::domain_error("be_condition: need at least two elements <= bound");
    BeReport rep;
    rep.satisfied = true;
    for (i64 a : elems) {
        const i64 g = gcd_without(parts_set, a, bound);
        rep.certificates.push_back({a, g});
        if (g != 1) rep.satisfied = false;
    }
    return rep;
}

std::optional<i64> monotonicity_scan(const CountTable& t, i64 from, bool strict) {
    if (from < 0 || from >= t.limit)
        throw std::invalid_argument("monotonicity_scan: from must lie in [0, limit)");
    for (i64 n = from; n < t.limit; ++n) {
        if (strict ? t.at(n + 1) <= t.at(n) : t.at(n + 1) < t.at(n)) return n;
    }
    return std::nullopt;
}

}  // namespace partmult
