#pragma once

#include <optional>
#include <string>
#include <vector>

#include "partmult/engine.hpp"

namespace partmult {

/// Natural log of a positive big integer: bit length plus mantissa, good to
/// about 15 significant digits without ever converting the integer to a
/// (possibly overflowing) double.
double log_mpz(const mpz_class& z);

struct GrowthPoint {
    i64 n;
    double r;  // log p(n) / log n
};

/// Exponent sequence r(n) = log p(n)/log n for n >= 2 with p(n) >= 1.
/// Indices with p(n) = 0 are excluded and listed separately; n = 1 is never
/// included (log 1 = 0 denominator).
struct GrowthReport {
    std::vector<GrowthPoint> exponents;
    std::vector<double> running_sup;  // prefix maxima, aligned with exponents
    std::vector<double> running_inf;  // prefix minima, aligned with exponents
    std::vector<i64> zero_count_indices;
};

GrowthReport growth_exponents(const CountTable& t);

/// All n in [2, t.limit] with p(n) > n^k, exact comparison, ascending.
std::vector<i64> superpoly_witnesses(const CountTable& t, i64 k);

/// Both sides of the two counting inequalities from the growth lower-bound
/// argument, evaluated exactly at one x.
struct BoundsReport {
    i64 x;
    i64 a_count;            // A(x)
    i64 m_count;            // M(x)
    mpz_class upper_lhs;    // sum_{n<=x} p(n)
    mpz_class upper_rhs;    // (M(x)+1)^A(x)
    i64 lower_range;        // x^2 A(x)
    mpz_class lower_lhs;    // sum_{n<=x^2 A(x)} p(n)
    i64 argmax_n;           // least maximizer of p on [0, lower_range]
    mpz_class argmax_value;
};

BoundsReport bounds_report(const SetDescriptor& parts_set, const SetDescriptor& mults_set,
                           i64 x, const EngineOptions& opts = {});

struct WitnessRound {
    i64 x;
    i64 n;            // least argmax of p on [0, x^2 A(x)]
    mpz_class count;  // p(n)
};

struct IteratedSearchResult {
    std::vector<WitnessRound> rounds;
    bool truncated = false;   // budget ran out before the requested rounds
    std::string stop_reason;  // empty unless truncated
};

/// Finite-scale version of the inductive witness construction. Each round
/// starts from the least x whose x^{3k} strictly exceeds every previous
/// round's bound (M(X_i)+1)^{A(X_i)}, X_i = x_i^2 A(x_i), found by
/// doubling-then-bisection, then doubles x until the argmax witness is valid:
/// n >= 1, p(n) > n^k, and p strictly above the previous round. Witnesses are
/// therefore pairwise distinct with strictly increasing p. Budget exhaustion
/// yields the partial list flagged truncated.
IteratedSearchResult iterated_witness_search(const SetDescriptor& parts_set,
                                             const SetDescriptor& mults_set, i64 k,
                                             i64 rounds, const EngineOptions& opts = {});

struct SchurPoint {
    i64 n;
    mpq_class ratio;  // p(n) * (k-1)! * a_1...a_k / n^{k-1}, exact
};

/// Normalized ratio against the k-part asymptotic main term. Requires the
/// table to have been computed with parts = Finite(a_list), multiplicities =
/// naturals, |a_list| >= 2, gcd(a_list) = 1; throws std::invalid_argument
/// otherwise. Sequence over 1 <= n <= t.limit.
std::vector<SchurPoint> schur_ratio(const CountTable& t, const std::vector<i64>& a_list);

struct GcdCertificate {
    i64 excluded;
    i64 gcd;  // gcd of the truncated set without `excluded`
};

struct BeReport {
    bool satisfied;  // all certificates have gcd 1
    std::vector<GcdCertificate> certificates;
};

/// Checks gcd(A \ {a}) = 1 for every a <= bound. Truncation can only
/// overestimate gcds, so `satisfied` is definitive while a false verdict is
/// provisional.
BeReport be_condition(const SetDescriptor& parts_set, i64 bound);

/// Least n in [from, t.limit-1] violating monotonicity: p(n+1) <= p(n) in
/// strict mode, p(n+1) < p(n) in weak mode. nullopt if none.
std::optional<i64> monotonicity_scan(const CountTable& t, i64 from, bool strict);

}  // namespace partmult
