#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "partmult/sets.hpp"

namespace partmult {

/// Terms n_1, ..., n_K with n_1 = 1 and n_{k+1} > 2 n_k^k. Drives the
/// staircase function f below; the minimal rule keeps terms just above the
/// threshold so several breakpoints stay exactly computable.
struct StaircaseSequence {
    std::vector<mpz_class> terms;

    i64 size() const { return static_cast<i64>(terms.size()); }
    const mpz_class& term(i64 k) const { return terms[static_cast<size_t>(k - 1)]; }  // 1-based
};

/// Minimal rule: n_{k+1} = 2 n_k^k + 1, the least admissible value.
StaircaseSequence build_sequence_minimal(i64 length);

/// Custom terms are validated against the invariants; the exception message
/// names the first violated index.
StaircaseSequence build_sequence_custom(std::vector<mpz_class> terms);

/// f(n) = n_k^k + (n - n_k) on the bracket n_k <= n < n_{k+1}. Defined on
/// [n_1, n_K); out-of-range arguments throw std::domain_error (extend the
/// sequence instead of extrapolating).
mpz_class f_eval(const mpz_class& n, const StaircaseSequence& s);

/// The positivity/uniqueness set pair: parts {a^i : i >= 0}, multiplicities
/// {m >= 1 : a does not divide m}. Requires a >= 2.
std::pair<SetDescriptor, SetDescriptor> thm_am_pair(i64 a);

}  // namespace partmult
