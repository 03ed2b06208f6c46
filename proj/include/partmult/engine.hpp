#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "partmult/sets.hpp"

namespace partmult {

enum class EnginePath { generic, ap_optimized, oracle };
enum class KernelMode { serial, openmp };

/// Thrown when the projected work of a table build exceeds the configured
/// ceiling. The generic path charges
/// sum over parts a <= N of N * |{m in M : m*a <= N}| elementary
/// big-integer additions; the AP path charges its pass lengths.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by the AP-optimized path when the multiplicity set cannot be
/// written as a finite disjoint union of arithmetic progressions plus a
/// finite set. Callers fall back to count_generic.
class UnsupportedDecomposition : public std::runtime_error {
public:
    explicit UnsupportedDecomposition(const std::string& what)
        : std::runtime_error(what) {}
};

struct EngineOptions {
    // elementary big-integer additions; fail fast instead of hanging
    long long work_ceiling = 1'000'000'000;
    KernelMode kernel = KernelMode::openmp;
};

/// Exact values p_{A,M}(0..limit) plus provenance.
struct CountTable {
    std::vector<mpz_class> values;  // index n = 0..limit
    SetDescriptor parts;
    SetDescriptor mults;
    i64 limit;
    EnginePath path;

    const mpz_class& at(i64 n) const { return values[static_cast<size_t>(n)]; }
};

/// One partition: part -> multiplicity, finitely many terms.
struct PartitionWitness {
    std::map<i64, i64> terms;

    bool operator==(const PartitionWitness&) const = default;
};

struct EnumerationResult {
    std::vector<PartitionWitness> witnesses;
    bool truncated = false;  // cap was hit; a flagged success, not an error
};

/// p_{A,M}(0..N) by the truncated product of per-part polynomials
/// 1 + sum_{m in M, m*a <= N} q^{m*a}. Truncation is sound: parts > N and
/// multiplicity terms with m*a > N cannot occur in a partition of n <= N.
CountTable count_generic(const SetDescriptor& parts_set, const SetDescriptor& mults_set,
                         i64 n_max, const EngineOptions& opts = {});

/// Same values as count_generic, computed per part and per progression
/// {c + j*d} of M as the rational factor q^{c*a}/(1 - q^{d*a}): one sparse
/// numerator multiplication plus one division recurrence, O(N) each.
/// Throws UnsupportedDecomposition when M has no AP decomposition.
CountTable count_ap_optimized(const SetDescriptor& parts_set, const SetDescriptor& mults_set,
                              i64 n_max, const EngineOptions& opts = {});

/// AP path when M supports it, generic otherwise.
CountTable count_auto(const SetDescriptor& parts_set, const SetDescriptor& mults_set,
                      i64 n_max, const EngineOptions& opts = {});

/// Brute-force oracle: all partitions of n with parts in A and
/// multiplicities in M, at most cap of them. Deterministic order: the
/// recursion takes parts in decreasing order and, within a part, multiplicity
/// 0 first and then the admissible multiplicities in increasing order.
EnumerationResult enumerate_partitions(const SetDescriptor& parts_set,
                                       const SetDescriptor& mults_set, i64 n, i64 cap);

/// Number of partitions of n by the same recursion as enumerate_partitions,
/// without materializing witnesses. Test oracle for the counting paths.
mpz_class count_by_enumeration(const SetDescriptor& parts_set,
                               const SetDescriptor& mults_set, i64 n);

/// Table built entirely from the enumeration oracle (path = oracle).
CountTable count_oracle(const SetDescriptor& parts_set, const SetDescriptor& mults_set,
                        i64 n_max);

/// True iff every part is in A, every multiplicity is in M, and the
/// weighted sum equals n.
bool verify_witness(const PartitionWitness& w, const SetDescriptor& parts_set,
                    const SetDescriptor& mults_set, i64 n);

/// Finite disjoint AP decomposition of a multiplicity set: progressions
/// {first + j*step : j >= 0} plus leftover finite elements not covered by
/// any progression.
struct Progression {
    i64 first;
    i64 step;
    bool operator==(const Progression&) const = default;
};

struct APDecomposition {
    std::vector<Progression> progressions;
    std::vector<i64> finite_elements;
};

/// Throws UnsupportedDecomposition for kinds with no AP structure
/// (geometric, factorials, self_powers) or for unions whose progressions
/// overlap.
APDecomposition decompose_multiplicities(const SetDescriptor& mults_set);

}  // namespace partmult
