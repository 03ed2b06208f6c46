#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "partmult/sets.hpp"

namespace partmult::kernels {

/// Coefficient-vector passes used by the counting engine. Every pass is
/// exact over arbitrary-precision integers, so the serial reference and the
/// OpenMP variants produce bit-identical tables; the unit tests and the
/// benchmark target rely on that.
///
/// All offsets handed to multiply_sparse must be positive multiples of
/// `stride` (the current part), sorted ascending. The stride invariant is
/// what makes the blocked parallel schedule race-free: coefficient n only
/// reads coefficients in strictly lower stride-aligned blocks.

namespace serial {

/// In place c *= (1 + sum_i q^add[i] - sum_j q^sub[j]), truncated at
/// degree c.size()-1. Single descending pass; reads below the write index
/// always see pre-pass values.
void multiply_sparse(std::vector<mpz_class>& c, i64 stride,
                     std::span<const i64> add_offsets,
                     std::span<const i64> sub_offsets);

/// In place c /= (1 - q^period): the ascending recurrence
/// c[n] += c[n-period]. Exact over integers.
void divide_one_minus_power(std::vector<mpz_class>& c, i64 period);

/// dst[n] = src[n-shift] for n >= shift, else 0.
void assign_shifted(std::vector<mpz_class>& dst, const std::vector<mpz_class>& src,
                    i64 shift);

/// dst[n] += src[n-shift] for n >= shift.
void add_shifted(std::vector<mpz_class>& dst, const std::vector<mpz_class>& src,
                 i64 shift);

}  // namespace serial

namespace omp {

/// Same contracts as the serial namespace. multiply_sparse walks
/// stride-aligned blocks top-down and parallelizes inside each block;
/// divide_one_minus_power splits into the `period` independent residue
/// chains. Both fall back to the serial pass when only one thread is
/// available or the work is too small to amortize the fork.
void multiply_sparse(std::vector<mpz_class>& c, i64 stride,
                     std::span<const i64> add_offsets,
                     std::span<const i64> sub_offsets);
void divide_one_minus_power(std::vector<mpz_class>& c, i64 period);
void assign_shifted(std::vector<mpz_class>& dst, const std::vector<mpz_class>& src,
                    i64 shift);
void add_shifted(std::vector<mpz_class>& dst, const std::vector<mpz_class>& src,
                 i64 shift);

}  // namespace omp

}  // namespace partmult::kernels
