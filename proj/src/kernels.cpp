#include "partmult/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cassert>

namespace partmult::kernels {

namespace serial {

void multiply_sparse(std::vector<mpz_class>& c, i64 stride,
                     std::span<const i64> add_offsets,
                     std::span<const i64> sub_offsets) {
    const i64 n_max = static_cast<i64>(c.size()) - 1;
    i64 lo = n_max + 1;
    if (!add_offsets.empty()) lo = std::min(lo, add_offsets.front());
    if (!sub_offsets.empty()) lo = std::min(lo, sub_offsets.front());
    (void)stride;
    for (i64 n = n_max; n >= lo; --n) {
        for (i64 off : add_offsets) {
            if (off > n) break;
            c[n] += c[n - off];
        }
        for (i64 off : sub_offsets) {
            if (off > n) break;
            c[n] -= c[n - off];
        }
    }
}

void divide_one_minus_power(std::vector<mpz_class>& c, i64 period) {
    const i64 n_max = static_cast<i64>(c.size()) - 1;
    for (i64 n = period; n <= n_max; ++n) c[n] += c[n - period];
}

void assign_shifted(std::vector<mpz_class>& dst, const std::vector<mpz_class>& src,
                    i64 shift) {
    const i64 n_max = static_cast<i64>(dst.size()) - 1;
    for (i64 n = n_max; n >= shift; --n) dst[n] = src[n - shift];
    for (i64 n = std::min(shift, n_max + 1) - 1; n >= 0; --n) dst[n] = 0;
}

void add_shifted(std::vector<mpz_class>& dst, const std::vector<mpz_class>& src,
                 i64 shift) {
    const i64 n_max = static_cast<i64>(dst.size()) - 1;
    for (i64 n = shift; n <= n_max; ++n) dst[n] += src[n - shift];
}

}  // namespace serial

namespace omp {

namespace {

// below these sizes the fork/join cost dwarfs the pass itself
constexpr i64 kMinBlockWidth = 512;
constexpr i64 kMinChainCount = 2;
constexpr i64 kMinSpanLength = 4096;

bool single_threaded() { return omp_get_max_threads() <= 1; }

}  // namespace

void multiply_sparse(std::vector<mpz_class>& c, i64 stride,
                     std::span<const i64> add_offsets,
                     std::span<const i64> sub_offsets) {
    if (single_threaded() || stride < kMinBlockWidth) {
        serial::multiply_sparse(c, stride, add_offsets, sub_offsets);
        return;
    }
    const i64 n_max = static_cast<i64>(c.size()) - 1;
    // Offsets are multiples of stride, so index n in block t only reads
    // blocks strictly below t. Blocks are visited top-down sequentially and
    // each block's updates are independent of one another.
    for (i64 block_lo = (n_max / stride) * stride; block_lo >= 0; block_lo -= stride) {
        const i64 block_hi = std::min(block_lo + stride - 1, n_max);
#pragma omp parallel for schedule(static)
        for (i64 n = block_lo; n <= block_hi; ++n) {
            for (i64 off : add_offsets) {
                if (off > n) break;
                c[n] += c[n - off];
            }
            for (i64 off : sub_offsets) {
                if (off > n) break;
                c[n] -= c[n - off];
            }
        }
    }
}

void divide_one_minus_power(std::vector<mpz_class>& c, i64 period) {
    const i64 n_max = static_cast<i64>(c.size()) - 1;
    if (single_threaded() || period < kMinChainCount || n_max < kMinSpanLength) {
        serial::divide_one_minus_power(c, period);
        return;
    }
    // residue chains r, r+period, r+2*period, ... are independent recurrences
#pragma omp parallel for schedule(static)
    for (i64 r = 0; r < period; ++r)
        for (i64 n = r + period; n <= n_max; n += period) c[n] += c[n - period];
}

void assign_shifted(std::vector<mpz_class>& dst, const std::vector<mpz_class>& src,
                    i64 shift) {
    const i64 n_max = static_cast<i64>(dst.size()) - 1;
    if (single_threaded() || n_max < kMinSpanLength) {
        serial::assign_shifted(dst, src, shift);
        return;
    }
#pragma omp parallel for schedule(static)
    for (i64 n = 0; n <= n_max; ++n) {
        if (n >= shift)
            dst[n] = src[n - shift];
        else
            dst[n] = 0;
    }
}

void add_shifted(std::vector<mpz_class>& dst, const std::vector<mpz_class>& src,
                 i64 shift) {
    const i64 n_max = static_cast<i64>(dst.size()) - 1;
    if (single_threaded() || n_max < kMinSpanLength) {
        serial::add_shifted(dst, src, shift);
        return;
    }
#pragma omp parallel for schedule(static)
    for (i64 n = shift; n <= n_max; ++n) dst[n] += src[n - shift];
}

}  // namespace omp

}  // namespace partmult::kernels
