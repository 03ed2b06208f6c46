#include "partmult/engine.hpp"

#include <algorithm>
#include <numeric>
#include <span>
#include <sstream>

#include "partmult/kernels.hpp"

namespace partmult {

namespace {

using u128 = unsigned __int128;

void check_ceiling(u128 work, const EngineOptions& opts, const char* path) {
    if (work > static_cast<u128>(opts.work_ceiling)) {
        std::ostringstream os;
        os << path << ": projected work " << static_cast<double>(work)
           << " elementary big-integer additions exceeds ceiling " << opts.work_ceiling;
        throw BudgetError(os.str());
    }
}

void multiply_sparse(KernelMode mode, std::vector<mpz_class>& c, i64 stride,
                     std::span<const i64> adds, std::span<const i64> subs) {
    if (mode == KernelMode::openmp)
        kernels::omp::multiply_sparse(c, stride, adds, subs);
    else
        kernels::serial::multiply_sparse(c, stride, adds, subs);
}

void divide_one_minus_power(KernelMode mode, std::vector<mpz_class>& c, i64 period) {
    if (mode == KernelMode::openmp)
        kernels::omp::divide_one_minus_power(c, period);
    else
        kernels::serial::divide_one_minus_power(c, period);
}

void assign_shifted(KernelMode mode, std::vector<mpz_class>& dst,
                    const std::vector<mpz_class>& src, i64 shift) {
    if (mode == KernelMode::openmp)
        kernels::omp::assign_shifted(dst, src, shift);
    else
        kernels::serial::assign_shifted(dst, src, shift);
}

void add_shifted(KernelMode mode, std::vector<mpz_class>& dst,
                 const std::vector<mpz_class>& src, i64 shift) {
    if (mode == KernelMode::openmp)
        kernels::omp::add_shifted(dst, src, shift);
    else
        kernels::serial::add_shifted(dst, src, shift);
}

void collect_progressions(const SetDescriptor& m, APDecomposition& out) {
    switch (m.kind()) {
        case SetDescriptor::Kind::naturals:
            out.progressions.push_back({1, 1});
            break;
        case SetDescriptor::Kind::arithmetic:
            out.progressions.push_back({m.first(), m.step()});
            break;
        case SetDescriptor::Kind::not_divisible:
            for (i64 r = 1; r < m.modulus(); ++r)
                out.progressions.push_back({r, m.modulus()});
            break;
        case SetDescriptor::Kind::finite:
            out.finite_elements.insert(out.finite_elements.end(), m.elements().begin(),
                                       m.elements().end());
            break;
        case SetDescriptor::Kind::union_set:
            collect_progressions(m.left(), out);
            collect_progressions(m.right(), out);
            break;
        default:
            throw UnsupportedDecomposition(
                "multiplicity set " + m.describe() +
                " has no arithmetic-progression decomposition; use count_generic");
    }
}

bool progressions_intersect(const Progression& p, const Progression& q) {
    // {p.first + j p.step} and {q.first + j q.step} share an element iff the
    // congruences are compatible mod gcd of the steps (CRT); both rays are
    // unbounded above, so compatibility implies a common element.
    const i64 g = std::gcd(p.step, q.step);
    return (p.first - q.first) % g == 0;
}

bool in_progression(i64 v, const Progression& p) {
    return v >= p.first && (v - p.first) % p.step == 0;
}

}  // namespace

APDecomposition decompose_multiplicities(const SetDescriptor& mults_set) {
    APDecomposition d;
    collect_progressions(mults_set, d);
    std::sort(d.progressions.begin(), d.progressions.end(),
              [](const Progression& a, const Progression& b) {
                  return a.first != b.first ? a.first < b.first : a.step < b.step;
              });
    for (size_t i = 0; i < d.progressions.size(); ++i)
        for (size_t j = i + 1; j < d.progressions.size(); ++j)
            if (progressions_intersect(d.progressions[i], d.progressions[j]))
                throw UnsupportedDecomposition(
                    "multiplicity set " + mults_set.describe() +
                    " decomposes into overlapping progressions; use count_generic");
    // union semantics deduplicate, so finite elements already covered by a
    // progression are dropped rather than double counted
    std::sort(d.finite_elements.begin(), d.finite_elements.end());
    d.finite_elements.erase(std::unique(d.finite_elements.begin(), d.finite_elements.end()),
                            d.finite_elements.end());
    std::erase_if(d.finite_elements, [&](i64 v) {
        return std::any_of(d.progressions.begin(), d.progressions.end(),
                           [&](const Progression& p) { return in_progression(v, p); });
    });
    return d;
}

CountTable count_generic(const SetDescriptor& parts_set, const SetDescriptor& mults_set,
                         i64 n_max, const EngineOptions& opts) {
    if (n_max < 0) throw std::invalid_argument("count_generic: n_max must be >= 0");

    // projected work, with early exit so that infeasible dense part sets are
    // rejected without walking all of them
    u128 work = 0;
    const u128 ceiling = static_cast<u128>(opts.work_ceiling);
    parts_set.for_each_up_to(n_max, [&](i64 a) {
        work += static_cast<u128>(n_max) *
                static_cast<u128>(mults_set.count_up_to(n_max / a));
        return work <= ceiling;
    });
    check_ceiling(work, opts, "count_generic");

    std::vector<mpz_class> c(static_cast<size_t>(n_max) + 1);
    c[0] = 1;
    std::vector<i64> offsets;
    parts_set.for_each_up_to(n_max, [&](i64 a) {
        const std::vector<i64> ms = mults_set.enumerate_up_to(n_max / a);
        if (!ms.empty()) {
            offsets.clear();
            for (i64 m : ms) offsets.push_back(m * a);
            multiply_sparse(opts.kernel, c, a, offsets, {});
        }
        return true;
    });
    return {std::move(c), parts_set, mults_set, n_max, EnginePath::generic};
}

CountTable count_ap_optimized(const SetDescriptor& parts_set, const SetDescriptor& mults_set,
                              i64 n_max, const EngineOptions& opts) {
    if (n_max < 0) throw std::invalid_argument("count_ap_optimized: n_max must be >= 0");
    const APDecomposition decomp = decompose_multiplicities(mults_set);
    const bool fast = decomp.progressions.size() == 1 && decomp.finite_elements.empty();

    u128 work = 0;
    const u128 ceiling = static_cast<u128>(opts.work_ceiling);
    parts_set.for_each_up_to(n_max, [&](i64 a) {
        for (const Progression& p : decomp.progressions) {
            if (p.first > n_max / a) continue;
            work += static_cast<u128>(n_max + 1) * (fast ? 2 : 3);
        }
        for (i64 m : decomp.finite_elements)
            if (m <= n_max / a) work += static_cast<u128>(n_max + 1 - m * a);
        if (!fast) work += static_cast<u128>(n_max + 1);
        return work <= ceiling;
    });
    check_ceiling(work, opts, "count_ap_optimized");

    std::vector<mpz_class> c(static_cast<size_t>(n_max) + 1);
    c[0] = 1;

    if (fast) {
        // factor per part a: 1 + q^{ca}/(1-q^{da}) = (1 + q^{ca} - q^{da})/(1-q^{da});
        // dividing first keeps both passes in place with no temporaries.
        // first == step collapses the numerator to 1 (the Euler update).
        const Progression p = decomp.progressions[0];
        parts_set.for_each_up_to(n_max, [&](i64 a) {
            if (p.first > n_max / a) return true;  // smallest term already beyond N
            const i64 ca = p.first * a;
            const bool has_da = p.step <= n_max / a;
            const i64 da = has_da ? p.step * a : 0;
            if (has_da) divide_one_minus_power(opts.kernel, c, da);
            if (p.first != p.step) {
                const i64 adds[] = {ca};
                const i64 subs[] = {da};
                multiply_sparse(opts.kernel, c, a, adds,
                                has_da ? std::span<const i64>(subs)
                                       : std::span<const i64>());
            }
            return true;
        });
    } else {
        // general factor 1 + sum_j q^{c_j a}/(1-q^{d_j a}) + sum_m q^{ma}:
        // build each progression's contribution from the unmodified series
        // into an accumulator, then fold the accumulator in.
        std::vector<mpz_class> acc(static_cast<size_t>(n_max) + 1);
        std::vector<mpz_class> tmp(static_cast<size_t>(n_max) + 1);
        parts_set.for_each_up_to(n_max, [&](i64 a) {
            bool any = false;
            for (const Progression& p : decomp.progressions) {
                if (p.first > n_max / a) continue;  // whole progression beyond N
                std::vector<mpz_class>& target = any ? tmp : acc;
                assign_shifted(opts.kernel, target, c, p.first * a);
                if (p.step <= n_max / a)
                    divide_one_minus_power(opts.kernel, target, p.step * a);
                if (any) add_shifted(opts.kernel, acc, tmp, 0);
                any = true;
            }
            for (i64 m : decomp.finite_elements) {
                if (m > n_max / a) continue;
                if (any) {
                    add_shifted(opts.kernel, acc, c, m * a);
                } else {
                    assign_shifted(opts.kernel, acc, c, m * a);
                    any = true;
                }
            }
            if (any) add_shifted(opts.kernel, c, acc, 0);
            return true;
        });
    }
    return {std::move(c), parts_set, mults_set, n_max, EnginePath::ap_optimized};
}

CountTable count_auto(const SetDescriptor& parts_set, const SetDescriptor& mults_set,
                      i64 n_max, const EngineOptions& opts) {
    try {
        return count_ap_optimized(parts_set, mults_set, n_max, opts);
    } catch (const UnsupportedDecomposition&) {
        return count_generic(parts_set, mults_set, n_max, opts);
    }
}

namespace {

// Depth-first enumeration over parts in decreasing order; per part the
// zero multiplicity is explored first, then admissible multiplicities in
// increasing order. This fixes the emission order promised by the API.
class OracleRecursion {
public:
    OracleRecursion(std::span<const i64> parts, std::span<const i64> mults, i64 cap,
                    std::vector<PartitionWitness>* out)
        : parts_(parts), mults_(mults), cap_(cap), out_(out) {}

    bool truncated() const { return truncated_; }
    const mpz_class& count() const { return count_; }

    bool run(i64 n) { return descend(parts_.size(), n); }

private:
    bool descend(size_t idx, i64 remaining) {
        if (remaining == 0) return emit();
        if (idx == 0) return true;
        const i64 a = parts_[idx - 1];
        if (!descend(idx - 1, remaining)) return false;
        const i64 limit = remaining / a;
        for (i64 m : mults_) {
            if (m > limit) break;
            stack_.emplace_back(a, m);
            const bool keep_going = descend(idx - 1, remaining - m * a);
            stack_.pop_back();
            if (!keep_going) return false;
        }
        return true;
    }

    bool emit() {
        if (!out_) {
            ++count_;
            return true;
        }
        if (static_cast<i64>(out_->size()) == cap_) {
            truncated_ = true;
            return false;
        }
        PartitionWitness w;
        for (const auto& [a, m] : stack_) w.terms.emplace(a, m);
        out_->push_back(std::move(w));
        return true;
    }

    std::span<const i64> parts_;
    std::span<const i64> mults_;
    i64 cap_;
    std::vector<PartitionWitness>* out_;
    std::vector<std::pair<i64, i64>> stack_;
    mpz_class count_ = 0;
    bool truncated_ = false;
};

}  // namespace

EnumerationResult enumerate_partitions(const SetDescriptor& parts_set,
                                       const SetDescriptor& mults_set, i64 n, i64 cap) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    if (cap < 1) throw std::invalid_argument("enumerate_partitions: cap must be >= 1");
    const std::vector<i64> parts = parts_set.enumerate_up_to(n);
    const std::vector<i64> mults = mults_set.enumerate_up_to(n);
    EnumerationResult result;
    OracleRecursion rec(parts, mults, cap, &result.witnesses);
    rec.run(n);
    result.truncated = rec.truncated();
    return result;
}

mpz_class count_by_enumeration(const SetDescriptor& parts_set,
                               const SetDescriptor& mults_set, i64 n) {
    if (n < 0) throw std::invalid_argument("count_by_enumeration: n must be >= 0");
    const std::vector<i64> parts = parts_set.enumerate_up_to(n);
    const std::vector<i64> mults = mults_set.enumerate_up_to(n);
    OracleRecursion rec(parts, mults, 0, nullptr);
    rec.run(n);
    return rec.count();
}

CountTable count_oracle(const SetDescriptor& parts_set, const SetDescriptor& mults_set,
                        i64 n_max) {
    if (n_max < 0) throw std::invalid_argument("count_oracle: n_max must be >= 0");
    std::vector<mpz_class> values(static_cast<size_t>(n_max) + 1);
    for (i64 n = 0; n <= n_max; ++n)
        values[static_cast<size_t>(n)] = count_by_enumeration(parts_set, mults_set, n);
    return {std::move(values), parts_set, mults_set, n_max, EnginePath::oracle};
}

bool verify_witness(const PartitionWitness& w, const SetDescriptor& parts_set,
                    const SetDescriptor& mults_set, i64 n) {
    mpz_class total = 0;
    for (const auto& [a, m] : w.terms) {
        if (!parts_set.contains(a)) return false;
        if (!mults_set.contains(m)) return false;
        total += mpz_class(a) * m;
    }
    return total == n;
}

}  // namespace partmult
