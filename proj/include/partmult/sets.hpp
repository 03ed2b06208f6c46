#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace partmult {

using i64 = std::int64_t;

/// Symbolic description of a (possibly infinite) strictly increasing set of
/// positive integers. Descriptors are immutable values; copying is cheap and
/// sharing across threads is safe. Every query takes an explicit bound, so
/// infinite sets are never materialized.
class SetDescriptor {
public:
    enum class Kind {
        finite,          // explicit sorted list
        naturals,        // {1, 2, 3, ...}
        geometric,       // {base^i : i >= 0}, base >= 2
        factorials,      // {k! : k >= 1}
        self_powers,     // {k^k : k >= 1}
        arithmetic,      // {first + j*step : j >= 0}
        not_divisible,   // {m >= 1 : modulus does not divide m}
        union_set,       // left ∪ right, deduplicated
    };

    // factories validate their arguments and throw std::invalid_argument
    static SetDescriptor finite(std::vector<i64> elements);
    static SetDescriptor naturals();
    static SetDescriptor geometric(i64 base);
    static SetDescriptor factorials();
    static SetDescriptor self_powers();
    static SetDescriptor arithmetic(i64 first, i64 step);
    static SetDescriptor not_divisible(i64 modulus);
    static SetDescriptor union_of(SetDescriptor left, SetDescriptor right);

    Kind kind() const { return kind_; }
    i64 base() const { return param_a_; }      // geometric
    i64 modulus() const { return param_a_; }   // not_divisible
    i64 first() const { return param_a_; }     // arithmetic
    i64 step() const { return param_b_; }      // arithmetic
    const std::vector<i64>& elements() const { return elements_; }  // finite
    const SetDescriptor& left() const { return *left_; }            // union
    const SetDescriptor& right() const { return *right_; }          // union

    /// All elements <= x, strictly increasing. Terminates for every kind.
    std::vector<i64> enumerate_up_to(i64 x) const;

    /// Counting function: |{e in set : e <= x}|. Equals the length of
    /// enumerate_up_to(x).
    i64 count_up_to(i64 x) const;

    /// Membership test, consistent with enumerate_up_to.
    bool contains(i64 n) const;

    /// Visit elements <= x in increasing order without materializing them;
    /// stop early when the callback returns false.
    template <typename Callback>
    void for_each_up_to(i64 x, Callback&& cb) const;

    bool operator==(const SetDescriptor& other) const;

    /// Short human-readable form, e.g. "geometric(2)" or "finite[1,2,3]".
    std::string describe() const;

private:
    explicit SetDescriptor(Kind k) : kind_(k) {}

    Kind kind_;
    i64 param_a_ = 0;
    i64 param_b_ = 0;
    std::vector<i64> elements_;
    std::shared_ptr<const SetDescriptor> left_, right_;
};

/// Lazy ascending stream over a descriptor's elements. Exhausts naturally
/// when the next element would overflow the i64 range, so even "infinite"
/// kinds terminate.
class SetIterator {
public:
    explicit SetIterator(const SetDescriptor& d);

    /// Next element in strictly increasing order; -1 when exhausted.
    i64 next();

private:
    const SetDescriptor* descriptor_;
    i64 cursor_ = 0;   // kind-specific generator state
    i64 aux_ = 0;
    size_t index_ = 0;
    std::unique_ptr<SetIterator> left_, right_;
    i64 left_head_ = 0, right_head_ = 0;
    bool primed_ = false;
};

template <typename Callback>
void SetDescriptor::for_each_up_to(i64 x, Callback&& cb) const {
    SetIterator it(*this);
    for (i64 v = it.next(); v != -1 && v <= x; v = it.next())
        if (!cb(v)) return;
}

/// gcd of {e in s : e <= bound, e != excluded}. Truncation caveat: the gcd of
/// the full (possibly infinite) set divides the returned value, so the result
/// is an upper approximation. Throws std::domain_error if the truncated set
/// is empty.
i64 gcd_without(const SetDescriptor& s, i64 excluded, i64 bound);

}  // namespace partmult
