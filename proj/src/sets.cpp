#include "partmult/sets.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace partmult {

namespace {

constexpr i64 kMaxI64 = std::numeric_limits<i64>::max();

// would base*value exceed limit?
bool mul_exceeds(i64 value, i64 base, i64 limit) {
    return value > limit / base;
}

}  // namespace

SetDescriptor SetDescriptor::finite(std::vector<i64> elements) {
    if (elements.empty())
        throw std::invalid_argument("finite set descriptor needs at least one element");
    for (i64 e : elements)
        if (e < 1)
            throw std::invalid_argument("finite set elements must be positive");
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    SetDescriptor d(Kind::finite);
    d.elements_ = std::move(elements);
    return d;
}

SetDescriptor SetDescriptor::naturals() { return SetDescriptor(Kind::naturals); }

SetDescriptor SetDescriptor::geometric(i64 base) {
    if (base < 2)
        throw std::invalid_argument("geometric base must be >= 2");
    SetDescriptor d(Kind::geometric);
    d.param_a_ = base;
    return d;
}

SetDescriptor SetDescriptor::factorials() { return SetDescriptor(Kind::factorials); }

SetDescriptor SetDescriptor::self_powers() { return SetDescriptor(Kind::self_powers); }

SetDescriptor SetDescriptor::arithmetic(i64 first, i64 step) {
    if (first < 1 || step < 1)
        throw std::invalid_argument("arithmetic progression needs first >= 1 and step >= 1");
    SetDescriptor d(Kind::arithmetic);
    d.param_a_ = first;
    d.param_b_ = step;
    return d;
}

SetDescriptor SetDescriptor::not_divisible(i64 modulus) {
    if (modulus < 2)
        throw std::invalid_argument("not_divisible modulus must be >= 2");
    SetDescriptor d(Kind::not_divisible);
    d.param_a_ = modulus;
    return d;
}

SetDescriptor SetDescriptor::union_of(SetDescriptor left, SetDescriptor right) {
    SetDescriptor d(Kind::union_set);
    d.left_ = std::make_shared<const SetDescriptor>(std::move(left));
    d.right_ = std::make_shared<const SetDescriptor>(std::move(right));
    return d;
}

SetIterator::SetIterator(const SetDescriptor& d) : descriptor_(&d) {
    switch (d.kind()) {
        case SetDescriptor::Kind::geometric:
        case SetDescriptor::Kind::factorials:
            cursor_ = 1;
            aux_ = 1;
            break;
        case SetDescriptor::Kind::self_powers:
            aux_ = 1;
            break;
        case SetDescriptor::Kind::arithmetic:
            cursor_ = d.first();
            break;
        case SetDescriptor::Kind::union_set:
            left_ = std::make_unique<SetIterator>(d.left());
            right_ = std::make_unique<SetIterator>(d.right());
            break;
        default:
            break;
    }
}

i64 SetIterator::next() {
    const SetDescriptor& d = *descriptor_;
    switch (d.kind()) {
        case SetDescriptor::Kind::finite:
            return index_ < d.elements().size() ? d.elements()[index_++] : -1;
        case SetDescriptor::Kind::naturals:
            return cursor_ == kMaxI64 ? -1 : ++cursor_;
        case SetDescriptor::Kind::geometric: {
            if (cursor_ < 0) return -1;
            const i64 v = cursor_;
            cursor_ = mul_exceeds(cursor_, d.base(), kMaxI64) ? -1 : cursor_ * d.base();
            return v;
        }
        case SetDescriptor::Kind::factorials: {
            if (cursor_ < 0) return -1;
            const i64 v = cursor_;  // aux_!
            ++aux_;
            cursor_ = mul_exceeds(cursor_, aux_, kMaxI64) ? -1 : cursor_ * aux_;
            return v;
        }
        case SetDescriptor::Kind::self_powers: {
            i64 v = 1;
            for (i64 i = 0; i < aux_; ++i) {
                if (mul_exceeds(v, aux_, kMaxI64)) return -1;
                v *= aux_;
            }
            ++aux_;
            return v;
        }
        case SetDescriptor::Kind::arithmetic: {
            if (cursor_ < 0) return -1;
            const i64 v = cursor_;
            cursor_ = cursor_ > kMaxI64 - d.step() ? -1 : cursor_ + d.step();
            return v;
        }
        case SetDescriptor::Kind::not_divisible:
            do {
                if (cursor_ == kMaxI64) return -1;
                ++cursor_;
            } while (cursor_ % d.modulus() == 0);
            return cursor_;
        case SetDescriptor::Kind::union_set: {
            if (!primed_) {
                left_head_ = left_->next();
                right_head_ = right_->next();
                primed_ = true;
            }
            if (left_head_ == -1 && right_head_ == -1) return -1;
            i64 v;
            if (right_head_ == -1 || (left_head_ != -1 && left_head_ < right_head_)) {
                v = left_head_;
                left_head_ = left_->next();
            } else if (left_head_ == -1 || right_head_ < left_head_) {
                v = right_head_;
                right_head_ = right_->next();
            } else {  // both sides hold the same element
                v = left_head_;
                left_head_ = left_->next();
                right_head_ = right_->next();
            }
            return v;
        }
    }
    return -1;
}

std::vector<i64> SetDescriptor::enumerate_up_to(i64 x) const {
    std::vector<i64> out;
    if (x < 1) return out;
    if (kind_ == Kind::naturals) {
        out.resize(static_cast<size_t>(x));
        std::iota(out.begin(), out.end(), i64{1});
        return out;
    }
    for_each_up_to(x, [&](i64 v) {
        out.push_back(v);
        return true;
    });
    return out;
}

i64 SetDescriptor::count_up_to(i64 x) const {
    if (x < 1) return 0;
    switch (kind_) {
        case Kind::finite:
            return std::upper_bound(elements_.begin(), elements_.end(), x) - elements_.begin();
        case Kind::naturals:
            return x;
        case Kind::arithmetic:
            return x < param_a_ ? 0 : (x - param_a_) / param_b_ + 1;
        case Kind::not_divisible:
            return x - x / param_a_;
        default: {
            // geometric/factorials/self_powers have O(log x) elements; union
            // streams both sides without materializing either
            i64 count = 0;
            for_each_up_to(x, [&](i64) {
                ++count;
                return true;
            });
            return count;
        }
    }
}

bool SetDescriptor::contains(i64 n) const {
    if (n < 1) return false;
    switch (kind_) {
        case Kind::finite:
            return std::binary_search(elements_.begin(), elements_.end(), n);
        case Kind::naturals:
            return true;
        case Kind::geometric: {
            i64 v = n;
            while (v % param_a_ == 0) v /= param_a_;
            return v == 1;
        }
        case Kind::factorials:
            for (i64 k = 1, v = 1; v <= n; ++k) {
                if (v == n) return true;
                if (mul_exceeds(v, k + 1, n)) break;
                v *= k + 1;
            }
            return false;
        case Kind::self_powers: {
            bool found = false;
            for_each_up_to(n, [&](i64 v) {
                found = v == n;
                return v < n;
            });
            return found;
        }
        case Kind::arithmetic:
            return n >= param_a_ && (n - param_a_) % param_b_ == 0;
        case Kind::not_divisible:
            return n % param_a_ != 0;
        case Kind::union_set:
            return left_->contains(n) || right_->contains(n);
    }
    return false;
}

bool SetDescriptor::operator==(const SetDescriptor& other) const {
    if (kind_ != other.kind_) return false;
    switch (kind_) {
        case Kind::finite: return elements_ == other.elements_;
        case Kind::naturals:
        case Kind::factorials:
        case Kind::self_powers: return true;
        case Kind::geometric:
        case Kind::not_divisible: return param_a_ == other.param_a_;
        case Kind::arithmetic: return param_a_ == other.param_a_ && param_b_ == other.param_b_;
        case Kind::union_set: return *left_ == *other.left_ && *right_ == *other.right_;
    }
    return false;
}

std::string SetDescriptor::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::finite: {
            os << "finite[";
            for (size_t i = 0; i < elements_.size(); ++i)
                os << (i ? "," : "") << elements_[i];
            os << "]";
            break;
        }
        case Kind::naturals: os << "naturals"; break;
        case Kind::geometric: os << "geometric(" << param_a_ << ")"; break;
        case Kind::factorials: os << "factorials"; break;
        case Kind::self_powers: os << "selfpowers"; break;
        case Kind::arithmetic: os << "ap(" << param_a_ << "," << param_b_ << ")"; break;
        case Kind::not_divisible: os << "notdiv(" << param_a_ << ")"; break;
        case Kind::union_set:
            os << "union(" << left_->describe() << "," << right_->describe() << ")";
            break;
    }
    return os.str();
}

i64 gcd_without(const SetDescriptor& s, i64 excluded, i64 bound) {
    i64 g = 0;
    s.for_each_up_to(bound, [&](i64 e) {
        if (e != excluded) g = std::gcd(g, e);
        return g != 1;  // gcd can only shrink toward 1
    });
    if (g == 0)
        throw std::domain_error("gcd_without: no elements <= bound after exclusion");
    return g;
}

}  // namespace partmult
