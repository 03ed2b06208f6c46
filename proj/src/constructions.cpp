#include "partmult/constructions.hpp"

#include <sstream>
#include <stdexcept>

namespace partmult {

namespace {

mpz_class pow_term(const mpz_class& base, i64 exp) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

}  // namespace

StaircaseSequence build_sequence_minimal(i64 length) {
    if (length < 1)
        throw std::invalid_argument("staircase sequence needs at least one term");
    StaircaseSequence s;
    s.terms.reserve(static_cast<size_t>(length));
    s.terms.emplace_back(1);
    for (i64 k = 1; k < length; ++k)
        s.terms.push_back(2 * pow_term(s.terms.back(), k) + 1);
    return s;
}

StaircaseSequence build_sequence_custom(std::vector<mpz_class> terms) {
    if (terms.empty())
        throw std::invalid_argument("staircase sequence needs at least one term");
    if (terms.front() != 1)
        throw std::invalid_argument("staircase sequence term 1 must equal 1");
    for (size_t k = 0; k + 1 < terms.size(); ++k) {
        if (terms[k + 1] <= 2 * pow_term(terms[k], static_cast<i64>(k + 1))) {
            std::ostringstream os;
            os << "staircase sequence term " << k + 2 << " must exceed 2*n_" << k + 1
               << "^" << k + 1;
            throw std::invalid_argument(os.str());
        }
    }
    StaircaseSequence s;
    s.terms = std::move(terms);
    return s;
}

mpz_class f_eval(const mpz_class& n, const StaircaseSequence& s) {
    if (n < 1 || n < s.terms.front())
        throw std::domain_error("f_eval: n below the first term");
    if (n >= s.terms.back())
        throw std::domain_error("f_eval: n at or beyond the last term; extend the sequence");
    // bracket k with n_k <= n < n_{k+1}; K is small, scan linearly
    size_t k = 0;
    while (k + 1 < s.terms.size() && s.terms[k + 1] <= n) ++k;
    return pow_term(s.terms[k], static_cast<i64>(k + 1)) + (n - s.terms[k]);
}

std::pair<SetDescriptor, SetDescriptor> thm_am_pair(i64 a) {
    if (a < 2) throw std::invalid_argument("thm_am_pair: base must be >= 2");
    return {SetDescriptor::geometric(a), SetDescriptor::not_divisible(a)};
}

}  // namespace partmult
