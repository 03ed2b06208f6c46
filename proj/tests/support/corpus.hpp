#pragma once

#include <string>
#include <utility>
#include <vector>

#include "partmult/sets.hpp"

namespace partmult::testing {

struct CorpusPair {
    std::string name;
    SetDescriptor parts;
    SetDescriptor mults;
};

// the (A, M) pairs shared by the oracle-equivalence and inequality suites
inline std::vector<CorpusPair> corpus_pairs() {
    using SD = SetDescriptor;
    std::vector<CorpusPair> v;
    v.push_back({"geometric2/notdiv2", SD::geometric(2), SD::not_divisible(2)});
    v.push_back({"geometric3/notdiv3", SD::geometric(3), SD::not_divisible(3)});
    v.push_back({"finite123/naturals", SD::finite({1, 2, 3}), SD::naturals()});
    v.push_back({"finite23/naturals", SD::finite({2, 3}), SD::naturals()});
    v.push_back({"factorials/notdiv2", SD::factorials(), SD::not_divisible(2)});
    v.push_back({"naturals/odds", SD::naturals(), SD::arithmetic(1, 2)});
    v.push_back({"finite1/naturals", SD::finite({1}), SD::naturals()});
    v.push_back({"union2geo3/notdiv3", SD::union_of(SD::finite({2}), SD::geometric(3)),
                 SD::not_divisible(3)});
    v.push_back({"selfpowers/naturals", SD::self_powers(), SD::naturals()});
    v.push_back({"finite123/factorials", SD::finite({1, 2, 3}), SD::factorials()});
    return v;
}

}  // namespace partmult::testing
