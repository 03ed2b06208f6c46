// Acceptance suite: one hard criterion per function, one [PASS]/[FAIL] line
// each, exact assertions throughout. Always compiled with checks on; exits 1
// on the first failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "partmult/analysis.hpp"
#include "partmult/constructions.hpp"
#include "partmult/engine.hpp"
#include "support/corpus.hpp"

using namespace partmult;
using SD = SetDescriptor;

namespace {

#define REQUIRE(cond, msg)                                                        \
    do {                                                                          \
        if (!(cond)) {                                                            \
            std::printf("[FAIL] %s:%d %s\n", __FILE__, __LINE__, std::string(msg).c_str()); \
            std::exit(1);                                                         \
        }                                                                         \
    } while (0)

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

// 1. generic, AP-optimized, and the enumeration oracle agree exactly for all
//    n <= 60 on every corpus pair
void criterion_1_oracle_equivalence() {
    Timer timer;
    const auto corpus = partmult::testing::corpus_pairs();
    REQUIRE(corpus.size() >= 8, "corpus must hold at least 8 pairs");
    int ap_supported = 0;
    for (const auto& pair : corpus) {
        const i64 n_max = 60;
        const CountTable generic = count_generic(pair.parts, pair.mults, n_max);
        bool has_ap = true;
        try {
            const CountTable ap = count_ap_optimized(pair.parts, pair.mults, n_max);
            REQUIRE(generic.values == ap.values,
                    pair.name + ": generic and AP tables differ");
        } catch (const UnsupportedDecomposition&) {
            has_ap = false;
        }
        ap_supported += has_ap;
        for (i64 n = 0; n <= n_max; ++n) {
            const mpz_class oracle = count_by_enumeration(pair.parts, pair.mults, n);
            REQUIRE(oracle == generic.at(n),
                    pair.name + ": oracle mismatch at n=" + std::to_string(n));
        }
    }
    std::printf(
        "[PASS] 1. oracle equivalence: %zu pairs, n<=60, enumeration == generic == "
        "ap (%d pairs AP-supported) (%.1fs)\n",
        corpus.size(), ap_supported, timer.seconds());
}

// 2. positivity on [1, 10^4] and exact uniqueness at the powers for
//    a in {2, 3, 5}
void criterion_2_verify_am() {
    Timer timer;
    const i64 n_max = 10000;
    int powers_checked = 0;
    for (i64 base : {2, 3, 5}) {
        const auto [parts, mults] = thm_am_pair(base);
        const CountTable t = count_ap_optimized(parts, mults, n_max);
        for (i64 n = 1; n <= n_max; ++n)
            REQUIRE(t.at(n) >= 1,
                    "a=" + std::to_string(base) + ": p(" + std::to_string(n) + ") < 1");
        for (i64 v = 1; v <= n_max; v *= base) {
            REQUIRE(t.at(v) == 1, "a=" + std::to_string(base) + ": p(" +
                                      std::to_string(v) + ") != 1");
            ++powers_checked;
            if (v > n_max / base) break;
        }
    }
    std::printf(
        "[PASS] 2. verify-am: a in {2,3,5}, N=10^4, p>=1 everywhere, p=1 at all %d "
        "powers (%.1fs)\n",
        powers_checked, timer.seconds());
}

// 3. sum_{n<=x} p <= (M(x)+1)^A(x) <= sum_{n<=x^2 A(x)} p for every corpus
//    pair and x in {2, 5, 10, 20, 50}, exact big-integer comparisons
void criterion_3_counting_inequalities() {
    Timer timer;
    EngineOptions opts;
    opts.work_ceiling = 100'000'000'000LL;  // the x=50 dense-parts table is ~2*10^10
    int checked = 0;
    for (const auto& pair : partmult::testing::corpus_pairs()) {
        for (i64 x : {2, 5, 10, 20, 50}) {
            const BoundsReport r = bounds_report(pair.parts, pair.mults, x, opts);
            REQUIRE(r.upper_lhs <= r.upper_rhs,
                    pair.name + " x=" + std::to_string(x) + ": upper inequality failed");
            REQUIRE(r.lower_lhs >= r.upper_rhs,
                    pair.name + " x=" + std::to_string(x) + ": lower inequality failed");
            ++checked;
        }
    }
    std::printf(
        "[PASS] 3. counting inequalities: %d (pair, x) combinations, both directions "
        "exact (%.1fs)\n",
        checked, timer.seconds());
}

// 4. a p(n) > n witness exists by N=10^5 (escalating once to 10^6 before
//    failing) and the exponent vanishes at every power of two
void criterion_4_witness_existence() {
    Timer timer;
    const auto [parts, mults] = thm_am_pair(2);
    i64 n_max = 100000;
    std::vector<i64> witnesses;
    CountTable t = count_ap_optimized(parts, mults, n_max);
    witnesses = superpoly_witnesses(t, 1);
    if (witnesses.empty()) {
        n_max = 1000000;
        t = count_ap_optimized(parts, mults, n_max);
        witnesses = superpoly_witnesses(t, 1);
    }
    REQUIRE(!witnesses.empty(), "no p(n) > n witness up to N=10^6");
    const GrowthReport g = growth_exponents(t);
    REQUIRE(g.zero_count_indices.empty(), "unexpected zero count under the pair");
    REQUIRE(g.running_sup.back() > 1.0, "running sup of the exponents should pass 1");
    int powers = 0;
    for (const GrowthPoint& pt : g.exponents) {
        if ((pt.n & (pt.n - 1)) == 0) {
            REQUIRE(pt.r == 0.0, "r(" + std::to_string(pt.n) + ") != 0 at a power of 2");
            ++powers;
        }
    }
    REQUIRE(powers >= 16, "expected all powers of two up to N in the report");
    std::printf(
        "[PASS] 4. witness existence: N=%lld, first p(n)>n at n=%lld (%zu witnesses), "
        "r=0 at all %d powers of 2 (%.1fs)\n",
        static_cast<long long>(n_max), static_cast<long long>(witnesses.front()),
        witnesses.size(), powers, timer.seconds());
}

// 5. normalized asymptotic ratios: exact |ratio-1| <= 3/n for parts {1,2} up
//    to 10^4 against the closed form, and ratio within [0.98, 1.02] for parts
//    {1,2,3} on [1200, 5000]
void criterion_5_schur() {
    Timer timer;
    {
        const i64 n_max = 10000;
        const CountTable t = count_auto(SD::finite({1, 2}), SD::naturals(), n_max);
        const std::vector<SchurPoint> pts = schur_ratio(t, {1, 2});
        for (const SchurPoint& pt : pts) {
            REQUIRE(t.at(pt.n) == pt.n / 2 + 1,
                    "closed form floor(n/2)+1 failed at n=" + std::to_string(pt.n));
            if (pt.n < 2) continue;
            mpq_class bound(3, pt.n);
            bound.canonicalize();
            REQUIRE(abs(mpq_class(pt.ratio - 1)) <= bound,
                    "|ratio-1| > 3/n at n=" + std::to_string(pt.n));
        }
    }
    {
        const i64 n_max = 5000;
        const CountTable t = count_auto(SD::finite({1, 2, 3}), SD::naturals(), n_max);
        const std::vector<SchurPoint> pts = schur_ratio(t, {1, 2, 3});
        mpq_class lo(98, 100), hi(102, 100);
        lo.canonicalize();
        hi.canonicalize();
        for (const SchurPoint& pt : pts) {
            if (pt.n < 1200) continue;
            REQUIRE(pt.ratio >= lo && pt.ratio <= hi,
                    "three-part ratio outside [0.98, 1.02] at n=" + std::to_string(pt.n));
        }
    }
    std::printf(
        "[PASS] 5. asymptotic ratios: {1,2} exact to 10^4, {1,2,3} within 2%% on "
        "[1200, 5000] (%.1fs)\n",
        timer.seconds());
}

// 6. staircase function, minimal rule, K=4: strict increase, f >= id, pinned
//    values, and the below-breakpoint bound, all exact
void criterion_6_staircase() {
    Timer timer;
    const StaircaseSequence s = build_sequence_minimal(4);
    REQUIRE((s.terms == std::vector<mpz_class>{1, 3, 19, 13719}), "minimal terms wrong");
    REQUIRE(f_eval(3, s) == 9, "f(3) != 9");
    REQUIRE(f_eval(19, s) == 6859, "f(19) != 19^3");
    const mpz_class last = f_eval(13718, s);
    REQUIRE(last == mpz_class(6859 + 13699), "f(13718) != 19^3 + 13699");
    REQUIRE(2 * last < 3 * mpz_class(13719), "f(n4 - 1) not below (3/2) n4");
    mpz_class prev = f_eval(1, s);
    REQUIRE(prev == 1, "f(1) != 1");
    for (i64 n = 2; n <= 13718; ++n) {
        const mpz_class cur = f_eval(n, s);
        REQUIRE(cur > prev, "f not strictly increasing at n=" + std::to_string(n));
        REQUIRE(cur >= n, "f(n) < n at n=" + std::to_string(n));
        prev = cur;
    }
    std::printf(
        "[PASS] 6. staircase: K=4, strictly increasing on [1,13718], f>=id, f(3)=9, "
        "f(19)=6859, f(13718)=20558 < 20578.5 (%.1fs)\n",
        timer.seconds());
}

// 7. two iterated-search rounds on the geometric pair give distinct witnesses
//    with strictly increasing counts
void criterion_7_iterated_witnesses() {
    Timer timer;
    const auto [parts, mults] = thm_am_pair(2);
    const IteratedSearchResult r = iterated_witness_search(parts, mults, 1, 2);
    REQUIRE(!r.truncated, "search truncated: " + r.stop_reason);
    REQUIRE(r.rounds.size() == 2, "expected two rounds");
    const WitnessRound& first = r.rounds[0];
    const WitnessRound& second = r.rounds[1];
    REQUIRE(first.n != second.n, "witnesses are not distinct");
    REQUIRE(second.count > first.count, "counts not strictly increasing");
    REQUIRE(first.count > first.n, "round 1 witness fails p(n) > n");
    REQUIRE(second.count > second.n, "round 2 witness fails p(n) > n");
    std::printf(
        "[PASS] 7. iterated witnesses: (x=%lld, n=%lld, p=%s) then (x=%lld, n=%lld, "
        "p~10^%zu), distinct and increasing (%.1fs)\n",
        static_cast<long long>(first.x), static_cast<long long>(first.n),
        first.count.get_str().c_str(), static_cast<long long>(second.x),
        static_cast<long long>(second.n), second.count.get_str().size() - 1,
        timer.seconds());
}

// 8. gcd-without-one-element sanity plus a weak-monotonicity scan
void criterion_8_be_and_monotonicity() {
    Timer timer;
    const BeReport yes = be_condition(SD::finite({1, 2, 3}), 10);
    REQUIRE(yes.satisfied, "be_condition({1,2,3}, 10) should hold");
    const BeReport no = be_condition(SD::finite({2, 3}), 10);
    REQUIRE(!no.satisfied, "be_condition({2,3}, 10) should fail");
    const CountTable t = count_auto(SD::finite({1, 2, 3}), SD::naturals(), 500);
    REQUIRE(!monotonicity_scan(t, 0, false).has_value(),
            "unexpected weak monotonicity violation");
    std::printf(
        "[PASS] 8. gcd condition and monotonicity: {1,2,3} true and weakly monotone "
        "to 500, {2,3} false (%.1fs)\n",
        timer.seconds());
}

}  // namespace

int main() {
    setvbuf(stdout, nullptr, _IOLBF, 0);  // stream PASS lines through pipes
    Timer total;
    criterion_1_oracle_equivalence();
    criterion_2_verify_am();
    criterion_3_counting_inequalities();
    criterion_4_witness_existence();
    criterion_5_schur();
    criterion_6_staircase();
    criterion_7_iterated_witnesses();
    criterion_8_be_and_monotonicity();
    std::printf("all 8 acceptance criteria passed (%.1fs)\n", total.seconds());
    return 0;
}
