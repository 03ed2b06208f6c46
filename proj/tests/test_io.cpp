#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "partmult/io.hpp"
#include "support/corpus.hpp"

using namespace partmult;
using SD = SetDescriptor;
using partmult::io::json;

TEST_CASE("descriptor JSON round-trips across the corpus") {
    std::vector<SD> zoo = {
        SD::finite({1, 2, 3}), SD::naturals(),       SD::geometric(2),
        SD::factorials(),      SD::self_powers(),    SD::arithmetic(1, 2),
        SD::not_divisible(5),  SD::union_of(SD::finite({9}), SD::geometric(3)),
    };
    for (const auto& pair : partmult::testing::corpus_pairs()) {
        zoo.push_back(pair.parts);
        zoo.push_back(pair.mults);
    }
    for (const SD& d : zoo) {
        CAPTURE(d.describe());
        CHECK(io::descriptor_from_json(io::descriptor_to_json(d)) == d);
    }
}

TEST_CASE("documented JSON forms parse to the expected descriptors") {
    CHECK(io::parse_descriptor(R"({"kind":"geometric","base":2})") == SD::geometric(2));
    CHECK(io::parse_descriptor(R"({"kind":"notdiv","modulus":2})") == SD::not_divisible(2));
    CHECK(io::parse_descriptor(R"({"kind":"finite","elements":[1,2,3]})") ==
          SD::finite({1, 2, 3}));
    CHECK(io::parse_descriptor(R"({"kind":"ap","first":1,"step":2})") ==
          SD::arithmetic(1, 2));
    CHECK(io::parse_descriptor(R"({"kind":"factorials"})") == SD::factorials());
    CHECK(io::parse_descriptor(R"({"kind":"selfpowers"})") == SD::self_powers());
    CHECK(io::parse_descriptor(R"({"kind":"naturals"})") == SD::naturals());
    CHECK(io::parse_descriptor(
              R"({"kind":"union","left":{"kind":"finite","elements":[5]},"right":{"kind":"geometric","base":3}})") ==
          SD::union_of(SD::finite({5}), SD::geometric(3)));
}

TEST_CASE("descriptor parsing rejects malformed input") {
    CHECK_THROWS_AS(io::parse_descriptor(R"({"kind":"geometric","base":1})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::parse_descriptor(R"({"kind":"geometric","base":-2})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::parse_descriptor(R"({"kind":"geometric","base":2.5})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::parse_descriptor(R"({"kind":"notdiv","modulus":1})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::parse_descriptor(R"({"kind":"finite","elements":[0,1]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::parse_descriptor(R"({"kind":"finite","elements":[]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::parse_descriptor(R"({"kind":"ap","first":0,"step":2})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::parse_descriptor(R"({"kind":"primes"})"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_descriptor(R"({"kind":"union","left":{"kind":"naturals"}})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::parse_descriptor("{not json"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_descriptor(""), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_descriptor("pow1"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_descriptor("abc"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_descriptor("1,0,3"), std::invalid_argument);
}

TEST_CASE("shorthands parse to the same descriptors as their JSON forms") {
    CHECK(io::parse_descriptor("pow2") ==
          io::parse_descriptor(R"({"kind":"geometric","base":2})"));
    CHECK(io::parse_descriptor("odds") ==
          io::parse_descriptor(R"({"kind":"ap","first":1,"step":2})"));
    CHECK(io::parse_descriptor("evens") ==
          io::parse_descriptor(R"({"kind":"ap","first":2,"step":2})"));
    CHECK(io::parse_descriptor("factorials") ==
          io::parse_descriptor(R"({"kind":"factorials"})"));
    CHECK(io::parse_descriptor("selfpowers") ==
          io::parse_descriptor(R"({"kind":"selfpowers"})"));
    CHECK(io::parse_descriptor("1,2,3") ==
          io::parse_descriptor(R"({"kind":"finite","elements":[1,2,3]})"));
    CHECK(io::parse_descriptor("notdiv3") ==
          io::parse_descriptor(R"({"kind":"notdiv","modulus":3})"));
    CHECK(io::parse_descriptor("ap:2:5") ==
          io::parse_descriptor(R"({"kind":"ap","first":2,"step":5})"));
    CHECK(io::parse_descriptor("nat") == SD::naturals());
    CHECK(io::parse_descriptor("7") == SD::finite({7}));
}

TEST_CASE("decimal rendering of exact rationals") {
    CHECK(io::decimal_string(mpq_class(1002, 1000), 3) == "1.002");
    mpq_class q(7, 3);
    q.canonicalize();
    CHECK(io::decimal_string(q, 6) == "2.333333");
    CHECK(io::decimal_string(mpq_class(1, 2), 0) == "1");     // half rounds up
    CHECK(io::decimal_string(mpq_class(1, 8), 2) == "0.13");  // 0.125 -> 0.13
    CHECK(io::decimal_string(mpq_class(-1, 8), 2) == "-0.13");
    CHECK(io::decimal_string(mpq_class(5, 1), 4) == "5.0000");
}

TEST_CASE("count table CSV uses decimal strings") {
    const CountTable t = count_auto(SD::finite({1}), SD::naturals(), 3);
    std::ostringstream os;
    io::write_table_csv(t, os);
    CHECK(os.str() == "n,p\n0,1\n1,1\n2,1\n3,1\n");
}

TEST_CASE("count table JSON embeds provenance") {
    const CountTable t = count_auto(SD::geometric(2), SD::not_divisible(2), 5);
    const json j = io::table_to_json(t);
    CHECK(j.at("n_max") == 5);
    CHECK(j.at("engine_path") == "ap_optimized");
    CHECK(io::descriptor_from_json(j.at("parts")) == SD::geometric(2));
    CHECK(io::descriptor_from_json(j.at("mults")) == SD::not_divisible(2));
    CHECK(j.at("values") == json({"1", "1", "1", "2", "1", "3"}));
}

TEST_CASE("witness and growth serialization have the documented shapes") {
    const EnumerationResult r =
        enumerate_partitions(SD::finite({1, 2, 3}), SD::naturals(), 4, 100);
    const json wj = io::witnesses_to_json(r, 4);
    CHECK(wj.at("count") == 4);
    CHECK(wj.at("truncated") == false);
    CHECK(wj.at("witnesses").size() == 4);
    CHECK(wj.at("witnesses")[0][0].at("part") == 1);
    CHECK(wj.at("witnesses")[0][0].at("multiplicity") == 4);

    std::ostringstream os;
    io::write_witnesses_csv(r, os);
    CHECK(os.str().starts_with("witness,part,multiplicity\n0,1,4\n"));

    const CountTable t = count_auto(SD::finite({1, 2, 3}), SD::naturals(), 50);
    const GrowthReport g = growth_exponents(t);
    std::ostringstream gs;
    io::write_growth_csv(g, gs);
    CHECK(gs.str().starts_with("n,r,running_sup,running_inf\n"));
    const json gj = io::growth_to_json(g);
    CHECK(gj.at("exponents").size() == g.exponents.size());
}

TEST_CASE("bounds and iterate serialization") {
    const BoundsReport r = bounds_report(SD::finite({1}), SD::naturals(), 5);
    const json j = io::bounds_to_json(r);
    CHECK(j.at("upper_lhs") == "6");
    CHECK(j.at("upper_rhs") == "6");
    CHECK(j.at("lower_range") == 25);
    std::ostringstream os;
    io::write_bounds_csv({r}, os);
    CHECK(os.str() ==
          "x,a_count,m_count,upper_lhs,upper_rhs,lower_range,lower_lhs,argmax_n,"
          "argmax_value\n5,1,5,6,6,25,26,0,1\n");

    const IteratedSearchResult it = iterated_witness_search(SD::naturals(), SD::naturals(), 1, 1);
    const json ij = io::iterated_to_json(it);
    CHECK(ij.at("rounds")[0].at("x") == 2);
    CHECK(ij.at("rounds")[0].at("p") == "22");
    CHECK(ij.at("truncated") == false);
}
