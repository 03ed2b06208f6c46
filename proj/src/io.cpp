#include "partmult/io.hpp"

#include <cctype>
#include <charconv>
#include <ostream>
#include <stdexcept>

namespace partmult::io {

namespace {

i64 require_positive_int(const json& j, const char* field) {
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string("descriptor field '") + field +
                                    "' must be an integer");
    const i64 v = j.get<i64>();
    if (v < 1)
        throw std::invalid_argument(std::string("descriptor field '") + field +
                                    "' must be positive");
    return v;
}

i64 parse_i64(const std::string& s) {
    i64 v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument("not an integer: '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    for (size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
            out.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace

json descriptor_to_json(const SetDescriptor& d) {
    switch (d.kind()) {
        case SetDescriptor::Kind::finite:
            return {{"kind", "finite"}, {"elements", d.elements()}};
        case SetDescriptor::Kind::naturals:
            return {{"kind", "naturals"}};
        case SetDescriptor::Kind::geometric:
            return {{"kind", "geometric"}, {"base", d.base()}};
        case SetDescriptor::Kind::factorials:
            return {{"kind", "factorials"}};
        case SetDescriptor::Kind::self_powers:
            return {{"kind", "selfpowers"}};
        case SetDescriptor::Kind::arithmetic:
            return {{"kind", "ap"}, {"first", d.first()}, {"step", d.step()}};
        case SetDescriptor::Kind::not_divisible:
            return {{"kind", "notdiv"}, {"modulus", d.modulus()}};
        case SetDescriptor::Kind::union_set:
            return {{"kind", "union"},
                    {"left", descriptor_to_json(d.left())},
                    {"right", descriptor_to_json(d.right())}};
    }
    throw std::logic_error("unreachable descriptor kind");
}

SetDescriptor descriptor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw std::invalid_argument("descriptor JSON needs a string 'kind' field");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "finite") {
        if (!j.contains("elements") || !j.at("elements").is_array())
            throw std::invalid_argument("finite descriptor needs an 'elements' array");
        std::vector<i64> elems;
        for (const json& e : j.at("elements")) elems.push_back(require_positive_int(e, "elements"));
        return SetDescriptor::finite(std::move(elems));
    }
    if (kind == "naturals") return SetDescriptor::naturals();
    if (kind == "geometric") {
        const i64 base = require_positive_int(j.at("base"), "base");
        if (base < 2) throw std::invalid_argument("geometric base must be >= 2");
        return SetDescriptor::geometric(base);
    }
    if (kind == "factorials") return SetDescriptor::factorials();
    if (kind == "selfpowers") return SetDescriptor::self_powers();
    if (kind == "ap")
        return SetDescriptor::arithmetic(require_positive_int(j.at("first"), "first"),
                                         require_positive_int(j.at("step"), "step"));
    if (kind == "notdiv") {
        const i64 modulus = require_positive_int(j.at("modulus"), "modulus");
        if (modulus < 2) throw std::invalid_argument("notdiv modulus must be >= 2");
        return SetDescriptor::not_divisible(modulus);
    }
    if (kind == "union") {
        if (!j.contains("left") || !j.contains("right"))
            throw std::invalid_argument("union descriptor needs 'left' and 'right'");
        return SetDescriptor::union_of(descriptor_from_json(j.at("left")),
                                       descriptor_from_json(j.at("right")));
    }
    throw std::invalid_argument("unknown descriptor kind '" + kind + "'");
}

SetDescriptor parse_descriptor(const std::string& text) {
    size_t first = text.find_first_not_of(" \t");
    if (first == std::string::npos)
        throw std::invalid_argument("empty descriptor");
    if (text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw std::invalid_argument(std::string("malformed descriptor JSON: ") + e.what());
        }
        return descriptor_from_json(j);
    }
    const std::string s = text.substr(first, text.find_last_not_of(" \t") - first + 1);
    if (s == "naturals" || s == "nat") return SetDescriptor::naturals();
    if (s == "odds") return SetDescriptor::arithmetic(1, 2);
    if (s == "evens") return SetDescriptor::arithmetic(2, 2);
    if (s == "factorials") return SetDescriptor::factorials();
    if (s == "selfpowers") return SetDescriptor::self_powers();
    if (s.starts_with("pow")) return SetDescriptor::geometric(parse_i64(s.substr(3)));
    if (s.starts_with("notdiv")) return SetDescriptor::not_divisible(parse_i64(s.substr(6)));
    if (s.starts_with("ap:")) {
        const auto fields = split(s.substr(3), ':');
        if (fields.size() != 2)
            throw std::invalid_argument("ap shorthand is ap:<first>:<step>");
        return SetDescriptor::arithmetic(parse_i64(fields[0]), parse_i64(fields[1]));
    }
    std::vector<i64> elems;
    for (const std::string& f : split(s, ',')) elems.push_back(parse_i64(f));
    return SetDescriptor::finite(std::move(elems));
}

std::string decimal_string(const mpq_class& q, int decimals) {
    const bool negative = q < 0;
    mpq_class abs_q = negative ? mpq_class(-q) : q;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(decimals));
    // round(|q| * scale) half-up
    mpz_class scaled = (abs_q.get_num() * scale * 2 + abs_q.get_den()) / (abs_q.get_den() * 2);
    mpz_class whole = scaled / scale;
    std::string out = negative ? "-" : "";
    out += whole.get_str();
    if (decimals > 0) {
        std::string frac_str = mpz_class(scaled % scale).get_str();
        frac_str.insert(0, static_cast<size_t>(decimals) - frac_str.size(), '0');
        out += '.';
        out += frac_str;
    }
    return out;
}

std::string engine_path_name(EnginePath path) {
    switch (path) {
        case EnginePath::generic: return "generic";
        case EnginePath::ap_optimized: return "ap_optimized";
        case EnginePath::oracle: return "oracle";
    }
    return "unknown";
}

void write_table_csv(const CountTable& t, std::ostream& os) {
    os << "n,p\n";
    for (i64 n = 0; n <= t.limit; ++n) os << n << ',' << t.at(n).get_str() << '\n';
}

json table_to_json(const CountTable& t) {
    json values = json::array();
    for (i64 n = 0; n <= t.limit; ++n) values.push_back(t.at(n).get_str());
    return {{"parts", descriptor_to_json(t.parts)},
            {"mults", descriptor_to_json(t.mults)},
            {"n_max", t.limit},
            {"engine_path", engine_path_name(t.path)},
            {"values", std::move(values)}};
}

json witnesses_to_json(const EnumerationResult& r, i64 n) {
    json witnesses = json::array();
    for (const PartitionWitness& w : r.witnesses) {
        json terms = json::array();
        for (const auto& [a, m] : w.terms)
            terms.push_back({{"part", a}, {"multiplicity", m}});
        witnesses.push_back(std::move(terms));
    }
    return {{"n", n},
            {"count", static_cast<i64>(r.witnesses.size())},
            {"truncated", r.truncated},
            {"witnesses", std::move(witnesses)}};
}

void write_witnesses_csv(const EnumerationResult& r, std::ostream& os) {
    os << "witness,part,multiplicity\n";
    for (size_t i = 0; i < r.witnesses.size(); ++i)
        for (const auto& [a, m] : r.witnesses[i].terms)
            os << i << ',' << a << ',' << m << '\n';
}

json growth_to_json(const GrowthReport& r) {
    json exponents = json::array();
    for (size_t i = 0; i < r.exponents.size(); ++i)
        exponents.push_back({{"n", r.exponents[i].n},
                             {"r", r.exponents[i].r},
                             {"running_sup", r.running_sup[i]},
                             {"running_inf", r.running_inf[i]}});
    return {{"exponents", std::move(exponents)},
            {"zero_count_indices", r.zero_count_indices}};
}

void write_growth_csv(const GrowthReport& r, std::ostream& os) {
    os << "n,r,running_sup,running_inf\n";
    char buf[128];
    for (size_t i = 0; i < r.exponents.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%lld,%.15g,%.15g,%.15g",
                      static_cast<long long>(r.exponents[i].n), r.exponents[i].r,
                      r.running_sup[i], r.running_inf[i]);
        os << buf << '\n';
    }
}

json bounds_to_json(const BoundsReport& r) {
    return {{"x", r.x},
            {"a_count", r.a_count},
            {"m_count", r.m_count},
            {"upper_lhs", r.upper_lhs.get_str()},
            {"upper_rhs", r.upper_rhs.get_str()},
            {"lower_range", r.lower_range},
            {"lower_lhs", r.lower_lhs.get_str()},
            {"argmax_n", r.argmax_n},
            {"argmax_value", r.argmax_value.get_str()}};
}

void write_bounds_csv(const std::vector<BoundsReport>& rs, std::ostream& os) {
    os << "x,a_count,m_count,upper_lhs,upper_rhs,lower_range,lower_lhs,argmax_n,argmax_value\n";
    for (const BoundsReport& r : rs)
        os << r.x << ',' << r.a_count << ',' << r.m_count << ',' << r.upper_lhs.get_str()
           << ',' << r.upper_rhs.get_str() << ',' << r.lower_range << ','
           << r.lower_lhs.get_str() << ',' << r.argmax_n << ','
           << r.argmax_value.get_str() << '\n';
}

json iterated_to_json(const IteratedSearchResult& r) {
    json rounds = json::array();
    for (const WitnessRound& w : r.rounds)
        rounds.push_back({{"x", w.x}, {"n", w.n}, {"p", w.count.get_str()}});
    return {{"rounds", std::move(rounds)},
            {"truncated", r.truncated},
            {"stop_reason", r.stop_reason}};
}

void write_iterated_csv(const IteratedSearchResult& r, std::ostream& os) {
    os << "round,x,n,p\n";
    for (size_t i = 0; i < r.rounds.size(); ++i)
        os << i + 1 << ',' << r.rounds[i].x << ',' << r.rounds[i].n << ','
           << r.rounds[i].count.get_str() << '\n';
}

json schur_to_json(const std::vector<SchurPoint>& pts, const CountTable& t) {
    json points = json::array();
    for (const SchurPoint& p : pts)
        points.push_back({{"n", p.n},
                          {"p", t.at(p.n).get_str()},
                          {"ratio", decimal_string(p.ratio, 18)}});
    return {{"parts", descriptor_to_json(t.parts)}, {"points", std::move(points)}};
}

void write_schur_csv(const std::vector<SchurPoint>& pts, const CountTable& t,
                     std::ostream& os) {
    os << "n,p,ratio\n";
    for (const SchurPoint& p : pts)
        os << p.n << ',' << t.at(p.n).get_str() << ',' << decimal_string(p.ratio, 18)
           << '\n';
}

json be_to_json(const BeReport& r, i64 bound) {
    json certs = json::array();
    for (const GcdCertificate& c : r.certificates)
        certs.push_back({{"excluded", c.excluded}, {"gcd", c.gcd}});
    return {{"bound", bound},
            {"satisfied", r.satisfied},
            // truncation can only overestimate gcds
            {"verdict_definitive", r.satisfied},
            {"certificates", std::move(certs)}};
}

void write_be_csv(const BeReport& r, std::ostream& os) {
    os << "excluded,gcd\n";
    for (const GcdCertificate& c : r.certificates)
        os << c.excluded << ',' << c.gcd << '\n';
}

json staircase_to_json(const StaircaseSequence& s) {
    json terms = json::array();
    for (const mpz_class& t : s.terms) terms.push_back(t.get_str());
    return {{"terms", std::move(terms)}};
}

void write_staircase_csv(const StaircaseSequence& s, i64 f_max, std::ostream& os) {
    os << "n,f\n";
    mpz_class last = s.terms.back() - 1;
    mpz_class hi = last < f_max ? last : mpz_class(f_max);
    for (mpz_class n = 1; n <= hi; ++n) os << n.get_str() << ',' << f_eval(n, s).get_str() << '\n';
}

}  // namespace partmult::io
