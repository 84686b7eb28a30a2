#include "cyclelift/serialize.hpp"

#include <regex>

#include "cyclelift/errors.hpp"

namespace cyclelift::serialize {

std::string rational_to_string(const mpq_class& q) {
    mpq_class c(q);
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

mpq_class parse_rational(const std::string& s) {
    static const std::regex re(R"(\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw HypothesisViolation("malformed rational '" + s + "'");
    const mpz_class num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
    const mpz_class den(m[2].matched ? m[2].str() : std::string("1"));
    if (den == 0) throw HypothesisViolation("zero denominator in '" + s + "'");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

namespace {

nlohmann::json coeff_json(const mpq_class& c) { return rational_to_string(c); }

nlohmann::json coeff_json(const identity::SymbolicDivisor& d) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [s, w] : d.terms()) arr.push_back({{"sym", s.to_string()}, {"w", rational_to_string(w)}});
    return arr;
}

template <class C>
nlohmann::json series_json(const qseries::FormalSeries<C>& s) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [n, c] : s.coeffs()) arr.push_back({{"n", n}, {"c", coeff_json(c)}});
    return {{"max_exponent", s.max_exponent()}, {"coeffs", arr}};
}

}  // namespace

nlohmann::json to_json(const qseries::RationalSeries& s) { return series_json(s); }
nlohmann::json to_json(const qseries::SymbolicSeries& s) { return series_json(s); }

AnySeries series_from_json(const nlohmann::json& j) {
    try {
        if (!j.is_object() || !j.contains("max_exponent") || !j.contains("coeffs"))
            throw HypothesisViolation("series: expected keys max_exponent and coeffs");
        const std::int64_t max = j.at("max_exponent").get<std::int64_t>();
        const auto& arr = j.at("coeffs");
        if (!arr.is_array()) throw HypothesisViolation("series: coeffs must be an array");
        bool symbolic = false, rational = false;
        for (const auto& e : arr) {
            const auto& c = e.at("c");
            (c.is_array() ? symbolic : rational) = true;
            if (!c.is_array() && !c.is_string()) throw HypothesisViolation("series: coefficient must be a string or list");
        }
        if (symbolic && rational) throw HypothesisViolation("series: mixed coefficient kinds");
        if (!symbolic) {
            qseries::RationalSeries s(max);
            for (const auto& e : arr) s.add_to(e.at("n").get<std::int64_t>(), parse_rational(e.at("c").get<std::string>()));
            return s;
        }
        qseries::SymbolicSeries s(max);
        for (const auto& e : arr) {
            identity::SymbolicDivisor d;
            for (const auto& t : e.at("c"))
                d.add_term(identity::Symbol::parse(t.at("sym").get<std::string>()), parse_rational(t.at("w").get<std::string>()));
            s.add_to(e.at("n").get<std::int64_t>(), d);
        }
        return s;
    } catch (const nlohmann::json::exception& ex) {
        throw HypothesisViolation(std::string("series: malformed JSON: ") + ex.what());
    } catch (const TruncationInsufficient& ex) {
        throw HypothesisViolation(std::string("series: ") + ex.what());
    }
}

nlohmann::json to_json(const localcycles::LocalCycle& c) {
    nlohmann::json hor = nlohmann::json::array();
    for (const auto& h : c.horizontal) hor.push_back({{"vertex", bttree::path_word(h.central)}, {"count", h.count}});
    nlohmann::json ver = nlohmann::json::array();
    for (const auto& v : c.vertical) ver.push_back({{"vertex", bttree::path_word(v.vertex)}, {"mult", v.mult}});
    return {{"horizontal", hor}, {"vertical", ver}};
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

padic::VectorC parse_vector(const padic::LocalContext& ctx, const std::string& text) {
    static const std::regex coord(R"(\s*([+-]?\d+)\s*([+-])\s*(\d+)\s*\*?\s*d\s*)");
    static const std::regex denom(R"(^(.*)/\s*p\s*\^\s*(-?\d+)\s*$)");
    std::string body = text;
    int e = 0;
    std::smatch m;
    if (std::regex_match(text, m, denom)) {
        body = m[1].str();
        e = std::stoi(m[2].str());
    }
    const auto comma = body.find(',');
    if (comma == std::string::npos) throw HypothesisViolation("vector: expected two comma-separated coordinates");
    std::int64_t xy[4];
    const std::string parts[2] = {body.substr(0, comma), body.substr(comma + 1)};
    for (int k = 0; k < 2; ++k) {
        if (!std::regex_match(parts[k], m, coord))
            throw HypothesisViolation("vector: malformed coordinate '" + parts[k] + "', expected x+y*d");
        xy[2 * k] = std::stoll(m[1].str());
        const std::int64_t y = std::stoll(m[3].str());
        xy[2 * k + 1] = m[2].str() == "-" ? -y : y;
    }
    const padic::VectorC v = padic::VectorC::from_ints(ctx, xy[0], xy[1], xy[2], xy[3], e);
    if (v.is_zero()) throw DegenerateVector("vector: zero vector");
    return v;
}

}  // namespace cyclelift::serialize
