#include "cyclelift/symbolic.hpp"

#include <regex>

#include "cyclelift/errors.hpp"

namespace cyclelift::identity {

std::string Symbol::to_string() const {
    switch (kind) {
        case Kind::K: return "K";
        case Kind::Zo: return "Zo(" + std::to_string(n) + ")";
        case Kind::Zplus: return "Zplus(" + std::to_string(n) + "," + std::to_string(i) + ")";
    }
    return {};
}

Symbol Symbol::parse(const std::string& s) {
    static const std::regex zo(R"(Zo\((\d+)\))");
    static const std::regex zp(R"(Zplus\((\d+),(\d+)\))");
    std::smatch m;
    if (s == "K") return K();
    if (std::regex_match(s, m, zo)) return Zo(std::stoll(m[1]));
    if (std::regex_match(s, m, zp)) return Zplus(std::stoll(m[1]), std::stoll(m[2]));
    throw HypothesisViolation("unknown symbol '" + s + "'");
}

SymbolicDivisor::SymbolicDivisor(const Symbol& s, const mpq_class& w) { add_term(s, w); }

mpq_class SymbolicDivisor::weight(const Symbol& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void SymbolicDivisor::add_term(const Symbol& s, const mpq_class& w) {
    if (sgn(w) == 0) return;
    auto [it, fresh] = terms_.try_emplace(s, w);
    if (fresh) return;
    it->second += w;
    if (sgn(it->second) == 0) terms_.erase(it);
}

SymbolicDivisor& SymbolicDivisor::operator+=(const SymbolicDivisor& o) {
    for (const auto& [s, w] : o.terms_) add_term(s, w);
    return *this;
}

SymbolicDivisor& SymbolicDivisor::operator-=(const SymbolicDivisor& o) {
    for (const auto& [s, w] : o.terms_) add_term(s, -w);
    return *this;
}

SymbolicDivisor& SymbolicDivisor::operator*=(const mpq_class& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [s, w] : terms_) w *= c;
    return *this;
}

std::string SymbolicDivisor::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [s, w] : terms_) {
        if (!out.empty()) out += " + ";
        out += w.get_str() + "*" + s.to_string();
    }
    return out;
}

}  // namespace cyclelift::identity
