#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>

namespace cyclelift::identity {

struct Symbol {
    enum class Kind { K, Zo, Zplus };
    Kind kind = Kind::K;
    std::int64_t n = 0;  // exponent for Zo and Zplus
    std::int64_t i = 0;  // embedding class for Zplus

    static Symbol K() { return {Kind::K, 0, 0}; }
    static Symbol Zo(std::int64_t n) { return {Kind::Zo, n, 0}; }
    static Symbol Zplus(std::int64_t m, std::int64_t i) { return {Kind::Zplus, m, i}; }

    auto operator<=>(const Symbol&) const = default;
    bool operator==(const Symbol&) const = default;

    std::string to_string() const;  // "K", "Zo(7)", "Zplus(12,3)"
    static Symbol parse(const std::string& s);
};

// Finite Q-linear combination of symbols; zero weights never stored.
class SymbolicDivisor {
public:
    SymbolicDivisor() = default;
    explicit SymbolicDivisor(const Symbol& s, const mpq_class& w = 1);

    const std::map<Symbol, mpq_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    mpq_class weight(const Symbol& s) const;
    void add_term(const Symbol& s, const mpq_class& w);

    SymbolicDivisor& operator+=(const SymbolicDivisor& o);
    SymbolicDivisor& operator-=(const SymbolicDivisor& o);
    SymbolicDivisor& operator*=(const mpq_class& c);
    friend SymbolicDivisor operator+(SymbolicDivisor a, const SymbolicDivisor& b) { return a += b; }
    friend SymbolicDivisor operator-(SymbolicDivisor a, const SymbolicDivisor& b) { return a -= b; }
    friend SymbolicDivisor operator*(const mpq_class& c, SymbolicDivisor a) { return a *= c; }
    SymbolicDivisor operator-() const { return mpq_class(-1) * *this; }
    bool operator==(const SymbolicDivisor& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    std::map<Symbol, mpq_class> terms_;
};

}  // namespace cyclelift::identity
