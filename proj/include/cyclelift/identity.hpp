#pragma once

#include <cstdint>

#include "cyclelift/qseries.hpp"
#include "cyclelift/quadfield.hpp"
#include "cyclelift/report.hpp"
#include "cyclelift/symbolic.hpp"

namespace cyclelift::identity {

using qseries::SymbolicSeries;
using quadfield::QuadField;

// -K + sum Zo(n) q^n up to m_max.
SymbolicSeries build_phi_o(const QuadField& field, std::int64_t d_b, std::int64_t m_max);

// Unitary series with coefficients expanded through the bad-fibre relation:
// zero off multiples of |Delta|, a chi_k-weighted Zo divisor sum on them.
SymbolicSeries build_phi_u(const QuadField& field, std::int64_t d_b, std::int64_t m_max);

// Compares Sh(Phi_o) for (kappa, N, t, chi) = (3, D_B, |Delta|, 1) with
// Phi_u coefficientwise on [0, m_max].
Report verify_main_theorem(const QuadField& field, std::int64_t d_b, std::int64_t m_max, Exec exec = Exec::parallel);

std::int64_t fiber_count(const QuadField& field, std::int64_t m, std::int64_t c, std::int64_t nu_p,
                         std::int64_t nu_away);

struct RemarkReport {
    Report report;
    SymbolicDivisor c_prime;
};

// Expands sum_i (2 + sum_I phi_I)(Phi_naive_i) with free symbols
// Zplus(n, i) and compares with the unitary series written in the same
// symbols; C' is the constant left over.
RemarkReport verify_remark_identity(const QuadField& field, std::int64_t d_b, std::int64_t m_max,
                                    std::int64_t num_embedding_classes, Exec exec = Exec::parallel);

nlohmann::json divisor_to_json(const SymbolicDivisor& d);

}  // namespace cyclelift::identity
