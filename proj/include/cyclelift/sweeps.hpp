#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "cyclelift/localcycles.hpp"
#include "cyclelift/report.hpp"

namespace cyclelift::sweeps {

// Every sweep is a loop over independent items. Exec::serial runs them in
// order; Exec::parallel shares them across OpenMP threads and merges the
// per-item results in item order, so both produce the same report.

Report rho_sweep(const std::vector<std::int64_t>& deltas, std::int64_t n_max, Exec exec = Exec::parallel);

// Anisotropic vectors with ord q in [ord_min, ord_max], deterministic in seed.
std::vector<padic::VectorC> random_anisotropic_vectors(const padic::LocalContext& ctx, int count, int ord_min,
                                                       int ord_max, std::uint64_t seed);

// r(b, L) by direct membership against the closed formula in the BFS distance
// to the central lattice, over the radius ball.
Report r_formula_sweep(const std::vector<padic::VectorC>& vectors, int radius, Exec exec = Exec::parallel);

// Z(b+) + Z(b-) against the orthogonal multiplicities over radius alpha+2,
// for alpha in [0, alpha_max], plus the horizontal counts.
Report local_compare_sweep(const std::vector<padic::VectorC>& eigvecs, int alpha_max, Exec exec = Exec::parallel);

// Local equations and superspecial exponents against multiplicities at every
// vertex and edge of the radius ball around the central lattice.
Report chart_sweep(const std::vector<localcycles::SpecialHom>& homs, int radius, Exec exec = Exec::parallel);

// Product formula over all places for each pair.
Report hilbert_sweep(const std::vector<std::pair<mpq_class, mpq_class>>& pairs, Exec exec = Exec::parallel);

std::vector<std::pair<mpq_class, mpq_class>> random_rational_pairs(int count, int bound, std::uint64_t seed);

}  // namespace cyclelift::sweeps
