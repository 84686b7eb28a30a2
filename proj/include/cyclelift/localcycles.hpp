#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cyclelift/bttree.hpp"

namespace cyclelift::localcycles {

using bttree::VertexLattice;
using padic::LocalContext;
using padic::QuadLocalElem;
using padic::VectorC;

enum class Sign { plus, minus };

const char* to_string(Sign s);

struct SpecialHom {
    Sign sign;
    VectorC vec;
    int ord_qpm;  // ord q(vec) + 1 for plus, ord q(vec) for minus
};

// Throws DegenerateVector for isotropic vec, HypothesisViolation when the
// resulting ord_qpm is negative.
SpecialHom make_special_hom(Sign sign, const VectorC& vec);

struct OrthEndo {
    int alpha;
    VectorC eigvec;     // ord q(eigvec) in {0, -1}
    std::int64_t nu_p;  // 1 when ord q(eigvec) = -1, p otherwise
};

// Rescales vec by a power of p so that ord q lands in {0, -1}.
OrthEndo make_orth_endo(int alpha, const VectorC& vec);

struct VerticalEntry {
    VertexLattice vertex;
    int mult;
};

struct HorizontalEntry {
    VertexLattice central;
    int count;
};

struct LocalCycle {
    std::vector<VerticalEntry> vertical;      // sorted by canonical key
    std::vector<HorizontalEntry> horizontal;  // sorted by canonical key

    int mult_at(const VertexLattice& L) const;
    int total_horizontal() const;
    friend LocalCycle operator+(const LocalCycle& a, const LocalCycle& b);
    bool operator==(const LocalCycle& o) const;
};

// `center` may be supplied when already known, saving a reduction.
int multiplicity(const SpecialHom& h, const VertexLattice& L,
                 const std::optional<VertexLattice>& center = std::nullopt);

LocalCycle unitary_cycle(const SpecialHom& h);
LocalCycle orthogonal_cycle(const OrthEndo& j);

std::pair<SpecialHom, SpecialHom> split_pair(const OrthEndo& j);

enum class FiberKind { empty, single_point, full_line };

struct FiberPoints {
    FiberKind kind;
    bool superspecial = false;  // meaningful for single_point only
};

FiberPoints fiber_points(const SpecialHom& h, const VertexLattice& L);

// p^p_exp (c0 T + c1) on a type-0 chart, p^p_exp (c0 + c1 T) on a type-2
// chart, coordinates taken in the hyperbolic basis of L.
struct OrdinaryEquation {
    int p_exp;
    QuadLocalElem c0;
    QuadLocalElem c1;
    bool type0_chart;
    // The root of the reduced linear factor is not F_p-rational, i.e. the
    // factor cuts out the ordinary point met by the horizontal component.
    bool horizontal;
};

OrdinaryEquation ordinary_equation(const SpecialHom& h, const VertexLattice& L);

struct SuperspecialExponents {
    int e_t0;
    int e_t1;
    bool operator==(const SuperspecialExponents&) const = default;
};

SuperspecialExponents superspecial_exponents(const SpecialHom& h, const VertexLattice& L0, const VertexLattice& L2);

}  // namespace cyclelift::localcycles
