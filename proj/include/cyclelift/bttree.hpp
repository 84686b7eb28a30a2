#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclelift/padic.hpp"

namespace cyclelift::bttree {

using padic::LocalContext;
using padic::QuadLocalElem;
using padic::VectorC;

// Canonical form p^{-D} span{(p^v0, c), (0, p^v1)} with c reduced mod p^v1
// and min(v0, v1, val c) = 0. Equal keys <=> equal lattices.
struct LatticeKey {
    int D = 0;
    int v0 = 0;
    int v1 = 0;
    std::int64_t cx = 0;
    std::int64_t cy = 0;
    bool operator==(const LatticeKey&) const = default;
    auto operator<=>(const LatticeKey&) const = default;
};

struct LatticeKeyHash {
    std::size_t operator()(const LatticeKey& k) const noexcept;
};

// Rank-2 o_{k,p}-lattice in C, stored in canonical form.
class Lattice {
public:
    static Lattice from_generators(const LocalContext& ctx, const std::vector<VectorC>& gens);
    static Lattice from_key(const LocalContext& ctx, const LatticeKey& key);

    const LocalContext& ctx() const { return ctx_; }
    const LatticeKey& key() const { return key_; }
    // Canonical basis columns.
    VectorC col0() const;
    VectorC col1() const;
    QuadLocalElem offdiag() const;

    Lattice scaled_p(int k) const;  // p^k * L
    std::optional<int> vertex_type() const;

    bool operator==(const Lattice& o) const { return key_ == o.key_; }

protected:
    Lattice(const LocalContext& ctx, const LatticeKey& key) : ctx_(ctx), key_(key) {}
    LocalContext ctx_;
    LatticeKey key_;
};

class VertexLattice : public Lattice {
public:
    // Throws HypothesisViolation unless L is self-dual or p-modular.
    static VertexLattice from(const Lattice& L);
    int vtype() const { return vtype_; }

private:
    friend std::vector<VertexLattice> neighbors(const VertexLattice& L);
    VertexLattice(const Lattice& L, int vtype) : Lattice(L), vtype_(vtype) {}
    int vtype_ = 0;
};

std::pair<VertexLattice, VertexLattice> standard_lattices(const LocalContext& ctx);

Lattice dual(const Lattice& L);

// Basis (w0, w1) of L with both isotropic, rational, and h(w0, w1) = delta
// (type 0) or delta/p (type 2).
std::pair<VectorC, VectorC> hyperbolic_basis(const VertexLattice& L);

// Indices 0..p-1 are the affine neighbours alpha, index p the one at infinity.
std::vector<VertexLattice> neighbors(const VertexLattice& L);

int r_invariant(const VectorC& b, const Lattice& L);
bool contains(const Lattice& L, const VectorC& b);

VertexLattice central_lattice(const VectorC& b);

inline constexpr int kDefaultSearchCap = 40;

// Breadth-first reference distance.
int distance(const VertexLattice& L, const VertexLattice& M, int cap = kDefaultSearchCap);
// Elementary-divisor distance of the rational parts; cross-checked against BFS.
int distance_fast(const VertexLattice& L, const VertexLattice& M);

struct BallEntry {
    VertexLattice lattice;
    int dist;
};
// All vertices within `radius` of center in BFS order.
std::vector<BallEntry> ball(const VertexLattice& center, int radius);

// Neighbour indices leading from the standard type-0 lattice to L, e.g. "5.0.3".
std::string path_word(const VertexLattice& L);

std::string describe(const Lattice& L);

}  // namespace cyclelift::bttree
