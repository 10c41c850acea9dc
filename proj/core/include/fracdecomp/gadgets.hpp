#pragma once

#include <map>
#include <span>
#include <vector>

#include "fracdecomp/cliques.hpp"
#include "fracdecomp/hypergraph.hpp"
#include "fracdecomp/types.hpp"
#include "fracdecomp/vertex_set.hpp"
#include "fracdecomp/weighting.hpp"

namespace fracdecomp {

struct GadgetCoefficients {
    int r = 0;
    int k = 0;
    std::vector<Rational> alpha;  // alpha[j] for j = 0..k
};

// a_ij = C(k-i, j-i) C(r-k+i, j).
BigInt alpha_matrix_entry(int r, int k, int i, int j);

// Exact back-substitution of the upper triangular system. Requires r > k >= 2.
GadgetCoefficients solve_alpha(int r, int k);

// 2^{k-i} (k-i)! / C(r-k+i, i).
Rational alpha_bound(int r, int k, int i);

// ω(K) = α_{|V(e) ∩ V(K)|} on every r-subset K of the (k+r)-clique J.
Weighting basic_edge_gadget(const Hypergraph& g, std::span<const Vertex> J, std::span<const Vertex> e,
                            const GadgetCoefficients& coeffs);

// φ_e numerators over the common denominator r(r-1), indexed by |V(K) ∩ V(e)|.
std::vector<std::int64_t> edge_phi_numerators(int r);

// ψ_e(K) = α_{e,K} φ_e(K) / |H| for a nonempty family H of r-sets (graphs).
Weighting averaged_edge_gadget(const Hypergraph& g, std::span<const Vertex> e, int r, const CliqueFamily& H);

// Strict applies the stated threshold filters; relaxed keeps the constructions
// exact but only requires nonempty host families.
enum class Regime { strict, relaxed };

const char* to_string(Regime r);
Regime parse_regime(const std::string& s);

// Shared state for vertex gadgets on one graph.
struct GadgetContext {
    GadgetContext(const Hypergraph& g, int r, Rational delta, std::vector<Vertex> X, Regime regime,
                  int threads = 0);
    GadgetContext(const Hypergraph& g, int r, Rational delta, std::vector<Vertex> X, Regime regime,
                  CliqueFamily cliques, int threads = 0);

    const Hypergraph& g;
    int r;
    Rational delta;
    Clique X;
    VertexSet x_set;
    Regime regime;
    int threads;
    CliqueFamily cliques;  // K_r
    BigInt k_r, k_r1, k_r2;
    // admissible[i]: |V(K_i) ∩ X| <= sqrt(r) + 2
    std::vector<char> admissible;

private:
    void init();
};

struct VertexGadgetReport {
    Vertex x = 0;
    Rational w_x;
    std::size_t hosts = 0;  // |H_x|
    std::map<Vertex, Rational> tau;
    std::map<Vertex, std::uint64_t> w_xy;
    Rational max_abs_tau, sum_abs_tau;
    Rational max_phi_ratio;  // max |φ_x(K)| / (2 n^{i+1} / r^{i+1} k_r)
    bool b2 = false;         // |τ_{x,y}| <= 1/sqrt(r)
    bool b3 = false;         // Σ_y |τ_{x,y}| <= n/r
    bool b4 = false;         // |φ_x(K)| <= 2 n^{i+1} / r^{i+1} k_r
};

// φ_x over ctx.cliques. Throws StageError("vertex-gadget") if w_x <= 0.
std::vector<Rational> vertex_gadget_approx_dense(const GadgetContext& ctx, Vertex x, VertexGadgetReport& report);

struct VertexGadgetResult {
    std::vector<Rational> xi;  // dense over ctx.cliques
    VertexGadgetReport report;
    std::size_t corrections = 0;  // edge gadgets added (z with τ_{x,z} != 0)
    std::size_t min_hosts = 0;    // smallest host family used by a correction
    std::size_t admissible_x = 0; // |A_x|
    Rational max_xi_ratio;        // max |ξ_x(K)| / (80 n^{i+1} / r^{i+1} k_r)
    bool bound_ok = false;
};

// ξ_x = φ_x + Σ_z τ_{x,z} ψ^x_{xz}. Throws StageError("vertex-gadget") when A_x is
// not well-distributed (strict) or a needed host family is empty (relaxed).
VertexGadgetResult vertex_gadget_dense(const GadgetContext& ctx, Vertex x);

std::pair<Weighting, VertexGadgetReport> vertex_gadget_approx(const Hypergraph& g, Vertex x, int r,
                                                              const Rational& delta, std::vector<Vertex> X,
                                                              Regime regime = Regime::relaxed);
Weighting vertex_gadget(const Hypergraph& g, Vertex x, int r, const Rational& delta, std::vector<Vertex> X,
                        Regime regime = Regime::relaxed, VertexGadgetResult* details = nullptr);

}  // namespace fracdecomp
