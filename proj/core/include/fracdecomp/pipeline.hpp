#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "fracdecomp/cliques.hpp"
#include "fracdecomp/gadgets.hpp"
#include "fracdecomp/hypergraph.hpp"
#include "fracdecomp/types.hpp"
#include "fracdecomp/weighting.hpp"

namespace fracdecomp {

struct Certificate {
    int r = 0;
    Weighting weighting;
    Rational max_residual;                    // max_e |Σ_{K∋e} ω(K) - 1|
    std::size_t worst_edge = Hypergraph::npos;  // edge attaining max_residual (npos if none)
    Rational min_weight;                      // over all of K_r; absent cliques weigh 0
    Rational max_weight;
    bool feasible = false;  // residual 0, 0 <= ω <= 1
};

// Exact per-edge sums. Throws InvalidArgument if ω references a non-clique.
Certificate verify(const Hypergraph& g, int r, const Weighting& w);

nlohmann::json to_json(const Certificate& c);

struct PreprocessResult {
    Hypergraph h;
    std::vector<Clique> removed;  // in removal order
    std::vector<Vertex> X;        // {x : d_H(x) >= (1-δ)n + r - 1}
};

// Repeatedly deletes the edges of the lexicographically least r-clique whose removal
// keeps δ(H) >= (1-δ)n. Throws StageError("preprocess") if δ(G) < (1-δ)n.
PreprocessResult preprocess(const Hypergraph& g, int r, const Rational& delta);

// κ = k_{r-2} - 2δn k_{r-3} (graphs).
Rational graph_kappa(const Hypergraph& g, int r, const Rational& delta);

// 1/κ on every r-clique. Throws StageError("uniform-weighting") if κ <= 0.
Weighting uniform_weighting(const Hypergraph& g, int r, const Rational& kappa);

struct SmoothnessReport {
    Rational gamma_scale;  // κ
    Rational a1_max;       // max_e |π(e)|/κ
    std::size_t a1_edge = Hypergraph::npos;
    Rational a2_max;  // max_x Σ_{y∈N(x)} |π(xy)|/κ
    Vertex a2_vertex = 0;
    Rational a3_total;  // Σ_e |π(e)|/κ
    bool a1 = false, a2 = false, a3 = false;

    bool smooth() const { return a1 && a2 && a3; }
};

// π is indexed by edge index. Requires κ > 0.
SmoothnessReport smoothness_check(const Hypergraph& g, int r, const std::vector<Rational>& pi, const Rational& kappa);

struct CorrectionReport {
    std::size_t admissible = 0;     // |A|
    std::size_t corrected_edges = 0;  // edges with π(e) != 0
    std::size_t min_hosts = 0;       // smallest host family used by a gadget
    std::size_t min_core_hosts = 0;  // strict only: min_e |H_{e,1} ∩ H_{e,2}|
    Rational max_abs_weight;         // max_K |ω'(K)|
    bool bound_ok = false;           // max_abs_weight <= 1/2κ
};

// ω' over `family` (= K_r(g)) with Σ_{K∋e} ω'(K) = π(e)/κ for every edge.
// Strict: A from the threshold filters, requires |H_{e,1} ∩ H_{e,2}| >= k_r/2 for
// every edge. Relaxed: A = K_r, requires a host wherever π(e) != 0.
// Throws StageError("smooth-correction") with the failing edge.
std::vector<Rational> smooth_correction_dense(const Hypergraph& g, int r, const CliqueFamily& family,
                                              const std::vector<Rational>& pi, const Rational& kappa,
                                              Regime regime, int threads, CorrectionReport* report = nullptr);

Weighting smooth_correction(const Hypergraph& g, int r, const Rational& delta, const std::vector<Rational>& pi,
                            Regime regime = Regime::strict, CorrectionReport* report = nullptr);

struct BreakdownResult {
    Rational delta;
    Rational kappa;
    std::vector<Rational> gamma, sigma, sigma1, sigma2, sigma3;  // per vertex
    std::vector<Rational> pi, pi1, pi2, pi_bound;                // per edge
    std::vector<BigInt> kappa_edge;                              // κ_xy^(r)
    Rational max_sigma_ratio;  // max_x |σ(x)| / (k_{r-2}/10^4 r)
    bool sigma_bound = false;  // max_sigma_ratio <= 1
    std::size_t pi_bound_violations = 0;
    std::size_t first_violation = Hypergraph::npos;
    bool stated_hypotheses = false;     // δ(G) and |X| against δ = 1/10^4 r^{3/2}
    bool observed_hypotheses = false;  // the same at the supplied δ, with δr <= 1/16
};

// Requires a graph and r >= 5 (StageError("breakdown") otherwise). π is the exact
// residual of κ_xy = κ + γ(x) + γ(y) + σ(x) + σ(y) + π(xy).
BreakdownResult breakdown(const Hypergraph& g, int r, const Rational& delta, const std::vector<Vertex>& X,
                          int threads = 0);

struct Hypothesis {
    std::string name;
    bool holds = false;
};

struct PipelineOptions {
    Regime regime = Regime::strict;
    std::optional<Rational> delta;  // graph drivers; default δ_obs
    int threads = 0;
    bool force_full_machinery = false;  // graph driver: skip the r <= 24 delegation
    bool fold_vertex_terms = false;     // graph driver: put γ+σ into π, no vertex gadgets
};

struct PipelineResult {
    std::string driver;  // hypergraph | r2 | r32
    Certificate certificate;
    Rational delta;  // working δ (graph drivers)
    Rational kappa;
    BigInt k_r;
    std::vector<Hypothesis> hypotheses;
    std::vector<std::pair<std::string, double>> timings;  // seconds per stage
    std::size_t removed = 0;
    std::size_t x_size = 0;
    std::size_t vertex_gadgets = 0;
    std::optional<SmoothnessReport> smoothness;
    std::optional<CorrectionReport> correction;
    std::optional<BreakdownResult> breakdown;
};

// k! / (2^{k+3} k^2 r^{2k-1}): codegree deficiency allowed by the hypergraph driver.
Rational hypergraph_delta(int k, int r);

// Uniform 1/κ̄ plus basic-gadget corrections over every (r+k)-clique at each edge.
// Throws StageError("hypergraph-correction") if an edge needs a correction and has
// no (r+k)-clique.
PipelineResult decompose_hypergraph(const Hypergraph& g, int r, const PipelineOptions& opt = {});

// preprocess, π = κ_e - κ, smoothness, smooth correction, ω = 1/κ - ω'.
PipelineResult decompose_r2(const Hypergraph& g, int r, const PipelineOptions& opt = {});

// r <= 24 delegates to decompose_hypergraph unless force_full_machinery. Otherwise
// preprocess, breakdown, smoothness, smooth correction, vertex gadgets and
// ω = (1 - κω' - Σ_x (γ(x)+σ(x)) ξ_x) / κ.
PipelineResult decompose_r32(const Hypergraph& g, int r, const PipelineOptions& opt = {});

// Graphs: decompose_r32. Hypergraphs: decompose_hypergraph.
PipelineResult decompose_auto(const Hypergraph& g, int r, const PipelineOptions& opt = {});

nlohmann::json to_json(const PipelineResult& res);

// Non-certifying double-precision run of the hypergraph driver, for timing only.
// Returns the minimum weight.
double decompose_hypergraph_float(const Hypergraph& g, int r, int threads = 0);

}  // namespace fracdecomp
