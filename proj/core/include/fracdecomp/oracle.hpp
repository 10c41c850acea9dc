#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "fracdecomp/hypergraph.hpp"
#include "fracdecomp/weighting.hpp"

namespace fracdecomp {

// Outcome of the exact feasibility LP  Σ_{K∋e} ω(K) = 1 (all edges e), ω >= 0.
// When infeasible, dual_witness[i] is y(e_i) with Σ_{e⊂K} y(e) <= 0 for every
// r-clique K and Σ_e y(e) > 0 (Farkas form).
struct LPResult {
    bool feasible = false;
    std::optional<Weighting> witness;
    std::optional<std::vector<Rational>> dual_witness;
    std::size_t variables = 0;
    std::size_t iterations = 0;
};

struct LPOptions {
    std::size_t cap = 100000;  // maximum number of clique variables
};

// Phase-one simplex in exact arithmetic: most negative reduced cost, lexicographic
// ratio test. Throws CapExceeded when the instance has more than opt.cap r-cliques.
// The returned witness is re-verified before returning; a failed check throws Error.
LPResult lp_feasible(const Hypergraph& g, int r, const LPOptions& opt = {});

// Exact checks of either witness against g.
bool check_primal(const Hypergraph& g, int r, const Weighting& w);
bool check_dual(const Hypergraph& g, int r, const std::vector<Rational>& y);

nlohmann::json to_json(const Hypergraph& g, const LPResult& res);

}  // namespace fracdecomp
