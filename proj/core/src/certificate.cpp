#include <algorithm>

#include "fracdecomp/cliques.hpp"
#include "fracdecomp/errors.hpp"
#include "fracdecomp/pipeline.hpp"
#include "fracdecomp/rational.hpp"

namespace fracdecomp {

Certificate verify(const Hypergraph& g, int r, const Weighting& w) {
    if (w.size() && w.r() != r) throw InvalidArgument("weighting clique size does not match r");
    Certificate c;
    c.r = r;
    c.weighting = w;
    auto cov = edge_coverage(g, w);
    c.max_residual = 0;
    for (std::size_t i = 0; i < cov.size(); ++i) {
        Rational d = abs(cov[i] - 1);
        if (d > c.max_residual || (c.worst_edge == Hypergraph::npos && d == c.max_residual && d != 0)) {
            c.max_residual = d;
            c.worst_edge = i;
        }
    }
    bool first = true;
    for (const auto& [K, v] : w.entries()) {
        if (first || v < c.min_weight) c.min_weight = v;
        if (first || v > c.max_weight) c.max_weight = v;
        first = false;
    }
    BigInt kr = r >= 1 && static_cast<std::size_t>(r) <= g.n() ? count_cliques(g, r) : BigInt(0);
    if (BigInt(static_cast<unsigned long>(w.size())) < kr || first) {
        if (first || c.min_weight > 0) c.min_weight = 0;
        if (first || c.max_weight < 0) c.max_weight = 0;
    }
    c.feasible = c.max_residual == 0 && c.min_weight >= 0 && c.max_weight <= 1;
    return c;
}

nlohmann::json to_json(const Certificate& c) {
    nlohmann::json j;
    j["r"] = c.r;
    j["feasible"] = c.feasible;
    j["max_residual"] = to_string(c.max_residual);
    j["worst_edge"] = c.worst_edge == Hypergraph::npos ? nlohmann::json(nullptr) : nlohmann::json(c.worst_edge);
    j["min_weight"] = to_string(c.min_weight);
    j["max_weight"] = to_string(c.max_weight);
    j["weighting"] = to_json(c.weighting);
    return j;
}

}  // namespace fracdecomp
