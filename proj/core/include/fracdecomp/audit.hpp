#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fracdecomp/hypergraph.hpp"
#include "fracdecomp/types.hpp"

namespace fracdecomp {

enum class AuditStatus { passed, failed, skipped };

const char* to_string(AuditStatus s);

struct AuditCheck {
    std::string name;
    AuditStatus status = AuditStatus::skipped;
    std::string detail;  // witness on failure, reason on skip
};

struct AuditReport {
    std::vector<AuditCheck> checks;

    std::size_t count(AuditStatus s) const;
    bool ok() const { return count(AuditStatus::failed) == 0; }
    void append(const AuditReport& o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
};

nlohmann::json to_json(const AuditReport& rep);

// δ_obs = (n - δ_{k-1}(G)) / n: the least δ with δ_{k-1}(G) >= (1 - δ) n.
Rational observed_delta(const Hypergraph& g);

// δ_j(G) >= (1 - δ) C(n-j, k-j) for 1 <= j <= k-1, given δ_{k-1}(G) >= (1 - δ) n.
AuditReport audit_min_degrees(const Hypergraph& g, const Rational& delta);

// (1 - C(r,k) δ) C(n,r) <= k_r <= C(n,r) <= n^r / r!, and for every edge
// k_{r-k} - 2kδ n^{r-k} C(r,k-1) / (r-k)! <= κ_e^(r) <= k_{r-k}.
// Needs n > r > k and 1/n <= δ < 1; δ = 1/n is the closed limit of the range.
AuditReport audit_clique_counts(const Hypergraph& g, int r, const Rational& delta);

// Graphs with δ(G) >= (1 - 1/2r) n: k_{r-i} <= (2r/n)^i k_r for 1 <= i <= r.
AuditReport audit_clique_ratio(const Hypergraph& g, int r);

// Graphs, δ <= 1/2r, δ(G) >= (1 - δ) n. For every t-clique Z with 1 <= t < r:
//   |κ_Z - k_{r-t}| <= 2tδr k_{r-t}
//   |κ_Z - k_{r-t} + |∪ N^c(z)| k_{r-t-1}| <= 6 (tδr)^2 k_{r-t}
// and for every edge xy the third-order inclusion-exclusion estimate of κ_xy is
// within 11 (δr)^4 k_{r-2}.
AuditReport audit_clique_estimates(const Hypergraph& g, int r, const Rational& delta);

// Graphs with r >= 3, δ(G) >= (1 - δ) n and |X| <= δ r n where δ = 1/600 r^{3/2}:
// |{K : |V(K) ∩ X| >= sqrt(r)}| <= k_r / r^2. Counts without enumerating K_r.
AuditReport audit_large_intersections(const Hypergraph& g, int r, const std::vector<Vertex>& X);

// Every audit above that applies to (g, r) at δ_obs.
AuditReport audit_instance(const Hypergraph& g, int r);

}  // namespace fracdecomp
