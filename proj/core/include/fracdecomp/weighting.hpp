#pragma once

#include <map>
#include <vector>

#include <nlohmann/json.hpp>

#include "fracdecomp/cliques.hpp"
#include "fracdecomp/hypergraph.hpp"
#include "fracdecomp/types.hpp"

namespace fracdecomp {

// Finite map from r-cliques to exact weights. Absent cliques weigh 0; zero
// weights are never stored.
class Weighting {
public:
    explicit Weighting(int r = 0) : r_(r) {}

    // Dense values indexed like `family`.
    static Weighting from_dense(const CliqueFamily& family, const std::vector<Rational>& values);

    int r() const noexcept { return r_; }
    std::size_t size() const noexcept { return entries_.size(); }
    const std::map<Clique, Rational>& entries() const noexcept { return entries_; }

    Rational get(const Clique& K) const;
    void set(const Clique& K, const Rational& w);
    void add(const Clique& K, const Rational& w);

    Weighting& operator+=(const Weighting& o);
    Weighting scaled(const Rational& c) const;

    bool operator==(const Weighting& o) const { return r_ == o.r_ && entries_ == o.entries_; }

private:
    int r_;
    std::map<Clique, Rational> entries_;
};

// coverage[i] = sum of ω(K) over cliques K containing edge i. Throws InvalidArgument
// if ω references a set that is not an r-clique of g.
std::vector<Rational> edge_coverage(const Hypergraph& g, const Weighting& w);

// Dense variant over a clique family (no validity check beyond family membership).
std::vector<Rational> edge_coverage(const Hypergraph& g, const CliqueFamily& family, const std::vector<Rational>& values);

// {"r": r, "entries": [{"clique": [...], "weight": "p/q"}, ...]} in clique order.
nlohmann::json to_json(const Weighting& w);
Weighting weighting_from_json(const nlohmann::json& j);

}  // namespace fracdecomp
