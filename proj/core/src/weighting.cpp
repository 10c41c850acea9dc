#include "fracdecomp/weighting.hpp"

#include <algorithm>

#include "combinatorics.hpp"
#include "fracdecomp/errors.hpp"
#include "fracdecomp/rational.hpp"

namespace fracdecomp {

Weighting Weighting::from_dense(const CliqueFamily& family, const std::vector<Rational>& values) {
    Weighting w(family.r());
    for (std::size_t i = 0; i < family.size(); ++i)
        if (values[i] != 0) w.entries_.emplace_hint(w.entries_.end(), family.clique(i), values[i]);
    return w;
}

Rational Weighting::get(const Clique& K) const {
    auto it = entries_.find(K);
    return it == entries_.end() ? Rational(0) : it->second;
}

void Weighting::set(const Clique& K, const Rational& w) {
    if (w == 0) entries_.erase(K);
    else entries_[K] = w;
}

void Weighting::add(const Clique& K, const Rational& w) {
    if (w == 0) return;
    auto [it, fresh] = entries_.emplace(K, w);
    if (!fresh) {
        it->second += w;
        if (it->second == 0) entries_.erase(it);
    }
}

Weighting& Weighting::operator+=(const Weighting& o) {
    if (r_ == 0) r_ = o.r_;
    for (const auto& [K, w] : o.entries_) add(K, w);
    return *this;
}

Weighting Weighting::scaled(const Rational& c) const {
    Weighting out(r_);
    if (c == 0) return out;
    for (const auto& [K, w] : entries_) out.entries_.emplace_hint(out.entries_.end(), K, w * c);
    return out;
}

namespace {

// Sums over one common denominator D: integer additions instead of rational ones.
class CoverageSum {
public:
    explicit CoverageSum(std::size_t m) : sums_(m, 0) {}

    void widen(const Rational& v) {
        const mpz_srcptr den = v.get_den_mpz_t();
        if (!mpz_divisible_p(D_.get_mpz_t(), den)) mpz_lcm(D_.get_mpz_t(), D_.get_mpz_t(), den);
    }

    // Numerator of v over D.
    const BigInt& scaled(const Rational& v) {
        mpz_divexact(t_.get_mpz_t(), D_.get_mpz_t(), v.get_den_mpz_t());
        t_ *= v.get_num();
        return t_;
    }

    void add(std::size_t e, const BigInt& x) { sums_[e] += x; }

    std::vector<Rational> finish() const {
        std::vector<Rational> out(sums_.size());
        for (std::size_t i = 0; i < sums_.size(); ++i) {
            out[i] = Rational(sums_[i], D_);
            out[i].canonicalize();
        }
        return out;
    }

private:
    std::vector<BigInt> sums_;
    BigInt D_ = 1, t_;
};

}  // namespace

std::vector<Rational> edge_coverage(const Hypergraph& g, const Weighting& w) {
    CoverageSum sum(g.edge_count());
    for (const auto& [K, val] : w.entries()) {
        if (static_cast<int>(K.size()) != w.r()) throw InvalidArgument("weighting entry has wrong size");
        for (std::size_t i = 0; i < K.size(); ++i) {
            if (K[i] >= g.n()) throw InvalidArgument("weighting references vertex out of range");
            if (i && K[i] <= K[i - 1]) throw InvalidArgument("weighting entry is not strictly increasing");
        }
        sum.widen(val);
    }
    for (const auto& [K, val] : w.entries()) {
        if (val == 0) continue;
        const BigInt& x = sum.scaled(val);
        bool ok = detail::for_each_subset(K, g.k(), [&](const std::vector<Vertex>& e) {
            std::size_t idx = g.edge_index(e);
            if (idx == Hypergraph::npos) return false;
            sum.add(idx, x);
            return true;
        });
        if (!ok) throw InvalidArgument("weighting references a set that is not a clique");
    }
    for (const auto& [K, val] : w.entries()) {
        if (val != 0) continue;
        bool ok = detail::for_each_subset(K, g.k(), [&](const std::vector<Vertex>& e) {
            return g.edge_index(e) != Hypergraph::npos;
        });
        if (!ok) throw InvalidArgument("weighting references a set that is not a clique");
    }
    return sum.finish();
}

std::vector<Rational> edge_coverage(const Hypergraph& g, const CliqueFamily& family, const std::vector<Rational>& values) {
    CoverageSum sum(g.edge_count());
    for (const auto& v : values) sum.widen(v);
    for (std::size_t c = 0; c < family.size(); ++c) {
        if (values[c] == 0) continue;
        const BigInt& x = sum.scaled(values[c]);
        Clique K = family.clique(c);
        detail::for_each_subset(K, g.k(), [&](const std::vector<Vertex>& e) {
            sum.add(g.edge_index(e), x);
            return true;
        });
    }
    return sum.finish();
}

nlohmann::json to_json(const Weighting& w) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [K, val] : w.entries()) entries.push_back({{"clique", K}, {"weight", to_string(val)}});
    return {{"r", w.r()}, {"entries", std::move(entries)}};
}

Weighting weighting_from_json(const nlohmann::json& j) {
    try {
        Weighting w(j.at("r").get<int>());
        for (const auto& e : j.at("entries")) {
            Clique K = e.at("clique").get<Clique>();
            if (static_cast<int>(K.size()) != w.r()) throw InvalidArgument("clique of wrong size in weighting");
            std::sort(K.begin(), K.end());
            w.add(K, parse_rational(e.at("weight").get<std::string>()));
        }
        return w;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("bad weighting JSON: ") + e.what());
    }
}

}  // namespace fracdecomp
