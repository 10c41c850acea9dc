#include "fracdecomp/audit.hpp"

#include <algorithm>
#include <sstream>

#include "combinatorics.hpp"
#include "fracdecomp/cliques.hpp"
#include "fracdecomp/errors.hpp"
#include "fracdecomp/rational.hpp"

namespace fracdecomp {

namespace {

Rational rat(const BigInt& v) { return Rational(v); }

Rational rpow(const Rational& b, long e) {
    Rational out = 1;
    for (long i = 0; i < e; ++i) out *= b;
    return out;
}

std::string tuple_text(std::span<const Vertex> s) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << '}';
    return os.str();
}

AuditCheck skipped(std::string name, std::string why) { return {std::move(name), AuditStatus::skipped, std::move(why)}; }

struct Outcome {
    explicit Outcome(std::string n) : name(std::move(n)) {}

    std::string name;
    std::size_t tested = 0;
    std::string witness;

    void fail(std::string w) {
        if (witness.empty()) witness = std::move(w);
    }
    AuditCheck check() const {
        if (!witness.empty()) return {name, AuditStatus::failed, witness};
        return {name, AuditStatus::passed, std::to_string(tested) + " cases"};
    }
};

bool codegree_holds(const Hypergraph& g, const Rational& delta) {
    auto d = g.min_j_degree(g.k() - 1).min_degree;
    return Rational(static_cast<unsigned long>(d)) >= (1 - delta) * rat(g.n());
}

bool graph_degree_holds(const Hypergraph& g, const Rational& delta) {
    return rat(g.n() - g.min_degree()) <= delta * rat(g.n());
}

std::vector<BigInt> clique_counts_upto(const Hypergraph& g, int r) {
    std::vector<BigInt> k(r + 1);
    for (int i = 0; i <= r; ++i) k[i] = count_cliques(g, i);
    return k;
}

}  // namespace

const char* to_string(AuditStatus s) {
    switch (s) {
        case AuditStatus::passed: return "pass";
        case AuditStatus::failed: return "FAIL";
        case AuditStatus::skipped: return "skip";
    }
    return "?";
}

std::size_t AuditReport::count(AuditStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [&](const AuditCheck& c) { return c.status == s; }));
}

nlohmann::json to_json(const AuditReport& rep) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& c : rep.checks) a.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
    return a;
}

Rational observed_delta(const Hypergraph& g) {
    if (g.n() == 0) return 0;
    auto d = g.min_j_degree(g.k() - 1).min_degree;
    return Rational(static_cast<long>(g.n()) - static_cast<long>(d), static_cast<unsigned long>(g.n()));
}

AuditReport audit_min_degrees(const Hypergraph& g, const Rational& delta) {
    AuditReport rep;
    const std::string name = "min-j-degree";
    if (!(delta > 0 && delta < 1)) {
        rep.checks.push_back(skipped(name, "needs 0 < delta < 1"));
        return rep;
    }
    if (!codegree_holds(g, delta)) {
        rep.checks.push_back(skipped(name, "codegree below (1-delta)n"));
        return rep;
    }
    Outcome out{name};
    for (int j = 1; j <= g.k() - 1; ++j) {
        auto p = g.min_j_degree(j);
        Rational lb = (1 - delta) * Rational(binomial(static_cast<long>(g.n()) - j, g.k() - j));
        ++out.tested;
        if (Rational(static_cast<unsigned long>(p.min_degree)) < lb)
            out.fail("j=" + std::to_string(j) + " S=" + tuple_text(p.arg_min) + " d(S)=" +
                     std::to_string(p.min_degree) + " < " + to_string(lb));
    }
    rep.checks.push_back(out.check());
    return rep;
}

AuditReport audit_clique_counts(const Hypergraph& g, int r, const Rational& delta) {
    AuditReport rep;
    const long n = static_cast<long>(g.n());
    const int k = g.k();
    const std::string gname = "clique-count-global", ename = "clique-count-edge";
    std::string why;
    if (!(n > r && r > k)) why = "needs n > r > k";
    else if (!(delta * n >= 1 && delta < 1)) why = "needs 1/n <= delta < 1";
    else if (!codegree_holds(g, delta)) why = "codegree below (1-delta)n";
    if (!why.empty()) {
        rep.checks.push_back(skipped(gname, why));
        rep.checks.push_back(skipped(ename, why));
        return rep;
    }
    BigInt kr = count_cliques(g, r);
    BigInt bn = binomial(n, r);
    Outcome glob{gname};
    glob.tested = 1;
    Rational lb = (1 - Rational(binomial(r, k)) * delta) * Rational(bn);
    if (Rational(kr) < lb) glob.fail("k_r=" + to_string(kr) + " < " + to_string(lb));
    if (kr > bn) glob.fail("k_r=" + to_string(kr) + " > C(n,r)=" + to_string(bn));
    if (Rational(bn) > rpow(Rational(n), r) / Rational(factorial(r)))
        glob.fail("C(n,r) > n^r/r!");
    rep.checks.push_back(glob.check());

    BigInt krk = count_cliques(g, r - k);
    Rational slack = Rational(2 * k) * delta * rpow(Rational(n), r - k) * Rational(binomial(r, k - 1)) /
                     Rational(factorial(r - k));
    Rational elb = Rational(krk) - slack;
    Outcome edge{ename};
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        auto e = g.edge(i);
        BigInt ke = extensions(g, e, r);
        ++edge.tested;
        if (Rational(ke) < elb)
            edge.fail("e=" + tuple_text(e) + " kappa=" + to_string(ke) + " < " + to_string(elb));
        else if (ke > krk)
            edge.fail("e=" + tuple_text(e) + " kappa=" + to_string(ke) + " > k_{r-k}=" + to_string(krk));
    }
    rep.checks.push_back(edge.check());
    return rep;
}

AuditReport audit_clique_ratio(const Hypergraph& g, int r) {
    AuditReport rep;
    const std::string name = "clique-ratio";
    if (!g.is_graph() || r < 1) {
        rep.checks.push_back(skipped(name, "graphs with r >= 1 only"));
        return rep;
    }
    const long n = static_cast<long>(g.n());
    if (n == 0 || 2L * r * (n - static_cast<long>(g.min_degree())) > n) {
        rep.checks.push_back(skipped(name, "min degree below (1-1/2r)n"));
        return rep;
    }
    auto kc = clique_counts_upto(g, r);
    Outcome out{name};
    for (int i = 1; i <= r; ++i) {
        ++out.tested;
        BigInt lhs = kc[r - i];
        BigInt ni = 1, ri = 1;
        for (int t = 0; t < i; ++t) {
            ni *= n;
            ri *= 2 * r;
        }
        if (lhs * ni > ri * kc[r])
            out.fail("i=" + std::to_string(i) + " k_{r-i}=" + to_string(lhs) + " k_r=" + to_string(kc[r]));
    }
    rep.checks.push_back(out.check());
    return rep;
}

AuditReport audit_clique_estimates(const Hypergraph& g, int r, const Rational& delta) {
    AuditReport rep;
    const std::string n1 = "clique-estimate-first", n2 = "clique-estimate-second", n3 = "edge-estimate-third";
    std::string why;
    if (!g.is_graph() || r < 2) why = "graphs with r >= 2 only";
    else if (delta * (2 * r) > 1) why = "needs delta <= 1/2r";
    else if (!graph_degree_holds(g, delta)) why = "min degree below (1-delta)n";
    if (!why.empty()) {
        for (const auto& s : {n1, n2, n3}) rep.checks.push_back(skipped(s, why));
        return rep;
    }
    const std::size_t n = g.n();
    auto kc = clique_counts_upto(g, r);
    auto kat = [&](int i) { return i < 0 ? BigInt(0) : kc[i]; };
    std::vector<VertexSet> nc(n);
    for (Vertex v = 0; v < n; ++v) nc[v] = g.non_neighbors(v);

    Outcome o1{n1}, o2{n2};
    for (int t = 1; t < r; ++t) {
        auto Zs = enumerate_cliques(g, t);
        Rational tdr = Rational(t) * delta * r;
        for (std::size_t i = 0; i < Zs.size(); ++i) {
            auto Z = Zs[i];
            BigInt kz = extensions(g, Z, r);
            Rational diff = Rational(kz) - Rational(kat(r - t));
            ++o1.tested;
            if (abs(diff) > 2 * tdr * Rational(kat(r - t)))
                o1.fail("Z=" + tuple_text(Z) + " kappa=" + to_string(kz) + " k_{r-t}=" + to_string(kat(r - t)));
            VertexSet u(n);
            for (Vertex z : Z) u |= nc[z];
            Rational d2 = diff + rat(u.count()) * Rational(kat(r - t - 1));
            ++o2.tested;
            if (abs(d2) > 6 * tdr * tdr * Rational(kat(r - t)))
                o2.fail("Z=" + tuple_text(Z) + " residual=" + to_string(d2));
        }
    }
    rep.checks.push_back(o1.check());
    rep.checks.push_back(o2.check());

    Outcome o3{n3};
    Rational dr = delta * r;
    Rational lim = 11 * dr * dr * dr * dr * Rational(kat(r - 2));
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        auto e = g.edge(i);
        VertexSet u = nc[e[0]];
        u |= nc[e[1]];
        auto U = u.to_vector();
        Rational est = Rational(kat(r - 2));
        for (int s = 1; s <= 3; ++s) {
            BigInt sum = 0;
            if (s <= r - 2) {
                detail::for_each_subset(U, s, [&](const std::vector<Vertex>& Y) {
                    sum += extensions(g, Y, r - 2);
                    return true;
                });
            }
            est += (s % 2 ? -1 : 1) * Rational(sum);
        }
        BigInt kxy = extensions(g, e, r);
        ++o3.tested;
        Rational d = Rational(kxy) - est;
        if (abs(d) > lim) o3.fail("e=" + tuple_text(e) + " residual=" + to_string(d) + " > " + to_string(lim));
    }
    rep.checks.push_back(o3.check());
    return rep;
}

AuditReport audit_large_intersections(const Hypergraph& g, int r, const std::vector<Vertex>& X) {
    AuditReport rep;
    const std::string name = "large-intersection";
    if (!g.is_graph() || r < 3) {
        rep.checks.push_back(skipped(name, "graphs with r >= 3 only"));
        return rep;
    }
    const long n = static_cast<long>(g.n());
    if (n == 0) {
        rep.checks.push_back(skipped(name, "empty graph"));
        return rep;
    }
    // δ = 1/(600 r^{3/2}); compare after squaring.
    BigInt gap = BigInt(n - static_cast<long>(g.min_degree())) * 600;
    if (gap * gap * r * r * r > BigInt(n) * n) {
        rep.checks.push_back(skipped(name, "min degree below (1-1/600r^{3/2})n"));
        return rep;
    }
    BigInt xs = BigInt(static_cast<unsigned long>(X.size())) * 600;
    if (xs * xs * r > BigInt(n) * n) {
        rep.checks.push_back(skipped(name, "|X| above delta r n"));
        return rep;
    }
    auto counts = count_cliques_by_intersection(g, r, X);
    BigInt kr = 0, big = 0;
    for (int t = 0; t <= r; ++t) {
        kr += counts[t];
        if (ge_sqrt(t, r)) big += counts[t];
    }
    Outcome out{name};
    out.tested = 1;
    if (big * r * r > kr) out.fail("|A|=" + to_string(big) + " k_r=" + to_string(kr));
    rep.checks.push_back(out.check());
    return rep;
}

AuditReport audit_instance(const Hypergraph& g, int r) {
    AuditReport rep;
    Rational d = observed_delta(g);
    rep.append(audit_min_degrees(g, d));
    Rational d32 = d * g.n() < 1 ? Rational(1, static_cast<unsigned long>(g.n())) : d;
    rep.append(audit_clique_counts(g, r, d32));
    if (g.is_graph()) {
        rep.append(audit_clique_ratio(g, r));
        rep.append(audit_clique_estimates(g, r, d));
        const long n = static_cast<long>(g.n());
        long m = 0;
        while (m < n && BigInt(600 * (m + 1)) * (600 * (m + 1)) * r <= BigInt(n) * n) ++m;
        std::vector<Vertex> X;
        for (long v = 0; v < m; ++v) X.push_back(static_cast<Vertex>(v));
        rep.append(audit_large_intersections(g, r, X));
    }
    return rep;
}

}  // namespace fracdecomp
