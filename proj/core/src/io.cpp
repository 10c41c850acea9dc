#include "fracdecomp/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "fracdecomp/errors.hpp"

namespace fracdecomp {

namespace {

std::vector<unsigned long long> parse_numbers(std::string_view line, std::size_t lineno) {
    std::vector<unsigned long long> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i == line.size()) break;
        unsigned long long v = 0;
        auto [p, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
        if (ec != std::errc() || (p != line.data() + line.size() && *p != ' ' && *p != '\t' && *p != '\r'))
            throw ParseError(lineno, "expected non-negative integers");
        out.push_back(v);
        i = static_cast<std::size_t>(p - line.data());
    }
    return out;
}

}  // namespace

Hypergraph load_text(std::string_view text) {
    std::size_t n = 0;
    int k = 0;
    bool have_header = false;
    std::vector<Clique> edges;
    std::map<Clique, std::size_t> seen;
    std::size_t lineno = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++lineno;
        auto nums = parse_numbers(line, lineno);
        if (nums.empty()) continue;
        if (!have_header) {
            if (nums.size() != 2) throw ParseError(lineno, "header must be \"n k\"");
            if (nums[1] < 2) throw ParseError(lineno, "uniformity must be at least 2");
            if (nums[0] > 0xFFFFFFFFull || nums[1] > 64) throw ParseError(lineno, "header values too large");
            n = nums[0];
            k = static_cast<int>(nums[1]);
            have_header = true;
            continue;
        }
        if (nums.size() != static_cast<std::size_t>(k))
            throw ParseError(lineno, "edge has " + std::to_string(nums.size()) + " vertices, expected " + std::to_string(k));
        Clique e;
        for (auto v : nums) {
            if (v >= n) throw ParseError(lineno, "vertex " + std::to_string(v) + " out of range");
            e.push_back(static_cast<Vertex>(v));
        }
        std::sort(e.begin(), e.end());
        for (std::size_t i = 1; i < e.size(); ++i)
            if (e[i] == e[i - 1]) throw ParseError(lineno, "repeated vertex " + std::to_string(e[i]));
        auto [it, fresh] = seen.emplace(e, lineno);
        if (!fresh) throw ParseError(lineno, "duplicate edge (first seen on line " + std::to_string(it->second) + ")");
        edges.push_back(std::move(e));
    }
    if (!have_header) throw ParseError(lineno, "missing header");
    return Hypergraph(n, k, std::move(edges));
}

std::string save_text(const Hypergraph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.k() << '\n';
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        auto e = g.edge(i);
        for (std::size_t t = 0; t < e.size(); ++t) out << (t ? " " : "") << e[t];
        out << '\n';
    }
    return out.str();
}

nlohmann::json to_json(const Hypergraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        auto e = g.edge(i);
        edges.push_back(std::vector<Vertex>(e.begin(), e.end()));
    }
    return {{"n", g.n()}, {"k", g.k()}, {"edges", std::move(edges)}};
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
    try {
        auto edges = j.at("edges").get<std::vector<Clique>>();
        return Hypergraph(j.at("n").get<std::size_t>(), j.at("k").get<int>(), std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("bad hypergraph JSON: ") + e.what());
    }
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw Error("cannot open " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& p, std::string_view contents) {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + p.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw Error("write failed for " + p.string());
}

Hypergraph load_file(const std::filesystem::path& p) { return load_text(read_file(p)); }

}  // namespace fracdecomp
