#include "oracles.hpp"

#include <algorithm>
#include <map>

namespace oracle {

Census census(const SocialNetwork& sn, const Labelling& lab) {
    const std::size_t n = sn.node_count();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const auto& e : sn.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
    Census c;
    c.margin.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) (lab[i] == Colour::red ? c.red : c.blue)++;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (adj[i][j]) c.margin[i] += lab[j] == Colour::blue ? 1 : -1;
        }
    }
    if (c.blue != c.red) {
        const int sign = c.blue > c.red ? 1 : -1;
        for (std::size_t i = 0; i < n; ++i) c.illuded += sign * c.margin[i] < 0;
    }
    return c;
}

bool blue_q_illusion(const SocialNetwork& sn, const Labelling& lab, const Fraction& q) {
    const Census c = census(sn, lab);
    if (c.blue <= c.red) return false;
    return static_cast<std::int64_t>(c.illuded) * q.denominator() >=
           q.numerator() * static_cast<std::int64_t>(sn.node_count());
}

Labelling from_bits(std::size_t n, std::uint64_t bits) {
    Labelling lab(n, Colour::blue);
    for (std::size_t i = 0; i < n; ++i) {
        if (bits >> i & 1) lab[i] = Colour::red;
    }
    return lab;
}

bool exists_blue_q_illusion(const SocialNetwork& sn, const Fraction& q) {
    const std::size_t n = sn.node_count();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        if (blue_q_illusion(sn, from_bits(n, bits), q)) return true;
    }
    return false;
}

SocialNetwork random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<illusion::Edge> edges;
    for (illusion::NodeId u = 0; u < n; ++u) {
        for (illusion::NodeId v = u + 1; v < n; ++v) {
            if (coin(rng)) edges.emplace_back(u, v);
        }
    }
    return SocialNetwork(n, edges);
}

SocialNetwork random_tree(std::size_t n, std::mt19937_64& rng) {
    std::vector<illusion::Edge> edges;
    for (illusion::NodeId v = 1; v < n; ++v) {
        std::uniform_int_distribution<illusion::NodeId> pick(0, v - 1);
        edges.emplace_back(pick(rng), v);
    }
    return SocialNetwork(n, edges);
}

namespace {

using Adj = std::vector<std::vector<int>>;

std::string rooted_form(const Adj& adj, int v, int parent) {
    std::vector<std::string> kids;
    for (int w : adj[v]) {
        if (w != parent) kids.push_back(rooted_form(adj, w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string out = "(";
    for (const auto& k : kids) out += k;
    return out + ")";
}

// AHU encoding rooted at the centre (or the smaller of the two bicentre forms).
std::string canonical(const Adj& adj) {
    const int n = static_cast<int>(adj.size());
    if (n == 1) return "()";
    std::vector<int> degree(n);
    std::vector<int> layer;
    for (int v = 0; v < n; ++v) {
        degree[v] = static_cast<int>(adj[v].size());
        if (degree[v] <= 1) layer.push_back(v);
    }
    int left = n;
    while (left > 2) {
        left -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer) {
            for (int w : adj[v]) {
                if (--degree[w] == 1) next.push_back(w);
            }
        }
        layer = next;
    }
    std::string best;
    for (int c : layer) {
        std::string form = rooted_form(adj, c, -1);
        if (best.empty() || form < best) best = form;
    }
    return best;
}

} // namespace

std::vector<SocialNetwork> all_trees(std::size_t n) {
    std::map<std::string, Adj> level{{"()", Adj(1)}};
    for (std::size_t size = 2; size <= n; ++size) {
        std::map<std::string, Adj> next;
        for (const auto& [form, adj] : level) {
            for (std::size_t v = 0; v < adj.size(); ++v) {
                Adj grown = adj;
                grown.emplace_back();
                const int leaf = static_cast<int>(grown.size()) - 1;
                grown[v].push_back(leaf);
                grown[leaf].push_back(static_cast<int>(v));
                next.emplace(canonical(grown), grown);
            }
        }
        level = std::move(next);
    }
    std::vector<SocialNetwork> out;
    for (const auto& [form, adj] : level) {
        std::vector<illusion::Edge> edges;
        for (std::size_t v = 0; v < adj.size(); ++v) {
            for (int w : adj[v]) {
                if (static_cast<std::size_t>(w) > v) edges.emplace_back(static_cast<illusion::NodeId>(v), w);
            }
        }
        out.emplace_back(adj.size(), edges);
    }
    return out;
}

} // namespace oracle
