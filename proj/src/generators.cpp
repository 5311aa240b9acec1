#include "thetacut/generators.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "thetacut/combinatorics.hpp"
#include "thetacut/random.hpp"

namespace thetacut {

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph path_graph(std::size_t n) {
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
    return g;
}

Graph star_graph(std::size_t leaves) {
    Graph g(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(std::size_t n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
    Graph g(a + b);
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

Graph petersen_graph() {
    Graph g(10);
    for (Vertex i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer pentagon
        g.add_edge(i, i + 5);                // spokes
        g.add_edge(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return g;
}

Graph kneser_graph(std::size_t n, std::size_t k) {
    if (k == 0 || n < 2 * k) throw std::invalid_argument("kneser requires k >= 1 and n >= 2k");
    if (n > 63) throw std::invalid_argument("kneser supports n <= 63");
    std::vector<std::uint64_t> subsets;
    // Lexicographic k-subsets via index vectors.
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        std::uint64_t mask = 0;
        for (std::size_t i : idx) mask |= std::uint64_t{1} << i;
        subsets.push_back(mask);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    Graph g(subsets.size());
    for (Vertex u = 0; u < subsets.size(); ++u)
        for (Vertex v = u + 1; v < subsets.size(); ++v)
            if ((subsets[u] & subsets[v]) == 0) g.add_edge(u, v);
    return g;
}

namespace {

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
}

}  // namespace

Graph erdos_renyi_graph(std::size_t n, double p, std::uint64_t seed) {
    check_probability(p);
    Rng rng(mix_seed(seed));
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (uniform01(rng) < p) g.add_edge(u, v);
    return g;
}

Graph h_free_random_graph(std::size_t n, double p, const Graph& forbidden, std::uint64_t seed) {
    if (forbidden.edge_count() == 0)
        throw std::invalid_argument("forbidden graph must have at least one edge");
    Graph g = erdos_renyi_graph(n, p, seed);
    Rng rng(derive_seed(seed, 1));
    const auto pattern_edges = forbidden.edges();
    while (auto image = find_subgraph(g, forbidden)) {
        const auto& [a, b] = pattern_edges[uniform_below(rng, pattern_edges.size())];
        g.remove_edge((*image)[a], (*image)[b]);
    }
    return g;
}

Graph generate(const GraphFamilySpec& spec) {
    const auto need = [&](std::size_t count) {
        if (spec.sizes.size() != count)
            throw std::invalid_argument("family '" + to_string(spec) + "' expects " + std::to_string(count) +
                                        " size parameter(s)");
    };
    switch (spec.family) {
        case Family::empty: need(1); return empty_graph(spec.sizes[0]);
        case Family::path: need(1); return path_graph(spec.sizes[0]);
        case Family::star: need(1); return star_graph(spec.sizes[0]);
        case Family::cycle: need(1); return cycle_graph(spec.sizes[0]);
        case Family::complete: need(1); return complete_graph(spec.sizes[0]);
        case Family::complete_bipartite: need(2); return complete_bipartite_graph(spec.sizes[0], spec.sizes[1]);
        case Family::petersen: need(0); return petersen_graph();
        case Family::kneser: need(2); return kneser_graph(spec.sizes[0], spec.sizes[1]);
        case Family::erdos_renyi: need(1); return erdos_renyi_graph(spec.sizes[0], spec.probability, spec.seed);
        case Family::h_free_random:
            need(1);
            if (!spec.forbidden) throw std::invalid_argument("h_free_random needs a forbidden graph");
            check_probability(spec.probability);
            return h_free_random_graph(spec.sizes[0], spec.probability, *spec.forbidden, spec.seed);
    }
    throw std::invalid_argument("unknown family");
}

namespace {

struct FamilyName {
    Family family;
    std::string_view name;
};

constexpr FamilyName kNames[] = {
    {Family::empty, "empty"},
    {Family::path, "path"},
    {Family::star, "star"},
    {Family::cycle, "cycle"},
    {Family::complete, "complete"},
    {Family::complete_bipartite, "complete_bipartite"},
    {Family::petersen, "petersen"},
    {Family::kneser, "kneser"},
    {Family::erdos_renyi, "erdos_renyi"},
    {Family::h_free_random, "h_free_random"},
};

std::size_t parse_size(std::string_view s, std::string_view context) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
    return value;
}

double parse_real(std::string_view s, std::string_view context) {
    std::istringstream in{std::string(s)};
    double value = 0;
    in >> value;
    if (!in || !in.eof())
        throw std::invalid_argument("bad number '" + std::string(s) + "' in '" + std::string(context) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::optional<GraphFamilySpec> parse_pattern_token(std::string_view t) {
    if (t.size() < 2) return std::nullopt;
    const char kind = t[0];
    const std::string_view rest = t.substr(1);
    if (rest.find_first_not_of("0123456789x") != std::string_view::npos) return std::nullopt;
    GraphFamilySpec spec;
    if (kind == 'K' && rest.find('x') != std::string_view::npos) {
        const auto parts = split(rest, 'x');
        if (parts.size() != 2) return std::nullopt;
        spec.family = Family::complete_bipartite;
        spec.sizes = {parse_size(parts[0], t), parse_size(parts[1], t)};
        return spec;
    }
    if (rest.find('x') != std::string_view::npos) return std::nullopt;
    spec.sizes = {parse_size(rest, t)};
    switch (kind) {
        case 'C': spec.family = Family::cycle; return spec;
        case 'P': spec.family = Family::path; return spec;
        case 'K': spec.family = Family::complete; return spec;
        case 'S': spec.family = Family::star; return spec;
        default: return std::nullopt;
    }
}

}  // namespace

GraphFamilySpec parse_family(std::string_view text) {
    if (auto token = parse_pattern_token(text)) return *token;
    const std::size_t colon = text.find(':');
    const std::string_view name = text.substr(0, colon);
    GraphFamilySpec spec;
    bool known = false;
    for (const auto& entry : kNames)
        if (entry.name == name) {
            spec.family = entry.family;
            known = true;
        }
    if (!known) throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
    std::vector<std::string_view> args;
    if (colon != std::string_view::npos) args = split(text.substr(colon + 1), ',');

    switch (spec.family) {
        case Family::erdos_renyi:
            if (args.size() != 2) throw std::invalid_argument("expected erdos_renyi:n,p");
            spec.sizes = {parse_size(args[0], text)};
            spec.probability = parse_real(args[1], text);
            break;
        case Family::h_free_random: {
            if (args.size() != 3) throw std::invalid_argument("expected h_free_random:n,p,H");
            spec.sizes = {parse_size(args[0], text)};
            spec.probability = parse_real(args[1], text);
            const GraphFamilySpec h = parse_family(args[2]);
            if (h.family == Family::erdos_renyi || h.family == Family::h_free_random)
                throw std::invalid_argument("forbidden graph must be a fixed family");
            spec.forbidden = std::make_shared<const Graph>(generate(h));
            spec.forbidden_name = std::string(args[2]);
            break;
        }
        default:
            for (auto a : args) spec.sizes.push_back(parse_size(a, text));
    }
    if (spec.family == Family::erdos_renyi || spec.family == Family::h_free_random) {
        check_probability(spec.probability);
    } else {
        generate(spec);  // validates the parameter combination
    }
    return spec;
}

std::string to_string(const GraphFamilySpec& spec) {
    std::string out;
    for (const auto& entry : kNames)
        if (entry.family == spec.family) out = entry.name;
    std::vector<std::string> args;
    for (auto s : spec.sizes) args.push_back(std::to_string(s));
    if (spec.family == Family::erdos_renyi || spec.family == Family::h_free_random) {
        std::ostringstream p;
        p << spec.probability;
        args.push_back(p.str());
    }
    if (spec.family == Family::h_free_random) args.push_back(spec.forbidden_name);
    for (std::size_t i = 0; i < args.size(); ++i) out += (i == 0 ? ":" : ",") + args[i];
    return out;
}

}  // namespace thetacut
