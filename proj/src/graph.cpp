#include "raagmcg/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <stdexcept>

#include "json.hpp"

namespace raagmcg {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

// Natural order: purely numeric labels compare by value, so "10" sorts after
// "2"; everything else falls back to plain string order.
bool natural_less(const std::string& a, const std::string& b) {
    const bool na = all_digits(a), nb = all_digits(b);
    if (na && nb) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
    if (na != nb) return na;  // numbers before words
    return a < b;
}

}  // namespace

Graph::Graph(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.size() > 64)
        throw std::invalid_argument("graph: at most 64 vertices supported");
    for (const auto& l : labels_)
        if (l.empty()) throw std::invalid_argument("graph: empty vertex label");
    std::sort(labels_.begin(), labels_.end(), natural_less);
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
        throw std::invalid_argument("graph: duplicate vertex label");
    adj_.assign(labels_.size(), 0);
}

Graph Graph::path(int m) {
    if (m < 0) throw std::invalid_argument("path: negative length");
    std::vector<std::string> labels;
    for (int i = 1; i <= m; ++i) labels.push_back(std::to_string(i));
    Graph g(std::move(labels));
    for (int i = 1; i < m; ++i) g.add_edge(i - 1, i);
    return g;
}

Graph Graph::cycle(int m) {
    if (m < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
    Graph g = path(m);
    g.add_edge(m - 1, 0);
    return g;
}

std::optional<int> Graph::index_of(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

void Graph::add_edge(int i, int j) {
    if (i < 0 || j < 0 || i >= size() || j >= size())
        throw std::out_of_range("graph: vertex index out of range");
    if (i == j) throw std::invalid_argument("graph: loops not allowed");
    adj_[i] |= (uint64_t{1} << j);
    adj_[j] |= (uint64_t{1} << i);
}

void Graph::add_edge(const std::string& u, const std::string& v) {
    auto i = index_of(u), j = index_of(v);
    if (!i || !j) throw std::invalid_argument("graph: unknown vertex label in edge");
    add_edge(*i, *j);
}

bool Graph::adjacent(int i, int j) const {
    if (i < 0 || j < 0 || i >= size() || j >= size())
        throw std::out_of_range("graph: vertex index out of range");
    return (adj_[i] >> j) & 1;
}

int Graph::degree(int i) const { return std::popcount(neighbors_mask(i)); }

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
}

int Graph::edge_count() const { return static_cast<int>(edges().size()); }

Graph Graph::complement() const {
    Graph g(labels_);
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (!adjacent(i, j)) g.add_edge(i, j);
    return g;
}

Graph Graph::induced_subgraph(const std::vector<int>& vertices) const {
    std::vector<std::string> labels;
    for (int v : vertices) labels.push_back(label(v));
    Graph g(std::move(labels));
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (adjacent(vertices[i], vertices[j]))
                g.add_edge(g.index_of(label(vertices[i])).value(),
                           g.index_of(label(vertices[j])).value());
    return g;
}

namespace {

void extend_embedding(const Graph& pattern, const Graph& host, std::vector<int>& image,
                      uint64_t used, std::vector<std::vector<int>>& out) {
    const int k = static_cast<int>(image.size());
    if (k == pattern.size()) {
        out.push_back(image);
        return;
    }
    const int np = pattern.size(), nh = host.size();
    for (int h = 0; h < nh; ++h) {
        if ((used >> h) & 1) continue;
        // degree pruning valid for full embeddings in both directions
        if (host.degree(h) < pattern.degree(k)) continue;
        if (nh - 1 - host.degree(h) < np - 1 - pattern.degree(k)) continue;
        bool fits = true;
        for (int j = 0; j < k; ++j) {
            if (pattern.adjacent(j, k) != host.adjacent(image[j], h)) {
                fits = false;
                break;
            }
        }
        if (!fits) continue;
        image.push_back(h);
        extend_embedding(pattern, host, image, used | (uint64_t{1} << h), out);
        image.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> find_full_embeddings(const Graph& pattern, const Graph& host) {
    std::vector<std::vector<int>> out;
    if (pattern.size() > host.size()) return out;
    std::vector<int> image;
    extend_embedding(pattern, host, image, 0, out);
    return out;
}

Graph graph_from_json(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("graph json: parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw std::invalid_argument("graph json: need object with a 'vertices' array");
    std::vector<std::string> labels;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw std::invalid_argument("graph json: vertex labels must be strings");
        labels.push_back(v.get<std::string>());
    }
    Graph g(std::move(labels));
    if (!j.contains("edges") || !j["edges"].is_array())
        throw std::invalid_argument("graph json: need an 'edges' array");
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw std::invalid_argument("graph json: each edge must be a pair of labels");
        g.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
    }
    std::string convention = j.value("convention", std::string("anticommutation"));
    if (convention == "commutation")
        g = g.complement();  // normalize: stored edges mean "do not commute"
    else if (convention != "anticommutation")
        throw std::invalid_argument("graph json: convention must be 'anticommutation' or 'commutation'");
    return g;
}

std::string graph_to_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["vertices"] = g.labels();
    auto edges = nlohmann::ordered_json::array();
    for (auto [i, k] : g.edges())
        edges.push_back({g.label(i), g.label(k)});
    j["edges"] = std::move(edges);
    j["convention"] = "anticommutation";
    return j.dump(2);
}

}  // namespace raagmcg
