#include "cy3rings/web.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cy3 {

WebGraph build_web(const std::vector<SearchRow>& rows,
                   const std::map<std::pair<int, int>, int>& families) {
    WebGraph g;
    std::set<std::pair<int, int>> present;
    for (const auto& row : rows) {
        if (row.status != "ok" || !row.candidate) continue;
        auto key = std::make_pair(row.n, row.m);
        if (!present.insert(key).second) continue;
        WebNode node;
        node.n = row.n;
        node.m = row.m;
        node.codim = row.candidate->codim_estimate;
        auto fam = families.find(key);
        if (fam != families.end()) node.families = fam->second;
        g.nodes.push_back(node);
    }
    std::sort(g.nodes.begin(), g.nodes.end(), [](const WebNode& a, const WebNode& b) {
        return std::make_pair(a.n, a.m) < std::make_pair(b.n, b.m);
    });

    for (const auto& node : g.nodes) {
        if (node.n >= 1 && present.count({node.n - 1, node.m}))
            g.edges.push_back({{node.n, node.m}, {node.n - 1, node.m}, "project 1/3"});
        if (node.m >= 1 && present.count({node.n + 1, node.m - 1}))
            g.edges.push_back({{node.n, node.m}, {node.n + 1, node.m - 1}, "project 1/5"});
    }

    // connectivity of the underlying undirected graph; empty or single-node
    // graphs are connected
    if (g.nodes.empty()) {
        g.connected = true;
        return g;
    }
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> adj;
    for (const auto& e : g.edges) {
        adj[e.from].push_back(e.to);
        adj[e.to].push_back(e.from);
    }
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> stack{{g.nodes.front().n, g.nodes.front().m}};
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        if (!seen.insert(v).second) continue;
        for (const auto& u : adj[v]) stack.push_back(u);
    }
    g.connected = seen.size() == present.size();
    return g;
}

std::string to_dot(const WebGraph& g) {
    std::ostringstream out;
    out << "digraph web {\n";
    for (const auto& node : g.nodes) {
        out << "  \"(" << node.n << "," << node.m << ")\" [label=\"(" << node.n << "," << node.m
            << ")\\ncodim " << node.codim;
        if (node.families) out << "\\n" << *node.families << " families";
        out << "\"];\n";
    }
    for (const auto& e : g.edges) {
        out << "  \"(" << e.from.first << "," << e.from.second << ")\" -> \"(" << e.to.first << ","
            << e.to.second << ")\" [label=\"" << e.label << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace cy3
