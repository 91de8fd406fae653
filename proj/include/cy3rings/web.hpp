#ifndef CY3RINGS_WEB_HPP
#define CY3RINGS_WEB_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cy3rings/recognize.hpp"

namespace cy3 {

struct WebNode {
    int n = 0, m = 0;
    int codim = 0;
    std::optional<int> families;
};

struct WebEdge {
    std::pair<int, int> from;
    std::pair<int, int> to;
    std::string label;  // "project 1/3" or "project 1/5"
};

struct WebGraph {
    std::vector<WebNode> nodes;  // ordered by (n,m)
    std::vector<WebEdge> edges;
    bool connected = false;
};

/// Projection graph between families: edges (n,m)->(n-1,m) from 1/3 points
/// and (n,m)->(n+1,m-1) from 1/5 points, restricted to realised rows.
/// Connectivity is of the underlying undirected graph (empty graph counts
/// as connected).
WebGraph build_web(const std::vector<SearchRow>& rows,
                   const std::map<std::pair<int, int>, int>& families = {});

std::string to_dot(const WebGraph& g);

}  // namespace cy3

#endif
