#include "smellvuln/graph.hpp"

#include <algorithm>
#include <limits>

namespace smellvuln {

std::vector<std::vector<std::size_t>> strongly_connected_components(const std::vector<std::vector<std::size_t>>& adjacency)
{
    constexpr std::size_t kUnvisited = std::numeric_limits<std::size_t>::max();
    const std::size_t n = adjacency.size();
    std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> components;
    std::size_t counter = 0;

    // Explicit DFS frames: (node, next edge position).
    std::vector<std::pair<std::size_t, std::size_t>> frames;
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        frames.emplace_back(root, 0);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;

        while (!frames.empty()) {
            auto& [v, edge] = frames.back();
            if (edge < adjacency[v].size()) {
                const std::size_t w = adjacency[v][edge++];
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const std::size_t done = v;
            frames.pop_back();
            if (!frames.empty()) {
                const std::size_t parent = frames.back().first;
                low[parent] = std::min(low[parent], low[done]);
            }
            if (low[done] == index[done]) {
                std::vector<std::size_t> component;
                std::size_t w = 0;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component.push_back(w);
                } while (w != done);
                std::sort(component.begin(), component.end());
                components.push_back(std::move(component));
            }
        }
    }
    std::sort(components.begin(), components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return components;
}

std::vector<std::vector<std::string>> cyclic_components(const std::vector<std::string>& nodes,
                                                        const std::map<std::string, std::set<std::string>>& out)
{
    std::map<std::string, std::size_t> id;
    for (const auto& node : nodes) id.emplace(node, id.size());
    std::vector<std::string> names(id.size());
    for (const auto& [name, i] : id) names[i] = name;

    std::vector<std::vector<std::size_t>> adjacency(id.size());
    for (const auto& [from, targets] : out) {
        auto f = id.find(from);
        if (f == id.end()) continue;
        for (const auto& to : targets) {
            auto t = id.find(to);
            if (t != id.end() && t->second != f->second) adjacency[f->second].push_back(t->second);
        }
    }

    std::vector<std::vector<std::string>> result;
    for (const auto& component : strongly_connected_components(adjacency)) {
        if (component.size() < 2) continue;
        std::vector<std::string> members;
        for (std::size_t i : component) members.push_back(names[i]);
        std::sort(members.begin(), members.end());
        result.push_back(std::move(members));
    }
    std::sort(result.begin(), result.end());
    return result;
}

} // namespace smellvuln
