#include "fracmatch/generators.hpp"

#include <stdexcept>

namespace fracmatch {

Graph gen_triangle_star(int k) {
    if (k < 1) throw std::invalid_argument("triangle-star needs k >= 1");
    Graph g(3 * k + 2);
    g.add_edge(0, 1);  // hub to pendant
    for (int t = 0; t < k; ++t) {
        int a = 2 + 3 * t, b = a + 1, c = a + 2;
        g.add_edge(a, b);
        g.add_edge(a, c);
        g.add_edge(b, c);
        g.add_edge(0, a);
    }
    return g;
}

std::vector<Graph> gen_equality_small() {
    Graph bridged(5);
    bridged.add_edge(0, 1);  // the K2
    bridged.add_edge(2, 3);
    bridged.add_edge(2, 4);
    bridged.add_edge(3, 4);  // the K3
    bridged.add_edge(1, 2);  // bridge
    return {gen_cycle(5), bridged};
}

Graph gen_disjoint_triangles(int k) {
    if (k < 1) throw std::invalid_argument("disjoint triangles needs k >= 1");
    Graph g(3 * k);
    for (int t = 0; t < k; ++t) {
        int a = 3 * t;
        g.add_edge(a, a + 1);
        g.add_edge(a, a + 2);
        g.add_edge(a + 1, a + 2);
    }
    return g;
}

Graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph gen_complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph gen_star(int leaves) {
    if (leaves < 0) throw std::invalid_argument("star needs leaves >= 0");
    Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

}  // namespace fracmatch
