#include "colsig/plumbing.hpp"

#include "colsig/errors.hpp"

#include <algorithm>
#include <sstream>

namespace colsig {

int PlumbingGraph::add_vertex(Surface s) {
    if (s.genus < 0 || s.boundary < 0) throw DomainError("genus and boundary count must be nonnegative");
    vertices_.push_back(std::move(s));
    return num_vertices() - 1;
}

void PlumbingGraph::add_edge(int u, int v, int sign) {
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) throw DomainError("edge endpoint out of range");
    if (u == v) throw DomainError("plumbing graphs have no loops");
    if (sign != 1 && sign != -1) throw DomainError("edge weight must be +1 or -1");
    edges_.push_back({std::min(u, v), std::max(u, v), sign});
}

long PlumbingGraph::total_boundary() const {
    long n = 0;
    for (const auto& s : vertices_) n += s.boundary;
    return n;
}

long total_weight(const PlumbingGraph& g, int v, int w) {
    if (v == w) throw DomainError("total weight needs two distinct vertices");
    if (v < 0 || w < 0 || v >= g.num_vertices() || w >= g.num_vertices()) throw DomainError("vertex out of range");
    const int a = std::min(v, w), b = std::max(v, w);
    long p = 0;
    for (const auto& e : g.edges()) {
        if (e.u == a && e.v == b) p += e.sign;
    }
    return p;
}

std::vector<std::vector<long>> weight_matrix(const PlumbingGraph& g) {
    const auto n = static_cast<std::size_t>(g.num_vertices());
    std::vector<std::vector<long>> w(n, std::vector<long>(n, 0));
    for (const auto& e : g.edges()) {
        w[e.u][e.v] += e.sign;
        w[e.v][e.u] += e.sign;
    }
    return w;
}

bool is_balanced(const PlumbingGraph& g) {
    const auto w = weight_matrix(g);
    for (const auto& row : w) {
        for (long x : row) {
            if (x != 0) return false;
        }
    }
    return true;
}

std::string to_string(const FormalCombination& c, const std::vector<std::string>& owner_labels) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [sym, coeff] : c) {
        const std::string owner = sym.owner < static_cast<int>(owner_labels.size())
                                      ? owner_labels[static_cast<std::size_t>(sym.owner)]
                                      : std::to_string(sym.owner + 1);
        const std::string name = sym.kind == HomologySymbol::Kind::Boundary
                                     ? "[d" + owner + "]"
                                     : "mu" + std::to_string(sym.index) + "^" + owner;
        mpq_class mag = abs(coeff);
        if (first) {
            if (coeff < 0) os << "-";
        } else {
            os << (coeff < 0 ? " - " : " + ");
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << name;
        first = false;
    }
    return os.str();
}

namespace {

HomologySymbol boundary_symbol(int f) { return {HomologySymbol::Kind::Boundary, f, 0}; }
HomologySymbol meridian_symbol(int f, int i) { return {HomologySymbol::Kind::Meridian, f, i}; }

void add_to(FormalCombination& c, const HomologySymbol& s, const mpq_class& x) {
    auto& slot = c[s];
    slot += x;
    if (slot == 0) c.erase(s);
}

}  // namespace

std::vector<FormalCombination> kernel_basis(const PlumbingGraph& g) {
    std::vector<FormalCombination> out;
    for (int f = 0; f < g.num_vertices(); ++f) {
        if (g.vertex(f).boundary == 0) continue;
        FormalCombination gen;
        add_to(gen, boundary_symbol(f), 1);
        for (const auto& e : g.edges()) {
            if (e.u == f) add_to(gen, meridian_symbol(e.v, 1), -e.sign);
            if (e.v == f) add_to(gen, meridian_symbol(e.u, 1), -e.sign);
        }
        out.push_back(std::move(gen));
    }
    for (int f = 0; f < g.num_vertices(); ++f) {
        for (int i = 2; i <= g.vertex(f).boundary; ++i) {
            FormalCombination gen;
            add_to(gen, meridian_symbol(f, i), 1);
            add_to(gen, meridian_symbol(f, 1), -1);
            out.push_back(std::move(gen));
        }
    }
    return out;
}

std::size_t rational_rank(const std::vector<FormalCombination>& combos) {
    std::map<HomologySymbol, std::size_t> column;
    for (const auto& c : combos) {
        for (const auto& [s, x] : c) column.emplace(s, 0);
    }
    std::size_t k = 0;
    for (auto& [s, idx] : column) idx = k++;

    std::vector<std::vector<mpq_class>> m;
    for (const auto& c : combos) {
        std::vector<mpq_class> row(k);
        for (const auto& [s, x] : c) row[column[s]] = x;
        m.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < k && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][col] == 0) continue;
            const mpq_class f = m[r][col] / m[rank][col];
            for (std::size_t c = col; c < k; ++c) m[r][c] -= f * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

PlumbingGraph intersection_graph(const std::vector<Surface>& surfaces, const std::vector<IntersectionPoint>& points) {
    PlumbingGraph g;
    for (const auto& s : surfaces) g.add_vertex(s);
    for (const auto& p : points) {
        if (p.i == p.j) {
            throw DomainError("intersection point " + p.id + " is a self-intersection, which is not supported");
        }
        g.add_edge(p.i, p.j, p.sign);
    }
    return g;
}

std::vector<std::vector<long long>> sublink_linking(const std::vector<std::vector<long long>>& components,
                                                   const std::vector<int>& coloring, int mu) {
    const std::size_t n = components.size();
    if (coloring.size() != n) throw DimensionError("coloring must assign a color to every component");
    for (const auto& row : components) {
        if (row.size() != n) throw DimensionError("component linking matrix must be square");
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (components[a][b] != components[b][a]) throw DomainError("component linking matrix is not symmetric");
        }
    }
    for (int c : coloring) {
        if (c < 0 || c >= mu) throw DomainError("color out of range");
    }
    std::vector<std::vector<long long>> out(static_cast<std::size_t>(mu), std::vector<long long>(mu, 0));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b || coloring[a] == coloring[b]) continue;
            out[coloring[a]][coloring[b]] += components[a][b];
        }
    }
    return out;
}

std::vector<FormalCombination> boundary_kernel_generators(const std::vector<std::vector<long long>>& linking,
                                                          const std::vector<int>& components_per_color) {
    const std::size_t mu = linking.size();
    if (components_per_color.size() != mu) throw DimensionError("one component count per color is required");
    for (const auto& row : linking) {
        if (row.size() != mu) throw DimensionError("linking matrix must be square");
    }
    std::vector<FormalCombination> out;
    for (std::size_t i = 0; i < mu; ++i) {
        FormalCombination gen;
        add_to(gen, boundary_symbol(static_cast<int>(i)), 1);
        for (std::size_t j = 0; j < mu; ++j) {
            if (j == i || linking[i][j] == 0) continue;
            add_to(gen, meridian_symbol(static_cast<int>(j), 1), mpq_class(-static_cast<long>(linking[i][j])));
        }
        out.push_back(std::move(gen));
    }
    for (std::size_t i = 0; i < mu; ++i) {
        for (int k = 2; k <= components_per_color[i]; ++k) {
            FormalCombination gen;
            add_to(gen, meridian_symbol(static_cast<int>(i), k), 1);
            add_to(gen, meridian_symbol(static_cast<int>(i), 1), -1);
            out.push_back(std::move(gen));
        }
    }
    return out;
}

PlumbingGraph doubled_graph(const PlumbingGraph& a, const PlumbingGraph& b) {
    if (a.num_vertices() != b.num_vertices()) throw DomainError("doubling needs graphs on the same vertex set");
    PlumbingGraph g;
    for (int v = 0; v < a.num_vertices(); ++v) {
        const auto& sa = a.vertex(v);
        const auto& sb = b.vertex(v);
        if (sa.boundary != sb.boundary) throw DomainError("glued surfaces must have matching boundary counts");
        const long n = sa.boundary;
        g.add_vertex({sa.label, sa.genus + sb.genus + (n > 0 ? n - 1 : 0), 0});
    }
    for (const auto& e : a.edges()) g.add_edge(e.u, e.v, e.sign);
    for (const auto& e : b.edges()) g.add_edge(e.u, e.v, -e.sign);
    return g;
}

}  // namespace colsig
