#pragma once

// Homological combinatorics of plumbing graphs: total weights, the balanced
// condition, kernel generators of H1(boundary) -> H1(plumbed manifold), and
// intersection graphs of colored bounding surfaces.
//
// The 3-manifold itself is never built. Homology classes are sparse rational
// combinations over the symbols [dF] and mu_i^F.

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace colsig {

struct Surface {
    std::string label;
    long genus = 0;
    long boundary = 0;  // number of boundary components n_F
};

/// Undirected edge with u < v; sign is +1 or -1.
struct PlumbingEdge {
    int u;
    int v;
    int sign;
    bool operator==(const PlumbingEdge&) const = default;
};

class PlumbingGraph {
public:
    PlumbingGraph() = default;

    int add_vertex(Surface s);
    /// Throws DomainError for loops, unknown vertices or a sign other than +-1.
    void add_edge(int u, int v, int sign);

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    const std::vector<Surface>& vertices() const { return vertices_; }
    const std::vector<PlumbingEdge>& edges() const { return edges_; }
    const Surface& vertex(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }

    long total_boundary() const;

    bool operator==(const PlumbingGraph&) const = default;

private:
    std::vector<Surface> vertices_;
    std::vector<PlumbingEdge> edges_;
};

/// p(v, w): sum of edge signs between v and w. Throws DomainError for v = w.
long total_weight(const PlumbingGraph& g, int v, int w);

/// All p(v, w) for v < w, row-major.
std::vector<std::vector<long>> weight_matrix(const PlumbingGraph& g);

bool is_balanced(const PlumbingGraph& g);

/// [dF] (index unused) or mu_index^F, 1-based index.
struct HomologySymbol {
    enum class Kind { Boundary, Meridian };
    Kind kind;
    int owner;
    int index;
    auto operator<=>(const HomologySymbol&) const = default;
};

using FormalCombination = std::map<HomologySymbol, mpq_class>;

std::string to_string(const FormalCombination& c, const std::vector<std::string>& owner_labels);

/// One generator [dF] - sum_{e from F} eps(e) mu_1^{t(e)} per vertex with
/// boundary, plus mu_i^F - mu_1^F for 2 <= i <= n_F. An edge into a closed
/// vertex still contributes the formal symbol mu_1 of that vertex.
std::vector<FormalCombination> kernel_basis(const PlumbingGraph& g);

/// Rank over Q of the coefficient matrix of the combinations.
std::size_t rational_rank(const std::vector<FormalCombination>& combos);

struct IntersectionPoint {
    std::string id;
    int i;
    int j;
    int sign;
};

/// Vertices are the surfaces; one edge per intersection point. Throws
/// DomainError for i = j.
PlumbingGraph intersection_graph(const std::vector<Surface>& surfaces, const std::vector<IntersectionPoint>& points);

/// Color-blocked sums of a symmetric component linking matrix; zero
/// diagonal. Colors are 0-based. Throws DomainError for asymmetric input.
std::vector<std::vector<long long>> sublink_linking(const std::vector<std::vector<long long>>& components,
                                                   const std::vector<int>& coloring, int mu);

/// [L_i] - sum_j lk(L_i, L_j) mu_1^{L_j} per color, then mu_k^{L_i} - mu_1^{L_i}.
std::vector<FormalCombination> boundary_kernel_generators(const std::vector<std::vector<long long>>& linking,
                                                          const std::vector<int>& components_per_color);

/// Glue vertex i of a with vertex i of -b along their boundaries: edges of a
/// plus the sign-flipped edges of b. Both graphs need the same vertex count
/// and matching boundary counts; the glued vertices are closed surfaces of
/// genus g_a + g_b + n - 1 (or g_a + g_b when n = 0).
PlumbingGraph doubled_graph(const PlumbingGraph& a, const PlumbingGraph& b);

}  // namespace colsig
