#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

namespace porofem {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using Vec = Eigen::VectorXd;

// Boundary segments of the unit square, numbered as in the benchmark problems:
// Gamma1 = {x1 = 1}, Gamma2 = {x2 = 0}, Gamma3 = {x1 = 0}, Gamma4 = {x2 = 1}.
enum class SegmentTag : int { Gamma1 = 0, Gamma2 = 1, Gamma3 = 2, Gamma4 = 3 };

constexpr int kNoTag = -1;

const char* segment_name(SegmentTag tag);

struct MeshEdge {
    int v0 = -1, v1 = -1;      // endpoint vertex ids, v0 < v1
    int tri0 = -1, tri1 = -1;  // adjacent triangles; tri1 == -1 on the boundary
    int tag = kNoTag;          // SegmentTag as int for boundary edges
    bool boundary() const { return tri1 < 0; }
};

// Conforming triangulation of an axis-aligned rectangle with tagged boundary
// segments. Immutable after construction; refinement returns a new mesh.
// Entities are vertices (ids 0..nv-1) and edge midpoints (ids nv..nv+ne-1);
// the latter carry the quadratic degrees of freedom.
class Mesh {
public:
    // Uniform n x n grid of the unit square, each cell split by the diagonal
    // from its lower-left to its upper-right corner. h = sqrt(2)/n.
    static Mesh unit_square(int n);

    // Uniform red refinement: every triangle is split into four similar
    // children through its edge midpoints. Boundary tags are inherited.
    Mesh refined() const;

    int n_vertices() const { return static_cast<int>(vertices_.size()); }
    int n_triangles() const { return static_cast<int>(triangles_.size()); }
    int n_edges() const { return static_cast<int>(edges_.size()); }
    int n_entities() const { return n_vertices() + n_edges(); }

    const Vec2& vertex(int v) const { return vertices_[v]; }
    const std::array<int, 3>& triangle(int t) const { return triangles_[t]; }
    const MeshEdge& edge(int e) const { return edges_[e]; }
    // Edge ids of triangle t; local edge k lies opposite local vertex k.
    const std::array<int, 3>& triangle_edges(int t) const { return tri_edges_[t]; }

    double h() const { return h_; }
    double triangle_area(int t) const;
    double total_area() const;

    // Coordinate of an entity: the vertex itself or the edge midpoint.
    Vec2 entity_coordinate(int entity) const;

    // All entities (vertices and edge midpoints) lying on boundary edges with
    // one of the given tags. Corner entities belong to every incident
    // segment's set. Result is sorted and duplicate-free.
    std::vector<int> boundary_entities(const std::vector<SegmentTag>& tags) const;

    // Boundary edge ids carrying one of the given tags, sorted.
    std::vector<int> boundary_edges(const std::vector<SegmentTag>& tags) const;

    // Outward unit normal of a boundary edge.
    Vec2 outward_normal(int edge) const;

    // Checks all structural invariants; throws std::runtime_error on failure.
    void validate() const;

    // Plain-text export: "OFF" header line, then "<nv> <nt>", then nv lines
    // "x y" and nt lines "v0 v1 v2".
    void write_off(std::ostream& out) const;

private:
    Mesh() = default;
    // Builds edges, adjacency and h from vertices/triangles; boundary tags
    // are assigned by the callable (edge midpoint -> tag).
    template <class TagFn>
    static Mesh build(std::vector<Vec2> vertices,
                      std::vector<std::array<int, 3>> triangles, TagFn&& tag_of);

    std::vector<Vec2> vertices_;
    std::vector<std::array<int, 3>> triangles_;
    std::vector<MeshEdge> edges_;
    std::vector<std::array<int, 3>> tri_edges_;
    double h_ = 0.0;
};

double signed_area(const Vec2& a, const Vec2& b, const Vec2& c);

}  // namespace porofem
