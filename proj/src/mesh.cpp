#include "porofem/mesh.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>

namespace porofem {

const char* segment_name(SegmentTag tag) {
    switch (tag) {
        case SegmentTag::Gamma1: return "Gamma1";
        case SegmentTag::Gamma2: return "Gamma2";
        case SegmentTag::Gamma3: return "Gamma3";
        case SegmentTag::Gamma4: return "Gamma4";
    }
    return "?";
}

double signed_area(const Vec2& a, const Vec2& b, const Vec2& c) {
    return 0.5 * ((b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x()));
}

template <class TagFn>
Mesh Mesh::build(std::vector<Vec2> vertices, std::vector<std::array<int, 3>> triangles,
                 TagFn&& tag_of) {
    Mesh m;
    m.vertices_ = std::move(vertices);
    m.triangles_ = std::move(triangles);

    // Unique edges keyed by sorted vertex pair; std::map keeps the numbering
    // independent of triangle traversal order.
    std::map<std::pair<int, int>, int> edge_ids;
    for (const auto& tri : m.triangles_) {
        for (int k = 0; k < 3; ++k) {
            int a = tri[(k + 1) % 3], b = tri[(k + 2) % 3];
            if (a > b) std::swap(a, b);
            edge_ids.emplace(std::make_pair(a, b), 0);
        }
    }
    int next = 0;
    for (auto& [key, id] : edge_ids) id = next++;

    m.edges_.resize(edge_ids.size());
    for (const auto& [key, id] : edge_ids) {
        m.edges_[id].v0 = key.first;
        m.edges_[id].v1 = key.second;
    }

    m.tri_edges_.resize(m.triangles_.size());
    for (int t = 0; t < m.n_triangles(); ++t) {
        const auto& tri = m.triangles_[t];
        for (int k = 0; k < 3; ++k) {
            int a = tri[(k + 1) % 3], b = tri[(k + 2) % 3];
            if (a > b) std::swap(a, b);
            int e = edge_ids.at({a, b});
            m.tri_edges_[t][k] = e;
            MeshEdge& edge = m.edges_[e];
            if (edge.tri0 < 0)
                edge.tri0 = t;
            else if (edge.tri1 < 0)
                edge.tri1 = t;
            else
                throw std::runtime_error("mesh: edge shared by more than two triangles");
        }
    }

    for (auto& e : m.edges_) {
        if (e.boundary()) {
            Vec2 mid = 0.5 * (m.vertices_[e.v0] + m.vertices_[e.v1]);
            e.tag = tag_of(e, mid);
        }
    }

    m.h_ = 0.0;
    for (int t = 0; t < m.n_triangles(); ++t) {
        const auto& tri = m.triangles_[t];
        for (int k = 0; k < 3; ++k) {
            double len = (m.vertices_[tri[(k + 1) % 3]] - m.vertices_[tri[(k + 2) % 3]]).norm();
            m.h_ = std::max(m.h_, len);
        }
    }

    m.validate();
    return m;
}

Mesh Mesh::unit_square(int n) {
    if (n < 1) throw std::invalid_argument("unit_square: subdivision count must be >= 1");

    std::vector<Vec2> vertices;
    vertices.reserve((n + 1) * (n + 1));
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i)
            vertices.emplace_back(double(i) / n, double(j) / n);

    auto vid = [n](int i, int j) { return j * (n + 1) + i; };

    std::vector<std::array<int, 3>> triangles;
    triangles.reserve(2 * n * n);
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            int v00 = vid(i, j), v10 = vid(i + 1, j);
            int v01 = vid(i, j + 1), v11 = vid(i + 1, j + 1);
            // diagonal from lower-left to upper-right
            triangles.push_back({v00, v10, v11});
            triangles.push_back({v00, v11, v01});
        }
    }

    auto tag_of = [](const MeshEdge&, const Vec2& mid) {
        const double eps = 1e-12;
        if (std::abs(mid.x() - 1.0) < eps) return static_cast<int>(SegmentTag::Gamma1);
        if (std::abs(mid.y()) < eps) return static_cast<int>(SegmentTag::Gamma2);
        if (std::abs(mid.x()) < eps) return static_cast<int>(SegmentTag::Gamma3);
        if (std::abs(mid.y() - 1.0) < eps) return static_cast<int>(SegmentTag::Gamma4);
        throw std::runtime_error("unit_square: boundary edge off the unit square");
    };

    return build(std::move(vertices), std::move(triangles), tag_of);
}

Mesh Mesh::refined() const {
    std::vector<Vec2> vertices = vertices_;
    vertices.reserve(n_vertices() + n_edges());
    // midpoint vertex of every parent edge
    std::vector<int> mid_vertex(n_edges());
    for (int e = 0; e < n_edges(); ++e) {
        const MeshEdge& edge = edges_[e];
        mid_vertex[e] = static_cast<int>(vertices.size());
        vertices.push_back(0.5 * (vertices_[edge.v0] + vertices_[edge.v1]));
    }

    std::vector<std::array<int, 3>> triangles;
    triangles.reserve(4 * n_triangles());
    for (int t = 0; t < n_triangles(); ++t) {
        const auto& tri = triangles_[t];
        int m0 = mid_vertex[tri_edges_[t][0]];  // midpoint opposite vertex 0
        int m1 = mid_vertex[tri_edges_[t][1]];
        int m2 = mid_vertex[tri_edges_[t][2]];
        triangles.push_back({tri[0], m2, m1});
        triangles.push_back({m2, tri[1], m0});
        triangles.push_back({m1, m0, tri[2]});
        triangles.push_back({m0, m1, m2});
    }

    // A child boundary edge joins a parent vertex to the midpoint of the
    // parent edge it lies on; inherit that edge's tag.
    int nv_parent = n_vertices();
    std::vector<int> parent_edge_of_mid(vertices.size(), -1);
    for (int e = 0; e < n_edges(); ++e) parent_edge_of_mid[mid_vertex[e]] = e;

    auto tag_of = [&](const MeshEdge& e, const Vec2&) {
        int mid = -1, other = -1;
        if (e.v0 >= nv_parent) { mid = e.v0; other = e.v1; }
        if (e.v1 >= nv_parent) { mid = e.v1; other = e.v0; }
        if (mid < 0) throw std::runtime_error("refined: boundary edge without parent midpoint");
        const MeshEdge& parent = edges_[parent_edge_of_mid[mid]];
        if (other != parent.v0 && other != parent.v1)
            throw std::runtime_error("refined: boundary edge is not a half of its parent");
        return parent.tag;
    };

    return build(std::move(vertices), std::move(triangles), tag_of);
}

double Mesh::triangle_area(int t) const {
    const auto& tri = triangles_[t];
    return signed_area(vertices_[tri[0]], vertices_[tri[1]], vertices_[tri[2]]);
}

double Mesh::total_area() const {
    double a = 0.0;
    for (int t = 0; t < n_triangles(); ++t) a += triangle_area(t);
    return a;
}

Vec2 Mesh::entity_coordinate(int entity) const {
    if (entity < n_vertices()) return vertices_[entity];
    const MeshEdge& e = edges_[entity - n_vertices()];
    return 0.5 * (vertices_[e.v0] + vertices_[e.v1]);
}

std::vector<int> Mesh::boundary_entities(const std::vector<SegmentTag>& tags) const {
    if (tags.empty()) throw std::invalid_argument("boundary_entities: empty tag set");
    std::set<int> wanted;
    for (SegmentTag t : tags) wanted.insert(static_cast<int>(t));
    std::set<int> out;
    for (int e = 0; e < n_edges(); ++e) {
        const MeshEdge& edge = edges_[e];
        if (edge.boundary() && wanted.count(edge.tag)) {
            out.insert(edge.v0);
            out.insert(edge.v1);
            out.insert(n_vertices() + e);
        }
    }
    return {out.begin(), out.end()};
}

std::vector<int> Mesh::boundary_edges(const std::vector<SegmentTag>& tags) const {
    if (tags.empty()) throw std::invalid_argument("boundary_edges: empty tag set");
    std::set<int> wanted;
    for (SegmentTag t : tags) wanted.insert(static_cast<int>(t));
    std::vector<int> out;
    for (int e = 0; e < n_edges(); ++e)
        if (edges_[e].boundary() && wanted.count(edges_[e].tag)) out.push_back(e);
    return out;
}

Vec2 Mesh::outward_normal(int edge) const {
    const MeshEdge& e = edges_[edge];
    if (!e.boundary()) throw std::invalid_argument("outward_normal: interior edge");
    Vec2 t = vertices_[e.v1] - vertices_[e.v0];
    Vec2 n(t.y(), -t.x());
    n.normalize();
    // orient away from the owning triangle's centroid
    const auto& tri = triangles_[e.tri0];
    Vec2 centroid = (vertices_[tri[0]] + vertices_[tri[1]] + vertices_[tri[2]]) / 3.0;
    Vec2 mid = 0.5 * (vertices_[e.v0] + vertices_[e.v1]);
    if (n.dot(mid - centroid) < 0) n = -n;
    return n;
}

void Mesh::validate() const {
    for (int t = 0; t < n_triangles(); ++t) {
        if (triangle_area(t) <= 0.0)
            throw std::runtime_error("mesh: triangle " + std::to_string(t) +
                                     " has non-positive area");
        for (int v : triangles_[t])
            if (v < 0 || v >= n_vertices())
                throw std::runtime_error("mesh: vertex index out of range");
    }
    for (int e = 0; e < n_edges(); ++e) {
        const MeshEdge& edge = edges_[e];
        if (edge.tri0 < 0)
            throw std::runtime_error("mesh: dangling edge");
        if (edge.boundary() && edge.tag == kNoTag)
            throw std::runtime_error("mesh: untagged boundary edge");
        if (!edge.boundary() && edge.tag != kNoTag)
            throw std::runtime_error("mesh: tagged interior edge");
    }
    // Conformity on a simply connected planar mesh: Euler's formula.
    int nb = 0;
    for (const auto& e : edges_) nb += e.boundary() ? 1 : 0;
    if (n_vertices() - n_edges() + n_triangles() != 1)
        throw std::runtime_error("mesh: Euler characteristic violated (hanging vertices?)");
    if (3 * n_triangles() != 2 * n_edges() - nb)
        throw std::runtime_error("mesh: edge/triangle incidence count violated");
}

void Mesh::write_off(std::ostream& out) const {
    out << "OFF\n" << n_vertices() << " " << n_triangles() << "\n";
    out.precision(17);
    for (const auto& v : vertices_) out << v.x() << " " << v.y() << "\n";
    for (const auto& t : triangles_) out << t[0] << " " << t[1] << " " << t[2] << "\n";
}

}  // namespace porofem
