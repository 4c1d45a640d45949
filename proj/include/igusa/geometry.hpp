#ifndef IGUSA_GEOMETRY_HPP
#define IGUSA_GEOMETRY_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "igusa/poly.hpp"

namespace igusa {

struct Facet {
    IVec normal;     // primitive, entries >= 0
    Integer offset;  // d(normal)
};

// A face of the polyhedron. `facet_ids` is the canonical key: every facet
// containing the face, sorted. The whole polyhedron is the face with the
// empty key. `rays` are the coordinate directions in the recession cone.
struct Face {
    std::vector<int> facet_ids;
    std::vector<int> vertex_ids;
    std::vector<int> rays;
    int dim = 0;
    bool compact = false;
};

// Newton polyhedron of a support set: conv(union of m + R+^n), full
// dimensional, recession cone exactly R+^n.
class NewtonPolyhedron {
  public:
    static NewtonPolyhedron from_support(int nvars, const std::set<IVec>& support);
    static NewtonPolyhedron from_mapping(const Mapping& f);

    int nvars() const { return n_; }
    const std::vector<IVec>& vertices() const { return vertices_; }
    const std::vector<Facet>& facets() const { return facets_; }
    const std::vector<Face>& faces() const { return faces_; }
    const Face& face(int id) const { return faces_[id]; }
    int gamma_face_id() const { return gamma_id_; }

    Integer d_value(const IVec& a) const;

    // Face id of F(a) = {x in Gamma | <a,x> = d(a)}; a must be >= 0.
    int first_meet_locus(const IVec& a) const;

    std::vector<int> compact_face_ids() const;
    std::vector<int> proper_face_ids() const;

    // Support points of `f` lying on the face (exponents m with
    // <a(gamma), m> = d for every facet gamma containing the face).
    std::set<IVec> support_on_face(const std::set<IVec>& support, int face_id) const;
    Polynomial face_restriction(const Polynomial& f, int face_id) const;

    bool contains(const std::vector<Rational>& point) const;
    std::string face_label(int face_id) const;

  private:
    int n_ = 0;
    std::vector<IVec> vertices_;
    std::vector<Facet> facets_;
    std::vector<Face> faces_;
    int gamma_id_ = -1;
};

// Open cone strictly spanned by `generators` (σ/d annotations against the
// polyhedron are filled in by the fan builders). Non-simplicial cones occur
// only in the normal fan itself.
struct Cone {
    std::vector<IVec> generators;
    int face_id = -1;
    std::vector<Integer> sigma;        // per generator
    std::vector<Integer> dval;         // per generator
    std::vector<bool> extra_ray;       // per generator: not a facet normal
    bool simplicial = false;

    bool contains(const NewtonPolyhedron& gamma, const std::vector<Rational>& x) const;
};

enum class FanKind { Normal, Simplicial, Simple };

struct Fan {
    FanKind kind = FanKind::Normal;
    std::vector<Cone> cones;
    std::vector<IVec> extra_rays;  // Λ_f: rays not in D(Γ), simple fans only
};

enum class TriangulationOrder { Lexicographic, ReversedCoordinateLex };

Fan normal_fan(const NewtonPolyhedron& gamma);

// Triangulates every normal cone using only its own generators (placing
// triangulation, insertion order per `order`). Output cones partition each
// open normal cone; lower-dimensional interior cells are kept as cones of
// their own so the fan stays a partition of R+^n \ {0}.
Fan simplicial_subdivision(const Fan& fan, const NewtonPolyhedron& gamma,
                           TriangulationOrder order = TriangulationOrder::Lexicographic);

// Recursive stellar subdivision at a minimal-σ parallelepiped lattice point
// until every cone is unimodular. New rays are recorded in extra_rays.
Fan simple_subdivision(const Fan& fan, const NewtonPolyhedron& gamma);

struct LatticePoint {
    IVec h;
    Integer sigma;
    Integer d;
};

// Z^n ∩ {Σ λ_j a_j | 0 <= λ_j < 1} for a simplicial cone, sorted by h.
std::vector<LatticePoint> parallelepiped_points(const Cone& c, const NewtonPolyhedron& gamma);

Integer cone_lattice_index(const Cone& c);

struct DiagonalInvariants {
    Rational t_f;
    Rational lambda;
    std::optional<Rational> largest_pole_real_part;  // nullopt: "not guaranteed"
};

DiagonalInvariants diagonal_invariants(const NewtonPolyhedron& gamma, int l);

// Exposed for tests: star triangulation of a single cone (apex at the first
// generator in `order`, recursing over the opposite facets); returns the
// maximal simplicial cones as generator-index sets into `gens`.
std::vector<std::vector<int>> star_triangulation(const std::vector<IVec>& gens,
                                                 TriangulationOrder order);

}  // namespace igusa

#endif
