#include "igusa/geometry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "igusa/linalg.hpp"

namespace igusa {

namespace {

// All k-subsets of {0..m-1}, called with the index vector.
template <typename F>
void for_each_subset(int m, int k, F&& fn) {
    if (k > m || k < 0) return;
    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;
    while (true) {
        fn(comb);
        int j = k - 1;
        while (j >= 0 && comb[j] == m - k + j) --j;
        if (j < 0) break;
        ++comb[j];
        for (int i = j + 1; i < k; ++i) comb[i] = comb[i - 1] + 1;
    }
}

IVec unit_vec(int n, int i) {
    IVec e(n, 0);
    e[i] = 1;
    return e;
}

std::vector<Rational> to_rational_vec(const IVec& v) {
    std::vector<Rational> r;
    r.reserve(v.size());
    for (const auto& x : v) r.emplace_back(x);
    return r;
}

IVec clear_denominators(const std::vector<Rational>& v) {
    Integer den = 1;
    for (const auto& x : v) den = lcm(den, x.get_den());
    IVec w(v.size());
    for (size_t i = 0; i < v.size(); ++i) w[i] = Rational(v[i] * Rational(den)).get_num();
    return w;
}

}  // namespace

NewtonPolyhedron NewtonPolyhedron::from_mapping(const Mapping& f) {
    return from_support(f.nvars(), f.support_union());
}

NewtonPolyhedron NewtonPolyhedron::from_support(int nvars, const std::set<IVec>& support) {
    if (nvars <= 0) throw std::invalid_argument("nvars must be positive");
    if (support.empty()) throw std::invalid_argument("empty support");
    for (const auto& m : support) {
        if (static_cast<int>(m.size()) != nvars)
            throw std::invalid_argument("support point has wrong dimension");
        for (const auto& x : m)
            if (x < 0) throw std::invalid_argument("support point with negative entry");
    }

    NewtonPolyhedron P;
    P.n_ = nvars;
    std::vector<IVec> pts(support.begin(), support.end());
    int m = static_cast<int>(pts.size());
    int n = nvars;

    // Facet candidates: hyperplanes through k support points and n-k
    // coordinate ray directions.
    std::set<IVec> normals;
    for (int k = 1; k <= std::min(n, m); ++k) {
        for_each_subset(m, k, [&](const std::vector<int>& s) {
            for_each_subset(n, n - k, [&](const std::vector<int>& e) {
                std::vector<IVec> rows;
                for (int i = 1; i < k; ++i) {
                    IVec d(n);
                    for (int j = 0; j < n; ++j) d[j] = pts[s[i]][j] - pts[s[0]][j];
                    rows.push_back(std::move(d));
                }
                for (int i : e) rows.push_back(unit_vec(n, i));
                auto a = nullspace_primitive(rows, n);
                if (!a) return;
                // Orient so the support lies on the >= side; normals of faces
                // of a polyhedron with recession cone R+^n are nonnegative.
                Integer v0 = dot(*a, pts[s[0]]);
                bool all_ge = true, all_le = true;
                for (const auto& g : pts) {
                    Integer v = dot(*a, g);
                    if (v < v0) all_ge = false;
                    if (v > v0) all_le = false;
                }
                if (!all_ge && !all_le) return;
                IVec cand = *a;
                if (!all_ge)
                    for (auto& x : cand) x = -x;
                for (const auto& x : cand)
                    if (x < 0) return;
                if (is_zero_vec(cand)) return;
                normals.insert(cand);
            });
        });
    }

    for (const auto& a : normals) {
        Integer d = dot(a, pts[0]);
        for (const auto& g : pts) d = std::min(d, dot(a, g));
        // Facet iff the supported face has dimension n-1.
        std::vector<IVec> dirs;
        IVec base;
        for (const auto& g : pts) {
            if (dot(a, g) != d) continue;
            if (base.empty()) {
                base = g;
            } else {
                IVec diff(n);
                for (int j = 0; j < n; ++j) diff[j] = g[j] - base[j];
                dirs.push_back(std::move(diff));
            }
        }
        for (int i = 0; i < n; ++i)
            if (a[i] == 0) dirs.push_back(unit_vec(n, i));
        if (rank_of_rows(dirs) == n - 1) P.facets_.push_back({a, d});
    }
    std::sort(P.facets_.begin(), P.facets_.end(),
              [](const Facet& x, const Facet& y) { return x.normal < y.normal; });
    if (P.facets_.empty()) throw std::logic_error("polyhedron with no facets");

    // Vertices: support points whose active facet normals span R^n.
    for (const auto& g : pts) {
        std::vector<IVec> active;
        for (const auto& f : P.facets_)
            if (dot(f.normal, g) == f.offset) active.push_back(f.normal);
        if (rank_of_rows(active) == n) P.vertices_.push_back(g);
    }
    std::sort(P.vertices_.begin(), P.vertices_.end());
    if (P.vertices_.empty()) throw std::logic_error("polyhedron with no vertices");

    int nf = static_cast<int>(P.facets_.size());
    int nv = static_cast<int>(P.vertices_.size());

    // Incidences.
    std::vector<std::vector<int>> facet_verts(nf);
    std::vector<std::vector<int>> facet_rays(nf);
    for (int fi = 0; fi < nf; ++fi) {
        for (int vi = 0; vi < nv; ++vi)
            if (dot(P.facets_[fi].normal, P.vertices_[vi]) == P.facets_[fi].offset)
                facet_verts[fi].push_back(vi);
        for (int i = 0; i < n; ++i)
            if (P.facets_[fi].normal[i] == 0) facet_rays[fi].push_back(i);
    }

    // Face lattice: close the facet incidences under intersection.
    auto canonical_key = [&](const std::vector<int>& verts, const std::vector<int>& rays) {
        std::vector<int> key;
        for (int fi = 0; fi < nf; ++fi) {
            bool contains = std::includes(facet_verts[fi].begin(), facet_verts[fi].end(),
                                          verts.begin(), verts.end()) &&
                            std::includes(facet_rays[fi].begin(), facet_rays[fi].end(),
                                          rays.begin(), rays.end());
            if (contains) key.push_back(fi);
        }
        return key;
    };

    auto face_dim = [&](const std::vector<int>& verts, const std::vector<int>& rays) {
        std::vector<IVec> dirs;
        for (size_t i = 1; i < verts.size(); ++i) {
            IVec d(n);
            for (int j = 0; j < n; ++j)
                d[j] = P.vertices_[verts[i]][j] - P.vertices_[verts[0]][j];
            dirs.push_back(std::move(d));
        }
        for (int i : rays) dirs.push_back(unit_vec(n, i));
        return rank_of_rows(dirs);
    };

    std::map<std::vector<int>, Face> by_key;  // canonical facet set -> face
    {
        std::vector<int> all_verts(nv), all_rays(n);
        for (int i = 0; i < nv; ++i) all_verts[i] = i;
        for (int i = 0; i < n; ++i) all_rays[i] = i;
        Face gamma;
        gamma.facet_ids = {};
        gamma.vertex_ids = all_verts;
        gamma.rays = all_rays;
        gamma.dim = n;
        gamma.compact = false;
        by_key.emplace(std::vector<int>{}, std::move(gamma));
    }
    std::vector<std::pair<std::vector<int>, std::vector<int>>> work;
    for (int fi = 0; fi < nf; ++fi) work.emplace_back(facet_verts[fi], facet_rays[fi]);
    while (!work.empty()) {
        auto [verts, rays] = work.back();
        work.pop_back();
        if (verts.empty()) continue;  // a face of Gamma always has a vertex
        auto key = canonical_key(verts, rays);
        if (by_key.count(key)) continue;
        Face f;
        f.facet_ids = key;
        f.vertex_ids = verts;
        f.rays = rays;
        f.dim = face_dim(verts, rays);
        f.compact = rays.empty();
        by_key.emplace(key, std::move(f));
        for (int fi = 0; fi < nf; ++fi) {
            std::vector<int> iv, ir;
            std::set_intersection(verts.begin(), verts.end(), facet_verts[fi].begin(),
                                  facet_verts[fi].end(), std::back_inserter(iv));
            std::set_intersection(rays.begin(), rays.end(), facet_rays[fi].begin(),
                                  facet_rays[fi].end(), std::back_inserter(ir));
            if (!iv.empty()) work.emplace_back(std::move(iv), std::move(ir));
        }
    }

    for (auto& [key, f] : by_key) P.faces_.push_back(f);
    // map order on keys is already the canonical face order (Gamma first)
    for (int i = 0; i < static_cast<int>(P.faces_.size()); ++i)
        if (P.faces_[i].facet_ids.empty()) P.gamma_id_ = i;

    // Compactness cross-check: a compact face must see a facet normal with a
    // positive entry in every coordinate.
    for (const auto& f : P.faces_) {
        if (f.facet_ids.empty()) continue;
        IVec sum(n, 0);
        for (int fi : f.facet_ids)
            for (int j = 0; j < n; ++j) sum[j] += P.facets_[fi].normal[j];
        bool positive = true;
        for (const auto& x : sum)
            if (x == 0) positive = false;
        if (positive != f.compact)
            throw std::logic_error("compactness checks disagree on a face");
    }
    return P;
}

Integer NewtonPolyhedron::d_value(const IVec& a) const {
    if (static_cast<int>(a.size()) != n_) throw std::invalid_argument("d_value: bad dimension");
    for (const auto& x : a)
        if (x < 0) throw std::invalid_argument("d_value: negative entry");
    Integer d = dot(a, vertices_[0]);
    for (const auto& v : vertices_) d = std::min(d, dot(a, v));
    return d;
}

int NewtonPolyhedron::first_meet_locus(const IVec& a) const {
    if (static_cast<int>(a.size()) != n_)
        throw std::invalid_argument("first_meet_locus: bad dimension");
    for (const auto& x : a)
        if (x < 0) throw std::invalid_argument("first_meet_locus: negative entry");
    if (is_zero_vec(a)) return gamma_id_;

    Integer d = d_value(a);
    std::vector<int> verts;
    for (int vi = 0; vi < static_cast<int>(vertices_.size()); ++vi)
        if (dot(a, vertices_[vi]) == d) verts.push_back(vi);
    std::vector<int> rays;
    for (int i = 0; i < n_; ++i)
        if (a[i] == 0) rays.push_back(i);

    for (int id = 0; id < static_cast<int>(faces_.size()); ++id) {
        if (faces_[id].vertex_ids == verts && faces_[id].rays == rays) return id;
    }
    throw std::logic_error("first meet locus not found in face lattice");
}

std::vector<int> NewtonPolyhedron::compact_face_ids() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(faces_.size()); ++i)
        if (faces_[i].compact) out.push_back(i);
    return out;
}

std::vector<int> NewtonPolyhedron::proper_face_ids() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(faces_.size()); ++i)
        if (i != gamma_id_) out.push_back(i);
    return out;
}

std::set<IVec> NewtonPolyhedron::support_on_face(const std::set<IVec>& support,
                                                 int face_id) const {
    const Face& f = faces_.at(face_id);
    std::set<IVec> out;
    for (const auto& m : support) {
        if (static_cast<int>(m.size()) != n_)
            throw std::invalid_argument("support_on_face: dimension mismatch");
        bool on = true;
        for (int fi : f.facet_ids)
            if (dot(facets_[fi].normal, m) != facets_[fi].offset) {
                on = false;
                break;
            }
        if (on) out.insert(m);
    }
    return out;
}

Polynomial NewtonPolyhedron::face_restriction(const Polynomial& f, int face_id) const {
    if (f.nvars() != n_) throw std::invalid_argument("face_restriction: dimension mismatch");
    return f.restricted_to(support_on_face(f.support(), face_id));
}

bool NewtonPolyhedron::contains(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != n_) return false;
    for (const auto& f : facets_) {
        Rational s = 0;
        for (int i = 0; i < n_; ++i) s += Rational(f.normal[i]) * point[i];
        if (s < Rational(f.offset)) return false;
    }
    return true;
}

std::string NewtonPolyhedron::face_label(int face_id) const {
    const Face& f = faces_.at(face_id);
    if (face_id == gamma_id_) return "Gamma";
    std::string s;
    for (size_t i = 0; i < f.vertex_ids.size(); ++i) {
        if (i) s += "-";
        s += vec_to_string(vertices_[f.vertex_ids[i]]);
    }
    if (!f.rays.empty()) {
        s += "+rays{";
        for (size_t i = 0; i < f.rays.size(); ++i) {
            if (i) s += ",";
            s += "e" + std::to_string(f.rays[i] + 1);
        }
        s += "}";
    }
    return s;
}

bool Cone::contains(const NewtonPolyhedron& gamma, const std::vector<Rational>& x) const {
    IVec xi = clear_denominators(x);
    if (is_zero_vec(xi)) return false;
    for (const auto& c : xi)
        if (c < 0) return false;
    if (simplicial) {
        auto lambda = solve_full_column_rank(generators, to_rational_vec(xi));
        if (!lambda) return false;
        for (const auto& l : *lambda)
            if (l <= 0) return false;
        return true;
    }
    return gamma.first_meet_locus(xi) == face_id;
}

namespace {

Cone make_cone(std::vector<IVec> gens, std::vector<bool> extra, int face_id,
               const NewtonPolyhedron& gamma) {
    // canonical generator order: lex, extra flags follow their vectors
    std::vector<size_t> idx(gens.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return gens[a] < gens[b]; });
    Cone c;
    c.face_id = face_id;
    for (size_t i : idx) {
        c.generators.push_back(gens[i]);
        c.extra_ray.push_back(extra[i]);
        c.sigma.push_back(vec_sum(gens[i]));
        c.dval.push_back(gamma.d_value(gens[i]));
    }
    c.simplicial = rank_of_rows(c.generators) == static_cast<int>(c.generators.size());
    return c;
}

}  // namespace

Fan normal_fan(const NewtonPolyhedron& gamma) {
    Fan fan;
    fan.kind = FanKind::Normal;
    for (int id : gamma.proper_face_ids()) {
        const Face& f = gamma.face(id);
        std::vector<IVec> gens;
        std::vector<bool> extra;
        for (int fi : f.facet_ids) {
            gens.push_back(gamma.facets()[fi].normal);
            extra.push_back(false);
        }
        fan.cones.push_back(make_cone(std::move(gens), std::move(extra), id, gamma));
    }
    return fan;
}

namespace {

// Facets of cone(gens restricted to W): each returned as the set of indices
// of W lying on the supporting hyperplane.
std::vector<std::vector<int>> cone_facets(const std::vector<IVec>& gens,
                                          const std::vector<int>& W) {
    int n = static_cast<int>(gens[0].size());
    std::vector<IVec> wgens;
    for (int i : W) wgens.push_back(gens[i]);
    int r = rank_of_rows(wgens);

    // basis of span(W) out of wgens
    std::vector<IVec> basis;
    for (const auto& g : wgens) {
        auto trial = basis;
        trial.push_back(g);
        if (rank_of_rows(trial) > static_cast<int>(basis.size())) basis = trial;
    }

    std::set<std::vector<int>> found;
    int k = static_cast<int>(W.size());
    for_each_subset(k, r - 1, [&](const std::vector<int>& sub) {
        // u = sum c_i basis_i with <u, wgens[j]> = 0 for j in sub
        std::vector<IVec> cols;  // columns indexed by basis, rows by sub
        for (const auto& b : basis) {
            IVec col;
            for (int j : sub) col.push_back(dot(b, wgens[j]));
            cols.push_back(std::move(col));
        }
        // nullspace of the (|sub| x r) matrix with rows over cols
        std::vector<IVec> rows(sub.size(), IVec(r));
        for (size_t i = 0; i < sub.size(); ++i)
            for (int j = 0; j < r; ++j) rows[i][j] = cols[j][i];
        auto c = nullspace_primitive(rows, r);
        if (!c) return;
        IVec u(n, 0);
        for (int j = 0; j < r; ++j)
            for (int t = 0; t < n; ++t) u[t] += (*c)[j] * basis[j][t];
        bool all_ge = true, all_le = true;
        for (const auto& g : wgens) {
            Integer v = dot(u, g);
            if (v < 0) all_ge = false;
            if (v > 0) all_le = false;
        }
        if (!all_ge && !all_le) return;
        if (!all_ge)
            for (auto& x : u) x = -x;
        std::vector<int> face;
        for (int i = 0; i < k; ++i)
            if (dot(u, wgens[i]) == 0) face.push_back(W[i]);
        std::vector<IVec> fgens;
        for (int i : face) fgens.push_back(gens[i]);
        if (rank_of_rows(fgens) == r - 1) found.insert(face);
    });
    return {found.begin(), found.end()};
}

// Star triangulation from the least generator in `order`; recursion over the
// facets not containing it. Deterministic, introduces no new rays. The
// alternate order compares coordinate-reversed vectors, which picks a
// different apex in general.
bool reversed_less(const IVec& a, const IVec& b) {
    IVec ra(a.rbegin(), a.rend()), rb(b.rbegin(), b.rend());
    return ra < rb;
}

void pull_triangulate(const std::vector<IVec>& gens, std::vector<int> W,
                      bool reverse, std::set<std::vector<int>>& out) {
    std::vector<IVec> wgens;
    for (int i : W) wgens.push_back(gens[i]);
    if (rank_of_rows(wgens) == static_cast<int>(W.size())) {
        std::vector<int> cell = W;
        std::sort(cell.begin(), cell.end());
        out.insert(cell);
        return;
    }
    int apex = W[0];
    for (int i : W) {
        bool better = reverse ? reversed_less(gens[i], gens[apex]) : (gens[i] < gens[apex]);
        if (better) apex = i;
    }
    for (const auto& facet : cone_facets(gens, W)) {
        if (std::find(facet.begin(), facet.end(), apex) != facet.end()) continue;
        std::set<std::vector<int>> sub;
        pull_triangulate(gens, facet, reverse, sub);
        for (auto cell : sub) {
            cell.push_back(apex);
            std::sort(cell.begin(), cell.end());
            out.insert(cell);
        }
    }
}

}  // namespace

std::vector<std::vector<int>> star_triangulation(const std::vector<IVec>& gens,
                                                 TriangulationOrder order) {
    std::vector<int> all(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) all[i] = static_cast<int>(i);
    std::set<std::vector<int>> cells;
    pull_triangulate(gens, all, order == TriangulationOrder::ReversedCoordinateLex, cells);
    return {cells.begin(), cells.end()};
}

Fan simplicial_subdivision(const Fan& fan, const NewtonPolyhedron& gamma,
                           TriangulationOrder order) {
    if (fan.kind != FanKind::Normal)
        throw std::invalid_argument("simplicial_subdivision expects the normal fan");
    Fan out;
    out.kind = FanKind::Simplicial;
    for (const auto& cone : fan.cones) {
        if (cone.simplicial) {
            out.cones.push_back(cone);
            continue;
        }
        auto maximal = star_triangulation(cone.generators, order);
        // Open cells of the triangulation complex inside the open normal cone.
        std::set<std::vector<int>> cells;
        for (const auto& cell : maximal) {
            int k = static_cast<int>(cell.size());
            for (int mask = 1; mask < (1 << k); ++mask) {
                std::vector<int> sub;
                for (int i = 0; i < k; ++i)
                    if (mask & (1 << i)) sub.push_back(cell[i]);
                cells.insert(sub);
            }
        }
        for (const auto& cell : cells) {
            IVec sum(gamma.nvars(), 0);
            std::vector<IVec> gens;
            for (int i : cell) {
                gens.push_back(cone.generators[i]);
                for (int j = 0; j < gamma.nvars(); ++j) sum[j] += cone.generators[i][j];
            }
            if (gamma.first_meet_locus(sum) != cone.face_id) continue;
            std::vector<bool> extra(gens.size(), false);
            out.cones.push_back(make_cone(std::move(gens), std::move(extra),
                                          cone.face_id, gamma));
        }
    }
    std::stable_sort(out.cones.begin(), out.cones.end(), [](const Cone& a, const Cone& b) {
        if (a.face_id != b.face_id) return a.face_id < b.face_id;
        return a.generators < b.generators;
    });
    return out;
}

namespace {

struct PPoint {
    IVec h;
    std::vector<Rational> lambda;
};

std::vector<PPoint> parallelepiped_raw(const std::vector<IVec>& gens) {
    size_t r = gens.size();
    int n = static_cast<int>(gens[0].size());
    std::vector<Integer> hi(n, 0);
    for (int i = 0; i < n; ++i) {
        for (const auto& g : gens) hi[i] += g[i];
        if (hi[i] > 0) hi[i] -= 1;  // coordinates satisfy h_i < sum_j a_{j,i}
    }
    std::vector<PPoint> out;
    IVec h(n, 0);
    while (true) {
        auto lambda = solve_full_column_rank(gens, to_rational_vec(h));
        if (lambda) {
            bool ok = true;
            for (const auto& l : *lambda)
                if (l < 0 || l >= 1) {
                    ok = false;
                    break;
                }
            if (ok) out.push_back({h, *lambda});
        }
        int i = n - 1;
        while (i >= 0 && h[i] == hi[i]) {
            h[i] = 0;
            --i;
        }
        if (i < 0) break;
        h[i] += 1;
    }
    (void)r;
    return out;
}

void stellar_split(std::vector<IVec> gens, std::vector<bool> extra, int face_id,
                   const NewtonPolyhedron& gamma, std::vector<Cone>& out,
                   std::set<IVec>& new_rays) {
    Integer index = gcd_of_maximal_minors(gens);
    if (index == 0) throw std::logic_error("stellar_split: dependent generators");
    if (index == 1) {
        out.push_back(make_cone(std::move(gens), std::move(extra), face_id, gamma));
        return;
    }
    auto pts = parallelepiped_raw(gens);
    const PPoint* best = nullptr;
    for (const auto& p : pts) {
        if (is_zero_vec(p.h)) continue;
        if (!best || vec_sum(p.h) < vec_sum(best->h) ||
            (vec_sum(p.h) == vec_sum(best->h) && p.h < best->h))
            best = &p;
    }
    if (!best) throw std::logic_error("stellar_split: no interior lattice point");
    bool is_facet_normal = false;
    for (const auto& f : gamma.facets())
        if (f.normal == best->h) is_facet_normal = true;
    if (!is_facet_normal) new_rays.insert(best->h);

    std::vector<int> T;
    for (size_t j = 0; j < best->lambda.size(); ++j)
        if (best->lambda[j] > 0) T.push_back(static_cast<int>(j));
    int tsz = static_cast<int>(T.size());
    // Proper subsets B of T; the complement generators always stay.
    for (int mask = 0; mask < (1 << tsz) - 1; ++mask) {
        std::vector<IVec> sub_gens;
        std::vector<bool> sub_extra;
        for (size_t j = 0; j < gens.size(); ++j) {
            auto it = std::find(T.begin(), T.end(), static_cast<int>(j));
            if (it == T.end()) {
                sub_gens.push_back(gens[j]);
                sub_extra.push_back(extra[j]);
            } else {
                int bit = static_cast<int>(it - T.begin());
                if (mask & (1 << bit)) {
                    sub_gens.push_back(gens[j]);
                    sub_extra.push_back(extra[j]);
                }
            }
        }
        sub_gens.push_back(best->h);
        sub_extra.push_back(!is_facet_normal);
        stellar_split(std::move(sub_gens), std::move(sub_extra), face_id, gamma, out,
                      new_rays);
    }
}

}  // namespace

Fan simple_subdivision(const Fan& fan, const NewtonPolyhedron& gamma) {
    if (fan.kind != FanKind::Simplicial)
        throw std::invalid_argument("simple_subdivision expects a simplicial fan");
    Fan out;
    out.kind = FanKind::Simple;
    std::set<IVec> new_rays;
    for (const auto& cone : fan.cones)
        stellar_split(cone.generators, cone.extra_ray, cone.face_id, gamma, out.cones,
                      new_rays);
    std::stable_sort(out.cones.begin(), out.cones.end(), [](const Cone& a, const Cone& b) {
        if (a.face_id != b.face_id) return a.face_id < b.face_id;
        return a.generators < b.generators;
    });
    out.extra_rays.assign(new_rays.begin(), new_rays.end());
    return out;
}

std::vector<LatticePoint> parallelepiped_points(const Cone& c, const NewtonPolyhedron& gamma) {
    if (!c.simplicial)
        throw std::invalid_argument("parallelepiped_points: cone is not simplicial");
    std::vector<LatticePoint> out;
    for (const auto& p : parallelepiped_raw(c.generators))
        out.push_back({p.h, vec_sum(p.h), gamma.d_value(p.h)});
    std::sort(out.begin(), out.end(),
              [](const LatticePoint& a, const LatticePoint& b) { return a.h < b.h; });
    return out;
}

Integer cone_lattice_index(const Cone& c) { return gcd_of_maximal_minors(c.generators); }

DiagonalInvariants diagonal_invariants(const NewtonPolyhedron& gamma, int l) {
    std::optional<Rational> tf;
    for (const auto& f : gamma.facets()) {
        if (f.offset <= 0) continue;
        Rational r = make_rational(f.offset, vec_sum(f.normal));
        if (!tf || r > *tf) tf = r;
    }
    if (!tf)
        throw std::domain_error("no facet with positive offset; diagonal never meets the boundary");
    DiagonalInvariants di;
    di.t_f = *tf;
    di.lambda = Rational(1) / *tf;
    if (*tf >= make_rational(1, l))
        di.largest_pole_real_part = -di.lambda;
    return di;
}

}  // namespace igusa
