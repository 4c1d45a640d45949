#include "igusa/zeta.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "igusa/errors.hpp"

namespace igusa {

namespace {

void trim(std::vector<Rational>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<Rational> poly_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rational> r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

std::vector<Rational> poly_add(std::vector<Rational> a, const std::vector<Rational>& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    trim(a);
    return a;
}

// The polynomial 1 - c t^N (a constant when N = 0).
std::vector<Rational> factor_poly(const Rational& c, long long N) {
    if (N == 0) return {Rational(1) - c};
    std::vector<Rational> f(static_cast<size_t>(N) + 1, Rational(0));
    f[0] = 1;
    f[static_cast<size_t>(N)] = -c;
    return f;
}

// Exact quotient of `num` by (1 - c t^N), or nullopt if it does not divide.
std::optional<std::vector<Rational>> divide_by_factor(const std::vector<Rational>& num,
                                                      const Rational& c, long long N) {
    if (num.empty()) return std::vector<Rational>{};
    long long D = static_cast<long long>(num.size()) - 1;
    if (D < N) return std::nullopt;
    // num_k = Q_k - c Q_{k-N}  =>  Q_k = num_k + c Q_{k-N}
    std::vector<Rational> Q(num.size(), Rational(0));
    for (long long k = 0; k <= D; ++k) {
        Q[k] = num[k];
        if (k >= N) Q[k] += c * Q[k - N];
    }
    for (long long k = D - N + 1; k <= D; ++k)
        if (Q[k] != 0) return std::nullopt;
    Q.resize(static_cast<size_t>(D - N + 1));
    trim(Q);
    return Q;
}

std::vector<Rational> series_trunc_mul(const std::vector<Rational>& a,
                                       const std::vector<Rational>& b, int T) {
    std::vector<Rational> r(T, Rational(0));
    for (int i = 0; i < T && i < static_cast<int>(a.size()); ++i)
        for (int j = 0; i + j < T && j < static_cast<int>(b.size()); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace

ZetaFunction ZetaFunction::constant(long long q, const Rational& c) {
    ZetaFunction z(q);
    if (c != 0) z.num_ = {c};
    return z;
}

ZetaFunction ZetaFunction::monomial(long long q, const Rational& c, long long deg) {
    ZetaFunction z(q);
    if (c != 0) {
        z.num_.assign(static_cast<size_t>(deg) + 1, Rational(0));
        z.num_.back() = c;
    }
    return z;
}

void ZetaFunction::push_factor(long long v, long long N, int mult) {
    if (v <= 0) throw std::invalid_argument("factor needs v >= 1");
    if (N < 0) throw std::invalid_argument("factor needs N >= 0");
    factors_[{v, N}] += mult;
}

void ZetaFunction::set_numerator(std::vector<Rational> coeffs) {
    trim(coeffs);
    num_ = std::move(coeffs);
}

ZetaFunction ZetaFunction::operator+(const ZetaFunction& o) const {
    if (q_ != o.q_) throw std::invalid_argument("zeta arithmetic: mismatched q");
    // Common denominator: per-factor multiplicity maximum.
    std::map<std::pair<long long, long long>, int> common = factors_;
    for (const auto& [k, m] : o.factors_) {
        auto it = common.find(k);
        if (it == common.end())
            common[k] = m;
        else
            it->second = std::max(it->second, m);
    }
    auto scale_to_common = [&](const ZetaFunction& z) {
        std::vector<Rational> n = z.num_;
        for (const auto& [k, m] : common) {
            int have = 0;
            auto it = z.factors_.find(k);
            if (it != z.factors_.end()) have = it->second;
            Rational c = rational_pow(to_integer(z.q_), -k.first);
            for (int i = have; i < m; ++i) n = poly_mul(n, factor_poly(c, k.second));
        }
        return n;
    };
    ZetaFunction r(q_);
    r.factors_ = common;
    r.num_ = poly_add(scale_to_common(*this), scale_to_common(o));
    if (r.num_.empty()) r.factors_.clear();
    return r;
}

ZetaFunction ZetaFunction::operator-(const ZetaFunction& o) const {
    return *this + o.scaled(Rational(-1));
}

ZetaFunction ZetaFunction::operator*(const ZetaFunction& o) const {
    if (q_ != o.q_) throw std::invalid_argument("zeta arithmetic: mismatched q");
    ZetaFunction r(q_);
    r.num_ = poly_mul(num_, o.num_);
    if (r.num_.empty()) return r;
    r.factors_ = factors_;
    for (const auto& [k, m] : o.factors_) r.factors_[k] += m;
    return r;
}

ZetaFunction ZetaFunction::scaled(const Rational& c) const {
    ZetaFunction r(q_);
    if (c == 0) return r;
    r.factors_ = factors_;
    r.num_ = num_;
    for (auto& x : r.num_) x *= c;
    return r;
}

ZetaFunction ZetaFunction::normalized() const {
    ZetaFunction r = *this;
    trim(r.num_);
    if (r.num_.empty()) {
        r.factors_.clear();
        return r;
    }
    // Constant factors (N = 0) fold into the numerator.
    for (auto it = r.factors_.begin(); it != r.factors_.end();) {
        if (it->first.second == 0) {
            Rational c = Rational(1) - rational_pow(to_integer(q_), -it->first.first);
            for (int i = 0; i < it->second; ++i)
                for (auto& x : r.num_) x /= c;
            it = r.factors_.erase(it);
        } else {
            ++it;
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = r.factors_.begin(); it != r.factors_.end(); ++it) {
            Rational c = rational_pow(to_integer(q_), -it->first.first);
            auto quot = divide_by_factor(r.num_, c, it->first.second);
            if (quot) {
                r.num_ = std::move(*quot);
                if (--it->second == 0) r.factors_.erase(it);
                changed = true;
                break;
            }
        }
    }
    return r;
}

bool ZetaFunction::equivalent_to(const ZetaFunction& o) const {
    if (q_ != o.q_) return false;
    auto expand = [](const ZetaFunction& z, const ZetaFunction& other) {
        std::vector<Rational> r = z.num_;
        for (const auto& [k, m] : other.factors_) {
            Rational c = rational_pow(to_integer(z.q_), -k.first);
            for (int i = 0; i < m; ++i) r = poly_mul(r, factor_poly(c, k.second));
        }
        return r;
    };
    return expand(*this, o) == expand(o, *this);
}

Rational ZetaFunction::evaluate(const Rational& t) const {
    Rational n = 0;
    Rational tp = 1;
    for (const auto& c : num_) {
        n += c * tp;
        tp *= t;
    }
    Rational d = 1;
    for (const auto& [k, m] : factors_) {
        Rational c = rational_pow(to_integer(q_), -k.first);
        Rational tN = 1;
        for (long long i = 0; i < k.second; ++i) tN *= t;
        Rational f = Rational(1) - c * tN;
        if (f == 0) throw std::domain_error("evaluate: t is a pole");
        for (int i = 0; i < m; ++i) d *= f;
    }
    return n / d;
}

std::vector<Rational> ZetaFunction::taylor(int terms) const {
    std::vector<Rational> s(terms, Rational(0));
    for (int i = 0; i < terms && i < static_cast<int>(num_.size()); ++i) s[i] = num_[i];
    for (const auto& [k, m] : factors_) {
        Rational c = rational_pow(to_integer(q_), -k.first);
        for (int rep = 0; rep < m; ++rep) {
            if (k.second == 0) {
                Rational inv = Rational(1) / (Rational(1) - c);
                for (auto& x : s) x *= inv;
            } else {
                std::vector<Rational> geo(terms, Rational(0));
                Rational ck = 1;
                for (long long e = 0; e < terms; e += k.second) {
                    geo[static_cast<size_t>(e)] = ck;
                    ck *= c;
                }
                s = series_trunc_mul(s, geo, terms);
            }
        }
    }
    return s;
}

long long ZetaFunction::degree() const {
    if (num_.empty()) throw std::domain_error("degree of the zero function");
    long long d = static_cast<long long>(num_.size()) - 1;
    for (const auto& [k, m] : factors_) d -= k.second * m;
    return d;
}

std::string ZetaFunction::to_text() const {
    if (num_.empty()) return "0";
    std::string n;
    bool first = true;
    for (size_t k = 0; k < num_.size(); ++k) {
        if (num_[k] == 0) continue;
        Rational c = num_[k];
        if (first) {
            if (c < 0) {
                n += "-";
                c = -c;
            }
            first = false;
        } else {
            n += (c < 0) ? " - " : " + ";
            if (c < 0) c = -c;
        }
        if (k == 0) {
            n += c.get_str();
        } else {
            std::string t = (k == 1) ? "t" : "t^" + std::to_string(k);
            n += (c == 1) ? t : c.get_str() + "*" + t;
        }
    }
    if (factors_.empty()) return n;
    std::string d;
    for (const auto& [k, m] : factors_) {
        for (int i = 0; i < m; ++i) {
            if (!d.empty()) d += "*";
            d += "(1 - q^-" + std::to_string(k.first);
            if (k.second == 1)
                d += "*t";
            else if (k.second > 1)
                d += "*t^" + std::to_string(k.second);
            d += ")";
        }
    }
    return "(" + n + ") / (" + d + ")  [q = " + std::to_string(q_) + "]";
}

std::vector<Pole> poles_of(const ZetaFunction& z) {
    ZetaFunction n = z.normalized();
    std::map<Rational, std::pair<int, Integer>> groups;  // real part -> (order, lcm N)
    for (const auto& [k, m] : n.factors()) {
        Rational real = -make_rational(to_integer(k.first), to_integer(k.second));
        auto& g = groups[real];
        g.first += m;
        g.second = g.second == 0 ? to_integer(k.second) : lcm(g.second, to_integer(k.second));
    }
    std::vector<Pole> out;
    for (const auto& [real, g] : groups)
        out.push_back({real, g.first, to_longlong(g.second)});
    return out;  // map order: ascending real part
}

long long degree_of(const ZetaFunction& z) { return z.normalized().degree(); }

std::string to_string(PoleProvenance p) {
    switch (p) {
        case PoleProvenance::FacetNormal: return "facet-normal";
        case PoleProvenance::ExtraRay: return "extra-ray";
        case PoleProvenance::CodimBlowup: return "codim-blowup";
    }
    return "?";
}

std::vector<CandidatePole> candidate_poles(const NewtonPolyhedron& gamma, int l,
                                           const std::vector<IVec>& extra_rays) {
    std::vector<CandidatePole> out;
    for (const auto& f : gamma.facets()) {
        if (f.offset <= 0) continue;
        out.push_back({-make_rational(vec_sum(f.normal), f.offset), to_longlong(f.offset),
                       PoleProvenance::FacetNormal, f.normal});
    }
    for (const auto& xi : extra_rays) {
        Integer d = gamma.d_value(xi);
        if (d <= 0) continue;
        out.push_back({-make_rational(vec_sum(xi), d), to_longlong(d),
                       PoleProvenance::ExtraRay, xi});
    }
    if (l < gamma.nvars())
        out.push_back({Rational(-l), 1, PoleProvenance::CodimBlowup, {}});
    std::sort(out.begin(), out.end(), [](const CandidatePole& a, const CandidatePole& b) {
        if (a.real_part != b.real_part) return a.real_part < b.real_part;
        if (a.period != b.period) return a.period < b.period;
        if (a.provenance != b.provenance) return a.provenance < b.provenance;
        return a.xi < b.xi;
    });
    return out;
}

ZetaFunction L_tau(long long q, int n, int l, const Integer& card) {
    Integer torus = integer_pow(to_integer(q - 1), static_cast<unsigned long>(n));
    if (card < 0 || card > torus)
        throw std::invalid_argument("card out of range [0, (q-1)^n]");
    int m = std::min(l, n);
    Rational qn = rational_pow(to_integer(q), -n);
    Rational qm = rational_pow(to_integer(q), -m);
    ZetaFunction z(q);
    std::vector<Rational> num(2, Rational(0));
    num[0] = qn * (Rational(torus) - Rational(card));
    num[1] = qn * (Rational(card) - Rational(torus) * qm);
    trim(num);
    z.set_numerator(std::move(num));
    if (!z.numerator().empty()) z.push_factor(m, 1);
    return z;
}

ZetaFunction S_cone(const Cone& c, const NewtonPolyhedron& gamma, long long q) {
    if (!c.simplicial) throw std::invalid_argument("S_cone: cone is not simplicial");
    Integer A = 0, B = 0;
    for (size_t j = 0; j < c.generators.size(); ++j) {
        A += c.sigma[j];
        B += c.dval[j];
    }
    long long Bll = to_longlong(B);
    std::vector<Rational> num(static_cast<size_t>(Bll) + 1, Rational(0));
    for (const auto& pt : parallelepiped_points(c, gamma)) {
        long long deg = to_longlong(B - pt.d);
        num[static_cast<size_t>(deg)] += rational_pow(to_integer(q), -to_longlong(A - pt.sigma));
    }
    ZetaFunction z(q);
    z.set_numerator(std::move(num));
    for (size_t j = 0; j < c.generators.size(); ++j)
        z.push_factor(to_longlong(c.sigma[j]), to_longlong(c.dval[j]));
    return z;
}

ZetaFunction assemble_zeta(const Mapping& f, const NewtonPolyhedron& gamma,
                           const Fan& fan, long long q,
                           const std::map<int, Integer>& card_by_face, bool origin_only) {
    if (fan.kind == FanKind::Normal)
        throw std::invalid_argument("assemble_zeta needs a simplicial or simple fan");
    int n = f.nvars();
    int l = f.l();
    ZetaFunction z = ZetaFunction::zero(q);
    if (!origin_only)
        z = z + L_tau(q, n, l, card_by_face.at(gamma.gamma_face_id()));
    for (int id : gamma.proper_face_ids()) {
        if (origin_only && !gamma.face(id).compact) continue;
        ZetaFunction s = ZetaFunction::zero(q);
        bool any = false;
        for (const auto& cone : fan.cones) {
            if (cone.face_id != id) continue;
            s = s + S_cone(cone, gamma, q);
            any = true;
        }
        if (!any) throw std::logic_error("fan has no cones for a proper face");
        z = z + L_tau(q, n, l, card_by_face.at(id)) * s;
    }
    return z.normalized();
}

namespace {

std::string witness_text(const NondegWitness& w) {
    std::string s = "face " + w.face_key + ", z=(";
    for (size_t i = 0; i < w.point.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w.point[i]);
    }
    s += "), rank " + std::to_string(w.rank);
    return s;
}

ZetaFunction zeta_checked(const Mapping& f, const NewtonPolyhedron& gamma, const Fan& fan,
                          long long q, long long budget, bool force, bool origin) {
    if (!is_prime(to_integer(q))) throw std::invalid_argument("q must be prime");
    NondegeneracyVerdict v = check_strong(f, gamma, q, origin, budget);
    if (!v.holds && !force)
        throw DegeneracyError(to_string(v.kind) + " fails over F_" + std::to_string(q) +
                              " at " + witness_text(*v.witness));
    std::map<int, Integer> cards;
    for (size_t id = 0; id < gamma.faces().size(); ++id) {
        int i = static_cast<int>(id);
        if (origin && !gamma.face(i).compact) continue;
        cards[i] = card_D_tau(f, gamma, i, q, budget);
    }
    return assemble_zeta(f, gamma, fan, q, cards, origin);
}

}  // namespace

ZetaFunction zeta_global(const Mapping& f, const NewtonPolyhedron& gamma, const Fan& fan,
                         long long q, long long budget, bool force) {
    return zeta_checked(f, gamma, fan, q, budget, force, false);
}

ZetaFunction zeta_origin(const Mapping& f, const NewtonPolyhedron& gamma, const Fan& fan,
                         long long q, long long budget, bool force) {
    return zeta_checked(f, gamma, fan, q, budget, force, true);
}

ZetaFunction poincare_series(const ZetaFunction& z) {
    // P (1-t) = 1 - t Z = (B - t A)/B for Z = A/B.
    std::vector<Rational> B = {Rational(1)};
    for (const auto& [k, m] : z.factors()) {
        Rational c = rational_pow(to_integer(z.q()), -k.first);
        for (int i = 0; i < m; ++i) B = poly_mul(B, factor_poly(c, k.second));
    }
    std::vector<Rational> tA(z.numerator().size() + 1, Rational(0));
    for (size_t i = 0; i < z.numerator().size(); ++i) tA[i + 1] = z.numerator()[i];
    std::vector<Rational> N = poly_add(B, [&] {
        auto neg = tA;
        for (auto& x : neg) x = -x;
        return neg;
    }());
    auto quot = divide_by_factor(N, Rational(1), 1);
    if (!quot)
        throw std::domain_error("poincare_series: (1 - t) does not divide 1 - t Z; Z(1) != 1");
    ZetaFunction p(z.q());
    p.set_numerator(std::move(*quot));
    for (const auto& [k, m] : z.factors()) p.push_factor(k.first, k.second, m);
    return p.normalized();
}

}  // namespace igusa
