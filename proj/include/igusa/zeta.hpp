#ifndef IGUSA_ZETA_HPP
#define IGUSA_ZETA_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "igusa/geometry.hpp"
#include "igusa/nondegen.hpp"

namespace igusa {

// Rational function in t = q^{-s} over Q with the denominator kept as a
// multiset of factors (1 - q^{-v} t^N). N = 0 factors are nonzero constants
// and disappear on normalize.
class ZetaFunction {
  public:
    explicit ZetaFunction(long long q) : q_(q) {}

    static ZetaFunction zero(long long q) { return ZetaFunction(q); }
    static ZetaFunction constant(long long q, const Rational& c);
    static ZetaFunction monomial(long long q, const Rational& c, long long deg);

    long long q() const { return q_; }
    const std::vector<Rational>& numerator() const { return num_; }
    // (v, N) -> multiplicity
    const std::map<std::pair<long long, long long>, int>& factors() const { return factors_; }
    bool is_zero() const { return num_.empty(); }

    void push_factor(long long v, long long N, int mult = 1);
    void set_numerator(std::vector<Rational> coeffs);

    ZetaFunction operator+(const ZetaFunction& o) const;
    ZetaFunction operator-(const ZetaFunction& o) const;
    ZetaFunction operator*(const ZetaFunction& o) const;
    ZetaFunction scaled(const Rational& c) const;

    // Cancels every denominator factor that exactly divides the numerator,
    // repeatedly; drops N = 0 constant factors into the numerator.
    ZetaFunction normalized() const;

    // Mathematical equality of the rational functions (cross multiply).
    bool equivalent_to(const ZetaFunction& o) const;
    bool same_representation(const ZetaFunction& o) const {
        return q_ == o.q_ && num_ == o.num_ && factors_ == o.factors_;
    }

    Rational evaluate(const Rational& t) const;
    std::vector<Rational> taylor(int terms) const;

    // deg(numerator) - sum of factor degrees; throws on the zero function.
    long long degree() const;

    std::string to_text() const;

  private:
    long long q_;
    std::vector<Rational> num_;  // dense, num_[k] is the t^k coefficient
    std::map<std::pair<long long, long long>, int> factors_;
};

struct Pole {
    Rational real_part;
    int order = 1;
    long long period = 1;
};

std::vector<Pole> poles_of(const ZetaFunction& z);

long long degree_of(const ZetaFunction& z);

enum class PoleProvenance { FacetNormal, ExtraRay, CodimBlowup };

std::string to_string(PoleProvenance p);

struct CandidatePole {
    Rational real_part;
    long long period = 1;
    PoleProvenance provenance = PoleProvenance::FacetNormal;
    IVec xi;  // empty for the codim blow-up entry
};

// -sigma(xi)/d(xi) for xi in D(Gamma) with d > 0, the -l entry iff l < n,
// and the extra-ray entries for the rays in `extra_rays` (pass the simple
// fan's list when those are requested).
std::vector<CandidatePole> candidate_poles(const NewtonPolyhedron& gamma, int l,
                                           const std::vector<IVec>& extra_rays = {});

// L_tau(q^{-s}) = q^{-n}((q-1)^n - card (1-t)/(1-q^{-min(l,n)} t)).
ZetaFunction L_tau(long long q, int n, int l, const Integer& card);

// S_{tau,i} for one simplicial cone of the subdivision.
ZetaFunction S_cone(const Cone& c, const NewtonPolyhedron& gamma, long long q);

// Explicit-formula assembly over a simplicial (or simple) fan; `card_by_face`
// must cover every face id that is summed over.
ZetaFunction assemble_zeta(const Mapping& f, const NewtonPolyhedron& gamma,
                           const Fan& fan, long long q,
                           const std::map<int, Integer>& card_by_face,
                           bool origin_only);

// Checked front ends: verify the matching strong non-degeneracy condition
// over F_q and throw DegeneracyError unless `force`.
ZetaFunction zeta_global(const Mapping& f, const NewtonPolyhedron& gamma, const Fan& fan,
                         long long q, long long budget = kDefaultBudget, bool force = false);
ZetaFunction zeta_origin(const Mapping& f, const NewtonPolyhedron& gamma, const Fan& fan,
                         long long q, long long budget = kDefaultBudget, bool force = false);

// P(t) = (1 - t Z)/(1 - t); requires Z from zeta_global (Z(1) = 1).
ZetaFunction poincare_series(const ZetaFunction& z);

}  // namespace igusa

#endif
