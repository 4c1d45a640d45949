#ifndef IGUSA_POLY_HPP
#define IGUSA_POLY_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "igusa/numeric.hpp"

namespace igusa {

// Exact multivariate polynomial over Q. Stored coefficients are never zero;
// every exponent vector has length nvars and nonnegative entries.
class Polynomial {
  public:
    explicit Polynomial(int nvars) : nvars_(nvars) {}
    Polynomial(int nvars, std::map<IVec, Rational> terms);

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, const Rational& c);
    static Polynomial monomial(int nvars, const IVec& exponents, const Rational& c);

    int nvars() const { return nvars_; }
    const std::map<IVec, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;

    std::set<IVec> support() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned long e) const;
    bool operator==(const Polynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    Polynomial derivative(int var) const;
    Rational evaluate(const std::vector<Rational>& point) const;

    // Sum of the terms whose exponent lies in `keep`.
    Polynomial restricted_to(const std::set<IVec>& keep) const;

    // lcm of coefficient denominators (1 for the zero polynomial).
    Integer denominator_lcm() const;

    std::string to_string(const std::vector<std::string>& vars) const;

  private:
    int nvars_;
    std::map<IVec, Rational> terms_;
};

// f = (f_1,...,f_l) with common nvars, f(0) = 0, and at least one f_i nonzero.
class Mapping {
  public:
    explicit Mapping(std::vector<Polynomial> components);

    int nvars() const { return nvars_; }
    int l() const { return static_cast<int>(components_.size()); }
    const std::vector<Polynomial>& components() const { return components_; }
    const Polynomial& component(int i) const { return components_[i]; }

    // Union of the component supports.
    std::set<IVec> support_union() const;

  private:
    int nvars_;
    std::vector<Polynomial> components_;
};

// A polynomial over F_p: residues in {1,...,p-1}, reduced term-wise.
class PrimeFieldPolynomial {
  public:
    PrimeFieldPolynomial(long long p, int nvars) : p_(p), nvars_(nvars) {}

    long long p() const { return p_; }
    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<std::pair<IVec, long long>>& terms() const { return terms_; }
    std::map<IVec, long long> term_map() const;

    long long evaluate(const std::vector<long long>& point) const;
    PrimeFieldPolynomial derivative(int var) const;

    friend PrimeFieldPolynomial reduce_mod_p(const Polynomial& f, long long p);

  private:
    long long p_;
    int nvars_;
    std::vector<std::pair<IVec, long long>> terms_;
};

// Coefficient-wise reduction; terms vanishing mod p are dropped.
// Throws std::domain_error if a coefficient denominator is divisible by p.
PrimeFieldPolynomial reduce_mod_p(const Polynomial& f, long long p);

// Rank over F_p of the l x n matrix [dg_i/dx_j (z)] for z in the torus.
// Throws std::domain_error if some coordinate of z is 0 mod p.
int jacobian_rank_at(const std::vector<PrimeFieldPolynomial>& g,
                     const std::vector<long long>& z);

int matrix_rank_mod_p(std::vector<std::vector<long long>> m, long long p);

}  // namespace igusa

#endif
