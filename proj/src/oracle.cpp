#include "igusa/oracle.hpp"

#include <algorithm>

#include "igusa/errors.hpp"

namespace igusa {

namespace {

struct FlatTerm {
    std::vector<unsigned long> exps;
    long long coeff;  // reduced mod the current level modulus
};

struct FlatPoly {
    std::vector<FlatTerm> terms;

    long long evaluate(const std::vector<long long>& x, long long M) const {
        long long s = 0;
        for (const auto& t : terms) {
            long long m = t.coeff;
            for (size_t i = 0; i < x.size(); ++i) {
                unsigned long e = t.exps[i];
                long long b = x[i] % M;
                while (e) {
                    if (e & 1) m = (m * b) % M;
                    b = (b * b) % M;
                    e >>= 1;
                }
            }
            s = (s + m) % M;
        }
        return s;
    }
};

std::vector<FlatPoly> flatten_mod(const std::vector<Polynomial>& comps, const Integer& M) {
    std::vector<FlatPoly> out;
    for (const auto& f : comps) {
        FlatPoly fp;
        for (const auto& [e, c] : f.terms()) {
            FlatTerm t;
            for (const auto& x : e) t.exps.push_back(x.get_ui());
            Integer red = c.get_num() % M;  // integer coefficients by now
            if (red < 0) red += M;
            t.coeff = to_longlong(red);
            if (t.coeff != 0) fp.terms.push_back(std::move(t));
        }
        out.push_back(std::move(fp));
    }
    return out;
}

}  // namespace

CongruenceCounts count_solutions(const Mapping& f, long long p, int depth,
                                 long long budget, bool origin) {
    if (depth < 1) throw std::invalid_argument("depth must be >= 1");
    if (!is_prime(to_integer(p))) throw std::invalid_argument("p must be prime");

    // Clear denominators; scaling by a p-unit keeps the solution sets.
    std::vector<Polynomial> comps;
    for (const auto& fi : f.components()) {
        Integer den = fi.denominator_lcm();
        if (den % to_integer(p) == 0)
            throw std::domain_error("coefficient denominator divisible by p");
        comps.push_back(fi.scaled(Rational(den)));
    }

    Integer Pj = integer_pow(to_integer(p), static_cast<unsigned long>(depth));
    if (Pj > to_integer(1LL << 30))
        throw BudgetError("p^J = " + Pj.get_str() + " too large for the counting oracle");

    int n = f.nvars();
    CongruenceCounts cc;
    cc.p = p;
    cc.depth = depth;
    cc.nvars = n;
    cc.origin = origin;
    cc.counts.push_back(1);  // N_0: the empty congruence

    std::vector<std::vector<long long>> sols;
    long long work = 0;
    long long level_mod = 1;
    int start_level;

    if (origin) {
        // Level 1: only x = 0 mod p, which solves f = 0 mod p since f(0) = 0.
        sols.push_back(std::vector<long long>(n, 0));
        cc.counts.push_back(1);
        level_mod = p;
        start_level = 1;
    } else {
        sols.push_back(std::vector<long long>(n, 0));  // the single point mod p^0
        start_level = 0;
    }

    Integer pn = integer_pow(to_integer(p), static_cast<unsigned long>(n));
    for (int j = start_level; j < depth; ++j) {
        long long next_mod = level_mod * p;
        Integer candidates = Integer(static_cast<long>(sols.size())) * pn;
        work += to_longlong(candidates);
        if (work > budget)
            throw BudgetError("congruence enumeration exceeds budget of " +
                              std::to_string(budget) + " points");

        auto polys = flatten_mod(comps, to_integer(next_mod));
        std::vector<std::vector<long long>> next;
        std::vector<long long> u(n, 0);
        for (const auto& base : sols) {
            std::fill(u.begin(), u.end(), 0);
            while (true) {
                std::vector<long long> y(n);
                for (int i = 0; i < n; ++i) y[i] = base[i] + level_mod * u[i];
                bool ok = true;
                for (const auto& fp : polys)
                    if (fp.evaluate(y, next_mod) != 0) {
                        ok = false;
                        break;
                    }
                if (ok) next.push_back(std::move(y));
                int i = n - 1;
                while (i >= 0 && u[i] == p - 1) {
                    u[i] = 0;
                    --i;
                }
                if (i < 0) break;
                u[i] += 1;
            }
        }
        sols = std::move(next);
        level_mod = next_mod;
        cc.counts.push_back(Integer(static_cast<long>(sols.size())));
    }
    return cc;
}

OracleSeries volume_series(const CongruenceCounts& counts) {
    if (counts.depth < 1) throw std::invalid_argument("volume_series: depth must be >= 1");
    OracleSeries s;
    s.p = counts.p;
    s.truncation = counts.depth;
    s.origin = counts.origin;
    int n = counts.nvars;
    auto vol = [&](int j) -> Rational {
        // measure of {x : f = 0 mod p^j} within the box
        if (j == 0)
            return counts.origin ? rational_pow(to_integer(counts.p), -n) : Rational(1);
        return Rational(counts.counts[j]) *
               rational_pow(to_integer(counts.p), -static_cast<long>(n) * j);
    };
    for (int j = 0; j < counts.depth; ++j)
        s.coefficients.push_back(vol(j) - vol(j + 1));
    return s;
}

VerifyResult verify_zeta(const ZetaFunction& z, const CongruenceCounts& counts) {
    if (z.q() != counts.p)
        throw std::invalid_argument("verify_zeta: q of the zeta function differs from p");
    OracleSeries s = volume_series(counts);
    std::vector<Rational> t = z.taylor(counts.depth);
    VerifyResult r;
    for (int j = 0; j < counts.depth; ++j) {
        if (t[j] != s.coefficients[j]) {
            r.matches = false;
            r.first_mismatch = j;
            return r;
        }
    }
    return r;
}

namespace {

// k with p^k <= x^prec < p^{k+1}; bounds log_p(x) in [k/prec, (k+1)/prec].
long bounded_log_exponent(const Integer& x, long long p, long prec) {
    if (x <= 0) throw std::domain_error("log of a nonpositive integer");
    Integer target = integer_pow(x, static_cast<unsigned long>(prec));
    Integer acc = 1;
    long k = 0;
    while (acc * to_integer(p) <= target) {
        acc *= to_integer(p);
        ++k;
    }
    return k;
}

}  // namespace

LambdaEstimate lambda_estimate(const CongruenceCounts& counts, int nvars) {
    const long PREC = 60;
    LambdaEstimate e;
    int J = counts.depth;
    if (counts.counts[J] == 0) {
        e.status = LambdaStatus::NoZeroLocus;
        return e;
    }
    if (J < 3) throw std::invalid_argument("lambda_estimate: depth must be >= 3");

    long kJ = bounded_log_exponent(counts.counts[J], counts.p, PREC);
    Rational ubJ = make_rational(kJ + 1, PREC);
    e.lower = Rational(nvars) - ubJ / Rational(J) - make_rational(1, 2);

    long kJ1 = bounded_log_exponent(counts.counts[J - 1], counts.p, PREC);
    // log ratio lower bound = lb(N_J) - ub(N_{J-1})
    Rational lb_ratio = make_rational(kJ, PREC) - make_rational(kJ1 + 1, PREC);
    e.upper = Rational(nvars) - lb_ratio;

    for (int j = 1; j <= J; ++j) {
        if (counts.counts[j] == 0) break;
        long kj = bounded_log_exponent(counts.counts[j], counts.p, PREC);
        Rational lo = (make_rational(kj, PREC) - Rational(nvars * j)) / Rational(j);
        Rational hi = (make_rational(kj + 1, PREC) - Rational(nvars * j)) / Rational(j);
        e.exponents.emplace_back(lo, hi);
    }
    return e;
}

}  // namespace igusa
