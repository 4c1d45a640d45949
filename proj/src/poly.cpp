#include "igusa/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace igusa {

namespace {

void check_exponent(const IVec& e, int nvars) {
    if (static_cast<int>(e.size()) != nvars)
        throw std::invalid_argument("exponent vector length != nvars");
    for (const auto& x : e)
        if (x < 0) throw std::invalid_argument("negative exponent");
}

}  // namespace

Polynomial::Polynomial(int nvars, std::map<IVec, Rational> terms) : nvars_(nvars) {
    for (auto& [e, c] : terms) {
        check_exponent(e, nvars);
        if (c != 0) terms_.emplace(e, c);
    }
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial f(nvars);
    if (c != 0) f.terms_.emplace(IVec(nvars, 0), c);
    return f;
}

Polynomial Polynomial::monomial(int nvars, const IVec& exponents, const Rational& c) {
    check_exponent(exponents, nvars);
    Polynomial f(nvars);
    if (c != 0) f.terms_.emplace(exponents, c);
    return f;
}

bool Polynomial::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && is_zero_vec(terms_.begin()->first));
}

Rational Polynomial::constant_term() const {
    auto it = terms_.find(IVec(nvars_, 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

std::set<IVec> Polynomial::support() const {
    std::set<IVec> s;
    for (const auto& [e, c] : terms_) s.insert(e);
    return s;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
    Polynomial r(nvars_);
    r.terms_ = terms_;
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = r.terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("nvars mismatch");
    Polynomial r(nvars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            IVec e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            Rational c = c1 * c2;
            auto [it, inserted] = r.terms_.emplace(std::move(e), c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Polynomial Polynomial::pow(unsigned long e) const {
    Polynomial r = Polynomial::constant(nvars_, 1);
    Polynomial base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        IVec d = e;
        d[var] -= 1;
        r.terms_.emplace(std::move(d), c * Rational(e[var]));
    }
    return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("evaluate: dimension mismatch");
    Rational s = 0;
    for (const auto& [e, c] : terms_) {
        Rational m = c;
        for (int i = 0; i < nvars_; ++i) {
            for (Integer k = 0; k < e[i]; ++k) m *= point[i];
        }
        s += m;
    }
    return s;
}

Polynomial Polynomial::restricted_to(const std::set<IVec>& keep) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_)
        if (keep.count(e)) r.terms_.emplace(e, c);
    return r;
}

Integer Polynomial::denominator_lcm() const {
    Integer l = 1;
    for (const auto& [e, c] : terms_) l = lcm(l, c.get_den());
    return l;
}

std::string Polynomial::to_string(const std::vector<std::string>& vars) const {
    if (static_cast<int>(vars.size()) != nvars_)
        throw std::invalid_argument("to_string: wrong variable count");
    if (terms_.empty()) return "0";

    // Graded lex, highest degree first, so "x^3 - x*y" prints as written.
    std::vector<const std::pair<const IVec, Rational>*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
        Integer da = vec_sum(a->first), db = vec_sum(b->first);
        if (da != db) return da > db;
        return a->first > b->first;
    });

    std::string out;
    bool first = true;
    for (const auto* t : order) {
        const auto& [e, c] = *t;
        Rational a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;

        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars[i];
            if (e[i] > 1) mono += "^" + e[i].get_str();
        }
        if (mono.empty()) {
            out += a.get_str();
        } else if (a == 1) {
            out += mono;
        } else {
            out += a.get_str() + "*" + mono;
        }
    }
    return out;
}

Mapping::Mapping(std::vector<Polynomial> components) : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("mapping needs at least one component");
    nvars_ = components_[0].nvars();
    bool any_nonzero = false;
    for (const auto& f : components_) {
        if (f.nvars() != nvars_) throw std::invalid_argument("mapping components: nvars mismatch");
        if (f.constant_term() != 0)
            throw std::invalid_argument("mapping requires f(0) = 0 (nonzero constant term)");
        if (!f.is_zero()) any_nonzero = true;
    }
    if (!any_nonzero) throw std::invalid_argument("mapping is identically zero");
}

std::set<IVec> Mapping::support_union() const {
    std::set<IVec> s;
    for (const auto& f : components_)
        for (const auto& e : f.support()) s.insert(e);
    return s;
}

std::map<IVec, long long> PrimeFieldPolynomial::term_map() const {
    std::map<IVec, long long> m;
    for (const auto& [e, c] : terms_) m.emplace(e, c);
    return m;
}

long long PrimeFieldPolynomial::evaluate(const std::vector<long long>& point) const {
    long long s = 0;
    for (const auto& [e, c] : terms_) {
        long long m = c;
        for (int i = 0; i < nvars_; ++i) {
            long long b = point[i] % p_;
            if (b < 0) b += p_;
            unsigned long ex = static_cast<unsigned long>(e[i].get_ui());
            long long pw = 1;
            while (ex) {
                if (ex & 1) pw = (pw * b) % p_;
                b = (b * b) % p_;
                ex >>= 1;
            }
            m = (m * pw) % p_;
        }
        s = (s + m) % p_;
    }
    return s;
}

PrimeFieldPolynomial PrimeFieldPolynomial::derivative(int var) const {
    PrimeFieldPolynomial r(p_, nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        long long k = mpz_fdiv_ui(e[var].get_mpz_t(), static_cast<unsigned long>(p_));
        long long nc = (c * k) % p_;
        if (nc == 0) continue;
        IVec d = e;
        d[var] -= 1;
        r.terms_.emplace_back(std::move(d), nc);
    }
    return r;
}

PrimeFieldPolynomial reduce_mod_p(const Polynomial& f, long long p) {
    if (p < 2 || !is_prime(to_integer(p))) throw std::domain_error("modulus must be prime");
    PrimeFieldPolynomial r(p, f.nvars());
    Integer P = to_integer(p);
    for (const auto& [e, c] : f.terms()) {
        if (c.get_den() % P == 0)
            throw std::domain_error("coefficient denominator divisible by p");
        Integer den_inv;
        if (!mpz_invert(den_inv.get_mpz_t(), c.get_den().get_mpz_t(), P.get_mpz_t()))
            throw std::domain_error("coefficient denominator not invertible mod p");
        Integer num_red = c.get_num() % P;
        Integer res = (num_red * den_inv) % P;
        if (res < 0) res += P;
        if (res == 0) continue;
        r.terms_.emplace_back(e, to_longlong(res));
    }
    return r;
}

int jacobian_rank_at(const std::vector<PrimeFieldPolynomial>& g,
                     const std::vector<long long>& z) {
    if (g.empty()) return 0;
    long long p = g[0].p();
    int n = g[0].nvars();
    for (const auto& gi : g)
        if (gi.p() != p || gi.nvars() != n)
            throw std::invalid_argument("jacobian: mixed p or nvars");
    for (long long zi : z) {
        long long r = zi % p;
        if (r < 0) r += p;
        if (r == 0) throw std::domain_error("jacobian point has a coordinate 0 mod p");
    }

    std::vector<std::vector<long long>> m;
    for (const auto& gi : g) {
        std::vector<long long> row(n);
        for (int j = 0; j < n; ++j) row[j] = gi.derivative(j).evaluate(z);
        m.push_back(std::move(row));
    }
    return matrix_rank_mod_p(std::move(m), p);
}

int matrix_rank_mod_p(std::vector<std::vector<long long>> m, long long p) {
    if (m.empty()) return 0;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][col] % p != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        long long inv = 1, b = ((m[rank][col] % p) + p) % p, e = p - 2;
        while (e) {
            if (e & 1) inv = (inv * b) % p;
            b = (b * b) % p;
            e >>= 1;
        }
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            long long factor = (((m[r][col] % p) + p) % p * inv) % p;
            if (factor == 0) continue;
            for (int c = col; c < cols; ++c)
                m[r][c] = ((m[r][c] - factor * m[rank][c]) % p + p * p) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace igusa
