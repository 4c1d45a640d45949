#include "igusa/nondegen.hpp"

#include <algorithm>

#include "igusa/errors.hpp"

namespace igusa {

std::string to_string(NondegKind k) {
    switch (k) {
        case NondegKind::StrongGlobal: return "strong-global";
        case NondegKind::StrongAtOrigin: return "strong-at-origin";
        case NondegKind::Saia: return "saia";
        case NondegKind::Khovanskii: return "khovanskii";
    }
    return "?";
}

namespace {

void check_budget(long long p, int n, long long budget) {
    Integer points = integer_pow(to_integer(p - 1), static_cast<unsigned long>(n));
    if (points > to_integer(budget))
        throw BudgetError("torus enumeration of (p-1)^n = " + points.get_str() +
                          " points exceeds budget " + std::to_string(budget));
}

// Scan (F_p^x)^n against a face system; `label` names the face in witnesses.
FaceScan scan_system(const std::vector<Polynomial>& system, int n, long long p,
                     const std::string& label, long long budget) {
    check_budget(p, n, budget);

    std::vector<PrimeFieldPolynomial> reduced;
    std::vector<std::vector<PrimeFieldPolynomial>> jacobian;  // per component, per var
    for (const auto& f : system) {
        PrimeFieldPolynomial g = reduce_mod_p(f, p);
        std::vector<PrimeFieldPolynomial> row;
        for (int j = 0; j < n; ++j) row.push_back(g.derivative(j));
        reduced.push_back(std::move(g));
        jacobian.push_back(std::move(row));
    }
    int l = static_cast<int>(system.size());
    int target_rank = std::min(l, n);

    FaceScan out;
    std::vector<long long> z(n, 1);
    while (true) {
        bool vanishes = true;
        for (const auto& g : reduced)
            if (g.evaluate(z) != 0) {  // the zero polynomial evaluates to 0
                vanishes = false;
                break;
            }
        if (vanishes) {
            out.card += 1;
            if (!out.violation) {
                std::vector<std::vector<long long>> m;
                for (int i = 0; i < l; ++i) {
                    std::vector<long long> row(n);
                    for (int j = 0; j < n; ++j) row[j] = jacobian[i][j].evaluate(z);
                    m.push_back(std::move(row));
                }
                int rank = matrix_rank_mod_p(std::move(m), p);
                if (rank != target_rank)
                    out.violation = NondegWitness{label, z, rank};
            }
        }
        int i = n - 1;
        while (i >= 0 && z[i] == p - 1) {
            z[i] = 1;
            --i;
        }
        if (i < 0) break;
        z[i] += 1;
    }
    return out;
}

}  // namespace

FaceScan scan_face(const Mapping& f, const NewtonPolyhedron& gamma, int face_id,
                   long long p, long long budget) {
    std::vector<Polynomial> system;
    for (const auto& fi : f.components())
        system.push_back(gamma.face_restriction(fi, face_id));
    return scan_system(system, f.nvars(), p, gamma.face_label(face_id), budget);
}

NondegeneracyVerdict check_strong(const Mapping& f, const NewtonPolyhedron& gamma,
                                  long long p, bool at_origin, long long budget) {
    NondegeneracyVerdict v;
    v.kind = at_origin ? NondegKind::StrongAtOrigin : NondegKind::StrongGlobal;
    std::vector<int> face_ids;
    if (at_origin) {
        face_ids = gamma.compact_face_ids();
    } else {
        face_ids.resize(gamma.faces().size());
        for (size_t i = 0; i < face_ids.size(); ++i) face_ids[i] = static_cast<int>(i);
    }
    // Faces are stored in canonical key order, so the first violation found
    // is independent of implementation details.
    for (int id : face_ids) {
        FaceScan s = scan_face(f, gamma, id, p, budget);
        if (s.violation) {
            v.holds = false;
            v.witness = s.violation;
            return v;
        }
    }
    return v;
}

Integer card_D_tau(const Mapping& f, const NewtonPolyhedron& gamma, int face_id,
                   long long p, long long budget) {
    return scan_face(f, gamma, face_id, p, budget).card;
}

std::map<int, Integer> card_D_all(const Mapping& f, const NewtonPolyhedron& gamma,
                                  long long p, long long budget) {
    std::map<int, Integer> out;
    for (size_t id = 0; id < gamma.faces().size(); ++id)
        out[static_cast<int>(id)] = card_D_tau(f, gamma, static_cast<int>(id), p, budget);
    return out;
}

NondegeneracyVerdict check_saia(const Mapping& f, const NewtonPolyhedron& gamma,
                                long long p, long long budget) {
    NondegeneracyVerdict v;
    v.kind = NondegKind::Saia;
    for (int id : gamma.compact_face_ids()) {
        FaceScan s = scan_face(f, gamma, id, p, budget);
        if (s.card > 0) {
            v.holds = false;
            // Witness: any torus solution of the face system; rescan for the
            // lexicographically first one.
            std::vector<PrimeFieldPolynomial> sys;
            for (const auto& fi : f.components())
                sys.push_back(reduce_mod_p(gamma.face_restriction(fi, id), p));
            int n = f.nvars();
            std::vector<long long> z(n, 1);
            while (true) {
                bool vanishes = true;
                for (const auto& g : sys)
                    if (g.evaluate(z) != 0) {
                        vanishes = false;
                        break;
                    }
                if (vanishes) break;
                int i = n - 1;
                while (i >= 0 && z[i] == p - 1) {
                    z[i] = 1;
                    --i;
                }
                if (i < 0) break;
                z[i] += 1;
            }
            v.witness = NondegWitness{gamma.face_label(id), z, 0};
            return v;
        }
    }
    return v;
}

NondegeneracyVerdict check_khovanskii(const Mapping& f, long long p, long long budget) {
    NondegeneracyVerdict v;
    v.kind = NondegKind::Khovanskii;
    int n = f.nvars();

    // Common refinement of the normal fans of the Gamma(f_j): the normal fan
    // of the Minkowski sum, whose compact faces are exactly the cells meeting
    // the open positive orthant.
    std::vector<NewtonPolyhedron> gammas;
    std::set<IVec> msum;
    bool first = true;
    for (const auto& fi : f.components()) {
        if (fi.is_zero()) continue;
        gammas.push_back(NewtonPolyhedron::from_support(n, fi.support()));
        std::set<IVec> next;
        if (first) {
            next = fi.support();
            first = false;
        } else {
            for (const auto& a : msum)
                for (const auto& b : fi.support()) {
                    IVec c(n);
                    for (int i = 0; i < n; ++i) c[i] = a[i] + b[i];
                    next.insert(std::move(c));
                }
        }
        msum = std::move(next);
    }
    NewtonPolyhedron refined = NewtonPolyhedron::from_support(n, msum);

    // One strictly positive representative per cell; distinct cells can give
    // the same face tuple, so dedupe.
    std::set<std::vector<int>> seen_tuples;
    for (int id : refined.compact_face_ids()) {
        const Face& face = refined.face(id);
        IVec a(n, 0);
        for (int fi : face.facet_ids)
            for (int i = 0; i < n; ++i) a[i] += refined.facets()[fi].normal[i];
        bool has_zero = false;
        for (const auto& x : a)
            if (x == 0) has_zero = true;
        if (has_zero)
            for (auto& x : a) x += 1;
        if (refined.first_meet_locus(a) != id)
            throw std::logic_error("khovanskii cell representative left its cell");

        std::vector<int> tuple;
        std::vector<Polynomial> system;
        int gi = 0;
        for (const auto& fi : f.components()) {
            if (fi.is_zero()) {
                system.push_back(fi);
                tuple.push_back(-1);
                continue;
            }
            int tau = gammas[gi].first_meet_locus(a);
            system.push_back(gammas[gi].face_restriction(fi, tau));
            tuple.push_back(tau);
            ++gi;
        }
        if (!seen_tuples.insert(tuple).second) continue;

        FaceScan s = scan_system(system, n, p, "a=" + vec_to_string(a), budget);
        if (s.violation) {
            v.holds = false;
            v.witness = s.violation;
            return v;
        }
    }
    return v;
}

}  // namespace igusa
