#ifndef IGUSA_NONDEGEN_HPP
#define IGUSA_NONDEGEN_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "igusa/geometry.hpp"
#include "igusa/poly.hpp"

namespace igusa {

enum class NondegKind { StrongGlobal, StrongAtOrigin, Saia, Khovanskii };

std::string to_string(NondegKind k);

struct NondegWitness {
    std::string face_key;            // canonical label of the failing face/cell
    std::vector<long long> point;    // torus point in (F_p^x)^n
    int rank = 0;
};

struct NondegeneracyVerdict {
    NondegKind kind;
    bool holds = true;
    std::optional<NondegWitness> witness;
};

// One full torus scan of the reduced face system of `f` on face `face_id`:
// counts card(D_tau) and records the first rank violation in lexicographic
// point order. Throws BudgetError when (p-1)^n exceeds `budget`.
struct FaceScan {
    Integer card = 0;
    std::optional<NondegWitness> violation;
};

FaceScan scan_face(const Mapping& f, const NewtonPolyhedron& gamma, int face_id,
                   long long p, long long budget);

NondegeneracyVerdict check_strong(const Mapping& f, const NewtonPolyhedron& gamma,
                                  long long p, bool at_origin, long long budget);

Integer card_D_tau(const Mapping& f, const NewtonPolyhedron& gamma, int face_id,
                   long long p, long long budget);

// card(D_tau) for every face id (all faces including Gamma).
std::map<int, Integer> card_D_all(const Mapping& f, const NewtonPolyhedron& gamma,
                                  long long p, long long budget);

NondegeneracyVerdict check_saia(const Mapping& f, const NewtonPolyhedron& gamma,
                                long long p, long long budget);

// Khovanskii non-degeneracy: rank test on (f_{1,a},...,f_{l,a}) where each
// component is restricted by its own Newton polyhedron, one strictly positive
// representative a per cell of the common refinement of the normal fans.
NondegeneracyVerdict check_khovanskii(const Mapping& f, long long p, long long budget);

constexpr long long kDefaultBudget = 10'000'000;

}  // namespace igusa

#endif
