#ifndef IGUSA_ORACLE_HPP
#define IGUSA_ORACLE_HPP

#include <optional>
#include <vector>

#include "igusa/poly.hpp"
#include "igusa/zeta.hpp"

namespace igusa {

// N_j = #{x in (Z/p^j)^n : f_i(x) = 0 mod p^j for all i}, j = 0..J.
// For the origin variant, additionally x = 0 mod p.
struct CongruenceCounts {
    long long p = 0;
    int depth = 0;
    int nvars = 0;
    bool origin = false;
    std::vector<Integer> counts;  // N_0..N_J
};

CongruenceCounts count_solutions(const Mapping& f, long long p, int depth,
                                 long long budget = kDefaultBudget, bool origin = false);

// c_j = vol{x : ||f(x)|| = p^{-j}} for j = 0..J-1, over R^n (global) or
// (pR)^n (origin variant), derived from the counts by telescoping.
struct OracleSeries {
    long long p = 0;
    int truncation = 0;
    bool origin = false;
    std::vector<Rational> coefficients;
};

OracleSeries volume_series(const CongruenceCounts& counts);

// Exact comparison of the Taylor coefficients of Z at t = 0 against the
// volume series; nullopt on success, else the first mismatching index.
struct VerifyResult {
    bool matches = true;
    std::optional<int> first_mismatch;
};

VerifyResult verify_zeta(const ZetaFunction& z, const CongruenceCounts& counts);

enum class LambdaStatus { Ok, NoZeroLocus };

// Bracketing heuristic for lambda from finite counts; never an exact value.
struct LambdaEstimate {
    LambdaStatus status = LambdaStatus::Ok;
    Rational lower;
    Rational upper;
    // per j >= 1: rational bounds on the p-exponent of (N_j p^{-nj})^{1/j}
    std::vector<std::pair<Rational, Rational>> exponents;
};

LambdaEstimate lambda_estimate(const CongruenceCounts& counts, int nvars);

}  // namespace igusa

#endif
