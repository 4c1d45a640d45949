#ifndef IGUSA_REPORT_HPP
#define IGUSA_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "igusa/geometry.hpp"
#include "igusa/nondegen.hpp"
#include "igusa/oracle.hpp"
#include "igusa/zeta.hpp"

namespace igusa {

struct RunConfig {
    enum class Command { Compute, Check, Oracle, Poles };
    enum class ZetaSelection { Global, Origin, Both };
    enum class Subdivision { Simplicial, Simple };

    Command command = Command::Compute;
    std::string poly_text;
    std::vector<std::string> vars;
    long long q = 5;
    ZetaSelection zeta = ZetaSelection::Global;
    Subdivision subdivision = Subdivision::Simplicial;
    int oracle_depth = 0;
    bool extra_rays = false;
    bool force = false;
    long long budget = kDefaultBudget;
};

struct Report {
    RunConfig config;

    std::optional<NewtonPolyhedron> gamma;
    std::optional<Fan> fan;  // the fan the zeta sums ran over
    std::vector<NondegeneracyVerdict> verdicts;
    std::map<int, Integer> cards;  // face id -> card(D_tau), faces scanned

    std::optional<ZetaFunction> z_global;
    std::optional<ZetaFunction> z_origin;
    bool global_extrapolated = false;  // computed under --force despite degeneracy
    bool origin_extrapolated = false;

    std::vector<CandidatePole> candidates;
    std::vector<Pole> poles_global;
    std::vector<Pole> poles_origin;
    std::optional<DiagonalInvariants> diagonal;
    std::optional<long long> degree_global;
    std::optional<long long> degree_origin;
    std::optional<ZetaFunction> poincare;

    std::optional<CongruenceCounts> oracle_counts;
    std::optional<OracleSeries> oracle_series;
    std::optional<VerifyResult> oracle_match;
    std::optional<CongruenceCounts> oracle_counts_origin;
    std::optional<OracleSeries> oracle_series_origin;
    std::optional<VerifyResult> oracle_match_origin;

    int exit_code = 0;
};

// Orchestration; throws ParseError, BudgetError, std::invalid_argument /
// std::domain_error for bad input. Degeneracy is reported in-band via
// verdicts and exit_code = 2.
Report run(const RunConfig& config);

// Deterministic JSON ("igusa-report/1"); every rational is {num, den}.
std::string emit_json(const Report& r);

// The oracle subcommand's compact JSON shape.
std::string emit_oracle_json(const Report& r);

std::string emit_text(const Report& r);

}  // namespace igusa

#endif
