#include "igusa/report.hpp"

#include <json.hpp>

#include "igusa/errors.hpp"
#include "igusa/parser.hpp"

namespace igusa {

using ordered_json = nlohmann::ordered_json;

namespace {

const char* zeta_selection_name(RunConfig::ZetaSelection z) {
    switch (z) {
        case RunConfig::ZetaSelection::Global: return "global";
        case RunConfig::ZetaSelection::Origin: return "origin";
        case RunConfig::ZetaSelection::Both: return "both";
    }
    return "?";
}

const char* command_name(RunConfig::Command c) {
    switch (c) {
        case RunConfig::Command::Compute: return "compute";
        case RunConfig::Command::Check: return "check";
        case RunConfig::Command::Oracle: return "oracle";
        case RunConfig::Command::Poles: return "poles";
    }
    return "?";
}

bool wants_global(const RunConfig& c) {
    return c.zeta == RunConfig::ZetaSelection::Global ||
           c.zeta == RunConfig::ZetaSelection::Both;
}

bool wants_origin(const RunConfig& c) {
    return c.zeta == RunConfig::ZetaSelection::Origin ||
           c.zeta == RunConfig::ZetaSelection::Both;
}

}  // namespace

Report run(const RunConfig& config) {
    Report r;
    r.config = config;

    if (config.vars.empty()) throw std::invalid_argument("no variables given");
    if (!is_prime(to_integer(config.q))) throw std::invalid_argument("q must be prime");
    if (config.oracle_depth < 0) throw std::invalid_argument("oracle depth must be >= 0");

    Mapping f = parse_mapping(config.poly_text, config.vars);
    NewtonPolyhedron gamma = NewtonPolyhedron::from_mapping(f);
    Fan nf = normal_fan(gamma);
    Fan sfan = simplicial_subdivision(nf, gamma);
    std::optional<Fan> simple;
    if (config.subdivision == RunConfig::Subdivision::Simple || config.extra_rays)
        simple = simple_subdivision(sfan, gamma);
    const Fan& used = (config.subdivision == RunConfig::Subdivision::Simple) ? *simple : sfan;

    r.gamma = gamma;
    r.fan = used;
    r.diagonal = diagonal_invariants(gamma, f.l());
    r.candidates = candidate_poles(gamma, f.l(),
                                   config.extra_rays ? simple->extra_rays
                                                     : std::vector<IVec>{});

    const bool is_check = config.command == RunConfig::Command::Check;
    const bool is_oracle = config.command == RunConfig::Command::Oracle;

    bool need_global = wants_global(config) && !is_check;
    bool need_origin = wants_origin(config) && !is_check;
    if (is_oracle) need_global = true;  // the formula side of the comparison

    std::optional<NondegeneracyVerdict> vg, vo;
    if (is_check || need_global)
        vg = check_strong(f, gamma, config.q, /*at_origin=*/false, config.budget);
    if (is_check || need_origin)
        vo = check_strong(f, gamma, config.q, /*at_origin=*/true, config.budget);
    if (vg) r.verdicts.push_back(*vg);
    if (vo) r.verdicts.push_back(*vo);
    if (is_check) {
        r.verdicts.push_back(check_saia(f, gamma, config.q, config.budget));
        r.verdicts.push_back(check_khovanskii(f, config.q, config.budget));
        for (int id : gamma.compact_face_ids())
            r.cards[id] = card_D_tau(f, gamma, id, config.q, config.budget);
        if (!vg->holds || !vo->holds) r.exit_code = 2;
        return r;
    }

    // card(D_tau) for the faces the requested sums run over.
    auto need_all_faces = need_global;
    for (size_t id = 0; id < gamma.faces().size(); ++id) {
        int i = static_cast<int>(id);
        bool compact = gamma.face(i).compact;
        if ((need_all_faces) || (need_origin && compact))
            r.cards[i] = card_D_tau(f, gamma, i, config.q, config.budget);
    }

    if (need_global) {
        if (vg->holds || config.force) {
            r.z_global = assemble_zeta(f, gamma, used, config.q, r.cards, false);
            r.global_extrapolated = !vg->holds;
            r.poles_global = poles_of(*r.z_global);
            r.degree_global = degree_of(*r.z_global);
            if (config.command != RunConfig::Command::Poles && !is_oracle)
                r.poincare = poincare_series(*r.z_global);
        } else if (!is_oracle) {
            r.exit_code = 2;
        }
    }
    if (need_origin) {
        if (vo->holds || config.force) {
            r.z_origin = assemble_zeta(f, gamma, used, config.q, r.cards, true);
            r.origin_extrapolated = !vo->holds;
            r.poles_origin = poles_of(*r.z_origin);
            r.degree_origin = degree_of(*r.z_origin);
        } else {
            r.exit_code = 2;
        }
    }

    int depth = config.oracle_depth;
    if (is_oracle && depth == 0) depth = 4;
    if (depth > 0) {
        r.oracle_counts = count_solutions(f, config.q, depth, config.budget, false);
        r.oracle_series = volume_series(*r.oracle_counts);
        if (r.z_global) r.oracle_match = verify_zeta(*r.z_global, *r.oracle_counts);
        if (r.z_origin) {
            r.oracle_counts_origin = count_solutions(f, config.q, depth, config.budget, true);
            r.oracle_series_origin = volume_series(*r.oracle_counts_origin);
            r.oracle_match_origin = verify_zeta(*r.z_origin, *r.oracle_counts_origin);
        }
    }
    if (is_oracle) r.exit_code = 0;
    return r;
}

namespace {

ordered_json rat_json(const Rational& r) {
    return ordered_json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

ordered_json ivec_json(const IVec& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(x.get_str());
    return a;
}

ordered_json zeta_json(const ZetaFunction& z, bool extrapolated) {
    ordered_json num = ordered_json::array();
    for (const auto& c : z.numerator()) num.push_back(rat_json(c));
    ordered_json factors = ordered_json::array();
    for (const auto& [k, m] : z.factors())
        factors.push_back(ordered_json{{"v", k.first}, {"N", k.second}, {"mult", m}});
    return ordered_json{{"q", z.q()},
                        {"numerator", num},
                        {"factors", factors},
                        {"text", z.to_text()},
                        {"extrapolated", extrapolated}};
}

ordered_json poles_json(const std::vector<Pole>& poles) {
    ordered_json a = ordered_json::array();
    for (const auto& p : poles)
        a.push_back(ordered_json{{"realPart", rat_json(p.real_part)},
                                 {"order", p.order},
                                 {"period", p.period}});
    return a;
}

ordered_json witness_json(const std::optional<NondegWitness>& w) {
    if (!w) return nullptr;
    ordered_json pt = ordered_json::array();
    for (long long x : w->point) pt.push_back(x);
    return ordered_json{{"face", w->face_key}, {"point", pt}, {"rank", w->rank}};
}

ordered_json oracle_block(const CongruenceCounts& counts, const OracleSeries& series,
                          const std::optional<VerifyResult>& match) {
    ordered_json N = ordered_json::array();
    for (const auto& c : counts.counts) N.push_back(c.get_str());
    ordered_json cs = ordered_json::array();
    for (const auto& c : series.coefficients) cs.push_back(rat_json(c));
    ordered_json out{{"p", counts.p}, {"J", counts.depth}, {"N", N}, {"c", cs}};
    out["matchedAgainstFormula"] = match.has_value() && match->matches;
    if (match && match->first_mismatch)
        out["firstMismatch"] = *match->first_mismatch;
    else
        out["firstMismatch"] = nullptr;
    return out;
}

}  // namespace

std::string emit_json(const Report& r) {
    ordered_json j;
    j["version"] = "igusa-report/1";
    j["config"] = ordered_json{{"command", command_name(r.config.command)},
                               {"poly", r.config.poly_text},
                               {"vars", r.config.vars},
                               {"q", r.config.q},
                               {"zeta", zeta_selection_name(r.config.zeta)},
                               {"subdivision",
                                r.config.subdivision == RunConfig::Subdivision::Simple
                                    ? "simple"
                                    : "simplicial"},
                               {"oracleDepth", r.config.oracle_depth},
                               {"extraRays", r.config.extra_rays},
                               {"force", r.config.force},
                               {"budget", r.config.budget}};

    if (r.gamma) {
        const auto& g = *r.gamma;
        ordered_json verts = ordered_json::array();
        for (const auto& v : g.vertices()) verts.push_back(ivec_json(v));
        ordered_json facets = ordered_json::array();
        for (const auto& f : g.facets())
            facets.push_back(
                ordered_json{{"normal", ivec_json(f.normal)}, {"d", f.offset.get_str()}});
        ordered_json faces = ordered_json::array();
        for (size_t id = 0; id < g.faces().size(); ++id) {
            const Face& f = g.face(static_cast<int>(id));
            faces.push_back(ordered_json{{"key", f.facet_ids},
                                         {"label", g.face_label(static_cast<int>(id))},
                                         {"vertexIds", f.vertex_ids},
                                         {"rays", f.rays},
                                         {"dim", f.dim},
                                         {"compact", f.compact}});
        }
        j["polyhedron"] = ordered_json{{"nvars", g.nvars()},
                                       {"vertices", verts},
                                       {"facets", facets},
                                       {"compactFaceCount", g.compact_face_ids().size()},
                                       {"faces", faces}};
    }

    if (r.fan) {
        ordered_json cones = ordered_json::array();
        for (const auto& c : r.fan->cones) {
            ordered_json gens = ordered_json::array(), sig = ordered_json::array(),
                         dv = ordered_json::array(), prov = ordered_json::array();
            for (size_t i = 0; i < c.generators.size(); ++i) {
                gens.push_back(ivec_json(c.generators[i]));
                sig.push_back(c.sigma[i].get_str());
                dv.push_back(c.dval[i].get_str());
                prov.push_back(c.extra_ray[i] ? "extra-ray" : "facet-normal");
            }
            cones.push_back(ordered_json{{"face", c.face_id},
                                         {"generators", gens},
                                         {"sigma", sig},
                                         {"d", dv},
                                         {"provenance", prov}});
        }
        ordered_json extra = ordered_json::array();
        for (const auto& x : r.fan->extra_rays) extra.push_back(ivec_json(x));
        j["fan"] = ordered_json{
            {"kind", r.fan->kind == FanKind::Simple ? "simple" : "simplicial"},
            {"cones", cones},
            {"extraRays", extra}};
    }

    ordered_json verdicts = ordered_json::array();
    for (const auto& v : r.verdicts)
        verdicts.push_back(ordered_json{{"kind", to_string(v.kind)},
                                        {"holds", v.holds},
                                        {"witness", witness_json(v.witness)}});
    j["nondegeneracy"] = verdicts;

    ordered_json cards = ordered_json::array();
    for (const auto& [id, c] : r.cards)
        cards.push_back(ordered_json{{"face", id},
                                     {"label", r.gamma ? r.gamma->face_label(id) : ""},
                                     {"count", c.get_str()}});
    j["cardD"] = cards;

    ordered_json zeta;
    zeta["global"] = r.z_global ? zeta_json(*r.z_global, r.global_extrapolated)
                                : ordered_json(nullptr);
    zeta["origin"] = r.z_origin ? zeta_json(*r.z_origin, r.origin_extrapolated)
                                : ordered_json(nullptr);
    j["zeta"] = zeta;

    ordered_json cand = ordered_json::array();
    for (const auto& c : r.candidates)
        cand.push_back(ordered_json{{"realPart", rat_json(c.real_part)},
                                    {"period", c.period},
                                    {"provenance", to_string(c.provenance)},
                                    {"xi", ivec_json(c.xi)}});
    j["candidatePoles"] = cand;

    j["poles"] = ordered_json{{"global", poles_json(r.poles_global)},
                              {"origin", poles_json(r.poles_origin)}};

    if (r.diagonal) {
        ordered_json d;
        d["tf"] = rat_json(r.diagonal->t_f);
        d["lambda"] = rat_json(r.diagonal->lambda);
        if (r.diagonal->largest_pole_real_part)
            d["largestPoleRealPart"] = rat_json(*r.diagonal->largest_pole_real_part);
        else
            d["largestPoleRealPart"] = "not guaranteed";
        j["diagonal"] = d;
    }

    ordered_json deg;
    deg["global"] = r.degree_global ? ordered_json(*r.degree_global) : ordered_json(nullptr);
    deg["origin"] = r.degree_origin ? ordered_json(*r.degree_origin) : ordered_json(nullptr);
    j["degree"] = deg;

    j["poincare"] = r.poincare ? zeta_json(*r.poincare, false) : ordered_json(nullptr);

    if (r.oracle_counts) {
        ordered_json o = oracle_block(*r.oracle_counts, *r.oracle_series, r.oracle_match);
        if (r.oracle_counts_origin)
            o["origin"] = oracle_block(*r.oracle_counts_origin, *r.oracle_series_origin,
                                       r.oracle_match_origin);
        else
            o["origin"] = nullptr;
        j["oracle"] = o;
    } else {
        j["oracle"] = nullptr;
    }
    return j.dump(2) + "\n";
}

std::string emit_oracle_json(const Report& r) {
    if (!r.oracle_counts) throw std::logic_error("no oracle block in report");
    ordered_json o = oracle_block(*r.oracle_counts, *r.oracle_series, r.oracle_match);
    return o.dump(2) + "\n";
}

std::string emit_text(const Report& r) {
    std::string out;
    auto line = [&](const std::string& s) { out += s + "\n"; };
    line("igusa zeta report");
    line("  mapping: " + r.config.poly_text + "   q = " + std::to_string(r.config.q));
    if (r.gamma) {
        const auto& g = *r.gamma;
        std::string verts;
        for (const auto& v : g.vertices()) verts += vec_to_string(v) + " ";
        line("  Newton polyhedron: vertices " + verts);
        for (const auto& f : g.facets())
            line("    facet normal " + vec_to_string(f.normal) + "  d = " + f.offset.get_str());
        line("  compact faces: " + std::to_string(g.compact_face_ids().size()));
    }
    for (const auto& v : r.verdicts) {
        std::string s = "  " + to_string(v.kind) + ": " + (v.holds ? "holds" : "FAILS");
        if (v.witness) {
            s += "  witness face " + v.witness->face_key + " z=(";
            for (size_t i = 0; i < v.witness->point.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(v.witness->point[i]);
            }
            s += ") rank " + std::to_string(v.witness->rank);
        }
        line(s);
    }
    if (r.z_global) {
        line("  Z(s,f)  = " + r.z_global->to_text() +
             (r.global_extrapolated ? "   [UNVERIFIED: degenerate, --force]" : ""));
        if (r.degree_global) line("    degree: " + std::to_string(*r.degree_global));
    }
    if (r.z_origin) {
        line("  Z0(s,f) = " + r.z_origin->to_text() +
             (r.origin_extrapolated ? "   [UNVERIFIED: degenerate, --force]" : ""));
        if (r.degree_origin) line("    degree: " + std::to_string(*r.degree_origin));
    }
    if (!r.candidates.empty()) {
        line("  candidate poles:");
        for (const auto& c : r.candidates)
            line("    Re(s) = " + c.real_part.get_str() + "  period " +
                 std::to_string(c.period) + "  [" + to_string(c.provenance) +
                 (c.xi.empty() ? "" : " " + vec_to_string(c.xi)) + "]");
    }
    auto pole_lines = [&](const char* tag, const std::vector<Pole>& ps) {
        if (ps.empty()) return;
        line(std::string("  poles of ") + tag + ":");
        for (const auto& p : ps)
            line("    Re(s) = " + p.real_part.get_str() + "  order " +
                 std::to_string(p.order) + "  period " + std::to_string(p.period));
    };
    pole_lines("Z", r.poles_global);
    pole_lines("Z0", r.poles_origin);
    if (r.diagonal) {
        line("  diagonal: t_f = " + r.diagonal->t_f.get_str() +
             "  lambda = " + r.diagonal->lambda.get_str() +
             "  largest pole Re = " +
             (r.diagonal->largest_pole_real_part
                  ? r.diagonal->largest_pole_real_part->get_str()
                  : std::string("not guaranteed")));
    }
    if (r.poincare) line("  Poincare series: " + r.poincare->to_text());
    if (r.oracle_counts) {
        std::string ns;
        for (const auto& c : r.oracle_counts->counts) ns += c.get_str() + " ";
        line("  oracle counts N_j: " + ns);
        if (r.oracle_match)
            line(std::string("  oracle vs Z: ") +
                 (r.oracle_match->matches
                      ? "match"
                      : "MISMATCH at j=" + std::to_string(*r.oracle_match->first_mismatch)));
        if (r.oracle_match_origin)
            line(std::string("  oracle vs Z0: ") +
                 (r.oracle_match_origin->matches
                      ? "match"
                      : "MISMATCH at j=" +
                            std::to_string(*r.oracle_match_origin->first_mismatch)));
    }
    return out;
}

}  // namespace igusa
