#include "pqcurves/report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace pqcurves {

namespace {

const char* status_str(ClassStatus s) {
    switch (s) {
        case ClassStatus::Confirmed: return "confirmed";
        case ClassStatus::Excluded: return "excluded";
        default: return "undecided";
    }
}

Json class_to_json(const DescentClass& cls) {
    Json j;
    j["class"] = cls.a1.get_str();
    j["status"] = status_str(cls.status);
    Json w;
    if (cls.definitional) {
        w["kind"] = "definitional";
        w["detail"] = cls.note;
    } else if (cls.witness) {
        w["kind"] = "quartic_point";
        w["U"] = cls.witness->U.get_str();
        w["V"] = cls.witness->V.get_str();
        w["W"] = cls.witness->W.get_str();
    } else if (cls.obstruction && cls.obstruction->real_place()) {
        w["kind"] = "real_place";
        w["detail"] = cls.obstruction->reason;
    } else if (cls.obstruction) {
        w["kind"] = "modulus";
        w["modulus"] = cls.obstruction->modulus.get_str();
        w["detail"] = cls.obstruction->reason;
    } else if (cls.status == ClassStatus::Confirmed) {
        w["kind"] = "closure";
        w["detail"] = cls.note;
    } else if (cls.status == ClassStatus::Excluded) {
        w["kind"] = "closure";
        w["detail"] = cls.note;
    } else {
        w["kind"] = "none";
    }
    j["witness"] = std::move(w);
    if (cls.point) j["point"] = cls.point->str();
    return j;
}

Json curve_to_json(const CurveAB& c) {
    Json j;
    j["A"] = c.A.get_str();
    j["B"] = c.B.get_str();
    return j;
}

Json classes_json(const std::vector<mpz_class>& v) {
    Json arr = Json::array();
    for (const auto& c : v) arr.push_back(c.get_str());
    return arr;
}

}  // namespace

Json to_json(const DescentReport& rep) {
    Json j;
    j["curve"] = curve_to_json(rep.curve);
    j["isogenous"] = curve_to_json(rep.isogenous);
    j["image_a"] = classes_json(rep.image_a);
    j["image_abar"] = classes_json(rep.image_abar);
    j["rank_lower"] = rep.rank_lower;
    j["rank_upper"] = rep.rank_upper;
    if (rep.decided()) j["rank"] = rep.rank_lower;
    j["undecided"] = rep.undecided_count();
    Json trace = Json::array();
    for (const auto& cls : rep.trace_a) trace.push_back(class_to_json(cls));
    j["trace"] = std::move(trace);
    Json trace_bar = Json::array();
    for (const auto& cls : rep.trace_abar) trace_bar.push_back(class_to_json(cls));
    j["trace_isogenous"] = std::move(trace_bar);
    return j;
}

Json to_json(const TorsionGroup& group, const GaussianInt& a, const GaussianInt& b) {
    Json j;
    j["a"] = a.str();
    j["b"] = b.str();
    j["structure"] = group.structure;
    Json pts = Json::array();
    for (const auto& P : group.points) pts.push_back(P.str());
    j["points"] = std::move(pts);
    return j;
}

Json to_json(const VerificationReport& rep) {
    Json j;
    j["pair"] = Json{{"p", rep.pair.p}, {"q", rep.pair.q}};
    j["norm_bound"] = rep.norm_bound;
    Json vars = Json::array();
    for (const auto& v : rep.variants) {
        Json vj;
        vj["equation"] = v.instance.equation_str();
        vj["sign_pq"] = v.instance.sign_pq;
        vj["delta"] = v.instance.delta.str();
        vj["two_exp"] = v.instance.two_exp;
        vj["trivial_count"] = v.trivial_count;
        Json nt = Json::array();
        for (const auto& r : v.nontrivial)
            nt.push_back(Json{{"x", r.x.str()}, {"y", r.y.str()}, {"z", r.z.str()}});
        vj["nontrivial"] = std::move(nt);
        vj["pass"] = v.pass();
        vars.push_back(std::move(vj));
    }
    j["variants"] = std::move(vars);
    j["cross_checks"] = Json{{"rank_qi_plus_upper", rep.rank_qi_plus.upper},
                             {"rank_qi_minus_upper", rep.rank_qi_minus.upper},
                             {"torsion_z2", rep.torsion_z2},
                             {"rank_zero", rep.rank_zero()}};
    j["proof_route_consistent"] = rep.proof_route_consistent();
    return j;
}

namespace {

struct CommandOutcome {
    Json payload;
    bool pass = true;
};

const char* command_name(Subcommand s) {
    switch (s) {
        case Subcommand::Pairs: return "pairs";
        case Subcommand::Rank: return "rank";
        case Subcommand::Torsion: return "torsion";
        case Subcommand::DescentTrace: return "descent-trace";
        case Subcommand::Verify: return "verify";
        default: return "all";
    }
}

std::vector<int> requested_signs(char sign) {
    if (sign == '+') return {+1};
    if (sign == '-') return {-1};
    return {+1, -1};
}

mpz_class pair_coefficient(const RunConfig& cfg) {
    return mpz_class(*cfg.p) * mpz_class(*cfg.q);
}

CommandOutcome run_pairs(const RunConfig& cfg) {
    CommandOutcome out;
    Json arr = Json::array();
    for (const auto& pr : find_prime_pairs(cfg.limit)) arr.push_back(Json::array({pr.p, pr.q}));
    out.payload["limit"] = cfg.limit;
    out.payload["pairs"] = std::move(arr);
    return out;
}

CommandOutcome run_rank(const RunConfig& cfg) {
    CommandOutcome out;
    Json curves = Json::array();
    for (int sign : requested_signs(cfg.sign)) {
        CurveAB c(0, sign * pair_coefficient(cfg));
        DescentReport rep = rank_bounds(c, cfg.height, cfg.moduli_bound);
        RankRange qi = rank_over_qi(c, cfg.height, cfg.moduli_bound);
        Json cj = to_json(rep);
        cj["sign"] = sign > 0 ? "+" : "-";
        cj["rank_qi_lower"] = qi.lower;
        cj["rank_qi_upper"] = qi.upper;
        if (!rep.decided() || rep.rank_lower != 0 || rep.undecided_count() > 0)
            out.pass = false;
        curves.push_back(std::move(cj));
    }
    out.payload["curves"] = std::move(curves);
    return out;
}

CommandOutcome run_torsion(const RunConfig& cfg) {
    CommandOutcome out;
    Json groups = Json::array();
    for (int sign : requested_signs(cfg.sign)) {
        GaussianInt a(sign * pair_coefficient(cfg), 0);
        TorsionGroup g = torsion_subgroup(a, GaussianInt(0));
        Json gj = to_json(g, a, GaussianInt(0));
        gj["sign"] = sign > 0 ? "+" : "-";
        if (g.structure != "Z/2Z") out.pass = false;
        groups.push_back(std::move(gj));
    }
    out.payload["torsion"] = std::move(groups);
    return out;
}

CommandOutcome run_verify(const RunConfig& cfg) {
    CommandOutcome out;
    VerificationReport rep = verify_theorem_instance({*cfg.p, *cfg.q}, cfg.norm_bound);
    out.payload["verify"] = to_json(rep);
    out.pass = rep.pass();
    return out;
}

void render_text(const Json& doc, std::ostream& os, int indent = 0) {
    std::string pad(indent, ' ');
    if (doc.is_object()) {
        for (const auto& [k, v] : doc.items()) {
            if (v.is_object() || v.is_array()) {
                os << pad << k << ":\n";
                render_text(v, os, indent + 2);
            } else {
                os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                   << "\n";
            }
        }
    } else if (doc.is_array()) {
        for (const auto& v : doc) {
            if (v.is_object() || v.is_array()) {
                os << pad << "-\n";
                render_text(v, os, indent + 2);
            } else {
                os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    } else {
        os << pad << doc.dump() << "\n";
    }
}

}  // namespace

int run(const RunConfig& config) {
    try {
        bool needs_pair = config.subcommand != Subcommand::Pairs;
        if (needs_pair) {
            if (!config.p || !config.q) {
                std::cerr << "error: this subcommand requires --p and --q\n";
                return 1;
            }
            if (auto bad = validate_prime_pair(*config.p, *config.q)) {
                std::cerr << "error: invalid prime pair: " << *bad << "\n";
                return 1;
            }
        }
        if (config.limit < 1 || config.norm_bound < 1 || config.height < 1 ||
            config.moduli_bound < 1) {
            std::cerr << "error: all bounds must be positive\n";
            return 1;
        }
        CommandOutcome outcome;
        switch (config.subcommand) {
            case Subcommand::Pairs: outcome = run_pairs(config); break;
            case Subcommand::Rank:
            case Subcommand::DescentTrace: outcome = run_rank(config); break;
            case Subcommand::Torsion: outcome = run_torsion(config); break;
            case Subcommand::Verify: outcome = run_verify(config); break;
            case Subcommand::All: {
                CommandOutcome r = run_rank(config);
                CommandOutcome t = run_torsion(config);
                CommandOutcome v = run_verify(config);
                outcome.payload.update(r.payload);
                outcome.payload.update(t.payload);
                outcome.payload.update(v.payload);
                outcome.pass = r.pass && t.pass && v.pass;
                break;
            }
        }
        Json doc;
        doc["schema"] = 1;
        doc["command"] = command_name(config.subcommand);
        Json params;
        if (config.p) params["p"] = *config.p;
        if (config.q) params["q"] = *config.q;
        if (config.subcommand == Subcommand::Pairs) params["limit"] = config.limit;
        if (config.subcommand == Subcommand::Verify || config.subcommand == Subcommand::All)
            params["norm_bound"] = config.norm_bound;
        params["height"] = config.height;
        params["moduli_bound"] = config.moduli_bound;
        doc["params"] = std::move(params);
        doc.update(outcome.payload);
        if (config.subcommand != Subcommand::Pairs)
            doc["verdict"] = outcome.pass ? "PASS" : "FAIL";

        std::ostringstream body;
        if (config.format == OutputFormat::Json) {
            body << doc.dump(2) << "\n";
        } else {
            render_text(doc, body);
        }
        if (config.output_path) {
            std::ofstream f(*config.output_path);
            if (!f) {
                std::cerr << "error: cannot write " << *config.output_path << "\n";
                return 1;
            }
            f << body.str();
        } else {
            std::cout << body.str();
        }
        return outcome.pass ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace pqcurves
