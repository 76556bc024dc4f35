// abeltrace: batch front-end for the trace / reconstruction pipeline.
// One job per process; canonical JSON on stdout; errors as JSON documents
// with module error names. Exit codes: 0 ok, 2 validation error,
// 3 mathematical degeneracy, 4 oracle failure.

#include "abeltrace/abelian.hpp"
#include "abeltrace/errors.hpp"
#include "abeltrace/numeric.hpp"
#include "abeltrace/parser.hpp"
#include "abeltrace/reconstruct.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <set>

using json = nlohmann::ordered_json;
using namespace abeltrace;

namespace {

json unipoly_to_json(const UniPolyK& f) {
    json j;
    j["degree"] = f.degree();
    json coeffs = json::array();
    for (int k = 0; k <= f.degree(); ++k) coeffs.push_back(f.coeff(k).str());
    j["coeffs"] = coeffs;
    j["display"] = f.str();
    return j;
}

json ratfunc_list(const std::vector<RatFunc>& xs) {
    json out = json::array();
    for (const auto& x : xs) out.push_back(x.str());
    return out;
}

struct JobInputs {
    std::vector<std::string> f;
    std::vector<int> mult;
    std::string h, hden = "1", u1;
    int n = 1, d = 0, q = 0, kmax = -1, count = 50;
    std::uint64_t seed = 42;
    std::vector<std::string> w;
};

Cycle build_cycle(const JobInputs& in) {
    if (in.f.empty()) throw CLI::ValidationError("--f", "at least one component is required");
    std::vector<Cycle::Component> comps;
    for (size_t i = 0; i < in.f.size(); ++i) {
        int mult = i < in.mult.size() ? in.mult[i] : 1;
        comps.push_back({parse_poly(in.f[i], in.n), mult});
    }
    return Cycle(in.n, std::move(comps));
}

MeroFunc build_function(const JobInputs& in) {
    return {parse_poly(in.h, in.n), parse_poly(in.hden, in.n)};
}

json cycle_json(const Cycle& v) {
    json f = json::array();
    json mult = json::array();
    for (const auto& c : v.components()) {
        f.push_back(c.f.str());
        mult.push_back(c.multiplicity);
    }
    json j;
    j["f"] = f;
    j["mult"] = mult;
    return j;
}

json mero_json(const MeroFunc& h) {
    json j;
    j["num"] = h.num.str();
    j["den"] = h.den.str();
    return j;
}

// --file: one key=value per line; '#' comments; values act as defaults for
// flags not given on the command line. Unknown keys are rejected.
void apply_file(const std::string& path, JobInputs& in, CLI::App* cmd) {
    std::ifstream f(path);
    if (!f) throw CLI::ValidationError("--file", "cannot open '" + path + "'");
    std::map<std::string, std::vector<std::string>> kv;
    std::string line;
    while (std::getline(f, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--file", "expected key=value, got '" + line + "'");
        kv[line.substr(0, eq)].push_back(line.substr(eq + 1));
    }
    static const std::set<std::string> known = {"f",  "mult", "h", "hden", "u1", "n",
                                               "d",  "q",    "kmax", "count", "seed", "w"};
    auto given = [&](const std::string& flag) {
        auto* opt = cmd->get_option_no_throw("--" + flag);
        return opt != nullptr && opt->count() > 0;
    };
    for (const auto& [key, values] : kv) {
        if (!known.count(key))
            throw CLI::ValidationError("--file", "unknown key '" + key + "'");
        if (given(key)) continue;
        if (key == "f") in.f = values;
        else if (key == "w") in.w = values;
        else if (key == "mult") {
            in.mult.clear();
            for (const auto& v : values) in.mult.push_back(std::stoi(v));
        } else if (key == "h") in.h = values.back();
        else if (key == "hden") in.hden = values.back();
        else if (key == "u1") in.u1 = values.back();
        else if (key == "n") in.n = std::stoi(values.back());
        else if (key == "d") in.d = std::stoi(values.back());
        else if (key == "q") in.q = std::stoi(values.back());
        else if (key == "kmax") in.kmax = std::stoi(values.back());
        else if (key == "count") in.count = std::stoi(values.back());
        else if (key == "seed") in.seed = std::stoull(values.back());
    }
}

void emit(const json& doc, bool pretty, const std::string& output_path) {
    std::string text = pretty ? doc.dump(2) : doc.dump();
    text += '\n';
    if (output_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output_path, std::ios::binary);
        out << text;
    }
}

int exit_code_for(const std::string& name) {
    static const std::set<std::string> validation = {"SyntaxError", "UnknownVariable"};
    if (validation.count(name)) return 2;
    return 3;
}

json verify_suite(std::uint64_t seed, int count, bool include_samples, bool& pass);

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact traces, Abel inversion and abelian forms on affine hypersurfaces"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    JobInputs in;
    bool pretty = false;
    bool include_samples = false;
    std::string output_path;
    std::string file_path;

    auto add_common = [&](CLI::App* cmd) {
        cmd->set_help_flag("--help", "print help");
        cmd->add_flag("--pretty", pretty, "human-readable JSON");
        cmd->add_option("-o,--output-path", output_path, "write JSON to a file");
        cmd->add_option("--file", file_path, "read key=value inputs from a file");
    };

    auto* trace = app.add_subcommand("trace", "power sums u_k, traces v_k, form coefficients w_k");
    add_common(trace);
    trace->add_option("--n", in.n, "ambient dimension")->required();
    trace->add_option("--f", in.f, "cycle component polynomial (repeatable)");
    trace->add_option("--mult", in.mult, "component multiplicities (parallel to --f)");
    trace->add_option("--h", in.h, "numerator of h");
    trace->add_option("--hden", in.hden, "denominator of h");
    trace->add_option("--kmax", in.kmax, "largest trace index");

    auto* rec = app.add_subcommand("reconstruct", "F = Pi(V) and H = rho(h) with (*)/(**) verdicts");
    add_common(rec);
    rec->add_option("--n", in.n)->required();
    rec->add_option("--f", in.f);
    rec->add_option("--mult", in.mult);
    rec->add_option("--h", in.h);
    rec->add_option("--hden", in.hden);

    auto* wood = app.add_subcommand("wood", "affineness of Tr_V(y) in the b variables");
    add_common(wood);
    wood->add_option("--n", in.n);
    wood->add_option("--u1", in.u1, "candidate trace of y");
    wood->add_option("--d", in.d, "announced degree (reported back)");

    auto* abel = app.add_subcommand("abel-inverse", "recover (F, H) and (f, h) from trace-form data");
    add_common(abel);
    abel->add_option("--n", in.n)->required();
    abel->add_option("--f", in.f);
    abel->add_option("--mult", in.mult);
    abel->add_option("--h", in.h);
    abel->add_option("--hden", in.hden);
    abel->add_option("--w", in.w, "trace-form coefficients w_0..w_(2d-1) (repeatable)");
    abel->add_option("--d", in.d, "vertical degree (required with --w)");

    auto* abl = app.add_subcommand("abelian", "basis of maximal-degree abelian forms");
    add_common(abl);
    abl->add_option("--n", in.n)->required();
    abl->add_option("--f", in.f);

    auto* cast = app.add_subcommand("castelnuovo", "Castelnuovo bound pi_q(d, 2, n)");
    add_common(cast);
    cast->add_option("--d", in.d)->required();
    cast->add_option("--n", in.n)->required();
    cast->add_option("--q", in.q)->required();

    auto* verify = app.add_subcommand("verify", "symbolic/numeric agreement suite");
    add_common(verify);
    verify->add_option("--seed", in.seed, "sample seed (ABELTRACE_SEED overrides)");
    verify->add_option("--count", in.count, "samples per quantity");
    verify->add_flag("--samples", include_samples, "include per-sample errors");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        json err;
        err["error"] = "ValidationError";
        err["message"] = e.what();
        std::cout << err.dump() << std::endl;
        return 2;
    }
    CLI::App* cmd = app.get_subcommands().front();

    try {
        if (!file_path.empty()) apply_file(file_path, in, cmd);
        if (const char* env = std::getenv("ABELTRACE_SEED")) in.seed = std::stoull(env);

        json doc;
        if (cmd == trace) {
            if (in.kmax < 0)
                throw CLI::ValidationError("--kmax", "is required and must be nonnegative");
            Cycle v = build_cycle(in);
            doc["command"] = "trace";
            doc["n"] = in.n;
            doc["d"] = v.vertical_degree();
            doc.update(cycle_json(v));
            TraceData data = power_sums(v, in.kmax);
            std::optional<MeroFunc> h;
            if (!in.h.empty()) {
                h = build_function(in);
                doc["h"] = mero_json(*h);
                data.v = *trace_function(v, *h, in.kmax).v;
            }
            doc["kmax"] = in.kmax;
            doc["u"] = ratfunc_list(data.u);
            if (data.v) doc["v"] = ratfunc_list(*data.v);
            if (h) doc["w"] = ratfunc_list(trace_form(v, *h).w);
        } else if (cmd == rec) {
            Cycle v = build_cycle(in);
            doc["command"] = "reconstruct";
            doc["n"] = in.n;
            doc["d"] = v.vertical_degree();
            doc.update(cycle_json(v));
            UniPolyK F = pi_map(v);
            doc["F"] = unipoly_to_json(F);
            doc["star"] = star_check(F);
            TraceData u = power_sums(v, 2 * v.vertical_degree() - 2);
            auto hc = hankel_check(u, F);
            json hj;
            hj["detA"] = hc.detA.str();
            hj["disc"] = hc.disc.str();
            hj["equal"] = hc.equal;
            doc["hankel"] = hj;
            if (!in.h.empty()) {
                MeroFunc h = build_function(in);
                doc["h"] = mero_json(h);
                UniPolyK H = rho_map(v, h);
                doc["H"] = unipoly_to_json(H);
                doc["starstar"] = star_star_check(H, F);
            }
        } else if (cmd == wood) {
            if (in.u1.empty()) throw CLI::ValidationError("--u1", "is required");
            RatFunc u1 = parse_ratfunc(in.u1, in.n);
            doc["command"] = "wood";
            doc["n"] = in.n;
            if (in.d > 0) doc["d"] = in.d;
            doc["u1"] = u1.str();
            doc["affine_in_b"] = wood_test(u1, in.d);
        } else if (cmd == abel) {
            doc["command"] = "abel-inverse";
            doc["n"] = in.n;
            std::vector<RatFunc> w;
            int d = 0;
            if (!in.w.empty()) {
                if (in.d <= 0) throw CLI::ValidationError("--d", "required with --w");
                d = in.d;
                for (const auto& s : in.w) w.push_back(parse_ratfunc(s, in.n));
            } else {
                Cycle v = build_cycle(in);
                MeroFunc h = build_function(in);
                d = v.vertical_degree();
                w = trace_form_coeffs(v, h, 2 * d - 1);
            }
            doc["d"] = d;
            doc["w"] = ratfunc_list(w);
            AbelianPair pair = abel_inverse(w, d, in.n);
            doc["F"] = unipoly_to_json(pair.F);
            doc["H"] = unipoly_to_json(pair.H);
            doc["star"] = star_check(pair.F);
            doc["starstar"] = star_star_check(pair.H, pair.F);
            doc["f"] = pi_inverse(pair.F).str();
            MeroFunc h = rho_inverse(pair.F, pair.H);
            doc["h"] = mero_json(h);
        } else if (cmd == abl) {
            if (in.f.size() != 1)
                throw CLI::ValidationError("--f", "abelian expects exactly one polynomial");
            MultiPoly f = parse_poly(in.f[0], in.n);
            AbelianBasis basis = abelian_basis(f, in.n);
            doc["command"] = "abelian";
            doc["n"] = in.n;
            doc["f"] = f.str();
            doc["d"] = f.total_degree();
            doc["dimension"] = basis.dimension;
            json gens = json::array();
            for (const auto& g : basis.generators) gens.push_back(g.str());
            doc["generators"] = gens;
            json nullity;
            nullity["checked_up_to"] = in.n;
            nullity["all_zero"] = true; // abelian_basis certifies this exactly
            doc["nullity"] = nullity;
            doc["independent"] = true;
            doc["castelnuovo_q_n"] = castelnuovo_bound(f.total_degree(), in.n, in.n);
        } else if (cmd == cast) {
            doc["command"] = "castelnuovo";
            doc["d"] = in.d;
            doc["n"] = in.n;
            doc["q"] = in.q;
            try {
                doc["pi_q"] = castelnuovo_bound(in.d, in.n, in.q);
            } catch (const std::invalid_argument& e) {
                json err;
                err["error"] = "ValidationError";
                err["message"] = e.what();
                emit(err, pretty, output_path);
                return 2;
            }
        } else if (cmd == verify) {
            bool pass = true;
            doc = verify_suite(in.seed, in.count, include_samples, pass);
            emit(doc, pretty, output_path);
            return pass ? 0 : 4;
        }
        emit(doc, pretty, output_path);
        return 0;
    } catch (const CLI::ValidationError& e) {
        json err;
        err["error"] = "ValidationError";
        err["message"] = e.what();
        emit(err, pretty, output_path);
        return 2;
    } catch (const AbelError& e) {
        json err;
        err["error"] = e.name();
        err["message"] = e.what();
        emit(err, pretty, output_path);
        return exit_code_for(e.name());
    } catch (const std::invalid_argument& e) {
        json err;
        err["error"] = "ValidationError";
        err["message"] = e.what();
        emit(err, pretty, output_path);
        return 2;
    }
}

namespace {

json verify_suite(std::uint64_t seed, int count, bool include_samples, bool& pass) {
    SamplePlan plan;
    plan.seed = seed;
    plan.count = count;
    json suites = json::array();
    pass = true;

    auto run = [&](const std::string& name, const RatFunc& symbolic,
                   const std::function<std::optional<Complex>(const ParamPoint&)>& eval) {
        OracleReport rep = oracle_compare(symbolic, plan, eval);
        pass = pass && rep.pass;
        json j;
        j["name"] = name;
        j["report"] = json::parse(rep.to_json(include_samples));
        suites.push_back(j);
    };

    auto trace_eval = [](const Cycle& v, const MeroFunc& h, int k) {
        return [&v, h, k](const ParamPoint& at) -> std::optional<Complex> {
            return numeric_trace(v, h, k, at);
        };
    };

    // parabola y^2 = x1
    {
        static Cycle v = Cycle::single(parse_poly("y^2-x1", 1));
        static MeroFunc one = MeroFunc::poly(parse_poly("1", 1));
        static MeroFunc hx = MeroFunc::poly(parse_poly("x1", 1));
        static MeroFunc hy = MeroFunc::poly(parse_poly("y", 1));
        static MeroFunc hinv{parse_poly("1", 1), parse_poly("2*y", 1)};
        TraceData u = power_sums(v, 4);
        for (int k = 0; k <= 4; ++k)
            run("parabola.u" + std::to_string(k), u.u[k], trace_eval(v, one, k));
        TraceData tv = trace_function(v, hx, 3);
        for (int k = 0; k <= 3; ++k)
            run("parabola.v" + std::to_string(k) + ".x1", (*tv.v)[k], trace_eval(v, hx, k));
        TraceData ti = trace_function(v, hinv, 1);
        for (int k = 0; k <= 1; ++k)
            run("parabola.v" + std::to_string(k) + ".1over2y", (*ti.v)[k], trace_eval(v, hinv, k));
        // trace-form coefficients, numeric route = weighted root sums
        std::vector<RatFunc> w = trace_form_coeffs(v, hy, 3);
        static UniPolyK F = tilt(v).Q;
        static UniPolyK numbase = tilt_poly(parse_poly("y", 1), 1) * vertical_derivative(F);
        static UniPolyK den1 = UniPolyK::constant(1, RatFunc::constant(1, Rational(1)));
        for (int k = 0; k <= 3; ++k) {
            run("parabola.w" + std::to_string(k) + ".y", w[k],
                [k](const ParamPoint& at) -> std::optional<Complex> {
                    return numeric_residue(numbase.shifted(k), den1, F, at);
                });
        }
    }

    // Fermat-style cubic y^3 = x1^3 + 1 and its abelian differential dx/(3y^2)
    {
        static Cycle v = Cycle::single(parse_poly("y^3-x1^3-1", 1));
        static MeroFunc one = MeroFunc::poly(parse_poly("1", 1));
        TraceData u = power_sums(v, 3);
        for (int k = 0; k <= 3; ++k)
            run("cubic.u" + std::to_string(k), u.u[k], trace_eval(v, one, k));
        static MeroFunc hab{parse_poly("1", 1), parse_poly("3*y^2", 1)};
        std::vector<RatFunc> w = trace_form_coeffs(v, hab, 1);
        static UniPolyK F = tilt(v).Q;
        static UniPolyK numbase = vertical_derivative(F);
        static UniPolyK dent = tilt_poly(parse_poly("3*y^2", 1), 1);
        for (int k = 0; k <= 1; ++k) {
            run("cubic.abelian.w" + std::to_string(k), w[k],
                [k](const ParamPoint& at) -> std::optional<Complex> {
                    return numeric_residue(numbase.shifted(k), dent, F, at);
                });
        }
    }

    // two components in the plane pencil, n = 2
    {
        static Cycle v(2, {{parse_poly("y-x1-1", 2), 1}, {parse_poly("y^2-x2", 2), 1}});
        static MeroFunc one = MeroFunc::poly(parse_poly("1", 2));
        static MeroFunc hx = MeroFunc::poly(parse_poly("x1", 2));
        TraceData u = power_sums(v, 3);
        for (int k = 0; k <= 3; ++k)
            run("pair.u" + std::to_string(k), u.u[k], trace_eval(v, one, k));
        TraceData tv = trace_function(v, hx, 2);
        for (int k = 0; k <= 2; ++k)
            run("pair.v" + std::to_string(k) + ".x1", (*tv.v)[k], trace_eval(v, hx, k));
    }

    json doc;
    doc["command"] = "verify";
    doc["seed"] = seed;
    doc["count"] = count;
    doc["suites"] = suites;
    doc["pass"] = pass;
    return doc;
}

} // namespace
