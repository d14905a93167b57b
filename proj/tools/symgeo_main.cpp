#include <CLI11.hpp>
#include <json.hpp>

#include "symgeo/planner.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace symgeo;
using ordered_json = nlohmann::ordered_json;

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os) throw Error("cannot open output file: " + out_path);
    os << text;
}

ordered_json char_json(const CharNumbers& ch) {
    ordered_json j;
    j["e"] = ch.e;
    j["sigma"] = ch.sigma;
    j["c1_squared"] = ch.c1_squared();
    j["chi_h"] = ch.chi_h();
    return j;
}

ordered_json pi1_json(const Pi1Report& rep) {
    ordered_json j;
    j["status"] = to_string(rep.status);
    if (rep.certificate) {
        const TrivialityCertificate& c = *rep.certificate;
        j["steps_used"] = c.steps_used;
        j["eliminated"] = static_cast<i64>(c.order.size());
        j["remaining_generators"] = c.remaining_generators;
        ordered_json ab;
        ab["rank"] = c.abelianization.rank;
        ab["torsion"] = c.abelianization.torsion;
        j["abelianization"] = ab;
    }
    return j;
}

std::string pi1_text(const Pi1Report& rep) {
    std::ostringstream os;
    os << "pi1: " << to_string(rep.status);
    if (rep.certificate) {
        const TrivialityCertificate& c = *rep.certificate;
        os << " (eliminated " << c.order.size() << ", remaining "
           << c.remaining_generators.size() << ", H1 rank " << c.abelianization.rank;
        if (!c.abelianization.torsion.empty()) {
            os << " torsion";
            for (i64 t : c.abelianization.torsion) os << " " << t;
        }
        os << ")";
    }
    os << "\n";
    return os.str();
}

std::string params_suffix(const std::vector<i64>& params) {
    if (params.empty()) return "";
    std::string s = "(";
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(params[i]);
    }
    return s + ")";
}

void render_recipe(const Recipe& r, int depth, std::ostream& os) {
    const ManifoldState st = evaluate(r);
    os << std::string(2 * static_cast<std::size_t>(depth) + 2, ' ');
    switch (r.op) {
    case Op::Base:
        os << "base " << r.block << params_suffix(r.params);
        break;
    case Op::Sum:
        os << "sum " << r.left_surface << " ~ " << r.right_surface;
        if (!r.gluing.empty()) os << " (explicit gluing, " << r.gluing.size() << " pairs)";
        break;
    case Op::Luttinger:
        os << "luttinger " << r.torus << " " << r.curve << (r.sign > 0 ? " +1" : " -1");
        break;
    case Op::BlowUp:
        os << "blow-up";
        if (r.at) os << " at " << *r.at;
        break;
    case Op::Resolve: {
        os << "resolve [";
        for (std::size_t i = 0; i < r.components.size(); ++i) {
            if (i) os << " ";
            os << r.components[i];
        }
        os << "] n=" << r.intersections;
        break;
    }
    }
    os << "  [e=" << st.ch.e << " sigma=" << st.ch.sigma << "]\n";
    if (r.child) render_recipe(*r.child, depth + 1, os);
    if (r.left) render_recipe(*r.left, depth + 1, os);
    if (r.right) render_recipe(*r.right, depth + 1, os);
}

std::string csv_row(i64 c, i64 chi, const CharNumbers& ch, const std::string& status,
                    const std::string& pi1, const std::string& id) {
    std::ostringstream os;
    os << c << "," << chi << "," << ch.e << "," << ch.sigma << "," << status << ","
       << (pi1.empty() ? "-" : pi1) << "," << (id.empty() ? "-" : id) << "\n";
    return os.str();
}

constexpr const char* kCsvHeader = "c,chi,e,sigma,status,pi1_status,recipe_id\n";

// ---- target flags ----------------------------------------------------------

struct Target {
    std::optional<i64> c, chi, e, sigma, m, n;
};

void add_target_flags(CLI::App* cmd, Target& t) {
    cmd->add_option("--c", t.c, "c1^2 of the target");
    cmd->add_option("--chi", t.chi, "holomorphic Euler characteristic of the target");
    cmd->add_option("--e", t.e, "Euler characteristic of the target");
    cmd->add_option("--sigma", t.sigma, "signature of the target");
    cmd->add_option("--m", t.m, "m of the homeomorphism label m CP^2 # n conj-CP^2");
    cmd->add_option("--n", t.n, "n of the homeomorphism label m CP^2 # n conj-CP^2");
}

// Exit 1 on a malformed combination, 3 when chi_h cannot be an integer.
struct ResolvedTarget {
    i64 c = 0;
    i64 chi = 0;
    bool parity_fail = false;
    i64 raw_e = 0; // only meaningful on parity_fail
    i64 raw_sigma = 0;
};

ResolvedTarget resolve_target(const Target& t) {
    const int pairs = (t.c || t.chi ? 1 : 0) + (t.e || t.sigma ? 1 : 0) + (t.m || t.n ? 1 : 0);
    if (pairs != 1)
        throw CLI::ValidationError("target", "give exactly one of --c/--chi, --e/--sigma, --m/--n");

    ResolvedTarget out;
    if (t.c || t.chi) {
        if (!t.c || !t.chi) throw CLI::ValidationError("target", "--c and --chi go together");
        out.c = *t.c;
        out.chi = *t.chi;
        return out;
    }

    i64 e = 0, sigma = 0;
    if (t.e || t.sigma) {
        if (!t.e || !t.sigma) throw CLI::ValidationError("target", "--e and --sigma go together");
        e = *t.e;
        sigma = *t.sigma;
    } else {
        if (!t.m || !t.n) throw CLI::ValidationError("target", "--m and --n go together");
        e = 2 + *t.m + *t.n;
        sigma = *t.m - *t.n;
    }
    if ((e + sigma) % 4 != 0) {
        out.parity_fail = true;
        out.raw_e = e;
        out.raw_sigma = sigma;
        return out;
    }
    const CharNumbers ch = char_from_e_sigma(e, sigma);
    out.c = ch.c1_squared();
    out.chi = ch.chi_h();
    return out;
}

// ---- plan ------------------------------------------------------------------

int run_plan(const Target& t, const std::string& format, const std::string& out, i64 budget) {
    const ResolvedTarget rt = resolve_target(t);
    if (rt.parity_fail) {
        std::ostringstream os;
        if (format == "json") {
            ordered_json j;
            j["status"] = "out_of_region";
            j["e"] = rt.raw_e;
            j["sigma"] = rt.raw_sigma;
            j["note"] = "e + sigma not divisible by 4: chi_h is not an integer";
            os << j.dump(2) << "\n";
        } else if (format == "csv") {
            os << kCsvHeader
               << "-,-," << rt.raw_e << "," << rt.raw_sigma << ",out_of_region,-,-\n";
        } else {
            os << "status: out_of_region\n"
               << "e=" << rt.raw_e << " sigma=" << rt.raw_sigma
               << ": e + sigma not divisible by 4, chi_h is not an integer\n";
        }
        emit(os.str(), out);
        return 3;
    }

    const PlanResult pr = plan(rt.c, rt.chi);
    std::ostringstream os;

    if (format == "json") {
        ordered_json j;
        j["c"] = rt.c;
        j["chi"] = rt.chi;
        j["status"] = to_string(pr.status);
        j["expected"] = char_json(pr.expected);
        if (pr.decomposition) {
            const Decomposition& d = *pr.decomposition;
            ordered_json dj;
            dj["b"] = d.b;
            dj["c"] = d.c;
            dj["d"] = d.d;
            dj["g"] = d.g;
            dj["k"] = d.k;
            j["decomposition"] = dj;
        }
        if (pr.recipe) {
            const ManifoldState st = evaluate(*pr.recipe);
            j["evaluated"] = char_json(st.ch);
            j["char_match"] = (st.ch == pr.expected);
            j["pi1"] = pi1_json(certify(st, budget));
            j["odd_intersection_form"] = st.odd_form_witness();
            j["minimality"] = st.minimality_chain;
            j["recipe_id"] = recipe_id(*pr.recipe);
            j["recipe"] = recipe_to_json(*pr.recipe);
        }
        os << j.dump(2) << "\n";
    } else if (format == "csv") {
        os << kCsvHeader;
        std::string pi1, id;
        if (pr.recipe) {
            pi1 = to_string(certify(evaluate(*pr.recipe), budget).status);
            id = recipe_id(*pr.recipe);
        }
        os << csv_row(rt.c, rt.chi, pr.expected, to_string(pr.status), pi1, id);
    } else {
        os << "status: " << to_string(pr.status) << "\n";
        os << "target: c=" << rt.c << " chi=" << rt.chi << " -> e=" << pr.expected.e
           << " sigma=" << pr.expected.sigma << "\n";
        if (pr.decomposition) {
            const Decomposition& d = *pr.decomposition;
            os << "decomposition: b=" << d.b << " c=" << d.c << " d=" << d.d
               << " g=" << d.g << " k=" << d.k << "\n";
        }
        if (pr.recipe) {
            const ManifoldState st = evaluate(*pr.recipe);
            os << "evaluated: e=" << st.ch.e << " sigma=" << st.ch.sigma
               << " c1^2=" << st.ch.c1_squared() << " chi_h=" << st.ch.chi_h()
               << (st.ch == pr.expected ? "" : "  ** MISMATCH **") << "\n";
            os << "recipe: " << recipe_id(*pr.recipe) << "\n";
            render_recipe(*pr.recipe, 0, os);
            os << pi1_text(certify(st, budget));
            os << "odd intersection form: " << (st.odd_form_witness() ? "yes" : "unknown")
               << "\n";
            if (!st.minimality_chain.empty()) {
                os << "minimality:\n";
                for (const std::string& note : st.minimality_chain)
                    os << "  - " << note << "\n";
            }
        }
    }

    emit(os.str(), out);
    switch (pr.status) {
    case PlanStatus::Realized:
    case PlanStatus::Sporadic: return 0;
    case PlanStatus::Exception: return 2;
    case PlanStatus::OutOfRegion: return 3;
    case PlanStatus::Unplannable: return 4;
    }
    return 1;
}

// ---- scan ------------------------------------------------------------------

int run_scan(i64 chi_max, const std::string& format, const std::string& out, i64 budget,
             int jobs) {
    const CoverageReport rep = scan(chi_max, jobs, budget);
    std::ostringstream os;

    if (format == "json") {
        ordered_json j;
        j["chi_max"] = chi_max;
        ordered_json totals;
        totals["realized"] = rep.realized;
        totals["sporadic"] = rep.sporadic;
        totals["exception"] = rep.exception;
        totals["unplannable"] = rep.unplannable;
        j["totals"] = totals;
        ordered_json exc = ordered_json::array();
        for (const auto& [c, chi] : rep.exceptions) exc.push_back({c, chi});
        j["exceptions"] = exc;
        ordered_json rows = ordered_json::array();
        for (const CoverageRow& r : rep.rows) {
            ordered_json row;
            row["c"] = r.c;
            row["chi"] = r.chi;
            row["e"] = r.expected.e;
            row["sigma"] = r.expected.sigma;
            row["status"] = to_string(r.status);
            if (!r.recipe_id.empty()) {
                row["char_match"] = r.char_match;
                row["pi1_status"] = to_string(r.pi1);
                row["recipe_id"] = r.recipe_id;
            }
            rows.push_back(row);
        }
        j["rows"] = rows;
        os << j.dump(2) << "\n";
    } else if (format == "csv") {
        os << kCsvHeader;
        for (const CoverageRow& r : rep.rows)
            os << csv_row(r.c, r.chi, r.expected, to_string(r.status),
                          r.recipe_id.empty() ? "" : to_string(r.pi1), r.recipe_id);
    } else {
        os << "scanned chi <= " << chi_max << ": " << rep.rows.size() << " pairs\n";
        os << "realized " << rep.realized << ", sporadic " << rep.sporadic
           << ", exceptions " << rep.exception << ", unplannable " << rep.unplannable
           << "\n";
        if (!rep.exceptions.empty()) {
            os << "exception pairs:";
            for (const auto& [c, chi] : rep.exceptions) os << " (" << c << "," << chi << ")";
            os << "\n";
        }
        i64 mismatches = 0;
        for (const CoverageRow& r : rep.rows)
            if (!r.recipe_id.empty() && !r.char_match) {
                os << "char mismatch at (" << r.c << "," << r.chi << ")\n";
                ++mismatches;
            }
        if (mismatches == 0) os << "all planned recipes match their target invariants\n";
    }

    emit(os.str(), out);
    return 0;
}

// ---- verify ----------------------------------------------------------------

int run_verify(const std::string& path, const std::string& format, const std::string& out,
               i64 budget) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream is(path, std::ios::binary);
        if (!is) throw Error("cannot read recipe file: " + path);
        std::ostringstream buf;
        buf << is.rdbuf();
        text = buf.str();
    }

    nlohmann::json doc = nlohmann::json::parse(text);
    if (doc.is_object() && doc.contains("recipe")) doc = doc["recipe"];
    const RecipePtr r = recipe_from_json(doc);

    const ManifoldState st = evaluate(*r);
    const Pi1Report rep = certify(st, budget);
    std::ostringstream os;

    if (format == "json") {
        ordered_json j;
        j["evaluated"] = char_json(st.ch);
        j["pi1"] = pi1_json(rep);
        j["odd_intersection_form"] = st.odd_form_witness();
        ordered_json tori = ordered_json::array();
        for (const TorusMarker& t : st.tori) tori.push_back(t.name);
        j["surviving_tori"] = tori;
        ordered_json surfaces = ordered_json::array();
        for (const SurfaceMarker& s : st.surfaces) surfaces.push_back(s.name);
        j["surviving_surfaces"] = surfaces;
        j["minimality"] = st.minimality_chain;
        j["recipe_id"] = recipe_id(*r);
        os << j.dump(2) << "\n";
    } else {
        os << "evaluated: e=" << st.ch.e << " sigma=" << st.ch.sigma
           << " c1^2=" << st.ch.c1_squared() << " chi_h=" << st.ch.chi_h() << "\n";
        os << pi1_text(rep);
        os << "odd intersection form: " << (st.odd_form_witness() ? "yes" : "unknown") << "\n";
        os << "surviving tori:";
        for (const TorusMarker& t : st.tori) os << " " << t.name;
        os << "\nsurviving surfaces:";
        for (const SurfaceMarker& s : st.surfaces) os << " " << s.name;
        os << "\nrecipe: " << recipe_id(*r) << "\n";
        if (!st.minimality_chain.empty()) {
            os << "minimality:\n";
            for (const std::string& note : st.minimality_chain) os << "  - " << note << "\n";
        }
    }

    emit(os.str(), out);
    return 0;
}

// ---- catalog ---------------------------------------------------------------

std::vector<i64> default_params(const std::string& name) {
    if (name == "E" || name == "E'") return {1};
    if (name == "FxG") return {2, 1};
    return {};
}

int run_catalog(const std::string& format, const std::string& out) {
    std::ostringstream os;
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const std::string& name : catalog_names()) {
            const Block b = catalog(name, default_params(name));
            ordered_json j;
            j["name"] = name;
            j["char"] = char_json(b.ch);
            j["presentation"] = b.has_presentation;
            ordered_json tori = ordered_json::array();
            for (const TorusMarker& t : b.tori) tori.push_back(t.name);
            j["tori"] = tori;
            ordered_json surfaces = ordered_json::array();
            for (const SurfaceMarker& s : b.surfaces) surfaces.push_back(s.name);
            j["surfaces"] = surfaces;
            j["citation"] = b.citation;
            arr.push_back(j);
        }
        os << arr.dump(2) << "\n";
    } else {
        for (const std::string& name : catalog_names()) {
            const Block b = catalog(name, default_params(name));
            os << name << params_suffix(default_params(name)) << ": e=" << b.ch.e
               << " sigma=" << b.ch.sigma << " c1^2=" << b.ch.c1_squared()
               << " chi_h=" << b.ch.chi_h();
            if (b.has_presentation)
                os << "  pi1 <" << b.complement.generators().size() << " gens, "
                   << b.complement.relators().size() << " rels>";
            else
                os << "  pi1 facts asserted";
            if (!b.tori.empty()) {
                os << "  tori";
                for (const TorusMarker& t : b.tori) os << " " << t.name;
            }
            if (!b.surfaces.empty()) {
                os << "  surfaces";
                for (const SurfaceMarker& s : b.surfaces) os << " " << s.name;
            }
            os << "\n    " << b.citation << "\n";
        }
    }
    emit(os.str(), out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"planner for simply connected minimal symplectic 4-manifolds"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string out;
    i64 budget = kDefaultEliminationBudget;

    Target target;
    CLI::App* plan_cmd = app.add_subcommand(
        "plan", "plan one characteristic-number pair and certify the recipe");
    add_target_flags(plan_cmd, target);
    plan_cmd
        ->add_option("--format", format,
                     "csv columns: c,chi,e,sigma,status,pi1_status,recipe_id")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    plan_cmd->add_option("--out", out, "write the report to a file");
    plan_cmd->add_option("--budget", budget, "elimination step cap")
        ->check(CLI::PositiveNumber);

    i64 chi_max = 1;
    int jobs = 1;
    CLI::App* scan_cmd =
        app.add_subcommand("scan", "plan every pair in the cone up to --chi-max");
    scan_cmd->add_option("--chi-max", chi_max, "largest chi_h to scan")
        ->required()
        ->check(CLI::PositiveNumber);
    scan_cmd
        ->add_option("--format", format,
                     "csv columns: c,chi,e,sigma,status,pi1_status,recipe_id")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    scan_cmd->add_option("--out", out, "write the report to a file");
    scan_cmd->add_option("--budget", budget, "elimination step cap")
        ->check(CLI::PositiveNumber);
    scan_cmd->add_option("--jobs", jobs, "worker threads (rows stay sorted)")
        ->check(CLI::PositiveNumber);

    std::string recipe_path;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "re-evaluate a recipe JSON file (or a plan report) and certify it");
    verify_cmd->add_option("file", recipe_path, "recipe JSON path, - for stdin");
    verify_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    verify_cmd->add_option("--out", out, "write the report to a file");
    verify_cmd->add_option("--budget", budget, "elimination step cap")
        ->check(CLI::PositiveNumber);

    CLI::App* catalog_cmd =
        app.add_subcommand("catalog", "print the building-block table with citations");
    catalog_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    catalog_cmd->add_option("--out", out, "write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (plan_cmd->parsed()) return run_plan(target, format, out, budget);
        if (scan_cmd->parsed()) return run_scan(chi_max, format, out, budget, jobs);
        if (verify_cmd->parsed()) return run_verify(recipe_path, format, out, budget);
        if (catalog_cmd->parsed()) return run_catalog(format, out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
