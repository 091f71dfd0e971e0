/**
 * @file lukas_vcf.cpp
 * @brief Command-line front end: enumeration, weights, series, moments,
 *        characteristic polynomials, continued fractions, counts and verification.
 *
 * Exit codes: 0 success, 1 identity failure, 2 usage or configuration error.
 */

#include <cstdint>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lukas/lukas.hpp"

namespace {

using lukas::io::json;

/// Flat JSON object whose keys are long option names.
class JsonConfig : public CLI::Config {
  public:
    std::string to_config(const CLI::App* app, bool default_also, bool, std::string) const override {
        json j = json::object();
        for (const CLI::Option* opt : app->get_options({})) {
            if (opt->get_lnames().empty() || !opt->get_configurable()) continue;
            const std::string& name = opt->get_lnames()[0];
            if (opt->get_type_size() != 0) {
                if (opt->count() == 1)
                    j[name] = opt->results().at(0);
                else if (opt->count() > 1)
                    j[name] = opt->results();
                else if (default_also && !opt->get_default_str().empty())
                    j[name] = opt->get_default_str();
            } else if (opt->count() > 0) {
                j[name] = true;
            }
        }
        return j.dump(2);
    }

    std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
        json j;
        try {
            j = json::parse(input);
        } catch (const json::exception& e) {
            throw CLI::ConversionError(std::string("config is not valid JSON: ") + e.what());
        }
        if (!j.is_object()) throw CLI::ConversionError("config must be a JSON object");
        std::vector<CLI::ConfigItem> items;
        for (auto& [key, value] : j.items()) {
            CLI::ConfigItem item;
            item.name = key;
            if (value.is_boolean()) {
                item.inputs = {value.get<bool>() ? "true" : "false"};
            } else if (value.is_string()) {
                item.inputs = {value.get<std::string>()};
            } else if (value.is_number()) {
                item.inputs = {value.dump()};
            } else if (value.is_null()) {
                continue;
            } else {
                throw CLI::ConversionError("config key '" + key + "' must be a scalar");
            }
            items.push_back(std::move(item));
        }
        return items;
    }
};

struct Options {
    int p = 1;
    int N = 12;
    int n = 0;
    int j = 0;
    int q = 0;
    int m = -1;
    int stages = 1;
    int tables = 1;
    std::uint64_t seed = 1;
    std::string family;
    std::string kind = "forward";
    std::string suite = "all";
    std::string coeffs;
    std::string format = "json";
    std::string tamper_spec;
    bool symbolic = false;
    bool numeric = false;
    bool bidiagonal = false;
    bool tail = false;
    bool dump_matrix = false;
    bool tamper = false;
    bool seed_given = false;
};

lukas::CoeffTable make_table(const Options& o, int reach) {
    if (o.symbolic && (o.numeric || !o.coeffs.empty() || o.seed_given))
        throw lukas::domain_error("--symbolic conflicts with --numeric, --coeffs and --seed");
    if (!o.coeffs.empty()) {
        auto t = lukas::io::load_table(o.coeffs);
        if (t.p() != o.p) throw lukas::domain_error("coefficient file has p=" + std::to_string(t.p()));
        return t;
    }
    if (o.numeric || o.seed_given) {
        if (!o.seed_given) throw lukas::domain_error("numeric mode requires --coeffs or --seed");
        auto [lo, hi] = lukas::default_window(o.p, reach);
        return lukas::CoeffTable::random(o.p, o.seed, lo, hi, o.bidiagonal);
    }
    return lukas::CoeffTable::symbolic(o.p, o.bidiagonal);
}

json count_json(const lukas::BigInt& c) {
    if (c <= lukas::BigInt(std::numeric_limits<std::int64_t>::max())) return json(static_cast<std::int64_t>(c));
    return json(c.str());
}

void emit(const Options& o, const json& payload, const std::string& text) {
    if (o.format == "json")
        std::cout << payload.dump(2) << "\n";
    else
        std::cout << text;
}

std::string series_text(const lukas::LaurentSeries& s, int upto) {
    std::ostringstream out;
    int top = std::min(s.valid_to(), upto);
    for (int e = s.min_exp(); e <= top; ++e) {
        auto c = s.coeff(e);
        if (!c.is_zero()) out << "z^" << -e << ": " << c.to_string() << "\n";
    }
    return out.str();
}

lukas::FamilySpec family_spec(const Options& o) {
    lukas::FamilySpec spec{lukas::parse_family(o.family), o.p, o.n, o.j, o.q};
    spec.validate();
    return spec;
}

int cmd_enumerate(const Options& o) {
    auto spec = family_spec(o);
    json paths = json::array();
    std::string text;
    lukas::enumerate(spec, [&](const lukas::LatticePath& g) {
        paths.push_back(lukas::io::to_json(g));
        text += lukas::encode(g) + "\n";
    });
    emit(o, {{"family", o.family}, {"p", o.p}, {"n", o.n}, {"j", o.j}, {"q", o.q}, {"count", paths.size()}, {"paths", paths}},
         text);
    return 0;
}

int cmd_weight(const Options& o) {
    auto spec = family_spec(o);
    auto table = make_table(o, std::max(o.N, o.n));
    auto w = lukas::weight_polynomial(spec, table);
    emit(o, {{"family", o.family}, {"p", o.p}, {"n", o.n}, {"j", o.j}, {"q", o.q}, {"weight", lukas::io::to_json(w)}},
         w.to_string() + "\n");
    return 0;
}

int cmd_series(const Options& o) {
    auto f = lukas::parse_series_family(o.family);
    auto table = make_table(o, o.N);
    auto s = lukas::series_from_family(f, o.j, o.q, o.N, table);
    emit(o, {{"family", o.family}, {"p", o.p}, {"j", o.j}, {"q", o.q}, {"N", o.N}, {"series", lukas::io::to_json(s, o.N)}},
         series_text(s, o.N));
    return 0;
}

int cmd_moment(const Options& o) {
    auto kind = lukas::parse_operator_kind(o.kind, o.q);
    auto table = make_table(o, std::max(o.N, o.n));
    auto v = lukas::moment(kind, o.n, o.j, table);
    emit(o, {{"kind", kind.to_string()}, {"p", o.p}, {"n", o.n}, {"j", o.j}, {"moment", lukas::io::to_json(v)}},
         v.to_string() + "\n");
    return 0;
}

int cmd_charpoly(const Options& o) {
    auto table = make_table(o, std::max(o.N, o.n));
    auto cp = lukas::char_polys(o.n, table);
    json qk = json::array();
    std::string text = "q_" + std::to_string(o.n) + " = " + cp.q.to_string() + "\n";
    for (std::size_t k = 0; k < cp.qk.size(); ++k) {
        qk.push_back(lukas::io::to_json(cp.qk[k]));
        text += "q_" + std::to_string(o.n) + "," + std::to_string(k + 1) + " = " + cp.qk[k].to_string() + "\n";
    }
    json payload{{"p", o.p}, {"n", o.n}, {"q", lukas::io::to_json(cp.q)}, {"qk", qk}};
    if (o.dump_matrix) {
        auto h = lukas::BandedMatrixView(lukas::OperatorKind::forward(0), table).dense(o.n);
        payload["matrix"] = lukas::io::to_json(h);
        for (auto& row : h) {
            for (std::size_t c = 0; c < row.size(); ++c) text += (c ? "\t" : "") + row[c].to_string();
            text += "\n";
        }
    }
    emit(o, payload, text);
    return 0;
}

int cmd_cf(const Options& o) {
    if (o.stages < 1) throw lukas::domain_error("--stages must be at least 1");
    auto table = make_table(o, o.N + o.stages);
    auto terms = lukas::cf_terms(o.stages, table);
    std::optional<lukas::SeriesVector> tail;
    if (o.tail) tail = lukas::tail_vector(o.stages, o.N + 1, table);
    auto value = lukas::eval_finite_cf(terms, tail, o.N);
    json jt = json::array();
    for (auto& t : terms) {
        json c = json::array(), d = json::array();
        for (auto& x : t.c) c.push_back(lukas::io::to_json(x));
        for (auto& x : t.d) d.push_back(lukas::io::to_json(x));
        jt.push_back({{"k", t.k}, {"c", c}, {"d", d}});
    }
    json jv = json::array();
    std::string text;
    for (std::size_t i = 0; i < value.size(); ++i) {
        jv.push_back(lukas::io::to_json(value[i], o.N));
        text += "component " + std::to_string(i) + ":\n" + series_text(value[i], o.N);
    }
    emit(o, {{"p", o.p}, {"stages", o.stages}, {"N", o.N}, {"tail", o.tail}, {"terms", jt}, {"value", jv}}, text);
    return 0;
}

int cmd_count(const Options& o) {
    Options x = o;
    if (o.m >= 0) x.n = o.m * (o.p + 1) + o.j;
    auto spec = family_spec(x);
    auto c = lukas::count(spec);
    emit(o, {{"family", o.family}, {"p", o.p}, {"n", x.n}, {"j", o.j}, {"q", o.q}, {"count", count_json(c)}},
         c.str() + "\n");
    return 0;
}

int cmd_verify(const Options& o) {
    lukas::RunConfig cfg;
    cfg.p = o.p;
    cfg.N = o.N;
    cfg.tables = o.tables;
    cfg.seed = o.seed;
    if (o.symbolic && (o.numeric || !o.coeffs.empty()))
        throw lukas::domain_error("--symbolic conflicts with --numeric and --coeffs");
    if (!o.coeffs.empty()) {
        cfg.coeffs = lukas::io::load_table(o.coeffs);
        cfg.mode = cfg.coeffs->mode();
        if (cfg.coeffs->p() != o.p) throw lukas::domain_error("coefficient file has p=" + std::to_string(cfg.coeffs->p()));
    } else if (o.numeric || o.seed_given) {
        if (o.symbolic) throw lukas::domain_error("--symbolic conflicts with --seed");
        cfg.mode = lukas::RingKind::numeric;
    }
    cfg.tamper = o.tamper;
    if (o.tamper && !o.tamper_spec.empty()) cfg.tamper_at = lukas::parse_tamper(o.tamper_spec);
    auto reports = lukas::run_suite(o.suite, cfg);
    bool ok = lukas::all_pass(reports);
    std::ostringstream text;
    for (auto& r : reports) {
        text << (r.pass ? "PASS " : "FAIL ") << r.identity << " [" << r.table << "]";
        if (!r.failures.empty())
            text << " component=" << r.failures[0].component << " exponent=" << r.failures[0].exponent;
        if (!r.note.empty()) text << " (" << r.note << ")";
        text << "\n";
    }
    emit(o, lukas::io::to_json(reports), text.str());
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lukasiewicz paths, banded Hessenberg operators and vector continued fractions"};
    app.config_formatter(std::make_shared<JsonConfig>());
    app.set_config("--config", "", "JSON file with option values keyed by long option name");
    app.require_subcommand(1, 1);
    app.fallthrough();

    Options o;
    app.add_option("--p", o.p, "Number of subdiagonals")->check(CLI::Range(1, 1 << 20));
    app.add_option("--N", o.N, "Truncation order (coefficients through z^-N)")->check(CLI::Range(1, 1 << 20));
    app.add_option("--n", o.n, "Path length / matrix size")->check(CLI::Range(0, 1 << 20));
    app.add_option("--j", o.j, "End offset / series index")->check(CLI::Range(0, 1 << 20));
    app.add_option("--q", o.q, "Shift")->check(CLI::Range(0, 1 << 20));
    app.add_option("--m", o.m, "Down-step count; sets n = m(p+1)+j")->check(CLI::Range(0, 1 << 20));
    app.add_option("--family", o.family, "Path family P|D|Dhat|R|S|Shat, or series family W|A|B|R|S|T");
    app.add_option("--kind", o.kind, "Operator forward|reflected|two-sided");
    app.add_option("--stages", o.stages, "Number of continued-fraction stages");
    app.add_option("--suite", o.suite, "Verification suite, or all");
    app.add_option("--coeffs", o.coeffs, "JSON coefficient table (numeric mode)");
    auto* seed = app.add_option("--seed", o.seed, "Seed for random numeric tables");
    app.add_option("--tables", o.tables, "Number of random tables, seeds seed..seed+tables-1")
        ->check(CLI::Range(1, 1 << 20));
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    auto* tamper = app.add_option("--tamper", o.tamper_spec,
                                  "Perturb one input: series:<F>:<j>:<q>:<exponent> or cf:<stage>:<component>")
                       ->expected(0, 1);
    app.add_flag("--symbolic", o.symbolic, "Symbolic coefficients (default)");
    app.add_flag("--numeric", o.numeric, "Numeric coefficients from --seed or --coeffs");
    app.add_flag("--bidiagonal", o.bidiagonal, "Zero every diagonal except the p-th");
    app.add_flag("--tail", o.tail, "Close the continued fraction with the exact tail");
    app.add_flag("--dump-matrix", o.dump_matrix, "Include the dense truncation H_n (charpoly)");

    std::vector<std::pair<CLI::App*, int (*)(const Options&)>> commands{
        {app.add_subcommand("enumerate", "List the paths of a family"), cmd_enumerate},
        {app.add_subcommand("weight", "Weight polynomial of a path family"), cmd_weight},
        {app.add_subcommand("series", "Generating series of a family"), cmd_series},
        {app.add_subcommand("moment", "Matrix-power moment of an operator"), cmd_moment},
        {app.add_subcommand("charpoly", "Characteristic polynomials q_n and q_{n,k}"), cmd_charpoly},
        {app.add_subcommand("cf", "Finite vector continued fraction"), cmd_cf},
        {app.add_subcommand("count", "Number of paths in a family"), cmd_count},
        {app.add_subcommand("verify", "Run identity verification suites"), cmd_verify},
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    o.seed_given = seed->count() > 0;
    o.tamper = tamper->count() > 0;

    try {
        for (auto& [sub, fn] : commands)
            if (sub->parsed()) return fn(o);
    } catch (const lukas::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
