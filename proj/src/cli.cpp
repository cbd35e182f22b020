#include "cgc/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "cgc/census.hpp"
#include "cgc/io.hpp"
#include "cgc/registry.hpp"

namespace cgc {

namespace {

struct Options {
    std::string field, spec, h, format = "json", mode = "exhaustive", hypothesis = "relaxed", kind = "mds",
                                 alg = "weight3", rows, golden;
    std::size_t m = 0, g = 1;
    std::uint32_t lambda = 1, theta = 0;
    std::uint64_t seed = kDefaultSeed, trials = 1000, limit = std::uint64_t{1} << 24;
    std::uint64_t table_limit = std::uint64_t{1} << 16;
    unsigned workers = 1;
    bool force = false, update_golden = false;
};

struct Output {
    json meta;
    json result;
    std::string csv;     // dedicated CSV body, if any
    std::string pretty;  // dedicated pretty body, if any
    std::string key;     // golden file stem
};

std::vector<std::uint32_t> parse_codes(const std::string& s) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(s);
    for (std::string tok; std::getline(ss, tok, ',');) {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(tok, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != tok.size() || tok.empty() || tok[0] == '-')
            throw Error(ErrorKind::Parse, "malformed code list '" + s + "'");
        out.push_back(static_cast<std::uint32_t>(v));
    }
    if (out.empty()) throw Error(ErrorKind::Parse, "empty code list");
    return out;
}

Field field_of(const Options& o) {
    if (o.field.empty()) throw Error(ErrorKind::Parse, "a field is required (--field or --q)");
    return resolve_field(o.field);
}

CirculantSpec spec_of(const Options& o) {
    if (!o.spec.empty()) return parse_spec(o.spec);
    if (o.m == 0) throw Error(ErrorKind::Parse, "--m is required");
    if (o.h.empty()) throw Error(ErrorKind::Parse, "--h is required");
    return make_spec(field_of(o), o.m, o.g, o.lambda, parse_codes(o.h), o.theta);
}

std::string slug(std::string s) {
    for (char& c : s)
        if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
    return s;
}

std::string spec_key(const CirculantSpec& s) {
    std::vector<std::uint32_t> h;
    for (Elem e : s.h) h.push_back(e.code);
    return "q" + std::to_string(s.field.q()) + "-m" + std::to_string(s.m) + "-g" + std::to_string(s.g) + "-l" +
           std::to_string(s.lambda.code) + "-h" + join_codes(h, '_') + "-t" + std::to_string(s.theta_exp);
}

json meta_for(const std::string& verb, const std::optional<Field>& f, json params) {
    return {{"tool", "cgc"},
            {"version", kVersion},
            {"command", verb},
            {"field", f ? field_json(*f) : json(nullptr)},
            {"params", std::move(params)}};
}

void require_well_defined(const CirculantSpec& s, const Options& o) {
    if (!s.well_defined() && !o.force)
        throw Error(ErrorKind::InvalidSpec, "g = " + std::to_string(s.g) + " is not 1 mod ord(lambda) = " +
                                                std::to_string(s.lambda_order()) + "; pass --force to run anyway");
}

Output do_build(const Options& o) {
    const CirculantSpec s = spec_of(o);
    const Matrix a = build(s);
    Output out;
    out.meta = meta_for("build", s.field, {{"spec", format_spec(s)}});
    out.result = {{"spec", spec_json(s)}, {"matrix", matrix_json(a)}};
    out.csv = matrix_csv(a);
    out.pretty = format_spec(s) + "\n" + std::string(to_string(classify(s))) +
                 (s.well_defined() ? "" : " (not well defined)") + "\n" + pretty_matrix(a);
    out.key = "build-" + spec_key(s);
    return out;
}

json mds_report(const Matrix& a) {
    const MdsResult r = is_mds(a);
    CheckReport rep;
    rep.verdict = r.mds;
    rep.conditions.push_back({"minor_scan", r.mds});
    if (!r.mds) rep.witness = Witness{Witness::Kind::Minor, {}, {}, r.witness};
    return report_json(rep);
}

json involutory_report(const CirculantSpec& s, const Matrix& a) {
    const bool cond = involutory_condition(s);
    const bool mat = is_involutory(a);
    CheckReport rep;
    rep.conditions = {{"inverse_product_condition", cond}, {"matrix_involutory", mat}};
    rep.verdict = cond && mat;
    rep.consistent = cond == mat;
    rep.hypothesis = involution_hypothesis(s);
    if (!rep.verdict) rep.witness = Witness{Witness::Kind::Product, involution_product(s), {}, std::nullopt};
    return report_json(rep);
}

json semi_report(const Matrix& a) {
    json j;
    const auto inv = try_inverse(a);
    if (!inv) {
        j = {{"verdict", false},
             {"conditions", {{"invertible", false}}},
             {"witness", {{"kind", "reason"}, {"reason", "matrix is singular"}}}};
    } else {
        const SemiInvolutory s = semi_involutory(a);
        j = {{"verdict", s.found}, {"conditions", {{"invertible", true}, {"diagonal_scaling", s.found}}}};
        j["witness"] = s.found ? json(nullptr) : json{{"kind", "reason"}, {"reason", s.reason}};
        j["semi_involutory"] = semi_involutory_json(s);
    }
    j["hypothesis_mode"] = "relaxed";
    j["consistent"] = true;
    return j;
}

json scalar_semi_report(const CirculantSpec& s, const Matrix& a) {
    json j;
    if (!try_inverse(a)) {
        j = {{"verdict", false},
             {"conditions", {{"invertible", false}}},
             {"witness", {{"kind", "reason"}, {"reason", "matrix is singular"}}},
             {"scalar", nullptr}};
    } else {
        const auto c = scalar_semi_involutory(a, s.theta_exp);
        const bool poly = c ? scalar_semi_involutory_condition(s, *c, s.field.one()) : false;
        j = {{"verdict", c.has_value() && poly},
             {"conditions", {{"invertible", true}, {"matrix_scalar_inverse", c.has_value()}, {"polynomial_condition", poly}}},
             {"scalar", c ? json(c->code) : json(nullptr)}};
        j["witness"] = c ? json(nullptr) : json{{"kind", "reason"}, {"reason", "A^-1 is not a fixed-field multiple of A"}};
        j["consistent"] = c.has_value() == poly;
    }
    j["hypothesis_mode"] = "relaxed";
    if (!j.contains("consistent")) j["consistent"] = true;
    return j;
}

Output do_check(const Options& o) {
    const CirculantSpec s = spec_of(o);
    const HypothesisMode mode = parse_hypothesis_mode(o.hypothesis);
    Output out;
    out.meta = meta_for("check", s.field,
                        {{"spec", format_spec(s)}, {"kind", o.kind}, {"hypothesis", o.hypothesis}, {"force", o.force}});
    out.key = "check-" + o.kind + "-" + spec_key(s);
    const Matrix a = build(s);
    json report;
    if (o.kind == "mds") {
        report = mds_report(a);
    } else if (o.kind == "weight-mds") {
        require_well_defined(s, o);
        report = report_json(weight_mds_oracle(s, o.workers));
    } else if (o.kind == "involutory") {
        require_well_defined(s, o);
        report = involutory_report(s, a);
    } else if (o.kind == "involutory-mds") {
        require_well_defined(s, o);
        report = report_json(involutory_mds_check(s, mode, o.workers));
    } else if (o.kind == "semi-involutory") {
        report = semi_report(a);
    } else if (o.kind == "scalar-semi-involutory") {
        require_well_defined(s, o);
        report = scalar_semi_report(s, a);
    } else if (o.kind == "order3" || o.kind == "order4") {
        if (s.is_skew()) throw Error(ErrorKind::InvalidSpec, o.kind + " applies to commutative specs only");
        const QuotientElement h = s.h_element();
        const bool v = o.kind == "order3" ? order3_characterization(h, s.g) : order4_characterization(h, s.g);
        const MdsResult scan = is_mds(a);
        const QuotientElement hinv = inverse(h);
        report = {{"verdict", v},
                  {"conditions", {{"characterization", v}, {"minor_scan", scan.mds}}},
                  {"witness", nullptr},
                  {"hypothesis_mode", std::string(to_string(mode))},
                  {"consistent", v == scan.mds},
                  {"weights", {hamming_weight(h), hamming_weight(hinv)}},
                  {"h_inv", poly_json(hinv)}};
        if (!scan.mds && scan.witness)
            report["witness"] = {{"kind", "minor"}, {"rows", scan.witness->rows}, {"cols", scan.witness->cols}};
        else if (!v)
            report["witness"] = {{"kind", "weights"}, {"weights", {hamming_weight(h), hamming_weight(hinv)}}};
    } else {
        throw Error(ErrorKind::Parse, "unknown --kind '" + o.kind + "'");
    }
    out.result = {{"kind", o.kind}, {"spec", spec_json(s)}, {"report", report}};
    return out;
}

Output do_count(const Options& o, bool exhaustive) {
    const Field f = field_of(o);
    if (o.m == 0) throw Error(ErrorKind::Parse, "--m is required");
    const Elem lambda = f.element(o.lambda);
    const QuotientRing ring(f, o.m, lambda);
    const std::string verb = exhaustive ? "enumerate" : "count";
    Output out;
    out.meta = meta_for(verb, f, {{"m", o.m}, {"lambda", o.lambda}, {"limit", o.limit}});
    out.key = verb + "-q" + std::to_string(f.q()) + "-m" + std::to_string(o.m) + "-l" + std::to_string(o.lambda);
    const FormulaCount fc = invertible_count_formula(o.m, f, lambda);
    json shifts = admissible_shifts(o.m, ring.lambda_order());
    out.result = {{"m", o.m},
                  {"q", f.q()},
                  {"lambda", o.lambda},
                  {"r", ring.lambda_order()},
                  {"factorization", render_factorization(factor(ring.modulus()))},
                  {"shifts", shifts},
                  {"upper_bound", upper_bound(o.m, f, lambda)},
                  {"formula", formula_json(fc)}};
    if (exhaustive) {
        const ExhaustiveCount ec = enumerate_invertible_exhaustive(o.m, f, lambda, o.workers, o.limit);
        out.result["exhaustive"] = exhaustive_json(ec);
        out.result["pair_count_matches_formula"] = ec.pair_count == fc.local_value;
    }
    return out;
}

Output do_search(const Options& o) {
    const Field f = field_of(o);
    SearchOptions so;
    if (o.mode == "exhaustive") so.mode = SearchMode::Exhaustive;
    else if (o.mode == "random") so.mode = SearchMode::Random;
    else throw Error(ErrorKind::Parse, "--mode must be 'exhaustive' or 'random'");
    so.seed = o.seed;
    so.trials = o.trials;
    so.workers = o.workers;
    std::vector<SearchHit> hits;
    if (o.alg == "weight3") hits = algorithm1_weight3(f, so);
    else if (o.alg == "weight4") hits = algorithm2_weight4(f, so);
    else throw Error(ErrorKind::Parse, "--alg must be 'weight3' or 'weight4'");
    json params = {{"alg", o.alg}, {"mode", o.mode}};
    std::string key = "search-" + o.alg + "-q" + std::to_string(f.q()) + "-" + o.mode;
    if (so.mode == SearchMode::Random) {
        params["seed"] = o.seed;
        params["trials"] = o.trials;
        key += "-s" + std::to_string(o.seed) + "-t" + std::to_string(o.trials);
    }
    Output out;
    out.meta = meta_for("search", f, params);
    out.key = key;
    json jh = json::array();
    for (const auto& h : hits) jh.push_back(hit_json(h));
    out.result = {{"alg", o.alg}, {"mode", o.mode}, {"count", hits.size()}, {"hits", jh}};
    out.csv = hits_csv(hits);
    std::ostringstream os;
    const std::string sym = "x";
    for (const auto& h : hits) {
        std::vector<Elem> a, b;
        for (auto c : h.h) a.push_back(Elem{c});
        for (auto c : h.h_inv) b.push_back(Elem{c});
        os << render_poly(Poly(f, a), sym) << "  ->  " << render_poly(Poly(f, b), sym) << "\n";
    }
    os << hits.size() << " hit(s)\n";
    out.pretty = os.str();
    return out;
}

Output do_table1(const Options& o) {
    std::vector<int> rows;
    if (!o.rows.empty())
        for (auto c : parse_codes(o.rows)) rows.push_back(static_cast<int>(c));
    const auto table = table1(rows, o.table_limit, o.workers);
    Output out;
    out.meta = meta_for("table1", std::nullopt, {{"rows", rows}, {"exhaustive_limit", o.table_limit}});
    out.key = "table1-" + (o.rows.empty() ? std::string("all") : slug(o.rows));
    json jr = json::array();
    for (const auto& r : table) jr.push_back(census_row_json(r));
    out.result = {{"rows", jr}};
    out.csv = census_csv(table);
    out.pretty = pretty_census(table);
    return out;
}

void flatten(const json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, out);
    } else if (j.is_array() && std::none_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); })) {
        std::string s;
        for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ";" : "") + j[i].dump();
        out.emplace_back(path, s);
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "." + std::to_string(i), out);
    } else {
        out.emplace_back(path, j.is_string() ? j.get<std::string>() : j.dump());
    }
}

std::string render(const Output& o, const std::string& format) {
    if (format == "json") return json{{"meta", o.meta}, {"result", o.result}}.dump(2) + "\n";
    std::ostringstream os;
    std::vector<std::pair<std::string, std::string>> meta;
    flatten(o.meta, "", meta);
    for (const auto& [k, v] : meta) os << "# " << k << " = " << v << "\n";
    std::vector<std::pair<std::string, std::string>> flat;
    if (format == "csv") {
        if (!o.csv.empty()) return os.str() + o.csv;
        flatten(o.result, "", flat);
        os << "key,value\n";
        for (const auto& [k, v] : flat) os << k << ",\"" << v << "\"\n";
        return os.str();
    }
    if (!o.pretty.empty()) return os.str() + o.pretty;
    flatten(o.result, "", flat);
    for (const auto& [k, v] : flat) os << k << ": " << v << "\n";
    return os.str();
}

int golden_compare(const Options& o, const Output& out, const std::string& text, std::ostream& err) {
    namespace fs = std::filesystem;
    const std::string ext = o.format == "json" ? ".json" : o.format == "csv" ? ".csv" : ".txt";
    const fs::path file = fs::path(o.golden) / (out.key + ext);
    if (o.update_golden) {
        fs::create_directories(o.golden);
        std::ofstream(file, std::ios::binary) << text;
        err << "wrote " << file.string() << "\n";
        return kExitOk;
    }
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        err << "golden file " << file.string() << " not found\n";
        return kExitGoldenMismatch;
    }
    std::stringstream want;
    want << in.rdbuf();
    if (want.str() == text) return kExitOk;
    std::istringstream a(want.str()), b(text);
    std::string la, lb;
    for (int line = 1;; ++line) {
        const bool ga = static_cast<bool>(std::getline(a, la)), gb = static_cast<bool>(std::getline(b, lb));
        if (!ga && !gb) break;
        if (la != lb || ga != gb) {
            err << file.string() << ":" << line << ": golden mismatch\n  want: " << (ga ? la : "<eof>")
                << "\n  got:  " << (gb ? lb : "<eof>") << "\n";
            break;
        }
    }
    return kExitGoldenMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Consta-g-circulant and consta-theta_g-circulant matrices over finite fields", "cgc"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
        sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1u, 256u));
        sub->add_option("--golden", o.golden, "Compare the output with the golden file in this directory");
        sub->add_flag("--update-golden", o.update_golden, "Write the golden file instead of comparing");
    };
    auto add_field = [&](CLI::App* sub) {
        auto* fo = sub->add_option("--field", o.field, "Field: registry name, p^n:c0,...,cn, or order q");
        sub->add_option("--q", o.field, "Field order (alias of --field)")->excludes(fo);
    };
    auto add_spec = [&](CLI::App* sub) {
        add_field(sub);
        sub->add_option("--m", o.m, "Matrix order");
        sub->add_option("--g", o.g, "Shift, 1..m");
        sub->add_option("--lambda", o.lambda, "Code of lambda");
        sub->add_option("--h", o.h, "Codes h_0,...,h_{m-1}");
        sub->add_option("--theta", o.theta, "Frobenius exponent k of theta(a) = a^(p^k)");
        sub->add_option("--spec", o.spec, "q=<field>;m=;g=;lambda=;h=;theta=");
        sub->add_flag("--force", o.force, "Run checks on specs that are not well defined");
    };

    auto* build_cmd = app.add_subcommand("build", "Build the matrix of a spec");
    add_spec(build_cmd);
    add_output(build_cmd);

    auto* check_cmd = app.add_subcommand("check", "Check a matrix property");
    add_spec(check_cmd);
    add_output(check_cmd);
    check_cmd->add_option("--kind", o.kind, "Property")
        ->check(CLI::IsMember({"mds", "weight-mds", "involutory", "involutory-mds", "semi-involutory",
                               "scalar-semi-involutory", "order3", "order4"}));
    check_cmd->add_option("--hypothesis", o.hypothesis, "Involution hypothesis mode")
        ->check(CLI::IsMember({"exact", "relaxed"}));

    auto* count_cmd = app.add_subcommand("count", "Counting formulas for F_q[x]/(x^m - lambda)");
    auto* enum_cmd = app.add_subcommand("enumerate", "Exhaustive count of invertible matrices");
    for (auto* sub : {count_cmd, enum_cmd}) {
        add_field(sub);
        sub->add_option("--m", o.m, "Matrix order")->required();
        sub->add_option("--lambda", o.lambda, "Code of lambda");
        add_output(sub);
    }
    enum_cmd->add_option("--limit", o.limit, "Largest N * q^m to enumerate");

    auto* search_cmd = app.add_subcommand("search", "Full-weight units with full-weight inverses");
    add_field(search_cmd);
    add_output(search_cmd);
    search_cmd->add_option("--alg", o.alg, "weight3 or weight4")->check(CLI::IsMember({"weight3", "weight4"}));
    search_cmd->add_option("--mode", o.mode, "exhaustive or random")->check(CLI::IsMember({"exhaustive", "random"}));
    search_cmd->add_option("--seed", o.seed, "Random seed");
    search_cmd->add_option("--trials", o.trials, "Random draws");

    auto* table_cmd = app.add_subcommand("table1", "Counts of invertible matrices for the reference parameter table");
    table_cmd->add_option("--rows", o.rows, "Comma-separated row numbers, 1-8");
    table_cmd->add_option("--exhaustive-limit", o.table_limit, "Largest N * q^m to enumerate per row");
    add_output(table_cmd);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        Output res;
        if (build_cmd->parsed()) res = do_build(o);
        else if (check_cmd->parsed()) res = do_check(o);
        else if (count_cmd->parsed()) res = do_count(o, false);
        else if (enum_cmd->parsed()) res = do_count(o, true);
        else if (search_cmd->parsed()) res = do_search(o);
        else res = do_table1(o);
        const std::string text = render(res, o.format);
        if (!o.golden.empty()) {
            const int rc = golden_compare(o, res, text, err);
            if (rc != kExitOk || o.update_golden) return rc;
        }
        out << text;
        return kExitOk;
    } catch (const Error& e) {
        err << "cgc: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return e.kind() == ErrorKind::SearchSpaceTooLarge ? kExitInfeasible : kExitUsage;
    }
}

}  // namespace cgc
