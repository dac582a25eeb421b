// motcell: cell decompositions and motivic ledgers for flag varieties,
// smooth complete toric varieties and split even-dimensional quadrics.
//
// Exit codes: 0 success, 1 domain error (structured in --format json),
// 2 internal invariant violation, 64 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "motcell/checks.hpp"
#include "motcell/errors.hpp"
#include "motcell/motive.hpp"
#include "motcell/parabolic.hpp"
#include "motcell/quadric.hpp"
#include "motcell/serialize.hpp"
#include "motcell/toric.hpp"

namespace {

using namespace motcell;

long long enumeration_cap() {
    if (const char* env = std::getenv("MOTCELL_CAP")) {
        try {
            const long long cap = std::stoll(env);
            if (cap > 0) return cap;
        } catch (const std::exception&) {
        }
        throw UsageError(std::string("MOTCELL_CAP must be a positive integer, got \"") + env + "\"");
    }
    return kDefaultWeylCap;
}

// "auto" or a comma-separated integer vector of the given length.
std::optional<Vec> parse_lambda(const std::string& text, int expected_rank) {
    if (text == "auto") return std::nullopt;
    Vec lambda;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            lambda.push_back(std::stoll(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("--lambda expects \"auto\" or comma-separated integers, got \"" + text + "\"");
        }
    }
    if (static_cast<int>(lambda.size()) != expected_rank)
        throw UsageError("--lambda has " + std::to_string(lambda.size()) + " entries, expected " +
                         std::to_string(expected_rank));
    return lambda;
}

Fan builtin_fan(const std::string& name) {
    auto parse_int = [&](const std::string& s) -> std::optional<long long> {
        if (s.empty()) return std::nullopt;
        for (char c : s)
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
        return std::stoll(s);
    };
    if (name.size() >= 2 && name[0] == 'p') {
        const size_t x = name.find("xp");
        if (x == std::string::npos) {
            if (auto n = parse_int(name.substr(1)))
                return fan_projective_space(static_cast<int>(*n));
        } else {
            auto a = parse_int(name.substr(1, x - 1));
            auto b = parse_int(name.substr(x + 2));
            if (a && b)
                return fan_product(fan_projective_space(static_cast<int>(*a)),
                                   fan_projective_space(static_cast<int>(*b)));
        }
    }
    if (name.size() >= 2 && name[0] == 'f')
        if (auto a = parse_int(name.substr(1))) return fan_hirzebruch(*a);
    if (name.rfind("hirzebruch", 0) == 0)
        if (auto a = parse_int(name.substr(10))) return fan_hirzebruch(*a);
    throw UsageError("unknown builtin fan \"" + name + "\"; expected p<n>, p<a>xp<b>, f<a> or hirzebruch<a>");
}

struct Output {
    std::string format = "text";

    void require_not_dot() const {
        if (format == "dot")
            throw UsageError("--format dot is only valid for Hasse diagram output (gp)");
    }
};

void emit(const std::string& document) { std::cout << document; }

int run_gp(char family, int rank, const std::vector<int>& parabolic, const std::string& lambda_text,
           const Output& out) {
    RootSystem rs(build_root_system(RootSystemSpec(family, rank)));
    ParabolicSubset P((std::vector<int>(parabolic)));
    P.validate(rs);
    const long long cap = enumeration_cap();

    if (out.format == "dot") {
        const HasseDiagram hasse = bruhat_hasse(rs, minimal_coset_reps(rs, P, cap));
        emit(hasse_to_dot(hasse, flag_space_name(rs, P)));
        return 0;
    }

    const TorusModel model = flag_torus_model(rs, P, cap);
    Vec lambda;
    if (auto explicit_lambda = parse_lambda(lambda_text, rs.rank()))
        lambda = *explicit_lambda;
    else
        lambda = dominant_regular_cocharacter(rs).coords;
    const CellDecomposition cells = bb_cells(model, lambda);
    const CofiberLedger ledger = cofiber_ledger(cells);
    const MotivicDecomposition motive = motivic_decomposition(cells);
    if (out.format == "json")
        emit(decomposition_document(cells, ledger, motive).dump(2) + "\n");
    else
        emit(decomposition_text(cells, ledger, motive));
    return 0;
}

int run_toric(const std::string& fan_path, const std::string& builtin, const std::string& lambda_text,
              const Output& out) {
    out.require_not_dot();
    if (fan_path.empty() == builtin.empty())
        throw UsageError("toric requires exactly one of --fan or --builtin");
    Fan fan;
    if (!builtin.empty()) {
        fan = builtin_fan(builtin);
    } else {
        std::ifstream in(fan_path);
        if (!in) throw ParseError("cannot open fan file " + fan_path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        fan = parse_fan(buffer.str(), fan_path);
    }
    const TorusModel model = toric_torus_model(fan);
    Vec lambda;
    if (auto explicit_lambda = parse_lambda(lambda_text, fan.lattice_rank))
        lambda = *explicit_lambda;
    else
        lambda = generic_cocharacter(model);
    const CellDecomposition cells = bb_cells(model, lambda);
    const CofiberLedger ledger = cofiber_ledger(cells);
    const MotivicDecomposition motive = motivic_decomposition(cells);
    if (out.format == "json")
        emit(decomposition_document(cells, ledger, motive).dump(2) + "\n");
    else
        emit(decomposition_text(cells, ledger, motive));
    return 0;
}

int run_quadric(int n, bool two_stage_ledger, const std::string& lambda_text, const Output& out) {
    out.require_not_dot();
    QuadricSpec spec(n);
    const TorusModel model = quadric_torus_model(spec);
    Vec lambda;
    if (auto explicit_lambda = parse_lambda(lambda_text, spec.n + 1))
        lambda = *explicit_lambda;
    else
        lambda = generic_cocharacter(model);
    const CellDecomposition cells = bb_cells(model, lambda);
    const CofiberLedger ledger =
        two_stage_ledger ? quadric_two_stage_ledger(spec) : cofiber_ledger(cells);
    const MotivicDecomposition motive = motivic_decomposition(cells);
    if (out.format == "json")
        emit(decomposition_document(cells, ledger, motive).dump(2) + "\n");
    else
        emit(decomposition_text(cells, ledger, motive));
    return 0;
}

int run_group(char family, int rank, const Output& out) {
    out.require_not_dot();
    RootSystem rs(build_root_system(RootSystemSpec(family, rank)));
    const GroupStrataReport report = group_strata(rs, enumeration_cap());
    if (out.format == "json")
        emit(group_strata_document(report).dump(2) + "\n");
    else
        emit(group_strata_text(report));
    return 0;
}

int run_check(const std::string& suite, const Output& out) {
    out.require_not_dot();
    const std::vector<CheckReport> reports = run_suite(suite, enumeration_cap());
    bool all = true;
    if (out.format == "json") {
        OrderedJson doc;
        OrderedJson arr = OrderedJson::array();
        for (const CheckReport& r : reports) {
            OrderedJson jr;
            jr["suite"] = r.suite;
            OrderedJson cases = OrderedJson::array();
            for (const CheckCase& c : r.cases) {
                OrderedJson jc;
                jc["label"] = c.label;
                jc["pass"] = c.pass;
                jc["detail"] = c.detail;
                cases.push_back(std::move(jc));
            }
            jr["cases"] = std::move(cases);
            jr["passed"] = r.all_pass();
            all = all && r.all_pass();
            arr.push_back(std::move(jr));
        }
        doc["suites"] = std::move(arr);
        doc["passed"] = all;
        emit(doc.dump(2) + "\n");
    } else {
        std::ostringstream os;
        for (const CheckReport& r : reports) {
            os << "suite " << r.suite << "\n";
            for (const CheckCase& c : r.cases)
                os << "  " << (c.pass ? "[ok]  " : "[FAIL]") << " " << c.label << " - " << c.detail
                   << "\n";
            all = all && r.all_pass();
        }
        os << (all ? "all checks passed" : "CHECK FAILURES PRESENT") << "\n";
        emit(os.str());
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cell decompositions and motivic ledgers for flag varieties, toric varieties and "
                 "split even-dimensional quadrics"};
    app.require_subcommand(1);

    Output out;
    std::string family = "A";
    int rank = 1;
    std::vector<int> parabolic;
    std::string lambda_text = "auto";
    std::string fan_path, builtin_name;
    int quadric_n = 1;
    bool two_stage_ledger = false;
    std::string suite = "all";

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", out.format, "output format")
            ->check(CLI::IsMember({"text", "json", "dot"}))
            ->capture_default_str();
    };

    CLI::App* gp = app.add_subcommand("gp", "Schubert/BB cell structure of G/P");
    gp->add_option("--family", family, "root system family A-G")->required();
    gp->add_option("--rank", rank, "root system rank")->required();
    gp->add_option("--parabolic", parabolic, "simple indices generating the Levi (omit for the Borel)");
    gp->add_option("--lambda", lambda_text, "cocharacter: auto or comma-separated integers")
        ->capture_default_str();
    add_format(gp);

    CLI::App* toric = app.add_subcommand("toric", "BB cell structure of a smooth complete toric variety");
    toric->add_option("--fan", fan_path, "path to a fan JSON file");
    toric->add_option("--builtin", builtin_name, "builtin fan: p<n>, p<a>xp<b>, f<a>, hirzebruch<a>");
    toric->add_option("--lambda", lambda_text, "cocharacter: auto or comma-separated integers")
        ->capture_default_str();
    add_format(toric);

    CLI::App* quadric = app.add_subcommand("quadric", "cell structure of the split quadric Q_{2n}");
    quadric->add_option("--n", quadric_n, "half-dimension n of Q_{2n}")->required();
    quadric->add_flag("--paper-ledger", two_stage_ledger, "emit the two-stage ledger through Q \\ Z_x ~ P^n");
    quadric->add_option("--lambda", lambda_text, "cocharacter: auto or comma-separated integers")
        ->capture_default_str();
    add_format(quadric);

    CLI::App* group = app.add_subcommand("group", "stratum inventory A^{l(w)} x B of the group");
    group->add_option("--family", family, "root system family A-G")->required();
    group->add_option("--rank", rank, "root system rank")->required();
    add_format(group);

    CLI::App* check = app.add_subcommand("check", "run a cross-oracle suite");
    check->add_option("--suite", suite,
                      "weyl-product, toric-h, quadric-triple, lambda-independence, weight-monotone, all")
        ->capture_default_str();
    add_format(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    auto report_error = [&](const std::string& kind, const std::string& message, int code) {
        if (out.format == "json")
            std::cout << error_document(kind, message).dump(2) << "\n";
        else
            std::cerr << "error: [" << kind << "] " << message << "\n";
        return code;
    };

    try {
        if (gp->parsed()) return run_gp(family.at(0), rank, parabolic, lambda_text, out);
        if (toric->parsed()) return run_toric(fan_path, builtin_name, lambda_text, out);
        if (quadric->parsed()) return run_quadric(quadric_n, two_stage_ledger, lambda_text, out);
        if (group->parsed()) return run_group(family.at(0), rank, out);
        if (check->parsed()) return run_check(suite, out);
        return 64;
    } catch (const UsageError& e) {
        return report_error(e.kind(), e.what(), 64);
    } catch (const UnknownSuite& e) {
        return report_error(e.kind(), e.what(), 64);
    } catch (const Error& e) {
        return report_error(e.kind(), e.what(), 1);
    } catch (const std::exception& e) {
        return report_error("Internal", e.what(), 2);
    }
}
