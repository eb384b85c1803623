#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hcenter/characters.hpp"
#include "hcenter/diagrams.hpp"
#include "hcenter/errors.hpp"
#include "hcenter/expr.hpp"
#include "hcenter/json_io.hpp"
#include "hcenter/measures.hpp"
#include "hcenter/shifted.hpp"
#include "hcenter/verify.hpp"

namespace {

using namespace hcenter;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Options {
    std::string format = "text";
    bool json() const { return format == "json"; }
};

int cmd_partition_info(const Options& opt, const Partition& p) {
    const InterlacingPair seq = interlacing_sequences(p);
    if (opt.json()) {
        nlohmann::json out{{"addable", seq.xs},
                           {"conjugate", conjugate(p).parts()},
                           {"dimension", dim_irrep(p).get_str()},
                           {"hook_product", hook_product(p).get_str()},
                           {"length", p.length()},
                           {"parts", p.parts()},
                           {"removable", seq.ys},
                           {"size", p.size()}};
        std::cout << out.dump() << "\n";
        return 0;
    }
    auto list = [](const std::vector<int>& v) {
        std::ostringstream s;
        for (size_t i = 0; i < v.size(); ++i) {
            if (i) s << ",";
            s << v[i];
        }
        return s.str();
    };
    std::cout << "partition: " << to_string(p) << "\n";
    std::cout << "size: " << p.size() << "\n";
    std::cout << "length: " << p.length() << "\n";
    std::cout << "conjugate: " << to_string(conjugate(p)) << "\n";
    std::cout << "hook product: " << hook_product(p).get_str() << "\n";
    std::cout << "dimension: " << dim_irrep(p).get_str() << "\n";
    std::cout << "addable contents: " << list(seq.xs) << "\n";
    std::cout << "removable contents: " << list(seq.ys) << "\n";
    return 0;
}

int cmd_char_table(const Options& opt, int n) {
    const auto table = character_table(n);
    if (opt.json()) {
        nlohmann::json order = nlohmann::json::array();
        for (const Partition& p : table->order) order.push_back(p.parts());
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : table->chi) {
            nlohmann::json r = nlohmann::json::array();
            for (long long v : row) r.push_back(std::to_string(v));
            rows.push_back(r);
        }
        std::cout << nlohmann::json{{"n", n}, {"order", order}, {"table", rows}}.dump()
                  << "\n";
        return 0;
    }
    std::cout << "mu:";
    for (const Partition& p : table->order) std::cout << " " << to_string(p);
    std::cout << "\n";
    for (size_t i = 0; i < table->order.size(); ++i) {
        std::cout << to_string(table->order[i]) << ":";
        for (long long v : table->chi[i]) std::cout << " " << v;
        std::cout << "\n";
    }
    return 0;
}

int cmd_char_value(const Options& opt, const Partition& lambda, const Partition& mu) {
    const long long v = character(lambda, mu);
    if (opt.json())
        std::cout << nlohmann::json{{"value", std::to_string(v)}}.dump() << "\n";
    else
        std::cout << v << "\n";
    return 0;
}

int cmd_measure(const Options& opt, const Partition& lambda, int k, bool cotransition) {
    const DiscreteMeasure m =
        cotransition ? cotransition_measure(lambda) : transition_measure(lambda);
    if (opt.json()) {
        std::cout << measure_to_json(m) << "\n";
        return 0;
    }
    std::cout << "atoms:";
    for (const auto& [x, w] : m.atoms) std::cout << " " << x << ":" << to_string(w);
    std::cout << "\n";
    if (k > 0) {
        const std::vector<Rational> mom = moments(m, k);
        std::cout << "moments:";
        for (const Rational& v : mom) std::cout << " " << to_string(v);
        std::cout << "\n";
        const std::vector<Rational> boo = booleans_from_moments(mom);
        std::cout << "booleans:";
        for (int i = 1; i <= k; ++i) std::cout << " " << to_string(boo[i]);
        std::cout << "\n";
    }
    return 0;
}

int cmd_shifted_eval(const Options& opt, const ShiftedSymFn& f, const Partition& lambda) {
    const Rational v = eval(f, lambda);
    if (opt.json())
        std::cout << nlohmann::json{{"value", to_string(v)}}.dump() << "\n";
    else
        std::cout << to_string(v) << "\n";
    return 0;
}

int cmd_shifted_multiply(const Options& opt, const ShiftedSymFn& a, const ShiftedSymFn& b) {
    const ShiftedSymFn f = multiply(a, b);
    std::cout << (opt.json() ? shifted_to_json(f) : render_pshift(f)) << "\n";
    return 0;
}

int cmd_shifted_convert(const Options& opt, const ShiftedSymFn& f, const std::string& to) {
    if (to == "sstar") {
        const auto coeffs = p_to_s_star(f);
        std::cout << (opt.json() ? sstar_to_json(coeffs) : render_sstar(coeffs)) << "\n";
    } else {
        std::cout << (opt.json() ? shifted_to_json(f) : render_pshift(f)) << "\n";
    }
    return 0;
}

int cmd_shifted_omega(const Options& opt, const ShiftedSymFn& g) {
    const ShiftedSymFn f = omega_bar(g);
    std::cout << (opt.json() ? shifted_to_json(f) : render_pshift(f)) << "\n";
    return 0;
}

int cmd_diagram_eval(const Options& opt, const std::string& path, int n) {
    const DiagramWord w = diagram_from_json(read_input(path));
    const CentralElement x = f_n_evaluate(w, n);
    if (opt.json()) {
        std::cout << central_to_json(x) << "\n";
        return 0;
    }
    if (x.class_coeffs().empty()) {
        std::cout << "0\n";
        return 0;
    }
    for (const auto& [mu, c] : x.class_coeffs())
        std::cout << to_string(mu) << ": " << to_string(c) << "\n";
    return 0;
}

int cmd_diagram_phi(const Options& opt, const std::string& path) {
    const DiagramWord w = diagram_from_json(read_input(path));
    const ShiftedSymFn f = phi(w);
    std::cout << (opt.json() ? shifted_to_json(f) : render_pshift(f)) << "\n";
    return 0;
}

int cmd_verify(const Options& opt, const std::string& suite, int max_n, unsigned seed) {
    const SuiteResult result = run_suite(suite, max_n, seed);
    if (opt.json()) {
        nlohmann::json checks = nlohmann::json::array();
        for (const CheckResult& c : result.checks)
            checks.push_back({{"name", c.name}, {"passed", c.passed}});
        std::cout << nlohmann::json{{"checks", checks}, {"suite", result.suite}}.dump()
                  << "\n";
    } else {
        int passed = 0;
        for (const CheckResult& c : result.checks) {
            std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << "\n";
            if (c.passed) ++passed;
        }
        std::cout << "suite " << result.suite << ": " << passed << "/"
                  << result.checks.size() << " passed\n";
    }
    return result.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact calculator for the center of the Heisenberg category: "
                 "closed diagrams, symmetric-group class algebra, Kerov measures "
                 "and shifted symmetric functions"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // partition info <parts>
    auto* partition = app.add_subcommand("partition", "Partition combinatorics");
    partition->require_subcommand(1);
    auto* pinfo = partition->add_subcommand("info", "Hooks, dimension, corners");
    std::string pinfo_parts;
    pinfo->add_option("parts", pinfo_parts, "Comma-separated parts, e.g. 4,2,1")
        ->required();

    // char table / char value
    auto* chr = app.add_subcommand("char", "Symmetric group characters");
    chr->require_subcommand(1);
    auto* ctable = chr->add_subcommand("table", "Full character table of S_n");
    int ctable_n = 0;
    ctable->add_option("--n", ctable_n, "Group degree")->required()->check(CLI::Range(0, 20));
    auto* cvalue = chr->add_subcommand("value", "Single character value chi^lambda(mu)");
    std::string cvalue_lambda, cvalue_mu;
    cvalue->add_option("--lambda", cvalue_lambda, "Row partition")->required();
    cvalue->add_option("--mu", cvalue_mu, "Cycle type")->required();

    // measure
    auto* measure = app.add_subcommand("measure", "Kerov transition/co-transition measure");
    std::string measure_lambda;
    int measure_k = 0;
    bool measure_cot = false;
    measure->add_option("--lambda", measure_lambda, "Partition")->required();
    measure->add_option("--k", measure_k, "Also print moments and Boolean cumulants up to k")
        ->check(CLI::Range(0, 64));
    measure->add_flag("--cotransition", measure_cot, "Use the co-transition measure");

    // shifted eval/multiply/convert/omega
    auto* shifted = app.add_subcommand("shifted", "Shifted symmetric functions");
    shifted->require_subcommand(1);
    auto* seval = shifted->add_subcommand("eval", "Evaluate an expression at a partition");
    std::string seval_expr, seval_lambda;
    seval->add_option("expr", seval_expr, "Expression, e.g. \"3/2 p#[2,2] - p#[3] + 1\"")
        ->required();
    seval->add_option("--lambda", seval_lambda, "Partition")->required();
    auto* smul = shifted->add_subcommand("multiply", "Product of two expressions");
    std::string smul_a, smul_b;
    smul->add_option("a", smul_a, "Left factor")->required();
    smul->add_option("b", smul_b, "Right factor")->required();
    auto* sconv = shifted->add_subcommand("convert", "Rewrite in the p# or s* basis");
    std::string sconv_expr, sconv_to = "pshift";
    sconv->add_option("expr", sconv_expr, "Expression")->required();
    sconv->add_option("--to", sconv_to, "Target basis")
        ->check(CLI::IsMember({"pshift", "sstar"}))
        ->capture_default_str();
    auto* somega = shifted->add_subcommand("omega", "Apply the omega-bar involution");
    std::string somega_expr;
    somega->add_option("expr", somega_expr, "Expression")->required();

    // diagram eval/phi
    auto* diagram = app.add_subcommand("diagram", "Closed diagrams of the category");
    diagram->require_subcommand(1);
    auto* deval = diagram->add_subcommand("eval", "Image under the functor F_n");
    std::string deval_file;
    int deval_n = 0;
    deval->add_option("-f,--file", deval_file, "Diagram JSON file, or - for stdin")
        ->required();
    deval->add_option("--n", deval_n, "Symmetric group degree")
        ->required()
        ->check(CLI::Range(0, 12));
    auto* dphi = diagram->add_subcommand("phi", "Image in the shifted symmetric functions");
    std::string dphi_file;
    dphi->add_option("-f,--file", dphi_file, "Diagram JSON file, or - for stdin")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string verify_suite;
    int verify_max_n = 4;
    unsigned verify_seed = 20240101;
    verify->add_option("--suite", verify_suite, "Suite name")
        ->required()
        ->check(CLI::IsMember(suite_names()));
    verify->add_option("--max-n", verify_max_n, "Largest symmetric group degree")
        ->check(CLI::Range(0, 8))
        ->capture_default_str();
    verify->add_option("--seed", verify_seed, "Seed for randomized checks")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    // Usage phase: partition and expression text from the command line is
    // validated here, so malformed input exits 2 rather than 1.
    std::function<int()> run;
    try {
        if (pinfo->parsed()) {
            const Partition p = parse_partition_list(pinfo_parts);
            run = [=] { return cmd_partition_info(opt, p); };
        } else if (ctable->parsed()) {
            run = [=] { return cmd_char_table(opt, ctable_n); };
        } else if (cvalue->parsed()) {
            const Partition lambda = parse_partition_list(cvalue_lambda);
            const Partition mu = parse_partition_list(cvalue_mu);
            run = [=] { return cmd_char_value(opt, lambda, mu); };
        } else if (measure->parsed()) {
            const Partition lambda = parse_partition_list(measure_lambda);
            run = [=] { return cmd_measure(opt, lambda, measure_k, measure_cot); };
        } else if (seval->parsed()) {
            const ShiftedSymFn f = parse_shifted(seval_expr);
            const Partition lambda = parse_partition_list(seval_lambda);
            run = [=] { return cmd_shifted_eval(opt, f, lambda); };
        } else if (smul->parsed()) {
            const ShiftedSymFn a = parse_shifted(smul_a);
            const ShiftedSymFn b = parse_shifted(smul_b);
            run = [=] { return cmd_shifted_multiply(opt, a, b); };
        } else if (sconv->parsed()) {
            const ShiftedSymFn f = parse_shifted(sconv_expr);
            run = [=] { return cmd_shifted_convert(opt, f, sconv_to); };
        } else if (somega->parsed()) {
            const ShiftedSymFn f = parse_shifted(somega_expr);
            run = [=] { return cmd_shifted_omega(opt, f); };
        } else if (deval->parsed()) {
            run = [=] { return cmd_diagram_eval(opt, deval_file, deval_n); };
        } else if (dphi->parsed()) {
            run = [=] { return cmd_diagram_phi(opt, dphi_file); };
        } else if (verify->parsed()) {
            run = [=] { return cmd_verify(opt, verify_suite, verify_max_n, verify_seed); };
        } else {
            std::cerr << "error: no subcommand\n";
            return 2;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        return run();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
