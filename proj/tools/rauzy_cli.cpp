#include "rauzy/arf.hpp"
#include "rauzy/constructions.hpp"
#include "rauzy/dynamics.hpp"
#include "rauzy/explorer.hpp"
#include "rauzy/ops.hpp"
#include "rauzy/prover.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using namespace rauzy;

namespace {

int run_invariant(const std::string& perm_text) {
    const Permutation p = Permutation::parse(perm_text);
    std::cout << invariant_triple(p).to_json() << "\n";
    return 0;
}

int run_arf(const std::string& perm_text, int cap) {
    const Permutation p = Permutation::parse(perm_text);
    const ArfPair a = arf(p, cap);
    nlohmann::json j{{"n", p.size()}, {"A", a.A}, {"Abar", a.Abar}};
    j["sign"] = a.Abar > 0 ? 1 : a.Abar < 0 ? -1 : 0;
    j["kernel"] = arf_kernel_name();
    std::cout << j.dump() << "\n";
    return 0;
}

int run_dynamics(const std::string& word, const std::string& perm_text) {
    Permutation p = Permutation::parse(perm_text);
    p = apply_word(p, OpWord::parse(word));
    std::cout << p.to_string() << "\n";
    return 0;
}

int run_classes(int n, bool verify, const std::string& json_path) {
    const ClassReport rep = enumerate_classes(n);
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << rep.to_json() << "\n";
    }
    std::cout << rep.to_table() << "\n";
    std::cout << "classes: " << rep.classes.size() << "  irreducible: " << rep.irreducible_count
              << "\n";
    if (!verify) return 0;
    bool pass = true;
    for (const VerdictLine& v : verify_classification(n)) {
        std::cout << (v.pass ? "PASS " : "FAIL ") << v.name;
        if (!v.detail.empty()) std::cout << "  [" << v.detail << "]";
        std::cout << "\n";
        pass = pass && v.pass;
    }
    return pass ? 0 : 1;
}

int run_prove(const std::string& spec_path, bool solve, const std::string& enumerate_bounds) {
    std::ifstream in(spec_path);
    if (!in.good()) {
        std::cerr << "cannot open identity spec: " << spec_path << "\n";
        return 2;
    }
    const IdentitySpec spec = parse_identity_spec(in);

    if (!enumerate_bounds.empty()) {
        EnumerationBounds b;
        if (std::sscanf(enumerate_bounds.c_str(), "%d,%d,%d,%d", &b.max_terms, &b.max_edges, &b.k,
                        &b.l) != 4) {
            std::cerr << "--enumerate expects max_terms,max_edges,k,l\n";
            return 2;
        }
        for (const IdentitySpec& found : enumerate_identities(b))
            std::cout << identity_spec_to_json(found) << "\n";
        return 0;
    }
    if (solve) {
        std::vector<std::pair<MarkedPermutation, Flavor>> terms;
        for (std::size_t t = 0; t < spec.terms.size(); ++t)
            terms.emplace_back(spec.terms[t].marked, spec.term_flavor(t));
        const auto kernel = solve_coefficients(terms);
        nlohmann::json j = nlohmann::json::array();
        for (const auto& x : kernel) {
            nlohmann::json row = nlohmann::json::array();
            for (const Fraction& f : x) row.push_back(f.to_string());
            j.push_back(std::move(row));
        }
        std::cout << j.dump() << "\n";
        return kernel.empty() ? 1 : 0;
    }
    const CheckResult r = check_identity(spec);
    if (r.holds) {
        std::cout << "IDENTITY HOLDS\n";
        return 0;
    }
    std::cout << "IDENTITY FAILS at v=" << r.witness << "\n";
    return 1;
}

int run_monodromy(const std::string& perm_text, std::size_t limit) {
    const Permutation p = Permutation::parse(perm_text);
    const ConsistentLabelling lab = canonical_labelling(p);
    const MonodromyReport rep = monodromy_group(p, lab, limit);
    nlohmann::json j;
    j["reachable_labellings"] = rep.reachable.size();
    j["labelled_states"] = rep.labelled_states;
    j["matches_generated_group"] = rep.matches_generated_group;
    j["generators"] = {{"exchange", rep.generator_status[0]},
                       {"odd_1_shift", rep.generator_status[1]},
                       {"even_2_shift", rep.generator_status[2]},
                       {"even_pair_1_shifts", rep.generator_status[3]}};
    j["two_point_matches"] = rep.two_point_matches;
    nlohmann::json table = nlohmann::json::array();
    for (int beta = 1; beta <= p.size(); ++beta) {
        nlohmann::json cell;
        cell["position"] = beta;
        nlohmann::json labels = nlohmann::json::array();
        for (const Label& b : lab.pi_b) {
            bool reach = false;
            for (const auto& l : rep.reachable)
                reach = reach || l.pi_b[static_cast<size_t>(beta) - 1] == b;
            if (reach) labels.push_back(b.to_string());
        }
        cell["labels"] = std::move(labels);
        table.push_back(std::move(cell));
    }
    j["two_point_table"] = std::move(table);
    j["canonical_labelling"] = nlohmann::json::parse(lab.to_json());
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_build(const std::string& lambda_text, int rank, const std::string& sign_text) {
    std::vector<int> lambda;
    std::stringstream ss(lambda_text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) lambda.push_back(std::stoi(item));
    int sign = 0;
    if (sign_text == "+")
        sign = 1;
    else if (sign_text == "-")
        sign = -1;
    else if (sign_text != "0") {
        std::cerr << "--sign must be one of 0, +, -\n";
        return 2;
    }
    const Permutation q = build_i2x(lambda, rank, sign);
    std::cout << q.to_string() << "\n";
    std::cout << invariant_triple(q).to_json() << "\n";
    return 0;
}

int run_verify_all(int max_n) {
    bool pass = true;
    auto show = [&](const std::string& scope, const std::vector<VerdictLine>& lines) {
        for (const VerdictLine& v : lines) {
            std::cout << (v.pass ? "PASS " : "FAIL ") << scope << ": " << v.name;
            if (!v.detail.empty()) std::cout << "  [" << v.detail << "]";
            std::cout << "\n";
            pass = pass && v.pass;
        }
    };
    for (int n = 2; n <= max_n; ++n) {
        show("classes n=" + std::to_string(n), verify_classification(n));
        show("arf n=" + std::to_string(n), verify_arf_values(n));
    }
    return pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rauzy dynamics on irreducible permutations: invariants, identities, classes"};
    app.require_subcommand(1);

    std::string perm_text, word, json_path, spec_path, enum_bounds, lambda_text, sign_text = "0";
    int n = 6, rank = 1, cap = kArfDefaultCap, max_n = 8;
    std::size_t limit = 5000000;
    bool verify = false, solve = false;

    auto* inv = app.add_subcommand("invariant", "cycle invariant, sign and type of a permutation");
    inv->add_option("perm", perm_text, "one-line permutation, e.g. \"4 5 1 2 6 3\"")->required();

    auto* arfc = app.add_subcommand("arf", "exact A and Abar by subset summation");
    arfc->add_option("perm", perm_text)->required();
    arfc->add_option("--cap", cap, "subset-sum size cap");

    auto* dyn = app.add_subcommand("dynamics", "apply a word of operators");
    dyn->add_option("--word", word, "letters L, R, l (inverse L), r (inverse R)")->required();
    dyn->add_option("perm", perm_text)->required();

    auto* cls = app.add_subcommand("classes", "enumerate the classes at a given size");
    cls->add_option("--size", n, "permutation size")->required();
    cls->add_flag("--verify", verify, "check the census and counting verdicts");
    cls->add_option("--json", json_path, "write the full report to a file");

    auto* prv = app.add_subcommand("prove", "check, solve or enumerate identities");
    prv->add_option("--spec", spec_path, "identity spec JSON file")->required();
    prv->add_flag("--solve", solve, "solve for the coefficient kernel of the spec's terms");
    prv->add_option("--enumerate", enum_bounds, "enumerate identities: max_terms,max_edges,k,l");

    auto* mon = app.add_subcommand("monodromy", "labelled-loop monodromy of a class");
    mon->add_option("perm", perm_text)->required();
    mon->add_option("--limit", limit, "labelled-state cap");

    auto* bld = app.add_subcommand("build-i2x", "construct a permutation with a given invariant");
    bld->add_option("--lambda", lambda_text, "cycle lengths, e.g. 3,2,2 (empty for none)");
    bld->add_option("--rank", rank)->required();
    bld->add_option("--sign", sign_text, "0, + or -");

    auto* ver = app.add_subcommand("verify-all", "run the classification and arf checks");
    ver->add_option("--max-n", max_n, "largest size to verify");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (*inv) return run_invariant(perm_text);
        if (*arfc) return run_arf(perm_text, cap);
        if (*dyn) return run_dynamics(word, perm_text);
        if (*cls) return run_classes(n, verify, json_path);
        if (*prv) return run_prove(spec_path, solve, enum_bounds);
        if (*mon) return run_monodromy(perm_text, limit);
        if (*bld) return run_build(lambda_text, rank, sign_text);
        if (*ver) return run_verify_all(max_n);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
