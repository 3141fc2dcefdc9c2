// ordlab: exact computations in left-ordered groups of interval homeomorphisms.
//
// Subcommands: realize, survey, orders, semigroup, search, count, pn-check.
// All numeric output is exact (rational / dyadic / integer strings); runs with
// identical configuration and seed produce byte-identical artifacts.

#include "ordlab/affine.hpp"
#include "ordlab/fixtures.hpp"
#include "ordlab/json_io.hpp"
#include "ordlab/orders.hpp"
#include "ordlab/realization.hpp"
#include "ordlab/search.hpp"
#include "ordlab/semigroup.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace ordlab;
using nlohmann::json;
using nlohmann::ordered_json;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return json::parse(in);
}

ZkLexVariant parse_variant(const std::string& order) {
    if (order == "extension") return ZkLexVariant::TDominant;
    if (order == "extension-st") return ZkLexVariant::SDominant;
    throw std::runtime_error("unknown realization order: " + order);
}

std::string orbit_csv(const RealizationState& st) {
    std::ostringstream csv;
    csv << "t,s,d,coord\n";
    for (std::size_t i = 0; i < st.elements.size(); ++i) {
        const GroupElement& g = st.elements[i];
        csv << g.t << ',' << g.s << ',' << g.d.str() << ',' << rat_str(st.coords[i]) << '\n';
    }
    return csv.str();
}

RealizationState orbit_from_csv(const std::string& path, ZkLexVariant variant) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    RealizationState st;
    st.variant = variant;
    std::string line;
    if (!std::getline(in, line) || line != "t,s,d,coord")
        throw std::runtime_error("bad orbit CSV header in " + path);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string tf, sf, df, cf;
        if (!std::getline(row, tf, ',') || !std::getline(row, sf, ',') ||
            !std::getline(row, df, ',') || !std::getline(row, cf, ','))
            throw std::runtime_error("bad orbit CSV row: " + line);
        GroupElement g{std::stol(tf), std::stol(sf), Dyadic::parse(df)};
        st.index.emplace(g, st.elements.size());
        st.elements.push_back(g);
        st.coords.push_back(rat_parse(cf));
    }
    if (st.elements.empty()) throw std::runtime_error("empty orbit CSV: " + path);
    return st;
}

ordered_json survey_json(const SurveyReport& rep, bool serial) {
    ordered_json j;
    j["n_elements"] = rep.n_elements;
    j["hull"] = {rat_str(rep.hull_lo), rat_str(rep.hull_hi)};
    j["max_isolated"] = rep.max_isolated;
    j["argmax"] = rep.argmax ? ordered_json(element_to_json(*rep.argmax)) : ordered_json(nullptr);
    j["any_fixed_interval"] = rep.any_fixed_interval;
    j["isolated_counts"] = rep.isolated_counts;
    j["kernel"] = serial ? "serial" : "openmp";
    return j;
}

ordered_json witness_json(const CrossedPairWitness& w) {
    ordered_json j;
    j["fixer"] = pl_to_json(w.fixer);
    j["mover"] = pl_to_json(w.mover);
    j["a"] = rat_str(w.a);
    j["b"] = rat_str(w.b);
    j["description"] = w.description;
    return j;
}

int run_realize(int ball, const std::string& order, const std::string& out) {
    auto elements = enumerate_ball({ball});
    auto st = assign_coordinates(elements, parse_variant(order));
    write_output(out, orbit_csv(st));
    return 0;
}

int run_survey(const std::string& in, int ball, const std::string& order, bool serial,
               const std::string& out) {
    RealizationState st;
    if (!in.empty()) {
        st = orbit_from_csv(in, parse_variant(order));
    } else {
        st = assign_coordinates(enumerate_ball({ball}), parse_variant(order));
    }
    SurveyReport rep = serial ? fixed_point_survey_serial(st) : fixed_point_survey(st);
    write_output(out, survey_json(rep, serial).dump(2) + "\n");
    return 0;
}

int run_orders(const std::string& order, int samples, std::uint64_t seed, const std::string& out) {
    AuditReport rep = audit_left_invariance(order, samples, seed);
    ordered_json j;
    j["order"] = rep.order;
    j["samples"] = rep.samples;
    j["seed"] = rep.seed;
    j["violations"] = rep.violations;
    write_output(out, j.dump(2) + "\n");
    return rep.passed() ? 0 : 1;
}

int run_semigroup(const std::string& f_path, const std::string& g_path, int max_len,
                  bool construct, const std::string& out) {
    PLHomeo f = pl_from_json(read_json_file(f_path));
    PLHomeo g = pl_from_json(read_json_file(g_path));

    ordered_json j;
    if (construct) {
        ConstructOutcome outcome = construct_crossed(f, g);
        j["witness"] = outcome.witness ? ordered_json(witness_json(*outcome.witness))
                                       : ordered_json(nullptr);
        j["conjugation_exponent"] = outcome.conjugation_exponent;
        j["note"] = outcome.note;
    } else {
        auto w = detect_crossed(f, g);
        j["witness"] = w ? ordered_json(witness_json(*w)) : ordered_json(nullptr);
    }
    DistinctnessReport rep = positive_word_distinctness(f, g, max_len);
    j["distinct_up_to"] = rep.all_distinct ? rep.max_len : 0;
    j["word_count"] = rep.word_count;
    j["counterexample"] = rep.counterexample
                              ? ordered_json({rep.counterexample->first, rep.counterexample->second})
                              : ordered_json(nullptr);
    write_output(out, j.dump(2) + "\n");
    return 0;
}

int run_search(const std::string& alpha_path, const std::string& beta_path,
               const std::string& w_path, const std::string& params_path, int n, long grid,
               bool serial, const std::string& out) {
    PLHomeo alpha = alpha_path.empty() ? fixtures::search_alpha()
                                       : pl_from_json(read_json_file(alpha_path));
    PLHomeo beta = beta_path.empty() ? fixtures::search_beta()
                                     : pl_from_json(read_json_file(beta_path));
    PLHomeo W = w_path.empty() ? PLHomeo::identity() : pl_from_json(read_json_file(w_path));

    SearchParams p;
    if (!params_path.empty()) {
        p = params_from_json(read_json_file(params_path));
    } else {
        p.epsilon = make_rat(3, 4);
        p.delta = make_rat(1, 16);
        p.M = Rat(1);
        p.theta = make_rat(101, 100);
        p.lambda = make_rat(1, 2);
    }
    p.grid_N = grid;
    p.n = n;

    SearchResult res = pigeonhole_search(alpha, beta, W, n, p, !serial);

    ordered_json j;
    j["params"] = params_to_json(p);
    j["found"] = res.found;
    j["explored"] = res.explored;
    if (res.found) {
        j["w1"] = res.w1;
        j["w2"] = res.w2;
        j["grid_distance"] = rat_str(res.grid_distance);
        j["h"] = pl_to_json(res.h);
        j["c0_distance"] = rat_str(res.c0_distance);
        j["commutator_certified"] = res.commutator_certified;
        ordered_json ab;
        for (auto& [letter, count] : res.abelianization_vector)
            ab[std::string(1, letter)] = count;
        j["abelianization"] = ab;
    } else {
        j["min_pair_distance"] = res.min_pair_distance ? ordered_json(rat_str(*res.min_pair_distance))
                                                       : ordered_json(nullptr);
    }
    write_output(out, j.dump(2) + "\n");
    return 0;
}

int run_count(int max_n, const std::string& out) {
    ordered_json rows = ordered_json::array();
    for (int n = 0; n <= max_n; ++n)
        rows.push_back({{"n", n},
                        {"count", count_Sn_prime(n).get_str()},
                        {"growth_holds", check_growth(n)}});
    ordered_json j;
    j["max_n"] = max_n;
    j["rows"] = rows;
    auto n0 = growth_threshold(max_n);
    j["threshold"] = n0 ? ordered_json(*n0) : ordered_json(nullptr);
    write_output(out, j.dump(2) + "\n");
    return 0;
}

int run_pn_check(const std::string& instance_path, long horizon_override, const std::string& out) {
    json inst_j = read_json_file(instance_path);
    AffineMap g = affine_from_json(inst_j.at("g"));
    std::vector<AffineMap> deltas, candidates;
    for (const auto& d : inst_j.at("deltas")) deltas.push_back(affine_from_json(d));
    for (const auto& c : inst_j.at("candidates")) candidates.push_back(affine_from_json(c));

    PNInstance inst;
    inst.signs = inst_j.at("signs").get<std::vector<long>>();
    inst.exponents = inst_j.at("exponents").get<std::vector<long>>();
    inst.M = inst_j.value("M", 1l);
    inst.horizon = inst_j.value("horizon", 64l);
    if (horizon_override > 0) inst.horizon = horizon_override;

    auto mul = [](const AffineMap& x, const AffineMap& y) { return compose(x, y); };
    auto inv = [](const AffineMap& x) { return affine_inverse(x); };
    auto less = [](const AffineMap& x, const AffineMap& y) { return affine_pointwise_less(x, y); };
    PNOutcome pn = check_pn_horizon<AffineMap>(g, deltas, inst, candidates, mul, inv, less);

    ordered_json j;
    j["prefix_bounded"] = pn.prefix_bounded;
    j["unbounded"] = pn.unbounded;
    j["eps_N"] = pn.eps_N;
    j["witness_n"] = pn.witness_n;
    j["semi_decision"] = pn.semi_decision;
    if (deltas.size() == 1 && inst.signs[0] == 1) {
        // Closed-form verdict is available for single-push affine instances.
        P1Verdict v = check_P1_affine(g, deltas[0], inst.exponents[0], inst.M);
        j["closed_form"] = {{"hypotheses_hold", v.hypotheses_hold},
                            {"branch", v.branch},
                            {"note", v.note}};
    }
    write_output(out, j.dump(2) + "\n");
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"ordlab: exact computations in left-ordered groups of interval homeomorphisms"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "OpenMP thread count (0 = library default)");

    // realize
    auto* realize = app.add_subcommand("realize", "Enumerate a ball and assign orbit coordinates");
    int ball = 4;
    std::string order = "extension";
    std::string out;
    realize->add_option("--ball", ball, "word-length radius")->check(CLI::Range(0, 12));
    realize->add_option("--order", order, "extension | extension-st");
    realize->add_option("--out", out, "output path (default stdout)");

    // survey
    auto* survey = app.add_subcommand("survey", "Fixed-point census over a realization");
    std::string survey_in;
    int survey_ball = 4;
    std::string survey_order = "extension";
    bool survey_serial = false;
    std::string survey_out;
    survey->add_option("--in", survey_in, "orbit CSV produced by `realize`");
    survey->add_option("--ball", survey_ball, "ball radius (when --in is absent)")
        ->check(CLI::Range(0, 12));
    survey->add_option("--order", survey_order, "extension | extension-st");
    survey->add_flag("--serial", survey_serial, "use the serial reference kernel");
    survey->add_option("--out", survey_out, "output path (default stdout)");

    // orders audit
    auto* orders = app.add_subcommand("orders", "Order-axiom audits");
    auto* audit = orders->add_subcommand("audit", "Left-invariance audit on random samples");
    std::string audit_order = "extension";
    int audit_samples = 10000;
    std::uint64_t audit_seed = 0;
    std::string audit_out;
    audit->add_option("--order", audit_order,
                      "extension | extension-st | dyadic-natural | affine | germ | corrupted-abs");
    audit->add_option("--samples", audit_samples, "number of random triples")->check(CLI::PositiveNumber);
    audit->add_option("--seed", audit_seed, "RNG seed (recorded in the report)");
    audit->add_option("--out", audit_out, "output path (default stdout)");

    // semigroup
    auto* semigroup = app.add_subcommand("semigroup", "Crossed pairs and free-semigroup evidence");
    std::string sg_f, sg_g, sg_out;
    int sg_len = 12;
    bool sg_construct = false;
    semigroup->add_option("--f", sg_f, "first map (JSON)")->required();
    semigroup->add_option("--g", sg_g, "second map (JSON)")->required();
    semigroup->add_option("--max-len", sg_len, "distinctness length cap")->check(CLI::Range(1, 18));
    semigroup->add_flag("--construct", sg_construct, "run the constructive builder, not just detection");
    semigroup->add_option("--out", sg_out, "output path (default stdout)");

    // search
    auto* search = app.add_subcommand("search", "Pigeonhole search for a near-identity element");
    std::string se_alpha, se_beta, se_w, se_params, se_out;
    int se_n = 8;
    long se_grid = 4;
    bool se_serial = false;
    search->add_option("--alpha", se_alpha, "alpha map JSON (default: bundled fixture)");
    search->add_option("--beta", se_beta, "beta map JSON (default: bundled fixture)");
    search->add_option("--W", se_w, "base word map JSON (default: identity)");
    search->add_option("--params", se_params, "search parameter JSON");
    search->add_option("--n", se_n, "word scale")->check(CLI::Range(0, 16));
    search->add_option("--grid", se_grid, "grid density N (points i/N)")->check(CLI::Range(2l, 64l));
    search->add_flag("--serial", se_serial, "use the serial reference kernel");
    search->add_option("--out", se_out, "output path (default stdout)");

    // count
    auto* count = app.add_subcommand("count", "Exact word-set counts and growth verdicts");
    int count_max = 40;
    std::string count_out;
    count->add_option("--max-n", count_max, "largest n")->check(CLI::Range(0, 2000));
    count->add_option("--out", count_out, "output path (default stdout)");

    // pn-check
    auto* pn = app.add_subcommand("pn-check", "Finite-horizon semi-Archimedean instance check");
    std::string pn_instance, pn_out;
    long pn_horizon = 0;
    pn->add_option("--instance", pn_instance, "instance JSON")->required();
    pn->add_option("--horizon", pn_horizon, "override the instance horizon");
    pn->add_option("--out", pn_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    try {
        if (*realize) return run_realize(ball, order, out);
        if (*survey) return run_survey(survey_in, survey_ball, survey_order, survey_serial, survey_out);
        if (*orders) {
            if (!*audit) {
                std::cerr << "orders requires the `audit` subcommand\n";
                return 2;
            }
            return run_orders(audit_order, audit_samples, audit_seed, audit_out);
        }
        if (*semigroup) return run_semigroup(sg_f, sg_g, sg_len, sg_construct, sg_out);
        if (*search)
            return run_search(se_alpha, se_beta, se_w, se_params, se_n, se_grid, se_serial, se_out);
        if (*count) return run_count(count_max, count_out);
        if (*pn) return run_pn_check(pn_instance, pn_horizon, pn_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
