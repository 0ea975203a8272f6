#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "hg1111/lmfdb.hpp"
#include "hg1111/tables.hpp"
#include "hg1111/verify.hpp"
#include "json.hpp"

using namespace hg;

namespace {

int exit_code_ok = 0, exit_code_verify = 2, exit_code_network = 3;

LmfdbConfig config_from_file_and_env(const std::string& path) {
    LmfdbConfig cfg;
    if (!path.empty()) {
        std::ifstream in(path);
        if (!in) throw std::runtime_error("cannot open config " + path);
        nlohmann::json j;
        in >> j;
        if (j.contains("cache_dir")) cfg.cache_dir = j["cache_dir"].get<std::string>();
        if (j.contains("lmfdb_url")) cfg.base_url = j["lmfdb_url"].get<std::string>();
        if (j.contains("request_delay_ms"))
            cfg.request_delay_ms = j["request_delay_ms"].get<int>();
        if (j.contains("level_bound")) cfg.level_bound = j["level_bound"].get<long long>();
    }
    if (const char* d = std::getenv("HG1111_FIXTURES"))
        cfg.cache_dir = std::string(d) + "/newforms";
    if (const char* u = std::getenv("HG1111_LMFDB_URL")) cfg.base_url = u;
    return cfg;
}

void write_out(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank-4 hypergeometric local systems with Hodge vector (1,1,1,1)"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file");

    // classify
    auto* cls = app.add_subcommand("classify", "enumerate the 47 cases");
    std::string fmt = "md", outpath, verify_against;
    cls->add_option("--format", fmt, "csv|json|md");
    cls->add_option("--out", outpath, "output file");
    cls->add_option("--verify-against", verify_against, "reference tables.json");

    // info
    auto* info = app.add_subcommand("info", "summary of one case");
    int case_idx = 0;
    info->add_option("case", case_idx, "case index 1..47")->required();

    // model
    auto* model = app.add_subcommand("model", "toric model / threefold reduction");
    int model_case = 0, reduce_to = 0;
    std::string model_fmt = "text";
    model->add_option("case", model_case)->required();
    model->add_option("--reduce-to", reduce_to, "target fiber dimension (3)");
    model->add_option("--format", model_fmt, "text|json|latex");

    // count
    auto* cnt = app.add_subcommand("count", "point count of a fiber");
    int count_case = 0;
    long long count_q = 5;
    std::string count_t = "2", count_model = "canonical";
    cnt->add_option("case", count_case)->required();
    cnt->add_option("--q", count_q);
    cnt->add_option("--t", count_t);
    cnt->add_option("--model", count_model, "canonical|reduced");

    // ap
    auto* ap = app.add_subcommand("ap", "conifold Euler factor data");
    int ap_case = 0;
    long long ap_pmax = 100;
    bool ap_json = false;
    ap->add_option("case", ap_case)->required();
    ap->add_option("--primes", ap_pmax);
    ap->add_flag("--json", ap_json);

    // match
    auto* match = app.add_subcommand("match", "identify the newform for a case");
    int match_case = 0;
    long long match_pmax = 50;
    match->add_option("case", match_case)->required();
    match->add_option("--primes", match_pmax);

    // verify
    auto* ver = app.add_subcommand("verify", "run the property suites");
    VerifyOptions vopt;
    ver->add_option("--only", vopt.only);
    ver->add_option("--seed", vopt.seed);
    ver->add_option("--budget", vopt.budget);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cls) {
            auto recs = classify_all();
            if (!verify_against.empty()) {
                auto rows = load_tables(verify_against);
                auto diffs = diff_against_tables(recs, rows);
                for (auto& d : diffs) std::cerr << d << "\n";
                std::cout << (diffs.empty() ? "tables match\n" : "tables differ\n");
                return diffs.empty() ? exit_code_ok : exit_code_verify;
            }
            TableFormat tf = fmt == "csv"   ? TableFormat::Csv
                             : fmt == "json" ? TableFormat::Json
                                             : TableFormat::Markdown;
            write_out(emit_tables(recs, tf), outpath);
            return recs.size() == 47 ? exit_code_ok : exit_code_verify;
        }
        if (*info) {
            auto recs = classify_all();
            if (case_idx < 1 || case_idx > 47) throw std::runtime_error("unknown case index");
            auto& r = recs[case_idx - 1];
            std::cout << "case " << r.index << (r.mum ? " (MUM)" : "") << "\n";
            std::cout << "  alpha:";
            for (auto& x : r.params.alpha) std::cout << " " << rat_str(x);
            std::cout << "\n  beta: ";
            for (auto& x : r.params.beta) std::cout << " " << rat_str(x);
            std::cout << "\n  gamma^red: " << r.gamma_red.display() << "\n";
            std::cout << "  M0 = " << rat_str(r.gamma_red.m0()) << "\n";
            std::cout << "  D = " << r.D << ", E = " << r.E << "\n";
            std::cout << "  twist partner: " << (r.twist_partner == r.index
                                                     ? "self"
                                                     : std::to_string(r.twist_partner))
                      << "\n";
            auto srs = splittings(r.gamma_red);
            std::cout << "  splittings: " << srs.size() << "\n";
            size_t shown = 0;
            std::map<size_t, size_t> by_parts;
            for (auto& s : srs) by_parts[s.parts.size()]++;
            for (auto& [s, c] : by_parts) std::cout << "    into " << s << " parts: " << c << "\n";
            bool has5 = by_parts.count(5);
            if (!has5 && r.gamma_red.length() == 14)
                std::cout << "    no 5-part splitting\n";
            (void)shown;
            auto plan = reduce_to_threefold(r.gamma_red);
            std::cout << "  threefold plan: " << plan.provenance
                      << " (fiber dim " << plan.fiber_dim() << ")\n";
            return exit_code_ok;
        }
        if (*model) {
            auto recs = classify_all();
            auto& r = recs.at(model_case - 1);
            FamilyPair f = reduce_to == 3 ? reduce_to_threefold(r.gamma_red)
                                          : canonical_model(r.gamma_red);
            std::cout << f.render();
            return exit_code_ok;
        }
        if (*cnt) {
            auto recs = classify_all();
            auto& r = recs.at(count_case - 1);
            FamilyPair f = count_model == "reduced" ? reduce_to_threefold(r.gamma_red)
                                                    : canonical_model(r.gamma_red);
            long long c = count_points(f, parse_rat(count_t), count_q);
            std::cout << "count(q=" << count_q << ", t=" << count_t << ") = " << c << "\n";
            return exit_code_ok;
        }
        if (*ap) {
            auto recs = classify_all();
            auto& r = recs.at(ap_case - 1);
            auto series = ap_series(r, ap_pmax);
            if (ap_json) {
                nlohmann::json j = nlohmann::json::array();
                for (auto& d : series) {
                    nlohmann::json e;
                    e["p"] = d.p;
                    if (d.good) {
                        e["sigma"] = d.sigma_p;
                        e["ap"] = d.a_p;
                    } else {
                        e["skipped"] = d.skip_reason;
                    }
                    j.push_back(e);
                }
                std::cout << j.dump(2) << "\n";
            } else {
                for (auto& d : series) {
                    if (d.good)
                        std::cout << "p=" << d.p << " sigma=" << d.sigma_p << " ap=" << d.a_p
                                  << "\n";
                    else
                        std::cout << "p=" << d.p << " skipped (" << d.skip_reason << ")\n";
                }
            }
            return exit_code_ok;
        }
        if (*match) {
            auto recs = classify_all();
            auto& r = recs.at(match_case - 1);
            LmfdbClient client(config_from_file_and_env(config_path));
            auto aps = ap_series(r, match_pmax);
            auto m = client.match_form(aps, prime_support(r.gamma_red));
            if (m.ambiguous) {
                std::cout << "ambiguous match\n";
                return exit_code_verify;
            }
            if (!m.form) {
                std::cout << "no match within level bound\n";
                return exit_code_ok;
            }
            std::cout << m.form->label << "\n";
            return exit_code_ok;
        }
        if (*ver) {
            auto checks = run_verification(vopt);
            bool all = true;
            for (auto& c : checks) {
                std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << c.detail << "\n";
                all &= c.pass;
            }
            return all ? exit_code_ok : exit_code_verify;
        }
    } catch (const std::exception& e) {
        std::string what = e.what();
        std::cerr << "error: " << what << "\n";
        if (what.find("network") != std::string::npos) return exit_code_network;
        return exit_code_verify;
    }
    return exit_code_ok;
}
