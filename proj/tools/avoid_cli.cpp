// Command-line front end for the avoidance-verification library.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "avoid/avoid.hpp"

namespace {

using namespace avoid;

int emit_report(const ReplayReport& report, bool json) {
    if (json) {
        std::cout << report.to_json().dump(2) << "\n";
    } else {
        std::cout << report.pipeline << ": " << verdict_name(report.verdict) << " ("
                  << report.regime << " regime)\n";
        for (const auto& w : report.witnesses) std::cout << "  witness: " << w.dump() << "\n";
        std::cout << "  stats: " << report.stats.dump() << "\n";
    }
    return report.exit_code();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification toolkit for avoidability of formulas with reversal"};
    app.require_subcommand(1);
    bool json = false;
    int threads = 1;
    uint64_t seed = 0;
    app.add_flag("--json", json, "emit JSON reports");
    app.add_option("--threads", threads, "worker threads for replay pipelines")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "RNG seed (sampling modes only)");

    // bounds --template thm2|thm3 --beta p/q --d N
    auto* bounds_cmd = app.add_subcommand("bounds", "derive variable-length caps");
    std::string tmpl = "thm2", beta_text = "22/15";
    int d = 11;
    bounds_cmd->add_option("--template", tmpl, "thm2 or thm3")
        ->check(CLI::IsMember({"thm2", "thm3"}));
    bounds_cmd->add_option("--beta", beta_text, "exponent bound p/q")->required();
    bounds_cmd->add_option("--d", d, "directedness level")->required();

    auto* replay_cmd = app.add_subcommand("replay", "theorem replay pipelines");
    replay_cmd->require_subcommand(1);

    auto* thm1u = replay_cmd->add_subcommand("thm1-upper", "periodic word avoids phi_k");
    int t1u_k = 2, t1u_prefix = 30;
    uint64_t t1u_cap = 2;
    thm1u->add_option("--k", t1u_k)->required();
    thm1u->add_option("--prefix-len", t1u_prefix)->required();
    thm1u->add_option("--cap", t1u_cap)->required();

    auto* thm1l = replay_cmd->add_subcommand("thm1-lower", "no b-letter word avoids phi_lcm");
    int t1l_b = 2;
    uint64_t t1l_maxlen = 3, t1l_budget = 1000000000;
    thm1l->add_option("--b", t1l_b)->required();
    thm1l->add_option("--max-len", t1l_maxlen)->required();
    thm1l->add_option("--budget", t1l_budget);

    auto add_thm_opts = [](CLI::App* cmd, uint64_t& source_len, bool& paper, bool& derived,
                           uint64_t& budget) {
        cmd->add_option("--source-len", source_len)->required();
        auto* p = cmd->add_flag("--paper-caps", paper, "use the stated caps");
        cmd->add_flag("--derived-caps", derived, "use the exact-rational caps")->excludes(p);
        cmd->add_option("--budget", budget);
    };
    auto* thm2 = replay_cmd->add_subcommand("thm2", "21-uniform binary construction");
    uint64_t t2_len = 6, t2_budget = 1000000000;
    bool t2_paper = false, t2_derived = false;
    add_thm_opts(thm2, t2_len, t2_paper, t2_derived, t2_budget);
    auto* thm3 = replay_cmd->add_subcommand("thm3", "9-uniform ternary construction");
    uint64_t t3_len = 6, t3_budget = 1000000000;
    bool t3_paper = false, t3_derived = false;
    add_thm_opts(thm3, t3_len, t3_paper, t3_derived, t3_budget);

    auto* psi_cmd = replay_cmd->add_subcommand("psi", "psi_k conjecture exploration");
    int psi_k = 3;
    uint64_t psi_len = 6, psi_xcap = 12, psi_budget = 1000000000;
    psi_cmd->add_option("--k", psi_k)->required();
    psi_cmd->add_option("--source-len", psi_len)->required();
    psi_cmd->add_option("--x-cap", psi_xcap)->required();
    psi_cmd->add_option("--budget", psi_budget);

    auto* nonavoid = replay_cmd->add_subcommand("nonavoid2", "binary non-2-avoidability check");
    uint64_t na_maxlen = 200;
    nonavoid->add_option("--max-len", na_maxlen)->required();

    // enumerate: the free-word-generator front end
    auto* enum_cmd = app.add_subcommand("enumerate", "enumerate (beta^+,n)-free words");
    int en_alpha = 4, en_minp = 1;
    uint64_t en_len = 3, en_count = 1;
    std::string en_beta = "7/4", en_mode = "enumerate-all";
    enum_cmd->add_option("--alphabet", en_alpha)->required();
    enum_cmd->add_option("--beta", en_beta)->required();
    enum_cmd->add_option("--min-period", en_minp);
    enum_cmd->add_option("--length", en_len)->required();
    enum_cmd->add_option("--mode", en_mode)
        ->check(CLI::IsMember({"count", "enumerate-all", "lex-least", "sample"}));
    enum_cmd->add_option("--count", en_count, "number of samples (sample mode)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    try {
        if (*bounds_cmd) {
            BoundTemplate shape = tmpl == "thm2" ? BoundTemplate::Thm2Shape : BoundTemplate::Thm3Shape;
            BoundReport r = derive_caps(shape, Rational::parse(beta_text), d);
            nlohmann::json j = {{"template", tmpl},
                                {"beta", r.beta.str()},
                                {"d", r.directedness_d},
                                {"r", r.r.str()},
                                {"c", r.c.str()},
                                {"short_var_max", r.short_var_max},
                                {"finite", r.finite}};
            if (r.finite) j["long_var_max"] = r.long_var_max;
            if (r.paper_long_cap) j["paper_long_cap"] = *r.paper_long_cap;
            if (r.paper_short_cap) j["paper_short_cap"] = *r.paper_short_cap;
            if (json) {
                std::cout << j.dump(2) << "\n";
            } else if (r.finite) {
                std::cout << "r=" << r.r.str() << " c=" << r.c.str()
                          << " short<=" << r.short_var_max << " long<=" << r.long_var_max << "\n";
            } else {
                std::cout << "r=" << r.r.str() << " >= 1: no finite bound\n";
            }
            return 0;
        }
        if (*enum_cmd) {
            Alphabet alphabet(en_alpha);
            FreenessSpec spec(Rational::parse(en_beta), en_minp);
            if (en_mode == "count") {
                auto stats = enumerate_free(alphabet, spec, en_len, [](const Word&) { return true; });
                nlohmann::json j = {{"count", stats.count},
                                    {"max_depth_reached", stats.max_depth_reached},
                                    {"nodes_visited", stats.nodes_visited}};
                std::cout << j.dump(2) << "\n";
            } else if (en_mode == "enumerate-all") {
                auto stats = enumerate_free(alphabet, spec, en_len, [](const Word& w) {
                    std::cout << w.str() << "\n";
                    return true;
                });
                nlohmann::json j = {{"count", stats.count},
                                    {"max_depth_reached", stats.max_depth_reached},
                                    {"nodes_visited", stats.nodes_visited}};
                std::cerr << j.dump() << "\n";
            } else if (en_mode == "lex-least") {
                auto w = lex_least_free(alphabet, spec, en_len);
                if (!w) {
                    std::cerr << "no free word of length " << en_len << " exists\n";
                    return 1;
                }
                std::cout << w->str() << "\n";
            } else {
                for (uint64_t i = 0; i < en_count; ++i) {
                    auto w = sample_free(alphabet, spec, en_len, seed + i);
                    if (!w) {
                        std::cerr << "no free word of length " << en_len << " exists\n";
                        return 1;
                    }
                    std::cout << w->str() << "\n";
                }
            }
            return 0;
        }
        if (*thm1u) return emit_report(replay_theorem1_upper(t1u_k, t1u_prefix, t1u_cap), json);
        if (*thm1l) return emit_report(replay_theorem1_lower(t1l_b, t1l_maxlen, t1l_budget), json);
        auto choice = [](bool paper, bool derived) {
            if (paper) return CapChoice::PaperCaps;
            if (derived) return CapChoice::DerivedCaps;
            return CapChoice::PointwiseMax;
        };
        if (*thm2)
            return emit_report(replay_thm2(t2_len, choice(t2_paper, t2_derived), t2_budget, threads),
                               json);
        if (*thm3)
            return emit_report(replay_thm3(t3_len, choice(t3_paper, t3_derived), t3_budget, threads),
                               json);
        if (*psi_cmd)
            return emit_report(replay_psi(psi_k, psi_len, psi_xcap, psi_budget, threads), json);
        if (*nonavoid) return emit_report(replay_nonavoid2(na_maxlen), json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 3;
}
