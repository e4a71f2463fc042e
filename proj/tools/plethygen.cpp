#include "plethygen/combinat.hpp"
#include "plethygen/errors.hpp"
#include "plethygen/glnp.hpp"
#include "plethygen/ptop.hpp"
#include "plethygen/qehr.hpp"
#include "plethygen/rational.hpp"
#include "plethygen/sl2.hpp"
#include "plethygen/suites.hpp"
#include "plethygen/tables.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace plethygen;

constexpr int kCacheVersion = 1;

Partition parse_partition(const std::string& s) {
    Partition mu;
    if (s.empty() || s == "0") {
        validate_partition(mu);
        return mu;
    }
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(part, &pos);
            if (pos != part.size()) throw std::invalid_argument(part);
            mu.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("bad partition part: '" + part + "'");
        }
    }
    validate_partition(mu);
    return mu;
}

std::string partition_key(const Partition& mu) {
    std::string key = "A";
    for (int p : mu) key += "_" + std::to_string(p);
    return key;
}

std::filesystem::path cache_dir() {
    if (const char* env = std::getenv("PLETHYGEN_CACHE")) return env;
    return ".plethygen-cache";
}

std::optional<FactoredRational> cache_load(const Partition& mu) {
    std::filesystem::path file = cache_dir() / (partition_key(mu) + ".json");
    std::ifstream in(file);
    if (!in) return std::nullopt;
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        if (j.at("version").get<int>() != kCacheVersion) return std::nullopt;
        if (j.at("mu").get<std::vector<int>>() != mu) return std::nullopt;
        return rational_from_json(j.at("rational").dump());
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable cache entries are recomputed
    }
}

void cache_store(const Partition& mu, const FactoredRational& r) {
    std::error_code ec;
    std::filesystem::create_directories(cache_dir(), ec);
    if (ec) return;
    nlohmann::ordered_json j;
    j["version"] = kCacheVersion;
    j["mu"] = mu;
    j["rational"] = nlohmann::ordered_json::parse(rational_to_json(r));
    std::ofstream out(cache_dir() / (partition_key(mu) + ".json"));
    out << j.dump(2) << "\n";
}

void print_rational(const FactoredRational& r, const std::string& format,
                    const Partition& mu, bool show_known) {
    if (format == "json") {
        std::cout << rational_to_json(r) << "\n";
        return;
    }
    std::cout << r.str() << "\n";
    if (show_known) {
        if (auto known = known_form(mu))
            std::cout << "known compact form: " << known->str() << "\n";
    }
}

int cmd_compute(const std::string& mu_str, std::optional<std::size_t> m,
                const std::string& format, bool no_cache) {
    Partition mu = parse_partition(mu_str);
    FactoredRational r = FactoredRational::zero();
    bool cached = false;
    if (!no_cache && !m) {
        if (auto hit = cache_load(mu)) {
            r = *hit;
            cached = true;
        }
    }
    if (!cached) {
        ComputeAOptions options;
        options.m = m;
        r = compute_A_detailed(mu, options).rational;
        if (!no_cache && !m) cache_store(mu, r);
    }
    print_rational(r, format, mu, format != "json");
    return 0;
}

int cmd_qehr(const std::string& mu_str, const std::string& format) {
    Partition mu = parse_partition(mu_str);
    print_rational(qehr_mu(mu), format, mu, false);
    return 0;
}

int cmd_coeff(const std::string& mu_str, int h, std::int64_t k,
              const std::string& method) {
    Partition mu = parse_partition(mu_str);
    BigInt value;
    if (method == "recur") {
        if (mu.size() != 1) throw UsageError("method recur needs a single-row mu");
        value = recurrence_w(mu[0], h, k);
    } else {
        SpletMethod sm = SpletMethod::Auto;
        if (method == "ssyt") sm = SpletMethod::Ssyt;
        else if (method == "qehr") sm = SpletMethod::Qehr;
        else if (method == "gauss") sm = SpletMethod::Gauss;
        else if (method != "auto") throw UsageError("unknown method: " + method);
        value = coefficient(mu, h, k, sm);
    }
    std::cout << value << "\n";
    return 0;
}

int cmd_gln_plethysm(const std::string& outer, const std::string& inner, int vars,
                     bool json) {
    Partition nu = parse_partition(outer);
    Partition mu = parse_partition(inner);
    SchurExpansion e = schur_decompose(plethysm_poly(nu, mu, vars));
    if (json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& [lambda, c] : e) {
            nlohmann::ordered_json entry;
            entry["lambda"] = lambda;
            entry["coefficient"] = c.str();
            j.push_back(entry);
        }
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& [lambda, c] : e) {
            std::cout << "s(";
            for (std::size_t i = 0; i < lambda.size(); ++i)
                std::cout << (i ? "," : "") << lambda[i];
            std::cout << "): " << c << "\n";
        }
    }
    return 0;
}

int cmd_gln_kirillov(const std::string& lam, const std::string& mu_str,
                     const std::string& nu_str, int n, bool json) {
    std::vector<BigInt> series =
        kirillov_series(parse_partition(lam), parse_partition(mu_str),
                        parse_partition(nu_str), n);
    if (json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& v : series) j.push_back(v.str());
        std::cout << j.dump() << "\n";
    } else {
        for (std::size_t i = 0; i < series.size(); ++i)
            std::cout << (i ? " " : "") << series[i];
        std::cout << "\n";
    }
    if (auto rec = fit_recurrence(series, 8)) {
        std::cerr << "empirical recurrence of order " << rec->size() << ":";
        for (const auto& c : *rec) std::cerr << " " << c;
        std::cerr << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& suite, const SuiteOptions& options, bool json) {
    VerificationReport report = run_suite(suite, options);
    if (json) {
        std::cout << report_to_json(report).dump(2) << "\n";
    } else {
        for (const auto& c : report.cases) {
            std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.input;
            if (!c.diagnostic.empty()) std::cout << " -- " << c.diagnostic;
            std::cout << "\n";
        }
        std::cout << report.suite << ": " << report.cases.size() << " cases, "
                  << (report.pass() ? "all pass" : "FAILURES") << " ("
                  << report.elapsed_seconds << "s)\n";
    }
    return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact generating functions of SL2 plethysm coefficients"};
    app.require_subcommand(1);

    std::string mu_str, format = "text", method = "auto";
    std::optional<std::size_t> m_opt;
    bool no_cache = false, json = false;
    int h = 0;
    std::int64_t k = 0;

    auto* compute = app.add_subcommand("compute", "Compute A_mu(z,q)");
    compute->add_option("--mu", mu_str, "partition, e.g. 3,1")->required();
    compute->add_option("--m", m_opt, "truncation order override");
    compute->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    compute->add_flag("--no-cache", no_cache);

    auto* qehr = app.add_subcommand("qehr", "Closed-form quantum Ehrhart series");
    qehr->add_option("--mu", mu_str)->required();
    qehr->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* coeff = app.add_subcommand("coeff", "Coefficient a_{mu[h]}^{[k]}");
    coeff->set_help_flag("--help", "print help");  // frees -h for the dilation flag
    coeff->add_option("--mu", mu_str)->required();
    coeff->add_option("--h", h)->required();
    coeff->add_option("--k", k)->required();
    coeff->add_option("--method", method)
        ->check(CLI::IsMember({"auto", "ssyt", "qehr", "gauss", "recur"}));

    auto* gln = app.add_subcommand("gln", "GL_n plethysm utilities");
    gln->require_subcommand(1);
    std::string outer, inner, lam, gmu, gnu;
    int vars = 2, nterms = 10;
    auto* plet = gln->add_subcommand("plethysm", "Schur expansion of s_outer[s_inner]");
    plet->add_option("--outer", outer)->required();
    plet->add_option("--inner", inner)->required();
    plet->add_option("--vars", vars);
    plet->add_flag("--json", json);
    auto* kir = gln->add_subcommand("kirillov", "Diagonal coefficient series");
    kir->add_option("--lam", lam)->required();
    kir->add_option("--mu", gmu)->required();
    kir->add_option("--nu", gnu)->required();
    kir->add_option("--n", nterms);
    kir->add_flag("--json", json);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    SuiteOptions sopt;
    int max_opt = -1, n_opt = -1;
    std::string names;
    for (const auto& s : plethygen::suite_names()) names += (names.empty() ? "" : ", ") + s;
    verify->add_option("suite", suite, "one of: " + names)->required();
    verify->add_option("--max", max_opt, "size bound override");
    verify->add_option("--n", n_opt, "series length override");
    verify->add_option("--w", max_opt, "alias of --max");
    verify->add_option("--jobs", sopt.jobs, "parallel workers");
    verify->add_flag("--json", json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*compute) return cmd_compute(mu_str, m_opt, format, no_cache);
        if (*qehr) return cmd_qehr(mu_str, format);
        if (*coeff) return cmd_coeff(mu_str, h, k, method);
        if (*plet) return cmd_gln_plethysm(outer, inner, vars, json);
        if (*kir) return cmd_gln_kirillov(lam, gmu, gnu, nterms, json);
        if (*verify) {
            if (max_opt >= 0) sopt.max = max_opt;
            if (n_opt >= 0) sopt.n = n_opt;
            return cmd_verify(suite, sopt, json);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceError& e) {
        std::cerr << "resource bound: " << e.what() << "\n";
        return 3;
    } catch (const VerificationError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
