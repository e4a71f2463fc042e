#include "plethygen/suites.hpp"

#include "plethygen/combinat.hpp"
#include "plethygen/errors.hpp"
#include "plethygen/geometry.hpp"
#include "plethygen/glnp.hpp"
#include "plethygen/ptop.hpp"
#include "plethygen/qehr.hpp"
#include "plethygen/rational.hpp"
#include "plethygen/recip.hpp"
#include "plethygen/sl2.hpp"
#include "plethygen/tables.hpp"

#include <atomic>
#include <chrono>
#include <set>
#include <functional>
#include <sstream>
#include <thread>

namespace plethygen {

bool VerificationReport::pass() const {
    for (const auto& c : cases)
        if (!c.pass) return false;
    return true;
}

namespace {

using Task = std::function<CaseResult()>;

std::vector<CaseResult> run_tasks(const std::vector<Task>& tasks, int jobs) {
    std::vector<CaseResult> results(tasks.size());
    auto run_one = [&](std::size_t i) {
        try {
            results[i] = tasks[i]();
        } catch (const std::exception& e) {
            results[i].pass = false;
            results[i].diagnostic = std::string("exception: ") + e.what();
        }
    };
    if (jobs <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    int nworkers = std::min<std::size_t>(static_cast<std::size_t>(jobs), tasks.size());
    for (int t = 0; t < nworkers; ++t)
        workers.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < tasks.size();
                 i = next.fetch_add(1))
                run_one(i);
        });
    for (auto& w : workers) w.join();
    return results;
}

std::string mu_str(const Partition& mu) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (i) os << ",";
        os << mu[i];
    }
    os << ")";
    return os.str();
}

std::vector<Partition> partitions_up_to(int min_w, int max_w) {
    std::vector<Partition> out;
    for (int w = min_w; w <= max_w; ++w)
        for (const auto& mu : partitions_of(w)) out.push_back(mu);
    return out;
}

CaseResult simple_case(std::string input, bool pass, std::string diag = "") {
    return {std::move(input), pass, std::move(diag)};
}

// ---- individual suites ----------------------------------------------------

std::vector<Task> suite_table1(const SuiteOptions&) {
    std::vector<Task> tasks;
    for (const auto& entry : weight_le4_forms())
        tasks.push_back([entry] {
            bool ok = rational_equal(compute_A(entry.mu), entry.value);
            return simple_case("mu=" + mu_str(entry.mu), ok,
                               ok ? "matches stored compact form"
                                  : "differs from stored compact form");
        });
    return tasks;
}

std::vector<Task> suite_appendixA(const SuiteOptions&) {
    std::vector<Task> tasks;
    for (const auto& entry : weight5_forms())
        tasks.push_back([entry] {
            bool ok = rational_equal(compute_A(entry.mu), entry.value);
            return simple_case("mu=" + mu_str(entry.mu), ok,
                               ok ? "matches stored sum of terms"
                                  : "differs from stored sum of terms");
        });
    // The remaining weight-5 shapes are pinned down through reciprocity
    // against the computed conjugates.
    for (const auto& mu :
         std::vector<Partition>{{2, 2, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}})
        tasks.push_back([mu] {
            bool ok = check_reciprocity(mu);
            return simple_case("mu=" + mu_str(mu) + " (via reciprocity)", ok);
        });
    return tasks;
}

std::vector<Task> suite_reciprocity(const SuiteOptions& o) {
    int max = o.max.value_or(6);
    std::vector<Task> tasks;
    for (const auto& mu : partitions_up_to(2, max))
        tasks.push_back([mu] {
            bool ok = check_reciprocity(mu);
            return simple_case("A reciprocity mu=" + mu_str(mu), ok);
        });
    for (const auto& mu : partitions_up_to(1, max))
        tasks.push_back([mu] {
            bool ok = qehr_reciprocity(mu);
            return simple_case("QEhr reciprocity mu=" + mu_str(mu), ok);
        });
    return tasks;
}

std::vector<Task> suite_hook_reciprocity(const SuiteOptions& o) {
    int max = o.max.value_or(6);
    std::vector<Task> tasks;
    for (int n = 0; n <= max - 1; ++n)
        for (int m = 0; n + m + 1 <= max; ++m) {
            if (n + m + 1 < 2) continue;
            tasks.push_back([n, m] {
                bool ok = check_hook_reciprocity(n, m);
                std::ostringstream os;
                os << "hook n=" << n << " m=" << m;
                return simple_case(os.str(), ok);
            });
        }
    return tasks;
}

std::vector<Task> suite_heine(const SuiteOptions& o) {
    int max = o.max.value_or(6);
    std::vector<Task> tasks;
    for (int w = 1; w <= max; ++w)
        tasks.push_back([w] {
            bool ok = rational_equal(heine(w), qehr_mu(Partition{w}));
            return simple_case("w=" + std::to_string(w), ok);
        });
    return tasks;
}

std::vector<Task> suite_carlitz(const SuiteOptions& o) {
    int max = o.max.value_or(4);
    std::vector<Task> tasks;
    for (int w = 1; w <= max; ++w)
        tasks.push_back([w] {
            bool ok = carlitz_check(w, 5);
            return simple_case("w=" + std::to_string(w) + " h<=5", ok);
        });
    return tasks;
}

std::vector<Task> suite_recurrences(const SuiteOptions& o) {
    int max = o.max.value_or(8);
    std::vector<Task> tasks;
    for (int w = 1; w <= max; ++w)
        for (int h = 1; h <= max; ++h)
            tasks.push_back([w, h] {
                for (std::int64_t k = (w * h) % 2 ? 2 : 1; k <= w * h + 1; k += 2) {
                    BigInt want = coefficient(Partition{w}, h, k, SpletMethod::Gauss);
                    if (recurrence_w(w, h, k) != want || recurrence_h(w, h, k) != want) {
                        std::ostringstream os;
                        os << "w=" << w << " h=" << h << " first mismatch at k=" << k;
                        return simple_case(os.str(), false);
                    }
                }
                std::ostringstream os;
                os << "w=" << w << " h=" << h;
                return simple_case(os.str(), true);
            });
    return tasks;
}

std::vector<Task> suite_qehr_oracle(const SuiteOptions& o) {
    int max = o.max.value_or(5);
    std::vector<Task> tasks;
    for (const auto& mu : partitions_up_to(1, max))
        tasks.push_back([mu] {
            for (int h = 0; h <= 6; ++h)
                if (splet(mu, h, SpletMethod::Ssyt) != splet(mu, h, SpletMethod::Qehr))
                    return simple_case("mu=" + mu_str(mu),
                                       false, "ssyt/qehr differ at h=" + std::to_string(h));
            return simple_case("mu=" + mu_str(mu), true, "ssyt = qehr for h <= 6");
        });
    for (int w = 1; w <= 6; ++w)
        tasks.push_back([w] {
            Partition mu{w};
            for (int h = 0; h <= 8; ++h)
                if (splet(mu, h, SpletMethod::Ssyt) != splet(mu, h, SpletMethod::Gauss))
                    return simple_case("mu=" + mu_str(mu), false,
                                       "ssyt/gauss differ at h=" + std::to_string(h));
            return simple_case("mu=" + mu_str(mu), true, "ssyt = gauss for h <= 8");
        });
    return tasks;
}

std::vector<std::vector<std::vector<int>>> ordered_set_partitions(int w) {
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> current;
    std::function<void(unsigned)> rec = [&](unsigned remaining) {
        if (remaining == 0) {
            out.push_back(current);
            return;
        }
        // Enumerate nonempty subsets of the remaining index set.
        for (unsigned s = remaining; s; s = (s - 1) & remaining) {
            std::vector<int> block;
            for (int i = 0; i < w; ++i)
                if (s & (1u << i)) block.push_back(i + 1);
            current.push_back(block);
            rec(remaining & ~s);
            current.pop_back();
        }
    };
    rec((1u << w) - 1);
    return out;
}

std::vector<int> composition_of_osp(const OrderedSetPartition& gamma) {
    std::vector<int> alpha;
    for (const auto& b : gamma) alpha.push_back(static_cast<int>(b.size()));
    return alpha;
}

std::vector<Task> suite_geometry(const SuiteOptions& o) {
    int max_w = o.max.value_or(4);
    const int max_h = 5;
    std::vector<Task> tasks;
    for (int w = 1; w <= max_w; ++w) {
        tasks.push_back([w] {
            for (const auto& gamma : ordered_set_partitions(w))
                for (int h = 0; h <= max_h; ++h)
                    if (ipe(face_points(gamma, h)) !=
                        monomial_qsym(composition_of_osp(gamma), h))
                        return simple_case("faces w=" + std::to_string(w), false);
            return simple_case("faces w=" + std::to_string(w), true,
                               "face enumerator = monomial quasisymmetric");
        });
        tasks.push_back([w] {
            for (const auto& pi : permutations_of(w))
                for (int h = 0; h <= max_h; ++h)
                    if (ipe(chamber_points(pi, h)) !=
                        fundamental_qsym(descent_composition(pi), h))
                        return simple_case("chambers w=" + std::to_string(w), false);
            return simple_case("chambers w=" + std::to_string(w), true,
                               "chamber enumerator = fundamental quasisymmetric");
        });
        tasks.push_back([w] {
            for (const auto& mu : partitions_of(w))
                for (const auto& q : syt_enumerate(mu))
                    for (int h = 0; h <= max_h; ++h)
                        if (ipe(coarse_points(q, h)) != schur_table(mu, h))
                            return simple_case("coarse w=" + std::to_string(w), false,
                                               "mismatch at mu=" + mu_str(mu));
            return simple_case("coarse w=" + std::to_string(w), true,
                               "coarse enumerator = Schur polynomial");
        });
        tasks.push_back([w] {
            for (int h = 0; h <= max_h; ++h) {
                std::size_t total = 0;
                std::set<std::vector<int>> seen;
                for (const auto& pi : permutations_of(w)) {
                    auto pts = chamber_points(pi, h);
                    total += pts.points.size();
                    for (const auto& v : pts.points)
                        if (!seen.insert(v).second)
                            return simple_case("cube partition w=" + std::to_string(w),
                                               false, "duplicate point");
                }
                std::size_t cube = 1;
                for (int i = 0; i < w; ++i) cube *= static_cast<std::size_t>(h + 1);
                if (total != cube)
                    return simple_case("cube partition w=" + std::to_string(w), false,
                                       "point count mismatch");
            }
            return simple_case("cube partition w=" + std::to_string(w), true,
                               "chambers partition the cube");
        });
        tasks.push_back([w] {
            for (const auto& pi : permutations_of(w)) {
                auto p = chamber_min_vertex(pi);
                if (chamber_of_point(p) != pi)
                    return simple_case("vertices w=" + std::to_string(w), false,
                                       "vertex not in its chamber");
                for (const auto& v : chamber_points(pi, w).points)
                    for (int i = 0; i < w; ++i)
                        if (v[static_cast<std::size_t>(i)] < p[static_cast<std::size_t>(i)])
                            return simple_case("vertices w=" + std::to_string(w), false,
                                               "vertex not minimal");
            }
            return simple_case("vertices w=" + std::to_string(w), true,
                               "minimal chamber vertices verified");
        });
        tasks.push_back([w] {
            for (const auto& mu : partitions_of(w)) {
                QSeries s = series_expand(qehr_mu(mu), max_h);
                for (const auto& q : syt_enumerate(mu))
                    for (int h = 0; h <= max_h; ++h)
                        if (quantum_ehrhart_direct(q, h) !=
                            s[static_cast<std::size_t>(h)])
                            return simple_case("quantum count w=" + std::to_string(w),
                                               false, "mismatch at mu=" + mu_str(mu));
            }
            return simple_case("quantum count w=" + std::to_string(w), true,
                               "direct count = closed-form series");
        });
    }
    return tasks;
}

std::vector<Task> suite_pi3(const SuiteOptions& o) {
    int max_h = o.max.value_or(20);
    std::vector<Task> tasks;
    for (int h = 0; h <= max_h; ++h)
        tasks.push_back([h] {
            for (std::int64_t k = (3 * h) % 2 ? 2 : 1; k <= 3 * h + 1; k += 2)
                if (pi3_count(h, k) != coefficient(Partition{3}, h, k, SpletMethod::Gauss))
                    return simple_case("h=" + std::to_string(h), false,
                                       "mismatch at k=" + std::to_string(k));
            return simple_case("h=" + std::to_string(h), true);
        });
    return tasks;
}

std::vector<Task> suite_cones(const SuiteOptions& o) {
    int max_h = o.max.value_or(20);
    std::vector<Task> tasks;
    for (int h = 0; h <= max_h; ++h)
        tasks.push_back([h] {
            for (std::int64_t k = (3 * h) % 2 ? 2 : 1; k <= 3 * h + 1; k += 2) {
                BigInt lhs = cone_count(Cone::B1, h, k) + cone_count(Cone::B2, h, k);
                if (lhs != coefficient(Partition{3}, h, k, SpletMethod::Gauss))
                    return simple_case("h=" + std::to_string(h), false,
                                       "mismatch at k=" + std::to_string(k));
            }
            return simple_case("h=" + std::to_string(h), true);
        });
    return tasks;
}

std::vector<Task> suite_denominator_thm(const SuiteOptions& o) {
    int max = o.max.value_or(6);
    std::vector<Task> tasks;
    for (const auto& mu : partitions_up_to(1, max))
        tasks.push_back([mu] {
            ComputeAResult r = compute_A_detailed(mu);
            std::vector<DenFactor> dw =
                FactoredRational(ZQPoly::one(), d_w_factors(partition_size(mu))).factors();
            bool factors_ok = r.rational.factors() == dw;
            bool q_ok = r.rational.numerator().is_zero() ||
                        r.rational.numerator().min_q_exp() >= 0;
            std::ostringstream diag;
            diag << "m=" << r.m_used;
            if (!factors_ok) diag << "; denominator differs from the universal one";
            if (!q_ok) diag << "; negative q-exponent in numerator";
            return simple_case("mu=" + mu_str(mu), factors_ok && q_ok, diag.str());
        });
    return tasks;
}

std::vector<Task> suite_denominator_conj(const SuiteOptions& o) {
    int max = o.max.value_or(7);
    std::vector<Task> tasks;
    for (const auto& mu : partitions_up_to(1, max))
        tasks.push_back([mu] {
            bool holds = check_conjecture_denominator(mu);
            // Conjecture outcomes are recorded, never counted as failures.
            return simple_case("mu=" + mu_str(mu), true,
                               holds ? "conjectured divisibility holds"
                                     : "conjectured divisibility FAILS (recorded)");
        });
    return tasks;
}

std::vector<Task> suite_hstar(const SuiteOptions& o) {
    int max = o.max.value_or(6);
    std::vector<Task> tasks;
    for (const auto& mu : partitions_up_to(1, max))
        tasks.push_back([mu] {
            HStarReport r = hstar_report(mu);
            return simple_case("mu=" + mu_str(mu), r.pass, r.diagnostic);
        });
    return tasks;
}

std::vector<Task> suite_km(const SuiteOptions& o) {
    int n = o.n.value_or(20);
    std::vector<Task> tasks;
    tasks.push_back([n] {
        try {
            std::vector<BigInt> s = km_series(n);
            std::ostringstream diag;
            diag << "first terms:";
            for (std::size_t i = 0; i < s.size() && i < 8; ++i) diag << " " << s[i];
            return simple_case("N=" + std::to_string(n), true, diag.str());
        } catch (const VerificationError& e) {
            return simple_case("N=" + std::to_string(n), false, e.what());
        }
    });
    return tasks;
}

std::vector<Task> suite_gln_sl2(const SuiteOptions& o) {
    int budget = o.max.value_or(12);
    std::vector<Task> tasks;
    for (int d = 1; d <= 4; ++d)
        for (const auto& nu : partitions_of(d))
            for (int h = 1; d * h <= budget; ++h)
                tasks.push_back([nu, h, d] {
                    for (const auto& lambda : partitions_of(d * h, 2)) {
                        std::int64_t l1 = lambda.empty() ? 0 : lambda[0];
                        std::int64_t l2 = lambda.size() > 1 ? lambda[1] : 0;
                        BigInt gl = gl_coefficient(nu, Partition{h}, lambda, 2);
                        BigInt sl2 = coefficient(nu, h, l1 - l2 + 1);
                        if (gl != sl2) {
                            std::ostringstream os;
                            os << "nu=" << mu_str(nu) << " h=" << h
                               << " mismatch at lambda=" << mu_str(lambda);
                            return simple_case(os.str(), false);
                        }
                    }
                    std::ostringstream os;
                    os << "nu=" << mu_str(nu) << " h=" << h;
                    return simple_case(os.str(), true);
                });
    tasks.push_back([] {
        SchurExpansion e = schur_decompose(plethysm_poly({2}, {2}, 2));
        SchurExpansion want{{{4}, 1}, {{2, 2}, 1}};
        return simple_case("square of a row decomposes", e == want,
                           "expected multiplicity one on (4) and (2,2)");
    });
    return tasks;
}

using SuiteBuilder = std::vector<Task> (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteBuilder>>& suite_registry() {
    static const std::vector<std::pair<std::string, SuiteBuilder>> registry = {
        {"table1", suite_table1},
        {"appendixA", suite_appendixA},
        {"reciprocity", suite_reciprocity},
        {"hook-reciprocity", suite_hook_reciprocity},
        {"heine", suite_heine},
        {"carlitz", suite_carlitz},
        {"recurrences", suite_recurrences},
        {"qehr-oracle", suite_qehr_oracle},
        {"geometry", suite_geometry},
        {"pi3", suite_pi3},
        {"cones", suite_cones},
        {"denominator-thm", suite_denominator_thm},
        {"denominator-conj", suite_denominator_conj},
        {"hstar", suite_hstar},
        {"km", suite_km},
        {"gln-sl2", suite_gln_sl2},
    };
    return registry;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, _] : suite_registry()) v.push_back(name);
        return v;
    }();
    return names;
}

VerificationReport run_suite(const std::string& name, const SuiteOptions& options) {
    for (const auto& [sname, builder] : suite_registry()) {
        if (sname != name) continue;
        VerificationReport report;
        report.suite = name;
        auto start = std::chrono::steady_clock::now();
        report.cases = run_tasks(builder(options), options.jobs);
        report.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        return report;
    }
    throw UsageError("unknown suite: " + name);
}

nlohmann::ordered_json report_to_json(const VerificationReport& report) {
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    j["pass"] = report.pass();
    j["elapsed_seconds"] = report.elapsed_seconds;
    j["cases"] = nlohmann::ordered_json::array();
    for (const auto& c : report.cases) {
        nlohmann::ordered_json cj;
        cj["input"] = c.input;
        cj["pass"] = c.pass;
        cj["diagnostic"] = c.diagnostic;
        j["cases"].push_back(cj);
    }
    return j;
}

}  // namespace plethygen
