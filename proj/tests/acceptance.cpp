// Acceptance harness: one line per criterion. A criterion line reads
//   CRITERION <n>: PASS|FAIL -- <description> (<elapsed>s)
// The final criterion reports empirical conjecture outcomes and never fails.
#include "plethygen/recip.hpp"
#include "plethygen/suites.hpp"

#include <cstdio>
#include <string>
#include <thread>
#include <vector>

using namespace plethygen;

namespace {

SuiteOptions default_options() {
    SuiteOptions o;
    o.jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    return o;
}

struct SuiteOutcome {
    bool pass;
    double elapsed;
    std::string detail;
};

SuiteOutcome run(const std::string& suite, SuiteOptions o = default_options()) {
    VerificationReport r = run_suite(suite, o);
    std::string detail;
    for (const auto& c : r.cases)
        if (!c.pass) {
            detail = "first failure: " + c.input;
            if (!c.diagnostic.empty()) detail += " [" + c.diagnostic + "]";
            break;
        }
    return {r.pass(), r.elapsed_seconds, detail};
}

bool emit(int n, const SuiteOutcome& o, const std::string& description) {
    std::printf("CRITERION %d: %s -- %s (%.1fs)%s%s\n", n,
                o.pass ? "PASS" : "FAIL", description.c_str(), o.elapsed,
                o.detail.empty() ? "" : "; ", o.detail.c_str());
    std::fflush(stdout);
    return o.pass;
}

SuiteOutcome merge(std::initializer_list<SuiteOutcome> outcomes) {
    SuiteOutcome m{true, 0.0, ""};
    for (const auto& o : outcomes) {
        m.pass = m.pass && o.pass;
        m.elapsed += o.elapsed;
        if (m.detail.empty()) m.detail = o.detail;
    }
    return m;
}

}  // namespace

int main() {
    bool ok = true;

    ok &= emit(1, run("table1"), "compact rational forms for all |mu| <= 4");
    ok &= emit(2, run("appendixA"),
               "published |mu| = 5 expansions and their conjugates");
    ok &= emit(3, run("qehr-oracle"),
               "character oracle agreement (ssyt / series / gauss)");
    ok &= emit(4, run("recurrences"),
               "three-case recursions reproduce the oracle, w,h <= 8");
    ok &= emit(5, run("geometry"),
               "cube chambers, quasisymmetric enumerators, direct counts");
    ok &= emit(6, merge({run("heine"), run("carlitz")}),
               "Heine product and Carlitz identity");
    ok &= emit(7, merge({run("reciprocity"), run("hook-reciprocity")}),
               "combinatorial reciprocity, |mu| <= 6, and hook self-reciprocity");
    ok &= emit(8, run("denominator-thm"),
               "universal denominator with nonnegative q-exponents, |mu| <= 6");

    {
        SuiteOptions o = default_options();
        o.n = 20;
        SuiteOutcome km = run("km", o);
        std::vector<BigInt> s = km_series(2);
        km.pass = km.pass && s[0] == 1 && s[1] == 0 && s[2] == 1;
        ok &= emit(9, km, "closed form of the a_{3[4n]}^{[2n+1]} series, N = 20");
    }

    ok &= emit(10, run("hstar"),
               "h* palindromicity (hooks / self-conjugate) and inequalities");
    ok &= emit(11, run("gln-sl2"),
               "GL_n plethysm agrees with the two-variable dictionary");

    {
        SuiteOutcome conj = run("denominator-conj");
        VerificationReport r = run_suite("denominator-conj", default_options());
        int holds = 0, fails = 0;
        for (const auto& c : r.cases)
            (c.diagnostic.find("FAILS") == std::string::npos ? holds : fails)++;
        conj.detail = std::to_string(holds) + " shapes satisfy the conjectured " +
                      "divisibility, " + std::to_string(fails) +
                      " do not (recorded, non-blocking)";
        conj.pass = true;
        emit(12, conj, "conjectured hook-product denominator, |mu| <= 7");
    }

    std::printf("ACCEPTANCE: %s\n", ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
}
