// Acceptance runner: one PASS/FAIL line per criterion.  Every comparison is
// exact; the only numeric tolerances are the runtime limits and the PIT
// false-equal bound below.

#include "aspectra/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

using namespace aspectra;

namespace {

constexpr std::uint64_t kSeed = 20240611;
constexpr double kPitBound = 1e-60;

struct Criterion {
    int number;
    std::string title;
    double limit_seconds;
};

bool report(const Criterion& c, const std::vector<SuiteResult>& results, double seconds, std::string extra = {})
{
    bool ok = seconds <= c.limit_seconds;
    std::size_t violations = 0;
    for (const auto& r : results) {
        ok = ok && r.passed();
        violations += r.violations.size();
    }
    std::printf("criterion %d [%s]: %s (%.1fs, limit %.0fs, %zu violations%s%s)\n", c.number, c.title.c_str(),
                ok ? "PASS" : "FAIL", seconds, c.limit_seconds, violations, extra.empty() ? "" : ", ",
                extra.c_str());
    for (const auto& r : results) {
        std::size_t shown = 0;
        for (const auto& v : r.violations) {
            if (++shown > 10)
                break;
            std::printf("    %s: %s\n", r.name.c_str(), v.c_str());
        }
        if (r.critical)
            std::cout << r.to_json().dump(2) << '\n';
    }
    std::fflush(stdout);
    return ok;
}

template <class F>
double timed(F&& f)
{
    const auto start = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<Json> verdicts(const SuiteResult& r) { return r.details.value("verdicts", Json::array()); }

std::vector<std::pair<bool, bool>> verdict_pairs(const std::vector<Json>& list)
{
    std::vector<std::pair<bool, bool>> out;
    for (const Json& v : list)
        out.emplace_back(v.at("divisorEqual").get<bool>(), v.at("charEqual").get<bool>());
    return out;
}

} // namespace

int main()
{
    bool all = true;
    bool critical = false;
    std::vector<PencilCheck> checks;

    {
        SuiteResult r;
        const double t = timed([&] { r = relations_suite({2, 3, 4, 5}); });
        all &= report({1, "relation suite, n=2..5", 10}, {r}, t);
    }
    {
        SuiteResult r;
        const double t = timed([&] { r = normality_suite({2, 3, 4, 5}); });
        all &= report({2, "N normal abelian, quotient S_{n+1}", 5}, {r}, t);
    }
    {
        SuiteResult r;
        const double t = timed([&] { r = echelon_suite({2, 3}, kSeed, 500, 12); });
        all &= report({3, "echelon forms", 60}, {r}, t,
                      std::to_string(r.details.value("randomWords", 0)) + " random words");
    }
    {
        SuiteResult r;
        const double t = timed([&] { r = lemma21_suite(kSeed, 20, 4, &checks); });
        all &= report({4, "trace sums of conjugate tuples", 30}, {r}, t);
    }

    Theorem52Options positive;
    positive.contrapositive = false;
    Theorem52Options contrapositive;
    contrapositive.positive = false;
    contrapositive.ranks = {2};

    SuiteResult k_pos;
    SuiteResult k_neg;
    {
        const double t = timed([&] { k_pos = theorem52_suite(positive, kSeed, &checks); });
        critical |= k_pos.critical;
        all &= report({5, "K: representations vs conjugates, n=2,3", 300}, {k_pos}, t,
                      std::to_string(verdicts(k_pos).size()) + " comparisons");
    }
    {
        const double t = timed([&] { k_neg = theorem52_suite(contrapositive, kSeed, &checks); });
        critical |= k_neg.critical;
        all &= report({6, "K: inequivalent pairs, n=2", 120}, {k_neg}, t);
    }
    {
        SuiteResult s_pos;
        SuiteResult s_neg;
        Theorem52Options sp = positive;
        sp.kind = ProbeKind::ScriptK;
        Theorem52Options sn = contrapositive;
        sn.kind = ProbeKind::ScriptK;
        const double t = timed([&] {
            s_pos = theorem52_suite(sp, kSeed, &checks);
            s_neg = theorem52_suite(sn, kSeed, &checks);
        });
        critical |= s_pos.critical || s_neg.critical;
        auto k_list = verdicts(k_pos);
        auto k_more = verdicts(k_neg);
        k_list.insert(k_list.end(), k_more.begin(), k_more.end());
        auto s_list = verdicts(s_pos);
        auto s_more = verdicts(s_neg);
        s_list.insert(s_list.end(), s_more.begin(), s_more.end());
        SuiteResult same;
        same.name = "verdicts";
        if (verdict_pairs(k_list) != verdict_pairs(s_list))
            same.violations.push_back("verdicts on scriptK differ from those on K");
        all &= report({7, "scriptK in place of K", 300}, {s_pos, s_neg, same}, t,
                      std::to_string(s_list.size()) + " comparisons");
    }
    {
        SuiteResult r;
        const double t = timed([&] { r = pit_agreement_suite(checks, kPitBound); });
        char bound[64];
        std::snprintf(bound, sizeof bound, "worst bound %.3g", r.details.value("worstBound", 0.0));
        all &= report({8, "PIT agrees with symbolic", 60}, {r}, t,
                      std::to_string(checks.size()) + " comparisons, " + bound);
    }
    {
        SuiteResult r;
        const double t = timed([&] { r = proof_step_suite({2, 3}, kSeed, 100, 4); });
        all &= report({9, "arrangements of K_1 multisets", 60}, {r}, t);
    }

    if (critical)
        std::printf("CRITICAL: equal divisors with unequal characters\n");
    std::printf("%s\n", all ? "ALL PASS" : "SOME FAIL");
    return all && !critical ? 0 : 1;
}
