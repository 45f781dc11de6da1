// Acceptance suite: one PASS/FAIL line per criterion. All checks are exact
// integer comparisons; the only thresholds are the wall-clock budgets.

#include "hurwitz/cli.hpp"
#include "hurwitz/metacomm.hpp"
#include "hurwitz/verify.hpp"

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

using namespace hurwitz;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome from_report(const VerifyReport& r) {
    std::ostringstream os;
    os << "cases=" << r.cases_run << " failed=" << r.cases_failed;
    for (const auto& f : r.first_failures) os << "\n      " << f;
    return {r.ok(), os.str()};
}

VerifyScope scope(std::int64_t p_max, std::int64_t q_max) {
    VerifyScope s;
    s.p_max = p_max;
    s.q_max = q_max;
    s.seed = 0;
    s.samples = 1000;
    return s;
}

Outcome counting() {
    const VerifyReport r = verify_counts(scope(53, 13));
    Outcome out = from_report(r);
    // 15 odd primes up to 53; bijection checked on the 5 primes up to 13.
    out.pass = out.pass && r.cases_run == 15 + (4 + 6 + 8 + 12 + 14) + 5 && r.tallies.at("bijection_primes") == 5;
    return out;
}

Outcome isomorphism() { return from_report(verify_phi(scope(13, 13))); }

Outcome triple_oracle() { return from_report(verify_oracle(scope(13, 13))); }

Outcome sign_theorem() { return from_report(verify_signs(scope(13, 13))); }

Outcome fixed_point_theorem() {
    const VerifyReport r = verify_fixed(scope(13, 13));
    Outcome out = from_report(r);
    const bool both = r.tallies.count("central") && r.tallies.at("central") > 0 && r.tallies.count("generic") &&
                      r.tallies.at("generic") > 0;
    const MetaQuery example = MetaQuery::make(3, HurwitzInt::make(4, 6, 0, 0));
    const bool example_ok = example.central && analyze(meta_permutation(example)).fixed_count == 4;
    out.pass = out.pass && both && example_ok;
    out.detail += " central=" + std::to_string(r.tallies.count("central") ? r.tallies.at("central") : 0);
    return out;
}

Outcome cycle_theorem() { return from_report(verify_cycles(scope(13, 13))); }

Outcome order_census() {
    const VerifyReport r = verify_orders(scope(7, 13));
    Outcome out = from_report(r);
    const std::map<std::int64_t, std::int64_t> expected{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
    out.pass = out.pass && pgl2_order_census(3) == expected;
    return out;
}

Outcome determinism() {
    const std::vector<std::string> args{"verify", "oracle", "--p-max", "13", "--q-max", "13",
                                        "--format", "json", "--seed", "0"};
    std::ostringstream a, b, err;
    const int ca = cli::run(args, a, err);
    const int cb = cli::run(args, b, err);
    return {ca == 0 && cb == 0 && a.str() == b.str() && !a.str().empty(),
            "bytes=" + std::to_string(a.str().size())};
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "counting: p+1 classes and conic points (p <= 53), bijection (p <= 13)", 10.0, counting},
        {2, "isomorphism: products, sums, det = norm, trace = trace, relations", 5.0, isomorphism},
        {3, "triple-oracle equivalence and exact swap P*Q = Q'*P'", 60.0, triple_oracle},
        {4, "sign equals (q/p)", 60.0, sign_theorem},
        {5, "fixed points equal 1 + ((tr^2 - 4q)/p), central -> p+1", 60.0, fixed_point_theorem},
        {6, "non-fixed cycles share one length dividing p+1, p or p-1", 60.0, cycle_theorem},
        {7, "order census matches closed form (p = 3, 5, 7)", 10.0, order_census},
        {8, "verify oracle JSON is byte-identical across runs", 60.0, determinism},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out{false, ""};
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = out.pass && elapsed < c.budget_seconds;
        if (!pass) ++failures;
        std::cout << (pass ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << "  (" << out.detail << ", "
                  << std::fixed << std::setprecision(3) << elapsed << " s < " << c.budget_seconds << " s)\n";
    }
    std::cout << (failures == 0 ? "all acceptance criteria passed" : "acceptance criteria failed: " + std::to_string(failures))
              << '\n';
    return failures == 0 ? 0 : 1;
}
