#include "hurwitz/verify.hpp"

#include "hurwitz/errors.hpp"
#include "hurwitz/modp.hpp"
#include "hurwitz/numtheory.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>

namespace hurwitz {

namespace {

std::vector<std::int64_t> odd_primes_upto(std::int64_t bound) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = 3; n <= bound; n += 2)
        if (is_rational_prime(n)) out.push_back(n);
    return out;
}

std::string describe_query(const MetaQuery& q) {
    std::ostringstream os;
    os << "p=" << q.p << " q=" << q.q << " Q=" << q.Q;
    return os.str();
}

std::size_t ground_index(const std::vector<ConicPoint>& ground, const ConicPoint& c) {
    auto it = std::lower_bound(ground.begin(), ground.end(), c);
    if (it == ground.end() || *it != c) throw InvariantViolation("conic point missing from ground set");
    return static_cast<std::size_t>(it - ground.begin());
}

QuotQuat random_quot(std::mt19937_64& rng, std::int64_t p) {
    auto draw = [&] { return Fp(static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p)), p); };
    const Fp c1 = draw(), ci = draw(), cj = draw(), ck = draw();
    return {c1, ci, cj, ck};
}

VerifyReport new_report(std::string check, const VerifyScope& scope) {
    VerifyReport report;
    report.check = std::move(check);
    report.scope = scope;
    return report;
}

} // namespace

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{"counts", "phi", "oracle", "signs", "fixed", "cycles", "orders"};
    return names;
}

VerifyScope default_scope(std::string_view check) {
    VerifyScope scope;
    if (check == "counts") scope.p_max = 53;
    if (check == "orders") scope.p_max = 7;
    return scope;
}

std::vector<MetaQuery> sweep_queries(std::int64_t p_max, std::int64_t q_max) {
    std::vector<MetaQuery> out;
    for (std::int64_t p : odd_primes_upto(p_max))
        for (std::int64_t q = 2; q <= q_max; ++q) {
            if (q == p || !is_rational_prime(q)) continue;
            for (const HurwitzInt& Q : elements_of_norm(q)) out.push_back(MetaQuery::make(p, Q));
        }
    return out;
}

VerifyReport verify_counts(const VerifyScope& scope) {
    VerifyReport report = new_report("counts", scope);
    for (std::int64_t p : odd_primes_upto(scope.p_max)) {
        const auto classes = primes_of_norm(p);
        const auto conic = conic_points(p);
        const auto expected = static_cast<std::size_t>(p + 1);
        report.record(classes.size() == expected && conic.size() == expected, [&] {
            std::ostringstream os;
            os << "p=" << p << " classes=" << classes.size() << " conic=" << conic.size();
            return os.str();
        });
        if (p > 13) continue;

        std::vector<ConicPoint> images;
        for (const PrimeClass& cls : classes) {
            const ConicPoint c = trace_zero_rep(cls);
            images.push_back(c);
            report.record(conic_to_prime(c) == cls, [&] {
                return "p=" + std::to_string(p) + " class " + to_string(cls.rep()) + " does not round-trip via " +
                       to_string(c);
            });
        }
        std::sort(images.begin(), images.end());
        report.record(images == conic, [&] { return "p=" + std::to_string(p) + " trace-zero map is not onto the conic"; });
        ++report.tallies["bijection_primes"];
    }
    return report;
}

VerifyReport verify_phi(const VerifyScope& scope) {
    VerifyReport report = new_report("phi", scope);
    for (std::int64_t p : odd_primes_upto(scope.p_max)) {
        const TwoSquareRep rep = two_square_rep(p);
        const Fp zero(0, p), one(1, p);
        const FpMat2 mi = phi({zero, one, zero, zero}, rep);
        const FpMat2 mj = phi({zero, zero, one, zero}, rep);
        const FpMat2 mk = phi({zero, zero, zero, one}, rep);
        const FpMat2 minus_one = phi(QuotQuat::scalar(-one), rep);
        report.record(mi * mi == minus_one && mj * mj == minus_one && mk * mk == minus_one &&
                          mi * mj * mk == minus_one,
                      [&] { return "p=" + std::to_string(p) + " defining relations fail"; });

        std::mt19937_64 rng(scope.seed ^ (static_cast<std::uint64_t>(p) * 0x9E3779B97F4A7C15ULL));
        for (std::size_t n = 0; n < scope.samples; ++n) {
            const QuotQuat g = random_quot(rng, p);
            const QuotQuat d = random_quot(rng, p);
            const FpMat2 pg = phi(g, rep);
            const FpMat2 pd = phi(d, rep);
            const bool pass = phi(g * d, rep) == pg * pd && phi(g + d, rep) == pg + pd &&
                              mat2_det(pg) == norm(g) && mat2_trace(pg) == trace(g) && phi_inv(pg, rep) == g;
            report.record(pass, [&] {
                std::ostringstream os;
                os << "p=" << p << " sample " << n << " gamma=(" << g.c1 << ',' << g.ci << ',' << g.cj << ','
                   << g.ck << ")";
                return os.str();
            });
        }
    }
    return report;
}

VerifyReport verify_oracle(const VerifyScope& scope) {
    VerifyReport report = new_report("oracle", scope);
    std::map<std::int64_t, std::vector<PrimeClass>> classes_by_p;
    for (const MetaQuery& query : sweep_queries(scope.p_max, scope.q_max)) {
        auto& classes = classes_by_p[query.p];
        if (classes.empty()) classes = primes_of_norm(query.p);
        const Permutation perm = meta_permutation(query);
        for (const PrimeClass& cls : classes) {
            const PrimeClass by_divide = meta_divide(cls, query.Q);
            const PrimeClass by_conj = meta_conj(cls, query.Q);
            const std::size_t from = ground_index(perm.ground, trace_zero_rep(cls));
            const PrimeClass by_action = conic_to_prime(perm.ground[perm.images[from]]);
            const HurwitzInt cofactor = meta_cofactor(cls, query.Q, by_divide);
            const bool pass = by_divide == by_conj && by_conj == by_action && norm(cofactor) == query.q &&
                              cls.rep() * query.Q == cofactor * by_divide.rep();
            report.record(pass, [&] {
                std::ostringstream os;
                os << describe_query(query) << " P=" << cls.rep() << " divide=" << by_divide.rep()
                   << " conj=" << by_conj.rep() << " action=" << by_action.rep();
                return os.str();
            });
        }
    }
    return report;
}

VerifyReport verify_signs(const VerifyScope& scope) {
    VerifyReport report = new_report("signs", scope);
    for (const MetaQuery& query : sweep_queries(scope.p_max, scope.q_max)) {
        const int sign = analyze(meta_permutation(query)).sign;
        const int predicted = predict(query).sign;
        report.record(sign == predicted, [&] {
            return describe_query(query) + " sign=" + std::to_string(sign) + " predicted=" + std::to_string(predicted);
        });
        ++report.tallies[sign > 0 ? "sign_plus" : "sign_minus"];
    }
    return report;
}

VerifyReport verify_fixed(const VerifyScope& scope) {
    VerifyReport report = new_report("fixed", scope);
    for (const MetaQuery& query : sweep_queries(scope.p_max, scope.q_max)) {
        const auto fixed = static_cast<std::int64_t>(analyze(meta_permutation(query)).fixed_count);
        const std::int64_t predicted = predict(query).fixed;
        report.record(fixed == predicted, [&] {
            return describe_query(query) + " fixed=" + std::to_string(fixed) +
                   " predicted=" + std::to_string(predicted);
        });
        ++report.tallies[query.central ? "central" : "generic"];
    }
    return report;
}

VerifyReport verify_cycles(const VerifyScope& scope) {
    VerifyReport report = new_report("cycles", scope);
    for (const MetaQuery& query : sweep_queries(scope.p_max, scope.q_max)) {
        const PermReport r = analyze(meta_permutation(query));
        bool pass = r.uniform_length;
        if (pass && !r.cycle_lengths.empty()) {
            const auto len = static_cast<std::int64_t>(r.cycle_lengths.front());
            switch (r.fixed_count) {
            case 0: pass = (query.p + 1) % len == 0; break;
            case 1: pass = query.p % len == 0; break;
            case 2: pass = (query.p - 1) % len == 0; break;
            default: pass = false; break;
            }
            ++report.tallies["fixed_" + std::to_string(r.fixed_count)];
        } else if (pass) {
            ++report.tallies["identity"];
        }
        report.record(pass, [&] {
            std::ostringstream os;
            os << describe_query(query) << " fixed=" << r.fixed_count << " lengths=";
            for (std::size_t len : r.cycle_lengths) os << len << ' ';
            return os.str();
        });
    }
    return report;
}

VerifyReport verify_orders(const VerifyScope& scope) {
    VerifyReport report = new_report("orders", scope);
    for (std::int64_t p : odd_primes_upto(scope.p_max)) {
        const auto census = pgl2_order_census(p);
        std::int64_t total = 0;
        for (const auto& [order, count] : census) total += count;
        report.record(total == p * (p - 1) * (p + 1) && census.count(1) == 1 && census.at(1) == 1,
                      [&] { return "p=" + std::to_string(p) + " group order " + std::to_string(total); });
        // Every element order is at most p+1.
        for (std::int64_t k = 2; k <= p + 1; ++k) {
            const auto it = census.find(k);
            const std::int64_t seen = it == census.end() ? 0 : it->second;
            const std::int64_t formula = order_count(k, p);
            report.record(seen == formula, [&] {
                return "p=" + std::to_string(p) + " k=" + std::to_string(k) + " census=" + std::to_string(seen) +
                       " formula=" + std::to_string(formula);
            });
        }
        report.record(census.rbegin()->first <= p + 1,
                      [&] { return "p=" + std::to_string(p) + " element order exceeds p+1"; });
    }
    return report;
}

VerifyReport run_check(std::string_view check, const VerifyScope& scope) {
    const auto start = std::chrono::steady_clock::now();
    VerifyReport report;
    if (check == "counts") report = verify_counts(scope);
    else if (check == "phi") report = verify_phi(scope);
    else if (check == "oracle") report = verify_oracle(scope);
    else if (check == "signs") report = verify_signs(scope);
    else if (check == "fixed") report = verify_fixed(scope);
    else if (check == "cycles") report = verify_cycles(scope);
    else if (check == "orders") report = verify_orders(scope);
    else throw Error("unknown check: " + std::string(check));
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

nlohmann::json to_json(const VerifyReport& report, bool with_elapsed) {
    nlohmann::json j{
        {"check", report.check},
        {"scope",
         {{"p_max", report.scope.p_max},
          {"q_max", report.scope.q_max},
          {"seed", report.scope.seed},
          {"samples", report.scope.samples}}},
        {"cases_run", report.cases_run},
        {"cases_failed", report.cases_failed},
        {"first_failures", report.first_failures},
        {"tallies", report.tallies},
        {"pass", report.ok()},
    };
    if (with_elapsed) j["elapsed_seconds"] = report.elapsed_seconds;
    return j;
}

} // namespace hurwitz
