#include "hurwitz/cli.hpp"

#include "hurwitz/errors.hpp"
#include "hurwitz/geometry.hpp"
#include "hurwitz/numtheory.hpp"
#include "hurwitz/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace hurwitz::cli {

namespace {

std::string cycle_notation(const PermReport& report) {
    if (report.cycles.empty()) return "()";
    std::ostringstream os;
    for (const auto& cycle : report.cycles) {
        os << '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) os << (i ? " " : "") << cycle[i];
        os << ')';
    }
    return os.str();
}

nlohmann::json quat_json(const HurwitzInt& h) { return nlohmann::json(h.doubled()); }

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

struct Options {
    std::string format = "text";
    std::int64_t p = 0;
    std::int64_t p_max = 0;
    std::int64_t q_max = 0;
    std::uint64_t seed = 0;
    std::size_t samples = 1000;
    std::string quat;
    std::string check;
    bool timing = false;
};

bool json_mode(const Options& opt) { return opt.format == "json"; }

int cmd_primes(const Options& opt, std::ostream& out) {
    const auto classes = primes_of_norm(opt.p);
    if (json_mode(opt)) {
        nlohmann::json j = nlohmann::json::array();
        for (const PrimeClass& cls : classes) j.push_back({{"class_rep", quat_json(cls.rep())}, {"p", cls.p()}});
        emit(out, j);
        return kOk;
    }
    out << "prime classes of norm " << opt.p << " (" << classes.size() << ", doubled coordinates)\n";
    for (const PrimeClass& cls : classes) out << "  " << cls.rep() << "  -> conic " << to_string(trace_zero_rep(cls)) << '\n';
    return kOk;
}

int cmd_conic(const Options& opt, std::ostream& out) {
    const auto points = conic_points(opt.p);
    if (json_mode(opt)) {
        nlohmann::json j = nlohmann::json::array();
        for (const ConicPoint& c : points) j.push_back(to_string(c));
        emit(out, j);
        return kOk;
    }
    const TwoSquareRep rep = two_square_rep(opt.p);
    out << "conic x^2+y^2+z^2=0 over F_" << opt.p << " (" << points.size() << " points; a=" << rep.a
        << " b=" << rep.b << ")\n";
    for (std::size_t i = 0; i < points.size(); ++i)
        out << "  " << std::setw(3) << i << "  " << to_string(points[i]) << "  P1 " << to_string(conic_to_proj(points[i], rep))
            << "  class " << conic_to_prime(points[i]).rep() << '\n';
    return kOk;
}

int cmd_permute(const Options& opt, std::ostream& out) {
    const MetaQuery query = MetaQuery::make(opt.p, parse_quat(opt.quat));
    const nlohmann::json rec = permutation_record(query);
    if (json_mode(opt)) {
        emit(out, rec);
        return kOk;
    }
    out << "p=" << query.p << " Q=" << query.Q << " N(Q)=" << query.q << (query.central ? " (central mod p)" : "") << '\n';
    out << "  images: " << rec["images"].dump() << '\n';
    out << "  cycles: " << rec["cycles"].get<std::string>() << '\n';
    out << "  sign:   " << rec["sign"] << "  predicted " << rec["predicted_sign"] << '\n';
    out << "  fixed:  " << rec["fixed"] << "  predicted " << rec["predicted_fixed"] << '\n';
    out << "  pass:   " << rec["pass"] << '\n';
    return kOk;
}

int cmd_predict(const Options& opt, std::ostream& out) {
    const MetaQuery query = MetaQuery::make(opt.p, parse_quat(opt.quat));
    const Prediction pred = predict(query);
    if (json_mode(opt)) {
        emit(out, {{"p", query.p},
                   {"q", query.q},
                   {"Q", quat_json(query.Q)},
                   {"central", query.central},
                   {"sign", pred.sign},
                   {"fixed", pred.fixed}});
        return kOk;
    }
    out << "p=" << query.p << " Q=" << query.Q << " q=" << query.q << ": sign " << pred.sign << ", fixed points "
        << pred.fixed << (query.central ? " (central)" : "") << '\n';
    return kOk;
}

int cmd_orders(const Options& opt, std::ostream& out) {
    const auto census = pgl2_order_census(opt.p);
    bool agree = true;
    nlohmann::json rows = nlohmann::json::array();
    for (std::int64_t k = 1; k <= opt.p + 1; ++k) {
        const auto it = census.find(k);
        const std::int64_t seen = it == census.end() ? 0 : it->second;
        const std::int64_t formula = k == 1 ? 1 : order_count(k, opt.p);
        agree = agree && seen == formula;
        rows.push_back({{"k", k}, {"census", seen}, {"formula", formula}});
    }
    if (json_mode(opt)) {
        emit(out, {{"p", opt.p}, {"orders", rows}, {"agree", agree}});
    } else {
        out << "element orders of the projective group over F_" << opt.p << '\n';
        out << "     k  census  formula\n";
        for (const auto& row : rows)
            out << std::setw(6) << row["k"].get<std::int64_t>() << std::setw(8) << row["census"].get<std::int64_t>()
                << std::setw(9) << row["formula"].get<std::int64_t>() << '\n';
        out << (agree ? "agree" : "MISMATCH") << '\n';
    }
    return agree ? kOk : kVerifyFailed;
}

int cmd_verify(const Options& opt, std::ostream& out) {
    VerifyScope scope = default_scope(opt.check);
    if (opt.p_max != 0) scope.p_max = opt.p_max;
    if (opt.q_max != 0) scope.q_max = opt.q_max;
    scope.seed = opt.seed;
    scope.samples = opt.samples;
    if (scope.p_max < 3) throw UnsupportedPrime("--p-max must be at least 3");
    if (scope.q_max < 2) throw UnsupportedPrime("--q-max must be at least 2");

    const VerifyReport report = run_check(opt.check, scope);
    if (json_mode(opt)) {
        emit(out, to_json(report, opt.timing));
    } else {
        out << "verify " << report.check << ": p_max=" << scope.p_max << " q_max=" << scope.q_max
            << " seed=" << scope.seed << '\n';
        out << "  cases run:    " << report.cases_run << '\n';
        out << "  cases failed: " << report.cases_failed << '\n';
        for (const auto& [name, count] : report.tallies) out << "  " << name << ": " << count << '\n';
        for (const std::string& f : report.first_failures) out << "  FAIL " << f << '\n';
        if (opt.timing) out << "  elapsed:      " << report.elapsed_seconds << " s\n";
        out << (report.ok() ? "PASS" : "FAIL") << '\n';
    }
    return report.ok() ? kOk : kVerifyFailed;
}

bool is_usage_error(const Error& e) {
    return dynamic_cast<const ParseError*>(&e) || dynamic_cast<const ParityError*>(&e) ||
           dynamic_cast<const UnsupportedPrime*>(&e) || dynamic_cast<const CoprimalityError*>(&e) ||
           dynamic_cast<const NonPrimeNorm*>(&e) || dynamic_cast<const ScaleLimit*>(&e);
}

} // namespace

HurwitzInt parse_quat(std::string_view text) {
    std::string compact;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
    const std::string quoted = "\"" + std::string(text) + "\"";
    if (compact.size() < 2 || compact.front() != '[' || compact.back() != ']')
        throw ParseError("quaternion literal " + quoted + " must look like [A,B,C,D]");

    std::array<HurwitzInt::Coord, 4> coords{};
    std::size_t count = 0;
    const char* cur = compact.data() + 1;
    const char* end = compact.data() + compact.size() - 1;
    while (true) {
        if (count == 4) throw ParseError("quaternion literal " + quoted + " has more than four coordinates");
        auto [next, ec] = std::from_chars(cur, end, coords[count]);
        if (ec != std::errc() || next == cur)
            throw ParseError("quaternion literal " + quoted + " has a non-integer coordinate");
        ++count;
        cur = next;
        if (cur == end) break;
        if (*cur != ',') throw ParseError("quaternion literal " + quoted + " must separate coordinates with commas");
        ++cur;
    }
    if (count != 4) throw ParseError("quaternion literal " + quoted + " needs exactly four coordinates");
    try {
        return HurwitzInt::make(coords);
    } catch (const ParityError&) {
        throw ParityError("quaternion literal " + quoted +
                          ": doubled coordinates must be all even (integer quaternion) or all odd (half-integer)");
    }
}

nlohmann::json permutation_record(const MetaQuery& query) {
    const Permutation perm = meta_permutation(query);
    const PermReport report = analyze(perm);

    nlohmann::json ground = nlohmann::json::array();
    for (const ConicPoint& c : perm.ground) ground.push_back(to_string(c));

    nlohmann::json rec{
        {"p", query.p},
        {"q", query.q},
        {"Q", quat_json(query.Q)},
        {"central", query.central},
        {"ground", ground},
        {"images", perm.images},
        {"cycles", cycle_notation(report)},
        {"sign", report.sign},
        {"fixed", report.fixed_count},
        {"cycle_lengths", report.cycle_lengths},
        {"uniform_length", report.uniform_length},
    };
    if (is_rational_prime(query.q)) {
        const Prediction pred = predict(query);
        rec["predicted_sign"] = pred.sign;
        rec["predicted_fixed"] = pred.fixed;
        rec["pass"] = pred.sign == report.sign && pred.fixed == static_cast<std::int64_t>(report.fixed_count) &&
                      report.uniform_length;
    } else {
        // Closed forms only apply to prime N(Q).
        rec["predicted_sign"] = nullptr;
        rec["predicted_fixed"] = nullptr;
        rec["pass"] = nullptr;
    }
    return rec;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hurwitz quaternion metacommutation toolkit.\n"
                 "Quaternions are written in doubled coordinates: [A,B,C,D] means (A + Bi + Cj + Dk)/2,\n"
                 "with A, B, C, D all even or all odd.",
                 "hurwitz"};
    app.require_subcommand(1);
    Options opt;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--seed", opt.seed, "Random seed (default 0)");
    };
    auto need_p = [&](CLI::App* sub) { sub->add_option("--p", opt.p, "Odd prime modulus")->required(); };
    auto need_q = [&](CLI::App* sub) {
        sub->add_option("--Q", opt.quat, "Quaternion [A,B,C,D] in doubled coordinates")->required();
    };

    CLI::App* primes = app.add_subcommand("primes", "List prime classes of norm p");
    need_p(primes);
    common(primes);
    CLI::App* conic = app.add_subcommand("conic", "List points of the conic x^2+y^2+z^2=0 over F_p");
    need_p(conic);
    common(conic);
    CLI::App* permute = app.add_subcommand("permute", "Metacommutation permutation of Q on primes of norm p");
    need_p(permute);
    need_q(permute);
    common(permute);
    CLI::App* predict_cmd = app.add_subcommand("predict", "Predicted sign and fixed-point count");
    need_p(predict_cmd);
    need_q(predict_cmd);
    common(predict_cmd);
    CLI::App* orders = app.add_subcommand("orders", "Element-order census of the projective group vs. closed form");
    need_p(orders);
    common(orders);
    CLI::App* verify = app.add_subcommand("verify", "Run an exhaustive verification sweep");
    verify->add_option("check", opt.check, "One of: counts, phi, oracle, signs, fixed, cycles, orders")
        ->required()
        ->check(CLI::IsMember(check_names()));
    verify->add_option("--p-max", opt.p_max, "Largest p in the sweep");
    verify->add_option("--q-max", opt.q_max, "Largest q = N(Q) in the sweep");
    verify->add_option("--samples", opt.samples, "Random samples per prime (phi)");
    verify->add_flag("--timing", opt.timing, "Report elapsed time (breaks byte-identical output)");
    common(verify);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (primes->parsed()) return cmd_primes(opt, out);
        if (conic->parsed()) return cmd_conic(opt, out);
        if (permute->parsed()) return cmd_permute(opt, out);
        if (predict_cmd->parsed()) return cmd_predict(opt, out);
        if (orders->parsed()) return cmd_orders(opt, out);
        if (verify->parsed()) return cmd_verify(opt, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return is_usage_error(e) ? kUsage : kVerifyFailed;
    }
    return kUsage;
}

} // namespace hurwitz::cli
