#pragma once

#include "hurwitz/metacomm.hpp"
#include "hurwitz/quaternion.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hurwitz::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

/// Parses "[A,B,C,D]" (doubled coordinates, whitespace allowed).
/// Throws ParseError on malformed text and ParityError on mixed parity.
HurwitzInt parse_quat(std::string_view text);

/// Report record for one metacommutation query:
/// {p, q, Q, sign, predicted_sign, fixed, predicted_fixed, cycle_lengths, pass, ...}.
nlohmann::json permutation_record(const MetaQuery& query);

/// Runs the command line (without the program name), writing to out/err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hurwitz::cli
