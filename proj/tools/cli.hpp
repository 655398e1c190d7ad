#ifndef FOURSQ_TOOLS_CLI_HPP
#define FOURSQ_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include <foursq/report.hpp>

namespace foursq::cli {

inline constexpr int exit_pass = 0;
inline constexpr int exit_fail = 1;
inline constexpr int exit_usage = 2;

enum class Format { plain, json };

/// Report object: subject, status, checked_order, params, first_discrepancy (or null), note.
nlohmann::json to_json(const VerificationReport &r);

/// One line per report; a pure function of the JSON form.
std::string render_plain(const nlohmann::json &report);

/// Runs the tool with argv-style arguments (args[0] is the program name).
/// Reports stream to out as they complete; diagnostics go to err.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace foursq::cli

#endif
