#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "iterroot/field.hpp"

namespace iterroot::api {

using json = nlohmann::ordered_json;

struct Options {
    bool exact = true;
    Tolerance tol{};
    unsigned long long seed = 1;
};

// Each command returns a stable machine-readable record ("command", "mode",
// then command-specific keys such as degree/count/roots/beta/residuals).
// Inputs are text in the polynomial/field syntax of io.hpp. Mathematical
// failures raise MathError subclasses; bad syntax raises ParseError.

json iterate_cmd(const std::string& poly, unsigned n, const Options& opt);
json compose_cmd(const std::string& f, const std::string& g, const Options& opt);
json sqrt_cmd(const std::string& quartic, const Options& opt);
json classify_cmd(const std::string& quartic, const Options& opt);
json curve_cmd(const std::string& beta, const Options& opt);
json solve_cmd(const std::string& poly, std::optional<unsigned> deg, std::optional<unsigned> order,
               const Options& opt);
json linroot_cmd(const std::string& a, const std::string& b, unsigned order, const Options& opt);
json normalize_cmd(const std::string& poly, const Options& opt);
json verify_cmd();
json selftest_cmd(const Options& opt);

/// Human-oriented rendering of a command record (not stability-guaranteed).
std::string render_text(const json& result);

/// True when the record reports a mathematical obstruction (failed degree
/// gate or an explicitly labeled no-roots obstruction).
bool has_obstruction(const json& result);

}  // namespace iterroot::api
