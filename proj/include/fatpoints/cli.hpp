#pragma once

#include "fatpoints/exact_linalg.hpp"
#include "fatpoints/interpolation.hpp"
#include "fatpoints/monomial_ideal.hpp"
#include "fatpoints/projective.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fatpoints::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Malformed or invalid input files. `details` holds one entry per problem.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, std::vector<std::string> details = {})
      : std::runtime_error(what), details_(std::move(details)) {}
  const std::vector<std::string>& details() const { return details_; }

 private:
  std::vector<std::string> details_;
};

/// Point file: {"N": int, "points": [[str, ...], ...], "label": optional str}.
PointConfig parse_points_text(const std::string& text, const std::string& source = "<input>");
PointConfig parse_points_file(const std::string& path);

/// Hyperplane file: {"N": int, "hyperplanes": [[str, ...], ...]}.
std::vector<Hyperplane> parse_hyperplanes_text(const std::string& text,
                                               const std::string& source = "<input>");

/// Monomial ideal file: {"variables": [str, ...], "generators": [[int, ...] | str, ...]}.
MonomialIdeal parse_ideal_text(const std::string& text, const std::string& source = "<input>");

nlohmann::ordered_json point_config_json(const PointConfig& cfg);

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  std::optional<unsigned> m;
  std::optional<unsigned> m_max;
  std::optional<unsigned> s_max;
  std::optional<unsigned> d_max;
  std::optional<std::uint64_t> seed;
  std::vector<std::uint64_t> seeds;
  std::optional<std::size_t> n;
  std::optional<std::size_t> dim;
  unsigned height = 10;
  RankStrategy strategy = RankStrategy::multimodular_certify;
  ConditionsMode mode = ConditionsMode::affine;
  std::string format = "json";
};

enum ExitCode : int {
  kComputed = 0,
  kInputError = 1,
  kInternalFailure = 2,
  kUncertified = 3,
};

struct RunOutcome {
  int exit_code = kComputed;
  /// JSON or CSV report; on failure a JSON document with an "error" field.
  std::string document;
  std::string error;
};

const std::vector<std::string>& commands();

RunOutcome run(const RunConfig& cfg);

}  // namespace fatpoints::cli
