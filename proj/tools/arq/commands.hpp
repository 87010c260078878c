#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

namespace arq::cli {

using Json = nlohmann::ordered_json;

enum Exit : int { ok = 0, failed = 1, inconclusive = 2, usage = 64 };

struct Options {
  std::string input;
  std::size_t bound = 25;
  std::size_t radius = 12;
  bool json = false;
  std::string out;
  std::uint64_t seed = 1;
  bool from_injectives = false;
  std::int64_t base = 0;
  bool knit = false;
  std::optional<std::int64_t> arrow;
  std::optional<std::int64_t> from;
  std::optional<std::int64_t> to;
  std::size_t sample = 0;
  std::size_t levels = 6;
};

// Each command fills either `doc` (json mode) or `text`.
struct Result {
  int code = ok;
  Json doc;
  std::string text;
};

Result run_validate(const Options& o);
Result run_mesh(const Options& o);
Result run_knit(const Options& o);
Result run_cover(const Options& o);
Result run_degree(const Options& o);
Result run_finite_type(const Options& o);
Result run_probe(const Options& o);

}  // namespace arq::cli
