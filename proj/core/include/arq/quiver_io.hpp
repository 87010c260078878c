#pragma once

#include <istream>
#include <map>
#include <string>

#include "arq/translation_quiver.hpp"

namespace arq {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct QuiverFile {
  TranslationQuiver quiver;
  std::map<VertexId, VertexId> pi_vertices;
  std::map<ArrowId, ArrowId> pi_arrows;
  std::size_t first_translation_line = 0;  // 0 when no t/s line is present
};

QuiverFile parse_quiver(std::istream& in);
QuiverFile parse_quiver_string(const std::string& text);
QuiverFile load_quiver_file(const std::string& path);

std::string serialize(const TranslationQuiver& q);
std::string serialize(const QuiverFile& f);

}  // namespace arq
