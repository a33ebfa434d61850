#include "pentalab/polygon_io.hpp"

#include <fstream>
#include <sstream>

namespace pentalab {

const char* to_string(FieldModel f) { return f == FieldModel::Exact ? "exact" : "float"; }

FieldModel parse_field(std::string_view text) {
  if (text == "exact") return FieldModel::Exact;
  if (text == "float") return FieldModel::Float;
  throw ParseError("unknown field model '" + std::string(text) + "' (expected exact or float)");
}

PolygonFile parse_polygon_file(std::string_view text) {
  PolygonFile file;
  bool have_field = false;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(std::move(w));
    if (words.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (!have_field) {
      if (words.size() != 2 || words[0] != "field") {
        throw ParseError(where + "expected 'field exact' or 'field float'");
      }
      try {
        file.field = parse_field(words[1]);
      } catch (const ParseError& e) {
        throw ParseError(where + e.what());
      }
      have_field = true;
      continue;
    }
    if (words.size() != 3) throw ParseError(where + "expected three homogeneous coordinates");
    file.rows.push_back({words[0], words[1], words[2]});
  }
  if (!have_field) throw ParseError("missing 'field' line");
  if (file.rows.size() < 4) {
    throw ParseError("polygon needs at least 4 vertices, got " + std::to_string(file.rows.size()));
  }
  // Validate every literal against the declared model.
  try {
    if (file.field == FieldModel::Exact) {
      (void)file.polygon<QSqrt5>();
    } else {
      (void)file.polygon<double>();
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  } catch (const DegenerateError& e) {
    throw ParseError(e.what());
  }
  return file;
}

PolygonFile read_polygon_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_polygon_file(buf.str());
}

}  // namespace pentalab
