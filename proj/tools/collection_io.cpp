#include "collection_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "ecc/error.hpp"

namespace ecc::io {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view field, double& out) {
  field = trim(field);
  if (field.empty()) return false;
  if (field.front() == '+') field.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc() && ptr == field.data() + field.size();
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  fail(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

UnitVectorCollection parse_collection_csv(std::string_view text, bool renormalize) {
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  std::size_t width = 0;
  bool seen_content = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    const auto line = trim(text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
    ++line_no;
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    if (line.empty() || line.front() == '#') continue;

    const auto fields = split(line, ',');
    std::vector<double> row(fields.size());
    bool numeric = true;
    for (std::size_t i = 0; i < fields.size(); ++i) numeric = numeric && parse_double(fields[i], row[i]);
    if (!numeric) {
      if (!seen_content) {  // header
        seen_content = true;
        continue;
      }
      parse_error(line_no, "expected numeric values, got '" + std::string(line) + "'");
    }
    seen_content = true;
    if (width == 0) width = row.size();
    if (row.size() != width)
      parse_error(line_no, "expected " + std::to_string(width) + " values, got " + std::to_string(row.size()));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) fail(ErrorKind::Parse, "no vectors found");

  Eigen::MatrixXd x(static_cast<Eigen::Index>(width), static_cast<Eigen::Index>(rows.size()));
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (std::size_t i = 0; i < width; ++i) x(i, j) = rows[j][i];
  return UnitVectorCollection::real(std::move(x), {}, renormalize);
}

UnitVectorCollection parse_collection_json(std::string_view text, bool renormalize) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vectors") || !doc["vectors"].is_array())
    fail(ErrorKind::Parse, "JSON collection needs a \"vectors\" array");
  const std::string field = doc.value("field", std::string("real"));
  if (field != "real" && field != "complex")
    fail(ErrorKind::Parse, "field must be \"real\" or \"complex\"");
  const auto& vectors = doc["vectors"];
  if (vectors.empty()) fail(ErrorKind::Parse, "no vectors found");

  const std::size_t m = vectors.size();
  const std::size_t n = vectors[0].is_array() ? vectors[0].size() : 0;
  Eigen::VectorXd weights;
  if (doc.contains("weights")) {
    const auto& w = doc["weights"];
    if (!w.is_array()) fail(ErrorKind::Parse, "weights must be an array");
    weights.resize(static_cast<Eigen::Index>(w.size()));
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!w[i].is_number()) fail(ErrorKind::Parse, "weight " + std::to_string(i) + " is not a number");
      weights(static_cast<Eigen::Index>(i)) = w[i].get<double>();
    }
  }

  auto check_row = [&](std::size_t j) -> const nlohmann::json& {
    const auto& v = vectors[j];
    if (!v.is_array() || v.size() != n || n == 0)
      fail(ErrorKind::Parse, "vector " + std::to_string(j) + " must be an array of " + std::to_string(n) + " entries");
    return v;
  };

  if (field == "real") {
    Eigen::MatrixXd x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
    for (std::size_t j = 0; j < m; ++j) {
      const auto& v = check_row(j);
      for (std::size_t i = 0; i < n; ++i) {
        if (!v[i].is_number())
          fail(ErrorKind::Parse, "vector " + std::to_string(j) + " entry " + std::to_string(i) + " is not a number");
        x(i, j) = v[i].get<double>();
      }
    }
    return UnitVectorCollection::real(std::move(x), std::move(weights), renormalize);
  }
  Eigen::MatrixXcd z(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
  for (std::size_t j = 0; j < m; ++j) {
    const auto& v = check_row(j);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& e = v[i];
      if (e.is_number()) {
        z(i, j) = e.get<double>();
      } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        z(i, j) = {e[0].get<double>(), e[1].get<double>()};
      } else {
        fail(ErrorKind::Parse, "vector " + std::to_string(j) + " entry " + std::to_string(i) +
                                   " must be a number or an [re, im] pair");
      }
    }
  }
  return UnitVectorCollection::complex(std::move(z), std::move(weights), renormalize);
}

UnitVectorCollection parse_collection(std::string_view text, bool renormalize) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_collection_json(text, renormalize);
  return parse_collection_csv(text, renormalize);
}

std::string read_input(const std::string& path, std::istream& stdin_stream) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << stdin_stream.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) fail(ErrorKind::Parse, "cannot open '" + path + "'");
  buffer << file.rdbuf();
  return buffer.str();
}

}  // namespace ecc::io
