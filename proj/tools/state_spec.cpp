#include "state_spec.hpp"

#include <charconv>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "uhfkron/error.hpp"

namespace uhfkron::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = s.find(sep, start);
    out.push_back(trim(s.substr(start, at == std::string_view::npos ? std::string_view::npos : at - start)));
    if (at == std::string_view::npos) return out;
    start = at + 1;
  }
}

template <class T>
T parse_number(std::string_view text, const char* what) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  T value{};
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    throw Error(ErrorCode::parse, std::string("malformed ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

Complex json_entry(const nlohmann::json& e) {
  if (e.is_number()) return {e.get<double>(), 0.0};
  if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    return {e[0].get<double>(), e[1].get<double>()};
  }
  if (e.is_object() && e.contains("re")) return {e.at("re").get<double>(), e.value("im", 0.0)};
  throw Error(ErrorCode::parse, "matrix entry must be a number, [re, im] or {\"re\", \"im\"}");
}

std::vector<DensityFactor> load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::validation, "cannot open state file '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::parse, "state file '" + path + "': " + e.what());
  }
  if (!doc.is_array() || doc.empty()) {
    throw Error(ErrorCode::parse, "state file '" + path + "' must hold a non-empty array of matrices");
  }
  std::vector<DensityFactor> out;
  for (const auto& m : doc) {
    if (!m.is_array() || m.empty()) throw Error(ErrorCode::parse, "each matrix must be a non-empty array of rows");
    const auto dim = static_cast<Eigen::Index>(m.size());
    DenseMatrix mat(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
      const auto& row = m[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
        throw Error(ErrorCode::parse, "matrix rows must have length " + std::to_string(dim));
      }
      for (Eigen::Index c = 0; c < dim; ++c) mat(r, c) = json_entry(row[static_cast<std::size_t>(c)]);
    }
    out.emplace_back(std::move(mat));
  }
  return out;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (std::string_view part : split(text, ',')) out.push_back(parse_number<int>(part, "integer"));
  return out;
}

ProductState parse_state_spec(std::string_view text, std::optional<std::size_t> level) {
  std::vector<DensityFactor> factors;
  for (std::string_view part : split(text, ';')) {
    if (part.starts_with("file:")) {
      auto loaded = load_file(std::string(trim(part.substr(5))));
      for (auto& f : loaded) factors.push_back(std::move(f));
    } else if (part.starts_with("diag(") && part.ends_with(")")) {
      std::vector<double> weights;
      for (std::string_view w : split(part.substr(5, part.size() - 6), ',')) {
        weights.push_back(parse_number<double>(w, "diagonal weight"));
      }
      factors.push_back(DensityFactor::diagonal(weights));
    } else {
      throw Error(ErrorCode::parse, "state factor '" + std::string(part) + "' is neither diag(...) nor file:PATH");
    }
  }
  if (level) {
    if (*level == 0) throw Error(ErrorCode::validation, "level must be >= 1");
    if (factors.size() == 1) {
      factors.resize(*level, factors.front());
    } else if (factors.size() != *level) {
      throw Error(ErrorCode::validation, "state has " + std::to_string(factors.size()) + " factors, expected " +
                                             std::to_string(*level));
    }
  }
  return ProductState(std::move(factors));
}

}  // namespace uhfkron::cli
