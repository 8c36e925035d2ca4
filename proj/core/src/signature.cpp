#include "uhfkron/signature.hpp"

#include <limits>
#include <sstream>

#include "uhfkron/error.hpp"

namespace uhfkron {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::validation:
      return "validation_error";
    case ErrorCode::signature_mismatch:
      return "signature_mismatch";
    case ErrorCode::resource:
      return "resource_error";
    case ErrorCode::parse:
      return "parse_error";
    case ErrorCode::consistency:
      return "consistency_error";
  }
  return "unknown_error";
}

ParseError::ParseError(const std::string& what, int line, int column)
    : Error(ErrorCode::parse,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

Signature::Signature(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw Error(ErrorCode::validation, "signature must have level >= 1");
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    if (dims_[i] < 2) {
      throw Error(ErrorCode::validation, "signature factor " + std::to_string(i + 1) + " has dimension " +
                                             std::to_string(dims_[i]) + " < 2");
    }
  }
}

Signature Signature::constant(int dim, std::size_t level) { return Signature(std::vector<int>(level, dim)); }

std::size_t Signature::total_dim() const noexcept {
  std::size_t total = 1;
  for (int d : dims_) {
    const auto ud = static_cast<std::size_t>(d);
    if (total > std::numeric_limits<std::size_t>::max() / ud) return std::numeric_limits<std::size_t>::max();
    total *= ud;
  }
  return total;
}

std::size_t Signature::total_dim(std::size_t limit) const {
  const std::size_t total = total_dim();
  if (total > limit) {
    throw Error(ErrorCode::resource, "total dimension of " + to_string() + " exceeds the dense guard " +
                                         std::to_string(limit));
  }
  return total;
}

Signature Signature::operator*(const Signature& other) const {
  if (level() != other.level()) {
    throw Error(ErrorCode::signature_mismatch,
                "entrywise product needs equal levels: " + to_string() + " vs " + other.to_string());
  }
  std::vector<int> out(level());
  for (std::size_t i = 0; i < level(); ++i) out[i] = dims_[i] * other.dims_[i];
  return Signature(std::move(out));
}

Signature Signature::concat(const Signature& other) const {
  std::vector<int> out(dims_);
  out.insert(out.end(), other.dims_.begin(), other.dims_.end());
  return Signature(std::move(out));
}

Signature Signature::slice(std::size_t offset, std::size_t count) const {
  if (count == 0 || offset + count > level()) {
    throw Error(ErrorCode::validation, "slice [" + std::to_string(offset) + ", " + std::to_string(offset + count) +
                                           ") out of range for " + to_string());
  }
  return Signature(std::vector<int>(dims_.begin() + static_cast<std::ptrdiff_t>(offset),
                                    dims_.begin() + static_cast<std::ptrdiff_t>(offset + count)));
}

Signature Signature::extended(int next_dim) const {
  std::vector<int> out(dims_);
  out.push_back(next_dim);
  return Signature(std::move(out));
}

std::string Signature::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < dims_.size(); ++i) os << (i ? "," : "") << dims_[i];
  os << ')';
  return os.str();
}

Unit to_unit(const Signature& sig, const MatrixUnitIndex& idx) {
  const std::size_t n = sig.level();
  if (idx.rows.size() != n || idx.cols.size() != n) {
    throw Error(ErrorCode::validation, "matrix-unit index has " + std::to_string(idx.rows.size()) + " rows and " +
                                           std::to_string(idx.cols.size()) + " cols, expected level " +
                                           std::to_string(n));
  }
  Unit u{std::vector<int>(n), std::vector<int>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const int d = sig.dim(i);
    if (idx.rows[i] < 1 || idx.rows[i] > d) {
      throw Error(ErrorCode::validation, "row index " + std::to_string(idx.rows[i]) + " at factor " +
                                             std::to_string(i + 1) + " out of range 1.." + std::to_string(d));
    }
    if (idx.cols[i] < 1 || idx.cols[i] > d) {
      throw Error(ErrorCode::validation, "column index " + std::to_string(idx.cols[i]) + " at factor " +
                                             std::to_string(i + 1) + " out of range 1.." + std::to_string(d));
    }
    u.rows[i] = idx.rows[i] - 1;
    u.cols[i] = idx.cols[i] - 1;
  }
  return u;
}

MatrixUnitIndex to_public(const Unit& unit) {
  MatrixUnitIndex idx{unit.rows, unit.cols};
  for (int& r : idx.rows) ++r;
  for (int& c : idx.cols) ++c;
  return idx;
}

std::size_t unit_count(const Signature& sig) {
  std::size_t total = 1;
  for (int d : sig.dims()) total *= static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
  return total;
}

}  // namespace uhfkron
