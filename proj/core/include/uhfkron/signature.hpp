#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace uhfkron {

/// Factor dimensions (a_1, ..., a_n) of a finite tensor stage M_{a_1} (x) ... (x) M_{a_n}.
/// Every entry is at least 2 and the level n is at least 1.
class Signature {
 public:
  explicit Signature(std::vector<int> dims);
  Signature(std::initializer_list<int> dims) : Signature(std::vector<int>(dims)) {}

  /// Constant sequence (d, d, ..., d) of the given level.
  static Signature constant(int dim, std::size_t level);

  std::size_t level() const noexcept { return dims_.size(); }
  int dim(std::size_t slot) const { return dims_.at(slot); }
  std::span<const int> dims() const noexcept { return dims_; }

  /// Product of all factor dimensions; throws a resource error past `limit`.
  std::size_t total_dim(std::size_t limit) const;
  /// Product of all factor dimensions, saturating at SIZE_MAX.
  std::size_t total_dim() const noexcept;

  /// Entrywise product a.b = (a_1 b_1, ..., a_n b_n); levels must agree.
  Signature operator*(const Signature& other) const;
  /// Concatenation (a_1, ..., a_n, b_1, ..., b_m).
  Signature concat(const Signature& other) const;
  /// Slots [offset, offset + count).
  Signature slice(std::size_t offset, std::size_t count) const;
  /// Signature extended by one trailing factor.
  Signature extended(int next_dim) const;

  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;

 private:
  std::vector<int> dims_;
};

/// Public 1-based index (j_1..j_n ; k_1..k_n) of E_{j_1 k_1} (x) ... (x) E_{j_n k_n}.
struct MatrixUnitIndex {
  std::vector<int> rows;
  std::vector<int> cols;

  friend bool operator==(const MatrixUnitIndex&, const MatrixUnitIndex&) = default;
  friend auto operator<=>(const MatrixUnitIndex&, const MatrixUnitIndex&) = default;
};

/// Internal 0-based form of a matrix-unit index. Ordering is lexicographic on (rows, cols).
struct Unit {
  std::vector<int> rows;
  std::vector<int> cols;

  friend bool operator==(const Unit&, const Unit&) = default;
  friend auto operator<=>(const Unit&, const Unit&) = default;
};

/// Validates `idx` against `sig` and converts to the 0-based form. The error
/// message names the offending factor position (1-based).
Unit to_unit(const Signature& sig, const MatrixUnitIndex& idx);
MatrixUnitIndex to_public(const Unit& unit);

/// Number of matrix units of the stage, prod a_i^2.
std::size_t unit_count(const Signature& sig);

/// Calls `fn(const Unit&)` for every matrix unit of `sig` in lexicographic order.
template <class Fn>
void for_each_unit(const Signature& sig, Fn&& fn) {
  const std::size_t n = sig.level();
  Unit u{std::vector<int>(n, 0), std::vector<int>(n, 0)};
  // Odometer over (rows..., cols...) with the last column slot fastest.
  while (true) {
    fn(static_cast<const Unit&>(u));
    std::size_t pos = 2 * n;
    while (pos > 0) {
      --pos;
      int& digit = pos < n ? u.rows[pos] : u.cols[pos - n];
      const int limit = sig.dim(pos < n ? pos : pos - n);
      if (++digit < limit) break;
      digit = 0;
      if (pos == 0) return;
    }
  }
}

}  // namespace uhfkron
