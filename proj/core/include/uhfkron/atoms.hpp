#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uhfkron/states.hpp"

namespace uhfkron {

/// Label J = (j_1, j_2, ...) in {1..n}^infinity, stored as a finite prefix plus an
/// optional constant tail that continues it indefinitely.
class AtomLabel {
 public:
  AtomLabel(int base, std::vector<int> prefix, std::optional<int> tail = std::nullopt);

  int base() const noexcept { return base_; }
  const std::vector<int>& prefix() const noexcept { return prefix_; }
  std::optional<int> tail() const noexcept { return tail_; }

  /// Number of defined entries; nullopt when a tail makes the label unbounded.
  std::optional<std::size_t> defined_length() const noexcept;
  bool defined_up_to(std::size_t level) const noexcept;
  /// Entry j_l for 1-based position l.
  int at(std::size_t position) const;

  friend bool operator==(const AtomLabel&, const AtomLabel&) = default;

 private:
  int base_;
  std::vector<int> prefix_;
  std::optional<int> tail_;
};

/// T(J) = (F_{j_1}, ..., F_{j_level}) with F_j = E_jj over the constant signature (n, ..., n).
ProductState atom_state(const AtomLabel& label, std::size_t level);

/// J.K = (m(j_1 - 1) + k_1, m(j_2 - 1) + k_2, ...) in base n m.
AtomLabel atom_label_product(const AtomLabel& j, const AtomLabel& k);

struct AtomCheck {
  bool ok = true;
  std::size_t units_checked = 0;
  std::string diagnostic;
};

/// Verifies T(J) [x] T(K) = T(J.K) factor by factor (exact) and that
/// omega_{T(J)} (x)_phi omega_{T(K)} agrees with omega_{T(J.K)} on every matrix unit.
AtomCheck atom_check_product(const AtomLabel& j, const AtomLabel& k, std::size_t level);

/// Same check against an explicitly supplied product label.
AtomCheck atom_check_product(const AtomLabel& j, const AtomLabel& k, const AtomLabel& claimed, std::size_t level);

}  // namespace uhfkron
