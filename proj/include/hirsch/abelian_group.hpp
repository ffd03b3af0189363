#pragma once

#include "hirsch/linalg.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hirsch {

/// A finitely generated abelian group Z^rank + Z/d_1 + ... + Z/d_k with
/// d_1 | d_2 | ... | d_k and every d_i >= 2. The form is canonical, so group
/// isomorphism is plain equality.
class FGAbelianGroup {
 public:
  FGAbelianGroup() = default;

  /// Any list of cyclic orders; zeros count as free summands, ones vanish.
  static FGAbelianGroup from_cyclic(Index rank, std::vector<Integer> orders);
  static FGAbelianGroup free(Index rank) { return from_cyclic(rank, {}); }
  static FGAbelianGroup cyclic(const Integer& order) { return from_cyclic(0, {order}); }

  /// Parses "0", "Z", "Z^3", "Z/4", "Z^2+Z/2+Z/6" (summands in any order).
  static FGAbelianGroup parse(std::string_view text);

  [[nodiscard]] Index rank() const { return rank_; }
  [[nodiscard]] const std::vector<Integer>& torsion() const { return torsion_; }
  [[nodiscard]] bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }
  [[nodiscard]] bool is_torsion_free() const { return torsion_.empty(); }
  /// Number of generators of the canonical presentation (free ones first).
  [[nodiscard]] Index generator_count() const {
    return rank_ + static_cast<Index>(torsion_.size());
  }
  /// Order of canonical generator i, 0 for free generators.
  [[nodiscard]] Integer generator_order(Index i) const;

  [[nodiscard]] std::string to_string() const;

  friend FGAbelianGroup operator+(const FGAbelianGroup& a, const FGAbelianGroup& b);
  friend bool operator==(const FGAbelianGroup&, const FGAbelianGroup&) = default;

 private:
  Index rank_ = 0;
  std::vector<Integer> torsion_;
};

}  // namespace hirsch
