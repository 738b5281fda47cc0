#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace shl {

/// A signature: weakly decreasing list of nonnegative integer parts
/// (possibly empty), with a multiplicity view mult(i) = #{k : parts[k] == i}.
class Signature {
 public:
  Signature() = default;
  /// Throws std::invalid_argument unless parts are weakly decreasing and >= 0.
  explicit Signature(std::vector<int> parts);

  /// Parse "[6,4,4,3,2,2,0]"; "[]" is the empty signature.
  static Signature parse(const std::string& text);
  std::string str() const;

  int size() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_[i]; }
  const std::vector<int>& parts() const { return parts_; }

  /// Largest part (0 for the empty signature).
  int max_part() const { return parts_.empty() ? 0 : parts_.front(); }

  /// Multiplicity of the value `i`.
  int mult(int i) const;

  /// (value, multiplicity) pairs with positive multiplicity, ascending value.
  std::vector<std::pair<int, int>> multiplicities() const;

  bool all_multiplicities_even() const;

  /// Sum of parts |lambda|.
  long weight() const;

  bool operator==(const Signature& o) const { return parts_ == o.parts_; }
  bool operator!=(const Signature& o) const { return parts_ != o.parts_; }
  bool operator<(const Signature& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;
};

/// One-row reachability: true iff nu has exactly one more part than mu and
/// nu_1 >= mu_1 >= nu_2 >= mu_2 >= ... >= mu_k >= nu_{k+1} >= 0.
bool interlace_up(const Signature& mu, const Signature& nu);

/// All signatures with exactly `num_parts` parts (zeros counted), every
/// multiplicity even, and largest part <= max_part, in lexicographically
/// decreasing order. Throws std::invalid_argument for odd num_parts.
/// The count is C(max_part + num_parts/2, num_parts/2).
std::vector<Signature> enumerate_even(int num_parts, int max_part);

/// All signatures with exactly `num_parts` parts (zeros counted) and largest
/// part <= max_part, in lexicographically decreasing order. The count is
/// C(max_part + num_parts, num_parts).
std::vector<Signature> enumerate_bounded(int num_parts, int max_part);

/// The unique even-multiplicity nu with interlace_up(mu, nu), which exists
/// exactly when mu has an odd number of parts; std::nullopt otherwise.
/// Closed form: repeat each odd-indexed part (1-based) of mu twice.
std::optional<Signature> even_closure_up(const Signature& mu);

/// The unique even-multiplicity nu with interlace_up(nu, mu), which exists
/// exactly when mu has an odd number of parts; std::nullopt otherwise.
/// Closed form: repeat each even-indexed part (1-based) of mu twice.
std::optional<Signature> even_closure_down(const Signature& mu);

}  // namespace shl
