#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nogosig {

enum class Party { Alice, Bob, None };
enum class Role { Original, Program, Blank, Control, Generic };

const char* to_string(Party p);
const char* to_string(Role r);

struct Factor {
  std::string label;
  std::size_t dim = 1;
  Party party = Party::None;
  Role role = Role::Generic;
};

/// Ordered factorization of a finite-dimensional Hilbert space.
///
/// Composite basis indices are lexicographic with the FIRST factor most
/// significant: index = sum_k digit[k] * stride[k], where stride[k] is the
/// product of the dims of all later factors. An empty layout describes the
/// one-dimensional (scalar) space.
class SubsystemLayout {
public:
  SubsystemLayout() = default;
  explicit SubsystemLayout(std::vector<Factor> factors);

  std::size_t total_dim() const { return total_dim_; }
  std::size_t factor_count() const { return factors_.size(); }
  const Factor& factor(std::size_t i) const { return factors_.at(i); }
  const std::vector<Factor>& factors() const { return factors_; }

  /// Weight of factor i in the composite index.
  std::size_t stride(std::size_t i) const { return strides_.at(i); }

  std::optional<std::size_t> position_of(std::string_view label) const;
  bool has_label(std::string_view label) const;

  /// Digits of a composite index, one per factor.
  std::vector<std::size_t> decode(std::size_t index) const;
  std::size_t encode(std::span<const std::size_t> digits) const;

  /// Concatenation; throws LayoutLabelClash when the label sets intersect.
  static SubsystemLayout concat(const SubsystemLayout& a,
                                const SubsystemLayout& b);

  bool operator==(const SubsystemLayout& other) const;

private:
  std::vector<Factor> factors_;
  std::vector<std::size_t> strides_;
  std::size_t total_dim_ = 1;
};

/// Shorthand for a layout consisting of a single factor.
SubsystemLayout single_factor(std::string label, std::size_t dim,
                              Party party = Party::None,
                              Role role = Role::Generic);

} // namespace nogosig
