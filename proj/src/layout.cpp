#include "nogosig/layout.hpp"

#include <unordered_set>

#include "nogosig/errors.hpp"

namespace nogosig {

const char* to_string(Party p) {
  switch (p) {
    case Party::Alice: return "ALICE";
    case Party::Bob: return "BOB";
    case Party::None: return "NONE";
  }
  return "?";
}

const char* to_string(Role r) {
  switch (r) {
    case Role::Original: return "ORIGINAL";
    case Role::Program: return "PROGRAM";
    case Role::Blank: return "BLANK";
    case Role::Control: return "CONTROL";
    case Role::Generic: return "GENERIC";
  }
  return "?";
}

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LayoutLabelClash: return "LAYOUT_LABEL_CLASH";
    case ErrorCode::DimMismatch: return "DIM_MISMATCH";
    case ErrorCode::ZeroState: return "ZERO_STATE";
    case ErrorCode::UnknownFactor: return "UNKNOWN_FACTOR";
    case ErrorCode::BadPermutation: return "BAD_PERMUTATION";
    case ErrorCode::BadOverlap: return "BAD_OVERLAP";
    case ErrorCode::DegeneratePair: return "DEGENERATE_PAIR";
    case ErrorCode::DegenerateSpec: return "DEGENERATE_SPEC";
    case ErrorCode::OutsideSpan: return "OUTSIDE_SPAN";
    case ErrorCode::Usage: return "USAGE";
  }
  return "?";
}

SubsystemLayout::SubsystemLayout(std::vector<Factor> factors)
    : factors_(std::move(factors)) {
  std::unordered_set<std::string_view> seen;
  for (const Factor& f : factors_) {
    if (f.dim < 1) {
      throw Error(ErrorCode::DimMismatch,
                  "factor '" + f.label + "' has dimension 0");
    }
    if (!seen.insert(f.label).second) {
      throw Error(ErrorCode::LayoutLabelClash,
                  "duplicate factor label '" + f.label + "'");
    }
  }
  strides_.assign(factors_.size(), 1);
  total_dim_ = 1;
  for (std::size_t i = factors_.size(); i-- > 0;) {
    strides_[i] = total_dim_;
    total_dim_ *= factors_[i].dim;
  }
}

std::optional<std::size_t> SubsystemLayout::position_of(
    std::string_view label) const {
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i].label == label) {
      return i;
    }
  }
  return std::nullopt;
}

bool SubsystemLayout::has_label(std::string_view label) const {
  return position_of(label).has_value();
}

std::vector<std::size_t> SubsystemLayout::decode(std::size_t index) const {
  std::vector<std::size_t> digits(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    digits[i] = (index / strides_[i]) % factors_[i].dim;
  }
  return digits;
}

std::size_t SubsystemLayout::encode(std::span<const std::size_t> digits) const {
  std::size_t index = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    index += digits[i] * strides_[i];
  }
  return index;
}

SubsystemLayout SubsystemLayout::concat(const SubsystemLayout& a,
                                        const SubsystemLayout& b) {
  std::vector<Factor> merged = a.factors_;
  for (const Factor& f : b.factors_) {
    if (a.has_label(f.label)) {
      throw Error(ErrorCode::LayoutLabelClash,
                  "label '" + f.label + "' present in both layouts");
    }
    merged.push_back(f);
  }
  return SubsystemLayout(std::move(merged));
}

bool SubsystemLayout::operator==(const SubsystemLayout& other) const {
  if (factors_.size() != other.factors_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const Factor& x = factors_[i];
    const Factor& y = other.factors_[i];
    if (x.label != y.label || x.dim != y.dim || x.party != y.party ||
        x.role != y.role) {
      return false;
    }
  }
  return true;
}

SubsystemLayout single_factor(std::string label, std::size_t dim, Party party,
                              Role role) {
  return SubsystemLayout({Factor{std::move(label), dim, party, role}});
}

} // namespace nogosig
