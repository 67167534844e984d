#ifndef XIML_SERIES_HPP
#define XIML_SERIES_HPP

#include <string_view>

#include "ximl/precision.hpp"

namespace ximl {

enum class BoundKind { rigorous, heuristic };

inline std::string_view to_string(BoundKind kind) {
  return kind == BoundKind::rigorous ? "rigorous" : "heuristic";
}

/// A value together with how it was truncated and how far it may be off.
template <class T>
struct SeriesResult {
  T value;
  int terms_used = 0;
  Real error_bound{0};
  BoundKind bound_kind = BoundKind::heuristic;
};

}  // namespace ximl

#endif  // XIML_SERIES_HPP
