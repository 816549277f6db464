#ifndef CYCLEPOW_EXTREMAL_HPP
#define CYCLEPOW_EXTREMAL_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "cyclepow/cycle.hpp"

namespace cyclepow {

enum class ExactMethod {
  closed_form,     // sk - s(s+1)/2
  interval_count,  // direct edge count of a k-interval
  complete_graph,  // C(k, 2), every pair adjacent
};

std::string_view to_string(ExactMethod m);

/// Which structural regimes hold for a given (n, k, s).
struct RegimeFlags {
  bool complete = false;         // s >= floor(n/2): the graph is K_n
  bool strict = false;           // n >= 2s + 2
  bool no_wrap = false;          // k + s < n: interval does not reach around
  bool clique_interval = false;  // k <= s + 1: a k-interval is a clique

  friend bool operator==(const RegimeFlags&, const RegimeFlags&) = default;
};

RegimeFlags regime_flags(const GraphSpec& spec, int k);

struct ExactResult {
  std::int64_t value = 0;
  ExactMethod method = ExactMethod::interval_count;
  RegimeFlags regime;
};

/// True iff closed_form() is defined: s + 1 <= k and k + s < n.
bool closed_form_applies(const GraphSpec& spec, int k);

/// The exact maximum sk - s(s+1)/2, in exact integer arithmetic.
/// Requires s + 1 <= k and k + s < n (at k = s + 1 the value coincides with
/// the clique count C(k, 2)); otherwise throws out_of_regime_error.
std::int64_t closed_form(const GraphSpec& spec, int k);

/// Exact maximum number of edges induced by any k-subset, always attained by
/// an interval of k consecutive vertices. Dispatches to the closed form when
/// it applies, otherwise counts interval edges directly. Requires 1 <= k <= n
/// and n > s.
ExactResult exact_max(const GraphSpec& spec, int k);

/// Degree of each vertex of interval(spec, 0, k) within that interval,
/// indexed by offset. Requires k + s < n.
///
/// For k >= 2s the profile is s, s+1, ..., 2s-1, then 2s repeated, mirrored
/// at the right end; for k < 2s the outer k-s entries on each side are
/// s, s+1, ..., k-1 and the middle 2s-k entries are all k-1. Half the sum is
/// the closed-form value whenever both are defined.
std::vector<int> interval_degree_profile(const GraphSpec& spec, int k);

}  // namespace cyclepow

#endif  // CYCLEPOW_EXTREMAL_HPP
