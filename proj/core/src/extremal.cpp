#include "cyclepow/extremal.hpp"

#include <cassert>
#include <stdexcept>
#include <string>

namespace cyclepow {

namespace {

std::int64_t choose2(std::int64_t k) { return k * (k - 1) / 2; }

void require_k_in_range(const GraphSpec& spec, int k) {
  if (k < 1 || k > spec.n())
    throw std::invalid_argument("k must be in [1, n]");
}

}  // namespace

std::string_view to_string(ExactMethod m) {
  switch (m) {
    case ExactMethod::closed_form: return "closed_form";
    case ExactMethod::interval_count: return "interval_count";
    case ExactMethod::complete_graph: return "complete_graph";
  }
  return "unknown";
}

RegimeFlags regime_flags(const GraphSpec& spec, int k) {
  RegimeFlags f;
  f.complete = spec.is_complete();
  f.strict = spec.strict_regime();
  f.no_wrap = k + spec.s() < spec.n();
  f.clique_interval = k <= spec.s() + 1;
  return f;
}

bool closed_form_applies(const GraphSpec& spec, int k) {
  return k >= spec.s() + 1 && k + spec.s() < spec.n();
}

std::int64_t closed_form(const GraphSpec& spec, int k) {
  if (!closed_form_applies(spec, k))
    throw out_of_regime_error(
        "closed form sk - s(s+1)/2 requires s+1 <= k and k+s < n (n=" +
        std::to_string(spec.n()) + ", k=" + std::to_string(k) +
        ", s=" + std::to_string(spec.s()) + ")");
  const std::int64_t s = spec.s();
  return s * k - s * (s + 1) / 2;
}

ExactResult exact_max(const GraphSpec& spec, int k) {
  require_k_in_range(spec, k);
  if (spec.n() <= spec.s())
    throw out_of_regime_error("exact maximum requires n > s");

  ExactResult res;
  res.regime = regime_flags(spec, k);
  if (spec.is_complete()) {
    res.value = choose2(k);
    res.method = ExactMethod::complete_graph;
  } else if (closed_form_applies(spec, k)) {
    res.value = closed_form(spec, k);
    res.method = ExactMethod::closed_form;
    // self-check: the formula must agree with direct interval counting
    assert(res.value == edge_count(spec, interval(spec, 0, k)));
  } else {
    res.value = edge_count(spec, interval(spec, 0, k));
    res.method = ExactMethod::interval_count;
  }
  return res;
}

std::vector<int> interval_degree_profile(const GraphSpec& spec, int k) {
  require_k_in_range(spec, k);
  if (k + spec.s() >= spec.n())
    throw out_of_regime_error("degree profile requires k + s < n");
  std::vector<int> profile(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i) {
    int deg = 0;
    for (int j = 0; j < k; ++j)
      if (j != i && d_cyclic(i, j, spec.n()) <= spec.s()) ++deg;
    profile[static_cast<std::size_t>(i)] = deg;
  }
  return profile;
}

}  // namespace cyclepow
