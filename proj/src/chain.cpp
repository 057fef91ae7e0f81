#include "olog/chain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "olog/error.hpp"

namespace olog {

std::string_view to_string(BlockKind k) {
  switch (k) {
    case BlockKind::Brick: return "brick";
    case BlockKind::Glue: return "glue";
    case BlockKind::Lifeline: return "lifeline";
  }
  return "?";
}

std::string_view to_string(Domain d) { return d == Domain::Protein ? "protein" : "social"; }

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Brittle: return "Brittle";
    case Classification::Ductile: return "Ductile";
    case Classification::Neither: return "Neither";
  }
  return "?";
}

bool ChainSystem::has_lifelines() const {
  return !segments.empty() &&
         std::all_of(segments.begin(), segments.end(),
                     [](const Segment& s) { return s.lifeline.has_value(); });
}

namespace {

void check_block(const BuildingBlock& b, BlockKind expected) {
  if (b.kind != expected) {
    throw OlogError(codes::kInvalidChain, "block " + b.id + " is a " +
                                              std::string(to_string(b.kind)) + " in a " +
                                              std::string(to_string(expected)) + " slot");
  }
  if (std::isnan(b.failure_extension) || std::isnan(b.resting_extension) ||
      b.failure_extension < 0 || b.resting_extension < 0 || std::isinf(b.resting_extension)) {
    throw OlogError(codes::kInvalidChain, "block " + b.id + " has an invalid extension");
  }
  if (b.failure_extension < b.resting_extension) {
    throw OlogError(codes::kInvalidChain, "block " + b.id + " fails before reaching rest length");
  }
}

}  // namespace

void validate_chain(const ChainSystem& chain) {
  if (chain.bricks.empty()) throw OlogError(codes::kInvalidChain, "chain has no bricks");
  if (chain.segments.size() + 1 != chain.bricks.size()) {
    throw OlogError(codes::kInvalidChain, "need one segment between each pair of bricks");
  }
  for (const auto& b : chain.bricks) check_block(b, BlockKind::Brick);
  for (const auto& s : chain.segments) {
    check_block(s.glue, BlockKind::Glue);
    if (s.lifeline) check_block(*s.lifeline, BlockKind::Lifeline);
  }
}

void validate_comparators(const Comparators& c) {
  if (!(c.eps_rel > 0 && c.eps_rel < 1)) {
    throw OlogError(codes::kParamConstraint, "eps-rel must lie in (0, 1)");
  }
  if (!(c.kappa > 1) || std::isinf(c.kappa)) {
    throw OlogError(codes::kParamConstraint, "kappa must be a finite number above 1");
  }
}

bool roughly_equal(double R, double r, const Comparators& c) {
  if (!std::isfinite(R) || !std::isfinite(r)) {
    throw OlogError(codes::kNonfiniteInput, "roughly_equal needs finite arguments");
  }
  return std::abs(R - r) <= c.eps_rel * std::max(std::abs(R), std::abs(r));
}

bool much_greater(double R, double r, const Comparators& c) {
  if (!std::isfinite(r) || r < 0) {
    throw OlogError(codes::kNonfiniteSmall, "much_greater needs a finite, nonnegative r");
  }
  if (std::isnan(R)) throw OlogError(codes::kNonfiniteInput, "much_greater got NaN");
  if (R == std::numeric_limits<double>::infinity()) return true;
  if (r == 0) return R > 0;
  return R > 0 && R >= c.kappa * r;
}

Graph structure_graph(const ChainSystem& chain, Connector connector) {
  validate_chain(chain);
  Graph g;
  g.nodes.insert(chain.bricks.front().id);
  for (std::size_t i = 0; i < chain.segments.size(); ++i) {
    if (connector == Connector::Lifeline && !chain.segments[i].lifeline) {
      throw OlogError(codes::kNoLifeline, "segment " + std::to_string(i + 1) + " has no lifeline");
    }
    g.add_edge(chain.bricks[i].id, chain.bricks[i + 1].id);
  }
  return g;
}

double system_failure_extension(const ChainSystem& chain) {
  validate_chain(chain);
  double out = std::numeric_limits<double>::infinity();
  for (const auto& b : chain.bricks) out = std::min(out, b.failure_extension);
  for (const auto& s : chain.segments) {
    double threshold = s.glue.failure_extension;
    if (s.lifeline) threshold = std::max(threshold, s.lifeline->failure_extension);
    out = std::min(out, threshold);
  }
  return out;
}

double glue_failure_extension(const ChainSystem& chain) {
  validate_chain(chain);
  if (chain.segments.empty()) throw OlogError(codes::kInvalidChain, "chain has no glue");
  double out = std::numeric_limits<double>::infinity();
  for (const auto& s : chain.segments) out = std::min(out, s.glue.failure_extension);
  return out;
}

Classification classify(const ChainSystem& chain, const Comparators& c) {
  const double fs = system_failure_extension(chain);
  const double fg = glue_failure_extension(chain);
  const bool ductile = much_greater(fs, fg, c);
  const bool brittle = std::isfinite(fs) && std::isfinite(fg) && roughly_equal(fs, fg, c);
  if (ductile && brittle) {
    throw OlogError(codes::kInconsistentComparators,
                    "system is both much greater than and roughly equal to its glue");
  }
  if (ductile) return Classification::Ductile;
  if (brittle) return Classification::Brittle;
  return Classification::Neither;
}

namespace {

void check_noise_args(double tau, int L) {
  if (!(tau > 0 && tau <= 1)) throw OlogError(codes::kDomain, "tau must lie in (0, 1]");
  if (L < 1) throw OlogError(codes::kDomain, "message length must be positive");
}

}  // namespace

double link_failure_noise(double tau, int L) {
  check_noise_args(tau, L);
  return -std::expm1(std::log(tau) / L);
}

double estimate_link_failure_noise_mc(int L, double tau, std::int64_t trials, std::uint64_t seed) {
  check_noise_args(tau, L);
  if (trials < 10'000) throw OlogError(codes::kDomain, "need at least 10^4 trials");

  // A message survives noise p iff every letter's uniform draw clears p,
  // i.e. iff the smallest draw does. One draw of the minimum per trial,
  // reused across the bisection (common random numbers keep it monotone).
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> minima(static_cast<std::size_t>(trials));
  for (auto& m : minima) {
    double lo = 1.0;
    for (int i = 0; i < L; ++i) lo = std::min(lo, unit(rng));
    m = lo;
  }
  std::sort(minima.begin(), minima.end());

  auto intact_rate = [&](double p) {
    const auto failed = std::lower_bound(minima.begin(), minima.end(), p) - minima.begin();
    return 1.0 - static_cast<double>(failed) / static_cast<double>(trials);
  };

  double lo = 0.0;
  double hi = 1.0;
  for (int iter = 0; iter < 60; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (intact_rate(mid) >= tau) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace olog
