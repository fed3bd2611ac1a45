#include "logzeta/tanh_sinh.hpp"

#include <map>
#include <mutex>
#include <utility>

namespace logzeta::quad {

namespace {

// Nodes are generated until 1 − u < 2^{−kDepth·prec}, deep enough that
// algebraic endpoint singularities as strong as t^{−0.95} are resolved.
constexpr long kDepth = 20;

std::vector<Node> build(unsigned level, mp::Prec prec) {
  std::vector<Node> out;
  const Real h = step(level, prec);
  const Real half_pi = mp::ldexp(mp::pi(prec), -1);
  const Real pi = mp::pi(prec);
  const Real limit = mp::pow2(-kDepth * static_cast<long>(prec), 64);

  for (long k = 0;; ++k) {
    const Real t = h * k;
    const Real q = half_pi * mp::sinh(t);
    const Real e = mp::exp(mp::ldexp(q, 1));   // e^{2q}
    const Real small = 1L / (e + 1L);          // 1 − u(t), t ≥ 0
    const Real big = e / (e + 1L);             // u(t)
    const Real weight = pi * mp::cosh(t) * small * big;
    if (k == 0) {
      out.push_back({big, small, weight});
    } else {
      out.push_back({big, small, weight});
      out.push_back({small, big, weight});
    }
    if (small < limit) break;
  }
  return out;
}

struct Cache {
  std::mutex mutex;
  std::map<std::pair<unsigned, mp::Prec>, std::shared_ptr<const std::vector<Node>>> tables;
};

Cache& cache() {
  static Cache c;
  return c;
}

}  // namespace

Real step(unsigned level, mp::Prec prec) { return mp::pow2(-static_cast<long>(level), prec); }

std::shared_ptr<const std::vector<Node>> nodes(unsigned level, mp::Prec prec) {
  Cache& c = cache();
  const auto key = std::make_pair(level, prec);
  {
    std::lock_guard lock(c.mutex);
    if (auto it = c.tables.find(key); it != c.tables.end()) return it->second;
  }
  auto built = std::make_shared<const std::vector<Node>>(build(level, prec));
  std::lock_guard lock(c.mutex);
  // First writer wins; later builders discard their identical copy.
  auto [it, inserted] = c.tables.emplace(key, std::move(built));
  return it->second;
}

}  // namespace logzeta::quad
