#include "kgck/sampling.hpp"

#include <algorithm>

#include "kgck/error.hpp"

namespace kgck {

namespace {

template <typename T, typename Coefficient>
FormalElement<T> element(Sampler& s, const std::vector<Path>& paths, std::size_t terms,
                         Coefficient&& coefficient) {
  if (paths.empty()) throw Error(ErrorCode::PreconditionFailed, "no paths to sample from");
  FormalElement<T> out;
  for (std::size_t k = 0; k < terms; ++k) {
    const Path& lambda = s.pick(paths);
    std::vector<Path> partners;
    for (const auto& p : paths) {
      if (p.source() == lambda.source()) partners.push_back(p);
    }
    const Path& mu = s.pick(partners);
    out = formal_add(out, formal_term<T>(lambda, mu, coefficient()));
  }
  return out;
}

}  // namespace

std::size_t Sampler::index(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::PreconditionFailed, "sampling from an empty range");
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
}

std::vector<Path> Sampler::subset(const std::vector<Path>& pool, std::size_t count) {
  std::vector<std::size_t> order(pool.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    std::swap(order[i], order[i + index(order.size() - i)]);
  }
  order.resize(std::min(count, order.size()));
  std::vector<Path> out;
  for (auto i : order) out.push_back(pool[i]);
  std::sort(out.begin(), out.end());
  return out;
}

FormalElement<Complex> Sampler::formal_element(const std::vector<Path>& paths, std::size_t terms) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  return element<Complex>(*this, paths, terms, [&] {
    const double re = unit(rng_);
    const double im = unit(rng_);
    return Complex(re, im);
  });
}

FormalElement<Rational> Sampler::rational_element(const std::vector<Path>& paths,
                                                  std::size_t terms) {
  std::uniform_int_distribution<int> small(-3, 3);
  return element<Rational>(*this, paths, terms, [&] { return Rational(small(rng_)); });
}

}  // namespace kgck
