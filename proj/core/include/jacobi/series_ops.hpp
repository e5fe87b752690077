#pragma once

// Exponent substitutions and truncated infinite products.

#include <functional>
#include <optional>
#include <vector>

#include "jacobi/series.hpp"

namespace jacobi {

/// Integer matrix acting on exponent vectors (nq, ly[, ms]); row i gives
/// output coordinate i. Offsets are added after the linear part.
struct ExponentMap {
  std::vector<std::vector<std::int64_t>> m;
  std::vector<std::int64_t> offset;
};

template <class K> std::vector<std::int64_t> key_vector(const K &k) {
  if constexpr (K::kDims == 2)
    return {k.nq, k.ly};
  else
    return {k.nq, k.ly, k.ms()};
}

template <class K> K key_from_vector(const std::vector<std::int64_t> &v) {
  return K::make(v[0], v[1], K::kDims == 3 ? v[2] : 0);
}

/// Twist ζ_n^{Σ w_j e_j} on the input exponent vector e.
template <class K, class C>
std::function<C(const K &)> root_twist(std::int64_t n, std::vector<std::int64_t> weights, int param = 0) {
  return [n, weights = std::move(weights), param](const K &k) {
    auto e = key_vector(k);
    std::int64_t s = 0;
    for (std::size_t i = 0; i < weights.size() && i < e.size(); ++i) s += weights[i] * e[i];
    return RingTraits<C>::root_of_unity(n, s, param);
  };
}

/// Applies an exponent map with an optional coefficient twist.
///
/// Precision: if the q-row of the map is (c, 0, ...) with c > 0 the bound
/// scales by c (plus offset); an exact input stays exact. Otherwise the
/// caller must pass the bound of the image. The s bound works the same way.
template <class KOut, class KIn, class C>
Series<KOut, C> monomial_substitute(const Series<KIn, C> &a, const ExponentMap &map,
                                    const std::function<C(const KIn &)> &twist = {},
                                    std::optional<std::int64_t> qprec = std::nullopt,
                                    std::optional<std::int64_t> sprec = std::nullopt) {
  if (map.m.size() != static_cast<std::size_t>(KOut::kDims))
    throw ValidationError("exponent map has wrong number of rows");
  for (const auto &row : map.m)
    if (row.size() != static_cast<std::size_t>(KIn::kDims))
      throw ValidationError("exponent map has wrong number of columns");
  std::vector<std::int64_t> offset = map.offset;
  offset.resize(KOut::kDims, 0);

  auto pure_scale = [&](std::size_t out, std::size_t in) -> std::optional<std::int64_t> {
    for (std::size_t j = 0; j < map.m[out].size(); ++j)
      if ((j == in) != (map.m[out][j] != 0)) return std::nullopt;
    if (map.m[out][in] <= 0) return std::nullopt;
    return map.m[out][in];
  };

  std::int64_t q;
  if (qprec) {
    q = *qprec;
  } else if (auto c = pure_scale(0, 0)) {
    q = a.qprec() >= kInf ? kInf : a.qprec() * *c + offset[0];
  } else if (a.qprec() >= kInf && a.sprec() >= kInf) {
    q = kInf;
  } else {
    throw PrecisionError("substitution mixes q with other variables; an explicit q-precision is required");
  }
  std::int64_t s = kInf;
  if constexpr (KOut::kDims == 3) {
    if (sprec) {
      s = *sprec;
    } else if (KIn::kDims == 3 && pure_scale(2, 2)) {
      s = a.sprec() >= kInf ? kInf : a.sprec() * *pure_scale(2, 2) + offset[2];
    } else if (a.qprec() >= kInf && a.sprec() >= kInf) {
      s = kInf;
    } else {
      throw PrecisionError("substitution mixes s with other variables; an explicit s-precision is required");
    }
  }

  Series<KOut, C> r(q, s, a.ring_param());
  std::vector<std::int64_t> out(KOut::kDims);
  for (const auto &[k, c] : a.terms()) {
    auto e = key_vector(k);
    for (std::size_t i = 0; i < out.size(); ++i) {
      std::int64_t v = offset[i];
      for (std::size_t j = 0; j < e.size(); ++j) v += map.m[i][j] * e[j];
      out[i] = v;
    }
    KOut ko = key_from_vector<KOut>(out);
    if (twist)
      r.add_term(ko, c * twist(k));
    else
      r.add_term(ko, c);
  }
  return r;
}

/// A factor (1 - x^key)^exponent of an infinite product.
template <class K> struct ProductFactor {
  K key;
  std::int64_t exponent = 0;
};

template <class K>
using FactorSink = std::function<void(const K &, std::int64_t)>;

/// Lazily enumerates the factors that can contribute below (qprec, sprec).
template <class K>
using FactorSource = std::function<void(std::int64_t qprec, std::int64_t sprec, const FactorSink<K> &)>;

/// Π (1 - x^key)^exponent truncated to nq < qprec and ms < sprec.
///
/// Keys must have nq >= 0 and ms >= 0. Pure y-factors (nq = ms = 0) are
/// finite polynomials and need a non-negative exponent.
template <class K, class C = Integer>
Series<K, C> product_expand(const std::vector<ProductFactor<K>> &factors, std::int64_t qprec,
                            std::int64_t sprec = kInf) {
  using Traits = RingTraits<C>;
  const int param = Series<K, C>::default_param();
  std::map<K, C> acc;
  acc.emplace(K{}, Traits::one(param));
  for (const auto &f : factors) {
    const K &k = f.key;
    if (f.exponent == 0) continue;
    if (k.nq < 0 || k.ms() < 0)
      throw ValidationError("product factor " + key_string(k) + " has a negative q or s exponent");
    const bool pure_y = k.nq == 0 && k.ms() == 0;
    if (pure_y && k.ly == 0) throw ValidationError("product factor with the unit monomial");
    if (pure_y && f.exponent < 0)
      throw ValidationError("pure y-factor " + key_string(k) +
                            " with negative exponent has infinite y-support");
    if (k.nq >= qprec || k.ms() >= sprec) continue;
    // binomial expansion of (1 - x)^e restricted to the truncation box
    std::vector<std::pair<std::int64_t, C>> expansion;
    for (std::int64_t j = 1;; ++j) {
      if (pure_y && j > f.exponent) break;
      if (!pure_y && (j * k.nq >= qprec || j * k.ms() >= sprec)) break;
      Integer b = binomial(f.exponent, j);
      if (j & 1) b = -b;
      if (sgn(b) != 0) expansion.emplace_back(j, Traits::from_integer(b, param));
    }
    if (expansion.empty()) continue;
    std::vector<std::pair<K, C>> old(acc.begin(), acc.end());
    for (const auto &[j, c] : expansion) {
      const K shift = K::make(j * k.nq, j * k.ly, j * k.ms());
      for (const auto &[ok, oc] : old) {
        K nk = ok + shift;
        if (nk.nq >= qprec || nk.ms() >= sprec) continue;
        auto it = acc.find(nk);
        if (it == acc.end()) {
          acc.emplace(nk, oc * c);
        } else {
          it->second += oc * c;
          if (Traits::is_zero(it->second)) acc.erase(it);
        }
      }
    }
  }
  return Series<K, C>::from_terms(std::move(acc), qprec, sprec, param);
}

template <class K, class C = Integer>
Series<K, C> product_expand(const FactorSource<K> &source, std::int64_t qprec, std::int64_t sprec = kInf) {
  std::vector<ProductFactor<K>> factors;
  source(qprec, sprec, [&](const K &k, std::int64_t e) { factors.push_back({k, e}); });
  return product_expand<K, C>(factors, qprec, sprec);
}

} // namespace jacobi
