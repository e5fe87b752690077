#pragma once

// Sparse truncated Laurent-Puiseux series in (q, y) or (q, y, s).
//
// Exponents are stored as integers in fixed units: q in 1/24, y in 1/4 and
// s in 1/24. A series knows the exclusive bound `qprec` (and for three
// variables `sprec`) below which every coefficient is exact. kInf marks an
// exact polynomial in that variable.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "jacobi/errors.hpp"
#include "jacobi/ring.hpp"

namespace jacobi {

inline constexpr std::int64_t kQDen = 24;
inline constexpr std::int64_t kYDen = 4;
inline constexpr std::int64_t kSDen = 24;
inline constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

/// Saturating addition on precision bounds.
inline std::int64_t prec_add(std::int64_t a, std::int64_t b) {
  if (a >= kInf || b >= kInf) return kInf;
  return a + b;
}

inline std::int64_t prec_sub(std::int64_t a, std::int64_t b) {
  if (a >= kInf) return kInf;
  return a - b;
}

struct Key2 {
  std::int64_t nq = 0;
  std::int64_t ly = 0;
  static constexpr int kDims = 2;
  std::int64_t ms() const { return 0; }
  friend auto operator<=>(const Key2 &, const Key2 &) = default;
  friend Key2 operator+(const Key2 &a, const Key2 &b) { return {a.nq + b.nq, a.ly + b.ly}; }
  friend Key2 operator-(const Key2 &a, const Key2 &b) { return {a.nq - b.nq, a.ly - b.ly}; }
  static Key2 make(std::int64_t nq, std::int64_t ly, std::int64_t = 0) { return {nq, ly}; }
};

struct Key3 {
  std::int64_t nq = 0;
  std::int64_t ly = 0;
  std::int64_t ms_ = 0;
  static constexpr int kDims = 3;
  std::int64_t ms() const { return ms_; }
  friend auto operator<=>(const Key3 &, const Key3 &) = default;
  friend Key3 operator+(const Key3 &a, const Key3 &b) {
    return {a.nq + b.nq, a.ly + b.ly, a.ms_ + b.ms_};
  }
  friend Key3 operator-(const Key3 &a, const Key3 &b) {
    return {a.nq - b.nq, a.ly - b.ly, a.ms_ - b.ms_};
  }
  static Key3 make(std::int64_t nq, std::int64_t ly, std::int64_t ms = 0) { return {nq, ly, ms}; }
};

std::string key_string(const Key2 &k);
std::string key_string(const Key3 &k);

template <class K, class C = Integer> class Series {
public:
  using Key = K;
  using Coeff = C;
  using Traits = RingTraits<C>;
  using Map = std::map<K, C>;

  Series() = default;
  explicit Series(std::int64_t qprec, std::int64_t sprec = kInf, int param = default_param())
      : qprec_(qprec), sprec_(K::kDims == 3 ? sprec : kInf), param_(param) {}

  static int default_param() { return std::is_same_v<C, Cyclotomic> ? 1 : 0; }

  static Series constant(const C &c, std::int64_t qprec = kInf, std::int64_t sprec = kInf) {
    Series r(qprec, sprec, Traits::param(c));
    r.add_term(K{}, c);
    return r;
  }
  static Series monomial(const K &k, const C &c, std::int64_t qprec = kInf,
                         std::int64_t sprec = kInf) {
    Series r(qprec, sprec, Traits::param(c));
    r.add_term(k, c);
    return r;
  }
  static Series one(std::int64_t qprec = kInf, std::int64_t sprec = kInf, int param = default_param()) {
    return constant(Traits::one(param), qprec, sprec);
  }

  const Map &terms() const { return terms_; }
  std::int64_t qprec() const { return qprec_; }
  std::int64_t sprec() const { return sprec_; }
  int ring_param() const { return param_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c at k; silently ignores keys beyond the precision bounds.
  void add_term(const K &k, const C &c) {
    if (k.nq >= qprec_ || k.ms() >= sprec_ || Traits::is_zero(c)) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
      return;
    }
    it->second += c;
    if (Traits::is_zero(it->second)) terms_.erase(it);
  }

  C coefficient(const K &k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Traits::zero(param_) : it->second;
  }

  std::int64_t min_nq() const {
    if (terms_.empty()) return 0;
    return terms_.begin()->first.nq;
  }
  std::int64_t max_nq() const {
    if (terms_.empty()) return 0;
    return terms_.rbegin()->first.nq;
  }
  std::int64_t min_ms() const {
    if (terms_.empty()) return 0;
    std::int64_t m = terms_.begin()->first.ms();
    for (const auto &[k, c] : terms_) m = std::min(m, k.ms());
    return m;
  }
  std::int64_t max_ms() const {
    if (terms_.empty()) return 0;
    std::int64_t m = terms_.begin()->first.ms();
    for (const auto &[k, c] : terms_) m = std::max(m, k.ms());
    return m;
  }

  /// Terms with the given q-exponent as (key, coefficient) pairs.
  std::vector<std::pair<K, C>> row(std::int64_t nq) const {
    std::vector<std::pair<K, C>> out;
    for (auto it = terms_.lower_bound(K::make(nq, std::numeric_limits<std::int64_t>::min(),
                                              std::numeric_limits<std::int64_t>::min()));
         it != terms_.end() && it->first.nq == nq; ++it)
      out.push_back(*it);
    return out;
  }

  Series truncated(std::int64_t qprec, std::int64_t sprec = kInf) const {
    Series r(std::min(qprec, qprec_), std::min(sprec, sprec_), param_);
    for (const auto &[k, c] : terms_) {
      if (k.nq >= r.qprec_) break;
      if (k.ms() < r.sprec_) r.terms_.emplace(k, c);
    }
    return r;
  }

  /// Multiplication by the monomial x^k; precision moves with the shift.
  Series shifted(const K &k) const {
    Series r(prec_add(qprec_, k.nq), prec_add(sprec_, k.ms()), param_);
    for (const auto &[key, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), key + k, c);
    return r;
  }

  Series scaled(const C &c) const {
    Series r(qprec_, sprec_, param_);
    if (Traits::is_zero(c)) return r;
    for (const auto &[k, v] : terms_) {
      C p = v * c;
      if (!Traits::is_zero(p)) r.terms_.emplace_hint(r.terms_.end(), k, std::move(p));
    }
    return r;
  }

  Series operator-() const { return scaled(-Traits::one(param_)); }

  friend Series operator+(const Series &a, const Series &b) { return a.combine(b, false); }
  friend Series operator-(const Series &a, const Series &b) { return a.combine(b, true); }
  friend Series operator*(const Series &a, const Series &b) { return a.multiply(b); }
  Series &operator+=(const Series &b) { return *this = combine(b, false); }
  Series &operator-=(const Series &b) { return *this = combine(b, true); }
  Series &operator*=(const Series &b) { return *this = multiply(b); }

  /// Equality of term maps and precisions.
  friend bool operator==(const Series &a, const Series &b) {
    return a.qprec_ == b.qprec_ && a.sprec_ == b.sprec_ && a.terms_ == b.terms_;
  }

  /// Equality of coefficients below the smaller of the two precisions.
  bool agrees_with(const Series &b) const {
    std::int64_t q = std::min(qprec_, b.qprec_);
    std::int64_t s = std::min(sprec_, b.sprec_);
    return truncated(q, s).terms_ == b.truncated(q, s).terms_;
  }

  /// First key at which the two series differ below the common precision.
  std::optional<K> first_difference(const Series &b) const {
    std::int64_t q = std::min(qprec_, b.qprec_);
    std::int64_t s = std::min(sprec_, b.sprec_);
    Series d = truncated(q, s) - b.truncated(q, s);
    if (d.empty()) return std::nullopt;
    return d.terms_.begin()->first;
  }

  Series pow(std::int64_t k) const;
  Series inverse() const;
  Series exact_div(const Series &b) const;

  /// Replaces the coefficient map wholesale; keys beyond precision are dropped.
  static Series from_terms(Map terms, std::int64_t qprec, std::int64_t sprec = kInf,
                           int param = default_param()) {
    Series r(qprec, sprec, param);
    for (auto &[k, c] : terms)
      if (k.nq < r.qprec_ && k.ms() < r.sprec_ && !Traits::is_zero(c))
        r.terms_.emplace_hint(r.terms_.end(), k, std::move(c));
    return r;
  }

private:
  void check_ring(const Series &b) const {
    if (param_ != b.param_)
      throw RingMismatchError("series live in different rings (" + Traits::name() + " parameter " +
                              std::to_string(param_) + " vs " + std::to_string(b.param_) + ")");
  }

  Series combine(const Series &b, bool subtract) const {
    check_ring(b);
    Series r(std::min(qprec_, b.qprec_), std::min(sprec_, b.sprec_), param_);
    for (const auto &[k, c] : terms_)
      if (k.nq < r.qprec_ && k.ms() < r.sprec_) r.terms_.emplace_hint(r.terms_.end(), k, c);
    for (const auto &[k, c] : b.terms_) r.add_term(k, subtract ? C(-c) : c);
    return r;
  }

  Series multiply(const Series &b) const {
    check_ring(b);
    std::int64_t q = std::min(prec_add(qprec_, b.min_nq()), prec_add(b.qprec_, min_nq()));
    std::int64_t s = kInf;
    if constexpr (K::kDims == 3)
      s = std::min(prec_add(sprec_, b.min_ms()), prec_add(b.sprec_, min_ms()));
    Series r(q, s, param_);
    const Series &small = size() <= b.size() ? *this : b;
    const Series &large = size() <= b.size() ? b : *this;
    for (const auto &[ka, ca] : small.terms_) {
      for (const auto &[kb, cb] : large.terms_) {
        if (ka.nq + kb.nq >= q) break;
        if (ka.ms() + kb.ms() >= s) continue;
        K k = ka + kb;
        auto it = r.terms_.find(k);
        if (it == r.terms_.end())
          r.terms_.emplace(k, ca * cb);
        else
          it->second += ca * cb;
      }
    }
    for (auto it = r.terms_.begin(); it != r.terms_.end();) {
      if (Traits::is_zero(it->second))
        it = r.terms_.erase(it);
      else
        ++it;
    }
    return r;
  }

  Map terms_;
  std::int64_t qprec_ = kInf;
  std::int64_t sprec_ = kInf;
  int param_ = default_param();
};

using Series2 = Series<Key2, Integer>;
using Series3 = Series<Key3, Integer>;
using QSeries2 = Series<Key2, Rational>;

namespace detail {

// Rows are indexed by (nq, ms); within a row the series is a Laurent
// polynomial in y. Long division runs over rows in lexicographic order.
template <class C> using YPoly = std::map<std::int64_t, C>;
using RowKey = std::pair<std::int64_t, std::int64_t>;

template <class K, class C>
std::map<RowKey, YPoly<C>> to_rows(const Series<K, C> &a) {
  std::map<RowKey, YPoly<C>> rows;
  for (const auto &[k, c] : a.terms()) rows[{k.nq, k.ms()}][k.ly] = c;
  return rows;
}

} // namespace detail

template <class K, class C> Series<K, C> Series<K, C>::exact_div(const Series &b) const {
  check_ring(b);
  if (b.empty()) throw InexactDivisionError("division by the zero series");
  auto brows = detail::to_rows(b);
  const detail::RowKey blead = brows.begin()->first;
  const auto &bpoly = brows.begin()->second;
  const std::int64_t bmin_l = bpoly.begin()->first;
  const std::int64_t bspan = bpoly.rbegin()->first - bmin_l;
  const C &bcoef = bpoly.begin()->second;

  const std::int64_t amin_q = empty() ? blead.first : min_nq();
  const std::int64_t amin_s = empty() ? blead.second : min_ms();
  std::int64_t q = prec_sub(std::min(qprec_, prec_add(b.qprec_, amin_q - blead.first)), blead.first);
  std::int64_t s = kInf;
  if constexpr (K::kDims == 3)
    s = prec_sub(std::min(sprec_, prec_add(b.sprec_, amin_s - b.min_ms())), blead.second);

  // With both operands exact, the quotient degree is bounded by the data.
  std::int64_t qlimit = q, slimit = s;
  if (q >= kInf) qlimit = max_nq() - b.max_nq() + 1;
  if (s >= kInf && K::kDims == 3) slimit = max_ms() - b.max_ms() + 1;

  Series out(q, s, param_);
  auto rem = detail::to_rows(*this);
  while (!rem.empty()) {
    auto it = rem.begin();
    const detail::RowKey rk = it->first;
    const std::int64_t qn = rk.first - blead.first;
    const std::int64_t qs = rk.second - blead.second;
    if (qn >= qlimit) break;
    if (qs >= slimit) {
      if (s >= kInf)
        throw InexactDivisionError("nonzero remainder at exponent " +
                                   key_string(K::make(rk.first, it->second.begin()->first, rk.second)));
      rem.erase(it);
      continue;
    }
    auto poly = std::move(it->second);
    rem.erase(it);
    detail::YPoly<C> quot;
    while (!poly.empty()) {
      auto [l, c] = *poly.begin();
      if (poly.rbegin()->first - l < bspan) {
        throw InexactDivisionError("inexact division at exponent " +
                                   key_string(K::make(rk.first, l, rk.second)));
      }
      auto f = Traits::exact_quotient(c, bcoef);
      if (!f) {
        throw InexactDivisionError("coefficient not divisible at exponent " +
                                   key_string(K::make(rk.first, l, rk.second)));
      }
      const std::int64_t ql = l - bmin_l;
      for (const auto &[bl, bc] : bpoly) {
        auto pit = poly.find(ql + bl);
        C prod = *f * bc;
        if (pit == poly.end()) {
          poly.emplace(ql + bl, -prod);
        } else {
          pit->second -= prod;
          if (Traits::is_zero(pit->second)) poly.erase(pit);
        }
      }
      quot.emplace(ql, std::move(*f));
    }
    // Subtract quot * (b without its leading row) from the remainder.
    for (auto bit = std::next(brows.begin()); bit != brows.end(); ++bit) {
      const detail::RowKey target{qn + bit->first.first, qs + bit->first.second};
      if (target.first >= qprec_ || target.second >= sprec_) continue;
      if (q < kInf && target.first - blead.first >= qlimit) continue;
      if (s < kInf && target.second - blead.second >= slimit) continue;
      auto &tpoly = rem[target];
      for (const auto &[ql, qc] : quot) {
        for (const auto &[bl, bc] : bit->second) {
          auto pit = tpoly.find(ql + bl);
          C prod = qc * bc;
          if (pit == tpoly.end()) {
            tpoly.emplace(ql + bl, -prod);
          } else {
            pit->second -= prod;
            if (Traits::is_zero(pit->second)) tpoly.erase(pit);
          }
        }
      }
      if (tpoly.empty()) rem.erase(target);
    }
    for (auto &[ql, qc] : quot) out.add_term(K::make(qn, ql, qs), qc);
  }
  if (q >= kInf || (K::kDims == 3 && s >= kInf)) {
    for (const auto &[rk, poly] : rem) {
      if (!poly.empty())
        throw InexactDivisionError("nonzero remainder at exponent " +
                                   key_string(K::make(rk.first, poly.begin()->first, rk.second)));
    }
  }
  return out;
}

template <class K, class C> Series<K, C> Series<K, C>::inverse() const {
  if (empty()) throw NonInvertibleError("the zero series has no inverse");
  auto rows = detail::to_rows(*this);
  const auto &lead = rows.begin()->second;
  if (lead.size() != 1 || !Traits::is_unit(lead.begin()->second)) {
    throw NonInvertibleError("leading part at exponent " +
                             key_string(K::make(rows.begin()->first.first, lead.begin()->first,
                                                rows.begin()->first.second)) +
                             " is not a unit monomial");
  }
  if ((qprec_ >= kInf && rows.begin()->first.first != max_nq()) ||
      (K::kDims == 3 && sprec_ >= kInf && min_ms() != max_ms())) {
    throw PrecisionError("inverse of an exact non-monomial series needs a finite precision");
  }
  return one(kInf, kInf, param_).exact_div(*this);
}

template <class K, class C> Series<K, C> Series<K, C>::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  Series result = one(kInf, kInf, param_);
  Series base = *this;
  bool first = true;
  while (k > 0) {
    if (k & 1) {
      result = first ? base : result * base;
      first = false;
    }
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

/// Maps every key through `f`, which returns the image key and a
/// coefficient multiplier (or nothing to drop the term). Colliding images
/// are summed. The caller supplies the precision of the image.
template <class KOut, class KIn, class C, class F>
Series<KOut, C> remap(const Series<KIn, C> &a, F &&f, std::int64_t qprec, std::int64_t sprec = kInf) {
  Series<KOut, C> r(qprec, sprec, a.ring_param());
  for (const auto &[k, c] : a.terms()) {
    std::optional<std::pair<KOut, C>> img = f(k);
    if (!img) continue;
    r.add_term(img->first, c * img->second);
  }
  return r;
}

/// Same-ring coefficient conversion.
template <class C2, class K, class C1, class F>
Series<K, C2> convert(const Series<K, C1> &a, F &&f, int param = Series<K, C2>::default_param()) {
  Series<K, C2> r(a.qprec(), a.sprec(), param);
  for (const auto &[k, c] : a.terms()) r.add_term(k, f(c));
  return r;
}

} // namespace jacobi
