#pragma once

#include <cstddef>
#include <vector>

#include "extensor/extensor.hpp"

namespace extensor {

/// Polynomial in z with extensor coefficients, truncated modulo z^{degree_bound + 1}.
template <class Ring>
class TruncatedPoly {
 public:
  using value_type = typename Ring::value_type;

  TruncatedPoly() = default;
  TruncatedPoly(const Ring& ring, unsigned dims, unsigned degree_bound)
      : coeffs_(degree_bound + 1, Extensor<Ring>(ring, dims)) {}

  static TruncatedPoly one(const Ring& ring, unsigned dims, unsigned degree_bound) {
    TruncatedPoly p(ring, dims, degree_bound);
    p.coeffs_[0][0] = ring.one();
    return p;
  }

  unsigned degree_bound() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  unsigned dims() const { return coeffs_.front().dims(); }
  const Ring& ring() const { return coeffs_.front().ring(); }

  Extensor<Ring>& operator[](std::size_t i) { return coeffs_[i]; }
  const Extensor<Ring>& operator[](std::size_t i) const { return coeffs_[i]; }

  bool is_zero() const {
    for (const auto& c : coeffs_) {
      if (!c.is_zero()) return false;
    }
    return true;
  }
  /// Largest power with a nonzero coefficient, or -1 for the zero polynomial.
  int degree() const {
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      if (!coeffs_[i].is_zero()) return static_cast<int>(i);
    }
    return -1;
  }

  TruncatedPoly& operator+=(const TruncatedPoly& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  TruncatedPoly& operator-=(const TruncatedPoly& o) {
    check_same(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  /// Multiplies by z, dropping the top coefficient.
  TruncatedPoly shifted() const {
    TruncatedPoly out(ring(), dims(), degree_bound());
    for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) out.coeffs_[i + 1] = coeffs_[i];
    return out;
  }
  /// Coefficient-wise right product by an extensor with no z dependence.
  template <class Product>
  TruncatedPoly times(const Extensor<Ring>& x, Product&& product) const {
    TruncatedPoly out(ring(), dims(), degree_bound());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!coeffs_[i].is_zero()) out.coeffs_[i] = product(coeffs_[i], x);
    }
    return out;
  }
  /// Coefficient-wise left product x * this.
  template <class Product>
  TruncatedPoly times_left(const Extensor<Ring>& x, Product&& product) const {
    TruncatedPoly out(ring(), dims(), degree_bound());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (!coeffs_[i].is_zero()) out.coeffs_[i] = product(x, coeffs_[i]);
    }
    return out;
  }
  /// Truncated product using `product` for the extensor multiplications.
  template <class Product>
  TruncatedPoly times(const TruncatedPoly& o, Product&& product) const {
    check_same(o);
    TruncatedPoly out(ring(), dims(), degree_bound());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < coeffs_.size(); ++j) {
        if (o.coeffs_[j].is_zero()) continue;
        out.coeffs_[i + j] += product(coeffs_[i], o.coeffs_[j]);
      }
    }
    return out;
  }
  TruncatedPoly times(const TruncatedPoly& o) const {
    return times(o, [](const Extensor<Ring>& a, const Extensor<Ring>& b) { return wedge(a, b); });
  }
  TruncatedPoly times(const Extensor<Ring>& x) const {
    return times(x, [](const Extensor<Ring>& a, const Extensor<Ring>& b) { return wedge(a, b); });
  }
  TruncatedPoly& scale(const value_type& c) {
    for (auto& e : coeffs_) e.scale(c);
    return *this;
  }

  friend bool operator==(const TruncatedPoly& a, const TruncatedPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void check_same(const TruncatedPoly& o) const {
    if (o.coeffs_.size() != coeffs_.size() || o.dims() != dims()) {
      throw DomainError("truncated polynomial shape mismatch");
    }
  }

  std::vector<Extensor<Ring>> coeffs_;
};

}  // namespace extensor
