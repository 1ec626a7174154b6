#pragma once

#include <array>
#include <cstddef>
#include <string>

namespace nijcheck {

/// Octonion with components on the basis (1, e1, ..., e7).
///
/// The product is the Cayley-Dickson doubling of the quaternions: with
/// a = (p, q), b = (r, s) for quaternions p, q, r, s,
///   a b = (p r - conj(s) q,  s p + q conj(r)),
/// where (e1, e2, e3) = (i, j, k), e4 = (0, 1) and e_{4+m} = (0, e_m).
/// This gives e1 e2 = e3 and the full table reproduced in docs/octonion_table.md.
template <class T>
using OctonionOf = std::array<T, 8>;

using Octonion = OctonionOf<double>;

namespace detail {

template <class T>
std::array<T, 4> quat_mul(const T* a, const T* b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

template <class T>
std::array<T, 4> quat_conj(const T* a) {
  return {a[0], T(0.0) - a[1], T(0.0) - a[2], T(0.0) - a[3]};
}

}  // namespace detail

template <class T>
OctonionOf<T> octonion_multiply(const OctonionOf<T>& a, const OctonionOf<T>& b) {
  const T* p = a.data();
  const T* q = a.data() + 4;
  const T* r = b.data();
  const T* s = b.data() + 4;
  const auto s_conj = detail::quat_conj(s);
  const auto r_conj = detail::quat_conj(r);
  const auto pr = detail::quat_mul(p, r);
  const auto sq = detail::quat_mul(s_conj.data(), q);
  const auto sp = detail::quat_mul(s, p);
  const auto qr = detail::quat_mul(q, r_conj.data());
  OctonionOf<T> out;
  for (std::size_t k = 0; k < 4; ++k) {
    out[k] = pr[k] - sq[k];
    out[k + 4] = sp[k] + qr[k];
  }
  return out;
}

Octonion octonion_conjugate(const Octonion& a);
double octonion_norm(const Octonion& a);
Octonion basis_octonion(std::size_t k);

/// e_i e_j for 1 <= i, j <= 7 as a signed basis index: +k means +e_k, -k means -e_k,
/// and 0 stands for -1 (the case i == j).
int imaginary_product_index(std::size_t i, std::size_t j);

/// The 7 x 7 imaginary multiplication table rendered as a markdown document.
std::string imaginary_table_markdown();

}  // namespace nijcheck
