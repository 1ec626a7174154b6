#include "nijcheck/octonion.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace nijcheck {

Octonion octonion_conjugate(const Octonion& a) {
  Octonion c = a;
  for (std::size_t k = 1; k < 8; ++k) c[k] = -c[k];
  return c;
}

double octonion_norm(const Octonion& a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return std::sqrt(s);
}

Octonion basis_octonion(std::size_t k) {
  Octonion e{};
  e[k] = 1.0;
  return e;
}

int imaginary_product_index(std::size_t i, std::size_t j) {
  const Octonion prod = octonion_multiply(basis_octonion(i), basis_octonion(j));
  for (std::size_t k = 0; k < 8; ++k) {
    if (prod[k] == 0.0) continue;
    if (k == 0) return 0;
    return prod[k] > 0.0 ? static_cast<int>(k) : -static_cast<int>(k);
  }
  return 0;
}

std::string imaginary_table_markdown() {
  std::ostringstream os;
  os << "# Octonion multiplication table\n\n"
     << "Generated by Cayley-Dickson doubling of the quaternions (e1 e2 = e3,\n"
     << "e4 = (0, 1), e_{4+m} = (0, e_m)). Row i, column j holds e_i e_j.\n"
     << "This file is checked against the implementation by the test suite.\n\n";
  os << "|    |";
  for (std::size_t j = 1; j <= 7; ++j) os << " e" << j << "  |";
  os << "\n|----|";
  for (std::size_t j = 1; j <= 7; ++j) os << "-----|";
  os << "\n";
  for (std::size_t i = 1; i <= 7; ++i) {
    os << "| e" << i << " |";
    for (std::size_t j = 1; j <= 7; ++j) {
      const int k = imaginary_product_index(i, j);
      if (k == 0) {
        os << " -1  |";
      } else {
        os << (k > 0 ? " +" : " -") << "e" << std::abs(k) << " |";
      }
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace nijcheck
