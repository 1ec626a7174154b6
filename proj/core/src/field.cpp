#include "nijcheck/field.hpp"

namespace nijcheck {

namespace {

void check_domain(const std::optional<Box>& domain, std::span<const double> x) {
  if (domain && !domain->contains(x)) throw OutOfDomain("field evaluated outside its domain");
}

}  // namespace

VectorField VectorField::coordinate(std::size_t dim, std::size_t i) {
  return from_generic([dim, i](auto x) {
    using T = typename decltype(x)::value_type;
    Vec<std::remove_const_t<T>> v(dim);
    v[i] = 1.0;
    return v;
  });
}

Mat Tensor11Field::at(std::span<const double> x, Chart chart) const {
  if (x.size() != dim_) throw DimensionMismatch("field " + name_ + ": point dimension");
  if (chart == Chart::North) check_domain(domain_, x);
  return eval_(x, chart);
}

Matrix<Dual1> Tensor11Field::at(std::span<const Dual1> x, Chart chart) const {
  if (x.size() != dim_) throw DimensionMismatch("field " + name_ + ": point dimension");
  return eval_dual_(x, chart);
}

Array3 Tensor11Field::partials(const ChartPoint& p) const {
  if (p.chart == Chart::North) check_domain(domain_, p.x);
  return dual_jacobian([&](std::span<const Dual1> x) { return at(x, p.chart); }, p.x);
}

Array3 Tensor11Field::partials_fd(const ChartPoint& p, double h) const {
  const std::size_t n = dim_;
  if (h <= 0.0) h = default_first_step(p.x);
  Array3 out(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Mat d = central_diff_of([&](std::span<const double> x) { return at(x, p.chart); },
                                  p.x, a, h);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        require_finite(d(b, c), "partials_fd");
        out(a, b, c) = d(b, c);
      }
  }
  return out;
}

Mat Tensor11Field::second_partial_fd(const ChartPoint& p, std::size_t a, std::size_t b,
                                     double h) const {
  if (h <= 0.0) h = default_second_step(p.x);
  Mat d = second_central_diff_of([&](std::span<const double> x) { return at(x, p.chart); }, p.x,
                                 a, b, h);
  for (double v : d.data()) require_finite(v, "second_partial_fd");
  return d;
}

ScalarField Tensor11Field::component(std::size_t row, std::size_t col, Chart chart) const {
  Tensor11Field self = *this;
  return {[self, row, col, chart](std::span<const double> x) { return self.at(x, chart)(row, col); },
          [self, row, col, chart](std::span<const Dual1> x) {
            return self.at(x, chart)(row, col);
          }};
}

VectorField apply(const Tensor11Field& j, const VectorField& x, Chart chart) {
  auto combine = [](const auto& m, const auto& v) {
    using T = typename std::decay_t<decltype(v)>::value_type;
    const std::size_t n = v.size();
    Vec<T> out(n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) out[k] += v[i] * m(i, k);
    return out;
  };
  return {[=](std::span<const double> p) { return combine(j.at(p, chart), x.eval(p)); },
          [=](std::span<const Dual1> p) { return combine(j.at(p, chart), x.eval_dual(p)); }};
}

Vec<double> apply_at(const Mat& j, std::span<const double> v) {
  const std::size_t n = v.size();
  Vec<double> out(n, 0.0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) out[k] += v[i] * j(i, k);
  return out;
}

}  // namespace nijcheck
