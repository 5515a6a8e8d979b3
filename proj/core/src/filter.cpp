#include "framelet/filter.hpp"

#include <cmath>

namespace framelet {

namespace {
std::int64_t mod_positive(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}
}  // namespace

std::size_t GridSpec::point_count() const {
  require(m >= 1 && dim >= 1, errc::internal, "empty grid");
  std::size_t count = 1;
  for (int i = 0; i < dim; ++i) {
    count *= static_cast<std::size_t>(m);
    require(count <= (std::size_t{1} << 26), errc::quadrature_budget,
            "grid has more than 2^26 points");
  }
  return count;
}

bool GridSpec::next(IntVec& idx) const {
  for (int i = dim - 1; i >= 0; --i) {
    if (++idx[i] < m) return true;
    idx[i] = 0;
  }
  return false;
}

RealVec GridSpec::point(std::span<const std::int64_t> idx) const {
  RealVec t(dim);
  for (int i = 0; i < dim; ++i)
    t[i] = static_cast<double>(mod_positive(idx[i], m)) / static_cast<double>(m);
  return t;
}

std::size_t GridSpec::flat_index(std::span<const std::int64_t> idx) const {
  std::size_t flat = 0;
  for (int i = 0; i < dim; ++i)
    flat = flat * static_cast<std::size_t>(m) + static_cast<std::size_t>(mod_positive(idx[i], m));
  return flat;
}

Filter::Filter(TrigPolynomial p) : is_trig_(true), dim_(p.dim()), poly_(std::move(p)) {}

Filter Filter::grid(int dim, std::int64_t m, std::vector<cdouble> values) {
  Filter f;
  f.is_trig_ = false;
  f.dim_ = dim;
  f.grid_ = GridSpec{dim, m};
  require(values.size() == f.grid_.point_count(), errc::dimension_mismatch,
          "grid filter needs m^n values");
  f.values_ = std::move(values);
  return f;
}

const TrigPolynomial& Filter::trig() const {
  require(is_trig_, errc::eval_off_grid, "filter is grid-sampled, not a trig polynomial");
  return poly_;
}

cdouble Filter::eval(std::span<const double> t) const {
  require(is_trig_, errc::eval_off_grid,
          "grid-sampled filter cannot be evaluated at arbitrary points");
  return poly_.eval(t);
}

cdouble Filter::eval_grid(std::span<const std::int64_t> idx, std::int64_t m) const {
  if (is_trig_) return poly_.eval_grid(idx, m);
  require(idx.size() == static_cast<std::size_t>(dim_), errc::dimension_mismatch,
          "grid index dimension");
  // idx/m must land on this filter's grid: idx_i * m_own / m integral.
  IntVec own(dim_);
  for (int i = 0; i < dim_; ++i) {
    const __int128 scaled = static_cast<__int128>(mod_positive(idx[i], m)) * grid_.m;
    require(scaled % m == 0, errc::eval_off_grid, "point not on the filter's sampling grid");
    own[i] = static_cast<std::int64_t>(scaled / m);
  }
  return values_[grid_.flat_index(own)];
}

cdouble Filter::eval(const RatVec& t) const {
  if (is_trig_) return poly_.eval(t);
  require(t.size() == static_cast<std::size_t>(dim_), errc::dimension_mismatch,
          "evaluation point dimension");
  IntVec idx(dim_);
  for (int i = 0; i < dim_; ++i) {
    const Rational scaled = t[i].frac() * Rational(grid_.m);
    require(scaled.is_integer(), errc::eval_off_grid, "point not on the filter's sampling grid");
    idx[i] = scaled.num();
  }
  return values_[grid_.flat_index(idx)];
}

}  // namespace framelet
