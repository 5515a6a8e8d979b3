#include "framelet/refinable.hpp"

#include <cmath>
#include <numbers>

namespace framelet {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc(double t) {
  if (std::abs(t) < 1e-8) {
    const double x = kPi * t;
    return 1.0 - x * x / 6.0;
  }
  return std::sin(kPi * t) / (kPi * t);
}

double sup_norm_inf(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

PhiHat PhiHat::from_mask(DilationMatrix A, TrigPolynomial h0, int depth, PhiMode mode) {
  require(depth >= 1, errc::depth_too_small, "product depth must be >= 1");
  require(A.dim() == h0.dim(), errc::dimension_mismatch, "mask dimension vs dilation");
  PhiHat p;
  p.dim_ = A.dim();
  p.depth_ = depth;
  p.mode_ = mode;
  p.A_ = std::make_shared<DilationMatrix>(std::move(A));
  p.mask_ = std::make_shared<TrigPolynomial>(std::move(h0));
  return p;
}

PhiHat PhiHat::closed_form(int dim, std::string name,
                           std::function<cdouble(std::span<const double>)> fn) {
  PhiHat p;
  p.dim_ = dim;
  p.closed_ = std::move(fn);
  p.closed_name_ = std::move(name);
  return p;
}

PhiHat PhiHat::named(const std::string& name) {
  if (name == "haar") {
    // φ = χ_[0,1]: φ̂(t) = e^{-iπt} sin(πt)/(πt); translates are
    // orthonormal, so the bracket is identically 1.
    PhiHat p = closed_form(1, name, [](std::span<const double> t) {
      return std::polar(sinc(t[0]), -kPi * t[0]);
    });
    p.closed_bracket_ = [](std::span<const double>) { return 1.0; };
    return p;
  }
  if (name == "hat") {
    // Centered linear B-spline on [-1,1]: φ̂(t) = sinc²(t) and
    // [φ̂,φ̂](t) = (2 + cos 2πt)/3.
    PhiHat p = closed_form(1, name, [](std::span<const double> t) {
      const double s = sinc(t[0]);
      return cdouble{s * s, 0.0};
    });
    p.closed_bracket_ = [](std::span<const double> t) {
      return (2.0 + std::cos(2.0 * kPi * t[0])) / 3.0;
    };
    return p;
  }
  if (name == "zero") {
    PhiHat p = closed_form(1, name, [](std::span<const double>) { return cdouble{0.0, 0.0}; });
    p.closed_bracket_ = [](std::span<const double>) { return 0.0; };
    return p;
  }
  if (name.rfind("box:", 0) == 0) {
    const auto rest = name.substr(4);
    const auto colon = rest.find(':');
    require(colon != std::string::npos, errc::parse_error, "box form needs box:lo:hi");
    const double lo = Rational::parse(rest.substr(0, colon)).to_double();
    const double hi = Rational::parse(rest.substr(colon + 1)).to_double();
    require(lo < hi, errc::parse_error, "box form needs lo < hi");
    PhiHat p = closed_form(1, name, [lo, hi](std::span<const double> t) {
      return cdouble{(t[0] >= lo && t[0] <= hi) ? 1.0 : 0.0, 0.0};
    });
    // Bracket counts the lattice translates of t inside [lo, hi].
    p.closed_bracket_ = [lo, hi](std::span<const double> t) {
      double count = 0.0;
      for (double k = std::ceil(lo - t[0]); k <= std::floor(hi - t[0]); k += 1.0) count += 1.0;
      return count;
    };
    return p;
  }
  fail(errc::parse_error, "unknown closed form '" + name + "'");
}

double PhiHat::closed_bracket(std::span<const double> t) const {
  require(has_closed_bracket(), errc::internal, "profile has no closed bracket");
  return closed_bracket_(t);
}

const TrigPolynomial& PhiHat::mask() const {
  require(has_mask(), errc::internal, "profile has no mask");
  return *mask_;
}

const DilationMatrix& PhiHat::dilation() const {
  require(A_ != nullptr, errc::internal, "profile has no dilation");
  return *A_;
}

bool PhiHat::mask_normalized(double tol) const {
  if (!has_mask()) return true;
  const RealVec zero(dim_, 0.0);
  return std::abs(std::abs(mask_->eval(zero)) - 1.0) <= tol;
}

PhiHat PhiHat::with_depth(int depth) const {
  require(depth >= 1, errc::depth_too_small, "product depth must be >= 1");
  PhiHat p = *this;
  p.depth_ = depth;
  return p;
}

cdouble PhiHat::eval(std::span<const double> t) const { return eval_at_depth(t, depth_); }

cdouble PhiHat::eval_at_depth(std::span<const double> t, int depth) const {
  require(depth >= 1, errc::depth_too_small, "product depth must be >= 1");
  require(t.size() == static_cast<std::size_t>(dim_), errc::dimension_mismatch,
          "evaluation point dimension");
  if (closed_) return closed_(t);

  RealVec x(t.begin(), t.end());
  double modulus = 1.0;
  cdouble acc{1.0, 0.0};
  // Contract large arguments into the unit ball first; each contraction
  // is itself a factor of the product.
  int guard = 0;
  while (sup_norm_inf(x) > 1.0) {
    require(++guard <= 128, errc::divergent, "argument too large for the product evaluator");
    x = A_->apply_transpose_inverse(x);
    const cdouble h = mask_->eval(x);
    if (mode_ == PhiMode::modulus) {
      modulus *= std::abs(h);
    } else {
      acc *= h;
    }
  }
  for (int j = 0; j < depth; ++j) {
    x = A_->apply_transpose_inverse(x);
    const cdouble h = mask_->eval(x);
    if (mode_ == PhiMode::modulus) {
      modulus *= std::abs(h);
    } else {
      acc *= h;
    }
  }
  if (mode_ == PhiMode::modulus) return cdouble{modulus, 0.0};
  return acc;
}

}  // namespace framelet
