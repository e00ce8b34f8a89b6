#include "isored/linalg.hpp"

namespace isored {

GaussMatrix evaluate(const RatMatrix& m, const Gauss& z) {
  return m.map([&](const RatFunc& f) { return f(z); });
}

RatMatrix to_ratmatrix(const GaussMatrix& m) {
  return m.map([](const Gauss& x) { return RatFunc(x); });
}

bool is_constant(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_constant()) return false;
  return true;
}

RatMatrix minus_lambda_identity(const RatMatrix& m) {
  RatMatrix out = m;
  const RatFunc lambda = RatFunc::lambda();
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) out(i, i) -= lambda;
  return out;
}

GaussMatrix shifted(const GaussMatrix& m, const Gauss& z) {
  GaussMatrix out = m;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) out(i, i) -= z;
  return out;
}

}  // namespace isored
