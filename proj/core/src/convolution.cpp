#include "momenta/convolution.hpp"

namespace momenta {

Rational newton_weight(int i, int j, int k) {
  if (i < 0 || j < 0 || k < 0) throw InputError("negative convolution index");
  Rational w = binomial(static_cast<unsigned>(i + j), static_cast<unsigned>(j));
  w *= binomial(static_cast<unsigned>(j + k), static_cast<unsigned>(j));
  w *= factorial(static_cast<unsigned>(j));
  return w;
}

}  // namespace momenta
