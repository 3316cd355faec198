#pragma once

namespace momentcf::detail {

// Class templates with an is_zero() member hide the free is_zero overloads,
// so coefficient tests go through this ADL shim.
template <class R>
bool coeff_is_zero(const R& v) {
  return is_zero(v);
}

}  // namespace momentcf::detail
