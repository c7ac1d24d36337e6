#pragma once

#include "tsrforge/fields.hpp"

namespace tsrforge {

struct FieldCtx::Impl {
  std::shared_ptr<const Impl> base;  // null for prime fields
  std::uint64_t p = 0;               // characteristic
  std::uint64_t card = 0;
  std::size_t exponent = 1;          // card == p^exponent
  std::size_t height = 0;            // tower height, 0 = prime
  std::vector<FieldElem> mod;        // monic modulus over base, ascending, k+1 entries
};

}  // namespace tsrforge
