#pragma once

#include <string_view>

#include "gfi/gausspoly.hpp"
#include "gfi/l2.hpp"

namespace gfi {

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Parse an exact-form function expression. Grammar (see docs/config_format.md):
///   expr      := poly | indicator | scale | sum
///   poly      := "poly(" num {"," num} ")"
///   indicator := "indicator(" num "," num ")"
///   scale     := "scale(" num "," expr ")"
///   sum       := "sum(" expr {"," expr} ")"
L2Fn parse_l2(std::string_view text, double domain_end = 1.0);

/// Parse a Gaussian-polynomial kernel: a "+"-separated list of
///   term(c, [poly(c0,...); a; b], ...)
/// with one bracket group per axis and complex literals of the form
/// "re", "imi" or "re+imi" (e.g. 1.5, -2i, 0.3-0.25i).
GaussPolyFn parse_kernel(std::string_view text, std::size_t arity);

/// Complex literal parser used by the kernel grammar.
Cx parse_complex(std::string_view text);

}  // namespace gfi
