#pragma once

// Integer-coefficient polynomial kernels backing QPoly. Not part of the
// public interface.

#include "qharm/bigrat.hpp"
#include "qharm/qpoly.hpp"

#include <optional>
#include <vector>

namespace qharm::detail {

using ZPoly = std::vector<BigInt>;  // ascending powers, no trailing zeros

/// p = content * primitive, primitive has integer coefficients with gcd 1
/// and positive leading coefficient.
struct ContentSplit {
  BigRat content;
  ZPoly primitive;
};

ContentSplit split_content(const QPoly& p);
QPoly join_content(const BigRat& content, const ZPoly& primitive);

void trim(ZPoly& p);
ZPoly mul(const ZPoly& a, const ZPoly& b);

/// a / b over Z when the division is exact, std::nullopt otherwise.
std::optional<ZPoly> div_exact(const ZPoly& a, const ZPoly& b);

/// Primitive gcd of two nonzero primitive polynomials (positive leading
/// coefficient). Small-prime modular algorithm with trial division.
ZPoly gcd_primitive(const ZPoly& a, const ZPoly& b);

}  // namespace qharm::detail
