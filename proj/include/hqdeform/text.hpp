#pragma once

#include <string>

#include "hqdeform/crossed_product.hpp"

namespace hqdeform {

// Expressions over A built from integers, a/b literals, x1..xn, w[WORD], + - * ^ and parentheses.
// A term without a w[...] factor lives in the w[e] component.
CrossedElement parse_element(const ContextPtr& ctx, const std::string& text);
std::string format_element(const CrossedElement& a);

// Same grammar without group elements.
Poly parse_poly(FieldSpec field, std::size_t nvars, const std::string& text);

}  // namespace hqdeform
