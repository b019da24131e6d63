#pragma once

#include <optional>

#include "ludics/formula.hpp"
#include "scanner.hpp"

namespace ludics::detail {

Formula parse_formula_expr(Scanner& sc, const std::optional<Address>& ctx);

}  // namespace ludics::detail
