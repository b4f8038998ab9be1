#pragma once

/**
 * @file bijection.hpp
 * @brief The tiling-to-path-system maps for the two domain types. Each of
 *        the dominoes D1/D2/D3 contributes one step; D4 contributes none.
 */

#include "aztec/paths.hpp"
#include "aztec/tilings.hpp"

namespace aztec {

/// Type 1 tiling -> nonintersecting Delannoy system, with
/// #D1 = #East, #D2 = #North, #D3 = #NorthEast.
PathSystem phi(const Tiling& tiling, const AztecDomain& domain);

/// Type 2 tiling -> nonintersecting H-Delannoy system, same step counts.
PathSystem phi_hat(const Tiling& tiling, const AztecDomain& domain);

} // namespace aztec
