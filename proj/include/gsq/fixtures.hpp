#pragma once

#include <array>
#include <string_view>
#include <variant>

#include "gsq/correspondence.hpp"
#include "gsq/grids.hpp"

namespace gsq {

inline constexpr int kFixtureRegistryVersion = 1;

inline constexpr std::array<std::string_view, 4> kFixtureNames{"bremner", "parker", "loshu",
                                                               "worked-example"};

// Each accessor re-verifies the structural claims made about its fixture with
// magic_report and throws Errc::InvalidArgument if any of them fails.

/// 373^2 289^2 565^2 / 360721 425^2 23^2 / 205^2 527^2 222121.
MagicSquare bremner_square();
/// 29^2 1^2 47^2 / 41^2 37^2 1^2 / 23^2 41^2 29^2.
MagicSquare parker_square();
/// 4 9 2 / 3 5 7 / 8 1 6.
MagicSquare lo_shu_square();
/// (4-i)^2 + (4+8i)^2 + (7-4i)^2 = 0.
ZeroSumTriple worked_example_triple();

/// GAP straddling the origin: (0, 2+i, 4+i). Its pseudo-grids are far from
/// flat; shifted far along the real axis they flatten out.
GapBasis origin_demo_basis();

using Fixture = std::variant<MagicSquare, ZeroSumTriple>;

/// Throws Errc::InvalidArgument for names outside kFixtureNames.
Fixture load_fixture(std::string_view name);

}  // namespace gsq
