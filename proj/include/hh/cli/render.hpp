#pragma once

#include <string>
#include <string_view>

#include "hh/bgg.hpp"

namespace hh::cli {

inline constexpr const char* kToolVersion = "0.3.0";

std::string render_json(const bgg::HodgeDiamond& d);
bgg::HodgeDiamond parse_json(std::string_view text);
std::string render_csv(const bgg::HodgeDiamond& d);
std::string render_latex(const bgg::HodgeDiamond& d);
// Triangle with the top vertex h^{0,0}; row t holds i+j = 2t.
std::string render_pretty(const bgg::HodgeDiamond& d);
std::string render(const bgg::HodgeDiamond& d, std::string_view format);

}  // namespace hh::cli
