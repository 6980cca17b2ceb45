#pragma once

#include "ploi/plmap.hpp"

#include <span>
#include <string>

namespace ploi {

// Static SVG of the superimposed graphs. The view box is D x D with D the
// least common multiple of all coordinate denominators, so every vertex
// lands on an integer point; y is flipped so the origin is bottom left.
std::string svg_plot(std::span<const PLMap> maps, int pixels = 512);

}  // namespace ploi
