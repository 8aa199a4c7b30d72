#pragma once

#include "fussi/image.hpp"
#include "fussi/types.hpp"

namespace fussi {

// Draws the fitted skeleton into a 64x64 pedestrian crop: 8 limb segments
// (neck-shoulder, shoulder-hip, hip-knee, knee-ankle per side) as 2 px
// lines, left side pure red, right side pure blue, neck joint green.
// Skeleton coordinates are in the source box frame and get mapped into the
// crop; out-of-box points clip to the border. Segments with an absent
// endpoint are skipped, so an all-absent skeleton returns the crop as is.
Image render_early_fusion(const Image& crop, const Skeleton9& skeleton,
                          const BBox& box);

inline constexpr Rgb kOverlayLeft{255, 0, 0};
inline constexpr Rgb kOverlayRight{0, 0, 255};
inline constexpr Rgb kOverlayNeck{0, 255, 0};

}  // namespace fussi
