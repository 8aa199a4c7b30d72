#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace fussi {

struct BBox;

using Rgb = std::array<std::uint8_t, 3>;

// Interleaved 8-bit RGB raster, row-major.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> rgb;

  Image() = default;
  Image(int w, int h, Rgb fill = {0, 0, 0});

  bool empty() const { return width <= 0 || height <= 0; }
  std::size_t index(int x, int y) const {
    return (std::size_t(y) * width + x) * 3;
  }
  Rgb at(int x, int y) const {
    auto i = index(x, y);
    return {rgb[i], rgb[i + 1], rgb[i + 2]};
  }
  void set(int x, int y, Rgb c) {
    if (x < 0 || y < 0 || x >= width || y >= height) return;
    auto i = index(x, y);
    rgb[i] = c[0];
    rgb[i + 1] = c[1];
    rgb[i + 2] = c[2];
  }
};

void fill_rect(Image& img, int x0, int y0, int x1, int y1, Rgb c);
void fill_ellipse(Image& img, double cx, double cy, double rx, double ry, Rgb c);
void fill_circle(Image& img, double cx, double cy, double r, Rgb c);

// Bresenham segment with square brush of the given pixel width.
void draw_line(Image& img, double x0, double y0, double x1, double y1, Rgb c,
               int thickness = 1);

// Nearest-neighbour crop + resize; source samples are clamped to the image.
Image crop_resize(const Image& src, const BBox& box, int out_w, int out_h);

// Binary PPM (P6) dump, mainly for eyeballing synthetic scenes.
void write_ppm(const Image& img, const std::string& path);

}  // namespace fussi
