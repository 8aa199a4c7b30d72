#include "fussi/image.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "fussi/errors.hpp"
#include "fussi/types.hpp"

namespace fussi {

Image::Image(int w, int h, Rgb fill) : width(w), height(h) {
  if (w < 0 || h < 0) throw InvalidArgument("negative image dimensions");
  rgb.resize(std::size_t(w) * h * 3);
  for (std::size_t i = 0; i < rgb.size(); i += 3) {
    rgb[i] = fill[0];
    rgb[i + 1] = fill[1];
    rgb[i + 2] = fill[2];
  }
}

void fill_rect(Image& img, int x0, int y0, int x1, int y1, Rgb c) {
  x0 = std::max(x0, 0);
  y0 = std::max(y0, 0);
  x1 = std::min(x1, img.width - 1);
  y1 = std::min(y1, img.height - 1);
  for (int y = y0; y <= y1; ++y)
    for (int x = x0; x <= x1; ++x) img.set(x, y, c);
}

void fill_ellipse(Image& img, double cx, double cy, double rx, double ry, Rgb c) {
  if (rx <= 0 || ry <= 0) return;
  int x0 = int(std::floor(cx - rx)), x1 = int(std::ceil(cx + rx));
  int y0 = int(std::floor(cy - ry)), y1 = int(std::ceil(cy + ry));
  for (int y = y0; y <= y1; ++y)
    for (int x = x0; x <= x1; ++x) {
      double dx = (x + 0.5 - cx) / rx;
      double dy = (y + 0.5 - cy) / ry;
      if (dx * dx + dy * dy <= 1.0) img.set(x, y, c);
    }
}

void fill_circle(Image& img, double cx, double cy, double r, Rgb c) {
  fill_ellipse(img, cx, cy, r, r, c);
}

void draw_line(Image& img, double x0, double y0, double x1, double y1, Rgb c,
               int thickness) {
  int ix0 = int(std::lround(x0)), iy0 = int(std::lround(y0));
  int ix1 = int(std::lround(x1)), iy1 = int(std::lround(y1));
  int dx = std::abs(ix1 - ix0), sx = ix0 < ix1 ? 1 : -1;
  int dy = -std::abs(iy1 - iy0), sy = iy0 < iy1 ? 1 : -1;
  int err = dx + dy;
  int lo = -(thickness - 1) / 2;
  int hi = thickness / 2;
  int x = ix0, y = iy0;
  while (true) {
    for (int oy = lo; oy <= hi; ++oy)
      for (int ox = lo; ox <= hi; ++ox) img.set(x + ox, y + oy, c);
    if (x == ix1 && y == iy1) break;
    int e2 = 2 * err;
    if (e2 >= dy) {
      err += dy;
      x += sx;
    }
    if (e2 <= dx) {
      err += dx;
      y += sy;
    }
  }
}

Image crop_resize(const Image& src, const BBox& box, int out_w, int out_h) {
  if (src.empty()) throw EmptyCrop();
  Image out(out_w, out_h);
  for (int oy = 0; oy < out_h; ++oy) {
    for (int ox = 0; ox < out_w; ++ox) {
      double sx = box.x + (ox + 0.5) * box.w / out_w;
      double sy = box.y + (oy + 0.5) * box.h / out_h;
      int ix = std::clamp(int(std::floor(sx)), 0, src.width - 1);
      int iy = std::clamp(int(std::floor(sy)), 0, src.height - 1);
      out.set(ox, oy, src.at(ix, iy));
    }
  }
  return out;
}

void write_ppm(const Image& img, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open " + path + " for writing");
  os << "P6\n" << img.width << " " << img.height << "\n255\n";
  os.write(reinterpret_cast<const char*>(img.rgb.data()),
           std::streamsize(img.rgb.size()));
}

}  // namespace fussi
