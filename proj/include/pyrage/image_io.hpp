#pragma once

#include <string>

#include "pyrage/tensor.hpp"

namespace pyrage {

/// PNG round trip for (3, H, W) images in [-1, 1]; 8-bit on disk with the
/// linear map v8 = round(255 * (v + 1) / 2).
void save_png(const std::string& path, const Tensor<float>& image);
Tensor<float> load_png(const std::string& path);

}  // namespace pyrage
