#pragma once

#include <filesystem>
#include <iosfwd>
#include <memory>

#include "kfn/lc_index.hpp"

namespace kfn {

// Line-oriented text format, version 1:
//
//   kfn-lc-index 1
//   points <N> <vector|string> <dim>
//   bucket_size <b>
//   build_distances <count>
//   clusters <C>
//   <center id> <covering radius> <member count> <member id>...   (C lines)
//
// Radii are written in shortest round-trip decimal form, so a saved index
// reloads bit-identically. The dataset itself is not stored; load() checks
// that the supplied dataset matches the recorded size, form and dimension.

void save_index(const LcIndex& index, std::ostream& out);
void save_index(const LcIndex& index, const std::filesystem::path& path);

LcIndex load_index(std::istream& in, std::shared_ptr<const Dataset> data);
LcIndex load_index(const std::filesystem::path& path, std::shared_ptr<const Dataset> data);

}  // namespace kfn
