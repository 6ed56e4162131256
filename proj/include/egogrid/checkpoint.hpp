#pragma once

#include <string>

#include "egogrid/nn.hpp"

namespace egogrid {

// Versioned binary checkpoint: magic, format version, the architecture
// config, then raw float32 parameters, all little-endian (docs/formats.md).
// load throws CheckpointError on magic/version/architecture mismatch.
void save_checkpoint(const std::string& path, const PolicyNet<float>& net);
PolicyNet<float> load_checkpoint(const std::string& path);

}  // namespace egogrid
