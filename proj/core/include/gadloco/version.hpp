#pragma once

namespace gad {

inline constexpr const char* kVersion = "0.1.0";

// Version of the observation / discriminator-feature channel layout.
// Stamped into checkpoints and clip files; loaders refuse a mismatch.
inline constexpr int kLayoutVersion = 1;

inline constexpr const char* kCheckpointMagic = "gadloco-checkpoint";
inline constexpr const char* kClipMagic = "gadloco-clip";

}  // namespace gad
