#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "egogrid/state.hpp"

namespace egogrid {

enum class AvatarMode : uint8_t {
    Original = 0,       // oriented sprite, leaks facing and global orientation
    ReplaceAvatar = 1,  // solid square, no orientation cues
    ReplaceAll = 2,     // every entity kind drawn as a solid square
};

enum class ColorMode : uint8_t { RGB = 0, Gray = 1 };

struct RenderConfig {
    int tile_size = 8;
    AvatarMode avatar_mode = AvatarMode::ReplaceAvatar;
    int out_height = 84;
    int out_width = 84;
    ColorMode color = ColorMode::RGB;
};

// Pixel image in CHW layout plus the avatar pose metadata the transforms
// need. Pixels are tile-aligned: height == tile rows * tile_size.
struct Observation {
    int channels = 0;
    int height = 0;
    int width = 0;
    std::vector<uint8_t> pixels;  // CHW
    Position avatar{0, 0};        // tile coordinates
    Direction facing = Direction::Up;
    int tile_size = 1;

    uint8_t at(int c, int y, int x) const {
        return pixels[static_cast<size_t>((c * height + y) * width + x)];
    }
    uint8_t& at(int c, int y, int x) {
        return pixels[static_cast<size_t>((c * height + y) * width + x)];
    }
    int tile_rows() const { return height / tile_size; }
    int tile_cols() const { return width / tile_size; }
};

using Rgb = std::array<uint8_t, 3>;

// Flat base color per entity kind (docs/level_format.md lists the table).
// Distinct kinds map to distinct colors, in gray too.
Rgb entity_color(EntityKind kind);
Rgb floor_color();
Rgb avatar_color();

// Draws the state as one flat-colored block per tile at cfg.tile_size, in
// RGB or gray per cfg.color. Pure: same state and config give identical
// bytes. Scaling to cfg.out_* is a separate step (see scale) so transforms
// can run on tile-aligned pixels first.
Observation render(const GameState& state, const RenderConfig& cfg);

// Nearest-neighbor resample to (out_height, out_width). Avatar tile
// coordinates are metadata and pass through unchanged.
Observation scale(const Observation& obs, int out_height, int out_width);

// Ring of the k most recent frames, oldest first. reset() fills every slot
// with the given frame.
class FrameStack {
public:
    explicit FrameStack(int k = 4) : k_(k) {}

    void reset(const Observation& frame);
    void push(const Observation& frame);
    int k() const { return k_; }
    bool empty() const { return frames_.empty(); }
    const std::vector<Observation>& frames() const { return frames_; }

    // Concatenated (k*C, H, W) byte tensor, oldest first.
    std::vector<uint8_t> stacked() const;

private:
    int k_;
    std::vector<Observation> frames_;  // oldest at index 0
};

// Writes the observation as a PNG (RGB or grayscale by channel count).
void write_png(const std::string& path, const Observation& obs);

}  // namespace egogrid
