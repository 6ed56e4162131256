#pragma once

#include <cstdint>
#include <vector>

#include "egogrid/render.hpp"

namespace egogrid {

// Which egocentric transforms to apply. Cropping presupposes translation
// (the window is centered on the avatar), so of the 8 flag combinations only
// 6 are legal.
struct TransformConfig {
    bool translate = false;
    bool rotate = false;
    bool crop = false;
    int crop_size = 5;  // odd, >= 3

    bool any() const { return translate || rotate || crop; }
    void validate() const;

    bool operator==(const TransformConfig&) const = default;
};

// The 6 legal configurations, baseline first, in (crop, translate, rotate)
// order: 000, 001, 010, 011, 110, 111.
std::vector<TransformConfig> legal_transform_configs(int crop_size = 5);

enum class Frame : uint8_t { World = 0, Ego = 1 };

struct EgoObservation {
    Observation obs;
    Frame frame = Frame::World;
    TransformConfig applied;
};

// Recenters the image on the avatar. Output is (2H-1) x (2W-1) tiles with
// the avatar in the exact center tile and out-of-world area black.
EgoObservation translate(const Observation& obs);

// Rotates by the multiple of 90 degrees taking the avatar's facing to Up
// (Right -> 90 ccw, Down -> 180, Left -> 90 cw). Non-square inputs swap
// dimensions. Avatar metadata follows the pixels; facing becomes Up.
EgoObservation rotate(const Observation& obs);
EgoObservation rotate(const EgoObservation& ego);

// size x size tile window centered on the avatar; beyond-image area black.
// Requires a translated input (ConfigError otherwise).
EgoObservation crop(const EgoObservation& ego, int size);

// Movement actions chosen in the rotated (ego) frame map back to the world
// frame: ego Up means "forward along the avatar's facing". Noop and Use pass
// through.
Action ego_to_world_action(Action action, Direction facing);
Action world_to_ego_action(Action action, Direction facing);

// Full observation pipeline: render in tile space, then translate, rotate,
// crop as enabled, then scale to the configured output resolution.
EgoObservation apply_pipeline(const GameState& state, const RenderConfig& rcfg,
                              const TransformConfig& tcfg);

}  // namespace egogrid
