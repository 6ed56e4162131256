#include "egogrid/transforms.hpp"

#include <cstring>

#include "egogrid/errors.hpp"

namespace egogrid {

void TransformConfig::validate() const {
    if (crop && !translate) {
        throw ConfigError("crop requires translate (the window is avatar-centered)");
    }
    if (crop && (crop_size < 3 || crop_size % 2 == 0)) {
        throw ConfigError("crop_size must be odd and >= 3, got " + std::to_string(crop_size));
    }
}

std::vector<TransformConfig> legal_transform_configs(int crop_size) {
    std::vector<TransformConfig> configs;
    for (int c = 0; c <= 1; ++c) {
        for (int t = 0; t <= 1; ++t) {
            for (int r = 0; r <= 1; ++r) {
                if (c && !t) continue;
                TransformConfig cfg;
                cfg.crop = c != 0;
                cfg.translate = t != 0;
                cfg.rotate = r != 0;
                cfg.crop_size = crop_size;
                configs.push_back(cfg);
            }
        }
    }
    return configs;
}

namespace {

Observation black_canvas(const Observation& like, int tile_rows, int tile_cols) {
    Observation out;
    out.channels = like.channels;
    out.tile_size = like.tile_size;
    out.height = tile_rows * like.tile_size;
    out.width = tile_cols * like.tile_size;
    out.facing = like.facing;
    out.pixels.assign(static_cast<size_t>(out.channels * out.height * out.width), 0);
    return out;
}

// Copies src whole into dst with its top-left corner at pixel (y0, x0).
void blit(Observation& dst, const Observation& src, int y0, int x0) {
    for (int c = 0; c < src.channels; ++c) {
        for (int y = 0; y < src.height; ++y) {
            uint8_t* d =
                dst.pixels.data() +
                (static_cast<size_t>(c) * dst.height + (y0 + y)) * dst.width + x0;
            const uint8_t* s =
                src.pixels.data() + (static_cast<size_t>(c) * src.height + y) * src.width;
            std::memcpy(d, s, static_cast<size_t>(src.width));
        }
    }
}

// One quarter-turn counterclockwise: out(y, x) = in(x, W-1-y).
Observation rotate_ccw_once(const Observation& in) {
    Observation out;
    out.channels = in.channels;
    out.height = in.width;
    out.width = in.height;
    out.tile_size = in.tile_size;
    out.facing = in.facing;
    out.pixels.resize(in.pixels.size());
    for (int c = 0; c < in.channels; ++c) {
        for (int y = 0; y < out.height; ++y) {
            for (int x = 0; x < out.width; ++x) {
                out.at(c, y, x) = in.at(c, x, in.width - 1 - y);
            }
        }
    }
    // Tile coordinates follow the same map.
    out.avatar = {in.width / in.tile_size - 1 - in.avatar.col, in.avatar.row};
    return out;
}

}  // namespace

EgoObservation translate(const Observation& obs) {
    const int rows = obs.tile_rows(), cols = obs.tile_cols();
    const int out_rows = 2 * rows - 1, out_cols = 2 * cols - 1;
    EgoObservation ego;
    ego.frame = Frame::Ego;
    ego.applied.translate = true;
    ego.obs = black_canvas(obs, out_rows, out_cols);
    // Avatar tile lands on the center tile.
    const int off_r = (rows - 1) - obs.avatar.row;
    const int off_c = (cols - 1) - obs.avatar.col;
    blit(ego.obs, obs, off_r * obs.tile_size, off_c * obs.tile_size);
    ego.obs.avatar = {rows - 1, cols - 1};
    return ego;
}

EgoObservation rotate(const Observation& obs) {
    EgoObservation ego;
    ego.frame = Frame::Ego;
    ego.applied.rotate = true;
    ego.obs = obs;
    const int quarter_turns = static_cast<int>(obs.facing);
    for (int i = 0; i < quarter_turns; ++i) {
        ego.obs = rotate_ccw_once(ego.obs);
    }
    ego.obs.facing = Direction::Up;
    return ego;
}

EgoObservation rotate(const EgoObservation& in) {
    EgoObservation ego = rotate(in.obs);
    ego.applied = in.applied;
    ego.applied.rotate = true;
    return ego;
}

EgoObservation crop(const EgoObservation& in, int size) {
    if (!in.applied.translate) {
        throw ConfigError("crop applied to an untranslated observation");
    }
    if (size < 3 || size % 2 == 0) {
        throw ConfigError("crop size must be odd and >= 3, got " + std::to_string(size));
    }
    const Observation& src = in.obs;
    const int radius = (size - 1) / 2;
    EgoObservation ego;
    ego.frame = Frame::Ego;
    ego.applied = in.applied;
    ego.applied.crop = true;
    ego.applied.crop_size = size;
    ego.obs = black_canvas(src, size, size);
    ego.obs.avatar = {radius, radius};

    const int ts = src.tile_size;
    for (int tr = 0; tr < size; ++tr) {
        int sr = src.avatar.row - radius + tr;
        if (sr < 0 || sr >= src.tile_rows()) continue;
        for (int tc = 0; tc < size; ++tc) {
            int sc = src.avatar.col - radius + tc;
            if (sc < 0 || sc >= src.tile_cols()) continue;
            for (int c = 0; c < src.channels; ++c) {
                for (int y = 0; y < ts; ++y) {
                    uint8_t* d = ego.obs.pixels.data() +
                                 (static_cast<size_t>(c) * ego.obs.height + tr * ts + y) *
                                     ego.obs.width +
                                 tc * ts;
                    const uint8_t* s =
                        src.pixels.data() +
                        (static_cast<size_t>(c) * src.height + sr * ts + y) * src.width +
                        sc * ts;
                    std::memcpy(d, s, static_cast<size_t>(ts));
                }
            }
        }
    }
    return ego;
}

Action ego_to_world_action(Action action, Direction facing) {
    if (!is_movement(action)) return action;
    int dir = static_cast<int>(action_direction(action));
    int world = (dir + static_cast<int>(facing)) % 4;
    return direction_action(static_cast<Direction>(world));
}

Action world_to_ego_action(Action action, Direction facing) {
    if (!is_movement(action)) return action;
    int dir = static_cast<int>(action_direction(action));
    int ego = (dir - static_cast<int>(facing) + 4) % 4;
    return direction_action(static_cast<Direction>(ego));
}

EgoObservation apply_pipeline(const GameState& state, const RenderConfig& rcfg,
                              const TransformConfig& tcfg) {
    tcfg.validate();
    EgoObservation ego;
    ego.obs = render(state, rcfg);
    ego.frame = Frame::World;
    if (tcfg.translate) {
        ego = translate(ego.obs);
    }
    if (tcfg.rotate) {
        ego = rotate(ego);
    }
    if (tcfg.crop) {
        ego = crop(ego, tcfg.crop_size);
    }
    ego.obs = scale(ego.obs, rcfg.out_height, rcfg.out_width);
    ego.applied.crop_size = tcfg.crop_size;
    if (ego.applied != tcfg) {
        // All enabled stages must have run.
        throw ConfigError("transform pipeline bookkeeping mismatch");
    }
    return ego;
}

}  // namespace egogrid
