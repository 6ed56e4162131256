#include "egogrid/render.hpp"

#include <algorithm>

#include "egogrid/errors.hpp"

namespace egogrid {

namespace {

uint8_t luma(Rgb c) {
    return static_cast<uint8_t>((299 * c[0] + 587 * c[1] + 114 * c[2]) / 1000);
}

struct Canvas {
    Observation* obs;
    bool gray;

    void fill_tile(Position tile, int ts, Rgb color) {
        rect(tile.row * ts, tile.col * ts, ts, ts, color);
    }
    void rect(int y0, int x0, int h, int w, Rgb color) {
        for (int y = y0; y < y0 + h; ++y) {
            for (int x = x0; x < x0 + w; ++x) {
                if (gray) {
                    obs->at(0, y, x) = luma(color);
                } else {
                    obs->at(0, y, x) = color[0];
                    obs->at(1, y, x) = color[1];
                    obs->at(2, y, x) = color[2];
                }
            }
        }
    }
};

// Sprite details on top of the base colors. Everything stays inside the tile.
void draw_key_detail(Canvas& cv, Position tile, int ts) {
    if (ts < 3) return;
    int t = std::max(1, ts / 4);
    cv.rect(tile.row * ts + t, tile.col * ts + t, t, t, {90, 70, 0});
}

void draw_door_detail(Canvas& cv, Position tile, int ts) {
    if (ts < 3) return;
    int t = std::max(1, ts / 4);
    cv.rect(tile.row * ts + t, tile.col * ts + t, ts - 2 * t, ts - 2 * t, {90, 45, 12});
}

// Oriented avatar: a white nose bar on the facing edge rotates with the
// avatar, and a dark corner dot stays fixed in the world frame. After the
// rotation transform the nose always points up but the dot lands in a
// facing-dependent corner, so the sprite leaks global orientation exactly
// like detailed avatar art does.
void draw_oriented_avatar(Canvas& cv, Position tile, int ts, Direction facing) {
    cv.fill_tile(tile, ts, avatar_color());
    if (ts < 2) return;
    int t = std::max(1, ts / 4);
    int y0 = tile.row * ts, x0 = tile.col * ts;
    Rgb nose{255, 255, 255};
    switch (facing) {
        case Direction::Up: cv.rect(y0, x0, t, ts, nose); break;
        case Direction::Down: cv.rect(y0 + ts - t, x0, t, ts, nose); break;
        case Direction::Left: cv.rect(y0, x0, ts, t, nose); break;
        case Direction::Right: cv.rect(y0, x0 + ts - t, ts, t, nose); break;
    }
    cv.rect(y0, x0, t, t, {40, 10, 25});
}

}  // namespace

Rgb entity_color(EntityKind kind) {
    switch (kind) {
        case EntityKind::Wall: return {130, 130, 130};
        case EntityKind::Key: return {255, 215, 0};
        case EntityKind::Door: return {150, 75, 20};
        case EntityKind::Enemy: return {200, 30, 30};
        case EntityKind::Dirt: return {110, 70, 30};
        case EntityKind::Boulder: return {170, 170, 170};
        case EntityKind::Diamond: return {0, 170, 255};
        case EntityKind::Exit: return {40, 160, 40};
        case EntityKind::Gem: return {0, 230, 120};
        case EntityKind::Turret: return {235, 140, 0};
        case EntityKind::Bullet: return {255, 60, 60};
    }
    return {255, 0, 255};
}

Rgb floor_color() { return {40, 40, 40}; }

Rgb avatar_color() { return {255, 105, 180}; }

Observation render(const GameState& state, const RenderConfig& cfg) {
    if (cfg.tile_size < 1) throw ConfigError("tile_size must be >= 1");
    const int ts = cfg.tile_size;
    Observation obs;
    obs.channels = cfg.color == ColorMode::Gray ? 1 : 3;
    obs.height = state.height * ts;
    obs.width = state.width * ts;
    obs.tile_size = ts;
    obs.avatar = state.avatar;
    obs.facing = state.facing;
    obs.pixels.assign(static_cast<size_t>(obs.channels * obs.height * obs.width), 0);

    Canvas cv{&obs, cfg.color == ColorMode::Gray};
    cv.rect(0, 0, obs.height, obs.width, floor_color());

    const bool flat = cfg.avatar_mode == AvatarMode::ReplaceAll;
    for (const Entity& e : state.entities) {
        cv.fill_tile(e.pos, ts, entity_color(e.kind));
        if (flat) continue;
        if (e.kind == EntityKind::Key) draw_key_detail(cv, e.pos, ts);
        if (e.kind == EntityKind::Door) draw_door_detail(cv, e.pos, ts);
    }

    if (cfg.avatar_mode == AvatarMode::Original) {
        draw_oriented_avatar(cv, state.avatar, ts, state.facing);
    } else {
        cv.fill_tile(state.avatar, ts, avatar_color());
    }
    return obs;
}

Observation scale(const Observation& obs, int out_height, int out_width) {
    if (out_height < 1 || out_width < 1) throw ConfigError("bad scale resolution");
    if (out_height == obs.height && out_width == obs.width) return obs;
    Observation out;
    out.channels = obs.channels;
    out.height = out_height;
    out.width = out_width;
    out.avatar = obs.avatar;
    out.facing = obs.facing;
    out.tile_size = obs.tile_size;
    out.pixels.resize(static_cast<size_t>(out.channels * out_height * out_width));
    for (int c = 0; c < out.channels; ++c) {
        for (int y = 0; y < out_height; ++y) {
            int sy = static_cast<int>(static_cast<int64_t>(y) * obs.height / out_height);
            for (int x = 0; x < out_width; ++x) {
                int sx = static_cast<int>(static_cast<int64_t>(x) * obs.width / out_width);
                out.at(c, y, x) = obs.at(c, sy, sx);
            }
        }
    }
    return out;
}

void FrameStack::reset(const Observation& frame) {
    frames_.assign(static_cast<size_t>(k_), frame);
}

void FrameStack::push(const Observation& frame) {
    if (frames_.empty()) {
        reset(frame);
        return;
    }
    if (frame.channels != frames_[0].channels || frame.height != frames_[0].height ||
        frame.width != frames_[0].width) {
        throw ConfigError("frame shape mismatch in FrameStack::push");
    }
    frames_.erase(frames_.begin());
    frames_.push_back(frame);
}

std::vector<uint8_t> FrameStack::stacked() const {
    std::vector<uint8_t> out;
    if (frames_.empty()) return out;
    out.reserve(frames_.size() * frames_[0].pixels.size());
    for (const Observation& f : frames_) {
        out.insert(out.end(), f.pixels.begin(), f.pixels.end());
    }
    return out;
}

}  // namespace egogrid
