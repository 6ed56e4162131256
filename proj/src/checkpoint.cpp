#include "egogrid/checkpoint.hpp"

#include <cstdio>
#include <cstring>
#include <memory>

#include "egogrid/errors.hpp"

namespace egogrid {

namespace {

constexpr char kMagic[8] = {'E', 'G', 'O', 'G', 'R', 'D', 'C', 'K'};
constexpr uint32_t kVersion = 1;

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

void write_i32(std::FILE* f, int32_t v) {
    uint8_t b[4] = {static_cast<uint8_t>(v), static_cast<uint8_t>(v >> 8),
                    static_cast<uint8_t>(v >> 16), static_cast<uint8_t>(v >> 24)};
    std::fwrite(b, 1, 4, f);
}

int32_t read_i32(std::FILE* f) {
    uint8_t b[4];
    if (std::fread(b, 1, 4, f) != 4) throw CheckpointError("truncated checkpoint");
    return static_cast<int32_t>(b[0] | (b[1] << 8) | (b[2] << 16) |
                                (static_cast<uint32_t>(b[3]) << 24));
}

}  // namespace

void save_checkpoint(const std::string& path, const PolicyNet<float>& net) {
    FilePtr f(std::fopen(path.c_str(), "wb"));
    if (!f) throw IoError("cannot open " + path + " for writing");
    std::fwrite(kMagic, 1, sizeof(kMagic), f.get());
    write_i32(f.get(), static_cast<int32_t>(kVersion));
    const NetConfig& c = net.config();
    const int32_t fields[14] = {c.in_channels,
                                c.in_h,
                                c.in_w,
                                c.conv_channels[0],
                                c.conv_channels[1],
                                c.conv_channels[2],
                                c.conv_kernels[0],
                                c.conv_kernels[1],
                                c.conv_kernels[2],
                                c.conv_strides[0],
                                c.conv_strides[1],
                                c.conv_strides[2],
                                c.fc_width,
                                c.n_actions};
    for (int32_t v : fields) write_i32(f.get(), v);
    write_i32(f.get(), static_cast<int32_t>(net.param_count()));
    static_assert(sizeof(float) == 4);
    size_t written =
        std::fwrite(net.params().data(), sizeof(float), net.param_count(), f.get());
    if (written != net.param_count()) throw IoError("short write to " + path);
}

PolicyNet<float> load_checkpoint(const std::string& path) {
    FilePtr f(std::fopen(path.c_str(), "rb"));
    if (!f) throw CheckpointError("cannot open checkpoint " + path);
    char magic[8];
    if (std::fread(magic, 1, 8, f.get()) != 8 || std::memcmp(magic, kMagic, 8) != 0) {
        throw CheckpointError("bad magic in " + path + " (not an egogrid checkpoint)");
    }
    int32_t version = read_i32(f.get());
    if (version != static_cast<int32_t>(kVersion)) {
        throw CheckpointError("unsupported checkpoint version " + std::to_string(version) +
                              " in " + path + " (expected " + std::to_string(kVersion) + ")");
    }
    NetConfig c;
    c.in_channels = read_i32(f.get());
    c.in_h = read_i32(f.get());
    c.in_w = read_i32(f.get());
    for (int i = 0; i < 3; ++i) c.conv_channels[static_cast<size_t>(i)] = read_i32(f.get());
    for (int i = 0; i < 3; ++i) c.conv_kernels[static_cast<size_t>(i)] = read_i32(f.get());
    for (int i = 0; i < 3; ++i) c.conv_strides[static_cast<size_t>(i)] = read_i32(f.get());
    c.fc_width = read_i32(f.get());
    c.n_actions = read_i32(f.get());
    int32_t count = read_i32(f.get());

    PolicyNet<float> net(c, 0);
    if (count != static_cast<int32_t>(net.param_count())) {
        throw CheckpointError("architecture mismatch in " + path + ": file has " +
                              std::to_string(count) + " params, config implies " +
                              std::to_string(net.param_count()));
    }
    size_t got = std::fread(net.params().data(), sizeof(float), net.param_count(), f.get());
    if (got != net.param_count()) throw CheckpointError("truncated parameters in " + path);
    return net;
}

}  // namespace egogrid
