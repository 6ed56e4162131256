#include <cstdio>
#include <cstring>

#include <zlib.h>

#include "egogrid/errors.hpp"
#include "egogrid/render.hpp"

namespace egogrid {

namespace {

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
    out.push_back(static_cast<uint8_t>(v >> 24));
    out.push_back(static_cast<uint8_t>(v >> 16));
    out.push_back(static_cast<uint8_t>(v >> 8));
    out.push_back(static_cast<uint8_t>(v));
}

void put_chunk(std::vector<uint8_t>& out, const char type[4], const std::vector<uint8_t>& data) {
    put_u32(out, static_cast<uint32_t>(data.size()));
    size_t start = out.size();
    out.insert(out.end(), type, type + 4);
    out.insert(out.end(), data.begin(), data.end());
    uint32_t crc = static_cast<uint32_t>(
        crc32(0, out.data() + start, static_cast<uInt>(out.size() - start)));
    put_u32(out, crc);
}

}  // namespace

void write_png(const std::string& path, const Observation& obs) {
    if (obs.channels != 1 && obs.channels != 3) {
        throw ConfigError("PNG dump supports 1 or 3 channels, got " +
                          std::to_string(obs.channels));
    }
    const int h = obs.height, w = obs.width, ch = obs.channels;

    // CHW -> interleaved scanlines, each prefixed with filter byte 0.
    std::vector<uint8_t> raw(static_cast<size_t>(h) * (1 + static_cast<size_t>(w) * ch));
    size_t at = 0;
    for (int y = 0; y < h; ++y) {
        raw[at++] = 0;
        for (int x = 0; x < w; ++x) {
            for (int c = 0; c < ch; ++c) {
                raw[at++] = obs.at(c, y, x);
            }
        }
    }

    uLongf bound = compressBound(static_cast<uLong>(raw.size()));
    std::vector<uint8_t> compressed(bound);
    if (compress2(compressed.data(), &bound, raw.data(), static_cast<uLong>(raw.size()), 6) !=
        Z_OK) {
        throw IoError("zlib compression failed for " + path);
    }
    compressed.resize(bound);

    std::vector<uint8_t> png = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
    std::vector<uint8_t> ihdr;
    put_u32(ihdr, static_cast<uint32_t>(w));
    put_u32(ihdr, static_cast<uint32_t>(h));
    ihdr.push_back(8);                            // bit depth
    ihdr.push_back(ch == 3 ? 2 : 0);              // color type: truecolor / gray
    ihdr.push_back(0);                            // compression
    ihdr.push_back(0);                            // filter
    ihdr.push_back(0);                            // no interlace
    put_chunk(png, "IHDR", ihdr);
    put_chunk(png, "IDAT", compressed);
    put_chunk(png, "IEND", {});

    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (!f) throw IoError("cannot open " + path + " for writing");
    size_t written = std::fwrite(png.data(), 1, png.size(), f);
    std::fclose(f);
    if (written != png.size()) throw IoError("short write to " + path);
}

}  // namespace egogrid
