#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dexfod {

// Dense row-major 2-D array. Coordinates are (x, y) with x the column
// and y the row; index 0 is the top-left pixel.
template <typename T>
class Image2D {
public:
    Image2D() = default;
    Image2D(int width, int height, T fill = T{})
        : width_(width), height_(height),
          data_(static_cast<std::size_t>(width > 0 ? width : 0) *
                    static_cast<std::size_t>(height > 0 ? height : 0),
                fill) {
        if (width <= 0 || height <= 0)
            throw std::invalid_argument("Image2D: dimensions must be positive");
    }

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    T& operator()(int x, int y) { return data_[idx(x, y)]; }
    const T& operator()(int x, int y) const { return data_[idx(x, y)]; }
    T& operator[](std::size_t i) { return data_[i]; }
    const T& operator[](std::size_t i) const { return data_[i]; }

    std::vector<T>& data() { return data_; }
    const std::vector<T>& data() const { return data_; }

    bool same_shape(int w, int h) const { return width_ == w && height_ == h; }
    template <typename U>
    bool same_shape(const Image2D<U>& o) const {
        return same_shape(o.width(), o.height());
    }

    bool operator==(const Image2D&) const = default;

private:
    std::size_t idx(int x, int y) const {
        return static_cast<std::size_t>(y) * width_ + x;
    }
    int width_ = 0;
    int height_ = 0;
    std::vector<T> data_;
};

using Image = Image2D<double>;
using Mask = Image2D<std::uint8_t>;

inline std::size_t count_true(const Mask& m) {
    std::size_t n = 0;
    for (auto v : m.data()) n += (v != 0);
    return n;
}

inline bool all_finite(const Image& img) {
    for (double v : img.data())
        if (!std::isfinite(v)) return false;
    return true;
}

// Raw on-disk format: row-major little-endian 32-bit floats, no header.
// Shape travels separately (meta file or caller knowledge).
static_assert(std::endian::native == std::endian::little,
              "raw image I/O assumes a little-endian host");

inline void write_raw(const Image& img, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    std::vector<float> buf(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) buf[i] = static_cast<float>(img[i]);
    out.write(reinterpret_cast<const char*>(buf.data()),
              static_cast<std::streamsize>(buf.size() * sizeof(float)));
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

inline Image read_raw(const std::filesystem::path& path, int width, int height) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path.string());
    Image img(width, height);
    std::vector<float> buf(img.size());
    in.read(reinterpret_cast<char*>(buf.data()),
            static_cast<std::streamsize>(buf.size() * sizeof(float)));
    if (in.gcount() != static_cast<std::streamsize>(buf.size() * sizeof(float)))
        throw std::runtime_error("truncated raw image: " + path.string());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = buf[i];
    return img;
}

inline void write_raw_mask(const Mask& m, const std::filesystem::path& path) {
    Image img(m.width(), m.height());
    for (std::size_t i = 0; i < m.size(); ++i) img[i] = m[i] ? 1.0 : 0.0;
    write_raw(img, path);
}

inline Mask read_raw_mask(const std::filesystem::path& path, int width, int height) {
    Image img = read_raw(path, width, height);
    Mask m(width, height);
    for (std::size_t i = 0; i < img.size(); ++i) m[i] = img[i] > 0.5 ? 1 : 0;
    return m;
}

}  // namespace dexfod
