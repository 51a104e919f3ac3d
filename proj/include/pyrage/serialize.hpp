#pragma once

#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pyrage/layers.hpp"

namespace pyrage {

/// Binary container for named float32 tensors: magic, version, entry count,
/// then per entry {name, dims, raw data}. Little-endian, fixed-width fields.
inline void save_tensors(const std::string& path, const std::vector<nn::Param<float>>& entries) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open for write: " + path);
    const char magic[4] = {'P', 'Y', 'R', 'T'};
    std::uint32_t version = 1, count = static_cast<std::uint32_t>(entries.size());
    f.write(magic, 4);
    f.write(reinterpret_cast<const char*>(&version), 4);
    f.write(reinterpret_cast<const char*>(&count), 4);
    for (const auto& e : entries) {
        std::uint32_t nl = static_cast<std::uint32_t>(e.name.size());
        f.write(reinterpret_cast<const char*>(&nl), 4);
        f.write(e.name.data(), nl);
        std::uint32_t nd = static_cast<std::uint32_t>(e.value->shape.size());
        f.write(reinterpret_cast<const char*>(&nd), 4);
        for (int d : e.value->shape) {
            std::int32_t dd = d;
            f.write(reinterpret_cast<const char*>(&dd), 4);
        }
        f.write(reinterpret_cast<const char*>(e.value->ptr()),
                static_cast<std::streamsize>(e.value->size() * sizeof(float)));
    }
    if (!f) throw std::runtime_error("write failed: " + path);
}

/// Loads into an already-built registry; names and shapes must match exactly.
inline void load_tensors(const std::string& path, const std::vector<nn::Param<float>>& entries) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open: " + path);
    char magic[4];
    std::uint32_t version = 0, count = 0;
    f.read(magic, 4);
    f.read(reinterpret_cast<char*>(&version), 4);
    f.read(reinterpret_cast<char*>(&count), 4);
    if (!f || std::string(magic, 4) != "PYRT" || version != 1)
        throw std::runtime_error("bad tensor container: " + path);
    if (count != entries.size())
        throw std::runtime_error("tensor count mismatch in " + path + ": file has " +
                                 std::to_string(count) + ", expected " +
                                 std::to_string(entries.size()));
    for (const auto& e : entries) {
        std::uint32_t nl = 0;
        f.read(reinterpret_cast<char*>(&nl), 4);
        std::string name(nl, '\0');
        f.read(name.data(), nl);
        if (name != e.name)
            throw std::runtime_error("tensor name mismatch in " + path + ": " + name +
                                     " vs " + e.name);
        std::uint32_t nd = 0;
        f.read(reinterpret_cast<char*>(&nd), 4);
        std::vector<int> shape(nd);
        for (auto& d : shape) {
            std::int32_t dd = 0;
            f.read(reinterpret_cast<char*>(&dd), 4);
            d = dd;
        }
        if (shape != e.value->shape)
            throw std::runtime_error("tensor shape mismatch for " + name + " in " + path);
        f.read(reinterpret_cast<char*>(e.value->ptr()),
               static_cast<std::streamsize>(e.value->size() * sizeof(float)));
        if (!f) throw std::runtime_error("truncated tensor container: " + path);
    }
}

}  // namespace pyrage
