/**********************************************************************
*  Copyright 2026 the nsk authors
*
*  Licensed under the Apache License, Version 2.0 (the "License");
*  you may not use this file except in compliance with the License.
*  You may obtain a copy of the License at
*
*      http://www.apache.org/licenses/LICENSE-2.0
*
*  Unless required by applicable law or agreed to in writing, software
*  distributed under the License is distributed on an "AS IS" BASIS,
*  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
*  implied. See the License for the specific language governing
*  permissions and limitations under the License.
**********************************************************************/

#include "nsk/snapshot.hpp"

#include <cstring>
#include <fstream>

namespace nsk {

namespace {

constexpr char kMagic[4] = {'N', 'S', 'K', 'F'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& os, std::uint32_t v) {
    unsigned char b[4] = {static_cast<unsigned char>(v & 0xff),
                          static_cast<unsigned char>((v >> 8) & 0xff),
                          static_cast<unsigned char>((v >> 16) & 0xff),
                          static_cast<unsigned char>((v >> 24) & 0xff)};
    os.write(reinterpret_cast<const char*>(b), 4);
}

void put_f64(std::ostream& os, double d) {
    std::uint64_t v;
    std::memcpy(&v, &d, 8);
    unsigned char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
    os.write(reinterpret_cast<const char*>(b), 8);
}

struct Reader {
    std::ifstream in;
    std::size_t offset = 0;
    explicit Reader(const std::string& path) : in(path, std::ios::binary) {
        if (!in) throw SnapshotError("cannot open snapshot file: " + path);
    }

    void read_bytes(void* dst, std::size_t count) {
        in.read(reinterpret_cast<char*>(dst), static_cast<std::streamsize>(count));
        if (static_cast<std::size_t>(in.gcount()) != count)
            throw SnapshotError("short read at byte offset " + std::to_string(offset));
        offset += count;
    }

    std::uint32_t get_u32() {
        unsigned char b[4];
        read_bytes(b, 4);
        return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
               (static_cast<std::uint32_t>(b[2]) << 16) |
               (static_cast<std::uint32_t>(b[3]) << 24);
    }

    double get_f64() {
        unsigned char b[8];
        read_bytes(b, 8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
        double d;
        std::memcpy(&d, &v, 8);
        return d;
    }
};

}  // namespace

const ScalarField& Snapshot::field(const std::string& name) const {
    for (const auto& [n, f] : fields)
        if (n == name) return f;
    throw SnapshotError("snapshot has no field named '" + name + "'");
}

bool Snapshot::has(const std::string& name) const {
    for (const auto& [n, f] : fields)
        if (n == name) return true;
    return false;
}

void write_snapshot(const std::string& path, const GridSpec& grid,
                    const std::vector<std::pair<std::string, ScalarField>>& fields) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw SnapshotError("cannot open snapshot file for writing: " + path);
    os.write(kMagic, 4);
    put_u32(os, kVersion);
    put_u32(os, static_cast<std::uint32_t>(grid.dim));
    put_u32(os, static_cast<std::uint32_t>(grid.n));
    put_u32(os, static_cast<std::uint32_t>(fields.size()));
    for (const auto& [name, f] : fields) {
        require_same_grid(grid, f.grid, "write_snapshot");
        put_u32(os, static_cast<std::uint32_t>(name.size()));
        os.write(name.data(), static_cast<std::streamsize>(name.size()));
        for (double v : f.values) put_f64(os, v);
    }
    if (!os) throw SnapshotError("write failed: " + path);
}

Snapshot read_snapshot(const std::string& path) {
    Reader rd(path);
    char magic[4];
    rd.read_bytes(magic, 4);
    if (std::memcmp(magic, kMagic, 4) != 0)
        throw SnapshotError("magic mismatch: not a NSKF snapshot");
    std::uint32_t version = rd.get_u32();
    if (version != kVersion)
        throw SnapshotError("version mismatch: got " + std::to_string(version) +
                            ", expected " + std::to_string(kVersion));
    std::uint32_t dim = rd.get_u32();
    std::uint32_t n = rd.get_u32();
    std::uint32_t count = rd.get_u32();
    if (dim < 1 || dim > 3)
        throw SnapshotError("invalid dim " + std::to_string(dim));

    Snapshot snap;
    snap.grid = GridSpec(static_cast<int>(dim), static_cast<int>(n));
    const std::size_t npts = snap.grid.npoints();
    for (std::uint32_t f = 0; f < count; ++f) {
        std::uint32_t len = rd.get_u32();
        std::string name(len, '\0');
        rd.read_bytes(name.data(), len);
        ScalarField field(snap.grid);
        for (std::size_t i = 0; i < npts; ++i) field[i] = rd.get_f64();
        snap.fields.emplace_back(std::move(name), std::move(field));
    }
    return snap;
}

void write_state_snapshot(const std::string& path, const ScalarField& rho,
                          const VectorField& mom) {
    static const char* names[3] = {"mom_x", "mom_y", "mom_z"};
    std::vector<std::pair<std::string, ScalarField>> fields;
    fields.emplace_back("rho", rho);
    for (int a = 0; a < rho.grid.dim; ++a) fields.emplace_back(names[a], mom[a]);
    write_snapshot(path, rho.grid, fields);
}

}  // namespace nsk
