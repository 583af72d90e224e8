#include "solgeo/snapshot_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <vector>

#include "json.hpp"
#include "solgeo/errors.hpp"

namespace fs = std::filesystem;

namespace solgeo {

namespace {

static_assert(sizeof(double) == 8);
static_assert(sizeof(cd) == 16);  // interleaved (re, im) pairs

void atomic_write_bytes(const fs::path& path, const char* data, size_t n) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open for writing: " + tmp.string());
        out.write(data, static_cast<std::streamsize>(n));
        if (!out) throw Error("write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
}

nlohmann::json sidecar(const Grid2D& g, const std::string& kind, const std::string& name,
                       double time) {
    return {{"nx", g.nx}, {"ny", g.ny}, {"lx", g.lx}, {"ly", g.ly},
            {"kind", kind}, {"name", name}, {"time", time}};
}

void write_sidecar(const fs::path& stem, const nlohmann::json& meta) {
    fs::path jpath = stem;
    jpath += ".json";
    std::string text = meta.dump(2) + "\n";
    atomic_write_bytes(jpath, text.data(), text.size());
}

std::vector<char> read_bytes(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open: " + path.string());
    in.seekg(0, std::ios::end);
    auto n = in.tellg();
    in.seekg(0, std::ios::beg);
    std::vector<char> buf(static_cast<size_t>(n));
    in.read(buf.data(), n);
    if (!in) throw Error("read failed: " + path.string());
    return buf;
}

}  // namespace

void write_real_snapshot(const fs::path& stem, const RealField2D& f, const std::string& name,
                         double time) {
    fs::path bpath = stem;
    bpath += ".bin";
    atomic_write_bytes(bpath, reinterpret_cast<const char*>(f.v.data()),
                       f.v.size() * sizeof(double));
    write_sidecar(stem, sidecar(f.grid, "real", name, time));
}

void write_complex_snapshot(const fs::path& stem, const ComplexField2D& f,
                            const std::string& name, double time) {
    fs::path bpath = stem;
    bpath += ".bin";
    atomic_write_bytes(bpath, reinterpret_cast<const char*>(f.v.data()), f.v.size() * sizeof(cd));
    write_sidecar(stem, sidecar(f.grid, "complex", name, time));
}

Snapshot read_snapshot(const fs::path& stem) {
    fs::path jpath = stem, bpath = stem;
    jpath += ".json";
    bpath += ".bin";
    std::ifstream jin(jpath);
    if (!jin) throw Error("cannot open: " + jpath.string());
    nlohmann::json meta = nlohmann::json::parse(jin);

    Grid2D g(meta.at("nx").get<int>(), meta.at("ny").get<int>(), meta.at("lx").get<double>(),
             meta.at("ly").get<double>());
    Snapshot s;
    s.kind = meta.at("kind").get<std::string>();
    s.name = meta.value("name", std::string{});
    s.time = meta.value("time", 0.0);

    std::vector<char> buf = read_bytes(bpath);
    size_t want = static_cast<size_t>(g.size()) * (s.kind == "complex" ? sizeof(cd) : sizeof(double));
    if (s.kind != "real" && s.kind != "complex")
        throw Error("snapshot kind must be real or complex: " + jpath.string());
    if (buf.size() != want)
        throw Error("snapshot size mismatch: " + bpath.string() + " has " +
                    std::to_string(buf.size()) + " bytes, sidecar implies " + std::to_string(want));

    if (s.kind == "real") {
        s.real_field = RealField2D(g);
        std::memcpy(s.real_field.v.data(), buf.data(), want);
    } else {
        s.complex_field = ComplexField2D(g);
        std::memcpy(s.complex_field.v.data(), buf.data(), want);
    }
    return s;
}

void atomic_write_text(const fs::path& path, const std::string& text) {
    atomic_write_bytes(path, text.data(), text.size());
}

}  // namespace solgeo
