#ifndef SOLGEO_SNAPSHOT_IO_HPP
#define SOLGEO_SNAPSHOT_IO_HPP

#include <filesystem>
#include <string>

#include "solgeo/field.hpp"

namespace solgeo {

// On-disk field format: <stem>.bin holds raw little-endian 8-byte IEEE-754
// values in x-fastest order (complex interleaves re, im); <stem>.json is the
// sidecar {nx, ny, lx, ly, kind, name, time}.  All writes go through a
// temp-file-then-rename so readers never observe partial files.

void write_real_snapshot(const std::filesystem::path& stem, const RealField2D& f,
                         const std::string& name, double time);
void write_complex_snapshot(const std::filesystem::path& stem, const ComplexField2D& f,
                            const std::string& name, double time);

struct Snapshot {
    std::string kind;  // "real" | "complex"
    std::string name;
    double time = 0;
    RealField2D real_field;        // populated when kind == "real"
    ComplexField2D complex_field;  // populated when kind == "complex"

    const Grid2D& grid() const {
        return kind == "real" ? real_field.grid : complex_field.grid;
    }
};
Snapshot read_snapshot(const std::filesystem::path& stem);

// atomic text write shared by sidecars, manifests, reports
void atomic_write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace solgeo

#endif
