#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "qschur/algebra.hpp"

namespace qschur::cli {

// On-disk store of canonical basis elements: one JSON file per
// (context, matrix) under <dir>/canonical/ and an index manifest.json.
// Entries written under another format version are ignored and rewritten.
class CanonicalCache {
public:
    static constexpr int kFormatVersion = 1;
    static constexpr const char* kEnvVar = "QSCHUR_CACHE_DIR";

    explicit CanonicalCache(std::filesystem::path dir);

    // --cache-dir if given, else the environment variable, else no cache
    static std::optional<CanonicalCache> from_options(const std::string& cli_dir);

    const std::filesystem::path& dir() const { return dir_; }

    std::optional<Element> load(const Context& ctx, const ThetaMatrix& a) const;
    void store(const Context& ctx, const ThetaMatrix& a, const Element& x) const;

    // entry key, also used as the file stem
    static std::string key(const Context& ctx, const ThetaMatrix& a);

private:
    std::filesystem::path dir_;
};

}  // namespace qschur::cli
