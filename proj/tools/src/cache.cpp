#include "qschur_cli/cache.hpp"

#include <cstdlib>
#include <fstream>

#include "qschur_cli/io.hpp"

namespace qschur::cli {

namespace fs = std::filesystem;

namespace {

std::optional<json> read_json(const fs::path& p)
{
    std::ifstream in(p);
    if (!in)
        return std::nullopt;
    try {
        return json::parse(in);
    } catch (const json::parse_error&) {
        return std::nullopt;
    }
}

void write_json(const fs::path& p, const json& j)
{
    const fs::path tmp = p.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw std::runtime_error("cache: cannot write " + tmp.string());
        out << j.dump(1) << "\n";
    }
    fs::rename(tmp, p);
}

}  // namespace

CanonicalCache::CanonicalCache(fs::path dir) : dir_(std::move(dir)) {}

std::optional<CanonicalCache> CanonicalCache::from_options(const std::string& cli_dir)
{
    if (!cli_dir.empty())
        return CanonicalCache(cli_dir);
    if (const char* env = std::getenv(kEnvVar); env && *env)
        return CanonicalCache(env);
    return std::nullopt;
}

std::string CanonicalCache::key(const Context& ctx, const ThetaMatrix& a)
{
    std::string k = family_name(ctx.family) + "_n" + std::to_string(ctx.n);
    if (is_finite_family(ctx.family))
        k += "_d" + std::to_string(ctx.d);
    k += "_";
    bool first = true;
    for (const auto& row : a.rows())
        for (int x : row) {
            if (!first)
                k += '.';
            first = false;
            k += x < 0 ? "m" + std::to_string(-x) : std::to_string(x);
        }
    return k;
}

std::optional<Element> CanonicalCache::load(const Context& ctx, const ThetaMatrix& a) const
{
    const auto j = read_json(dir_ / "canonical" / (key(ctx, a) + ".json"));
    if (!j || j->value("format_version", 0) != kFormatVersion || !j->contains("element"))
        return std::nullopt;
    try {
        Element x = element_from_json(j->at("element"));
        if (x.context() != ctx || matrix_from_json(j->at("matrix")) != a)
            return std::nullopt;
        return x;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void CanonicalCache::store(const Context& ctx, const ThetaMatrix& a, const Element& x) const
{
    fs::create_directories(dir_ / "canonical");
    const std::string k = key(ctx, a);
    write_json(dir_ / "canonical" / (k + ".json"),
               {{"format_version", kFormatVersion}, {"matrix", to_json(a)}, {"element", to_json(x)}});

    json manifest = read_json(dir_ / "manifest.json").value_or(json::object());
    if (manifest.value("format_version", 0) != kFormatVersion)
        manifest = {{"format_version", kFormatVersion}, {"entries", json::object()}};
    manifest["entries"][k] = "canonical/" + k + ".json";
    write_json(dir_ / "manifest.json", manifest);
}

}  // namespace qschur::cli
