#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "qschur_cli/cache.hpp"
#include "qschur_cli/commands.hpp"
#include "qschur_cli/io.hpp"

using namespace qschur;
using namespace qschur::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "qschur");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name)
{
    const fs::path p = fs::temp_directory_path() / ("qschur_test_" + name + "_" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

}  // namespace

TEST(Io, MatrixRoundTrip)
{
    for (const auto& a : enumerate({SetKind::Xi, 2, 2})) {
        const std::string s = format_matrix(a);
        EXPECT_EQ(parse_matrix(s), a);
        EXPECT_EQ(parse_matrix(s, 2), a);
    }
    EXPECT_EQ(parse_matrix(" [ [1, 0,0] ,[0,1,0],[0,0,1] ] "), ThetaMatrix::diag({1, 1, 1}));
}

TEST(Io, MatrixRejectsAmbiguousInput)
{
    for (const char* bad : {"[1,0,0,0,1,0,0,0,1]", "[[1,0],[0,1]]", "[[1,0,0],[0,1],[0,0,1]]",
                            "[[1,2,0],[0,1,0],[0,0,1]]", "[[1,0,0],[0,1,0],[0,0,1]] x", "[[1,0,0],[0,a,0],[0,0,1]]",
                            "", "[[1.5,0,0],[0,1,0],[0,0,1.5]]"})
        EXPECT_THROW(parse_matrix(bad), InputError) << bad;
    EXPECT_THROW(parse_matrix("[[1,0,0],[0,1,0],[0,0,1]]", 2), InputError);
}

TEST(Io, WordsAndWindows)
{
    EXPECT_EQ(parse_word("1,3,2"), (Word{1, 3, 2}));
    EXPECT_EQ(parse_word("[1,3,2]"), (Word{1, 3, 2}));
    EXPECT_EQ(format_word({1, 3, 2}), "[1,3,2]");
    const WeightWindow w = parse_window("[-2,4]");
    EXPECT_EQ(w.lo, -2);
    EXPECT_EQ(w.hi, 4);
    EXPECT_THROW(parse_window("4,-2"), InputError);
    EXPECT_THROW(parse_word("1,,2"), InputError);
}

TEST(Io, JsonRoundTrip)
{
    const Algebra alg(Context{Family::SchurJ, 1, 2});
    for (const auto& a : enumerate(alg.labels())) {
        const Element x = alg.canonical(a);
        EXPECT_EQ(element_from_json(to_json(x)), x);
        EXPECT_EQ(element_from_json(json::parse(to_json(x).dump())), x);
    }
    const Laurent p = Laurent::from_terms({{-3, 2}, {0, -1}, {5, 7}});
    EXPECT_EQ(laurent_from_json(to_json(p)), p);

    const TensorSpace sp{1, 2, true};
    TensorElement t;
    t.add({1, 3}, p);
    t.add({3, 3}, Laurent(1));
    TensorSpace back;
    EXPECT_EQ(tensor_from_json(to_json(sp, t), &back), t);
    EXPECT_EQ(back.n, 1);
    EXPECT_TRUE(back.iota);
}

TEST(Io, JsonRejectsForeignLabels)
{
    json j = {{"family", "schur-j"}, {"n", 1}, {"d", 1},
              {"terms", {{{"matrix", {{1, 0, 0}, {0, 3, 0}, {0, 0, 1}}}, {"coeff", {{0, 1}}}}}}};
    EXPECT_THROW(element_from_json(j), std::invalid_argument);
}

TEST(Cache, KeyEncodesNegativeEntries)
{
    const ThetaMatrix a = ThetaMatrix::from_rows(1, {{-1, 2, 0}, {0, 3, 0}, {0, 2, -1}});
    EXPECT_EQ(CanonicalCache::key(Context{Family::Kj, 1, 0}, a), "kj_n1_m1.2.0.0.3.0.0.2.m1");
}

TEST(Cache, StoreAndLoad)
{
    const fs::path dir = scratch_dir("cache");
    const CanonicalCache cache(dir);
    const Algebra alg(Context{Family::SchurJ, 1, 2});
    const ThetaMatrix a = enumerate(alg.labels()).back();
    EXPECT_FALSE(cache.load(alg.context(), a));
    cache.store(alg.context(), a, alg.canonical(a));
    const auto hit = cache.load(alg.context(), a);
    ASSERT_TRUE(hit);
    EXPECT_EQ(*hit, alg.canonical(a));
    EXPECT_FALSE(cache.load(Context{Family::SchurJ, 1, 3}, a));
    EXPECT_TRUE(fs::exists(dir / "manifest.json"));
    fs::remove_all(dir);
}

TEST(Command, CanonicalOutputIsStableAcrossCacheHits)
{
    const fs::path dir = scratch_dir("run");
    const std::vector<std::string> args{"canonical", "--family", "kj", "--n", "1", "--matrix",
                                        "[[1,2,0],[0,1,0],[0,2,1]]", "--format", "json", "--cache-dir",
                                        dir.string()};
    const Result cold = run_cli(args);
    const Result warm = run_cli(args);
    EXPECT_EQ(cold.code, kOk) << cold.err;
    EXPECT_EQ(warm.code, kOk) << warm.err;
    EXPECT_EQ(cold.out, warm.out);
    const Result uncached = run_cli({"canonical", "--family", "kj", "--n", "1", "--matrix",
                                     "[[1,2,0],[0,1,0],[0,2,1]]", "--format", "json"});
    EXPECT_EQ(uncached.out, cold.out);
    fs::remove_all(dir);
}

TEST(Command, ExitCodes)
{
    EXPECT_EQ(run_cli({"enumerate", "--set", "Xi", "--n", "1", "--d", "1"}).code, kOk);
    EXPECT_EQ(run_cli({}).code, kInvalidInput);
    EXPECT_EQ(run_cli({"enumerate", "--set", "Zeta"}).code, kInvalidInput);
    EXPECT_EQ(run_cli({"canonical", "--n", "1", "--d", "1", "--matrix", "[1,2,3]"}).code, kInvalidInput);
    EXPECT_EQ(run_cli({"canonical", "--n", "1", "--d", "1", "--matrix", "[[1,0,0],[0,3,0],[0,0,1]]"}).code,
              kInvalidInput);
    EXPECT_EQ(run_cli({"verify", "oracle", "--n", "1", "--d", "1", "--q", "9"}).code, kInvalidInput);
    EXPECT_EQ(run_cli({"verify", "stabilization", "--n", "2"}).code, kInvalidInput);
    EXPECT_EQ(run_cli({"act", "--n", "1", "--d", "2", "--word", "1,4", "--hecke", "1"}).code, kInvalidInput);
    EXPECT_EQ(run_cli({"mul", "--n", "1", "--d", "1", "--a", "[[1,0,0],[0,1,0],[0,0,1]]"}).code, kInvalidInput);
}

TEST(Command, EnumerateFormats)
{
    const Result pretty = run_cli({"enumerate", "--set", "Xi", "--n", "1", "--d", "1"});
    EXPECT_NE(pretty.out.find("5 elements"), std::string::npos);
    const Result js = run_cli({"enumerate", "--set", "IPi", "--n", "2", "--d", "2", "--format", "json"});
    EXPECT_EQ(json::parse(js.out).at("count"), 16);
    const Result csv = run_cli({"enumerate", "--set", "Pi", "--n", "1", "--d", "2", "--format", "csv"});
    EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 10);
}

TEST(Command, MulAndBar)
{
    const Result r = run_cli({"mul", "--n", "1", "--d", "1", "--a", "[[0,0,0],[1,1,1],[0,0,0]]", "--b",
                              "[[0,1,0],[0,1,0],[0,1,0]]", "--format", "json"});
    ASSERT_EQ(r.code, kOk) << r.err;
    const Element x = element_from_json(json::parse(r.out));
    const Algebra alg(Context{Family::SchurJ, 1, 1});
    const auto m = [](std::vector<std::vector<int>> rows) { return ThetaMatrix::from_rows(1, rows); };
    EXPECT_EQ(x, alg.mul(alg.std(m({{0, 0, 0}, {1, 1, 1}, {0, 0, 0}})), alg.std(m({{0, 1, 0}, {0, 1, 0}, {0, 1, 0}}))));

    const fs::path dir = scratch_dir("bar");
    {
        std::ofstream(dir / "x.json") << to_json(x).dump();
    }
    const Result b = run_cli({"bar", "--n", "1", "--d", "1", "--x", (dir / "x.json").string(), "--format", "json"});
    ASSERT_EQ(b.code, kOk) << b.err;
    EXPECT_EQ(element_from_json(json::parse(b.out)), alg.bar(x));
    fs::remove_all(dir);
}

TEST(Command, ActMatchesLibrary)
{
    const Result r = run_cli({"act", "--n", "1", "--d", "1", "--word", "1", "--hecke", "1", "--format", "json"});
    ASSERT_EQ(r.code, kOk) << r.err;
    EXPECT_EQ(tensor_from_json(json::parse(r.out)), TensorElement::basis({3}));
}

TEST(Command, VerifySuite)
{
    const Result r = run_cli({"verify", "duality", "--n", "1", "--d", "1", "--format", "json"});
    EXPECT_EQ(r.code, kOk) << r.err;
    EXPECT_TRUE(json::parse(r.out).at("passed").get<bool>());
}
