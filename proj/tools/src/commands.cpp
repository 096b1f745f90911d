#include "qschur_cli/commands.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qschur/checks.hpp"
#include "qschur/oracle.hpp"
#include "qschur/relations.hpp"
#include "qschur/stable.hpp"
#include "qschur/tensor.hpp"
#include "qschur_cli/cache.hpp"
#include "qschur_cli/io.hpp"

namespace qschur::cli {

namespace {

struct RunConfig {
    int n = 1;
    int d = 1;
    std::string family = "schur-j";
    std::string format = "pretty";
    std::string cache_dir;
    std::vector<long> q{3, 5};
    std::string window = "-2,4";
};

// desk-scale limits
constexpr int kMaxN = 5;
constexpr int kMaxD = 8;
constexpr int kMaxOracleD = 3;  // ambient dimension 2d+1 <= 7
constexpr long kMaxQ = 13;

bool is_odd_prime(long q)
{
    if (q < 3 || q % 2 == 0)
        return false;
    for (long k = 3; k * k <= q; k += 2)
        if (q % k == 0)
            return false;
    return true;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool family = true)
{
    sub->add_option("--n", cfg.n, "rank parameter n (N = 2n+1)")->check(CLI::Range(1, kMaxN));
    sub->add_option("--d", cfg.d, "degree d (D = 2d+1)")->check(CLI::Range(0, kMaxD));
    if (family)
        sub->add_option("--family", cfg.family, "schur-j, schur-i, kj, kj-greater or ki")
            ->check(CLI::IsMember({"schur-j", "schur-i", "kj", "kj-greater", "ki"}));
    sub->add_option("--format", cfg.format, "json, csv or pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
}

Context context_of(const RunConfig& cfg)
{
    Context c{parse_family(cfg.family), cfg.n, is_finite_family(parse_family(cfg.family)) ? cfg.d : 0};
    return c;
}

json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
}

ThetaMatrix label_arg(const Algebra& alg, const std::string& text)
{
    const ThetaMatrix a = parse_matrix(text, alg.context().n);
    if (!alg.is_label(a))
        throw InputError(format_matrix(a) + " is not a label of " + family_name(alg.context().family) +
                         (is_finite_family(alg.context().family) ? " with d = " + std::to_string(alg.context().d)
                                                                 : std::string()));
    return a;
}

Element element_arg(const Algebra& alg, const std::string& matrix, const std::string& file)
{
    if (!matrix.empty() && !file.empty())
        throw InputError("give a matrix or an element file, not both");
    if (!matrix.empty())
        return alg.std(label_arg(alg, matrix));
    if (file.empty())
        throw InputError("an operand is required");
    Element x = element_from_json(read_json_file(file));
    if (x.context() != alg.context())
        throw InputError(file + ": element belongs to another algebra");
    return x;
}

class Printer {
public:
    Printer(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

    void element(const Element& x, const std::string& label)
    {
        if (cfg_.format == "json")
            out_ << to_json(x).dump(1) << "\n";
        else if (cfg_.format == "csv")
            out_ << to_csv(x);
        else
            out_ << label << " = " << x.str() << "\n";
    }
    void tensor(const TensorSpace& sp, const TensorElement& x, const std::string& label)
    {
        if (cfg_.format == "json")
            out_ << to_json(sp, x).dump(1) << "\n";
        else if (cfg_.format == "csv")
            out_ << to_csv(x);
        else
            out_ << label << " = " << x.str() << "\n";
    }
    void reports(const std::string& suite, const std::vector<Report>& rs)
    {
        bool ok = true;
        for (const auto& r : rs)
            ok = ok && r.passed();
        if (cfg_.format == "json") {
            json arr = json::array();
            for (const auto& r : rs)
                arr.push_back(to_json(r));
            out_ << json{{"suite", suite}, {"passed", ok}, {"reports", arr}}.dump(1) << "\n";
        } else if (cfg_.format == "csv") {
            out_ << "suite,check,instances,failures,first_failure\n";
            for (const auto& r : rs)
                out_ << to_csv(r);
        } else {
            for (const auto& r : rs)
                out_ << r.str() << "\n";
            out_ << suite << ": " << (ok ? "pass" : "FAIL") << "\n";
        }
    }

private:
    const RunConfig& cfg_;
    std::ostream& out_;
};

// ---- subcommands ----------------------------------------------------------------

int cmd_enumerate(const RunConfig& cfg, const std::string& set, std::ostream& out)
{
    static const std::map<std::string, SetKind> kinds{
        {"Xi", SetKind::Xi}, {"IXi", SetKind::IXi}, {"Pi", SetKind::Pi}, {"IPi", SetKind::IPi}};
    const SetTag tag{kinds.at(set), cfg.n, cfg.d};
    std::vector<std::string> items;
    json arr = json::array();
    if (tag.kind == SetKind::Pi || tag.kind == SetKind::IPi) {
        for (const auto& w : enumerate_words(tag)) {
            items.push_back(format_word(w));
            arr.push_back(w);
        }
    } else {
        for (const auto& a : enumerate(tag)) {
            items.push_back(format_matrix(a));
            arr.push_back(to_json(a));
        }
    }
    if (cfg.format == "json") {
        out << json{{"set", set}, {"n", cfg.n}, {"d", cfg.d}, {"count", items.size()}, {"items", arr}}.dump(1)
            << "\n";
    } else if (cfg.format == "csv") {
        out << "item\n";
        for (const auto& s : items)
            out << csv_field(s) << "\n";
    } else {
        out << set << " (n=" << cfg.n << ", d=" << cfg.d << "): " << items.size() << " elements\n";
        for (const auto& s : items)
            out << "  " << s << "\n";
    }
    return kOk;
}

Element canonical_cached(const Algebra& alg, const ThetaMatrix& a, const RunConfig& cfg)
{
    const auto cache = CanonicalCache::from_options(cfg.cache_dir);
    if (cache)
        if (auto hit = cache->load(alg.context(), a))
            return *hit;
    Element x = alg.canonical(a);
    if (cache)
        cache->store(alg.context(), a, x);
    return x;
}

struct ActArgs {
    std::string matrix, gen, word, file;
    int index = 1;
    int hecke = 0;
    bool iota = false;
};

int cmd_act(const RunConfig& cfg, const ActArgs& args, std::ostream& out)
{
    TensorSpace sp{cfg.n, cfg.d, args.iota};
    TensorElement x;
    if (!args.word.empty() && !args.file.empty())
        throw InputError("give a word or a tensor file, not both");
    if (!args.word.empty()) {
        const Word w = parse_word(args.word);
        if (static_cast<int>(w.size()) != sp.d || !sp.contains(w))
            throw InputError(format_word(w) + " is not a basis word of the tensor space");
        x = TensorElement::basis(w);
    } else if (!args.file.empty()) {
        TensorSpace given;
        x = tensor_from_json(read_json_file(args.file), &given);
        if (given.n != sp.n || given.d != sp.d || given.iota != sp.iota)
            throw InputError(args.file + ": tensor belongs to another space");
    } else {
        throw InputError("a word or a tensor file is required");
    }
    const int chosen = !args.matrix.empty() + !args.gen.empty() + (args.hecke != 0);
    if (chosen != 1)
        throw InputError("choose exactly one of --matrix, --gen, --hecke");

    TensorElement y;
    if (args.hecke != 0) {
        if (args.hecke < 1 || args.hecke > sp.d)
            throw InputError("--hecke must lie in [1, d]");
        y = hecke_act(sp, x, args.hecke);
    } else {
        const Flavor f = x.flavor;
        const TensorElement xe = f == Flavor::E ? x : omega(sp, x);
        if (!args.matrix.empty()) {
            const Algebra alg(Context{args.iota ? Family::SchurI : Family::SchurJ, cfg.n, cfg.d});
            y = schur_elem_act(alg, alg.std(label_arg(alg, args.matrix)), xe);
        } else {
            static const std::map<std::string, Gen> gens{
                {"e", Gen::E}, {"f", Gen::F}, {"d", Gen::DPlus}, {"d-inv", Gen::DMinus}, {"t", Gen::T}};
            auto it = gens.find(args.gen);
            if (it == gens.end())
                throw InputError("--gen must be e, f, d, d-inv or t");
            const int top = it->second == Gen::DPlus || it->second == Gen::DMinus ? sp.n + 1 : sp.n;
            if (it->second != Gen::T && (args.index < 1 || args.index > top))
                throw InputError("--index out of range");
            if (it->second == Gen::T && !sp.iota)
                throw InputError("t acts on the i-tensor space only (--iota)");
            y = schur_gen_act(sp, it->second, args.index, xe);
        }
        if (f != Flavor::E)
            y = omega_inverse(sp, y);
        y.flavor = f;
    }
    Printer(cfg, out).tensor(sp, y, "result");
    return kOk;
}

void need_oracle_scale(const RunConfig& cfg)
{
    if (cfg.d < 1 || cfg.d > kMaxOracleD)
        throw InputError("oracle suites need 1 <= d <= " + std::to_string(kMaxOracleD));
    if (cfg.n > 2)
        throw InputError("oracle suites need n <= 2");
    if (cfg.q.empty())
        throw InputError("--q needs at least one value");
    for (long q : cfg.q)
        if (!is_odd_prime(q) || q > kMaxQ)
            throw InputError("q must be an odd prime <= " + std::to_string(kMaxQ) + ": " + std::to_string(q));
}

std::vector<Report> run_suite(const std::string& suite, const RunConfig& cfg)
{
    std::vector<Report> rs;
    const std::vector<mpq_class> points{mpq_class(7, 5), mpq_class(11, 3)};
    if (suite == "relations") {
        const WeightWindow w = parse_window(cfg.window);
        if (cfg.d < 1 || cfg.d > 4)
            throw InputError("relations need 1 <= d <= 4");
        rs.push_back(relations_schur_j(cfg.n, cfg.d));
        rs.push_back(relations_kj(cfg.n, w));
        rs.push_back(divided_powers(cfg.n, 3, w));
        if (cfg.n >= 2) {
            rs.push_back(relations_schur_i(cfg.n, cfg.d));
            rs.push_back(relations_ki(cfg.n, w));
            rs.push_back(serre_t2f_expansions(cfg.n, w));
        }
    } else if (suite == "duality") {
        if (cfg.d < 1 || cfg.d > 3 || cfg.n > 3)
            throw InputError("duality needs n <= 3 and 1 <= d <= 3");
        rs.push_back(checks::duality({cfg.n, cfg.d, false}, points));
        rs.push_back(checks::duality({cfg.n, cfg.d, true}, points));
    } else if (suite == "oracle") {
        need_oracle_scale(cfg);
        for (long q : cfg.q) {
            rs.push_back(checks::oracle_structure_constants(Family::SchurJ, cfg.n, cfg.d, q));
            rs.push_back(checks::oracle_generator_products_i(cfg.n, cfg.d, q));
            rs.push_back(checks::oracle_module_type_b(cfg.n, cfg.d, q));
            rs.push_back(checks::oracle_module_type_c(cfg.n, cfg.d, q));
        }
    } else if (suite == "stabilization") {
        if (cfg.n != 1)
            throw InputError("stabilization is sampled at n = 1");
        rs.push_back(checks::stabilization(Shift::Full));
        rs.push_back(checks::stabilization(Shift::Breve));
    } else if (suite == "compat") {
        if (cfg.d < 1 || cfg.d > 3 || cfg.n > 2)
            throw InputError("compat needs n <= 2 and 1 <= d <= 3");
        rs.push_back(checks::compat_phi(Family::SchurJ, cfg.n, cfg.d, cfg.d + 1));
        rs.push_back(checks::compat_phi(Family::SchurI, cfg.n, cfg.d, cfg.d + 1));
        rs.push_back(checks::compat_ki_routes(cfg.n, 2, -1, 2));
    } else if (suite == "inner-product") {
        if (cfg.d < 1 || cfg.d > 2 || cfg.n > 2)
            throw InputError("inner-product needs n <= 2 and 1 <= d <= 2");
        rs.push_back(checks::inner_product(cfg.n, cfg.d));
    } else if (suite == "typec") {
        need_oracle_scale(cfg);
        for (long q : cfg.q) {
            rs.push_back(checks::typec_relabel(cfg.n, cfg.d, q));
            rs.push_back(checks::oracle_module_type_c(cfg.n, cfg.d, q));
        }
    }
    return rs;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Quantum Schur algebras of type B/C: standard, monomial and canonical bases, tensor actions "
                 "and verification suites"};
    app.require_subcommand(1);
    RunConfig cfg;

    std::string set = "Xi";
    auto* en = app.add_subcommand("enumerate", "list the labels Xi, IXi or the words Pi, IPi");
    add_common(en, cfg, false);
    en->add_option("--set", set, "Xi, IXi, Pi or IPi")->check(CLI::IsMember({"Xi", "IXi", "Pi", "IPi"}));

    std::string ma, mb, fa, fb;
    auto* mul = app.add_subcommand("mul", "product of two elements");
    add_common(mul, cfg);
    mul->add_option("--a", ma, "left factor [A] as a bracket matrix");
    mul->add_option("--b", mb, "right factor [B] as a bracket matrix");
    mul->add_option("--x", fa, "left factor as an element JSON file");
    mul->add_option("--y", fb, "right factor as an element JSON file");

    std::string matrix, file;
    auto* mono = app.add_subcommand("monomial", "monomial basis element m_A in the standard basis");
    add_common(mono, cfg);
    mono->add_option("--matrix", matrix, "label A")->required();

    auto* can = app.add_subcommand("canonical", "canonical basis element {A} in the standard basis");
    add_common(can, cfg);
    can->add_option("--matrix", matrix, "label A")->required();
    can->add_option("--cache-dir", cfg.cache_dir,
                    std::string("cache directory (default: $") + CanonicalCache::kEnvVar + ")");

    auto* bar = app.add_subcommand("bar", "bar involution of [A] or of an element");
    add_common(bar, cfg);
    bar->add_option("--matrix", matrix, "label A");
    bar->add_option("--x", file, "element JSON file");

    ActArgs act_args;
    auto* act = app.add_subcommand("act", "Schur or Hecke action on the tensor space");
    add_common(act, cfg, false);
    act->add_option("--matrix", act_args.matrix, "act by [A]");
    act->add_option("--gen", act_args.gen, "act by a generator: e, f, d, d-inv or t");
    act->add_option("--index", act_args.index, "generator index");
    act->add_option("--hecke", act_args.hecke, "act on the right by T_j");
    act->add_option("--word", act_args.word, "basis word r_1,...,r_d");
    act->add_option("--x", act_args.file, "tensor JSON file");
    act->add_flag("--iota", act_args.iota, "use the i-tensor space (words avoiding n+1)");

    std::string suite;
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    add_common(ver, cfg, false);
    ver->add_option("suite", suite, "relations, duality, oracle, stabilization, compat, inner-product or typec")
        ->required()
        ->check(CLI::IsMember({"relations", "duality", "oracle", "stabilization", "compat", "inner-product", "typec"}));
    ver->add_option("--q", cfg.q, "odd primes for the finite-field suites")->delimiter(',');
    ver->add_option("--window", cfg.window, "weight window lo,hi for the relation suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kInvalidInput;
    }

    Printer print(cfg, out);
    try {
        if (en->parsed())
            return cmd_enumerate(cfg, set, out);
        if (act->parsed())
            return cmd_act(cfg, act_args, out);
        if (ver->parsed()) {
            parse_window(cfg.window);
            const auto rs = run_suite(suite, cfg);
            print.reports(suite, rs);
            for (const auto& r : rs)
                if (!r.passed())
                    return kComputationFailed;
            return kOk;
        }
        const Algebra alg(context_of(cfg));
        if (mul->parsed()) {
            const Element x = element_arg(alg, ma, fa);
            const Element y = element_arg(alg, mb, fb);
            print.element(alg.mul(x, y), "product");
        } else if (mono->parsed()) {
            print.element(alg.monomial(label_arg(alg, matrix)), "m_A");
        } else if (can->parsed()) {
            print.element(canonical_cached(alg, label_arg(alg, matrix), cfg), "{A}");
        } else if (bar->parsed()) {
            print.element(alg.bar(element_arg(alg, matrix, file)), "bar");
        }
        return kOk;
    } catch (const InputError& e) {
        err << "invalid input: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::invalid_argument& e) {
        err << "invalid input: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const std::exception& e) {
        err << "computation failed: " << e.what() << "\n";
        return kComputationFailed;
    }
}

}  // namespace qschur::cli
