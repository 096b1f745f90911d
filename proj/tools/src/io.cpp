#include "qschur_cli/io.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <sstream>

namespace qschur::cli {

namespace {

// Minimal tokenizer for the bracket syntax; whitespace is skipped.
class Scanner {
public:
    explicit Scanner(const std::string& s) : s_(s) {}

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool peek(char c)
    {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    bool accept(char c)
    {
        if (!peek(c))
            return false;
        ++pos_;
        return true;
    }
    void expect(char c)
    {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }
    int integer()
    {
        skip();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+'))
            ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (pos_ == digits)
            fail("expected an integer");
        try {
            return std::stoi(s_.substr(start, pos_ - start));
        } catch (const std::out_of_range&) {
            fail("integer out of range");
        }
    }
    bool done()
    {
        skip();
        return pos_ == s_.size();
    }
    [[noreturn]] void fail(const std::string& what) const
    {
        throw InputError(what + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

std::vector<int> int_list(Scanner& sc)
{
    std::vector<int> out;
    out.push_back(sc.integer());
    while (sc.accept(','))
        out.push_back(sc.integer());
    return out;
}

std::int64_t as_int64(const json& j, const char* what)
{
    if (!j.is_number_integer())
        throw InputError(std::string(what) + ": expected an integer");
    return j.get<std::int64_t>();
}

}  // namespace

ThetaMatrix parse_matrix(const std::string& text, std::optional<int> n)
{
    Scanner sc(text);
    sc.expect('[');
    if (!sc.peek('['))
        sc.fail("expected a list of rows (a flat list has no shape)");
    std::vector<std::vector<int>> rows;
    do {
        sc.expect('[');
        rows.push_back(int_list(sc));
        sc.expect(']');
    } while (sc.accept(','));
    sc.expect(']');
    if (!sc.done())
        sc.fail("trailing input");

    const std::size_t N = rows.size();
    for (const auto& r : rows)
        if (r.size() != N)
            throw InputError("matrix is not square: " + text);
    if (N % 2 == 0)
        throw InputError("matrix size must be odd: " + text);
    const int nn = static_cast<int>(N - 1) / 2;
    if (n && *n != nn)
        throw InputError("matrix size " + std::to_string(N) + " does not match n = " + std::to_string(*n));
    if (!is_theta_symmetric(nn, rows))
        throw InputError("matrix is not centrally symmetric: " + text);
    return ThetaMatrix::from_rows(nn, rows);
}

std::string format_matrix(const ThetaMatrix& a)
{
    std::string s = a.str();
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    return s;
}

Word parse_word(const std::string& text)
{
    Scanner sc(text);
    const bool bracket = sc.accept('[');
    Word w = int_list(sc);
    if (bracket)
        sc.expect(']');
    if (!sc.done())
        sc.fail("trailing input");
    return w;
}

std::string format_word(const Word& w)
{
    std::string s = "[";
    for (std::size_t k = 0; k < w.size(); ++k)
        s += (k ? "," : "") + std::to_string(w[k]);
    return s + "]";
}

WeightWindow parse_window(const std::string& text)
{
    Scanner sc(text);
    const bool bracket = sc.accept('[');
    const auto v = int_list(sc);
    if (bracket)
        sc.expect(']');
    if (!sc.done())
        sc.fail("trailing input");
    if (v.size() != 2 || v[0] > v[1])
        throw InputError("window must be lo,hi with lo <= hi: " + text);
    return WeightWindow{v[0], v[1]};
}

// ---- JSON ---------------------------------------------------------------------------

json to_json(const Laurent& p)
{
    json out = json::array();
    for (const auto& [e, c] : p.terms())
        out.push_back({e, c});
    return out;
}

Laurent laurent_from_json(const json& j)
{
    if (!j.is_array())
        throw InputError("coefficient: expected [[exponent, coefficient], ...]");
    std::vector<Laurent::Term> terms;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2)
            throw InputError("coefficient: expected [exponent, coefficient] pairs");
        const auto e = as_int64(t[0], "exponent");
        if (e < INT32_MIN || e > INT32_MAX)
            throw InputError("exponent out of range");
        terms.emplace_back(static_cast<int>(e), as_int64(t[1], "coefficient"));
    }
    return Laurent::from_terms(std::move(terms));
}

json to_json(const ThetaMatrix& a) { return a.rows(); }

ThetaMatrix matrix_from_json(const json& j)
{
    if (!j.is_array() || j.empty())
        throw InputError("matrix: expected a list of rows");
    std::vector<std::vector<int>> rows;
    for (const auto& r : j) {
        if (!r.is_array())
            throw InputError("matrix: expected a list of rows");
        std::vector<int> row;
        for (const auto& x : r)
            row.push_back(static_cast<int>(as_int64(x, "matrix entry")));
        rows.push_back(std::move(row));
    }
    const std::size_t N = rows.size();
    for (const auto& r : rows)
        if (r.size() != N)
            throw InputError("matrix is not square");
    if (N % 2 == 0)
        throw InputError("matrix size must be odd");
    const int n = static_cast<int>(N - 1) / 2;
    if (!is_theta_symmetric(n, rows))
        throw InputError("matrix is not centrally symmetric");
    return ThetaMatrix::from_rows(n, rows);
}

json to_json(const Element& x)
{
    const Context& c = x.context();
    json terms = json::array();
    for (const auto& [a, p] : x.terms())
        terms.push_back({{"matrix", to_json(a)}, {"coeff", to_json(p)}});
    json out = {{"family", family_name(c.family)}, {"n", c.n}};
    if (is_finite_family(c.family))
        out["d"] = c.d;
    out["terms"] = std::move(terms);
    return out;
}

Element element_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("family") || !j.contains("n") || !j.contains("terms"))
        throw InputError("element: expected family, n and terms");
    Context c;
    try {
        c.family = parse_family(j.at("family").get<std::string>());
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
    c.n = static_cast<int>(as_int64(j.at("n"), "n"));
    if (is_finite_family(c.family))
        c.d = static_cast<int>(as_int64(j.value("d", json()), "d"));
    if (c.n < 1 || c.d < 0)
        throw InputError("element: n must be positive and d nonnegative");
    const Algebra alg(c);
    Element x(c);
    for (const auto& t : j.at("terms")) {
        const ThetaMatrix a = matrix_from_json(t.at("matrix"));
        if (a.n() != c.n || !alg.is_label(a))
            throw InputError("element: " + format_matrix(a) + " is not a label of " + family_name(c.family));
        x.add(a, laurent_from_json(t.at("coeff")));
    }
    return x;
}

json to_json(const TensorSpace& sp, const TensorElement& x)
{
    json terms = json::array();
    for (const auto& [w, p] : x.terms)
        terms.push_back({{"word", w}, {"coeff", to_json(p)}});
    return {{"flavor", flavor_name(x.flavor)},
            {"n", sp.n},
            {"d", sp.d},
            {"iota", sp.iota},
            {"terms", std::move(terms)}};
}

TensorElement tensor_from_json(const json& j, TensorSpace* sp)
{
    if (!j.is_object() || !j.contains("flavor") || !j.contains("terms"))
        throw InputError("tensor: expected flavor and terms");
    TensorElement x;
    try {
        x.flavor = parse_flavor(j.at("flavor").get<std::string>());
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
    TensorSpace s;
    s.n = static_cast<int>(as_int64(j.value("n", json(1)), "n"));
    s.d = static_cast<int>(as_int64(j.value("d", json(0)), "d"));
    s.iota = j.value("iota", false);
    for (const auto& t : j.at("terms")) {
        Word w;
        for (const auto& r : t.at("word"))
            w.push_back(static_cast<int>(as_int64(r, "word letter")));
        if (static_cast<int>(w.size()) != s.d || !s.contains(w))
            throw InputError("tensor: word " + format_word(w) + " is not in the tensor space");
        x.add(w, laurent_from_json(t.at("coeff")));
    }
    if (sp)
        *sp = s;
    return x;
}

json to_json(const Report& r)
{
    json checks = json::array();
    for (const auto& c : r.checks) {
        json o = {{"name", c.name},
                  {"instances", c.instances},
                  {"failures", c.failures},
                  {"passed", c.passed()}};
        if (!c.first_failure.empty())
            o["first_failure"] = c.first_failure;
        if (c.expected_only)
            o["expected_only"] = true;
        checks.push_back(std::move(o));
    }
    return {{"suite", r.suite}, {"passed", r.passed()}, {"checks", std::move(checks)}, {"notes", r.notes}};
}

// ---- CSV ------------------------------------------------------------------------------

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string to_csv(const Element& x)
{
    std::ostringstream os;
    os << "matrix,coeff\n";
    for (const auto& [a, p] : x.terms())
        os << csv_field(format_matrix(a)) << "," << csv_field(p.str()) << "\n";
    return os.str();
}

std::string to_csv(const TensorElement& x)
{
    std::ostringstream os;
    os << "word,coeff\n";
    for (const auto& [w, p] : x.terms)
        os << csv_field(format_word(w)) << "," << csv_field(p.str()) << "\n";
    return os.str();
}

std::string to_csv(const Report& r)
{
    std::ostringstream os;
    for (const auto& c : r.checks)
        os << csv_field(r.suite) << "," << csv_field(c.name) << "," << c.instances << "," << c.failures << ","
           << csv_field(c.first_failure) << "\n";
    return os.str();
}

}  // namespace qschur::cli
