// End-to-end acceptance run: one PASS/FAIL line per criterion, exit status 1
// if any criterion fails. Time budgets are part of each criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "qschur/checks.hpp"
#include "qschur/relations.hpp"

using namespace qschur;

namespace {

struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::function<std::vector<Report>()> run;
};

const WeightWindow kWindow{-2, 4};
const std::vector<long> kPrimes{3, 5};

std::vector<Report> relation_suites()
{
    return {relations_schur_j(2, 2),       relations_schur_i(2, 2),    relations_kj(2, kWindow),
            relations_ki(2, kWindow),      serre_t2f_expansions(2, kWindow), divided_powers(2, 3, kWindow)};
}

std::vector<Report> oracle_suites()
{
    std::vector<Report> rs;
    for (long q : kPrimes) {
        rs.push_back(checks::oracle_structure_constants(Family::SchurJ, 1, 1, q));
        rs.push_back(checks::oracle_structure_constants(Family::SchurJ, 1, 2, q));
        rs.push_back(checks::oracle_generator_products_i(2, 2, q));
        for (int d : {1, 2}) {
            rs.push_back(checks::oracle_module_type_b(1, d, q));
            rs.push_back(checks::oracle_module_type_c(1, d, q));
        }
    }
    return rs;
}

std::vector<Report> canonical_suites()
{
    return {checks::canonical_finite(Family::SchurJ, 1, 1), checks::canonical_finite(Family::SchurJ, 1, 2),
            checks::canonical_stable(Context{Family::Kj, 1, 0}, 2, -2, 2),
            checks::canonical_stable(Context{Family::Ki, 2, 0}, 2, -1, 2)};
}

std::vector<Report> compat_suites()
{
    return {checks::compat_phi(Family::SchurJ, 1, 1, 2), checks::compat_phi(Family::SchurJ, 1, 2, 3),
            checks::compat_phi(Family::SchurI, 2, 2, 3), checks::compat_ki_routes(2, 2, -1, 2)};
}

std::vector<Report> duality_suites()
{
    const std::vector<mpq_class> points{mpq_class(7, 5), mpq_class(11, 3)};
    std::vector<Report> rs;
    for (int n : {1, 2})
        for (bool iota : {false, true})
            rs.push_back(checks::duality({n, 2, iota}, points));
    return rs;
}

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "index set sizes against the closed formulas, n <= 3, d <= 4", 10,
         [] { return std::vector<Report>{checks::counting(3, 4)}; }},
        {2, "generator and idempotented relation suites at n = 2, window [-2,4]", 300, relation_suites},
        {3, "structure constants and module actions against finite-field counts, q = 3, 5", 1800, oracle_suites},
        {4, "canonical bases: bar invariance, triangularity and coefficient ranges", 300, canonical_suites},
        {5, "phi_d on canonical bases and the two transports to the i-algebra", 600, compat_suites},
        {6, "3x3 product in the stable algebra with four explicit terms", 1,
         [] { return std::vector<Report>{checks::worked_example()}; }},
        {7, "commuting actions and double centralizer dimensions", 600, duality_suites},
        {8, "bilinear form: adjunction, diagonal values and almost orthonormality", 1200,
         [] { return std::vector<Report>{checks::inner_product(1, 1), checks::inner_product(1, 2)}; }},
        {9, "stabilization fits at n = 1 for both shifts", 600,
         [] { return std::vector<Report>{checks::stabilization(Shift::Full), checks::stabilization(Shift::Breve)}; }},
        {10, "closed t-multiplication and leading coefficients of t^2, t^3", 60,
         [] { return std::vector<Report>{checks::t_calculus(20, 5)}; }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        std::vector<Report> reports;
        std::string error;
        try {
            reports = c.run();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = error.empty() && !reports.empty() && secs <= c.budget_s;
        long instances = 0;
        for (const auto& r : reports) {
            ok = ok && r.passed();
            for (const auto& ch : r.checks)
                instances += ch.instances;
        }
        char line[256];
        std::snprintf(line, sizeof line, "%s criterion %2d: %s [%ld checks, %.2f s / %.0f s]", ok ? "PASS" : "FAIL",
                      c.id, c.title.c_str(), instances, secs, c.budget_s);
        std::cout << line << std::endl;
        if (!ok) {
            ++failed;
            if (!error.empty())
                std::cout << "  error: " << error << "\n";
            for (const auto& r : reports)
                if (!r.passed())
                    std::cout << r.str() << "\n";
        }
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
