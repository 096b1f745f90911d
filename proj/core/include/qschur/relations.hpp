#pragma once

#include <string>
#include <vector>

#include "qschur/algebra.hpp"

namespace qschur {

// One relation checked over many instances (weights, index pairs).
struct Check {
    std::string name;
    long instances = 0;
    long failures = 0;
    std::string first_failure;
    // holds but is not known to complete a presentation
    bool expected_only = false;

    bool passed() const { return failures == 0 && instances > 0; }
};

struct Report {
    std::string suite;
    std::vector<Check> checks;
    std::vector<std::string> notes;

    Check& check(const std::string& name);
    void record(const std::string& name, bool ok, const std::string& detail = {});
    void merge(const Report& other);
    bool passed() const;
    long failures() const;
    std::string str() const;
};

struct WeightWindow {
    int lo = -2;
    int hi = 4;
};

// diagonal labels of Kj (center odd) or Ki (center 1) with entries in the window
std::vector<Weight> window_weights(const Context& ctx, const WeightWindow& w);

// Generator relations of the finite algebras, on global generators.
Report relations_schur_j(int n, int d);
Report relations_schur_i(int n, int d);

// Idempotented relations on the generator images inside Kj / Ki.
Report relations_kj(int n, const WeightWindow& w = {});
Report relations_ki(int n, const WeightWindow& w = {});

// The three expansions entering t^2 f + f t^2 = [[2]] t f t + f at the
// weights of the window (n >= 2), compared term by term.
Report serre_t2f_expansions(int n, const WeightWindow& w = {});

// e_i^r D_lambda = [[r]]! [D_lambda - r E_ii + r E_{i+1,i}] and the f analog
Report divided_powers(int n, int rmax, const WeightWindow& w = {});

}  // namespace qschur
