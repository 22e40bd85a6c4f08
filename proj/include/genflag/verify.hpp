#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "genflag/io.hpp"
#include "genflag/scenario.hpp"

namespace genflag {

std::uint64_t splitmix64(std::uint64_t x);

/// Independent per-trial generator derived from the master seed; trial
/// results are aggregated in trial order, so reports are reproducible.
std::mt19937_64 trial_rng(std::uint64_t master_seed, std::uint64_t stream, long trial);

IndexInterval random_window(const IndexSchema& ord, std::mt19937_64& rng, long max_size);
DenseMatrix random_invertible(std::size_t n, std::mt19937_64& rng);

struct OperatorOptions {
    long max_window = 6;
    long max_tail = 2;
    bool allow_tail = true;
};

StructuredOperator random_operator(const FlagSchema& s, std::mt19937_64& rng,
                                   OperatorOptions opt = {});
StructuredOperator random_eligible_operator(const FlagSchema& s, std::mt19937_64& rng,
                                            long max_window = 6);

/// Invertible and upper-triangular with respect to the cut blocks of its
/// window (all crossing blocks zero).
StructuredOperator random_upper_block_operator(const FlagSchema& s, std::mt19937_64& rng,
                                               long max_window = 6);

FlagPoint random_point(const FlagSchema& s, std::mt19937_64& rng, long max_window = 6,
                       long max_offset = 0);

/// Product of random pairing-preserving generators (pair swaps, scalings of
/// dual pairs, compensated transvections) on a pairing-closed window.
StructuredOperator random_form_preserving(const FormSchema& form, const FlagSchema& s,
                                          std::mt19937_64& rng, long max_half_window = 3);

struct PropertyResult {
    std::string property;
    bool pass = true;
    long trials = 0;
    Json counterexample; // null unless failed
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    long trials = 0;
    std::vector<PropertyResult> results;

    bool all_pass() const;
    Json to_json() const;
};

SuiteReport run_suite(const std::string& name, std::uint64_t seed, long trials);
std::vector<std::string> suite_names();

} // namespace genflag
